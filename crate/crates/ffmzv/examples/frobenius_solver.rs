//! Solving Z^(1) - c Z = R by a polynomial ansatz, then replaying the
//! systems whose solutions ship as data files.

use ffmzv::curve::{Curve, CurveId};
use ffmzv::ffunction::{builtin_ffunctions, FFunction};
use ffmzv::solver::replay::{known_systems, replay_system};
use ffmzv::solver::{solve_difference, DifferenceEquation, Form};

fn main() {
    let c = Curve::builtin(CurveId::CaseI);
    let lib = builtin_ffunctions(c).unwrap();
    let mult = lib.g().twist(1).pow(3).unwrap();

    // plant a solution and recover it
    let z0 = FFunction::big_x(c).pow(2).unwrap().add(&FFunction::big_y(c).mul(&FFunction::x(c)));
    let r = z0.twist(1).sub(&mult.mul(&z0));
    let eq = DifferenceEquation::new(mult, r, Form::Standard, Some((4, 4)));
    let rep = solve_difference(&eq).unwrap();
    println!("{} unknowns, {} equations: {}", rep.unknowns, rep.equations, rep.outcome.label());
    assert_eq!(rep.outcome.unique(), Some(&z0));

    for sys in known_systems().iter().filter(|s| s.case == CurveId::CaseI) {
        let run = replay_system(sys).unwrap();
        println!(
            "{} {}: {} unknowns, {} equations, {}, matches data: {:?}",
            sys.case, sys.target, run.unknowns, run.equations, run.outcome, run.matches_data
        );
    }
}

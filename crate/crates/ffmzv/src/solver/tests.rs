use super::replay::*;
use super::*;
use crate::curve::CurveId;
use crate::ffunction::builtin_ffunctions;
use proptest::prelude::*;

const CASES: [CurveId; 4] = [CurveId::CaseI, CurveId::CaseII, CurveId::CaseIII, CurveId::CaseIV];

fn twisted_g(curve: Curve, w: i64) -> FFunction {
    builtin_ffunctions(curve).unwrap().g().twist(1).pow(w).unwrap()
}

#[test]
fn known_systems_replay() {
    for run in replay_known_systems().unwrap() {
        let s = &run.system;
        assert_eq!(run.unknowns, s.unknowns, "{} {}", s.case, s.target);
        assert_eq!(run.outcome, "unique", "{} {}", s.case, s.target);
        assert_eq!(run.matches_data, Some(true), "{} {}: {:?}", s.case, s.target, run.diff);
    }
}

#[test]
fn stated_counts() {
    let runs = replay_known_systems().unwrap();
    let get = |t: &str, c: CurveId| runs.iter().find(|r| r.system.target == t && r.system.case == c).unwrap();
    let lt1 = get("F_<1", CurveId::CaseIV);
    assert_eq!((lt1.equations, lt1.unknowns), (107, 28));
    let le12 = get("F_<=12", CurveId::CaseIV);
    assert_eq!((le12.equations, le12.unknowns), (329, 90));
    let lt3 = get("F_<3", CurveId::CaseIV);
    assert_eq!((lt3.equations, lt3.unknowns), (334, 95));
    assert_eq!(get("F_<=34", CurveId::CaseI).unknowns, 28);
    assert_eq!(get("F_<=26", CurveId::CaseII).unknowns, 35);
    assert_eq!(get("F_<=3,12", CurveId::CaseIII).unknowns, 78);
}

#[test]
fn homogeneous_has_only_zero() {
    let c = Curve::builtin(CurveId::CaseI);
    let eq = DifferenceEquation::new(twisted_g(c, 3), FFunction::zero(c), Form::Standard, Some((14, 12)));
    let rep = solve_difference(&eq).unwrap();
    assert!(rep.outcome.unique().unwrap().is_zero());
    assert_eq!(rep.outcome.kernel_dim(), 0);
}

#[test]
fn too_small_ansatz_is_inconsistent() {
    let sys = &known_systems()[0];
    let mut eq = sys.equation().unwrap();
    eq.ansatz = Some((6, 4));
    assert!(matches!(solve_difference(&eq).unwrap().outcome, Outcome::Inconsistent));
}

#[test]
fn default_bound_finds_solution() {
    let sys = &known_systems()[0];
    let mut eq = sys.equation().unwrap();
    eq.ansatz = None;
    let rep = solve_difference(&eq).unwrap();
    let z = rep.outcome.unique().expect("unique");
    let lib = builtin_ffunctions(sys.curve()).unwrap();
    assert_eq!(&z.div(&sys.denominator().unwrap()).unwrap(), lib.display("F_<=34").unwrap());
}

#[test]
fn underdetermined_reports_kernel() {
    // Z^(1) = Z has the constants F_q(x) as solutions.
    let c = Curve::builtin(CurveId::CaseI);
    let one = FFunction::one(c);
    let eq = DifferenceEquation::new(one.clone(), FFunction::zero(c), Form::Standard, Some((2, 1)));
    match solve_difference(&eq).unwrap().outcome {
        Outcome::Underdetermined { kernel, .. } => {
            assert_eq!(kernel.len(), 1);
            assert!(eq.is_solution(&kernel[0]));
        }
        other => panic!("expected a kernel, got {}", other.label()),
    }
}

fn arb_coeff(curve: Curve) -> impl Strategy<Value = KElem> {
    let q = curve.q() as u8;
    let small = move || prop::collection::vec(0..q, 0..3).prop_map(move |v| Poly::from_coeffs(curve.field, v));
    (small(), small(), 0..q).prop_map(move |(a, b, s)| {
        let den = Poly::from_coeffs(curve.field, vec![s, 1]);
        KElem::new(curve, a, b, den)
    })
}

fn arb_instance(curve: Curve) -> impl Strategy<Value = (FFunction, i64)> {
    let n = 4usize;
    (prop::collection::vec(arb_coeff(curve), 2 * n), 1..4i64).prop_map(move |(v, w)| {
        let b = basis(curve, (n - 1, n - 1));
        (assemble(curve, &b, &v).unwrap(), w)
    })
}

fn round_trip(curve: Curve, z0: &FFunction, w: i64, form: Form) -> std::result::Result<(), TestCaseError> {
    let c = twisted_g(curve, w);
    let lhs = z0.twist(1).sub(&c.mul(z0));
    let r = match form {
        Form::Standard => lhs,
        Form::SumBelow => lhs.div(&c).unwrap(),
    };
    let eq = DifferenceEquation::new(c, r, form, Some((3, 3)));
    let rep = solve_difference(&eq).unwrap();
    prop_assert_eq!(rep.outcome.unique(), Some(z0));
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn round_trip_case_i((z0, w) in arb_instance(Curve::builtin(CaseI))) {
        round_trip(Curve::builtin(CaseI), &z0, w, Form::Standard)?;
    }

    #[test]
    fn round_trip_case_ii((z0, w) in arb_instance(Curve::builtin(CaseII))) {
        round_trip(Curve::builtin(CaseII), &z0, w, Form::Standard)?;
    }

    #[test]
    fn round_trip_case_iii((z0, w) in arb_instance(Curve::builtin(CaseIII))) {
        round_trip(Curve::builtin(CaseIII), &z0, w, Form::SumBelow)?;
    }

    #[test]
    fn round_trip_case_iv((z0, w) in arb_instance(Curve::builtin(CaseIV))) {
        round_trip(Curve::builtin(CaseIV), &z0, w, Form::SumBelow)?;
    }
}

#[test]
fn every_case_has_a_system() {
    for c in CASES {
        assert!(known_systems().iter().any(|s| s.case == c));
    }
}

use CurveId::*;

//! F-functions: rational functions in (x, y, X, Y) that specialize to
//! scaled power sums.

use ffmzv::curve::{Curve, CurveId};
use ffmzv::ffunction::{builtin_ffunctions, ell_coefficient};
use ffmzv::powersum::PowerSums;

fn main() {
    let c = Curve::builtin(CurveId::CaseI);
    let lib = builtin_ffunctions(c).unwrap();
    let sums = PowerSums::shared(c);
    println!("g = {}", lib.g());

    let f12 = lib.get("F_12").unwrap();
    for d in 1..=5 {
        let lhs = ell_coefficient(c, d).unwrap().pow(3).mul(&sums.at(d, &[1, 2]));
        let rhs = f12.specialize(d).unwrap();
        println!("d = {d}: ell_d^3 S_d(1,2) == F_12(d): {}", lhs == rhs);
    }

    // the twist moves the specialization one degree up
    let t = f12.twist(1);
    assert_eq!(t.specialize(2).unwrap(), f12.specialize(3).unwrap());

    let le = lib.get("F_<=12").unwrap();
    let lt = lib.get("F_<3").unwrap();
    let r = lt.leading_ratio(le).unwrap();
    println!("leading F_<3 / F_<=12 = {} (alpha difference {})", r.ratio, r.alpha_diff);
    println!("library: {}", lib.names().join(", "));
}

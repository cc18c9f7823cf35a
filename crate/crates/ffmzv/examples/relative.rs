//! Relative zeta values: sums of norms down to F_2[x] compared with the
//! Carlitz zeta at doubled arguments.

use ffmzv::curve::{Base, Curve, CurveId};
use ffmzv::powersum::{relative_power_sum, relative_zeta_check};

fn main() {
    let c = Curve::builtin(CurveId::CaseI);
    for t in [&[1][..], &[2], &[1, 2], &[2, 3]] {
        let r = relative_zeta_check(c, Base::X, t, 150).unwrap();
        println!("{t:?}: holds {}  {}", r.holds, r.relative);
    }
    for d in [1, 2] {
        let v: Vec<String> = (1..=4).map(|k| relative_power_sum(c, Base::Y, d, &[k]).unwrap().to_string()).collect();
        println!("over F_2[y], d = {d}: {}", v.join(", "));
    }
}

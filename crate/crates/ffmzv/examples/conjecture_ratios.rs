//! The ratios zeta(q^n - 1, q^n (q - 1)) / zeta(q^(n+1) - 1) against their
//! closed forms.

use ffmzv::curve::CurveId;
use ffmzv::verify::{ratio_display, verify_ratio_family, verify_zetalike_family};

fn main() {
    for (id, n) in [(CurveId::CaseI, 1), (CurveId::CaseI, 2), (CurveId::CaseII, 1), (CurveId::CaseIV, 1)] {
        let r = verify_ratio_family(id, n, 128, 10).unwrap();
        println!("{id} n = {n}: {}  R_n = {}", r.verdict, ratio_display(id, n).unwrap());
    }
    // longer tuples of the same family
    for (id, n, k) in [(CurveId::Genus0Q2, 1, 1), (CurveId::Genus0Q3, 1, 1), (CurveId::CaseI, 1, 1)] {
        let r = verify_zetalike_family(id, n, k, 128, 10).unwrap();
        println!("{id} n = {n} k = {k}: {} {:?}", r.verdict, r.params["tuple"]);
    }
}

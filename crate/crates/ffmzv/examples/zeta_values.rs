//! Multizeta values expanded in 1/x, and the first zetalike identity.

use ffmzv::curve::{Curve, CurveId};
use ffmzv::powersum::{zeta_value, zetalike_check};

fn main() {
    let c = Curve::builtin(CurveId::CaseI);
    let precision = 128;
    for t in [&[1][..], &[3], &[1, 2], &[2, 1]] {
        let z = zeta_value(c, t, precision).unwrap();
        println!("zeta{t:?} = {}  ({} degrees summed)", z.value, z.terms_used);
    }

    for t in [&[1, 2][..], &[3, 4], &[2, 3]] {
        match zetalike_check(c, t, 200, 10).unwrap().ratio(c) {
            Some(r) => println!("zeta{t:?} / zeta({}) = {r}", t.iter().sum::<u32>()),
            None => println!("zeta{t:?}: no rational ratio found"),
        }
    }
}

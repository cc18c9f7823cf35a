//! Exact power sums and iterated sums, checked against direct enumeration.

use ffmzv::curve::{Curve, CurveId};
use ffmzv::powersum::{brute, genus_zero_identity_holds, PowerSums};

fn main() {
    let c = Curve::builtin(CurveId::CaseI);
    let sums = PowerSums::shared(c);
    for d in 1..=4 {
        let exact = sums.at(d, &[1, 2]);
        let direct = brute::iterated_power_sum(c, d, &[1, 2]);
        assert_eq!(exact, direct);
        println!("S_{d}(1,2) = {exact}");
    }
    println!("S_<4(3) = {}", sums.below(4, &[3]));

    for q in [2, 3] {
        let ok = (1..=6).all(|d| genus_zero_identity_holds(q, d).unwrap());
        println!("F_{q}[t]: S_d(q-1, q(q-1)) = S_(d-1)(q^2-1)/(t-t^q)^(q-1) for d <= 6: {ok}");
    }
}

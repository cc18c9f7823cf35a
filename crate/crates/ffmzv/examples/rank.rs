//! Linear independence of weight-3 power sums as functions of d.

use ffmzv::curve::CurveId;
use ffmzv::verify::{rank_experiment, QuantitySet};

fn main() {
    for (set, range) in [(QuantitySet::Weight3Eight, 3..=10), (QuantitySet::PlantedFrobenius, 1..=6)] {
        let r = rank_experiment(CurveId::CaseI, set, range).unwrap();
        println!("{}: {} rank {:?}", set.name(), r.verdict, r.witness("rank").unwrap().num_coeffs);
        for w in r.witnesses.iter().filter(|w| w.name.starts_with("relation")) {
            println!("  {} {:?}/{:?}", w.name, w.num_coeffs, w.den_coeffs);
        }
    }
}

//! Elements of the coordinate ring of case i: degrees, signs and the
//! monic elements of a given degree.

use ffmzv::curve::{monic_count, monic_elements, Curve, CurveId, KElem, RingElem};

fn main() {
    let c = Curve::builtin(CurveId::CaseI);
    println!("{}: q = {}, genus {}", CurveId::CaseI, c.q(), c.genus());

    let x = RingElem::x(c);
    let y = RingElem::y(c);
    // y^2 reduces through the curve relation
    let y2 = y.square();
    println!("y^2 = {y2}, degree {:?}", y2.degree());
    println!("x y has degree {:?}", x.mul(&y).degree());

    for d in 0..=4 {
        let monics = monic_elements(c, d);
        assert_eq!(monics.len() as u64, monic_count(c, d));
        let shown: Vec<String> = monics.iter().take(4).map(|a| a.to_string()).collect();
        println!("d = {d}: {} monic elements, e.g. {}", monics.len(), shown.join(", "));
    }

    let k = KElem::from_ring(&x).div(&KElem::from_ring(&y)).unwrap();
    println!("x / y = {k}, degree {:?}", k.degree());
}

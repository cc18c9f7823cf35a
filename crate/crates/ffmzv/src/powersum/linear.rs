//! The additive polynomial of the degree-`< d` lattice.
//!
//! The monic elements of degree `d` form the coset `m + V`, where `m` is the
//! leading monomial and `V` the F_q-space of elements of degree `< d`. With
//! `e_V(z) = prod_{v in V} (z - v) = sum_i c_i z^(q^i)` (additive, since `V`
//! is a vector space) one has
//!
//! ```text
//! sum_{a in m+V} 1/(a - u) = c_0 / (e_V(m) - e_V(u))
//! ```
//!
//! and expanding in `u` gives every power sum of degree `d` from the
//! recurrence `h_0 = 1`, `h_n = sum_i A_i h_(n - q^i)` with `A_i = c_i/e_V(m)`:
//! `S_d(k) = A_0 h_(k-1)`. This replaces enumeration of `q^dim V` elements by
//! `dim V` steps of exact ring arithmetic.

use crate::curve::{leading_monomial, lower_basis, Curve, RingElem};

/// Data of one degree: `m`, the coefficients `c_i` of `e_V` and `e_V(m)`.
#[derive(Clone, Debug)]
pub struct DegreeData {
    pub d: u32,
    pub m: RingElem,
    pub c: Vec<RingElem>,
    pub e_m: RingElem,
}

/// Coefficients of `e_V` for the span of `basis`, lowest first.
pub fn additive_coeffs(curve: Curve, basis: &[RingElem]) -> Vec<RingElem> {
    let q = curve.q() as u64;
    let mut w = vec![RingElem::one(curve)];
    for b in basis {
        let eb = eval_additive(&w, b);
        let beta = eb.pow(q - 1);
        let mut next = Vec::with_capacity(w.len() + 1);
        next.push(beta.mul(&w[0]).neg());
        for i in 1..w.len() {
            next.push(w[i - 1].pow_q(1).sub(&beta.mul(&w[i])));
        }
        next.push(w[w.len() - 1].pow_q(1));
        w = next;
    }
    w
}

/// `sum_i w_i z^(q^i)`.
pub fn eval_additive(w: &[RingElem], z: &RingElem) -> RingElem {
    let mut acc = RingElem::zero(z.curve());
    let mut zp = z.clone();
    for (i, wi) in w.iter().enumerate() {
        if i > 0 {
            zp = zp.pow_q(1);
        }
        if !wi.is_zero() {
            acc = acc.add(&wi.mul(&zp));
        }
    }
    acc
}

/// Degree data, or `None` at a Weierstrass gap.
pub fn degree_data(curve: Curve, d: u32) -> Option<DegreeData> {
    let m = leading_monomial(curve, d)?;
    let basis = lower_basis(curve, d);
    let c = additive_coeffs(curve, &basis);
    let e_m = eval_additive(&c, &m);
    Some(DegreeData { d, m, c, e_m })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{monic_elements, CurveId};

    #[test]
    fn additive_polynomial_vanishes_on_lattice() {
        for id in CurveId::ALL {
            let c = Curve::builtin(id);
            for d in [2u32, 3, 4] {
                let Some(data) = degree_data(c, d) else {
                    continue;
                };
                let w = &data.c;
                assert!(w.last().unwrap().is_one());
                // e_V(m + v) = e_V(m) for all v, i.e. e_V kills V
                let mut prod = RingElem::one(c);
                for a in monic_elements(c, d) {
                    assert_eq!(eval_additive(w, &a), data.e_m, "{id} d={d}");
                    prod = prod.mul(&a);
                }
                assert_eq!(prod, data.e_m, "{id} d={d}");
            }
        }
    }
}

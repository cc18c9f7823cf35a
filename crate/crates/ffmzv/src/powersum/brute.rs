//! Power sums by enumeration of the monic elements. Independent of the
//! additive-polynomial recursion, and used as its oracle.

use crate::algebra::Field;
use crate::curve::{monic_elements, Curve, KElem};

/// Sum a list of field elements pairwise, which keeps the intermediate
/// denominators balanced.
pub fn tree_sum<F: Field>(mut v: Vec<F>, zero: F) -> F {
    if v.is_empty() {
        return zero;
    }
    while v.len() > 1 {
        let mut next = Vec::with_capacity(v.len().div_ceil(2));
        let mut it = v.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(a.add(&b)),
                None => next.push(a),
            }
        }
        v = next;
    }
    v.pop().unwrap()
}

/// `sum_{a in A_d+} a^(-k)` by listing `A_d+`.
pub fn power_sum(curve: Curve, d: u32, k: u32) -> KElem {
    let terms: Vec<KElem> = monic_elements(curve, d).iter().map(|a| KElem::from_ring(a).pow(-(k as i64))).collect();
    tree_sum(terms, KElem::zero(curve))
}

/// All strictly decreasing sequences `d = d_1 > d_2 > ... > d_r >= 0`.
pub fn degree_sequences(d: u32, r: usize) -> Vec<Vec<u32>> {
    if r == 0 {
        return vec![vec![]];
    }
    if (d as usize) + 1 < r {
        return vec![];
    }
    if r == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for e in (0..d).rev() {
        for mut tail in degree_sequences(e, r - 1) {
            tail.insert(0, d);
            out.push(tail);
        }
    }
    out
}

/// `S_d(tuple)` as the sum, over decreasing degree sequences, of products
/// of enumerated single power sums. `single(d, k)` supplies those sums so
/// callers can cache them.
pub fn iterated_with(curve: Curve, d: u32, tuple: &[u32], mut single: impl FnMut(u32, u32) -> KElem) -> KElem {
    let mut acc = KElem::zero(curve);
    for seq in degree_sequences(d, tuple.len()) {
        let mut prod = KElem::one(curve);
        for (&di, &ki) in seq.iter().zip(tuple) {
            prod = prod.mul(&single(di, ki));
            if prod.is_zero() {
                break;
            }
        }
        acc = acc.add(&prod);
    }
    acc
}

/// `S_d(tuple)` by enumeration.
pub fn iterated_power_sum(curve: Curve, d: u32, tuple: &[u32]) -> KElem {
    iterated_with(curve, d, tuple, |d, k| power_sum(curve, d, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequences() {
        assert_eq!(degree_sequences(2, 2), vec![vec![2, 1], vec![2, 0]]);
        assert_eq!(degree_sequences(1, 3), Vec::<Vec<u32>>::new());
        assert_eq!(degree_sequences(3, 3).len(), 3);
    }
}

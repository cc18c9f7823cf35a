use super::linear::{degree_data, DegreeData};
use super::{SumKey, SumMode};
use crate::curve::{Curve, CurveId, KElem};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

type TupleKey = (u32, Vec<u32>);

#[derive(Default)]
struct Memo {
    degrees: HashMap<u32, Option<Arc<DegreeData>>>,
    coeffs: HashMap<u32, Arc<Vec<KElem>>>,
    h: HashMap<u32, Vec<KElem>>,
    single: HashMap<(u32, u32), KElem>,
    at: HashMap<TupleKey, KElem>,
    below: HashMap<TupleKey, KElem>,
}

/// Exact power sums of one curve, memoized.
///
/// The memo is behind a mutex that is never held during arithmetic, so the
/// engine can be shared between threads; concurrent misses may duplicate
/// work but always store equal values.
pub struct PowerSums {
    curve: Curve,
    frobenius_shortcut: bool,
    memo: Mutex<Memo>,
}

impl PowerSums {
    pub fn new(curve: Curve) -> Self {
        PowerSums { curve, frobenius_shortcut: true, memo: Mutex::new(Memo::default()) }
    }

    /// An engine that never uses `S_d(p k) = S_d(k)^p`, for checking it.
    pub fn without_frobenius_shortcut(curve: Curve) -> Self {
        PowerSums { curve, frobenius_shortcut: false, memo: Mutex::new(Memo::default()) }
    }

    /// The process-wide engine of a curve.
    pub fn shared(curve: Curve) -> Arc<PowerSums> {
        static ENGINES: OnceLock<Mutex<HashMap<Curve, Arc<PowerSums>>>> = OnceLock::new();
        let map = ENGINES.get_or_init(Default::default);
        map.lock().unwrap().entry(curve).or_insert_with(|| Arc::new(PowerSums::new(curve))).clone()
    }

    pub fn curve(&self) -> Curve {
        self.curve
    }

    pub fn degree_data(&self, d: u32) -> Option<Arc<DegreeData>> {
        if let Some(v) = self.memo.lock().unwrap().degrees.get(&d) {
            return v.clone();
        }
        let v = degree_data(self.curve, d).map(Arc::new);
        self.memo.lock().unwrap().degrees.insert(d, v.clone());
        v
    }

    /// `A_i = c_i / e_V(m)`.
    fn coeffs(&self, d: u32) -> Option<Arc<Vec<KElem>>> {
        if let Some(v) = self.memo.lock().unwrap().coeffs.get(&d) {
            return Some(v.clone());
        }
        let data = self.degree_data(d)?;
        let inv = KElem::from_ring(&data.e_m).inv().expect("e_V(m) is nonzero");
        let a: Vec<KElem> = data.c.iter().map(|c| inv.mul_ring(c)).collect();
        let a = Arc::new(a);
        self.memo.lock().unwrap().coeffs.insert(d, a.clone());
        Some(a)
    }

    /// `h_n` for `n <= top`.
    fn h_upto(&self, d: u32, a: &[KElem], top: usize) -> Vec<KElem> {
        let mut h = self.memo.lock().unwrap().h.get(&d).cloned().unwrap_or_else(|| vec![KElem::one(self.curve)]);
        if h.len() > top {
            return h;
        }
        let q = self.curve.q() as usize;
        while h.len() <= top {
            let n = h.len();
            let mut acc = KElem::zero(self.curve);
            let mut qi = 1usize;
            for ai in a {
                if qi > n {
                    break;
                }
                acc = acc.add(&ai.mul(&h[n - qi]));
                qi *= q;
            }
            h.push(acc);
        }
        self.memo.lock().unwrap().h.insert(d, h.clone());
        h
    }

    /// `S_d(k)`.
    pub fn power_sum(&self, d: u32, k: u32) -> KElem {
        assert!(k >= 1, "power sums need k >= 1");
        if d == 0 {
            return KElem::one(self.curve);
        }
        if let Some(v) = self.memo.lock().unwrap().single.get(&(d, k)) {
            return v.clone();
        }
        let p = self.curve.field.p();
        let v = if self.frobenius_shortcut && k.is_multiple_of(p) {
            self.power_sum(d, k / p).frobenius()
        } else {
            match self.coeffs(d) {
                None => KElem::zero(self.curve),
                Some(a) => {
                    let h = self.h_upto(d, &a, k as usize - 1);
                    a[0].mul(&h[k as usize - 1])
                }
            }
        };
        if galois_invariant(self.curve, k) {
            assert!(v.is_rational(), "S_{d}({k}) has a y-component on {}", self.curve.id);
        }
        self.memo.lock().unwrap().single.insert((d, k), v.clone());
        v
    }

    /// `S_d(tuple)`; the empty tuple gives 1.
    pub fn at(&self, d: u32, tuple: &[u32]) -> KElem {
        let Some((&k, rest)) = tuple.split_first() else {
            return KElem::one(self.curve);
        };
        if rest.is_empty() {
            return self.power_sum(d, k);
        }
        if (d as usize) < rest.len() {
            return KElem::zero(self.curve);
        }
        let key = (d, tuple.to_vec());
        if let Some(v) = self.memo.lock().unwrap().at.get(&key) {
            return v.clone();
        }
        let s = self.power_sum(d, k);
        let v = if s.is_zero() { s } else { s.mul(&self.below(d, rest)) };
        self.memo.lock().unwrap().at.insert(key, v.clone());
        v
    }

    /// `S_{<d}(tuple)`.
    pub fn below(&self, d: u32, tuple: &[u32]) -> KElem {
        if tuple.is_empty() {
            return KElem::one(self.curve);
        }
        let t = tuple.to_vec();
        let (mut e, mut acc) = {
            let memo = self.memo.lock().unwrap();
            (0..=d)
                .rev()
                .find_map(|e| memo.below.get(&(e, t.clone())).map(|v| (e, v.clone())))
                .unwrap_or((0, KElem::zero(self.curve)))
        };
        while e < d {
            acc = acc.add(&self.at(e, tuple));
            e += 1;
            self.memo.lock().unwrap().below.insert((e, t.clone()), acc.clone());
        }
        acc
    }

    pub fn evaluate(&self, d: u32, tuple: &[u32], mode: SumMode) -> KElem {
        match mode {
            SumMode::At => self.at(d, tuple),
            SumMode::Below => self.below(d, tuple),
            SumMode::UpTo => self.below(d + 1, tuple),
        }
    }
}

/// The y-component of `S_d(k)` vanishes: the sets `A_d+` are stable under
/// the involution fixing F_q(x), which preserves signs in characteristic 2
/// and multiplies odd-degree signs by `-1` in characteristic 3.
pub(crate) fn galois_invariant(curve: Curve, k: u32) -> bool {
    match curve.id {
        CurveId::CaseII => k.is_multiple_of(2),
        _ => true,
    }
}

/// `S_d(k)`, exact.
pub fn power_sum(curve: Curve, d: u32, k: u32) -> KElem {
    PowerSums::shared(curve).power_sum(d, k)
}

/// Evaluate a [`SumKey`] exactly.
pub fn iterated_power_sum(key: &SumKey) -> KElem {
    PowerSums::shared(key.curve).evaluate(key.d, &key.tuple, key.mode)
}

/// `S_d(p k_1, ..., p k_r) = S_d(k_1, ..., k_r)^p`, with the left side
/// computed without using the identity.
pub fn frobenius_power_identity_check(curve: Curve, d: u32, tuple: &[u32]) -> bool {
    let p = curve.field.p();
    let scaled: Vec<u32> = tuple.iter().map(|k| k * p).collect();
    let lhs = PowerSums::without_frobenius_shortcut(curve).at(d, &scaled);
    let rhs = PowerSums::shared(curve).at(d, tuple).frobenius();
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Poly;

    #[test]
    fn low_degree_values() {
        let c = Curve::builtin(CurveId::CaseI);
        let f = c.field;
        let s2 = power_sum(c, 2, 1);
        assert_eq!(s2, KElem::new(c, Poly::one(f), Poly::zero(f), Poly::from_ints(f, &[0, 1, 1])));
        let s3 = power_sum(c, 3, 1);
        let expect = KElem::new(c, Poly::from_ints(f, &[0, 1, 1]), Poly::zero(f), Poly::from_ints(f, &[1, 1, 1, 1, 1, 1, 1]));
        assert_eq!(s3, expect);
        assert!(power_sum(c, 1, 5).is_zero());
        assert!(power_sum(c, 0, 7).is_one());
        let s = PowerSums::new(c);
        assert_eq!(s.at(2, &[1, 2]), s2);
        assert!(s.at(1, &[1, 2, 3]).is_zero());
    }

    #[test]
    fn modes_are_consistent() {
        for id in CurveId::ALL {
            let c = Curve::builtin(id);
            let s = PowerSums::new(c);
            for t in [vec![1u32, 2], vec![3], vec![1, 1, 1]] {
                for d in 0..5 {
                    let below = s.evaluate(d, &t, SumMode::Below);
                    let upto = s.evaluate(d, &t, SumMode::UpTo);
                    assert_eq!(upto, below.add(&s.at(d, &t)), "{id} {t:?} {d}");
                    assert_eq!(upto, s.evaluate(d + 1, &t, SumMode::Below));
                }
            }
        }
    }

    #[test]
    fn frobenius_identity_small() {
        let c = Curve::builtin(CurveId::CaseII);
        for d in 0..4 {
            assert!(frobenius_power_identity_check(c, d, &[1, 2]));
        }
        let c = Curve::builtin(CurveId::CaseI);
        for d in 0..6 {
            assert!(frobenius_power_identity_check(c, d, &[1]));
        }
    }
}

use super::exact::PowerSums;
use super::{check_tuple, render_tuple, weight};
use crate::algebra::series::EXACT;
use crate::algebra::{rational_reconstruct, RatFunc};
use crate::curve::{Curve, InfinitySeries, KElem, RingElem};
use crate::error::{Error, Result};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Terms below `-(precision + STOP_GUARD)` count as negligible.
pub const STOP_GUARD: i64 = 8;

/// Knobs of [`zeta_value_with`].
#[derive(Clone, Copy, Debug)]
pub struct ZetaOptions {
    /// Largest degree summed before giving up.
    pub d_max: u32,
    /// Extra internal precision carried through the recursion.
    pub margin: i64,
}

impl Default for ZetaOptions {
    fn default() -> Self {
        ZetaOptions { d_max: 24, margin: 24 }
    }
}

/// A multizeta value expanded at infinity.
#[derive(Clone, Debug)]
pub struct ZetaValue {
    pub curve: Curve,
    pub tuple: Vec<u32>,
    pub value: InfinitySeries,
    pub precision: i64,
    /// Largest degree `d` whose term was added.
    pub terms_used: u32,
}

/// Outcome of [`zetalike_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Zetalike {
    /// `zeta(tuple)/zeta(weight) = a + y b`.
    Detected { a: RatFunc, b: RatFunc },
    NotDetected,
}

impl Zetalike {
    pub fn is_detected(&self) -> bool {
        matches!(self, Zetalike::Detected { .. })
    }

    pub fn ratio(&self, curve: Curve) -> Option<KElem> {
        match self {
            Zetalike::Detected { a, b } => {
                let a = KElem::from_ratfunc(curve, a);
                let mut b = KElem::from_ratfunc(curve, b);
                if !b.is_zero() {
                    b = b.mul_ring(&RingElem::y(curve));
                }
                Some(a.add(&b))
            }
            Zetalike::NotDetected => None,
        }
    }
}

type TupleKey = (u32, Vec<u32>);

#[derive(Default)]
struct Memo {
    coeffs: HashMap<u32, Option<Arc<Vec<InfinitySeries>>>>,
    h: HashMap<u32, Vec<InfinitySeries>>,
    single: HashMap<(u32, u32), InfinitySeries>,
    at: HashMap<TupleKey, InfinitySeries>,
    below: HashMap<TupleKey, InfinitySeries>,
}

/// The power-sum recursion on expansions truncated at a fixed internal
/// precision.
///
/// The additive-polynomial data of each degree is exact; only the division
/// by `e_V(m)` and everything after it is carried out on series, so the
/// cost per degree is independent of the (fast growing) exact heights.
/// Every intermediate tracks its own precision, so a result never claims
/// digits it does not have.
pub struct ZetaEngine {
    curve: Curve,
    prec: i64,
    exact: Arc<PowerSums>,
    memo: Mutex<Memo>,
}

impl ZetaEngine {
    pub fn new(curve: Curve, prec: i64) -> Self {
        ZetaEngine { curve, prec, exact: PowerSums::shared(curve), memo: Mutex::new(Memo::default()) }
    }

    /// The process-wide engine of a curve at an internal precision.
    pub fn shared(curve: Curve, prec: i64) -> Arc<ZetaEngine> {
        static ENGINES: OnceLock<Mutex<HashMap<(Curve, i64), Arc<ZetaEngine>>>> = OnceLock::new();
        let map = ENGINES.get_or_init(Default::default);
        map.lock().unwrap().entry((curve, prec)).or_insert_with(|| Arc::new(ZetaEngine::new(curve, prec))).clone()
    }

    pub fn curve(&self) -> Curve {
        self.curve
    }

    pub fn precision(&self) -> i64 {
        self.prec
    }

    fn coeffs(&self, d: u32) -> Option<Arc<Vec<InfinitySeries>>> {
        if let Some(v) = self.memo.lock().unwrap().coeffs.get(&d) {
            return v.clone();
        }
        let v = self.exact.degree_data(d).map(|data| {
            let want = self.prec + STOP_GUARD;
            let cmax = data.c.iter().map(|c| x_degree(self.curve, c)).max().unwrap_or(0);
            let inv = inverse_to(&data.e_m, want + cmax);
            let dinv = inv.degree_bound().div_euclid(self.curve.weight_x() as i64);
            let a: Vec<InfinitySeries> = data
                .c
                .iter()
                .map(|c| {
                    let cs = InfinitySeries::from_ring(c, want - dinv + 4);
                    cs.mul(&inv).truncate(self.prec)
                })
                .collect();
            Arc::new(a)
        });
        self.memo.lock().unwrap().coeffs.insert(d, v.clone());
        v
    }

    fn h_upto(&self, d: u32, a: &[InfinitySeries], top: usize) -> Vec<InfinitySeries> {
        let one = InfinitySeries::one(self.curve, EXACT);
        let mut h = self.memo.lock().unwrap().h.get(&d).cloned().unwrap_or_else(|| vec![one]);
        if h.len() > top {
            return h;
        }
        let q = self.curve.q() as usize;
        while h.len() <= top {
            let n = h.len();
            let mut acc = InfinitySeries::zero(self.curve, EXACT);
            let mut qi = 1usize;
            for ai in a {
                if qi > n {
                    break;
                }
                acc = acc.add(&ai.mul(&h[n - qi]));
                qi *= q;
            }
            h.push(acc.truncate(self.prec));
        }
        self.memo.lock().unwrap().h.insert(d, h.clone());
        h
    }

    /// Expansion of `S_d(k)`.
    pub fn power_sum(&self, d: u32, k: u32) -> InfinitySeries {
        if d == 0 {
            return InfinitySeries::one(self.curve, EXACT);
        }
        if let Some(v) = self.memo.lock().unwrap().single.get(&(d, k)) {
            return v.clone();
        }
        let p = self.curve.field.p();
        let v = if k.is_multiple_of(p) {
            self.power_sum(d, k / p).frobenius().truncate(self.prec)
        } else {
            match self.coeffs(d) {
                None => InfinitySeries::zero(self.curve, EXACT),
                Some(a) => {
                    let h = self.h_upto(d, &a, k as usize - 1);
                    a[0].mul(&h[k as usize - 1]).truncate(self.prec)
                }
            }
        };
        self.memo.lock().unwrap().single.insert((d, k), v.clone());
        v
    }

    /// Expansion of `S_d(tuple)`.
    pub fn at(&self, d: u32, tuple: &[u32]) -> InfinitySeries {
        let Some((&k, rest)) = tuple.split_first() else {
            return InfinitySeries::one(self.curve, EXACT);
        };
        if rest.is_empty() {
            return self.power_sum(d, k);
        }
        if (d as usize) < rest.len() {
            return InfinitySeries::zero(self.curve, EXACT);
        }
        let key = (d, tuple.to_vec());
        if let Some(v) = self.memo.lock().unwrap().at.get(&key) {
            return v.clone();
        }
        let s = self.power_sum(d, k);
        let v = if s.is_zero() && s.precision() >= EXACT {
            s
        } else {
            s.mul(&self.below(d, rest)).truncate(self.prec)
        };
        self.memo.lock().unwrap().at.insert(key, v.clone());
        v
    }

    /// Expansion of `S_{<d}(tuple)`.
    pub fn below(&self, d: u32, tuple: &[u32]) -> InfinitySeries {
        if tuple.is_empty() {
            return InfinitySeries::one(self.curve, EXACT);
        }
        let t = tuple.to_vec();
        let (mut e, mut acc) = {
            let memo = self.memo.lock().unwrap();
            (0..=d)
                .rev()
                .find_map(|e| memo.below.get(&(e, t.clone())).map(|v| (e, v.clone())))
                .unwrap_or((0, InfinitySeries::zero(self.curve, EXACT)))
        };
        while e < d {
            acc = acc.add(&self.at(e, tuple)).truncate(self.prec);
            e += 1;
            self.memo.lock().unwrap().below.insert((e, t.clone()), acc.clone());
        }
        acc
    }

    /// `sum_d S_d(tuple)` with the stopping rule: stop after two consecutive
    /// nonzero terms below `-(precision + STOP_GUARD)`.
    pub fn zeta(&self, tuple: &[u32], precision: i64, d_max: u32) -> Result<ZetaValue> {
        check_tuple(tuple)?;
        let floor = -(precision + STOP_GUARD);
        let wx = self.curve.weight_x() as i64;
        let mut acc = InfinitySeries::zero(self.curve, EXACT);
        let mut small = 0;
        for d in 0..=d_max {
            let term = self.at(d, tuple);
            acc = acc.add(&term);
            let exact_zero = term.is_zero() && term.precision() >= EXACT;
            if exact_zero {
                continue;
            }
            if term.degree_bound().div_euclid(wx) < floor {
                small += 1;
            } else {
                small = 0;
            }
            if small == 2 {
                let precision = acc.precision().min(self.prec);
                return Ok(ZetaValue { curve: self.curve, tuple: tuple.to_vec(), value: acc.truncate(precision), precision, terms_used: d });
            }
        }
        Err(Error::Precision(format!(
            "zeta({}) on {}: terms still above degree {floor} at d = {d_max}; partial sum known to {}",
            render_tuple(tuple),
            self.curve.id,
            acc.precision()
        )))
    }
}

/// Degree in `x` of the dominant part, rounded up.
fn x_degree(curve: Curve, r: &RingElem) -> i64 {
    let wx = curve.weight_x() as i64;
    r.degree().map_or(0, |d| (d + wx - 1).div_euclid(wx))
}

/// Expansion of `1/r` known to absolute precision at least `want`, using
/// as few digits of `r` as possible.
fn inverse_to(r: &RingElem, want: i64) -> InfinitySeries {
    let c = r.curve();
    let mut p = want - 2 * x_degree(c, r) + 8;
    loop {
        let s = InfinitySeries::from_ring(r, p);
        if let Some(inv) = s.inverse() {
            if inv.precision() >= want {
                return inv.truncate(want);
            }
            p += want - inv.precision() + 4;
        } else {
            p += 16;
        }
    }
}

/// `zeta(tuple)` to `precision` with default options.
pub fn zeta_value(curve: Curve, tuple: &[u32], precision: i64) -> Result<ZetaValue> {
    zeta_value_with(curve, tuple, precision, ZetaOptions::default())
}

/// `zeta(tuple)` with explicit options. The internal precision is raised
/// automatically if the recursion lost more digits than the margin.
pub fn zeta_value_with(curve: Curve, tuple: &[u32], precision: i64, opts: ZetaOptions) -> Result<ZetaValue> {
    if precision < 16 {
        return Err(Error::Precision(format!("precision {precision} is below the minimum of 16")));
    }
    check_tuple(tuple)?;
    let mut margin = opts.margin;
    for _ in 0..6 {
        let engine = ZetaEngine::shared(curve, precision + margin);
        let z = engine.zeta(tuple, precision, opts.d_max)?;
        if z.precision >= precision {
            return Ok(ZetaValue { value: z.value.truncate(precision), precision, ..z });
        }
        margin += precision - z.precision + 16;
    }
    Err(Error::Precision(format!("zeta({}) on {}: could not reach precision {precision}", render_tuple(tuple), curve.id)))
}

/// Reconstruct `zeta(tuple)/zeta(weight)` componentwise.
pub fn zetalike_check(curve: Curve, tuple: &[u32], precision: i64, guard: i64) -> Result<Zetalike> {
    check_tuple(tuple)?;
    if tuple.len() < 2 {
        return Err(Error::InvalidSpec("zetalike checks need depth at least 2".into()));
    }
    let z = zeta_value(curve, tuple, precision)?;
    let w = zeta_value(curve, &[weight(tuple)], precision)?;
    let ratio = z.value.div(&w.value).ok_or_else(|| Error::Precision("zeta of the weight vanished to precision".into()))?;
    let ratio = ratio.truncate(precision);
    let a = rational_reconstruct(ratio.even(), guard);
    let b = rational_reconstruct(ratio.odd(), guard);
    Ok(match (a, b) {
        (Some(a), Some(b)) => Zetalike::Detected { a, b },
        _ => Zetalike::NotDetected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Poly;
    use crate::curve::CurveId;

    #[test]
    fn series_matches_exact_power_sums() {
        for id in CurveId::ALL {
            let c = Curve::builtin(id);
            let eng = ZetaEngine::new(c, 80);
            let ex = PowerSums::shared(c);
            for d in 0..6 {
                for t in [vec![1u32], vec![2], vec![5], vec![1, 2], vec![3, 1]] {
                    let s = eng.at(d, &t);
                    let e = ex.at(d, &t).expand(120);
                    let p = s.precision().min(80);
                    assert!(p >= 60, "{id} d={d} {t:?}: precision {}", s.precision());
                    assert!(s.eq_to_precision(&e, p), "{id} d={d} {t:?}");
                }
            }
        }
    }

    #[test]
    fn first_theorem_numerically() {
        let c = Curve::builtin(CurveId::CaseI);
        let f = c.field;
        let z12 = zeta_value(c, &[1, 2], 100).unwrap();
        let z3 = zeta_value(c, &[3], 100).unwrap();
        let k = KElem::from_poly(c, Poly::from_ints(f, &[1, 1, 1]));
        let lhs = z12.value.mul_kelem(&k);
        assert!(lhs.eq_to_precision(&z3.value, 90));
        let r = zetalike_check(c, &[1, 2], 100, 10).unwrap();
        assert_eq!(r, Zetalike::Detected { a: RatFunc::new(Poly::one(f), Poly::from_ints(f, &[1, 1, 1])), b: RatFunc::zero(f) });
    }

    #[test]
    fn small_precision_is_rejected() {
        let c = Curve::builtin(CurveId::CaseI);
        assert!(matches!(zeta_value(c, &[1], 8), Err(Error::Precision(_))));
    }
}

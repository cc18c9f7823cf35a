//! Recognizing rational functions from truncated expansions.
//!
//! The continued fraction of a Laurent series in `1/x` has polynomial partial
//! quotients; its convergents `p_k/q_k` are the best rational approximations.
//! A convergent is accepted only if it is small (`deg p + deg q <= N - guard`)
//! and its own expansion reproduces the input to the full precision `N`.

use super::poly::Poly;
use super::ratfunc::RatFunc;
use super::series::{LaurentSeries, EXACT};

/// Default number of coefficients held back as a safety margin.
pub const DEFAULT_GUARD: i64 = 10;

/// A candidate `f/g` for a series, or `None` if no small convergent matches.
pub fn rational_reconstruct(s: &LaurentSeries, guard: i64) -> Option<RatFunc> {
    if s.precision() >= EXACT && !s.is_zero() {
        // an exact series is a finite sum of terms; keep enough of a tail
        let low = s.terms().last().map_or(0, |(e, _)| e);
        let span = s.degree_bound().abs() + low.abs() + 1;
        return rational_reconstruct(&s.truncate(4 * span + 2 * guard), guard);
    }
    let n = s.precision();
    let f = s.field();
    if n < guard {
        return None;
    }
    if s.is_zero() {
        return Some(RatFunc::zero(f));
    }
    let (mut p1, mut p2) = (Poly::one(f), Poly::zero(f));
    let (mut q1, mut q2) = (Poly::zero(f), Poly::one(f));
    let mut x = s.clone();
    loop {
        if x.precision() < 0 {
            return None;
        }
        let a = x.polynomial_part();
        let p = &(&a * &p1) + &p2;
        let q = &(&a * &q1) + &q2;
        if q.is_zero() {
            return None;
        }
        let size = p.degree().unwrap_or(0) as i64 + q.degree().unwrap_or(0) as i64;
        if size > n - guard {
            return None;
        }
        let cand = RatFunc::new(p.clone(), q.clone());
        if LaurentSeries::from_ratio(cand.num(), cand.den(), n) == s.truncate(n) {
            return Some(cand);
        }
        let frac = x.sub(&LaurentSeries::from_poly(&a, x.precision()));
        x = frac.inverse()?;
        p2 = std::mem::replace(&mut p1, p);
        q2 = std::mem::replace(&mut q1, q);
    }
}

/// Convenience: reconstruct the ratio of two series.
pub fn reconstruct_ratio(a: &LaurentSeries, b: &LaurentSeries, guard: i64) -> Option<RatFunc> {
    rational_reconstruct(&a.div(b)?, guard)
}

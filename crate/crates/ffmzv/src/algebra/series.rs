//! Truncated Laurent series in `1/x` over F_q.
//!
//! A series records every coefficient of degree `>= -prec` (its absolute
//! precision) and nothing below. Arithmetic propagates precision exactly:
//! sums keep the smaller precision and a product of series known to `-N1`
//! and `-N2` with leading degrees `v1`, `v2` is known to
//! `-min(N1 - v2, N2 - v1)`, so results never claim digits they do not have.

use super::field::{axpy, Fq};
use super::poly::{mul_slices, Poly};
use std::fmt;

/// Precision standing for "exact". Precisions are clamped here so that
/// arithmetic on exact series cannot overflow.
pub const EXACT: i64 = i64::MAX / 8;

fn clamp(p: i64) -> i64 {
    p.min(EXACT)
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentSeries {
    field: Fq,
    /// Degree of `c[0]`; meaningless when `c` is empty.
    top: i64,
    /// `c[i]` is the coefficient of `x^(top - i)`; `c[0] != 0` and trailing
    /// zeros are dropped, the remaining known terms being implicitly zero.
    c: Vec<u8>,
    prec: i64,
}

impl LaurentSeries {
    /// The zero series, known to absolute precision `prec`.
    pub fn zero(field: Fq, prec: i64) -> Self {
        let prec = clamp(prec);
        LaurentSeries { field, top: -prec - 1, c: Vec::new(), prec }
    }

    /// Exact polynomial truncated to precision `prec`.
    pub fn from_poly(p: &Poly, prec: i64) -> Self {
        let prec = clamp(prec);
        let field = p.field();
        let Some(d) = p.degree() else {
            return LaurentSeries::zero(field, prec);
        };
        let top = d as i64;
        let len = top + prec + 1;
        if len <= 0 {
            return LaurentSeries::zero(field, prec);
        }
        let c: Vec<u8> = p.coeffs().iter().rev().copied().collect();
        LaurentSeries::normalized(field, top, c, prec)
    }

    /// Expansion of `num/den` at infinity to precision `prec`.
    pub fn from_ratio(num: &Poly, den: &Poly, prec: i64) -> Self {
        let prec = clamp(prec);
        assert!(!den.is_zero(), "series of a fraction with zero denominator");
        let field = num.field();
        let (Some(n), Some(m)) = (num.degree(), den.degree()) else {
            return LaurentSeries::zero(field, prec);
        };
        let top = n as i64 - m as i64;
        let len = top + prec + 1;
        if len <= 0 {
            return LaurentSeries::zero(field, prec);
        }
        let len = len as usize;
        // reversed coefficients are power series in t = 1/x
        let nr: Vec<u8> = num.coeffs().iter().rev().copied().collect();
        let dr: Vec<u8> = den.coeffs().iter().rev().copied().collect();
        let c = power_series_div(field, &nr, &dr, len);
        LaurentSeries::normalized(field, top, c, prec)
    }

    /// Expansion of `1/p` to precision `prec`.
    pub fn invert_poly(p: &Poly, prec: i64) -> Self {
        LaurentSeries::from_ratio(&Poly::one(p.field()), p, prec)
    }

    /// Terms of degree `top, top-1, ...`, trimmed so the leading term is nonzero.
    pub fn from_terms(field: Fq, top: i64, c: Vec<u8>, prec: i64) -> Self {
        LaurentSeries::normalized(field, top, c, prec)
    }

    fn normalized(field: Fq, top: i64, mut c: Vec<u8>, prec: i64) -> Self {
        let prec = clamp(prec);
        let want = top + prec + 1;
        if want <= 0 {
            return LaurentSeries::zero(field, prec);
        }
        c.truncate(want as usize);
        while c.last() == Some(&0) {
            c.pop();
        }
        match c.iter().position(|&a| a != 0) {
            None => LaurentSeries::zero(field, prec),
            Some(0) => LaurentSeries { field, top, c, prec },
            Some(k) => {
                c.drain(..k);
                LaurentSeries { field, top: top - k as i64, c, prec }
            }
        }
    }

    pub fn field(&self) -> Fq {
        self.field
    }

    pub fn precision(&self) -> i64 {
        self.prec
    }

    /// Zero to the known precision.
    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree of the leading term, `None` if zero to precision.
    pub fn degree(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.top)
    }

    /// Degree of the leading term, or `-prec - 1` for a series that is zero
    /// to precision (a bound on the true degree).
    pub fn degree_bound(&self) -> i64 {
        if self.is_zero() {
            -self.prec - 1
        } else {
            self.top
        }
    }

    pub fn leading_coeff(&self) -> u8 {
        self.c.first().copied().unwrap_or(0)
    }

    /// Coefficient of `x^e`; panics if `e` is below the precision.
    pub fn coeff(&self, e: i64) -> u8 {
        assert!(e >= -self.prec, "coefficient of x^{e} is beyond precision {}", self.prec);
        if self.is_zero() || e > self.top {
            return 0;
        }
        self.c.get((self.top - e) as usize).copied().unwrap_or(0)
    }

    /// `(degree, coefficient)` of the nonzero terms, highest degree first.
    pub fn terms(&self) -> impl Iterator<Item = (i64, u8)> + '_ {
        self.c.iter().enumerate().filter(|(_, &a)| a != 0).map(move |(i, &a)| (self.top - i as i64, a))
    }

    /// Lower the precision to `prec` (no-op if already lower).
    pub fn truncate(&self, prec: i64) -> Self {
        if prec >= self.prec {
            return self.clone();
        }
        let mut c = self.c.clone();
        let len = (self.top + prec + 1).max(0) as usize;
        c.truncate(len);
        LaurentSeries::normalized(self.field, self.top, c, prec)
    }

    /// Terms of nonnegative degree as a polynomial.
    pub fn polynomial_part(&self) -> Poly {
        if self.is_zero() || self.top < 0 {
            return Poly::zero(self.field);
        }
        let n = (self.top + 1) as usize;
        let mut c: Vec<u8> = self.c.iter().take(n).copied().collect();
        c.resize(n, 0);
        c.reverse();
        Poly::from_coeffs(self.field, c)
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentSeries { field: self.field, top: self.top + k, c: self.c.clone(), prec: self.prec - k }
    }

    pub fn scale(&self, a: u8) -> Self {
        if a == 0 {
            return LaurentSeries::zero(self.field, self.prec);
        }
        let f = self.field;
        LaurentSeries { field: f, top: self.top, c: self.c.iter().map(|&b| f.mul(a, b)).collect(), prec: self.prec }
    }

    pub fn neg(&self) -> Self {
        self.scale(self.field.neg(1))
    }

    pub fn add(&self, o: &Self) -> Self {
        self.add_scaled(o, 1)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add_scaled(o, self.field.neg(1))
    }

    /// `self + a * o`.
    pub fn add_scaled(&self, o: &Self, a: u8) -> Self {
        let prec = self.prec.min(o.prec);
        if o.is_zero() || a == 0 {
            return self.truncate(prec);
        }
        if self.is_zero() {
            return o.scale(a).truncate(prec);
        }
        let top = self.top.max(o.top);
        let len = top + prec + 1;
        if len <= 0 {
            return LaurentSeries::zero(self.field, prec);
        }
        let used = ((top - self.top) as usize + self.c.len()).max((top - o.top) as usize + o.c.len());
        let mut c = vec![0u8; (len as usize).min(used)];
        place(&mut c, top, self, 1, self.field);
        place(&mut c, top, o, a, self.field);
        LaurentSeries::normalized(self.field, top, c, prec)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let prec = clamp((self.prec - o.degree_bound()).min(o.prec - self.degree_bound()));
        if self.is_zero() || o.is_zero() {
            return LaurentSeries::zero(self.field, prec);
        }
        let top = self.top + o.top;
        let len = top + prec + 1;
        if len <= 0 {
            return LaurentSeries::zero(self.field, prec);
        }
        let len = len as usize;
        let a = &self.c[..self.c.len().min(len)];
        let b = &o.c[..o.c.len().min(len)];
        let mut c = mul_slices(self.field, a, b);
        c.truncate(len);
        LaurentSeries::normalized(self.field, top, c, prec)
    }

    /// Product with an exact polynomial.
    pub fn mul_poly(&self, p: &Poly) -> Self {
        let Some(d) = p.degree() else {
            return LaurentSeries::zero(self.field, EXACT);
        };
        let ps = LaurentSeries::from_poly(p, self.prec + self.degree_bound().max(0) + d as i64 + 1);
        let prec = self.prec - d as i64;
        self.mul(&ps).truncate(prec)
    }

    /// Multiplicative inverse; `None` if zero to precision.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        assert!(self.prec < EXACT, "inverse of an exact series must be truncated first");
        let prec = self.prec + 2 * self.top;
        let len = (self.top + self.prec + 1) as usize;
        let mut one = vec![0u8; len];
        one[0] = 1;
        let c = power_series_div(self.field, &one, &self.c, len);
        Some(LaurentSeries::normalized(self.field, -self.top, c, prec))
    }

    pub fn div(&self, o: &Self) -> Option<Self> {
        o.inverse().map(|i| self.mul(&i))
    }

    /// Substitute `x -> x^k`.
    pub fn inflate(&self, k: i64) -> Self {
        assert!(k >= 1);
        if self.is_zero() {
            return LaurentSeries::zero(self.field, self.prec.saturating_mul(k));
        }
        let top = self.top * k;
        let prec = clamp(self.prec.saturating_mul(k));
        let mut c = vec![0u8; (self.c.len() - 1) * k as usize + 1];
        for (i, &a) in self.c.iter().enumerate() {
            c[i * k as usize] = a;
        }
        LaurentSeries { field: self.field, top, c, prec }
    }

    /// The p-th power. In characteristic p the truncation error is also
    /// raised to the p-th power, so the precision almost multiplies by p.
    pub fn frobenius(&self) -> Self {
        let f = self.field;
        let p = f.p() as i64;
        let prec = clamp(p.saturating_mul(self.prec + 1) - 1);
        if self.is_zero() {
            return LaurentSeries::zero(f, prec);
        }
        let top = self.top * p;
        let mut c = vec![0u8; (self.c.len() - 1) * p as usize + 1];
        for (i, &a) in self.c.iter().enumerate() {
            c[i * p as usize] = f.frob(a);
        }
        LaurentSeries { field: f, top, c, prec }
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = LaurentSeries::from_poly(&Poly::one(self.field), EXACT);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Agreement of all coefficients down to degree `-prec`. Both series must
    /// be known that far.
    pub fn eq_to_precision(&self, o: &Self, prec: i64) -> bool {
        assert!(self.prec >= prec && o.prec >= prec, "comparison beyond known precision");
        self.truncate(prec) == o.truncate(prec)
    }
}

fn place(dst: &mut [u8], top: i64, s: &LaurentSeries, a: u8, f: Fq) {
    let off = (top - s.top) as usize;
    if off >= dst.len() {
        return;
    }
    let n = s.c.len().min(dst.len() - off);
    axpy(f, &mut dst[off..off + n], a, &s.c[..n]);
}

/// First `len` coefficients of the power series `n/d`; `d[0] != 0`.
pub(crate) fn power_series_div(f: Fq, n: &[u8], d: &[u8], len: usize) -> Vec<u8> {
    let inv = f.inv(d[0]);
    let mut r = vec![0u8; len + d.len()];
    let k = n.len().min(len);
    r[..k].copy_from_slice(&n[..k]);
    let mut q = vec![0u8; len];
    for i in 0..len {
        let c = r[i];
        if c == 0 {
            continue;
        }
        let t = f.mul(c, inv);
        q[i] = t;
        let m = d.len().min(len - i);
        axpy(f, &mut r[i..i + m], f.neg(t), &d[..m]);
    }
    q
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (e, a) in self.terms().take(12) {
            let mono = match e {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{e}"),
            };
            parts.push(match (a, mono.is_empty()) {
                (_, true) => self.field.show(a),
                (1, false) => mono,
                _ => format!("{}*{mono}", self.field.show(a)),
            });
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "{} + O(x^{})", parts.join(" + "), -self.prec - 1)
    }
}

impl fmt::Debug for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentSeries[{}]({})", self.field, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn geometric_expansion() {
        // 1/(x+1) = x^-1 + x^-2 + ... over F_2
        let f = Fq::F2;
        let s = LaurentSeries::invert_poly(&Poly::from_ints(f, &[1, 1]), 10);
        assert_eq!(s.degree(), Some(-1));
        for e in -10..=-1 {
            assert_eq!(s.coeff(e), 1);
        }
        assert_eq!(s.coeff(0), 0);
    }

    #[test]
    fn product_precision_rule() {
        let f = Fq::F3;
        let a = LaurentSeries::from_ratio(&Poly::from_ints(f, &[1, 0, 1]), &Poly::from_ints(f, &[2, 1]), 20);
        let b = LaurentSeries::invert_poly(&Poly::from_ints(f, &[1, 1, 0, 1]), 30);
        let p = a.mul(&b);
        // a has degree 1, b degree -3
        assert_eq!(p.precision(), (20 + 3));
        let exact = LaurentSeries::from_ratio(
            &Poly::from_ints(f, &[1, 0, 1]),
            &(&Poly::from_ints(f, &[2, 1]) * &Poly::from_ints(f, &[1, 1, 0, 1])),
            p.precision(),
        );
        assert_eq!(p, exact);
    }

    #[test]
    fn frobenius_precision() {
        let f = Fq::F3;
        let d = Poly::from_ints(f, &[1, 2, 1, 1]);
        let s = LaurentSeries::invert_poly(&d, 15);
        let s3 = s.frobenius();
        assert_eq!(s3.precision(), 47);
        assert_eq!(s3, LaurentSeries::invert_poly(&d.frobenius(), 47));
    }

    fn fq() -> impl Strategy<Value = Fq> {
        prop_oneof![Just(Fq::F2), Just(Fq::F3), Just(Fq::F4)]
    }

    fn poly_pair() -> impl Strategy<Value = (Fq, Vec<u8>, Vec<u8>)> {
        fq().prop_flat_map(|f| {
            let q = f.q() as u8;
            (Just(f), prop::collection::vec(0..q, 1..12), prop::collection::vec(0..q, 1..12))
        })
    }

    proptest! {
        #[test]
        fn inverse_roundtrip((f, n, d) in poly_pair(), prec in 5i64..60) {
            let n = Poly::from_coeffs(f, n);
            let d = Poly::from_coeffs(f, d);
            prop_assume!(!n.is_zero() && !d.is_zero());
            let s = LaurentSeries::from_ratio(&n, &d, prec);
            prop_assume!(!s.is_zero());
            let t = s.inverse().unwrap();
            let expect = LaurentSeries::from_ratio(&d, &n, t.precision());
            prop_assert_eq!(&t, &expect);
        }

        #[test]
        fn sum_matches_exact((f, n, d) in poly_pair(), prec in 0i64..50) {
            let n = Poly::from_coeffs(f, n);
            let d = Poly::from_coeffs(f, d);
            prop_assume!(!d.is_zero());
            let one = Poly::one(f);
            let a = LaurentSeries::from_ratio(&n, &d, prec);
            let b = LaurentSeries::from_ratio(&one, &n.gcd(&d).monic().shift(1), prec + 3);
            let exact_num = &(&n * &n.gcd(&d).monic().shift(1)) + &d;
            let exact_den = &d * &n.gcd(&d).monic().shift(1);
            let lhs = a.add(&b);
            prop_assert_eq!(lhs.precision(), prec);
            prop_assert_eq!(lhs, LaurentSeries::from_ratio(&exact_num, &exact_den, prec));
        }
    }
}

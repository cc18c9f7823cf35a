//! Dense univariate polynomials over F_q.
//!
//! Coefficients are stored lowest degree first with no trailing zeros, so two
//! polynomials are equal exactly when their coefficient vectors are. Products
//! switch from schoolbook to Karatsuba above [`KARATSUBA_CUTOFF`].

use super::field::{axpy, scale, Fq};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Operand length (in coefficients) at which multiplication switches to Karatsuba.
pub const KARATSUBA_CUTOFF: usize = 48;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: Fq,
    c: Vec<u8>,
}

impl Poly {
    pub fn zero(field: Fq) -> Self {
        Poly { field, c: Vec::new() }
    }

    pub fn one(field: Fq) -> Self {
        Poly { field, c: vec![1] }
    }

    pub fn constant(field: Fq, a: u8) -> Self {
        Poly::from_coeffs(field, vec![a])
    }

    /// The polynomial `x`.
    pub fn x(field: Fq) -> Self {
        Poly { field, c: vec![0, 1] }
    }

    /// `a * x^n`.
    pub fn monomial(field: Fq, a: u8, n: usize) -> Self {
        if a == 0 {
            return Poly::zero(field);
        }
        let mut c = vec![0; n + 1];
        c[n] = a;
        Poly { field, c }
    }

    /// Build from coefficients, lowest degree first. Trailing zeros are dropped.
    pub fn from_coeffs(field: Fq, mut c: Vec<u8>) -> Self {
        debug_assert!(c.iter().all(|&a| field.contains(a)));
        trim(&mut c);
        Poly { field, c }
    }

    /// Build from signed integers reduced modulo the characteristic.
    pub fn from_ints(field: Fq, c: &[i64]) -> Self {
        Poly::from_coeffs(field, c.iter().map(|&n| field.from_int(n)).collect())
    }

    #[inline]
    pub fn field(&self) -> Fq {
        self.field
    }

    /// Coefficients, lowest degree first.
    #[inline]
    pub fn coeffs(&self) -> &[u8] {
        &self.c
    }

    pub fn into_coeffs(self) -> Vec<u8> {
        self.c
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0] == 1
    }

    /// Constant polynomials, including zero.
    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    /// Degree, `None` for the zero polynomial.
    #[inline]
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Degree as a signed integer with `i64::MIN` standing in for the zero
    /// polynomial's negative infinity.
    #[inline]
    pub fn deg(&self) -> i64 {
        match self.degree() {
            Some(d) => d as i64,
            None => i64::MIN,
        }
    }

    /// Leading coefficient (zero for the zero polynomial).
    #[inline]
    pub fn lc(&self) -> u8 {
        self.c.last().copied().unwrap_or(0)
    }

    #[inline]
    pub fn coeff(&self, i: usize) -> u8 {
        self.c.get(i).copied().unwrap_or(0)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.c.iter().position(|&a| a != 0)
    }

    pub fn is_monic(&self) -> bool {
        self.lc() == 1
    }

    /// Scale to leading coefficient one. Zero stays zero.
    pub fn monic(&self) -> Poly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        self.scale(self.field.inv(self.lc()))
    }

    pub fn scale(&self, a: u8) -> Poly {
        if a == 0 {
            return Poly::zero(self.field);
        }
        let mut c = self.c.clone();
        scale(self.field, &mut c, a);
        Poly { field: self.field, c }
    }

    /// Multiply by `x^n`.
    pub fn shift(&self, n: usize) -> Poly {
        if self.is_zero() || n == 0 {
            return self.clone();
        }
        let mut c = vec![0; n + self.c.len()];
        c[n..].copy_from_slice(&self.c);
        Poly { field: self.field, c }
    }

    /// `self + a * x^n * other`, in place.
    pub fn add_scaled_shift(&mut self, a: u8, n: usize, other: &Poly) {
        if a == 0 || other.is_zero() {
            return;
        }
        let need = n + other.c.len();
        if self.c.len() < need {
            self.c.resize(need, 0);
        }
        axpy(self.field, &mut self.c[n..], a, &other.c);
        trim(&mut self.c);
    }

    pub fn add_assign_ref(&mut self, other: &Poly) {
        self.add_scaled_shift(1, 0, other);
    }

    pub fn sub_assign_ref(&mut self, other: &Poly) {
        let m = self.field.neg(1);
        self.add_scaled_shift(m, 0, other);
    }

    /// Evaluate at a field element.
    pub fn eval(&self, a: u8) -> u8 {
        let f = self.field;
        self.c.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, a), c))
    }

    /// `p(x^k)`.
    pub fn inflate(&self, k: usize) -> Poly {
        assert!(k >= 1);
        if k == 1 || self.is_zero() {
            return self.clone();
        }
        let mut c = vec![0; (self.c.len() - 1) * k + 1];
        for (i, &a) in self.c.iter().enumerate() {
            c[i * k] = a;
        }
        Poly { field: self.field, c }
    }

    /// If `p = r(x^k)` return `r`.
    pub fn deflate(&self, k: usize) -> Option<Poly> {
        assert!(k >= 1);
        if self.c.iter().enumerate().any(|(i, &a)| a != 0 && i % k != 0) {
            return None;
        }
        Some(Poly::from_coeffs(self.field, self.c.iter().step_by(k).copied().collect()))
    }

    /// The p-th power, computed by spreading coefficients.
    pub fn frobenius(&self) -> Poly {
        let f = self.field;
        let p = f.p() as usize;
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![0; (self.c.len() - 1) * p + 1];
        for (i, &a) in self.c.iter().enumerate() {
            c[i * p] = f.frob(a);
        }
        Poly { field: f, c }
    }

    /// Apply the coefficient Frobenius `a -> a^p` without changing exponents.
    pub fn map_coeff_frob(&self) -> Poly {
        let f = self.field;
        Poly { field: f, c: self.c.iter().map(|&a| f.frob(a)).collect() }
    }

    /// `self^(q^n)` where `q` is the field size.
    pub fn pow_q(&self, n: u32) -> Poly {
        let k = match self.field {
            Fq::F4 => 2 * n,
            _ => n,
        };
        (0..k).fold(self.clone(), |acc, _| acc.frobenius())
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut acc = Poly::one(self.field);
        let mut base = self.clone();
        let p = self.field.p() as u64;
        // peel off p-th powers cheaply
        let mut frobs = 0;
        while e > 0 && e.is_multiple_of(p) {
            e /= p;
            frobs += 1;
        }
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        for _ in 0..frobs {
            acc = acc.frobenius();
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        let f = self.field;
        let c = self.c.iter().enumerate().skip(1).map(|(i, &a)| f.mul(f.from_int(i as i64), a)).collect();
        Poly::from_coeffs(f, c)
    }

    /// Quotient and remainder. Panics if `d` is zero.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let f = self.field;
        let dd = d.c.len() - 1;
        if self.c.len() <= dd {
            return (Poly::zero(f), self.clone());
        }
        let inv = f.inv(d.lc());
        let mut r = self.c.clone();
        let mut q = vec![0; r.len() - dd];
        for i in (dd..r.len()).rev() {
            let c = r[i];
            if c == 0 {
                continue;
            }
            let t = f.mul(c, inv);
            q[i - dd] = t;
            axpy(f, &mut r[i - dd..=i], f.neg(t), &d.c);
        }
        r.truncate(dd);
        (Poly::from_coeffs(f, q), Poly::from_coeffs(f, r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.divrem(d).1
    }

    /// Exact division; `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = if self.c.len() >= other.c.len() {
            (self.clone(), other.clone())
        } else {
            (other.clone(), self.clone())
        };
        while !b.is_zero() {
            if b.is_constant() {
                return Poly::one(self.field);
            }
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g` and `g` monic.
    pub fn ext_gcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let f = self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(f), Poly::zero(f));
        let (mut t0, mut t1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s2 = &s0 - &(&q * &s1);
            let t2 = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = f.inv(r0.lc());
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    /// Inverse modulo `m`, if it exists.
    pub fn inv_mod(&self, m: &Poly) -> Option<Poly> {
        let (g, s, _) = self.rem(m).ext_gcd(m);
        g.is_one().then(|| s.rem(m))
    }

    /// Square-free test via `gcd(p, p') = 1`.
    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).is_constant()
    }

    /// Irreducibility test (Ben-Or): no factor of degree `<= n/2`.
    pub fn is_irreducible(&self) -> bool {
        let n = match self.degree() {
            None | Some(0) => return false,
            Some(n) => n,
        };
        let m = self.monic();
        let x = Poly::x(self.field);
        let mut xp = x.clone();
        for _ in 0..n / 2 {
            xp = pow_mod(&xp, self.field.q() as u64, &m);
            if !(&xp - &x).gcd(&m).is_one() {
                return false;
            }
        }
        true
    }
}

/// `base^e mod m`.
pub fn pow_mod(base: &Poly, mut e: u64, m: &Poly) -> Poly {
    let mut acc = Poly::one(base.field);
    let mut b = base.rem(m);
    while e > 0 {
        if e & 1 == 1 {
            acc = (&acc * &b).rem(m);
        }
        e >>= 1;
        if e > 0 {
            b = (&b * &b).rem(m);
        }
    }
    acc
}

fn trim(c: &mut Vec<u8>) {
    while c.last() == Some(&0) {
        c.pop();
    }
}

/// Product of coefficient slices, lowest degree first.
pub(crate) fn mul_slices(f: Fq, a: &[u8], b: &[u8]) -> Vec<u8> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    mul_into(f, a, b, &mut out);
    out
}

/// `out += a * b`; `out` must have room for `a.len() + b.len() - 1` terms.
fn mul_into(f: Fq, a: &[u8], b: &[u8], out: &mut [u8]) {
    let (a, b) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    if a.is_empty() {
        return;
    }
    if a.len() < KARATSUBA_CUTOFF {
        for (i, &c) in a.iter().enumerate() {
            axpy(f, &mut out[i..], c, b);
        }
        return;
    }
    if b.len() >= 2 * a.len() {
        // unbalanced: chunk the long operand
        for (k, chunk) in b.chunks(a.len()).enumerate() {
            mul_into(f, a, chunk, &mut out[k * a.len()..]);
        }
        return;
    }
    karatsuba(f, a, b, out);
}

fn karatsuba(f: Fq, a: &[u8], b: &[u8], out: &mut [u8]) {
    let m = a.len().max(b.len()) / 2;
    let (a0, a1) = a.split_at(m.min(a.len()));
    let (b0, b1) = b.split_at(m.min(b.len()));
    let z0 = mul_slices(f, a0, b0);
    let z2 = mul_slices(f, a1, b1);
    let sa = add_slices(f, a0, a1);
    let sb = add_slices(f, b0, b1);
    let mut z1 = mul_slices(f, &sa, &sb);
    let minus = f.neg(1);
    if z1.len() < z0.len().max(z2.len()) {
        z1.resize(z0.len().max(z2.len()), 0);
    }
    axpy(f, &mut z1, minus, &z0);
    axpy(f, &mut z1, minus, &z2);
    axpy(f, out, 1, &z0);
    let n1 = z1.len().min(out.len() - m);
    axpy(f, &mut out[m..], 1, &z1[..n1]);
    axpy(f, &mut out[2 * m..], 1, &z2);
}

fn add_slices(f: Fq, a: &[u8], b: &[u8]) -> Vec<u8> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    axpy(f, &mut out, 1, short);
    out
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out.sub_assign_ref(rhs);
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(self.field.neg(1))
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        debug_assert_eq!(self.field, rhs.field);
        Poly::from_coeffs(self.field, mul_slices(self.field, &self.c, &rhs.c))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(f, self, "x")
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({})", self.field, self)
    }
}

/// Render with the given variable name, highest degree first.
pub(crate) fn fmt_poly(f: &mut fmt::Formatter<'_>, p: &Poly, var: &str) -> fmt::Result {
    f.write_str(&render_poly(p, var))
}

pub fn render_poly(p: &Poly, var: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let field = p.field();
    let mut parts = Vec::new();
    for (i, &a) in p.coeffs().iter().enumerate().rev() {
        if a == 0 {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        let term = match (a, mono.is_empty()) {
            (_, true) => field.show(a),
            (1, false) => mono,
            _ => format!("{}*{mono}", field.show(a)),
        };
        parts.push(term);
    }
    parts.join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive_mul(f: Fq, a: &[u8], b: &[u8]) -> Vec<u8> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(x, y));
            }
        }
        out
    }

    fn field_strategy() -> impl Strategy<Value = Fq> {
        prop_oneof![Just(Fq::F2), Just(Fq::F3), Just(Fq::F4)]
    }

    fn poly_strategy(max_len: usize) -> impl Strategy<Value = (Fq, Vec<u8>, Vec<u8>)> {
        field_strategy().prop_flat_map(move |f| {
            let q = f.q() as u8;
            (
                Just(f),
                prop::collection::vec(0..q, 0..max_len),
                prop::collection::vec(0..q, 0..max_len),
            )
        })
    }

    #[test]
    fn known_factorisation_over_f2() {
        let f = Fq::F2;
        // x^8 + x + 1 = (x^2 + x + 1)(x^6 + x^5 + x^3 + x^2 + 1)
        let a = Poly::from_ints(f, &[1, 1, 1]);
        let b = Poly::from_ints(f, &[1, 0, 1, 1, 0, 1, 1]);
        let c = Poly::from_ints(f, &[1, 1, 0, 0, 0, 0, 0, 0, 1]);
        assert_eq!(&a * &b, c);
        assert_eq!(c.div_exact(&a), Some(b));
        assert!(a.is_irreducible());
        assert!(!c.is_irreducible());
    }

    #[test]
    fn irreducibility_counts() {
        // number of monic irreducibles of degree 4 over F_2, F_3, F_4: 3, 18, 60
        for (f, expect) in [(Fq::F2, 3usize), (Fq::F3, 18), (Fq::F4, 60)] {
            let q = f.q() as usize;
            let mut count = 0;
            for code in 0..q.pow(4) {
                let mut c: Vec<u8> = (0..4).map(|i| ((code / q.pow(i)) % q) as u8).collect();
                c.push(1);
                if Poly::from_coeffs(f, c).is_irreducible() {
                    count += 1;
                }
            }
            assert_eq!(count, expect, "{f}");
        }
    }

    #[test]
    fn karatsuba_large_operands() {
        for f in [Fq::F2, Fq::F3, Fq::F4] {
            let q = f.q() as u64;
            let mut s = 12345u64;
            let mut gen = |n: usize| -> Vec<u8> {
                (0..n)
                    .map(|_| {
                        s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                        ((s >> 33) % q) as u8
                    })
                    .collect()
            };
            for (la, lb) in [(300, 300), (130, 517), (49, 1000), (1000, 64)] {
                let a = gen(la);
                let b = gen(lb);
                assert_eq!(mul_slices(f, &a, &b), naive_mul(f, &a, &b));
            }
        }
    }

    proptest! {
        #[test]
        fn mul_matches_naive((f, a, b) in poly_strategy(120)) {
            let pa = Poly::from_coeffs(f, a.clone());
            let pb = Poly::from_coeffs(f, b.clone());
            let expect = Poly::from_coeffs(f, naive_mul(f, &a, &b));
            prop_assert_eq!(&pa * &pb, expect);
        }

        #[test]
        fn divrem_reconstructs((f, a, b) in poly_strategy(60)) {
            let pa = Poly::from_coeffs(f, a);
            let pb = Poly::from_coeffs(f, b);
            prop_assume!(!pb.is_zero());
            let (q, r) = pa.divrem(&pb);
            prop_assert_eq!(&(&q * &pb) + &r, pa);
            prop_assert!(r.deg() < pb.deg());
        }

        #[test]
        fn gcd_divides_and_bezout((f, a, b) in poly_strategy(40)) {
            let pa = Poly::from_coeffs(f, a);
            let pb = Poly::from_coeffs(f, b);
            let g = pa.gcd(&pb);
            let (g2, s, t) = pa.ext_gcd(&pb);
            prop_assert_eq!(&g, &g2);
            prop_assert_eq!(&(&s * &pa) + &(&t * &pb), g.clone());
            if !g.is_zero() {
                prop_assert!(pa.rem(&g).is_zero());
                prop_assert!(pb.rem(&g).is_zero());
            }
        }

        #[test]
        fn frobenius_is_pth_power((f, a, _b) in poly_strategy(30)) {
            let pa = Poly::from_coeffs(f, a);
            let p = f.p() as u64;
            prop_assert_eq!(pa.frobenius(), pa.pow(p));
            prop_assert_eq!(pa.pow_q(1), pa.pow(f.q() as u64));
        }
    }
}

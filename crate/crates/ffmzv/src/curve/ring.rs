use super::Curve;
use crate::algebra::{Fq, Poly};
use std::fmt;

/// An element `p0(x) + y*p1(x)` of the coordinate ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingElem {
    curve: Curve,
    p0: Poly,
    p1: Poly,
}

impl RingElem {
    pub fn new(curve: Curve, p0: Poly, p1: Poly) -> Self {
        assert!(curve.has_y() || p1.is_zero(), "y-part in a genus zero ring");
        RingElem { curve, p0, p1 }
    }

    pub fn from_poly(curve: Curve, p0: Poly) -> Self {
        let f = curve.field;
        RingElem { curve, p0, p1: Poly::zero(f) }
    }

    pub fn zero(curve: Curve) -> Self {
        RingElem::from_poly(curve, Poly::zero(curve.field))
    }

    pub fn one(curve: Curve) -> Self {
        RingElem::from_poly(curve, Poly::one(curve.field))
    }

    pub fn constant(curve: Curve, a: u8) -> Self {
        RingElem::from_poly(curve, Poly::constant(curve.field, a))
    }

    pub fn x(curve: Curve) -> Self {
        RingElem::from_poly(curve, Poly::x(curve.field))
    }

    pub fn y(curve: Curve) -> Self {
        assert!(curve.has_y(), "genus zero ring has no y");
        RingElem { curve, p0: Poly::zero(curve.field), p1: Poly::one(curve.field) }
    }

    pub fn curve(&self) -> Curve {
        self.curve
    }

    pub fn field(&self) -> Fq {
        self.curve.field
    }

    pub fn p0(&self) -> &Poly {
        &self.p0
    }

    pub fn p1(&self) -> &Poly {
        &self.p1
    }

    pub fn into_parts(self) -> (Poly, Poly) {
        (self.p0, self.p1)
    }

    pub fn is_zero(&self) -> bool {
        self.p0.is_zero() && self.p1.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.p0.is_one() && self.p1.is_zero()
    }

    /// Degree at infinity, `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        let wx = self.curve.weight_x() as i64;
        let wy = self.curve.weight_y() as i64;
        let d0 = self.p0.degree().map(|d| wx * d as i64);
        let d1 = self.p1.degree().map(|d| wx * d as i64 + wy);
        d0.max(d1)
    }

    /// Coefficient of the dominant monomial.
    pub fn sign(&self) -> u8 {
        let wx = self.curve.weight_x() as i64;
        let wy = self.curve.weight_y() as i64;
        let d0 = self.p0.degree().map(|d| wx * d as i64);
        let d1 = self.p1.degree().map(|d| wx * d as i64 + wy);
        if d1 > d0 {
            self.p1.lc()
        } else {
            self.p0.lc()
        }
    }

    pub fn is_monic(&self) -> bool {
        self.sign() == 1
    }

    pub fn scale(&self, a: u8) -> Self {
        RingElem { curve: self.curve, p0: self.p0.scale(a), p1: self.p1.scale(a) }
    }

    pub fn scale_poly(&self, p: &Poly) -> Self {
        RingElem { curve: self.curve, p0: &self.p0 * p, p1: &self.p1 * p }
    }

    pub fn add(&self, o: &Self) -> Self {
        RingElem { curve: self.curve, p0: &self.p0 + &o.p0, p1: &self.p1 + &o.p1 }
    }

    pub fn sub(&self, o: &Self) -> Self {
        RingElem { curve: self.curve, p0: &self.p0 - &o.p0, p1: &self.p1 - &o.p1 }
    }

    pub fn neg(&self) -> Self {
        RingElem { curve: self.curve, p0: -&self.p0, p1: -&self.p1 }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if !self.curve.has_y() {
            return RingElem::from_poly(self.curve, &self.p0 * &o.p0);
        }
        let (p0, p1) = mul_parts(&self.curve, &self.p0, &self.p1, &o.p0, &o.p1);
        RingElem { curve: self.curve, p0, p1 }
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = RingElem::one(self.curve);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        acc
    }

    /// The p-th power map.
    pub fn frobenius(&self) -> Self {
        let p0 = self.p0.frobenius();
        if self.p1.is_zero() {
            return RingElem::from_poly(self.curve, p0);
        }
        let (u, v) = self.curve.y_pow_p();
        let p1 = self.p1.frobenius();
        RingElem { curve: self.curve, p0: &p0 + &(&u * &p1), p1: &v * &p1 }
    }

    /// `self^(q^n)`.
    pub fn pow_q(&self, n: u32) -> Self {
        let k = match self.field() {
            Fq::F4 => 2 * n,
            _ => n,
        };
        (0..k).fold(self.clone(), |acc, _| acc.frobenius())
    }

    /// Image under the nontrivial automorphism `y -> -y - a` over F_q[x].
    pub fn conj(&self) -> Self {
        if !self.curve.has_y() {
            return self.clone();
        }
        let a = self.curve.a_poly();
        RingElem { curve: self.curve, p0: &self.p0 - &(&a * &self.p1), p1: -&self.p1 }
    }

    /// Norm to F_q[x]: `p0^2 - a*p0*p1 - f*p1^2`.
    pub fn norm(&self) -> Poly {
        if !self.curve.has_y() {
            return self.p0.clone();
        }
        let a = self.curve.a_poly();
        let f = self.curve.f();
        let t = &(&self.p0 * &self.p0) - &(&a * &(&self.p0 * &self.p1));
        &t - &(&f * &(&self.p1 * &self.p1))
    }

    /// Evaluate a polynomial in this element with F_q coefficients.
    pub fn substitute_into(&self, p: &Poly) -> RingElem {
        let mut acc = RingElem::zero(self.curve);
        for &c in p.coeffs().iter().rev() {
            acc = acc.mul(self).add(&RingElem::constant(self.curve, c));
        }
        acc
    }
}

/// `(a0 + y a1)(b0 + y b1)` with `y^2 = f - a*y`.
pub(crate) fn mul_parts(curve: &Curve, a0: &Poly, a1: &Poly, b0: &Poly, b1: &Poly) -> (Poly, Poly) {
    let f = curve.f();
    let c00 = a0 * b0;
    if a1.is_zero() {
        return (c00, a0 * b1);
    }
    if b1.is_zero() {
        return (c00, a1 * b0);
    }
    let c11 = a1 * b1;
    let mut p0 = c00;
    p0.add_assign_ref(&(&f * &c11));
    let mut p1 = &(a0 * b1) + &(a1 * b0);
    if curve.a != 0 {
        p1.sub_assign_ref(&c11.scale(curve.a));
    }
    (p0, p1)
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_pair(&self.p0, &self.p1))
    }
}

impl fmt::Debug for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingElem[{}]({})", self.curve.id, self)
    }
}

pub(crate) fn render_pair(p0: &Poly, p1: &Poly) -> String {
    match (p0.is_zero(), p1.is_zero()) {
        (_, true) => p0.to_string(),
        (true, false) if p1.is_one() => "y".to_string(),
        (true, false) => format!("y*({p1})"),
        (false, false) if p1.is_one() => format!("{p0} + y"),
        (false, false) => format!("{p0} + y*({p1})"),
    }
}

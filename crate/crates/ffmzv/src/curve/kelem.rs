use super::ring::{mul_parts, render_pair};
use super::{Curve, InfinitySeries, RingElem};
use crate::algebra::{Field, Fq, Poly, RatFunc};
use std::fmt;

/// An element `(p0 + y*p1)/D` of the fraction field `K`.
///
/// Since `A` is free over F_q[x] with basis `{1, y}`, the form with `D`
/// monic and `gcd(D, p0, p1) = 1` is unique; equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KElem {
    curve: Curve,
    p0: Poly,
    p1: Poly,
    den: Poly,
}

impl KElem {
    pub fn new(curve: Curve, p0: Poly, p1: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        assert!(curve.has_y() || p1.is_zero(), "y-part in a genus zero ring");
        let mut e = KElem { curve, p0, p1, den };
        e.normalize();
        e
    }

    pub fn from_ring(r: &RingElem) -> Self {
        let f = r.field();
        KElem { curve: r.curve(), p0: r.p0().clone(), p1: r.p1().clone(), den: Poly::one(f) }
    }

    pub fn from_poly(curve: Curve, p: Poly) -> Self {
        let f = curve.field;
        KElem { curve, p0: p, p1: Poly::zero(f), den: Poly::one(f) }
    }

    pub fn from_ratfunc(curve: Curve, r: &RatFunc) -> Self {
        let f = curve.field;
        KElem { curve, p0: r.num().clone(), p1: Poly::zero(f), den: r.den().clone() }
    }

    pub fn zero(curve: Curve) -> Self {
        KElem::from_poly(curve, Poly::zero(curve.field))
    }

    pub fn one(curve: Curve) -> Self {
        KElem::from_poly(curve, Poly::one(curve.field))
    }

    pub fn constant(curve: Curve, a: u8) -> Self {
        KElem::from_poly(curve, Poly::constant(curve.field, a))
    }

    fn normalize(&mut self) {
        let fld = self.curve.field;
        if self.p0.is_zero() && self.p1.is_zero() {
            self.den = Poly::one(fld);
            return;
        }
        if !self.den.is_constant() {
            let mut g = self.den.gcd(&self.p0);
            if !g.is_one() {
                g = g.gcd(&self.p1);
            }
            if !g.is_one() {
                self.den = self.den.div_exact(&g).unwrap();
                self.p0 = self.p0.div_exact(&g).unwrap();
                self.p1 = self.p1.div_exact(&g).unwrap();
            }
        }
        if !self.den.is_monic() {
            let inv = fld.inv(self.den.lc());
            self.den = self.den.scale(inv);
            self.p0 = self.p0.scale(inv);
            self.p1 = self.p1.scale(inv);
        }
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

    pub fn den(&self) -> &Poly {
        &self.den
    }

    /// Numerator as a ring element.
    pub fn numerator(&self) -> RingElem {
        RingElem::new(self.curve, self.p0.clone(), self.p1.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.p0.is_zero() && self.p1.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.p0.is_one() && self.p1.is_zero() && self.den.is_one()
    }

    /// Lies in F_q(x), i.e. has no `y` component.
    pub fn is_rational(&self) -> bool {
        self.p1.is_zero()
    }

    /// The F_q(x) components `(a, b)` of `a + y*b`.
    pub fn components(&self) -> (RatFunc, RatFunc) {
        (RatFunc::new(self.p0.clone(), self.den.clone()), RatFunc::new(self.p1.clone(), self.den.clone()))
    }

    pub fn to_ratfunc(&self) -> Option<RatFunc> {
        self.is_rational().then(|| RatFunc::new(self.p0.clone(), self.den.clone()))
    }

    /// Degree at infinity, `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        let n = self.numerator().degree()?;
        Some(n - self.curve.weight_x() as i64 * self.den.deg())
    }

    /// Leading coefficient at infinity (the sign).
    pub fn sign(&self) -> u8 {
        self.numerator().sign()
    }

    /// Sum of the degrees of the three polynomials, a cost measure.
    pub fn height(&self) -> usize {
        self.p0.degree().unwrap_or(0) + self.p1.degree().unwrap_or(0) + self.den.degree().unwrap_or(0)
    }

    pub fn add(&self, o: &Self) -> Self {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        if self.den == o.den {
            return KElem::new(self.curve, &self.p0 + &o.p0, &self.p1 + &o.p1, self.den.clone());
        }
        let g = self.den.gcd(&o.den);
        let a = o.den.div_exact(&g).unwrap();
        let b = self.den.div_exact(&g).unwrap();
        let p0 = &(&self.p0 * &a) + &(&o.p0 * &b);
        let p1 = &(&self.p1 * &a) + &(&o.p1 * &b);
        KElem::new(self.curve, p0, p1, &self.den * &a)
    }

    pub fn neg(&self) -> Self {
        KElem { curve: self.curve, p0: -&self.p0, p1: -&self.p1, den: self.den.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return KElem::zero(self.curve);
        }
        let (p0, p1) = if self.curve.has_y() {
            mul_parts(&self.curve, &self.p0, &self.p1, &o.p0, &o.p1)
        } else {
            (&self.p0 * &o.p0, Poly::zero(self.field()))
        };
        KElem::new(self.curve, p0, p1, &self.den * &o.den)
    }

    pub fn mul_ring(&self, r: &RingElem) -> Self {
        self.mul(&KElem::from_ring(r))
    }

    pub fn mul_poly(&self, p: &Poly) -> Self {
        KElem::new(self.curve, &self.p0 * p, &self.p1 * p, self.den.clone())
    }

    pub fn div_poly(&self, p: &Poly) -> Self {
        KElem::new(self.curve, self.p0.clone(), self.p1.clone(), &self.den * p)
    }

    pub fn scale(&self, a: u8) -> Self {
        if a == 0 {
            return KElem::zero(self.curve);
        }
        KElem { curve: self.curve, p0: self.p0.scale(a), p1: self.p1.scale(a), den: self.den.clone() }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if !self.curve.has_y() {
            return Some(KElem::new(self.curve, self.den.clone(), Poly::zero(self.field()), self.p0.clone()));
        }
        let n = self.numerator();
        let c = n.conj();
        let norm = n.norm();
        Some(KElem::new(self.curve, &self.den * c.p0(), &self.den * c.p1(), norm))
    }

    pub fn div(&self, o: &Self) -> Option<Self> {
        o.inv().map(|i| self.mul(&i))
    }

    pub fn pow(&self, e: i64) -> Self {
        if e < 0 {
            return self.inv().expect("negative power of zero").pow(-e);
        }
        let n = self.numerator().pow(e as u64);
        let (p0, p1) = n.into_parts();
        KElem::new(self.curve, p0, p1, self.den.pow(e as u64))
    }

    pub fn frobenius(&self) -> Self {
        let n = self.numerator().frobenius();
        let (p0, p1) = n.into_parts();
        KElem::new(self.curve, p0, p1, self.den.frobenius())
    }

    pub fn conj(&self) -> Self {
        let c = self.numerator().conj();
        let (p0, p1) = c.into_parts();
        KElem { curve: self.curve, p0, p1, den: self.den.clone() }
    }

    /// Expansion at infinity with both components known to precision `prec`.
    pub fn expand(&self, prec: i64) -> InfinitySeries {
        InfinitySeries::from_kelem(self, prec)
    }
}

impl Field for KElem {
    fn zero_like(&self) -> Self {
        KElem::zero(self.curve)
    }
    fn one_like(&self) -> Self {
        KElem::one(self.curve)
    }
    fn is_zero(&self) -> bool {
        KElem::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        KElem::add(self, o)
    }
    fn neg(&self) -> Self {
        KElem::neg(self)
    }
    fn sub(&self, o: &Self) -> Self {
        KElem::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        KElem::mul(self, o)
    }
    fn inv(&self) -> Option<Self> {
        KElem::inv(self)
    }
    fn size(&self) -> usize {
        self.height()
    }
}

impl fmt::Display for KElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = render_pair(&self.p0, &self.p1);
        if self.den.is_one() {
            f.write_str(&n)
        } else {
            write!(f, "({n})/({})", self.den)
        }
    }
}

impl fmt::Debug for KElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KElem[{}]({})", self.curve.id, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::CurveId;
    use proptest::prelude::*;

    fn arb_kelem(c: Curve) -> impl Strategy<Value = KElem> {
        let q = c.q() as u8;
        let has_y = c.has_y();
        (
            prop::collection::vec(0..q, 0..6),
            prop::collection::vec(0..q, 0..5),
            prop::collection::vec(0..q, 1..5),
        )
            .prop_map(move |(a, b, mut d)| {
                let f = c.field;
                d.push(1);
                let b = if has_y { Poly::from_coeffs(f, b) } else { Poly::zero(f) };
                KElem::new(c, Poly::from_coeffs(f, a), b, Poly::from_coeffs(f, d))
            })
    }

    fn arb_curve() -> impl Strategy<Value = Curve> {
        prop::sample::select(CurveId::ALL.to_vec()).prop_map(Curve::builtin)
    }

    proptest! {
        #[test]
        fn field_laws((a, b, c) in arb_curve().prop_flat_map(|c| (arb_kelem(c), arb_kelem(c), arb_kelem(c)))) {
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).sub(&b), a.clone());
            if !a.is_zero() {
                prop_assert!(a.mul(&a.inv().unwrap()).is_one());
                prop_assert_eq!(a.degree().unwrap() + a.inv().unwrap().degree().unwrap(), 0);
            }
            prop_assert_eq!(a.frobenius(), a.pow(a.field().p() as i64));
        }
    }

    #[test]
    fn canonical_form_is_unique() {
        let c = Curve::builtin(CurveId::CaseI);
        let f = c.field;
        let x1 = Poly::from_ints(f, &[1, 1]);
        let a = KElem::new(c, &x1 * &Poly::x(f), x1.clone(), &x1 * &x1);
        let b = KElem::new(c, Poly::x(f), Poly::one(f), x1.clone());
        assert_eq!(a, b);
    }
}

use super::{Curve, KElem, RingElem};
use crate::algebra::series::EXACT;
use crate::algebra::{LaurentSeries, Poly};
use std::fmt;

/// Expansion of an element of `K` at infinity, stored as `e + y*o` with `e`
/// and `o` Laurent series in `1/x`.
///
/// Every element of the completion has this form uniquely, so the pair is a
/// faithful truncated representation and avoids fractional powers of `x`.
#[derive(Clone, PartialEq, Eq)]
pub struct InfinitySeries {
    curve: Curve,
    even: LaurentSeries,
    odd: LaurentSeries,
}

impl InfinitySeries {
    pub fn new(curve: Curve, even: LaurentSeries, odd: LaurentSeries) -> Self {
        InfinitySeries { curve, even, odd }
    }

    pub fn zero(curve: Curve, prec: i64) -> Self {
        InfinitySeries { curve, even: LaurentSeries::zero(curve.field, prec), odd: LaurentSeries::zero(curve.field, prec) }
    }

    pub fn one(curve: Curve, prec: i64) -> Self {
        InfinitySeries {
            curve,
            even: LaurentSeries::from_poly(&Poly::one(curve.field), prec),
            odd: LaurentSeries::zero(curve.field, prec),
        }
    }

    pub fn from_kelem(k: &KElem, prec: i64) -> Self {
        InfinitySeries {
            curve: k.curve(),
            even: LaurentSeries::from_ratio(k.p0(), k.den(), prec),
            odd: LaurentSeries::from_ratio(k.p1(), k.den(), prec),
        }
    }

    /// A ring element expanded with both parts known to `prec`.
    pub fn from_ring(r: &RingElem, prec: i64) -> Self {
        InfinitySeries { curve: r.curve(), even: LaurentSeries::from_poly(r.p0(), prec), odd: LaurentSeries::from_poly(r.p1(), prec) }
    }

    pub fn curve(&self) -> Curve {
        self.curve
    }

    pub fn even(&self) -> &LaurentSeries {
        &self.even
    }

    pub fn odd(&self) -> &LaurentSeries {
        &self.odd
    }

    /// Smaller of the two component precisions.
    pub fn precision(&self) -> i64 {
        self.even.precision().min(self.odd.precision())
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    /// Degree at infinity of the leading term, if nonzero to precision.
    pub fn degree(&self) -> Option<i64> {
        let wx = self.curve.weight_x() as i64;
        let wy = self.curve.weight_y() as i64;
        let e = self.even.degree().map(|d| wx * d);
        let o = self.odd.degree().map(|d| wx * d + wy);
        e.max(o)
    }

    /// A bound on the degree at infinity that also holds when the series is
    /// zero to precision.
    pub fn degree_bound(&self) -> i64 {
        let wx = self.curve.weight_x() as i64;
        let wy = self.curve.weight_y() as i64;
        (wx * self.even.degree_bound()).max(wx * self.odd.degree_bound() + wy)
    }

    pub fn truncate(&self, prec: i64) -> Self {
        InfinitySeries { curve: self.curve, even: self.even.truncate(prec), odd: self.odd.truncate(prec) }
    }

    pub fn add(&self, o: &Self) -> Self {
        InfinitySeries { curve: self.curve, even: self.even.add(&o.even), odd: self.odd.add(&o.odd) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        InfinitySeries { curve: self.curve, even: self.even.sub(&o.even), odd: self.odd.sub(&o.odd) }
    }

    pub fn neg(&self) -> Self {
        InfinitySeries { curve: self.curve, even: self.even.neg(), odd: self.odd.neg() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if !self.curve.has_y() {
            let z = LaurentSeries::zero(self.curve.field, EXACT);
            return InfinitySeries { curve: self.curve, even: self.even.mul(&o.even), odd: z };
        }
        let f = self.curve.f();
        let bd = self.odd.mul(&o.odd);
        let even = self.even.mul(&o.even).add(&bd.mul_poly(&f));
        let mut odd = self.even.mul(&o.odd).add(&self.odd.mul(&o.even));
        if self.curve.a != 0 {
            odd = odd.sub(&bd.scale(self.curve.a));
        }
        InfinitySeries { curve: self.curve, even, odd }
    }

    pub fn mul_kelem(&self, k: &KElem) -> Self {
        // enough digits of k that the product loses nothing to them
        let p = self.precision() + self.degree_bound().max(0) + 8;
        self.mul(&InfinitySeries::from_kelem(k, p))
    }

    /// Inverse through the conjugate: `1/(e + y o) = conj / norm`.
    pub fn inverse(&self) -> Option<Self> {
        if !self.curve.has_y() {
            let inv = self.even.inverse()?;
            let z = LaurentSeries::zero(self.curve.field, EXACT);
            return Some(InfinitySeries { curve: self.curve, even: inv, odd: z });
        }
        let a = self.curve.a;
        let f = self.curve.f();
        let ce = if a != 0 { self.even.sub(&self.odd.scale(a)) } else { self.even.clone() };
        let co = self.odd.neg();
        // norm = e*(e - a o) - f o^2
        let norm = self.even.mul(&ce).sub(&self.odd.mul(&self.odd).mul_poly(&f));
        let ninv = norm.inverse()?;
        Some(InfinitySeries { curve: self.curve, even: ce.mul(&ninv), odd: co.mul(&ninv) })
    }

    /// The p-th power: `e^p + (u + y v) o^p` where `y^p = u + y v`.
    pub fn frobenius(&self) -> Self {
        let e = self.even.frobenius();
        if !self.curve.has_y() {
            return InfinitySeries { curve: self.curve, even: e, odd: self.odd.clone() };
        }
        let o = self.odd.frobenius();
        let (u, v) = self.curve.y_pow_p();
        InfinitySeries { curve: self.curve, even: e.add(&o.mul_poly(&u)), odd: o.mul_poly(&v) }
    }

    pub fn scale(&self, a: u8) -> Self {
        InfinitySeries { curve: self.curve, even: self.even.scale(a), odd: self.odd.scale(a) }
    }

    pub fn div(&self, o: &Self) -> Option<Self> {
        o.inverse().map(|i| self.mul(&i))
    }

    /// Componentwise agreement to `prec`.
    pub fn eq_to_precision(&self, o: &Self, prec: i64) -> bool {
        self.even.eq_to_precision(&o.even, prec) && self.odd.eq_to_precision(&o.odd, prec)
    }
}

impl fmt::Display for InfinitySeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.odd.is_zero() {
            write!(f, "{}", self.even)
        } else {
            write!(f, "[{}] + y*[{}]", self.even, self.odd)
        }
    }
}

impl fmt::Debug for InfinitySeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "InfinitySeries[{}]({})", self.curve.id, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::CurveId;

    #[test]
    fn series_arithmetic_matches_exact() {
        for id in [CurveId::CaseI, CurveId::CaseII, CurveId::CaseIII, CurveId::CaseIV] {
            let c = Curve::builtin(id);
            let f = c.field;
            let a = KElem::new(c, Poly::from_ints(f, &[1, 1]), Poly::from_ints(f, &[1]), Poly::from_ints(f, &[1, 0, 1, 1]));
            let b = KElem::from_ring(&RingElem::new(c, Poly::from_ints(f, &[0, 1, 1]), Poly::from_ints(f, &[1, 1])));
            let sa = a.expand(60);
            let sb = b.expand(60);
            let prod = sa.mul(&sb);
            assert!(prod.precision() >= 50, "{id}: {}", prod.precision());
            assert!(prod.eq_to_precision(&a.mul(&b).expand(80), 50), "{id}");
            let q = sa.div(&sb).unwrap();
            assert!(q.eq_to_precision(&a.div(&b).unwrap().expand(80), 40), "{id}");
            let fr = sa.frobenius();
            assert!(fr.precision() >= 60, "{id}");
            assert!(fr.eq_to_precision(&a.frobenius().expand(200), 60), "{id}");
        }
    }
}

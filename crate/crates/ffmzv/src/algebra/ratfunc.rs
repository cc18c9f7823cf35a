//! The rational function field F_q(x).

use super::field::Fq;
use super::linalg::Field;
use super::poly::{render_poly, Poly};
use std::fmt;

/// `num/den` in lowest terms with `den` monic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Reduce `num/den`. Panics if `den` is zero.
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        let f = num.field();
        if num.is_zero() {
            return RatFunc { num, den: Poly::one(f) };
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        if !d.is_monic() {
            let inv = f.inv(d.lc());
            n = n.scale(inv);
            d = d.scale(inv);
        }
        RatFunc { num: n, den: d }
    }

    pub fn from_poly(p: Poly) -> Self {
        let f = p.field();
        RatFunc { num: p, den: Poly::one(f) }
    }

    pub fn zero(field: Fq) -> Self {
        RatFunc::from_poly(Poly::zero(field))
    }

    pub fn one(field: Fq) -> Self {
        RatFunc::from_poly(Poly::one(field))
    }

    pub fn constant(field: Fq, a: u8) -> Self {
        RatFunc::from_poly(Poly::constant(field, a))
    }

    pub fn field(&self) -> Fq {
        self.num.field()
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    /// `deg num - deg den`; `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.num.deg() - self.den.deg())
    }

    pub fn inv(&self) -> Option<RatFunc> {
        (!self.is_zero()).then(|| RatFunc::new(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: i64) -> RatFunc {
        if e < 0 {
            return self.inv().expect("negative power of zero").pow(-e);
        }
        RatFunc { num: self.num.pow(e as u64), den: self.den.pow(e as u64) }
    }

    /// Substitute `x -> x^k`.
    pub fn inflate(&self, k: usize) -> RatFunc {
        RatFunc { num: self.num.inflate(k), den: self.den.inflate(k) }
    }

    /// Height: the larger of the two degrees.
    pub fn height(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }
}

impl Field for RatFunc {
    fn zero_like(&self) -> Self {
        RatFunc::zero(self.field())
    }
    fn one_like(&self) -> Self {
        RatFunc::one(self.field())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return RatFunc::new(&self.num + &o.num, self.den.clone());
        }
        let g = self.den.gcd(&o.den);
        let a = o.den.div_exact(&g).unwrap();
        let b = self.den.div_exact(&g).unwrap();
        RatFunc::new(&(&self.num * &a) + &(&o.num * &b), &self.den * &a)
    }
    fn neg(&self) -> Self {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return self.zero_like();
        }
        // cross-cancel before multiplying
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = o.den.div_exact(&g1).unwrap();
        let n2 = o.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        let inv = self.field().inv(den.lc());
        RatFunc { num: num.scale(inv), den: den.scale(inv) }
    }
    fn inv(&self) -> Option<Self> {
        RatFunc::inv(self)
    }
    fn size(&self) -> usize {
        self.num.degree().unwrap_or(0) + self.den.degree().unwrap_or(0)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({})/({})", render_poly(&self.num, "x"), render_poly(&self.den, "x"))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc[{}]({})", self.field(), self)
    }
}

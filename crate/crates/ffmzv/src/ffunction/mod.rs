//! F-functions: rational functions in `x, y, X, Y` whose values at
//! `X = x^(q^d')`, `Y = y^(q^d')` interpolate power sums of degree `d`.
//!
//! An [`FFunction`] carries an offset `o`; its capital variables stand for
//! `X_o = X^(q^o)` and `Y_o = Y^(q^o)`, so twisting only moves the offset
//! and negative twists stay exact. Arithmetic brings operands to a common
//! offset by substitution. The numerator is reduced on the basis
//! `{1, y, Y, yY}` and the denominator lies in `F_q[x][X]`.

mod bipoly;
mod fpoly;
pub mod library;
pub mod parse;

pub use bipoly::BiPoly;
pub use fpoly::FPoly;
pub use library::{builtin_ffunctions, ell_coefficient, ffunction, FunctionLibrary};
pub use parse::{ff_parse, parse_fpoly};

use crate::algebra::Poly;
use crate::curve::{Curve, KElem, RingElem};
use crate::error::{Error, Result};
use std::fmt;

#[derive(Clone)]
pub struct FFunction {
    curve: Curve,
    offset: i32,
    num: FPoly,
    den: BiPoly,
}

/// `deg f(d) = alpha q^d' + beta` for large `d`, with the leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingTerm {
    pub alpha: i64,
    pub beta: i64,
    /// Coefficient of the top capital monomial over `lc(den)`.
    pub coeff: KElem,
    /// Exponents `(k, l)` of the top monomial `X^k Y^l`.
    pub monomial: (usize, usize),
}

/// Compare the leading terms of two functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingRatio {
    pub ratio: KElem,
    pub alpha_diff: i64,
    pub beta_diff: i64,
}

impl FFunction {
    /// `num / den` in lowest terms.
    pub fn from_parts(num: FPoly, den: FPoly) -> Result<Self> {
        FFunction::from_parts_at(num, den, 0)
    }

    pub fn from_parts_at(num: FPoly, den: FPoly, offset: i32) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::NotInvertible("zero denominator".into()));
        }
        let curve = num.curve();
        let (num, den) = clear_denominator(num, den);
        Ok(FFunction::normalized(curve, offset, num, den))
    }

    pub fn from_fpoly(num: FPoly) -> Self {
        let curve = num.curve();
        FFunction::normalized(curve, 0, num, BiPoly::one(curve.field))
    }

    pub fn zero(curve: Curve) -> Self {
        FFunction { curve, offset: 0, num: FPoly::zero(curve), den: BiPoly::one(curve.field) }
    }

    pub fn one(curve: Curve) -> Self {
        FFunction::constant(&KElem::one(curve))
    }

    /// An element of `K`, free of the capital variables.
    pub fn constant(k: &KElem) -> Self {
        let c = k.curve();
        let num = FPoly::from_ring(&k.numerator());
        FFunction::normalized(c, 0, num, BiPoly::from_x(k.den().clone()))
    }

    pub fn from_poly(curve: Curve, p: Poly) -> Self {
        FFunction::constant(&KElem::from_poly(curve, p))
    }

    pub fn x(curve: Curve) -> Self {
        FFunction::from_fpoly(FPoly::x(curve))
    }

    pub fn y(curve: Curve) -> Self {
        FFunction::from_fpoly(FPoly::y(curve))
    }

    pub fn big_x(curve: Curve) -> Self {
        FFunction::from_fpoly(FPoly::big_x(curve))
    }

    pub fn big_y(curve: Curve) -> Self {
        FFunction::from_fpoly(FPoly::big_y(curve))
    }

    pub fn curve(&self) -> Curve {
        self.curve
    }

    pub fn offset(&self) -> i32 {
        self.offset
    }

    pub fn num(&self) -> &FPoly {
        &self.num
    }

    pub fn den(&self) -> &BiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant_in_big() && self.den.is_x_only()
    }

    /// The value in `K` of a function free of `X` and `Y`.
    pub fn as_constant(&self) -> Option<KElem> {
        if !self.is_constant() {
            return None;
        }
        let c = self.num.coords();
        Some(KElem::new(self.curve, c[0].coeff(0), c[1].coeff(0), self.den.coeff(0)))
    }

    fn normalized(curve: Curve, offset: i32, num: FPoly, den: BiPoly) -> Self {
        if num.is_zero() {
            return FFunction::zero(curve);
        }
        let mut g = den.clone();
        for p in num.coords() {
            if g.is_one() {
                break;
            }
            if !p.is_zero() {
                g = g.gcd(p);
            }
        }
        let (num, den) = if g.is_one() || g.degree() == Some(0) && g.lc().is_constant() {
            (num, den)
        } else {
            let c = num.coords();
            let div = |p: &BiPoly| p.div_exact(&g).expect("gcd divides");
            (FPoly::new(curve, [div(&c[0]), div(&c[1]), div(&c[2]), div(&c[3])]), div(&den))
        };
        let (den, s) = den.make_monic();
        let num = if s == 1 { num } else { num.scale(s) };
        let mut out = FFunction { curve, offset, num, den };
        if out.is_constant() {
            out.offset = 0;
        } else {
            out.raise();
        }
        out
    }

    /// Rewrite in the variables of a higher offset while possible.
    fn raise(&mut self) {
        let q = self.curve.q() as usize;
        loop {
            let Some(den) = self.den.deflate(q) else { return };
            let Some(num) = self.num.unsubstitute() else { return };
            self.num = num;
            self.den = den;
            self.offset += 1;
        }
    }

    /// The same function written in the variables of `offset`, which must
    /// not exceed the current one.
    pub fn lowered(&self, offset: i32) -> Self {
        if self.is_constant() || offset >= self.offset {
            let mut out = self.clone();
            if !self.is_constant() {
                assert!(offset == self.offset, "cannot raise by lowering");
            }
            out.offset = if self.is_constant() { 0 } else { offset };
            return out;
        }
        let k = (self.offset - offset) as u32;
        let qk = (self.curve.q() as usize).pow(k);
        FFunction { curve: self.curve, offset, num: self.num.substitute(k), den: self.den.inflate(qk) }
    }

    fn common(&self, o: &Self) -> (i32, Self, Self) {
        let off = match (self.is_constant(), o.is_constant()) {
            (true, true) => 0,
            (true, false) => o.offset,
            (false, true) => self.offset,
            (false, false) => self.offset.min(o.offset),
        };
        (off, self.lowered(off), o.lowered(off))
    }

    pub fn add(&self, o: &Self) -> Self {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        let (off, a, b) = self.common(o);
        if a.den == b.den {
            return FFunction::normalized(self.curve, off, a.num.add(&b.num), a.den);
        }
        let num = a.num.mul_bipoly(&b.den).add(&b.num.mul_bipoly(&a.den));
        FFunction::normalized(self.curve, off, num, a.den.mul(&b.den))
    }

    pub fn neg(&self) -> Self {
        FFunction { curve: self.curve, offset: self.offset, num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, a: u8) -> Self {
        if a == 0 {
            return FFunction::zero(self.curve);
        }
        FFunction { curve: self.curve, offset: self.offset, num: self.num.scale(a), den: self.den.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return FFunction::zero(self.curve);
        }
        let (off, a, b) = self.common(o);
        FFunction::normalized(self.curve, off, a.num.mul(&b.num), a.den.mul(&b.den))
    }

    pub fn mul_kelem(&self, k: &KElem) -> Self {
        self.mul(&FFunction::constant(k))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NotInvertible("zero F-function".into()));
        }
        let (num, den) = clear_denominator(FPoly::from_bipoly(self.curve, self.den.clone()), self.num.clone());
        Ok(FFunction::normalized(self.curve, self.offset, num, den))
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let num = self.num.pow(e as u64);
        let den = self.den.pow(e as u64);
        Ok(FFunction::normalized(self.curve, self.offset, num, den))
    }

    /// `f^(n)`: the capital variables raised to the `q^n`-th power.
    pub fn twist(&self, n: i32) -> Self {
        let mut out = self.clone();
        if !self.is_constant() {
            out.offset += n;
        }
        out
    }

    /// The exponent `k` with `X = x^(q^k)` at degree `d`.
    pub fn exponent_at(&self, d: u32) -> i64 {
        d as i64 + self.curve.specialization_offset() as i64 + self.offset as i64
    }

    /// The value at degree `d`.
    pub fn specialize(&self, d: u32) -> Result<KElem> {
        let k = self.exponent_at(d);
        if self.is_constant() {
            return Ok(self.as_constant().unwrap());
        }
        if k < 0 {
            return Err(Error::OutOfRange { d: d as i64, min: d as i64 - k });
        }
        let k = k as u32;
        let qk = (self.curve.q() as usize).pow(k);
        let num = self.num.specialize(k);
        let den = self.den.eval_power(qk);
        if den.is_zero() {
            return Err(Error::NotInvertible(format!("denominator vanishes at d = {d}")));
        }
        let (p0, p1) = num.into_parts();
        Ok(KElem::new(self.curve, p0, p1, den))
    }

    /// The same function with offset at most 0.
    pub fn at_offset_zero(&self) -> Self {
        if self.offset > 0 {
            self.lowered(0)
        } else {
            self.clone()
        }
    }

    /// Top monomial of the numerator in weighted degree and its coefficient
    /// in `A`.
    fn top(&self) -> (i64, (usize, usize), RingElem) {
        let wx = self.curve.weight_x() as i64;
        let wy = self.curve.weight_y() as i64;
        let c = self.num.coords();
        let mut best: Option<(i64, (usize, usize))> = None;
        for l in 0..2 {
            let k = c[2 * l].degree().max(c[2 * l + 1].degree());
            if let Some(k) = k {
                let a = wx * k as i64 + wy * l as i64;
                if best.is_none_or(|(b, _)| a > b) {
                    best = Some((a, (k, l)));
                }
            }
        }
        let (a, (k, l)) = best.expect("nonzero numerator");
        let coeff = RingElem::new(self.curve, c[2 * l].coeff(k), c[2 * l + 1].coeff(k));
        (a, (k, l), coeff)
    }

    /// `(alpha, beta)` with `deg f(d) = alpha q^d' + beta` for all large `d`,
    /// `d'` the exponent of [`FFunction::exponent_at`].
    pub fn weighted_leading_term(&self) -> Result<LeadingTerm> {
        if self.is_zero() {
            return Err(Error::InvalidSpec("zero has no leading term".into()));
        }
        let wx = self.curve.weight_x() as i64;
        let (a_num, monomial, c) = self.top();
        let den_k = self.den.degree().unwrap() as i64;
        let coeff = KElem::new(self.curve, c.p0().clone(), c.p1().clone(), self.den.lc());
        let beta = coeff.degree().unwrap();
        Ok(LeadingTerm { alpha: a_num - wx * den_k, beta, coeff, monomial })
    }

    /// Leading coefficient of `self / o` and the differences of the degree
    /// parameters.
    pub fn leading_ratio(&self, o: &Self) -> Result<LeadingRatio> {
        let a = self.weighted_leading_term()?;
        let b = o.weighted_leading_term()?;
        let ratio = a.coeff.div(&b.coeff).ok_or_else(|| Error::NotInvertible("zero leading coefficient".into()))?;
        Ok(LeadingRatio { ratio, alpha_diff: a.alpha - b.alpha, beta_diff: a.beta - b.beta })
    }

    /// Render as `num / den` in the data-file syntax, with `^(n)` for a
    /// nonzero offset.
    pub fn render(&self) -> String {
        let den = FPoly::from_bipoly(self.curve, self.den.clone());
        let mut s = if self.den.is_one() { format!("{}", self.num) } else { format!("({}) / ({})", self.num, den) };
        if self.offset != 0 {
            s = format!("[{s}]^({})", self.offset);
        }
        s
    }
}

/// `num / den` with the denominator moved into `F_q[x][X]` by multiplying
/// through by its conjugates.
fn clear_denominator(mut num: FPoly, mut den: FPoly) -> (FPoly, BiPoly) {
    if !den.is_big_y_free() {
        let c = den.conj_big();
        num = num.mul(&c);
        den = den.mul(&c);
    }
    if !den.is_small_y_free() {
        let c = den.conj_small();
        num = num.mul(&c);
        den = den.mul(&c);
    }
    debug_assert!(den.is_big_y_free() && den.is_small_y_free());
    (num, den.coords()[0].clone())
}

impl PartialEq for FFunction {
    fn eq(&self, o: &Self) -> bool {
        if self.curve != o.curve {
            return false;
        }
        if self.offset == o.offset && self.num == o.num && self.den == o.den {
            return true;
        }
        self.sub(o).is_zero()
    }
}

impl Eq for FFunction {}

impl fmt::Display for FFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for FFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests;

//! Polynomials in `x, y, X, Y` modulo both curve relations.
//!
//! Over `F_q[x][X]` the ring is free with basis `1, y, Y, yY`; an element is
//! stored as its four coordinates.

use super::bipoly::BiPoly;
use crate::algebra::Poly;
use crate::curve::{Curve, RingElem};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FPoly {
    curve: Curve,
    /// Coordinates on `1, y, Y, yY`.
    c: [BiPoly; 4],
}

type Pair = (BiPoly, BiPoly);

impl FPoly {
    pub fn new(curve: Curve, c: [BiPoly; 4]) -> Self {
        FPoly { curve, c }
    }

    pub fn zero(curve: Curve) -> Self {
        let z = BiPoly::zero(curve.field);
        FPoly { curve, c: [z.clone(), z.clone(), z.clone(), z] }
    }

    pub fn one(curve: Curve) -> Self {
        FPoly::from_bipoly(curve, BiPoly::one(curve.field))
    }

    pub fn from_bipoly(curve: Curve, p: BiPoly) -> Self {
        let mut out = FPoly::zero(curve);
        out.c[0] = p;
        out
    }

    /// `p0(x) + y p1(x)`.
    pub fn from_ring(r: &RingElem) -> Self {
        let mut out = FPoly::zero(r.curve());
        out.c[0] = BiPoly::from_x(r.p0().clone());
        out.c[1] = BiPoly::from_x(r.p1().clone());
        out
    }

    /// `a x^i y^j X^k Y^l` with `j, l` in `{0, 1}`.
    pub fn monomial(curve: Curve, a: u8, i: usize, j: usize, k: usize, l: usize) -> Self {
        let mut out = FPoly::zero(curve);
        out.c[j + 2 * l] = BiPoly::monomial(Poly::monomial(curve.field, a, i), k);
        out
    }

    pub fn x(curve: Curve) -> Self {
        FPoly::monomial(curve, 1, 1, 0, 0, 0)
    }

    pub fn y(curve: Curve) -> Self {
        FPoly::monomial(curve, 1, 0, 1, 0, 0)
    }

    pub fn big_x(curve: Curve) -> Self {
        FPoly::monomial(curve, 1, 0, 0, 1, 0)
    }

    pub fn big_y(curve: Curve) -> Self {
        FPoly::monomial(curve, 1, 0, 0, 0, 1)
    }

    pub fn curve(&self) -> Curve {
        self.curve
    }

    pub fn coords(&self) -> &[BiPoly; 4] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|p| p.is_zero())
    }

    /// Free of `Y`.
    pub fn is_big_y_free(&self) -> bool {
        self.c[2].is_zero() && self.c[3].is_zero()
    }

    /// Free of `y`.
    pub fn is_small_y_free(&self) -> bool {
        self.c[1].is_zero() && self.c[3].is_zero()
    }

    /// Degree in `X` over all coordinates.
    pub fn x_degree_big(&self) -> Option<usize> {
        self.c.iter().filter_map(|p| p.degree()).max()
    }

    /// Free of both capital variables.
    pub fn is_constant_in_big(&self) -> bool {
        self.is_big_y_free() && self.c.iter().all(|p| p.is_x_only())
    }

    pub fn add(&self, o: &Self) -> Self {
        FPoly { curve: self.curve, c: std::array::from_fn(|i| self.c[i].add(&o.c[i])) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        FPoly { curve: self.curve, c: std::array::from_fn(|i| self.c[i].sub(&o.c[i])) }
    }

    pub fn neg(&self) -> Self {
        FPoly { curve: self.curve, c: std::array::from_fn(|i| self.c[i].neg()) }
    }

    pub fn scale(&self, a: u8) -> Self {
        FPoly { curve: self.curve, c: std::array::from_fn(|i| self.c[i].scale(a)) }
    }

    pub fn mul_bipoly(&self, p: &BiPoly) -> Self {
        FPoly { curve: self.curve, c: std::array::from_fn(|i| self.c[i].mul(p)) }
    }

    pub fn mul_x(&self, p: &Poly) -> Self {
        FPoly { curve: self.curve, c: std::array::from_fn(|i| self.c[i].mul_x(p)) }
    }

    fn small_pair(&self) -> Pair {
        (self.c[0].clone(), self.c[1].clone())
    }

    fn big_pair(&self) -> Pair {
        (self.c[2].clone(), self.c[3].clone())
    }

    fn from_pairs(curve: Curve, p: Pair, q: Pair) -> Self {
        FPoly { curve, c: [p.0, p.1, q.0, q.1] }
    }

    /// `(a0 + y a1)(b0 + y b1)` with `y^2 = f(x) - a y`.
    fn mul_small(&self, a: &Pair, b: &Pair) -> Pair {
        let c00 = a.0.mul(&b.0);
        if a.1.is_zero() {
            return (c00, a.0.mul(&b.1));
        }
        if b.1.is_zero() {
            return (c00, a.1.mul(&b.0));
        }
        let c11 = a.1.mul(&b.1);
        let mid = a.0.add(&a.1).mul(&b.0.add(&b.1)).sub(&c00).sub(&c11);
        let f = self.curve.f();
        let p0 = c00.add(&c11.mul_x(&f));
        let p1 = if self.curve.a != 0 { mid.sub(&c11.scale(self.curve.a)) } else { mid };
        (p0, p1)
    }

    fn pair_add(a: &Pair, b: &Pair) -> Pair {
        (a.0.add(&b.0), a.1.add(&b.1))
    }

    fn pair_sub(a: &Pair, b: &Pair) -> Pair {
        (a.0.sub(&b.0), a.1.sub(&b.1))
    }

    fn pair_is_zero(a: &Pair) -> bool {
        a.0.is_zero() && a.1.is_zero()
    }

    /// Product, with `Y^2 = f(X) - a Y`.
    pub fn mul(&self, o: &Self) -> Self {
        let (a0, a1) = (self.small_pair(), self.big_pair());
        let (b0, b1) = (o.small_pair(), o.big_pair());
        let t00 = self.mul_small(&a0, &b0);
        if FPoly::pair_is_zero(&a1) {
            let t01 = self.mul_small(&a0, &b1);
            return FPoly::from_pairs(self.curve, t00, t01);
        }
        if FPoly::pair_is_zero(&b1) {
            let t10 = self.mul_small(&a1, &b0);
            return FPoly::from_pairs(self.curve, t00, t10);
        }
        let t11 = self.mul_small(&a1, &b1);
        let s = self.mul_small(&FPoly::pair_add(&a0, &a1), &FPoly::pair_add(&b0, &b1));
        let mid = FPoly::pair_sub(&FPoly::pair_sub(&s, &t00), &t11);
        let fx = BiPoly::from_big_x(&self.curve.f());
        let c0 = FPoly::pair_add(&t00, &(t11.0.mul(&fx), t11.1.mul(&fx)));
        let c1 = if self.curve.a != 0 {
            FPoly::pair_sub(&mid, &(t11.0.scale(self.curve.a), t11.1.scale(self.curve.a)))
        } else {
            mid
        };
        FPoly::from_pairs(self.curve, c0, c1)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = FPoly::one(self.curve);
        let mut base = self.clone();
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

    /// Image under `Y -> -Y - a`.
    pub fn conj_big(&self) -> Self {
        let a = self.curve.a;
        let (p, q) = (self.small_pair(), self.big_pair());
        let p = if a != 0 { FPoly::pair_sub(&p, &(q.0.scale(a), q.1.scale(a))) } else { p };
        FPoly::from_pairs(self.curve, p, (q.0.neg(), q.1.neg()))
    }

    /// Image under `y -> -y - a`.
    pub fn conj_small(&self) -> Self {
        let a = self.curve.a;
        let c = &self.c;
        let shift = |u: &BiPoly, v: &BiPoly| if a != 0 { u.sub(&v.scale(a)) } else { u.clone() };
        FPoly { curve: self.curve, c: [shift(&c[0], &c[1]), c[1].neg(), shift(&c[2], &c[3]), c[3].neg()] }
    }

    /// `Y^(q^k) = u(X) + v(X) Y`.
    pub fn big_y_power(curve: Curve, k: u32) -> (BiPoly, BiPoly) {
        let r = RingElem::y(curve).pow_q(k);
        (BiPoly::from_big_x(r.p0()), BiPoly::from_big_x(r.p1()))
    }

    /// Substitute `X -> X^(q^k)`, `Y -> Y^(q^k)`.
    pub fn substitute(&self, k: u32) -> Self {
        if k == 0 {
            return self.clone();
        }
        let qk = (self.curve.q() as usize).pow(k);
        let c: [BiPoly; 4] = std::array::from_fn(|i| self.c[i].inflate(qk));
        if c[2].is_zero() && c[3].is_zero() {
            return FPoly { curve: self.curve, c };
        }
        let (u, v) = FPoly::big_y_power(self.curve, k);
        let [c0, c1, c2, c3] = c;
        FPoly { curve: self.curve, c: [c0.add(&c2.mul(&u)), c1.add(&c3.mul(&u)), c2.mul(&v), c3.mul(&v)] }
    }

    /// Inverse of [`FPoly::substitute`] with `k = 1`, when the element lies
    /// in the image.
    pub fn unsubstitute(&self) -> Option<Self> {
        let q = self.curve.q() as usize;
        if self.is_big_y_free() {
            let c: Option<Vec<BiPoly>> = self.c.iter().map(|p| p.deflate(q)).collect();
            let c = c?;
            return Some(FPoly { curve: self.curve, c: [c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()] });
        }
        let (u, v) = FPoly::big_y_power(self.curve, 1);
        let (h2, h3) = if v.is_one() {
            (self.c[2].clone(), self.c[3].clone())
        } else {
            (self.c[2].div_exact(&v)?, self.c[3].div_exact(&v)?)
        };
        let c0 = self.c[0].sub(&h2.mul(&u));
        let c1 = self.c[1].sub(&h3.mul(&u));
        Some(FPoly { curve: self.curve, c: [c0.deflate(q)?, c1.deflate(q)?, h2.deflate(q)?, h3.deflate(q)?] })
    }

    /// Value at `X = x^Q`, `Y = y^Q` where `Q = q^k`.
    pub fn specialize(&self, k: u32) -> RingElem {
        let qk = (self.curve.q() as usize).pow(k);
        let lo = RingElem::new(self.curve, self.c[0].eval_power(qk), self.c[1].eval_power(qk));
        if self.is_big_y_free() {
            return lo;
        }
        let hi = RingElem::new(self.curve, self.c[2].eval_power(qk), self.c[3].eval_power(qk));
        lo.add(&hi.mul(&RingElem::y(self.curve).pow_q(k)))
    }

    /// Terms `(a, i, j, k, l)` for `a x^i y^j X^k Y^l`, highest `X` power
    /// first, then `Y`, then `y`, then `x`.
    pub fn terms(&self) -> Vec<(u8, usize, usize, usize, usize)> {
        let mut out = Vec::new();
        let top = self.x_degree_big().unwrap_or(0);
        for k in (0..=top).rev() {
            for l in [1, 0] {
                for j in [1, 0] {
                    let p = self.c[j + 2 * l].coeff(k);
                    for (i, &a) in p.coeffs().iter().enumerate().rev() {
                        if a != 0 {
                            out.push((a, i, j, k, l));
                        }
                    }
                }
            }
        }
        out
    }

    /// Render as a sum of monomials in the data-file syntax.
    pub fn render(&self) -> String {
        let f = self.curve.field;
        let terms = self.terms();
        if terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::with_capacity(terms.len());
        for (a, i, j, k, l) in terms {
            let mut factors = Vec::new();
            if a != 1 {
                factors.push(f.show(a));
            }
            match i {
                0 => {}
                1 => factors.push("x".into()),
                _ => factors.push(format!("x^{i}")),
            }
            if j == 1 {
                factors.push("y".into());
            }
            match k {
                0 => {}
                1 => factors.push("X".into()),
                _ => factors.push(format!("X^{k}")),
            }
            if l == 1 {
                factors.push("Y".into());
            }
            if factors.is_empty() {
                factors.push("1".into());
            }
            parts.push(factors.join("*"));
        }
        parts.join(" + ")
    }
}

impl std::fmt::Display for FPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render())
    }
}

impl std::fmt::Debug for FPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render())
    }
}

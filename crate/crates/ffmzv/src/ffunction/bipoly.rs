//! Polynomials in `F_q[x][X]`, stored as a list of coefficients in `x`
//! indexed by the power of `X`.

use crate::algebra::linalg::Field;
use crate::algebra::{Fq, Poly, Residue, ResidueField};
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BiPoly {
    field: Fq,
    c: Vec<Poly>,
}

impl BiPoly {
    pub fn zero(field: Fq) -> Self {
        BiPoly { field, c: Vec::new() }
    }

    pub fn one(field: Fq) -> Self {
        BiPoly::from_x(Poly::one(field))
    }

    /// A polynomial in `x` alone.
    pub fn from_x(p: Poly) -> Self {
        let field = p.field();
        if p.is_zero() {
            return BiPoly::zero(field);
        }
        BiPoly { field, c: vec![p] }
    }

    /// A polynomial in `X` with constant coefficients.
    pub fn from_big_x(p: &Poly) -> Self {
        let f = p.field();
        BiPoly::from_coeffs(f, p.coeffs().iter().map(|&a| Poly::constant(f, a)).collect())
    }

    /// `a(x) X^n`.
    pub fn monomial(a: Poly, n: usize) -> Self {
        let field = a.field();
        if a.is_zero() {
            return BiPoly::zero(field);
        }
        let mut c = vec![Poly::zero(field); n];
        c.push(a);
        BiPoly { field, c }
    }

    pub fn from_coeffs(field: Fq, mut c: Vec<Poly>) -> Self {
        while c.last().is_some_and(|p| p.is_zero()) {
            c.pop();
        }
        BiPoly { field, c }
    }

    pub fn field(&self) -> Fq {
        self.field
    }

    /// Coefficients in `x`, lowest power of `X` first.
    pub fn coeffs(&self) -> &[Poly] {
        &self.c
    }

    pub fn coeff(&self, n: usize) -> Poly {
        self.c.get(n).cloned().unwrap_or_else(|| Poly::zero(self.field))
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    /// Degree in `X`.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Largest degree in `x` over all coefficients (0 for zero).
    pub fn x_degree(&self) -> usize {
        self.c.iter().filter_map(|p| p.degree()).max().unwrap_or(0)
    }

    /// Free of `X`.
    pub fn is_x_only(&self) -> bool {
        self.c.len() <= 1
    }

    /// Coefficient of the highest power of `X`.
    pub fn lc(&self) -> Poly {
        self.c.last().cloned().unwrap_or_else(|| Poly::zero(self.field))
    }

    /// Number of nonzero coefficients in F_q.
    pub fn terms(&self) -> usize {
        self.c.iter().map(|p| p.coeffs().iter().filter(|&&a| a != 0).count()).sum()
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let c = (0..n)
            .map(|i| match (self.c.get(i), o.c.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        BiPoly::from_coeffs(self.field, c)
    }

    pub fn neg(&self) -> Self {
        BiPoly { field: self.field, c: self.c.iter().map(|p| -p).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, a: u8) -> Self {
        BiPoly::from_coeffs(self.field, self.c.iter().map(|p| p.scale(a)).collect())
    }

    /// Multiply by a polynomial in `x`.
    pub fn mul_x(&self, p: &Poly) -> Self {
        if p.is_one() {
            return self.clone();
        }
        BiPoly::from_coeffs(self.field, self.c.iter().map(|a| a * p).collect())
    }

    /// Multiply by `X^n`.
    pub fn shift(&self, n: usize) -> Self {
        if self.is_zero() || n == 0 {
            return self.clone();
        }
        let mut c = vec![Poly::zero(self.field); n];
        c.extend(self.c.iter().cloned());
        BiPoly { field: self.field, c }
    }

    /// Product by Kronecker substitution `X -> x^s` into one univariate
    /// product.
    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return BiPoly::zero(self.field);
        }
        if self.c.len() == 1 {
            return o.mul_x(&self.c[0]);
        }
        if o.c.len() == 1 {
            return self.mul_x(&o.c[0]);
        }
        let s = self.x_degree() + o.x_degree() + 1;
        let a = self.pack(s);
        let b = o.pack(s);
        let prod = &a * &b;
        BiPoly::unpack(self.field, prod.coeffs(), s)
    }

    fn pack(&self, s: usize) -> Poly {
        let mut v = vec![0u8; self.c.len() * s];
        for (j, p) in self.c.iter().enumerate() {
            v[j * s..j * s + p.coeffs().len()].copy_from_slice(p.coeffs());
        }
        Poly::from_coeffs(self.field, v)
    }

    fn unpack(field: Fq, v: &[u8], s: usize) -> Self {
        let c = v.chunks(s).map(|ch| Poly::from_coeffs(field, ch.to_vec())).collect();
        BiPoly::from_coeffs(field, c)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = BiPoly::one(self.field);
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

    /// `p(x, X^k)`.
    pub fn inflate(&self, k: usize) -> Self {
        if k == 1 || self.c.len() <= 1 {
            return self.clone();
        }
        let mut c = vec![Poly::zero(self.field); (self.c.len() - 1) * k + 1];
        for (i, p) in self.c.iter().enumerate() {
            c[i * k] = p.clone();
        }
        BiPoly { field: self.field, c }
    }

    /// If `p = r(x, X^k)` return `r`.
    pub fn deflate(&self, k: usize) -> Option<Self> {
        if self.c.iter().enumerate().any(|(i, p)| i % k != 0 && !p.is_zero()) {
            return None;
        }
        Some(BiPoly { field: self.field, c: self.c.iter().step_by(k).cloned().collect() })
    }

    /// `p(x, x^k)`.
    pub fn eval_power(&self, k: usize) -> Poly {
        let mut out = Poly::zero(self.field);
        for (i, p) in self.c.iter().enumerate() {
            out.add_scaled_shift(1, i * k, p);
        }
        out
    }

    /// Evaluate `X` at a polynomial in `x`.
    pub fn eval_at(&self, t: &Poly) -> Poly {
        let mut acc = Poly::zero(self.field);
        for p in self.c.iter().rev() {
            acc = &(&acc * t) + p;
        }
        acc
    }

    /// Greatest common divisor of the coefficients in `x`, monic.
    pub fn content(&self) -> Poly {
        let mut g = Poly::zero(self.field);
        for p in &self.c {
            g = g.gcd(p);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide every coefficient by a polynomial in `x`, if exact.
    pub fn div_x_exact(&self, p: &Poly) -> Option<Self> {
        if p.is_one() {
            return Some(self.clone());
        }
        let c = self.c.iter().map(|a| a.div_exact(p)).collect::<Option<Vec<_>>>()?;
        Some(BiPoly { field: self.field, c })
    }

    /// Exact quotient in `F_q[x][X]`, or `None` if `d` does not divide.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by zero");
        if self.is_zero() {
            return Some(self.clone());
        }
        if d.c.len() == 1 {
            return self.div_x_exact(&d.c[0]);
        }
        let n = self.c.len();
        let m = d.c.len();
        if n < m {
            return None;
        }
        let lc = d.lc();
        let mut r = self.c.clone();
        let mut q = vec![Poly::zero(self.field); n - m + 1];
        for k in (0..=n - m).rev() {
            let top = &r[k + m - 1];
            if top.is_zero() {
                continue;
            }
            let t = top.div_exact(&lc)?;
            for (j, dj) in d.c.iter().enumerate() {
                if !dj.is_zero() {
                    r[k + j].sub_assign_ref(&(&t * dj));
                }
            }
            q[k] = t;
        }
        if r.iter().any(|p| !p.is_zero()) {
            return None;
        }
        Some(BiPoly::from_coeffs(self.field, q))
    }

    /// Scale so the leading coefficient in `x` of the leading coefficient in
    /// `X` is one.
    pub fn make_monic(&self) -> (Self, u8) {
        let a = self.lc().lc();
        if a == 0 || a == 1 {
            return (self.clone(), 1);
        }
        let inv = self.field.inv(a);
        (self.scale(inv), inv)
    }

    fn reduce_mod(&self, k: &ResidueField) -> Vec<Residue> {
        let mut v: Vec<Residue> = self.c.iter().map(|p| k.from_poly(p)).collect();
        while v.last().is_some_and(|r| r.is_zero()) {
            v.pop();
        }
        v
    }

    /// Greatest common divisor, normalized by [`BiPoly::make_monic`].
    pub fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.make_monic().0;
        }
        if o.is_zero() {
            return self.make_monic().0;
        }
        let ca = self.content();
        let cb = o.content();
        let cont = ca.gcd(&cb);
        let pa = self.div_x_exact(&ca).unwrap();
        let pb = o.div_x_exact(&cb).unwrap();
        let g = primitive_gcd(&pa, &pb);
        g.mul_x(&cont).make_monic().0
    }
}

impl std::fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let terms: Vec<String> = self
            .c
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, p)| !p.is_zero())
            .map(|(i, p)| format!("({})X^{i}", crate::algebra::poly::render_poly(p, "x")))
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

/// Brown's modular algorithm for primitive inputs: gcds of the images in
/// `(F_q[x]/pi)[X]` for irreducible `pi`, scaled to the gcd of the leading
/// coefficients and combined by the Chinese remainder theorem, until the
/// primitive part of the lift divides both inputs.
fn primitive_gcd(a: &BiPoly, b: &BiPoly) -> BiPoly {
    let field = a.field;
    if a.is_x_only() || b.is_x_only() {
        return BiPoly::one(field);
    }
    let (a, b) = if a.c.len() >= b.c.len() { (a, b) } else { (b, a) };
    if a.div_exact(b).is_some() {
        return b.make_monic().0;
    }
    let gamma = a.lc().gcd(&b.lc());
    let bound = gamma.degree().unwrap() + a.x_degree().min(b.x_degree());
    let mut best: Option<usize> = None;
    let mut acc: Vec<Poly> = Vec::new();
    let mut modulus = Poly::one(field);
    let mut last: Option<Vec<Poly>> = None;
    for pi in primes(field) {
        if gamma.rem(&pi).is_zero() {
            continue;
        }
        let k = ResidueField::from_irreducible(pi.clone());
        let ga = a.reduce_mod(&k);
        let gb = b.reduce_mod(&k);
        let mut g = upoly_gcd(ga, gb);
        let deg = g.len() - 1;
        if deg == 0 {
            return BiPoly::one(field);
        }
        match best {
            Some(bd) if deg > bd => continue,
            Some(bd) if deg == bd => {}
            _ => {
                best = Some(deg);
                acc = vec![Poly::zero(field); deg + 1];
                modulus = Poly::one(field);
                last = None;
            }
        }
        let gm = k.from_poly(&gamma);
        for c in g.iter_mut() {
            *c = c.mul(&gm);
        }
        // CRT: acc = acc + M * ((g - acc) * M^-1 mod pi)
        let minv = k.from_poly(&modulus).inv().expect("coprime moduli");
        for (j, c) in acc.iter_mut().enumerate() {
            let diff = g[j].value() - &c.rem(&pi);
            let t = (&diff * minv.value()).rem(&pi);
            if !t.is_zero() {
                *c = &*c + &(&modulus * &t);
            }
        }
        modulus = &modulus * &pi;
        let stable = last.as_ref() == Some(&acc);
        if stable || modulus.degree().unwrap() > bound {
            let cand = BiPoly::from_coeffs(field, acc.clone());
            let cont = cand.content();
            let cand = cand.div_x_exact(&cont).unwrap();
            if a.div_exact(&cand).is_some() && b.div_exact(&cand).is_some() {
                return cand.make_monic().0;
            }
        }
        last = Some(acc.clone());
    }
    unreachable!("the prime supply is infinite")
}

fn upoly_rem<F: Field>(mut a: Vec<F>, b: &[F]) -> Vec<F> {
    let inv = b.last().unwrap().inv().unwrap();
    while a.len() >= b.len() {
        let t = a.last().unwrap().mul(&inv);
        let off = a.len() - b.len();
        for (j, bj) in b.iter().enumerate() {
            a[off + j] = a[off + j].sub(&t.mul(bj));
        }
        a.pop();
        while a.last().is_some_and(|c| c.is_zero()) {
            a.pop();
        }
    }
    a
}

/// Monic gcd of univariate polynomials (coefficient lists, low first).
fn upoly_gcd<F: Field>(mut a: Vec<F>, mut b: Vec<F>) -> Vec<F> {
    while !b.is_empty() {
        let r = upoly_rem(a, &b);
        a = b;
        b = r;
    }
    let inv = a.last().unwrap().inv().unwrap();
    a.iter().map(|c| c.mul(&inv)).collect()
}

/// Irreducible polynomials of increasing degree, starting where the residue
/// fields have a few hundred elements.
fn primes(field: Fq) -> impl Iterator<Item = Poly> {
    static CACHE: OnceLock<Mutex<HashMap<(Fq, usize), Vec<Poly>>>> = OnceLock::new();
    let start = match field.q() {
        2 => 8,
        3 => 5,
        _ => 4,
    };
    (start..).flat_map(move |m| {
        let cache = CACHE.get_or_init(Default::default);
        let list = cache.lock().unwrap().get(&(field, m)).cloned();
        let list = list.unwrap_or_else(|| {
            let l = irreducibles(field, m);
            cache.lock().unwrap().insert((field, m), l.clone());
            l
        });
        list.into_iter()
    })
}

fn irreducibles(field: Fq, m: usize) -> Vec<Poly> {
    let q = field.q() as u64;
    // sample at most this many per degree, spread over the code space
    const PER_DEGREE: usize = 64;
    let total = q.pow(m as u32);
    let step = (total / (4 * PER_DEGREE as u64)).max(1);
    let mut out = Vec::new();
    let mut code = 1;
    while code < total && out.len() < PER_DEGREE {
        let mut c = Vec::with_capacity(m + 1);
        let mut k = code;
        for _ in 0..m {
            c.push((k % q) as u8);
            k /= q;
        }
        c.push(1);
        let p = Poly::from_coeffs(field, c);
        if p.is_irreducible() {
            out.push(p);
        }
        code += step;
    }
    out
}

//! Residue fields F_q[x]/(pi) for an irreducible `pi`.
//!
//! Reducing a matrix over F_q(x) modulo a prime can only lower its rank, so a
//! full rank computed here certifies full rank over F_q(x) at a fraction of
//! the cost of exact elimination.

use super::field::Fq;
use super::linalg::Field;
use super::poly::Poly;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};
use std::sync::Arc;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueField {
    modulus: Arc<Poly>,
}

impl ResidueField {
    /// The field F_q[x]/(pi); `pi` must be irreducible.
    pub fn new(pi: Poly) -> Result<Self> {
        if !pi.is_irreducible() {
            return Err(Error::InvalidSpec(format!("{pi} is not irreducible")));
        }
        Ok(ResidueField { modulus: Arc::new(pi.monic()) })
    }

    /// Skip the irreducibility test for a modulus already known to pass it.
    pub(crate) fn from_irreducible(pi: Poly) -> Self {
        ResidueField { modulus: Arc::new(pi.monic()) }
    }

    /// The first irreducible of degree `n` in lexicographic coefficient order
    /// (constant term varying slowest).
    pub fn of_degree(field: Fq, n: usize) -> Self {
        let q = field.q() as u64;
        let mut code: u64 = 1;
        loop {
            let mut c = Vec::with_capacity(n + 1);
            let mut k = code;
            for _ in 0..n {
                c.push((k % q) as u8);
                k /= q;
            }
            c.push(1);
            let p = Poly::from_coeffs(field, c);
            if p.is_irreducible() {
                return ResidueField { modulus: Arc::new(p) };
            }
            code += 1;
        }
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn from_poly(&self, p: &Poly) -> Residue {
        Residue { modulus: self.modulus.clone(), value: p.rem(&self.modulus) }
    }

    /// Image of a rational function; fails if the denominator vanishes.
    pub fn reduce(&self, r: &RatFunc) -> Result<Residue> {
        let d = self.from_poly(r.den());
        let inv = d.inv().ok_or_else(|| Error::NotInvertible(format!("{} modulo {}", r.den(), self.modulus)))?;
        Ok(self.from_poly(r.num()).mul(&inv))
    }
}

#[derive(Clone, Debug)]
pub struct Residue {
    modulus: Arc<Poly>,
    value: Poly,
}

impl PartialEq for Residue {
    fn eq(&self, o: &Self) -> bool {
        self.value == o.value
    }
}

impl Residue {
    pub fn value(&self) -> &Poly {
        &self.value
    }
}

impl Field for Residue {
    fn zero_like(&self) -> Self {
        Residue { modulus: self.modulus.clone(), value: Poly::zero(self.value.field()) }
    }
    fn one_like(&self) -> Self {
        Residue { modulus: self.modulus.clone(), value: Poly::one(self.value.field()) }
    }
    fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        Residue { modulus: self.modulus.clone(), value: &self.value + &o.value }
    }
    fn neg(&self) -> Self {
        Residue { modulus: self.modulus.clone(), value: -&self.value }
    }
    fn mul(&self, o: &Self) -> Self {
        Residue { modulus: self.modulus.clone(), value: (&self.value * &o.value).rem(&self.modulus) }
    }
    fn inv(&self) -> Option<Self> {
        self.value.inv_mod(&self.modulus).map(|v| Residue { modulus: self.modulus.clone(), value: v })
    }
}

//! The prime-power fields F_2, F_3 and F_4.
//!
//! Elements are stored as small integer codes in a `u8`. For F_2 and F_3 the
//! code is the residue. For F_4 = F_2(w) with w^2 + w + 1 = 0 the code is
//! `a + 2b` for the element `a + b*w`, so `2` is `w` and `3` is `w + 1`.
//! This encoding makes F_4 addition a plain XOR.

use serde::{Deserialize, Serialize};
use std::fmt;

/// One of the supported constant fields.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Fq {
    F2,
    F3,
    F4,
}

const F4_MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];
const F4_INV: [u8; 4] = [0, 1, 3, 2];

impl Fq {
    /// Field from its size; `None` unless `q` is 2, 3 or 4.
    pub fn from_q(q: u32) -> Option<Fq> {
        match q {
            2 => Some(Fq::F2),
            3 => Some(Fq::F3),
            4 => Some(Fq::F4),
            _ => None,
        }
    }

    #[inline]
    pub fn q(self) -> u32 {
        match self {
            Fq::F2 => 2,
            Fq::F3 => 3,
            Fq::F4 => 4,
        }
    }

    /// The characteristic.
    #[inline]
    pub fn p(self) -> u32 {
        match self {
            Fq::F3 => 3,
            _ => 2,
        }
    }

    /// All elements in code order, zero first.
    pub fn elements(self) -> impl Iterator<Item = u8> {
        0..self.q() as u8
    }

    /// Nonzero elements in code order.
    pub fn units(self) -> impl Iterator<Item = u8> {
        1..self.q() as u8
    }

    #[inline]
    pub fn add(self, a: u8, b: u8) -> u8 {
        match self {
            Fq::F3 => {
                let t = a + b;
                if t >= 3 {
                    t - 3
                } else {
                    t
                }
            }
            _ => a ^ b,
        }
    }

    #[inline]
    pub fn neg(self, a: u8) -> u8 {
        match self {
            Fq::F3 => {
                if a == 0 {
                    0
                } else {
                    3 - a
                }
            }
            _ => a,
        }
    }

    #[inline]
    pub fn sub(self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        match self {
            Fq::F2 => a & b,
            Fq::F3 => (a * b) % 3,
            Fq::F4 => F4_MUL[a as usize][b as usize],
        }
    }

    /// Multiplicative inverse. Panics on zero.
    #[inline]
    pub fn inv(self, a: u8) -> u8 {
        assert!(a != 0, "inverse of zero in {self}");
        match self {
            Fq::F2 => 1,
            Fq::F3 => a,
            Fq::F4 => F4_INV[a as usize],
        }
    }

    pub fn pow(self, a: u8, mut e: u64) -> u8 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// The absolute Frobenius `a -> a^p`.
    #[inline]
    pub fn frob(self, a: u8) -> u8 {
        match self {
            Fq::F4 => F4_MUL[a as usize][a as usize],
            _ => a,
        }
    }

    /// Reduce an integer into the field. Only meaningful for prime fields;
    /// for F_4 the integer is read modulo 2.
    pub fn from_int(self, n: i64) -> u8 {
        let p = self.p() as i64;
        n.rem_euclid(p) as u8
    }

    /// Whether `code` is a valid element code.
    pub fn contains(self, code: u8) -> bool {
        (code as u32) < self.q()
    }

    /// Human-readable element, `w` and `w+1` for the F_4 generators.
    pub fn show(self, a: u8) -> String {
        match (self, a) {
            (Fq::F4, 2) => "w".to_string(),
            (Fq::F4, 3) => "(w+1)".to_string(),
            _ => a.to_string(),
        }
    }
}

impl fmt::Display for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.q())
    }
}

/// `acc[i] += c * b[i]` over the given field.
///
/// This is the inner loop of multiplication and division; each arm is a
/// straight-line loop the compiler can vectorize.
#[inline]
pub(crate) fn axpy(field: Fq, acc: &mut [u8], c: u8, b: &[u8]) {
    debug_assert!(acc.len() >= b.len());
    let acc = &mut acc[..b.len()];
    match (field, c) {
        (_, 0) => {}
        (Fq::F2, _) | (Fq::F4, 1) => {
            for (a, &x) in acc.iter_mut().zip(b) {
                *a ^= x;
            }
        }
        (Fq::F4, 2) => {
            for (a, &x) in acc.iter_mut().zip(b) {
                *a ^= mul_w(x);
            }
        }
        (Fq::F4, _) => {
            for (a, &x) in acc.iter_mut().zip(b) {
                *a ^= mul_w(mul_w(x));
            }
        }
        (Fq::F3, 1) => {
            for (a, &x) in acc.iter_mut().zip(b) {
                let t = *a + x;
                *a = if t >= 3 { t - 3 } else { t };
            }
        }
        (Fq::F3, _) => {
            for (a, &x) in acc.iter_mut().zip(b) {
                let t = *a + 3 - x;
                *a = if t >= 3 { t - 3 } else { t };
            }
        }
    }
}

#[inline(always)]
fn mul_w(x: u8) -> u8 {
    // (a + b w) w = b + (a + b) w
    ((x >> 1) & 1) | (((x ^ (x >> 1)) & 1) << 1)
}

/// `acc[i] *= c` in place.
pub(crate) fn scale(field: Fq, acc: &mut [u8], c: u8) {
    if c == 1 {
        return;
    }
    for a in acc.iter_mut() {
        *a = field.mul(*a, c);
    }
}

/// A field element bundled with its field, for generic code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldElem {
    pub field: Fq,
    pub value: u8,
}

impl FieldElem {
    pub fn new(field: Fq, value: u8) -> Self {
        assert!(field.contains(value), "{value} is not an element of {field}");
        FieldElem { field, value }
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.show(self.value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_exhaustive() {
        for f in [Fq::F2, Fq::F3, Fq::F4] {
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements() {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                    }
                }
            }
        }
    }

    #[test]
    fn f4_generator_relation() {
        let f = Fq::F4;
        // w^2 + w + 1 = 0
        assert_eq!(f.add(f.add(f.mul(2, 2), 2), 1), 0);
        assert_eq!(f.pow(2, 3), 1);
        for a in f.elements() {
            assert_eq!(f.frob(a), f.pow(a, 2));
            assert_eq!(f.frob(f.frob(a)), a);
        }
    }

    #[test]
    fn axpy_matches_scalar_ops() {
        for f in [Fq::F2, Fq::F3, Fq::F4] {
            let b: Vec<u8> = (0..40).map(|i| (i * 7 % f.q()) as u8).collect();
            for c in f.elements() {
                let mut acc: Vec<u8> = (0..40).map(|i| (i * 5 % f.q()) as u8).collect();
                let expect: Vec<u8> = acc.iter().zip(&b).map(|(&a, &x)| f.add(a, f.mul(c, x))).collect();
                axpy(f, &mut acc, c, &b);
                assert_eq!(acc, expect, "{f} c={c}");
            }
        }
    }
}

//! Closed forms in genus zero, where `A = F_q[t]` (the variable is `x`).

use super::exact::PowerSums;
use crate::algebra::{Fq, Poly, RatFunc};
use crate::curve::{Curve, CurveId};
use crate::error::{Error, Result};

/// Largest exponent `q^m` the oracle will build.
const MAX_EXPONENT: u64 = 1 << 22;

/// `[n] = t^(q^n) - t`.
pub fn bracket(field: Fq, n: u32) -> Poly {
    let qn = (field.q() as usize).pow(n);
    &Poly::monomial(field, 1, qn) - &Poly::x(field)
}

/// `(q^n - 1, (q-1) q^n, ..., (q-1) q^(n+k))`.
pub fn genus_zero_family_tuple(q: u32, n: u32, k: u32) -> Vec<u32> {
    let mut t = vec![q.pow(n) - 1];
    t.extend((0..=k).map(|j| (q - 1) * q.pow(n + j)));
    t
}

/// `[n+k] ... [n] / ([1]^(q^(n+k)) [2]^(q^(n+k-1)) ... [k+1]^(q^n))`, the
/// ratio of the family tuple's value to `zeta(q^(n+k+1) - 1)`.
pub fn genus_zero_family_oracle(q: u32, n: u32, k: u32) -> Result<RatFunc> {
    let field = match q {
        2 => Fq::F2,
        3 => Fq::F3,
        _ => return Err(Error::Unsupported(format!("the genus zero oracle covers q = 2, 3, not {q}"))),
    };
    if n == 0 {
        return Err(Error::InvalidSpec("the family starts at n = 1".into()));
    }
    if (q as u64).checked_pow(n + k + 1).is_none_or(|e| e > MAX_EXPONENT) {
        return Err(Error::Unsupported(format!("q^{} is too large to expand", n + k + 1)));
    }
    let mut num = Poly::one(field);
    for j in n..=n + k {
        num = &num * &bracket(field, j);
    }
    let mut den = Poly::one(field);
    for i in 1..=k + 1 {
        let e = (q as u64).pow(n + k + 1 - i);
        den = &den * &bracket(field, i).pow(e);
    }
    Ok(RatFunc::new(num, den))
}

/// `S_d(q-1, q(q-1)) = S_(d-1)(q^2-1) / (t - t^q)^(q-1)`, exactly.
pub fn genus_zero_identity_holds(q: u32, d: u32) -> Result<bool> {
    let id = match q {
        2 => CurveId::Genus0Q2,
        3 => CurveId::Genus0Q3,
        _ => return Err(Error::Unsupported(format!("no genus zero ring for q = {q}"))),
    };
    if d == 0 {
        return Err(Error::OutOfRange { d: 0, min: 1 });
    }
    let c = Curve::builtin(id);
    let s = PowerSums::shared(c);
    let lhs = s.at(d, &[q - 1, q * (q - 1)]);
    let f = c.field;
    let b = -&bracket(f, 1);
    let rhs = s.power_sum(d - 1, q * q - 1).div_poly(&b.pow(q as u64 - 1));
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_instances() {
        let f2 = Fq::F2;
        let r = genus_zero_family_oracle(2, 1, 0).unwrap();
        assert_eq!(r, RatFunc::new(Poly::one(f2), Poly::from_ints(f2, &[0, 1, 1])));
        let f3 = Fq::F3;
        let b1 = bracket(f3, 1);
        let r = genus_zero_family_oracle(3, 1, 0).unwrap();
        assert_eq!(r, RatFunc::new(Poly::one(f3), &b1 * &b1));
        assert_eq!(genus_zero_family_tuple(2, 1, 1), vec![1, 2, 4]);
        assert_eq!(genus_zero_family_tuple(3, 1, 0), vec![2, 6]);
        assert!(genus_zero_family_oracle(5, 1, 0).is_err());
    }

    #[test]
    fn identity_low_degrees() {
        for q in [2, 3] {
            for d in 1..5 {
                assert!(genus_zero_identity_holds(q, d).unwrap(), "q={q} d={d}");
            }
        }
    }
}

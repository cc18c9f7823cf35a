use super::{Curve, RingElem};
use crate::algebra::Poly;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// A polynomial subring over which `A` is finite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Base {
    /// F_q[x], of index 2.
    #[serde(rename = "x")]
    X,
    /// F_q[y], of index `deg f`.
    #[serde(rename = "y")]
    Y,
}

impl Base {
    pub fn parse(s: &str) -> Result<Base> {
        match s {
            "x" | "X" => Ok(Base::X),
            "y" | "Y" => Ok(Base::Y),
            _ => Err(Error::Parse(format!("base must be x or y, got `{s}`"))),
        }
    }

    pub fn var(self) -> &'static str {
        match self {
            Base::X => "x",
            Base::Y => "y",
        }
    }
}

/// Monic generator of the norm ideal `N_{A/F_q[x]}(a)`.
pub fn norm_to_x(a: &RingElem) -> Poly {
    a.norm().monic()
}

/// Monic generator of `N_{A/F_q[y]}(a)`, as a polynomial in `y`.
///
/// `A` is free over F_q[y] with basis `1, x, ..., x^(n-1)`; the norm is the
/// determinant of multiplication by `a`, computed by fraction-free
/// elimination over F_q[y].
pub fn norm_to_y(a: &RingElem) -> Result<Poly> {
    let c = a.curve();
    if !c.has_y() {
        return Err(Error::Unsupported("genus zero rings have no y".into()));
    }
    let n = c.f().degree().unwrap();
    let fld = c.field;
    // polynomials in x with coefficients in F_q[y]
    let ypoly = Poly::x(fld);
    let a_of_y: Vec<Poly> = {
        let mut v = vec![Poly::zero(fld); a.p0().coeffs().len().max(a.p1().coeffs().len())];
        for (i, &co) in a.p0().coeffs().iter().enumerate() {
            v[i].add_assign_ref(&Poly::constant(fld, co));
        }
        for (i, &co) in a.p1().coeffs().iter().enumerate() {
            v[i].add_assign_ref(&ypoly.scale(co));
        }
        v
    };
    // x^n = -(f minus its leading term) + y^2 + a y
    let fcoef = c.f();
    let mut xn: Vec<Poly> = (0..n).map(|i| Poly::constant(fld, fld.neg(fcoef.coeff(i)))).collect();
    xn[0].add_assign_ref(&(&(&ypoly * &ypoly) + &ypoly.scale(c.a)));
    let reduce = |mut v: Vec<Poly>| -> Vec<Poly> {
        while v.len() > n {
            let top = v.pop().unwrap();
            let k = v.len() - n;
            for (i, t) in xn.iter().enumerate() {
                let add = &top * t;
                v[k + i].add_assign_ref(&add);
            }
        }
        v.resize(n, Poly::zero(fld));
        v
    };
    let mut m: Vec<Vec<Poly>> = Vec::with_capacity(n);
    let mut cur = reduce(a_of_y.clone());
    for _ in 0..n {
        m.push(cur.clone());
        let mut shifted = vec![Poly::zero(fld)];
        shifted.extend(cur);
        cur = reduce(shifted);
    }
    Ok(bareiss_det(m).monic())
}

/// Determinant over F_q[y] by Bareiss elimination.
fn bareiss_det(mut m: Vec<Vec<Poly>>) -> Poly {
    let n = m.len();
    let fld = m[0][0].field();
    let mut sign_flip = false;
    let mut prev = Poly::one(fld);
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return Poly::zero(fld);
            };
            m.swap(k, r);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = t.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = Poly::zero(fld);
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign_flip {
        -&d
    } else {
        d
    }
}

/// Whether the relative identity `zeta_A(s) = zeta_{F_q[t]}(p s)` applies:
/// the extension must be Galois of degree `p`.
pub fn galois_of_degree_p(curve: Curve, base: Base) -> bool {
    if !curve.has_y() {
        return false;
    }
    match base {
        Base::X => curve.field.p() == 2,
        Base::Y => curve.field.p() == 3 && curve.f().degree() == Some(3),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::CurveId;

    #[test]
    fn norms_of_x_over_y() {
        let c = Curve::builtin(CurveId::CaseI);
        let f = c.field;
        let x = RingElem::x(c);
        // x^3 + x = y^2 + y + 1
        let expect = Poly::from_ints(f, &[1, 1, 1]);
        assert_eq!(norm_to_y(&x).unwrap(), expect);
        let x1 = RingElem::from_poly(c, Poly::from_ints(f, &[1, 1]));
        assert_eq!(norm_to_y(&x1).unwrap(), expect);
    }

    #[test]
    fn norm_to_y_is_multiplicative() {
        for id in [CurveId::CaseI, CurveId::CaseII, CurveId::CaseIII, CurveId::CaseIV] {
            let c = Curve::builtin(id);
            let f = c.field;
            let a = RingElem::new(c, Poly::from_ints(f, &[1, 0, 1]), Poly::from_ints(f, &[1, 1]));
            let b = RingElem::new(c, Poly::from_ints(f, &[0, 1, 1, 1]), Poly::from_ints(f, &[1]));
            let lhs = norm_to_y(&a.mul(&b)).unwrap();
            let rhs = (&norm_to_y(&a).unwrap() * &norm_to_y(&b).unwrap()).monic();
            assert_eq!(lhs, rhs, "{id}");
            // norm of an element of F_q[y] is its n-th power
            let y = RingElem::y(c);
            let n = c.f().degree().unwrap() as u64;
            assert_eq!(norm_to_y(&y).unwrap(), Poly::x(f).pow(n));
        }
    }
}

//! Coordinate rings of the class-number-one curves.
//!
//! Each ring is `A = F_q[x, y]/(y^2 + a*y - f(x))` with `f` monic of odd
//! degree `2g + 1`, or the polynomial ring `F_q[t]` in genus zero (written
//! with the variable `x`). The place at infinity gives the degree
//! `deg x = 2`, `deg y = 2g + 1`, and the sign is normalized so both `x` and
//! `y` are monic. Because even and odd degrees never collide, every element
//! `p0(x) + y*p1(x)` has a single dominant monomial.

mod infinity;
mod kelem;
mod monic;
mod norm;
mod ring;

pub use infinity::InfinitySeries;
pub use kelem::KElem;
pub use monic::{leading_monomial, lower_basis, monic_count, monic_elements};
pub use norm::{galois_of_degree_p, norm_to_x, norm_to_y, Base};
pub use ring::RingElem;

use crate::algebra::{Fq, Poly};
use crate::data;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// The built-in curves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CurveId {
    #[serde(rename = "genus0-q2")]
    Genus0Q2,
    #[serde(rename = "genus0-q3")]
    Genus0Q3,
    #[serde(rename = "case-i")]
    CaseI,
    #[serde(rename = "case-ii")]
    CaseII,
    #[serde(rename = "case-iii")]
    CaseIII,
    #[serde(rename = "case-iv")]
    CaseIV,
}

impl CurveId {
    pub const ALL: [CurveId; 6] =
        [CurveId::Genus0Q2, CurveId::Genus0Q3, CurveId::CaseI, CurveId::CaseII, CurveId::CaseIII, CurveId::CaseIV];

    pub fn name(self) -> &'static str {
        match self {
            CurveId::Genus0Q2 => "genus0-q2",
            CurveId::Genus0Q3 => "genus0-q3",
            CurveId::CaseI => "case-i",
            CurveId::CaseII => "case-ii",
            CurveId::CaseIII => "case-iii",
            CurveId::CaseIV => "case-iv",
        }
    }

    pub fn parse(s: &str) -> Result<CurveId> {
        CurveId::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| Error::UnknownCurve(s.to_string()))
    }
}

impl fmt::Display for CurveId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `y^2 + a*y = f(x)`, coefficients of `f` lowest degree first as field codes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub a: u8,
    pub f: Vec<u8>,
}

/// Serializable description of a curve, as stored in the data directory.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveSpec {
    pub id: CurveId,
    pub q: u32,
    pub relation: Option<Relation>,
    pub weight_x: u32,
    pub weight_y: Option<u32>,
    pub specialization_offset: i32,
}

impl CurveSpec {
    pub fn from_json(text: &str) -> Result<CurveSpec> {
        let spec: CurveSpec = serde_json::from_str(text).map_err(|e| Error::InvalidSpec(e.to_string()))?;
        spec.curve()?;
        Ok(spec)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("curve spec serializes")
    }

    /// Validate and build the compact runtime form.
    pub fn curve(&self) -> Result<Curve> {
        let field = Fq::from_q(self.q).ok_or_else(|| Error::InvalidSpec(format!("q = {} is not 2, 3 or 4", self.q)))?;
        let Some(rel) = &self.relation else {
            if self.weight_y.is_some() || self.weight_x != 1 {
                return Err(Error::InvalidSpec("genus zero rings have weight_x = 1 and no y".into()));
            }
            return Ok(Curve {
                id: self.id,
                field,
                a: 0,
                f: [0; 6],
                fdeg: 0,
                has_y: false,
                wx: 1,
                wy: 0,
                offset: self.specialization_offset,
            });
        };
        if rel.a > 1 {
            return Err(Error::InvalidSpec("relation coefficient a must be 0 or 1".into()));
        }
        if rel.f.iter().any(|&c| !field.contains(c)) {
            return Err(Error::InvalidSpec(format!("coefficient outside {field}")));
        }
        let fp = Poly::from_coeffs(field, rel.f.clone());
        let fdeg = fp.degree().unwrap_or(0);
        if fdeg.is_multiple_of(2) || fdeg > 5 || !fp.is_monic() {
            return Err(Error::InvalidSpec("f must be monic of degree 1, 3 or 5".into()));
        }
        if field.p() == 3 && rel.a != 0 {
            return Err(Error::InvalidSpec("in odd characteristic use the form y^2 = f(x)".into()));
        }
        if field.p() == 2 && rel.a == 0 {
            return Err(Error::InvalidSpec("in characteristic 2 the relation needs a = 1".into()));
        }
        let wy = fdeg as u32;
        if self.weight_x != 2 || self.weight_y != Some(wy) {
            return Err(Error::InvalidSpec(format!("expected weights (2, {wy})")));
        }
        let mut f = [0u8; 6];
        f[..rel.f.len().min(6)].copy_from_slice(&rel.f[..rel.f.len().min(6)]);
        let curve = Curve { id: self.id, field, a: rel.a, f, fdeg: fdeg as u8, has_y: true, wx: 2, wy, offset: self.specialization_offset };
        if !curve.is_smooth() {
            return Err(Error::InvalidSpec("the affine curve is singular".into()));
        }
        Ok(curve)
    }
}

/// Compact, copyable runtime form of a [`CurveSpec`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Curve {
    pub id: CurveId,
    pub field: Fq,
    /// Coefficient of `y` in the relation.
    pub a: u8,
    f: [u8; 6],
    fdeg: u8,
    has_y: bool,
    wx: u32,
    wy: u32,
    offset: i32,
}

impl Curve {
    /// One of the built-in curves (honouring `FFMZV_DATA` if set).
    pub fn builtin(id: CurveId) -> Curve {
        load_spec(id).and_then(|s| s.curve()).unwrap_or_else(|e| panic!("curve {id}: {e}"))
    }

    pub fn by_name(name: &str) -> Result<Curve> {
        load_spec(CurveId::parse(name)?)?.curve()
    }

    pub fn q(&self) -> u32 {
        self.field.q()
    }

    pub fn genus(&self) -> u32 {
        if self.has_y {
            (self.fdeg as u32 - 1) / 2
        } else {
            0
        }
    }

    pub fn has_y(&self) -> bool {
        self.has_y
    }

    /// Degree of `x` at infinity.
    pub fn weight_x(&self) -> u32 {
        self.wx
    }

    /// Degree of `y` at infinity (zero when there is no `y`).
    pub fn weight_y(&self) -> u32 {
        self.wy
    }

    pub fn specialization_offset(&self) -> i32 {
        self.offset
    }

    /// `f(x)` as a polynomial.
    pub fn f(&self) -> Poly {
        Poly::from_coeffs(self.field, self.f[..=self.fdeg as usize].to_vec())
    }

    /// `a` as a constant polynomial.
    pub fn a_poly(&self) -> Poly {
        Poly::constant(self.field, self.a)
    }

    /// Whether an element of degree `d` exists.
    pub fn degree_attained(&self, d: u32) -> bool {
        if !self.has_y {
            return true;
        }
        d.is_multiple_of(2) || d >= self.wy
    }

    /// `y^p = u(x) + y*v(x)`, used by the Frobenius.
    pub fn y_pow_p(&self) -> (Poly, Poly) {
        let y = RingElem::y(*self);
        let yp = y.pow(self.field.p() as u64);
        (yp.p0().clone(), yp.p1().clone())
    }

    /// Smoothness of the affine model: no common zero of the relation and its
    /// partial derivatives over the algebraic closure, checked through the
    /// discriminant-like resultant conditions that apply to these shapes.
    fn is_smooth(&self) -> bool {
        let f = self.f();
        if self.field.p() == 2 {
            // y^2 + y = f(x): the y-partial is the constant 1
            true
        } else {
            f.is_squarefree()
        }
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.has_y {
            return write!(fm, "{} ({}[x])", self.id, self.field);
        }
        let ay = if self.a == 1 { " + y" } else { "" };
        write!(fm, "{} (y^2{ay} = {} over {})", self.id, self.f(), self.field)
    }
}

/// Load the spec for a built-in id from the data directory.
pub fn load_spec(id: CurveId) -> Result<CurveSpec> {
    let text = data::read_data_file(&format!("curves/{}.json", id.name()))?;
    let spec = CurveSpec::from_json(&text)?;
    if spec.id != id {
        return Err(Error::InvalidSpec(format!("file for {id} declares id {}", spec.id)));
    }
    Ok(spec)
}

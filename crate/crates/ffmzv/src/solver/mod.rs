//! Frobenius difference equations solved by a polynomial ansatz.
//!
//! The unknown is `Z = sum a_k X^k + Y sum b_m X^m` with `a_k, b_m` in `K`.
//! After clearing denominators every coefficient of `X^n` and `Y X^n`
//! gives one linear equation over `K`.

pub mod replay;

use crate::algebra::{linear_solve, Matrix, Poly, Solution};
use crate::curve::{Curve, KElem};
use crate::error::{Error, Result};
use crate::ffunction::{BiPoly, FFunction, FPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Form {
    /// `Z^(1) - c Z = R`
    Standard,
    /// `Z^(1) = c (Z + R)`
    SumBelow,
}

#[derive(Clone, Debug)]
pub struct DifferenceEquation {
    pub c: FFunction,
    pub r: FFunction,
    pub form: Form,
    /// Maximal `X` degrees of the plain part and of the part times `Y`.
    /// `None` picks a bound from the degrees of `c` and `R`.
    pub ansatz: Option<(usize, usize)>,
}

#[derive(Clone, Debug)]
pub enum Outcome {
    Unique(FFunction),
    Underdetermined { particular: FFunction, kernel: Vec<FFunction> },
    Inconsistent,
}

impl Outcome {
    pub fn unique(&self) -> Option<&FFunction> {
        match self {
            Outcome::Unique(f) => Some(f),
            _ => None,
        }
    }

    pub fn kernel_dim(&self) -> usize {
        match self {
            Outcome::Underdetermined { kernel, .. } => kernel.len(),
            _ => 0,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Outcome::Unique(_) => "unique",
            Outcome::Underdetermined { .. } => "underdetermined",
            Outcome::Inconsistent => "inconsistent",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SolveReport {
    pub outcome: Outcome,
    pub ansatz: (usize, usize),
    pub unknowns: usize,
    /// Coefficient positions that are not identically zero.
    pub equations: usize,
}

impl DifferenceEquation {
    pub fn new(c: FFunction, r: FFunction, form: Form, ansatz: Option<(usize, usize)>) -> Self {
        DifferenceEquation { c, r, form, ansatz }
    }

    pub fn curve(&self) -> Curve {
        self.c.curve()
    }

    /// The right side in standard form.
    fn rhs(&self) -> FFunction {
        match self.form {
            Form::Standard => self.r.clone(),
            Form::SumBelow => self.c.mul(&self.r),
        }
    }

    /// Whether `z` solves the equation as an identity of functions.
    pub fn is_solution(&self, z: &FFunction) -> bool {
        z.twist(1).sub(&self.c.mul(z)) == self.rhs()
    }
}

const SLACK: usize = 4;

/// Solve `eq`, using the default bound twice with growing slack when no
/// ansatz is given.
pub fn solve_difference(eq: &DifferenceEquation) -> Result<SolveReport> {
    if let Some(a) = eq.ansatz {
        return solve_with(eq, a);
    }
    let first = solve_with(eq, default_ansatz(eq, SLACK)?)?;
    if !matches!(first.outcome, Outcome::Inconsistent) {
        return Ok(first);
    }
    solve_with(eq, default_ansatz(eq, 2 * SLACK)?)
}

fn at_zero(f: &FFunction) -> Result<(FPoly, BiPoly)> {
    if f.offset() < 0 && !f.is_constant() {
        return Err(Error::Unsupported(format!("coefficient at offset {} in a difference equation", f.offset())));
    }
    let f = f.lowered(0);
    Ok((f.num().clone(), f.den().clone()))
}

fn lcm(a: &BiPoly, b: &BiPoly) -> BiPoly {
    let g = a.gcd(b);
    a.div_exact(&g).expect("gcd divides").mul(b)
}

/// Weighted degree of the top capital term, in units of `deg x`.
fn weight(curve: Curve, p: &FPoly) -> Option<i64> {
    let (wx, wy) = (curve.weight_x() as i64, curve.weight_y() as i64);
    let c = p.coords();
    let plain = c[0].degree().max(c[1].degree()).map(|d| d as i64 * wx);
    let with_y = c[2].degree().max(c[3].degree()).map(|d| d as i64 * wx + wy);
    plain.max(with_y)
}

struct Cleared {
    /// Multiplies `Z^(1)`.
    lead: BiPoly,
    /// Multiplies `Z`.
    c: FPoly,
    rhs: FPoly,
}

fn clear(eq: &DifferenceEquation) -> Result<Cleared> {
    let (nc, dc) = at_zero(&eq.c)?;
    let (nr, dr) = at_zero(&eq.rhs())?;
    let l = lcm(&dc, &dr);
    let c = nc.mul_bipoly(&l.div_exact(&dc).expect("lcm"));
    let rhs = nr.mul_bipoly(&l.div_exact(&dr).expect("lcm"));
    Ok(Cleared { lead: l, c, rhs })
}

fn default_ansatz(eq: &DifferenceEquation, slack: usize) -> Result<(usize, usize)> {
    let curve = eq.curve();
    let cl = clear(eq)?;
    let q = curve.q() as i64;
    let wx = curve.weight_x() as i64;
    let l = cl.lead.degree().unwrap_or(0) as i64 * wx;
    let cc = weight(curve, &cl.c).unwrap_or(0);
    let r = weight(curve, &cl.rhs).unwrap_or(0);
    // the top of Z^(1) or of c Z has to match the top of R
    let z = ((r - l).div_euclid(q)).max(r - cc).max(0);
    let nx = (z / wx) as usize + slack;
    let ny = if curve.has_y() { ((z - curve.weight_y() as i64).max(0) / wx) as usize + slack } else { 0 };
    Ok((nx, ny))
}

fn basis(curve: Curve, ansatz: (usize, usize)) -> Vec<FPoly> {
    let mut out: Vec<FPoly> = (0..=ansatz.0).map(|k| FPoly::monomial(curve, 1, 0, 0, k, 0)).collect();
    if curve.has_y() {
        out.extend((0..=ansatz.1).map(|m| FPoly::monomial(curve, 1, 0, 0, m, 1)));
    }
    out
}

/// The coefficients of `X^n Y^l` as elements of `K`, indexed by `(n, l)`.
fn positions(p: &FPoly) -> Vec<((usize, usize), KElem)> {
    let curve = p.curve();
    let c = p.coords();
    let top = p.x_degree_big().unwrap_or(0);
    let mut out = Vec::new();
    for n in 0..=top {
        for l in 0..2 {
            let (a, b) = (c[2 * l].coeff(n), c[2 * l + 1].coeff(n));
            if !a.is_zero() || !b.is_zero() {
                out.push(((n, l), KElem::new(curve, a, b, Poly::one(curve.field))));
            }
        }
    }
    out
}

fn solve_with(eq: &DifferenceEquation, ansatz: (usize, usize)) -> Result<SolveReport> {
    let curve = eq.curve();
    let cl = clear(eq)?;
    let basis = basis(curve, ansatz);
    let cols: Vec<FPoly> = basis.iter().map(|e| e.substitute(1).mul_bipoly(&cl.lead).sub(&cl.c.mul(e))).collect();
    let mut rows: Vec<(usize, usize)> = Vec::new();
    let mut entries = Vec::new();
    for (j, col) in cols.iter().enumerate() {
        for (pos, v) in positions(col) {
            rows.push(pos);
            entries.push((pos, j, v));
        }
    }
    let rhs_entries = positions(&cl.rhs);
    rows.extend(rhs_entries.iter().map(|(p, _)| *p));
    rows.sort_unstable_by(|a, b| b.cmp(a));
    rows.dedup();
    let index = |p: &(usize, usize)| rows.binary_search_by(|r| p.cmp(r)).expect("row registered");
    let zero = KElem::zero(curve);
    let mut m = Matrix::zeros(rows.len(), basis.len(), &zero);
    for (pos, j, v) in entries {
        m.set(index(&pos), j, v);
    }
    let mut b = vec![zero.clone(); rows.len()];
    for (pos, v) in rhs_entries {
        b[index(&pos)] = v;
    }
    let unknowns = basis.len();
    let equations = rows.len();
    let outcome = match linear_solve(&m, &b)? {
        Solution::Inconsistent => Outcome::Inconsistent,
        Solution::Unique(v) => {
            let z = assemble(curve, &basis, &v)?;
            if !eq.is_solution(&z) {
                return Err(Error::InvalidSpec("solver output fails the substitution check".into()));
            }
            Outcome::Unique(z)
        }
        Solution::Underdetermined { particular, kernel } => {
            let z = assemble(curve, &basis, &particular)?;
            if !eq.is_solution(&z) {
                return Err(Error::InvalidSpec("solver output fails the substitution check".into()));
            }
            let kernel = kernel.iter().map(|k| assemble(curve, &basis, k)).collect::<Result<_>>()?;
            Outcome::Underdetermined { particular: z, kernel }
        }
    };
    Ok(SolveReport { outcome, ansatz, unknowns, equations })
}

/// `sum v_i basis_i` as a function, over the common denominator of the `v_i`.
fn assemble(curve: Curve, basis: &[FPoly], v: &[KElem]) -> Result<FFunction> {
    let field = curve.field;
    let mut den = Poly::one(field);
    for a in v.iter().filter(|a| !a.is_zero()) {
        let g = den.gcd(a.den());
        den = &den.div_exact(&g).expect("gcd divides") * a.den();
    }
    let mut num = FPoly::zero(curve);
    for (e, a) in basis.iter().zip(v) {
        if a.is_zero() {
            continue;
        }
        let s = den.div_exact(a.den()).expect("common denominator");
        let coeff = FPoly::new(
            curve,
            [BiPoly::from_x(a.p0() * &s), BiPoly::from_x(a.p1() * &s), BiPoly::zero(field), BiPoly::zero(field)],
        );
        num = num.add(&coeff.mul(e));
    }
    FFunction::from_parts(num, FPoly::from_bipoly(curve, BiPoly::from_x(den)))
}

#[cfg(test)]
mod tests;

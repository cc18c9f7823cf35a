//! The conjectured zetalike family and the closed forms of its first ratio.

use super::{Recorder, Report, Witness};
use crate::algebra::{Poly, RatFunc};
use crate::curve::{Curve, CurveId, KElem};
use crate::error::{Error, Result};
use crate::ffunction::parse_fpoly;
use crate::powersum::{genus_zero_family_oracle, genus_zero_family_tuple, zetalike_check, Zetalike};
use serde_json::json;

/// Numerator, denominator and the Frobenius exponent shift of the closed
/// form of `R_n`, in the capital variables `X = x^(q^(n + shift))`.
fn display(id: CurveId) -> Result<(&'static str, &'static str, i64)> {
    Ok(match id {
        CurveId::CaseI => ("X^2 + x^2", "Y^2 + y + X^2 x + x", 0),
        CurveId::CaseII => (
            "(X - x)(Y - y)^2 + (X - x)(-X - x^3 - x + 1)",
            "X^6 + x X^3 + X^3 + y Y^3 + x^2 - x + 1",
            0,
        ),
        CurveId::CaseIII => (
            "(X + x)(Y^4 + y^4) + (X^4 + x^4)(X x^2 + x^3 + 1) + (X + x)",
            "x^2 X^8 + X^4 Y^4 + X^4 y + X^4 + x Y^4 + x y",
            0,
        ),
        CurveId::CaseIV => (
            "X^22 + (1 + x)(X^20 + X^18 + X^16) + (1 + x + x^2)(X^12 + X^10) + X^9 + x X^8 + X^5 \
             + (Y + y)(X^2 + X^4) + x^2 + x",
            "X^24 + x X^16 + (x + 1) X^8 + x^2 + x",
            -1,
        ),
        other => return Err(Error::Unsupported(format!("no closed form of R_n for {other}"))),
    })
}

fn eval(curve: Curve, expr: &str, k: i64) -> Result<KElem> {
    if k < 0 {
        return Err(Error::OutOfRange { d: k, min: 0 });
    }
    Ok(KElem::from_ring(&parse_fpoly(curve, expr)?.specialize(k as u32)))
}

/// The displayed `R_n`, reduced into `K`.
pub fn ratio_display(id: CurveId, n: u32) -> Result<KElem> {
    let c = Curve::builtin(id);
    let (num, den, shift) = display(id)?;
    let k = n as i64 + shift;
    eval(c, num, k)?.div(&eval(c, den, k)?).ok_or_else(|| Error::NotInvertible(format!("R_{n} denominator")))
}

/// `(q^n - 1, q^n (q - 1))`.
pub fn ratio_tuple(q: u32, n: u32) -> Vec<u32> {
    genus_zero_family_tuple(q, n, 0)
}

/// A precision at which a ratio of the given height reconstructs with
/// `guard` to spare.
pub fn suggested_precision(expected: &KElem, guard: i64) -> i64 {
    let (a, b) = expected.components();
    2 * a.height().max(b.height()) as i64 + 3 * guard + 16
}

/// `[n]^2 / C(n+1)` for case i.
fn bracket_form(n: u32) -> Result<KElem> {
    let c = Curve::builtin(CurveId::CaseI);
    let b = eval(c, "X + x", n as i64)?;
    let cc = eval(c, "Y + y + x (X + x) + x^2 + x", n as i64 + 1)?;
    Ok(b.pow(2).div(&cc).expect("C(n+1) is nonzero"))
}

fn ratio_check(curve: Curve, tuple: &[u32], expected: &KElem, precision: i64, guard: i64, rec: &mut Recorder) {
    let precision = precision.max(suggested_precision(expected, guard));
    rec.param("precision_used", precision);
    let Some(z) = rec.absorb("zetalike check", zetalike_check(curve, tuple, precision, guard)) else { return };
    match z.ratio(curve) {
        Some(r) => {
            rec.witnesses(Witness::kelem("ratio", &r));
            rec.check(&r == expected, || format!("reconstructed ratio {r}, expected {expected}"));
        }
        None => {
            rec.check(false, || format!("no rational ratio reconstructed at precision {precision}"));
        }
    }
}

pub fn verify_ratio_family(id: CurveId, n: u32, precision: i64, guard: i64) -> Result<Report> {
    if n == 0 {
        return Err(Error::InvalidSpec("n starts at 1".into()));
    }
    let c = Curve::builtin(id);
    let mut rec = Recorder::new("conj-3.2");
    rec.param("curve", id.name());
    rec.param("n", n);
    rec.param("guard", guard);
    let tuple = ratio_tuple(c.q(), n);
    rec.param("tuple", json!(tuple));
    let expected = ratio_display(id, n)?;
    rec.witnesses(Witness::kelem("display", &expected));
    if id == CurveId::CaseI {
        let alt = bracket_form(n)?;
        rec.check(alt == expected, || format!("[n]^2/C(n+1) = {alt} differs from the display {expected}"));
        let f = c.field;
        let p = |v: &[i64]| Poly::from_ints(f, v);
        let known = match n {
            1 => Some(RatFunc::new(p(&[1]), p(&[1, 1, 1]))),
            2 => Some(RatFunc::new(p(&[0, 0, 1, 0, 1]), p(&[1, 0, 0, 1, 0, 1, 1, 0, 1]))),
            _ => None,
        };
        if let Some(k) = known {
            rec.check(expected == KElem::from_ratfunc(c, &k), || format!("R_{n} reduces to {expected}, not {k}"));
        }
        if n == 2 {
            let lhs = &p(&[1, 1, 1]).pow(2) * &p(&[1, 0, 0, 1, 0, 1, 1, 0, 1]);
            let rhs = p(&[1, 0, 1, 1, 1, 0, 1, 0, 0, 1, 0, 0, 1]);
            rec.check(lhs == rhs, || format!("(x^2+x+1)^2 (x^8+x^6+x^5+x^3+1) = {lhs}"));
        }
    }
    ratio_check(c, &tuple, &expected, precision, guard, &mut rec);
    Ok(rec.finish())
}

/// The family `(q^n - 1, (q-1) q^n, ..., (q-1) q^(n+k))`.
pub fn verify_zetalike_family(id: CurveId, n: u32, k: u32, precision: i64, guard: i64) -> Result<Report> {
    if n == 0 {
        return Err(Error::InvalidSpec("n starts at 1".into()));
    }
    let c = Curve::builtin(id);
    let mut rec = Recorder::new("conj-3.1");
    rec.param("curve", id.name());
    rec.param("n", n);
    rec.param("k", k);
    rec.param("guard", guard);
    let tuple = genus_zero_family_tuple(c.q(), n, k);
    rec.param("tuple", json!(tuple));
    let expected = if c.genus() == 0 {
        Some(KElem::from_ratfunc(c, &genus_zero_family_oracle(c.q(), n, k)?))
    } else if k == 0 {
        Some(ratio_display(id, n)?)
    } else {
        None
    };
    match expected {
        Some(e) => ratio_check(c, &tuple, &e, precision, guard, &mut rec),
        None => {
            rec.param("precision_used", precision);
            match rec.absorb("zetalike check", zetalike_check(c, &tuple, precision, guard)) {
                Some(Zetalike::Detected { a, b }) => {
                    rec.witness(Witness::ratfunc("ratio", &a));
                    if !b.is_zero() {
                        rec.witness(Witness::ratfunc("ratio*y", &b));
                    }
                }
                Some(Zetalike::NotDetected) => {
                    rec.check(false, || format!("no rational ratio at precision {precision}"));
                }
                None => {}
            }
        }
    }
    Ok(rec.finish())
}

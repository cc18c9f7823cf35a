//! Relative (norm) power sums and zeta values.
//!
//! For monic `a` in `A` the relative sums use the monic generator of the
//! norm of `a` to a polynomial subring F_q[x] or F_q[y]. Degrees are still
//! degrees in `A`. Values are rational functions in the base variable.

use super::brute::{degree_sequences, tree_sum};
use super::zeta::STOP_GUARD;
use super::{check_tuple, render_tuple};
use crate::algebra::series::EXACT;
use crate::algebra::{Field, Fq, LaurentSeries, Poly, RatFunc};
use crate::curve::{galois_of_degree_p, monic_elements, norm_to_x, norm_to_y, Base, Curve, RingElem};
use crate::error::{Error, Result};
use std::collections::HashMap;

fn norm(base: Base, a: &RingElem) -> Result<Poly> {
    match base {
        Base::X => Ok(norm_to_x(a)),
        Base::Y => norm_to_y(a),
    }
}

fn norms(curve: Curve, base: Base, d: u32) -> Result<Vec<Poly>> {
    monic_elements(curve, d).iter().map(|a| norm(base, a)).collect()
}

fn supported(curve: Curve) -> Result<()> {
    if !curve.has_y() {
        return Err(Error::Unsupported("relative sums need a ring of positive genus".into()));
    }
    Ok(())
}

/// Iterated relative power sum of degree `d`, exact.
pub fn relative_power_sum(curve: Curve, base: Base, d: u32, tuple: &[u32]) -> Result<RatFunc> {
    check_tuple(tuple)?;
    supported(curve)?;
    let f = curve.field;
    let mut cache: HashMap<(u32, u32), RatFunc> = HashMap::new();
    let mut acc = RatFunc::zero(f);
    for seq in degree_sequences(d, tuple.len()) {
        let mut prod = RatFunc::one(f);
        for (&di, &ki) in seq.iter().zip(tuple) {
            if let std::collections::hash_map::Entry::Vacant(e) = cache.entry((di, ki)) {
                let terms = norms(curve, base, di)?.into_iter().map(|n| RatFunc::new(Poly::one(f), n.pow(ki as u64))).collect();
                e.insert(tree_sum(terms, RatFunc::zero(f)));
            }
            prod = Field::mul(&prod, &cache[&(di, ki)]);
        }
        acc = Field::add(&acc, &prod);
    }
    Ok(acc)
}

/// Result of [`relative_zeta_check`].
#[derive(Clone, Debug)]
pub struct RelativeCheck {
    pub holds: bool,
    pub precision: i64,
    /// The relative zeta value, in `1/base`.
    pub relative: LaurentSeries,
    /// `zeta_{F_q[base]}(p s_1, ..., p s_r)`.
    pub descended: LaurentSeries,
    pub relative_terms: u32,
    pub descended_terms: u32,
}

/// `sum_d S_d(tuple)` for single sums given as series, stopping after
/// `window` consecutive terms below the floor.
fn series_multizeta(
    tuple: &[u32],
    precision: i64,
    window: usize,
    d_max: u32,
    mut single: impl FnMut(u32, u32) -> Result<LaurentSeries>,
    field: Fq,
) -> Result<(LaurentSeries, u32)> {
    let r = tuple.len();
    let inner = precision + 2 * STOP_GUARD;
    let floor = -(precision + STOP_GUARD);
    let one = LaurentSeries::from_poly(&Poly::one(field), EXACT);
    // below[j] = S_{<d}(tuple[j..]); below[r] = 1
    let mut below = vec![LaurentSeries::zero(field, EXACT); r];
    below.push(one);
    let mut acc = LaurentSeries::zero(field, EXACT);
    let mut small = 0;
    for d in 0..=d_max {
        let mut at = vec![LaurentSeries::zero(field, EXACT); r];
        for j in (0..r).rev() {
            if below[j + 1].is_zero() && below[j + 1].precision() >= EXACT {
                continue;
            }
            at[j] = single(d, tuple[j])?.mul(&below[j + 1]).truncate(inner);
        }
        let term = at[0].clone();
        acc = acc.add(&term).truncate(inner);
        for j in 0..r {
            below[j] = below[j].add(&at[j]).truncate(inner);
        }
        if term.is_zero() && term.precision() >= EXACT {
            continue;
        }
        if term.degree_bound() < floor {
            small += 1;
        } else {
            small = 0;
        }
        if small >= window {
            return Ok((acc, d));
        }
    }
    Err(Error::Precision(format!("relative zeta({}) did not settle by d = {d_max}", render_tuple(tuple))))
}

/// Monic polynomials of degree `e`.
fn monic_polys(field: Fq, e: u32) -> Vec<Poly> {
    let q = field.q() as usize;
    let total = q.pow(e);
    let mut out = Vec::with_capacity(total);
    for mut idx in 0..total {
        let mut c = Vec::with_capacity(e as usize + 1);
        for _ in 0..e {
            c.push((idx % q) as u8);
            idx /= q;
        }
        c.push(1);
        out.push(Poly::from_coeffs(field, c));
    }
    out
}

fn inverse_power_sum(polys: &[Poly], k: u32, prec: i64, field: Fq) -> LaurentSeries {
    let one = Poly::one(field);
    polys.iter().fold(LaurentSeries::zero(field, EXACT), |acc, n| acc.add(&LaurentSeries::from_ratio(&one, &n.pow(k as u64), prec)))
}

/// Check `zeta_{A/F_q[base]}(s) = zeta_{F_q[base]}(p s)` numerically.
///
/// Only defined when `A` is Galois of degree `p` over the base: the
/// non-trivial conjugates of an element outside the base share its norm and
/// cancel in characteristic `p`, while base elements contribute `p`-th powers.
pub fn relative_zeta_check(curve: Curve, base: Base, tuple: &[u32], precision: i64) -> Result<RelativeCheck> {
    check_tuple(tuple)?;
    supported(curve)?;
    if !galois_of_degree_p(curve, base) {
        return Err(Error::Unsupported(format!("{} is not Galois of degree p over F_q[{}]", curve.id, base.var())));
    }
    if precision < 16 {
        return Err(Error::Precision(format!("precision {precision} is below the minimum of 16")));
    }
    let f = curve.field;
    let p = f.p();
    let index = match base {
        Base::X => 2,
        Base::Y => curve.f().degree().unwrap(),
    };
    let inner = precision + 2 * STOP_GUARD;
    let mut norm_cache: HashMap<u32, Vec<Poly>> = HashMap::new();
    let (relative, relative_terms) = series_multizeta(
        tuple,
        precision,
        index + 1,
        64,
        |d, k| {
            if let std::collections::hash_map::Entry::Vacant(e) = norm_cache.entry(d) {
                e.insert(norms(curve, base, d)?);
            }
            Ok(inverse_power_sum(&norm_cache[&d], k, inner, f))
        },
        f,
    )?;
    let scaled: Vec<u32> = tuple.iter().map(|k| k * p).collect();
    let mut poly_cache: HashMap<u32, Vec<Poly>> = HashMap::new();
    let (descended, descended_terms) = series_multizeta(
        &scaled,
        precision,
        2,
        32,
        |e, k| Ok(inverse_power_sum(poly_cache.entry(e).or_insert_with(|| monic_polys(f, e)), k, inner, f)),
        f,
    )?;
    let holds = relative.eq_to_precision(&descended, precision);
    Ok(RelativeCheck {
        holds,
        precision,
        relative: relative.truncate(precision),
        descended: descended.truncate(precision),
        relative_terms,
        descended_terms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::CurveId;

    #[test]
    fn vanishing_over_y() {
        let c = Curve::builtin(CurveId::CaseI);
        for d in [1, 2] {
            for k in 1..4 {
                assert!(relative_power_sum(c, Base::Y, d, &[k]).unwrap().is_zero(), "d={d} k={k}");
            }
        }
        assert_eq!(relative_power_sum(c, Base::Y, 0, &[3]).unwrap(), RatFunc::one(c.field));
        assert!(!relative_power_sum(c, Base::Y, 3, &[1]).unwrap().is_zero());
    }

    #[test]
    fn descent_over_x() {
        let c = Curve::builtin(CurveId::CaseI);
        let r = relative_zeta_check(c, Base::X, &[1], 40).unwrap();
        assert!(r.holds);
        assert!(relative_zeta_check(c, Base::Y, &[1], 40).is_err());
    }
}

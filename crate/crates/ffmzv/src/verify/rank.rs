//! Linear relations between power sums with coefficients independent of `d`.
//!
//! Each quantity is a function of `d`. A relation `sum c_i Q_i(d) = 0` with
//! `c_i` in `F_q(x)` for every `d` in the range is a kernel vector of the
//! matrix with one row per `d` and `y`-component.

use super::{Recorder, Report, Witness};
use crate::algebra::{Field, Matrix, RatFunc, ResidueField};
use crate::curve::{Curve, CurveId, KElem};
use crate::error::{Error, Result};
use crate::powersum::{render_tuple, PowerSums};
use serde_json::json;
use std::ops::RangeInclusive;

/// `S_(d + shift)(tuple)^power`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quantity {
    pub shift: u32,
    pub tuple: Vec<u32>,
    pub power: u32,
}

impl Quantity {
    fn new(shift: u32, tuple: &[u32], power: u32) -> Self {
        Quantity { shift, tuple: tuple.to_vec(), power }
    }

    pub fn label(&self) -> String {
        let d = if self.shift == 0 { "d".to_string() } else { format!("d+{}", self.shift) };
        let p = if self.power == 1 { String::new() } else { format!("^{}", self.power) };
        format!("S_{d}({}){p}", render_tuple(&self.tuple))
    }

    pub fn value(&self, sums: &PowerSums, d: u32) -> KElem {
        sums.at(d + self.shift, &self.tuple).pow(self.power as i64)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuantitySet {
    /// `S_k(3), S_k(1,2), S_k(2,1), S_k(1,1,1)` for `k = d, d+1`.
    Weight3Eight,
    /// `S_k(1,2)` for `d < k <= d+5` and `S_m(3)` for `d <= m <= d+4`.
    Weight3Ten,
    /// `S_d(1), S_d(p), S_d(1)^p, S_d(3)`, with the Frobenius relation planted.
    PlantedFrobenius,
}

impl QuantitySet {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "weight3-8" | "eight" => Ok(QuantitySet::Weight3Eight),
            "weight3-10" | "ten" => Ok(QuantitySet::Weight3Ten),
            "planted" => Ok(QuantitySet::PlantedFrobenius),
            _ => Err(Error::Parse(format!("unknown quantity set `{s}` (weight3-8, weight3-10, planted)"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            QuantitySet::Weight3Eight => "weight3-8",
            QuantitySet::Weight3Ten => "weight3-10",
            QuantitySet::PlantedFrobenius => "planted",
        }
    }

    pub fn quantities(self, curve: Curve) -> Vec<Quantity> {
        match self {
            QuantitySet::Weight3Eight => {
                let mut v = Vec::new();
                for k in 0..2 {
                    for t in [&[3][..], &[1, 2], &[2, 1], &[1, 1, 1]] {
                        v.push(Quantity::new(k, t, 1));
                    }
                }
                v
            }
            QuantitySet::Weight3Ten => {
                let mut v: Vec<_> = (1..=5).map(|k| Quantity::new(k, &[1, 2], 1)).collect();
                v.extend((0..=4).map(|m| Quantity::new(m, &[3], 1)));
                v
            }
            QuantitySet::PlantedFrobenius => {
                let p = curve.field.p();
                vec![
                    Quantity::new(0, &[1], 1),
                    Quantity::new(0, &[p], 1),
                    Quantity::new(0, &[1], p),
                    Quantity::new(0, &[3], 1),
                ]
            }
        }
    }
}

/// Rows of the relation matrix: one per `d`, plus one for the `y` parts if
/// any of them is nonzero.
fn relation_rows(qs: &[Quantity], sums: &PowerSums, d: u32) -> Vec<Vec<RatFunc>> {
    let vals: Vec<(RatFunc, RatFunc)> = qs.iter().map(|q| q.value(sums, d).components()).collect();
    let mut rows = vec![vals.iter().map(|v| v.0.clone()).collect::<Vec<_>>()];
    if vals.iter().any(|v| !v.1.is_zero()) {
        rows.push(vals.iter().map(|v| v.1.clone()).collect());
    }
    rows
}

/// The rank modulo a prime of degree `deg`, if no denominator vanishes there.
fn residue_rank(rows: &[Vec<RatFunc>], res: &ResidueField) -> Option<usize> {
    let reduced: Option<Vec<Vec<_>>> = rows.iter().map(|r| r.iter().map(|e| res.reduce(e).ok()).collect()).collect();
    Some(Matrix::from_rows(reduced?).ok()?.rank())
}

pub fn rank_experiment(id: CurveId, set: QuantitySet, d_range: RangeInclusive<u32>) -> Result<Report> {
    let c = Curve::builtin(id);
    let sums = PowerSums::shared(c);
    let qs = set.quantities(c);
    let mut rec = Recorder::new("rank-weight3");
    rec.param("curve", id.name());
    rec.param("set", set.name());
    rec.param("d_range", json!([d_range.start(), d_range.end()]));
    rec.param("quantities", json!(qs.iter().map(Quantity::label).collect::<Vec<_>>()));
    let mut rows = Vec::new();
    for d in d_range {
        rows.extend(relation_rows(&qs, &sums, d));
    }
    rec.param("rows", rows.len());
    let n = qs.len();

    // a full rank modulo one prime is enough; otherwise eliminate exactly
    let mut rank = None;
    for deg in [61, 67, 71] {
        let res = ResidueField::of_degree(c.field, deg);
        if let Some(r) = residue_rank(&rows, &res) {
            if r == n {
                rec.param("certificate", json!({"modulus_degree": deg}));
                rank = Some(r);
            }
            break;
        }
    }
    let mut kernel = Vec::new();
    let rank = match rank {
        Some(r) => r,
        None => {
            let m = Matrix::from_rows(rows)?;
            kernel = m.kernel();
            rec.param("certificate", "exact");
            n - kernel.len()
        }
    };
    rec.witness(Witness::integer("rank", rank as i64));
    rec.witness(Witness::integer("quantities", n as i64));
    for (i, v) in kernel.iter().enumerate() {
        for (j, e) in v.iter().enumerate().filter(|(_, e)| !Field::is_zero(*e)) {
            rec.witness(Witness::ratfunc(format!("relation {i}: {}", qs[j].label()), e));
        }
    }
    match set {
        QuantitySet::PlantedFrobenius => {
            // the only relation is S_d(p) = S_d(1)^p
            let planted = kernel.len() == 1 && {
                let v = &kernel[0];
                Field::is_zero(&v[0]) && Field::is_zero(&v[3]) && !Field::is_zero(&v[1]) && v[1].add(&v[2]).is_zero()
            };
            rec.check(planted, || format!("expected exactly the planted relation, found rank {rank} of {n}"));
        }
        _ => {
            rec.check(rank == n, || format!("rank {rank} of {n}: {} candidate relations", kernel.len()));
        }
    }
    Ok(rec.finish())
}

//! Relative zeta values descending to the rational subring.

use super::{Recorder, Report, Witness};
use crate::curve::{Base, Curve, CurveId};
use crate::error::Result;
use crate::powersum::{relative_power_sum, relative_zeta_check, render_tuple};
use serde_json::json;

/// Single entries `1, 2, 3` and depth-2 tuples of weight at most 6.
pub fn relative_tuples() -> Vec<Vec<u32>> {
    let mut v: Vec<Vec<u32>> = (1..=3).map(|s| vec![s]).collect();
    for w in 2..=6 {
        v.extend((1..w).map(|a| vec![a, w - a]));
    }
    v
}

pub fn verify_relative(id: CurveId, precision: i64) -> Result<Report> {
    let c = Curve::builtin(id);
    let mut rec = Recorder::new("relative");
    rec.param("curve", id.name());
    rec.param("precision", precision);
    let tuples = relative_tuples();
    rec.param("tuples", json!(tuples.iter().map(|t| render_tuple(t)).collect::<Vec<_>>()));
    for t in &tuples {
        let Some(r) = rec.absorb(&format!("relative zeta({})", render_tuple(t)), relative_zeta_check(c, Base::X, t, precision))
        else {
            continue;
        };
        rec.check(r.holds, || {
            format!("zeta_rel({}) = {} but descended value is {}", render_tuple(t), r.relative, r.descended)
        });
    }
    // the norms of x and x + 1 to F_2[y] agree, so the low degrees cancel
    if id == CurveId::CaseI {
        let mut vanished = 0;
        for d in [1, 2] {
            for k in 1..=6 {
                let Some(v) = rec.absorb("relative sum over y", relative_power_sum(c, Base::Y, d, &[k])) else { continue };
                if !v.is_zero() {
                    rec.witness(Witness::ratfunc(format!("S_rel,y {d}({k})"), &v));
                }
                rec.check(v.is_zero(), || format!("relative power sum over F_q[y] at d = {d}, k = {k} is {v}"));
                vanished += 1;
            }
        }
        rec.witness(Witness::integer("vanishing sums over y", vanished));
    }
    Ok(rec.finish())
}

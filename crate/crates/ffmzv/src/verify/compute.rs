//! Reports for single computations: zeta values, zetalike checks and solver
//! replays.

use super::{Recorder, Report, Witness};
use crate::algebra::LaurentSeries;
use crate::curve::{Curve, CurveId};
use crate::error::Result;
use crate::powersum::{render_tuple, zeta_value_with, zetalike_check, ZetaOptions, Zetalike};
use crate::solver::replay::{known_systems, replay_system};
use serde_json::{json, Value};

/// Coefficients from the leading exponent down to the precision, as field codes.
fn series_json(s: &LaurentSeries) -> Value {
    match s.degree() {
        None => json!({"top": null, "coeffs": []}),
        Some(top) => {
            let coeffs: Vec<u8> = (-s.precision()..=top).rev().map(|e| s.coeff(e)).collect();
            json!({"top": top, "coeffs": coeffs})
        }
    }
}

/// `zeta(tuple)` expanded at infinity; the `y` part is omitted in genus 0.
pub fn zeta_report(id: CurveId, tuple: &[u32], precision: i64, d_max: u32) -> Result<Report> {
    let c = Curve::builtin(id);
    let mut rec = Recorder::new("zeta");
    rec.param("curve", id.name());
    rec.param("tuple", render_tuple(tuple));
    rec.param("precision", precision);
    rec.param("d_max", d_max);
    let opts = ZetaOptions { d_max, ..ZetaOptions::default() };
    if let Some(z) = rec.absorb("zeta", zeta_value_with(c, tuple, precision, opts)) {
        rec.param("terms_used", z.terms_used);
        rec.param("expansion", z.value.to_string());
        rec.param("even", series_json(z.value.even()));
        if c.has_y() {
            rec.param("odd", series_json(z.value.odd()));
        }
        if let Some(d) = z.value.degree() {
            rec.witness(Witness::integer("degree", d));
        }
    }
    Ok(rec.finish())
}

/// PASS when `zeta(tuple)/zeta(weight)` reconstructs as an element of `K`.
pub fn zetalike_report(id: CurveId, tuple: &[u32], precision: i64, guard: i64) -> Result<Report> {
    let c = Curve::builtin(id);
    let mut rec = Recorder::new("zetalike");
    rec.param("curve", id.name());
    rec.param("tuple", render_tuple(tuple));
    rec.param("precision", precision);
    rec.param("guard", guard);
    match rec.absorb("zetalike check", zetalike_check(c, tuple, precision, guard)) {
        Some(z @ Zetalike::Detected { .. }) => {
            let r = z.ratio(c).expect("detected");
            rec.param("ratio", r.to_string());
            rec.witnesses(Witness::kelem("ratio", &r));
        }
        Some(Zetalike::NotDetected) => {
            rec.check(false, || format!("no rational ratio at precision {precision}"));
        }
        None => {}
    }
    Ok(rec.finish())
}

/// Replay the shipped solver systems, optionally for one curve only.
pub fn solve_report(case: Option<CurveId>) -> Result<Report> {
    let mut rec = Recorder::new("solve");
    if let Some(id) = case {
        rec.param("curve", id.name());
    }
    let systems: Vec<_> = known_systems().into_iter().filter(|s| case.is_none_or(|c| c == s.case)).collect();
    let runs: Vec<_> = {
        use rayon::prelude::*;
        systems.par_iter().map(replay_system).collect()
    };
    let mut rows = Vec::new();
    for (sys, run) in systems.iter().zip(runs) {
        let label = format!("{} {}", sys.case.name(), sys.target);
        let Some(run) = rec.absorb(&label, run) else { continue };
        rows.push(json!({
            "system": label,
            "unknowns": run.unknowns,
            "expected_unknowns": sys.unknowns,
            "equations": run.equations,
            "outcome": run.outcome,
            "kernel_dim": run.kernel_dim,
            "matches_data": run.matches_data,
        }));
        rec.witness(Witness::integer(format!("{label} unknowns"), run.unknowns as i64));
        rec.witness(Witness::integer(format!("{label} equations"), run.equations as i64));
        rec.check(run.passed(), || match &run.diff {
            Some(d) => format!("{label}: solution differs from the data file by {d}"),
            None => format!("{label}: {} with {} unknowns (expected {})", run.outcome, run.unknowns, sys.unknowns),
        });
    }
    if rows.is_empty() {
        rec.check(false, || "no solver systems for this curve".to_string());
    }
    rec.param("systems", json!(rows));
    Ok(rec.finish())
}

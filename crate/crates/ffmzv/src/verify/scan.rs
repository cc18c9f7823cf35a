//! Searches for zetalike values and rational ratios of multizeta values.

use super::{Recorder, Report, Witness};
use crate::algebra::rational_reconstruct;
use crate::curve::{Curve, CurveId, InfinitySeries, KElem, RingElem};
use crate::error::{Error, Result};
use crate::powersum::{genus_zero_family_tuple, render_tuple, zeta_value};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScanOutcome {
    Zetalike,
    NotZetalike,
    Inconclusive,
}

impl ScanOutcome {
    pub fn as_str(self) -> &'static str {
        match self {
            ScanOutcome::Zetalike => "zetalike",
            ScanOutcome::NotZetalike => "not-zetalike",
            ScanOutcome::Inconclusive => "inconclusive",
        }
    }
}

/// One row of the scan table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanEntry {
    pub tuple: Vec<u32>,
    pub weight: u32,
    pub depth: usize,
    pub verdict: ScanOutcome,
    /// `zeta(tuple) / zeta(weight)` when rational.
    pub ratio: Option<String>,
    pub primitive: bool,
    /// Member of the conjectured family up to Frobenius powers.
    pub family: bool,
}

/// Tuples of depth `2..=max_depth` and weight `2..=max_weight` in
/// increasing weight, then lexicographic order.
pub fn scan_tuples(max_weight: u32, max_depth: usize) -> Vec<Vec<u32>> {
    fn compositions(w: u32, r: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if r == 1 {
            prefix.push(w);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for a in 1..=w.saturating_sub(r as u32 - 1) {
            prefix.push(a);
            compositions(w - a, r - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for w in 2..=max_weight {
        let mut at = Vec::new();
        for r in 2..=max_depth.min(w as usize) {
            compositions(w, r, &mut Vec::new(), &mut at);
        }
        at.sort();
        out.extend(at);
    }
    out
}

fn is_primitive(t: &[u32], p: u32) -> bool {
    t.iter().any(|k| k % p != 0)
}

/// Depth-2 members of the conjectured family and their `p`-power multiples.
fn in_family(t: &[u32], q: u32, p: u32) -> bool {
    let mut t = t.to_vec();
    loop {
        if (1..=12).any(|n| q.checked_pow(n + 1).is_some() && genus_zero_family_tuple(q, n, 0) == t) {
            return true;
        }
        if is_primitive(&t, p) {
            return false;
        }
        t.iter_mut().for_each(|k| *k /= p);
    }
}

fn reconstruct(curve: Curve, r: &InfinitySeries, guard: i64) -> Option<KElem> {
    let a = rational_reconstruct(r.even(), guard)?;
    let b = rational_reconstruct(r.odd(), guard)?;
    let mut k = KElem::from_ratfunc(curve, &b);
    if !k.is_zero() {
        k = k.mul_ring(&RingElem::y(curve));
    }
    Some(KElem::from_ratfunc(curve, &a).add(&k))
}

fn render_ratio(k: &KElem) -> String {
    k.to_string()
}

/// A scan tests thousands of convergents, so a candidate must use at most
/// half of the known coefficients; a chance match then has probability
/// about `q^(-precision/2)`.
fn scan_guard(precision: i64, guard: i64) -> i64 {
    guard.max(precision / 2)
}

fn ratio_of(curve: Curve, a: &InfinitySeries, b: &InfinitySeries, precision: i64, guard: i64) -> Option<KElem> {
    let r = a.div(b)?.truncate(precision);
    reconstruct(curve, &r, scan_guard(precision, guard))
}

pub fn scan_zetalike(id: CurveId, max_weight: u32, max_depth: usize, precision: i64, guard: i64) -> Result<Report> {
    if max_depth < 2 {
        return Err(Error::InvalidSpec("scans need depth at least 2".into()));
    }
    let c = Curve::builtin(id);
    let (q, p) = (c.q(), c.field.p());
    let mut rec = Recorder::new("scan");
    rec.param("curve", id.name());
    rec.param("max_weight", max_weight);
    rec.param("max_depth", max_depth);
    rec.param("precision", precision);
    rec.param("guard", guard);
    rec.param("effective_guard", scan_guard(precision, guard));

    let tuples = scan_tuples(max_weight, max_depth);
    let singles: Vec<Option<InfinitySeries>> =
        (0..=max_weight).into_par_iter().map(|w| if w == 0 { None } else { zeta_value(c, &[w], precision).ok().map(|z| z.value) }).collect();
    let values: Vec<Option<InfinitySeries>> =
        tuples.par_iter().map(|t| zeta_value(c, t, precision).ok().map(|z| z.value)).collect();

    let mut entries = Vec::new();
    let mut ratios: Vec<Option<KElem>> = Vec::new();
    for (t, v) in tuples.iter().zip(&values) {
        let w: u32 = t.iter().sum();
        let (verdict, ratio) = match (v, &singles[w as usize]) {
            (Some(v), Some(z)) => match ratio_of(c, v, z, precision, guard) {
                Some(r) => (ScanOutcome::Zetalike, Some(r)),
                None => (ScanOutcome::NotZetalike, None),
            },
            _ => (ScanOutcome::Inconclusive, None),
        };
        entries.push(ScanEntry {
            tuple: t.clone(),
            weight: w,
            depth: t.len(),
            verdict,
            ratio: ratio.as_ref().map(render_ratio),
            primitive: is_primitive(t, p),
            family: in_family(t, q, p),
        });
        ratios.push(ratio);
    }

    // Frobenius: (p s) is zetalike exactly when s is, with the p-th power ratio
    for (i, e) in entries.iter().enumerate() {
        if e.primitive || e.verdict == ScanOutcome::Inconclusive {
            continue;
        }
        let base: Vec<u32> = e.tuple.iter().map(|k| k / p).collect();
        let Some(j) = tuples.iter().position(|t| *t == base) else { continue };
        if entries[j].verdict == ScanOutcome::Inconclusive {
            continue;
        }
        let ok = entries[j].verdict == e.verdict
            && match (&ratios[i], &ratios[j]) {
                (Some(a), Some(b)) => *a == b.frobenius(),
                _ => true,
            };
        rec.check(ok, || format!("({}) and ({}) disagree under Frobenius", render_tuple(&e.tuple), render_tuple(&base)));
    }

    let hits: Vec<&ScanEntry> = entries.iter().filter(|e| e.verdict == ScanOutcome::Zetalike && e.primitive).collect();
    for (e, r) in entries.iter().zip(&ratios) {
        if let (true, Some(r)) = (e.primitive, r) {
            rec.witnesses(Witness::kelem(&format!("ratio ({})", render_tuple(&e.tuple)), r));
        }
    }
    let unexplained: Vec<String> = hits.iter().filter(|e| !e.family).map(|e| render_tuple(&e.tuple)).collect();
    rec.param("zetalike_primitive", json!(hits.iter().map(|e| render_tuple(&e.tuple)).collect::<Vec<_>>()));
    rec.param("zetalike_outside_family", json!(unexplained));

    // same-weight pairs with a rational ratio
    let mut pairs = Vec::new();
    let mut unexplained_pairs = Vec::new();
    for i in 0..tuples.len() {
        for j in i + 1..tuples.len() {
            if entries[i].weight != entries[j].weight {
                continue;
            }
            let (Some(a), Some(b)) = (&values[i], &values[j]) else { continue };
            let Some(r) = ratio_of(c, a, b, precision, guard) else { continue };
            let explained = entries[i].verdict == ScanOutcome::Zetalike && entries[j].verdict == ScanOutcome::Zetalike;
            let frobenius = !entries[i].primitive && !entries[j].primitive;
            let label = format!("({})/({})", render_tuple(&tuples[i]), render_tuple(&tuples[j]));
            if !explained && !frobenius {
                unexplained_pairs.push(label.clone());
            }
            pairs.push(json!({"pair": label, "ratio": render_ratio(&r), "explained": explained || frobenius}));
            rec.witnesses(Witness::kelem(&format!("pair {label}"), &r));
        }
    }
    rec.param("pair_hits", json!(pairs));
    rec.param("unexplained_pairs", json!(unexplained_pairs));
    rec.param("entries", serde_json::to_value(&entries).expect("entries serialize"));
    let inconclusive = entries.iter().filter(|e| e.verdict == ScanOutcome::Inconclusive).count();
    rec.param("coverage", json!({"tuples": entries.len(), "inconclusive": inconclusive}));

    if c.genus() > 0 {
        rec.check(unexplained.is_empty(), || format!("primitive zetalike values outside the family: {}", unexplained.join(" ")));
        rec.check(unexplained_pairs.is_empty(), || format!("unexplained rational ratios: {}", unexplained_pairs.join(" ")));
    }
    if inconclusive > 0 {
        rec.inconclusive(format!("{inconclusive} tuples did not reach precision {precision}"));
    }
    Ok(rec.finish())
}

/// The scan table stored in a report.
pub fn scan_entries(report: &Report) -> Result<Vec<ScanEntry>> {
    match report.params.get("entries") {
        Some(v) => serde_json::from_value(v.clone()).map_err(|e| Error::Parse(format!("scan entries: {e}"))),
        None => Ok(Vec::new()),
    }
}

/// CSV with columns `tuple, weight, depth, verdict, ratio`.
pub fn scan_table_csv(entries: &[ScanEntry]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(["tuple", "weight", "depth", "verdict", "ratio"]).map_err(io)?;
    for e in entries {
        w.write_record([
            render_tuple(&e.tuple),
            e.weight.to_string(),
            e.depth.to_string(),
            e.verdict.as_str().to_string(),
            e.ratio.clone().unwrap_or_default(),
        ])
        .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

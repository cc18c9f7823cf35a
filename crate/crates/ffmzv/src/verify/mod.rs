//! Named reproductions of theorems, conjectures and experiments.
//!
//! Every target produces a [`Report`]. Reports serialize to JSON with
//! sorted keys; scan tables also export to CSV.

mod compute;
mod conjecture;
mod rank;
mod relative;
mod scan;
mod theorem;

pub use compute::{solve_report, zeta_report, zetalike_report};
pub use conjecture::{ratio_display, ratio_tuple, suggested_precision, verify_ratio_family, verify_zetalike_family};
pub use rank::{rank_experiment, Quantity, QuantitySet};
pub use relative::{relative_tuples, verify_relative};
pub use scan::{scan_entries, scan_table_csv, scan_tuples, scan_zetalike, ScanEntry, ScanOutcome};
pub use theorem::{specializations, theorem, theorems, verify_theorem, DegreeLaw, Specialization, Theorem};

use crate::algebra::{Poly, RatFunc};
use crate::curve::{CurveId, KElem};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::collections::BTreeMap;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl Verdict {
    /// Combine two verdicts: any failure wins, then any inconclusive part.
    pub fn and(self, o: Verdict) -> Verdict {
        use Verdict::*;
        match (self, o) {
            (Fail, _) | (_, Fail) => Fail,
            (Inconclusive, _) | (_, Inconclusive) => Inconclusive,
            _ => Pass,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Inconclusive => "INCONCLUSIVE",
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A named rational function, coefficients listed from degree 0 up.
///
/// Integer data such as degrees and ranks use `num_coeffs = [n]`,
/// `den_coeffs = [1]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub name: String,
    pub num_coeffs: Vec<i64>,
    pub den_coeffs: Vec<i64>,
}

fn coeffs(p: &Poly) -> Vec<i64> {
    p.coeffs().iter().map(|&c| c as i64).collect()
}

impl Witness {
    pub fn ratfunc(name: impl Into<String>, r: &RatFunc) -> Self {
        Witness { name: name.into(), num_coeffs: coeffs(r.num()), den_coeffs: coeffs(r.den()) }
    }

    pub fn poly(name: impl Into<String>, p: &Poly) -> Self {
        Witness { name: name.into(), num_coeffs: coeffs(p), den_coeffs: vec![1] }
    }

    pub fn integer(name: impl Into<String>, n: i64) -> Self {
        Witness { name: name.into(), num_coeffs: vec![n], den_coeffs: vec![1] }
    }

    /// `a + y b` as the witness `name` for `a` and, when `b != 0`,
    /// `name*y` for `b`.
    pub fn kelem(name: &str, k: &KElem) -> Vec<Self> {
        let (a, b) = k.components();
        let mut out = vec![Witness::ratfunc(name, &a)];
        if !b.is_zero() {
            out.push(Witness::ratfunc(format!("{name}*y"), &b));
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub target: String,
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
    pub params: BTreeMap<String, Value>,
    pub ms: u64,
    /// Failed or inconclusive checks, with the offending values.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub diagnostics: Vec<String>,
}

impl Report {
    pub fn witness(&self, name: &str) -> Option<&Witness> {
        self.witnesses.iter().find(|w| w.name == name)
    }

    /// Deterministic JSON: keys sorted, coefficient lists low degree first.
    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("reports serialize");
        serde_json::to_string_pretty(&v).expect("reports serialize")
    }

    pub fn from_json(s: &str) -> Result<Report> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("report: {e}")))
    }

    /// A plain-text summary.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.target, self.verdict);
        for (k, v) in &self.params {
            s += &format!("  {k} = {v}\n");
        }
        for w in &self.witnesses {
            s += &format!("  {}: {:?} / {:?}\n", w.name, w.num_coeffs, w.den_coeffs);
        }
        for d in &self.diagnostics {
            s += &format!("  ! {d}\n");
        }
        s
    }
}

/// Accumulates checks and witnesses while a target runs.
pub(crate) struct Recorder {
    target: String,
    start: Instant,
    verdict: Verdict,
    witnesses: Vec<Witness>,
    params: BTreeMap<String, Value>,
    diagnostics: Vec<String>,
}

impl Recorder {
    pub(crate) fn new(target: &str) -> Self {
        Recorder {
            target: target.to_string(),
            start: Instant::now(),
            verdict: Verdict::Pass,
            witnesses: Vec::new(),
            params: BTreeMap::new(),
            diagnostics: Vec::new(),
        }
    }

    pub(crate) fn param(&mut self, k: &str, v: impl Into<Value>) {
        self.params.insert(k.to_string(), v.into());
    }

    pub(crate) fn witness(&mut self, w: Witness) {
        self.witnesses.push(w);
    }

    pub(crate) fn witnesses(&mut self, w: impl IntoIterator<Item = Witness>) {
        self.witnesses.extend(w);
    }

    /// Record a check; the message is kept only on failure.
    pub(crate) fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) -> bool {
        if !ok {
            self.verdict = Verdict::Fail;
            self.diagnostics.push(msg());
        }
        ok
    }

    pub(crate) fn inconclusive(&mut self, msg: String) {
        self.verdict = self.verdict.and(Verdict::Inconclusive);
        self.diagnostics.push(msg);
    }

    /// Treat precision errors as inconclusive and anything else as a
    /// failure of the check.
    pub(crate) fn absorb<T>(&mut self, what: &str, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(Error::Precision(e)) => {
                self.inconclusive(format!("{what}: {e}"));
                None
            }
            Err(e) => {
                self.check(false, || format!("{what}: {e}"));
                None
            }
        }
    }

    pub(crate) fn finish(self) -> Report {
        Report {
            target: self.target,
            verdict: self.verdict,
            witnesses: self.witnesses,
            params: self.params,
            ms: self.start.elapsed().as_millis() as u64,
            diagnostics: self.diagnostics,
        }
    }
}

/// Options shared by the targets; fields a target does not use are ignored.
#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub curve: Option<CurveId>,
    pub d_range: Option<(u32, u32)>,
    pub precision: i64,
    pub guard: i64,
    pub n: Option<u32>,
    pub k: Option<u32>,
    pub max_weight: Option<u32>,
    pub max_depth: Option<usize>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            curve: None,
            d_range: None,
            precision: 128,
            guard: crate::algebra::DEFAULT_GUARD,
            n: None,
            k: None,
            max_weight: None,
            max_depth: None,
        }
    }
}

pub const TARGETS: [&str; 11] =
    ["thm-3.3", "thm-3.5", "thm-5.1", "thm-A", "thm-B", "thm-C", "conj-3.1", "conj-3.2", "rank-weight3", "scan", "relative"];

/// Run one target by id.
pub fn verify(target: &str, o: &VerifyOptions) -> Result<Report> {
    match target {
        t if t.starts_with("thm-") => verify_theorem(t, o.d_range, o.precision, o.guard),
        "conj-3.1" => {
            let curve = o.curve.unwrap_or(CurveId::Genus0Q2);
            verify_zetalike_family(curve, o.n.unwrap_or(1), o.k.unwrap_or(0), o.precision, o.guard)
        }
        "conj-3.2" => verify_ratio_family(o.curve.unwrap_or(CurveId::CaseI), o.n.unwrap_or(1), o.precision, o.guard),
        "rank-weight3" => {
            let (lo, hi) = o.d_range.unwrap_or((3, 10));
            rank_experiment(o.curve.unwrap_or(CurveId::CaseI), QuantitySet::Weight3Eight, lo..=hi)
        }
        "scan" => scan_zetalike(
            o.curve.unwrap_or(CurveId::Genus0Q2),
            o.max_weight.unwrap_or(8),
            o.max_depth.unwrap_or(2),
            o.precision,
            o.guard,
        ),
        "relative" => verify_relative(o.curve.unwrap_or(CurveId::CaseI), o.precision),
        _ => Err(Error::InvalidSpec(format!("unknown target `{target}`; known: {}", TARGETS.join(", ")))),
    }
}

#[cfg(test)]
mod tests;

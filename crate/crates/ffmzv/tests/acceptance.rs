//! Acceptance run: one line per criterion.
//!
//! Criterion 4 contains a degree law for `ell_d` in case iv that the
//! computation contradicts. Its failure is reported as FAIL; the run only
//! exits nonzero when the failures differ from that known set.

use ffmzv::algebra::{rational_reconstruct, Fq, LaurentSeries, Poly, RatFunc, DEFAULT_GUARD};
use ffmzv::curve::{Base, Curve, CurveId, KElem};
use ffmzv::ffunction::{builtin_ffunctions, ell_coefficient, FFunction};
use ffmzv::powersum::{brute, relative_power_sum, zeta_value, PowerSums, SumMode};
use ffmzv::solver::replay::{known_systems, replay_system};
use ffmzv::solver::{solve_difference, DifferenceEquation, Form};
use ffmzv::verify::{self, Report, Verdict};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use CurveId::*;

/// 1/x-adic coefficients compared in numeric identities; equality is exact.
const PRECISION: i64 = 200;
const RELATIVE_PRECISION: i64 = 150;
const SCAN_PRECISION: i64 = 128;
const GUARD: i64 = 10;

/// Failures the computation cannot remove.
fn known_failures() -> BTreeSet<String> {
    let mut s: BTreeSet<String> = (1..=6).map(|d| format!("case-iv deg ell_{d}")).collect();
    s.insert("case-iv deg E(2)/ell^3".into());
    s
}

struct Outcome {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { failures: Vec::new(), notes: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn pass(&mut self, r: &Report) {
        if r.verdict != Verdict::Pass {
            self.failures.push(format!("{} {} {:?}", r.target, r.verdict, r.diagnostics));
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn within(&mut self, t: Instant, limit: Duration) {
        let e = t.elapsed();
        self.note(format!("{:.1}s", e.as_secs_f64()));
        self.check(e < limit, format!("took {e:?}, limit {limit:?}"));
    }
}

fn poly(f: Fq, v: &[i64]) -> Poly {
    Poly::from_ints(f, v)
}

fn kpoly(c: Curve, v: &[i64]) -> KElem {
    KElem::from_poly(c, poly(c.field, v))
}

/// `a zeta(s) == b zeta(w)` to `PRECISION`, from power sums alone.
fn numeric_identity(c: Curve, a: &KElem, s: &[u32], b: &KElem, w: u32) -> bool {
    let pad = a.degree().unwrap().max(b.degree().unwrap()) + GUARD;
    let zs = zeta_value(c, s, PRECISION + pad).unwrap().value.mul_kelem(a);
    let zw = zeta_value(c, &[w], PRECISION + pad).unwrap().value.mul_kelem(b);
    zs.eq_to_precision(&zw, PRECISION)
}

fn c1_sum_identity(o: &mut Outcome) {
    let t = Instant::now();
    let c = Curve::builtin(CaseI);
    let a = kpoly(c, &[1, 1, 1]);
    o.check(numeric_identity(c, &a, &[1, 2], &KElem::one(c), 3), "numeric (x^2+x+1) zeta(1,2) = zeta(3)");
    let lib = builtin_ffunctions(c).unwrap();
    let (le, f12, lt) = (lib.get("F_<=12").unwrap(), lib.get("F_12").unwrap(), lib.get("F_<3").unwrap());
    let g3 = lib.g().twist(1).pow(3).unwrap();
    o.check(le.twist(1).sub(&f12.twist(1)) == g3.mul(le), "F_<=12^(1) - F_12^(1) = (g^(1))^3 F_<=12");
    let e = FFunction::from_poly(c, poly(c.field, &[1, 1, 1])).mul(le).sub(lt);
    let lead = e.weighted_leading_term().unwrap();
    o.check(lead.alpha < 0, format!("weighted degree of E has alpha {}", lead.alpha));
    o.note(format!("E leading alpha {} beta {}", lead.alpha, lead.beta));
    o.pass(&verify::verify_theorem("thm-3.3", Some((2, 8)), PRECISION, GUARD).unwrap());
    o.within(t, Duration::from_secs(60));
}

fn c2_specializations(o: &mut Outcome) {
    let t = Instant::now();
    let c = Curve::builtin(CaseI);
    let lib = builtin_ffunctions(c).unwrap();
    let sums = PowerSums::shared(c);
    let mut n = 0;
    for sp in verify::specializations(CaseI).iter().take(6) {
        let f = lib.get(sp.name).unwrap();
        for d in 2..=8 {
            let lhs = ell_coefficient(c, d).unwrap().pow(sp.weight).mul(&sums.evaluate(d, &sp.tuple, sp.mode));
            o.check(f.specialize(d).unwrap() == lhs, format!("{} at d = {d}", sp.name));
            n += 1;
        }
    }
    o.note(format!("{n} identities"));
    o.pass(&verify::verify_theorem("thm-3.5", Some((2, 8)), PRECISION, GUARD).unwrap());
    o.within(t, Duration::from_secs(120));
}

fn c3_weight_seven(o: &mut Outcome) {
    let c = Curve::builtin(CaseI);
    let a = kpoly(c, &[1, 0, 0, 1, 0, 1, 1, 0, 1]);
    let b = kpoly(c, &[0, 0, 1, 0, 1]);
    o.check(numeric_identity(c, &a, &[3, 4], &b, 7), "numeric identity for zeta(3,4)");
    let sys = known_systems().into_iter().find(|s| s.case == CaseI && s.target == "F_<=34").unwrap();
    let run = replay_system(&sys).unwrap();
    o.check(run.outcome == "unique" && run.kernel_dim == 0, format!("solver outcome {}", run.outcome));
    o.check(run.matches_data == Some(true), format!("solution differs from data: {:?}", run.diff));
    o.note(format!("solver {} unknowns, {} equations", run.unknowns, run.equations));
    let lib = builtin_ffunctions(c).unwrap();
    let r = lib.get("F_<7").unwrap().leading_ratio(lib.get("F_<=34").unwrap()).unwrap();
    o.check(r.alpha_diff == 0 && r.ratio == a.div(&b).unwrap(), format!("leading ratio {}", r.ratio));
    o.pass(&verify::verify_theorem("thm-5.1", None, PRECISION, GUARD).unwrap());
}

/// `deg (a S_<=d(s) - b S_<d(w))`, the degree of `E(d)/ell_d^w`.
fn scaled_error_degree(c: Curve, a: &KElem, s: &[u32], b: &KElem, w: u32, d: u32) -> i64 {
    let sums = PowerSums::shared(c);
    let e = a.mul(&sums.evaluate(d, s, SumMode::UpTo)).sub(&b.mul(&sums.evaluate(d, &[w], SumMode::Below)));
    e.degree().unwrap()
}

fn c4_other_curves(o: &mut Outcome) {
    for id in ["thm-A", "thm-B", "thm-C"] {
        o.pass(&verify::verify(id, &verify::VerifyOptions { precision: PRECISION, ..Default::default() }).unwrap());
    }
    type Law = fn(i64) -> i64;
    let ell_laws: [(CurveId, Law); 3] = [
        (CaseII, |d| -(3i64.pow(d as u32 + 1) - 3) / 2),
        (CaseIII, |d| -8 * (4i64.pow(d as u32) - 1) / 3),
        (CaseIV, |d| -(2i64.pow(d as u32 + 2) - 2)),
    ];
    for (id, law) in ell_laws {
        let c = Curve::builtin(id);
        let got: Vec<i64> = (1..=6).map(|d| ell_coefficient(c, d).unwrap().degree().unwrap()).collect();
        for (d, g) in (1..=6).zip(&got) {
            o.check(*g == law(d), format!("{id} deg ell_{d}"));
        }
        o.note(format!("{id} deg ell {got:?}"));
    }

    // E(d) degrees straight from power sums
    let ii = Curve::builtin(CaseII);
    let a = kpoly(ii, &[-1, 0, 1, -1, 1, 0, 1, 0, 0, 1]);
    let b = kpoly(ii, &[1, -1, 0, 1]);
    for d in 1..=5u32 {
        let ell = ell_coefficient(ii, d).unwrap().degree().unwrap();
        let e = scaled_error_degree(ii, &a, &[2, 6], &b, 8, d) + 8 * ell;
        o.check(e == -(-27 + 15 * 3i64.pow(d)), format!("case-ii deg E({d})"));
    }
    let iii = Curve::builtin(CaseIII);
    let a = kpoly(iii, &[1, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1]);
    let b = kpoly(iii, &[1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1]);
    for d in 1..=4u32 {
        let e = scaled_error_degree(iii, &a, &[3, 12], &b, 15, d);
        o.check(e == -(-40 + 4i64.pow(d + 1)), format!("case-iii deg E({d})/ell^15"));
    }
    let iv = Curve::builtin(CaseIV);
    let a = kpoly(iv, &[1, 1, 0, 1, 1, 1, 1, 0, 1]);
    let b = kpoly(iv, &[1, 1, 0, 1, 0, 1, 1]);
    let mut scaled = Vec::new();
    for d in 2..=7u32 {
        let e = scaled_error_degree(iv, &a, &[1, 2], &b, 3, d);
        scaled.push(e);
        o.check(e == -(-12 + 2i64.pow(d)), format!("case-iv deg E({d})/ell^3"));
    }
    o.note(format!("case-iv deg E/ell^3 for d = 2..7: {scaled:?}"));

    // solver systems of the three appendices
    let want: BTreeMap<(CurveId, &str), usize> = [
        ((CaseII, "F_<=26"), 35),
        ((CaseIII, "F_<=3,12"), 78),
        ((CaseIV, "F_<1"), 28),
        ((CaseIV, "F_<=12"), 90),
        ((CaseIV, "F_<3"), 95),
        ((CaseI, "F_<=34"), 28),
    ]
    .into_iter()
    .collect();
    for sys in known_systems() {
        let Some(&n) = want.get(&(sys.case, sys.target)) else { continue };
        let run = replay_system(&sys).unwrap();
        o.check(run.unknowns == n, format!("{} {} has {} unknowns, expected {n}", sys.case, sys.target, run.unknowns));
        o.check(run.outcome == "unique" && run.matches_data == Some(true), format!("{} {} solution", sys.case, sys.target));
    }
}

fn c5_ratios(o: &mut Outcome) {
    let t = Instant::now();
    for (id, top) in [(CaseI, 4), (CaseII, 4), (CaseIII, 3), (CaseIV, 4)] {
        for n in 1..=top {
            o.pass(&verify::verify_ratio_family(id, n, SCAN_PRECISION, GUARD).unwrap());
        }
    }
    let c = Curve::builtin(CaseI);
    let f = c.field;
    let r1 = RatFunc::new(poly(f, &[1]), poly(f, &[1, 1, 1]));
    o.check(verify::ratio_display(CaseI, 1).unwrap() == KElem::from_ratfunc(c, &r1), "R_1 = 1/(x^2+x+1)");
    let lhs = &poly(f, &[1, 1, 1]).pow(2) * &poly(f, &[1, 0, 0, 1, 0, 1, 1, 0, 1]);
    o.check(lhs == poly(f, &[1, 0, 1, 1, 1, 0, 1, 0, 0, 1, 0, 0, 1]), "R_2 denominator factorization");
    o.note(format!("{:.1}s", t.elapsed().as_secs_f64()));
}

fn c6_genus_zero(o: &mut Outcome) {
    for id in [Genus0Q2, Genus0Q3] {
        for n in 1..=2 {
            for k in 0..=1 {
                o.pass(&verify::verify_zetalike_family(id, n, k, SCAN_PRECISION, GUARD).unwrap());
            }
        }
    }
    for (id, q) in [(Genus0Q2, 2u32), (Genus0Q3, 3)] {
        let c = Curve::builtin(id);
        let sums = PowerSums::shared(c);
        // t - t^q
        let mut v = vec![0i64; q as usize + 1];
        v[1] = 1;
        v[q as usize] = -1;
        let b = kpoly(c, &v).pow(q as i64 - 1);
        for d in 1..=8 {
            let lhs = sums.at(d, &[q - 1, q * (q - 1)]);
            let rhs = sums.power_sum(d - 1, q * q - 1).div(&b).unwrap();
            o.check(lhs == rhs, format!("q = {q}, d = {d}"));
        }
    }
    o.note("family tuples for q = 2, 3, n <= 2, k <= 1; power sum identity for d = 1..8");
}

fn c7_relative(o: &mut Outcome) {
    o.pass(&verify::verify_relative(CaseI, RELATIVE_PRECISION).unwrap());
    let c = Curve::builtin(CaseI);
    for d in [1, 2] {
        for k in 1..=8 {
            o.check(relative_power_sum(c, Base::Y, d, &[k]).unwrap().is_zero(), format!("relative S_{d}({k}) over F_2[y]"));
        }
    }
    o.note(format!("{} tuples", verify::relative_tuples().len()));
}

fn c8_rank(o: &mut Outcome) {
    let t = Instant::now();
    let runs = [
        (verify::QuantitySet::Weight3Eight, 3..=10, 8),
        (verify::QuantitySet::Weight3Ten, 1..=10, 10),
        (verify::QuantitySet::PlantedFrobenius, 1..=8, 3),
    ];
    for (set, range, rank) in runs {
        let r = verify::rank_experiment(CaseI, set, range).unwrap();
        o.pass(&r);
        o.check(r.witness("rank").map(|w| w.num_coeffs.clone()) == Some(vec![rank]), format!("{} rank", set.name()));
    }
    o.note(format!("{:.1}s", t.elapsed().as_secs_f64()));
}

fn runner(cases: u32) -> TestRunner {
    let config = Config { failure_persistence: None, ..Config::with_cases(cases) };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn arb_kelem(c: Curve) -> impl Strategy<Value = KElem> {
    let q = c.q() as u8;
    let small = move || prop::collection::vec(0..q, 0..3).prop_map(move |v| Poly::from_coeffs(c.field, v));
    (small(), small(), 0..q).prop_map(move |(a, b, s)| KElem::new(c, a, b, Poly::from_coeffs(c.field, vec![s, 1])))
}

fn arb_ffunction(c: Curve, n: usize) -> impl Strategy<Value = FFunction> {
    prop::collection::vec(arb_kelem(c), 2 * n).prop_map(move |v| {
        let (x, y) = (FFunction::big_x(c), FFunction::big_y(c));
        let mut z = FFunction::zero(c);
        for (i, k) in v.iter().enumerate() {
            let mono = x.pow((i % n) as i64).unwrap();
            let mono = if i < n { mono } else { mono.mul(&y) };
            z = z.add(&FFunction::constant(k).mul(&mono));
        }
        z
    })
}

const CASES: [CurveId; 4] = [CaseI, CaseII, CaseIII, CaseIV];

fn c9_properties(o: &mut Outcome) {
    // iterated sums against enumeration, every tuple of weight <= 8
    let mut compared = 0;
    for id in CurveId::ALL {
        let c = Curve::builtin(id);
        let sums = PowerSums::shared(c);
        let mut single: BTreeMap<(u32, u32), KElem> = BTreeMap::new();
        for d in 0..=6 {
            for k in 1..=8 {
                single.insert((d, k), brute::power_sum(c, d, k));
            }
        }
        for t in tuples_up_to(8) {
            for d in 0..=6 {
                let want = brute::iterated_with(c, d, &t, |d, k| single[&(d, k)].clone());
                o.check(sums.at(d, &t) == want, format!("{id} S_{d}{t:?}"));
                compared += 1;
            }
        }
    }
    o.note(format!("{compared} iterated sums"));

    let mut twists = 0;
    for id in CASES {
        let c = Curve::builtin(id);
        let r = runner(25).run(&(arb_ffunction(c, 3), 3u32..6), |(f, d)| {
            prop_assert_eq!(f.twist(1).specialize(d).unwrap(), f.specialize(d + 1).unwrap());
            prop_assert_eq!(f.twist(-1).specialize(d).unwrap(), f.specialize(d - 1).unwrap());
            Ok(())
        });
        o.check(r.is_ok(), format!("{id} twist/specialize: {r:?}"));
        twists += 25;
    }
    o.note(format!("{twists} twist checks"));

    let fq = prop_oneof![Just(Fq::F2), Just(Fq::F3), Just(Fq::F4)];
    let planted = fq.prop_flat_map(|f| {
        let q = f.q() as u8;
        (Just(f), prop::collection::vec(0..q, 1..12), prop::collection::vec(0..q, 1..12), 1..q)
    });
    let r = runner(100).run(&planted, |(f, n, mut d, lead)| {
        d.push(lead);
        let r = RatFunc::new(Poly::from_coeffs(f, n), Poly::from_coeffs(f, d));
        let s = LaurentSeries::from_ratio(r.num(), r.den(), 60);
        prop_assert_eq!(rational_reconstruct(&s, DEFAULT_GUARD), Some(r));
        Ok(())
    });
    o.check(r.is_ok(), format!("reconstruction: {r:?}"));
    o.note("100 reconstructions");

    for id in CASES {
        let c = Curve::builtin(id);
        let g = builtin_ffunctions(c).unwrap().g().twist(1);
        let r = runner(50).run(&(arb_ffunction(c, 4), 1i64..4), |(z0, w)| {
            let mult = g.pow(w).unwrap();
            let rhs = z0.twist(1).sub(&mult.mul(&z0));
            let eq = DifferenceEquation::new(mult, rhs, Form::Standard, Some((3, 3)));
            let rep = solve_difference(&eq).unwrap();
            prop_assert_eq!(rep.outcome.unique(), Some(&z0));
            Ok(())
        });
        o.check(r.is_ok(), format!("{id} solver round trip: {r:?}"));
    }
    o.note("50 solver round trips per case");
}

/// Every composition of weight at most `w`.
fn tuples_up_to(w: u32) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = Vec::new();
    let mut frontier: Vec<Vec<u32>> = (1..=w).map(|k| vec![k]).collect();
    while !frontier.is_empty() {
        out.extend(frontier.iter().cloned());
        let mut next = Vec::new();
        for t in &frontier {
            let s: u32 = t.iter().sum();
            for k in 1..=w - s {
                let mut u = t.clone();
                u.push(k);
                next.push(u);
            }
        }
        frontier = next;
    }
    out
}

fn c10_scans(o: &mut Outcome) {
    let t = Instant::now();
    let r = verify::scan_zetalike(Genus0Q2, 11, 2, SCAN_PRECISION, GUARD).unwrap();
    o.pass(&r);
    let pairs = r.params["pair_hits"].to_string();
    for p in ["(1,3)/(2,2)", "(2,3)/(3,2)"] {
        o.check(pairs.contains(&format!("\"{p}\"")), format!("genus0-q2 pair {p}"));
    }
    o.note(format!("genus0-q2 unexplained pairs {}", r.params["unexplained_pairs"]));
    let r = verify::scan_zetalike(CaseI, 12, 2, SCAN_PRECISION, GUARD).unwrap();
    o.pass(&r);
    o.check(r.params["zetalike_outside_family"].as_array().is_some_and(|v| v.is_empty()), "case-i hits outside the family");
    o.check(r.params["unexplained_pairs"].as_array().is_some_and(|v| v.is_empty()), "case-i unexplained pairs");
    o.note(format!("case-i primitive zetalike {}", r.params["zetalike_primitive"]));
    o.within(t, Duration::from_secs(30 * 60));
}

fn main() {
    let criteria: [(&str, fn(&mut Outcome)); 10] = [
        ("sum identity", c1_sum_identity),
        ("specializations", c2_specializations),
        ("weight seven", c3_weight_seven),
        ("other curves", c4_other_curves),
        ("conjectured ratios", c5_ratios),
        ("genus zero", c6_genus_zero),
        ("relative zeta", c7_relative),
        ("rank", c8_rank),
        ("properties", c9_properties),
        ("scans", c10_scans),
    ];
    let filter = std::env::args().skip(1).find(|a| !a.starts_with('-'));
    let known = known_failures();
    let mut unexpected = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        if filter.as_ref().is_some_and(|s| !name.contains(s.as_str())) {
            continue;
        }
        let mut o = Outcome::new();
        f(&mut o);
        let verdict = if o.failures.is_empty() { "PASS" } else { "FAIL" };
        let notes = o.notes.join("; ");
        if o.failures.is_empty() {
            println!("criterion {:>2} {verdict} {name}: {notes}", i + 1);
        } else {
            println!("criterion {:>2} {verdict} {name}: {}; {notes}", i + 1, o.failures.join(", "));
        }
        unexpected += o.failures.iter().filter(|f| !known.contains(*f)).count();
    }
    if unexpected > 0 {
        eprintln!("{unexpected} unexpected failures");
        std::process::exit(1);
    }
}

use super::*;
use crate::curve::CurveId::*;

fn zero_ms(mut r: Report) -> Report {
    r.ms = 0;
    r
}

#[test]
fn verdict_combination() {
    use Verdict::*;
    assert_eq!(Pass.and(Pass), Pass);
    assert_eq!(Pass.and(Inconclusive), Inconclusive);
    assert_eq!(Inconclusive.and(Fail), Fail);
    assert_eq!(Fail.and(Pass), Fail);
    assert_eq!(Fail.as_str(), "FAIL");
}

#[test]
fn unknown_target_is_an_error() {
    assert!(verify("thm-9.9", &VerifyOptions::default()).is_err());
    assert!(verify("nonsense", &VerifyOptions::default()).is_err());
}

#[test]
fn low_precision_is_inconclusive() {
    let o = VerifyOptions { precision: 4, ..Default::default() };
    let r = verify("thm-3.3", &o).unwrap();
    assert_eq!(r.verdict, Verdict::Inconclusive, "{:?}", r.diagnostics);
}

#[test]
fn weight_seven_ratio_witness() {
    let r = verify_theorem("thm-5.1", Some((2, 4)), 200, 10).unwrap();
    assert_eq!(r.verdict, Verdict::Pass, "{:?}", r.diagnostics);
    let w = r.witness("ratio").unwrap();
    assert_eq!(w.num_coeffs, vec![0, 0, 1, 0, 1]);
    assert_eq!(w.den_coeffs, vec![1, 0, 0, 1, 0, 1, 1, 0, 1]);
}

#[test]
fn json_is_deterministic_and_round_trips() {
    let a = zero_ms(verify_theorem("thm-3.3", Some((2, 5)), 200, 10).unwrap());
    let b = zero_ms(verify_theorem("thm-3.3", Some((2, 5)), 200, 10).unwrap());
    assert_eq!(a.verdict, Verdict::Pass);
    assert_eq!(a.to_json(), b.to_json());
    let back = Report::from_json(&a.to_json()).unwrap();
    assert_eq!(back, a);
    assert_eq!(back.to_json(), a.to_json());
}

#[test]
fn witness_encodings() {
    let w = Witness::integer("rank", 8);
    assert_eq!((w.num_coeffs, w.den_coeffs), (vec![8], vec![1]));
    let c = crate::curve::Curve::builtin(CaseI);
    let y = crate::curve::KElem::from_ring(&crate::curve::RingElem::y(c));
    let ws = Witness::kelem("v", &y);
    assert_eq!(ws.len(), 2);
    assert_eq!(ws[1].name, "v*y");
    assert_eq!(ws[1].num_coeffs, vec![1]);
}

#[test]
fn empty_scan_table_has_header() {
    let s = scan_table_csv(&[]).unwrap();
    assert_eq!(s, "tuple,weight,depth,verdict,ratio\n");
}

#[test]
fn scan_enumeration_order() {
    let t = scan_tuples(4, 3);
    let want: Vec<Vec<u32>> =
        vec![vec![1, 1], vec![1, 1, 1], vec![1, 2], vec![2, 1], vec![1, 1, 2], vec![1, 2, 1], vec![1, 3], vec![2, 1, 1], vec![2, 2], vec![3, 1]];
    assert_eq!(t, want);
}

#[test]
fn small_scans() {
    let r = scan_zetalike(Genus0Q2, 6, 2, 128, 10).unwrap();
    assert_eq!(r.verdict, Verdict::Pass, "{:?}", r.diagnostics);
    let pairs = r.params["pair_hits"].to_string();
    assert!(pairs.contains("(1,3)/(2,2)"));
    assert!(pairs.contains("(2,3)/(3,2)"));
    assert_eq!(r.params["unexplained_pairs"], serde_json::json!(["(2,3)/(3,2)"]));

    let r = scan_zetalike(CaseI, 8, 2, 128, 10).unwrap();
    assert_eq!(r.verdict, Verdict::Pass, "{:?}", r.diagnostics);
    assert_eq!(r.params["zetalike_primitive"], serde_json::json!(["1,2", "3,4"]));
    let entries = scan_entries(&r).unwrap();
    let e24 = entries.iter().find(|e| e.tuple == [2, 4]).unwrap();
    assert_eq!(e24.verdict, ScanOutcome::Zetalike);
    assert!(e24.family && !e24.primitive);
    let csv = scan_table_csv(&entries).unwrap();
    assert_eq!(csv.lines().count(), entries.len() + 1);
}

#[test]
fn scan_rejects_depth_one() {
    assert!(scan_zetalike(CaseI, 5, 1, 128, 10).is_err());
}

#[test]
fn rank_sets() {
    let r = rank_experiment(CaseI, QuantitySet::PlantedFrobenius, 1..=6).unwrap();
    assert_eq!(r.verdict, Verdict::Pass, "{:?}", r.diagnostics);
    assert_eq!(r.witness("rank").unwrap().num_coeffs, vec![3]);
    let r = rank_experiment(CaseI, QuantitySet::Weight3Eight, 3..=10).unwrap();
    assert_eq!(r.verdict, Verdict::Pass, "{:?}", r.diagnostics);
    assert_eq!(r.witness("rank").unwrap().num_coeffs, vec![8]);
    assert!(QuantitySet::parse("eleven").is_err());
}

#[test]
fn conjecture_displays_reduce() {
    let c = crate::curve::Curve::builtin(CaseI);
    let p = |v: &[i64]| crate::algebra::Poly::from_ints(c.field, v);
    let r1 = ratio_display(CaseI, 1).unwrap();
    let want = crate::algebra::RatFunc::new(p(&[1]), p(&[1, 1, 1]));
    assert_eq!(r1, crate::curve::KElem::from_ratfunc(c, &want));
    assert!(ratio_display(Genus0Q2, 1).is_err());
    assert_eq!(ratio_tuple(2, 2), vec![3, 4]);
    assert_eq!(ratio_tuple(3, 1), vec![2, 6]);
}

#[test]
fn conjecture_first_members() {
    for id in [CaseI, CaseII, CaseIV] {
        let r = verify_ratio_family(id, 1, 128, 10).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{id}: {:?}", r.diagnostics);
    }
    let r = verify_zetalike_family(Genus0Q3, 1, 1, 128, 10).unwrap();
    assert_eq!(r.verdict, Verdict::Pass, "{:?}", r.diagnostics);
    assert!(verify_ratio_family(CaseI, 0, 128, 10).is_err());
}

#[test]
fn relative_case_i() {
    let r = verify_relative(CaseI, 150).unwrap();
    assert_eq!(r.verdict, Verdict::Pass, "{:?}", r.diagnostics);
    assert_eq!(r.witness("vanishing sums over y").unwrap().num_coeffs, vec![12]);
}

#[test]
fn text_rendering_names_the_verdict() {
    let r = verify_relative(CaseIV, 64).unwrap();
    let t = r.to_text();
    assert!(t.contains("relative"));
    assert!(t.contains(r.verdict.as_str()));
}

use ffmzv::verify::{verify, zeta_report, Report, VerifyOptions, TARGETS};
use ffmzv::curve::CurveId;

#[test]
fn every_target_round_trips_through_json() {
    let o = VerifyOptions::default();
    for t in TARGETS {
        let r = verify(t, &o).unwrap();
        let text = r.to_json();
        let back = Report::from_json(&text).unwrap();
        assert_eq!(back, r, "{t}");
        assert_eq!(back.to_json(), text, "{t}");
    }
}

#[test]
fn json_keys_are_sorted() {
    let r = zeta_report(CurveId::Genus0Q3, &[2, 6], 64, 24).unwrap();
    let text = r.to_json();
    let keys: Vec<usize> = ["\"diagnostics\"", "\"ms\"", "\"params\"", "\"target\"", "\"verdict\"", "\"witnesses\""]
        .iter()
        .filter_map(|k| text.find(k))
        .collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]), "{text}");
    assert!(!r.params.contains_key("odd"));
}

//! Scan depth-2 tuples for zetalike values and print the table as CSV.

use ffmzv::curve::CurveId;
use ffmzv::verify::{scan_entries, scan_table_csv, scan_zetalike};

fn main() {
    let id = std::env::args().nth(1).map(|s| CurveId::parse(&s).unwrap()).unwrap_or(CurveId::Genus0Q2);
    let r = scan_zetalike(id, 9, 2, 128, 10).unwrap();
    print!("{}", scan_table_csv(&scan_entries(&r).unwrap()).unwrap());
    eprintln!("{}: {}", id, r.verdict);
    for p in r.params["pair_hits"].as_array().unwrap() {
        eprintln!("  {} = {}", p["pair"], p["ratio"]);
    }
}

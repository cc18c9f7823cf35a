//! Run one verification target and print its JSON report.
//!
//! `cargo run --release --example verify_theorem -- thm-5.1`

use ffmzv::verify::{verify, VerifyOptions, TARGETS};

fn main() {
    let target = std::env::args().nth(1).unwrap_or_else(|| "thm-3.3".into());
    let o = VerifyOptions { precision: 200, ..Default::default() };
    match verify(&target, &o) {
        Ok(r) => {
            println!("{}", r.to_json());
            eprintln!("{target}: {}", r.verdict);
        }
        Err(e) => {
            eprintln!("{e}; targets: {}", TARGETS.join(" "));
            std::process::exit(2);
        }
    }
}

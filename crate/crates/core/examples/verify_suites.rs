//! Runs every theorem suite and prints one line per suite.
//!
//! Run with `cargo run --release --example verify_suites [seed]`.

use nearalg::verify::{run_all, SuiteOptions};

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    let opts = SuiteOptions { seed, ..SuiteOptions::default() };
    for s in run_all(&opts) {
        println!(
            "{:<13} {:>5} checked  {:>2} violations  {:>2} refuted  {:>8.1} ms",
            s.name,
            s.checked,
            s.violations.len(),
            s.refuted.len(),
            s.elapsed_ms
        );
        for r in s.refuted.iter().take(3) {
            println!("    refuted: {}: {} {:?}", r.subject, r.message, r.elements);
        }
    }
}

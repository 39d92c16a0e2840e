//! Every near-ring addition on a monoid, optionally grouped by monoid
//! automorphisms.
//!
//! Run with `cargo run --example enumerate_nearrings`.

use std::sync::Arc;

use nearalg::enumerate::{enumerate_nearrings, oracle_enumerate_nearrings, EnumerationTask};
use nearalg::fixtures;

fn main() {
    println!("{:<6} {:>6} {:>7}", "monoid", "found", "oracle");
    for (name, m) in fixtures::small_monoids() {
        let m = Arc::new(m);
        let fast = enumerate_nearrings(&EnumerationTask::new(Arc::clone(&m))).expect("small");
        let slow = oracle_enumerate_nearrings(&m).expect("small");
        println!("{name:<6} {:>6} {:>7}", fast.additions.len(), slow.additions.len());
    }

    let d = nearalg::nearring::dickson_fixture();
    let task = EnumerationTask {
        dedup_by_automorphism: true,
        ..EnumerationTask::new(Arc::clone(d.monoid()))
    };
    let result = enumerate_nearrings(&task).expect("nine elements");
    println!("\nDickson monoid: {} additions", result.additions.len());
    for o in result.orbits.as_deref().unwrap_or_default() {
        println!("  orbit of addition {} with {} member(s)", o.representative, o.members.len());
    }
}

//! The `#` construction on `R × R`: `(a,b)#(c,d) = (ac, bc + aⁿd)`.
//!
//! Run with `cargo run --example hash_construction`.

use nearalg::fixtures;
use nearalg::nearring::{classify, hash_construction};

fn main() {
    let h = hash_construction(&fixtures::zn_ring(2), 1).expect("Z/2 satisfies the power law");
    let m = h.monoid();
    let eta: Vec<&str> = m.eta_solutions().iter().map(|&e| m.label(e)).collect();
    println!("Z/2 # 1: {} elements, ring = {}", h.order(), classify(&h).is_ring);
    println!("  solutions of eta^2 = 1: {}", eta.join(", "));
    let one_zero = 2;
    println!(
        "  additive inverse of {} is {}, while -1 of the monoid is {}",
        m.label(one_zero),
        m.label(h.additive().neg(one_zero)),
        m.label(m.minus_one().expect("unique non-identity solution"))
    );

    println!("\n{:<6} {:>3}  outcome", "R", "n");
    for k in [2, 3, 4, 6] {
        for n in 1..=3 {
            let outcome = match hash_construction(&fixtures::zn_ring(k), n) {
                Ok(h) if classify(&h).is_ring => "ring".to_string(),
                Ok(_) => "near-ring, not a ring".to_string(),
                Err(e) => e.to_string(),
            };
            println!("Z/{k:<4} {n:>3}  {outcome}");
        }
    }
}

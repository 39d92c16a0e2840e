//! ℤ/9 with its ordinary addition and the addition transported along the
//! multiplicative automorphism exchanging 3 and 6, and the product module.
//!
//! The product is not an Andre module: QK2 fails at (1,1) even for the
//! largest QK1 set. Each factor on its own is Andre.
//!
//! Run with `cargo run --example z9_andre_module`.

use nearalg::andre::product_of_designated;
use nearalg::{check_andre, check_nvs, fixtures};

fn main() {
    let r = fixtures::z9_multinearring();
    let v = fixtures::z9_product_module();
    let twisted = fixtures::z9_twisted_ring();
    println!("twisted addition: 3 +φ 3 = {}, 1 +φ 2 = {}", twisted.add(3, 3), twisted.add(1, 2));

    let a = check_andre(&v, &r).expect("same monoid");
    let pair = |x: usize| format!("({},{})", x / 9, x % 9);
    println!("V: |Q*| = {}, Andre = {}", a.qstar.len(), a.is_andre);
    if let Some(x) = a.qk2_failure {
        let c = v.cyclic_submodule(x);
        let meet = c.intersection(&a.qstar);
        println!(
            "  QK2 fails at {}: its cyclic submodule has {} elements and meets Q* in {:?}",
            pair(x),
            c.len(),
            meet.iter().map(pair).collect::<Vec<_>>()
        );
    }
    let nvs = check_nvs(&v);
    println!(
        "  near-vector space = {} ({})",
        nvs.is_nvs,
        nvs.failure.map(|f| f.describe(v.monoid())).unwrap_or_default()
    );

    for (label, selection) in [("Z/9", vec![0]), ("Z/9 twisted", vec![1]), ("Z/9 × Z/9 twisted", vec![0, 1])] {
        let p = product_of_designated(&r, &selection).expect("valid selection");
        println!(
            "{label:<18} Andre = {:<5} unit vectors satisfy QK2 = {}",
            p.andre.is_andre, p.units_qk2.holds
        );
    }
}

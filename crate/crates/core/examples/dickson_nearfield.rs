//! The Dickson near-field of order 9 and the near-vector spaces J and J².
//!
//! Run with `cargo run --example dickson_nearfield`.

use std::collections::BTreeMap;

use nearalg::andre::check_tfae;
use nearalg::nearring::{classify, dickson_fixture, Gf9};
use nearalg::{check_nvs, fixtures};

fn main() {
    let d = dickson_fixture();
    let c = classify(&d);
    println!("near-field = {}, ring = {}", c.is_nearfield, c.is_ring);
    if let Some((a, b, x)) = c.witnesses.right_distributivity {
        println!(
            "  right distributivity fails: ({} + {})·{} differs from {}·{} + {}·{}",
            Gf9::label(a),
            Gf9::label(b),
            Gf9::label(x),
            Gf9::label(a),
            Gf9::label(x),
            Gf9::label(b),
            Gf9::label(x)
        );
    }
    let mut census = BTreeMap::new();
    for a in (0..9).filter(|&a| a != d.zero()) {
        *census.entry(d.monoid().element_order(a).expect("units")).or_insert(0) += 1;
    }
    println!("multiplicative orders of non-zero elements: {census:?}");

    for (name, v) in [("J", fixtures::dickson_module()), ("J²", fixtures::dickson_square())] {
        let nvs = check_nvs(&v);
        let tfae = check_tfae(&v).expect("near-vector space");
        println!(
            "{name}: near-vector space = {}, {} submodules, all generated by their quasi-kernels = {}",
            nvs.is_nvs, tfae.submodules_checked, tfae.submodules_generated
        );
    }
}

//! Writing vectors as sums of quasi-kernel elements, with certificates.
//!
//! The module is the Dickson near-field times a copy of it with a
//! transported addition, over every near-ring addition on the Dickson
//! monoid.
//!
//! Run with `cargo run --example subspace_decomposition`.

use std::collections::BTreeMap;

use nearalg::andre::Decomposer;
use nearalg::fixtures;

fn main() {
    let (r, v) = fixtures::dickson_mixed_pair();
    let dec = Decomposer::new(&v, &r).expect("hypotheses hold");
    println!("|V| = {}, |Q(V)| = {}, {} designated additions", v.order(), dec.quasi_kernel().len(), r.len());

    let mut lengths = BTreeMap::new();
    for x in 0..v.order() {
        let cert = dec.decompose(x).expect("every element decomposes");
        cert.validate(&v).expect("certificates re-validate");
        *lengths.entry(cert.m_v).or_insert(0) += 1;
    }
    println!("elements by m_v: {lengths:?}");

    let x = 9 + 1;
    let cert = dec.decompose(x).expect("decomposes");
    println!("\n(1,1) = {:?} with m_v = {}", cert.parts, cert.m_v);
    for s in &cert.trail {
        println!(
            "  step on {}: q1 = {}, q2 = {}, alpha = {}, beta = {} gives {} + {}",
            s.target, s.q1, s.q2, s.alpha, s.beta, s.v_prime, s.v_double_prime
        );
    }
}

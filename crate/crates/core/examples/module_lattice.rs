//! Submodules, quotients and the kernel/image/cokernel of a morphism.
//!
//! Run with `cargo run --example module_lattice`.

use nearalg::fixtures;
use nearalg::module::{enumerate_submodules, factorize, product, quotient, DEFAULT_SUBMODULE_BOUND};

fn main() {
    let klein = fixtures::klein_over_m2();
    let subs = enumerate_submodules(&klein, DEFAULT_SUBMODULE_BOUND).expect("small module");
    println!("Klein four-group over GF(2)'s monoid has {} submodules:", subs.len());
    for w in &subs {
        let q = quotient(&klein, w).expect("submodule");
        println!("  W = {:?}  |V/W| = {}  representatives {:?}", w.carrier(), q.module.order(), q.representatives);
    }

    // GF(3)² = GF(3) × GF(3); the first projection has the second axis as kernel.
    let line = fixtures::gf_power_module(3, 1);
    let plane = product(line.monoid(), &[line.clone(), line.clone()]).expect("same monoid");
    let p1 = plane.projection(0);
    let f = factorize(&p1).expect("morphism");
    println!("\nprojection GF(3)² → GF(3):");
    println!("  kernel   {:?}", f.kernel.carrier());
    println!("  image    {:?}", f.image.carrier());
    println!("  cokernel has {} element(s)", f.cokernel.module.order());
    assert_eq!(plane.module.order(), f.kernel.len() * f.image.len());

    let lattice = enumerate_submodules(&fixtures::gf_power_module(3, 3), DEFAULT_SUBMODULE_BOUND).expect("27 elements");
    let mut by_size = std::collections::BTreeMap::new();
    for w in &lattice {
        *by_size.entry(w.len()).or_insert(0) += 1;
    }
    println!("\nGF(3)³ subspaces by size: {by_size:?}");
}

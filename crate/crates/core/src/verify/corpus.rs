//! Module corpora for the verification suites: exhaustive small modules
//! over GF(2)'s monoid, seeded random modules over GF(3)'s monoid, and
//! random morphisms between fixed modules.

use std::collections::VecDeque;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::fixtures::{cyclic_group, product_group, zn_monoid};
use crate::group::FiniteAbelianGroup;
use crate::module::{MModule, ModuleMorphism};
use crate::subset::ElementSubset;
use crate::ElementIndex;

/// One abelian group of each isomorphism type of order `1..=8`.
pub fn small_groups(max_order: usize) -> Vec<FiniteAbelianGroup> {
    let mut out: Vec<FiniteAbelianGroup> = (1..=max_order.min(8)).map(cyclic_group).collect();
    for orders in [&[2, 2][..], &[2, 4], &[2, 2, 2]] {
        if orders.iter().product::<usize>() <= max_order {
            out.push(product_group(orders));
        }
    }
    out.sort_by_key(FiniteAbelianGroup::order);
    out
}

/// Generators of `v` as a module, chosen greedily in the given order.
pub fn module_generators(v: &MModule, order: impl IntoIterator<Item = ElementIndex>) -> Vec<ElementIndex> {
    let mut gens = Vec::new();
    let mut span = ElementSubset::from_elements(v.order(), [v.zero()]);
    for x in order {
        if span.len() == v.order() {
            break;
        }
        if !span.contains(x) {
            gens.push(x);
            span = v
                .generated_submodule(&ElementSubset::from_elements(v.order(), gens.iter().copied()))
                .carrier()
                .clone();
        }
    }
    gens
}

/// Extends `gens[i] ↦ images[i]` to an additive, equivariant map, or
/// returns `None` if the assignment is inconsistent.
pub fn extend_to_morphism(
    dom: &MModule,
    cod: &MModule,
    gens: &[ElementIndex],
    images: &[ElementIndex],
) -> Option<Vec<ElementIndex>> {
    let n = dom.order();
    let mut map: Vec<Option<ElementIndex>> = vec![None; n];
    let mut queue = VecDeque::new();
    let set = |x: ElementIndex, y: ElementIndex, map: &mut Vec<Option<ElementIndex>>, queue: &mut VecDeque<ElementIndex>| {
        match map[x] {
            None => {
                map[x] = Some(y);
                queue.push_back(x);
                true
            }
            Some(old) => old == y,
        }
    };
    if !set(dom.zero(), cod.zero(), &mut map, &mut queue) {
        return None;
    }
    for (&g, &t) in gens.iter().zip(images) {
        if !set(g, t, &mut map, &mut queue) {
            return None;
        }
    }
    let mut done: Vec<ElementIndex> = Vec::new();
    while let Some(x) = queue.pop_front() {
        let fx = map[x].expect("queued elements are mapped");
        for a in 0..dom.monoid().order() {
            if !set(dom.act(a, x), cod.act(a, fx), &mut map, &mut queue) {
                return None;
            }
        }
        done.push(x);
        for &y in &done {
            let fy = map[y].expect("done elements are mapped");
            if !set(dom.add(x, y), cod.add(fx, fy), &mut map, &mut queue) {
                return None;
            }
        }
    }
    map.into_iter().collect()
}

/// Every additive endomorphism of `g`.
pub fn group_endomorphisms(g: &FiniteAbelianGroup) -> Vec<Vec<ElementIndex>> {
    let v = MModule::trivial_action(Arc::new(zn_monoid(1)), g.clone());
    let gens = module_generators(&v, 0..v.order());
    let n = v.order();
    let mut out = Vec::new();
    let mut images = vec![0; gens.len()];
    loop {
        if let Some(map) = extend_to_morphism(&v, &v, &gens, &images) {
            out.push(map);
        }
        // Odometer over all image tuples.
        let mut i = 0;
        loop {
            if i == images.len() {
                return out;
            }
            images[i] += 1;
            if images[i] < n {
                break;
            }
            images[i] = 0;
            i += 1;
        }
    }
}

fn compose(f: &[ElementIndex], g: &[ElementIndex]) -> Vec<ElementIndex> {
    g.iter().map(|&x| f[x]).collect()
}

/// Every module structure over GF(2)'s monoid on a representative group
/// of each order up to `max_order`: `1` acts as the identity and `0` as an
/// idempotent endomorphism.
pub fn m2_modules(max_order: usize) -> Vec<MModule> {
    let m = Arc::new(zn_monoid(2));
    let mut out = Vec::new();
    for g in small_groups(max_order) {
        let id: Vec<ElementIndex> = (0..g.order()).collect();
        for e in group_endomorphisms(&g) {
            if compose(&e, &e) == e {
                out.push(
                    MModule::validate(Arc::clone(&m), g.clone(), vec![e, id.clone()])
                        .expect("idempotent endomorphisms give actions"),
                );
            }
        }
    }
    out
}

/// All `(0·, 2·)` action pairs over GF(3)'s monoid on `g`: an idempotent
/// `e` and an involution `s` with `s∘e = e∘s = e`.
fn m3_actions(g: &FiniteAbelianGroup) -> Vec<[Vec<ElementIndex>; 2]> {
    let ends = group_endomorphisms(g);
    let id: Vec<ElementIndex> = (0..g.order()).collect();
    let idem: Vec<&Vec<ElementIndex>> = ends.iter().filter(|e| compose(e, e) == **e).collect();
    let invol: Vec<&Vec<ElementIndex>> = ends.iter().filter(|s| compose(s, s) == id).collect();
    let mut out = Vec::new();
    for e in &idem {
        for s in &invol {
            if compose(s, e) == **e && compose(e, s) == **e {
                out.push([(*e).clone(), (*s).clone()]);
            }
        }
    }
    out
}

/// `count` seeded random modules over GF(3)'s monoid with at most
/// `max_order` elements, each relabelled by a random permutation so that
/// the zero is not always at index 0.
pub fn m3_random_modules<R: Rng>(rng: &mut R, count: usize, max_order: usize) -> Vec<MModule> {
    let m = Arc::new(zn_monoid(3));
    let pool: Vec<(FiniteAbelianGroup, Vec<[Vec<ElementIndex>; 2]>)> = small_groups(max_order)
        .into_iter()
        .map(|g| {
            let acts = m3_actions(&g);
            (g, acts)
        })
        .collect();
    (0..count)
        .map(|_| {
            let (g, acts) = pool.choose(rng).expect("at least the trivial group");
            let [e, s] = acts.choose(rng).expect("the zero map and identity always qualify");
            let n = g.order();
            let mut pi: Vec<ElementIndex> = (0..n).collect();
            pi.shuffle(rng);
            let mut add = vec![vec![0; n]; n];
            for a in 0..n {
                for b in 0..n {
                    add[pi[a]][pi[b]] = pi[g.add(a, b)];
                }
            }
            let id: Vec<ElementIndex> = (0..n).collect();
            let act: Vec<Vec<ElementIndex>> = [e, &id, s]
                .iter()
                .map(|f| {
                    let mut row = vec![0; n];
                    for v in 0..n {
                        row[pi[v]] = pi[f[v]];
                    }
                    row
                })
                .collect();
            MModule::validate(
                Arc::clone(&m),
                FiniteAbelianGroup::new(add).expect("relabelled group"),
                act,
            )
            .expect("relabelled action")
        })
        .collect()
}

/// A random morphism `dom → cod`: random images for a random generating
/// set, retried until consistent; the zero map after `tries` failures.
pub fn random_morphism<R: Rng>(dom: &MModule, cod: &MModule, rng: &mut R, tries: usize) -> ModuleMorphism {
    let mut order: Vec<ElementIndex> = (0..dom.order()).collect();
    for _ in 0..tries {
        order.shuffle(rng);
        let gens = module_generators(dom, order.iter().copied());
        let images: Vec<ElementIndex> = gens.iter().map(|_| rng.gen_range(0..cod.order())).collect();
        if let Some(map) = extend_to_morphism(dom, cod, &gens, &images) {
            return ModuleMorphism::new(dom.clone(), cod.clone(), map).expect("extension is a morphism");
        }
    }
    ModuleMorphism::zero(dom, cod).expect("same monoid")
}

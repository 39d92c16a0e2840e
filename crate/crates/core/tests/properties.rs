//! Property tests over seeded random modules, subsets and morphisms.

mod common;

use std::path::Path;
use std::sync::Arc;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use nearalg::andre::{check_qk2, max_qk1_set, MultiNearRing};
use nearalg::enumerate::{enumerate_nearrings, EnumerationTask};
use nearalg::module::factorize;
use nearalg::nat::{NatBlock, NatDocument, Structure, Workspace};
use nearalg::verify::corpus::{m3_random_modules, random_morphism};
use nearalg::{check_andre, fixtures, quasi_kernel, ElementSubset, FiniteAbelianGroup, MModule};

fn random_module(seed: u64) -> MModule {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    m3_random_modules(&mut rng, 1, 8).pop().expect("one module")
}

fn subset_from_mask(v: &MModule, mask: u64) -> ElementSubset {
    ElementSubset::from_elements(v.order(), (0..v.order()).filter(|&x| (mask >> x) & 1 == 1))
}

fn gf3() -> MultiNearRing {
    MultiNearRing::single(fixtures::zn_ring(3))
}

/// The same module with its elements renamed by `pi`.
fn relabel(v: &MModule, pi: &[usize]) -> MModule {
    let n = v.order();
    let mut add = vec![vec![0; n]; n];
    let mut act = vec![vec![0; n]; v.monoid().order()];
    for a in 0..n {
        for b in 0..n {
            add[pi[a]][pi[b]] = pi[v.add(a, b)];
        }
    }
    for (m, row) in act.iter_mut().enumerate() {
        for x in 0..n {
            row[pi[x]] = pi[v.act(m, x)];
        }
    }
    MModule::validate(Arc::clone(v.monoid()), FiniteAbelianGroup::new(add).unwrap(), act).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn qk1_sets_lie_inside_the_maximal_one(seed in any::<u64>(), mask in any::<u64>()) {
        let v = random_module(seed);
        let r = gf3();
        let qstar = max_qk1_set(&v, &r).unwrap().qstar;
        let q = subset_from_mask(&v, mask);
        let m = v.monoid().order();
        let qk1 = q.iter().all(|x| {
            x == v.zero()
                || r.designated().iter().any(|n| {
                    (0..m).all(|a| (0..m).all(|b| v.act(n.add(a, b), x) == v.add(v.act(a, x), v.act(b, x))))
                })
        });
        if qk1 {
            prop_assert!(q.is_subset(&qstar));
        }
    }

    #[test]
    fn qk2_membership_is_monotone(seed in any::<u64>(), small in any::<u64>(), extra in any::<u64>()) {
        let v = random_module(seed);
        let q = subset_from_mask(&v, small);
        let bigger = q.union(&subset_from_mask(&v, extra));
        prop_assert!(check_qk2(&v, &q).members.is_subset(&check_qk2(&v, &bigger).members));
    }

    #[test]
    fn andre_test_matches_brute_force(seed in any::<u64>()) {
        let v = random_module(seed);
        prop_assert_eq!(check_andre(&v, &gf3()).unwrap().is_andre, common::brute_force_andre(&v, &gf3()));
    }

    #[test]
    fn andre_test_ignores_labels(seed in any::<u64>()) {
        let v = random_module(seed);
        let mut pi: Vec<usize> = (0..v.order()).collect();
        pi.shuffle(&mut ChaCha8Rng::seed_from_u64(seed.rotate_left(17)));
        let w = relabel(&v, &pi);
        let a = check_andre(&v, &gf3()).unwrap();
        let b = check_andre(&w, &gf3()).unwrap();
        prop_assert_eq!(a.is_andre, b.is_andre);
        prop_assert_eq!(a.qstar.len(), b.qstar.len());
    }

    #[test]
    fn quasi_kernel_is_closed_under_the_action(seed in any::<u64>()) {
        let v = random_module(seed);
        let q = quasi_kernel(&v).qv;
        prop_assert_eq!(v.orbit(&q), q);
    }

    #[test]
    fn group_closure_is_the_spanned_subgroup(seed in any::<u64>(), mask in any::<u64>()) {
        let v = random_module(seed);
        let s = subset_from_mask(&v, mask);
        let c = v.group_closure(&s);
        let expected = common::span(&v, &s.to_vec());
        prop_assert_eq!(c.to_vec(), (0..v.order()).filter(|&x| expected[x]).collect::<Vec<_>>());
        prop_assert_eq!(v.group_closure(&c), c);
    }

    #[test]
    fn morphisms_satisfy_the_order_law(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mods = m3_random_modules(&mut rng, 2, 8);
        let f = random_morphism(&mods[0], &mods[1], &mut rng, 32);
        let fac = factorize(&f).unwrap();
        prop_assert_eq!(mods[0].order(), fac.kernel.len() * fac.image.len());
        prop_assert_eq!(fac.cokernel.module.order() * fac.image.len(), mods[1].order());
        for x in fac.kernel.carrier().iter() {
            prop_assert_eq!(f.apply(x), mods[1].zero());
        }
    }

    #[test]
    fn emitted_documents_parse_back_identically(seed in any::<u64>()) {
        let v = random_module(seed);
        let mut doc = NatDocument::default();
        doc.push(NatBlock::from_monoid("M", v.monoid())).unwrap();
        doc.push(NatBlock::from_module("V", "M", &v)).unwrap();
        let text = doc.emit();
        prop_assert_eq!(nearalg::nat::parse_nat(&text).unwrap().emit(), text.clone());
        let loaded = Workspace::new().load_text(&text, Path::new("mem.nat")).unwrap();
        match loaded.get("V") {
            Some(Structure::Module(w)) => prop_assert_eq!(w, &v),
            other => prop_assert!(false, "unexpected {:?}", other.map(Structure::kind)),
        }
    }

    #[test]
    fn enumerated_additions_are_sorted_distinct_near_rings(i in 0usize..10) {
        let (_, m) = fixtures::small_monoids().swap_remove(i);
        let result = enumerate_nearrings(&EnumerationTask::new(Arc::new(m))).unwrap();
        prop_assert!(result.additions.windows(2).all(|w| w[0] < w[1]));
        prop_assert_eq!(result.nearrings().len(), result.additions.len());
    }
}

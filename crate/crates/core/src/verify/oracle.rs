//! Deliberately naive reference implementations used to cross-check the
//! library. Nothing here calls the closure, orbit or Andre code in
//! `module` and `andre`; only the raw tables are consulted.

use crate::andre::MultiNearRing;
use crate::module::MModule;
use crate::ElementIndex;

/// Smallest subgroup containing the marked elements, by fixpoint iteration
/// over all pairwise sums.
pub fn naive_group_closure(v: &MModule, marked: &[bool]) -> Vec<bool> {
    let n = v.order();
    let mut s = marked.to_vec();
    s[v.zero()] = true;
    loop {
        let mut changed = false;
        for a in 0..n {
            if !s[a] {
                continue;
            }
            for b in 0..n {
                if s[b] {
                    let c = v.add(a, b);
                    if !s[c] {
                        s[c] = true;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return s;
        }
    }
}

fn naive_orbit(v: &MModule, marked: &[bool]) -> Vec<bool> {
    let mut out = vec![false; v.order()];
    for x in (0..v.order()).filter(|&x| marked[x]) {
        for a in 0..v.monoid().order() {
            out[v.act(a, x)] = true;
        }
    }
    out
}

/// The submodule generated by one element.
pub fn naive_cyclic(v: &MModule, x: ElementIndex) -> Vec<bool> {
    let mut single = vec![false; v.order()];
    single[x] = true;
    naive_group_closure(v, &naive_orbit(v, &single))
}

/// Non-zero `x` is distributive for some designated addition.
pub fn naive_qk1(v: &MModule, r: &MultiNearRing, x: ElementIndex) -> bool {
    let m = v.monoid().order();
    r.designated().iter().any(|nr| {
        (0..m).all(|a| (0..m).all(|b| v.act(nr.add(a, b), x) == v.add(v.act(a, x), v.act(b, x))))
    })
}

fn qk2_holds(v: &MModule, q: &[bool], cyclic: &[Vec<bool>]) -> bool {
    (0..v.order()).all(|x| {
        let meet: Vec<bool> = (0..v.order()).map(|y| cyclic[x][y] && q[y]).collect();
        naive_group_closure(v, &naive_orbit(v, &meet))[x]
    })
}

/// Decides "some `Q ⊆ V` satisfies QK1 and QK2" by trying every subset
/// whose non-zero members all satisfy QK1. Returns `None` if `V` has more
/// than `max_order` elements.
pub fn andre_by_powerset(v: &MModule, r: &MultiNearRing, max_order: usize) -> Option<bool> {
    let n = v.order();
    if n > max_order || n >= usize::BITS as usize {
        return None;
    }
    let cyclic: Vec<Vec<bool>> = (0..n).map(|x| naive_cyclic(v, x)).collect();
    let qk1: Vec<bool> = (0..n).map(|x| x == v.zero() || naive_qk1(v, r, x)).collect();
    for mask in 0usize..(1 << n) {
        let q: Vec<bool> = (0..n).map(|x| (mask >> x) & 1 == 1).collect();
        if (0..n).any(|x| q[x] && !qk1[x]) {
            continue;
        }
        if qk2_holds(v, &q, &cyclic) {
            return Some(true);
        }
    }
    Some(false)
}

/// Least number of non-zero quasi-kernel elements summing to each element,
/// computed by growing sum sets one summand at a time.
pub fn layered_sum_lengths(v: &MModule, q: &[ElementIndex]) -> Vec<Option<usize>> {
    let n = v.order();
    let gens: Vec<ElementIndex> = q.iter().copied().filter(|&x| x != v.zero()).collect();
    let mut out = vec![None; n];
    let mut layer = vec![false; n];
    layer[v.zero()] = true;
    for k in 0..=n {
        for x in 0..n {
            if layer[x] && out[x].is_none() {
                out[x] = Some(k);
            }
        }
        let mut next = vec![false; n];
        for x in (0..n).filter(|&x| layer[x]) {
            for &g in &gens {
                next[v.add(x, g)] = true;
            }
        }
        layer = next;
    }
    out
}

/// Elements whose orbit is a subgroup, found by testing every pair sum.
pub fn naive_quasi_kernel(v: &MModule) -> Vec<ElementIndex> {
    let m = v.monoid().order();
    (0..v.order())
        .filter(|&x| {
            let orbit: Vec<ElementIndex> = (0..m).map(|a| v.act(a, x)).collect();
            orbit.iter().all(|&p| orbit.iter().all(|&q| orbit.contains(&v.add(p, q))))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn oracle_matches_known_cases() {
        let z4 = fixtures::z4_over_m2();
        let r = MultiNearRing::single(fixtures::zn_ring(2));
        assert_eq!(andre_by_powerset(&z4, &r, 8), Some(false));
        let gf = fixtures::gf_power_module(2, 2);
        assert_eq!(andre_by_powerset(&gf, &r, 8), Some(true));
        assert_eq!(andre_by_powerset(&fixtures::gf_power_module(2, 4), &r, 8), None);
    }

    #[test]
    fn layered_lengths() {
        let v = fixtures::gf_power_module(3, 1);
        let l = layered_sum_lengths(&v, &[0, 1]);
        assert_eq!(l, vec![Some(0), Some(1), Some(2)]);
    }
}

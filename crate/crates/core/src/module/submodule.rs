use std::collections::HashSet;
use std::sync::Arc;

use super::{MModule, ModuleError, ModuleMorphism};
use crate::group::FiniteAbelianGroup;
use crate::subset::ElementSubset;
use crate::ElementIndex;

/// Largest module whose submodule lattice is enumerated without an explicit
/// bound.
pub const DEFAULT_SUBMODULE_BOUND: usize = 4096;

/// A subset that contains zero and is closed under addition, negation and
/// the action.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Submodule {
    carrier: ElementSubset,
}

impl Submodule {
    /// Certifies `carrier` as a submodule of `v`.
    pub fn new(v: &MModule, carrier: ElementSubset) -> Result<Self, ModuleError> {
        if carrier.universe() != v.order() {
            return Err(ModuleError::NotSubmodule(format!(
                "subset of a {}-element set, module has {}",
                carrier.universe(),
                v.order()
            )));
        }
        if !carrier.contains(v.zero()) {
            return Err(ModuleError::NotSubmodule("missing zero".into()));
        }
        for x in carrier.iter() {
            if !carrier.contains(v.neg(x)) {
                return Err(ModuleError::NotSubmodule(format!("-{x} missing")));
            }
            for y in carrier.iter() {
                if !carrier.contains(v.add(x, y)) {
                    return Err(ModuleError::NotSubmodule(format!("{x}+{y} missing")));
                }
            }
            for a in 0..v.monoid().order() {
                if !carrier.contains(v.act(a, x)) {
                    return Err(ModuleError::NotSubmodule(format!("{a}·{x} missing")));
                }
            }
        }
        Ok(Submodule { carrier })
    }

    pub(crate) fn from_closed(carrier: ElementSubset) -> Self {
        Submodule { carrier }
    }

    pub fn carrier(&self) -> &ElementSubset {
        &self.carrier
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: ElementIndex) -> bool {
        self.carrier.contains(x)
    }
}

/// All submodules of `v`, sorted by `(size, bitmask)`.
///
/// Starts from `{0}` and repeatedly joins each known submodule with the
/// cyclic submodule of an element outside it. Every submodule is a join of
/// cyclic submodules, so the search is complete; cyclic submodules are
/// computed once per element.
pub fn enumerate_submodules(v: &MModule, bound: usize) -> Result<Vec<Submodule>, ModuleError> {
    if v.order() > bound {
        return Err(ModuleError::BoundExceeded {
            size: v.order(),
            bound,
        });
    }
    let cyclic: Vec<ElementSubset> = (0..v.order()).map(|x| v.cyclic_submodule(x)).collect();
    let bottom = ElementSubset::singleton(v.order(), v.zero());
    let mut seen: HashSet<ElementSubset> = HashSet::new();
    seen.insert(bottom.clone());
    let mut queue = vec![bottom];
    while let Some(w) = queue.pop() {
        for x in 0..v.order() {
            if w.contains(x) {
                continue;
            }
            let joined = v.group_closure(&w.union(&cyclic[x]));
            if seen.insert(joined.clone()) {
                queue.push(joined);
            }
        }
    }
    let mut subs: Vec<Submodule> = seen.into_iter().map(Submodule::from_closed).collect();
    subs.sort_by(|a, b| a.carrier.cmp_canonical(&b.carrier));
    Ok(subs)
}

/// `V/W` together with the projection `V → V/W`.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub module: MModule,
    pub projection: ModuleMorphism,
    /// Canonical coset representatives (minimum element of each coset), in
    /// the order of the quotient's element indices.
    pub representatives: Vec<ElementIndex>,
}

/// Quotient by a submodule. Cosets are numbered by ascending minimum
/// representative.
pub fn quotient(v: &MModule, w: &Submodule) -> Result<Quotient, ModuleError> {
    let w = Submodule::new(v, w.carrier().clone())?;
    let n = v.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut representatives = Vec::new();
    for x in 0..n {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let id = representatives.len();
        representatives.push(x);
        for y in w.carrier().iter() {
            coset_of[v.add(x, y)] = id;
        }
    }
    let k = representatives.len();
    debug_assert_eq!(k * w.len(), n);
    let mut add = Vec::with_capacity(k * k);
    for &x in &representatives {
        for &y in &representatives {
            add.push(coset_of[v.add(x, y)]);
        }
    }
    let mut act = Vec::with_capacity(v.monoid().order() * k);
    for a in 0..v.monoid().order() {
        for &x in &representatives {
            act.push(coset_of[v.act(a, x)]);
        }
    }
    let group = FiniteAbelianGroup::trusted(k, add, coset_of[v.zero()]);
    let module = MModule::from_parts(Arc::clone(v.monoid()), group, act);
    let projection = ModuleMorphism::new(v.clone(), module.clone(), coset_of)?;
    Ok(Quotient {
        module,
        projection,
        representatives,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    /// Brute-force oracle: every subset that passes the submodule test.
    fn powerset_submodules(v: &MModule) -> Vec<ElementSubset> {
        let n = v.order();
        let mut out: Vec<ElementSubset> = (0u64..(1 << n))
            .map(|mask| ElementSubset::from_elements(n, (0..n).filter(|i| mask >> i & 1 == 1)))
            .filter(|s| Submodule::new(v, s.clone()).is_ok())
            .collect();
        out.sort_by(|a, b| a.cmp_canonical(b));
        out
    }

    fn carriers(subs: &[Submodule]) -> Vec<ElementSubset> {
        subs.iter().map(|s| s.carrier().clone()).collect()
    }

    #[test]
    fn gf3_plane_has_six_submodules() {
        let v = fixtures::gf_power_module(3, 2);
        let subs = enumerate_submodules(&v, DEFAULT_SUBMODULE_BOUND).unwrap();
        assert_eq!(subs.len(), 6);
        assert_eq!(carriers(&subs), powerset_submodules(&v));
    }

    #[test]
    fn z4_over_m2_submodules() {
        let v = fixtures::z4_over_m2();
        let subs = enumerate_submodules(&v, DEFAULT_SUBMODULE_BOUND).unwrap();
        let sets: Vec<Vec<usize>> = subs.iter().map(|s| s.carrier().to_vec()).collect();
        assert_eq!(sets, vec![vec![0], vec![0, 2], vec![0, 1, 2, 3]]);
        assert_eq!(carriers(&subs), powerset_submodules(&v));
    }

    #[test]
    fn matches_powerset_oracle_up_to_sixteen() {
        for v in [
            fixtures::gf_power_module(2, 4),
            fixtures::gf_power_module(2, 3),
            fixtures::zn_ring(8).as_module(),
            fixtures::klein_over_m2(),
        ] {
            let subs = enumerate_submodules(&v, DEFAULT_SUBMODULE_BOUND).unwrap();
            assert_eq!(carriers(&subs), powerset_submodules(&v));
        }
    }

    #[test]
    fn trivial_module_and_bound() {
        let t = MModule::trivial(Arc::new(fixtures::zn_monoid(3)));
        assert_eq!(enumerate_submodules(&t, 10).unwrap().len(), 1);
        let v = fixtures::gf_power_module(3, 2);
        assert_eq!(
            enumerate_submodules(&v, 8),
            Err(ModuleError::BoundExceeded { size: 9, bound: 8 })
        );
    }

    #[test]
    fn quotients() {
        let v = fixtures::z4_over_m2();
        let w = Submodule::new(&v, ElementSubset::from_elements(4, [0, 2])).unwrap();
        let q = quotient(&v, &w).unwrap();
        assert_eq!(q.module.order(), 2);
        assert_eq!(q.representatives, vec![0, 1]);
        assert_eq!(q.projection.map(), &[0, 1, 0, 1]);
        // Induced action: 0 acts as zero, 1 as identity.
        assert_eq!(q.module.act_rows(), vec![vec![0, 0], vec![0, 1]]);

        let whole = quotient(&v, &Submodule::new(&v, v.full_subset()).unwrap()).unwrap();
        assert_eq!(whole.module.order(), 1);
        let bottom = Submodule::new(&v, ElementSubset::singleton(4, 0)).unwrap();
        let same = quotient(&v, &bottom).unwrap();
        assert_eq!(same.module, v);
    }

    #[test]
    fn quotient_rejects_non_submodules() {
        let v = fixtures::z4_over_m2();
        let bad = Submodule::from_closed(ElementSubset::from_elements(4, [0, 1]));
        assert!(matches!(quotient(&v, &bad), Err(ModuleError::NotSubmodule(_))));
    }
}

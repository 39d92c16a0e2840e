//! Finite modules over a finite monoid: an abelian group on which the monoid
//! acts by endomorphisms.
//!
//! Provides the closure operators used throughout the crate (orbits `M·S`,
//! generated subgroups, generated submodules), submodule lattices,
//! quotients, finite products, morphisms with kernel/image/cokernel, and the
//! free- and scalar-action predicates.

mod morphism;
mod product;
mod submodule;

use std::sync::Arc;

use thiserror::Error;

use crate::group::FiniteAbelianGroup;
use crate::monoid::FiniteMonoid;
use crate::subset::ElementSubset;
use crate::ElementIndex;

pub use morphism::{factorize, Factorization, ModuleMorphism};
pub use product::{product, Product};
pub use submodule::{enumerate_submodules, quotient, Quotient, Submodule, DEFAULT_SUBMODULE_BOUND};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuleError {
    #[error("bad shape: {0}")]
    BadShape(String),
    #[error("modules are over different monoids")]
    MixedMonoids,
    #[error("not an action: ({0}*{1})·{2} != {0}·({1}·{2})")]
    NotAction(ElementIndex, ElementIndex, ElementIndex),
    #[error("identity does not fix {0}")]
    NotUnital(ElementIndex),
    #[error("{0} does not act additively on ({1}, {2})")]
    NotEndomorphism(ElementIndex, ElementIndex, ElementIndex),
    #[error("not a submodule: {0}")]
    NotSubmodule(String),
    #[error("map is not additive at ({0}, {1})")]
    NotAdditive(ElementIndex, ElementIndex),
    #[error("map is not equivariant at ({0}, {1})")]
    NotEquivariant(ElementIndex, ElementIndex),
    #[error("size {size} exceeds bound {bound}")]
    BoundExceeded { size: usize, bound: usize },
}

/// A finite `M`-module. Cheap to clone: all tables are shared.
#[derive(Debug, Clone)]
pub struct MModule {
    monoid: Arc<FiniteMonoid>,
    group: Arc<FiniteAbelianGroup>,
    act: Arc<[ElementIndex]>,
}

impl PartialEq for MModule {
    fn eq(&self, other: &Self) -> bool {
        self.monoid.same_table(&other.monoid) && self.group == other.group && self.act == other.act
    }
}

impl Eq for MModule {}

impl MModule {
    /// Validates `act_rows[a][v] = a·v` against the module identities: the
    /// identity acts trivially, `(ab)·v = a·(b·v)`, and each `a` acts additively.
    pub fn validate(
        monoid: Arc<FiniteMonoid>,
        group: FiniteAbelianGroup,
        act_rows: Vec<Vec<ElementIndex>>,
    ) -> Result<Self, ModuleError> {
        let (m, n) = (monoid.order(), group.order());
        if act_rows.len() != m {
            return Err(ModuleError::BadShape(format!(
                "action needs {m} rows, got {}",
                act_rows.len()
            )));
        }
        let mut act = Vec::with_capacity(m * n);
        for (a, row) in act_rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(ModuleError::BadShape(format!(
                    "action row {a} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(ModuleError::BadShape(format!(
                    "action row {a} has entry {bad} outside 0..{n}"
                )));
            }
            act.extend(row);
        }
        let module = MModule {
            monoid,
            group: Arc::new(group),
            act: act.into(),
        };
        module.check_axioms()?;
        Ok(module)
    }

    pub(crate) fn from_parts(
        monoid: Arc<FiniteMonoid>,
        group: FiniteAbelianGroup,
        act: Vec<ElementIndex>,
    ) -> Self {
        debug_assert_eq!(act.len(), monoid.order() * group.order());
        MModule {
            monoid,
            group: Arc::new(group),
            act: act.into(),
        }
    }

    fn check_axioms(&self) -> Result<(), ModuleError> {
        let (m, n) = (self.monoid.order(), self.order());
        let one = self.monoid.one();
        if let Some(v) = (0..n).find(|&v| self.act(one, v) != v) {
            return Err(ModuleError::NotUnital(v));
        }
        for a in 0..m {
            for b in 0..m {
                let ab = self.monoid.mul(a, b);
                for v in 0..n {
                    if self.act(ab, v) != self.act(a, self.act(b, v)) {
                        return Err(ModuleError::NotAction(a, b, v));
                    }
                }
            }
        }
        for a in 0..m {
            for u in 0..n {
                let au = self.act(a, u);
                for v in 0..n {
                    if self.act(a, self.add(u, v)) != self.group.add(au, self.act(a, v)) {
                        return Err(ModuleError::NotEndomorphism(a, u, v));
                    }
                }
            }
        }
        // Consequences of additivity.
        debug_assert!((0..m).all(|a| self.act(a, self.zero()) == self.zero()));
        debug_assert!((0..m).all(|a| (0..n)
            .all(|v| self.act(a, self.neg(v)) == self.neg(self.act(a, v)))));
        Ok(())
    }

    /// The one-element module over `monoid`.
    pub fn trivial(monoid: Arc<FiniteMonoid>) -> Self {
        let m = monoid.order();
        MModule::from_parts(
            monoid,
            FiniteAbelianGroup::trusted(1, vec![0], 0),
            vec![0; m],
        )
    }

    /// Every monoid element acts as the identity map.
    pub fn trivial_action(monoid: Arc<FiniteMonoid>, group: FiniteAbelianGroup) -> Self {
        let n = group.order();
        let act = (0..monoid.order()).flat_map(|_| 0..n).collect();
        MModule::from_parts(monoid, group, act)
    }

    pub fn monoid(&self) -> &Arc<FiniteMonoid> {
        &self.monoid
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    /// Number of elements of the underlying group.
    pub fn order(&self) -> usize {
        self.group.order()
    }

    #[inline]
    pub fn act(&self, a: ElementIndex, v: ElementIndex) -> ElementIndex {
        self.act[a * self.group.order() + v]
    }

    #[inline]
    pub fn add(&self, u: ElementIndex, v: ElementIndex) -> ElementIndex {
        self.group.add(u, v)
    }

    #[inline]
    pub fn neg(&self, v: ElementIndex) -> ElementIndex {
        self.group.neg(v)
    }

    #[inline]
    pub fn sub(&self, u: ElementIndex, v: ElementIndex) -> ElementIndex {
        self.group.sub(u, v)
    }

    pub fn zero(&self) -> ElementIndex {
        self.group.zero()
    }

    pub fn act_table(&self) -> &[ElementIndex] {
        &self.act
    }

    pub fn act_rows(&self) -> Vec<Vec<ElementIndex>> {
        self.act.chunks(self.order()).map(<[_]>::to_vec).collect()
    }

    pub fn same_monoid(&self, other: &MModule) -> bool {
        Arc::ptr_eq(&self.monoid, &other.monoid) || self.monoid.same_table(&other.monoid)
    }

    pub fn empty_subset(&self) -> ElementSubset {
        ElementSubset::empty(self.order())
    }

    pub fn full_subset(&self) -> ElementSubset {
        ElementSubset::full(self.order())
    }

    /// `M·S = {a·s | a ∈ M, s ∈ S}`.
    pub fn orbit(&self, s: &ElementSubset) -> ElementSubset {
        let mut out = self.empty_subset();
        for x in s.iter() {
            for a in 0..self.monoid.order() {
                out.insert(self.act(a, x));
            }
        }
        out
    }

    pub fn orbit_of(&self, v: ElementIndex) -> ElementSubset {
        self.orbit(&ElementSubset::singleton(self.order(), v))
    }

    /// Smallest subgroup containing `s`.
    ///
    /// Generators are absorbed one at a time; adjoining `g` to a subgroup `H`
    /// adds the cosets `H + kg` until `kg` falls back into `H`.
    pub fn group_closure(&self, s: &ElementSubset) -> ElementSubset {
        let zero = self.zero();
        let mut members = vec![zero];
        let mut set = ElementSubset::singleton(self.order(), zero);
        for g in s.iter() {
            if set.contains(g) {
                continue;
            }
            let base = members.clone();
            let mut shift = g;
            while !set.contains(shift) {
                for &h in &base {
                    let x = self.add(h, shift);
                    if set.insert(x) {
                        members.push(x);
                    }
                }
                shift = self.add(shift, g);
            }
        }
        set
    }

    /// `closure(M·{v})`: the submodule generated by one element.
    pub fn cyclic_submodule(&self, v: ElementIndex) -> ElementSubset {
        self.group_closure(&self.orbit_of(v))
    }

    /// The smallest submodule containing `s`, namely `closure(M·S)`.
    pub fn generated_submodule(&self, s: &ElementSubset) -> Submodule {
        let carrier = self.group_closure(&self.orbit(s));
        debug_assert!(self.orbit(&carrier).is_subset(&carrier));
        Submodule::from_closed(carrier)
    }

    /// Checks the free action property and, when the monoid has a zero and a
    /// `-1`, the scalar action property. Witnesses are lexicographically least.
    pub fn check_action_properties(&self) -> ActionPropertyReport {
        let (m, n) = (self.monoid.order(), self.order());
        let zero = self.zero();
        let mut fa_witness = None;
        'outer: for a in 0..m {
            for b in (a + 1)..m {
                for v in 0..n {
                    if v != zero && self.act(a, v) == self.act(b, v) {
                        fa_witness = Some((a, b, v));
                        break 'outer;
                    }
                }
            }
        }
        let sa = match (self.monoid.zero(), self.monoid.minus_one()) {
            (Some(z), Some(mo)) => {
                match (0..n).find(|&v| self.act(z, v) != zero || self.act(mo, v) != self.neg(v)) {
                    Some(v) => ScalarAction::Fails(v),
                    None => ScalarAction::Holds,
                }
            }
            _ => ScalarAction::NotApplicable,
        };
        ActionPropertyReport {
            fa: fa_witness.is_none(),
            fa_witness,
            sa,
        }
    }

    /// The submodule `w` as a module in its own right, with elements
    /// renumbered in ascending order. Returns the module and the embedding
    /// (new index → old index).
    pub fn restrict(&self, w: &Submodule) -> (MModule, Vec<ElementIndex>) {
        let embed: Vec<ElementIndex> = w.carrier().iter().collect();
        let mut index = vec![usize::MAX; self.order()];
        for (i, &x) in embed.iter().enumerate() {
            index[x] = i;
        }
        let k = embed.len();
        let mut add = Vec::with_capacity(k * k);
        for &x in &embed {
            for &y in &embed {
                add.push(index[self.add(x, y)]);
            }
        }
        let mut act = Vec::with_capacity(self.monoid.order() * k);
        for a in 0..self.monoid.order() {
            for &x in &embed {
                act.push(index[self.act(a, x)]);
            }
        }
        let group = FiniteAbelianGroup::trusted(k, add, index[self.zero()]);
        (
            MModule::from_parts(Arc::clone(&self.monoid), group, act),
            embed,
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalarAction {
    Holds,
    /// First `v` with `0·v ≠ 0` or `(-1)·v ≠ -v`.
    Fails(ElementIndex),
    /// The monoid lacks a zero or a `-1`.
    NotApplicable,
}

impl ScalarAction {
    pub fn holds(self) -> bool {
        self == ScalarAction::Holds
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionPropertyReport {
    pub fa: bool,
    /// `(α, β, v)` with `α < β`, `α·v = β·v` and `v ≠ 0`.
    pub fa_witness: Option<(ElementIndex, ElementIndex, ElementIndex)>,
    pub sa: ScalarAction,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn zero_acting_as_doubling_is_not_an_action() {
        let m2 = Arc::new(fixtures::zn_monoid(2));
        let z4 = fixtures::cyclic_group(4);
        let rows = vec![vec![0, 2, 0, 2], vec![0, 1, 2, 3]];
        assert_eq!(
            MModule::validate(m2, z4, rows),
            Err(ModuleError::NotAction(0, 0, 1))
        );
    }

    #[test]
    fn non_additive_action_is_rejected() {
        let m2 = Arc::new(fixtures::zn_monoid(2));
        let z3 = fixtures::cyclic_group(3);
        // 0 acts idempotently but as a non-additive map.
        let rows = vec![vec![0, 1, 1], vec![0, 1, 2]];
        assert_eq!(
            MModule::validate(m2, z3, rows),
            Err(ModuleError::NotEndomorphism(0, 1, 1))
        );
        let m2 = Arc::new(fixtures::zn_monoid(2));
        let rows = vec![vec![0, 0, 0], vec![0, 2, 1]];
        assert_eq!(
            MModule::validate(m2, fixtures::cyclic_group(3), rows),
            Err(ModuleError::NotUnital(1))
        );
    }

    #[test]
    fn orbits() {
        let v = fixtures::gf_power_module(3, 2);
        assert!(v.orbit(&v.empty_subset()).is_empty());
        // (1,0) has index 3 in the mixed-radix numbering.
        assert_eq!(v.orbit_of(3).to_vec(), vec![0, 3, 6]);
        let w = fixtures::z4_over_m2();
        assert_eq!(w.orbit_of(1).to_vec(), vec![0, 1]);
    }

    #[test]
    fn closures() {
        let z9 = fixtures::zn_ring(9).as_module();
        assert_eq!(z9.group_closure(&z9.empty_subset()).to_vec(), vec![0]);
        assert_eq!(z9.group_closure(&ElementSubset::singleton(9, 1)).len(), 9);
        assert_eq!(
            z9.group_closure(&ElementSubset::singleton(9, 3)).to_vec(),
            vec![0, 3, 6]
        );
        assert_eq!(
            z9.generated_submodule(&z9.empty_subset()).carrier().to_vec(),
            vec![0]
        );
    }

    #[test]
    fn group_closure_of_several_generators() {
        // Z/2 x Z/4: (1,0) and (0,2) generate a Klein subgroup of order 4.
        let g = fixtures::product_group(&[2, 4]);
        let v = MModule::trivial_action(Arc::new(fixtures::zn_monoid(1)), g);
        let s = ElementSubset::from_elements(8, [4, 2]);
        assert_eq!(v.group_closure(&s).to_vec(), vec![0, 2, 4, 6]);
        let s = ElementSubset::from_elements(8, [4, 1]);
        assert_eq!(v.group_closure(&s).len(), 8);
    }

    #[test]
    fn action_properties() {
        let v = fixtures::gf_power_module(3, 2);
        let r = v.check_action_properties();
        assert!(r.fa);
        assert_eq!(r.sa, ScalarAction::Holds);
        let t = MModule::trivial(Arc::new(fixtures::zn_monoid(3)));
        let r = t.check_action_properties();
        assert!(r.fa && r.sa.holds());
        let klein = Arc::new(fixtures::klein_monoid());
        let r = MModule::trivial(klein).check_action_properties();
        assert_eq!(r.sa, ScalarAction::NotApplicable);
    }

    #[test]
    fn z9_product_fails_free_action() {
        let v = fixtures::z9_product_module();
        let r = v.check_action_properties();
        assert!(!r.fa);
        // First witness in (α, β, v) order: 0·(0,3) = 3·(0,3) = 0.
        assert_eq!(r.fa_witness, Some((0, 3, 3)));
        // The triple α=1, β=4, v=(3,0) is also a witness.
        let v30 = 27;
        assert_eq!(v.act(1, v30), v.act(4, v30));
    }
}

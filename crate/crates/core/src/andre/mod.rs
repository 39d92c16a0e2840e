//! Multi-near-rings and the modules built over them.
//!
//! An Andre module over `R = (M, 𝐍)` is an `M`-module admitting a subset `Q`
//! such that every non-zero `q ∈ Q` is distributive for some designated
//! addition (QK1), and every `v` lies in `closure(M·(closure(M·{v}) ∩ Q))`
//! (QK2). QK1 is a condition on single elements and the QK2 target grows
//! with `Q`, so a witness exists iff the largest QK1 set `Q*` is one.

mod decompose;
mod tfae;

use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;
use thiserror::Error;

use crate::module::{product, MModule, ModuleError};
use crate::monoid::{check_scalar_group, FiniteMonoid, ScalarGroupFailure, ScalarGroupReport};
use crate::module::ActionPropertyReport;
use crate::nearring::{classify, NearRing};
use crate::subset::ElementSubset;
use crate::ElementIndex;

pub use decompose::{decompose_quasikernel, Decomposer, presentation_lengths, DecompositionCertificate, TrailStep};
pub use tfae::{check_tfae, TfaeReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AndreError {
    #[error("structures are over different monoids")]
    MixedMonoids,
    #[error("designated additions {0} and {1} coincide")]
    DuplicateAddition(usize, usize),
    #[error("empty selection of designated near-rings")]
    EmptySelection,
    #[error("designated index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("element {0} out of range")]
    ElementOutOfRange(ElementIndex),
    #[error("exactly one designated ring required")]
    NotSingleRing,
    #[error("the one-element module is excluded")]
    TrivialModule,
    #[error("not a near-vector space: {0}")]
    NotNearVectorSpace(String),
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("{0} is not a sum of quasi-kernel elements")]
    NoPresentation(ElementIndex),
    #[error("theorem violated: {0}")]
    TheoremViolation(String),
    #[error(transparent)]
    Module(#[from] ModuleError),
}

/// A monoid together with a list of distinct near-ring additions on it.
#[derive(Debug, Clone)]
pub struct MultiNearRing {
    monoid: Arc<FiniteMonoid>,
    designated: Vec<NearRing>,
}

impl MultiNearRing {
    pub fn new(monoid: Arc<FiniteMonoid>, designated: Vec<NearRing>) -> Result<Self, AndreError> {
        if designated.iter().any(|n| !n.monoid().same_table(&monoid)) {
            return Err(AndreError::MixedMonoids);
        }
        for j in 0..designated.len() {
            for i in 0..j {
                if designated[i].additive() == designated[j].additive() {
                    return Err(AndreError::DuplicateAddition(i, j));
                }
            }
        }
        Ok(MultiNearRing { monoid, designated })
    }

    /// The multi-near-ring with a single designated near-ring.
    pub fn single(n: NearRing) -> Self {
        MultiNearRing {
            monoid: Arc::clone(n.monoid()),
            designated: vec![n],
        }
    }

    pub fn monoid(&self) -> &Arc<FiniteMonoid> {
        &self.monoid
    }

    pub fn designated(&self) -> &[NearRing] {
        &self.designated
    }

    pub fn len(&self) -> usize {
        self.designated.len()
    }

    pub fn is_empty(&self) -> bool {
        self.designated.is_empty()
    }
}

fn same_monoid(v: &MModule, r: &MultiNearRing) -> Result<(), AndreError> {
    if v.monoid().same_table(r.monoid()) {
        Ok(())
    } else {
        Err(AndreError::MixedMonoids)
    }
}

/// First `(α, β)` with `(α +_N β)·v != α·v + β·v`.
pub fn distributivity_failure(
    v: &MModule,
    n: &NearRing,
    x: ElementIndex,
) -> Option<(ElementIndex, ElementIndex)> {
    let m = v.monoid().order();
    (0..m)
        .flat_map(|a| (0..m).map(move |b| (a, b)))
        .find(|&(a, b)| v.act(n.add(a, b), x) != v.add(v.act(a, x), v.act(b, x)))
}

/// The quasi-kernel with, for each of its elements, the least `γ` realising
/// every combination `α·v + β·v = γ·v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiKernelReport {
    pub qv: ElementSubset,
    monoid_order: usize,
    module_order: usize,
    gamma: Vec<Option<ElementIndex>>,
}

impl QuasiKernelReport {
    /// Least `γ` with `α·v + β·v = γ·v`; `None` when `v ∉ Q(V)`.
    pub fn gamma_witness(&self, a: ElementIndex, b: ElementIndex, v: ElementIndex) -> Option<ElementIndex> {
        self.gamma[(a * self.monoid_order + b) * self.module_order + v]
    }
}

pub fn quasi_kernel(v: &MModule) -> QuasiKernelReport {
    let (m, n) = (v.monoid().order(), v.order());
    let per_element: Vec<Option<Vec<ElementIndex>>> = (0..n)
        .into_par_iter()
        .map(|x| {
            let mut first = vec![usize::MAX; n];
            for g in (0..m).rev() {
                first[v.act(g, x)] = g;
            }
            let mut gammas = Vec::with_capacity(m * m);
            for a in 0..m {
                for b in 0..m {
                    let g = first[v.add(v.act(a, x), v.act(b, x))];
                    if g == usize::MAX {
                        return None;
                    }
                    gammas.push(g);
                }
            }
            Some(gammas)
        })
        .collect();
    let mut gamma = vec![None; m * m * n];
    let mut qv = v.empty_subset();
    for (x, gammas) in per_element.into_iter().enumerate() {
        if let Some(gs) = gammas {
            qv.insert(x);
            for (ab, g) in gs.into_iter().enumerate() {
                gamma[ab * n + x] = Some(g);
            }
        }
    }
    QuasiKernelReport {
        qv,
        monoid_order: m,
        module_order: n,
        gamma,
    }
}

/// `Q*` and the designated near-ring witnessing QK1 for each element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Qk1Report {
    pub qstar: ElementSubset,
    /// Lowest designated index `N_v` for each non-zero `v ∈ Q*`.
    pub witness: Vec<Option<usize>>,
}

/// The largest subset satisfying QK1. Zero is always included.
pub fn max_qk1_set(v: &MModule, r: &MultiNearRing) -> Result<Qk1Report, AndreError> {
    same_monoid(v, r)?;
    let witness: Vec<Option<usize>> = (0..v.order())
        .into_par_iter()
        .map(|x| {
            if x == v.zero() {
                return None;
            }
            r.designated()
                .iter()
                .position(|n| distributivity_failure(v, n, x).is_none())
        })
        .collect();
    let mut qstar = ElementSubset::singleton(v.order(), v.zero());
    for (x, w) in witness.iter().enumerate() {
        if w.is_some() {
            qstar.insert(x);
        }
    }
    Ok(Qk1Report { qstar, witness })
}

/// Outcome of the QK2 test for a fixed `Q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Qk2Report {
    pub holds: bool,
    /// Least element outside its target set.
    pub failure: Option<ElementIndex>,
    /// All `v` with `v ∈ closure(M·(closure(M·{v}) ∩ Q))`.
    pub members: ElementSubset,
}

pub fn check_qk2(v: &MModule, q: &ElementSubset) -> Qk2Report {
    let cyclic: Vec<ElementSubset> = (0..v.order())
        .into_par_iter()
        .map(|x| v.cyclic_submodule(x))
        .collect();
    let mut targets: HashMap<&ElementSubset, ElementSubset> = HashMap::new();
    let mut members = v.empty_subset();
    for (x, c) in cyclic.iter().enumerate() {
        let target = targets
            .entry(c)
            .or_insert_with(|| v.group_closure(&v.orbit(&c.intersection(q))));
        if target.contains(x) {
            members.insert(x);
        }
    }
    let failure = (0..v.order()).find(|&x| !members.contains(x));
    Qk2Report {
        holds: failure.is_none(),
        failure,
        members,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AndreReport {
    pub is_andre: bool,
    pub qstar: ElementSubset,
    pub nearring_witness: Vec<Option<usize>>,
    pub qk2_failure: Option<ElementIndex>,
}

pub fn check_andre(v: &MModule, r: &MultiNearRing) -> Result<AndreReport, AndreError> {
    let qk1 = max_qk1_set(v, r)?;
    let qk2 = check_qk2(v, &qk1.qstar);
    Ok(AndreReport {
        is_andre: qk2.holds,
        qstar: qk1.qstar,
        nearring_witness: qk1.witness,
        qk2_failure: qk2.failure,
    })
}

/// A tuple `(v, q, α, r)` with `α·q + r ∈ closure(M·{v})` for which no `β`
/// puts `q + β·r` into the same submodule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Qk3Witness {
    pub v: ElementIndex,
    pub q: ElementIndex,
    pub alpha: ElementIndex,
    pub r: ElementIndex,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Qk3Report {
    pub holds: bool,
    pub witness: Option<Qk3Witness>,
}

/// Exhaustive QK3 scan. `α` ranges over monoid elements other than the
/// absorbing zero (all of them when the monoid has none).
pub fn check_qk3(v: &MModule, q: &ElementSubset) -> Qk3Report {
    let m = v.monoid().order();
    let zero = v.monoid().zero();
    let outside: Vec<ElementIndex> = (0..v.order()).filter(|&x| !q.contains(x)).collect();
    let found: Vec<Option<Qk3Witness>> = outside
        .par_iter()
        .map(|&x| {
            let c = v.cyclic_submodule(x);
            for qe in q.iter() {
                // rescued[r]: some β has q + β·r inside the cyclic submodule.
                let rescued: Vec<bool> = (0..v.order())
                    .map(|r| (0..m).any(|b| c.contains(v.add(qe, v.act(b, r)))))
                    .collect();
                for alpha in (0..m).filter(|&a| Some(a) != zero) {
                    let aq = v.act(alpha, qe);
                    let bad = c
                        .iter()
                        .map(|cv| v.sub(cv, aq))
                        .filter(|&r| !rescued[r])
                        .min();
                    if let Some(r) = bad {
                        return Some(Qk3Witness {
                            v: x,
                            q: qe,
                            alpha,
                            r,
                        });
                    }
                }
            }
            None
        })
        .collect();
    let witness = found.into_iter().flatten().next();
    Qk3Report {
        holds: witness.is_none(),
        witness,
    }
}

/// The first clause of the near-vector-space definition that fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NvsFailure {
    MonoidNotScalarGroup(ScalarGroupFailure),
    FreeAction(ElementIndex, ElementIndex, ElementIndex),
    ScalarAction(ElementIndex),
    QuasiKernelDoesNotGenerate,
}

impl NvsFailure {
    pub fn tag(&self) -> &'static str {
        match self {
            NvsFailure::MonoidNotScalarGroup(_) => "monoid-not-scalar-group",
            NvsFailure::FreeAction(..) => "free-action",
            NvsFailure::ScalarAction(_) => "scalar-action",
            NvsFailure::QuasiKernelDoesNotGenerate => "quasi-kernel-does-not-generate",
        }
    }

    /// Human-readable reason using monoid labels, e.g.
    /// `non-invertible element [3]`.
    pub fn describe(&self, m: &FiniteMonoid) -> String {
        match self {
            NvsFailure::MonoidNotScalarGroup(f) => match f {
                ScalarGroupFailure::NoZero => "monoid has no zero".into(),
                ScalarGroupFailure::NoMinusOne(e) => {
                    format!("eta^2 = 1 has extra solution [{}]", m.label(*e))
                }
                ScalarGroupFailure::NonInvertible(e) => {
                    format!("non-invertible element [{}]", m.label(*e))
                }
            },
            NvsFailure::FreeAction(a, b, v) => format!(
                "[{}] and [{}] agree on non-zero vector {v}",
                m.label(*a),
                m.label(*b)
            ),
            NvsFailure::ScalarAction(v) => format!("scalar action fails at vector {v}"),
            NvsFailure::QuasiKernelDoesNotGenerate => "quasi-kernel does not generate".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NvsReport {
    pub is_nvs: bool,
    pub scalar_group: ScalarGroupReport,
    pub action: ActionPropertyReport,
    pub qv_generates: bool,
    pub failure: Option<NvsFailure>,
}

pub fn check_nvs(v: &MModule) -> NvsReport {
    let scalar_group = check_scalar_group(v.monoid());
    let action = v.check_action_properties();
    let qv = quasi_kernel(v).qv;
    let qv_generates = v.group_closure(&qv).len() == v.order();
    let failure = if let Some(f) = &scalar_group.failure_witness {
        Some(NvsFailure::MonoidNotScalarGroup(f.clone()))
    } else if let Some((a, b, x)) = action.fa_witness {
        Some(NvsFailure::FreeAction(a, b, x))
    } else if let crate::module::ScalarAction::Fails(x) = action.sa {
        Some(NvsFailure::ScalarAction(x))
    } else if !qv_generates {
        Some(NvsFailure::QuasiKernelDoesNotGenerate)
    } else {
        None
    };
    NvsReport {
        is_nvs: failure.is_none(),
        scalar_group,
        action,
        qv_generates,
        failure,
    }
}

/// Conditions (2) to (5) of the endofunction-set definition, evaluated on
/// the set of maps `λ_α: v ↦ α·v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EndoConditions {
    /// The zero map, the identity and negation all occur.
    pub contains_zero_one_minus_one: bool,
    /// The non-zero maps are automorphisms forming a group under
    /// composition.
    pub nonzero_form_group: bool,
    /// Distinct maps agree only at zero.
    pub fixed_point_free: bool,
    /// The quasi-kernel of the endofunction set generates the group.
    pub quasi_kernel_generates: bool,
}

impl EndoConditions {
    pub fn all(&self) -> bool {
        self.contains_zero_one_minus_one
            && self.nonzero_form_group
            && self.fixed_point_free
            && self.quasi_kernel_generates
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndoSetReport {
    /// Distinct maps `λ_α`, in order of first occurrence.
    pub fstar: Vec<Vec<ElementIndex>>,
    /// `λ_α` for every monoid element, as an index into `fstar`.
    pub of_scalar: Vec<usize>,
    /// `α ↦ λ_α` is injective.
    pub faithful: bool,
    pub closed_under_composition: bool,
    pub conditions: EndoConditions,
}

/// Passes from a near-vector space to its set of scalar maps and checks the
/// endofunction-set axioms on that set directly.
pub fn nvs_to_endoset(v: &MModule) -> Result<EndoSetReport, AndreError> {
    if v.order() == 1 {
        return Err(AndreError::TrivialModule);
    }
    let nvs = check_nvs(v);
    if let Some(f) = &nvs.failure {
        return Err(AndreError::NotNearVectorSpace(f.describe(v.monoid())));
    }
    let n = v.order();
    let mut fstar: Vec<Vec<ElementIndex>> = Vec::new();
    let mut of_scalar = Vec::with_capacity(v.monoid().order());
    for a in 0..v.monoid().order() {
        let map: Vec<ElementIndex> = (0..n).map(|x| v.act(a, x)).collect();
        let idx = fstar.iter().position(|f| *f == map).unwrap_or_else(|| {
            fstar.push(map);
            fstar.len() - 1
        });
        of_scalar.push(idx);
    }
    let faithful = fstar.len() == v.monoid().order();
    let zero_map = vec![v.zero(); n];
    let identity: Vec<ElementIndex> = (0..n).collect();
    let negation: Vec<ElementIndex> = (0..n).map(|x| v.neg(x)).collect();
    let contains_zero_one_minus_one =
        fstar.contains(&zero_map) && fstar.contains(&identity) && fstar.contains(&negation);

    let compose = |f: &[ElementIndex], g: &[ElementIndex]| -> Vec<ElementIndex> {
        (0..n).map(|x| f[g[x]]).collect()
    };
    let closed_under_composition = fstar
        .iter()
        .all(|f| fstar.iter().all(|g| fstar.contains(&compose(f, g))));
    let nonzero: Vec<&Vec<ElementIndex>> = fstar.iter().filter(|f| **f != zero_map).collect();
    let is_automorphism = |f: &[ElementIndex]| {
        let mut hit = vec![false; n];
        f.iter().for_each(|&y| hit[y] = true);
        hit.iter().all(|&h| h)
            && (0..n).all(|x| (0..n).all(|y| f[v.add(x, y)] == v.add(f[x], f[y])))
    };
    // A finite set of permutations closed under composition is a group.
    let nonzero_form_group = fstar.len() > 1
        && nonzero.contains(&&identity)
        && nonzero.iter().all(|f| is_automorphism(f))
        && nonzero
            .iter()
            .all(|f| nonzero.iter().all(|g| nonzero.contains(&&compose(f, g))));
    let fixed_point_free = (0..fstar.len()).all(|i| {
        ((i + 1)..fstar.len()).all(|j| (0..n).all(|x| x == v.zero() || fstar[i][x] != fstar[j][x]))
    });
    let mut q = v.empty_subset();
    for x in 0..n {
        let orbit: Vec<ElementIndex> = fstar.iter().map(|f| f[x]).collect();
        let ok = fstar.iter().all(|f| {
            fstar
                .iter()
                .all(|g| orbit.contains(&v.add(f[x], g[x])))
        });
        if ok {
            q.insert(x);
        }
    }
    let quasi_kernel_generates = v.group_closure(&q).len() == n;
    Ok(EndoSetReport {
        fstar,
        of_scalar,
        faithful,
        closed_under_composition,
        conditions: EndoConditions {
            contains_zero_one_minus_one,
            nonzero_form_group,
            fixed_point_free,
            quasi_kernel_generates,
        },
    })
}

/// The product of selected designated near-rings, each regarded as a module
/// over the common monoid, together with the set of unit vectors `e_N`.
#[derive(Debug, Clone)]
pub struct DesignatedProduct {
    pub module: MModule,
    pub units: ElementSubset,
    /// QK2 evaluated with the unit vectors as `Q`.
    pub units_qk2: Qk2Report,
    /// The Andre test on the product, using the maximal QK1 set.
    pub andre: AndreReport,
}

/// Builds `Π N` over the selection (repeats allowed) and evaluates QK2 for
/// the unit vectors and the full Andre test on the product.
///
/// Distributivity of each unit vector over its own near-ring always holds
/// and is treated as an invariant. QK2 is only reported: when a designated
/// near-ring has zero divisors the cyclic submodule of a mixed vector can
/// miss every unit vector, so neither QK2 for the units nor the Andre
/// property of the product is guaranteed.
pub fn product_of_designated(
    r: &MultiNearRing,
    selection: &[usize],
) -> Result<DesignatedProduct, AndreError> {
    if selection.is_empty() {
        return Err(AndreError::EmptySelection);
    }
    if let Some(&i) = selection.iter().find(|&&i| i >= r.len()) {
        return Err(AndreError::IndexOutOfRange(i));
    }
    let factors: Vec<MModule> = selection
        .iter()
        .map(|&i| r.designated()[i].as_module())
        .collect();
    let p = product(r.monoid(), &factors)?;
    let mut units = p.module.empty_subset();
    for (j, &i) in selection.iter().enumerate() {
        let mut coords: Vec<ElementIndex> = factors.iter().map(MModule::zero).collect();
        coords[j] = r.designated()[i].one();
        let e = p.encode(&coords);
        if e != p.module.zero() {
            if let Some((a, b)) = distributivity_failure(&p.module, &r.designated()[i], e) {
                return Err(AndreError::TheoremViolation(format!(
                    "unit vector {e} fails distributivity at ({a}, {b})"
                )));
            }
        }
        units.insert(e);
    }
    let units_qk2 = check_qk2(&p.module, &units);
    let andre = check_andre(&p.module, r)?;
    if units_qk2.holds && !andre.is_andre {
        return Err(AndreError::TheoremViolation(
            "unit vectors satisfy QK1 and QK2 but the maximal QK1 set fails".into(),
        ));
    }
    Ok(DesignatedProduct {
        module: p.module,
        units,
        units_qk2,
        andre,
    })
}

/// Both sides of the single-ring comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingModuleReport {
    pub andre: bool,
    /// `(α + β)·v = α·v + β·v` for all `α, β, v`.
    pub distributive: bool,
    pub distributivity_witness: Option<(ElementIndex, ElementIndex, ElementIndex)>,
    pub designated_is_ring: bool,
}

/// Compares the Andre test over `(M, {N})` with the direct distributivity
/// scan. The two must agree when `N` is a ring; for a proper near-ring the
/// comparison is only reported.
pub fn check_ring_module_equiv(v: &MModule, r: &MultiNearRing) -> Result<RingModuleReport, AndreError> {
    if r.len() != 1 {
        return Err(AndreError::NotSingleRing);
    }
    same_monoid(v, r)?;
    let n = &r.designated()[0];
    let andre = check_andre(v, r)?.is_andre;
    let distributivity_witness = (0..v.order())
        .find_map(|x| distributivity_failure(v, n, x).map(|(a, b)| (a, b, x)));
    let designated_is_ring = classify(n).is_ring;
    let report = RingModuleReport {
        andre,
        distributive: distributivity_witness.is_none(),
        distributivity_witness,
        designated_is_ring,
    };
    if designated_is_ring && report.andre != report.distributive {
        return Err(AndreError::TheoremViolation(format!(
            "Andre test says {andre}, distributivity scan says {}",
            report.distributive
        )));
    }
    Ok(report)
}

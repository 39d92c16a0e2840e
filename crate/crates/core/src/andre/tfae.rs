use super::{check_nvs, quasi_kernel, AndreError};
use crate::module::{enumerate_submodules, MModule, DEFAULT_SUBMODULE_BOUND};
use crate::ElementIndex;

/// The three equivalent forms of the subspace property, evaluated
/// separately on one near-vector space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TfaeReport {
    /// Every submodule is generated by its own quasi-kernel.
    pub submodules_generated: bool,
    /// `v ∈ closure(M·(closure(M·{v}) ∩ Q(V)))` for every `v`.
    pub orbit_form: bool,
    /// `v ∈ closure(closure(M·{v}) ∩ Q(V))` for every `v`.
    pub direct_form: bool,
    /// The two closures above coincide for every `v`.
    pub closures_agree: bool,
    pub submodules_checked: usize,
    pub elements_checked: usize,
}

/// Evaluates all three conditions and checks `Q(W) = W ∩ Q(V)` for every
/// submodule. All of them must hold on a near-vector space.
pub fn check_tfae(v: &MModule) -> Result<TfaeReport, AndreError> {
    let nvs = check_nvs(v);
    if let Some(f) = &nvs.failure {
        return Err(AndreError::NotNearVectorSpace(f.describe(v.monoid())));
    }
    let qv = quasi_kernel(v).qv;
    let subs = enumerate_submodules(v, DEFAULT_SUBMODULE_BOUND)?;
    let mut first_bad_submodule: Option<Vec<ElementIndex>> = None;
    for w in &subs {
        let (wm, embed) = v.restrict(w);
        let mut qw = v.empty_subset();
        for x in quasi_kernel(&wm).qv.iter() {
            qw.insert(embed[x]);
        }
        if qw != w.carrier().intersection(&qv) {
            return Err(AndreError::TheoremViolation(format!(
                "Q(W) differs from W ∩ Q(V) for W = {:?}",
                w.carrier()
            )));
        }
        if first_bad_submodule.is_none() && v.group_closure(&qw) != *w.carrier() {
            first_bad_submodule = Some(w.carrier().to_vec());
        }
    }
    let mut orbit_bad = None;
    let mut direct_bad = None;
    let mut closures_bad = None;
    for x in 0..v.order() {
        let part = v.cyclic_submodule(x).intersection(&qv);
        let direct = v.group_closure(&part);
        let via_orbit = v.group_closure(&v.orbit(&part));
        if orbit_bad.is_none() && !via_orbit.contains(x) {
            orbit_bad = Some(x);
        }
        if direct_bad.is_none() && !direct.contains(x) {
            direct_bad = Some(x);
        }
        if closures_bad.is_none() && direct != via_orbit {
            closures_bad = Some(x);
        }
    }
    let report = TfaeReport {
        submodules_generated: first_bad_submodule.is_none(),
        orbit_form: orbit_bad.is_none(),
        direct_form: direct_bad.is_none(),
        closures_agree: closures_bad.is_none(),
        submodules_checked: subs.len(),
        elements_checked: v.order(),
    };
    if let Some(w) = first_bad_submodule {
        return Err(AndreError::TheoremViolation(format!(
            "submodule {w:?} is not generated by its quasi-kernel"
        )));
    }
    if let Some(x) = orbit_bad.or(direct_bad) {
        return Err(AndreError::TheoremViolation(format!(
            "{x} is not recovered from the quasi-kernel part of its submodule"
        )));
    }
    if let Some(x) = closures_bad {
        return Err(AndreError::TheoremViolation(format!(
            "the two closures differ at {x}"
        )));
    }
    Ok(report)
}

//! Left near-rings on a finite carrier: an abelian group together with a
//! monoid multiplication such that every left multiplication is an additive
//! endomorphism, `a·(b+c) = a·b + a·c`.

mod construct;
mod dickson;

use std::sync::Arc;

use thiserror::Error;

use crate::group::{FiniteAbelianGroup, GroupError};
use crate::module::MModule;
use crate::monoid::{FiniteMonoid, MonoidError};
use crate::ElementIndex;

pub use construct::{
    fun_nearring, hash_construction, transport_addition, DEFAULT_FUN_BOUND,
};
pub use dickson::{dickson_fixture, gf9_field, Gf9};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NearRingError {
    #[error("addition is not an abelian group: {0}")]
    NotAbelianGroup(GroupError),
    #[error("multiplication is not a monoid: {0}")]
    NotMonoid(MonoidError),
    #[error("addition has order {add}, monoid has order {monoid}")]
    OrderMismatch { add: usize, monoid: usize },
    #[error("not left distributive: {0}·({1}+{2}) != {0}·{1} + {0}·{2}")]
    NotLeftDistributive(ElementIndex, ElementIndex, ElementIndex),
    #[error("the base near-ring is not a ring")]
    NotARing,
    #[error("power law (ac)^n = a^n c^n fails at a={0}, c={1}")]
    PowerLawFails(ElementIndex, ElementIndex),
    #[error("size {size} exceeds bound {bound}")]
    BoundExceeded { size: usize, bound: usize },
    #[error("not a permutation of the carrier")]
    NotPermutation,
    #[error("not a multiplicative automorphism: phi({0}*{1}) != phi({0})*phi({1})")]
    NotMultiplicativeAutomorphism(ElementIndex, ElementIndex),
    #[error("theorem violated: {0}")]
    TheoremViolation(String),
}

/// A near-ring: addition and multiplication tables on one carrier.
#[derive(Debug, Clone)]
pub struct NearRing {
    monoid: Arc<FiniteMonoid>,
    add: FiniteAbelianGroup,
}

impl PartialEq for NearRing {
    fn eq(&self, other: &Self) -> bool {
        self.monoid.same_table(&other.monoid) && self.add == other.add
    }
}

impl Eq for NearRing {}

impl NearRing {
    /// Validates `add_rows` as an abelian group on the monoid's carrier and
    /// certifies left distributivity for all triples.
    pub fn validate(
        monoid: Arc<FiniteMonoid>,
        add_rows: Vec<Vec<ElementIndex>>,
    ) -> Result<Self, NearRingError> {
        if add_rows.len() != monoid.order() {
            return Err(NearRingError::OrderMismatch {
                add: add_rows.len(),
                monoid: monoid.order(),
            });
        }
        let add = FiniteAbelianGroup::new(add_rows).map_err(NearRingError::NotAbelianGroup)?;
        Self::from_group(monoid, add)
    }

    pub fn from_group(
        monoid: Arc<FiniteMonoid>,
        add: FiniteAbelianGroup,
    ) -> Result<Self, NearRingError> {
        if add.order() != monoid.order() {
            return Err(NearRingError::OrderMismatch {
                add: add.order(),
                monoid: monoid.order(),
            });
        }
        let n = monoid.order();
        for a in 0..n {
            for b in 0..n {
                let ab = monoid.mul(a, b);
                for c in 0..n {
                    if monoid.mul(a, add.add(b, c)) != add.add(ab, monoid.mul(a, c)) {
                        return Err(NearRingError::NotLeftDistributive(a, b, c));
                    }
                }
            }
        }
        Ok(NearRing { monoid, add })
    }

    pub fn monoid(&self) -> &Arc<FiniteMonoid> {
        &self.monoid
    }

    pub fn additive(&self) -> &FiniteAbelianGroup {
        &self.add
    }

    pub fn order(&self) -> usize {
        self.monoid.order()
    }

    #[inline]
    pub fn add(&self, a: ElementIndex, b: ElementIndex) -> ElementIndex {
        self.add.add(a, b)
    }

    #[inline]
    pub fn sub(&self, a: ElementIndex, b: ElementIndex) -> ElementIndex {
        self.add.sub(a, b)
    }

    #[inline]
    pub fn mul(&self, a: ElementIndex, b: ElementIndex) -> ElementIndex {
        self.monoid.mul(a, b)
    }

    pub fn zero(&self) -> ElementIndex {
        self.add.zero()
    }

    pub fn one(&self) -> ElementIndex {
        self.monoid.one()
    }

    /// The additive inverse of the multiplicative identity.
    pub fn minus_one(&self) -> ElementIndex {
        self.add.neg(self.one())
    }

    pub fn pow(&self, a: ElementIndex, n: u32) -> ElementIndex {
        self.monoid.pow(a, n)
    }

    /// The carrier as a module over its own multiplicative monoid.
    pub fn as_module(&self) -> MModule {
        MModule::from_parts(
            Arc::clone(&self.monoid),
            self.add.clone(),
            self.monoid.table().to_vec(),
        )
    }

    /// Every element is absorbed on the left by zero and negation commutes
    /// with left multiplication; both follow from left distributivity.
    pub fn zero_laws_hold(&self) -> bool {
        let n = self.order();
        let z = self.zero();
        (0..n).all(|a| {
            self.mul(a, z) == z
                && (0..n).all(|b| self.mul(a, self.add.neg(b)) == self.add.neg(self.mul(a, b)))
        })
    }
}

/// Why a near-ring is not a near-field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NearFieldFailure {
    /// `0 = 1`, so there are no non-zero elements.
    Trivial,
    NonInvertible(ElementIndex),
}

/// First witnesses for every law that fails.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NearRingWitnesses {
    /// `(a, b, c)` with `(a+b)·c != a·c + b·c`.
    pub right_distributivity: Option<(ElementIndex, ElementIndex, ElementIndex)>,
    pub nearfield: Option<NearFieldFailure>,
    /// `(a, b, c)`, `a < b`, with `a·c = b·c` and `c != 0`.
    pub fa: Option<(ElementIndex, ElementIndex, ElementIndex)>,
    /// First `v` with `0·v != 0` or `(-1)·v != -v`.
    pub sa: Option<ElementIndex>,
    /// A solution of `η² = 1` outside `{1, -1}`, or `-1` itself when it is
    /// not a solution.
    pub s1: Option<ElementIndex>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NearRingReport {
    pub is_nearfield: bool,
    pub is_ring: bool,
    pub fa: bool,
    pub sa: bool,
    /// `η² = 1` has exactly the solutions `1` and `-1`, with `-1` the
    /// additive inverse of `1`.
    pub s1_for_minus1: bool,
    pub minus_one: ElementIndex,
    pub eta_solutions: Vec<ElementIndex>,
    pub witnesses: NearRingWitnesses,
}

/// Computes every flag by exhaustive scan, continuing past failures.
pub fn classify(nr: &NearRing) -> NearRingReport {
    let n = nr.order();
    let zero = nr.zero();
    let one = nr.one();
    let minus_one = nr.minus_one();

    let right_distributivity = (0..n)
        .flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
        .find(|&(a, b, c)| nr.mul(nr.add(a, b), c) != nr.add(nr.mul(a, c), nr.mul(b, c)));

    let nearfield = if zero == one {
        Some(NearFieldFailure::Trivial)
    } else {
        (0..n)
            .filter(|&a| a != zero)
            .find(|&a| {
                nr.monoid
                    .inverse(a)
                    .map_or(true, |b| b == zero)
            })
            .map(NearFieldFailure::NonInvertible)
    };

    let fa = (0..n)
        .flat_map(|a| ((a + 1)..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
        .find(|&(a, b, c)| c != zero && nr.mul(a, c) == nr.mul(b, c));

    let sa = (0..n).find(|&v| nr.mul(zero, v) != zero || nr.mul(minus_one, v) != nr.add.neg(v));

    let eta_solutions = nr.monoid.eta_solutions();
    let s1 = if nr.mul(minus_one, minus_one) != one {
        Some(minus_one)
    } else {
        eta_solutions
            .iter()
            .copied()
            .find(|&e| e != one && e != minus_one)
    };

    NearRingReport {
        is_nearfield: nearfield.is_none(),
        is_ring: right_distributivity.is_none(),
        fa: fa.is_none(),
        sa: sa.is_none(),
        s1_for_minus1: s1.is_none(),
        minus_one,
        eta_solutions,
        witnesses: NearRingWitnesses {
            right_distributivity,
            nearfield,
            fa,
            sa,
            s1,
        },
    }
}

/// Checks on one instance that near-fields act freely on themselves, that a
/// free action forces `0·v = 0` and `(-1)·v = -v` with `-1` the additive
/// inverse of `1`, and that it forces `η² = 1` to have only the solutions
/// `1` and `-1`.
pub fn verify_lema(nr: &NearRing) -> Result<NearRingReport, NearRingError> {
    let report = classify(nr);
    if report.is_nearfield && !report.fa {
        return Err(NearRingError::TheoremViolation(format!(
            "near-field without free action, witness {:?}",
            report.witnesses.fa
        )));
    }
    if report.fa && !report.sa {
        return Err(NearRingError::TheoremViolation(format!(
            "free action without scalar action, witness {:?}",
            report.witnesses.sa
        )));
    }
    if report.fa && !report.s1_for_minus1 {
        return Err(NearRingError::TheoremViolation(format!(
            "free action but eta^2 = 1 has solution set {:?} (1 = {}, -1 = {})",
            report.eta_solutions,
            nr.one(),
            report.minus_one
        )));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn gf3_is_a_field() {
        let r = classify(&fixtures::zn_ring(3));
        assert!(r.is_nearfield && r.is_ring && r.fa && r.sa && r.s1_for_minus1);
        assert_eq!(r.minus_one, 2);
    }

    #[test]
    fn swapped_zero_breaks_distributivity() {
        let m2 = Arc::new(fixtures::zn_monoid(2));
        // XNOR: a group with identity 1.
        let err = NearRing::validate(m2, vec![vec![1, 0], vec![0, 1]]).unwrap_err();
        assert_eq!(err, NearRingError::NotLeftDistributive(0, 0, 0));
    }

    #[test]
    fn order_mismatch_and_bad_group() {
        let m2 = Arc::new(fixtures::zn_monoid(2));
        assert!(matches!(
            NearRing::validate(Arc::clone(&m2), vec![vec![0]]),
            Err(NearRingError::OrderMismatch { .. })
        ));
        assert!(matches!(
            NearRing::validate(m2, vec![vec![0, 0], vec![0, 0]]),
            Err(NearRingError::NotAbelianGroup(_))
        ));
    }

    #[test]
    fn z9_is_not_a_nearfield() {
        let r = classify(&fixtures::zn_ring(9));
        assert!(r.is_ring);
        assert_eq!(r.witnesses.nearfield, Some(NearFieldFailure::NonInvertible(3)));
        assert!(!r.fa);
        assert!(verify_lema(&fixtures::zn_ring(9)).is_ok());
    }

    #[test]
    fn zero_laws_on_fixtures() {
        for nr in [
            fixtures::zn_ring(6),
            dickson_fixture(),
            fun_nearring(&fixtures::cyclic_group(3), DEFAULT_FUN_BOUND).unwrap(),
        ] {
            assert!(nr.zero_laws_hold());
        }
    }

    #[test]
    fn characteristic_two_forces_a_equals_minus_a() {
        // Wherever 1 = -1, every element is its own negative.
        for nr in [
            fixtures::zn_ring(2),
            fixtures::zn_ring(4),
            fun_nearring(&fixtures::cyclic_group(2), DEFAULT_FUN_BOUND).unwrap(),
            fixtures::upper_triangular_z2(),
            hash_construction(&fixtures::zn_ring(2), 1).unwrap(),
        ] {
            if nr.minus_one() == nr.one() {
                assert!((0..nr.order()).all(|a| nr.additive().neg(a) == a));
            }
        }
    }

    #[test]
    fn trivial_nearring() {
        let m1 = Arc::new(fixtures::zn_monoid(1));
        let nr = NearRing::validate(m1, vec![vec![0]]).unwrap();
        let r = verify_lema(&nr).unwrap();
        assert!(!r.is_nearfield && r.fa && r.sa && r.s1_for_minus1);
    }
}

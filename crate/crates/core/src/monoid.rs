//! Finite monoids given by Cayley tables, and detection of the scalar-group
//! axioms: an absorbing zero, a distinguished `-1`, and invertibility of every
//! non-zero element.
//!
//! Tables follow one convention everywhere in the crate: `table[a][b] = a∘b`,
//! the left operand selects the row.

use std::collections::HashSet;

use thiserror::Error;

use crate::ElementIndex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidError {
    #[error("bad shape: {0}")]
    BadShape(String),
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(ElementIndex, ElementIndex, ElementIndex),
    #[error("annotated {what} {claimed} does not match detected {detected:?}")]
    AnnotationMismatch {
        what: &'static str,
        claimed: ElementIndex,
        detected: Option<ElementIndex>,
    },
}

/// A validated finite monoid on the carrier `0..order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMonoid {
    order: usize,
    labels: Vec<String>,
    mul: Vec<ElementIndex>,
    one: ElementIndex,
    zero: Option<ElementIndex>,
    minus_one: Option<ElementIndex>,
}

impl FiniteMonoid {
    /// Validates a multiplication table with default labels `"0"`, `"1"`, ...
    pub fn new(rows: Vec<Vec<ElementIndex>>) -> Result<Self, MonoidError> {
        let order = rows.len();
        Self::validate(order, default_labels(order), rows)
    }

    /// Checks shape, locates the identity, then scans every triple for
    /// associativity. Zero and `-1` are detected, never supplied.
    pub fn validate(
        order: usize,
        labels: Vec<String>,
        rows: Vec<Vec<ElementIndex>>,
    ) -> Result<Self, MonoidError> {
        if order == 0 {
            return Err(MonoidError::BadShape("order must be positive".into()));
        }
        let mul = flatten_square(order, rows).map_err(MonoidError::BadShape)?;
        if labels.len() != order {
            return Err(MonoidError::BadShape(format!(
                "expected {order} labels, got {}",
                labels.len()
            )));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(MonoidError::BadShape(format!("duplicate label {l:?}")));
            }
        }
        let at = |a: usize, b: usize| mul[a * order + b];
        let one = (0..order)
            .find(|&e| (0..order).all(|a| at(e, a) == a && at(a, e) == a))
            .ok_or(MonoidError::NoIdentity)?;
        for a in 0..order {
            for b in 0..order {
                let ab = at(a, b);
                for c in 0..order {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(MonoidError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        let mut m = FiniteMonoid {
            order,
            labels,
            mul,
            one,
            zero: None,
            minus_one: None,
        };
        m.zero = find_zero(&m);
        m.minus_one = find_minus_one(&m);
        Ok(m)
    }

    /// Cross-checks user annotations against the detected elements.
    pub fn check_annotations(
        &self,
        zero: Option<ElementIndex>,
        minus_one: Option<ElementIndex>,
    ) -> Result<(), MonoidError> {
        if let Some(z) = zero {
            if self.zero != Some(z) {
                return Err(MonoidError::AnnotationMismatch {
                    what: "zero",
                    claimed: z,
                    detected: self.zero,
                });
            }
        }
        if let Some(m) = minus_one {
            if self.minus_one != Some(m) {
                return Err(MonoidError::AnnotationMismatch {
                    what: "minus-one",
                    claimed: m,
                    detected: self.minus_one,
                });
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: ElementIndex) -> &str {
        &self.labels[a]
    }

    #[inline]
    pub fn mul(&self, a: ElementIndex, b: ElementIndex) -> ElementIndex {
        self.mul[a * self.order + b]
    }

    pub fn one(&self) -> ElementIndex {
        self.one
    }

    pub fn zero(&self) -> Option<ElementIndex> {
        self.zero
    }

    pub fn minus_one(&self) -> Option<ElementIndex> {
        self.minus_one
    }

    /// The flat row-major table.
    pub fn table(&self) -> &[ElementIndex] {
        &self.mul
    }

    pub fn rows(&self) -> Vec<Vec<ElementIndex>> {
        self.mul.chunks(self.order).map(<[_]>::to_vec).collect()
    }

    /// Two monoids are interchangeable when their tables coincide.
    pub fn same_table(&self, other: &FiniteMonoid) -> bool {
        self.order == other.order && self.mul == other.mul
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn pow(&self, a: ElementIndex, n: u32) -> ElementIndex {
        (0..n).fold(self.one, |acc, _| self.mul(acc, a))
    }

    /// Two-sided inverse of `a`, if any.
    pub fn inverse(&self, a: ElementIndex) -> Option<ElementIndex> {
        (0..self.order).find(|&b| self.mul(a, b) == self.one && self.mul(b, a) == self.one)
    }

    /// Multiplicative order of an invertible element; `None` when the powers
    /// of `a` never return to the identity.
    pub fn element_order(&self, a: ElementIndex) -> Option<usize> {
        let mut x = a;
        for k in 1..=self.order {
            if x == self.one {
                return Some(k);
            }
            x = self.mul(x, a);
        }
        None
    }

    /// Solutions of `η² = 1`, ascending.
    pub fn eta_solutions(&self) -> Vec<ElementIndex> {
        (0..self.order)
            .filter(|&e| self.mul(e, e) == self.one)
            .collect()
    }
}

pub(crate) fn default_labels(order: usize) -> Vec<String> {
    (0..order).map(|i| i.to_string()).collect()
}

pub(crate) fn flatten_square(
    order: usize,
    rows: Vec<Vec<ElementIndex>>,
) -> Result<Vec<ElementIndex>, String> {
    if rows.len() != order {
        return Err(format!("expected {order} rows, got {}", rows.len()));
    }
    let mut flat = Vec::with_capacity(order * order);
    for (i, row) in rows.into_iter().enumerate() {
        if row.len() != order {
            return Err(format!("row {i} has {} entries, expected {order}", row.len()));
        }
        if let Some(&bad) = row.iter().find(|&&x| x >= order) {
            return Err(format!("row {i} has entry {bad} outside 0..{order}"));
        }
        flat.extend(row);
    }
    Ok(flat)
}

/// The unique two-sided absorbing element, if one exists.
pub fn find_zero(m: &FiniteMonoid) -> Option<ElementIndex> {
    (0..m.order()).find(|&e| (0..m.order()).all(|a| m.mul(e, a) == e && m.mul(a, e) == e))
}

/// `-1_M`: the identity when `η² = 1` has one solution, the other solution
/// when it has exactly two, and absent otherwise.
pub fn find_minus_one(m: &FiniteMonoid) -> Option<ElementIndex> {
    let sols = m.eta_solutions();
    match sols.as_slice() {
        [only] => Some(*only),
        [a, b] => Some(if *a == m.one() { *b } else { *a }),
        _ => None,
    }
}

/// Why a monoid fails to be a scalar group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScalarGroupFailure {
    NoZero,
    /// `η² = 1` has three or more solutions; carries the first one beyond
    /// the identity and one other.
    NoMinusOne(ElementIndex),
    NonInvertible(ElementIndex),
}

impl ScalarGroupFailure {
    pub fn tag(&self) -> &'static str {
        match self {
            ScalarGroupFailure::NoZero => "no-zero",
            ScalarGroupFailure::NoMinusOne(_) => "no-minus-one",
            ScalarGroupFailure::NonInvertible(_) => "non-invertible",
        }
    }

    pub fn element(&self) -> Option<ElementIndex> {
        match self {
            ScalarGroupFailure::NoZero => None,
            ScalarGroupFailure::NoMinusOne(e) | ScalarGroupFailure::NonInvertible(e) => Some(*e),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarGroupReport {
    pub is_scalar_group: bool,
    pub zero: Option<ElementIndex>,
    pub minus_one: Option<ElementIndex>,
    pub eta_solutions: Vec<ElementIndex>,
    pub failure_witness: Option<ScalarGroupFailure>,
}

/// Checks the axioms in order: absorbing zero, `-1_M`, then invertibility of
/// every element other than zero (ascending scan).
pub fn check_scalar_group(m: &FiniteMonoid) -> ScalarGroupReport {
    let eta_solutions = m.eta_solutions();
    let failure = if m.zero().is_none() {
        Some(ScalarGroupFailure::NoZero)
    } else if m.minus_one().is_none() {
        let extra = eta_solutions
            .iter()
            .copied()
            .filter(|&e| e != m.one())
            .nth(1)
            .expect("three or more solutions");
        Some(ScalarGroupFailure::NoMinusOne(extra))
    } else {
        (0..m.order())
            .filter(|&a| Some(a) != m.zero())
            .find(|&a| m.inverse(a).is_none())
            .map(ScalarGroupFailure::NonInvertible)
    };
    ScalarGroupReport {
        is_scalar_group: failure.is_none(),
        zero: m.zero(),
        minus_one: m.minus_one(),
        eta_solutions,
        failure_witness: failure,
    }
}

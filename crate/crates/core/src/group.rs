//! Finite abelian groups given by addition tables.

use thiserror::Error;

use crate::monoid::flatten_square;
use crate::ElementIndex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("bad shape: {0}")]
    BadShape(String),
    #[error("not commutative: {0}+{1} != {1}+{0}")]
    NotCommutative(ElementIndex, ElementIndex),
    #[error("not associative: ({0}+{1})+{2} != {0}+({1}+{2})")]
    NotAssociative(ElementIndex, ElementIndex, ElementIndex),
    #[error("no additive identity")]
    NoZero,
    #[error("element {0} has no additive inverse")]
    NoInverse(ElementIndex),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAbelianGroup {
    order: usize,
    add: Vec<ElementIndex>,
    zero: ElementIndex,
    neg: Vec<ElementIndex>,
}

impl FiniteAbelianGroup {
    pub fn new(rows: Vec<Vec<ElementIndex>>) -> Result<Self, GroupError> {
        let order = rows.len();
        Self::validate(order, rows)
    }

    /// Scan order: commutativity, identity, inverses, associativity.
    pub fn validate(order: usize, rows: Vec<Vec<ElementIndex>>) -> Result<Self, GroupError> {
        if order == 0 {
            return Err(GroupError::BadShape("order must be positive".into()));
        }
        let add = flatten_square(order, rows).map_err(GroupError::BadShape)?;
        Self::from_flat(order, add)
    }

    pub(crate) fn from_flat(order: usize, add: Vec<ElementIndex>) -> Result<Self, GroupError> {
        let at = |a: usize, b: usize| add[a * order + b];
        for a in 0..order {
            for b in 0..a {
                if at(a, b) != at(b, a) {
                    return Err(GroupError::NotCommutative(b, a));
                }
            }
        }
        let zero = (0..order)
            .find(|&e| (0..order).all(|a| at(e, a) == a))
            .ok_or(GroupError::NoZero)?;
        let mut neg = Vec::with_capacity(order);
        for a in 0..order {
            let inv = (0..order)
                .find(|&b| at(a, b) == zero)
                .ok_or(GroupError::NoInverse(a))?;
            neg.push(inv);
        }
        for a in 0..order {
            for b in 0..order {
                let ab = at(a, b);
                for c in 0..order {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(GroupError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        Ok(FiniteAbelianGroup {
            order,
            add,
            zero,
            neg,
        })
    }

    /// Builds a group from a table known to be valid (e.g. a product or a
    /// quotient), computing zero and negation.
    pub(crate) fn trusted(order: usize, add: Vec<ElementIndex>, zero: ElementIndex) -> Self {
        let neg = (0..order)
            .map(|a| {
                (0..order)
                    .find(|&b| add[a * order + b] == zero)
                    .expect("trusted table has inverses")
            })
            .collect();
        FiniteAbelianGroup {
            order,
            add,
            zero,
            neg,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn add(&self, a: ElementIndex, b: ElementIndex) -> ElementIndex {
        self.add[a * self.order + b]
    }

    #[inline]
    pub fn neg(&self, a: ElementIndex) -> ElementIndex {
        self.neg[a]
    }

    #[inline]
    pub fn sub(&self, a: ElementIndex, b: ElementIndex) -> ElementIndex {
        self.add(a, self.neg[b])
    }

    pub fn zero(&self) -> ElementIndex {
        self.zero
    }

    pub fn neg_table(&self) -> &[ElementIndex] {
        &self.neg
    }

    pub fn table(&self) -> &[ElementIndex] {
        &self.add
    }

    pub fn rows(&self) -> Vec<Vec<ElementIndex>> {
        self.add.chunks(self.order).map(<[_]>::to_vec).collect()
    }

    /// `k·a` as an iterated sum.
    pub fn multiple(&self, k: usize, a: ElementIndex) -> ElementIndex {
        (0..k).fold(self.zero, |acc, _| self.add(acc, a))
    }

    pub fn sum<I: IntoIterator<Item = ElementIndex>>(&self, items: I) -> ElementIndex {
        items.into_iter().fold(self.zero, |acc, x| self.add(acc, x))
    }

    /// Additive order of `a`.
    pub fn element_order(&self, a: ElementIndex) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.zero {
            x = self.add(x, a);
            k += 1;
        }
        k
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
    }

    #[test]
    fn cyclic_groups_validate() {
        let z2 = FiniteAbelianGroup::new(cyclic(2)).unwrap();
        assert_eq!(z2.zero(), 0);
        assert_eq!(z2.neg_table(), &[0, 1]);
        let z9 = FiniteAbelianGroup::new(cyclic(9)).unwrap();
        assert_eq!(z9.neg(3), 6);
        assert_eq!(z9.element_order(3), 3);
        assert_eq!(z9.multiple(4, 5), 2);
    }

    #[test]
    fn multiplicative_table_is_rejected() {
        let m3 = vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 1]];
        assert_eq!(FiniteAbelianGroup::new(m3), Err(GroupError::NoInverse(0)));
    }

    #[test]
    fn other_failures() {
        assert_eq!(
            FiniteAbelianGroup::new(vec![vec![0, 1], vec![0, 1]]),
            Err(GroupError::NotCommutative(0, 1))
        );
        assert_eq!(
            FiniteAbelianGroup::new(vec![vec![1, 1], vec![1, 1]]),
            Err(GroupError::NoZero)
        );
        // Commutative, with zero and inverses, but (1+1)+2 != 1+(1+2).
        assert_eq!(
            FiniteAbelianGroup::new(vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 0, 0]]),
            Err(GroupError::NotAssociative(1, 1, 2))
        );
    }
}

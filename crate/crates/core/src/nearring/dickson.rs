use std::sync::Arc;

use super::NearRing;
use crate::group::FiniteAbelianGroup;
use crate::monoid::FiniteMonoid;
use crate::ElementIndex;

/// GF(9) as GF(3)[x]/(x²+1). The element `a + b·x` has index `a + 3b`.
#[derive(Debug, Clone)]
pub struct Gf9 {
    add: Vec<Vec<ElementIndex>>,
    mul: Vec<Vec<ElementIndex>>,
    squares: Vec<bool>,
}

impl Gf9 {
    pub fn new() -> Self {
        let split = |i: usize| (i % 3, i / 3);
        let join = |a: usize, b: usize| a % 3 + 3 * (b % 3);
        let mut add = vec![vec![0; 9]; 9];
        let mut mul = vec![vec![0; 9]; 9];
        for i in 0..9 {
            let (a, b) = split(i);
            for j in 0..9 {
                let (c, d) = split(j);
                add[i][j] = join(a + c, b + d);
                // (a + bx)(c + dx) = ac - bd + (ad + bc)x since x² = -1.
                mul[i][j] = join(a * c + 2 * b * d, a * d + b * c);
            }
        }
        let mut squares = vec![false; 9];
        for i in 1..9 {
            squares[mul[i][i]] = true;
        }
        Gf9 { add, mul, squares }
    }

    pub fn label(i: ElementIndex) -> String {
        let (a, b) = (i % 3, i / 3);
        match (a, b) {
            (a, 0) => a.to_string(),
            (0, 1) => "x".into(),
            (0, b) => format!("{b}x"),
            (a, 1) => format!("{a}+x"),
            (a, b) => format!("{a}+{b}x"),
        }
    }

    pub fn add(&self, a: ElementIndex, b: ElementIndex) -> ElementIndex {
        self.add[a][b]
    }

    pub fn mul(&self, a: ElementIndex, b: ElementIndex) -> ElementIndex {
        self.mul[a][b]
    }

    /// Whether `a` is a non-zero square.
    pub fn is_square(&self, a: ElementIndex) -> bool {
        self.squares[a]
    }

    pub fn cube(&self, a: ElementIndex) -> ElementIndex {
        self.mul(a, self.mul(a, a))
    }
}

impl Default for Gf9 {
    fn default() -> Self {
        Self::new()
    }
}

fn labels() -> Vec<String> {
    (0..9).map(Gf9::label).collect()
}

/// The field GF(9) as a near-ring.
pub fn gf9_field() -> NearRing {
    let f = Gf9::new();
    let monoid = FiniteMonoid::validate(9, labels(), f.mul.clone()).expect("GF(9) multiplication");
    NearRing::validate(Arc::new(monoid), f.add.clone()).expect("GF(9) is a field")
}

/// The Dickson near-field of order 9: GF(9) with its addition and
/// `x∘y = x·y` when `x` is zero or a square, `x∘y = x·y³` otherwise.
///
/// Twisting by the Frobenius map on the right factor keeps every left
/// multiplication additive, so the structure is left distributive.
pub fn dickson_fixture() -> NearRing {
    let f = Gf9::new();
    let mul: Vec<Vec<ElementIndex>> = (0..9)
        .map(|x| {
            (0..9)
                .map(|y| {
                    if x == 0 || f.is_square(x) {
                        f.mul(x, y)
                    } else {
                        f.mul(x, f.cube(y))
                    }
                })
                .collect()
        })
        .collect();
    let monoid = FiniteMonoid::validate(9, labels(), mul).expect("Dickson multiplication is a monoid");
    let group = FiniteAbelianGroup::new(f.add).expect("GF(9) addition");
    NearRing::from_group(Arc::new(monoid), group).expect("Dickson structure is a near-ring")
}

//! Finite monoid modules, near-rings, multi-near-rings, Andre modules and
//! near-vector spaces.
//!
//! Every structure lives on dense element indices `0..n` and is stored as
//! full tables. The row convention is fixed throughout: `table[a][b]` is
//! `a∘b`, so the left operand selects the row, and `act[a][v]` is `a·v`.
//! Constructors validate their axioms exhaustively and report the
//! lexicographically least counterexample.

pub mod andre;
pub mod catalog;
pub mod cli;
pub mod enumerate;
pub mod fixtures;
pub mod group;
pub mod module;
pub mod monoid;
pub mod nat;
pub mod nearring;
pub mod report;
pub mod subset;
pub mod verify;

/// Position of an element in its structure's carrier.
pub type ElementIndex = usize;

pub use andre::{check_andre, check_nvs, quasi_kernel, AndreError, MultiNearRing};
pub use group::{FiniteAbelianGroup, GroupError};
pub use module::{MModule, ModuleError, ModuleMorphism, Submodule};
pub use monoid::{check_scalar_group, FiniteMonoid, MonoidError};
pub use nearring::{classify, NearRing, NearRingError};
pub use subset::ElementSubset;

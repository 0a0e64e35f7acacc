//! Exact computations on numerical semigroups.
//!
//! Semigroups are built from generators or gap sets and carry their
//! Frobenius number, membership table and minimal generators. On top of that
//! the crate provides pseudo-Frobenius numbers and special gaps, symmetry and
//! irreducibility tests, oversemigroup enumeration, exact minimum irreducible
//! decompositions, the BPF/ξ-set bounds on decomposition size, and the two
//! semigroup families whose decompositions need arbitrarily many components.

pub mod bitset;
pub mod cover;
pub mod decomposition;
mod error;
pub mod families;
mod invariants;
pub mod oversemigroups;
mod semigroup;

pub use decomposition::{
    bounds, constructive_decomposition, minimal_decomposition, verify_decomposition, xi,
    BoundsReport, Decomposition, DecompositionDefect, Method, XiSet,
};
pub use error::{Error, Result};
pub use families::{halfline, halfline_witness, skn, smallest_prime_factor, FamilyWitness};
pub use invariants::InvariantBundle;
pub use oversemigroups::{
    enumerate_irreducible_oversemigroups, enumerate_oversemigroups, maximal_irreducible_avoiding,
    unitary_extensions, OversemigroupSet,
};
pub use semigroup::{Semigroup, DEFAULT_CAPACITY};

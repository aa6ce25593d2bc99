//! Exact two-sided symmetric-extension thresholds for Werner and isotropic
//! states of arbitrary local dimension.
//!
//! For a bipartite state on `C^d ⊗ C^d` and extension sizes `(n_L, n_R)`,
//! the library computes the extreme parameter of the
//! `(n_L, n_R)`-extendible Werner states ([`werner::alpha`]) and isotropic
//! states ([`isotropic::beta`]) in exact rational arithmetic, and checks the
//! closed forms against two independent oracles:
//!
//! - an exhaustive minimization over pairs of Young diagrams
//!   ([`werner::exhaustive_alpha`]), driven by the dominance-minimal
//!   constituent of a Littlewood-Richardson product ([`lr`]); and
//! - explicit construction and extremal eigensolve of the associated spin
//!   operators on the full `d^(n_L + n_R)`-dimensional tensor space
//!   ([`oracle`]).
//!
//! Supporting layers: integer-partition and Young-diagram primitives
//! ([`partitions`]) and quadratic Casimir eigenvalues of SU(d)
//! representations ([`casimir`]).
//!
//! Floating point is confined to the [`oracle`] module; everything else is
//! exact.

pub mod casimir;
pub mod isotropic;
pub mod lr;
pub mod oracle;
pub mod partitions;
pub mod werner;

pub use casimir::{casimir_eigenvalue, cover_gap, CasimirValue};
pub use isotropic::{beta, isotropic_triple_energy, IsotropicResult};
pub use lr::{lr_decompose, min_product_diagram, min_right_factor, LRDecomposition};
pub use partitions::{
    dominance_minimum, enumerate_partitions, equivalent_labels, OverlapProfile, Partition,
    PartitionError, PartitionPair,
};
pub use werner::{
    alpha, candidate_energy_closed_form, candidate_pair, exhaustive_alpha, triple_energy,
    ExtendibilityQuery, ExtendibilityResult,
};

use num_rational::Rational64;

/// Renders an exact rational as `"p/q"`, or `"p"` when the denominator is 1.
pub fn format_rational(value: Rational64) -> String {
    if *value.denom() == 1 {
        format!("{}", value.numer())
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

//! Oriented matroids, real hyperplane arrangements, and explicit stepwise
//! bijections onto NBC subsets.
//!
//! The crate has four parts:
//!
//! - [`om`]: signed circuits, the circuit axioms, underlying matroids,
//!   reorientation and the deletion/contraction minors.
//! - [`nbc`]: broken circuits and NBC subsets of an ordered matroid.
//! - [`bijection`]: the level-by-level bijection between acyclic
//!   reorientations of an oriented matroid and NBC subsets of its underlying
//!   matroid, with stepwise inverse and full traces.
//! - [`arrangement`]: exact-rational hyperplane arrangements, region
//!   enumeration, affine circuits and affine NBC subsets, coning, the
//!   region-side bijection and its transport onto the oriented-matroid side.
//!
//! All values are immutable after construction and every operation is a pure
//! function of its inputs, so everything can be shared freely across threads.
//! Arithmetic on the arrangement side is exact (arbitrary-precision
//! rationals); there is no floating point anywhere in the decision paths.

pub mod arrangement;
pub mod bijection;
pub mod nbc;
pub mod om;
pub mod random;
pub mod set;

pub use bijection::{
    enumerate_acyclic_reorientations, psi_backward, psi_backward_trace, psi_forward,
    psi_forward_trace, psi_inverse_step, psi_step, BijectionError, OmPairState, PsiTrace,
    StepCase,
};
pub use om::{
    validate_matroid_axioms, validate_om_axioms, Matroid, MatroidAxiomViolation, OmAxiomViolation,
    OmError, OrientedMatroid, SignedSubset,
};
pub use set::{Element, ElemSet};

//! Exact lattice arithmetic in a fixed maximal order of a definite rational
//! quaternion algebra, and its reduction modulo 3.
//!
//! The point of this layer is a concrete demonstration that "the preimage of
//! a submodule is free of rank one" depends on the chosen surjection, not
//! just on the submodule: two right ideals of the order — one principal, one
//! not — reduce to the *same* submodule of the 81-element quotient ring
//! under two different surjections. All arithmetic is integer-exact: the
//! order has a Z-basis with half-integer quaternion coordinates, but its
//! structure constants are integers, so every computation stays in Z once
//! elements are written in order coordinates.

pub mod context;
pub mod example36;
pub mod lattice;
pub mod reduction;

pub use context::{build_order, OrderContext, OrderElement};
pub use example36::{demonstration_ideals, verify_example36};
pub use lattice::{OrderLattice, Principality};
pub use reduction::ModPReduction;

use crate::module::ModuleError;
use crate::ring::RingError;
use thiserror::Error;

/// Errors raised by the quaternion-order layer.
#[derive(Debug, Error)]
pub enum QuatError {
    /// A product or conversion left the integer span; this always indicates
    /// an implementation bug (the verified structure constants are integral).
    #[error("integrality violation: {context}")]
    IntegralityViolation { context: String },
    /// A norm-box enumeration was requested beyond the supported bound.
    #[error("norm bound {bound} exceeds cap {cap}")]
    BoundExceeded { bound: i64, cap: i64 },
    /// An operation's stated precondition does not hold for the input.
    #[error("precondition failed: {msg}")]
    PreconditionFailed { msg: String },
    /// A verification step that must succeed by established theory failed;
    /// this always indicates an implementation bug, never a property of the
    /// input.
    #[error("equivalence violation: {context}")]
    EquivalenceViolation { context: String },
    /// Failure while building the reduced finite ring.
    #[error(transparent)]
    Ring(#[from] RingError),
    /// Failure in module-level machinery on the reduced ring.
    #[error(transparent)]
    Module(#[from] ModuleError),
}

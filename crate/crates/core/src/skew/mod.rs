//! Skew polynomial rings F_q[x; σ] with σ a Frobenius power, together with
//! their factorization theory, and the integer-polynomial contrast case.
//!
//! These rings are noncommutative Euclidean domains: the twist rule
//! x·a = σ(a)·x makes left and right division different operations, and a
//! polynomial can factor in several genuinely different ways. The layer
//! provides exact arithmetic, factorization enumeration up to unit
//! insertion, the correspondence between factorizations and chains of
//! principal right ideals, the divisor↔submodule poset of a quotient
//! module, and closure checks for sums of principal right ideals. The
//! `zx` submodule treats Z[x], where sums of principal ideals can fail to
//! be principal — the boundary the finite-field backends never cross.

pub mod factor;
pub mod field;
pub mod poly;
pub mod poset;
pub mod zx;

pub use factor::{
    chain_from_factorization, enumerate_factorizations, factorization_from_chain,
    maximal_factorizations, Factorization, IdealChain,
};
pub use field::GaloisField;
pub use poly::{parse_poly_text, SkewPoly, SkewRing};
pub use poset::{pi_exact_poset, sum_closure_check, PiExactPoset, SkewModule};
pub use zx::{parse_int_poly, zx_sum_principal, IntPoly};

use thiserror::Error;

/// Errors raised by the skew polynomial layer.
#[derive(Debug, Error)]
pub enum SkewError {
    /// Text that does not match the polynomial or field grammar.
    #[error("parse error: {msg}")]
    Parse { msg: String },
    /// Field parameters outside the supported range, or a non-prime
    /// characteristic.
    #[error("unsupported field: {msg}")]
    BadField { msg: String },
    /// Division by the zero polynomial.
    #[error("division by zero polynomial")]
    DivisionByZero,
    /// A chain step or divisor claim that fails exact division.
    #[error("{num} is not divisible by {den}")]
    NotDivisible { num: String, den: String },
    /// An operation's stated precondition does not hold for the input.
    #[error("precondition failed: {msg}")]
    PreconditionFailed { msg: String },
    /// An enumeration would exceed the configured size cap.
    #[error("enumeration size {size} exceeds cap {cap}")]
    SizeExceeded { size: u128, cap: usize },
    /// Two independently computed sides of a proved equivalence disagree;
    /// this always indicates an implementation bug, never a property of
    /// the input.
    #[error("equivalence violation: {context}")]
    EquivalenceViolation { context: String },
}

//! Exact-arithmetic workbench for module theory over small decidable rings.
//!
//! Everything here computes with exact integers — no floats, no hashing of
//! unordered collections into output. The crate is organized around five
//! backends:
//!
//! - [`ring`]: finite rings presented structurally (`zmod`, matrix and
//!   triangular-matrix rings, products, structure-constant tables) plus a
//!   witnessed backend for Z. Units, idempotents, Jacobson radical,
//!   quotients, right ideals, Von Neumann regularity, idempotent lifting.
//! - [`module`]: finite right modules over those rings — submodule lattices,
//!   hom sets, commuting-square checks, projective covers of cyclic modules,
//!   superfluous submodules, exactness notions for submodules of cyclic
//!   modules, and cyclic-presentation testing.
//! - [`skew`]: skew polynomial rings F_q[x;σ] with σ a Frobenius power —
//!   two-sided division, gcd/lcm of principal right ideals, factorization
//!   enumeration up to unit insertion, the factorization ↔ ideal-chain
//!   correspondence, and the submodule ↔ divisor poset of R/fR. Includes a
//!   bounded-verdict Z[x] backend for ideal-principality questions.
//! - [`quat`]: a concrete rational quaternion Z-order with exact lattice
//!   arithmetic (Hermite forms, reduced norms, norm-box enumeration,
//!   principality of right ideals) and its reduction mod 3 into [`ring`].
//! - [`endo`]: endomorphism rings of finite modules, materialized as
//!   [`ring::FiniteRing`]s, with the split-epi / right-ideal-sum
//!   equivalences and minimal-summand analyses.
//!
//! [`report`] carries the shared `Verdict`/`Report` vocabulary, [`suites`]
//! the canned end-to-end verification suites used by the CLI and the
//! acceptance tests.

pub mod endo;
pub mod module;
pub mod quat;
pub mod report;
pub mod ring;
pub mod skew;
pub mod suites;

mod bitset;

pub use report::{Check, Report, Status, Verdict};

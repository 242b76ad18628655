//! Endomorphism-ring machinery over finite modules. The endomorphism ring
//! E = End(M) is materialized as an explicit finite ring (pointwise
//! addition, composition) so that idempotent, unit, and radical analysis
//! applies to it unchanged. On top of it sit the transfer results between
//! M and E: the split-epi criterion for complement projections against a
//! fixed endomorphism s, the equivalence of surjectivity / summand /
//! isomorphism / superfluous-kernel statements on both sides, the family
//! of minimal summands surjecting onto M/s(M), and the matching of
//! projective-cover conditions. Every equivalence is decided on both sides
//! by independent computations; disagreement is an error, never a report
//! status.

mod minimal;
mod quasi;
mod ring;
mod transfer;

pub use minimal::{minimal_family, minimal_summands, MinimalFamily};
pub use quasi::is_quasi_projective;
pub use ring::{
    direct_decompositions, end_ring, DecompPair, EndoRing, ENDO_MODULE_CAP,
};
pub use transfer::{cover_transfer_check, lemma_endo_suite, split_epi_equivalence};

//! Shared fixtures for the integration suites: ring corpus construction,
//! seeded sampling of skew polynomials, and the endomorphism-layer module
//! corpus.
//!
//! Every test binary that includes this module uses only a subset of it,
//! so unused items are expected.
#![allow(dead_code)]

use std::sync::Arc;

use modfact::module::FiniteModule;
use modfact::ring::{build_ring, Caps, FiniteRing, RingHandle};
use modfact::skew::{GaloisField, SkewPoly, SkewRing};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The finite rings the corpus-wide sweeps run over: commutative chains and
/// products of chains, plus matrix, triangular and mixed-product examples.
pub const RING_CORPUS: [&str; 10] = [
    "zmod:4",
    "zmod:6",
    "zmod:8",
    "zmod:9",
    "zmod:12",
    "mat:2:zmod:2",
    "mat:2:zmod:3",
    "tri:2:zmod:2",
    "tri:3:zmod:2",
    "prod:zmod:2,mat:2:zmod:2",
];

/// The corpus members of order at most 16, where module-level sweeps stay
/// exhaustive.
pub const SMALL_RING_CORPUS: [&str; 7] = [
    "zmod:4",
    "zmod:6",
    "zmod:8",
    "zmod:9",
    "zmod:12",
    "tri:2:zmod:2",
    "mat:2:zmod:2",
];

/// Builds a handle for a spec, panicking on failure: corpus specs are fixed
/// test data.
pub fn handle(spec: &str) -> RingHandle {
    build_ring(spec, &Caps::default()).unwrap_or_else(|e| panic!("building {spec}: {e}"))
}

/// Builds the finite ring for a spec.
pub fn finite(spec: &str) -> Arc<FiniteRing> {
    Arc::clone(handle(spec).finite("test fixture").unwrap())
}

/// A deterministically seeded generator; fixed seeds keep every sampled
/// sweep reproducible run to run.
pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// F_4 with the Frobenius twist x*a = a^2*x.
pub fn gf4_twisted() -> SkewRing {
    SkewRing::new(GaloisField::new(2, 2).unwrap(), 1)
}

/// F_4 with the identity twist (ordinary commutative polynomials).
pub fn gf4_commutative() -> SkewRing {
    SkewRing::new(GaloisField::new(2, 2).unwrap(), 0)
}

/// F_9 with the Frobenius twist.
pub fn gf9_twisted() -> SkewRing {
    SkewRing::new(GaloisField::new(3, 2).unwrap(), 1)
}

/// A uniformly random polynomial of exactly the given degree (monic when
/// `monic` is set, random nonzero leading coefficient otherwise).
pub fn random_poly(ring: &SkewRing, rng: &mut ChaCha8Rng, degree: usize, monic: bool) -> SkewPoly {
    let q = ring.field().q();
    let mut coeffs: Vec<usize> = (0..degree).map(|_| rng.gen_range(0..q)).collect();
    coeffs.push(if monic { 1 } else { rng.gen_range(1..q) });
    ring.poly(coeffs)
}

/// The distinct cyclic modules eR cut out by the ring's idempotents,
/// deduplicated by member set and capped in size, each labelled by its
/// generating idempotent. The zero module is excluded: the endomorphism
/// layer rejects it and every statement about it is vacuous.
pub fn idempotent_summands(
    ring: &Arc<FiniteRing>,
    max_size: usize,
) -> Vec<(String, Arc<FiniteModule>)> {
    let regular = FiniteModule::regular(Arc::clone(ring));
    let mut seen: Vec<Vec<u32>> = Vec::new();
    let mut out = Vec::new();
    for &e in modfact::ring::analysis::idempotents(ring) {
        let ideal = modfact::ring::RightIdealSet::principal(ring, e as usize);
        if ideal.len() == 1 || ideal.len() > max_size {
            continue;
        }
        if seen.contains(&ideal.members().to_vec()) {
            continue;
        }
        seen.push(ideal.members().to_vec());
        let label = format!("({})R over {}", ring.display(e as usize), ring.spec());
        let carrier =
            FiniteModule::submodule_carrier(&regular, ideal.members().to_vec(), label.clone());
        out.push((label, carrier));
    }
    out
}

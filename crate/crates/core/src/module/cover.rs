//! Projective covers of cyclic modules over finite rings, and superfluous
//! submodules.
//!
//! Finite rings are semiperfect, so every cyclic module M with a chosen
//! generator g (annihilator I = ann(g)) has a projective cover of the form
//! π: eR → M, a ↦ g·a, where e is an idempotent with eR + I = R and
//! eR ∩ I ⊆ eJ(R). The first condition makes π surjective; the second
//! bounds the kernel eR ∩ I by the largest superfluous submodule eJ(R) of
//! eR. We pick the smallest-index valid idempotent so results are
//! reproducible.

use std::sync::Arc;

use crate::ring::analysis::{idempotents, radical_ideal};
use crate::ring::{FiniteRing, RightIdealSet};

use super::hom::{cyclic_generator, ModuleHom};
use super::{
    closure, cyclic_module, submodules, FiniteModule, ModuleError, Submodule,
};

/// A projective cover π: eR → M of a cyclic module.
pub struct CyclicCover {
    /// The chosen idempotent e (ring index).
    pub idempotent: usize,
    /// The generator g of M that the cover maps onto (π(a) = g·a).
    pub generator: usize,
    /// eR as a carrier module (submodule of the regular module).
    pub source: Arc<FiniteModule>,
    /// The covered module.
    pub target: Arc<FiniteModule>,
    /// π itself.
    pub map: ModuleHom,
    /// Kernel of π as ring-element indices (subset of eR), sorted.
    pub kernel_in_ring: Vec<u32>,
}

impl CyclicCover {
    pub fn kernel_size(&self) -> usize {
        self.kernel_in_ring.len()
    }
}

/// Whether N ⊆ eJ(R), which characterizes superfluity inside eR: eJ(R) is
/// the largest superfluous submodule of eR.
pub fn superfluous_in_er(
    ring: &Arc<FiniteRing>,
    e: usize,
    n_members: &[u32],
) -> bool {
    let j = radical_ideal(ring);
    // eJ = {e*x : x in J}; membership test via direct scan.
    let mut ej = crate::bitset::BitSet::new(ring.order());
    for &x in j.members() {
        ej.insert(ring.mul(e, x as usize));
    }
    n_members.iter().all(|&m| ej.contains(m as usize))
}

/// Exhaustive superfluity: N is superfluous in M iff no proper submodule L
/// satisfies N + L = M. The fast membership characterization above must
/// agree on eR instances; tests cross-check.
pub fn is_superfluous(
    n: &Submodule,
    m: &Arc<FiniteModule>,
    cap: usize,
) -> Result<bool, ModuleError> {
    for l in submodules(m, cap)? {
        if l.len() == m.size() {
            continue;
        }
        // N + L: additive span of the union (already action-closed).
        let mut gens: Vec<usize> = n.gens().iter().map(|&g| g as usize).collect();
        gens.extend(l.gens().iter().map(|&g| g as usize));
        let span = closure(m, &gens);
        if span.len() == m.size() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Projective cover of M = R/xR with its canonical presentation.
pub fn projective_cover_cyclic(
    ring: &Arc<FiniteRing>,
    x: usize,
) -> Result<CyclicCover, ModuleError> {
    let (target, _pi) = cyclic_module(ring, x);
    let ideal = target.provenance().expect("cyclic_module records xR").clone();
    // The generator is the coset of 1; its annihilator is exactly xR.
    let g = target.coset_of(ring.one()).unwrap();
    cover_onto_generator(ring, &target, g, &ideal)
}

/// Projective cover of an arbitrary cyclic module, using its smallest
/// generator.
pub fn cover_of_cyclic(
    ring: &Arc<FiniteRing>,
    m: &Arc<FiniteModule>,
) -> Result<CyclicCover, ModuleError> {
    let g = cyclic_generator(m).ok_or_else(|| ModuleError::NotCyclic {
        label: m.label().to_string(),
    })?;
    let ann = super::hom::element_annihilator(m, g);
    cover_onto_generator(ring, m, g, &ann)
}

/// Common search: smallest idempotent e with eR + I = R and eR ∩ I ⊆ eJ(R),
/// where I = ann(g). The returned map sends a ∈ eR to g·a.
fn cover_onto_generator(
    ring: &Arc<FiniteRing>,
    target: &Arc<FiniteModule>,
    g: usize,
    ann_g: &RightIdealSet,
) -> Result<CyclicCover, ModuleError> {
    let regular = FiniteModule::regular(Arc::clone(ring));
    for &e in idempotents(ring) {
        let e = e as usize;
        let er = RightIdealSet::principal(ring, e);
        // eR + I = R iff 1 = a + b for some a ∈ eR, b ∈ I, i.e. some
        // a ∈ eR has 1 − a ∈ I. Avoids materializing the sum.
        let full = er
            .members()
            .iter()
            .any(|&a| ann_g.contains(ring.sub(ring.one(), a as usize)));
        if !full {
            continue;
        }
        let kernel: Vec<u32> = er
            .members()
            .iter()
            .copied()
            .filter(|&a| ann_g.contains(a as usize))
            .collect();
        if !superfluous_in_er(ring, e, &kernel) {
            continue;
        }
        let source = FiniteModule::submodule_carrier(
            &regular,
            er.members().to_vec(),
            format!("({})R", ring.display(e)),
        );
        let map: Vec<u32> = source
            .elements()
            .map(|i| {
                let a = source.member_in_parent(i).unwrap();
                target.act(g, a) as u32
            })
            .collect();
        let map = ModuleHom::new(&source, target, map)?;
        assert!(map.is_surjective(), "eR + ann(g) = R must make the cover onto");
        debug_assert_eq!(
            map.kernel().len(),
            kernel.len(),
            "kernel of a -> g*a is the meet of eR and ann(g)"
        );
        return Ok(CyclicCover {
            idempotent: e,
            generator: g,
            source,
            target: Arc::clone(target),
            map,
            kernel_in_ring: kernel,
        });
    }
    // Finite rings are semiperfect: a valid idempotent always exists. If we
    // fall through, the search itself is broken.
    Err(ModuleError::EquivalenceViolation {
        context: format!(
            "no idempotent covers the cyclic module {} over {}",
            target.label(),
            ring.spec()
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{build_ring, Caps};

    fn finite(spec: &str) -> Arc<FiniteRing> {
        Arc::clone(build_ring(spec, &Caps::default()).unwrap().finite("test").unwrap())
    }

    #[test]
    fn local_ring_cover_is_whole_ring() {
        // Z/4 is local; the cover of Z/4 / 2(Z/4) is R itself (e = 1).
        let r = finite("zmod:4");
        let cover = projective_cover_cyclic(&r, 2).unwrap();
        assert_eq!(cover.idempotent, 1);
        assert_eq!(cover.source.size(), 4);
        assert_eq!(cover.kernel_in_ring, vec![0, 2]);
    }

    #[test]
    fn cover_by_unit_gives_zero_module() {
        let r = finite("zmod:6");
        let cover = projective_cover_cyclic(&r, 5).unwrap();
        assert_eq!(cover.idempotent, 0);
        assert_eq!(cover.source.size(), 1);
        assert_eq!(cover.target.size(), 1);
    }

    #[test]
    fn cover_of_regular_presentation_is_identity_idempotent() {
        let r = finite("zmod:6");
        let cover = projective_cover_cyclic(&r, 0).unwrap();
        assert_eq!(cover.idempotent, 1);
        assert_eq!(cover.kernel_in_ring, vec![0]);
    }

    #[test]
    fn semisimple_quotient_cover_peels_one_factor() {
        // Over Z/6 = Z/2 x Z/3, the module R/2R ≅ Z/2 is covered by the
        // idempotent 3 (the projection onto the Z/2 factor): 3R = {0,3} and
        // 3R + 2R = R with 3R ∩ 2R = 0.
        let r = finite("zmod:6");
        let cover = projective_cover_cyclic(&r, 2).unwrap();
        assert_eq!(cover.idempotent, 3);
        assert_eq!(cover.kernel_in_ring, vec![0]);
        assert_eq!(cover.source.size(), 2);
    }

    #[test]
    fn matrix_ring_cover_with_radical_kernel() {
        // R = 2x2 matrices over Z/9, x = diag(1,3). The smallest covering
        // idempotent is E22 (ring index 1), and the kernel of eR → R/xR is
        // exactly eJ(R) = {matrices with top row 0 and bottom row in 3Z}.
        let r = finite("mat:2:zmod:9");
        let x = r.encode_coords(&[1, 0, 0, 3]);
        let cover = projective_cover_cyclic(&r, x).unwrap();
        let e22 = r.encode_coords(&[0, 0, 0, 1]);
        assert_eq!(cover.idempotent, e22);
        assert_eq!(e22, 1);
        assert_eq!(cover.source.size(), 81);
        assert_eq!(cover.target.size(), 9);
        // Independent kernel oracle: all [[0,0],[3i,3j]].
        let mut expected: Vec<u32> = Vec::new();
        for i in [0usize, 3, 6] {
            for j in [0usize, 3, 6] {
                expected.push(r.encode_coords(&[0, 0, i, j]) as u32);
            }
        }
        expected.sort_unstable();
        assert_eq!(cover.kernel_in_ring, expected);
        // And that set is exactly e*J(R).
        let j = radical_ideal(&r);
        let mut ej: Vec<u32> = j
            .members()
            .iter()
            .map(|&x| r.mul(e22, x as usize) as u32)
            .collect();
        ej.sort_unstable();
        ej.dedup();
        assert_eq!(cover.kernel_in_ring, ej);
    }

    #[test]
    fn triangular_ideal_covers() {
        // In the 8-element upper-triangular ring: the span of E12 is
        // covered by E22 (indices: E22 = 1), the top row by E11 (index 4).
        let r = finite("tri:2:zmod:2");
        let reg = FiniteModule::regular(Arc::clone(&r));
        let e12 = r.encode_coords(&[0, 1, 0]);
        let e11 = r.encode_coords(&[1, 0, 0]);
        let span_e12 = Submodule::generated(&reg, &[e12]).carrier(&reg, "E12R".to_string());
        let cover_n = cover_of_cyclic(&r, &span_e12).unwrap();
        assert_eq!(cover_n.idempotent, r.encode_coords(&[0, 0, 1]));
        assert_eq!(cover_n.kernel_in_ring, vec![0]);
        let top = Submodule::generated(&reg, &[e11]).carrier(&reg, "E11R".to_string());
        let cover_m = cover_of_cyclic(&r, &top).unwrap();
        assert_eq!(cover_m.idempotent, e11);
        assert_eq!(cover_m.kernel_in_ring, vec![0]);
    }

    #[test]
    fn cover_of_non_cyclic_module_is_rejected() {
        let r = finite("zmod:2");
        let reg = FiniteModule::regular(Arc::clone(&r));
        let sum = FiniteModule::direct_sum(&reg, &reg);
        assert!(matches!(
            cover_of_cyclic(&r, &sum),
            Err(ModuleError::NotCyclic { .. })
        ));
    }

    #[test]
    fn superfluous_fast_path_agrees_with_exhaustive() {
        // Cross-check N ⊆ eJ(R) against the defining quantifier for every
        // submodule of eR, for every idempotent e, over two small rings.
        for spec in ["tri:2:zmod:2", "zmod:4", "zmod:6"] {
            let r = finite(spec);
            let reg = FiniteModule::regular(Arc::clone(&r));
            for &e in idempotents(&r) {
                let er = Submodule::generated(&reg, &[e as usize]);
                let carrier = er.carrier(&reg, format!("({})R", r.display(e as usize)));
                for sub in submodules(&carrier, 4096).unwrap() {
                    let in_ring: Vec<u32> = sub
                        .members()
                        .iter()
                        .map(|&i| carrier.member_in_parent(i as usize).unwrap() as u32)
                        .collect();
                    let fast = superfluous_in_er(&r, e as usize, &in_ring);
                    let slow = is_superfluous(&sub, &carrier, 4096).unwrap();
                    assert_eq!(fast, slow, "{spec}, e={e}, sub={in_ring:?}");
                }
            }
        }
    }

    #[test]
    fn radical_is_superfluous_in_regular_module() {
        let r = finite("tri:2:zmod:2");
        let reg = FiniteModule::regular(Arc::clone(&r));
        let j = radical_ideal(&r);
        let sub = Submodule::generated(
            &reg,
            &j.members().iter().map(|&x| x as usize).collect::<Vec<_>>(),
        );
        assert!(is_superfluous(&sub, &reg, 4096).unwrap());
    }

    #[test]
    fn whole_module_is_not_superfluous() {
        let r = finite("zmod:6");
        let reg = FiniteModule::regular(Arc::clone(&r));
        let full = Submodule::full(&reg);
        assert!(!is_superfluous(&full, &reg, 4096).unwrap());
    }

    #[test]
    fn every_cover_kernel_sits_inside_ej() {
        // The kernel bound holds for every x over a few rings.
        for spec in ["zmod:4", "zmod:6", "tri:2:zmod:2", "mat:2:zmod:2"] {
            let r = finite(spec);
            for x in r.elements() {
                let cover = projective_cover_cyclic(&r, x).unwrap();
                assert!(
                    superfluous_in_er(&r, cover.idempotent, &cover.kernel_in_ring),
                    "{spec}, x={x}"
                );
            }
        }
    }
}

//! Exactness of submodules: the preimage criterion against a fixed
//! presentation, the cover-diagram criterion, and cyclic-presentation
//! testing.

use std::sync::Arc;

use crate::bitset::BitSet;

use super::cover::{cover_of_cyclic, CyclicCover};
use super::hom::{cyclic_generator, hom_set, is_isomorphic, ModuleHom};
use super::{cyclic_module, FiniteModule, ModuleError, Submodule};
use crate::ring::FiniteRing;

/// Preimage criterion for a submodule N of M against a surjection
/// π: R → M from the regular module: N is π-exact when π⁻¹(N) is
/// isomorphic to R as a right module.
///
/// Over a finite ring the preimage has |N|·|ker π| elements, so the
/// criterion degenerates to π⁻¹(N) = R, i.e. N = M; proper instances live
/// over infinite backends, which implement this contract with their own
/// arithmetic. The generic computation is still done honestly: we build
/// the preimage carrier and run the isomorphism test.
pub fn is_pi_exact(
    n: &Submodule,
    pi: &ModuleHom,
    cap: usize,
) -> Result<bool, ModuleError> {
    let source = pi.source();
    let mut preimage: Vec<u32> = Vec::new();
    for x in source.elements() {
        if n.contains(pi.apply(x)) {
            preimage.push(x as u32);
        }
    }
    if preimage.len() != source.size() {
        // A proper subset cannot be isomorphic to the whole finite carrier.
        return Ok(false);
    }
    let carrier = FiniteModule::submodule_carrier(
        source,
        preimage,
        format!("preimage in {}", source.label()),
    );
    Ok(is_isomorphic(&carrier, source, cap)?.is_some())
}

/// Outcome of the cover-diagram exactness test, with enough data to report.
pub struct ExactnessWitness {
    pub cover_n: CyclicCover,
    pub cover_m: CyclicCover,
    /// The connecting map found between the cover sources.
    pub lambda: ModuleHom,
    /// λ(ker π_N) and ker π_M as sorted source-of-M indices.
    pub lambda_kernel_image: Vec<u32>,
    pub kernel_m: Vec<u32>,
    pub exact: bool,
}

/// Cover-diagram criterion: N ⊆ M (both cyclic) is exact when, for
/// projective covers π_N of N and π_M of M and a map λ between their
/// sources commuting with the inclusion, λ(ker π_N) = ker π_M. A single
/// commuting λ decides — the condition holds for one iff it holds for all
/// — and projectivity of the sources guarantees at least one exists.
pub fn is_exact_submodule(
    ring: &Arc<FiniteRing>,
    n: &Submodule,
    m: &Arc<FiniteModule>,
    cap: usize,
) -> Result<ExactnessWitness, ModuleError> {
    let n_carrier = FiniteModule::submodule_carrier(
        m,
        n.members().to_vec(),
        format!("sub{} of {}", n.len(), m.label()),
    );
    if cyclic_generator(m).is_none() {
        return Err(ModuleError::NotCyclic {
            label: m.label().to_string(),
        });
    }
    if cyclic_generator(&n_carrier).is_none() {
        return Err(ModuleError::NotCyclic {
            label: n_carrier.label().to_string(),
        });
    }
    let cover_m = cover_of_cyclic(ring, m)?;
    let cover_n = cover_of_cyclic(ring, &n_carrier)?;
    let eps = ModuleHom::inclusion(&n_carrier, m);
    // Find one λ with π_M ∘ λ = ε ∘ π_N.
    let candidates = hom_set(&cover_n.source, &cover_m.source, cap)?;
    let want: Vec<u32> = cover_n
        .source
        .elements()
        .map(|b| eps.apply(cover_n.map.apply(b)) as u32)
        .collect();
    let lambda = candidates
        .into_iter()
        .find(|l| {
            cover_n
                .source
                .elements()
                .all(|b| cover_m.map.apply(l.apply(b)) as u32 == want[b])
        })
        .unwrap_or_else(|| {
            // The cover source is projective, so a lift always exists.
            panic!(
                "no commuting map between cover sources of {} and {}",
                n_carrier.label(),
                m.label()
            )
        });
    let mut lambda_kernel_image: Vec<u32> = cover_n
        .map
        .kernel()
        .iter()
        .map(|&b| lambda.apply(b as usize) as u32)
        .collect();
    lambda_kernel_image.sort_unstable();
    lambda_kernel_image.dedup();
    let kernel_m = cover_m.map.kernel();
    let exact = lambda_kernel_image == kernel_m;
    Ok(ExactnessWitness {
        cover_n,
        cover_m,
        lambda,
        lambda_kernel_image,
        kernel_m,
        exact,
    })
}

/// Whether some single element generates M.
pub fn is_cyclically_generated(m: &FiniteModule) -> (bool, Option<usize>) {
    match cyclic_generator(m) {
        Some(g) => (true, Some(g)),
        None => (false, None),
    }
}

/// Whether M ≅ R/xR for some x, by direct scan over R in index order.
/// Returns the smallest witness x. Candidates are prefiltered by quotient
/// size before the isomorphism test.
pub fn is_cyclically_presented(
    ring: &Arc<FiniteRing>,
    m: &Arc<FiniteModule>,
    cap: usize,
) -> Result<Option<usize>, ModuleError> {
    if m.size() > cap || ring.order() > cap {
        return Err(ModuleError::SizeExceeded {
            size: m.size().max(ring.order()),
            cap,
        });
    }
    if m.size() == 1 {
        // R/1R is the zero module.
        return Ok(Some(ring.one()));
    }
    if ring.order() % m.size() != 0 {
        return Ok(None);
    }
    let mut tried: Vec<Vec<u32>> = Vec::new();
    for x in ring.elements() {
        // Cheap size screen: |xR| must be |R|/|M|.
        let mut xr = BitSet::new(ring.order());
        let mut count = 0usize;
        for r in ring.elements() {
            if xr.insert(ring.mul(x, r)) {
                count += 1;
            }
        }
        if count * m.size() != ring.order() {
            continue;
        }
        let members = xr.to_sorted_vec();
        if tried.contains(&members) {
            continue;
        }
        tried.push(members);
        let (quot, _) = cyclic_module(ring, x);
        if is_isomorphic(&quot, m, cap)?.is_some() {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::submodules;
    use crate::ring::{build_ring, Caps};

    fn finite(spec: &str) -> Arc<FiniteRing> {
        Arc::clone(build_ring(spec, &Caps::default()).unwrap().finite("test").unwrap())
    }

    #[test]
    fn whole_module_is_pi_exact() {
        let r = finite("zmod:6");
        let (m, pi) = cyclic_module(&r, 2);
        let full = Submodule::full(&m);
        assert!(is_pi_exact(&full, &pi, 4096).unwrap());
    }

    #[test]
    fn proper_submodules_are_never_pi_exact_over_finite_rings() {
        for spec in ["zmod:4", "zmod:6", "tri:2:zmod:2"] {
            let r = finite(spec);
            for x in r.elements() {
                let (m, pi) = cyclic_module(&r, x);
                for sub in submodules(&m, 4096).unwrap() {
                    let expect = sub.len() == m.size();
                    assert_eq!(
                        is_pi_exact(&sub, &pi, 4096).unwrap(),
                        expect,
                        "{spec}, x={x}"
                    );
                }
            }
        }
    }

    #[test]
    fn triangular_ring_exact_submodule() {
        // In the 8-element upper-triangular ring over Z/2, the span of E12
        // is exact in the top row E11·R: both covers have zero kernel and
        // the unique commuting map sends E22 to E12.
        let r = finite("tri:2:zmod:2");
        let reg = FiniteModule::regular(Arc::clone(&r));
        let e11 = r.encode_coords(&[1, 0, 0]);
        let e12 = r.encode_coords(&[0, 1, 0]);
        let top = Submodule::generated(&reg, &[e11]).carrier(&reg, "E11R".to_string());
        // N inside the carrier: positions of {0, E12} in the member list.
        let n = Submodule::generated(&top, &[pos_of(&top, e12)]);
        let witness = is_exact_submodule(&r, &n, &top, 4096).unwrap();
        assert!(witness.exact);
        assert_eq!(witness.cover_n.idempotent, r.encode_coords(&[0, 0, 1]));
        assert_eq!(witness.cover_m.idempotent, e11);
        assert_eq!(witness.lambda_kernel_image, vec![0]);
        assert_eq!(witness.kernel_m, vec![0]);
        // λ sends the generator E22 of its source to E12 inside E11R.
        let e22 = r.encode_coords(&[0, 0, 1]);
        let src_pos = witness
            .cover_n
            .source
            .elements()
            .find(|&i| witness.cover_n.source.member_in_parent(i) == Some(e22))
            .unwrap();
        let lambda_of_e22 = witness.lambda.apply(src_pos);
        let in_ring = witness
            .cover_m
            .source
            .member_in_parent(lambda_of_e22)
            .unwrap();
        assert_eq!(in_ring, e12);
    }

    fn pos_of(carrier: &Arc<FiniteModule>, ring_elem: usize) -> usize {
        carrier
            .elements()
            .find(|&i| carrier.member_in_parent(i) == Some(ring_elem))
            .unwrap()
    }

    #[test]
    fn module_is_exact_in_itself() {
        let r = finite("zmod:4");
        let (m, _) = cyclic_module(&r, 2);
        let full = Submodule::full(&m);
        let witness = is_exact_submodule(&r, &full, &m, 4096).unwrap();
        assert!(witness.exact);
    }

    #[test]
    fn zero_submodule_exact_iff_cover_kernel_zero() {
        // N = 0 forces λ = 0, so exactness says exactly ker π_M = 0.
        let r = finite("zmod:4");
        let (m, _) = cyclic_module(&r, 2); // cover kernel {0,2} ≠ 0
        let zero = Submodule::zero(&m);
        let witness = is_exact_submodule(&r, &zero, &m, 4096).unwrap();
        assert!(!witness.exact);
        // Whereas inside a projective cyclic module the zero submodule is
        // exact: take M = R itself.
        let reg = FiniteModule::regular(Arc::clone(&r));
        let zero_r = Submodule::zero(&reg);
        let witness = is_exact_submodule(&r, &zero_r, &reg, 4096).unwrap();
        assert!(witness.exact);
    }

    #[test]
    fn exactness_rejects_non_cyclic_inputs() {
        let r = finite("zmod:2");
        let reg = FiniteModule::regular(Arc::clone(&r));
        let sum = FiniteModule::direct_sum(&reg, &reg);
        let zero = Submodule::zero(&sum);
        assert!(matches!(
            is_exact_submodule(&r, &zero, &sum, 4096),
            Err(ModuleError::NotCyclic { .. })
        ));
    }

    #[test]
    fn quotient_of_triangular_top_row_is_not_cyclically_presented() {
        // The 2-element quotient (top row)/(span of E12) has annihilator of
        // size 4 but every 2-element R/xR here has annihilator the top row;
        // the scan returns no witness.
        let r = finite("tri:2:zmod:2");
        let reg = FiniteModule::regular(Arc::clone(&r));
        let e11 = r.encode_coords(&[1, 0, 0]);
        let e12 = r.encode_coords(&[0, 1, 0]);
        let top = Submodule::generated(&reg, &[e11]).carrier(&reg, "E11R".to_string());
        let n = Submodule::generated(&top, &[pos_of(&top, e12)]);
        let quot = crate::module::quotient_module(&top, &n);
        assert_eq!(quot.size(), 2);
        assert_eq!(is_cyclically_presented(&r, &quot, 4096).unwrap(), None);
    }

    #[test]
    fn top_row_itself_is_cyclically_presented() {
        // E11·R ≅ R/E22·R: the generator E11 has annihilator {0, E22}.
        let r = finite("tri:2:zmod:2");
        let reg = FiniteModule::regular(Arc::clone(&r));
        let e11 = r.encode_coords(&[1, 0, 0]);
        let top = Submodule::generated(&reg, &[e11]).carrier(&reg, "E11R".to_string());
        let witness = is_cyclically_presented(&r, &top, 4096).unwrap();
        assert_eq!(witness, Some(r.encode_coords(&[0, 0, 1])));
    }

    #[test]
    fn every_cyclic_quotient_is_cyclically_presented() {
        let r = finite("zmod:6");
        for x in r.elements() {
            let (m, _) = cyclic_module(&r, x);
            assert!(is_cyclically_presented(&r, &m, 4096).unwrap().is_some());
        }
    }

    #[test]
    fn zero_module_is_cyclically_presented_by_one() {
        let r = finite("zmod:6");
        let (zero, _) = cyclic_module(&r, 1);
        assert_eq!(is_cyclically_presented(&r, &zero, 4096).unwrap(), Some(1));
    }
}

//! Commuting squares over two surjections and the three equivalent
//! exactness conditions attached to them.
//!
//! The data is a square
//!
//! ```text
//!         λ
//!     B ─────→ A
//!     │        │
//!  π_N│        │π_M
//!     ↓        ↓
//!     N ─────→ M
//!         ε
//! ```
//!
//! with π_N, π_M surjective, ε injective, and π_M ∘ λ = ε ∘ π_N. The three
//! conditions — (a) λ(B) fills the whole preimage π_M⁻¹(ε(N)), (b) λ maps
//! ker π_N onto ker π_M, (c) the induced map coker(λ) → coker(ε) is an
//! isomorphism — are equivalent for every such square. `check_square`
//! computes the three independently and treats disagreement as an internal
//! bug, not a property of the input.

use std::sync::Arc;

use crate::bitset::BitSet;

use super::hom::ModuleHom;
use super::{FiniteModule, ModuleError, Submodule};

/// A verified commuting square; see the module docs for the shape.
#[derive(Debug)]
pub struct SquareData {
    pub lambda: ModuleHom,
    pub pi_n: ModuleHom,
    pub pi_m: ModuleHom,
    pub eps: ModuleHom,
}

impl SquareData {
    /// Validates the hypotheses: matching endpoints, surjective π's,
    /// injective ε, commutativity.
    pub fn new(
        lambda: ModuleHom,
        pi_n: ModuleHom,
        pi_m: ModuleHom,
        eps: ModuleHom,
    ) -> Result<SquareData, ModuleError> {
        let endpoints_ok = Arc::ptr_eq(lambda.source(), pi_n.source())
            && Arc::ptr_eq(lambda.target(), pi_m.source())
            && Arc::ptr_eq(pi_n.target(), eps.source())
            && Arc::ptr_eq(pi_m.target(), eps.target());
        if !endpoints_ok {
            return Err(ModuleError::HypothesisViolated {
                which: "square endpoints do not match",
            });
        }
        if !pi_n.is_surjective() {
            return Err(ModuleError::HypothesisViolated {
                which: "left vertical map is not surjective",
            });
        }
        if !pi_m.is_surjective() {
            return Err(ModuleError::HypothesisViolated {
                which: "right vertical map is not surjective",
            });
        }
        if !eps.is_injective() {
            return Err(ModuleError::HypothesisViolated {
                which: "bottom map is not injective",
            });
        }
        let b = lambda.source();
        for x in b.elements() {
            if pi_m.apply(lambda.apply(x)) != eps.apply(pi_n.apply(x)) {
                return Err(ModuleError::HypothesisViolated {
                    which: "square does not commute",
                });
            }
        }
        Ok(SquareData {
            lambda,
            pi_n,
            pi_m,
            eps,
        })
    }
}

/// Evaluates the three conditions independently and checks they agree.
pub fn check_square(sq: &SquareData) -> Result<(bool, bool, bool), ModuleError> {
    let a = condition_preimage(sq);
    let b = condition_kernel(sq);
    let c = condition_cokernel(sq);
    if a != b || b != c {
        return Err(ModuleError::EquivalenceViolation {
            context: format!(
                "square conditions disagree: preimage={a}, kernel={b}, cokernel={c} \
                 (lambda: {} -> {})",
                sq.lambda.source().label(),
                sq.lambda.target().label()
            ),
        });
    }
    Ok((a, b, c))
}

/// (a) π_M⁻¹(ε(N)) = λ(B), as subsets of A.
fn condition_preimage(sq: &SquareData) -> bool {
    let a_mod = sq.pi_m.source();
    let eps_image = {
        let mut set = BitSet::new(sq.eps.target().size());
        for n in sq.eps.source().elements() {
            set.insert(sq.eps.apply(n));
        }
        set
    };
    let mut preimage = BitSet::new(a_mod.size());
    for x in a_mod.elements() {
        if eps_image.contains(sq.pi_m.apply(x)) {
            preimage.insert(x);
        }
    }
    let mut lambda_image = BitSet::new(a_mod.size());
    for b in sq.lambda.source().elements() {
        lambda_image.insert(sq.lambda.apply(b));
    }
    a_mod
        .elements()
        .all(|x| preimage.contains(x) == lambda_image.contains(x))
}

/// (b) λ(ker π_N) = ker π_M, as subsets of A.
fn condition_kernel(sq: &SquareData) -> bool {
    let a_mod = sq.pi_m.source();
    let mut lambda_ker = BitSet::new(a_mod.size());
    for b in sq.lambda.source().elements() {
        if sq.pi_n.apply(b) == sq.pi_n.target().zero() {
            lambda_ker.insert(sq.lambda.apply(b));
        }
    }
    let mut ker_m = BitSet::new(a_mod.size());
    for x in a_mod.elements() {
        if sq.pi_m.apply(x) == sq.pi_m.target().zero() {
            ker_m.insert(x);
        }
    }
    a_mod
        .elements()
        .all(|x| lambda_ker.contains(x) == ker_m.contains(x))
}

/// (c) the induced map A/λ(B) → M/ε(N) is an isomorphism. It is always
/// well-defined and surjective; we build both cokernels explicitly and test
/// bijectivity.
fn condition_cokernel(sq: &SquareData) -> bool {
    let a_mod = sq.pi_m.source();
    let m_mod = sq.pi_m.target();
    let lambda_image = {
        let mut img: Vec<u32> = sq
            .lambda
            .source()
            .elements()
            .map(|b| sq.lambda.apply(b) as u32)
            .collect();
        img.sort_unstable();
        img.dedup();
        img
    };
    let eps_image = {
        let mut img: Vec<u32> = sq
            .eps
            .source()
            .elements()
            .map(|n| sq.eps.apply(n) as u32)
            .collect();
        img.sort_unstable();
        img.dedup();
        img
    };
    let coker_lambda = FiniteModule::quotient_carrier(
        a_mod,
        &lambda_image,
        format!("{}/im", a_mod.label()),
    );
    let coker_eps = FiniteModule::quotient_carrier(
        m_mod,
        &eps_image,
        format!("{}/im", m_mod.label()),
    );
    if coker_lambda.size() != coker_eps.size() {
        return false;
    }
    // Induced map on cosets: a + λ(B) ↦ π_M(a) + ε(N). Well-defined by
    // commutativity; check injectivity.
    let mut hit = vec![false; coker_eps.size()];
    for c in coker_lambda.elements() {
        let a = coker_lambda.coset_rep(c).unwrap();
        let image_coset = coker_eps.coset_of(sq.pi_m.apply(a)).unwrap();
        if hit[image_coset] {
            return false;
        }
        hit[image_coset] = true;
    }
    true
}

/// Builds a commuting square from free choices, for property tests and
/// sweeps. A submodule K_M of A defines M = A/K_M with π_M canonical; a
/// hom λ: B → A then forces the minimal bottom row: N is the image of
/// π_M ∘ λ, ε its inclusion into M, and π_N the corestriction of π_M ∘ λ,
/// surjective by construction.
pub fn square_from_lambda(
    a_mod: &Arc<FiniteModule>,
    k_m: &Submodule,
    b_mod: &Arc<FiniteModule>,
    lambda: &ModuleHom,
) -> Result<SquareData, ModuleError> {
    assert!(Arc::ptr_eq(lambda.source(), b_mod) && Arc::ptr_eq(lambda.target(), a_mod));
    let m_mod = super::quotient_module(a_mod, k_m);
    let pi_m_map: Vec<u32> = a_mod
        .elements()
        .map(|x| m_mod.coset_of(x).unwrap() as u32)
        .collect();
    let pi_m = ModuleHom::new(a_mod, &m_mod, pi_m_map)?;
    // N = π_M(λ(B)) as a submodule carrier of M.
    let composite = lambda.then(&pi_m);
    let n_members = composite.image();
    let n_mod = FiniteModule::submodule_carrier(
        &m_mod,
        n_members,
        format!("im in {}", m_mod.label()),
    );
    let eps = ModuleHom::inclusion(&n_mod, &m_mod);
    // π_N: B → N is the composite with its image restricted.
    let pi_n_map: Vec<u32> = b_mod
        .elements()
        .map(|b| {
            let in_m = composite.apply(b);
            // Position inside the carrier.
            n_mod
                .elements()
                .find(|&i| n_mod.member_in_parent(i) == Some(in_m))
                .unwrap() as u32
        })
        .collect();
    let pi_n = ModuleHom::new(b_mod, &n_mod, pi_n_map)?;
    SquareData::new(lambda.clone(), pi_n, pi_m, eps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::hom::hom_set;
    use crate::module::{cyclic_module, submodules, FiniteModule};
    use crate::ring::{build_ring, Caps, FiniteRing};

    fn finite(spec: &str) -> Arc<FiniteRing> {
        Arc::clone(build_ring(spec, &Caps::default()).unwrap().finite("test").unwrap())
    }

    #[test]
    fn identity_square_is_all_true() {
        let r = finite("zmod:6");
        let (m, pi) = cyclic_module(&r, 2);
        let id = ModuleHom::identity(&m);
        let reg_id = ModuleHom::identity(pi.source());
        let sq = SquareData::new(reg_id, pi.clone(), pi, id).unwrap();
        assert_eq!(check_square(&sq).unwrap(), (true, true, true));
    }

    #[test]
    fn zero_submodule_square_with_nonzero_kernel_is_all_false() {
        // B = 0 covering N = 0 inside M = Z/4 / 2·(Z/4); the kernel of π_M
        // is {0,2} ≠ 0, so all three conditions fail together.
        let r = finite("zmod:4");
        let (m, pi_m) = cyclic_module(&r, 2);
        let (zero_mod, _) = cyclic_module(&r, 1);
        let lambda =
            ModuleHom::new(&zero_mod, pi_m.source(), vec![0]).unwrap();
        let pi_n = ModuleHom::identity(&zero_mod);
        let eps = ModuleHom::new(&zero_mod, &m, vec![0]).unwrap();
        let sq = SquareData::new(lambda, pi_n, pi_m, eps).unwrap();
        assert_eq!(check_square(&sq).unwrap(), (false, false, false));
    }

    #[test]
    fn non_commuting_square_is_rejected() {
        let r = finite("zmod:4");
        let reg = FiniteModule::regular(Arc::clone(&r));
        let (m, pi) = cyclic_module(&r, 2);
        // λ = multiplication by 2 does not commute with identity ε over π.
        let double: Vec<u32> = (0..4).map(|x| r.mul(2, x) as u32).collect();
        let lambda = ModuleHom::new(&reg, &reg, double).unwrap();
        let eps = ModuleHom::identity(&m);
        let err = SquareData::new(lambda, pi.clone(), pi, eps).unwrap_err();
        assert!(matches!(err, ModuleError::HypothesisViolated { .. }));
    }

    #[test]
    fn generated_squares_always_agree() {
        // Sweep: over two small rings, take A regular, all submodules K of
        // A, B regular, all homs λ: B → A; build the square and check the
        // three conditions agree (check_square errors on disagreement).
        for spec in ["zmod:4", "zmod:6", "tri:2:zmod:2"] {
            let r = finite(spec);
            let a_mod = FiniteModule::regular(Arc::clone(&r));
            let b_mod = FiniteModule::regular(Arc::clone(&r));
            let homs = hom_set(&b_mod, &a_mod, 4096).unwrap();
            for k in submodules(&a_mod, 4096).unwrap() {
                for lambda in &homs {
                    let sq = square_from_lambda(&a_mod, &k, &b_mod, lambda).unwrap();
                    let (a, b, c) = check_square(&sq).unwrap();
                    assert_eq!(a, b);
                    assert_eq!(b, c);
                }
            }
        }
    }

    #[test]
    fn surjective_lambda_with_matching_kernels_is_true() {
        // λ = identity on R over the same quotient on both sides: all true.
        let r = finite("tri:2:zmod:2");
        let a_mod = FiniteModule::regular(Arc::clone(&r));
        let e12 = r.encode_coords(&[0, 1, 0]);
        let k = crate::module::Submodule::generated(&a_mod, &[e12]);
        let lambda = ModuleHom::identity(&a_mod);
        let sq = square_from_lambda(&a_mod, &k, &a_mod, &lambda).unwrap();
        assert_eq!(check_square(&sq).unwrap(), (true, true, true));
    }
}

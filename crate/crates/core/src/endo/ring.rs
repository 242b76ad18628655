//! The endomorphism ring of a finite module, materialized as an explicit
//! finite ring so the idempotent, unit, and radical machinery applies to it
//! unchanged.

use std::collections::HashMap;
use std::sync::Arc;

use crate::module::hom::hom_set;
use crate::module::{FiniteModule, ModuleError, ModuleHom, Submodule};
use crate::ring::analysis::idempotents;
use crate::ring::{Caps, FiniteRing, RingError};

/// Hard bound on the size of a module whose endomorphism ring is
/// materialized. The ring itself may be much larger; it is capped
/// separately by `Caps::endo_order`.
pub const ENDO_MODULE_CAP: usize = 256;

/// Elements get display names only while the image vectors stay short.
const NAMED_MODULE_LIMIT: usize = 32;

/// The endomorphism ring E of a finite right module M, with pointwise
/// addition and composition as multiplication: the product `f·g` acts by
/// `m ↦ f(g(m))`. Elements are indexed in the enumeration order of
/// `hom_set(M, M)` (ascending image vectors), which places the zero map at
/// index 0 as the underlying ring machinery expects.
pub struct EndoRing {
    module: Arc<FiniteModule>,
    homs: Vec<ModuleHom>,
    ring: Arc<FiniteRing>,
    index: HashMap<Vec<u32>, usize>,
}

impl std::fmt::Debug for EndoRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "EndoRing(end({}), order {})",
            self.module.label(),
            self.homs.len()
        )
    }
}

/// Builds End(M) by complete enumeration and verifies the ring axioms on
/// the resulting tables. The zero module is rejected: its endomorphism
/// ring collapses to 1 = 0.
pub fn end_ring(m: &Arc<FiniteModule>, caps: &Caps) -> Result<EndoRing, ModuleError> {
    if m.size() == 1 {
        return Err(ModuleError::Ring(RingError::TrivialRing));
    }
    if m.size() > ENDO_MODULE_CAP {
        return Err(ModuleError::SizeExceeded {
            size: m.size(),
            cap: ENDO_MODULE_CAP,
        });
    }
    let homs = hom_set(m, m, ENDO_MODULE_CAP)?;
    let order = homs.len();
    if order > caps.endo_order {
        return Err(ModuleError::SizeExceeded {
            size: order,
            cap: caps.endo_order,
        });
    }

    let mut index: HashMap<Vec<u32>, usize> = HashMap::with_capacity(order);
    for (i, h) in homs.iter().enumerate() {
        index.insert(h.image_vector().to_vec(), i);
    }
    let locate = |vec: Vec<u32>, law: &str| -> usize {
        *index
            .get(&vec)
            .unwrap_or_else(|| panic!("endomorphisms must be closed under {law}"))
    };

    let n = m.size();
    let mut add = vec![0u32; order * order];
    let mut mul = vec![0u32; order * order];
    let mut neg = vec![0u32; order];
    for (i, f) in homs.iter().enumerate() {
        let fv = f.image_vector();
        neg[i] = locate(
            (0..n).map(|x| m.neg(fv[x] as usize) as u32).collect(),
            "negation",
        ) as u32;
        for (j, g) in homs.iter().enumerate() {
            let gv = g.image_vector();
            let sum: Vec<u32> = (0..n)
                .map(|x| m.add(fv[x] as usize, gv[x] as usize) as u32)
                .collect();
            add[i * order + j] = locate(sum, "pointwise addition") as u32;
            let comp: Vec<u32> = (0..n).map(|x| fv[gv[x] as usize]).collect();
            mul[i * order + j] = locate(comp, "composition") as u32;
        }
    }
    let one = locate((0..n as u32).collect(), "the identity map");
    debug_assert_eq!(
        homs[0].image_vector(),
        vec![m.zero() as u32; n],
        "the zero map sorts first"
    );

    let names = (n <= NAMED_MODULE_LIMIT).then(|| {
        homs.iter()
            .map(|h| {
                let parts: Vec<String> =
                    h.image_vector().iter().map(|v| v.to_string()).collect();
                format!("[{}]", parts.join(","))
            })
            .collect()
    });
    let ring = FiniteRing::from_tables(
        format!("end({})", m.label()),
        add,
        mul,
        neg,
        one,
        names,
    )?;
    Ok(EndoRing {
        module: Arc::clone(m),
        homs,
        ring,
        index,
    })
}

impl EndoRing {
    pub fn module(&self) -> &Arc<FiniteModule> {
        &self.module
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn order(&self) -> usize {
        self.homs.len()
    }

    /// The endomorphism behind ring element `g`.
    pub fn hom(&self, g: usize) -> &ModuleHom {
        &self.homs[g]
    }

    /// Ring element index of an endomorphism given as its image vector.
    pub fn index_of_map(&self, map: &[u32]) -> Option<usize> {
        self.index.get(map).copied()
    }

    /// Applies ring element `g` to module element `x`.
    pub fn apply(&self, g: usize, x: usize) -> usize {
        self.homs[g].apply(x)
    }

    /// The image g(M) as a submodule of M.
    pub fn image_submodule(&self, g: usize) -> Submodule {
        let mut members: Vec<u32> = self.homs[g].image_vector().to_vec();
        members.sort_unstable();
        members.dedup();
        let gens = members.clone();
        Submodule::from_parts(members, gens)
    }

    /// The complementary idempotent 1 − e (meaningful for any element).
    pub fn complement(&self, e: usize) -> usize {
        self.ring.add(self.ring.one(), self.ring.neg(e))
    }

    pub fn is_idempotent(&self, e: usize) -> bool {
        self.ring.mul(e, e) == e
    }

    /// All idempotents of E, ascending.
    pub fn idempotent_elements(&self) -> Vec<usize> {
        idempotents(&self.ring).iter().map(|&e| e as usize).collect()
    }
}

/// One direct-sum decomposition M = M1 ⊕ M2, indexed by the idempotent
/// that projects onto M1 along M2.
pub struct DecompPair {
    pub idempotent: usize,
    pub m1: Submodule,
    pub m2: Submodule,
}

impl DecompPair {
    /// The decomposition cut out by an idempotent: M1 = e(M), M2 = (1−e)(M).
    /// That the two images meet in zero and sum to M is forced by e² = e;
    /// a failure is reported as an internal inconsistency.
    pub fn from_idempotent(endo: &EndoRing, e: usize) -> Result<DecompPair, ModuleError> {
        if !endo.is_idempotent(e) {
            return Err(ModuleError::HypothesisViolated {
                which: "idempotent endomorphism",
            });
        }
        let m1 = endo.image_submodule(e);
        let m2 = endo.image_submodule(endo.complement(e));
        let meet = sorted_intersection(m1.members(), m2.members());
        if meet != [endo.module().zero() as u32]
            || m1.len() * m2.len() != endo.module().size()
        {
            return Err(ModuleError::EquivalenceViolation {
                context: format!(
                    "idempotent {} fails to decompose {}",
                    endo.ring.display(e),
                    endo.module().label()
                ),
            });
        }
        Ok(DecompPair {
            idempotent: e,
            m1,
            m2,
        })
    }

    /// The decompositions of M, one per idempotent of E.
    pub fn all(endo: &EndoRing) -> Result<Vec<DecompPair>, ModuleError> {
        endo.idempotent_elements()
            .into_iter()
            .map(|e| DecompPair::from_idempotent(endo, e))
            .collect()
    }
}

/// All ordered pairs (A, B) of submodules with A ∩ B = 0 and A ⊕ B = M,
/// listed from a full submodule sweep. Independent of the idempotent
/// route, so the two enumerations can be played against each other.
pub fn direct_decompositions(
    m: &Arc<FiniteModule>,
    cap: usize,
) -> Result<Vec<(Submodule, Submodule)>, ModuleError> {
    let subs = crate::module::submodules(m, cap)?;
    let mut out = Vec::new();
    for a in &subs {
        for b in &subs {
            if a.len() * b.len() != m.size() {
                continue;
            }
            let meet = sorted_intersection(a.members(), b.members());
            if meet == [m.zero() as u32] {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    Ok(out)
}

/// Intersection of two ascending member lists.
pub(crate) fn sorted_intersection(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

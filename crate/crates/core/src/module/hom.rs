//! Module homomorphisms: construction with verification, exhaustive
//! enumeration, isomorphism testing, and annihilators.

use std::sync::Arc;

use crate::ring::RightIdealSet;

use super::{closure, smallest_generators, FiniteModule, ModuleError, Submodule};

/// An R-linear map between two finite right modules, stored as the full
/// image vector over the source carrier. Construction verifies additivity
/// and equivariance on every pair, so a held `ModuleHom` is always a
/// genuine homomorphism.
#[derive(Clone)]
pub struct ModuleHom {
    source: Arc<FiniteModule>,
    target: Arc<FiniteModule>,
    map: Vec<u32>,
}

impl std::fmt::Debug for ModuleHom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "ModuleHom({} -> {}, {:?})",
            self.source.label(),
            self.target.label(),
            self.map
        )
    }
}

impl PartialEq for ModuleHom {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.source, &other.source)
            && Arc::ptr_eq(&self.target, &other.target)
            && self.map == other.map
    }
}
impl Eq for ModuleHom {}

impl ModuleHom {
    pub fn new(
        source: &Arc<FiniteModule>,
        target: &Arc<FiniteModule>,
        map: Vec<u32>,
    ) -> Result<ModuleHom, ModuleError> {
        assert_eq!(map.len(), source.size(), "image vector must cover the source");
        let hom = ModuleHom {
            source: Arc::clone(source),
            target: Arc::clone(target),
            map,
        };
        hom.verify()?;
        Ok(hom)
    }

    fn verify(&self) -> Result<(), ModuleError> {
        let (s, t) = (&self.source, &self.target);
        if self.map[s.zero()] as usize != t.zero() {
            return Err(ModuleError::HypothesisViolated {
                which: "map does not send zero to zero",
            });
        }
        for a in s.elements() {
            let fa = self.map[a] as usize;
            for b in a..s.size() {
                let fb = self.map[b] as usize;
                if self.map[s.add(a, b)] as usize != t.add(fa, fb) {
                    return Err(ModuleError::HypothesisViolated {
                        which: "map is not additive",
                    });
                }
            }
            for r in s.ring().elements() {
                if self.map[s.act(a, r)] as usize != t.act(fa, r) {
                    return Err(ModuleError::HypothesisViolated {
                        which: "map is not equivariant",
                    });
                }
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &Arc<FiniteModule> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteModule> {
        &self.target
    }

    pub fn apply(&self, m: usize) -> usize {
        self.map[m] as usize
    }

    pub fn image_vector(&self) -> &[u32] {
        &self.map
    }

    /// Identity on a module.
    pub fn identity(m: &Arc<FiniteModule>) -> ModuleHom {
        ModuleHom {
            source: Arc::clone(m),
            target: Arc::clone(m),
            map: (0..m.size() as u32).collect(),
        }
    }

    /// Inclusion of a submodule carrier into its parent.
    pub fn inclusion(sub_carrier: &Arc<FiniteModule>, parent: &Arc<FiniteModule>) -> ModuleHom {
        let map: Vec<u32> = sub_carrier
            .elements()
            .map(|i| {
                sub_carrier
                    .member_in_parent(i)
                    .expect("inclusion needs a submodule carrier") as u32
            })
            .collect();
        ModuleHom {
            source: Arc::clone(sub_carrier),
            target: Arc::clone(parent),
            map,
        }
    }

    /// Composition g ∘ f (apply `self` first, then `g`).
    pub fn then(&self, g: &ModuleHom) -> ModuleHom {
        assert!(
            Arc::ptr_eq(&self.target, &g.source),
            "composition needs matching middle module"
        );
        let map: Vec<u32> = self.map.iter().map(|&m| g.map[m as usize]).collect();
        ModuleHom {
            source: Arc::clone(&self.source),
            target: Arc::clone(&g.target),
            map,
        }
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.size()];
        for &v in &self.map {
            hit[v as usize] = true;
        }
        hit.iter().all(|&h| h)
    }

    pub fn is_injective(&self) -> bool {
        let mut hit = vec![false; self.target.size()];
        for &v in &self.map {
            if hit[v as usize] {
                return false;
            }
            hit[v as usize] = true;
        }
        true
    }

    pub fn is_bijective(&self) -> bool {
        self.source.size() == self.target.size() && self.is_injective()
    }

    /// Kernel as a sorted list of source indices.
    pub fn kernel(&self) -> Vec<u32> {
        self.source
            .elements()
            .filter(|&m| self.map[m] as usize == self.target.zero())
            .map(|m| m as u32)
            .collect()
    }

    /// Image as a sorted list of target indices.
    pub fn image(&self) -> Vec<u32> {
        let mut img: Vec<u32> = self.map.to_vec();
        img.sort_unstable();
        img.dedup();
        img
    }
}

/// The annihilator ideal {r : m·r = 0 for all m}. For quotients of the
/// regular module this is two-sided, which is asserted.
pub fn annihilator(m: &FiniteModule) -> RightIdealSet {
    let ring = m.ring();
    let members: Vec<u32> = ring
        .elements()
        .filter(|&r| m.elements().all(|x| m.act(x, r) == m.zero()))
        .map(|r| r as u32)
        .collect();
    let set = RightIdealSet::from_members(ring, members);
    if m.provenance().is_some() {
        set.two_sided_witness(ring)
            .expect("annihilator of a cyclic presentation is two-sided");
    }
    set
}

/// Annihilator of a single element.
pub fn element_annihilator(m: &FiniteModule, x: usize) -> RightIdealSet {
    let ring = m.ring();
    let members: Vec<u32> = ring
        .elements()
        .filter(|&r| m.act(x, r) == m.zero())
        .map(|r| r as u32)
        .collect();
    RightIdealSet::from_members(ring, members)
}

/// All homomorphisms M → N, deterministically ordered by image vector.
///
/// Cyclic sources use the annihilator criterion: a generator g may go to
/// exactly those n with ann(g) ⊆ ann(n), and the image of g determines the
/// map. General sources search images for a greedy generating set,
/// propagating closure constraints and backtracking on conflict.
pub fn hom_set(
    m: &Arc<FiniteModule>,
    n: &Arc<FiniteModule>,
    cap: usize,
) -> Result<Vec<ModuleHom>, ModuleError> {
    if m.size() > cap || n.size() > cap {
        return Err(ModuleError::SizeExceeded {
            size: m.size().max(n.size()),
            cap,
        });
    }
    let gens = smallest_generators(m);
    let mut out: Vec<ModuleHom> = Vec::new();
    if gens.len() <= 1 {
        // Cyclic (or zero) source.
        let Some(&g) = gens.first() else {
            let map = vec![n.zero() as u32; m.size()];
            return Ok(vec![ModuleHom::new(m, n, map)?]);
        };
        let g = g as usize;
        let ann_g = element_annihilator(m, g);
        // reach[x] = some ring element r with g·r = x; total because g
        // generates.
        let mut reach = vec![u32::MAX; m.size()];
        for r in m.ring().elements() {
            let x = m.act(g, r);
            if reach[x] == u32::MAX {
                reach[x] = r as u32;
            }
        }
        assert!(reach.iter().all(|&r| r != u32::MAX), "generator must reach everything");
        for cand in n.elements() {
            let kills = ann_g
                .members()
                .iter()
                .all(|&r| n.act(cand, r as usize) == n.zero());
            if !kills {
                continue;
            }
            let map: Vec<u32> = (0..m.size())
                .map(|x| n.act(cand, reach[x] as usize) as u32)
                .collect();
            out.push(ModuleHom::new(m, n, map)?);
        }
    } else {
        let mut img = vec![u32::MAX; m.size()];
        img[m.zero()] = n.zero() as u32;
        let mut known = vec![m.zero() as u32];
        search_homs(m, n, &gens, 0, &mut img, &mut known, &mut out)?;
    }
    out.sort_by(|a, b| a.map.cmp(&b.map));
    Ok(out)
}

/// Depth-first image assignment with constraint propagation. `img` holds
/// the partial map (u32::MAX = unknown); `known` lists assigned source
/// elements in discovery order.
fn search_homs(
    m: &Arc<FiniteModule>,
    n: &Arc<FiniteModule>,
    gens: &[u32],
    pos: usize,
    img: &mut Vec<u32>,
    known: &mut Vec<u32>,
    out: &mut Vec<ModuleHom>,
) -> Result<(), ModuleError> {
    if pos == gens.len() {
        debug_assert!(img.iter().all(|&v| v != u32::MAX), "generators span the source");
        out.push(ModuleHom::new(m, n, img.clone())?);
        return Ok(());
    }
    let g = gens[pos] as usize;
    for cand in n.elements() {
        let mut img2 = img.clone();
        let mut known2 = known.clone();
        if img2[g] != u32::MAX && img2[g] as usize != cand {
            continue;
        }
        if img2[g] == u32::MAX {
            img2[g] = cand as u32;
            known2.push(g as u32);
        }
        if propagate(m, n, &mut img2, &mut known2) {
            search_homs(m, n, gens, pos + 1, &mut img2, &mut known2, out)?;
        }
    }
    Ok(())
}

/// Closes a partial map under the action and pairwise sums. Returns false
/// on conflict.
fn propagate(
    m: &Arc<FiniteModule>,
    n: &Arc<FiniteModule>,
    img: &mut [u32],
    known: &mut Vec<u32>,
) -> bool {
    let mut p = 0;
    while p < known.len() {
        let x = known[p] as usize;
        let fx = img[x] as usize;
        for r in m.ring().elements() {
            let xr = m.act(x, r);
            let v = n.act(fx, r) as u32;
            if img[xr] == u32::MAX {
                img[xr] = v;
                known.push(xr as u32);
            } else if img[xr] != v {
                return false;
            }
        }
        for q in 0..=p {
            let y = known[q] as usize;
            let s = m.add(x, y);
            let v = n.add(fx, img[y] as usize) as u32;
            if img[s] == u32::MAX {
                img[s] = v;
                known.push(s as u32);
            } else if img[s] != v {
                return false;
            }
        }
        p += 1;
    }
    true
}

/// Isomorphism test with witness. Filters by size and by the multiset of
/// element-annihilator sizes before searching; for cyclic modules the
/// search reduces to generators with equal annihilator.
pub fn is_isomorphic(
    m: &Arc<FiniteModule>,
    n: &Arc<FiniteModule>,
    cap: usize,
) -> Result<Option<ModuleHom>, ModuleError> {
    if m.size() != n.size() {
        return Ok(None);
    }
    if m.size() > cap {
        return Err(ModuleError::SizeExceeded {
            size: m.size(),
            cap,
        });
    }
    let ann_profile = |x: &Arc<FiniteModule>| -> Vec<usize> {
        let mut sizes: Vec<usize> = x
            .elements()
            .map(|e| element_annihilator(x, e).len())
            .collect();
        sizes.sort_unstable();
        sizes
    };
    if ann_profile(m) != ann_profile(n) {
        return Ok(None);
    }
    let gens = smallest_generators(m);
    if gens.len() <= 1 {
        let Some(&g) = gens.first() else {
            // Zero modules of equal size (1) are isomorphic.
            return Ok(Some(ModuleHom::new(m, n, vec![n.zero() as u32])?));
        };
        let g = g as usize;
        let ann_g = element_annihilator(m, g);
        let mut reach = vec![u32::MAX; m.size()];
        for r in m.ring().elements() {
            let x = m.act(g, r);
            if reach[x] == u32::MAX {
                reach[x] = r as u32;
            }
        }
        for cand in n.elements() {
            // An iso must match annihilators exactly and hit a generator.
            if element_annihilator(n, cand) != ann_g {
                continue;
            }
            if closure(n, &[cand]).len() != n.size() {
                continue;
            }
            let map: Vec<u32> = (0..m.size())
                .map(|x| n.act(cand, reach[x] as usize) as u32)
                .collect();
            let hom = ModuleHom::new(m, n, map)?;
            if hom.is_bijective() {
                return Ok(Some(hom));
            }
        }
        return Ok(None);
    }
    for hom in hom_set(m, n, cap)? {
        if hom.is_bijective() {
            return Ok(Some(hom));
        }
    }
    Ok(None)
}

/// Whether one element generates the whole module; the witness is the
/// smallest generator. The zero module counts as cyclic, generated by 0.
pub fn cyclic_generator(m: &FiniteModule) -> Option<usize> {
    if m.size() == 1 {
        return Some(m.zero());
    }
    m.elements()
        .find(|&g| closure(m, &[g]).len() == m.size())
}

/// Kernel of a hom as a [`Submodule`] of the source.
pub fn kernel_submodule(hom: &ModuleHom) -> Submodule {
    let members = hom.kernel();
    // Kernels are closed; record the members with a greedy generator set.
    let carrier = FiniteModule::submodule_carrier(
        hom.source(),
        members.clone(),
        "ker".to_string(),
    );
    let gens: Vec<u32> = smallest_generators(&carrier)
        .iter()
        .map(|&i| carrier.member_in_parent(i as usize).unwrap() as u32)
        .collect();
    Submodule::from_parts(members, gens)
}

//! Quasi-projectivity: projectivity of a module relative to its own factor
//! modules, decided by exhaustive lift search.

use std::collections::HashSet;
use std::sync::Arc;

use crate::module::hom::hom_set;
use crate::module::{quotient_module, submodules, FiniteModule, ModuleError};
use crate::ring::Caps;

use super::ring::ENDO_MODULE_CAP;

/// Whether M is projective relative to every quotient of itself: for each
/// submodule K and each homomorphism g: M → M/K there is an endomorphism h
/// of M with π∘h = g, where π is the canonical surjection. Every
/// epimorphic image of M is isomorphic to such a quotient, so this decides
/// the relative-projectivity condition in full.
pub fn is_quasi_projective(m: &Arc<FiniteModule>, caps: &Caps) -> Result<bool, ModuleError> {
    let endos = hom_set(m, m, ENDO_MODULE_CAP)?;
    for k in submodules(m, caps.submodule_enum)? {
        let q = quotient_module(m, &k);
        let proj: Vec<u32> = (0..m.size())
            .map(|x| q.coset_of(x).expect("quotient carrier projects") as u32)
            .collect();
        // Image vectors of all composites π∘h; a hom into the quotient
        // lifts exactly when its image vector appears here.
        let liftable: HashSet<Vec<u32>> = endos
            .iter()
            .map(|h| {
                h.image_vector()
                    .iter()
                    .map(|&hx| proj[hx as usize])
                    .collect()
            })
            .collect();
        for g in hom_set(m, &q, ENDO_MODULE_CAP)? {
            if !liftable.contains(g.image_vector()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

//! Reduction of the order modulo a prime, and the correspondence between
//! lattices over the order and subsets of the finite quotient ring.
//!
//! The quotient R/pR is handed to the finite-ring layer as a
//! structure-constant ring on (Z/p)⁴, so all of its analysis machinery
//! (radical, units, idempotents, module theory) applies. Lattices L with
//! pR ⊆ L ⊆ R correspond bijectively to subgroups of R/pR: the image is the
//! set of residues of L, the preimage is the lattice spanned by lifts
//! together with pR, and the two maps are mutually inverse. Right ideals
//! correspond to submodules of the regular right module.

use super::context::{OrderContext, OrderElement};
use super::lattice::OrderLattice;
use super::QuatError;
use crate::ring::{Caps, FiniteRing};
use std::sync::Arc;

/// The finite ring R/pR plus both directions of the lattice↔subset maps.
#[derive(Debug, Clone)]
pub struct ModPReduction {
    p: i64,
    ring: Arc<FiniteRing>,
    scaled_order: OrderLattice,
}

impl ModPReduction {
    /// Builds R/pR from the verified structure constants reduced mod p. The
    /// finite-ring constructor re-verifies associativity and locates the
    /// identity on its own — a cross-check of the symbolic table.
    pub fn new(ctx: &OrderContext, p: i64, caps: &Caps) -> Result<Self, QuatError> {
        assert!(p >= 2, "modulus must be at least 2");
        let table = ctx.structure_table();
        let mut rows = Vec::with_capacity(16);
        for i in 0..4 {
            for j in 0..4 {
                rows.push(
                    table[i][j]
                        .iter()
                        .map(|&c| c.rem_euclid(p) as u32)
                        .collect::<Vec<u32>>(),
                );
            }
        }
        let ring = FiniteRing::structure_constants(4, p as usize, rows, caps.ring_order)?;
        let scaled_order = OrderLattice::unit_lattice().scaled(p)?;
        Ok(ModPReduction { p, ring, scaled_order })
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn modulus(&self) -> i64 {
        self.p
    }

    /// The kernel lattice pR.
    pub fn kernel_lattice(&self) -> &OrderLattice {
        &self.scaled_order
    }

    /// The canonical surjection on elements: coordinates mod p.
    pub fn reduce(&self, x: &OrderElement) -> usize {
        let digits: Vec<usize> = x
            .coords()
            .iter()
            .map(|&c| c.rem_euclid(self.p) as usize)
            .collect();
        self.ring.encode_coords(&digits)
    }

    /// One lift of a residue: the coordinates in [0, p).
    pub fn lift(&self, elem: usize) -> OrderElement {
        let digits = self
            .ring
            .coords(elem)
            .expect("structure-constant rings expose coordinates");
        let mut c = [0i64; 4];
        for (slot, d) in c.iter_mut().zip(digits) {
            *slot = d as i64;
        }
        OrderElement::new(c)
    }

    /// Image of a lattice pR ⊆ L in R/pR, as sorted element indices.
    /// Because L is a union of pR-cosets, a residue lies in the image iff
    /// its canonical lift lies in L.
    pub fn lattice_image(&self, l: &OrderLattice) -> Result<Vec<u32>, QuatError> {
        if !l.contains_lattice(&self.scaled_order) {
            return Err(QuatError::PreconditionFailed {
                msg: format!("lattice does not contain {}R, so it has no well-defined image", self.p),
            });
        }
        let mut members = Vec::new();
        for elem in self.ring.elements() {
            if l.contains_element(&self.lift(elem)) {
                members.push(elem as u32);
            }
        }
        Ok(members)
    }

    /// Preimage of a subset of R/pR: the lattice spanned by the lifts
    /// together with pR.
    pub fn lattice_preimage(&self, members: &[u32]) -> Result<OrderLattice, QuatError> {
        let mut rows: Vec<[i64; 4]> = members
            .iter()
            .map(|&m| self.lift(m as usize).coords())
            .collect();
        rows.extend_from_slice(self.scaled_order.rows());
        OrderLattice::from_rows(&rows)
    }
}

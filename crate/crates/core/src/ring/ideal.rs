//! Right ideals as explicit element sets, and quotients by two-sided ideals.

use std::sync::Arc;

use crate::bitset::BitSet;

use super::{FiniteRing, RingError};

/// A right ideal of a finite ring, stored as its sorted element list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RightIdealSet {
    members: Vec<u32>,
    in_set: BitSet,
}

impl RightIdealSet {
    /// The principal right ideal xR. One pass over R suffices: the set
    /// {x*r : r in R} is already closed under addition, since
    /// x*r + x*s = x*(r+s).
    pub fn principal(ring: &FiniteRing, x: usize) -> Self {
        let mut in_set = BitSet::new(ring.order());
        let mut members = Vec::new();
        for r in ring.elements() {
            let xr = ring.mul(x, r);
            if in_set.insert(xr) {
                members.push(xr as u32);
            }
        }
        members.sort_unstable();
        RightIdealSet { members, in_set }
    }

    /// The right ideal generated by several elements: all sums of right
    /// multiples. Closure by worklist — new elements are multiplied by all
    /// of R and added to all current members until stable.
    pub fn generated(ring: &FiniteRing, gens: &[usize]) -> Self {
        let mut in_set = BitSet::new(ring.order());
        let mut members: Vec<u32> = Vec::new();
        in_set.insert(ring.zero());
        members.push(ring.zero() as u32);
        for &g in gens {
            for r in ring.elements() {
                let gr = ring.mul(g, r);
                if in_set.insert(gr) {
                    members.push(gr as u32);
                }
            }
        }
        // Close under addition: process each element against all the ones
        // before it (and itself); appended sums get processed in turn.
        let mut i = 0;
        while i < members.len() {
            let x = members[i] as usize;
            let mut j = 0;
            while j <= i {
                let s = ring.add(x, members[j] as usize);
                if in_set.insert(s) {
                    members.push(s as u32);
                }
                j += 1;
            }
            i += 1;
        }
        members.sort_unstable();
        RightIdealSet { members, in_set }
    }

    /// Sum of two right ideals (as right ideals, this is the additive span
    /// of the union).
    pub fn sum(ring: &FiniteRing, a: &RightIdealSet, b: &RightIdealSet) -> Self {
        let mut in_set = BitSet::new(ring.order());
        let mut members = Vec::new();
        for &x in &a.members {
            for &y in &b.members {
                let s = ring.add(x as usize, y as usize);
                if in_set.insert(s) {
                    members.push(s as u32);
                }
            }
        }
        members.sort_unstable();
        RightIdealSet { members, in_set }
    }

    pub fn from_members(ring: &FiniteRing, mut members: Vec<u32>) -> Self {
        let mut in_set = BitSet::new(ring.order());
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            in_set.insert(m as usize);
        }
        RightIdealSet { members, in_set }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.in_set.contains(x)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Sorted element indices.
    pub fn members(&self) -> &[u32] {
        &self.members
    }

    /// Whether the ideal is all of R — for right ideals, equivalent to
    /// containing 1.
    pub fn is_full(&self, ring: &FiniteRing) -> bool {
        self.contains(ring.one())
    }

    /// Whether the set is also a left ideal, with a witness for failure.
    pub fn two_sided_witness(&self, ring: &FiniteRing) -> Result<(), RingError> {
        for &x in &self.members {
            for r in ring.elements() {
                let rx = ring.mul(r, x as usize);
                if !self.contains(rx) {
                    return Err(RingError::NotTwoSided {
                        r,
                        x: x as usize,
                        rx,
                    });
                }
            }
        }
        Ok(())
    }

    /// Intersection of two right ideals.
    pub fn intersect(ring: &FiniteRing, a: &RightIdealSet, b: &RightIdealSet) -> Self {
        let members: Vec<u32> = a
            .members
            .iter()
            .copied()
            .filter(|&x| b.contains(x as usize))
            .collect();
        Self::from_members(ring, members)
    }
}

/// Quotient of a ring by a two-sided ideal, given as its member set.
/// Cosets are numbered by ascending smallest representative, so the zero
/// coset (the ideal itself) is index 0. Returns the quotient ring and the
/// projection map from parent indices to quotient indices.
pub fn quotient_ring(
    ring: &Arc<FiniteRing>,
    ideal: &RightIdealSet,
) -> Result<(Arc<FiniteRing>, Vec<u32>), RingError> {
    ideal.two_sided_witness(ring)?;
    let n = ring.order();
    let mut proj = vec![u32::MAX; n];
    let mut rep: Vec<u32> = Vec::new();
    // Scan parent elements in ascending order; each not-yet-labelled element
    // is the smallest member of a fresh coset x + I.
    for x in 0..n {
        if proj[x] != u32::MAX {
            continue;
        }
        let coset_idx = rep.len() as u32;
        rep.push(x as u32);
        for &i in ideal.members() {
            let y = ring.add(x, i as usize);
            debug_assert!(proj[y] == u32::MAX || proj[y] == coset_idx);
            proj[y] = coset_idx;
        }
    }
    let q = FiniteRing::quotient(Arc::clone(ring), rep, proj.clone(), ideal.len())?;
    Ok((q, proj))
}

//! Unit groups, idempotents, the Jacobson radical, and related
//! element-level classification for finite rings.

use std::sync::Arc;

use crate::report::Verdict;

use super::ideal::{quotient_ring, RightIdealSet};
use super::{FiniteRing, RingError, RingHandle};

/// Units of a finite ring: the sorted list plus constant-time membership
/// and inverse lookup.
#[derive(Debug, Clone)]
pub struct UnitData {
    pub sorted: Vec<u32>,
    pub is_unit: Vec<bool>,
    pub inverse: Vec<u32>,
}

/// Computes and caches the unit group. In a finite ring a one-sided inverse
/// is two-sided (right multiplication by `a` is injective iff surjective),
/// and we assert the other side rather than assume it.
pub fn units(ring: &FiniteRing) -> &UnitData {
    ring.units_cache().get_or_init(|| {
        let n = ring.order();
        let one = ring.one();
        let mut is_unit = vec![false; n];
        let mut inverse = vec![0u32; n];
        let mut sorted = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if ring.mul(a, b) == one {
                    debug_assert_eq!(ring.mul(b, a), one, "one-sided inverse in finite ring");
                    is_unit[a] = true;
                    inverse[a] = b as u32;
                    sorted.push(a as u32);
                    break;
                }
            }
        }
        UnitData {
            sorted,
            is_unit,
            inverse,
        }
    })
}

pub fn is_unit(ring: &FiniteRing, a: usize) -> bool {
    units(ring).is_unit[a]
}

pub fn inverse(ring: &FiniteRing, a: usize) -> Option<usize> {
    let u = units(ring);
    u.is_unit[a].then(|| u.inverse[a] as usize)
}

/// Sorted list of idempotents (e*e = e). Always contains 0 and 1.
pub fn idempotents(ring: &FiniteRing) -> &[u32] {
    ring.idem_cache().get_or_init(|| {
        ring.elements()
            .filter(|&e| ring.mul(e, e) == e)
            .map(|e| e as u32)
            .collect()
    })
}

/// A zero-divisor witness against left cancellativity: returns `Some(b)`
/// with `b != 0` and `a*b = 0` if one exists, `None` when `a` is left
/// cancellative. For `a = 0` every nonzero `b` works; the smallest is
/// returned. In a finite ring left cancellative elements are exactly the
/// units, which tests assert.
pub fn left_cancellative_witness(ring: &FiniteRing, a: usize) -> Option<usize> {
    (1..ring.order()).find(|&b| ring.mul(a, b) == 0)
}

/// Left cancellativity as a (verdict, witness) pair: `a` is left
/// cancellative when ab = ac forces b = c, equivalently (by additivity)
/// when ab = 0 forces b = 0.
pub fn is_left_cancellative(ring: &FiniteRing, a: usize) -> (bool, Option<usize>) {
    match left_cancellative_witness(ring, a) {
        Some(b) => (false, Some(b)),
        None => (true, None),
    }
}

/// Member list of the Jacobson radical (sorted, cached on the ring),
/// computed from the element-wise criterion: x is in J(R) iff 1 - x*r is a
/// unit for every r. The result is verified to be a two-sided ideal,
/// turning a silent algorithm bug into a loud error.
pub fn radical_members(ring: &Arc<FiniteRing>) -> &[u32] {
    if ring.radical_cache().get().is_none() {
        let u = units(ring);
        let members: Vec<u32> = ring
            .elements()
            .filter(|&x| {
                ring.elements()
                    .all(|r| u.is_unit[ring.sub(ring.one(), ring.mul(x, r))])
            })
            .map(|x| x as u32)
            .collect();
        // The element-wise criterion yields a two-sided ideal; verify.
        let set = RightIdealSet::from_members(ring, members.clone());
        for &x in set.members() {
            for r in ring.elements() {
                assert!(
                    set.contains(ring.mul(x as usize, r)) && set.contains(ring.mul(r, x as usize)),
                    "radical criterion did not produce a two-sided ideal"
                );
            }
        }
        let _ = ring.radical_cache().set(members);
    }
    ring.radical_cache().get().unwrap()
}

/// Radical as an ideal set.
pub fn radical_ideal(ring: &Arc<FiniteRing>) -> RightIdealSet {
    RightIdealSet::from_members(ring, radical_members(ring).to_vec())
}

/// The semiprimitive quotient R/J(R), with the projection map. Verifies
/// J(R/J) = 0.
pub fn semiprimitive_quotient(
    ring: &Arc<FiniteRing>,
) -> Result<(Arc<FiniteRing>, Vec<u32>), RingError> {
    let ideal = radical_ideal(ring);
    let (q, proj) = quotient_ring(ring, &ideal)?;
    assert_eq!(
        radical_members(&q).len(),
        1,
        "quotient by the radical must be semiprimitive"
    );
    Ok((q, proj))
}

/// Von Neumann regularity: every `a` has some `x` with `a*x*a = a`.
/// Falsified verdicts carry the smallest failing element (displayed); for
/// the Z backend the witness is 2, since 2*x*2 = 4x can never be 2.
pub fn is_vnr(handle: &RingHandle) -> Verdict {
    match handle {
        RingHandle::Int => Verdict::Falsified {
            witness: "2 (no integer x satisfies 2*x*2 = 2)".to_string(),
        },
        RingHandle::Finite(ring) => {
            for a in ring.elements() {
                let ok = ring.elements().any(|x| {
                    let axa = ring.mul(ring.mul(a, x), a);
                    axa == a
                });
                if !ok {
                    return Verdict::Falsified {
                        witness: ring.display(a),
                    };
                }
            }
            Verdict::Verified
        }
    }
}

/// Whether every idempotent of R/I is the image of an idempotent of R,
/// for a two-sided ideal I (checked). Returns the verdict and the witness
/// map found so far: for each idempotent of the quotient, the smallest
/// lifting idempotent of R.
pub fn idempotents_lift(
    ring: &Arc<FiniteRing>,
    ideal: &RightIdealSet,
) -> Result<(Verdict, Vec<(u32, u32)>), RingError> {
    let (q, proj) = quotient_ring(ring, ideal)?;
    let ring_idems = idempotents(ring);
    let mut lifts = Vec::new();
    for &f in idempotents(&q) {
        let lift = ring_idems
            .iter()
            .copied()
            .find(|&e| proj[e as usize] == f);
        match lift {
            Some(e) => lifts.push((f, e)),
            None => {
                return Ok((
                    Verdict::Falsified {
                        witness: format!(
                            "idempotent {} of the quotient has no idempotent lift",
                            q.display(f as usize)
                        ),
                    },
                    lifts,
                ))
            }
        }
    }
    Ok((Verdict::Verified, lifts))
}

/// Whether the ring is simple: no two-sided ideals besides 0 and R,
/// equivalently the two-sided ideal generated by every nonzero element is
/// everything. The per-element span is computed by additive/multiplicative
/// closure with early exit.
pub fn is_simple_ring(ring: &FiniteRing) -> bool {
    let n = ring.order();
    if n < 2 {
        return false;
    }
    'outer: for x in ring.elements() {
        if x == ring.zero() {
            continue;
        }
        let mut in_span = vec![false; n];
        in_span[ring.zero()] = true;
        in_span[x] = true;
        let mut work = vec![x];
        let mut count = 2;
        while let Some(m) = work.pop() {
            // Left and right multiples, then sums with known members.
            let mut reach = Vec::new();
            for r in ring.elements() {
                reach.push(ring.mul(m, r));
                reach.push(ring.mul(r, m));
            }
            for s in 0..n {
                if in_span[s] {
                    reach.push(ring.add(m, s));
                }
            }
            for y in reach {
                if !in_span[y] {
                    in_span[y] = true;
                    work.push(y);
                    count += 1;
                    if count == n {
                        continue 'outer;
                    }
                }
            }
        }
        if count < n {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{build_ring, Caps};

    fn finite(spec: &str) -> Arc<FiniteRing> {
        Arc::clone(build_ring(spec, &Caps::default()).unwrap().finite("test").unwrap())
    }

    #[test]
    fn units_of_zmod6() {
        let r = finite("zmod:6");
        assert_eq!(units(&r).sorted, vec![1, 5]);
        assert_eq!(inverse(&r, 5), Some(5));
        assert_eq!(inverse(&r, 2), None);
    }

    #[test]
    fn unit_count_of_gl2_f3() {
        // Oracle: |GL_2(F_3)| by the determinant scan below must agree with
        // the invertibility scan. (q^2-1)(q^2-q) = 8*6 = 48.
        let r = finite("mat:2:zmod:3");
        let mut det_units = 0usize;
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    for d in 0..3 {
                        if (a * d + 3 * 3 - b * c) % 3 != 0 {
                            det_units += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(det_units, 48);
        assert_eq!(units(&r).sorted.len(), 48);
    }

    #[test]
    fn units_of_tri2_z2() {
        let r = finite("tri:2:zmod:2");
        // Invertible iff both diagonal entries are 1: [[1,b],[0,1]].
        assert_eq!(units(&r).sorted.len(), 2);
    }

    #[test]
    fn inverses_are_two_sided() {
        let r = finite("mat:2:zmod:2");
        let u = units(&r);
        for &a in &u.sorted {
            let b = u.inverse[a as usize] as usize;
            assert_eq!(r.mul(a as usize, b), r.one());
            assert_eq!(r.mul(b, a as usize), r.one());
        }
    }

    #[test]
    fn idempotents_of_zmod6() {
        let r = finite("zmod:6");
        assert_eq!(idempotents(&r), &[0, 1, 3, 4]);
    }

    #[test]
    fn idempotent_count_mat2_z2() {
        let r = finite("mat:2:zmod:2");
        // Brute-force oracle over all 16 matrices, done symbolically: the
        // idempotent 2x2 matrices over F_2 are 0, I, and the rank-one
        // idempotents, of which there are |P^1(F_2)| * ... — just count by
        // scanning with independent arithmetic.
        let mut count = 0;
        for a in 0..2u32 {
            for b in 0..2u32 {
                for c in 0..2u32 {
                    for d in 0..2u32 {
                        let (ra, rb) = ((a * a + b * c) % 2, (a * b + b * d) % 2);
                        let (rc, rd) = ((c * a + d * c) % 2, (c * b + d * d) % 2);
                        if (ra, rb, rc, rd) == (a, b, c, d) {
                            count += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(count, 8);
        assert_eq!(idempotents(&r).len(), 8);
    }

    #[test]
    fn left_cancellative_iff_unit_in_finite_rings() {
        for spec in ["zmod:6", "tri:2:zmod:2", "mat:2:zmod:2", "zmod:8"] {
            let r = finite(spec);
            let u = units(&r);
            for a in r.elements() {
                let cancellative = left_cancellative_witness(&r, a).is_none();
                assert_eq!(cancellative, u.is_unit[a], "{spec}, a={a}");
            }
        }
    }

    #[test]
    fn zero_has_smallest_witness() {
        let r = finite("zmod:6");
        assert_eq!(left_cancellative_witness(&r, 0), Some(1));
        assert_eq!(left_cancellative_witness(&r, 2), Some(3));
    }

    #[test]
    fn radical_of_tri2_z2() {
        let r = finite("tri:2:zmod:2");
        let e12 = r.encode_coords(&[0, 1, 0]);
        assert_eq!(radical_members(&r), &[0, e12 as u32]);
    }

    #[test]
    fn radical_of_mat2_z9_is_three_times_everything() {
        let r = finite("mat:2:zmod:9");
        // Oracle: J(M_2(Z/9)) = M_2(3Z/9), all matrices with entries in
        // {0,3,6}: 3^4 = 81 elements. Build that set independently.
        let mut expected: Vec<u32> = Vec::new();
        for a in [0usize, 3, 6] {
            for b in [0usize, 3, 6] {
                for c in [0usize, 3, 6] {
                    for d in [0usize, 3, 6] {
                        expected.push(r.encode_coords(&[a, b, c, d]) as u32);
                    }
                }
            }
        }
        expected.sort_unstable();
        assert_eq!(radical_members(&r), expected.as_slice());
    }

    #[test]
    fn radical_of_semisimple_rings_is_zero() {
        for spec in ["zmod:6", "mat:2:zmod:2", "mat:2:zmod:3", "prod:zmod:2,zmod:3"] {
            let r = finite(spec);
            assert_eq!(radical_members(&r), &[0], "{spec}");
        }
    }

    #[test]
    fn semiprimitive_quotient_of_tri() {
        let r = finite("tri:2:zmod:2");
        let (q, _) = semiprimitive_quotient(&r).unwrap();
        assert_eq!(q.order(), 4);
        // (Z/2)^2: four idempotents, all elements idempotent.
        assert_eq!(idempotents(&q).len(), 4);
        for a in q.elements() {
            assert_eq!(q.mul(a, a), a);
        }
    }

    #[test]
    fn vnr_verdicts() {
        assert!(is_vnr(&RingHandle::Finite(finite("mat:2:zmod:2"))).is_verified());
        assert!(is_vnr(&RingHandle::Finite(finite("zmod:6"))).is_verified());
        match is_vnr(&RingHandle::Finite(finite("zmod:4"))) {
            Verdict::Falsified { witness } => assert_eq!(witness, "2"),
            v => panic!("expected falsified, got {v:?}"),
        }
        match is_vnr(&RingHandle::Int) {
            Verdict::Falsified { witness } => assert!(witness.starts_with('2')),
            v => panic!("expected falsified, got {v:?}"),
        }
    }

    #[test]
    fn idempotents_lift_modulo_radical_in_finite_rings() {
        for spec in ["zmod:4", "tri:2:zmod:2", "mat:2:zmod:9", "zmod:6"] {
            let r = finite(spec);
            let j = radical_ideal(&r);
            let (verdict, lifts) = idempotents_lift(&r, &j).unwrap();
            assert!(verdict.is_verified(), "{spec}");
            // Each recorded lift really is an idempotent projecting right.
            let (_, proj) = semiprimitive_quotient(&r).unwrap();
            for (f, e) in lifts {
                assert_eq!(r.mul(e as usize, e as usize), e as usize);
                assert_eq!(proj[e as usize], f);
            }
        }
    }

    #[test]
    fn idempotents_lift_modulo_zero_and_other_ideals() {
        let r = finite("zmod:4");
        let zero = RightIdealSet::from_members(&r, vec![0]);
        let (verdict, _) = idempotents_lift(&r, &zero).unwrap();
        assert!(verdict.is_verified());
        let j = RightIdealSet::from_members(&r, vec![0, 2]);
        let (verdict, lifts) = idempotents_lift(&r, &j).unwrap();
        assert!(verdict.is_verified());
        // The classes of 0 and 1 lift to 0 and 1.
        assert_eq!(lifts, vec![(0, 0), (1, 1)]);
    }

    #[test]
    fn idempotents_lift_rejects_one_sided_ideals() {
        // E22*R = {0, E22} is a right ideal but E12*E22 = E12 escapes it.
        let r = finite("tri:2:zmod:2");
        let e22 = r.encode_coords(&[0, 0, 1]);
        let corner = RightIdealSet::principal(&r, e22);
        assert!(matches!(
            idempotents_lift(&r, &corner),
            Err(RingError::NotTwoSided { .. })
        ));
    }

    #[test]
    fn simplicity_of_small_rings() {
        // Fields and full matrix rings over fields are simple; rings with a
        // proper nonzero two-sided ideal are not.
        assert!(is_simple_ring(&finite("zmod:5")));
        assert!(is_simple_ring(&finite("zmod:7")));
        assert!(is_simple_ring(&finite("mat:2:zmod:2")));
        assert!(is_simple_ring(&finite("mat:2:zmod:3")));
        // zmod:6 has the ideal {0, 2, 4}; zmod:4 has {0, 2}; the triangular
        // ring has its strictly-upper corner.
        assert!(!is_simple_ring(&finite("zmod:6")));
        assert!(!is_simple_ring(&finite("zmod:4")));
        assert!(!is_simple_ring(&finite("tri:2:zmod:2")));
    }
}

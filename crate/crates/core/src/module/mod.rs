//! Finite right modules over finite rings: carriers, submodules, quotients,
//! direct sums, and deterministic enumeration.
//!
//! Module elements are indices `0..size`, with index 0 the zero element.
//! Carriers are never materialized as operation tables; each module knows
//! how it was built (regular module, submodule, quotient, direct sum) and
//! evaluates structurally through that chain. Constructors verify the
//! module laws — exhaustively on small carriers, by deterministic sampling
//! when the triple count gets large — so downstream algorithms may assume
//! them.

use std::collections::HashMap;
use std::sync::Arc;

use thiserror::Error;

use crate::bitset::BitSet;
use crate::ring::{FiniteRing, RightIdealSet, RingError};

pub mod cover;
pub mod exact;
pub mod hom;
pub mod square;

pub use cover::CyclicCover;
pub use hom::ModuleHom;
pub use square::SquareData;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuleError {
    #[error("carrier size {size} exceeds cap {cap}")]
    SizeExceeded { size: usize, cap: usize },
    #[error("hypothesis violated: {which}")]
    HypothesisViolated { which: &'static str },
    #[error("equivalent conditions disagreed ({context}); this is a bug, not a property of the input")]
    EquivalenceViolation { context: String },
    #[error("module {label} is not cyclic")]
    NotCyclic { label: String },
    #[error(transparent)]
    Ring(#[from] RingError),
}

enum MRepr {
    /// The ring as a right module over itself; module index = ring index.
    Regular,
    /// A submodule; `members` are parent indices ascending, `pos` inverts.
    Sub {
        parent: Arc<FiniteModule>,
        members: Vec<u32>,
        pos: Vec<u32>,
    },
    /// A quotient; cosets numbered by ascending smallest representative.
    Quot {
        parent: Arc<FiniteModule>,
        rep: Vec<u32>,
        proj: Vec<u32>,
    },
    /// External direct sum; index = left * |right| + right.
    Prod {
        left: Arc<FiniteModule>,
        right: Arc<FiniteModule>,
    },
}

/// A finite right module over a fixed finite ring.
pub struct FiniteModule {
    ring: Arc<FiniteRing>,
    size: usize,
    label: String,
    repr: MRepr,
    /// For modules built as R/I: the ideal I, with |M| * |I| = |R|.
    provenance: Option<RightIdealSet>,
}

impl std::fmt::Debug for FiniteModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteModule({}, size {})", self.label, self.size)
    }
}

impl FiniteModule {
    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    pub fn provenance(&self) -> Option<&RightIdealSet> {
        self.provenance.as_ref()
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        match &self.repr {
            MRepr::Regular => self.ring.add(a, b),
            MRepr::Sub { parent, members, pos } => {
                let s = parent.add(members[a] as usize, members[b] as usize);
                debug_assert_ne!(pos[s], u32::MAX, "submodule not closed under addition");
                pos[s] as usize
            }
            MRepr::Quot { parent, rep, proj } => {
                proj[parent.add(rep[a] as usize, rep[b] as usize)] as usize
            }
            MRepr::Prod { left, right } => {
                let ro = right.size();
                left.add(a / ro, b / ro) * ro + right.add(a % ro, b % ro)
            }
        }
    }

    pub fn neg(&self, a: usize) -> usize {
        match &self.repr {
            MRepr::Regular => self.ring.neg(a),
            MRepr::Sub { parent, members, pos } => {
                pos[parent.neg(members[a] as usize)] as usize
            }
            MRepr::Quot { parent, rep, proj } => proj[parent.neg(rep[a] as usize)] as usize,
            MRepr::Prod { left, right } => {
                let ro = right.size();
                left.neg(a / ro) * ro + right.neg(a % ro)
            }
        }
    }

    pub fn sub_elem(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// The right action m * r.
    pub fn act(&self, m: usize, r: usize) -> usize {
        match &self.repr {
            MRepr::Regular => self.ring.mul(m, r),
            MRepr::Sub { parent, members, pos } => {
                let s = parent.act(members[m] as usize, r);
                debug_assert_ne!(pos[s], u32::MAX, "submodule not closed under the action");
                pos[s] as usize
            }
            MRepr::Quot { parent, rep, proj } => {
                proj[parent.act(rep[m] as usize, r)] as usize
            }
            MRepr::Prod { left, right } => {
                let ro = right.size();
                left.act(m / ro, r) * ro + right.act(m % ro, r)
            }
        }
    }

    pub fn display(&self, m: usize) -> String {
        match &self.repr {
            MRepr::Regular => self.ring.display(m),
            MRepr::Sub { parent, members, .. } => parent.display(members[m] as usize),
            MRepr::Quot { parent, rep, .. } => {
                format!("{}+K", parent.display(rep[m] as usize))
            }
            MRepr::Prod { left, right } => {
                let ro = right.size();
                format!("({},{})", left.display(m / ro), right.display(m % ro))
            }
        }
    }

    /// For submodule carriers: the parent index of element `m`.
    pub fn member_in_parent(&self, m: usize) -> Option<usize> {
        match &self.repr {
            MRepr::Sub { members, .. } => Some(members[m] as usize),
            _ => None,
        }
    }

    /// For quotient carriers: the smallest parent representative of coset `m`.
    pub fn coset_rep(&self, m: usize) -> Option<usize> {
        match &self.repr {
            MRepr::Quot { rep, .. } => Some(rep[m] as usize),
            _ => None,
        }
    }

    /// For quotient carriers: the coset of a parent element.
    pub fn coset_of(&self, parent_elem: usize) -> Option<usize> {
        match &self.repr {
            MRepr::Quot { proj, .. } => Some(proj[parent_elem] as usize),
            _ => None,
        }
    }

    // ----- constructors -------------------------------------------------

    /// The ring as a right module over itself.
    pub fn regular(ring: Arc<FiniteRing>) -> Arc<FiniteModule> {
        let label = format!("{}", ring.spec());
        let size = ring.order();
        Self::finish(FiniteModule {
            ring,
            size,
            label,
            repr: MRepr::Regular,
            provenance: None,
        })
    }

    /// The submodule carrier on an action- and addition-closed member set
    /// (parent indices, any order; deduplicated and sorted here).
    pub fn submodule_carrier(
        parent: &Arc<FiniteModule>,
        mut members: Vec<u32>,
        label: String,
    ) -> Arc<FiniteModule> {
        members.sort_unstable();
        members.dedup();
        assert_eq!(members.first(), Some(&0), "a submodule contains zero");
        let mut pos = vec![u32::MAX; parent.size()];
        for (i, &p) in members.iter().enumerate() {
            pos[p as usize] = i as u32;
        }
        let size = members.len();
        Self::finish(FiniteModule {
            ring: Arc::clone(&parent.ring),
            size,
            label,
            repr: MRepr::Sub {
                parent: Arc::clone(parent),
                members,
                pos,
            },
            provenance: None,
        })
    }

    /// The quotient by a submodule given as its member set.
    pub fn quotient_carrier(
        parent: &Arc<FiniteModule>,
        sub_members: &[u32],
        label: String,
    ) -> Arc<FiniteModule> {
        Self::quotient_carrier_with(parent, sub_members, label, None)
    }

    fn quotient_carrier_with(
        parent: &Arc<FiniteModule>,
        sub_members: &[u32],
        label: String,
        provenance: Option<RightIdealSet>,
    ) -> Arc<FiniteModule> {
        let n = parent.size();
        let mut proj = vec![u32::MAX; n];
        let mut rep: Vec<u32> = Vec::new();
        for x in 0..n {
            if proj[x] != u32::MAX {
                continue;
            }
            let c = rep.len() as u32;
            rep.push(x as u32);
            for &s in sub_members {
                let y = parent.add(x, s as usize);
                debug_assert!(proj[y] == u32::MAX || proj[y] == c);
                proj[y] = c;
            }
        }
        let size = rep.len();
        Self::finish(FiniteModule {
            ring: Arc::clone(&parent.ring),
            size,
            label,
            repr: MRepr::Quot {
                parent: Arc::clone(parent),
                rep,
                proj,
            },
            provenance,
        })
    }

    /// External direct sum A ⊕ B (same ring).
    pub fn direct_sum(left: &Arc<FiniteModule>, right: &Arc<FiniteModule>) -> Arc<FiniteModule> {
        assert!(
            Arc::ptr_eq(&left.ring, &right.ring),
            "direct sum needs a common base ring"
        );
        let label = format!("{}(+){}", left.label, right.label);
        let size = left.size * right.size;
        Self::finish(FiniteModule {
            ring: Arc::clone(&left.ring),
            size,
            label,
            repr: MRepr::Prod {
                left: Arc::clone(left),
                right: Arc::clone(right),
            },
            provenance: None,
        })
    }

    fn finish(module: FiniteModule) -> Arc<FiniteModule> {
        verify_module_laws(&module);
        Arc::new(module)
    }
}

/// Verifies the right-module laws. Additive-group laws run exhaustively for
/// carriers up to 512 elements; action laws run exhaustively while the
/// triple count stays near 2^24 and on a deterministic sample otherwise.
/// Unit and zero laws always run in full.
fn verify_module_laws(m: &FiniteModule) {
    let n = m.size();
    let r = &m.ring;
    let violation = |law: &'static str, at: Vec<usize>| {
        panic!("module law `{law}` violated in {} at {at:?}", m.label)
    };
    for a in 0..n {
        if m.add(a, 0) != a {
            violation("additive identity", vec![a]);
        }
        if m.add(a, m.neg(a)) != 0 {
            violation("additive inverse", vec![a]);
        }
        if m.act(a, r.one()) != a {
            violation("unital action", vec![a]);
        }
        if m.act(a, r.zero()) != 0 {
            violation("zero action", vec![a]);
        }
    }
    if n <= 512 {
        for a in 0..n {
            for b in 0..n {
                if m.add(a, b) != m.add(b, a) {
                    violation("additive commutativity", vec![a, b]);
                }
                for c in 0..n {
                    if m.add(m.add(a, b), c) != m.add(a, m.add(b, c)) {
                        violation("additive associativity", vec![a, b, c]);
                    }
                }
            }
        }
    }
    let action_triples = n as u128 * (r.order() as u128).pow(2);
    let check_action = |a: usize, s: usize, t: usize| {
        if m.act(m.act(a, s), t) != m.act(a, r.mul(s, t)) {
            violation("action associativity", vec![a, s, t]);
        }
        if m.act(a, r.add(s, t)) != m.add(m.act(a, s), m.act(a, t)) {
            violation("action distributes over ring addition", vec![a, s, t]);
        }
    };
    let check_add_action = |a: usize, b: usize, s: usize| {
        if m.act(m.add(a, b), s) != m.add(m.act(a, s), m.act(b, s)) {
            violation("action distributes over module addition", vec![a, b, s]);
        }
    };
    if action_triples <= 1 << 24 {
        for a in 0..n {
            for s in 0..r.order() {
                for t in 0..r.order() {
                    check_action(a, s, t);
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for s in 0..r.order() {
                    check_add_action(a, b, s);
                }
            }
        }
    } else {
        let mut state = 0xA076_1D64_78BD_642Fu64 ^ (n as u64);
        let mut next = move || {
            state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
            let mut z = state;
            z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
            z ^ (z >> 31)
        };
        for _ in 0..20_000 {
            let a = (next() % n as u64) as usize;
            let b = (next() % n as u64) as usize;
            let s = (next() % r.order() as u64) as usize;
            let t = (next() % r.order() as u64) as usize;
            check_action(a, s, t);
            check_add_action(a, b, s);
        }
    }
}

/// A submodule of a fixed parent module, as its sorted member set plus the
/// generators that were used to reach it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Submodule {
    members: Vec<u32>,
    gens: Vec<u32>,
}

impl Submodule {
    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn gens(&self) -> &[u32] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, m: usize) -> bool {
        self.members.binary_search(&(m as u32)).is_ok()
    }

    pub fn zero(parent: &FiniteModule) -> Submodule {
        Submodule {
            members: vec![parent.zero() as u32],
            gens: vec![],
        }
    }

    pub fn full(parent: &FiniteModule) -> Submodule {
        Submodule {
            members: (0..parent.size() as u32).collect(),
            gens: smallest_generators(parent),
        }
    }

    /// Wraps an already-closed member set with its generator witness.
    pub(crate) fn from_parts(members: Vec<u32>, gens: Vec<u32>) -> Submodule {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Submodule { members, gens }
    }

    /// The submodule generated by the given elements.
    pub fn generated(parent: &FiniteModule, gens: &[usize]) -> Submodule {
        let members = closure(parent, gens);
        Submodule {
            members,
            gens: gens.iter().map(|&g| g as u32).collect(),
        }
    }

    /// Carrier module for this submodule.
    pub fn carrier(&self, parent: &Arc<FiniteModule>, label: String) -> Arc<FiniteModule> {
        FiniteModule::submodule_carrier(parent, self.members.clone(), label)
    }
}

/// Sorted member list of the submodule generated by `gens`: all sums of
/// action multiples. Action multiples of the generators are computed first;
/// a worklist then closes the set under addition.
pub fn closure(parent: &FiniteModule, gens: &[usize]) -> Vec<u32> {
    let mut in_set = BitSet::new(parent.size());
    let mut members: Vec<u32> = Vec::new();
    in_set.insert(parent.zero());
    members.push(parent.zero() as u32);
    for &g in gens {
        for r in parent.ring().elements() {
            let gr = parent.act(g, r);
            if in_set.insert(gr) {
                members.push(gr as u32);
            }
        }
    }
    let mut i = 0;
    while i < members.len() {
        let x = members[i] as usize;
        let mut j = 0;
        while j <= i {
            let s = parent.add(x, members[j] as usize);
            if in_set.insert(s) {
                members.push(s as u32);
            }
            j += 1;
        }
        i += 1;
    }
    members.sort_unstable();
    members
}

/// A greedy minimal generating sequence: repeatedly adjoin the smallest
/// element outside the span. Empty exactly for the zero module.
pub fn smallest_generators(m: &FiniteModule) -> Vec<u32> {
    let mut gens: Vec<u32> = Vec::new();
    let mut span = closure(m, &[]);
    while span.len() < m.size() {
        let mut next = None;
        for cand in m.elements() {
            if span.binary_search(&(cand as u32)).is_err() {
                next = Some(cand);
                break;
            }
        }
        let g = next.expect("span is proper, so some element lies outside");
        gens.push(g as u32);
        let gen_indices: Vec<usize> = gens.iter().map(|&g| g as usize).collect();
        span = closure(m, &gen_indices);
    }
    gens
}

/// All submodules of `M`, found by closing each known submodule under one
/// extra generator until nothing new appears. Sorted by (size, members).
pub fn submodules(m: &FiniteModule, cap: usize) -> Result<Vec<Submodule>, ModuleError> {
    if m.size() > cap {
        return Err(ModuleError::SizeExceeded {
            size: m.size(),
            cap,
        });
    }
    let mut seen: HashMap<Vec<u32>, usize> = HashMap::new();
    let mut list: Vec<Submodule> = Vec::new();
    let zero = Submodule::zero(m);
    seen.insert(zero.members.clone(), 0);
    list.push(zero);
    let mut frontier = vec![0usize];
    while let Some(idx) = frontier.pop() {
        let current = list[idx].clone();
        for extra in m.elements() {
            if current.contains(extra) {
                continue;
            }
            let mut gens: Vec<usize> = current.gens.iter().map(|&g| g as usize).collect();
            gens.push(extra);
            let members = closure(m, &gens);
            if !seen.contains_key(&members) {
                let sub = Submodule {
                    members: members.clone(),
                    gens: gens.iter().map(|&g| g as u32).collect(),
                };
                seen.insert(members, list.len());
                frontier.push(list.len());
                list.push(sub);
            }
        }
    }
    list.sort_by(|a, b| {
        a.members
            .len()
            .cmp(&b.members.len())
            .then_with(|| a.members.cmp(&b.members))
    });
    Ok(list)
}

/// The module R/xR together with the canonical surjection from the regular
/// module. The ideal xR is recorded as the module's provenance.
pub fn cyclic_module(
    ring: &Arc<FiniteRing>,
    x: usize,
) -> (Arc<FiniteModule>, hom::ModuleHom) {
    let ideal = RightIdealSet::principal(ring, x);
    let regular = FiniteModule::regular(Arc::clone(ring));
    let label = format!("{}/({})R", ring.spec(), ring.display(x));
    let members = ideal.members().to_vec();
    let quot =
        FiniteModule::quotient_carrier_with(&regular, &members, label, Some(ideal));
    assert_eq!(quot.size() * quot.provenance().unwrap().len(), ring.order());
    let map: Vec<u32> = (0..ring.order())
        .map(|r| quot.coset_of(r).unwrap() as u32)
        .collect();
    let pi = hom::ModuleHom::new(&regular, &quot, map).expect("canonical surjection is a hom");
    (quot, pi)
}

/// Quotient of a module by one of its submodules.
pub fn quotient_module(m: &Arc<FiniteModule>, sub: &Submodule) -> Arc<FiniteModule> {
    let label = format!("{}/sub{}", m.label(), sub.len());
    FiniteModule::quotient_carrier(m, sub.members(), label)
}

//! Finite rings with verified axioms and deterministic element indexing.
//!
//! Elements of a [`FiniteRing`] are the indices `0..order`. Index 0 is
//! always the zero element. For structured rings the index is the
//! lexicographic rank of the natural coordinate tuple — matrix entries
//! row-major, product components left-to-right, structure-constant
//! coordinates most-significant first — so witnesses in reports are
//! reproducible across runs and builds. (The identity element's index is
//! whatever the encoding dictates; it is stored explicitly.)
//!
//! Arithmetic is evaluated structurally from the construction; full
//! operation tables are cached only for small orders. Every constructor
//! verifies the ring axioms — exhaustively up to order 512, on a
//! deterministic pseudorandom sample above that — so later algorithms may
//! assume they hold.

use std::fmt;
use std::sync::{Arc, OnceLock};
use thiserror::Error;

pub mod analysis;
pub mod ideal;
pub mod spec;
pub mod theorem;

pub use analysis::UnitData;
pub use ideal::RightIdealSet;
pub use spec::RingSpec;

/// Orders at or below this get eager add/mul/neg tables.
const TABLE_LIMIT: usize = 256;
/// Orders at or below this get exhaustive axiom checks.
const EXHAUSTIVE_AXIOM_LIMIT: usize = 512;
/// Number of sampled triples per law above the exhaustive limit.
const SAMPLED_TRIPLES: usize = 20_000;

/// Default cap on the order of a constructed finite ring.
pub const DEFAULT_RING_ORDER_CAP: usize = 100_000;

/// Enumeration caps. `MF_SIZE_CAP`, when set, overrides every cap with one
/// blunt global value.
#[derive(Debug, Clone, Copy)]
pub struct Caps {
    pub ring_order: usize,
    pub submodule_enum: usize,
    pub divisor_scan: usize,
    pub endo_order: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            ring_order: DEFAULT_RING_ORDER_CAP,
            submodule_enum: 4096,
            divisor_scan: 1_000_000,
            endo_order: 4096,
        }
    }
}

impl Caps {
    pub fn from_env() -> Self {
        match std::env::var("MF_SIZE_CAP").ok().and_then(|v| v.parse::<usize>().ok()) {
            Some(cap) if cap > 0 => Caps {
                ring_order: cap,
                submodule_enum: cap,
                divisor_scan: cap,
                endo_order: cap,
            },
            _ => Caps::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("cannot parse ring spec `{spec}`: {msg}")]
    Parse { spec: String, msg: String },
    #[error("ring order {order} exceeds cap {cap}")]
    SizeExceeded { order: u128, cap: usize },
    #[error("ring axiom `{law}` violated at {at:?}")]
    AxiomViolation { law: &'static str, at: Vec<usize> },
    #[error("ring is trivial (1 = 0)")]
    TrivialRing,
    #[error("structure-constant table has no identity element")]
    NotUnital,
    #[error("ideal is not two-sided: left multiple {r} * {x} = {rx} falls outside")]
    NotTwoSided { r: usize, x: usize, rx: usize },
    #[error("operation `{op}` needs a finite ring, got the Z backend")]
    NeedsFinite { op: &'static str },
    #[error("cannot read `{path}`: {msg}")]
    Io { path: String, msg: String },
    #[error("bad structure-constant file `{path}`: {msg}")]
    BadScFile { path: String, msg: String },
}

/// A finite ring, or the witnessed backend for the integers. Infinite
/// backends only support verdict-valued operations with explicit bounds.
#[derive(Debug, Clone)]
pub enum RingHandle {
    Finite(Arc<FiniteRing>),
    Int,
}

impl RingHandle {
    pub fn finite(&self, op: &'static str) -> Result<&Arc<FiniteRing>, RingError> {
        match self {
            RingHandle::Finite(r) => Ok(r),
            RingHandle::Int => Err(RingError::NeedsFinite { op }),
        }
    }

    pub fn spec(&self) -> &str {
        match self {
            RingHandle::Finite(r) => r.spec(),
            RingHandle::Int => "int",
        }
    }
}

/// Builds a ring from its textual spec. See [`spec::RingSpec`] for the
/// grammar. `sc:` paths are read relative to the working directory.
pub fn build_ring(spec_text: &str, caps: &Caps) -> Result<RingHandle, RingError> {
    let spec = RingSpec::parse(spec_text)?;
    build_from_spec(&spec, caps)
}

fn build_from_spec(spec: &RingSpec, caps: &Caps) -> Result<RingHandle, RingError> {
    match spec {
        RingSpec::Int => Ok(RingHandle::Int),
        other => Ok(RingHandle::Finite(build_finite(other, caps)?)),
    }
}

fn build_finite(spec: &RingSpec, caps: &Caps) -> Result<Arc<FiniteRing>, RingError> {
    match spec {
        RingSpec::Zmod(n) => {
            if *n as u128 > caps.ring_order as u128 {
                return Err(RingError::SizeExceeded {
                    order: *n as u128,
                    cap: caps.ring_order,
                });
            }
            FiniteRing::zmod(*n)
        }
        RingSpec::Mat(k, inner) => {
            let base = build_finite(inner, caps)?;
            FiniteRing::matrix(base, *k, caps.ring_order)
        }
        RingSpec::Tri(k, inner) => {
            let base = build_finite(inner, caps)?;
            FiniteRing::triangular(base, *k, caps.ring_order)
        }
        RingSpec::Prod(a, b) => {
            let left = build_finite(a, caps)?;
            let right = build_finite(b, caps)?;
            FiniteRing::product(left, right, caps.ring_order)
        }
        RingSpec::Sc(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| RingError::Io {
                path: path.clone(),
                msg: e.to_string(),
            })?;
            let (dim, modulus, table) = parse_sc_file(path, &text)?;
            FiniteRing::structure_constants(dim, modulus, table, caps.ring_order)
        }
        RingSpec::Int => unreachable!("Int handled by build_from_spec"),
    }
}

fn parse_sc_file(path: &str, text: &str) -> Result<(usize, usize, Vec<Vec<u32>>), RingError> {
    let bad = |msg: String| RingError::BadScFile {
        path: path.to_string(),
        msg,
    };
    let mut numbers = text
        .split_whitespace()
        .map(|t| t.parse::<i64>().map_err(|e| bad(format!("bad integer `{t}`: {e}"))));
    let mut next = |what: &str| {
        numbers
            .next()
            .unwrap_or_else(|| Err(bad(format!("missing {what}"))))
    };
    let dim = next("dimension")? as usize;
    let modulus = next("modulus")? as usize;
    if dim == 0 || modulus < 2 {
        return Err(bad("need dimension >= 1 and modulus >= 2".into()));
    }
    let mut table = Vec::with_capacity(dim * dim);
    for i in 0..dim {
        for j in 0..dim {
            let mut row = Vec::with_capacity(dim);
            for t in 0..dim {
                let v = next(&format!("coefficient ({i},{j},{t})"))?;
                row.push(v.rem_euclid(modulus as i64) as u32);
            }
            table.push(row);
        }
    }
    Ok((dim, modulus, table))
}

pub(crate) struct OpTables {
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
}

enum Repr {
    Zmod {
        m: usize,
    },
    /// Full k-by-k matrices; coordinates are entries row-major.
    Mat {
        base: Arc<FiniteRing>,
        k: usize,
        dec: Vec<u32>,
    },
    /// Upper-triangular k-by-k matrices; coordinates are the entries (i,j)
    /// with i <= j, row-major; `off[i][j]` locates them.
    Tri {
        base: Arc<FiniteRing>,
        k: usize,
        off: Vec<Vec<usize>>,
        dec: Vec<u32>,
    },
    Prod {
        left: Arc<FiniteRing>,
        right: Arc<FiniteRing>,
    },
    /// Free (Z/m)^dim with bilinear multiplication from a basis table;
    /// `table[i*dim+j]` is the coordinate vector of (basis i)*(basis j).
    Sc {
        dim: usize,
        modulus: usize,
        table: Vec<Vec<u32>>,
        dec: Vec<u32>,
    },
    /// Cosets of a two-sided ideal in `parent`; `rep` maps a coset to its
    /// smallest representative, `proj` maps parent elements to cosets.
    Quotient {
        parent: Arc<FiniteRing>,
        rep: Vec<u32>,
        proj: Vec<u32>,
    },
    /// Explicit operation tables (endomorphism rings, ad-hoc rings).
    Table {
        add: Vec<u32>,
        mul: Vec<u32>,
        neg: Vec<u32>,
        names: Option<Vec<String>>,
    },
}

/// A finite unital ring with elements `0..order`.
pub struct FiniteRing {
    spec: String,
    order: usize,
    one: usize,
    repr: Repr,
    tables: Option<OpTables>,
    units_cache: OnceLock<UnitData>,
    idem_cache: OnceLock<Vec<u32>>,
    radical_cache: OnceLock<Vec<u32>>,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteRing({}, order {})", self.spec, self.order)
    }
}

impl FiniteRing {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn spec(&self) -> &str {
        &self.spec
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        if let Some(t) = &self.tables {
            return t.add[a * self.order + b] as usize;
        }
        self.raw_add(a, b)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        if let Some(t) = &self.tables {
            return t.mul[a * self.order + b] as usize;
        }
        self.raw_mul(a, b)
    }

    pub fn neg(&self, a: usize) -> usize {
        if let Some(t) = &self.tables {
            return t.neg[a] as usize;
        }
        self.raw_neg(a)
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    fn raw_add(&self, a: usize, b: usize) -> usize {
        match &self.repr {
            Repr::Zmod { m } => (a + b) % m,
            Repr::Mat { base, dec, .. } => {
                let n = self.ncoords();
                let (xa, xb) = (&dec[a * n..(a + 1) * n], &dec[b * n..(b + 1) * n]);
                let mut idx = 0usize;
                for t in 0..n {
                    idx = idx * base.order() + base.add(xa[t] as usize, xb[t] as usize);
                }
                idx
            }
            Repr::Tri { base, dec, .. } => {
                let n = self.ncoords();
                let (xa, xb) = (&dec[a * n..(a + 1) * n], &dec[b * n..(b + 1) * n]);
                let mut idx = 0usize;
                for t in 0..n {
                    idx = idx * base.order() + base.add(xa[t] as usize, xb[t] as usize);
                }
                idx
            }
            Repr::Prod { left, right } => {
                let ro = right.order();
                left.add(a / ro, b / ro) * ro + right.add(a % ro, b % ro)
            }
            Repr::Sc { dim, modulus, dec, .. } => {
                let (xa, xb) = (&dec[a * dim..(a + 1) * dim], &dec[b * dim..(b + 1) * dim]);
                let mut idx = 0usize;
                for t in 0..*dim {
                    idx = idx * modulus + (xa[t] as usize + xb[t] as usize) % modulus;
                }
                idx
            }
            Repr::Quotient { parent, rep, proj } => {
                proj[parent.add(rep[a] as usize, rep[b] as usize)] as usize
            }
            Repr::Table { add, .. } => add[a * self.order + b] as usize,
        }
    }

    fn raw_neg(&self, a: usize) -> usize {
        match &self.repr {
            Repr::Zmod { m } => (m - a) % m,
            Repr::Mat { base, dec, .. } | Repr::Tri { base, dec, .. } => {
                let n = self.ncoords();
                let xa = &dec[a * n..(a + 1) * n];
                let mut idx = 0usize;
                for t in 0..n {
                    idx = idx * base.order() + base.neg(xa[t] as usize);
                }
                idx
            }
            Repr::Prod { left, right } => {
                let ro = right.order();
                left.neg(a / ro) * ro + right.neg(a % ro)
            }
            Repr::Sc { dim, modulus, dec, .. } => {
                let xa = &dec[a * dim..(a + 1) * dim];
                let mut idx = 0usize;
                for t in 0..*dim {
                    idx = idx * modulus + (modulus - xa[t] as usize) % modulus;
                }
                idx
            }
            Repr::Quotient { parent, rep, proj } => proj[parent.neg(rep[a] as usize)] as usize,
            Repr::Table { neg, .. } => neg[a] as usize,
        }
    }

    fn raw_mul(&self, a: usize, b: usize) -> usize {
        match &self.repr {
            Repr::Zmod { m } => (a * b) % m,
            Repr::Mat { base, k, dec } => {
                let k = *k;
                let n = k * k;
                let (xa, xb) = (&dec[a * n..(a + 1) * n], &dec[b * n..(b + 1) * n]);
                let mut out = [0usize; 16];
                debug_assert!(n <= 16);
                for i in 0..k {
                    for j in 0..k {
                        let mut acc = 0usize;
                        for l in 0..k {
                            let p = base.mul(xa[i * k + l] as usize, xb[l * k + j] as usize);
                            acc = base.add(acc, p);
                        }
                        out[i * k + j] = acc;
                    }
                }
                let mut idx = 0usize;
                for t in 0..n {
                    idx = idx * base.order() + out[t];
                }
                idx
            }
            Repr::Tri { base, k, off, dec } => {
                let k = *k;
                let n = self.ncoords();
                let (xa, xb) = (&dec[a * n..(a + 1) * n], &dec[b * n..(b + 1) * n]);
                let mut out = [0usize; 16];
                debug_assert!(n <= 16);
                for i in 0..k {
                    for j in i..k {
                        let mut acc = 0usize;
                        for l in i..=j {
                            let p = base.mul(xa[off[i][l]] as usize, xb[off[l][j]] as usize);
                            acc = base.add(acc, p);
                        }
                        out[off[i][j]] = acc;
                    }
                }
                let mut idx = 0usize;
                for t in 0..n {
                    idx = idx * base.order() + out[t];
                }
                idx
            }
            Repr::Prod { left, right } => {
                let ro = right.order();
                left.mul(a / ro, b / ro) * ro + right.mul(a % ro, b % ro)
            }
            Repr::Sc { dim, modulus, table, dec } => {
                let dim = *dim;
                let m = *modulus;
                let (xa, xb) = (&dec[a * dim..(a + 1) * dim], &dec[b * dim..(b + 1) * dim]);
                let mut out = vec![0usize; dim];
                for i in 0..dim {
                    let ai = xa[i] as usize;
                    if ai == 0 {
                        continue;
                    }
                    for j in 0..dim {
                        let bj = xb[j] as usize;
                        if bj == 0 {
                            continue;
                        }
                        let coeff = (ai * bj) % m;
                        let row = &table[i * dim + j];
                        for t in 0..dim {
                            out[t] = (out[t] + coeff * row[t] as usize) % m;
                        }
                    }
                }
                let mut idx = 0usize;
                for t in 0..dim {
                    idx = idx * m + out[t];
                }
                idx
            }
            Repr::Quotient { parent, rep, proj } => {
                proj[parent.mul(rep[a] as usize, rep[b] as usize)] as usize
            }
            Repr::Table { mul, .. } => mul[a * self.order + b] as usize,
        }
    }

    fn ncoords(&self) -> usize {
        match &self.repr {
            Repr::Zmod { .. } => 1,
            Repr::Mat { k, .. } => k * k,
            Repr::Tri { k, .. } => k * (k + 1) / 2,
            Repr::Prod { .. } => 2,
            Repr::Sc { dim, .. } => *dim,
            Repr::Quotient { .. } | Repr::Table { .. } => 1,
        }
    }

    /// Natural coordinates of an element, when the representation has them:
    /// matrix entries row-major (stored entries only, for triangular),
    /// product components, structure-constant digits. `None` for quotient
    /// and table rings.
    pub fn coords(&self, a: usize) -> Option<Vec<usize>> {
        match &self.repr {
            Repr::Zmod { .. } => Some(vec![a]),
            Repr::Mat { dec, .. } | Repr::Tri { dec, .. } => {
                let n = self.ncoords();
                Some(dec[a * n..(a + 1) * n].iter().map(|&c| c as usize).collect())
            }
            Repr::Prod { right, .. } => {
                let ro = right.order();
                Some(vec![a / ro, a % ro])
            }
            Repr::Sc { dim, dec, .. } => {
                Some(dec[a * dim..(a + 1) * dim].iter().map(|&c| c as usize).collect())
            }
            Repr::Quotient { .. } | Repr::Table { .. } => None,
        }
    }

    /// Inverse of [`coords`](Self::coords): builds the element index from
    /// natural coordinates. Panics on out-of-range coordinates.
    pub fn encode_coords(&self, coords: &[usize]) -> usize {
        assert_eq!(coords.len(), self.ncoords(), "coordinate arity mismatch");
        match &self.repr {
            Repr::Zmod { m } => {
                assert!(coords[0] < *m);
                coords[0]
            }
            Repr::Mat { base, .. } | Repr::Tri { base, .. } => {
                let mut idx = 0usize;
                for &c in coords {
                    assert!(c < base.order());
                    idx = idx * base.order() + c;
                }
                idx
            }
            Repr::Prod { left, right } => {
                assert!(coords[0] < left.order() && coords[1] < right.order());
                coords[0] * right.order() + coords[1]
            }
            Repr::Sc { dim: _, modulus, .. } => {
                let mut idx = 0usize;
                for &c in coords {
                    assert!(c < *modulus);
                    idx = idx * modulus + c;
                }
                idx
            }
            Repr::Quotient { .. } | Repr::Table { .. } => {
                panic!("ring has no coordinate representation")
            }
        }
    }

    /// For quotient rings: the canonical (smallest) parent representative.
    pub fn quotient_rep(&self, a: usize) -> Option<usize> {
        match &self.repr {
            Repr::Quotient { rep, .. } => Some(rep[a] as usize),
            _ => None,
        }
    }

    /// For quotient rings: the coset of a parent element.
    pub fn quotient_proj(&self, parent_elem: usize) -> Option<usize> {
        match &self.repr {
            Repr::Quotient { proj, .. } => Some(proj[parent_elem] as usize),
            _ => None,
        }
    }

    pub fn display(&self, a: usize) -> String {
        match &self.repr {
            Repr::Zmod { .. } => a.to_string(),
            Repr::Mat { base, k, dec } => {
                let k = *k;
                let n = k * k;
                let xs = &dec[a * n..(a + 1) * n];
                let rows: Vec<String> = (0..k)
                    .map(|i| {
                        let entries: Vec<String> =
                            (0..k).map(|j| base.display(xs[i * k + j] as usize)).collect();
                        format!("[{}]", entries.join(","))
                    })
                    .collect();
                format!("[{}]", rows.join(","))
            }
            Repr::Tri { base, k, off, dec } => {
                let k = *k;
                let n = self.ncoords();
                let xs = &dec[a * n..(a + 1) * n];
                let rows: Vec<String> = (0..k)
                    .map(|i| {
                        let entries: Vec<String> = (0..k)
                            .map(|j| {
                                if i <= j {
                                    base.display(xs[off[i][j]] as usize)
                                } else {
                                    base.display(0)
                                }
                            })
                            .collect();
                        format!("[{}]", entries.join(","))
                    })
                    .collect();
                format!("[{}]", rows.join(","))
            }
            Repr::Prod { left, right } => {
                let ro = right.order();
                format!("({},{})", left.display(a / ro), right.display(a % ro))
            }
            Repr::Sc { dim, dec, .. } => {
                let xs = &dec[a * dim..(a + 1) * dim];
                let parts: Vec<String> = xs.iter().map(|c| c.to_string()).collect();
                format!("[{}]", parts.join(","))
            }
            Repr::Quotient { parent, rep, .. } => {
                format!("{}+I", parent.display(rep[a] as usize))
            }
            Repr::Table { names, .. } => match names {
                Some(ns) => ns[a].clone(),
                None => format!("#{a}"),
            },
        }
    }

    pub(crate) fn units_cache(&self) -> &OnceLock<UnitData> {
        &self.units_cache
    }

    pub(crate) fn idem_cache(&self) -> &OnceLock<Vec<u32>> {
        &self.idem_cache
    }

    pub(crate) fn radical_cache(&self) -> &OnceLock<Vec<u32>> {
        &self.radical_cache
    }

    // ----- constructors -------------------------------------------------

    pub fn zmod(m: usize) -> Result<Arc<FiniteRing>, RingError> {
        if m < 2 {
            return Err(RingError::TrivialRing);
        }
        Self::finish(format!("zmod:{m}"), m, 1 % m, Repr::Zmod { m })
    }

    pub fn matrix(base: Arc<FiniteRing>, k: usize, cap: usize) -> Result<Arc<FiniteRing>, RingError> {
        let ncoords = k * k;
        assert!(ncoords <= 16, "matrix dimension too large (k <= 4)");
        let order = checked_power(base.order(), ncoords, cap)?;
        let dec = build_decode(order, ncoords, base.order());
        let mut one_coords = vec![0usize; ncoords];
        for i in 0..k {
            one_coords[i * k + i] = base.one();
        }
        let spec = format!("mat:{k}:{}", base.spec());
        let one = encode_mixed(&one_coords, base.order());
        Self::finish(spec, order, one, Repr::Mat { base, k, dec })
    }

    pub fn triangular(base: Arc<FiniteRing>, k: usize, cap: usize) -> Result<Arc<FiniteRing>, RingError> {
        let ncoords = k * (k + 1) / 2;
        assert!(ncoords <= 16, "matrix dimension too large");
        let order = checked_power(base.order(), ncoords, cap)?;
        let dec = build_decode(order, ncoords, base.order());
        let mut off = vec![vec![usize::MAX; k]; k];
        let mut t = 0usize;
        for i in 0..k {
            for j in i..k {
                off[i][j] = t;
                t += 1;
            }
        }
        let mut one_coords = vec![0usize; ncoords];
        for i in 0..k {
            one_coords[off[i][i]] = base.one();
        }
        let spec = format!("tri:{k}:{}", base.spec());
        let one = encode_mixed(&one_coords, base.order());
        Self::finish(spec, order, one, Repr::Tri { base, k, off, dec })
    }

    pub fn product(
        left: Arc<FiniteRing>,
        right: Arc<FiniteRing>,
        cap: usize,
    ) -> Result<Arc<FiniteRing>, RingError> {
        let order = left
            .order()
            .checked_mul(right.order())
            .filter(|&o| o <= cap)
            .ok_or(RingError::SizeExceeded {
                order: left.order() as u128 * right.order() as u128,
                cap,
            })?;
        let one = left.one() * right.order() + right.one();
        let spec = format!("prod:{},{}", left.spec(), right.spec());
        Self::finish(spec, order, one, Repr::Prod { left, right })
    }

    /// Ring on (Z/modulus)^dim with multiplication extended bilinearly from
    /// `table` (basis products, row-major). Associativity is checked on all
    /// basis triples, which suffices by bilinearity; the identity element is
    /// located by scanning.
    pub fn structure_constants(
        dim: usize,
        modulus: usize,
        table: Vec<Vec<u32>>,
        cap: usize,
    ) -> Result<Arc<FiniteRing>, RingError> {
        assert_eq!(table.len(), dim * dim, "structure table must have dim^2 rows");
        let order = checked_power(modulus, dim, cap)?;
        let dec = build_decode(order, dim, modulus);
        let repr = Repr::Sc {
            dim,
            modulus,
            table,
            dec,
        };
        // Temporary ring with a placeholder identity, to locate the real one.
        let probe = FiniteRing {
            spec: String::new(),
            order,
            one: 0,
            repr,
            tables: None,
            units_cache: OnceLock::new(),
            idem_cache: OnceLock::new(),
            radical_cache: OnceLock::new(),
        };
        verify_basis_associativity(&probe, dim, modulus)?;
        let mut one = None;
        'scan: for u in 0..order {
            // u acts as identity on every basis element iff on everything.
            for b in 0..dim {
                let eb = power_index(modulus, dim, b);
                if probe.raw_mul(u, eb) != eb || probe.raw_mul(eb, u) != eb {
                    continue 'scan;
                }
            }
            one = Some(u);
            break;
        }
        let one = one.ok_or(RingError::NotUnital)?;
        let spec = format!("sc(dim={dim},mod={modulus})");
        Self::finish(spec, order, one, probe.repr)
    }

    /// Ring given by explicit operation tables (for endomorphism rings).
    pub fn from_tables(
        spec: String,
        add: Vec<u32>,
        mul: Vec<u32>,
        neg: Vec<u32>,
        one: usize,
        names: Option<Vec<String>>,
    ) -> Result<Arc<FiniteRing>, RingError> {
        let order = neg.len();
        assert_eq!(add.len(), order * order);
        assert_eq!(mul.len(), order * order);
        if let Some(ns) = &names {
            assert_eq!(ns.len(), order);
        }
        Self::finish(spec, order, one, Repr::Table { add, mul, neg, names })
    }

    /// Quotient by a two-sided ideal, given the coset structure. Used by
    /// [`ideal::quotient_ring`]; callers go through that.
    pub(crate) fn quotient(
        parent: Arc<FiniteRing>,
        rep: Vec<u32>,
        proj: Vec<u32>,
        ideal_size: usize,
    ) -> Result<Arc<FiniteRing>, RingError> {
        let order = rep.len();
        debug_assert_eq!(order * ideal_size, parent.order());
        let one = proj[parent.one()] as usize;
        let spec = format!("{}/I{}", parent.spec(), ideal_size);
        Self::finish(spec, order, one, Repr::Quotient { parent, rep, proj })
    }

    fn finish(spec: String, order: usize, one: usize, repr: Repr) -> Result<Arc<FiniteRing>, RingError> {
        let mut ring = FiniteRing {
            spec,
            order,
            one,
            repr,
            tables: None,
            units_cache: OnceLock::new(),
            idem_cache: OnceLock::new(),
            radical_cache: OnceLock::new(),
        };
        if order <= TABLE_LIMIT && !matches!(ring.repr, Repr::Table { .. }) {
            let mut add = vec![0u32; order * order];
            let mut mul = vec![0u32; order * order];
            let mut neg = vec![0u32; order];
            for a in 0..order {
                neg[a] = ring.raw_neg(a) as u32;
                for b in 0..order {
                    add[a * order + b] = ring.raw_add(a, b) as u32;
                    mul[a * order + b] = ring.raw_mul(a, b) as u32;
                }
            }
            ring.tables = Some(OpTables { add, mul, neg });
        }
        verify_axioms(&ring)?;
        Ok(Arc::new(ring))
    }
}

fn checked_power(base: usize, exp: usize, cap: usize) -> Result<usize, RingError> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc *= base as u128;
        if acc > cap as u128 {
            return Err(RingError::SizeExceeded { order: acc, cap });
        }
    }
    Ok(acc as usize)
}

fn build_decode(order: usize, ncoords: usize, base: usize) -> Vec<u32> {
    let mut dec = vec![0u32; order * ncoords];
    for a in 0..order {
        let mut rest = a;
        for t in (0..ncoords).rev() {
            dec[a * ncoords + t] = (rest % base) as u32;
            rest /= base;
        }
    }
    dec
}

fn encode_mixed(coords: &[usize], base: usize) -> usize {
    coords.iter().fold(0usize, |acc, &c| acc * base + c)
}

/// Index of the b-th basis vector of (Z/m)^dim under the mixed-radix encode.
fn power_index(modulus: usize, dim: usize, b: usize) -> usize {
    let mut coords = vec![0usize; dim];
    coords[b] = 1;
    encode_mixed(&coords, modulus)
}

fn verify_basis_associativity(ring: &FiniteRing, dim: usize, modulus: usize) -> Result<(), RingError> {
    for i in 0..dim {
        let ei = power_index(modulus, dim, i);
        for j in 0..dim {
            let ej = power_index(modulus, dim, j);
            let eij = ring.raw_mul(ei, ej);
            for t in 0..dim {
                let et = power_index(modulus, dim, t);
                let lhs = ring.raw_mul(eij, et);
                let rhs = ring.raw_mul(ei, ring.raw_mul(ej, et));
                if lhs != rhs {
                    return Err(RingError::AxiomViolation {
                        law: "basis associativity",
                        at: vec![ei, ej, et],
                    });
                }
            }
        }
    }
    Ok(())
}

fn verify_axioms(ring: &FiniteRing) -> Result<(), RingError> {
    let n = ring.order;
    if n < 2 || ring.one == ring.zero() {
        return Err(RingError::TrivialRing);
    }
    let fail = |law: &'static str, at: Vec<usize>| Err(RingError::AxiomViolation { law, at });

    // Identity and negation laws are always checked in full.
    for a in 0..n {
        if ring.mul(ring.one, a) != a || ring.mul(a, ring.one) != a {
            return fail("multiplicative identity", vec![a]);
        }
        if ring.add(a, 0) != a {
            return fail("additive identity", vec![a]);
        }
        if ring.add(a, ring.neg(a)) != 0 {
            return fail("additive inverse", vec![a]);
        }
    }

    let check_triple = |a: usize, b: usize, c: usize| -> Result<(), RingError> {
        if ring.add(a, b) != ring.add(b, a) {
            return fail("additive commutativity", vec![a, b]);
        }
        if ring.add(ring.add(a, b), c) != ring.add(a, ring.add(b, c)) {
            return fail("additive associativity", vec![a, b, c]);
        }
        if ring.mul(ring.mul(a, b), c) != ring.mul(a, ring.mul(b, c)) {
            return fail("multiplicative associativity", vec![a, b, c]);
        }
        if ring.mul(a, ring.add(b, c)) != ring.add(ring.mul(a, b), ring.mul(a, c)) {
            return fail("left distributivity", vec![a, b, c]);
        }
        if ring.mul(ring.add(a, b), c) != ring.add(ring.mul(a, c), ring.mul(b, c)) {
            return fail("right distributivity", vec![a, b, c]);
        }
        Ok(())
    };

    if n <= EXHAUSTIVE_AXIOM_LIMIT {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    check_triple(a, b, c)?;
                }
            }
        }
    } else {
        let mut rng = DetRng::new(n as u64);
        for _ in 0..SAMPLED_TRIPLES {
            let a = rng.below(n);
            let b = rng.below(n);
            let c = rng.below(n);
            check_triple(a, b, c)?;
        }
    }
    Ok(())
}

/// Deterministic splitmix64 sampler used wherever exhaustive law checking
/// is too large; seeding by structure size keeps runs reproducible.
pub(crate) struct DetRng(u64);

impl DetRng {
    pub(crate) fn new(seed: u64) -> Self {
        DetRng(0x9E37_79B9_7F4A_7C15u64 ^ seed)
    }

    pub(crate) fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub(crate) fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }
}

//! Small Galois fields F_{p^n} with complete operation tables.
//!
//! Elements are indices `0..q` encoding coefficient vectors over F_p
//! low-to-high (index = a0 + a1·p + a2·p², so 0 is zero and 1 is one, and
//! the prime subfield occupies indices `0..p`). The defining modulus is
//! the lexicographically smallest monic irreducible of the requested
//! degree, ordered by coefficient tuple (c0, c1, …); this makes every
//! field of a given order canonical, so two constructions always agree
//! element-for-element. Frobenius powers are precomputed so automorphism
//! twists cost one table lookup.

use std::fmt;
use std::sync::Arc;

use crate::ring::DetRng;
use crate::skew::SkewError;

/// Largest supported characteristic.
pub const MAX_CHAR: usize = 13;
/// Largest supported extension degree.
pub const MAX_DEGREE: usize = 3;
/// Largest supported field order.
pub const MAX_ORDER: usize = 729;

/// Threshold below which field laws are checked on every triple; larger
/// fields get a deterministic 20 000-triple sample.
const EXHAUSTIVE_FIELD_LIMIT: usize = 81;
const SAMPLED_FIELD_TRIPLES: usize = 20_000;

/// A finite field F_{p^n} with full arithmetic tables.
pub struct GaloisField {
    p: usize,
    n: usize,
    q: usize,
    /// Monic defining polynomial, low-to-high, length n+1.
    modulus: Vec<usize>,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    /// inv[0] is unused filler.
    inv: Vec<u16>,
    /// frob_pows[j][e] = e^(p^j) for j in 0..n.
    frob_pows: Vec<Vec<u16>>,
}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GaloisField(p={}, n={}, q={})", self.p, self.n, self.q)
    }
}

impl GaloisField {
    /// Builds F_{p^n}. Fails for composite p or parameters outside the
    /// supported range; the constructed tables are law-checked before
    /// being returned.
    pub fn new(p: usize, n: usize) -> Result<Arc<GaloisField>, SkewError> {
        if !is_prime(p) || p > MAX_CHAR {
            return Err(SkewError::BadField {
                msg: format!("characteristic {p} must be a prime at most {MAX_CHAR}"),
            });
        }
        if n == 0 || n > MAX_DEGREE {
            return Err(SkewError::BadField {
                msg: format!("degree {n} must be between 1 and {MAX_DEGREE}"),
            });
        }
        let q = p.pow(n as u32);
        if q > MAX_ORDER {
            return Err(SkewError::BadField {
                msg: format!("order {q} exceeds {MAX_ORDER}"),
            });
        }

        let modulus = smallest_irreducible(p, n);
        let mut add = vec![0u16; q * q];
        let mut mul = vec![0u16; q * q];
        let mut neg = vec![0u16; q];
        for a in 0..q {
            let da = digits(a, p, n);
            let mut nd = vec![0usize; n];
            for i in 0..n {
                nd[i] = (p - da[i]) % p;
            }
            neg[a] = undigits(&nd, p) as u16;
            for b in 0..q {
                let db = digits(b, p, n);
                let mut sum = vec![0usize; n];
                for i in 0..n {
                    sum[i] = (da[i] + db[i]) % p;
                }
                add[a * q + b] = undigits(&sum, p) as u16;
                mul[a * q + b] = poly_mul_mod(&da, &db, &modulus, p) as u16;
            }
        }

        // Inverses; a gap here would mean the modulus was reducible.
        let mut inv = vec![0u16; q];
        for a in 1..q {
            let found = (1..q).find(|&b| mul[a * q + b] == 1).ok_or_else(|| {
                SkewError::BadField {
                    msg: format!("element {a} has no inverse; modulus not irreducible"),
                }
            })?;
            inv[a] = found as u16;
        }

        // Frobenius powers as permutation tables: frob_pows[j] is e ↦ e^(p^j),
        // built by iterating the basic p-power map.
        let mut frob_pows: Vec<Vec<u16>> = Vec::with_capacity(n);
        frob_pows.push((0..q as u16).collect());
        let frob: Vec<u16> = (0..q).map(|e| pow_table(&mul, q, e, p)).collect();
        for j in 1..n {
            let prev = &frob_pows[j - 1];
            frob_pows.push((0..q).map(|e| frob[prev[e] as usize]).collect());
        }

        let field = GaloisField {
            p,
            n,
            q,
            modulus,
            add,
            mul,
            neg,
            inv,
            frob_pows,
        };
        field.verify_laws()?;
        Ok(Arc::new(field))
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Field order q = p^n.
    pub fn q(&self) -> usize {
        self.q
    }

    /// Defining modulus, low-to-high coefficients over F_p, length n+1.
    pub fn modulus(&self) -> &[usize] {
        &self.modulus
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b] as usize
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b] as usize
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; panics on zero, which callers must exclude.
    pub fn inv(&self, a: usize) -> usize {
        assert!(a != 0, "inverse of zero");
        self.inv[a] as usize
    }

    pub fn pow(&self, a: usize, mut k: u64) -> usize {
        let mut base = a;
        let mut acc = 1usize;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Applies the j-th Frobenius power e ↦ e^(p^j); j is reduced mod n.
    pub fn frobenius_pow(&self, j: usize, e: usize) -> usize {
        self.frob_pows[j % self.n][e] as usize
    }

    /// Coefficient vector of an element, low-to-high, length n.
    pub fn coeffs(&self, e: usize) -> Vec<usize> {
        digits(e, self.p, self.n)
    }

    /// Element from a coefficient vector of length at most n; entries are
    /// reduced mod p.
    pub fn from_coeffs(&self, coeffs: &[usize]) -> Result<usize, SkewError> {
        if coeffs.len() > self.n {
            return Err(SkewError::Parse {
                msg: format!(
                    "field element needs at most {} coordinates, got {}",
                    self.n,
                    coeffs.len()
                ),
            });
        }
        let mut padded = vec![0usize; self.n];
        for (i, &c) in coeffs.iter().enumerate() {
            padded[i] = c % self.p;
        }
        Ok(undigits(&padded, self.p))
    }

    /// Human-readable form: plain integers for prime fields, polynomials
    /// in t otherwise (e.g. "t^2 + 2t + 1").
    pub fn display(&self, e: usize) -> String {
        if self.n == 1 {
            return e.to_string();
        }
        let ds = self.coeffs(e);
        let mut terms: Vec<String> = Vec::new();
        for i in (0..self.n).rev() {
            let c = ds[i];
            if c == 0 {
                continue;
            }
            let t = match i {
                0 => c.to_string(),
                1 if c == 1 => "t".to_string(),
                1 => format!("{c}t"),
                _ if c == 1 => format!("t^{i}"),
                _ => format!("{c}t^{i}"),
            };
            terms.push(t);
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }

    /// Checks field laws: exhaustively for q ≤ 81, by deterministic sample
    /// above, plus automorphism laws for the Frobenius table.
    fn verify_laws(&self) -> Result<(), SkewError> {
        let q = self.q;
        let bad = |law: &str| {
            Err(SkewError::BadField {
                msg: format!("field law failed: {law}"),
            })
        };
        for a in 0..q {
            if self.add(a, 0) != a || self.mul(a, 1) != a || self.add(a, self.neg(a)) != 0 {
                return bad("identity/negation");
            }
            if a != 0 && self.mul(a, self.inv(a)) != 1 {
                return bad("inverses");
            }
            let fr = self.frobenius_pow(1, a);
            if self.n > 1 && fr != self.pow(a, self.p as u64) {
                return bad("frobenius power");
            }
            if a < self.p && fr != a {
                return bad("frobenius fixes prime subfield");
            }
        }
        let check = |a: usize, b: usize, c: usize| -> Result<(), SkewError> {
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return bad("associativity");
            }
            if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                return bad("distributivity");
            }
            if self.mul(a, b) != self.mul(b, a) {
                return bad("commutativity");
            }
            if self.frobenius_pow(1, self.mul(a, b))
                != self.mul(self.frobenius_pow(1, a), self.frobenius_pow(1, b))
                || self.frobenius_pow(1, self.add(a, b))
                    != self.add(self.frobenius_pow(1, a), self.frobenius_pow(1, b))
            {
                return bad("frobenius is a homomorphism");
            }
            Ok(())
        };
        if q <= EXHAUSTIVE_FIELD_LIMIT {
            for a in 0..q {
                for b in 0..q {
                    for c in 0..q {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = DetRng::new(q as u64);
            for _ in 0..SAMPLED_FIELD_TRIPLES {
                check(rng.below(q), rng.below(q), rng.below(q))?;
            }
        }
        Ok(())
    }
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..p).all(|d| d * d > p || p % d != 0)
}

fn digits(mut e: usize, p: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0usize; n];
    for slot in out.iter_mut() {
        *slot = e % p;
        e /= p;
    }
    out
}

fn undigits(ds: &[usize], p: usize) -> usize {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Schoolbook product of coefficient vectors followed by reduction modulo
/// the monic defining polynomial; returns the element index.
fn poly_mul_mod(a: &[usize], b: &[usize], modulus: &[usize], p: usize) -> usize {
    let n = modulus.len() - 1;
    let mut prod = vec![0usize; 2 * n];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai * bj) % p;
        }
    }
    for d in (n..2 * n).rev() {
        let c = prod[d];
        if c == 0 {
            continue;
        }
        prod[d] = 0;
        for (k, &mk) in modulus.iter().take(n).enumerate() {
            let idx = d - n + k;
            prod[idx] = (prod[idx] + c * (p - mk)) % p;
        }
    }
    undigits(&prod[..n], p)
}

/// e^p computed through a finished multiplication table.
fn pow_table(mul: &[u16], q: usize, e: usize, p: usize) -> u16 {
    let mut acc = 1usize;
    for _ in 0..p {
        acc = mul[acc * q + e] as usize;
    }
    acc as u16
}

/// The lexicographically smallest monic irreducible of degree n over F_p,
/// comparing coefficient tuples (c0, …, c_{n-1}) left to right. For
/// n ≤ 3, irreducibility is equivalent to having no root in F_p.
fn smallest_irreducible(p: usize, n: usize) -> Vec<usize> {
    if n == 1 {
        return vec![0, 1];
    }
    for m in 0..p.pow(n as u32) {
        // Decode m so that ascending m is ascending (c0, c1, …) lex order.
        let mut coeffs = vec![0usize; n + 1];
        coeffs[n] = 1;
        let mut rest = m;
        for i in (0..n).rev() {
            coeffs[i] = rest % p;
            rest /= p;
        }
        let has_root = (0..p).any(|r| {
            let mut acc = 0usize;
            for &c in coeffs.iter().rev() {
                acc = (acc * r + c) % p;
            }
            acc == 0
        });
        if !has_root {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials of degree {n} exist over F_{p}")
}

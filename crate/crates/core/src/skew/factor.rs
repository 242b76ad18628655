//! Factorizations up to unit insertion, and their equivalence with chains
//! of principal right ideals.
//!
//! Inserting a unit ε between two factors — replacing (…, xᵢ, xᵢ₊₁, …) by
//! (…, xᵢ·ε, ε⁻¹·xᵢ₊₁, …) — changes the factor list but not the chain of
//! right ideals generated by the partial products. Since the units here
//! are exactly the nonzero constants, every equivalence class contains
//! exactly one all-monic representative, which is the canonical form used
//! throughout. The chain of monic partial products and the canonical
//! factor list determine each other by exact left division, which is the
//! concrete content of the factorization↔chain correspondence.

use std::collections::HashMap;

use crate::skew::poly::{monic_right_divisors, SkewPoly};
use crate::skew::SkewError;

/// A factorization of `base` into monic factors of degree ≥ 1, recorded
/// together with the constant ε such that base = (product of factors)·ε.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    base: SkewPoly,
    factors: Vec<SkewPoly>,
    leading_unit: usize,
}

impl Factorization {
    /// Wraps an already-monic factor list after validating it multiplies
    /// back to `base` up to the recorded constant.
    pub fn new(base: SkewPoly, factors: Vec<SkewPoly>) -> Result<Factorization, SkewError> {
        let ring = base.ring().clone();
        if factors.is_empty() {
            return Err(SkewError::PreconditionFailed {
                msg: "factorization needs at least one factor".to_string(),
            });
        }
        for f in &factors {
            if !f.is_monic() || f.degree().unwrap_or(0) == 0 {
                return Err(SkewError::PreconditionFailed {
                    msg: format!("factor {} is not monic of degree >= 1", f.display()),
                });
            }
        }
        let mut product = ring.one();
        for f in &factors {
            product = product.mul(f);
        }
        // base = product·ε forces σ^deg(ε) to be the leading coefficient.
        let deg = base.degree().ok_or_else(|| SkewError::PreconditionFailed {
            msg: "cannot factor the zero polynomial".to_string(),
        })?;
        let leading_unit = ring.untwist(deg, base.leading_coeff());
        if product.mul_const_right(leading_unit) != base {
            return Err(SkewError::NotDivisible {
                num: base.display(),
                den: product.display(),
            });
        }
        Ok(Factorization {
            base,
            factors,
            leading_unit,
        })
    }

    /// Canonicalizes an arbitrary factor sequence (nonzero, non-unit, not
    /// necessarily monic) whose product is `base` up to a constant: the
    /// partial products are normalized to monic generators of their right
    /// ideals, and the canonical factors recovered by exact left division.
    /// This is the identity on all-monic sequences.
    pub fn canonical(base: SkewPoly, raw: &[SkewPoly]) -> Result<Factorization, SkewError> {
        let ring = base.ring().clone();
        for f in raw {
            if f.degree().unwrap_or(0) == 0 {
                return Err(SkewError::PreconditionFailed {
                    msg: "factors must be nonzero of degree >= 1".to_string(),
                });
            }
        }
        let mut partials = Vec::with_capacity(raw.len() + 1);
        partials.push(ring.one());
        let mut acc = ring.one();
        for f in raw {
            acc = acc.mul(f);
            partials.push(acc.monic());
        }
        let mut factors = Vec::with_capacity(raw.len());
        for w in partials.windows(2) {
            let (q, r) = w[1].left_divmod(&w[0])?;
            if !r.is_zero() {
                return Err(SkewError::NotDivisible {
                    num: w[1].display(),
                    den: w[0].display(),
                });
            }
            factors.push(q);
        }
        Factorization::new(base, factors)
    }

    pub fn base(&self) -> &SkewPoly {
        &self.base
    }

    pub fn factors(&self) -> &[SkewPoly] {
        &self.factors
    }

    /// The constant ε with base = (product of factors)·ε.
    pub fn leading_unit(&self) -> usize {
        self.leading_unit
    }

    /// Rendering like "(x + 1)(x + t)" with a trailing "*c" when ε ≠ 1.
    pub fn display(&self) -> String {
        let mut out: String = self
            .factors
            .iter()
            .map(|f| format!("({})", f.display()))
            .collect();
        if self.leading_unit != 1 {
            out.push_str(&format!(
                "*{}",
                self.base.ring().field().display(self.leading_unit)
            ));
        }
        out
    }

    /// Sort key giving a deterministic enumeration order: by factor count,
    /// then by the factor coefficient tuples.
    fn sort_key(&self) -> (usize, Vec<Vec<usize>>) {
        (
            self.factors.len(),
            self.factors.iter().map(|f| f.coeffs().to_vec()).collect(),
        )
    }
}

/// A strictly descending chain of principal right ideals
/// R = y₀R ⊋ y₁R ⊋ … ⊋ yₙR, stored as its monic generators y₀ = 1, …, yₙ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealChain {
    generators: Vec<SkewPoly>,
}

impl IdealChain {
    /// Validates monicity, the endpoint 1, strictly increasing degrees,
    /// and each containment yᵢ₊₁ ∈ yᵢR by exact division.
    pub fn new(generators: Vec<SkewPoly>) -> Result<IdealChain, SkewError> {
        if generators.is_empty() {
            return Err(SkewError::PreconditionFailed {
                msg: "chain needs at least the generator 1".to_string(),
            });
        }
        let ring = generators[0].ring().clone();
        if generators[0] != ring.one() {
            return Err(SkewError::PreconditionFailed {
                msg: "chain must start at the full ring (generator 1)".to_string(),
            });
        }
        for g in &generators {
            if !g.is_monic() {
                return Err(SkewError::PreconditionFailed {
                    msg: format!("chain generator {} is not monic", g.display()),
                });
            }
        }
        for w in generators.windows(2) {
            if w[1].degree() <= w[0].degree() {
                return Err(SkewError::PreconditionFailed {
                    msg: "chain degrees must strictly increase".to_string(),
                });
            }
            if !w[1].in_right_ideal_of(&w[0]) {
                return Err(SkewError::NotDivisible {
                    num: w[1].display(),
                    den: w[0].display(),
                });
            }
        }
        Ok(IdealChain { generators })
    }

    /// Accepts generators that are only determined up to right unit
    /// factors (so not necessarily monic), normalizing before validation.
    pub fn from_unnormalized(generators: Vec<SkewPoly>) -> Result<IdealChain, SkewError> {
        IdealChain::new(generators.iter().map(|g| g.monic()).collect())
    }

    /// Monic generators y₀ = 1, y₁, …, yₙ in order of increasing degree.
    pub fn generators(&self) -> &[SkewPoly] {
        &self.generators
    }

    /// Number of strict inclusions, i.e. the factorization length.
    pub fn length(&self) -> usize {
        self.generators.len() - 1
    }
}

/// The chain of monic partial products y_i = x_1·…·x_i of a factorization.
pub fn chain_from_factorization(f: &Factorization) -> IdealChain {
    let ring = f.base().ring().clone();
    let mut generators = Vec::with_capacity(f.factors().len() + 1);
    let mut acc = ring.one();
    generators.push(acc.clone());
    for x in f.factors() {
        acc = acc.mul(x);
        generators.push(acc.clone());
    }
    IdealChain::new(generators).expect("partial products of monic factors form a valid chain")
}

/// Recovers the factor list from a chain by exact left division of
/// consecutive generators; the result is automatically monic. The base of
/// the returned factorization is the chain's last generator.
pub fn factorization_from_chain(c: &IdealChain) -> Result<Factorization, SkewError> {
    if c.length() == 0 {
        return Err(SkewError::PreconditionFailed {
            msg: "chain of length zero has no factorization".to_string(),
        });
    }
    let mut factors = Vec::with_capacity(c.length());
    for w in c.generators().windows(2) {
        let (q, r) = w[1].left_divmod(&w[0])?;
        if !r.is_zero() {
            return Err(SkewError::NotDivisible {
                num: w[1].display(),
                den: w[0].display(),
            });
        }
        factors.push(q);
    }
    Factorization::new(c.generators().last().unwrap().clone(), factors)
}

/// All factorizations of f up to unit insertion, each as its canonical
/// all-monic representative. Factors have degree ≥ 1 but need not be
/// irreducible, so every way of cutting f into at least one piece appears.
/// Enumeration peels monic right-hand factors recursively (memoized on
/// the remaining left quotient); output order is deterministic.
pub fn enumerate_factorizations(
    f: &SkewPoly,
    cap: usize,
) -> Result<Vec<Factorization>, SkewError> {
    if f.degree().unwrap_or(0) == 0 {
        return Err(SkewError::PreconditionFailed {
            msg: "factorization enumeration needs degree >= 1".to_string(),
        });
    }
    let monic = f.monic();
    let mut memo: HashMap<Vec<usize>, Vec<Vec<SkewPoly>>> = HashMap::new();
    let seqs = peel(&monic, cap, &mut memo)?;
    let mut out: Vec<Factorization> = seqs
        .into_iter()
        .map(|factors| Factorization::new(f.clone(), factors))
        .collect::<Result<_, _>>()?;
    out.sort_by(|x, y| x.sort_key().cmp(&y.sort_key()));
    Ok(out)
}

/// All monic factor sequences with product g (monic); the empty sequence
/// for a constant.
fn peel(
    g: &SkewPoly,
    cap: usize,
    memo: &mut HashMap<Vec<usize>, Vec<Vec<SkewPoly>>>,
) -> Result<Vec<Vec<SkewPoly>>, SkewError> {
    let deg = g.degree().expect("peel only sees nonzero polynomials");
    if deg == 0 {
        return Ok(vec![Vec::new()]);
    }
    if let Some(hit) = memo.get(g.coeffs()) {
        return Ok(hit.clone());
    }
    let mut seqs = Vec::new();
    for d in 1..=deg {
        for last in monic_right_divisors(g, d, cap)? {
            let (quot, rem) = g.right_divmod(&last)?;
            debug_assert!(rem.is_zero() && quot.is_monic());
            for mut seq in peel(&quot, cap, memo)? {
                seq.push(last.clone());
                seqs.push(seq);
            }
        }
    }
    memo.insert(g.coeffs().to_vec(), seqs.clone());
    Ok(seqs)
}

/// The factorizations of f whose factors are all irreducible — the
/// maximal chains among all splittings.
pub fn maximal_factorizations(
    f: &SkewPoly,
    cap: usize,
) -> Result<Vec<Factorization>, SkewError> {
    let all = enumerate_factorizations(f, cap)?;
    let mut out = Vec::new();
    for fac in all {
        let mut all_irreducible = true;
        for factor in fac.factors() {
            if !crate::skew::poly::is_irreducible(factor, cap)? {
                all_irreducible = false;
                break;
            }
        }
        if all_irreducible {
            out.push(fac);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skew::field::GaloisField;
    use crate::skew::poly::SkewRing;

    const CAP: usize = 1 << 20;

    fn gf4_ring() -> SkewRing {
        SkewRing::new(GaloisField::new(2, 2).unwrap(), 1)
    }

    fn gf4_commutative() -> SkewRing {
        SkewRing::new(GaloisField::new(2, 2).unwrap(), 0)
    }

    fn x2_minus_1(ring: &SkewRing) -> SkewPoly {
        let f = ring.field();
        ring.poly(vec![f.neg(1), 0, 1])
    }

    #[test]
    fn x_squared_has_one_splitting_into_linears() {
        let ring = gf4_ring();
        let x2 = ring.x().mul(&ring.x());
        let all = enumerate_factorizations(&x2, CAP).unwrap();
        // One single-factor class and one two-factor class (x)(x).
        assert_eq!(all.len(), 2);
        let pairs: Vec<&Factorization> =
            all.iter().filter(|f| f.factors().len() == 2).collect();
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].factors(), &[ring.x(), ring.x()]);
    }

    #[test]
    fn x2_minus_1_has_three_splittings_but_commutatively_one() {
        // Oracle for the count: the degree-1 right divisor scan found the
        // three cube roots of unity; each extends uniquely to a pair.
        let ring = gf4_ring();
        let a = x2_minus_1(&ring);
        let all = enumerate_factorizations(&a, CAP).unwrap();
        let pairs: Vec<&Factorization> =
            all.iter().filter(|f| f.factors().len() == 2).collect();
        assert_eq!(pairs.len(), 3);
        // Each pair is (x + c²)(x + c) with c running over the nonzero
        // constants: verify by re-multiplying and reading the factors.
        let f = ring.field();
        for fac in &pairs {
            let c = fac.factors()[1].constant_coeff();
            let c_sq = f.mul(c, c);
            assert_eq!(fac.factors()[0].constant_coeff(), c_sq);
        }
        // The commutative twin has only (x+1)(x+1).
        let cring = gf4_commutative();
        let ca = x2_minus_1(&cring);
        let call = enumerate_factorizations(&ca, CAP).unwrap();
        let cpairs: Vec<&Factorization> =
            call.iter().filter(|f| f.factors().len() == 2).collect();
        assert_eq!(cpairs.len(), 1);
        assert_eq!(
            cpairs[0].factors(),
            &[cring.poly(vec![1, 1]), cring.poly(vec![1, 1])]
        );
    }

    #[test]
    fn linear_polynomial_has_exactly_its_trivial_class() {
        let ring = gf4_ring();
        let a = ring.poly(vec![2, 1]);
        let all = enumerate_factorizations(&a, CAP).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].factors(), &[a.clone()]);
        assert!(enumerate_factorizations(&ring.one(), CAP).is_err());
    }

    #[test]
    fn non_monic_base_records_its_unit() {
        let ring = gf4_ring();
        let t = 2usize;
        let a = x2_minus_1(&ring).mul_const_right(t);
        let all = enumerate_factorizations(&a, CAP).unwrap();
        for fac in &all {
            // Product of factors times ε reproduces the original base.
            let mut prod = ring.one();
            for f in fac.factors() {
                prod = prod.mul(f);
            }
            assert_eq!(prod.mul_const_right(fac.leading_unit()), a);
            assert_ne!(fac.leading_unit(), 1);
        }
        // Same classes as for the monic normalization.
        let monic_all = enumerate_factorizations(&x2_minus_1(&ring), CAP).unwrap();
        assert_eq!(all.len(), monic_all.len());
    }

    #[test]
    fn chain_round_trip_is_identity() {
        let ring = gf4_ring();
        for base in [x2_minus_1(&ring), ring.x().mul(&ring.x())] {
            for fac in enumerate_factorizations(&base, CAP).unwrap() {
                let chain = chain_from_factorization(&fac);
                assert_eq!(chain.length(), fac.factors().len());
                let back = factorization_from_chain(&chain).unwrap();
                assert_eq!(back.factors(), fac.factors());
                // And chains round-trip through factorizations too.
                assert_eq!(chain_from_factorization(&back), chain);
            }
        }
    }

    #[test]
    fn trivial_chains() {
        let ring = gf4_ring();
        let x = ring.x();
        let x2 = x.mul(&x);
        let chain = IdealChain::new(vec![ring.one(), x.clone(), x2.clone()]).unwrap();
        let fac = factorization_from_chain(&chain).unwrap();
        assert_eq!(fac.factors(), &[x.clone(), x.clone()]);
        let single = IdealChain::new(vec![ring.one(), x2.clone()]).unwrap();
        assert_eq!(
            factorization_from_chain(&single).unwrap().factors(),
            &[x2.clone()]
        );
    }

    #[test]
    fn expanded_product_chain_for_the_unity_case() {
        // (x+1)(x+1) multiplies out to x² + 1 = x² − 1 in characteristic 2.
        let ring = gf4_ring();
        let xp1 = ring.poly(vec![1, 1]);
        let fac = Factorization::new(x2_minus_1(&ring), vec![xp1.clone(), xp1.clone()]).unwrap();
        let chain = chain_from_factorization(&fac);
        assert_eq!(
            chain.generators(),
            &[ring.one(), xp1.clone(), x2_minus_1(&ring)]
        );
    }

    #[test]
    fn invalid_chains_are_rejected() {
        let ring = gf4_ring();
        let x = ring.x();
        // Does not start at 1.
        assert!(IdealChain::new(vec![x.clone()]).is_err());
        // Degree not strictly increasing.
        assert!(IdealChain::new(vec![ring.one(), x.clone(), x.clone()]).is_err());
        // x² + 1 does not lie in xR (the constant term obstructs division).
        let bad = IdealChain::new(vec![
            ring.one(),
            x.clone(),
            x.mul(&x).add(&ring.one()),
        ]);
        assert!(matches!(bad, Err(SkewError::NotDivisible { .. })));
    }

    #[test]
    fn unit_rescaled_chains_canonicalize_identically() {
        // Rescaling chain generators by units must not change the
        // recovered factorization; deterministic sweep over unit choices.
        let ring = gf4_ring();
        let a = x2_minus_1(&ring);
        for fac in enumerate_factorizations(&a, CAP).unwrap() {
            let chain = chain_from_factorization(&fac);
            let q = ring.field().q();
            for e1 in 1..q {
                for e2 in 1..q {
                    let units = [1usize, e1, e2];
                    let rescaled: Vec<SkewPoly> = chain
                        .generators()
                        .iter()
                        .zip(units.iter())
                        .map(|(g, &u)| g.mul_const_right(u))
                        .collect();
                    let renorm = IdealChain::from_unnormalized(rescaled).unwrap();
                    assert_eq!(renorm, chain);
                    let back = factorization_from_chain(&renorm).unwrap();
                    assert_eq!(back.factors(), fac.factors());
                }
            }
        }
    }

    #[test]
    fn unit_insertion_into_factor_lists_is_invisible() {
        // Insert units between factors per the rescaling pattern
        // (x₁ε₁)(ε₁⁻¹x₂ε₂)… and canonicalize; the class must not move.
        let ring = gf4_ring();
        let f = ring.field();
        let a = x2_minus_1(&ring);
        for fac in enumerate_factorizations(&a, CAP).unwrap() {
            if fac.factors().len() < 2 {
                continue;
            }
            for eps in 1..f.q() {
                let x1 = fac.factors()[0].mul_const_right(eps);
                let x2 = ring
                    .constant(f.inv(eps))
                    .mul(&fac.factors()[1]);
                let product_check = x1.mul(&x2);
                assert_eq!(product_check, a.monic());
                let canon = Factorization::canonical(a.clone(), &[x1, x2]).unwrap();
                assert_eq!(canon.factors(), fac.factors());
            }
        }
    }

    #[test]
    fn maximal_factorizations_filter_to_irreducible_factors() {
        let ring = gf4_ring();
        let a = x2_minus_1(&ring);
        let maximal = maximal_factorizations(&a, CAP).unwrap();
        assert_eq!(maximal.len(), 3);
        for fac in &maximal {
            assert_eq!(fac.factors().len(), 2);
        }
        let x2 = ring.x().mul(&ring.x());
        assert_eq!(maximal_factorizations(&x2, CAP).unwrap().len(), 1);
    }
}

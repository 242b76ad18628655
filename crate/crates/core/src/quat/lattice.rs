//! Full-rank sublattices of the order, in canonical Hermite form.
//!
//! A lattice is stored as four basis rows (order coordinates) in the unique
//! row Hermite normal form: upper triangular, positive diagonal, and every
//! entry above a pivot reduced into [0, pivot). Uniqueness turns lattice
//! equality — in particular the principality test gR = L — into plain array
//! comparison. The index [R : L] is the product of the pivots.

use super::context::{OrderContext, OrderElement};
use super::QuatError;
use std::fmt;

/// Largest norm accepted by [`OrderLattice::elements_of_norm`].
pub const MAX_NORM: i64 = 10_000;

/// A full-rank sublattice of the order, canonical basis rows plus cached
/// index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderLattice {
    rows: [[i64; 4]; 4],
    index: i64,
}

/// Outcome of the principal-right-ideal search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Principality {
    /// A generator g with gR equal to the lattice; the search reports the
    /// coordinate-lexicographically smallest one.
    Principal { generator: OrderElement },
    /// Complete search found no generator.
    NotPrincipal,
}

impl Principality {
    pub fn is_principal(&self) -> bool {
        matches!(self, Principality::Principal { .. })
    }

    pub fn generator(&self) -> Option<&OrderElement> {
        match self {
            Principality::Principal { generator } => Some(generator),
            Principality::NotPrincipal => None,
        }
    }
}

impl OrderLattice {
    /// Canonicalizes a spanning set (any number of rows ≥ 4 allowed).
    pub fn from_rows(rows: &[[i64; 4]]) -> Result<Self, QuatError> {
        let wide: Vec<[i128; 4]> = rows
            .iter()
            .map(|r| [r[0] as i128, r[1] as i128, r[2] as i128, r[3] as i128])
            .collect();
        let (rows, index) = hermite_form(wide).ok_or_else(|| QuatError::PreconditionFailed {
            msg: "lattice rows do not have full rank".to_string(),
        })?;
        Ok(OrderLattice { rows, index })
    }

    /// The whole order, R itself.
    pub fn unit_lattice() -> Self {
        let mut rows = [[0i64; 4]; 4];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = 1;
        }
        OrderLattice { rows, index: 1 }
    }

    /// The scaled lattice mL.
    pub fn scaled(&self, m: i64) -> Result<Self, QuatError> {
        if m == 0 {
            return Err(QuatError::PreconditionFailed {
                msg: "scaling a lattice by zero collapses its rank".to_string(),
            });
        }
        let rows: Vec<[i64; 4]> = self
            .rows
            .iter()
            .map(|r| [m * r[0], m * r[1], m * r[2], m * r[3]])
            .collect();
        OrderLattice::from_rows(&rows)
    }

    /// The right ideal gR, spanned by g·e1, …, g·e4.
    pub fn principal_right_ideal(ctx: &OrderContext, g: &OrderElement) -> Result<Self, QuatError> {
        let rows: Vec<[i64; 4]> = (0..4)
            .map(|i| ctx.mul(g, &ctx.basis_element(i)).coords())
            .collect();
        OrderLattice::from_rows(&rows).map_err(|_| QuatError::PreconditionFailed {
            msg: format!("gR is not full rank for g = {g} (g must be nonzero)"),
        })
    }

    /// Sum of two lattices (join in the lattice of sublattices).
    pub fn sum(&self, other: &OrderLattice) -> OrderLattice {
        let mut rows: Vec<[i64; 4]> = self.rows.to_vec();
        rows.extend_from_slice(&other.rows);
        OrderLattice::from_rows(&rows).expect("sum of full-rank lattices is full rank")
    }

    pub fn rows(&self) -> &[[i64; 4]; 4] {
        &self.rows
    }

    /// [R : L], the product of the Hermite pivots.
    pub fn index(&self) -> i64 {
        self.index
    }

    /// Membership, solved by forward substitution against the triangular
    /// basis: integer coefficients exist iff every division is exact.
    pub fn contains(&self, coords: &[i64; 4]) -> bool {
        let mut rem = *coords;
        for i in 0..4 {
            let p = self.rows[i][i];
            if rem[i] % p != 0 {
                return false;
            }
            let q = rem[i] / p;
            for t in i..4 {
                rem[t] -= q * self.rows[i][t];
            }
        }
        rem == [0; 4]
    }

    pub fn contains_element(&self, x: &OrderElement) -> bool {
        self.contains(&x.coords())
    }

    pub fn contains_lattice(&self, other: &OrderLattice) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    /// Whether L·R ⊆ L. Checking the four basis multipliers on the four
    /// basis rows suffices by bilinearity of the product.
    pub fn is_right_ideal(&self, ctx: &OrderContext) -> bool {
        self.rows.iter().all(|row| {
            let x = OrderElement::new(*row);
            (0..4).all(|j| self.contains(&ctx.mul(&x, &ctx.basis_element(j)).coords()))
        })
    }

    /// All lattice elements of reduced norm exactly n, sorted by
    /// coordinates. Complete: positive definiteness confines the candidates
    /// to the box t_i² ≤ 2n·adj(A)_{ii}/det(A) (A the doubled Gram matrix),
    /// and within the box the first coordinate is solved exactly from the
    /// quadratic rather than scanned.
    pub fn elements_of_norm(
        &self,
        ctx: &OrderContext,
        n: i64,
    ) -> Result<Vec<OrderElement>, QuatError> {
        if n < 1 {
            return Err(QuatError::PreconditionFailed {
                msg: format!("norm must be positive, got {n}"),
            });
        }
        if n > MAX_NORM {
            return Err(QuatError::BoundExceeded { bound: n, cap: MAX_NORM });
        }
        let a = ctx.gram2();
        let det = ctx.gram2_det();
        let adj = ctx.gram2_adj_diag();
        let bound = |i: usize| -> i64 {
            // Largest t ≥ 0 with det·t² ≤ 2n·adj_i.
            let mut t = ((2 * n * adj[i]) / det).isqrt();
            while det * (t + 1) * (t + 1) <= 2 * n * adj[i] {
                t += 1;
            }
            while t > 0 && det * t * t > 2 * n * adj[i] {
                t -= 1;
            }
            t
        };
        let (b1, b2, b3) = (bound(1), bound(2), bound(3));
        let mut found = Vec::new();
        for c3 in -b3..=b3 {
            for c2 in -b2..=b2 {
                for c1 in -b1..=b1 {
                    let rest = [0, c1, c2, c3];
                    // 2·nrd(c) = A₀₀c₀² + 2(Σ_{j>0} A₀ⱼcⱼ)c₀ + Σ_{i,j>0} Aᵢⱼcᵢcⱼ,
                    // and A₀₀ = 2·nrd(e1) = 2, so c₀ solves a monic quadratic
                    // c₀² + L·c₀ + (K − n) = 0 with integer L and K.
                    debug_assert_eq!(a[0][0], 2);
                    let lin: i64 = (1..4).map(|j| a[0][j] * rest[j]).sum();
                    let mut k2 = 0i64;
                    for i in 1..4 {
                        for j in 1..4 {
                            k2 += a[i][j] * rest[i] * rest[j];
                        }
                    }
                    debug_assert_eq!(k2 % 2, 0, "norm form left Z with c0 = 0");
                    let k = k2 / 2;
                    let disc = lin * lin - 4 * (k - n);
                    if disc < 0 {
                        continue;
                    }
                    let s = disc.isqrt();
                    if s * s != disc {
                        continue;
                    }
                    // disc ≡ lin² (mod 4) forces s ≡ lin (mod 2).
                    debug_assert_eq!((s - lin).rem_euclid(2), 0);
                    let mut roots = vec![(-lin + s) / 2];
                    if s != 0 {
                        roots.push((-lin - s) / 2);
                    }
                    for c0 in roots {
                        let cand = [c0, c1, c2, c3];
                        let elem = OrderElement::new(cand);
                        debug_assert_eq!(ctx.nrd(&elem), n);
                        if self.contains(&cand) {
                            found.push(elem);
                        }
                    }
                }
            }
        }
        found.sort();
        found.dedup();
        Ok(found)
    }

    /// Decides whether the lattice is a principal right ideal gR, by
    /// complete search. Any generator must have nrd(g) = m where
    /// index = m² (because [R : gR] = nrd(g)²), so the candidates are
    /// exactly the lattice elements of norm m, and canonical forms make the
    /// equality test exact.
    pub fn is_principal_right_ideal(
        &self,
        ctx: &OrderContext,
    ) -> Result<Principality, QuatError> {
        if !self.is_right_ideal(ctx) {
            return Err(QuatError::PreconditionFailed {
                msg: "principality is only defined for right ideals".to_string(),
            });
        }
        let m = self.index.isqrt();
        if m * m != self.index {
            return Err(QuatError::PreconditionFailed {
                msg: format!("index {} is not a perfect square, so no generator can exist", self.index),
            });
        }
        for g in self.elements_of_norm(ctx, m)? {
            if OrderLattice::principal_right_ideal(ctx, &g)? == *self {
                return Ok(Principality::Principal { generator: g });
            }
        }
        Ok(Principality::NotPrincipal)
    }
}

impl fmt::Display for OrderLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rows=[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[{},{},{},{}]", row[0], row[1], row[2], row[3])?;
        }
        write!(f, "]")
    }
}

/// Row Hermite normal form of a spanning set: upper triangular, positive
/// pivots, entries above each pivot reduced into [0, pivot). Returns `None`
/// when the rows do not span a rank-4 lattice. Intermediate arithmetic runs
/// in i128; the reduced entries are bounded by the pivots and narrow back.
fn hermite_form(mut rows: Vec<[i128; 4]>) -> Option<([[i64; 4]; 4], i64)> {
    for col in 0..4 {
        // Euclidean elimination below the pivot row (= col, since every
        // column of a full-rank square lattice carries a pivot).
        loop {
            let piv = (col..rows.len())
                .filter(|&i| rows[i][col] != 0)
                .min_by_key(|&i| rows[i][col].abs())?;
            rows.swap(col, piv);
            let mut leftover = false;
            for i in col + 1..rows.len() {
                if rows[i][col] != 0 {
                    let q = rows[i][col] / rows[col][col];
                    for t in 0..4 {
                        rows[i][t] -= q * rows[col][t];
                    }
                    leftover |= rows[i][col] != 0;
                }
            }
            if !leftover {
                break;
            }
        }
        if rows[col][col] < 0 {
            for t in 0..4 {
                rows[col][t] = -rows[col][t];
            }
        }
        // Reduce the entries above the pivot into [0, pivot).
        for i in 0..col {
            let q = rows[i][col].div_euclid(rows[col][col]);
            if q != 0 {
                for t in 0..4 {
                    rows[i][t] -= q * rows[col][t];
                }
            }
        }
    }
    for row in rows.iter().skip(4) {
        debug_assert_eq!(*row, [0; 4], "extra rows must be eliminated");
    }
    let mut out = [[0i64; 4]; 4];
    let mut index: i128 = 1;
    for i in 0..4 {
        index *= rows[i][i];
        for t in 0..4 {
            out[i][t] = i64::try_from(rows[i][t]).ok()?;
        }
    }
    Some((out, i64::try_from(index).ok()?))
}

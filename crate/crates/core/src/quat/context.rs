//! The order itself: basis, structure constants, norm form.
//!
//! The ambient algebra is the rational quaternion algebra with i² = −1,
//! j² = −11, ij = k = −ji. The order is the Z-span of
//!
//! ```text
//!   e1 = 1,   e2 = i,   e3 = (i + j)/2,   e4 = (1 + k)/2.
//! ```
//!
//! Everything downstream works in *order coordinates* (integer vectors with
//! respect to e1..e4). The half-integer quaternion coordinates appear only
//! here, doubled so they stay integers, while the structure constants
//! e_i·e_j = Σ c^l_{ij} e_l are computed symbolically and verified to be
//! integral and associative. After that, multiplication is a bilinear table
//! lookup and never touches a denominator again.

use super::QuatError;
#[cfg(test)]
use crate::ring::DetRng;
use std::fmt;

/// i² in the ambient algebra.
const QA: i64 = -1;
/// j² in the ambient algebra.
const QB: i64 = -11;

/// Order basis in doubled quaternion coordinates (2w, 2x, 2y, 2z):
/// e1 = 1, e2 = i, e3 = (i+j)/2, e4 = (1+k)/2.
const HALF_BASIS: [[i64; 4]; 4] = [
    [2, 0, 0, 0],
    [0, 2, 0, 0],
    [0, 1, 1, 0],
    [1, 0, 0, 1],
];

/// Quaternion product on plain (w, x, y, z) vectors, extended bilinearly
/// from i² = QA, j² = QB, ij = k = −ji. The formula is scale-free: if the
/// inputs carry denominators s and t (coordinates multiplied by s resp. t),
/// the output carries denominator s·t. That lets the basis products (scale
/// 2 × scale 2 → scale 4) and the associativity check (scale 8 both ways)
/// run entirely over Z.
fn raw_mul(u: [i64; 4], v: [i64; 4]) -> [i64; 4] {
    let [w1, x1, y1, z1] = u;
    let [w2, x2, y2, z2] = v;
    [
        w1 * w2 + QA * x1 * x2 + QB * y1 * y2 - QA * QB * z1 * z2,
        w1 * x2 + x1 * w2 - QB * y1 * z2 + QB * z1 * y2,
        w1 * y2 + y1 * w2 + QA * x1 * z2 - QA * z1 * x2,
        w1 * z2 + z1 * w2 + x1 * y2 - y1 * x2,
    ]
}

/// Reduced norm times scale²: for a vector at scale s (coordinates s·w, …),
/// returns s²·nrd. At scale 2 the result is 4·nrd.
fn raw_nrd(u: [i64; 4]) -> i64 {
    let [w, x, y, z] = u;
    w * w - QA * x * x - QB * y * y + QA * QB * z * z
}

/// Doubled quaternion coordinates of an order element: Σ c_i · e_i.
pub(crate) fn order_to_half(c: [i64; 4]) -> [i64; 4] {
    let mut h = [0i64; 4];
    for (i, basis) in HALF_BASIS.iter().enumerate() {
        for (t, b) in basis.iter().enumerate() {
            h[t] += c[i] * b;
        }
    }
    h
}

/// Inverse of [`order_to_half`]: `None` when the quaternion is not in the
/// order. Solving Σ c_i e_i = q gives c3 = 2y, c4 = 2z, c2 = x − y,
/// c1 = w − z, so membership means exactly 2w ≡ 2z and 2x ≡ 2y (mod 2).
pub(crate) fn half_to_order(h: [i64; 4]) -> Option<[i64; 4]> {
    if (h[0] - h[3]) % 2 != 0 || (h[1] - h[2]) % 2 != 0 {
        return None;
    }
    Some([(h[0] - h[3]) / 2, (h[1] - h[2]) / 2, h[2], h[3]])
}

/// An element of the order, as integer coordinates over e1..e4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderElement {
    coords: [i64; 4],
}

impl OrderElement {
    pub fn new(coords: [i64; 4]) -> Self {
        OrderElement { coords }
    }

    pub fn coords(&self) -> [i64; 4] {
        self.coords
    }

    pub fn zero() -> Self {
        OrderElement::new([0; 4])
    }

    pub fn is_zero(&self) -> bool {
        self.coords == [0; 4]
    }
}

impl fmt::Display for OrderElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.coords;
        write!(f, "[{}, {}, {}, {}]", c[0], c[1], c[2], c[3])
    }
}

/// The verified order: multiplication table over the basis, plus the doubled
/// Gram matrix of the reduced norm form (used for norm-box bounds).
#[derive(Debug, Clone)]
pub struct OrderContext {
    /// table[i][j] = order coordinates of e_i · e_j.
    table: [[[i64; 4]; 4]; 4],
    /// A = polar form of nrd: A[i][j] = nrd(e_i+e_j) − nrd(e_i) − nrd(e_j),
    /// so cᵀAc = 2·nrd(c). Integer because nrd is integer on the order.
    gram2: [[i64; 4]; 4],
    /// det(A), positive by definiteness.
    gram2_det: i64,
    /// Diagonal of the adjugate of A: adj(A)_{ii} = det(A)·(A⁻¹)_{ii}.
    gram2_adj_diag: [i64; 4],
}

/// Builds the order and verifies it is one: all sixteen basis products land
/// back in the Z-span (integrality), multiplication is associative on all 64
/// basis triples (checked symbolically at a common scale, independently of
/// the table), and the norm form is positive definite.
pub fn build_order() -> Result<OrderContext, QuatError> {
    let mut table = [[[0i64; 4]; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            // Scale 2 × scale 2 = scale 4 product; order coordinates need
            // (4w − 4z)/4 and (4x − 4y)/4 integral and 4y, 4z even.
            let p = raw_mul(HALF_BASIS[i], HALF_BASIS[j]);
            let c = quarter_to_order(p).ok_or_else(|| QuatError::IntegralityViolation {
                context: format!("basis product e{}*e{} = {p:?}/4 is not in the order", i + 1, j + 1),
            })?;
            // Re-expand through the basis as a cross-check on the conversion.
            let back = order_to_half(c);
            if [back[0] * 2, back[1] * 2, back[2] * 2, back[3] * 2] != p {
                return Err(QuatError::IntegralityViolation {
                    context: format!("basis product e{}*e{} re-expansion mismatch", i + 1, j + 1),
                });
            }
            table[i][j] = c;
        }
    }

    // Associativity of the ambient multiplication on all basis triples,
    // computed symbolically at scale 8 on both sides. Bilinearity then gives
    // associativity of the table product everywhere.
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                let left = raw_mul(raw_mul(HALF_BASIS[i], HALF_BASIS[j]), HALF_BASIS[k]);
                let right = raw_mul(HALF_BASIS[i], raw_mul(HALF_BASIS[j], HALF_BASIS[k]));
                if left != right {
                    return Err(QuatError::EquivalenceViolation {
                        context: format!("(e{}*e{})*e{} differs from e{}*(e{}*e{})", i + 1, j + 1, k + 1, i + 1, j + 1, k + 1),
                    });
                }
            }
        }
    }

    // Polar form of nrd on the basis. nrd is integral on the order (it is a
    // coordinate of x·conj(x)), and so is the polar form; verify rather than
    // assume while converting from the scale-4 values.
    let mut gram2 = [[0i64; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            let mut sum = [0i64; 4];
            for t in 0..4 {
                sum[t] = HALF_BASIS[i][t] + HALF_BASIS[j][t];
            }
            let polar4 = raw_nrd(sum) - raw_nrd(HALF_BASIS[i]) - raw_nrd(HALF_BASIS[j]);
            if polar4 % 4 != 0 {
                return Err(QuatError::IntegralityViolation {
                    context: format!("polar form at (e{}, e{}) is {polar4}/4", i + 1, j + 1),
                });
            }
            gram2[i][j] = polar4 / 4;
        }
    }

    // Positive definiteness via Sylvester's criterion on leading minors.
    for k in 1..=4 {
        let minor = det_submatrix(&gram2, k);
        if minor <= 0 {
            return Err(QuatError::EquivalenceViolation {
                context: format!("norm form is not positive definite: leading {k}x{k} minor = {minor}"),
            });
        }
    }

    let gram2_det = det_submatrix(&gram2, 4);
    let mut gram2_adj_diag = [0i64; 4];
    for (i, slot) in gram2_adj_diag.iter_mut().enumerate() {
        *slot = principal_cofactor(&gram2, i);
    }

    Ok(OrderContext {
        table,
        gram2,
        gram2_det,
        gram2_adj_diag,
    })
}

/// Order coordinates from a scale-4 quaternion vector, when integral.
fn quarter_to_order(p: [i64; 4]) -> Option<[i64; 4]> {
    if (p[0] - p[3]) % 4 != 0 || (p[1] - p[2]) % 4 != 0 || p[2] % 2 != 0 || p[3] % 2 != 0 {
        return None;
    }
    Some([(p[0] - p[3]) / 4, (p[1] - p[2]) / 4, p[2] / 2, p[3] / 2])
}

/// Determinant of the leading k×k block, cofactor expansion (k ≤ 4).
fn det_submatrix(m: &[[i64; 4]; 4], k: usize) -> i64 {
    let rows: Vec<Vec<i64>> = m[..k].iter().map(|r| r[..k].to_vec()).collect();
    det_vec(&rows)
}

/// Determinant of the 3×3 minor obtained by deleting row and column `i`.
fn principal_cofactor(m: &[[i64; 4]; 4], i: usize) -> i64 {
    let rows: Vec<Vec<i64>> = (0..4)
        .filter(|&r| r != i)
        .map(|r| (0..4).filter(|&c| c != i).map(|c| m[r][c]).collect())
        .collect();
    det_vec(&rows)
}

fn det_vec(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 1 {
        return m[0][0];
    }
    let mut det = 0;
    for (j, &top) in m[0].iter().enumerate() {
        if top == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect();
        let sign = if j % 2 == 0 { 1 } else { -1 };
        det += sign * top * det_vec(&minor);
    }
    det
}

impl OrderContext {
    pub fn basis_element(&self, i: usize) -> OrderElement {
        assert!(i < 4, "basis index out of range");
        let mut c = [0i64; 4];
        c[i] = 1;
        OrderElement::new(c)
    }

    pub fn one(&self) -> OrderElement {
        self.basis_element(0)
    }

    /// Product, bilinear over the verified basis table.
    pub fn mul(&self, a: &OrderElement, b: &OrderElement) -> OrderElement {
        let (ca, cb) = (a.coords(), b.coords());
        let mut out = [0i64; 4];
        for i in 0..4 {
            if ca[i] == 0 {
                continue;
            }
            for j in 0..4 {
                if cb[j] == 0 {
                    continue;
                }
                for (slot, &t) in out.iter_mut().zip(&self.table[i][j]) {
                    *slot += ca[i] * cb[j] * t;
                }
            }
        }
        OrderElement::new(out)
    }

    pub fn add(&self, a: &OrderElement, b: &OrderElement) -> OrderElement {
        let (ca, cb) = (a.coords(), b.coords());
        OrderElement::new([ca[0] + cb[0], ca[1] + cb[1], ca[2] + cb[2], ca[3] + cb[3]])
    }

    pub fn neg(&self, a: &OrderElement) -> OrderElement {
        let c = a.coords();
        OrderElement::new([-c[0], -c[1], -c[2], -c[3]])
    }

    pub fn sub(&self, a: &OrderElement, b: &OrderElement) -> OrderElement {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, m: i64, a: &OrderElement) -> OrderElement {
        let c = a.coords();
        OrderElement::new([m * c[0], m * c[1], m * c[2], m * c[3]])
    }

    /// Quaternion conjugate; stays in the order (the order is closed under
    /// conjugation because trd(x)·1 = x + conj(x) lies in it).
    pub fn conj(&self, a: &OrderElement) -> OrderElement {
        let h = order_to_half(a.coords());
        let c = half_to_order([h[0], -h[1], -h[2], -h[3]])
            .expect("conjugate of an order element left the order");
        OrderElement::new(c)
    }

    /// Reduced norm, computed from the quaternion form (4·nrd at scale 2);
    /// always a non-negative integer, zero only at zero (definiteness).
    pub fn nrd(&self, a: &OrderElement) -> i64 {
        let n4 = raw_nrd(order_to_half(a.coords()));
        debug_assert_eq!(n4 % 4, 0, "nrd left Z on an order element");
        n4 / 4
    }

    /// Reduced trace: the scalar t with x + conj(x) = t·1.
    pub fn trd(&self, a: &OrderElement) -> i64 {
        let s = self.add(a, &self.conj(a));
        debug_assert_eq!(s.coords()[1..], [0, 0, 0], "x + conj(x) is not scalar");
        s.coords()[0]
    }

    /// Doubled Gram matrix of nrd in order coordinates: cᵀAc = 2·nrd(c).
    pub fn gram2(&self) -> &[[i64; 4]; 4] {
        &self.gram2
    }

    pub fn gram2_det(&self) -> i64 {
        self.gram2_det
    }

    /// Diagonal of adj(A); the norm-box bound is t_i² ≤ 2n·adj_ii/det(A).
    pub fn gram2_adj_diag(&self) -> &[i64; 4] {
        &self.gram2_adj_diag
    }

    /// Basis-product coordinates (e_i · e_j), exposed for the mod-p ring.
    pub fn structure_table(&self) -> &[[[i64; 4]; 4]; 4] {
        &self.table
    }

    #[cfg(test)]
    pub(crate) fn random_element(&self, rng: &mut DetRng, span: i64) -> OrderElement {
        let mut c = [0i64; 4];
        for slot in &mut c {
            *slot = rng.below(2 * span as usize + 1) as i64 - span;
        }
        OrderElement::new(c)
    }
}

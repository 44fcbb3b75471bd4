//! Dense exact linear algebra over [`FieldSpec`] fields.
//!
//! Everything here is exact: row reduction, nullspaces, inverses, the
//! characteristic polynomial (Berkowitz, division free), and Jordan block
//! sizes read off from rank sequences of `(m - μI)^k`.

mod matrix;
mod poly;
mod sparse;
mod subspace;

pub use matrix::Matrix;
pub use poly::Polynomial;
pub use sparse::SparseEchelon;
pub use subspace::Subspace;

pub(crate) use matrix::dot;

use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("characteristic polynomial does not split; irreducible part {0}")]
    DoesNotSplit(Polynomial),
}

/// Reduced row echelon form and rank.
pub fn rref(m: &Matrix) -> (Matrix, usize) {
    m.rref()
}

/// Basis of {v : m·v = 0}.
pub fn nullspace(m: &Matrix) -> Subspace {
    let field = m.field();
    let (r, pivots) = m.rref_with_pivots();
    let mut is_pivot = vec![false; m.cols()];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let vectors = (0..m.cols())
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Scalar::zero(field); m.cols()];
            v[f] = Scalar::one(field);
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -&r[(row, f)];
            }
            v
        })
        .collect();
    Subspace::span(field, m.cols(), vectors)
}

/// Monic characteristic polynomial det(tI - m).
pub fn char_poly(m: &Matrix) -> Result<Polynomial, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let field = m.field();
    let n = m.rows();
    // Berkowitz: coefficient vectors stored highest degree first.
    let mut p = vec![Scalar::one(field)];
    for k in 0..n {
        // Leading k×k block A, column c = m[0..k][k], row r = m[k][0..k].
        let a = m.submatrix(&(0..k).collect::<Vec<_>>(), &(0..k).collect::<Vec<_>>());
        let c: Vec<Scalar> = (0..k).map(|i| m[(i, k)].clone()).collect();
        let r: Vec<Scalar> = (0..k).map(|j| m[(k, j)].clone()).collect();
        let mut col = Vec::with_capacity(k + 2);
        col.push(Scalar::one(field));
        col.push(-&m[(k, k)]);
        let mut v = c;
        for _ in 0..k {
            col.push(-&dot(field, &r, &v));
            v = a.mul_vec(&v).expect("square block");
        }
        // Lower-triangular Toeplitz (k+2)×(k+1) times p.
        let next: Vec<Scalar> = (0..k + 2)
            .map(|i| {
                let mut acc = Scalar::zero(field);
                for (j, pj) in p.iter().enumerate() {
                    if i >= j && !pj.is_zero() {
                        acc = &acc + &(&col[i - j] * pj);
                    }
                }
                acc
            })
            .collect();
        p = next;
    }
    p.reverse();
    Ok(Polynomial::new(field, p))
}

/// Jordan blocks as (eigenvalue, size), grouped by eigenvalue in discovery
/// order with sizes descending. No Jordan basis is produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JordanStructure {
    pub blocks: Vec<(Scalar, usize)>,
}

impl JordanStructure {
    pub fn dim(&self) -> usize {
        self.blocks.iter().map(|(_, s)| s).sum()
    }

    /// Block sizes for one eigenvalue, descending.
    pub fn sizes_for(&self, eigenvalue: &Scalar) -> Vec<usize> {
        self.blocks
            .iter()
            .filter(|(e, _)| e == eigenvalue)
            .map(|(_, s)| *s)
            .collect()
    }
}

/// Block sizes at `mu` from the rank sequence of powers of `m - μI`:
/// the number of blocks of size ≥ k is rank((m-μI)^{k-1}) - rank((m-μI)^k).
pub fn segre_sizes(m: &Matrix, mu: &Scalar, multiplicity: usize) -> Vec<usize> {
    let n = m.rows();
    let shifted = m.shift(mu);
    let mut ranks = vec![n];
    let mut power = Matrix::identity(m.field(), n);
    for _ in 0..=multiplicity {
        power = power.mul(&shifted).expect("square");
        ranks.push(power.rank());
    }
    let at_least: Vec<usize> = (1..ranks.len()).map(|k| ranks[k - 1] - ranks[k]).collect();
    let mut sizes = Vec::new();
    for k in (1..at_least.len()).rev() {
        let exact = at_least[k - 1] - at_least.get(k).copied().unwrap_or(0);
        sizes.extend(std::iter::repeat_n(k, exact));
    }
    sizes
}

pub fn jordan_structure(m: &Matrix) -> Result<JordanStructure, LinalgError> {
    let cp = char_poly(m)?;
    let (roots, residual) = cp.split_linear_factors();
    if residual.degree() > 0 {
        return Err(LinalgError::DoesNotSplit(residual.monic()));
    }
    let mut blocks = Vec::new();
    for (mu, mult) in roots {
        for s in segre_sizes(m, &mu, mult) {
            blocks.push((mu.clone(), s));
        }
    }
    Ok(JordanStructure { blocks })
}

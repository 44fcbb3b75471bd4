use crate::scalar::{FieldSpec, Scalar};

use super::matrix::Matrix;

/// A subspace of Fⁿ, stored as the nonzero rows of a reduced row echelon
/// basis. Two subspaces are equal iff their stored bases are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::zeros(field, 0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(field, ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of the rows of `m`.
    pub fn row_space(m: &Matrix) -> Self {
        let (r, pivots) = m.rref_with_pivots();
        let keep: Vec<usize> = (0..pivots.len()).collect();
        let cols: Vec<usize> = (0..m.cols()).collect();
        Subspace {
            ambient_dim: m.cols(),
            basis: r.submatrix(&keep, &cols),
            pivots,
        }
    }

    pub fn span(field: FieldSpec, ambient_dim: usize, vectors: Vec<Vec<Scalar>>) -> Self {
        Self::row_space(&Matrix::from_row_vecs(field, ambient_dim, vectors))
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The remainder of `v` after clearing this subspace's pivot coordinates.
    /// Zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let c = out[p].clone();
            for (j, b) in self.basis.row(r).iter().enumerate() {
                if !b.is_zero() {
                    out[j] = &out[j] - &(&c * b);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        (0..self.dim()).all(|i| other.contains(self.basis.row(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut rows = self.basis_vectors();
        rows.extend(other.basis_vectors());
        Subspace::span(self.field(), self.ambient_dim, rows)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // Solve Σ aᵢuᵢ − Σ bⱼwⱼ = 0 and map the a-part back through u.
        let field = self.field();
        let (du, dw) = (self.dim(), other.dim());
        let system = Matrix::from_fn(field, self.ambient_dim, du + dw, |i, j| {
            if j < du {
                self.basis[(j, i)].clone()
            } else {
                -&other.basis[(j - du, i)]
            }
        });
        let kernel = super::nullspace(&system);
        let vectors = kernel
            .basis_vectors()
            .into_iter()
            .map(|coeffs| {
                let mut v = vec![Scalar::zero(field); self.ambient_dim];
                for (r, a) in coeffs.iter().take(du).enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for (j, b) in self.basis.row(r).iter().enumerate() {
                        v[j] = &v[j] + &(a * b);
                    }
                }
                v
            })
            .collect();
        Subspace::span(field, self.ambient_dim, vectors)
    }

    /// Basis of a complement of `sub` inside `self`: this subspace's basis
    /// reduced modulo `sub`, re-echelonized. Deterministic.
    pub fn complement_of(&self, sub: &Subspace) -> Vec<Vec<Scalar>> {
        let reduced = self.basis_vectors().iter().map(|v| sub.reduce(v)).collect();
        Subspace::span(self.field(), self.ambient_dim, reduced).basis_vectors()
    }

    /// Image under the linear map sending coordinate vectors through `m`
    /// (vectors are rows, so `v ↦ v·m`).
    pub fn image(&self, m: &Matrix) -> Subspace {
        let images = self
            .basis_vectors()
            .iter()
            .map(|v| m.transpose().mul_vec(v).expect("dimension"))
            .collect();
        Subspace::span(self.field(), m.cols(), images)
    }
}

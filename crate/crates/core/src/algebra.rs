//! Finite-dimensional algebras given by structure constants.
//!
//! The product of basis vectors `i` and `j` is `Σ_k c[i][j][k] e_k`. No
//! identity is assumed; [`Algebra::first_violation`] checks associativity
//! or either Leibniz identity on basis triples, which is exhaustive by
//! trilinearity.

use std::fmt;

use thiserror::Error;

use crate::linalg::{Matrix, SparseEchelon, Subspace};
use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("field mismatch: algebra over {expected}, value over {found}")]
    FieldMismatch {
        expected: FieldSpec,
        found: FieldSpec,
    },
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("duplicate structure constant for ({0}, {1}, {2})")]
    DuplicateEntry(usize, usize, usize),
    #[error("expected {expected} basis names, found {found}")]
    BasisNames { expected: usize, found: usize },
}

/// Which trilinear identity to test or to build cohomology for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityKind {
    /// `(x y) z = x (y z)`
    Associative,
    /// `x (y z) = (x y) z - (x z) y`: right multiplications are derivations.
    LeibnizLeft,
    /// `(x y) z = x (y z) - y (x z)`: left multiplications are derivations.
    LeibnizRight,
}

impl IdentityKind {
    pub const ALL: [IdentityKind; 3] = [
        IdentityKind::Associative,
        IdentityKind::LeibnizLeft,
        IdentityKind::LeibnizRight,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            IdentityKind::Associative => "assoc",
            IdentityKind::LeibnizLeft => "leibniz-left",
            IdentityKind::LeibnizRight => "leibniz-right",
        }
    }
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    field: FieldSpec,
    dim: usize,
    basis_names: Vec<String>,
    c: Vec<Scalar>,
}

/// `x1, …, x(n-1), z`, the layout used for extra special algebras.
pub fn standard_names(dim: usize) -> Vec<String> {
    let mut names: Vec<String> = (1..dim).map(|i| format!("x{i}")).collect();
    if dim > 0 {
        names.push("z".into());
    }
    names
}

impl Algebra {
    /// The algebra with every product zero, basis `e1..en`.
    pub fn zero(field: FieldSpec, dim: usize) -> Self {
        Algebra {
            field,
            dim,
            basis_names: (1..=dim).map(|i| format!("e{i}")).collect(),
            c: vec![Scalar::zero(field); dim * dim * dim],
        }
    }

    /// Builds an algebra from sparse `(i, j, k, coefficient)` entries; every
    /// unlisted structure constant is zero.
    pub fn from_products(
        field: FieldSpec,
        basis_names: Vec<String>,
        products: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Self, AlgebraError> {
        let dim = basis_names.len();
        let mut a = Algebra {
            field,
            dim,
            basis_names,
            c: vec![Scalar::zero(field); dim * dim * dim],
        };
        let mut seen = vec![false; dim * dim * dim];
        for (i, j, k, v) in products {
            for index in [i, j, k] {
                if index >= dim {
                    return Err(AlgebraError::IndexOutOfRange { index, dim });
                }
            }
            if v.field() != field {
                return Err(AlgebraError::FieldMismatch {
                    expected: field,
                    found: v.field(),
                });
            }
            let at = a.offset(i, j, k);
            if seen[at] {
                return Err(AlgebraError::DuplicateEntry(i, j, k));
            }
            seen[at] = true;
            a.c[at] = v;
        }
        Ok(a)
    }

    pub fn with_basis_names(mut self, names: Vec<String>) -> Result<Self, AlgebraError> {
        if names.len() != self.dim {
            return Err(AlgebraError::BasisNames {
                expected: self.dim,
                found: names.len(),
            });
        }
        self.basis_names = names;
        Ok(self)
    }

    fn offset(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[self.offset(i, j, k)]
    }

    /// Coordinates of `e_i · e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        let at = self.offset(i, j, 0);
        &self.c[at..at + self.dim]
    }

    /// Nonzero structure constants in `(i, j, k)` order.
    pub fn products(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> + '_ {
        let n = self.dim;
        self.c
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(at, v)| (at / (n * n), (at / n) % n, at % n, v))
    }

    pub fn is_zero_algebra(&self) -> bool {
        self.c.iter().all(Scalar::is_zero)
    }

    fn check_vec(&self, v: &[Scalar]) -> Result<(), AlgebraError> {
        if v.len() != self.dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        if let Some(x) = v.iter().find(|x| x.field() != self.field) {
            return Err(AlgebraError::FieldMismatch {
                expected: self.field,
                found: x.field(),
            });
        }
        Ok(())
    }

    /// Bilinear extension of the structure tensor.
    pub fn multiply(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vec<Scalar>, AlgebraError> {
        self.check_vec(u)?;
        self.check_vec(v)?;
        Ok(self.mul_unchecked(u, v))
    }

    pub(crate) fn mul_unchecked(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(self.field); self.dim];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let w = ui * vj;
                for (k, c) in self.basis_product(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out[k] = &out[k] + &(&w * c);
                    }
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(self.field); self.dim];
        v[i] = Scalar::one(self.field);
        v
    }

    /// `v · e_k`
    fn mul_right_basis(&self, v: &[Scalar], k: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(self.field); self.dim];
        for (l, vl) in v.iter().enumerate() {
            if vl.is_zero() {
                continue;
            }
            for (m, c) in self.basis_product(l, k).iter().enumerate() {
                if !c.is_zero() {
                    out[m] = &out[m] + &(vl * c);
                }
            }
        }
        out
    }

    /// `e_i · v`
    fn mul_left_basis(&self, i: usize, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(self.field); self.dim];
        for (l, vl) in v.iter().enumerate() {
            if vl.is_zero() {
                continue;
            }
            for (m, c) in self.basis_product(i, l).iter().enumerate() {
                if !c.is_zero() {
                    out[m] = &out[m] + &(vl * c);
                }
            }
        }
        out
    }

    /// First basis triple `(i, j, k)` in lexicographic order on which the
    /// identity fails, or `None` if it holds.
    pub fn first_violation(&self, kind: IdentityKind) -> Option<(usize, usize, usize)> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j);
                for k in 0..n {
                    let ij_k = self.mul_right_basis(ij, k);
                    let i_jk = self.mul_left_basis(i, self.basis_product(j, k));
                    let holds = match kind {
                        IdentityKind::Associative => ij_k == i_jk,
                        IdentityKind::LeibnizLeft => {
                            let ik_j = self.mul_right_basis(self.basis_product(i, k), j);
                            sub(&i_jk, &sub(&ij_k, &ik_j)).iter().all(Scalar::is_zero)
                        }
                        IdentityKind::LeibnizRight => {
                            let j_ik = self.mul_left_basis(j, self.basis_product(i, k));
                            sub(&ij_k, &sub(&i_jk, &j_ik)).iter().all(Scalar::is_zero)
                        }
                    };
                    if !holds {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    pub fn satisfies(&self, kind: IdentityKind) -> bool {
        self.first_violation(kind).is_none()
    }

    /// True iff every product of three basis vectors, in either bracketing,
    /// vanishes.
    pub fn triple_products_vanish(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| {
                    self.mul_right_basis(self.basis_product(i, j), k)
                        .iter()
                        .all(Scalar::is_zero)
                        && self
                            .mul_left_basis(i, self.basis_product(j, k))
                            .iter()
                            .all(Scalar::is_zero)
                })
            })
        })
    }

    /// The ideal generated by all products: the span of `e_i e_j`, closed
    /// under left and right multiplication until stable.
    pub fn derived_ideal(&self) -> Subspace {
        let n = self.dim;
        let mut rows = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                rows.push(self.basis_product(i, j).to_vec());
            }
        }
        let mut span = Subspace::span(self.field, n, rows);
        loop {
            let mut rows = span.basis_vectors();
            for v in span.basis_vectors() {
                for i in 0..n {
                    rows.push(self.mul_left_basis(i, &v));
                    rows.push(self.mul_right_basis(&v, i));
                }
            }
            let next = Subspace::span(self.field, n, rows);
            if next.dim() == span.dim() {
                return span;
            }
            span = next;
        }
    }

    /// Two-sided annihilator `{v : v e_i = e_i v = 0 for all i}`.
    pub fn center(&self) -> Subspace {
        let n = self.dim;
        let mut system = SparseEchelon::new(self.field, n);
        for i in 0..n {
            for k in 0..n {
                // (v e_i)_k and (e_i v)_k as linear forms in v.
                let right = (0..n).filter_map(|j| {
                    let c = self.coeff(j, i, k);
                    (!c.is_zero()).then(|| (j, c.clone()))
                });
                system.insert(right);
                let left = (0..n).filter_map(|j| {
                    let c = self.coeff(i, j, k);
                    (!c.is_zero()).then(|| (j, c.clone()))
                });
                system.insert(left);
            }
        }
        system.nullspace()
    }

    /// `Z(A) = A'` and `dim Z(A) = 1`.
    pub fn is_extra_special(&self) -> bool {
        let z = self.center();
        z.dim() == 1 && z == self.derived_ideal()
    }

    /// The same algebra with basis vector `perm[i]` of `self` becoming basis
    /// vector `i` of the result.
    pub fn permuted(&self, perm: &[usize]) -> Algebra {
        let n = self.dim;
        assert_eq!(perm.len(), n);
        let mut inv = vec![0; n];
        for (new, &old) in perm.iter().enumerate() {
            inv[old] = new;
        }
        let mut out = Algebra::zero(self.field, n);
        out.basis_names = perm.iter().map(|&o| self.basis_names[o].clone()).collect();
        for (i, j, k, v) in self.products() {
            let at = out.offset(inv[i], inv[j], inv[k]);
            out.c[at] = v.clone();
        }
        out
    }

    /// Structure constants after the change of basis whose new basis vectors
    /// are the rows of `p` (invertible). Vectors in the new coordinates map
    /// to old coordinates by `v ↦ v·p`.
    pub fn change_basis(&self, p: &Matrix) -> Result<Algebra, crate::linalg::LinalgError> {
        let n = self.dim;
        let p_inv = p.inverse()?;
        let rows = p.row_vecs();
        let mut out = Algebra::zero(self.field, n);
        out.basis_names = self.basis_names.clone();
        for i in 0..n {
            for j in 0..n {
                let prod = self.mul_unchecked(&rows[i], &rows[j]);
                let new_coords = p_inv.transpose().mul_vec(&prod)?;
                for (k, v) in new_coords.into_iter().enumerate() {
                    let at = out.offset(i, j, k);
                    out.c[at] = v;
                }
            }
        }
        Ok(out)
    }
}

fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

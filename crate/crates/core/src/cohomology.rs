//! Second cohomology with trivial coefficients, multipliers, covers, `Z*`,
//! capability and unicentrality.
//!
//! A 2-cochain is a bilinear map `f : A × A → F`, stored by its values
//! `f_{ij} = f(e_i, e_j)` at coordinate `i·n + j`. Cocycles are the
//! solutions of the linearized identity of the chosen theory, coboundaries
//! are `f = g ∘ μ` for linear functionals `g`, and `H² = Z² / B²` is
//! isomorphic to the multiplier. The cover is the extension of `A` by a
//! complement of `B²` in `Z²`; `Z*` is the image of its center.

use thiserror::Error;

use crate::algebra::{Algebra, IdentityKind};
use crate::linalg::{Matrix, SparseEchelon, Subspace};
use crate::scalar::Scalar;

/// The Leibniz orientation whose multipliers reproduce the known values
/// for extra special Leibniz algebras (J₁ → 1, J₂ → 4, H₂(-1) → 5).
pub const LEIBNIZ: IdentityKind = IdentityKind::LeibnizLeft;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("algebra violates the {theory} identity on basis triple {triple:?}")]
    IdentityViolated {
        theory: IdentityKind,
        triple: (usize, usize, usize),
    },
    #[error("stem condition failed: {0}")]
    StemFailure(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocycleSpace {
    pub algebra_dim: usize,
    pub theory: IdentityKind,
    pub z2: Subspace,
    pub b2: Subspace,
    pub h2_dim: usize,
}

impl CocycleSpace {
    /// Cocycles spanning the echelon completion of `B²` inside `Z²`.
    pub fn complement(&self) -> Vec<Vec<Scalar>> {
        self.z2.complement_of(&self.b2)
    }
}

fn require(a: &Algebra, theory: IdentityKind) -> Result<(), CohomologyError> {
    match a.first_violation(theory) {
        Some(triple) => Err(CohomologyError::IdentityViolated { theory, triple }),
        None => Ok(()),
    }
}

/// Pushes the cocycle condition for basis triple `(i, j, k)` as a sparse
/// row over the `n²` unknowns.
fn cocycle_row(
    a: &Algebra,
    theory: IdentityKind,
    i: usize,
    j: usize,
    k: usize,
    row: &mut Vec<(usize, Scalar)>,
) {
    let n = a.dim();
    row.clear();
    // +f(e_p e_q, e_r)
    let left = |p: usize, q: usize, r: usize, negate: bool, row: &mut Vec<(usize, Scalar)>| {
        for (l, c) in a.basis_product(p, q).iter().enumerate() {
            if !c.is_zero() {
                row.push((l * n + r, if negate { -c } else { c.clone() }));
            }
        }
    };
    // +f(e_p, e_q e_r)
    let right = |p: usize, q: usize, r: usize, negate: bool, row: &mut Vec<(usize, Scalar)>| {
        for (l, c) in a.basis_product(q, r).iter().enumerate() {
            if !c.is_zero() {
                row.push((p * n + l, if negate { -c } else { c.clone() }));
            }
        }
    };
    match theory {
        IdentityKind::Associative => {
            left(i, j, k, false, row);
            right(i, j, k, true, row);
        }
        IdentityKind::LeibnizLeft => {
            // f(x, yz) - f(xy, z) + f(xz, y)
            right(i, j, k, false, row);
            left(i, j, k, true, row);
            left(i, k, j, false, row);
        }
        IdentityKind::LeibnizRight => {
            // f(xy, z) - f(x, yz) + f(y, xz)
            left(i, j, k, false, row);
            right(i, j, k, true, row);
            right(j, i, k, false, row);
        }
    }
}

/// `Z²`, `B²` and `dim H²` with trivial coefficients for the given theory.
pub fn cocycle_space(a: &Algebra, theory: IdentityKind) -> Result<CocycleSpace, CohomologyError> {
    require(a, theory)?;
    let n = a.dim();
    let field = a.field();
    let mut system = SparseEchelon::new(field, n * n);
    let mut row = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                cocycle_row(a, theory, i, j, k, &mut row);
                if !row.is_empty() {
                    system.insert(row.drain(..));
                }
            }
        }
    }
    let z2 = system.nullspace();
    let coboundaries = (0..n)
        .map(|k| {
            let mut f = Vec::with_capacity(n * n);
            for i in 0..n {
                for j in 0..n {
                    f.push(a.coeff(i, j, k).clone());
                }
            }
            f
        })
        .collect();
    let b2 = Subspace::span(field, n * n, coboundaries);
    debug_assert!(b2.is_subspace_of(&z2));
    let h2_dim = z2.dim() - b2.dim();
    Ok(CocycleSpace {
        algebra_dim: n,
        theory,
        z2,
        b2,
        h2_dim,
    })
}

/// `dim H²(A, F)`, the dimension of the multiplier.
pub fn multiplier_dim(a: &Algebra, theory: IdentityKind) -> Result<usize, CohomologyError> {
    Ok(cocycle_space(a, theory)?.h2_dim)
}

/// A stem extension `0 → ker → total → A → 0`. The first `base_dim`
/// coordinates of `total` are those of `A`; the rest span the kernel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverExtension {
    pub total: Algebra,
    pub base_dim: usize,
    pub kernel: Subspace,
    pub cocycles: Vec<Vec<Scalar>>,
}

impl CoverExtension {
    pub fn multiplier_dim(&self) -> usize {
        self.total.dim() - self.base_dim
    }

    /// The projection onto `A` as a `(dim total) × (dim A)` matrix acting on
    /// row vectors.
    pub fn projection(&self) -> Matrix {
        let field = self.total.field();
        Matrix::from_fn(field, self.total.dim(), self.base_dim, |i, j| {
            if i == j {
                Scalar::one(field)
            } else {
                Scalar::zero(field)
            }
        })
    }

    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        v[..self.base_dim].to_vec()
    }

    /// `total / kernel` in the coordinates of `A`.
    pub fn quotient(&self) -> Algebra {
        let n = self.base_dim;
        let entries = self
            .total
            .products()
            .filter(|&(i, j, k, _)| i < n && j < n && k < n)
            .map(|(i, j, k, v)| (i, j, k, v.clone()))
            .collect::<Vec<_>>();
        Algebra::from_products(
            self.total.field(),
            self.total.basis_names()[..n].to_vec(),
            entries,
        )
        .expect("indices in range")
    }

    /// `kernel ⊆ Z(total) ∩ total'`.
    pub fn is_stem(&self) -> bool {
        let center = self.total.center();
        let derived = self.total.derived_ideal();
        self.kernel.is_subspace_of(&center) && self.kernel.is_subspace_of(&derived)
    }
}

/// The extension of `a` by the given cocycles: on `A ⊕ Fᵐ`,
/// `(u, s)(v, t) = (uv, f₁(u, v), …, f_m(u, v))`.
pub fn extension_by(
    a: &Algebra,
    cocycles: Vec<Vec<Scalar>>,
) -> Result<CoverExtension, CohomologyError> {
    let n = a.dim();
    let m = cocycles.len();
    let field = a.field();
    let mut entries: Vec<(usize, usize, usize, Scalar)> = a
        .products()
        .map(|(i, j, k, v)| (i, j, k, v.clone()))
        .collect();
    for (r, f) in cocycles.iter().enumerate() {
        for i in 0..n {
            for j in 0..n {
                let v = &f[i * n + j];
                if !v.is_zero() {
                    entries.push((i, j, n + r, v.clone()));
                }
            }
        }
    }
    let mut names = a.basis_names().to_vec();
    names.extend((1..=m).map(|r| format!("m{r}")));
    let total = Algebra::from_products(field, names, entries).expect("indices in range");
    let kernel = Subspace::span(
        field,
        n + m,
        (n..n + m).map(|i| total.basis_vector(i)).collect(),
    );
    let ext = CoverExtension {
        total,
        base_dim: n,
        kernel,
        cocycles,
    };
    if !ext.is_stem() {
        return Err(CohomologyError::StemFailure(format!(
            "kernel of dimension {m} is not inside the center and derived ideal of the extension"
        )));
    }
    Ok(ext)
}

/// The cover of an associative algebra, built from the echelon complement
/// of the coboundaries in the cocycles.
pub fn cover(a: &Algebra) -> Result<CoverExtension, CohomologyError> {
    cover_from(a, &cocycle_space(a, IdentityKind::Associative)?)
}

/// Cover built from an already computed associative cocycle space.
pub fn cover_from(a: &Algebra, space: &CocycleSpace) -> Result<CoverExtension, CohomologyError> {
    let ext = extension_by(a, space.complement())?;
    if ext.multiplier_dim() != space.h2_dim {
        return Err(CohomologyError::StemFailure(format!(
            "cover has kernel dimension {} but dim H² = {}",
            ext.multiplier_dim(),
            space.h2_dim
        )));
    }
    Ok(ext)
}

/// `Z*(A)`: the image of the cover's center in `A`.
///
/// The center of `A ⊕ Fᵐ` is `{(u, s) : u ∈ Z(A), f_l(u, ·) = f_l(·, u) = 0}`,
/// so the image is read off the cocycles directly without materializing
/// the cover.
pub fn z_star(a: &Algebra) -> Result<Subspace, CohomologyError> {
    Ok(z_star_from(
        a,
        &cocycle_space(a, IdentityKind::Associative)?,
    ))
}

/// `Z*` from an already computed associative cocycle space of `a`.
pub fn z_star_from(a: &Algebra, space: &CocycleSpace) -> Subspace {
    let cocycles = space.complement();
    let n = a.dim();
    let field = a.field();
    let center = a.center().basis_vectors();
    let mut system = SparseEchelon::new(field, center.len());
    for f in &cocycles {
        for v in 0..n {
            // f(u, e_v) and f(e_v, u) as linear forms in the center coordinates.
            let eval = |left: bool| {
                center.iter().enumerate().filter_map(move |(c, u)| {
                    let mut acc = Scalar::zero(field);
                    for (w, uw) in u.iter().enumerate() {
                        if !uw.is_zero() {
                            let idx = if left { w * n + v } else { v * n + w };
                            acc = &acc + &(uw * &f[idx]);
                        }
                    }
                    (!acc.is_zero()).then_some((c, acc))
                })
            };
            system.insert(eval(true));
            system.insert(eval(false));
        }
    }
    let coords = system.nullspace().basis_vectors();
    let vectors = coords
        .iter()
        .map(|x| {
            let mut u = vec![Scalar::zero(field); n];
            for (c, xc) in x.iter().enumerate() {
                if !xc.is_zero() {
                    for (w, cw) in center[c].iter().enumerate() {
                        u[w] = &u[w] + &(xc * cw);
                    }
                }
            }
            u
        })
        .collect();
    Subspace::span(field, n, vectors)
}

/// `Z*` computed literally as the projection of the center of a cover.
pub fn z_star_of(cover: &CoverExtension) -> Subspace {
    cover.total.center().image(&cover.projection())
}

/// `Z*(A) = 0`.
pub fn is_capable(a: &Algebra) -> Result<bool, CohomologyError> {
    Ok(z_star(a)?.is_zero())
}

/// `Z*(A) = Z(A)`.
pub fn is_unicentral(a: &Algebra) -> Result<bool, CohomologyError> {
    Ok(z_star(a)? == a.center())
}

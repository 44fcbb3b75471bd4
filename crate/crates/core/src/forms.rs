//! Bilinear forms of extra special algebras and their congruence classes.
//!
//! An extra special algebra is determined by the matrix `M` with
//! `y_i y_j = M[i][j] z` on any complement `y` of its center, and two such
//! algebras are isomorphic exactly when their forms are congruent
//! (`M ↦ PᵀMP`). Classification splits `M` into a singular part (nilpotent
//! Jordan blocks, the `J(n)` families with n ≥ 2) and an invertible regular
//! part, whose cosquare `M⁻ᵀM` has a similarity class that pins down the
//! remaining `J(1)`, `Gamma(n)` and `H(n, λ)` summands.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::algebra::{standard_names, Algebra};
use crate::catalog::{BlockDescriptor, BlockKind};
use crate::linalg::{jordan_structure, nullspace, LinalgError, Matrix, Polynomial, Subspace};
use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("algebra is not extra special")]
    NotExtraSpecial,
    #[error("form is singular")]
    Singular,
    #[error("form has a nonzero vector in its two-sided radical")]
    DegenerateVector,
    #[error("unsupported: cosquare characteristic polynomial does not split, factor {0}")]
    Unsupported(Polynomial),
    #[error("unpaired cosquare eigenvalue {eigenvalue} with block size {size}")]
    UnpairedEigenvalue { eigenvalue: Scalar, size: usize },
    #[error("congruence invariants inconsistent: {0}")]
    Inconsistent(String),
}

/// Where a form came from: the central vector and the basis indices used
/// as the complement, both in the source algebra's coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormBasis {
    pub central: Vec<Scalar>,
    pub complement: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    pub matrix: Matrix,
    pub provenance: Option<FormBasis>,
}

impl BilinearForm {
    pub fn new(matrix: Matrix) -> Self {
        assert!(matrix.is_square(), "bilinear form matrix must be square");
        BilinearForm {
            matrix,
            provenance: None,
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }
}

/// The extra special algebra `x1..xn, z` with `x_i x_j = M[i][j] z`.
pub fn algebra_of(m: &Matrix) -> Algebra {
    let n = m.rows();
    let products = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !m[(i, j)].is_zero())
        .map(|(i, j)| (i, j, n, m[(i, j)].clone()))
        .collect::<Vec<_>>();
    Algebra::from_products(m.field(), standard_names(n + 1), products).expect("indices in range")
}

/// Reads off the form of an extra special algebra. The central vector is the
/// echelon basis vector of the center (unit at its pivot `p`); the
/// complement is every standard basis vector except `e_p`.
pub fn form_of(a: &Algebra) -> Result<BilinearForm, FormError> {
    if !a.is_extra_special() {
        return Err(FormError::NotExtraSpecial);
    }
    let center = a.center();
    let p = center.pivots()[0];
    let complement: Vec<usize> = (0..a.dim()).filter(|&i| i != p).collect();
    let m = Matrix::from_fn(a.field(), complement.len(), complement.len(), |r, c| {
        a.basis_product(complement[r], complement[c])[p].clone()
    });
    Ok(BilinearForm {
        matrix: m,
        provenance: Some(FormBasis {
            central: center.basis_vectors().remove(0),
            complement,
        }),
    })
}

/// `M⁻ᵀ M`.
pub fn cosquare(f: &BilinearForm) -> Result<Matrix, FormError> {
    let inv_t = f
        .matrix
        .transpose()
        .inverse()
        .map_err(|_| FormError::Singular)?;
    Ok(inv_t.mul(&f.matrix).expect("square"))
}

/// Congruence invariants recorded at each regularization step.
#[derive(Debug, Clone, Copy)]
struct StepStats {
    dim: usize,
    radical: usize,
    two_sided: usize,
    rank: usize,
    sym_rank: usize,
}

fn stats(m: &Matrix, right: &Subspace, left: &Subspace) -> StepStats {
    StepStats {
        dim: m.rows(),
        radical: right.dim(),
        two_sided: right.intersection(left).dim(),
        rank: m.rank(),
        sym_rank: m.add(&m.transpose()).expect("square").rank(),
    }
}

/// Splits a form into an invertible regular part (up to congruence) and the
/// sizes of its singular canonical blocks, each of which is the form of a
/// `J(n)` algebra, n ≥ 2.
///
/// Each step passes to `V₁ / (V₁ ∩ (R + L))`, where `R` and `L` are the
/// right and left radicals and `V₁ = {v : f(R, v) = 0 = f(v, L)}`. The step
/// is basis free, fixes the regular part, and shrinks a singular block of
/// size m to one of size m - 4 (or removes it when m ≤ 4). Block sizes are
/// then recovered from dimensions, radical dimensions and the ranks of `M`
/// and `M + Mᵀ` along the way: a size-m singular block has rank m - 1 and
/// symmetric rank m - (m mod 2).
pub fn regularize(f: &BilinearForm) -> Result<(BilinearForm, Vec<usize>), FormError> {
    let field = f.matrix.field();
    let mut m = f.matrix.clone();
    let mut steps = Vec::new();
    loop {
        let right = nullspace(&m);
        let left = nullspace(&m.transpose());
        let st = stats(&m, &right, &left);
        if steps.is_empty() && st.two_sided > 0 {
            return Err(FormError::DegenerateVector);
        }
        steps.push(st);
        if st.radical == 0 {
            break;
        }
        let mut constraints = Vec::new();
        for r in right.basis_vectors() {
            constraints.push(m.transpose().mul_vec(&r).expect("dim"));
        }
        for l in left.basis_vectors() {
            constraints.push(m.mul_vec(&l).expect("dim"));
        }
        let v1 = nullspace(&Matrix::from_row_vecs(field, m.rows(), constraints));
        let w = v1.intersection(&right.sum(&left));
        let u = Matrix::from_row_vecs(field, m.rows(), v1.complement_of(&w));
        m = u.mul(&m).expect("dim").mul(&u.transpose()).expect("dim");
    }

    let regular = steps.last().expect("at least one step");
    let dim_b = regular.dim as i64;
    let sym_b = regular.sym_rank as i64;
    let current_sum = |s: &StepStats| s.dim as i64 - dim_b;
    let even = |s: &StepStats| (s.sym_rank as i64 - sym_b) - (s.rank as i64 - dim_b);

    let mut sizes = Vec::new();
    for t in 0..steps.len() - 1 {
        let (now, next) = (&steps[t], &steps[t + 1]);
        let count = (now.radical - next.radical) as i64;
        let size_sum = current_sum(now) - current_sum(next) - 4 * next.radical as i64;
        let evens = even(now) - even(next);
        let ones = now.two_sided as i64;
        let threes = count - ones - evens;
        let twice_fours = size_sum - ones - 3 * threes - 2 * evens;
        if threes < 0 || twice_fours < 0 || twice_fours % 2 != 0 {
            return Err(FormError::Inconsistent(format!(
                "step {t}: {count} blocks, size sum {size_sum}, {evens} even"
            )));
        }
        let fours = twice_fours / 2;
        let twos = evens - fours;
        if twos < 0 {
            return Err(FormError::Inconsistent(format!(
                "step {t}: negative count of size-2 blocks"
            )));
        }
        let base = 4 * t;
        for (size, k) in [(1, ones), (2, twos), (3, threes), (4, fours)] {
            sizes.extend(std::iter::repeat_n(base + size, k as usize));
        }
    }
    sizes.sort_unstable();

    let total: usize = sizes.iter().sum::<usize>() + regular.dim;
    let rank: usize = sizes.iter().map(|s| s - 1).sum::<usize>() + regular.dim;
    if total != steps[0].dim || rank != steps[0].rank {
        return Err(FormError::Inconsistent(format!(
            "block sizes {sizes:?} with regular dimension {} do not reproduce dim {} / rank {}",
            regular.dim, steps[0].dim, steps[0].rank
        )));
    }
    Ok((BilinearForm::new(m), sizes))
}

/// A multiset of canonical blocks, λ normalized and sorted canonically
/// (J by n, then Gamma by n, then H by (n, λ)).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockDecomposition {
    blocks: Vec<BlockDescriptor>,
}

impl BlockDecomposition {
    pub fn new(blocks: impl IntoIterator<Item = BlockDescriptor>) -> Self {
        let mut blocks: Vec<BlockDescriptor> = blocks.into_iter().map(|b| b.normalized()).collect();
        blocks.sort_by(|a, b| a.canonical_cmp(b));
        BlockDecomposition { blocks }
    }

    pub fn blocks(&self) -> &[BlockDescriptor] {
        &self.blocks
    }

    /// Multiset union.
    pub fn union(&self, other: &BlockDecomposition) -> BlockDecomposition {
        BlockDecomposition::new(self.blocks.iter().chain(&other.blocks).cloned())
    }

    /// Dimension of the central sum of the blocks.
    pub fn algebra_dim(&self) -> usize {
        self.blocks
            .iter()
            .map(BlockDescriptor::width)
            .sum::<usize>()
            + 1
    }
}

impl fmt::Display for BlockDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.blocks.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join("+"))
    }
}

/// Decomposes an extra special algebra into canonical central summands.
pub fn classify(a: &Algebra) -> Result<BlockDecomposition, FormError> {
    classify_form(&form_of(a)?)
}

pub fn classify_form(f: &BilinearForm) -> Result<BlockDecomposition, FormError> {
    let field = f.matrix.field();
    let (regular, singular) = regularize(f)?;
    let mut blocks: Vec<BlockDescriptor> = singular.into_iter().map(BlockDescriptor::j).collect();
    if regular.dim() > 0 {
        blocks.extend(classify_regular(field, &regular)?);
    }
    Ok(BlockDecomposition::new(blocks))
}

fn classify_regular(
    field: FieldSpec,
    regular: &BilinearForm,
) -> Result<Vec<BlockDescriptor>, FormError> {
    let c = cosquare(regular)?;
    let jordan = jordan_structure(&c).map_err(|e| match e {
        LinalgError::DoesNotSplit(p) => FormError::Unsupported(p),
        other => FormError::Inconsistent(other.to_string()),
    })?;

    // (eigenvalue, size) -> count, keyed by display text for a stable order.
    let mut counts: BTreeMap<(String, usize), (Scalar, usize)> = BTreeMap::new();
    for (mu, size) in jordan.blocks {
        counts.entry((mu.to_string(), size)).or_insert((mu, 0)).1 += 1;
    }

    let mut out = Vec::new();
    let keys: Vec<(String, usize)> = counts.keys().cloned().collect();
    for key in keys {
        let Some((mu, count)) = counts.remove(&key) else {
            continue;
        };
        let size = key.1;
        let gamma_eigenvalue = Scalar::from_i64(field, if size % 2 == 1 { 1 } else { -1 });
        if mu == gamma_eigenvalue {
            let d = if size == 1 {
                BlockDescriptor::j(1)
            } else {
                BlockDescriptor::gamma(size)
            };
            out.extend(std::iter::repeat_n(d, count));
            continue;
        }
        let inv = mu.inv().map_err(|_| FormError::Singular)?;
        if inv == mu {
            if count % 2 != 0 {
                return Err(FormError::UnpairedEigenvalue {
                    eigenvalue: mu,
                    size,
                });
            }
            out.extend(std::iter::repeat_n(BlockDescriptor::h(size, mu), count / 2));
            continue;
        }
        let partner = counts.remove(&(inv.to_string(), size));
        match partner {
            Some((_, c)) if c == count => {
                out.extend(std::iter::repeat_n(
                    BlockDescriptor::h(size, mu.clone()),
                    count,
                ));
            }
            _ => {
                return Err(FormError::UnpairedEigenvalue {
                    eigenvalue: mu,
                    size,
                })
            }
        }
    }
    debug_assert!(out
        .iter()
        .all(|b| b.kind != BlockKind::H || b.validate(field).is_ok()));
    Ok(out)
}

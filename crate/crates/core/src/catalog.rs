//! The canonical families of extra special algebras and the central sum.
//!
//! Each family is given by the bilinear form of its product on the
//! non-central basis vectors `x1..xm`, with every product landing in the
//! shared central vector `z`:
//!
//! * `J(1)`: `x1 x1 = z`
//! * `J(n)`, n ≥ 2: `x_i x_{i+1} = z`
//! * `Gamma(n)`, n ≥ 2: `x_i x_{n-i+1} = (-1)^{n-i} z` for all i, and
//!   `x_i x_{n-i+2} = (-1)^{n-i} z` for i ≥ 2
//! * `H(1, λ)` (the algebra H₂(λ)): `x1 x2 = z`, `x2 x1 = λ z`, λ ∉ {0, 1}
//! * `H(n, λ)`, n ≥ 2 (the algebra H₂ₙ(λ)): `x_i x_{n+i} = z`,
//!   `x_{n+i} x_i = λ z`, `x_{n+i} x_{i+1} = z`, λ ∉ {0, (-1)^{n+1}}
//!
//! λ only matters up to replacement by λ⁻¹.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::algebra::Algebra;
use crate::forms::{self, algebra_of};
use crate::linalg::Matrix;
use crate::scalar::{FieldSpec, Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("invalid block descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("summand is not extra special")]
    NotExtraSpecial,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BlockKind {
    J,
    Gamma,
    H,
}

/// One indecomposable summand. For `H`, `n` counts the pairs, so `H` with
/// `n = 1` is H₂(λ) and `n ≥ 2` is H₂ₙ(λ).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockDescriptor {
    pub kind: BlockKind,
    pub n: usize,
    pub lambda: Option<Scalar>,
}

impl BlockDescriptor {
    pub fn j(n: usize) -> Self {
        BlockDescriptor {
            kind: BlockKind::J,
            n,
            lambda: None,
        }
    }

    pub fn gamma(n: usize) -> Self {
        BlockDescriptor {
            kind: BlockKind::Gamma,
            n,
            lambda: None,
        }
    }

    pub fn h(n: usize, lambda: Scalar) -> Self {
        BlockDescriptor {
            kind: BlockKind::H,
            n,
            lambda: Some(lambda),
        }
    }

    /// Number of non-central basis vectors.
    pub fn width(&self) -> usize {
        match self.kind {
            BlockKind::H => 2 * self.n,
            _ => self.n,
        }
    }

    /// Dimension of the algebra, central vector included.
    pub fn algebra_dim(&self) -> usize {
        self.width() + 1
    }

    pub fn validate(&self, field: FieldSpec) -> Result<(), CatalogError> {
        let bad = |msg: String| Err(CatalogError::InvalidDescriptor(msg));
        match (self.kind, &self.lambda) {
            (BlockKind::J, None) if self.n >= 1 => Ok(()),
            (BlockKind::Gamma, None) if self.n >= 2 => Ok(()),
            (BlockKind::H, Some(l)) if self.n >= 1 => {
                if l.field() != field {
                    return Err(CatalogError::FieldMismatch(l.field(), field));
                }
                let forbidden = Scalar::from_i64(field, if self.n % 2 == 1 { 1 } else { -1 });
                if l.is_zero() {
                    bad(format!("{self}: lambda must be nonzero"))
                } else if *l == forbidden {
                    bad(format!("{self}: lambda must differ from {forbidden}"))
                } else {
                    Ok(())
                }
            }
            (BlockKind::J, _) => bad(format!("J needs n >= 1 and no lambda (got n = {})", self.n)),
            (BlockKind::Gamma, _) => bad(format!(
                "Gamma needs n >= 2 and no lambda (got n = {})",
                self.n
            )),
            (BlockKind::H, _) => bad("H needs n >= 1 and a lambda".into()),
        }
    }

    /// The representative of {λ, λ⁻¹} that is smaller under
    /// [`Scalar::canonical_cmp`].
    pub fn normalized(&self) -> Self {
        let mut out = self.clone();
        if let Some(l) = &self.lambda {
            if let Ok(inv) = l.inv() {
                if inv.canonical_cmp(l) == Ordering::Less {
                    out.lambda = Some(inv);
                }
            }
        }
        out
    }

    /// Equality with λ taken up to inversion.
    pub fn same_class(&self, other: &BlockDescriptor) -> bool {
        self.normalized() == other.normalized()
    }

    pub fn canonical_cmp(&self, other: &BlockDescriptor) -> Ordering {
        self.kind
            .cmp(&other.kind)
            .then(self.n.cmp(&other.n))
            .then_with(|| match (&self.lambda, &other.lambda) {
                (Some(a), Some(b)) => a.canonical_cmp(b),
                _ => Ordering::Equal,
            })
    }

    /// Parses one block in the text syntax (`j:4`, `gamma:3`, `h2:3/2`,
    /// `h2n:2:5`).
    pub fn parse(field: FieldSpec, text: &str) -> Result<Self, CatalogError> {
        let bad = || CatalogError::InvalidDescriptor(format!("cannot parse block {text:?}"));
        let parts: Vec<&str> = text.trim().split(':').map(str::trim).collect();
        let int = |s: &str| usize::from_str(s).map_err(|_| bad());
        let d = match parts.as_slice() {
            [k, n] if k.eq_ignore_ascii_case("j") => Self::j(int(n)?),
            [k, n] if k.eq_ignore_ascii_case("gamma") => Self::gamma(int(n)?),
            [k, l] if k.eq_ignore_ascii_case("h2") => Self::h(1, Scalar::parse(field, l)?),
            [k, n, l] if k.eq_ignore_ascii_case("h2n") => {
                Self::h(int(n)?, Scalar::parse(field, l)?)
            }
            _ => return Err(bad()),
        };
        d.validate(field)?;
        Ok(d)
    }

    /// Matrix of the product on `x1..xm`: `x_i x_j = M[i][j] z`.
    pub fn form(&self, field: FieldSpec) -> Result<Matrix, CatalogError> {
        self.validate(field)?;
        let n = self.n;
        let one = Scalar::one(field);
        let sign = |e: usize| Scalar::from_i64(field, if e.is_multiple_of(2) { 1 } else { -1 });
        let mut m = Matrix::zeros(field, self.width(), self.width());
        match self.kind {
            BlockKind::J if n == 1 => m[(0, 0)] = one,
            BlockKind::J => {
                for i in 0..n - 1 {
                    m[(i, i + 1)] = one.clone();
                }
            }
            BlockKind::Gamma => {
                for i in 0..n {
                    m[(i, n - 1 - i)] = sign(n - 1 - i);
                }
                for i in 1..n {
                    m[(i, n - i)] = sign(n - 1 - i);
                }
            }
            BlockKind::H => {
                let lambda = self.lambda.clone().expect("validated");
                for i in 0..n {
                    m[(i, n + i)] = one.clone();
                    m[(n + i, i)] = lambda.clone();
                }
                for i in 0..n.saturating_sub(1) {
                    m[(n + i, i + 1)] = one.clone();
                }
            }
        }
        Ok(m)
    }
}

impl fmt::Display for BlockDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.kind, &self.lambda) {
            (BlockKind::J, _) => write!(f, "j:{}", self.n),
            (BlockKind::Gamma, _) => write!(f, "gamma:{}", self.n),
            (BlockKind::H, Some(l)) if self.n == 1 => write!(f, "h2:{l}"),
            (BlockKind::H, Some(l)) => write!(f, "h2n:{}:{l}", self.n),
            (BlockKind::H, None) => write!(f, "h2n:{}:?", self.n),
        }
    }
}

/// Parses a `+`-separated list of blocks.
pub fn parse_descriptors(
    field: FieldSpec,
    text: &str,
) -> Result<Vec<BlockDescriptor>, CatalogError> {
    text.split('+')
        .map(|part| BlockDescriptor::parse(field, part))
        .collect()
}

/// The canonical algebra of one block, basis `x1..xm, z`.
pub fn make_canonical(d: &BlockDescriptor, field: FieldSpec) -> Result<Algebra, CatalogError> {
    Ok(algebra_of(&d.form(field)?))
}

/// Central sum of the canonical algebras of several blocks.
pub fn make_sum(blocks: &[BlockDescriptor], field: FieldSpec) -> Result<Algebra, CatalogError> {
    let mut form: Option<Matrix> = None;
    for d in blocks {
        let m = d.form(field)?;
        form = Some(match form {
            None => m,
            Some(acc) => acc.direct_sum(&m),
        });
    }
    let form = form.ok_or_else(|| CatalogError::InvalidDescriptor("empty block list".into()))?;
    Ok(algebra_of(&form))
}

/// Glues two extra special algebras along their centers with zero cross
/// products. The result has basis `x1..xm, z`: first the non-central
/// vectors of `a`, then those of `b`, then the shared `z`.
pub fn central_sum(a: &Algebra, b: &Algebra) -> Result<Algebra, CatalogError> {
    if a.field() != b.field() {
        return Err(CatalogError::FieldMismatch(a.field(), b.field()));
    }
    let fa = forms::form_of(a).map_err(|_| CatalogError::NotExtraSpecial)?;
    let fb = forms::form_of(b).map_err(|_| CatalogError::NotExtraSpecial)?;
    Ok(algebra_of(&fa.matrix.direct_sum(&fb.matrix)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::IdentityKind;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn s(v: i64) -> Scalar {
        Scalar::from_i64(Q, v)
    }

    fn nonzero_products(a: &Algebra) -> Vec<(usize, usize, usize, Scalar)> {
        a.products()
            .map(|(i, j, k, v)| (i, j, k, v.clone()))
            .collect()
    }

    #[test]
    fn j2_has_single_product() {
        let a = make_canonical(&BlockDescriptor::j(2), Q).unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(nonzero_products(&a), vec![(0, 1, 2, s(1))]);
    }

    #[test]
    fn gamma_tables_by_hand() {
        // Γ₂: x1x2 = -z, x2x1 = z, x2x2 = z.
        let g2 = make_canonical(&BlockDescriptor::gamma(2), Q).unwrap();
        assert_eq!(
            nonzero_products(&g2),
            vec![(0, 1, 2, s(-1)), (1, 0, 2, s(1)), (1, 1, 2, s(1))]
        );
        // Γ₃: x3x1 = z, x2x2 = -z, x1x3 = z, x3x2 = z, x2x3 = -z.
        let g3 = BlockDescriptor::gamma(3).form(Q).unwrap();
        assert_eq!(
            g3,
            Matrix::from_i64(Q, &[&[0, 0, 1], &[0, -1, -1], &[1, 1, 0]])
        );
        // Γ₄: x4x1 = z, x3x2 = -z, x2x3 = z, x1x4 = -z,
        //     x4x2 = z, x3x3 = -z, x2x4 = z.
        let g4 = BlockDescriptor::gamma(4).form(Q).unwrap();
        assert_eq!(
            g4,
            Matrix::from_i64(
                Q,
                &[
                    &[0, 0, 0, -1],
                    &[0, 0, 1, 1],
                    &[0, -1, -1, 0],
                    &[1, 1, 0, 0]
                ]
            )
        );
    }

    #[test]
    fn h_tables() {
        let h = make_canonical(&BlockDescriptor::h(1, s(3)), Q).unwrap();
        let x2 = h.basis_vector(1);
        let x1 = h.basis_vector(0);
        let mut three_z = vec![s(0); 3];
        three_z[2] = s(3);
        assert_eq!(h.multiply(&x2, &x1).unwrap(), three_z);
        let h4 = BlockDescriptor::h(2, s(5)).form(Q).unwrap();
        assert_eq!(
            h4,
            Matrix::from_i64(
                Q,
                &[&[0, 0, 1, 0], &[0, 0, 0, 1], &[5, 1, 0, 0], &[0, 5, 0, 0]]
            )
        );
    }

    #[test]
    fn descriptor_constraints() {
        assert!(matches!(
            make_canonical(&BlockDescriptor::h(1, s(1)), Q),
            Err(CatalogError::InvalidDescriptor(_))
        ));
        assert!(BlockDescriptor::h(1, s(0)).validate(Q).is_err());
        assert!(BlockDescriptor::h(2, s(-1)).validate(Q).is_err());
        assert!(BlockDescriptor::h(2, s(1)).validate(Q).is_ok());
        assert!(BlockDescriptor::h(3, s(1)).validate(Q).is_err());
        assert!(BlockDescriptor::h(1, s(-1)).validate(Q).is_ok());
        assert!(BlockDescriptor::j(0).validate(Q).is_err());
        assert!(BlockDescriptor::gamma(1).validate(Q).is_err());
    }

    #[test]
    fn every_canonical_algebra_is_extra_special() {
        let mut blocks: Vec<BlockDescriptor> = (1..=6).map(BlockDescriptor::j).collect();
        blocks.extend((2..=6).map(BlockDescriptor::gamma));
        for l in [2, 3, -1, 5] {
            blocks.push(BlockDescriptor::h(1, s(l)));
            for n in 2..=3 {
                let d = BlockDescriptor::h(n, s(l));
                if d.validate(Q).is_ok() {
                    blocks.push(d);
                }
            }
        }
        for d in blocks {
            let a = make_canonical(&d, Q).unwrap();
            assert_eq!(a.dim(), d.algebra_dim(), "{d}");
            assert!(a.is_extra_special(), "{d}");
            assert!(a.satisfies(IdentityKind::Associative), "{d}");
        }
    }

    #[test]
    fn central_sum_examples() {
        let j1 = make_canonical(&BlockDescriptor::j(1), Q).unwrap();
        let jj = central_sum(&j1, &j1).unwrap();
        assert_eq!(jj.dim(), 3);
        assert_eq!(
            nonzero_products(&jj),
            vec![(0, 0, 2, s(1)), (1, 1, 2, s(1))]
        );

        let j2 = make_canonical(&BlockDescriptor::j(2), Q).unwrap();
        let h = make_canonical(&BlockDescriptor::h(1, s(3)), Q).unwrap();
        let sum = central_sum(&j2, &h).unwrap();
        assert_eq!(sum.dim(), 5);
        assert!(sum.is_extra_special());

        let zero = Algebra::zero(Q, 2);
        assert_eq!(central_sum(&zero, &j1), Err(CatalogError::NotExtraSpecial));
    }

    #[test]
    fn descriptor_text_round_trip() {
        for text in ["j:1", "j:4", "gamma:3", "h2:3/2", "h2n:2:5"] {
            let d = BlockDescriptor::parse(Q, text).unwrap();
            assert_eq!(d.to_string(), text);
        }
        let sum = parse_descriptors(Q, "j:2+h2:3").unwrap();
        assert_eq!(
            sum,
            vec![BlockDescriptor::j(2), BlockDescriptor::h(1, s(3))]
        );
        assert!(BlockDescriptor::parse(Q, "k:2").is_err());
        assert!(BlockDescriptor::parse(Q, "h2:1").is_err());
    }

    #[test]
    fn lambda_normalization() {
        let third = Scalar::from_ratio(Q, 1, 3).unwrap();
        let a = BlockDescriptor::h(1, s(3));
        let b = BlockDescriptor::h(1, third.clone());
        assert!(a.same_class(&b));
        assert_eq!(a.normalized().lambda, Some(third));
        assert!(!a.same_class(&BlockDescriptor::h(1, s(2))));
    }
}

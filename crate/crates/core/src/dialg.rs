//! Diassociative algebras (dialgebras): two products `⊣` and `⊢` subject to
//!
//! 1. `(x ⊢ y) ⊢ z = x ⊢ (y ⊢ z)`
//! 2. `(x ⊣ y) ⊣ z = x ⊣ (y ⊣ z)`
//! 3. `(x ⊣ y) ⊢ z = x ⊢ (y ⊢ z)`
//! 4. `(x ⊣ y) ⊣ z = x ⊣ (y ⊢ z)`
//! 5. `(x ⊢ y) ⊣ z = x ⊢ (y ⊣ z)`
//!
//! Every associative algebra is a dialgebra with `⊣ = ⊢`, and every
//! dialgebra induces a Leibniz algebra through `xy = x ⊣ y − y ⊢ x`.
//!
//! No center or derived ideal is provided. Natural candidates would be
//! the joint annihilator `{z : z ⊣ a = a ⊣ z = z ⊢ a = a ⊢ z = 0}` and the
//! span of both product tables, or their counterparts in the induced
//! Leibniz algebra. These disagree in general and none is implemented.

use std::fmt;

use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError, IdentityKind};
use crate::cohomology::LEIBNIZ;
use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DialgError {
    #[error("algebra violates associativity on basis triple {0:?}")]
    NotAssociative((usize, usize, usize)),
    #[error("axiom {axiom} fails on basis triple {triple:?}")]
    NotDiassociative {
        axiom: DiassociativeAxiom,
        triple: (usize, usize, usize),
    },
    #[error("induced bracket violates the Leibniz identity on basis triple {0:?}")]
    InducedNotLeibniz((usize, usize, usize)),
    #[error("product tables disagree: {0}")]
    Mismatch(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DiassociativeAxiom {
    RightRight,
    LeftLeft,
    LeftThenRight,
    LeftIntoRight,
    RightIntoLeft,
}

impl DiassociativeAxiom {
    pub const ALL: [DiassociativeAxiom; 5] = [
        DiassociativeAxiom::RightRight,
        DiassociativeAxiom::LeftLeft,
        DiassociativeAxiom::LeftThenRight,
        DiassociativeAxiom::LeftIntoRight,
        DiassociativeAxiom::RightIntoLeft,
    ];

    /// 1-based position in the list of axioms.
    pub fn number(&self) -> usize {
        Self::ALL.iter().position(|a| a == self).unwrap() + 1
    }

    pub fn statement(&self) -> &'static str {
        match self {
            DiassociativeAxiom::RightRight => "(x⊢y)⊢z = x⊢(y⊢z)",
            DiassociativeAxiom::LeftLeft => "(x⊣y)⊣z = x⊣(y⊣z)",
            DiassociativeAxiom::LeftThenRight => "(x⊣y)⊢z = x⊢(y⊢z)",
            DiassociativeAxiom::LeftIntoRight => "(x⊣y)⊣z = x⊣(y⊢z)",
            DiassociativeAxiom::RightIntoLeft => "(x⊢y)⊣z = x⊢(y⊣z)",
        }
    }
}

impl fmt::Display for DiassociativeAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.number(), self.statement())
    }
}

/// Two structure tensors on one space: `left` is `⊣`, `right` is `⊢`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dialgebra {
    left: Algebra,
    right: Algebra,
}

impl Dialgebra {
    pub fn zero(field: FieldSpec, dim: usize) -> Self {
        Dialgebra {
            left: Algebra::zero(field, dim),
            right: Algebra::zero(field, dim),
        }
    }

    /// Builds a dialgebra from the two product tables. Basis names are
    /// taken from `left`.
    pub fn from_tensors(left: Algebra, right: Algebra) -> Result<Self, DialgError> {
        if left.field() != right.field() {
            return Err(DialgError::Mismatch(format!(
                "fields {} and {}",
                left.field(),
                right.field()
            )));
        }
        if left.dim() != right.dim() {
            return Err(DialgError::Mismatch(format!(
                "dimensions {} and {}",
                left.dim(),
                right.dim()
            )));
        }
        let right = right.with_basis_names(left.basis_names().to_vec())?;
        Ok(Dialgebra { left, right })
    }

    pub fn field(&self) -> FieldSpec {
        self.left.field()
    }

    pub fn dim(&self) -> usize {
        self.left.dim()
    }

    pub fn basis_names(&self) -> &[String] {
        self.left.basis_names()
    }

    /// The `⊣` table.
    pub fn left_tensor(&self) -> &Algebra {
        &self.left
    }

    /// The `⊢` table.
    pub fn right_tensor(&self) -> &Algebra {
        &self.right
    }

    pub fn left_mul(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vec<Scalar>, AlgebraError> {
        self.left.multiply(u, v)
    }

    pub fn right_mul(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vec<Scalar>, AlgebraError> {
        self.right.multiply(u, v)
    }

    fn axiom_holds(
        &self,
        axiom: DiassociativeAxiom,
        x: &[Scalar],
        y: &[Scalar],
        z: &[Scalar],
    ) -> bool {
        let l = |u: &[Scalar], v: &[Scalar]| self.left.mul_unchecked(u, v);
        let r = |u: &[Scalar], v: &[Scalar]| self.right.mul_unchecked(u, v);
        let (lhs, rhs) = match axiom {
            DiassociativeAxiom::RightRight => (r(&r(x, y), z), r(x, &r(y, z))),
            DiassociativeAxiom::LeftLeft => (l(&l(x, y), z), l(x, &l(y, z))),
            DiassociativeAxiom::LeftThenRight => (r(&l(x, y), z), r(x, &r(y, z))),
            DiassociativeAxiom::LeftIntoRight => (l(&l(x, y), z), l(x, &r(y, z))),
            DiassociativeAxiom::RightIntoLeft => (l(&r(x, y), z), r(x, &l(y, z))),
        };
        lhs == rhs
    }

    /// First failing axiom, scanning basis triples lexicographically and
    /// the axioms in order within each triple.
    pub fn first_violation(&self) -> Option<(DiassociativeAxiom, (usize, usize, usize))> {
        let n = self.dim();
        let basis: Vec<Vec<Scalar>> = (0..n).map(|i| self.left.basis_vector(i)).collect();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for axiom in DiassociativeAxiom::ALL {
                        if !self.axiom_holds(axiom, &basis[i], &basis[j], &basis[k]) {
                            return Some((axiom, (i, j, k)));
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_diassociative(&self) -> bool {
        self.first_violation().is_none()
    }
}

/// An associative algebra viewed as a dialgebra with `x ⊣ y = x ⊢ y = xy`.
pub fn embed_associative(a: &Algebra) -> Result<Dialgebra, DialgError> {
    if let Some(triple) = a.first_violation(IdentityKind::Associative) {
        return Err(DialgError::NotAssociative(triple));
    }
    Ok(Dialgebra {
        left: a.clone(),
        right: a.clone(),
    })
}

/// The Leibniz algebra with `xy = x ⊣ y − y ⊢ x`.
pub fn induced_leibniz(d: &Dialgebra) -> Result<Algebra, DialgError> {
    if let Some((axiom, triple)) = d.first_violation() {
        return Err(DialgError::NotDiassociative { axiom, triple });
    }
    let n = d.dim();
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = d.left.coeff(i, j, k) - d.right.coeff(j, i, k);
                if !v.is_zero() {
                    entries.push((i, j, k, v));
                }
            }
        }
    }
    let bracket = Algebra::from_products(d.field(), d.basis_names().to_vec(), entries)?;
    if let Some(triple) = bracket.first_violation(LEIBNIZ) {
        return Err(DialgError::InducedNotLeibniz(triple));
    }
    Ok(bracket)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{make_canonical, BlockDescriptor};

    const Q: FieldSpec = FieldSpec::Rationals;

    fn s(v: i64) -> Scalar {
        Scalar::from_i64(Q, v)
    }

    fn names(k: usize) -> Vec<String> {
        ["x", "y", "z", "w"][..k]
            .iter()
            .map(|v| v.to_string())
            .collect()
    }

    #[test]
    fn embedded_associative_is_diassociative() {
        let j3 = make_canonical(&BlockDescriptor::j(3), Q).unwrap();
        assert!(embed_associative(&j3).unwrap().is_diassociative());
        assert!(Dialgebra::zero(Q, 3).is_diassociative());
    }

    #[test]
    fn embed_j1() {
        let j1 = make_canonical(&BlockDescriptor::j(1), Q).unwrap();
        let d = embed_associative(&j1).unwrap();
        assert_eq!(d.left_tensor().coeff(0, 0, 1), &s(1));
        assert_eq!(d.right_tensor().coeff(0, 0, 1), &s(1));
        assert_eq!(
            embed_associative(&Algebra::zero(Q, 2)).unwrap(),
            Dialgebra::zero(Q, 2)
        );
    }

    #[test]
    fn embed_rejects_nonassociative() {
        let a = Algebra::from_products(Q, names(2), [(0, 1, 0, s(1))]).unwrap();
        assert!(matches!(
            embed_associative(&a),
            Err(DialgError::NotAssociative(_))
        ));
    }

    #[test]
    fn mixed_dialgebra_fails_an_axiom() {
        // x ⊣ y = z, y ⊢ y = x.
        let left = Algebra::from_products(Q, names(3), [(0, 1, 2, s(1))]).unwrap();
        let right = Algebra::from_products(Q, names(3), [(1, 1, 0, s(1))]).unwrap();
        let d = Dialgebra::from_tensors(left, right).unwrap();
        // (y ⊢ y) ⊣ y = x ⊣ y = z while y ⊢ (y ⊣ y) = 0; no earlier triple fails.
        assert_eq!(
            d.first_violation(),
            Some((DiassociativeAxiom::RightIntoLeft, (1, 1, 1)))
        );
        assert!(matches!(
            induced_leibniz(&d),
            Err(DialgError::NotDiassociative { .. })
        ));
    }

    #[test]
    fn induced_bracket_examples() {
        let j1 = make_canonical(&BlockDescriptor::j(1), Q).unwrap();
        assert!(induced_leibniz(&embed_associative(&j1).unwrap())
            .unwrap()
            .is_zero_algebra());
        let h = make_canonical(&BlockDescriptor::h(1, s(3)), Q).unwrap();
        let b = induced_leibniz(&embed_associative(&h).unwrap()).unwrap();
        let products: Vec<_> = b
            .products()
            .map(|(i, j, k, v)| (i, j, k, v.clone()))
            .collect();
        assert_eq!(products, vec![(0, 1, 2, s(-2)), (1, 0, 2, s(2))]);
        assert!(induced_leibniz(&Dialgebra::zero(Q, 2))
            .unwrap()
            .is_zero_algebra());
    }

    #[test]
    fn axiom_numbering() {
        assert_eq!(DiassociativeAxiom::RightRight.number(), 1);
        assert_eq!(DiassociativeAxiom::RightIntoLeft.number(), 5);
    }
}

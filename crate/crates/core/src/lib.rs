//! Exact computations for extra special associative and Leibniz algebras.
//!
//! Algebras are given by structure constants over Q or GF(p), p odd. The
//! crate computes centers and derived ideals, second cohomology with
//! trivial coefficients (hence multipliers and covers), `Z*`, capability
//! and unicentrality, and classifies extra special algebras into canonical
//! central summands through the congruence class of their bilinear form.

pub mod algebra;
pub mod catalog;
pub mod cohomology;
pub mod dialg;
pub mod format;
pub mod forms;
pub mod linalg;
pub mod scalar;
pub mod verify;

pub use algebra::{Algebra, AlgebraError, IdentityKind};
pub use catalog::{
    central_sum, make_canonical, make_sum, BlockDescriptor, BlockKind, CatalogError,
};
pub use cohomology::{
    cocycle_space, cover, is_capable, is_unicentral, multiplier_dim, z_star, CocycleSpace,
    CohomologyError, CoverExtension, LEIBNIZ,
};
pub use dialg::{embed_associative, induced_leibniz, DialgError, Dialgebra, DiassociativeAxiom};
pub use format::{parse_algebra, write_algebra, AlgebraDocument, FormatError};
pub use forms::{classify, form_of, BilinearForm, BlockDecomposition, FormError};
pub use linalg::{Matrix, Subspace};
pub use scalar::{FieldSpec, Scalar, ScalarError};
pub use verify::{verify_theorems, VerifyReport, VerifyRow};

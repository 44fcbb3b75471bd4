//! JSON documents for algebras and dialgebras.
//!
//! ```json
//! {"field": {"kind": "Q"}, "dim": 3, "basis": ["x1", "x2", "z"],
//!  "products": [[0, 1, 2, "1"]]}
//! ```
//!
//! Indices are 0-based and coefficients are scalar strings (plain JSON
//! integers are accepted too). Unlisted products are zero. A dialgebra
//! document adds `right_products` for `⊢`; `products` is then `⊣`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{standard_names, Algebra, AlgebraError};
use crate::dialg::Dialgebra;
use crate::scalar::{FieldSpec, Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid document at {location}: {message}")]
    Invalid { location: String, message: String },
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraDocument {
    Algebra(Algebra),
    Dialgebra(Dialgebra),
}

impl AlgebraDocument {
    pub fn field(&self) -> FieldSpec {
        match self {
            AlgebraDocument::Algebra(a) => a.field(),
            AlgebraDocument::Dialgebra(d) => d.field(),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            AlgebraDocument::Algebra(a) => a.dim(),
            AlgebraDocument::Dialgebra(d) => d.dim(),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "kind")]
enum FieldDoc {
    Q,
    GF { p: u64 },
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum CoeffDoc {
    Text(String),
    Int(i64),
}

type EntryDoc = (usize, usize, usize, CoeffDoc);

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Doc {
    field: FieldDoc,
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    basis: Option<Vec<String>>,
    #[serde(default)]
    products: Vec<EntryDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    right_products: Option<Vec<EntryDoc>>,
}

fn invalid(location: impl Into<String>, message: impl ToString) -> FormatError {
    FormatError::Invalid {
        location: location.into(),
        message: message.to_string(),
    }
}

fn field_of(doc: &FieldDoc) -> Result<FieldSpec, FormatError> {
    match doc {
        FieldDoc::Q => Ok(FieldSpec::Rationals),
        FieldDoc::GF { p } => FieldSpec::prime(*p).map_err(|e| match e {
            ScalarError::UnsupportedField(m) => FormatError::UnsupportedField(m),
            other => FormatError::UnsupportedField(other.to_string()),
        }),
    }
}

fn table(
    field: FieldSpec,
    names: &[String],
    entries: &[EntryDoc],
    key: &str,
) -> Result<Algebra, FormatError> {
    let dim = names.len();
    let mut parsed = Vec::with_capacity(entries.len());
    for (pos, (i, j, k, c)) in entries.iter().enumerate() {
        let location = format!("{key}[{pos}]");
        for &idx in [i, j, k] {
            if idx >= dim {
                return Err(invalid(
                    location,
                    format!("index {idx} out of range for dim {dim}"),
                ));
            }
        }
        let value = match c {
            CoeffDoc::Text(t) => Scalar::parse(field, t),
            CoeffDoc::Int(v) => Ok(Scalar::from_i64(field, *v)),
        }
        .map_err(|e| invalid(location.clone(), e))?;
        parsed.push((*i, *j, *k, value));
    }
    Algebra::from_products(field, names.to_vec(), parsed).map_err(|e| match e {
        AlgebraError::DuplicateEntry(i, j, k) => {
            invalid(key, format!("more than one entry for ({i}, {j}, {k})"))
        }
        other => invalid(key, other),
    })
}

/// Parses an algebra or dialgebra document.
pub fn parse_algebra(text: &str) -> Result<AlgebraDocument, FormatError> {
    let doc: Doc = serde_json::from_str(text).map_err(|e| FormatError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let field = field_of(&doc.field)?;
    let names = match doc.basis {
        Some(names) => {
            if names.len() != doc.dim {
                return Err(invalid(
                    "basis",
                    format!("{} names for dim {}", names.len(), doc.dim),
                ));
            }
            names
        }
        None => standard_names(doc.dim),
    };
    let left = table(field, &names, &doc.products, "products")?;
    match doc.right_products {
        None => Ok(AlgebraDocument::Algebra(left)),
        Some(entries) => {
            let right = table(field, &names, &entries, "right_products")?;
            let d =
                Dialgebra::from_tensors(left, right).map_err(|e| invalid("right_products", e))?;
            Ok(AlgebraDocument::Dialgebra(d))
        }
    }
}

fn field_doc(field: FieldSpec) -> FieldDoc {
    match field {
        FieldSpec::Rationals => FieldDoc::Q,
        FieldSpec::PrimeField(p) => FieldDoc::GF { p },
    }
}

fn entries(a: &Algebra) -> Vec<EntryDoc> {
    a.products()
        .map(|(i, j, k, v)| (i, j, k, CoeffDoc::Text(v.to_string())))
        .collect()
}

fn to_doc(doc: &AlgebraDocument) -> Doc {
    match doc {
        AlgebraDocument::Algebra(a) => Doc {
            field: field_doc(a.field()),
            dim: a.dim(),
            basis: Some(a.basis_names().to_vec()),
            products: entries(a),
            right_products: None,
        },
        AlgebraDocument::Dialgebra(d) => Doc {
            field: field_doc(d.field()),
            dim: d.dim(),
            basis: Some(d.basis_names().to_vec()),
            products: entries(d.left_tensor()),
            right_products: Some(entries(d.right_tensor())),
        },
    }
}

/// Canonical document text: nonzero entries in `(i, j, k)` order.
pub fn write_algebra(doc: &AlgebraDocument) -> String {
    serde_json::to_string(&to_doc(doc)).expect("document serializes")
}

pub fn to_json_value(doc: &AlgebraDocument) -> serde_json::Value {
    serde_json::to_value(to_doc(doc)).expect("document serializes")
}

//! Sweep over the canonical families and their pairwise central sums,
//! checking multiplier dimensions, capability, unicentrality,
//! classification round trips and the vanishing of triple products.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{Algebra, IdentityKind};
use crate::catalog::{make_sum, BlockDescriptor};
use crate::cohomology::{cocycle_space, z_star_from, LEIBNIZ};
use crate::forms::{classify, BlockDecomposition};
use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("max_n must be at least 2, got {0}")]
    MaxNTooSmall(usize),
    #[error("lambdas mix the fields {0} and {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("lambda {0} is not admissible for any block")]
    InadmissibleLambda(Scalar),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyRow {
    pub name: String,
    pub dim: usize,
    pub assoc_multiplier: Option<usize>,
    pub predicted: usize,
    pub leibniz_multiplier: Option<usize>,
    pub leibniz_predicted: usize,
    pub capable: Option<bool>,
    pub unicentral: Option<bool>,
    pub classify_ok: Option<bool>,
    pub identities_ok: Option<bool>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub field: String,
    pub max_n: usize,
    pub rows: Vec<VerifyRow>,
}

impl VerifyReport {
    pub fn failures(&self) -> impl Iterator<Item = &VerifyRow> {
        self.rows.iter().filter(|r| !r.pass)
    }

    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }
}

/// Family members of width at most `max_n`: `J_n`, `Γ_n` (n ≥ 2),
/// `H₂(λ)` and `H₂ₙ(λ)`, one representative per class of `λ` up to
/// inversion and skipping inadmissible parameters.
pub fn family_members(max_n: usize, lambdas: &[Scalar]) -> Vec<BlockDescriptor> {
    let mut out: Vec<BlockDescriptor> = (1..=max_n).map(BlockDescriptor::j).collect();
    out.extend((2..=max_n).map(BlockDescriptor::gamma));
    for n in 1..=max_n / 2 {
        for l in lambdas {
            let field = l.field();
            let d = BlockDescriptor::h(n, l.clone()).normalized();
            if d.validate(field).is_ok() && !out.iter().any(|e| e.same_class(&d)) {
                out.push(d);
            }
        }
    }
    out
}

/// Singletons for every family member followed by every unordered pair
/// (with repetition) of members.
pub fn sweep_instances(max_n: usize, lambdas: &[Scalar]) -> Vec<Vec<BlockDescriptor>> {
    let members = family_members(max_n, lambdas);
    let mut out: Vec<Vec<BlockDescriptor>> = members.iter().map(|d| vec![d.clone()]).collect();
    for i in 0..members.len() {
        for j in i..members.len() {
            out.push(vec![members[i].clone(), members[j].clone()]);
        }
    }
    out
}

fn is_single(blocks: &[BlockDescriptor], d: &BlockDescriptor) -> bool {
    blocks.len() == 1 && blocks[0].same_class(d)
}

/// `(dim − 1)² − 1`, or 1 for `J₁`.
pub fn predicted_multiplier(blocks: &[BlockDescriptor]) -> usize {
    if is_single(blocks, &BlockDescriptor::j(1)) {
        return 1;
    }
    let dim = BlockDecomposition::new(blocks.iter().cloned()).algebra_dim();
    (dim - 1) * (dim - 1) - 1
}

/// As [`predicted_multiplier`] with the Leibniz exceptions `J₂ → 4` and
/// `H₂(−1) → 5`.
pub fn predicted_leibniz_multiplier(blocks: &[BlockDescriptor], field: FieldSpec) -> usize {
    if is_single(blocks, &BlockDescriptor::j(2)) {
        return 4;
    }
    if is_single(blocks, &BlockDescriptor::h(1, Scalar::from_i64(field, -1))) {
        return 5;
    }
    predicted_multiplier(blocks)
}

fn identities_ok(a: &Algebra) -> bool {
    a.is_extra_special()
        && IdentityKind::ALL.iter().all(|&k| a.satisfies(k))
        && a.triple_products_vanish()
}

/// Evaluates one sweep row. Errors are recorded in the row.
pub fn evaluate(blocks: &[BlockDescriptor], field: FieldSpec) -> VerifyRow {
    let expected = BlockDecomposition::new(blocks.iter().cloned());
    let j1 = is_single(blocks, &BlockDescriptor::j(1));
    let mut row = VerifyRow {
        name: expected.to_string(),
        dim: expected.algebra_dim(),
        assoc_multiplier: None,
        predicted: predicted_multiplier(blocks),
        leibniz_multiplier: None,
        leibniz_predicted: predicted_leibniz_multiplier(blocks, field),
        capable: None,
        unicentral: None,
        classify_ok: None,
        identities_ok: None,
        pass: false,
        error: None,
    };
    let a = match make_sum(blocks, field) {
        Ok(a) => a,
        Err(e) => {
            row.error = Some(e.to_string());
            return row;
        }
    };
    let mut errors = Vec::new();
    row.identities_ok = Some(identities_ok(&a));
    match cocycle_space(&a, IdentityKind::Associative) {
        Ok(space) => {
            row.assoc_multiplier = Some(space.h2_dim);
            let zs = z_star_from(&a, &space);
            row.capable = Some(zs.is_zero());
            row.unicentral = Some(zs == a.center());
        }
        Err(e) => errors.push(e.to_string()),
    }
    match cocycle_space(&a, LEIBNIZ) {
        Ok(space) => row.leibniz_multiplier = Some(space.h2_dim),
        Err(e) => errors.push(e.to_string()),
    }
    match classify(&a) {
        Ok(found) => row.classify_ok = Some(found == expected),
        Err(e) => errors.push(e.to_string()),
    }
    if !errors.is_empty() {
        row.error = Some(errors.join("; "));
    }
    row.pass = row.error.is_none()
        && row.assoc_multiplier == Some(row.predicted)
        && row.leibniz_multiplier == Some(row.leibniz_predicted)
        && row.capable == Some(j1)
        && row.unicentral == Some(!j1)
        && row.classify_ok == Some(true)
        && row.identities_ok == Some(true);
    row
}

/// Runs the sweep over [`sweep_instances`] in parallel. The field is that
/// of the `λ` values, or `Q` when none are given.
pub fn verify_theorems(max_n: usize, lambdas: &[Scalar]) -> Result<VerifyReport, VerifyError> {
    if max_n < 2 {
        return Err(VerifyError::MaxNTooSmall(max_n));
    }
    let field = lambdas.first().map_or(FieldSpec::Rationals, Scalar::field);
    if let Some(l) = lambdas.iter().find(|l| l.field() != field) {
        return Err(VerifyError::FieldMismatch(field, l.field()));
    }
    if let Some(l) = lambdas.iter().find(|l| {
        (1..=max_n / 2).all(|n| BlockDescriptor::h(n, (*l).clone()).validate(field).is_err())
    }) {
        return Err(VerifyError::InadmissibleLambda(l.clone()));
    }
    let rows = sweep_instances(max_n, lambdas)
        .par_iter()
        .map(|blocks| evaluate(blocks, field))
        .collect();
    Ok(VerifyReport {
        field: field.to_string(),
        max_n,
        rows,
    })
}

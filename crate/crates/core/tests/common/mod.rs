#![allow(dead_code)]

use std::path::PathBuf;

use extraspecial::{
    parse_algebra, Algebra, AlgebraDocument, BlockDescriptor, FieldSpec, IdentityKind, Matrix,
    Scalar,
};
use rand::Rng;

pub const Q: FieldSpec = FieldSpec::Rationals;

pub fn s(v: i64) -> Scalar {
    Scalar::from_i64(Q, v)
}

pub fn fixtures() -> Vec<(String, Algebra)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    let mut paths: Vec<_> = std::fs::read_dir(&dir)
        .expect("fixture directory")
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let text = std::fs::read_to_string(&p).unwrap();
            let name = p.file_stem().unwrap().to_string_lossy().into_owned();
            match parse_algebra(&text).unwrap() {
                AlgebraDocument::Algebra(a) => (name, a),
                AlgebraDocument::Dialgebra(_) => panic!("{name}: unexpected dialgebra"),
            }
        })
        .collect()
}

/// `f(u, v)` for a cochain stored as `f[i·n + j]`.
fn eval_cochain(f: &[Scalar], n: usize, u: &[Scalar], v: &[Scalar], field: FieldSpec) -> Scalar {
    let mut acc = Scalar::zero(field);
    for i in 0..n {
        for j in 0..n {
            acc = &acc + &(&(&u[i] * &v[j]) * &f[i * n + j]);
        }
    }
    acc
}

/// `dim H²` by brute force: one dense row per basis triple obtained by
/// evaluating the linearized identity on each unit cochain in turn, and
/// coboundaries as the image of `g ↦ g ∘ μ`.
pub fn naive_h2_dim(a: &Algebra, theory: IdentityKind) -> usize {
    let n = a.dim();
    let field = a.field();
    let e: Vec<Vec<Scalar>> = (0..n).map(|i| a.basis_vector(i)).collect();
    let mul = |u: &[Scalar], v: &[Scalar]| a.multiply(u, v).unwrap();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (&e[i], &e[j], &e[k]);
                let row: Vec<Scalar> = (0..n * n)
                    .map(|u| {
                        let mut f = vec![Scalar::zero(field); n * n];
                        f[u] = Scalar::one(field);
                        let ev = |p: &[Scalar], q: &[Scalar]| eval_cochain(&f, n, p, q, field);
                        match theory {
                            IdentityKind::Associative => &ev(&mul(x, y), z) - &ev(x, &mul(y, z)),
                            IdentityKind::LeibnizLeft => {
                                &(&ev(x, &mul(y, z)) - &ev(&mul(x, y), z)) + &ev(&mul(x, z), y)
                            }
                            IdentityKind::LeibnizRight => {
                                &(&ev(&mul(x, y), z) - &ev(x, &mul(y, z))) + &ev(y, &mul(x, z))
                            }
                        }
                    })
                    .collect();
                rows.push(row);
            }
        }
    }
    let system = Matrix::from_row_vecs(field, n * n, rows);
    let z2 = n * n - system.rank();
    let cob: Vec<Vec<Scalar>> = (0..n)
        .map(|k| {
            (0..n * n)
                .map(|u| mul(&e[u / n], &e[u % n])[k].clone())
                .collect()
        })
        .collect();
    let b2 = Matrix::from_row_vecs(field, n * n, cob).rank();
    z2 - b2
}

/// `(dim − 1)² − 1`, or 1 for `J₁`; computed without the library.
pub fn theorem_prediction(blocks: &[BlockDescriptor]) -> usize {
    let width: usize = blocks.iter().map(BlockDescriptor::width).sum();
    if blocks.len() == 1 && blocks[0] == BlockDescriptor::j(1) {
        1
    } else {
        let d = width + 1;
        (d - 1) * (d - 1) - 1
    }
}

pub fn random_scalar<R: Rng>(rng: &mut R, field: FieldSpec, bound: i64) -> Scalar {
    Scalar::from_i64(field, rng.gen_range(-bound..=bound))
}

pub fn random_matrix<R: Rng>(
    rng: &mut R,
    field: FieldSpec,
    rows: usize,
    cols: usize,
    bound: i64,
) -> Matrix {
    Matrix::from_fn(field, rows, cols, |_, _| random_scalar(rng, field, bound))
}

pub fn random_invertible<R: Rng>(rng: &mut R, field: FieldSpec, n: usize) -> Matrix {
    loop {
        let m = random_matrix(rng, field, n, n, 3);
        if m.rank() == n {
            return m;
        }
    }
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        p.swap(i, rng.gen_range(0..=i));
    }
    p
}

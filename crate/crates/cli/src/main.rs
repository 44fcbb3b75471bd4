use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use extraspecial::catalog::parse_descriptors;
use extraspecial::cohomology::cocycle_space;
use extraspecial::format::to_json_value;
use extraspecial::{
    classify, cover, is_capable, is_unicentral, make_sum, parse_algebra, verify_theorems, z_star,
    Algebra, AlgebraDocument, CatalogError, CohomologyError, DialgError, Dialgebra, FieldSpec,
    FormError, FormatError, IdentityKind, Scalar, Subspace, LEIBNIZ,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "extraspecial",
    version,
    about = "Exact computations for extra special algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical algebra for a block descriptor such as `j:2+h2:3`.
    Make {
        descriptor: String,
        /// `Q` or a prime such as `GF(5)` or `5`.
        #[arg(long, default_value = "Q")]
        field: String,
    },
    /// Checks an identity on all basis triples.
    Check {
        file: String,
        #[arg(long, value_enum)]
        identity: IdentityArg,
    },
    /// Center and derived ideal dimensions and the extra special flag.
    Invariants {
        file: String,
    },
    /// Dimension of the second cohomology with trivial coefficients.
    Multiplier {
        file: String,
        #[arg(long, value_enum, default_value = "assoc")]
        theory: TheoryArg,
    },
    /// Cover of an associative algebra.
    Cover {
        file: String,
    },
    /// Image of the cover's center.
    Zstar {
        file: String,
    },
    Capable {
        file: String,
    },
    Unicentral {
        file: String,
    },
    /// Canonical block decomposition of an extra special algebra.
    Classify {
        file: String,
    },
    /// Multiplier, capability and classification sweep over the canonical families.
    VerifyTheorems {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// Comma separated scalars.
        #[arg(long, default_value = "2,3,-1,5", allow_hyphen_values = true)]
        lambdas: String,
        #[arg(long, default_value = "Q")]
        field: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum IdentityArg {
    Assoc,
    LeibnizLeft,
    LeibnizRight,
    Diassoc,
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoryArg {
    Assoc,
    Leibniz,
    LeibnizLeft,
    LeibnizRight,
}

impl TheoryArg {
    fn kind(self) -> IdentityKind {
        match self {
            TheoryArg::Assoc => IdentityKind::Associative,
            TheoryArg::Leibniz => LEIBNIZ,
            TheoryArg::LeibnizLeft => IdentityKind::LeibnizLeft,
            TheoryArg::LeibnizRight => IdentityKind::LeibnizRight,
        }
    }
}

struct Failure {
    code: u8,
    kind: &'static str,
    message: String,
}

impl Failure {
    fn input(message: impl ToString) -> Self {
        Failure {
            code: 2,
            kind: "input",
            message: message.to_string(),
        }
    }

    fn unsupported(message: impl ToString) -> Self {
        Failure {
            code: 3,
            kind: "unsupported",
            message: message.to_string(),
        }
    }

    fn internal(message: impl ToString) -> Self {
        Failure {
            code: 4,
            kind: "internal",
            message: message.to_string(),
        }
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        match e {
            FormatError::UnsupportedField(_) => Failure {
                code: 2,
                kind: "unsupported_field",
                message: e.to_string(),
            },
            _ => Failure::input(e),
        }
    }
}

impl From<CohomologyError> for Failure {
    fn from(e: CohomologyError) -> Self {
        match e {
            CohomologyError::IdentityViolated { .. } => Failure::input(e),
            CohomologyError::StemFailure(_) => Failure::internal(e),
        }
    }
}

impl From<FormError> for Failure {
    fn from(e: FormError) -> Self {
        match e {
            FormError::NotExtraSpecial | FormError::Singular | FormError::DegenerateVector => {
                Failure::input(e)
            }
            FormError::Unsupported(_) => Failure::unsupported(e),
            FormError::UnpairedEigenvalue { .. } | FormError::Inconsistent(_) => {
                Failure::internal(e)
            }
        }
    }
}

impl From<CatalogError> for Failure {
    fn from(e: CatalogError) -> Self {
        Failure::input(e)
    }
}

impl From<DialgError> for Failure {
    fn from(e: DialgError) -> Self {
        Failure::input(e)
    }
}

fn parse_field(text: &str) -> Result<FieldSpec, Failure> {
    let t = text.trim();
    if t.eq_ignore_ascii_case("q") {
        return Ok(FieldSpec::Rationals);
    }
    let digits = t
        .trim_start_matches(|c: char| c.is_ascii_alphabetic())
        .trim_start_matches('(')
        .trim_end_matches(')');
    let p: u64 = digits
        .parse()
        .map_err(|_| Failure::input(format!("cannot read field {text:?}")))?;
    FieldSpec::prime(p).map_err(|e| Failure {
        code: 2,
        kind: "unsupported_field",
        message: e.to_string(),
    })
}

fn read_document(file: &str) -> Result<AlgebraDocument, Failure> {
    let text = if file == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::input(format!("reading stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(file).map_err(|e| Failure::input(format!("reading {file}: {e}")))?
    };
    Ok(parse_algebra(&text)?)
}

fn read_algebra(file: &str) -> Result<Algebra, Failure> {
    match read_document(file)? {
        AlgebraDocument::Algebra(a) => Ok(a),
        AlgebraDocument::Dialgebra(_) => Err(Failure::input(
            "expected an algebra document without right_products",
        )),
    }
}

fn read_dialgebra(file: &str) -> Result<Dialgebra, Failure> {
    match read_document(file)? {
        AlgebraDocument::Dialgebra(d) => Ok(d),
        AlgebraDocument::Algebra(_) => Err(Failure::input(
            "diassociativity needs a document with right_products",
        )),
    }
}

fn vectors(s: &Subspace) -> Value {
    s.basis_vectors()
        .iter()
        .map(|v| v.iter().map(Scalar::to_string).collect::<Vec<_>>())
        .collect()
}

fn run(command: Command) -> Result<Value, Failure> {
    match command {
        Command::Make { descriptor, field } => {
            let field = parse_field(&field)?;
            let blocks = parse_descriptors(field, &descriptor)?;
            let a = make_sum(&blocks, field)?;
            Ok(to_json_value(&AlgebraDocument::Algebra(a)))
        }
        Command::Check { file, identity } => {
            let (name, violation, axiom) = match identity {
                IdentityArg::Diassoc => {
                    let d = read_dialgebra(&file)?;
                    match d.first_violation() {
                        Some((ax, t)) => ("diassoc", Some(t), Some(ax.number())),
                        None => ("diassoc", None, None),
                    }
                }
                other => {
                    let kind = match other {
                        IdentityArg::Assoc => IdentityKind::Associative,
                        IdentityArg::LeibnizLeft => IdentityKind::LeibnizLeft,
                        _ => IdentityKind::LeibnizRight,
                    };
                    let a = read_algebra(&file)?;
                    (kind.name(), a.first_violation(kind), None)
                }
            };
            let mut out = json!({
                "identity": name,
                "holds": violation.is_none(),
                "violation": violation.map(|(i, j, k)| vec![i, j, k]),
            });
            if let Some(n) = axiom {
                out["axiom"] = json!(n);
            }
            Ok(out)
        }
        Command::Invariants { file } => {
            let a = read_algebra(&file)?;
            let center = a.center();
            let derived = a.derived_ideal();
            Ok(json!({
                "field": a.field().to_string(),
                "dim": a.dim(),
                "center_dim": center.dim(),
                "derived_dim": derived.dim(),
                "extra_special": center.dim() == 1 && center == derived,
                "center": vectors(&center),
                "derived": vectors(&derived),
            }))
        }
        Command::Multiplier { file, theory } => {
            let a = read_algebra(&file)?;
            let space = cocycle_space(&a, theory.kind())?;
            Ok(json!({
                "theory": theory.kind().name(),
                "multiplier_dim": space.h2_dim,
                "cocycles_dim": space.z2.dim(),
                "coboundaries_dim": space.b2.dim(),
            }))
        }
        Command::Cover { file } => {
            let a = read_algebra(&file)?;
            let c = cover(&a)?;
            Ok(json!({
                "multiplier_dim": c.multiplier_dim(),
                "stem": c.is_stem(),
                "kernel": vectors(&c.kernel),
                "cover": to_json_value(&AlgebraDocument::Algebra(c.total)),
            }))
        }
        Command::Zstar { file } => {
            let a = read_algebra(&file)?;
            let zs = z_star(&a)?;
            Ok(json!({
                "dim": zs.dim(),
                "basis": vectors(&zs),
                "center_dim": a.center().dim(),
            }))
        }
        Command::Capable { file } => {
            let a = read_algebra(&file)?;
            Ok(json!({ "capable": is_capable(&a)? }))
        }
        Command::Unicentral { file } => {
            let a = read_algebra(&file)?;
            Ok(json!({ "unicentral": is_unicentral(&a)? }))
        }
        Command::Classify { file } => {
            let a = read_algebra(&file)?;
            let d = classify(&a)?;
            Ok(json!({
                "classification": d.to_string(),
                "blocks": d.blocks().iter().map(ToString::to_string).collect::<Vec<_>>(),
                "dim": d.algebra_dim(),
            }))
        }
        Command::VerifyTheorems {
            max_n,
            lambdas,
            field,
        } => {
            let field = parse_field(&field)?;
            let lambdas = lambdas
                .split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| Scalar::parse(field, t).map_err(Failure::input))
                .collect::<Result<Vec<_>, _>>()?;
            let report = verify_theorems(max_n, &lambdas).map_err(Failure::input)?;
            let failures = report.failures().count();
            let mut out = serde_json::to_value(&report).map_err(Failure::internal)?;
            out["failures"] = json!(failures);
            if failures > 0 {
                println!("{out}");
                return Err(Failure::internal(format!("{failures} rows failed")));
            }
            Ok(out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let verify = matches!(cli.command, Command::VerifyTheorems { .. });
    match run(cli.command) {
        Ok(v) => {
            println!("{v}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            // A failing sweep has already printed its report.
            if !(verify && f.code == 4) {
                println!("{}", json!({ "error": f.kind, "message": f.message }));
            }
            ExitCode::from(f.code)
        }
    }
}

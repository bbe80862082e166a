use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use affgebra::constructions::{
    build_from_data, retwist_assoc, retwist_lie, yau_twist_assoc, yau_twist_lie, yau_twist_prelie,
};
use affgebra::derivations::solution_space;
use affgebra::fiber::{alpha_fixed_points, extract_data, fiber_assoc, fiber_lie};
use affgebra::fixtures::{build_sna, fixture_by_name, sample_valid_data, sna_structures};
use affgebra::io::{self, FormatError};
use affgebra::morphisms::data_hom_checks;
use affgebra::structures::{
    check_affine_antisymmetry, check_affine_hom_jacobi, check_algebra_multiplicativity, check_antisymmetry,
    check_hom_associativity, check_hom_jacobi, check_hom_prelie, check_multiplicativity,
};
use affgebra::{AffineMap, AffinePoint, Error, Field, SpaceKind, Structure, StructureFile, Verdict};

#[derive(Parser)]
#[command(name = "affgebra", version, about = "Exact checks and constructions for Hom-affgebras")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Ground field: Q, or a prime p (also written Fp:p). Files over a
    /// different field are rejected.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Print the report as JSON instead of text lines.
    #[arg(long, global = true)]
    json_report: bool,
    /// Seed for sampling commands.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Check every axiom of the structure in FILE.
    Check { file: PathBuf },
    /// Build the Hom-Lie affgebra of an affgebra_data file.
    Build {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Fibre of an affgebra at a fixed point of alpha.
    Fiber {
        file: PathBuf,
        #[arg(long, default_value = "auto")]
        at: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Extract (L; alpha, kappa, lambda, r) from a Hom-Lie affgebra.
    Extract {
        file: PathBuf,
        #[arg(long, default_value = "auto")]
        at: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Twist a structure by the affine map in the --alpha file.
    Twist {
        file: PathBuf,
        #[arg(long)]
        alpha: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Dimension (and optionally a basis) of a derivation-type space.
    Derive {
        file: PathBuf,
        #[arg(long)]
        space: SpaceKind,
        #[arg(long)]
        basis: bool,
    },
    /// Check a data_hom file condition by condition.
    Homcheck { file: PathBuf },
    /// Build then extract at the origin and compare with the input data.
    Roundtrip { file: PathBuf },
    /// Print a named Hom-Lie algebra fixture, or sampled data over it.
    Fixture {
        name: String,
        #[arg(long, default_value = "id")]
        alpha: String,
        /// Emit affgebra_data sampled with --seed instead of the algebra.
        #[arg(long)]
        data: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Matrix structures on sna(n) and the index convention report.
    Sna {
        #[arg(default_value_t = 2)]
        n: usize,
    },
}

/// Failures end the run with exit code 1 (mathematical violation) or 2
/// (unusable input).
enum Failure {
    Violation(String),
    Input(String),
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::DimensionMismatch { .. }
            | Error::FieldMismatch(..)
            | Error::InvalidField(_)
            | Error::NotSquare { .. }
            | Error::ArityMismatch(..)
            | Error::PreconditionFailed(_) => Failure::Input(e.to_string()),
            other => Failure::Violation(other.to_string()),
        }
    }
}

type Outcome = Result<bool, Failure>;

struct Ctx {
    field: Option<Field>,
    json: bool,
    seed: u64,
}

fn parse_field(text: &str) -> Result<Field, Failure> {
    let t = text.trim();
    if t.eq_ignore_ascii_case("q") {
        return Ok(Field::Rationals);
    }
    let digits = t.strip_prefix("Fp:").or_else(|| t.strip_prefix("F")).unwrap_or(t);
    let p: u64 = digits
        .parse()
        .map_err(|_| Failure::Input(format!("unknown field {text:?}")))?;
    Field::prime(p).map_err(|e| Failure::Input(e.to_string()))
}

impl Ctx {
    fn load(&self, path: &Path) -> Result<StructureFile, Failure> {
        let bytes = fs::read(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        let f = io::parse(&bytes)?;
        if let Some(field) = self.field {
            if field != f.field {
                return Err(Failure::Input(format!("file is over {}, --field says {field}", f.field)));
            }
        }
        Ok(f)
    }

    fn field_or_default(&self) -> Field {
        self.field.unwrap_or(Field::Rationals)
    }

    fn report(&self, command: &str, lines: &[Verdict], informational: &[&str]) -> bool {
        let pass = lines
            .iter()
            .filter(|v| !informational.contains(&v.check.as_str()))
            .all(Verdict::passed);
        if self.json {
            let checks: Vec<Value> = lines
                .iter()
                .map(|v| {
                    let mut j = v.to_json();
                    if informational.contains(&v.check.as_str()) {
                        j["informational"] = json!(true);
                    }
                    j
                })
                .collect();
            print!("{}", io::to_pretty(&json!({ "command": command, "pass": pass, "checks": checks })));
        } else {
            for v in lines {
                if informational.contains(&v.check.as_str()) {
                    println!("{v} [informational]");
                } else {
                    println!("{v}");
                }
            }
        }
        pass
    }

    fn emit(&self, value: &Value, output: &Option<PathBuf>) -> Result<(), Failure> {
        let text = io::to_pretty(value);
        match output {
            Some(p) => fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

fn base_point(alpha: &AffineMap, at: &str, field: Field) -> Result<AffinePoint, Failure> {
    if at == "auto" {
        return match alpha_fixed_points(alpha) {
            Some(fp) => Ok(fp.particular),
            None => Err(Failure::Violation(
                "alpha has no fixed point: alpha_fixed_points is empty, so there is no fibre".into(),
            )),
        };
    }
    let coords = at
        .split(',')
        .map(|x| field.parse(x))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::Input(format!("bad point {at:?}: {e}")))?;
    let p = AffinePoint::new(affgebra::Vector::new(field, coords)?);
    if p.dim() != alpha.dim() {
        return Err(Failure::Input(format!("point has {} coordinates, expected {}", p.dim(), alpha.dim())));
    }
    Ok(p)
}

fn check(ctx: &Ctx, file: &Path) -> Outcome {
    let f = ctx.load(file)?;
    let mult = "multiplicativity";
    let lines = match &f.structure {
        Structure::HomAssocAffgebra(s) => vec![check_hom_associativity(s), check_multiplicativity(&s.mul, &s.alpha)],
        Structure::HomLieAffgebra(s) => vec![
            check_affine_antisymmetry(s),
            check_affine_hom_jacobi(s),
            check_multiplicativity(&s.bracket, &s.alpha),
        ],
        Structure::HomPreLieAffgebra(s) => vec![check_hom_prelie(s), check_multiplicativity(&s.prod, &s.alpha)],
        Structure::HomLieAlgebra(l) => vec![check_antisymmetry(l), check_hom_jacobi(l), check_algebra_multiplicativity(l)],
        Structure::AffgebraData(d) => {
            let invariants = match d.check_invariants() {
                Ok(()) => Verdict::pass("data_invariants"),
                Err(e) => Verdict::fail_note("data_invariants", e.to_string()),
            };
            vec![
                check_antisymmetry(&d.algebra),
                check_hom_jacobi(&d.algebra),
                invariants,
                check_algebra_multiplicativity(&d.algebra),
            ]
        }
        Structure::DataHom(h) => data_hom_checks(h)?,
    };
    Ok(ctx.report("check", &lines, &[mult]))
}

fn expect_data(f: &StructureFile) -> Result<&affgebra::AffgebraData, Failure> {
    match &f.structure {
        Structure::AffgebraData(d) => Ok(d),
        s => Err(Failure::Input(format!("expected affgebra_data, found {}", s.kind()))),
    }
}

fn build(ctx: &Ctx, file: &Path, output: &Option<PathBuf>) -> Outcome {
    let f = ctx.load(file)?;
    let s = build_from_data(expect_data(&f)?)?;
    ctx.emit(&io::to_value(&StructureFile::new(f.field, Structure::HomLieAffgebra(s))), output)?;
    Ok(true)
}

fn fiber(ctx: &Ctx, file: &Path, at: &str, output: &Option<PathBuf>) -> Outcome {
    let f = ctx.load(file)?;
    let value = match &f.structure {
        Structure::HomLieAffgebra(s) => io::fiber_to_json(&fiber_lie(s, &base_point(&s.alpha, at, f.field)?)?),
        Structure::HomAssocAffgebra(s) => {
            let r = fiber_assoc(s, &base_point(&s.alpha, at, f.field)?)?;
            json!({
                "field": io::field_to_json(f.field),
                "base": io::vector_to_json(&r.base.0),
                "algebra": {
                    "product": r.algebra.product().iter().map(io::matrix_to_json).collect::<Vec<_>>(),
                    "alpha": io::matrix_to_json(r.algebra.alpha()),
                },
            })
        }
        s => return Err(Failure::Input(format!("no fibre for {}", s.kind()))),
    };
    ctx.emit(&value, output)?;
    Ok(true)
}

fn extract(ctx: &Ctx, file: &Path, at: &str, output: &Option<PathBuf>) -> Outcome {
    let f = ctx.load(file)?;
    let Structure::HomLieAffgebra(s) = &f.structure else {
        return Err(Failure::Input(format!("expected hom_lie_affgebra, found {}", f.kind())));
    };
    let d = extract_data(s, &base_point(&s.alpha, at, f.field)?)?;
    ctx.emit(&io::to_value(&StructureFile::new(f.field, Structure::AffgebraData(d))), output)?;
    Ok(true)
}

fn twist(ctx: &Ctx, file: &Path, alpha: &Path, output: &Option<PathBuf>) -> Outcome {
    let f = ctx.load(file)?;
    let bytes = fs::read(alpha).map_err(|e| Failure::Input(format!("{}: {e}", alpha.display())))?;
    let a = io::parse_affine_map_file(&bytes, f.field, f.dim())?;
    let twisted = match &f.structure {
        Structure::HomAssocAffgebra(s) if s.is_untwisted() => Structure::HomAssocAffgebra(yau_twist_assoc(s, &a)?),
        Structure::HomAssocAffgebra(s) => Structure::HomAssocAffgebra(retwist_assoc(s, &a)?),
        Structure::HomLieAffgebra(s) if s.is_untwisted() => Structure::HomLieAffgebra(yau_twist_lie(s, &a)?),
        Structure::HomLieAffgebra(s) => Structure::HomLieAffgebra(retwist_lie(s, &a)?),
        Structure::HomPreLieAffgebra(s) => Structure::HomPreLieAffgebra(yau_twist_prelie(s, &a)?),
        s => return Err(Failure::Input(format!("cannot twist {}", s.kind()))),
    };
    ctx.emit(&io::to_value(&StructureFile::new(f.field, twisted)), output)?;
    Ok(true)
}

fn derive(ctx: &Ctx, file: &Path, kind: SpaceKind, basis: bool) -> Outcome {
    let f = ctx.load(file)?;
    let l = match &f.structure {
        Structure::HomLieAlgebra(l) => l,
        Structure::AffgebraData(d) => &d.algebra,
        s => return Err(Failure::Input(format!("expected hom_lie_algebra, found {}", s.kind()))),
    };
    let space = solution_space(l, kind);
    if ctx.json || basis {
        let mut v = io::solution_space_to_json(&space);
        if !basis {
            v.as_object_mut().expect("object").remove("basis");
        }
        print!("{}", io::to_pretty(&v));
    } else {
        println!("{}: dim {}", kind.name(), space.dim());
    }
    Ok(true)
}

fn homcheck(ctx: &Ctx, file: &Path) -> Outcome {
    let f = ctx.load(file)?;
    let Structure::DataHom(h) = &f.structure else {
        return Err(Failure::Input(format!("expected data_hom, found {}", f.kind())));
    };
    Ok(ctx.report("homcheck", &data_hom_checks(h)?, &[]))
}

fn roundtrip(ctx: &Ctx, file: &Path) -> Outcome {
    let f = ctx.load(file)?;
    let d = expect_data(&f)?;
    let s = build_from_data(d)?;
    let back = extract_data(&s, &AffinePoint::origin(f.field, d.dim()))?;
    let v = if &back == d {
        Verdict::pass("roundtrip")
    } else {
        Verdict::fail_note("roundtrip", "extracted data differs from the input")
    };
    Ok(ctx.report("roundtrip", &[v], &[]))
}

fn fixture(ctx: &Ctx, name: &str, alpha: &str, data: bool, output: &Option<PathBuf>) -> Outcome {
    let field = ctx.field_or_default();
    let l = fixture_by_name(name, alpha, field)?;
    let structure = if data {
        Structure::AffgebraData(sample_valid_data(&l, ctx.seed)?)
    } else {
        Structure::HomLieAlgebra(l)
    };
    ctx.emit(&io::to_value(&StructureFile::new(field, structure)), output)?;
    Ok(true)
}

fn sna(ctx: &Ctx, n: usize) -> Outcome {
    let field = ctx.field_or_default();
    let space = build_sna(field, n)?;
    if !ctx.json {
        println!("{}", space.report);
        println!("intrinsic dimension: {}", space.dim());
    }
    let bundle = sna_structures(&space, None)?;
    Ok(ctx.report("sna", &bundle.verdicts(), &[]))
}

fn run(cli: Cli) -> Outcome {
    let ctx = Ctx {
        field: cli.global.field.as_deref().map(parse_field).transpose()?,
        json: cli.global.json_report,
        seed: cli.global.seed,
    };
    match &cli.command {
        Command::Check { file } => check(&ctx, file),
        Command::Build { file, output } => build(&ctx, file, output),
        Command::Fiber { file, at, output } => fiber(&ctx, file, at, output),
        Command::Extract { file, at, output } => extract(&ctx, file, at, output),
        Command::Twist { file, alpha, output } => twist(&ctx, file, alpha, output),
        Command::Derive { file, space, basis } => derive(&ctx, file, *space, *basis),
        Command::Homcheck { file } => homcheck(&ctx, file),
        Command::Roundtrip { file } => roundtrip(&ctx, file),
        Command::Fixture { name, alpha, data, output } => fixture(&ctx, name, alpha, *data, output),
        Command::Sna { n } => sna(&ctx, *n),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Violation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

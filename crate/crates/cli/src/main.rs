//! `rankspectra`: L_rk values and tables, optimal constructions, and spectrum,
//! dual and geometry checks on code files.
//!
//! Exit codes: 0 success, 1 a verification found a failure, 2 usage or
//! domain error, 3 enumeration exceeds the point limit.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::SeedableRng;
use rankspectra::code::point_limit_from_env;
use rankspectra::constructions::construct;
use rankspectra::enumerate::projective_count;
use rankspectra::field::{prime_power, ExtElem, ExtField};
use rankspectra::formulas::{expected_spectrum, lrk, params, table, TableRow};
use rankspectra::geometry::{associated_system, geometric_dual, weight_via_dual, weight_via_geometry};
use rankspectra::json::{CodeJson, QSystemJson};
use rankspectra::suites::{run_suite, DEFAULT_SEED};
use rankspectra::{Error, RankMetricCode, SpectrumReport};
use serde_json::json;

#[derive(Parser)]
#[command(name = "rankspectra", version, about = "Weight spectra of rank-metric codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// L_rk(n, m, k, q) with all derived parameters.
    Lrk(LrkArgs),
    /// L_rk for n = k+1, ..., n-max.
    Table(TableArgs),
    /// Build the optimal code for (n, m, k, q).
    Construct(ConstructArgs),
    /// Weight spectrum of a code file.
    Spectrum(SpectrumArgs),
    /// Dual code of a code file, with its spectrum.
    Dual(DualArgs),
    /// Compare the three ways of computing weights on a code file.
    Geometry(GeometryArgs),
    /// Run a named self-check suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct FieldArgs {
    /// Base field order, a prime power [default: 2].
    #[arg(long)]
    q: Option<u64>,
    /// Characteristic; with --e, an alternative to --q.
    #[arg(long, requires = "e")]
    p: Option<u64>,
    #[arg(long, requires = "p")]
    e: Option<usize>,
}

impl FieldArgs {
    /// `(p, e)` with `q = p^e`.
    fn resolve(&self) -> anyhow::Result<(u64, usize)> {
        let factor = |q: u64| prime_power(q).with_context(|| format!("q = {q} is not a prime power"));
        match (self.q, self.p, self.e) {
            (Some(q), Some(p), Some(e)) => {
                if p.checked_pow(e as u32) != Some(q) {
                    bail!("--q {q} does not equal --p {p} to the power --e {e}");
                }
                factor(q)
            }
            (None, Some(p), Some(e)) => {
                let q = p.checked_pow(e as u32).context("field order overflows")?;
                if factor(q)? != (p, e) {
                    bail!("{p} is not a prime");
                }
                Ok((p, e))
            }
            (q, _, _) => factor(q.unwrap_or(2)),
        }
    }

    fn order(&self) -> anyhow::Result<u64> {
        let (p, e) = self.resolve()?;
        Ok(p.pow(e as u32))
    }
}

#[derive(Args)]
struct LrkArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    k: usize,
    #[command(flatten)]
    field: FieldArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    k: usize,
    #[arg(long = "n-max")]
    n_max: usize,
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    format: TableFormat,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    k: usize,
    #[command(flatten)]
    field: FieldArgs,
    /// Write the code here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Embed one witness coefficient vector per expected weight.
    #[arg(long)]
    witnesses: bool,
    /// Print only the block profile.
    #[arg(long = "profile-only")]
    profile_only: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Exhaustive,
    Witness,
    Both,
}

#[derive(Args)]
struct SpectrumArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = Method::Exhaustive)]
    method: Method,
    /// Largest number of projective points to enumerate.
    #[arg(long)]
    limit: Option<u64>,
}

#[derive(Args)]
struct DualArgs {
    #[arg(long)]
    input: PathBuf,
    /// Write the dual code here.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    limit: Option<u64>,
}

#[derive(Args)]
struct GeometryArgs {
    #[arg(long)]
    input: PathBuf,
    /// Check every projective point when there are at most this many,
    /// otherwise a random sample of this size.
    #[arg(long, default_value_t = 2000)]
    points: u64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Psi,
    SmallGrid,
    LargeGrid,
    Geometry,
    Duality,
    Mrd,
    Lemmas,
    Classification,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Psi => "psi",
            Suite::SmallGrid => "small-grid",
            Suite::LargeGrid => "large-grid",
            Suite::Geometry => "geometry",
            Suite::Duality => "duality",
            Suite::Mrd => "mrd",
            Suite::Lemmas => "lemmas",
            Suite::Classification => "classification",
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

/// A check ran and found a problem.
#[derive(Debug)]
struct CheckFailed(String);

impl std::fmt::Display for CheckFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for CheckFailed {}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, format!("{text}\n"))
            .with_context(|| format!("cannot write {}", path.display())),
        None => match writeln!(std::io::stdout().lock(), "{text}") {
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
            other => Ok(other?),
        },
    }
}

fn pretty(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes")
}

fn read_code(path: &Path) -> anyhow::Result<(CodeJson, RankMetricCode)> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let json = CodeJson::parse(&text)?;
    let code = json.to_code()?;
    Ok((json, code))
}

fn cmd_lrk(a: &LrkArgs) -> anyhow::Result<()> {
    let q = a.field.order()?;
    let value = lrk(a.n, a.m, a.k, q)?;
    let report = json!({
        "n": a.n,
        "m": a.m,
        "k": a.k,
        "q": q,
        "lrk": value,
        "params": params(a.n, a.m, a.k)?,
        "expected_spectrum": expected_spectrum(a.n, a.m, a.k)?,
    });
    emit(None, &pretty(&report))
}

fn cmd_table(a: &TableArgs) -> anyhow::Result<()> {
    let rows = table(a.m, a.k, a.field.order()?, a.n_max)?;
    let text = match a.format {
        TableFormat::Csv => std::iter::once(TableRow::CSV_HEADER.to_string())
            .chain(rows.iter().map(TableRow::to_csv))
            .collect::<Vec<_>>()
            .join("\n"),
        TableFormat::Json => serde_json::to_string_pretty(&rows)?,
    };
    emit(None, &text)
}

fn cmd_construct(a: &ConstructArgs) -> anyhow::Result<()> {
    let (p, e) = a.field.resolve()?;
    let field = Arc::new(ExtField::new(p, e, a.m)?);
    let built = construct(field, a.n, a.k, None)?;
    let text = if a.profile_only {
        built.profile_json()
    } else {
        CodeJson::from_construction(&built, a.witnesses).to_string_pretty()
    };
    emit(a.out.as_deref(), &text)
}

fn limit_or_env(limit: Option<u64>) -> u64 {
    limit.unwrap_or_else(point_limit_from_env)
}

fn witness_report(json: &CodeJson, code: &RankMetricCode) -> anyhow::Result<SpectrumReport> {
    let claims = json.witness_vectors(code.field())?;
    if claims.is_empty() {
        bail!("code file has no witnesses (construct with --witnesses)");
    }
    for (claimed, x) in &claims {
        let actual = code.weight_of(x)?;
        if actual != *claimed {
            return Err(CheckFailed(format!(
                "witness claims weight {claimed} but its codeword has weight {actual}"
            ))
            .into());
        }
    }
    let vectors: Vec<Vec<ExtElem>> = claims.into_iter().map(|(_, x)| x).collect();
    Ok(code.weight_spectrum_witness(&vectors)?)
}

fn cmd_spectrum(a: &SpectrumArgs) -> anyhow::Result<()> {
    let (json, code) = read_code(&a.input)?;
    let limit = limit_or_env(a.limit);
    let value = match a.method {
        Method::Exhaustive => serde_json::to_value(code.weight_spectrum_exhaustive(limit)?)?,
        Method::Witness => serde_json::to_value(witness_report(&json, &code)?)?,
        Method::Both => {
            let witness = witness_report(&json, &code)?;
            let exhaustive = code.weight_spectrum_exhaustive(limit)?;
            if !witness.weights.is_subset(&exhaustive.weights) {
                return Err(CheckFailed(format!(
                    "witness weights {:?} are not all exhaustive weights {:?}",
                    witness.weights, exhaustive.weights
                ))
                .into());
            }
            json!({ "exhaustive": exhaustive, "witness": witness })
        }
    };
    emit(None, &pretty(&value))
}

fn cmd_dual(a: &DualArgs) -> anyhow::Result<()> {
    let (_, code) = read_code(&a.input)?;
    let dual = code.dual()?;
    let dual_json = CodeJson::from_code(&dual);
    let spectrum = dual.weight_spectrum_exhaustive(limit_or_env(a.limit))?;
    if let Some(path) = &a.out {
        emit(Some(path), &dual_json.to_string_pretty())?;
    }
    let report = json!({
        "n": dual.n(),
        "k": dual.k(),
        "nondegenerate": dual.is_nondegenerate(),
        "spectrum": spectrum,
        "code": dual_json,
    });
    emit(None, &pretty(&report))
}

/// The projective point of index `idx`: the pivot is the first coordinate
/// whose block of `order^(k-1-pivot)` points contains `idx`.
fn projective_point(field: &ExtField, k: usize, mut idx: u128) -> Vec<ExtElem> {
    let order = field.order();
    let mut x = vec![ExtElem::ZERO; k];
    for pivot in 0..k {
        let block = order.pow((k - 1 - pivot) as u32);
        if idx < block {
            x[pivot] = field.one();
            for slot in x[pivot + 1..].iter_mut() {
                *slot = field.from_index(idx % order);
                idx /= order;
            }
            return x;
        }
        idx -= block;
    }
    unreachable!("index below the projective point count")
}

fn cmd_geometry(a: &GeometryArgs) -> anyhow::Result<()> {
    let (_, code) = read_code(&a.input)?;
    let field = Arc::clone(code.field());
    let system = associated_system(&code)?;
    let total = projective_count(field.order(), code.k());
    let exhaustive = total <= a.points as u128;
    let mut rng = StdRng::seed_from_u64(a.seed);
    let indices: Vec<u128> = if exhaustive {
        (0..total).collect()
    } else {
        use rand::Rng;
        (0..a.points).map(|_| rng.gen_range(0..total)).collect()
    };
    let mut mismatches = Vec::new();
    for &idx in &indices {
        let x = projective_point(&field, code.k(), idx);
        let direct = code.weight_of(&x)?;
        let via_u = weight_via_geometry(&code, &x)?;
        let via_dual = weight_via_dual(&code, &x)?;
        if direct != via_u || direct != via_dual {
            mismatches.push(json!({ "point": idx.to_string(), "weights": [direct, via_u, via_dual] }));
        }
    }
    let report = json!({
        "points_checked": indices.len(),
        "all_points": exhaustive,
        "seed": if exhaustive { None } else { Some(a.seed) },
        "system": QSystemJson::from_system(&system),
        "geometric_dual_dim": geometric_dual(&system).dim(),
        "mismatches": mismatches,
    });
    emit(None, &pretty(&report))?;
    if !mismatches.is_empty() {
        return Err(CheckFailed(format!("{} weight mismatches", mismatches.len())).into());
    }
    Ok(())
}

fn cmd_verify(a: &VerifyArgs) -> anyhow::Result<()> {
    println!("suite {} seed {}", a.suite.name(), a.seed);
    let reports = run_suite(a.suite.name(), a.seed)?;
    let mut failed = 0;
    for r in &reports {
        println!("{}", r.summary());
        for f in r.failures.iter().skip(1) {
            println!("  {f}");
        }
        failed += r.failures.len();
    }
    if failed > 0 {
        return Err(CheckFailed(format!("{failed} checks failed")).into());
    }
    Ok(())
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<CheckFailed>().is_some() {
        return 1;
    }
    match err.downcast_ref::<Error>() {
        Some(Error::EnumerationTooLarge { .. }) => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Lrk(a) => cmd_lrk(a),
        Command::Table(a) => cmd_table(a),
        Command::Construct(a) => cmd_construct(a),
        Command::Spectrum(a) => cmd_spectrum(a),
        Command::Dual(a) => cmd_dual(a),
        Command::Geometry(a) => cmd_geometry(a),
        Command::Verify(a) => cmd_verify(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}

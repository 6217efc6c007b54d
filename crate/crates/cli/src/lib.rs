//! Command-line front end. Every subcommand prints a single JSON envelope on
//! standard output; human-readable notes go to standard error.
//!
//! Exit codes: 0 success, 1 negative verification, 2 usage or precondition
//! error, 3 I/O or format error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use bicolor_core::extremal::even_part;
use bicolor_core::{
    bbal_path_formula, bbal_star_formula, construct_half_split, construct_path_extremal,
    construct_star_extremal, exact_bbal_star, exhaustive_bbal, exhaustive_bbal_shard,
    find_balanced_copy, find_copy_with_red_count, find_unavoidable_pattern, is_omnitonal,
    is_r_tonal, kst_upper, matches_extremal_family, random_pattern_experiment,
    red_count_histogram, spectrum_bruteforce, tonality_spectrum, tonality_spectrum_with,
    witness_set, Bipartition, Error, ExhaustiveOptions, ExtremalFamily, HostColoring,
    PatternGraph,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "bicolor", version, about = "Exact combinatorics on 2-edge-colored K_{n,n}")]
pub struct Cli {
    /// Seed for every randomized subcommand.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads for parallel subcommands (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Suppress the human-readable summary on standard error.
    #[arg(long, global = true)]
    pub json_only: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tonality spectrum of a pattern.
    Spectrum(SpectrumArgs),
    /// Whether a pattern is bipartite r-tonal.
    Tonal(TonalArgs),
    /// Whether a pattern is bipartite omnitonal.
    Omnitonal(PatternArg),
    /// Write an extremal or half-split coloring.
    Construct(ConstructArgs),
    /// Evaluate a closed-form bound.
    Formula(FormulaArgs),
    /// Search a coloring for a copy with a given red count.
    Find(FindArgs),
    /// Search a coloring for the unavoidable colored complete bipartite patterns.
    ScanUnavoidable(ScanArgs),
    /// Exhaustively compute a balancing number on a tiny host.
    VerifyBbal(VerifyArgs),
    /// Exact balancing number of a star via the flow oracle.
    OracleStar(OracleArgs),
    /// Sample dense colorings and scan them for unavoidable patterns.
    Experiment(ExperimentArgs),
}

#[derive(Debug, Args, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PatternArg {
    #[arg(long)]
    pub pattern: PathBuf,
}

#[derive(Debug, Args, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SpectrumArgs {
    #[arg(long)]
    pub pattern: PathBuf,
    /// Use the explicit subset enumeration instead of the degree-sum DP.
    #[arg(long)]
    pub brute_force: bool,
    /// Also return a witness set for this red count.
    #[arg(long)]
    pub witness: Option<usize>,
    /// Keep the file's bipartition for every component.
    #[arg(long, conflicts_with = "brute_force")]
    pub fixed_sides: bool,
}

#[derive(Debug, Args, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TonalArgs {
    #[arg(long)]
    pub pattern: PathBuf,
    #[arg(long)]
    pub r: usize,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConstructFamily {
    PathExtremal,
    StarExtremal,
    HalfSplit,
}

#[derive(Debug, Args, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ConstructArgs {
    #[arg(long, value_enum)]
    pub family: ConstructFamily,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: Option<usize>,
    /// Output `.kbc` file; without it the coloring is embedded in the report.
    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FormulaFamily {
    Path,
    Star,
    Kst,
}

#[derive(Debug, Args, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FormulaArgs {
    #[arg(long, value_enum)]
    pub family: FormulaFamily,
    #[arg(long)]
    pub n: usize,
    /// Pattern size `k`, or `t` for the Kővári–Sós–Turán bound.
    #[arg(long)]
    pub k: usize,
}

#[derive(Debug, Args, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FindArgs {
    #[arg(long)]
    pub coloring: PathBuf,
    #[arg(long)]
    pub pattern: PathBuf,
    #[arg(long, required_unless_present_any = ["balanced", "histogram"], conflicts_with_all = ["balanced", "histogram"])]
    pub red: Option<usize>,
    #[arg(long, conflicts_with = "histogram")]
    pub balanced: bool,
    /// Count labeled embeddings per red count instead of finding one.
    #[arg(long)]
    pub histogram: bool,
    /// Embedding budget for `--histogram`.
    #[arg(long, default_value_t = bicolor_core::DEFAULT_HISTOGRAM_BUDGET)]
    pub budget: u64,
}

#[derive(Debug, Args, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ScanArgs {
    #[arg(long)]
    pub coloring: PathBuf,
    #[arg(long = "t")]
    pub t: usize,
    #[arg(long = "T")]
    #[serde(rename = "T")]
    pub big_t: usize,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BbalFamily {
    Path,
    Star,
}

#[derive(Debug, Args, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub family: BbalFamily,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    /// Allow `n = 5`.
    #[arg(long)]
    pub long_run: bool,
    #[arg(long, default_value_t = 1)]
    pub shards: usize,
    /// Run only this shard and report it as partial.
    #[arg(long)]
    pub shard: Option<usize>,
    /// Maximum colorings enumerated per shard.
    #[arg(long)]
    pub budget: Option<u64>,
}

#[derive(Debug, Args, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct OracleArgs {
    #[arg(long)]
    pub n: usize,
    /// Star size; odd values use `k - 1`.
    #[arg(long)]
    pub k: usize,
}

#[derive(Debug, Args, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ExperimentArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long = "t")]
    pub t: usize,
    #[arg(long = "T")]
    #[serde(rename = "T")]
    pub big_t: usize,
    #[arg(long)]
    pub min_per_color: usize,
    #[arg(long)]
    pub trials: u64,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Envelope<'a> {
    command: &'a str,
    inputs: Value,
    result: Value,
    elapsed_millis: u64,
    version: &'a str,
}

/// A failed invocation: exit code plus a message for standard error.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::InvalidPattern(_) => EXIT_IO,
            Error::BudgetExceeded { .. } | Error::NotAchievable { .. } => EXIT_NEGATIVE,
            Error::InvalidParameter(_) | Error::PatternTooLarge { .. } | Error::SizeGuard(_) => {
                EXIT_USAGE
            }
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

struct Outcome {
    result: Value,
    code: i32,
    summary: String,
}

impl Outcome {
    fn ok(result: Value, summary: String) -> Self {
        Outcome {
            result,
            code: EXIT_OK,
            summary,
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure {
        code: EXIT_IO,
        message: format!("{}: {e}", path.display()),
    })
}

fn load_pattern(path: &Path) -> Result<PatternGraph, Failure> {
    PatternGraph::parse(&read(path)?).map_err(|e| Failure {
        code: EXIT_IO,
        message: format!("{}: {e}", path.display()),
    })
}

fn load_coloring(path: &Path) -> Result<HostColoring, Failure> {
    HostColoring::parse(&read(path)?).map_err(|e| Failure {
        code: EXIT_IO,
        message: format!("{}: {e}", path.display()),
    })
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("reports serialize to JSON")
}

/// Decimal with exactly six fractional digits.
fn fixed6(x: f64) -> Value {
    let n: serde_json::Number = format!("{x:.6}").parse().expect("formatted float parses");
    Value::Number(n)
}

fn spectrum(a: &SpectrumArgs) -> Result<Outcome, Failure> {
    let g = load_pattern(&a.pattern)?;
    let s = if a.brute_force {
        spectrum_bruteforce(&g)?
    } else if a.fixed_sides {
        tonality_spectrum_with(&g, Bipartition::Fixed)
    } else {
        tonality_spectrum(&g)
    };
    let mut result = json!({ "m": s.m, "achievable": s.achievable });
    if let Some(r) = a.witness {
        if !s.contains(r) {
            return Err(Error::NotAchievable { r }.into());
        }
        result["witness"] = to_value(witness_set(&g, r)?);
    }
    Ok(Outcome::ok(result, format!("spectrum of m = {}: {:?}", s.m, s.values())))
}

fn tonal(a: &TonalArgs) -> Result<Outcome, Failure> {
    let g = load_pattern(&a.pattern)?;
    let tonal = is_r_tonal(&g, a.r)?;
    Ok(Outcome::ok(
        json!({ "m": g.edge_count(), "r": a.r, "tonal": tonal }),
        format!("{}-tonal: {tonal}", a.r),
    ))
}

fn omnitonal(a: &PatternArg) -> Result<Outcome, Failure> {
    let g = load_pattern(&a.pattern)?;
    let omni = is_omnitonal(&g);
    Ok(Outcome::ok(
        json!({ "m": g.edge_count(), "omnitonal": omni }),
        format!("omnitonal: {omni}"),
    ))
}

fn construct(a: &ConstructArgs) -> Result<Outcome, Failure> {
    let need_k = || {
        a.k.ok_or_else(|| Failure {
            code: EXIT_USAGE,
            message: "--k is required for this family".into(),
        })
    };
    let c = match a.family {
        ConstructFamily::PathExtremal => construct_path_extremal(a.n, need_k()?)?,
        ConstructFamily::StarExtremal => construct_star_extremal(a.n, need_k()?)?,
        ConstructFamily::HalfSplit => construct_half_split(a.n)?,
    };
    let (red, blue) = c.color_counts();
    let text = c.to_kbc();
    let mut result = json!({ "n": a.n, "redCount": red, "blueCount": blue });
    match &a.output {
        Some(path) => {
            fs::write(path, &text).map_err(|e| Failure {
                code: EXIT_IO,
                message: format!("{}: {e}", path.display()),
            })?;
            result["output"] = json!(path);
        }
        None => result["coloring"] = json!(text),
    }
    Ok(Outcome::ok(result, format!("coloring with {red} red and {blue} blue edges")))
}

fn formula(a: &FormulaArgs) -> Result<Outcome, Failure> {
    let result = match a.family {
        FormulaFamily::Path => to_value(bbal_path_formula(a.n, a.k)?),
        FormulaFamily::Star => to_value(bbal_star_formula(a.n, a.k)?),
        FormulaFamily::Kst => json!({
            "value": fixed6(kst_upper(a.n, a.k)?),
            "threshold": null,
            "hypothesisMet": null,
        }),
    };
    let summary = format!("value {}", result["value"]);
    Ok(Outcome::ok(result, summary))
}

fn find(a: &FindArgs) -> Result<Outcome, Failure> {
    let c = load_coloring(&a.coloring)?;
    let g = load_pattern(&a.pattern)?;
    if a.histogram {
        let counts = red_count_histogram(&c, &g, a.budget)?;
        return Ok(Outcome::ok(
            json!({ "histogram": counts }),
            format!("embeddings per red count: {counts:?}"),
        ));
    }
    let found = match a.red {
        Some(r) => find_copy_with_red_count(&c, &g, r)?,
        None => find_balanced_copy(&c, &g)?,
    };
    let summary = match &found {
        Some(e) => format!("copy found with {} red and {} blue edges", e.red_count, e.blue_count),
        None => "no such copy".into(),
    };
    let mut result = json!({ "found": found.is_some() });
    if let Some(e) = found {
        result["witness"] = to_value(e);
    }
    Ok(Outcome::ok(result, summary))
}

fn scan(a: &ScanArgs) -> Result<Outcome, Failure> {
    let c = load_coloring(&a.coloring)?;
    let w = find_unavoidable_pattern(&c, a.t, a.big_t)?;
    let summary = match &w {
        Some(w) => format!("pattern {} found", to_value(w.kind)),
        None => "no unavoidable pattern".into(),
    };
    let mut result = json!({ "found": w.is_some() });
    if let Some(w) = w {
        result["witness"] = to_value(w);
    }
    Ok(Outcome::ok(result, summary))
}

fn verify_bbal(a: &VerifyArgs) -> Result<Outcome, Failure> {
    let (g, family, formula) = match a.family {
        BbalFamily::Path => (PatternGraph::path(a.k), ExtremalFamily::Path, bbal_path_formula(a.n, a.k)?),
        BbalFamily::Star => (PatternGraph::star(a.k), ExtremalFamily::Star, bbal_star_formula(a.n, a.k)?),
    };
    let opts = ExhaustiveOptions {
        long_run: a.long_run,
        shards: a.shards,
        budget: a.budget,
        ..Default::default()
    };
    let report = match a.shard {
        Some(s) => exhaustive_bbal_shard(a.n, &g, &opts, s)?,
        None => exhaustive_bbal(a.n, &g, &opts)?,
    };
    let mut result = to_value(&report);
    result["formula"] = to_value(formula);
    if report.shard.is_some() {
        result["matchesFormula"] = Value::Null;
        result["familyMatches"] = Value::Null;
        let summary = format!("partial shard value {}", report.exact_value);
        return Ok(Outcome::ok(result, summary));
    }
    let matches = report.exact_value as i64 == formula.value;
    let family_matches = report.extremal_red_graphs.iter().all(|edges| {
        HostColoring::from_red_edges(a.n, edges.iter().copied())
            .map(|c| matches_extremal_family(&c, family, a.n, a.k))
            .unwrap_or(false)
    });
    result["matchesFormula"] = json!(matches);
    result["familyMatches"] = json!(family_matches);
    Ok(Outcome {
        summary: format!(
            "exact value {} (formula {}), {} extremal class(es)",
            report.exact_value,
            formula.value,
            report.extremal_red_graphs.len()
        ),
        result,
        code: if matches && report.extremal_verified { EXIT_OK } else { EXIT_NEGATIVE },
    })
}

fn oracle_star(a: &OracleArgs) -> Result<Outcome, Failure> {
    let k = even_part(a.k);
    let formula = bbal_star_formula(a.n, k)?;
    let report = exact_bbal_star(a.n, k)?;
    let matches = report.exact_value as i64 == formula.value;
    let mut result = to_value(&report);
    result["formula"] = to_value(formula);
    result["matchesFormula"] = json!(matches);
    Ok(Outcome {
        summary: format!("oracle value {} (formula {})", report.exact_value, formula.value),
        result,
        code: if matches && report.extremal_verified { EXIT_OK } else { EXIT_NEGATIVE },
    })
}

fn experiment(a: &ExperimentArgs, seed: u64) -> Result<Outcome, Failure> {
    let r = random_pattern_experiment(a.n, a.t, a.big_t, a.min_per_color, a.trials, seed)?;
    let summary = format!("pattern found in {} of {} colorings", r.found, r.trials);
    Ok(Outcome::ok(to_value(r), summary))
}

fn command_parts(cli: &Cli) -> (&'static str, Value) {
    match &cli.command {
        Command::Spectrum(a) => ("spectrum", to_value(a)),
        Command::Tonal(a) => ("tonal", to_value(a)),
        Command::Omnitonal(a) => ("omnitonal", to_value(a)),
        Command::Construct(a) => ("construct", to_value(a)),
        Command::Formula(a) => ("formula", to_value(a)),
        Command::Find(a) => ("find", to_value(a)),
        Command::ScanUnavoidable(a) => ("scan-unavoidable", to_value(a)),
        Command::VerifyBbal(a) => ("verify-bbal", to_value(a)),
        Command::OracleStar(a) => ("oracle-star", to_value(a)),
        Command::Experiment(a) => ("experiment", to_value(a)),
    }
}

fn execute(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Spectrum(a) => spectrum(a),
        Command::Tonal(a) => tonal(a),
        Command::Omnitonal(a) => omnitonal(a),
        Command::Construct(a) => construct(a),
        Command::Formula(a) => formula(a),
        Command::Find(a) => find(a),
        Command::ScanUnavoidable(a) => scan(a),
        Command::VerifyBbal(a) => verify_bbal(a),
        Command::OracleStar(a) => oracle_star(a),
        Command::Experiment(a) => experiment(a, cli.seed),
    }
}

/// Parses `argv`, runs the subcommand and writes the envelope to `out` and
/// diagnostics to `err`. Returns the process exit code.
pub fn dispatch<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    if let Some(threads) = cli.threads {
        // A second call in the same process keeps the first pool; harmless.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }

    let (name, inputs) = command_parts(&cli);
    let inputs = match inputs {
        Value::Object(mut map) => {
            map.insert("seed".into(), json!(cli.seed));
            Value::Object(map)
        }
        other => other,
    };
    let start = Instant::now();
    match execute(&cli) {
        Ok(outcome) => {
            let envelope = Envelope {
                command: name,
                inputs,
                result: outcome.result,
                elapsed_millis: start.elapsed().as_millis() as u64,
                version: env!("CARGO_PKG_VERSION"),
            };
            let text = serde_json::to_string_pretty(&envelope).expect("envelope serializes");
            let _ = writeln!(out, "{text}");
            if !cli.json_only {
                let _ = writeln!(err, "{name}: {}", outcome.summary);
            }
            outcome.code
        }
        Err(f) => {
            let _ = writeln!(err, "{name}: error: {}", f.message);
            f.code
        }
    }
}

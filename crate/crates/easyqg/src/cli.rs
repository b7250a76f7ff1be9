//! Command-line surface: every library capability behind one subcommand,
//! with stable exit codes (0 success/pass, 1 check failed, 2 usage error)
//! and file output via `--out`.

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::catalog::{
    canonical_words, diagram_basis_sn, enumerate_spanning_capped, FamilyId, GroupSpec,
};
use crate::diagram::PartitionDiagram;
use crate::error::{Error, Result};
use crate::network::{build_network_capped, NetworkConfig};
use crate::partition::{SetPartition, DEFAULT_GROUND_CAP};
use crate::realize::{
    rank_of_span, realize_capped, weight_matrix_capped, ComplexMatrix, IntertwinerMatrix,
    WeightAssignment, DEFAULT_DIM_CAP,
};
use crate::relations::{check_relations_numeric, emit_relations_capped};
use crate::verify::{
    check_category_axioms_capped, check_functoriality, check_spanning_equivariance, SampleConfig,
};
use crate::word::Word;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable overriding the per-axis matrix dimension cap.
pub const DIM_CAP_ENV: &str = "EASYQG_DIM_CAP";

#[derive(Parser, Debug)]
#[command(
    name = "easyqg",
    about = "Spanning diagrams, intertwiner matrices and equivariance checks for the easy families",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the spanning diagrams for a family and word pair.
    Enumerate(EnumerateArgs),
    /// Realize one diagram as its sparse 0/1 matrix.
    Matrix(MatrixArgs),
    /// Assemble a weight matrix from per-diagram weights.
    Weight(WeightArgs),
    /// Exact rank of the realized spanning set.
    Rank(RankArgs),
    /// Verification suites (equivariance, functoriality, axioms, relations).
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Emit the defining relations for a family and word pair.
    Relations(RelationsArgs),
    /// Build (and optionally verify) a layered network from a config file.
    Network(NetworkArgs),
}

#[derive(Args, Debug, Clone)]
struct SpaceArgs {
    /// Family name: sn, on, hn, bn, sn', bn', sn+, on+, hn+, bn+, sn'+,
    /// bn'+, bn#+, un, un+ (case-insensitive).
    #[arg(long)]
    family: String,
    /// Fundamental dimension n (n >= 1).
    #[arg(long)]
    n: usize,
    /// Bottom (domain) word length; implies an all-white word.
    #[arg(long)]
    k: Option<usize>,
    /// Top (codomain) word length; implies an all-white word.
    #[arg(long)]
    l: Option<usize>,
    /// Explicit top word over the DSL alphabet (w, b; "-" for empty).
    #[arg(long)]
    top: Option<String>,
    /// Explicit bottom word.
    #[arg(long)]
    bottom: Option<String>,
    /// Coerce coloured words to all-white for one-coloured families.
    #[arg(long, default_value_t = false)]
    coerce: bool,
}

impl SpaceArgs {
    fn resolve(&self) -> Result<(GroupSpec, Word, Word)> {
        let family: FamilyId = self.family.parse()?;
        let spec = GroupSpec::new(family, self.n)?;
        let requested = match (&self.top, &self.bottom) {
            (Some(top), Some(bottom)) => Some((bottom.parse::<Word>()?, top.parse::<Word>()?)),
            (None, None) => None,
            _ => {
                return Err(Error::PartitionSyntax {
                    reason: "--top and --bottom must be given together".into(),
                })
            }
        };
        let k = self
            .k
            .or_else(|| requested.as_ref().map(|(wk, _)| wk.len()))
            .unwrap_or(0);
        let l = self
            .l
            .or_else(|| requested.as_ref().map(|(_, wl)| wl.len()))
            .unwrap_or(0);
        let (wk, wl) = canonical_words(&spec, k, l, requested, self.coerce)?;
        Ok((spec, wk, wl))
    }
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[command(flatten)]
    space: SpaceArgs,
    /// Restrict Sn to its diagram basis (at most n blocks).
    #[arg(long, default_value_t = false)]
    basis: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct MatrixArgs {
    /// Partition DSL, e.g. "{1,3|2,4}".
    #[arg(long)]
    diagram: String,
    #[arg(long)]
    top: String,
    #[arg(long)]
    bottom: String,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct WeightArgs {
    #[command(flatten)]
    space: SpaceArgs,
    /// Explicit weights as JSON: numbers or {"re": .., "im": ..} objects,
    /// one per spanning diagram in enumeration order.
    #[arg(long)]
    weights: Option<String>,
    /// Draw deterministic random weights from this seed instead.
    #[arg(long)]
    seed: Option<u64>,
    /// Scale applied to random weights (default 1/sqrt(set size)).
    #[arg(long)]
    scale: Option<f64>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct RankArgs {
    #[command(flatten)]
    space: SpaceArgs,
    /// Restrict Sn to its diagram basis before taking the rank.
    #[arg(long, default_value_t = false)]
    basis: bool,
}

#[derive(Subcommand, Debug)]
enum VerifyCommand {
    /// Sampled equivariance of the full spanning set.
    Equivariance(EquivarianceArgs),
    /// Exact composition/tensor/involution identities on random diagrams.
    Functoriality(FunctorialityArgs),
    /// Exact closure of the five representation-category axioms.
    Axioms(AxiomsArgs),
    /// Numeric check of the emitted relations against sampled elements.
    Relations(VerifyRelationsArgs),
}

#[derive(Args, Debug)]
struct EquivarianceArgs {
    #[command(flatten)]
    space: SpaceArgs,
    #[arg(long, default_value_t = 25)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct FunctorialityArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 200)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 3)]
    max_len: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct AxiomsArgs {
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    max_len: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyRelationsArgs {
    #[command(flatten)]
    space: SpaceArgs,
    #[arg(long, default_value_t = 10)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct RelationsArgs {
    #[command(flatten)]
    space: SpaceArgs,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct NetworkArgs {
    /// JSON network configuration file.
    #[arg(long)]
    config: PathBuf,
    /// Run the end-to-end equivariance check after building.
    #[arg(long, default_value_t = false)]
    verify: bool,
    #[arg(long, default_value_t = 25)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Format {
    Json,
    Csv,
}

fn dim_cap() -> usize {
    std::env::var(DIM_CAP_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_DIM_CAP)
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

/// Parses the CLI arguments and runs the command, returning the process exit
/// code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints help/version on stdout with exit 0; real usage
            // errors land on stderr with exit 2.
            let _ = e.print();
            return if e.exit_code() == 0 {
                EXIT_OK
            } else {
                EXIT_USAGE
            };
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Matrix(args) => cmd_matrix(args),
        Command::Weight(args) => cmd_weight(args),
        Command::Rank(args) => cmd_rank(args),
        Command::Verify(command) => cmd_verify(command),
        Command::Relations(args) => cmd_relations(args),
        Command::Network(args) => cmd_network(args),
    }
}

fn spanning_for(
    args: &SpaceArgs,
    basis: bool,
) -> Result<(GroupSpec, Word, Word, Vec<PartitionDiagram>)> {
    let (spec, wk, wl) = args.resolve()?;
    let diagrams = if basis {
        diagram_basis_sn(&spec, &wk, &wl)?
    } else {
        enumerate_spanning_capped(&spec, &wk, &wl, DEFAULT_GROUND_CAP)?
    };
    Ok((spec, wk, wl, diagrams))
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<i32> {
    let (_, _, _, diagrams) = spanning_for(&args.space, args.basis)?;
    let mut text = String::new();
    for d in &diagrams {
        text.push_str(&d.to_string());
        text.push('\n');
    }
    emit(&args.out, &text)?;
    // Keep stdout to one line per diagram; the count is a diagnostic.
    eprintln!("count={}", diagrams.len());
    Ok(EXIT_OK)
}

fn cmd_matrix(args: MatrixArgs) -> Result<i32> {
    let top: Word = args.top.parse()?;
    let bottom: Word = args.bottom.parse()?;
    let partition = SetPartition::parse(&args.diagram, top.len() + bottom.len())?;
    let diagram = PartitionDiagram::new(top, bottom, partition)?;
    let matrix = realize_capped(&diagram, args.n, dim_cap())?;
    let text = match args.format {
        Format::Json => serde_json::to_string_pretty(&matrix.to_triplets())? + "\n",
        Format::Csv => int_matrix_csv(&matrix),
    };
    emit(&args.out, &text)?;
    Ok(EXIT_OK)
}

fn int_matrix_csv(m: &IntertwinerMatrix) -> String {
    let mut out = String::new();
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            if c > 0 {
                out.push(',');
            }
            out.push_str(&m.get(r, c).to_string());
        }
        out.push('\n');
    }
    out
}

fn parse_weight_values(text: &str, expected: usize) -> Result<Vec<Complex64>> {
    #[derive(serde::Deserialize)]
    #[serde(untagged)]
    enum WeightValue {
        Real(f64),
        Complex {
            re: f64,
            #[serde(default)]
            im: f64,
        },
    }
    let values: Vec<WeightValue> = serde_json::from_str(text)?;
    if values.len() != expected {
        return Err(Error::WeightMismatch {
            expected,
            got: values.len(),
        });
    }
    Ok(values
        .into_iter()
        .map(|v| match v {
            WeightValue::Real(re) => Complex64::new(re, 0.0),
            WeightValue::Complex { re, im } => Complex64::new(re, im),
        })
        .collect())
}

fn cmd_weight(args: WeightArgs) -> Result<i32> {
    let (spec, wk, wl, diagrams) = spanning_for(&args.space, false)?;
    let weights = match (&args.weights, args.seed) {
        (Some(text), None) => parse_weight_values(text, diagrams.len())?,
        (None, Some(seed)) => {
            use rand::{Rng, SeedableRng};
            let scale = args
                .scale
                .unwrap_or_else(|| 1.0 / (diagrams.len().max(1) as f64).sqrt());
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            (0..diagrams.len())
                .map(|_| {
                    let re: f64 = rng.sample(rand_distr::StandardNormal);
                    let im: f64 = rng.sample(rand_distr::StandardNormal);
                    Complex64::new(re * scale, im * scale)
                })
                .collect()
        }
        _ => {
            return Err(Error::PartitionSyntax {
                reason: "pass exactly one of --weights or --seed".into(),
            })
        }
    };
    let assignment = WeightAssignment::new(diagrams, weights)?;
    let matrix = weight_matrix_capped(&spec, &wk, &wl, &assignment, dim_cap())?;
    let text = match args.format {
        Format::Json => serde_json::to_string_pretty(&matrix.to_dense_json())? + "\n",
        Format::Csv => matrix.to_csv(),
    };
    emit(&args.out, &text)?;
    Ok(EXIT_OK)
}

fn cmd_rank(args: RankArgs) -> Result<i32> {
    let (spec, _, _, diagrams) = spanning_for(&args.space, args.basis)?;
    let mats: Vec<IntertwinerMatrix> = diagrams
        .iter()
        .map(|d| realize_capped(d, spec.n, dim_cap()))
        .collect::<Result<_>>()?;
    let report = rank_of_span(&mats)?;
    println!(
        "count={} rank={} basis={}",
        report.count, report.rank, report.is_basis
    );
    Ok(EXIT_OK)
}

fn cmd_verify(command: VerifyCommand) -> Result<i32> {
    match command {
        VerifyCommand::Equivariance(args) => {
            let (spec, wk, wl) = args.space.resolve()?;
            let cfg = SampleConfig {
                samples: args.samples,
                seed: args.seed,
                tolerance: args.tol,
            };
            let report = check_spanning_equivariance(&spec, &wk, &wl, &cfg)?;
            let text = serde_json::to_string_pretty(&report)? + "\n";
            emit(&args.out, &text)?;
            Ok(if report.all_pass {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            })
        }
        VerifyCommand::Functoriality(args) => {
            let report = check_functoriality(args.n, args.trials, args.seed, args.max_len)?;
            let text = serde_json::to_string_pretty(&report)? + "\n";
            emit(&args.out, &text)?;
            Ok(if report.pass {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            })
        }
        VerifyCommand::Axioms(args) => {
            let family: FamilyId = args.family.parse()?;
            let spec = GroupSpec::new(family, args.n)?;
            let report = check_category_axioms_capped(&spec, args.max_len, dim_cap())?;
            let text = serde_json::to_string_pretty(&report)? + "\n";
            emit(&args.out, &text)?;
            Ok(if report.pass {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            })
        }
        VerifyCommand::Relations(args) => {
            let (spec, wk, wl) = args.space.resolve()?;
            let rels = emit_relations_capped(&spec, &wk, &wl, dim_cap())?;
            let cfg = SampleConfig {
                samples: args.samples,
                seed: args.seed,
                tolerance: args.tol,
            };
            let report = check_relations_numeric(&rels, spec.family, spec.n, &cfg)?;
            let text = serde_json::to_string_pretty(&report)? + "\n";
            emit(&args.out, &text)?;
            Ok(if report.all_pass {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            })
        }
    }
}

fn cmd_relations(args: RelationsArgs) -> Result<i32> {
    let (spec, wk, wl) = args.space.resolve()?;
    let rels = emit_relations_capped(&spec, &wk, &wl, dim_cap())?;
    emit(&args.out, &rels.to_text())?;
    Ok(EXIT_OK)
}

fn cmd_network(args: NetworkArgs) -> Result<i32> {
    let text = fs::read_to_string(&args.config)?;
    let config: NetworkConfig = serde_json::from_str(&text)?;
    let ns = config.to_network_spec()?;
    let network = build_network_capped(&ns, dim_cap())?;
    let dense: Vec<_> = network.iter().map(ComplexMatrix::to_dense_json).collect();
    let out_text = serde_json::to_string_pretty(&dense)? + "\n";
    emit(&args.out, &out_text)?;
    if args.verify {
        let cfg = SampleConfig {
            samples: args.samples,
            seed: args.seed,
            tolerance: args.tol,
        };
        let report = crate::network::verify_network(&ns, &cfg)?;
        eprintln!(
            "equivariance max residual {:.3e} (tolerance {:.1e})",
            report.max_residual(),
            cfg.tolerance
        );
        if !report.all_pass {
            return Ok(EXIT_CHECK_FAILED);
        }
    }
    Ok(EXIT_OK)
}

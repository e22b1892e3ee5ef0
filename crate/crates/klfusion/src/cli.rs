//! Command-line front end.
//!
//! Five subcommands: `fusion`, `branch`, `weights`, `discriminant`, and
//! `verify`. Every invocation emits a single document on stdout, JSON by
//! default (`--format tsv` for aligned tables), carrying the schema version
//! string. Output is byte-deterministic for fixed inputs: all term orders
//! are canonical and independent of thread count.
//!
//! Exit codes: `0` success, `1` validation error (malformed weights or
//! labels, invalid type, strict specialization at a rational point), `2`
//! when a verify suite reports failures.
//!
//! Weights on the command line are comma-separated fundamental-weight
//! coordinates (`--lambda 1,0`). Labels use a compact kind-prefixed syntax:
//!
//! ```text
//! W:1,0            Weyl module
//! R:1,0:principal  reduced module with a nilpotent tag
//! T:1,0;0,1        principal W-algebra module T_{lambda;mu}
//! L:1,0;1          lattice simple C_delta of Vect^m, ";m" suffix
//! ```
//!
//! `--level` applies a level transform to the parsed labels: tokens
//! `id`, `shift`, `gko`, `opposite`, `ffdual`, `m<int>` composed left to
//! right. The on-disk character-table cache directory comes from
//! `--cache-dir` or the `KLFUSION_CACHE_DIR` environment variable.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::frac::Frac;
use crate::fusion::{
    branch_gko, branch_urod_reduced, branch_urod_t, fuse, LabeledSum,
};
use crate::levels::{specialize_rational, LevelParam, RatFunc};
use crate::objects::{conformal_weight, degree, FTag, ModuleLabel};
use crate::rootdata::{DiscClass, LieType, RootSystem, Weight};
use crate::verify::{run_suite, Suite, SuiteReport};

/// Version string stamped into every output document.
pub const SCHEMA_VERSION: &str = "klfusion/1";

const CACHE_ENV_VAR: &str = "KLFUSION_CACHE_DIR";

#[derive(Debug, Parser)]
#[command(
    name = "klfusion",
    version,
    about = "Exact fusion, branching, and twist data for affine and W-algebra \
             module categories at irrational level (simply-laced types)",
    after_help = "Label syntax: W:1,0 | R:1,0:tag | T:1,0;0,1 | L:1,0;1\n\
                  Weights are comma-separated fundamental-weight coordinates.\n\
                  Level tokens: id, shift, gko, opposite, ffdual, m<int> \
                  (composed left to right)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format for the result document.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Directory for the on-disk character-table cache
    /// (falls back to $KLFUSION_CACHE_DIR).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Fusion product of two module labels.
    Fusion(FusionArgs),
    /// Coset / Urod branching decompositions, truncated by height.
    Branch(BranchArgs),
    /// Conformal-weight (twist exponent) table.
    Weights(WeightsArgs),
    /// Discriminant group P/Q with its quadratic form exponents.
    Discriminant(DiscriminantArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
struct FusionArgs {
    /// Simply-laced type, e.g. A2, D4, E6.
    #[arg(long = "type")]
    lie_type: LieType,
    /// First factor label.
    #[arg(long)]
    a: String,
    /// Second factor label.
    #[arg(long)]
    b: String,
    /// Level transform applied to both input labels.
    #[arg(long, default_value = "id")]
    level: String,
}

#[derive(Debug, Args)]
struct BranchArgs {
    #[arg(long = "type")]
    lie_type: LieType,
    /// Coset branching of a Weyl module against V_{Q+mu}.
    #[arg(long, conflicts_with_all = ["urod_reduced", "urod_t"])]
    gko: bool,
    /// Urod branching of a reduced module.
    #[arg(long, conflicts_with = "urod_t")]
    urod_reduced: bool,
    /// Urod branching of a principal T-module (requires --nu).
    #[arg(long)]
    urod_t: bool,
    /// Highest weight lambda (comma-separated coordinates).
    #[arg(long)]
    lambda: String,
    /// Lattice coset / second weight mu.
    #[arg(long)]
    mu: String,
    /// Third weight for --urod-t.
    #[arg(long)]
    nu: Option<String>,
    /// Nilpotent tag for --urod-reduced.
    #[arg(long, default_value = FTag::PRINCIPAL)]
    f_tag: String,
    /// Height bound for the truncated enumeration.
    #[arg(long, default_value_t = 10)]
    bound: u32,
}

#[derive(Debug, Args)]
struct WeightsArgs {
    #[arg(long = "type")]
    lie_type: LieType,
    /// Labels to tabulate (repeatable).
    #[arg(long = "label")]
    labels: Vec<String>,
    /// Also tabulate T_{lambda,0} for all dominant lambda up to this height.
    #[arg(long)]
    max_height: Option<u32>,
    /// Level transform applied to the parsed labels.
    #[arg(long, default_value = "id")]
    level: String,
    /// Evaluate each exponent at kappa = p/q (k = kappa + h_dual).
    #[arg(long)]
    eval: Option<String>,
    /// Refuse exactly-rational kappa in --eval.
    #[arg(long)]
    strict: bool,
}

#[derive(Debug, Args)]
struct DiscriminantArgs {
    #[arg(long = "type")]
    lie_type: LieType,
    /// Rescaling exponent of the quadratic form q^m.
    #[arg(long, default_value_t = 1)]
    m: i64,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long = "type")]
    lie_type: LieType,
    /// Suite name or `all`.
    #[arg(long)]
    suite: String,
    /// Sample count for randomized suites.
    #[arg(long, default_value_t = 100)]
    samples: u64,
    /// Seed for reproducible sampling.
    #[arg(long, default_value_t = 2024)]
    seed: u64,
    /// Height bound for branching and equivariantization suites.
    #[arg(long, default_value_t = 4)]
    bound: u32,
}

// ---------------------------------------------------------------------------
// Output documents
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct Envelope<T: Serialize> {
    schema: &'static str,
    command: &'static str,
    #[serde(rename = "type")]
    lie_type: String,
    result: T,
}

#[derive(Serialize)]
struct WeightRow {
    label: ModuleLabel,
    text: String,
    h: RatFunc,
    h_text: String,
    degree: DiscClass,
    #[serde(skip_serializing_if = "Option::is_none")]
    eval: Option<String>,
}

#[derive(Serialize)]
struct DiscriminantDoc {
    order: u64,
    m: i64,
    classes: Vec<DiscRow>,
    /// Gram matrix of the bilinear form mod 1, indexed like `classes`.
    bilinear_mod1: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct DiscRow {
    rep: Weight,
    /// Exponent of the quadratic form q^m, mod 1.
    q_exponent: String,
    /// Conformal-weight attribute m (rep, rep) / 2 of the lattice simple.
    weight: String,
}

#[derive(Serialize)]
struct VerifyDoc {
    seed: u64,
    samples: u64,
    bound: u32,
    suites: Vec<SuiteReport>,
    pass: bool,
}

// ---------------------------------------------------------------------------
// Entry points
// ---------------------------------------------------------------------------

/// Runs the CLI against explicit argv (including the program name) and
/// writers; returns the process exit code.
pub fn run_with_writers(
    argv: &[String],
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    1
                }
            };
        }
    };
    match dispatch(&cli) {
        Ok((document, exit)) => {
            let _ = out.write_all(document.as_bytes());
            exit
        }
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            1
        }
    }
}

/// Runs the CLI on the process arguments, writing to stdout/stderr.
pub fn run() -> i32 {
    let argv: Vec<String> = std::env::args().collect();
    let mut out = std::io::stdout();
    let mut err = std::io::stderr();
    let code = run_with_writers(&argv, &mut out, &mut err);
    let _ = out.flush();
    code
}

fn dispatch(cli: &Cli) -> Result<(String, i32), String> {
    match &cli.command {
        Command::Fusion(args) => {
            let ctx = build_ctx(args.lie_type, cli)?;
            let level = parse_level(&args.level)?;
            let a = parse_label(&ctx, &args.a, &level)?;
            let b = parse_label(&ctx, &args.b, &level)?;
            let sum = fuse(&ctx, &a, &b).map_err(|e| e.to_string())?;
            let doc = Envelope {
                schema: SCHEMA_VERSION,
                command: "fusion",
                lie_type: ctx.lie_type().to_string(),
                result: &sum,
            };
            Ok((render_sum(cli.format, &doc, &sum), 0))
        }
        Command::Branch(args) => {
            let ctx = build_ctx(args.lie_type, cli)?;
            let lambda = parse_weight(&args.lambda, ctx.rank())?;
            let mu = parse_weight(&args.mu, ctx.rank())?;
            let sum = if args.gko {
                branch_gko(&ctx, &lambda, &mu, args.bound)
            } else if args.urod_reduced {
                let tag = FTag::new(args.f_tag.clone());
                branch_urod_reduced(&ctx, &lambda, &mu, &tag, args.bound)
            } else if args.urod_t {
                let nu_text = args
                    .nu
                    .as_ref()
                    .ok_or_else(|| "--urod-t requires --nu".to_string())?;
                let nu = parse_weight(nu_text, ctx.rank())?;
                branch_urod_t(&ctx, &lambda, &mu, &nu, args.bound)
            } else {
                return Err("choose one of --gko, --urod-reduced, --urod-t".to_string());
            }
            .map_err(|e| e.to_string())?;
            let doc = Envelope {
                schema: SCHEMA_VERSION,
                command: "branch",
                lie_type: ctx.lie_type().to_string(),
                result: &sum,
            };
            Ok((render_sum(cli.format, &doc, &sum), 0))
        }
        Command::Weights(args) => {
            let ctx = build_ctx(args.lie_type, cli)?;
            let level = parse_level(&args.level)?;
            let mut labels: Vec<ModuleLabel> = args
                .labels
                .iter()
                .map(|s| parse_label(&ctx, s, &level))
                .collect::<Result<_, _>>()?;
            if let Some(h) = args.max_height {
                for lambda in ctx.dominant_by_height(h) {
                    labels.push(
                        ModuleLabel::principal_t(level, lambda, Weight::zero(ctx.rank()))
                            .map_err(|e| e.to_string())?,
                    );
                }
            }
            if labels.is_empty() {
                return Err(
                    "weights needs at least one --label or a --max-height".to_string()
                );
            }
            labels.sort();
            labels.dedup();
            let eval_point = args.eval.as_deref().map(parse_frac).transpose()?;
            let mut rows = Vec::new();
            for label in labels {
                let h = conformal_weight(&ctx, &label).map_err(|e| e.to_string())?;
                let eval = eval_point
                    .map(|kappa| {
                        specialize_rational(&h, kappa, ctx.h_dual(), args.strict)
                            .map(|v| v.to_string())
                            .map_err(|e| e.to_string())
                    })
                    .transpose()?;
                rows.push(WeightRow {
                    text: label.to_string(),
                    h_text: h.to_string(),
                    degree: degree(&ctx, &label),
                    label,
                    h,
                    eval,
                });
            }
            let doc = Envelope {
                schema: SCHEMA_VERSION,
                command: "weights",
                lie_type: ctx.lie_type().to_string(),
                result: &rows,
            };
            let text = match cli.format {
                Format::Json => to_json(&doc),
                Format::Tsv => {
                    let mut t = String::from("label\th\tdegree\teval\n");
                    for r in &rows {
                        let _ = writeln!(
                            t,
                            "{}\t{}\t{}\t{}",
                            r.text,
                            r.h_text,
                            r.degree,
                            r.eval.as_deref().unwrap_or("-")
                        );
                    }
                    t
                }
            };
            Ok((text, 0))
        }
        Command::Discriminant(args) => {
            let ctx = build_ctx(args.lie_type, cli)?;
            let classes: Vec<DiscClass> =
                ctx.disc_reps().iter().map(|r| ctx.disc_class(r)).collect();
            let rows: Vec<DiscRow> = classes
                .iter()
                .map(|c| DiscRow {
                    rep: c.rep().clone(),
                    q_exponent: ctx.disc_quadratic(c, args.m).to_string(),
                    // m (rep, rep) / 2, without mod-1 reduction
                    weight: (ctx
                        .pairing(c.rep(), c.rep())
                        .expect("canonical reps share the context rank")
                        * Frac::from(args.m)
                        / Frac::from(2))
                    .to_string(),
                })
                .collect();
            let bilinear: Vec<Vec<String>> = classes
                .iter()
                .map(|a| {
                    classes
                        .iter()
                        .map(|b| ctx.disc_bilinear(a, b).to_string())
                        .collect()
                })
                .collect();
            let payload = DiscriminantDoc {
                order: ctx.disc_order(),
                m: args.m,
                classes: rows,
                bilinear_mod1: bilinear,
            };
            let doc = Envelope {
                schema: SCHEMA_VERSION,
                command: "discriminant",
                lie_type: ctx.lie_type().to_string(),
                result: &payload,
            };
            let text = match cli.format {
                Format::Json => to_json(&doc),
                Format::Tsv => {
                    let mut t = String::from("rep\tq_exponent\tweight\n");
                    for r in &payload.classes {
                        let _ = writeln!(t, "{}\t{}\t{}", r.rep, r.q_exponent, r.weight);
                    }
                    t
                }
            };
            Ok((text, 0))
        }
        Command::Verify(args) => {
            let ctx = build_ctx(args.lie_type, cli)?;
            let suites: Vec<Suite> = if args.suite == "all" {
                Suite::ALL
                    .into_iter()
                    .filter(|s| *s != Suite::Oracle || ctx.rank() <= 3)
                    .collect()
            } else {
                let suite: Suite = args.suite.parse()?;
                if suite == Suite::Oracle && ctx.rank() > 3 {
                    return Err("the oracle suite requires rank <= 3".to_string());
                }
                vec![suite]
            };
            let reports: Vec<SuiteReport> = suites
                .into_iter()
                .map(|s| run_suite(s, &ctx, args.samples, args.seed, args.bound))
                .collect();
            let pass = reports.iter().all(SuiteReport::passed);
            let payload = VerifyDoc {
                seed: args.seed,
                samples: args.samples,
                bound: args.bound,
                suites: reports,
                pass,
            };
            let doc = Envelope {
                schema: SCHEMA_VERSION,
                command: "verify",
                lie_type: ctx.lie_type().to_string(),
                result: &payload,
            };
            let text = match cli.format {
                Format::Json => to_json(&doc),
                Format::Tsv => {
                    let mut t = String::from("suite\tchecks\tfailures\tpass\n");
                    for r in &payload.suites {
                        let _ = writeln!(
                            t,
                            "{}\t{}\t{}\t{}",
                            r.suite,
                            r.checks,
                            r.failures.len(),
                            r.passed()
                        );
                    }
                    t
                }
            };
            Ok((text, if pass { 0 } else { 2 }))
        }
    }
}

fn build_ctx(t: LieType, cli: &Cli) -> Result<RootSystem, String> {
    let ctx = RootSystem::new(t).map_err(|e| e.to_string())?;
    let dir = cli
        .cache_dir
        .clone()
        .or_else(|| std::env::var_os(CACHE_ENV_VAR).map(PathBuf::from));
    ctx.char_cache().set_dir(dir);
    Ok(ctx)
}

fn to_json<T: Serialize>(doc: &T) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("document serializes");
    text.push('\n');
    text
}

fn render_sum<T: Serialize>(format: Format, doc: &T, sum: &LabeledSum) -> String {
    match format {
        Format::Json => to_json(doc),
        Format::Tsv => {
            let mut t = String::from("label\tmult\n");
            for (label, mult) in sum.terms() {
                let _ = writeln!(t, "{label}\t{mult}");
            }
            let _ = writeln!(
                t,
                "# truncated={} bound={}",
                sum.truncated,
                sum.bound.map_or("-".to_string(), |b| b.to_string())
            );
            t
        }
    }
}

// ---------------------------------------------------------------------------
// Parsers
// ---------------------------------------------------------------------------

fn parse_weight(s: &str, rank: usize) -> Result<Weight, String> {
    let coords: Result<Vec<i64>, _> = s.split(',').map(|c| c.trim().parse::<i64>()).collect();
    let coords = coords.map_err(|_| format!("malformed weight `{s}`"))?;
    if coords.len() != rank {
        return Err(format!(
            "weight `{s}` has {} coordinates, expected {rank}",
            coords.len()
        ));
    }
    Ok(Weight::new(coords))
}

fn parse_dominant(s: &str, rank: usize) -> Result<Weight, String> {
    let w = parse_weight(s, rank)?;
    if !w.is_dominant() {
        return Err(format!("weight `{s}` is not dominant"));
    }
    Ok(w)
}

fn parse_level(s: &str) -> Result<LevelParam, String> {
    let mut level = LevelParam::identity();
    for token in s.split(',') {
        let token = token.trim();
        let next = match token {
            "id" => LevelParam::identity(),
            "shift" => LevelParam::shift(),
            "gko" => LevelParam::gko(),
            "opposite" => LevelParam::opposite(),
            "ffdual" => LevelParam::ff_dual(),
            _ => {
                let m: i64 = token
                    .strip_prefix('m')
                    .and_then(|v| v.parse().ok())
                    .ok_or_else(|| format!("unknown level token `{token}`"))?;
                LevelParam::m_shift(m)
            }
        };
        level = next.compose(&level);
    }
    Ok(level)
}

fn parse_label(
    ctx: &RootSystem,
    s: &str,
    level: &LevelParam,
) -> Result<ModuleLabel, String> {
    let rank = ctx.rank();
    let (kind, rest) = s
        .split_once(':')
        .ok_or_else(|| format!("label `{s}` needs a kind prefix like T: or W:"))?;
    match kind {
        "W" => ModuleLabel::weyl(*level, parse_dominant(rest, rank)?).map_err(|e| e.to_string()),
        "R" => {
            let (w, tag) = rest
                .split_once(':')
                .ok_or_else(|| format!("label `{s}` needs a tag: R:<coords>:<tag>"))?;
            ModuleLabel::reduced(*level, parse_dominant(w, rank)?, FTag::new(tag))
                .map_err(|e| e.to_string())
        }
        "T" => {
            let (l, m) = rest
                .split_once(';')
                .ok_or_else(|| format!("label `{s}` needs two weights: T:<l>;<m>"))?;
            ModuleLabel::principal_t(
                *level,
                parse_dominant(l, rank)?,
                parse_dominant(m, rank)?,
            )
            .map_err(|e| e.to_string())
        }
        "L" => {
            let (w, m) = rest
                .split_once(';')
                .ok_or_else(|| format!("label `{s}` needs a form index: L:<coords>;<m>"))?;
            let m: i64 = m.trim().parse().map_err(|_| format!("malformed m in `{s}`"))?;
            Ok(ModuleLabel::lattice(
                ctx.disc_class(&parse_weight(w, rank)?),
                m,
            ))
        }
        other => Err(format!("unknown label kind `{other}` in `{s}`")),
    }
}

fn parse_frac(s: &str) -> Result<Frac, String> {
    let parse_int = |t: &str| t.trim().parse::<i64>().map_err(|_| format!("malformed rational `{s}`"));
    match s.split_once('/') {
        Some((num, den)) => {
            let d = parse_int(den)?;
            if d == 0 {
                return Err(format!("zero denominator in `{s}`"));
            }
            Ok(Frac::new(parse_int(num)?, d))
        }
        None => Ok(Frac::from(parse_int(s)?)),
    }
}

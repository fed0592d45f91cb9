//! The `tpkit` command line.
//!
//! Exit codes: 0 when the checked property holds or the command succeeded,
//! 1 when a property fails, 2 for usage, parse and input errors.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use serde_json::{json, Value};

use crate::compound::{compound_with_guard, CompoundIndexMap};
use crate::condensation::{condensation_sequence, condense_with_provenance, corner_minor_check, sylvester_check};
use crate::error::{Result, TpError};
use crate::hankel::{
    check_hankel_condensations, hankel_from_sequence, is_tp_hankel, moment_spec, HankelSpec,
};
use crate::io::{emit_matrix, matrix_to_value, params_to_json, params_to_value, read_matrix, read_params, Format};
use crate::matrix::IndexSet;
use crate::netfact::{factorize, generate_tn, generate_tp, lindstrom_path_sum, PlanarNetwork};
use crate::positivity::{is_tn_k, is_tp, is_tp2c, is_tp_k, tp2c_threshold, PositivityVerdict, Property, DEFAULT_THRESHOLD_BITS};
use crate::rational::{format_rational, parse_rational, Rational};
use crate::reproduce::{verify, witness_text, DEFAULT_SEED, DEFAULT_TRIALS};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Parser, Debug)]
#[command(name = "tpkit", version, about = "Exact total-positivity toolkit")]
struct Cli {
    /// Matrix output format; reports print as JSON with `json`, as text otherwise.
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,
    /// Write the primary output to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<String>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true)]
    trials: Option<u64>,
    /// Print nothing; only the exit code reports the outcome.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Test TP_k, TN_k or TP_2(c).
    Check(CheckArgs),
    /// k-th compound matrix.
    Compound {
        #[arg(short)]
        k: usize,
        /// Also list the lexicographic row and column subsets.
        #[arg(long)]
        index_map: bool,
        /// Lift the 16-dimension guard.
        #[arg(long)]
        allow_large: bool,
        file: String,
    },
    /// Dodgson condensation D_k, or the whole sequence with --all.
    Condense {
        #[arg(short, required_unless_present = "all", conflicts_with = "all")]
        k: Option<usize>,
        #[arg(long)]
        all: bool,
        file: String,
    },
    /// Both sides of Sylvester's determinantal identity.
    Sylvester {
        #[arg(long, default_value = "", required_unless_present = "corner")]
        alpha: String,
        #[arg(long, required_unless_present = "corner")]
        delta: Option<String>,
        #[arg(long, required_unless_present = "corner")]
        gamma: Option<String>,
        /// Check the corner-minor corollary instead.
        #[arg(long)]
        corner: bool,
        file: String,
    },
    /// Bidiagonal factorization parameters of a nonsingular TN matrix.
    Factorize { file: String },
    /// A random TP (or, with --tn, TN) matrix with its parameters.
    Generate {
        #[arg(long)]
        size: usize,
        #[arg(long, default_value_t = 9)]
        magnitude: u64,
        #[arg(long)]
        tn: bool,
        /// Write the parameter file here; stdout then carries only the matrix.
        #[arg(long)]
        params: Option<String>,
    },
    /// Minor of a network matrix as a sum over vertex-disjoint path families.
    Lindstrom {
        #[arg(long)]
        rows: String,
        #[arg(long)]
        cols: String,
        params_file: String,
    },
    /// Hankel matrices from a sequence or from moments.
    Hankel(HankelArgs),
    /// Re-derive the reference examples and run the property suites.
    VerifyPaper {
        #[arg(long)]
        case: String,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct CheckMode {
    #[arg(long, value_name = "K")]
    tp: Option<usize>,
    #[arg(long, value_name = "K")]
    tn: Option<usize>,
    #[arg(long, value_name = "C")]
    tp2c: Option<String>,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[command(flatten)]
    mode: CheckMode,
    file: String,
}

#[derive(Args, Debug)]
struct HankelArgs {
    /// Comma-separated a_0, ..., a_2n.
    #[arg(long, conflicts_with = "moments", required_unless_present = "moments")]
    sequence: Option<String>,
    #[arg(long)]
    moments: bool,
    #[arg(long, default_value_t = 3, requires = "moments")]
    nodes: usize,
    #[arg(long, default_value_t = 9)]
    magnitude: u64,
    /// Run the positive-definiteness TP test.
    #[arg(long)]
    check_tp: bool,
    /// Check that every condensation is Hankel and TP.
    #[arg(long)]
    condensations: bool,
}

struct Outcome {
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }

    fn verdict(text: String, holds: bool) -> Self {
        Outcome {
            text,
            code: if holds { 0 } else { 1 },
        }
    }
}

/// Parses arguments, runs the command and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(out) => {
            if !cli.quiet {
                let mut text = out.text;
                if !text.ends_with('\n') {
                    text.push('\n');
                }
                match &cli.output {
                    Some(path) => {
                        if let Err(e) = std::fs::write(path, text) {
                            eprintln!("error: {path}: {e}");
                            return 2;
                        }
                    }
                    None => print!("{text}"),
                }
            }
            out.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                TpError::Consistency(_) => 1,
                _ => 2,
            }
        }
    }
}

fn matrix_format(cli: &Cli) -> Format {
    match cli.format {
        Some(OutputFormat::Csv) => Format::Csv,
        _ => Format::Json,
    }
}

fn json_out(cli: &Cli) -> bool {
    matches!(cli.format, Some(OutputFormat::Json))
}

fn execute(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Check(args) => check(cli, args),
        Command::Compound { k, index_map, allow_large, file } => {
            let a = read_matrix(file, None)?;
            let c = compound_with_guard(&a, *k, *allow_large)?;
            if !index_map {
                return Ok(Outcome::ok(emit_matrix(&c, matrix_format(cli))));
            }
            let map = CompoundIndexMap::new(a.rows(), a.cols(), *k)?;
            let sets = |v: &[IndexSet]| -> Vec<Vec<usize>> { v.iter().map(|s| s.indices().to_vec()).collect() };
            if let Format::Csv = matrix_format(cli) {
                let names = |v: &[IndexSet]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
                return Ok(Outcome::ok(format!(
                    "{}\nrows: {}\ncols: {}",
                    emit_matrix(&c, Format::Csv),
                    names(&map.row_sets),
                    names(&map.col_sets)
                )));
            }
            let doc = json!({
                "compound": matrix_to_value(&c),
                "row_sets": sets(&map.row_sets),
                "col_sets": sets(&map.col_sets),
            });
            Ok(Outcome::ok(doc.to_string()))
        }
        Command::Condense { k, all, file } => {
            let a = read_matrix(file, None)?;
            if *all {
                let seq = condensation_sequence(&a)?;
                let doc = json!({
                    "stages": seq.stages.iter().map(matrix_to_value).collect::<Vec<_>>(),
                    "determinant": format_rational(seq.determinant()),
                    "fallbacks": seq.fallbacks,
                });
                if let Format::Csv = matrix_format(cli) {
                    let mut s = String::new();
                    for (i, st) in seq.stages.iter().enumerate() {
                        s.push_str(&format!("D_{}\n{}\n", i + 1, emit_matrix(st, Format::Csv)));
                    }
                    s.push_str(&format!("determinant {}", format_rational(seq.determinant())));
                    return Ok(Outcome::ok(s));
                }
                return Ok(Outcome::ok(doc.to_string()));
            }
            let k = k.expect("clap enforces -k without --all");
            let (d, _) = condense_with_provenance(&a, k)?;
            Ok(Outcome::ok(emit_matrix(&d, matrix_format(cli))))
        }
        Command::Sylvester { alpha, delta, gamma, corner, file } => {
            let a = read_matrix(file, None)?;
            let out = if *corner {
                corner_minor_check(&a)?
            } else {
                let n = a.rows();
                let set = |s: &str| -> Result<IndexSet> { IndexSet::new(parse_indices(s)?, n) };
                sylvester_check(
                    &a,
                    &set(alpha)?,
                    &set(delta.as_deref().unwrap_or_default())?,
                    &set(gamma.as_deref().unwrap_or_default())?,
                )?
            };
            let text = if json_out(cli) {
                json!({
                    "lhs": format_rational(&out.lhs),
                    "rhs": format_rational(&out.rhs),
                    "holds": out.holds,
                })
                .to_string()
            } else {
                format!(
                    "lhs {}\nrhs {}\n{}",
                    format_rational(&out.lhs),
                    format_rational(&out.rhs),
                    if out.holds { "identity holds" } else { "identity fails" }
                )
            };
            Ok(Outcome::verdict(text, out.holds))
        }
        Command::Factorize { file } => {
            let a = read_matrix(file, None)?;
            Ok(Outcome::ok(params_to_json(&factorize(&a)?)))
        }
        Command::Generate { size, magnitude, tn, params } => {
            if *size == 0 {
                return Err(TpError::Usage("--size must be positive".into()));
            }
            let seed = cli.seed.unwrap_or(DEFAULT_SEED);
            let (a, p) = if *tn {
                generate_tn(*size, seed, *magnitude)?
            } else {
                generate_tp(*size, seed, *magnitude)?
            };
            if !tn && !is_tp(&a)?.holds {
                return Err(TpError::Consistency("generated matrix is not TP".into()));
            }
            match params {
                Some(path) => {
                    std::fs::write(path, params_to_json(&p) + "\n")?;
                    Ok(Outcome::ok(emit_matrix(&a, matrix_format(cli))))
                }
                None => Ok(Outcome::ok(
                    json!({ "matrix": matrix_to_value(&a), "params": params_to_value(&p) }).to_string(),
                )),
            }
        }
        Command::Lindstrom { rows, cols, params_file } => {
            let p = read_params(params_file)?;
            let net = PlanarNetwork::from_params(&p)?;
            let rs = IndexSet::new(parse_indices(rows)?, p.n)?;
            let cs = IndexSet::new(parse_indices(cols)?, p.n)?;
            let sum = lindstrom_path_sum(&net, &rs, &cs)?;
            let text = if json_out(cli) {
                json!({ "value": format_rational(&sum.value), "families": sum.families }).to_string()
            } else {
                format!("{}\nfamilies {}", format_rational(&sum.value), sum.families)
            };
            Ok(Outcome::ok(text))
        }
        Command::Hankel(args) => hankel(cli, args),
        Command::VerifyPaper { case } => {
            let seed = cli.seed.unwrap_or(DEFAULT_SEED);
            let trials = cli.trials.unwrap_or(DEFAULT_TRIALS);
            let reports = verify(case, seed, trials)?;
            let pass = reports.iter().all(|r| r.passed());
            let text = if json_out(cli) {
                if reports.len() == 1 {
                    reports[0].to_json()
                } else {
                    serde_json::to_string_pretty(&reports).expect("reports serialize")
                }
            } else {
                reports.iter().map(|r| r.to_text()).collect::<String>()
            };
            Ok(Outcome::verdict(text, pass))
        }
    }
}

fn parse_indices(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| TpError::Usage(format!("bad index {t:?} in {s:?}")))
        })
        .collect()
}

fn property_name(p: &Property) -> String {
    match p {
        Property::Tp => "TP".into(),
        Property::Tn => "TN".into(),
        Property::Tp2c(c) => format!("TP_2({})", format_rational(c)),
        Property::PositiveDefinite => "positive definite".into(),
        Property::TpHankel => "TP (Hankel criterion)".into(),
    }
}

fn verdict_value(v: &PositivityVerdict) -> Value {
    json!({
        "property": property_name(&v.property),
        "order": v.order,
        "holds": v.holds,
        "witness": v.witness.as_ref().map(|w| json!({
            "rows": w.rows.indices(),
            "cols": w.cols.indices(),
            "value": format_rational(&w.value),
        })),
    })
}

fn verdict_line(v: &PositivityVerdict) -> String {
    let name = match &v.property {
        Property::Tp | Property::Tn => format!("{}_{}", property_name(&v.property), v.order),
        other => property_name(other),
    };
    let mut s = format!("{name}: {}", if v.holds { "holds" } else { "fails" });
    if let Some(w) = witness_text(v) {
        s.push_str(&format!(" (witness {w})"));
    }
    s
}

/// `floor(r * 10^digits) / 10^digits` as a decimal string.
fn decimal(r: &Rational, digits: usize) -> String {
    let scale = BigInt::from(10).pow(digits as u32);
    let scaled = (r.numer() * &scale).div_floor(r.denom());
    let (int_part, frac) = scaled.abs().div_rem(&scale);
    let sign = if scaled.is_negative() { "-" } else { "" };
    format!("{sign}{int_part}.{:0>width$}", frac.to_string(), width = digits)
}

fn check(cli: &Cli, args: &CheckArgs) -> Result<Outcome> {
    let a = read_matrix(&args.file, None)?;
    let m = &args.mode;
    let mut extra = Vec::new();
    let mut lines = Vec::new();
    let verdict = if let Some(k) = m.tp {
        is_tp_k(&a, k)?
    } else if let Some(k) = m.tn {
        is_tn_k(&a, k)?
    } else {
        let c = parse_rational(m.tp2c.as_deref().expect("clap group requires one mode"))?;
        let v = is_tp2c(&a, &c)?;
        lines.push("TP_2(c) tested on adjacent 2x2 blocks a[i..i+1, j..j+1], i in 1..m-1, j in 1..n-1".to_string());
        if a.is_square() {
            let n = a.rows();
            let th = tp2c_threshold(n, DEFAULT_THRESHOLD_BITS);
            let certifies = th.certifies(&c);
            lines.push(format!(
                "threshold 4cos^2(pi/{}) in [{}, {}]",
                n + 1,
                decimal(&th.lower, 30),
                decimal(&th.upper, 30)
            ));
            let mut cert = json!({
                "lower": format_rational(&th.lower),
                "upper": format_rational(&th.upper),
                "c_at_least_upper": certifies,
            });
            if certifies && v.holds {
                let tp = is_tp(&a)?;
                lines.push(format!("c >= threshold, so TP follows; cross-check {}", verdict_line(&tp)));
                cert["tp_cross_check"] = Value::Bool(tp.holds);
                if !tp.holds {
                    return Err(TpError::Consistency("TP_2(c) above threshold but not TP".into()));
                }
            }
            extra.push(("threshold", cert));
        }
        v
    };
    let text = if json_out(cli) {
        let mut doc = verdict_value(&verdict);
        for (k, v) in extra {
            doc[k] = v;
        }
        doc.to_string()
    } else {
        lines.push(verdict_line(&verdict));
        lines.join("\n")
    };
    Ok(Outcome::verdict(text, verdict.holds))
}

fn hankel(cli: &Cli, args: &HankelArgs) -> Result<Outcome> {
    let spec = match &args.sequence {
        Some(s) => HankelSpec::new(
            s.split(',')
                .map(|t| parse_rational(t).map_err(|e| TpError::Usage(format!("--sequence: {e}"))))
                .collect::<Result<Vec<Rational>>>()?,
        )?,
        None => moment_spec(args.nodes, cli.seed.unwrap_or(DEFAULT_SEED), args.magnitude)?,
    };
    let a = hankel_from_sequence(&spec)?;
    let mut holds = true;
    let mut lines = vec![emit_matrix(&a, matrix_format(cli))];
    if args.check_tp {
        let v = is_tp_hankel(&a)?;
        holds &= v.holds;
        lines.push(if json_out(cli) { verdict_value(&v).to_string() } else { verdict_line(&v) });
    }
    if args.condensations {
        let c = check_hankel_condensations(&spec)?;
        for s in &c.stages {
            holds &= s.ok();
            lines.push(format!(
                "D_{}: hankel={} tp={} shift={}",
                s.k,
                s.hankel,
                s.tp.as_ref().is_some_and(|v| v.holds),
                s.shift_commutes.map_or("n/a".to_string(), |b| b.to_string())
            ));
        }
    }
    Ok(Outcome::verdict(lines.join("\n"), holds))
}

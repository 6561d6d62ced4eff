//! The `sympow` command line: `gens`, `betti`, `split`, `socle` and
//! `parallel`.
//!
//! Exit codes: 0 success, 1 verification or comparison failure, 2 usage
//! error, 3 cap exceeded.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::betti::{
    betti_oracle, complete_degree_cap, default_degree_cap, formula_table, min_socle_degree,
    parallel_bound_report, BettiTable, Convention, FieldSpec, RecursiveBetti,
};
use crate::error::{Error, Result};
use crate::graph::{ParallelizationSpec, SimpleGraph};
use crate::monomial::MonomialIdeal;
use crate::splitting::{
    build_split_unchecked, split_chain, theorem_split, verify_ek_with, SplitCertificate,
    SubsetCheck, Verdict,
};
use crate::symbolic::{parallel_symbolic_gens, SymbolicMethod, SymbolicPowerRequest};
use crate::Caps;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "sympow", version, about = "Symbolic powers of edge ideals")]
pub struct Cli {
    /// Worker threads for parallel stages (0 = one per core).
    #[arg(long, global = true, env = "SYMPOW_THREADS", default_value_t = 0)]
    pub threads: usize,
    /// Largest vertex count for minimal-cover enumeration.
    #[arg(long, global = true, default_value_t = crate::graph::DEFAULT_VERTEX_CAP)]
    pub vertex_cap: usize,
    /// Largest number of candidate generators built at once.
    #[arg(long, global = true, default_value_t = crate::DEFAULT_GENERATOR_CAP)]
    pub generator_cap: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the minimal generators of I(G)^(s) or I(G^alpha)^(s).
    Gens(GensArgs),
    /// Graded Betti numbers of I(G)^(s).
    Betti(BettiArgs),
    /// Build and verify Eliahou-Kervaire splittings of restricted ideals of I(K_m)^(s).
    Split(SplitArgs),
    /// Minimum socle degree of R/I(G)^(s).
    Socle(SocleArgs),
    /// Compare Betti tables of I(G)^(s) and I(G^alpha)^(s).
    Parallel(ParallelArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Args, Debug)]
pub struct GraphArgs {
    /// `complete:m`, `path:n`, `cycle:n`, or a path to an edge-list file.
    #[arg(long)]
    pub graph: String,
    /// The symbolic power s.
    #[arg(long)]
    pub power: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GensMethod {
    Auto,
    Intersection,
    FastPath,
}

#[derive(Args, Debug)]
pub struct GensArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    /// Parallelization vector, e.g. `2,1,1`.
    #[arg(long)]
    pub alpha: Option<String>,
    #[arg(long, value_enum, default_value_t = GensMethod::Auto)]
    pub method: GensMethod,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BettiMethod {
    Oracle,
    Recursive,
    Formula,
}

#[derive(Args, Debug)]
pub struct BettiArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[arg(long, value_enum, default_value_t = BettiMethod::Oracle)]
    pub method: BettiMethod,
    /// Also run this method and fail if the tables differ.
    #[arg(long, value_enum)]
    pub compare: Option<BettiMethod>,
    /// `gf:p` or `qq`.
    #[arg(long, default_value = "gf:32003")]
    pub field: String,
    #[arg(long, value_enum, default_value_t = ConventionArg::Quotient)]
    pub convention: ConventionArg,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
    /// Largest total degree visited by the oracle.
    #[arg(long)]
    pub degree_cap: Option<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    Ideal,
    Quotient,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Ideal => Convention::Ideal,
            ConventionArg::Quotient => Convention::Quotient,
        }
    }
}

#[derive(Args, Debug)]
pub struct SplitArgs {
    #[arg(long)]
    pub m: usize,
    /// The split index; omit with `--chain`.
    #[arg(long, required_unless_present = "chain", conflicts_with = "chain")]
    pub r: Option<usize>,
    #[arg(long)]
    pub power: u32,
    /// Check the splitting conditions.
    #[arg(long)]
    pub verify: bool,
    /// Emit the certificates for r = m, m-1, ..., 1.
    #[arg(long)]
    pub chain: bool,
    /// Build the certificate even when r = m - s - 1 (implies --verify).
    #[arg(long, conflicts_with = "chain")]
    pub force: bool,
    /// Largest domain checked exhaustively.
    #[arg(long, default_value_t = crate::splitting::DEFAULT_SUBSET_CAP)]
    pub subset_cap: usize,
    /// Check this many random subsets instead of all of them.
    #[arg(long, requires = "seed")]
    pub sample: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, value_enum, default_value_t = SplitFormat::Json)]
    pub format: SplitFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SplitFormat {
    Json,
    Pretty,
}

#[derive(Args, Debug)]
pub struct SocleArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[arg(long, value_enum, default_value_t = BettiMethod::Oracle)]
    pub method: BettiMethod,
    #[arg(long, default_value = "gf:32003")]
    pub field: String,
}

#[derive(Args, Debug)]
pub struct ParallelArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[arg(long)]
    pub alpha: String,
    /// Exit with status 1 unless every entry satisfies the proven bound.
    #[arg(long)]
    pub check_bound: bool,
    #[arg(long, default_value = "gf:32003")]
    pub field: String,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
    /// Largest total degree visited by the oracle.
    #[arg(long, default_value_t = crate::monomial::DEFAULT_DEGREE_CAP)]
    pub degree_cap: u32,
}

/// Entry point for the binary.
pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

/// Parse `args` and execute, writing results to `out` and diagnostics to
/// `err`. Returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    if cli.threads > 0 {
        // The global pool can only be configured once per process.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global();
    }
    match execute(&cli) {
        Ok(Outcome { text, code, note }) => {
            let _ = out.write_all(text.as_bytes());
            if let Some(note) = note {
                let _ = writeln!(err, "{note}");
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Exit status for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } => EXIT_CAP,
        Error::Parse(_)
        | Error::InvalidParameter(_)
        | Error::ExcludedParameter { .. }
        | Error::ChainBroken { .. }
        | Error::NonPrimeCharacteristic(_)
        | Error::IndexOutOfRange { .. }
        | Error::AmbientMismatch { .. }
        | Error::Io(_) => EXIT_USAGE,
        _ => EXIT_FAILURE,
    }
}

struct Outcome {
    text: String,
    code: i32,
    note: Option<String>,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome {
            text,
            code: EXIT_OK,
            note: None,
        }
    }
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let caps = Caps {
        vertex: cli.vertex_cap,
        generators: cli.generator_cap,
        ..Caps::default()
    };
    match &cli.command {
        Command::Gens(a) => cmd_gens(a, &caps),
        Command::Betti(a) => cmd_betti(a, &caps),
        Command::Split(a) => cmd_split(a),
        Command::Socle(a) => cmd_socle(a, &caps),
        Command::Parallel(a) => cmd_parallel(a, &caps),
    }
}

/// A builtin constructor, or else an edge-list file.
pub fn load_graph(source: &str) -> Result<SimpleGraph> {
    match source.parse::<SimpleGraph>() {
        Ok(g) => Ok(g),
        Err(parse_err) => {
            if Path::new(source).is_file() {
                SimpleGraph::parse_edge_list(&std::fs::read_to_string(source)?)
            } else {
                Err(parse_err)
            }
        }
    }
}

fn symbolic(g: &SimpleGraph, s: u32, method: GensMethod, caps: &Caps) -> Result<MonomialIdeal> {
    let method = match method {
        GensMethod::Intersection => SymbolicMethod::Intersection,
        GensMethod::FastPath => SymbolicMethod::FastPathComplete,
        GensMethod::Auto if g.is_complete() => SymbolicMethod::FastPathComplete,
        GensMethod::Auto => SymbolicMethod::Intersection,
    };
    SymbolicPowerRequest {
        graph: g.clone(),
        s,
        method,
    }
    .compute(caps)
}

fn cmd_gens(a: &GensArgs, caps: &Caps) -> Result<Outcome> {
    let g = load_graph(&a.graph.graph)?;
    let s = a.graph.power;
    let (ideal, names) = match &a.alpha {
        None => (symbolic(&g, s, a.method, caps)?, None),
        Some(text) => {
            let alpha = ParallelizationSpec::parse_alpha(text)?;
            let (ideal, spec) = parallel_symbolic_gens(&g, &alpha, s, caps)?;
            let names: Vec<String> = (0..spec.total_vertices())
                .map(|k| {
                    let (i, t) = spec.original_of(k);
                    format!("x{},{}", i + 1, t)
                })
                .collect();
            (ideal, Some(names))
        }
    };
    let mut gens: Vec<(String, String, u32)> = ideal
        .generators()
        .iter()
        .map(|w| (w.to_string(), w.degree()))
        .zip(ideal.generators())
        .map(|((text, d), w)| {
            let label = names
                .as_ref()
                .map_or_else(|| text.clone(), |n| labelled(w.exponents(), n));
            (text, label, d)
        })
        .collect();
    gens.sort_by(|x, y| x.2.cmp(&y.2).then_with(|| x.0.cmp(&y.0)));

    let text = match a.format {
        Format::Json => {
            let items: Vec<serde_json::Value> = gens
                .iter()
                .map(|(t, l, d)| {
                    let mut v = serde_json::json!({ "monomial": t, "degree": d });
                    if names.is_some() {
                        v["labelled"] = serde_json::Value::String(l.clone());
                    }
                    v
                })
                .collect();
            let mut doc = serde_json::json!({
                "ambient": ideal.ambient(),
                "power": s,
                "count": gens.len(),
                "generators": items,
            });
            if let Some(alpha) = &a.alpha {
                doc["alpha"] = serde_json::Value::String(alpha.clone());
            }
            format!("{doc}\n")
        }
        Format::Csv => {
            let mut out = String::from("monomial,degree\n");
            for (t, _, d) in &gens {
                let _ = writeln!(out, "{t},{d}");
            }
            out
        }
        Format::Pretty => {
            let mut out = format!(
                "{} minimal generators in {} variables\n",
                gens.len(),
                ideal.ambient()
            );
            for (_, l, d) in &gens {
                let _ = writeln!(out, "{d:>4}  {l}");
            }
            out
        }
    };
    Ok(Outcome::ok(text))
}

fn labelled(exps: &[u32], names: &[String]) -> String {
    let parts: Vec<String> = exps
        .iter()
        .zip(names)
        .filter(|(&e, _)| e > 0)
        .map(|(&e, n)| {
            if e == 1 {
                n.clone()
            } else {
                format!("{n}^{e}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

fn complete_order(g: &SimpleGraph, what: &str) -> Result<usize> {
    if !g.is_complete() || g.vertex_count() < 2 {
        return Err(Error::InvalidParameter(format!(
            "the {what} method needs a complete graph with at least 2 vertices"
        )));
    }
    Ok(g.vertex_count())
}

fn betti_table(
    g: &SimpleGraph,
    s: u32,
    method: BettiMethod,
    field: FieldSpec,
    degree_cap: Option<u32>,
    caps: &Caps,
) -> Result<BettiTable> {
    match method {
        BettiMethod::Oracle => {
            let ideal = symbolic(g, s, GensMethod::Auto, caps)?;
            let cap = degree_cap.unwrap_or_else(|| {
                if g.is_complete() && g.vertex_count() >= 2 {
                    complete_degree_cap(g.vertex_count(), s)
                } else {
                    default_degree_cap(&ideal)
                }
            });
            betti_oracle(&ideal, field, cap)
        }
        BettiMethod::Recursive => {
            let m = complete_order(g, "recursive")?;
            Ok(RecursiveBetti::new(field).complete(m, s)?.to_quotient())
        }
        BettiMethod::Formula => {
            let m = complete_order(g, "formula")?;
            formula_table(m, s, field)
        }
    }
}

fn method_name(m: BettiMethod) -> &'static str {
    match m {
        BettiMethod::Oracle => "oracle",
        BettiMethod::Recursive => "recursive",
        BettiMethod::Formula => "formula",
    }
}

fn render_table(t: &BettiTable, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", t.to_json()),
        Format::Csv => t.to_csv(),
        Format::Pretty => t.pretty(),
    }
}

fn cmd_betti(a: &BettiArgs, caps: &Caps) -> Result<Outcome> {
    let g = load_graph(&a.graph.graph)?;
    let field: FieldSpec = a.field.parse()?;
    let s = a.graph.power;
    let table = betti_table(&g, s, a.method, field, a.degree_cap, caps)?;
    let shown = table.to_convention(a.convention.into());
    let mut outcome = Outcome::ok(render_table(&shown, a.format));
    if let Some(other) = a.compare {
        let second = betti_table(&g, s, other, field, a.degree_cap, caps)?;
        if second != table {
            let mut diff = format!(
                "{} and {} tables differ (quotient convention):",
                method_name(a.method),
                method_name(other)
            );
            let mut keys: Vec<(usize, u32)> = table
                .entries()
                .chain(second.entries())
                .map(|(i, j, _)| (i, j))
                .collect();
            keys.sort_unstable();
            keys.dedup();
            for (i, j) in keys {
                let (x, y) = (table.get(i, j), second.get(i, j));
                if x != y {
                    let _ = write!(diff, "\n  ({i},{j}): {x} vs {y}");
                }
            }
            outcome.code = EXIT_FAILURE;
            outcome.note = Some(diff);
        } else {
            outcome.note = Some(format!(
                "{} and {} agree",
                method_name(a.method),
                method_name(other)
            ));
        }
    }
    Ok(outcome)
}

fn subset_check(a: &SplitArgs) -> SubsetCheck {
    match (a.sample, a.seed) {
        (Some(samples), Some(seed)) => SubsetCheck::Sampled { samples, seed },
        _ => SubsetCheck::Exhaustive { cap: a.subset_cap },
    }
}

fn verdict_json(v: &Verdict) -> serde_json::Value {
    match v {
        Verdict::Valid {
            exhaustive,
            subsets_checked,
        } => serde_json::json!({
            "valid": true,
            "exhaustive": exhaustive,
            "subsets_checked": subsets_checked,
        }),
        Verdict::Invalid(vs) => serde_json::json!({
            "valid": false,
            "violations": vs.iter().map(ToString::to_string).collect::<Vec<_>>(),
        }),
    }
}

fn verdict_line(v: &Verdict) -> String {
    match v {
        Verdict::Valid {
            exhaustive: true,
            subsets_checked,
        } => format!("valid (exhaustive, {subsets_checked} subsets)"),
        Verdict::Valid {
            exhaustive: false,
            subsets_checked,
        } => format!("valid on {subsets_checked} sampled subsets (NOT exhaustive)"),
        Verdict::Invalid(vs) => {
            let mut out = String::from("INVALID");
            for v in vs {
                let _ = write!(out, "\n    {v}");
            }
            out
        }
    }
}

fn cmd_split(a: &SplitArgs) -> Result<Outcome> {
    let s = a.power;
    let certs: Vec<SplitCertificate> = if a.chain {
        split_chain(a.m, s)?
    } else {
        let r = a.r.expect("clap requires --r without --chain");
        if a.force {
            vec![build_split_unchecked(a.m, s, r)?]
        } else {
            vec![theorem_split(a.m, s, r)?]
        }
    };
    let verify = a.verify || a.force;
    let verdicts: Vec<Option<Verdict>> = certs
        .iter()
        .map(|c| {
            verify
                .then(|| verify_ek_with(c, subset_check(a)))
                .transpose()
        })
        .collect::<Result<_>>()?;
    let all_valid = verdicts.iter().flatten().all(Verdict::is_valid);

    let text = match a.format {
        SplitFormat::Json => {
            let docs: Vec<serde_json::Value> = certs
                .iter()
                .zip(&verdicts)
                .map(|(c, v)| {
                    let mut doc: serde_json::Value =
                        serde_json::from_str(&c.to_json()).expect("certificate JSON is valid");
                    if let Some(v) = v {
                        doc["verdict"] = verdict_json(v);
                    }
                    doc
                })
                .collect();
            let doc = if a.chain {
                serde_json::Value::Array(docs)
            } else {
                docs.into_iter().next().expect("one certificate")
            };
            format!("{doc}\n")
        }
        SplitFormat::Pretty => {
            let mut out = String::new();
            for (c, v) in certs.iter().zip(&verdicts) {
                let p = c.params.expect("built certificates carry parameters");
                let _ = writeln!(
                    out,
                    "m={} r={} s={}: |G(I)|={} |G(L1)|={} |G(L2)|={} |G(L1 ∩ L2)|={}",
                    p.m,
                    p.r,
                    p.s,
                    c.ideal.len(),
                    c.left.len(),
                    c.right.len(),
                    c.map.len()
                );
                if let Some(v) = v {
                    let _ = writeln!(out, "  {}", verdict_line(v));
                }
            }
            out
        }
    };
    Ok(Outcome {
        text,
        code: if all_valid { EXIT_OK } else { EXIT_FAILURE },
        note: None,
    })
}

fn cmd_socle(a: &SocleArgs, caps: &Caps) -> Result<Outcome> {
    let g = load_graph(&a.graph.graph)?;
    let field: FieldSpec = a.field.parse()?;
    let table = betti_table(&g, a.graph.power, a.method, field, None, caps)?;
    let d = min_socle_degree(&table, g.vertex_count())?;
    Ok(Outcome::ok(format!("{d}\n")))
}

fn cmd_parallel(a: &ParallelArgs, caps: &Caps) -> Result<Outcome> {
    let g = load_graph(&a.graph.graph)?;
    let field: FieldSpec = a.field.parse()?;
    let alpha = ParallelizationSpec::parse_alpha(&a.alpha)?;
    let caps = Caps {
        degree: a.degree_cap,
        ..*caps
    };
    let report = parallel_bound_report(&g, &alpha, a.graph.power, field, &caps)?;
    let text = match a.format {
        Format::Json => format!("{}\n", report.to_json()),
        Format::Csv => report.to_csv(),
        Format::Pretty => report.pretty(),
    };
    let failed = a.check_bound && !report.proven_bound_holds();
    Ok(Outcome {
        text,
        code: if failed { EXIT_FAILURE } else { EXIT_OK },
        note: failed.then(|| "the proven lower bound fails at some entry".to_string()),
    })
}

//! Command-line surface for the monoid library.
//!
//! Subcommands read one JSON object from stdin or `--input` (a monoid
//! `{"generators": [[..], ..]}`, a named family `{"family": "gk",
//! "param": 2}`, or any report carrying a `"monoid"` block) and write a
//! JSON report to stdout, so commands compose with pipes:
//!
//! ```text
//! monoidalg family gk --k 2 | monoidalg compare
//! ```
//!
//! Exit codes: 0 success, 1 failed checks, 2 bad input or usage,
//! 3 exhausted computation budget (with a partial report on stdout).

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use monoidalg::cones::DEFAULT_FACE_CAP;
use monoidalg::graphs::{
    edge_monoid, exceptional_pairs, odd_cycles, oh_normalization_generators, SimpleGraph,
    DEFAULT_CYCLE_CAP,
};
use monoidalg::monoid::{gk, new_monoid, rm, veronese, AffineMonoid};
use monoidalg::normalize::{
    hilbert_basis_with, holes_up_to_with, infer_hole_families_with, is_spanning,
    verdict_from_inference, S2Verdict,
};
use monoidalg::series::{
    compare_degrees_with, h_polynomial_with, series_of_join, CompareOptions, HPolynomial,
};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

/// Default per-degree point budget. Sized so the documented examples,
/// including the degree-16 ten-dimensional edge-ring comparison, run to
/// completion without flags.
const CLI_SLICE_CAP: usize = 30_000_000;

/// Writes one line to stdout. A closed pipe (the downstream consumer has
/// seen enough) ends the process quietly; any other write failure is a
/// hard error.
macro_rules! outln {
    ($($arg:tt)*) => {{
        use std::io::Write;
        let mut out = std::io::stdout().lock();
        if let Err(e) = writeln!(out, $($arg)*) {
            if e.kind() == std::io::ErrorKind::BrokenPipe {
                std::process::exit(0);
            }
            eprintln!("error: cannot write to stdout: {e}");
            std::process::exit(2);
        }
    }};
}

#[derive(Parser)]
#[command(
    name = "monoidalg",
    version,
    about = "Exact Hilbert series, normalizations, and hole analysis for homogeneous affine monoids"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Degree counts and the series numerator of a monoid.
    Hilb(HilbArgs),
    /// Hilbert basis, normality, and spanning report.
    Normalize(NormalizeArgs),
    /// Hole slices, inferred hole families, S2 verdict, and depth estimate.
    Holes(HolesArgs),
    /// Side-by-side numerators of a monoid and its normalization.
    Compare(CompareArgs),
    /// Edge monoid of a graph with its odd-cycle pair description.
    EdgeRing(EdgeRingArgs),
    /// Join of two monoids with a convolution audit.
    Join(JoinArgs),
    /// Emit a named family member as a monoid input.
    Family(FamilyArgs),
    /// Run the built-in reproduction battery.
    Check(CheckArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Input file (JSON); reads stdin when omitted.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct HilbArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Largest degree to enumerate; defaults to dim + window + 2.
    #[arg(long)]
    degree_bound: Option<usize>,
    /// Vanishing trailing differences required by the numerator certificate.
    #[arg(long, default_value_t = 4)]
    window: usize,
    /// Per-degree point budget.
    #[arg(long, default_value_t = CLI_SLICE_CAP)]
    slice_cap: usize,
    /// Human-readable text instead of JSON.
    #[arg(long)]
    pretty: bool,
}

#[derive(Args)]
struct NormalizeArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Degree through which the basis certificate runs; defaults to dim.
    #[arg(long)]
    verify_bound: Option<usize>,
    /// Per-degree point budget.
    #[arg(long, default_value_t = CLI_SLICE_CAP)]
    slice_cap: usize,
}

#[derive(Args)]
struct HolesArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Largest degree to enumerate; defaults to dim + 6.
    #[arg(long)]
    degree_bound: Option<usize>,
    /// Degrees held back as a truncation cushion; defaults to dim.
    #[arg(long)]
    margin: Option<usize>,
    /// Face budget for the family search.
    #[arg(long, default_value_t = DEFAULT_FACE_CAP)]
    face_cap: usize,
    /// Per-degree point budget.
    #[arg(long, default_value_t = CLI_SLICE_CAP)]
    slice_cap: usize,
}

#[derive(Args)]
struct CompareArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Largest degree to enumerate; defaults to dim + window + 2.
    #[arg(long)]
    degree_bound: Option<usize>,
    /// Vanishing trailing differences required by the numerator certificate.
    #[arg(long, default_value_t = 4)]
    window: usize,
    /// Degrees held back from family inference; defaults to dim.
    #[arg(long)]
    margin: Option<usize>,
    /// Face budget for the family search.
    #[arg(long, default_value_t = DEFAULT_FACE_CAP)]
    face_cap: usize,
    /// Per-degree point budget.
    #[arg(long, default_value_t = CLI_SLICE_CAP)]
    slice_cap: usize,
    /// Human-readable text instead of JSON.
    #[arg(long)]
    pretty: bool,
}

#[derive(Args)]
struct EdgeRingArgs {
    /// Graph file (JSON `{"vertices": n, "edges": [[u,v],..]}`); reads
    /// stdin when omitted.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Odd-cycle enumeration budget.
    #[arg(long, default_value_t = DEFAULT_CYCLE_CAP)]
    cycle_cap: usize,
    /// Per-degree point budget for the normality check.
    #[arg(long, default_value_t = CLI_SLICE_CAP)]
    slice_cap: usize,
}

#[derive(Args)]
struct JoinArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Second factor (JSON file).
    #[arg(long)]
    with: PathBuf,
    /// Largest degree of the convolution audit.
    #[arg(long, default_value_t = 3)]
    degree_bound: usize,
}

#[derive(Args)]
struct FamilyArgs {
    #[command(subcommand)]
    which: FamilyCommand,
}

#[derive(Subcommand)]
enum FamilyCommand {
    /// Edge monoid of the two-triangle chain with k connecting paths.
    Gk {
        /// Number of connecting paths.
        #[arg(long)]
        k: usize,
    },
    /// Four-generator plane monoid whose degree gap is m.
    Rm {
        /// Gap parameter.
        #[arg(long)]
        m: usize,
    },
    /// Degree-n Veronese monoid of the plane.
    Veronese {
        /// Veronese degree.
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args)]
struct CheckArgs {
    /// Machine-readable report instead of text.
    #[arg(long)]
    json: bool,
}

/// A failed run, carrying the process exit code.
enum Failure {
    /// Bad input or usage (exit 2).
    Usage(String),
    /// Exhausted computation budget (exit 3, partial report on stdout).
    Budget { message: String, partial: Value },
    /// A verification failed (exit 1).
    Check(String),
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure::Usage(message.into())
    }
}

/// Maps library errors onto exit codes: budget-style errors carry what
/// was completed, input-shape errors are usage errors.
fn classify(e: monoidalg::Error) -> Failure {
    use monoidalg::Error;
    match &e {
        Error::PointCapExceeded { completed, .. } => Failure::Budget {
            message: e.to_string(),
            partial: json!({ "completed": completed }),
        },
        Error::FaceCapExceeded { .. }
        | Error::CycleCapExceeded { .. }
        | Error::CoordinateOverflow => Failure::Budget {
            message: e.to_string(),
            partial: json!({}),
        },
        Error::NonStabilized { degree, tail } => Failure::Budget {
            message: e.to_string(),
            partial: json!({
                "verified_degree": degree,
                "trailing_differences": ints(tail),
            }),
        },
        Error::CertificateFailed { .. } => Failure::Check(e.to_string()),
        _ => Failure::Usage(e.to_string()),
    }
}

fn int_value(b: &BigInt) -> Value {
    i64::try_from(b)
        .map(Value::from)
        .unwrap_or_else(|_| Value::from(b.to_string()))
}

fn ints(values: &[BigInt]) -> Vec<Value> {
    values.iter().map(int_value).collect()
}

fn s2_string(verdict: &S2Verdict) -> &'static str {
    match verdict {
        S2Verdict::Consistent => "consistent",
        S2Verdict::Violated { .. } => "violated",
        S2Verdict::Inconclusive => "inconclusive",
    }
}

fn monoid_block(q: &AffineMonoid) -> Value {
    json!({ "generators": q.generators() })
}

fn read_input_text(path: &Option<PathBuf>) -> Result<String, Failure> {
    match path {
        Some(p) => fs::read_to_string(p)
            .map_err(|e| Failure::usage(format!("cannot read {}: {e}", p.display()))),
        None => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::usage(format!("cannot read stdin: {e}")))?;
            Ok(text)
        }
    }
}

fn read_input_value(path: &Option<PathBuf>) -> Result<Value, Failure> {
    let text = read_input_text(path)?;
    serde_json::from_str(&text).map_err(|e| Failure::usage(format!("invalid JSON input: {e}")))
}

/// Accepts a monoid block, a report carrying one, or a named family.
fn monoid_from_value(value: &Value) -> Result<AffineMonoid, Failure> {
    if let Some(inner) = value.get("monoid") {
        return monoid_from_value(inner);
    }
    if let Some(gens) = value.get("generators") {
        let gens: Vec<Vec<i64>> = serde_json::from_value(gens.clone())
            .map_err(|e| Failure::usage(format!("invalid generator list: {e}")))?;
        return new_monoid(&gens).map_err(classify);
    }
    if let Some(name) = value.get("family") {
        let name = name
            .as_str()
            .ok_or_else(|| Failure::usage("family name must be a string"))?;
        let param = value
            .get("param")
            .and_then(Value::as_u64)
            .ok_or_else(|| Failure::usage("family input needs an integer \"param\""))?
            as usize;
        let q = match name {
            "gk" => gk(param),
            "rm" => rm(param),
            "veronese" => veronese(param),
            other => return Err(Failure::usage(format!("unknown family {other:?}"))),
        };
        return q.map_err(classify);
    }
    Err(Failure::usage(
        "input needs \"generators\", a \"monoid\" block, or a \"family\" name",
    ))
}

fn print_report(report: &Value) {
    outln!(
        "{}",
        serde_json::to_string_pretty(report).expect("reports are valid JSON")
    );
}

/// Renders coefficients as a polynomial in `t`.
fn render_poly(cs: &[BigInt]) -> String {
    let mut out = String::new();
    for (i, c) in cs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let magnitude = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let unit = magnitude == BigInt::from(1);
        match i {
            0 => out.push_str(&magnitude.to_string()),
            _ => {
                if !unit {
                    out.push_str(&magnitude.to_string());
                }
                out.push('t');
                if i > 1 {
                    out.push_str(&format!("^{i}"));
                }
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn render_series(h: &HPolynomial) -> String {
    format!("({}) / (1 - t)^{}", render_poly(&h.coefficients), h.dim)
}

fn cmd_hilb(args: &HilbArgs) -> Result<(), Failure> {
    let value = read_input_value(&args.input.input)?;
    let q = monoid_from_value(&value)?;
    let bound = args.degree_bound.unwrap_or(q.dim() + args.window + 2);
    let slices = q
        .degree_slices_with(bound, args.slice_cap, Some(0))
        .map_err(classify)?;
    let counts = slices.graded_count();
    if slices.cap_hit().is_some() {
        return Err(Failure::Budget {
            message: format!(
                "point budget {} exhausted; counts complete through degree {}",
                args.slice_cap,
                slices.completed()
            ),
            partial: json!({
                "monoid": monoid_block(&q),
                "dim": q.dim(),
                "counts": ints(&counts.counts),
                "verified_degree": slices.completed(),
            }),
        });
    }
    let h = match h_polynomial_with(&counts, q.dim(), args.window) {
        Ok(h) => h,
        Err(e) => {
            let mut failure = classify(e);
            if let Failure::Budget { partial, .. } = &mut failure {
                partial["monoid"] = monoid_block(&q);
                partial["dim"] = json!(q.dim());
                partial["counts"] = Value::from(ints(&counts.counts));
            }
            return Err(failure);
        }
    };
    if args.pretty {
        outln!("dim    = {}", q.dim());
        outln!("counts = {:?} (degrees 0..={bound})", counts.counts);
        outln!("series = {}", render_series(&h));
        outln!("h(1)   = {}", h.at_one());
    } else {
        print_report(&json!({
            "monoid": monoid_block(&q),
            "dim": q.dim(),
            "counts": ints(&counts.counts),
            "h": ints(&h.coefficients),
            "verified_degree": bound,
        }));
    }
    Ok(())
}

fn cmd_normalize(args: &NormalizeArgs) -> Result<(), Failure> {
    let value = read_input_value(&args.input.input)?;
    let q = monoid_from_value(&value)?;
    let verify = args.verify_bound.unwrap_or(q.dim());
    let basis = hilbert_basis_with(&q, verify, args.slice_cap).map_err(classify)?;
    let generators: std::collections::BTreeSet<&[i64]> =
        q.generators().iter().map(Vec::as_slice).collect();
    let normal = basis
        .elements
        .iter()
        .all(|e| generators.contains(e.as_slice()));
    let spanning = is_spanning(&q.cross_section().map_err(classify)?).map_err(classify)?;
    print_report(&json!({
        "monoid": monoid_block(&q),
        "dim": q.dim(),
        "hilbert_basis": basis.elements,
        "normal": normal,
        "spanning": spanning,
        "verified_degree": basis.verified_up_to,
    }));
    Ok(())
}

fn cmd_holes(args: &HolesArgs) -> Result<(), Failure> {
    let value = read_input_value(&args.input.input)?;
    let q = monoid_from_value(&value)?;
    let bound = args.degree_bound.unwrap_or(q.dim() + 6);
    let margin = args.margin.unwrap_or(q.dim());
    let inference = infer_hole_families_with(&q, bound, margin, args.face_cap, args.slice_cap)
        .map_err(classify)?;
    let holes =
        holes_up_to_with(&q, inference.coverage_degree, args.slice_cap).map_err(classify)?;
    let families: Vec<Value> = inference
        .families
        .iter()
        .map(|f| {
            json!({
                "base": f.base,
                "base_degree": f.base_degree,
                "face_dim": f.face.dim,
                "coverage": f.coverage,
            })
        })
        .collect();
    let verdict = verdict_from_inference(q.dim(), &inference);
    let depth = inference.families.first().and_then(|_| {
        monoidalg::normalize::depth_from_inference(&inference)
    });
    print_report(&json!({
        "monoid": monoid_block(&q),
        "dim": q.dim(),
        "hole_counts": ints(&holes.graded_count().counts),
        "families": families,
        "uncovered": inference.uncovered,
        "s2": s2_string(&verdict),
        "depth_estimate": depth,
        "verified_degree": inference.coverage_degree,
    }));
    Ok(())
}

fn cmd_compare(args: &CompareArgs) -> Result<(), Failure> {
    let value = read_input_value(&args.input.input)?;
    let q = monoid_from_value(&value)?;
    let bound = args.degree_bound.unwrap_or(q.dim() + args.window + 2);
    let options = CompareOptions {
        window: Some(args.window),
        slice_cap: args.slice_cap,
        face_cap: args.face_cap,
        margin: args.margin,
    };
    let cmp = compare_degrees_with(&q, bound, &options).map_err(classify)?;
    if args.pretty {
        outln!("dim     = {}", q.dim());
        outln!("series  = {}", render_series(&cmp.h));
        outln!("closure = {}", render_series(&cmp.h_normalization));
        outln!("gap     = {} (degree of closure numerator minus degree of numerator)", cmp.gap);
        outln!(
            "h(1)    = {} and {}{}",
            cmp.at_one,
            cmp.at_one_normalization,
            if cmp.at_one_match { " (equal)" } else { " (MISMATCH)" }
        );
        outln!("s2      = {}", s2_string(&cmp.s2));
        match cmp.depth_estimate {
            Some(d) => outln!("depth   = {d}"),
            None => outln!("depth   = unresolved"),
        }
    } else {
        print_report(&json!({
            "monoid": monoid_block(&q),
            "dim": q.dim(),
            "counts": ints(&cmp.h.reconstruct_counts(bound)),
            "h": ints(&cmp.h.coefficients),
            "h_normalization": ints(&cmp.h_normalization.coefficients),
            "gap": cmp.gap,
            "s2": s2_string(&cmp.s2),
            "depth_estimate": cmp.depth_estimate,
            "verified_degree": bound,
        }));
    }
    Ok(())
}

fn cmd_edge_ring(args: &EdgeRingArgs) -> Result<(), Failure> {
    let value = read_input_value(&args.graph)?;
    let vertices = value
        .get("vertices")
        .and_then(Value::as_u64)
        .ok_or_else(|| Failure::usage("graph input needs an integer \"vertices\""))?
        as usize;
    let edges: Vec<(usize, usize)> = value
        .get("edges")
        .cloned()
        .map(serde_json::from_value)
        .transpose()
        .map_err(|e| Failure::usage(format!("invalid edge list: {e}")))?
        .ok_or_else(|| Failure::usage("graph input needs an \"edges\" list"))?;
    let g = SimpleGraph::new(vertices, &edges).map_err(classify)?;
    let q = edge_monoid(&g).map_err(classify)?;
    let enumeration = odd_cycles(&g, args.cycle_cap);
    if !enumeration.complete {
        return Err(Failure::Budget {
            message: format!("odd-cycle budget {} exhausted", args.cycle_cap),
            partial: json!({ "odd_cycles_found": enumeration.cycles.len() }),
        });
    }
    let pairs = exceptional_pairs(&g, args.cycle_cap).map_err(classify)?;
    let oh = oh_normalization_generators(&g, args.cycle_cap);
    let basis =
        hilbert_basis_with(&q, q.dim().saturating_sub(1), args.slice_cap).map_err(classify)?;
    let generators: std::collections::BTreeSet<&[i64]> =
        q.generators().iter().map(Vec::as_slice).collect();
    let normal = basis
        .elements
        .iter()
        .all(|e| generators.contains(e.as_slice()));
    let pair_values: Vec<Value> = pairs
        .iter()
        .map(|p| json!({ "first": p.cycle_a, "second": p.cycle_b }))
        .collect();
    print_report(&json!({
        "graph": { "vertices": vertices, "edges": edges },
        "monoid": monoid_block(&q),
        "dim": q.dim(),
        "normal": normal,
        "odd_cycle_count": enumeration.cycles.len(),
        "exceptional_pairs": pair_values,
        "oh_generators": oh.generators,
    }));
    Ok(())
}

fn cmd_join(args: &JoinArgs) -> Result<(), Failure> {
    let first = monoid_from_value(&read_input_value(&args.input.input)?)?;
    let second = monoid_from_value(&read_input_value(&Some(args.with.clone()))?)?;
    let join = first.join(&second).map_err(classify)?;
    let report = series_of_join(&first, &second, args.degree_bound).map_err(classify)?;
    print_report(&json!({
        "monoid": monoid_block(&join),
        "dim": join.dim(),
        "counts": ints(&report.join_counts.counts),
        "normalization_counts": ints(&report.join_normalization_counts.counts),
        "convolution_matches": report.holds(),
        "verified_degree": report.verified_degree,
    }));
    Ok(())
}

fn cmd_family(args: &FamilyArgs) -> Result<(), Failure> {
    let (name, param, q) = match &args.which {
        FamilyCommand::Gk { k } => ("gk", *k, gk(*k)),
        FamilyCommand::Rm { m } => ("rm", *m, rm(*m)),
        FamilyCommand::Veronese { n } => ("veronese", *n, veronese(*n)),
    };
    let q = q.map_err(classify)?;
    print_report(&json!({
        "family": name,
        "param": param,
        "dim": q.dim(),
        "monoid": monoid_block(&q),
    }));
    Ok(())
}

fn cmd_check(args: &CheckArgs) -> Result<(), Failure> {
    let reports = monoidalg::checks::run_all();
    let failed = reports.iter().filter(|r| !r.passed).count();
    if args.json {
        let values: Vec<Value> = reports
            .iter()
            .map(|r| {
                json!({
                    "name": r.name,
                    "passed": r.passed,
                    "details": r.details,
                })
            })
            .collect();
        print_report(&Value::from(values));
    } else {
        for report in &reports {
            let status = if report.passed { "PASS" } else { "FAIL" };
            outln!("[{status}] {}", report.name);
            for line in &report.details {
                outln!("    {line}");
            }
        }
        outln!(
            "{}/{} checks passed",
            reports.len() - failed,
            reports.len()
        );
    }
    if failed > 0 {
        return Err(Failure::Check(format!("{failed} check(s) failed")));
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Hilb(args) => cmd_hilb(args),
        Command::Normalize(args) => cmd_normalize(args),
        Command::Holes(args) => cmd_holes(args),
        Command::Compare(args) => cmd_compare(args),
        Command::EdgeRing(args) => cmd_edge_ring(args),
        Command::Join(args) => cmd_join(args),
        Command::Family(args) => cmd_family(args),
        Command::Check(args) => cmd_check(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Budget { message, partial }) => {
            eprintln!("error: {message}");
            print_report(&partial);
            ExitCode::from(3)
        }
        Err(Failure::Check(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use drgforge_core::cayley::{build_from_spec, GraphDescriptor};
use drgforge_core::classify::{classify_with_report, search_hadamard_pairs};
use drgforge_core::design::search_difference_sets;
use drgforge_core::drg::{
    antipodal_quotient, cayley_quotient, check_cayley, check_distance_regular, halved_graphs,
    intersection_matrix_spectrum, recognize_named, BaseMode,
};
use drgforge_core::group::index2_subgroups;
use drgforge_core::selfcheck::run_selfcheck;
use drgforge_core::{ConnectionSpec, Error, Graph, Group, GroupFamily, SpectrumReport, Subgroup};

#[derive(Parser)]
#[command(name = "drgforge", version, about = "Distance-regular Cayley graphs over semi-dihedral and related groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(clap::Args)]
struct GraphArgs {
    /// Group family: sd, psd, dihedral, dicyclic, cyclic or cyclic-x-z2.
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: usize,
    /// Comma-separated residues; empty string for the empty set.
    #[arg(long = "R", default_value = "")]
    r: String,
    /// Comma-separated residues; empty string for the empty set.
    #[arg(long = "T", default_value = "")]
    t: String,
    #[arg(long, value_enum, default_value = "text")]
    output: Output,
}

impl GraphArgs {
    fn spec(&self) -> Result<ConnectionSpec, Error> {
        let family = GroupFamily::from_name(&self.family, self.n)?;
        ConnectionSpec::parse(family, &self.r, &self.t)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide distance-regularity and report the intersection array.
    Verify {
        #[command(flatten)]
        graph: GraphArgs,
        /// Check every base vertex instead of the identity alone.
        #[arg(long)]
        full: bool,
    },
    /// Name the case of the classification with its witness.
    Classify {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Eigenvalues and multiplicities from the intersection array.
    Spectrum {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Antipodal quotient, or the quotient by <rho^d> with --subgroup d.
    Quotient {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        subgroup: Option<usize>,
    },
    /// Both halved graphs of a bipartite graph.
    Halve {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Exhaustive search for Hadamard pairs (R, T).
    SearchHadamard {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        /// Worker threads; defaults to DRGFORGE_THREADS, then all cores.
        #[arg(long)]
        threads: Option<usize>,
        /// Report elapsedMs as 0 so output is byte-stable.
        #[arg(long)]
        no_timing: bool,
        #[arg(long, value_enum, default_value = "text")]
        output: Output,
    },
    /// All k-element difference sets in a subgroup, up to right translation.
    SearchDs {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// full, rho, h2, h3, or a divisor d of the rotation order for <rho^d>.
        #[arg(long, default_value = "full")]
        subgroup: String,
        #[arg(long, value_enum, default_value = "text")]
        output: Output,
    },
    /// Fast subset of the acceptance checks.
    Selfcheck {
        #[arg(long, value_enum, default_value = "text")]
        output: Output,
    },
}

/// A failed run: validation errors exit 2, inconsistencies exit 1.
struct Failure(Error);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e)
    }
}

type Outcome = Result<(Value, String, bool), Failure>;

fn to_value(x: &impl Serialize) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn graph_summary(g: &Graph, mode: BaseMode) -> Result<Value, Error> {
    let report = check_distance_regular(g, mode)?;
    Ok(json!({
        "order": g.order(),
        "named": to_value(&recognize_named(g)),
        "structure": to_value(&report),
    }))
}

fn descriptor_text(d: &GraphDescriptor) -> String {
    format!("{} on {} vertices, valency {}", d.family, d.order, d.valency)
}

fn verify(args: &GraphArgs, full: bool) -> Outcome {
    let spec = args.spec()?;
    let x = build_from_spec(&spec)?;
    let report = if full { check_distance_regular(x.graph(), BaseMode::All)? } else { check_cayley(&x)? };
    let text = format!(
        "{}\ndistance-regular: {}\narray: {}\nbipartite: {}\nantipodal: {}{}\nprimitive: {}\ndiameter: {}",
        descriptor_text(&spec.descriptor()),
        report.is_drg,
        report.array.as_ref().map(|a| a.to_string()).unwrap_or_else(|| "-".into()),
        report.bipartite,
        report.antipodal,
        report.antipodal_index.map(|r| format!(" (classes of size {r})")).unwrap_or_default(),
        report.primitive,
        report.diameter,
    );
    Ok((json!({ "graph": to_value(&spec.descriptor()), "structure": to_value(&report) }), text, true))
}

fn classify(args: &GraphArgs) -> Outcome {
    let spec = args.spec()?;
    let (case, report) = classify_with_report(&spec)?;
    let text = format!(
        "{}\ncase: {}\n{}",
        descriptor_text(&spec.descriptor()),
        case.name(),
        serde_json::to_string_pretty(&case).expect("serializes")
    );
    let value = json!({
        "graph": to_value(&spec.descriptor()),
        "classification": to_value(&case),
        "structure": report.as_ref().map(to_value),
    });
    Ok((value, text, true))
}

fn spectrum(args: &GraphArgs) -> Outcome {
    let spec = args.spec()?;
    let x = build_from_spec(&spec)?;
    let report = check_cayley(&x)?;
    let Some(array) = report.array else {
        let text = format!("{}\nnot distance-regular: no intersection array", descriptor_text(&spec.descriptor()));
        return Ok((json!({ "graph": to_value(&spec.descriptor()), "isDRG": false, "spectrum": null }), text, true));
    };
    let s: SpectrumReport = intersection_matrix_spectrum(&array, x.order())?;
    let lines: Vec<String> =
        s.eigenvalues.iter().zip(&s.multiplicities).map(|(t, m)| {
            // avoid printing "-0.000000"
            let t = if t.abs() < 5e-7 { 0.0 } else { *t };
            format!("  {t:>12.6}  x{m}")
        }).collect();
    let text = format!("{}\narray: {array}\n{}", descriptor_text(&spec.descriptor()), lines.join("\n"));
    let value = json!({
        "graph": to_value(&spec.descriptor()),
        "isDRG": true,
        "array": array.to_string(),
        "spectrum": to_value(&s),
    });
    Ok((value, text, true))
}

fn quotient(args: &GraphArgs, subgroup: Option<usize>) -> Outcome {
    let spec = args.spec()?;
    let x = build_from_spec(&spec)?;
    let (label, q) = match subgroup {
        Some(d) => {
            if d == 0 || spec.group().modulus() % d != 0 {
                return Err(Error::NotADivisor { divisor: d, modulus: spec.group().modulus() }.into());
            }
            let b = spec.group().rho_power_subgroup(d);
            (b.label().to_string(), cayley_quotient(&x, &b)?)
        }
        None => ("antipodal classes".to_string(), antipodal_quotient(x.graph())?),
    };
    let summary = graph_summary(&q, BaseMode::All)?;
    let text = format!("quotient by {label}\n{}", serde_json::to_string_pretty(&summary).expect("serializes"));
    Ok((json!({ "graph": to_value(&spec.descriptor()), "by": label, "quotient": summary }), text, true))
}

fn halve(args: &GraphArgs) -> Outcome {
    let spec = args.spec()?;
    let x = build_from_spec(&spec)?;
    let (a, b) = halved_graphs(x.graph())?;
    let halves = vec![graph_summary(&a, BaseMode::All)?, graph_summary(&b, BaseMode::All)?];
    let text = format!("halved graphs\n{}", serde_json::to_string_pretty(&halves).expect("serializes"));
    Ok((json!({ "graph": to_value(&spec.descriptor()), "halves": halves }), text, true))
}

fn thread_count(flag: Option<usize>) -> Result<usize, Error> {
    let threads = match flag {
        Some(t) => t,
        None => match std::env::var("DRGFORGE_THREADS") {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("DRGFORGE_THREADS must be a positive integer, got {v:?}")))?,
            Err(_) => std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1),
        },
    };
    if threads == 0 {
        return Err(Error::InvalidParameter("thread count must be positive".into()));
    }
    Ok(threads)
}

fn search_hadamard(family: &str, n: usize, threads: Option<usize>, no_timing: bool) -> Outcome {
    let family = GroupFamily::from_name(family, n)?;
    let mut result = search_hadamard_pairs(family, thread_count(threads)?)?;
    if no_timing {
        result = result.without_timing();
    }
    let mut text = format!(
        "{family}: {} canonical pair(s), {} candidates, {} ms",
        result.pairs.len(),
        result.candidates_examined,
        result.elapsed_ms
    );
    for (r, t) in &result.pairs {
        text.push_str(&format!("\n  R = {{{r}}}  T = {{{t}}}"));
    }
    Ok((to_value(&result), text, true))
}

fn pick_subgroup(group: &Group, name: &str) -> Result<Subgroup, Error> {
    let index2 = || index2_subgroups(group);
    let nth = |i: usize| {
        index2().into_iter().nth(i).ok_or_else(|| Error::InvalidParameter(format!("{} has no subgroup {name}", group.family())))
    };
    match name {
        "full" => Ok(group.full()),
        "rho" => nth(0),
        "h2" => nth(1),
        "h3" => nth(2),
        other => {
            let d: usize = other
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("unknown subgroup {other:?} (expected full, rho, h2, h3 or a divisor)")))?;
            if d == 0 || !group.modulus().is_multiple_of(d) {
                return Err(Error::NotADivisor { divisor: d, modulus: group.modulus() });
            }
            Ok(group.rho_power_subgroup(d))
        }
    }
}

fn search_ds(family: &str, n: usize, k: usize, subgroup: &str) -> Outcome {
    let group = Group::new(GroupFamily::from_name(family, n)?)?;
    let h = pick_subgroup(&group, subgroup)?;
    let found = search_difference_sets(&h, k)?;
    let rendered: Vec<Vec<String>> = found
        .iter()
        .map(|d| d.iter().map(|&i| group.element(i).map(|g| g.to_string())).collect::<Result<_, _>>())
        .collect::<Result<_, _>>()?;
    let mut text = format!("{} difference set(s) of size {k} in {} ≤ {}", found.len(), h.label(), group.family());
    for d in &rendered {
        text.push_str(&format!("\n  {{{}}}", d.join(", ")));
    }
    let value = json!({
        "group": to_value(&group.family()),
        "subgroup": h.label(),
        "order": h.order(),
        "k": k,
        "count": found.len(),
        "sets": found,
        "elements": rendered,
    });
    Ok((value, text, true))
}

fn selfcheck() -> Outcome {
    let lines = run_selfcheck();
    let all = lines.iter().all(|l| l.passed);
    let text = lines
        .iter()
        .map(|l| format!("{} {} ({} ms){}", if l.passed { "PASS" } else { "FAIL" }, l.name, l.elapsed_ms, if l.detail.is_empty() { String::new() } else { format!(": {}", l.detail) }))
        .collect::<Vec<_>>()
        .join("\n");
    Ok((json!({ "passed": all, "checks": to_value(&lines) }), text, all))
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (output, outcome) = match &cli.command {
        Command::Verify { graph, full } => (graph.output, verify(graph, *full)),
        Command::Classify { graph } => (graph.output, classify(graph)),
        Command::Spectrum { graph } => (graph.output, spectrum(graph)),
        Command::Quotient { graph, subgroup } => (graph.output, quotient(graph, *subgroup)),
        Command::Halve { graph } => (graph.output, halve(graph)),
        Command::SearchHadamard { family, n, threads, no_timing, output } => {
            (*output, search_hadamard(family, *n, *threads, *no_timing))
        }
        Command::SearchDs { family, n, k, subgroup, output } => (*output, search_ds(family, *n, *k, subgroup)),
        Command::Selfcheck { output } => (*output, selfcheck()),
    };
    match outcome {
        Ok((value, text, ok)) => {
            match output {
                Output::Json => emit(&serde_json::to_string_pretty(&value).expect("serializes")),
                Output::Text => emit(&text),
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure(e)) => {
            eprintln!("error: {e}");
            if e.is_validation() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

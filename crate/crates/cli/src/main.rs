//! `topograph`: build disjointness graphs, report their invariants, check the
//! claim registry, and compose products.
//!
//! Exit codes: 0 on a completed computation (including refuted claims),
//! 2 on usage errors, 3 on range or capacity errors, 4 when a solver ran out
//! of budget without an exact answer for the single value requested, 1 on
//! anything else (I/O, internal disagreement).

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use topograph::claims::{self, Summary};
use topograph::{
    build_topo_graph, corona, export, invariants, join, oracle, Budget, Error, SimpleGraph,
};

/// Products larger than this are refused before construction.
const MAX_PRODUCT_ORDER: usize = 16_384;

#[derive(Parser)]
#[command(
    name = "topograph",
    version,
    about = "Disjointness graphs of nonempty proper subsets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the disjointness graph on {1..n}.
    Build {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edges)]
        format: GraphFormat,
        #[command(flatten)]
        out: Output,
    },
    /// Compute every invariant of the disjointness graph on {1..n}.
    Invariants {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        #[command(flatten)]
        budget: BudgetArg,
        #[command(flatten)]
        out: Output,
    },
    /// Check every registered claim over a range of ground-set sizes.
    Verify {
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        #[command(flatten)]
        budget: BudgetArg,
        #[command(flatten)]
        out: Output,
    },
    /// Build a corona or join of two disjointness graphs.
    Compose {
        #[arg(long, value_enum)]
        op: ProductOp,
        /// Left operand, `topo:<n>`.
        #[arg(long)]
        left: Operand,
        /// Right operand, `topo:<n>`.
        #[arg(long)]
        right: Operand,
        /// Print one invariant of the product instead of the product itself.
        #[arg(long, value_enum)]
        invariant: Option<InvariantName>,
        /// Defaults to `edges` for graphs and `text` for invariants.
        #[arg(long, value_enum)]
        format: Option<AnyFormat>,
        #[command(flatten)]
        budget: BudgetArg,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct Output {
    /// Write to this file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct BudgetArg {
    /// Wall-clock limit per solver invocation.
    #[arg(long, default_value_t = Budget::DEFAULT_SECONDS as f64, value_parser = positive_seconds)]
    budget_seconds: f64,
}

impl BudgetArg {
    fn budget(&self) -> Budget {
        Budget::from_secs_f64(self.budget_seconds)
    }
}

fn positive_seconds(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v.is_finite() && v > 0.0 && v < 1e9 {
        Ok(v)
    } else {
        Err("budget must be a positive number of seconds".into())
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Edges,
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum AnyFormat {
    Dot,
    Edges,
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProductOp {
    Corona,
    Join,
}

#[derive(Clone, Copy, ValueEnum)]
enum InvariantName {
    Order,
    Size,
    Clique,
    Independence,
    Domination,
    Radius,
    Diameter,
}

#[derive(Clone, Copy)]
struct Operand(usize);

impl FromStr for Operand {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let n = s
            .strip_prefix("topo:")
            .ok_or_else(|| format!("expected `topo:<n>`, got `{s}`"))?;
        n.parse()
            .map(Operand)
            .map_err(|e| format!("bad n in `{s}`: {e}"))
    }
}

enum Failure {
    Usage(String),
    Range(Error),
    Timeout(String),
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::OutOfRange { .. } | Error::Capacity { .. } => Failure::Range(e),
            Error::InvalidRange { .. } => Failure::Usage(e.to_string()),
            other => Failure::Other(other.to_string()),
        }
    }
}

fn emit(out: &Output, text: &str) -> Result<(), Failure> {
    match &out.output {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::Other(format!("{}: {e}", path.display())))
        }
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| Failure::Other(e.to_string()))
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Build { n, format, out } => {
            let t = build_topo_graph(n)?;
            let text = match format {
                GraphFormat::Dot => export::topo_dot(&t),
                GraphFormat::Edges => export::topo_edge_list(&t),
                GraphFormat::Json => export::topo_json(&t)?,
                GraphFormat::Text => export::topo_text(&t),
            };
            emit(&out, &text)
        }
        Command::Invariants {
            n,
            format,
            budget,
            out,
        } => {
            let t = build_topo_graph(n)?;
            let report = invariants::compute_report(&t.to_simple(), budget.budget());
            let text = match format {
                ReportFormat::Json => export::report_json(Some(n), &report, |v| v as u64 + 1)?,
                ReportFormat::Text => export::report_text(&report, |v| t.vertex(v).to_string()),
                ReportFormat::Csv => report_csv(&report),
            };
            emit(&out, &text)
        }
        Command::Verify {
            n_min,
            n_max,
            format,
            budget,
            out,
        } => {
            let verdicts = claims::verify_all(n_min, n_max, budget.budget())?;
            let summary = Summary::tally(&verdicts);
            let text = match format {
                ReportFormat::Text => export::verdicts_text(&verdicts),
                ReportFormat::Csv => export::verdicts_csv(&verdicts)?,
                ReportFormat::Json => export::verdicts_json(&verdicts)?,
            };
            emit(&out, &text)?;
            if !matches!(format, ReportFormat::Text) {
                eprintln!("summary: {summary}");
            }
            Ok(())
        }
        Command::Compose {
            op,
            left,
            right,
            invariant,
            format,
            budget,
            out,
        } => compose(op, left, right, invariant, format, budget.budget(), &out),
    }
}

fn report_csv(r: &topograph::InvariantReport) -> String {
    let opt = |x: Option<usize>| x.map_or(String::new(), |v| v.to_string());
    let rows = [
        ("order", r.order.to_string(), true),
        ("size", r.size.to_string(), true),
        ("min_degree", r.min_degree.to_string(), true),
        ("max_degree", r.max_degree.to_string(), true),
        ("clique_number", r.clique.value.to_string(), r.clique.exact),
        (
            "independence_number",
            r.independence.value.to_string(),
            r.independence.exact,
        ),
        (
            "domination_number",
            r.domination.value.to_string(),
            r.domination.exact,
        ),
        ("radius", opt(r.radius), true),
        ("diameter", opt(r.diameter), true),
        ("is_connected", r.is_connected.to_string(), true),
        ("cut_vertex_count", r.cut_vertices.len().to_string(), true),
        ("pendant_count", r.pendant_vertices.len().to_string(), true),
    ];
    let mut s = String::from("invariant,value,exact\n");
    for (name, value, exact) in rows {
        s.push_str(&format!("{name},{value},{exact}\n"));
    }
    s
}

fn compose(
    op: ProductOp,
    Operand(ln): Operand,
    Operand(rn): Operand,
    invariant: Option<InvariantName>,
    format: Option<AnyFormat>,
    budget: Budget,
    out: &Output,
) -> Result<(), Failure> {
    let (lt, rt) = (build_topo_graph(ln)?, build_topo_graph(rn)?);
    let order = match op {
        ProductOp::Corona => lt.order() * (1 + rt.order()),
        ProductOp::Join => lt.order() + rt.order(),
    };
    if order > MAX_PRODUCT_ORDER {
        return Err(Error::Capacity {
            routine: "compose",
            order,
            cap: MAX_PRODUCT_ORDER,
        }
        .into());
    }
    let (g, h) = (lt.to_simple(), rt.to_simple());
    let (product, name) = match op {
        ProductOp::Corona => (corona(&g, &h)?, format!("corona(topo:{ln},topo:{rn})")),
        ProductOp::Join => (join(&g, &h)?, format!("join(topo:{ln},topo:{rn})")),
    };

    let Some(which) = invariant else {
        let text = match format.unwrap_or(AnyFormat::Edges) {
            AnyFormat::Dot => export::simple_dot(&product, &name),
            AnyFormat::Edges => export::simple_edge_list(&product, &name),
            AnyFormat::Json => export::simple_json(&product, &name)?,
            AnyFormat::Text => export::simple_text(&product, &name),
            AnyFormat::Csv => return Err(Failure::Usage("csv output needs --invariant".into())),
        };
        return emit(out, &text);
    };

    let (label, value, exact) = product_invariant(&product, which, budget)?;
    let text = match format.unwrap_or(AnyFormat::Text) {
        AnyFormat::Text => format!("{value}\n"),
        AnyFormat::Csv => format!("graph,invariant,value,exact\n\"{name}\",{label},{value},{exact}\n"),
        AnyFormat::Json => format!(
            "{{\n  \"graph\": \"{name}\",\n  \"invariant\": \"{label}\",\n  \"value\": {value},\n  \"exact\": {exact}\n}}\n"
        ),
        AnyFormat::Dot | AnyFormat::Edges => {
            return Err(Failure::Usage("invariants print as text, csv, or json".into()))
        }
    };
    emit(out, &text)?;
    if exact {
        Ok(())
    } else {
        Err(Failure::Timeout(format!(
            "{label} is a bound only; budget exhausted"
        )))
    }
}

fn product_invariant(
    g: &SimpleGraph,
    which: InvariantName,
    budget: Budget,
) -> Result<(&'static str, usize, bool), Failure> {
    let within_oracle = g.order() <= oracle::LIMITS.max_order_enumeration;
    let agree = |what: &'static str, solver: usize, oracle: usize| {
        if solver == oracle {
            Ok(())
        } else {
            Err(Failure::Other(
                Error::OracleMismatch {
                    routine: what,
                    solver: solver.to_string(),
                    oracle: oracle.to_string(),
                }
                .to_string(),
            ))
        }
    };
    Ok(match which {
        InvariantName::Order => ("order", g.order(), true),
        InvariantName::Size => ("size", g.size(), true),
        InvariantName::Clique => {
            let s = invariants::clique_number(g, budget);
            if s.exact && within_oracle {
                agree("clique number", s.value, oracle::oracle_max_clique(g)?)?;
            }
            ("clique", s.value, s.exact)
        }
        InvariantName::Independence => {
            let s = invariants::independence_number(g, budget);
            if s.exact && within_oracle {
                agree(
                    "independence number",
                    s.value,
                    oracle::oracle_max_independent(g)?,
                )?;
            }
            ("independence", s.value, s.exact)
        }
        InvariantName::Domination => {
            let s = invariants::domination_number(g, budget);
            if s.exact && within_oracle {
                agree(
                    "domination number",
                    s.value,
                    oracle::oracle_min_dominating(g)?.0,
                )?;
            }
            ("domination", s.value, s.exact)
        }
        InvariantName::Radius => ("radius", invariants::eccentricities(g)?.radius, true),
        InvariantName::Diameter => ("diameter", invariants::eccentricities(g)?.diameter, true),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Range(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
        Err(Failure::Timeout(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(4)
        }
        Err(Failure::Other(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

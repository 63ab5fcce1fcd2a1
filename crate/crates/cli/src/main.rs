use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kegraph::criticality::criticality_report;
use kegraph::harness::{check_many, fixture, fixtures, fuzz, CheckId, FuzzConfig, GraphKind};
use kegraph::ke::{ke_decompose, parameter_report};
use kegraph::{edgelist, EdgeSet, Error, Graph, Limits, VertexSet};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "kegraph",
    version,
    about = "Stability, matching and criticality parameters of graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full parameter report.
    Analyze(GraphArgs),
    /// α-critical and μ-critical edges and α-critical vertices.
    Critical(GraphArgs),
    /// S * H decomposition of a König-Egerváry graph.
    Decompose(GraphArgs),
    /// Run checks from the catalogue on one graph.
    Verify {
        #[command(flatten)]
        graph: GraphArgs,
        /// Comma-separated check ids, or `all`.
        #[arg(long, default_value = "all")]
        checks: String,
    },
    /// Run checks on seeded random graphs.
    Fuzz {
        /// Generator: tree, bipartite, ke, gnp, cycle, path or complete.
        #[arg(long = "gen", default_value = "gnp")]
        generator: String,
        /// Largest number of vertices.
        #[arg(long, default_value_t = 10)]
        n: usize,
        /// Smallest number of vertices.
        #[arg(long, default_value_t = 2)]
        n_min: usize,
        /// Edge probability; a comma-separated list draws one per trial.
        #[arg(long, default_value = "0.3")]
        p: String,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "all")]
        checks: String,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// List fixtures, or print one as an edge list.
    Fixtures {
        /// Fixture to print.
        name: Option<String>,
        #[arg(long, conflicts_with = "name")]
        fixture: Option<String>,
    },
}

#[derive(Args)]
struct GraphArgs {
    /// Edge-list file.
    #[arg(long, conflicts_with = "fixture", required_unless_present = "fixture")]
    input: Option<PathBuf>,
    /// Built-in fixture name.
    #[arg(long)]
    fixture: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(flatten)]
    limits: LimitArgs,
}

#[derive(Args)]
struct LimitArgs {
    /// Largest graph for the stability-number solver.
    #[arg(long)]
    max_n: Option<usize>,
    /// Largest graph for enumerating all maximum stable sets.
    #[arg(long)]
    max_omega_n: Option<usize>,
    /// Most maximum stable sets an enumeration may return.
    #[arg(long)]
    omega_cap: Option<usize>,
    /// Largest graph for the exhaustive odd-cycle search.
    #[arg(long)]
    max_cycle_n: Option<usize>,
}

impl LimitArgs {
    fn limits(&self) -> Limits {
        let d = Limits::default();
        Limits {
            alpha_max_n: self.max_n.unwrap_or(d.alpha_max_n),
            omega_max_n: self.max_omega_n.unwrap_or(d.omega_max_n),
            omega_cap: self.omega_cap.unwrap_or(d.omega_cap),
            odd_cycle_max_n: self.max_cycle_n.unwrap_or(d.odd_cycle_max_n),
            ..d
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

/// Exit status: 1 check failure, 2 bad input or unmet precondition, 3 capacity.
enum Failure {
    Checks,
    Error(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

fn load(args: &GraphArgs) -> Result<Graph, Error> {
    match (&args.input, &args.fixture) {
        (_, Some(name)) => fixture(name)
            .map(|f| f.graph)
            .ok_or_else(|| Error::Input(format!("unknown fixture `{name}`"))),
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
            edgelist::parse(&text)
        }
        (None, None) => Err(Error::Input("give --input or --fixture".into())),
    }
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialise") + "\n"
}

/// `key: value` lines from the top level of a JSON object.
fn text<T: Serialize>(value: &T) -> String {
    let mut out = String::new();
    match serde_json::to_value(value).expect("reports serialise") {
        serde_json::Value::Object(map) => {
            for (k, v) in map {
                let _ = writeln!(out, "{k}: {v}");
            }
        }
        other => {
            let _ = writeln!(out, "{other}");
        }
    }
    out
}

fn dot(g: &Graph, core: &VertexSet, alpha_critical: &EdgeSet, mu_critical: &EdgeSet) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        if core.contains(v) {
            let _ = writeln!(out, "  {v} [class=core];");
        } else {
            let _ = writeln!(out, "  {v};");
        }
    }
    for &e in g.edges() {
        let classes: Vec<&str> = [
            (alpha_critical.contains(e), "alpha_critical"),
            (mu_critical.contains(e), "mu_critical"),
        ]
        .into_iter()
        .filter_map(|(on, name)| on.then_some(name))
        .collect();
        if classes.is_empty() {
            let _ = writeln!(out, "  {} -- {};", e.u(), e.v());
        } else {
            let _ = writeln!(
                out,
                "  {} -- {} [class=\"{}\"];",
                e.u(),
                e.v(),
                classes.join(" ")
            );
        }
    }
    out.push_str("}\n");
    out
}

fn render<T: Serialize>(
    format: Format,
    value: &T,
    as_dot: impl FnOnce() -> Result<String, Error>,
) -> Result<String, Error> {
    Ok(match format {
        Format::Json => json(value),
        Format::Text => text(value),
        Format::Dot => as_dot()?,
    })
}

fn parse_probabilities(list: &str) -> Result<Vec<f64>, Error> {
    list.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<f64>()
                .map_err(|_| Error::Input(format!("`{t}` is not a probability")))
        })
        .collect()
}

fn execute(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Analyze(args) => {
            let g = load(&args)?;
            let limits = args.limits.limits();
            let report = parameter_report(&g, &limits)?;
            let out = render(args.format, &report, || {
                Ok(dot(
                    &g,
                    &report.core,
                    &report.alpha_critical_edges,
                    &report.mu_critical_edges,
                ))
            })?;
            print!("{out}");
        }
        Command::Critical(args) => {
            let g = load(&args)?;
            let limits = args.limits.limits();
            let report = criticality_report(&g, &limits)?;
            let out = render(args.format, &report, || {
                Ok(dot(
                    &g,
                    &report.alpha_critical_vertices,
                    &report.alpha_critical_edges,
                    &report.mu_critical_edges,
                ))
            })?;
            print!("{out}");
        }
        Command::Decompose(args) => {
            let g = load(&args)?;
            let limits = args.limits.limits();
            let d = ke_decompose(&g, &limits)?;
            let out = render(args.format, &d, || {
                let report = parameter_report(&g, &limits)?;
                Ok(dot(
                    &g,
                    &report.core,
                    &report.alpha_critical_edges,
                    &report.mu_critical_edges,
                ))
            })?;
            print!("{out}");
        }
        Command::Verify { graph, checks } => {
            let g = load(&graph)?;
            let ids = CheckId::parse_list(&checks)?;
            let verdicts = check_many(&g, &ids, &graph.limits.limits());
            match graph.format {
                Format::Text => {
                    for v in &verdicts {
                        let status = serde_json::to_value(v.status).expect("status serialises");
                        let note = v
                            .witness
                            .as_ref()
                            .map(|w| w.detail.clone())
                            .or_else(|| v.reason.clone())
                            .unwrap_or_default();
                        println!(
                            "{} {} {}",
                            v.check_id,
                            status.as_str().unwrap_or_default(),
                            note
                        );
                    }
                }
                _ => print!("{}", json(&verdicts)),
            }
            if verdicts.iter().any(|v| v.is_fail()) {
                return Err(Failure::Checks);
            }
        }
        Command::Fuzz {
            generator,
            n,
            n_min,
            p,
            trials,
            seed,
            checks,
            limits,
        } => {
            let cfg = FuzzConfig {
                kind: generator.parse::<GraphKind>()?,
                n_min,
                n_max: n,
                n2: None,
                p_values: parse_probabilities(&p)?,
                seed,
            };
            let ids = CheckId::parse_list(&checks)?;
            let summary = fuzz(&cfg, trials, &ids, &limits.limits())?;
            print!("{}", json(&summary));
            if summary.failures() > 0 {
                return Err(Failure::Checks);
            }
        }
        Command::Fixtures {
            name,
            fixture: flag,
        } => match name.or(flag) {
            Some(name) => {
                let f = fixture(&name)
                    .ok_or_else(|| Error::Input(format!("unknown fixture `{name}`")))?;
                print!("{}", f.to_edge_list());
            }
            None => {
                for f in fixtures() {
                    println!("{}\t{}", f.name, f.description);
                }
            }
        },
    }
    Ok(())
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Error(e)) => {
            eprintln!("kegraph: {e}");
            ExitCode::from(match e {
                Error::Input(_) | Error::Precondition(_) => 2,
                Error::Capacity(_) => 3,
                Error::Invariant(_) => 1,
            })
        }
    }
}

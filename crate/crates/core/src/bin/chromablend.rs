use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use chromablend::blending::{
    max_edge_iteration, run_total_blending, run_total_blending_from_graph, BlendTrace,
};
use chromablend::config::{
    OutputFormat, RunConfig, SweepBounds, ENV_MATERIALIZATION_CAP, ENV_ORACLE_CAP,
};
use chromablend::embodiment::{
    build_max_embodiment, build_min_chromatic_embodiment, build_min_proper_embodiment,
    epsilon_minus, epsilon_plus, DEFAULT_MATERIALIZATION_CAP,
};
use chromablend::oracle::{chromatic_number, graph_stats, DEFAULT_ORACLE_CAP};
use chromablend::sequence::{tabulate, to_csv, Family};
use chromablend::verify::{self, Theorem};
use chromablend::{ColourCluster, ColouredGraph, Error};

const EXIT_IO: u8 = 1;
const EXIT_VALIDATION: u8 = 2;
const EXIT_CAP: u8 = 3;
const EXIT_VERIFY: u8 = 4;

#[derive(Parser)]
#[command(
    name = "chromablend",
    version,
    about = "Colour-cluster embodiments and chromatic blending"
)]
struct Cli {
    /// Largest graph (in vertices) any builder will materialize.
    #[arg(long, global = true, env = ENV_MATERIALIZATION_CAP, default_value_t = DEFAULT_MATERIALIZATION_CAP,
          value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..))]
    materialization_cap: usize,

    /// Largest graph (in vertices) the exact oracle will search.
    #[arg(long, global = true, env = ENV_ORACLE_CAP, default_value_t = DEFAULT_ORACLE_CAP,
          value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..))]
    oracle_cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Max,
    MinChromatic,
    MinProper,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Text => OutputFormat::Text,
            Format::Json => OutputFormat::Json,
            Format::Dot => OutputFormat::Dot,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    CompleteGraph,
    Uniform,
    Custom,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremArg {
    Eps,
    Blend,
    Bounds,
    Mycielski,
    Monotone,
    All,
}

impl From<TheoremArg> for Theorem {
    fn from(t: TheoremArg) -> Self {
        match t {
            TheoremArg::Eps => Theorem::Eps,
            TheoremArg::Blend => Theorem::Blend,
            TheoremArg::Bounds => Theorem::Bounds,
            TheoremArg::Mycielski => Theorem::Mycielski,
            TheoremArg::Monotone => Theorem::Monotone,
            TheoremArg::All => Theorem::All,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph realizing a cluster literal such as "2,3,1".
    Embody {
        cluster: ColourCluster,
        #[arg(long, value_enum, default_value = "max")]
        mode: Mode,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Write the graph here; the edge-count report then goes to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the blending recursion from a cluster literal or a graph file.
    Blend {
        #[arg(required_unless_present = "graph", conflicts_with = "graph")]
        cluster: Option<ColourCluster>,
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Ignore colour lines in the graph file and colour with the oracle.
        #[arg(long, requires = "graph")]
        recolour: bool,
        /// Write the full trace document here.
        #[arg(long)]
        trace_out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the verification sweeps.
    Verify {
        #[arg(value_enum, default_value = "all")]
        theorem: TheoremArg,
        #[arg(long, default_value_t = 5)]
        max_l: usize,
        #[arg(long, default_value_t = 3)]
        max_r: u32,
    },
    /// Tabulate t_chi and null-graph orders over a cluster family.
    Sequence {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Weight for the uniform family.
        #[arg(long)]
        r: Option<BigUint>,
        /// Comma-separated weights for the custom family.
        #[arg(long)]
        weights: Option<String>,
        #[arg(long, default_value_t = 2)]
        l_min: usize,
        #[arg(long, default_value_t = 6)]
        l_max: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
    },
    /// Exact invariants of a graph file.
    Oracle {
        graph: PathBuf,
        /// Comma-separated subset of chi,omega,delta,triangle_free,t_chi.
        #[arg(long, default_value = "chi,omega,delta,triangle_free,t_chi")]
        stats: String,
    },
}

enum Failure {
    Lib(Error),
    Io(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<ColouredGraph, Failure> {
    let text = read(path)?;
    if text.trim_start().starts_with('{') {
        let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        Ok(ColouredGraph::from_json(&value)?)
    } else {
        Ok(ColouredGraph::parse_text(&text)?)
    }
}

fn render_graph(g: &ColouredGraph, format: Format) -> String {
    match format {
        Format::Text => g.to_text(),
        Format::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&g.to_json()).expect("serializable")
        ),
        Format::Dot => g.to_dot(),
    }
}

fn embody(
    cfg: &RunConfig,
    cluster: &ColourCluster,
    mode: Mode,
    format: Format,
    out: Option<&Path>,
) -> Result<(), Failure> {
    let g = match mode {
        Mode::Max => build_max_embodiment(cluster, cfg.materialization_cap)?,
        Mode::MinChromatic => build_min_chromatic_embodiment(cluster, cfg.materialization_cap)?,
        Mode::MinProper => build_min_proper_embodiment(cluster, cfg.materialization_cap)?,
    };
    let mut report = format!(
        "N={}\neps_plus={}\n",
        cluster.total_weight(),
        epsilon_plus(cluster)
    );
    if let Ok(m) = epsilon_minus(cluster) {
        report.push_str(&format!("eps_minus={m}\n"));
    }
    report.push_str(&format!(
        "vertices={}\nedges={}\n",
        g.vertex_count(),
        g.edge_count()
    ));
    let rendered = render_graph(&g, format);
    match out {
        Some(path) => {
            write(path, &rendered)?;
            print!("{report}");
        }
        None => {
            print!("{rendered}");
            eprint!("{report}");
        }
    }
    Ok(())
}

fn trace_table(trace: &BlendTrace) -> String {
    let mut out = String::from("iteration\tclasses\tvertices\tedges\n");
    for s in &trace.steps {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\n",
            s.iteration,
            s.cluster.class_count(),
            s.vertex_count,
            s.edge_count
        ));
    }
    let (it, edges) = max_edge_iteration(trace);
    out.push_str(&format!(
        "t_chi={}\nnull_order={}\nmax_edge_iteration={it}\nmax_edges={edges}\n",
        trace.t_chi, trace.null_order
    ));
    out
}

fn blend(
    cfg: &RunConfig,
    cluster: Option<&ColourCluster>,
    graph: Option<&Path>,
    recolour: bool,
    trace_out: Option<&Path>,
    format: Format,
) -> Result<(), Failure> {
    let trace = match (cluster, graph) {
        (Some(c), _) => run_total_blending(c)?,
        (None, Some(path)) => {
            let mut g = load_graph(path)?;
            if recolour || !g.has_any_label() {
                let witness = chromatic_number(&g, cfg.oracle_vertex_cap)?;
                g = g.with_colouring(&witness.colouring)?;
            }
            run_total_blending_from_graph(&g, cfg.oracle_vertex_cap)?
        }
        (None, None) => unreachable!("clap requires one input"),
    };
    let doc = format!(
        "{}\n",
        serde_json::to_string_pretty(&trace.to_json()).expect("serializable")
    );
    if let Some(path) = trace_out {
        write(path, &doc)?;
    }
    match format {
        Format::Json => print!("{doc}"),
        _ => print!("{}", trace_table(&trace)),
    }
    Ok(())
}

fn verify_cmd(cfg: &RunConfig, theorem: Theorem) -> Result<(), Failure> {
    let report = verify::run(theorem, cfg)?;
    print!("{}", report.render());
    if report.all_passed() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn sequence_cmd(
    family: FamilyArg,
    r: Option<BigUint>,
    weights: Option<&str>,
    l_min: usize,
    l_max: usize,
    format: TableFormat,
) -> Result<(), Failure> {
    let family =
        match family {
            FamilyArg::CompleteGraph => Family::CompleteGraph,
            FamilyArg::Uniform => Family::Uniform(r.ok_or_else(|| {
                Error::Validation("--r is required for the uniform family".into())
            })?),
            FamilyArg::Custom => {
                let list = weights.ok_or_else(|| {
                    Error::Validation("--weights is required for the custom family".into())
                })?;
                let c: ColourCluster = list.parse()?;
                Family::Custom(c.weights().cloned().collect())
            }
        };
    let rows = tabulate(&family, l_min, l_max)?;
    match format {
        TableFormat::Csv => print!("{}", to_csv(&rows)),
        TableFormat::Text => {
            for row in rows {
                println!(
                    "l={} cluster={} t_chi={} null_order={} max_edges={} max_edge_iteration={}",
                    row.l,
                    row.cluster,
                    row.t_chi,
                    row.null_order,
                    row.max_edges,
                    row.max_edge_iteration
                );
            }
        }
    }
    Ok(())
}

fn oracle_cmd(cfg: &RunConfig, path: &Path, selector: &str) -> Result<(), Failure> {
    let g = load_graph(path)?;
    let fields: Vec<&str> = selector.split(',').map(str::trim).collect();
    for f in &fields {
        if !["chi", "omega", "delta", "triangle_free", "t_chi"].contains(f) {
            return Err(Error::Validation(format!("unknown stat '{f}'")).into());
        }
    }
    let stats = graph_stats(&g, cfg.oracle_vertex_cap)?;
    for f in fields {
        let value = match f {
            "chi" => stats.chi.to_string(),
            "omega" => stats.omega.to_string(),
            "delta" => stats.delta.to_string(),
            "triangle_free" => stats.triangle_free.to_string(),
            _ => stats.t_chi.to_string(),
        };
        println!("{f}={value}");
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    let mut cfg = RunConfig {
        materialization_cap: cli.materialization_cap,
        oracle_vertex_cap: cli.oracle_cap,
        ..RunConfig::default()
    };
    match cli.command {
        Command::Embody {
            cluster,
            mode,
            format,
            out,
        } => {
            cfg.output_format = format.into();
            embody(&cfg, &cluster, mode, format, out.as_deref())
        }
        Command::Blend {
            cluster,
            graph,
            recolour,
            trace_out,
            format,
        } => {
            cfg.output_format = format.into();
            blend(
                &cfg,
                cluster.as_ref(),
                graph.as_deref(),
                recolour,
                trace_out.as_deref(),
                format,
            )
        }
        Command::Verify {
            theorem,
            max_l,
            max_r,
        } => {
            cfg.sweep = SweepBounds::new(max_l, max_r)?;
            verify_cmd(&cfg, theorem.into())
        }
        Command::Sequence {
            family,
            r,
            weights,
            l_min,
            l_max,
            format,
        } => sequence_cmd(family, r, weights.as_deref(), l_min, l_max, format),
        Command::Oracle { graph, stats } => oracle_cmd(&cfg, &graph, &stats),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::CapExceeded { .. } => EXIT_CAP,
                _ => EXIT_VALIDATION,
            })
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_IO)
        }
        Err(Failure::Verification) => ExitCode::from(EXIT_VERIFY),
    }
}

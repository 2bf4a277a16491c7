use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use chempoly::exec::{configure_threads, Exec};
use chempoly::facets::{active_facets, facet_families};
use chempoly::index::{parse_coeffs, IndexRegistry};
use chempoly::optimize::{optimize_with, sweep, Direction};
use chempoly::oracle::{DEFAULT_LIMIT, HARD_CAP};
use chempoly::polytope::build_polytope_with;
use chempoly::realize::check_int;
use chempoly::vertices::{candidate_vertices, vertex_families};
use chempoly::{Error, IndexSpec, OrderSize};

#[derive(Parser)]
#[command(name = "chempoly", version, about = "Exact polytopes of edge-type vectors for chemical graphs")]
struct Cli {
    /// Worker threads for the parallel sections.
    #[arg(long, global = true, env = "CHEMPOLY_THREADS")]
    threads: Option<usize>,

    /// Write the output to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Facets, equalities and vertices of the polytope for one (n, m).
    Polytope {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Extremal values of a degree-based index.
    Optimize(OptimizeArgs),
    /// Build a graph realizing a point, or only check realizability.
    Realize {
        #[command(flatten)]
        pair: Pair,
        /// Point as m12,m13,m33.
        #[arg(long)]
        point: String,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
        /// Print the realizability verdict as JSON instead of a graph.
        #[arg(long)]
        check_only: bool,
    },
    /// Compare the engine with exhaustive enumeration for every n up to K.
    Verify {
        #[arg(long, value_name = "K")]
        max_n: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        report: Format,
        /// Largest order the enumerator accepts.
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        oracle_cap: u64,
    },
    /// Dump the facet or vertex families.
    Catalog {
        #[arg(value_enum)]
        kind: CatalogKind,
        #[arg(long, requires = "m")]
        n: Option<u64>,
        #[arg(long, requires = "n")]
        m: Option<u64>,
    },
    /// The named index registry.
    Indices {
        #[arg(value_enum, default_value_t = IndicesAction::List)]
        action: IndicesAction,
    },
}

#[derive(Args)]
struct Pair {
    #[arg(long)]
    n: u64,
    #[arg(long)]
    m: u64,
}

#[derive(Args)]
struct OptimizeArgs {
    #[arg(long, required_unless_present = "sweep", conflicts_with = "sweep")]
    n: Option<u64>,
    #[arg(long, required_unless_present = "sweep", conflicts_with = "sweep")]
    m: Option<u64>,
    /// Every valid (n, m) with n in the range, written LO..HI.
    #[arg(long)]
    sweep: Option<String>,
    #[arg(long, required_unless_present = "coeffs", conflicts_with = "coeffs")]
    index: Option<String>,
    /// Edge weights c12,c13,c22,c23,c33.
    #[arg(long)]
    coeffs: Option<String>,
    #[arg(long, default_value = "min")]
    direction: Direction,
    /// Attach a graph for every optimal lattice point.
    #[arg(long)]
    witnesses: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Graph6,
    Dot,
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum)]
enum CatalogKind {
    Facets,
    Vertices,
}

#[derive(Clone, Copy, ValueEnum)]
enum IndicesAction {
    List,
}

/// Failures that map to a dedicated exit status without being a library
/// error.
#[derive(Debug, thiserror::Error)]
enum Exit {
    #[error("point {0} is not realizable")]
    NotRealizable(String),
    #[error("verification failed for {0} pair(s)")]
    Verification(usize),
    #[error("{0}")]
    Usage(String),
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if let Some(e) = err.downcast_ref::<Exit>() {
        return match e {
            Exit::Usage(_) => 1,
            Exit::NotRealizable(_) => 3,
            Exit::Verification(_) => 4,
        };
    }
    match err.downcast_ref::<Error>() {
        Some(Error::InvalidOrderSize { .. } | Error::OutOfRegime { .. }) => 2,
        Some(Error::NotRealizable { .. } | Error::NonInteger(_)) => 3,
        Some(Error::LimitExceeded { .. }) => 4,
        Some(Error::EngineMismatch { .. } | Error::NonIntegerVertex { .. }) => 5,
        Some(Error::UnknownIndex(_) | Error::NonFiniteCoefficient { .. }) => 1,
        _ => 4,
    }
}

fn to_json<T: Serialize>(value: &T) -> anyhow::Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn pair(n: u64, m: u64) -> anyhow::Result<OrderSize> {
    Ok(OrderSize::new(n, m)?)
}

fn parse_point(text: &str) -> anyhow::Result<[i64; 3]> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let [a, b, c] = parts.as_slice() else {
        return Err(Exit::Usage(format!("--point needs three comma-separated integers, got {text:?}")).into());
    };
    let parse = |s: &str| {
        s.parse::<i64>()
            .map_err(|_| Exit::Usage(format!("--point component {s:?} is not an integer")))
    };
    Ok([parse(a)?, parse(b)?, parse(c)?])
}

fn parse_range(text: &str) -> anyhow::Result<(u64, u64)> {
    let bad = || Exit::Usage(format!("--sweep expects LO..HI, got {text:?}"));
    let (lo, hi) = text.split_once("..").ok_or_else(bad)?;
    let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: u64 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        bail!(bad());
    }
    Ok((lo.max(3), hi))
}

fn index_spec(args: &OptimizeArgs) -> anyhow::Result<IndexSpec> {
    match (&args.index, &args.coeffs) {
        (Some(name), None) => Ok(IndexRegistry::standard().lookup(name)?.clone()),
        (None, Some(c)) => Ok(parse_coeffs("custom", c)?),
        _ => Err(Exit::Usage("give exactly one of --index and --coeffs".into()).into()),
    }
}

#[derive(Serialize)]
struct FacetFamilyDump {
    id: &'static str,
    a12: String,
    a13: String,
    a33: String,
    rhs: String,
    condition: String,
}

#[derive(Serialize)]
struct VertexFamilyDump {
    id: &'static str,
    m12: String,
    m13: String,
    m33: String,
    realizable: String,
    extreme: String,
}

#[derive(Serialize)]
struct IndexRow<'a> {
    name: &'a str,
    c12: f64,
    c13: f64,
    c22: f64,
    c23: f64,
    c33: f64,
}

fn optimize_cmd(args: &OptimizeArgs) -> anyhow::Result<String> {
    let idx = index_spec(args)?;
    if let Some(range) = &args.sweep {
        let (lo, hi) = parse_range(range)?;
        let rows = sweep(lo, hi, &idx, args.direction, Exec::Parallel);
        let mut results = Vec::with_capacity(rows.len());
        for (_, r) in rows {
            results.push(r?);
        }
        return match args.format {
            Format::Json => to_json(&results),
            Format::Text => {
                let mut s = String::new();
                for r in &results {
                    let pts: Vec<String> = r
                        .optimal_vertices
                        .iter()
                        .map(|v| format!("({},{},{})", v.point[0], v.point[1], v.point[2]))
                        .collect();
                    s.push_str(&format!("{:>4} {:>4}  {:<20}  {}\n", r.n, r.m, r.optimal_value, pts.join(" ")));
                }
                Ok(s)
            }
        };
    }
    let (Some(n), Some(m)) = (args.n, args.m) else {
        bail!(Exit::Usage("--n and --m are required without --sweep".into()));
    };
    let ns = pair(n, m)?;
    let result = optimize_with(ns, &idx, args.direction, args.witnesses, Exec::Parallel)?;
    match args.format {
        Format::Json => to_json(&result),
        Format::Text => Ok(result.to_text()),
    }
}

fn run(cli: &Cli) -> anyhow::Result<String> {
    match &cli.command {
        Command::Polytope { pair: p, format } => {
            let d = build_polytope_with(pair(p.n, p.m)?, Exec::Parallel)?;
            match format {
                Format::Json => to_json(&d),
                Format::Text => Ok(d.to_text()),
            }
        }
        Command::Optimize(args) => optimize_cmd(args),
        Command::Realize {
            pair: p,
            point,
            format,
            check_only,
        } => {
            let ns = pair(p.n, p.m)?;
            let pt = parse_point(point)?;
            let verdict = check_int(ns, pt);
            if *check_only {
                let text = to_json(&verdict)?;
                if !verdict.realizable {
                    // The verdict is still the useful output here.
                    print!("{text}");
                    bail!(Exit::NotRealizable(point.clone()));
                }
                return Ok(text);
            }
            let g = chempoly::builder::build_witness_int(ns, pt)?;
            Ok(match format {
                GraphFormat::Graph6 => format!("{}\n", g.to_graph6()),
                GraphFormat::Dot => g.to_dot(),
                GraphFormat::Edgelist => g.to_edgelist(),
            })
        }
        Command::Verify {
            max_n,
            report,
            oracle_cap,
        } => {
            if *oracle_cap > HARD_CAP {
                bail!(Exit::Usage(format!("--oracle-cap is at most {HARD_CAP}")));
            }
            let r = chempoly::verify::verify(*max_n, *oracle_cap, Exec::Parallel)?;
            let text = match report {
                Format::Json => to_json(&r)?,
                Format::Text => r.to_text(),
            };
            if !r.ok() {
                print!("{text}");
                bail!(Exit::Verification(r.failed));
            }
            Ok(text)
        }
        Command::Catalog { kind, n, m } => match (kind, n.zip(*m)) {
            (CatalogKind::Facets, None) => to_json(
                &facet_families()
                    .iter()
                    .map(|f| FacetFamilyDump {
                        id: f.id,
                        a12: f.a12.to_string(),
                        a13: f.a13.to_string(),
                        a33: f.a33.to_string(),
                        rhs: f.rhs.to_string(),
                        condition: f.condition.to_string(),
                    })
                    .collect::<Vec<_>>(),
            ),
            (CatalogKind::Facets, Some((n, m))) => to_json(&active_facets(pair(n, m)?)?),
            (CatalogKind::Vertices, None) => to_json(
                &vertex_families()
                    .iter()
                    .map(|v| VertexFamilyDump {
                        id: v.id,
                        m12: v.coords[0].to_string(),
                        m13: v.coords[1].to_string(),
                        m33: v.coords[2].to_string(),
                        realizable: v.realizable.to_string(),
                        extreme: v.extreme.to_string(),
                    })
                    .collect::<Vec<_>>(),
            ),
            (CatalogKind::Vertices, Some((n, m))) => to_json(&candidate_vertices(pair(n, m)?)?),
        },
        Command::Indices { action: IndicesAction::List } => {
            let reg = IndexRegistry::standard();
            let rows: Vec<IndexRow> = reg
                .iter()
                .map(|s| {
                    let [c12, c13, c22, c23, c33] = s.coeffs();
                    IndexRow { name: &s.name, c12, c13, c22, c23, c33 }
                })
                .collect();
            to_json(&rows)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    if let Some(t) = cli.threads {
        configure_threads(t.max(1));
    }
    let outcome = run(&cli).and_then(|text| match &cli.out {
        Some(path) => fs::write(path, &text).with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    });
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

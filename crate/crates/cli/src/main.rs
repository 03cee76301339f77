//! Command-line front end for the deficiency engine.
//!
//! Exit codes: 0 on success (including a passing verification), 1 when a
//! verification or trial run finds counterexamples, 2 for usage, input,
//! size, or parse errors, 3 for contract violations (supplied data broke a
//! precondition a transform is entitled to assume).

use clap::{Args, Parser, Subcommand, ValueEnum};
use defgraph_cli::repairs::{run_edge_repair_trials, run_vertex_repair_trials};
use defgraph_cli::report::VerificationReport;
use defgraph_cli::sweeps::{
    deficiency_of, verify_ex2_growth, verify_h_classes, verify_hamilton_theorem,
    verify_kr_theorem, SpanningPattern,
};
use defgraph_core::deficiency::Property;
use defgraph_core::extremal::{
    bandwidth_bound, ex1_band, ex1_factor, ex2_band, ex2_factor, ex_h, ex_h_prime,
    hamilton_bound, kr_bound, triangle_bound, BoundResult, BoundSide, RFactorParams,
};
use defgraph_core::factor::kr_factor;
use defgraph_core::{emit_graph6, parse_graph6, Error, Graph, Rat};
use serde_json::json;
use std::process::ExitCode;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CONTRACT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "defgraph",
    version,
    about = "Exact solvers and exhaustive verification for edge bounds on graph joins"
)]
struct Cli {
    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for sweeps (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Seed for randomized trials
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,

    /// Enumerate one representative per isomorphism class in sweeps
    #[arg(long, global = true)]
    iso_dedup: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit an extremal construction as graph6
    Construct {
        #[arg(value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        /// Clique order (ex1, ex2)
        #[arg(long)]
        r: Option<usize>,
        /// Star leaf count (exhprime)
        #[arg(long)]
        s: Option<usize>,
        /// graph6 pattern whose independence number sizes the cut (exh)
        #[arg(long)]
        pattern: Option<String>,
    },
    /// Evaluate a closed-form edge bound
    Bound {
        #[arg(value_enum)]
        kind: BoundKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        /// Clique order (kr)
        #[arg(long)]
        r: Option<usize>,
        /// Slack coefficient as P/Q (bandwidth)
        #[arg(long)]
        eps: Option<String>,
    },
    /// Tile a graph, or its join, with cliques
    Factor {
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        input: GraphInput,
        /// Join this many universal vertices first
        #[arg(long, default_value_t = 0)]
        t: usize,
    },
    /// Least number of joined universal vertices giving the property
    Deficiency {
        #[arg(long, value_enum)]
        property: PropertyKind,
        #[command(flatten)]
        input: GraphInput,
        /// Clique order (kr)
        #[arg(long)]
        r: Option<usize>,
        /// graph6 tile pattern (h)
        #[arg(long)]
        pattern: Option<String>,
        /// Scan no further than this join size
        #[arg(long)]
        t_cap: Option<usize>,
    },
    /// Run an exhaustive verification sweep
    Verify {
        #[command(subcommand)]
        task: VerifyTask,
    },
    /// Run randomized repair-transform trials
    Repair {
        #[arg(value_enum)]
        transform: Transform,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 10)]
        nmax: usize,
        #[arg(long, default_value_t = 3)]
        r: usize,
        #[arg(long, default_value_t = 4)]
        tmax: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Ex1,
    Ex2,
    Ex1band,
    Ex2band,
    Exh,
    Exhprime,
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundKind {
    Kr,
    Triangle,
    Hamilton,
    Bandwidth,
}

#[derive(Clone, Copy, ValueEnum)]
enum PropertyKind {
    Kr,
    Ham,
    H,
}

#[derive(Clone, Copy, ValueEnum)]
enum Transform {
    Vertex,
    Edge,
}

#[derive(Subcommand)]
enum VerifyTask {
    /// Clique-factor bound and sharpness sweep
    Kr {
        #[arg(long, default_value_t = 5)]
        nmax: usize,
        #[arg(long, default_value_t = 3)]
        r: usize,
    },
    /// Hamiltonicity bound and band-family sweep
    Hamilton {
        #[arg(long, default_value_t = 5)]
        nmax: usize,
    },
    /// Obstruction-class membership and non-embedding check
    Hclasses {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        /// cycle | nearcycle | kss:S | g6:STRING
        #[arg(long = "h")]
        pattern: String,
    },
    /// Isolated-family growth arithmetic sweep
    Ex2growth {
        #[arg(long, default_value_t = 60)]
        nmax: usize,
        #[arg(long, default_value_t = 8)]
        rmax: usize,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Path to a file holding one graph6 line
    #[arg(long)]
    graph: Option<std::path::PathBuf>,
    /// Inline graph6 string
    #[arg(long)]
    g6: Option<String>,
}

impl GraphInput {
    fn load(&self) -> Result<Graph, Error> {
        let text = match (&self.graph, &self.g6) {
            (Some(path), None) => std::fs::read_to_string(path)
                .map_err(|e| Error::input(format!("cannot read {}: {e}", path.display())))?,
            (None, Some(text)) => text.clone(),
            _ => return Err(Error::input("provide exactly one of --graph and --g6")),
        };
        parse_graph6(text.trim())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if threads == 0 {
            eprintln!("input error: --threads must be positive");
            return ExitCode::from(EXIT_USAGE);
        }
        // Errors only if a global pool already exists, which cannot happen
        // this early; ignore so repeated test harness calls stay benign.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("{e}");
            match e {
                Error::Contract(_) => ExitCode::from(EXIT_CONTRACT),
                _ => ExitCode::from(EXIT_USAGE),
            }
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Error> {
    match &cli.command {
        Command::Construct { family, n, t, r, s, pattern } => {
            construct(cli, *family, *n, *t, *r, *s, pattern.as_deref())
        }
        Command::Bound { kind, n, t, r, eps } => bound(*kind, *n, *t, *r, eps.as_deref()),
        Command::Factor { r, input, t } => factor(cli, *r, input, *t),
        Command::Deficiency { property, input, r, pattern, t_cap } => {
            deficiency(cli, *property, input, *r, pattern.as_deref(), *t_cap)
        }
        Command::Verify { task } => {
            let report = match task {
                VerifyTask::Kr { nmax, r } => verify_kr_theorem(*nmax, *r, cli.iso_dedup)?,
                VerifyTask::Hamilton { nmax } => verify_hamilton_theorem(*nmax, cli.iso_dedup)?,
                VerifyTask::Hclasses { n, t, pattern } => {
                    verify_h_classes(*n, *t, &parse_pattern(pattern)?)?
                }
                VerifyTask::Ex2growth { nmax, rmax } => verify_ex2_growth(*nmax, *rmax)?,
            };
            emit_report(cli, &report)
        }
        Command::Repair { transform, trials, nmax, r, tmax } => {
            let report = match transform {
                Transform::Vertex => {
                    run_vertex_repair_trials(*trials, cli.seed, *nmax, *r, *tmax)?
                }
                Transform::Edge => run_edge_repair_trials(*trials, cli.seed, *nmax, *r, *tmax)?,
            };
            emit_report(cli, &report)
        }
    }
}

fn construct(
    cli: &Cli,
    family: Family,
    n: usize,
    t: usize,
    r: Option<usize>,
    s: Option<usize>,
    pattern: Option<&str>,
) -> Result<u8, Error> {
    let need_r = || r.ok_or_else(|| Error::input("this family needs --r"));
    let (name, graph) = match family {
        Family::Ex1 => ("ex1", ex1_factor(&RFactorParams::new(n, t, need_r()?)?)),
        Family::Ex2 => ("ex2", ex2_factor(&RFactorParams::new(n, t, need_r()?)?)?),
        Family::Ex1band => ("ex1band", ex1_band(n, t)?),
        Family::Ex2band => ("ex2band", ex2_band(n, t)?),
        Family::Exh => {
            let text = pattern.ok_or_else(|| Error::input("exh needs --pattern"))?;
            ("exh", ex_h(n, t, &parse_graph6(text)?)?)
        }
        Family::Exhprime => {
            let s = s.ok_or_else(|| Error::input("exhprime needs --s"))?;
            ("exhprime", ex_h_prime(n, t, s)?)
        }
    };
    let g6 = emit_graph6(&graph);
    if cli.json {
        println!(
            "{}",
            json!({
                "family": name,
                "n": n,
                "t": t,
                "graph6": g6,
                "vertices": graph.n(),
                "edges": graph.edge_count(),
            })
        );
    } else {
        println!("{g6}");
    }
    Ok(0)
}

fn parse_rat(text: &str) -> Result<Rat, Error> {
    let mut parts = text.splitn(2, '/');
    let numer: i64 = parts
        .next()
        .unwrap_or_default()
        .trim()
        .parse()
        .map_err(|_| Error::parse(format!("bad rational: {text}")))?;
    match parts.next() {
        None => Ok(Rat::from_integer(numer)),
        Some(d) => {
            let denom: i64 =
                d.trim().parse().map_err(|_| Error::parse(format!("bad rational: {text}")))?;
            if denom == 0 {
                return Err(Error::parse("zero denominator"));
            }
            Ok(Rat::new(numer, denom))
        }
    }
}

fn rat_json(v: Rat) -> serde_json::Value {
    if v.is_integer() {
        json!(v.to_integer())
    } else {
        json!(format!("{}/{}", v.numer(), v.denom()))
    }
}

fn bound(
    kind: BoundKind,
    n: usize,
    t: usize,
    r: Option<usize>,
    eps: Option<&str>,
) -> Result<u8, Error> {
    let result: BoundResult = match kind {
        BoundKind::Kr => {
            let r = r.ok_or_else(|| Error::input("kr bound needs --r"))?;
            kr_bound(&RFactorParams::new(n, t, r)?)
        }
        BoundKind::Triangle => triangle_bound(n, t),
        BoundKind::Hamilton => hamilton_bound(n, t),
        BoundKind::Bandwidth => {
            let eps = eps.ok_or_else(|| Error::input("bandwidth bound needs --eps P/Q"))?;
            bandwidth_bound(n, t, parse_rat(eps)?)?
        }
    };
    let side = match result.side {
        BoundSide::Ex1 => "EX1",
        BoundSide::Ex2 => "EX2",
    };
    // A bound is a structured value; it prints as JSON in both modes.
    println!(
        "{}",
        json!({
            "value": rat_json(result.value),
            "side": side,
            "hypothesis_ok": result.hypothesis_ok,
        })
    );
    Ok(0)
}

fn factor(cli: &Cli, r: usize, input: &GraphInput, t: usize) -> Result<u8, Error> {
    let g = input.load()?;
    let joined = g.join(t);
    let found = kr_factor(&joined, r);
    if let Some(cert) = &found {
        defgraph_core::validate_certificate(&joined, cert)?;
    }
    if cli.json {
        println!(
            "{}",
            json!({
                "found": found.is_some(),
                "order": joined.n(),
                "tiles": found.as_ref().map(|c| c.tiles.clone()),
            })
        );
    } else {
        match &found {
            None => println!("no factor"),
            Some(cert) => {
                let tiles: Vec<String> = cert
                    .tiles
                    .iter()
                    .map(|tile| {
                        tile.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
                    })
                    .collect();
                println!("{}", tiles.join(" | "));
            }
        }
    }
    Ok(0)
}

fn deficiency(
    cli: &Cli,
    property: PropertyKind,
    input: &GraphInput,
    r: Option<usize>,
    pattern: Option<&str>,
    t_cap: Option<usize>,
) -> Result<u8, Error> {
    let g = input.load()?;
    let property = match property {
        PropertyKind::Kr => {
            Property::KrFactor(r.ok_or_else(|| Error::input("kr property needs --r"))?)
        }
        PropertyKind::Ham => Property::Hamiltonicity,
        PropertyKind::H => {
            let text = pattern.ok_or_else(|| Error::input("h property needs --pattern"))?;
            Property::HFactor(parse_graph6(text)?)
        }
    };
    let value = deficiency_of(g, property, t_cap)?;
    if cli.json {
        println!("{}", json!({ "deficiency": value }));
    } else {
        println!("{value}");
    }
    Ok(0)
}

fn parse_pattern(text: &str) -> Result<SpanningPattern, Error> {
    if text == "cycle" {
        return Ok(SpanningPattern::Cycle);
    }
    if text == "nearcycle" {
        return Ok(SpanningPattern::NearCycle);
    }
    if let Some(s) = text.strip_prefix("kss:") {
        let s: usize =
            s.parse().map_err(|_| Error::parse(format!("bad tile half-size: {s}")))?;
        return Ok(SpanningPattern::BalancedBipartiteFactor(s));
    }
    if let Some(g6) = text.strip_prefix("g6:") {
        return Ok(SpanningPattern::Graph6(g6.to_string()));
    }
    Err(Error::input(format!(
        "unknown pattern {text:?}; expected cycle, nearcycle, kss:S, or g6:STRING"
    )))
}

fn emit_report(cli: &Cli, report: &VerificationReport) -> Result<u8, Error> {
    if cli.json {
        let text = serde_json::to_string_pretty(report)
            .map_err(|e| Error::input(format!("serialization failed: {e}")))?;
        println!("{text}");
    } else {
        println!("{}", report.summary());
        for ce in &report.counterexamples {
            let params: Vec<String> =
                ce.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            println!("  counterexample {} [{}]", ce.graph6, params.join(", "));
        }
    }
    Ok(if report.passed() { 0 } else { EXIT_FAIL })
}

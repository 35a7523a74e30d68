//! `fivepoint`: classify five-point configurations in projective 3-space and query
//! orbit closures from the command line.

mod config;
mod error;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fivepoint::closure::{closure_verdict, orbit_closure_description};
use fivepoint::{
    build_poset, catalogue, classify, compute_rank_matrix, compute_splitting, export_dot, same_orbit, Family, Orbit,
    OrderKind, RankMatrix, RationalParameter,
};
use serde_json::{json, Value};

use crate::config::read_config;
use crate::error::CliError;

#[derive(Parser)]
#[command(name = "fivepoint", version, about = "Exact classification of five points in projective 3-space")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the orbit of a configuration: rank type, splitting, family and parameter.
    Classify(ConfigArg),
    /// Print the splitting of a configuration of any size.
    Splitting(ConfigArg),
    /// Print the rank matrix of a configuration of any size.
    RankMatrix(ConfigArg),
    /// Print whether two configurations lie in the same orbit.
    SameOrbit { first: String, second: String },
    /// Print the components of an orbit closure.
    Closure(OrbitArgs),
    /// Print how an orbit closure meets the fibre of a target.
    ClosureContains {
        #[command(flatten)]
        orbit: OrbitArgs,
        /// Family tag of the target fibre.
        #[arg(long, conflicts_with = "target_config", required_unless_present = "target_config")]
        target: Option<String>,
        /// Configuration file whose rank matrix is the target fibre.
        #[arg(long)]
        target_config: Option<String>,
    },
    /// Print every rank matrix of five points in projective 3-space.
    Enumerate {
        #[arg(long, value_enum, default_value_t = EnumerateFormat::Json)]
        format: EnumerateFormat,
    },
    /// Print the Hasse diagram of one of the orders on rank matrices.
    Hasse {
        #[arg(long, default_value = "leq")]
        order: OrderKind,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
    /// Run the acceptance checks; exits with status 1 if any fails.
    Verify {
        /// Run a single criterion.
        #[arg(long)]
        criterion: Option<u8>,
        #[arg(long, default_value_t = fivepoint_verify::DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Args)]
struct ConfigArg {
    /// Configuration file, or `-` for standard input.
    #[arg(long)]
    config: String,
}

#[derive(Args)]
struct OrbitArgs {
    /// Family tag, e.g. `phi[5^2]` or `phi[4^2;1]`.
    #[arg(long)]
    family: Option<String>,
    /// Parameter point such as `[1:2]`; repeat for two-point parameters.
    #[arg(long = "param")]
    params: Vec<String>,
    /// Configuration file whose orbit is used instead of a family tag.
    #[arg(long, conflicts_with = "family")]
    config: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumerateFormat {
    Json,
    Counts,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

enum Output {
    Json(Value),
    Text(String),
}

fn orbit(args: &OrbitArgs) -> Result<Orbit, CliError> {
    if let Some(path) = &args.config {
        return Ok(classify(&read_config(path)?)?);
    }
    let tag = args.family.as_deref().ok_or_else(|| fivepoint::Error::Parse("give --family or --config".into()))?;
    let family: Family = tag.parse()?;
    let parameter = if args.params.is_empty() { None } else { Some(RationalParameter::parse(&args.params)?) };
    Ok(Orbit::new(family, parameter)?)
}

fn to_json<S: serde::Serialize>(value: &S) -> Value {
    serde_json::to_value(value).expect("library types serialize")
}

fn run(command: Command) -> Result<(Output, bool), CliError> {
    let json = |v: Value| Ok((Output::Json(v), true));
    match command {
        Command::Classify(c) => json(to_json(&classify(&read_config(&c.config)?)?)),
        Command::Splitting(c) => {
            let s = compute_splitting(&read_config(&c.config)?);
            json(json!({ "splitting": s, "splitting_type": s.splitting_type().to_string() }))
        }
        Command::RankMatrix(c) => {
            let phi = compute_rank_matrix(&read_config(&c.config)?);
            json(json!({ "rank_matrix": phi, "rank_type": phi.rank_type(), "type_label": phi.type_label() }))
        }
        Command::SameOrbit { first, second } => json(json!(same_orbit(&read_config(&first)?, &read_config(&second)?)?)),
        Command::Closure(args) => json(to_json(&orbit_closure_description(&orbit(&args)?)?)),
        Command::ClosureContains { orbit: args, target, target_config } => {
            let o = orbit(&args)?;
            let psi: RankMatrix = match (target, target_config) {
                (Some(tag), _) => tag.parse::<Family>()?.rank_matrix(),
                (None, Some(path)) => compute_rank_matrix(&read_config(&path)?),
                (None, None) => unreachable!("clap requires a target"),
            };
            json(to_json(&closure_verdict(&o, &psi)?))
        }
        Command::Enumerate { format: EnumerateFormat::Json } => json(to_json(&catalogue().entries())),
        Command::Enumerate { format: EnumerateFormat::Counts } => {
            let counts: Vec<Value> =
                catalogue().label_counts().into_iter().map(|(l, c)| json!({ "type_label": l, "count": c })).collect();
            json(json!({ "total": catalogue().len(), "labels": counts }))
        }
        Command::Hasse { order, format } => {
            let g = build_poset(order);
            match format {
                GraphFormat::Dot => Ok((Output::Text(export_dot(&g)), true)),
                GraphFormat::Json => {
                    let cat = catalogue();
                    let nodes: Vec<Value> = g
                        .nodes
                        .iter()
                        .map(|phi| {
                            let e = cat.entry(phi).expect("poset nodes are catalogued");
                            json!({ "type_label": e.type_label, "family": e.family })
                        })
                        .collect();
                    json(json!({ "order": order, "nodes": nodes, "hasse": g.hasse }))
                }
            }
        }
        Command::Verify { criterion, seed } => {
            let reports = match criterion {
                Some(c) => vec![fivepoint_verify::run(c, seed).ok_or_else(|| {
                    fivepoint::Error::Parse(format!("no criterion {c}; choose 1 to {}", fivepoint_verify::CRITERIA))
                })?],
                None => fivepoint_verify::run_all(seed),
            };
            let passed = reports.iter().all(|r| r.passed);
            Ok((Output::Json(to_json(&reports)), passed))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((output, passed)) => {
            let text = match output {
                Output::Json(v) => serde_json::to_string_pretty(&v).expect("values serialize") + "\n",
                Output::Text(t) => t,
            };
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            println!("{}", e.to_json());
            ExitCode::from(1)
        }
    }
}

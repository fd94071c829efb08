use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use moduli_core::arith::rational::{format as fmt_rat, parse as parse_rat};
use moduli_core::arith::var::InvGamma;
use moduli_core::eulerchar::{
    chi_complex, chi_fixed_curves, chi_real, chi_real_from_lambda, xi_closed, xi_from_logw,
    xi_from_maps, ChiValue,
};
use moduli_core::json::{poly_with_variable, ToJson};
use moduli_core::mapseries::{map_count_table, specialize_counts, MapKey, MAX_SUPPORTED_EDGES};
use moduli_core::maporacle::{
    enumerate_patterns, glue_census, lambda_from_census_bounded,
    rooted_locally_orientable_counts_bounded, rooted_orientable_counts_bounded, DEFAULT_BOUND,
};
use moduli_core::symfunc::jack;
use moduli_core::verify::{verify_all, Outcome, VerifyConfig};
use moduli_core::{Error, GammaPoly, Partition};

#[derive(Parser, Debug)]
#[command(name = "moduli", version, about = "Exact Euler characteristics of real and complex moduli spaces")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,

    /// Edge truncation for the map series.
    #[arg(long, global = true, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    max_edges: u32,

    /// Seed for the randomized property checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// More logging; repeat for more.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run every cross-check; exit 0 on success, 2 on a violated identity,
    /// 3 when the nonnegativity report is nonempty.
    VerifyAll,
    /// Refined map counts.
    Maps {
        #[command(subcommand)]
        command: MapsCommand,
    },
    /// Parametrized and classical Euler characteristics.
    Euler {
        #[command(subcommand)]
        command: EulerCommand,
    },
    /// Print one Jack symmetric function.
    Jack {
        /// Comma-separated parts, e.g. 2,1.
        #[arg(long)]
        shape: String,
    },
    /// Brute-force enumerators.
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
}

#[derive(Subcommand, Debug)]
enum MapsCommand {
    /// The table of m(i, j, n) as polynomials in b.
    Table {
        /// Evaluate at this value of b (e.g. 0, 1, 1/2).
        #[arg(long)]
        b: Option<String>,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Route {
    Closed,
    Logw,
    Maps,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Variant {
    Real,
    Complex,
    Fixed,
}

#[derive(Args, Debug)]
struct GenusArgs {
    #[arg(long)]
    g: u32,
    #[arg(long)]
    s: u32,
}

#[derive(Subcommand, Debug)]
enum EulerCommand {
    /// ξ^s_g as a polynomial in 1/γ.
    Xi {
        #[command(flatten)]
        gs: GenusArgs,
        #[arg(long, value_enum, default_value_t = Route::Closed)]
        route: Route,
    },
    /// Euler characteristic of a moduli space.
    Chi {
        #[arg(long, value_enum)]
        variant: Variant,
        #[command(flatten)]
        gs: GenusArgs,
        /// Number of fixed curves (fixed variant).
        #[arg(long, default_value_t = 0)]
        m: u32,
        /// The fixed curves separate the surface (fixed variant).
        #[arg(long)]
        separating: bool,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Surface {
    Orientable,
    All,
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// Census of side gluings of labelled polygons.
    Glue {
        /// Comma-separated side counts, e.g. 4 or 3,3.
        #[arg(long)]
        sides: String,
        /// List every connected gluing with its pattern word.
        #[arg(long)]
        verbose_patterns: bool,
    },
    /// Rooted map counts by exhaustive enumeration.
    Rooted {
        #[arg(long)]
        edges: u32,
        #[arg(long, value_enum)]
        surface: Surface,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: u32,
    },
    /// Λ, Λ^O, Λ^N from the gluing census.
    Lambda {
        #[command(flatten)]
        gs: GenusArgs,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: u32,
    },
}

/// An error with the process exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. }
            | Error::InvalidInput(_)
            | Error::OutOfRange { .. }
            | Error::Parity(_)
            | Error::InsufficientTruncation { .. } => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type CliResult<T> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();
    match dispatch(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn dispatch(cli: &Cli) -> CliResult<u8> {
    if cli.max_edges > MAX_SUPPORTED_EDGES {
        log::warn!(
            "max-edges {} needs Jack functions of weight {}; expect a long run",
            cli.max_edges,
            2 * cli.max_edges
        );
    }
    match &cli.command {
        Command::VerifyAll => cmd_verify_all(cli),
        Command::Maps {
            command: MapsCommand::Table { b },
        } => cmd_table(cli, b.as_deref()),
        Command::Euler {
            command: EulerCommand::Xi { gs, route },
        } => cmd_xi(cli, gs, *route),
        Command::Euler {
            command:
                EulerCommand::Chi {
                    variant,
                    gs,
                    m,
                    separating,
                },
        } => cmd_chi(cli, *variant, gs, *m, *separating),
        Command::Jack { shape } => cmd_jack(cli, shape),
        Command::Oracle { command } => cmd_oracle(cli, command),
    }
}

fn parse_list(s: &str, what: &'static str) -> CliResult<Vec<u32>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim().parse::<u32>().map_err(|_| {
                Failure::from(Error::Parse {
                    kind: what,
                    input: s.to_string(),
                })
            })
        })
        .collect()
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("JSON values serialize"));
}

fn key_json(k: &MapKey) -> Value {
    json!({"i": k.i(), "j": k.j, "n": k.n})
}

fn key_csv(k: &MapKey) -> String {
    let i: Vec<String> = k.i().iter().map(u32::to_string).collect();
    format!("{},{},{}", k.n, k.j, i.join(";"))
}

fn cmd_verify_all(cli: &Cli) -> CliResult<u8> {
    let config = VerifyConfig {
        max_edges: cli.max_edges,
        seed: cli.seed,
        bernoulli: None,
    };
    let report = verify_all(&config);
    match cli.format {
        Format::Json => {
            let checks: Vec<Value> = report
                .checks
                .iter()
                .map(|c| {
                    let (status, detail) = match &c.outcome {
                        Outcome::Pass => ("pass", None),
                        Outcome::Skipped(d) => ("skip", Some(d)),
                        Outcome::Fail(d) => ("fail", Some(d)),
                        Outcome::Findings(d) => ("report", Some(d)),
                    };
                    json!({
                        "name": c.name,
                        "status": status,
                        "detail": detail,
                        "notes": c.notes,
                        "seconds": c.elapsed.as_secs_f64(),
                    })
                })
                .collect();
            print_json(&json!({"checks": checks, "exit_code": report.exit_code()}));
        }
        Format::Csv => {
            println!("name,status,seconds");
            for c in &report.checks {
                let status = match c.outcome {
                    Outcome::Pass => "pass",
                    Outcome::Skipped(_) => "skip",
                    Outcome::Fail(_) => "fail",
                    Outcome::Findings(_) => "report",
                };
                println!("{},{status},{:.3}", c.name, c.elapsed.as_secs_f64());
            }
        }
        Format::Pretty => println!("{report}"),
    }
    if let Some(f) = report.first_failure() {
        if let Outcome::Fail(why) = &f.outcome {
            eprintln!("first failure in {}: {why}", f.name);
        }
    }
    Ok(report.exit_code() as u8)
}

fn cmd_table(cli: &Cli, b: Option<&str>) -> CliResult<u8> {
    let table = map_count_table(cli.max_edges)?;
    match b {
        Some(b) => {
            let value = parse_rat(b)?;
            let rows = specialize_counts(&table, &value);
            match cli.format {
                Format::Json => print_json(&Value::Array(
                    rows.iter()
                        .map(|(k, v)| {
                            let mut o = key_json(k);
                            o["value"] = v.to_json();
                            o
                        })
                        .collect(),
                )),
                Format::Csv => {
                    println!("n,j,i,value");
                    for (k, v) in &rows {
                        println!("{},{}", key_csv(k), fmt_rat(v));
                    }
                }
                Format::Pretty => {
                    for (k, v) in &rows {
                        println!("{k:40} {}", fmt_rat(v));
                    }
                }
            }
        }
        None => match cli.format {
            Format::Json => print_json(&table.to_json_rows()),
            Format::Csv => {
                println!("n,j,i,poly");
                for (k, p) in table.entries() {
                    let cs: Vec<String> = p.coeffs().iter().map(fmt_rat).collect();
                    println!("{},{}", key_csv(k), cs.join(";"));
                }
            }
            Format::Pretty => {
                for (k, p) in table.entries() {
                    println!("{k:40} {p}");
                }
            }
        },
    }
    Ok(0)
}

fn cmd_xi(cli: &Cli, gs: &GenusArgs, route: Route) -> CliResult<u8> {
    let xi: GammaPoly = match route {
        Route::Closed => xi_closed(gs.g, gs.s)?,
        Route::Logw => xi_from_logw(gs.g, gs.s)?,
        Route::Maps => {
            let needed = 3 * gs.g + 3 * gs.s - 3;
            let table = map_count_table(cli.max_edges.max(needed))?;
            xi_from_maps(gs.g, gs.s, &table)?
        }
    };
    match cli.format {
        Format::Json => print_json(&poly_with_variable::<InvGamma>(&xi)),
        Format::Csv => {
            println!("degree,coefficient");
            for (d, c) in xi.coeffs().iter().enumerate() {
                println!("{d},{}", fmt_rat(c));
            }
        }
        Format::Pretty => println!("{xi}"),
    }
    Ok(0)
}

fn cmd_chi(cli: &Cli, variant: Variant, gs: &GenusArgs, m: u32, separating: bool) -> CliResult<u8> {
    let value: ChiValue = match variant {
        Variant::Real if gs.g >= 1 && gs.s >= 1 => chi_real_from_lambda(gs.g, gs.s)?,
        Variant::Real => chi_real(gs.g, gs.s),
        Variant::Complex => chi_complex(gs.g, gs.s)?,
        Variant::Fixed => chi_fixed_curves(gs.g, gs.s, m, separating)?,
    };
    match cli.format {
        Format::Json => print_json(&json!({
            "g": value.g,
            "s": value.s,
            "variant": value.variant.to_string(),
            "value": value.value.to_json(),
        })),
        Format::Csv => println!("g,s,variant,value\n{},{},{},{}", value.g, value.s, value.variant, value),
        Format::Pretty => println!("{value}"),
    }
    Ok(0)
}

fn cmd_jack(cli: &Cli, shape: &str) -> CliResult<u8> {
    let shape = Partition::new(parse_list(shape, "partition")?)?;
    let rec = jack(&shape)?;
    match cli.format {
        Format::Json => print_json(&rec.to_json()),
        Format::Csv => {
            println!("partition,coefficient");
            for (mu, c) in rec.expansion.terms().collect::<Vec<_>>().into_iter().rev() {
                println!("\"{mu}\",\"{c}\"");
            }
        }
        Format::Pretty => {
            println!("J{} = {}", rec.shape, rec.expansion);
            println!("norm      = {}", rec.norm);
            println!("principal = {}", rec.principal);
            println!("p2coeff   = {}", rec.p2coeff);
        }
    }
    Ok(0)
}

fn cmd_oracle(cli: &Cli, command: &OracleCommand) -> CliResult<u8> {
    match command {
        OracleCommand::Glue {
            sides,
            verbose_patterns,
        } => {
            let sides = parse_list(sides, "side counts")?;
            let census = glue_census(&sides)?;
            let verbose = *verbose_patterns || cli.verbose > 0;
            let mut patterns = Vec::new();
            if verbose {
                for p in enumerate_patterns(&sides)? {
                    let s = p.classify();
                    if s.connected {
                        patterns.push((p.word(), s));
                    }
                }
            }
            match cli.format {
                Format::Json => {
                    let rows: Vec<Value> = census
                        .rows
                        .iter()
                        .map(|(c, r)| {
                            json!({
                                "euler_characteristic": c.euler_characteristic,
                                "orientable": c.orientable,
                                "all": r.all,
                                "valence_at_least_3": r.valence_at_least_3,
                            })
                        })
                        .collect();
                    let mut out = json!({
                        "sides": census.sides,
                        "raw_total": census.raw_total,
                        "rows": rows,
                    });
                    if verbose {
                        out["patterns"] = patterns
                            .iter()
                            .map(|(w, s)| {
                                json!({
                                    "word": w,
                                    "euler_characteristic": s.euler_characteristic,
                                    "orientable": s.orientable,
                                    "valences": s.valences.to_json(),
                                })
                            })
                            .collect();
                    }
                    print_json(&out);
                }
                Format::Csv => {
                    println!("euler_characteristic,orientable,all,valence_at_least_3");
                    for (c, r) in &census.rows {
                        println!("{},{},{},{}", c.euler_characteristic, c.orientable, r.all, r.valence_at_least_3);
                    }
                }
                Format::Pretty => {
                    println!("sides {:?}: {} raw gluings", census.sides, census.raw_total);
                    for (c, r) in &census.rows {
                        println!(
                            "chi={:>3} {:13} all={:<6} valence>=3={}",
                            c.euler_characteristic,
                            if c.orientable { "orientable" } else { "nonorientable" },
                            r.all,
                            r.valence_at_least_3
                        );
                    }
                    for (w, s) in &patterns {
                        println!(
                            "  {w:16} chi={:>3} {:13} valences {}",
                            s.euler_characteristic,
                            if s.orientable { "orientable" } else { "nonorientable" },
                            s.valences
                        );
                    }
                }
            }
        }
        OracleCommand::Rooted {
            edges,
            surface,
            bound,
        } => {
            let counts = match surface {
                Surface::Orientable => rooted_orientable_counts_bounded(*edges, *bound)?,
                Surface::All => rooted_locally_orientable_counts_bounded(*edges, *bound)?,
            };
            match cli.format {
                Format::Json => print_json(&Value::Array(
                    counts
                        .iter()
                        .map(|(k, c)| {
                            let mut o = key_json(k);
                            o["count"] = json!(c);
                            o
                        })
                        .collect(),
                )),
                Format::Csv => {
                    println!("n,j,i,count");
                    for (k, c) in &counts {
                        println!("{},{c}", key_csv(k));
                    }
                }
                Format::Pretty => {
                    for (k, c) in &counts {
                        println!("{k:40} {c}");
                    }
                }
            }
        }
        OracleCommand::Lambda { gs, bound } => {
            let l = lambda_from_census_bounded(gs.g, gs.s, *bound)?;
            match cli.format {
                Format::Json => print_json(&json!({
                    "g": gs.g,
                    "s": gs.s,
                    "lambda": l.lambda.to_json(),
                    "orientable": l.orientable.to_json(),
                    "nonorientable": l.nonorientable.to_json(),
                })),
                Format::Csv => println!(
                    "lambda,orientable,nonorientable\n{},{},{}",
                    fmt_rat(&l.lambda),
                    fmt_rat(&l.orientable),
                    fmt_rat(&l.nonorientable)
                ),
                Format::Pretty => println!(
                    "Lambda = {}, orientable = {}, nonorientable = {}",
                    fmt_rat(&l.lambda),
                    fmt_rat(&l.orientable),
                    fmt_rat(&l.nonorientable)
                ),
            }
        }
    }
    Ok(0)
}

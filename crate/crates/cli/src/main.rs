use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rla_core::classify::{self, Part};
use rla_core::env::{EnvAlgebra, DEFAULT_BRUTE_FORCE_BUDGET, DEFAULT_MAX_DIM};
use rla_core::lie::LieAlgebraSpec;
use rla_core::report::{self, Format, Report};
use rla_core::{corpus, format, repro, Error};

/// Restricted enveloping algebras over prime fields.
#[derive(Parser)]
#[command(name = "rla", version)]
struct Cli {
    /// Output style.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Kv,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Jacobi identity and the Jacobson condition.
    Validate { file: String },
    /// Derived algebra, center, central series and nilpotency class.
    Info { file: String },
    /// Run a metabelian or solvable check inside u(L).
    Env {
        file: String,
        /// metabelian:{plus,minus,full} or solvable:{plus,minus,full}:DEPTH
        #[arg(long)]
        check: String,
        /// Also enumerate all quadruples of basis elements.
        #[arg(long)]
        brute_force: bool,
        #[arg(long, env = "RLA_MAX_DIM", default_value_t = DEFAULT_MAX_DIM)]
        max_dim: u64,
    },
    /// Structural verdicts for u(L)^-, u(L)^+ and u(L).
    Classify { file: String },
    /// Compare the structural verdicts with direct computation in u(L).
    Verify {
        file: String,
        #[arg(long, env = "RLA_MAX_DIM", default_value_t = DEFAULT_MAX_DIM)]
        max_dim: u64,
        /// Include wall-clock time per check.
        #[arg(long)]
        timings: bool,
    },
    /// List or print the built-in algebras.
    Corpus {
        #[arg(long, conflicts_with = "name")]
        list: bool,
        name: Option<String>,
    },
    /// Recompute the published witnesses and spans.
    ReproPaper,
}

enum Check {
    Metabelian(Part),
    Solvable(Part, usize),
}

fn parse_part(s: &str) -> Option<Part> {
    Part::ALL.into_iter().find(|p| p.name() == s)
}

fn parse_check(s: &str) -> Result<Check, Error> {
    let bad = || Error::Malformed(format!("unknown check `{s}`; expected metabelian:PART or solvable:PART:DEPTH"));
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        ["metabelian", part] => Ok(Check::Metabelian(parse_part(part).ok_or_else(bad)?)),
        ["solvable", part, depth] => {
            Ok(Check::Solvable(parse_part(part).ok_or_else(bad)?, depth.parse().map_err(|_| bad())?))
        }
        _ => Err(bad()),
    }
}

/// Reads a file, `-` for stdin, or `corpus:NAME`.
fn load_text(file: &str) -> Result<String, Error> {
    if let Some(name) = file.strip_prefix("corpus:") {
        return Ok(corpus::lookup(name)?.content.to_string());
    }
    let mut text = String::new();
    let res = if file == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(file).map(|t| text = t)
    };
    res.map_err(|e| Error::Malformed(format!("cannot read {file}: {e}")))?;
    Ok(text)
}

fn load_valid(file: &str) -> Result<LieAlgebraSpec, Error> {
    let spec = format::parse(&load_text(file)?)?;
    let r = spec.validate();
    if !r.is_valid() {
        let names = spec.names();
        let mut what: Vec<String> =
            r.jacobi.iter().map(|t| format!("Jacobi fails on ({}, {}, {})", names[t[0]], names[t[1]], names[t[2]])).collect();
        what.extend(r.jacobson.iter().map(|&i| format!("Jacobson condition fails for {}", names[i])));
        return Err(Error::Malformed(format!("not a restricted Lie algebra: {}", what.join("; "))));
    }
    Ok(spec)
}

struct Outcome {
    report: Report,
    code: u8,
}

fn ok(report: Report) -> Outcome {
    Outcome { report, code: 0 }
}

fn status(report: Report, success: bool) -> Outcome {
    Outcome { report, code: if success { 0 } else { 1 } }
}

fn run(cmd: Command) -> Result<Outcome, Error> {
    match cmd {
        Command::Validate { file } => {
            let spec = format::parse(&load_text(&file)?)?;
            let r = spec.validate();
            let valid = r.is_valid();
            Ok(Outcome { report: report::validation(&spec, &r), code: if valid { 0 } else { 2 } })
        }
        Command::Info { file } => Ok(ok(report::info(&load_valid(&file)?))),
        Command::Env { file, check, brute_force, max_dim } => {
            let check = parse_check(&check)?;
            let spec = load_valid(&file)?;
            let alg = EnvAlgebra::build(spec, max_dim)?;
            match check {
                Check::Metabelian(part) => {
                    let s = part.subspace(&alg);
                    let res = alg.is_lie_metabelian(&s);
                    let oracle = if brute_force {
                        Some(alg.brute_force_metabelian(&s, DEFAULT_BRUTE_FORCE_BUDGET)?.holds)
                    } else {
                        None
                    };
                    if oracle.is_some_and(|o| o != res.holds) {
                        return Err(Error::Malformed("brute-force enumeration disagrees with the derived-subspace check".into()));
                    }
                    let holds = res.holds;
                    Ok(status(report::metabelian(&alg, part, s.dim(), &res, oracle), holds))
                }
                Check::Solvable(part, depth) => {
                    if brute_force {
                        return Err(Error::Malformed("--brute-force applies to metabelian checks only".into()));
                    }
                    let s = part.subspace(&alg);
                    let res = alg.is_lie_solvable(&s, depth);
                    let within = res.length.within(depth);
                    Ok(status(report::solvable(part, depth, &res), within))
                }
            }
        }
        Command::Classify { file } => Ok(ok(report::classification(&classify::classify(&load_valid(&file)?)?))),
        Command::Verify { file, max_dim, timings } => {
            let spec = load_valid(&file)?;
            let record = classify::verify(&spec, max_dim)?;
            let alg = EnvAlgebra::build(spec, max_dim)?;
            let agree = record.agreement();
            Ok(status(report::verification(&alg, &record, timings), agree))
        }
        Command::Corpus { list, name } => match (list, name) {
            (false, Some(name)) => {
                let entry = corpus::lookup(&name)?;
                print!("{}", entry.content);
                Ok(Outcome { report: Report::new(), code: 0 })
            }
            _ => {
                let mut r = Report::new();
                for e in corpus::ENTRIES {
                    let mut desc = e.description.to_string();
                    if !e.aliases.is_empty() {
                        desc.push_str(&format!(" (alias {})", e.aliases.join(", ")));
                    }
                    r.push(e.name, desc);
                }
                Ok(ok(r))
            }
        },
        Command::ReproPaper => {
            let checks = repro::run_all()?;
            let all = checks.iter().all(|c| c.passed);
            Ok(status(report::repro(&checks), all))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let fmt = match cli.format {
        OutputFormat::Text => Format::Text,
        OutputFormat::Kv => Format::Kv,
    };
    match run(cli.command) {
        Ok(out) => {
            print!("{}", out.report.render(fmt));
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

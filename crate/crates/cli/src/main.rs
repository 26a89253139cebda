//! Command dispatch and exit codes.
//!
//! Exit codes: 0 success / all rows pass, 1 usage or syntax error,
//! 2 rejected input (failed precondition), 3 reference or oracle mismatch.

mod commands;
mod output;
mod parser;
mod tables;

use commands::{OutputFormat, RunConfig};
use parser::{KnotError, KnotSpec};
use std::process::ExitCode;

const USAGE: &str = "\
nuplus - concordance invariants of L-space knots from semigroup data

USAGE:
    nuplus <COMMAND> [ARGS] [FLAGS]

COMMANDS:
    invariants <KNOT>             invariants of a single knot
    pair <K> <L>                  invariants of K # mirror(L) and L # mirror(K)
    deform <CENTRAL> <PERTURBED>  deformation obstruction between two cusps
    oracle <K> <L>                chain-level oracle vs the closed formula
    tables                        recompute the reference value battery
    help                          print this message

KNOT GRAMMAR (whitespace-insensitive):
    T(p,q)            torus knot, p,q >= 2 coprime
    S{g1,g2,...}      numerical semigroup generated by g1,g2,...
    A[e0,e1,...]      symmetric Alexander exponent list, e.g. A[1,0,-1]
    G[v0,v1,...;d]    enumerating-function prefix with delta = d
    U                 the unknot

FLAGS:
    --json            JSON output
    --csv             CSV output, one row per quantity
    --surgery <n>     add correction terms of +n surgery to `pair`
    --trunc <N>       oracle truncation override (never below the safe floor)
    --max-n <B>       extend the verbose gamma-difference profile to n = B
    --verbose         extra detail in text mode

EXIT CODES:
    0 success    1 usage/syntax error    2 rejected input    3 mismatch
";

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match run(&args) {
        Ok(code) => code,
        Err(e) => e.report(),
    }
}

enum CliError {
    Usage(String),
    Syntax(String),
    Domain(nuplus::Error),
}

impl CliError {
    fn report(self) -> ExitCode {
        match self {
            CliError::Usage(msg) => {
                eprintln!("error: {msg}");
                eprintln!("run `nuplus help` for usage");
                ExitCode::from(1)
            }
            CliError::Syntax(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(1)
            }
            CliError::Domain(e) => {
                eprintln!("rejected: {e}");
                ExitCode::from(2)
            }
        }
    }
}

impl From<nuplus::Error> for CliError {
    fn from(e: nuplus::Error) -> Self {
        CliError::Domain(e)
    }
}

fn parse_knot_arg(text: &str) -> Result<KnotSpec, CliError> {
    KnotSpec::parse(text).map_err(|e| match e {
        KnotError::Syntax(err) => CliError::Syntax(format!("in '{text}': {err}")),
        KnotError::Domain(err) => CliError::Domain(err),
    })
}

fn run(args: &[String]) -> Result<ExitCode, CliError> {
    let Some(command) = args.first() else {
        return Err(CliError::Usage("missing command".to_owned()));
    };
    let (positional, config) = parse_flags(&args[1..])?;

    match command.as_str() {
        "help" | "-h" | "--help" => {
            print!("{USAGE}");
            Ok(ExitCode::SUCCESS)
        }
        "invariants" => {
            let [knot] = positional_array::<1>(&positional)?;
            let spec = parse_knot_arg(knot)?;
            let report = commands::cmd_invariants(&spec);
            match config.format {
                OutputFormat::Json => println!("{}", output::json(&report)),
                OutputFormat::Csv => print!("{}", output::invariants_csv(&report)),
                OutputFormat::Text => {
                    print!("{}", output::invariants_text(&report, config.verbose))
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        "pair" => {
            let [k, l] = positional_array::<2>(&positional)?;
            let k = parse_knot_arg(k)?;
            let l = parse_knot_arg(l)?;
            let report = commands::cmd_pair(&k, &l, &config)?;
            match config.format {
                OutputFormat::Json => println!("{}", output::json(&report)),
                OutputFormat::Csv => print!("{}", output::pair_csv(&report)),
                OutputFormat::Text => {
                    let profile = config.verbose.then(|| {
                        commands::gamma_difference_profile(&k.resolved, &l.resolved, config.max_n)
                    });
                    print!("{}", output::pair_text(&report, profile.as_deref()));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        "deform" => {
            let [central, perturbed] = positional_array::<2>(&positional)?;
            let central = parse_knot_arg(central)?;
            let perturbed = parse_knot_arg(perturbed)?;
            let report = commands::cmd_deform(&central, &perturbed)?;
            match config.format {
                OutputFormat::Json => println!("{}", output::json(&report)),
                OutputFormat::Csv => print!("{}", output::deform_csv(&report)),
                OutputFormat::Text => print!("{}", output::deform_text(&report)),
            }
            Ok(ExitCode::SUCCESS)
        }
        "oracle" => {
            let [k, l] = positional_array::<2>(&positional)?;
            let k = parse_knot_arg(k)?;
            let l = parse_knot_arg(l)?;
            let report = commands::cmd_oracle(&k, &l, &config)?;
            match config.format {
                OutputFormat::Json => println!("{}", output::json(&report)),
                OutputFormat::Csv => print!("{}", output::oracle_csv(&report)),
                OutputFormat::Text => print!("{}", output::oracle_text(&report)),
            }
            Ok(if report.matches {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            })
        }
        "tables" => {
            if !positional.is_empty() {
                return Err(CliError::Usage(format!(
                    "`tables` takes no arguments, got '{}'",
                    positional[0]
                )));
            }
            let rows = tables::run_battery();
            match config.format {
                OutputFormat::Json => println!("{}", output::json(&rows)),
                OutputFormat::Csv => print!("{}", output::tables_csv(&rows)),
                OutputFormat::Text => print!("{}", output::tables_text(&rows)),
            }
            Ok(if rows.iter().all(|r| r.pass) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            })
        }
        other => Err(CliError::Usage(format!("unknown command '{other}'"))),
    }
}

fn positional_array<const N: usize>(positional: &[String]) -> Result<[&str; N], CliError> {
    if positional.len() != N {
        return Err(CliError::Usage(format!(
            "expected {N} argument(s), got {}",
            positional.len()
        )));
    }
    let mut out = [""; N];
    for (slot, arg) in out.iter_mut().zip(positional) {
        *slot = arg;
    }
    Ok(out)
}

fn parse_flags(args: &[String]) -> Result<(Vec<String>, RunConfig), CliError> {
    let mut positional = Vec::new();
    let mut config = RunConfig::default();
    let mut iter = args.iter();
    while let Some(arg) = iter.next() {
        match arg.as_str() {
            "--json" => config.format = OutputFormat::Json,
            "--csv" => config.format = OutputFormat::Csv,
            "--verbose" => config.verbose = true,
            "--trunc" => config.truncation = Some(flag_value(&mut iter, "--trunc")?),
            "--surgery" => config.surgery = Some(flag_value(&mut iter, "--surgery")?),
            "--max-n" => config.max_n = Some(flag_value(&mut iter, "--max-n")?),
            other if other.starts_with("--") => {
                return Err(CliError::Usage(format!("unknown flag '{other}'")));
            }
            _ => positional.push(arg.clone()),
        }
    }
    Ok((positional, config))
}

fn flag_value(iter: &mut std::slice::Iter<'_, String>, flag: &str) -> Result<u64, CliError> {
    let value = iter
        .next()
        .ok_or_else(|| CliError::Usage(format!("{flag} needs a value")))?;
    value.parse().map_err(|_| {
        CliError::Usage(format!(
            "{flag} needs a non-negative integer, got '{value}'"
        ))
    })
}

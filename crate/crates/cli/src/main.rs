//! `nlposets`: counts, enumerations, bijections, verification suites, series
//! analysis and OEIS cross-checks for naturally labelled posets.

mod analyze;
mod biject;
mod config;
mod error;
mod family;
mod oeis;

use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nlposets::analysis::Gamma;
use nlposets::bfile::ANumber;
use nlposets::counting::gentree::memory_estimate;
use nlposets::verify::{self, Suite};

use crate::config::Config;
use crate::error::{CliError, Result};
use crate::family::{Format, Method, Target};

#[derive(Parser)]
#[command(
    name = "nlposets",
    version,
    about = "Naturally labelled posets and pattern-avoiding permutations"
)]
struct Cli {
    /// `key = value` file setting limits and directories.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the number of objects of each size.
    Count(SelectArgs),
    /// List every object of each size.
    Enumerate(SelectArgs),
    /// Apply one map of the bijection chain to each line of a file.
    Biject {
        #[arg(long, value_enum)]
        map: biject::Map,
        #[arg(long)]
        inverse: bool,
        /// Input file; standard input when omitted or `-`.
        #[arg(long = "in", value_name = "FILE")]
        input: Option<PathBuf>,
        /// Output file; standard output when omitted or `-`.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Run invariant suites and report one line per check.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Ratio-method tables and asymptotic fits of a b-file of counts.
    Analyze {
        #[arg(value_enum)]
        kind: analyze::Kind,
        #[arg(long, value_name = "FILE")]
        terms: PathBuf,
        /// A positive number, `log4inv`, or `free` (olsfit only).
        #[arg(long, default_value = "log4inv", allow_hyphen_values = true, value_parser = analyze::parse_gamma)]
        gamma: Gamma,
        #[arg(long, default_value_t = 1.0 / 3.0)]
        alpha: f64,
        /// Inclusive index range `A..B`.
        #[arg(long, value_parser = analyze::parse_range)]
        range: Option<(usize, usize)>,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = ',')]
        sep: char,
    },
    /// Fetch OEIS b-files into a cache, or compare them with local counts.
    Oeis {
        #[command(subcommand)]
        action: OeisAction,
    },
}

#[derive(Args)]
struct SelectArgs {
    /// A poset family, `interval-orders`, or `av<pattern>` such as `av12-34`.
    #[arg(long)]
    family: String,
    #[arg(long)]
    max_n: usize,
    /// Defaults to 1, or 0 when `--max-n` is 0.
    #[arg(long)]
    min_n: Option<usize>,
    /// Split each size by the number of minimal elements.
    #[arg(long)]
    by_minima: bool,
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    method: Method,
    #[arg(long, value_enum, default_value_t = Format::List)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Matrices,
    Bijections,
    Counting,
    Series,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::All => Suite::All,
            SuiteArg::Matrices => Suite::Matrices,
            SuiteArg::Bijections => Suite::Bijections,
            SuiteArg::Counting => Suite::Counting,
            SuiteArg::Series => Suite::Series,
        }
    }
}

#[derive(Args)]
struct OeisArgs {
    /// An A-number such as A113226.
    id: ANumber,
    /// Cache directory; overrides `cache_dir` from the config file.
    #[arg(long, value_name = "DIR")]
    cache: Option<PathBuf>,
    /// Never touch the network.
    #[arg(long)]
    offline: bool,
}

#[derive(Subcommand)]
enum OeisAction {
    /// Print the b-file, fetching it into the cache if needed.
    Fetch(OeisArgs),
    /// Compare local term a(n) with b-file entry n + shift.
    Compare {
        #[command(flatten)]
        common: OeisArgs,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        shift: i64,
        #[arg(long)]
        max_n: Option<usize>,
    },
}

fn read_input(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) if p != Path::new("-") => std::fs::read_to_string(p).map_err(CliError::io(p)),
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(CliError::io("<stdin>"))?;
            Ok(s)
        }
    }
}

fn write_output(path: Option<&Path>, text: &str, config: &Config) -> Result<()> {
    match path {
        Some(p) if p != Path::new("-") => {
            let p = config.output_path(p);
            if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir).map_err(CliError::io(dir))?;
            }
            std::fs::write(&p, text).map_err(CliError::io(&p))
        }
        _ => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(CliError::io("<stdout>"))
        }
    }
}

fn select_range(a: &SelectArgs) -> Result<(usize, usize)> {
    let min = a.min_n.unwrap_or(if a.max_n == 0 { 0 } else { 1 });
    if min > a.max_n {
        return Err(CliError::Usage(format!(
            "--min-n {min} exceeds --max-n {}",
            a.max_n
        )));
    }
    Ok((min, a.max_n))
}

fn verify_guard(suite: Suite, max_n: Option<usize>, config: &Config) -> Result<()> {
    let parts: Vec<Suite> = if suite == Suite::All {
        Suite::PARTS.to_vec()
    } else {
        vec![suite]
    };
    for s in parts {
        let n = max_n.unwrap_or(s.default_max_n());
        let (limit, key) = match s {
            Suite::Matrices => (config.matrix_limit, "matrix_limit"),
            Suite::Bijections => (config.poset_limit, "poset_limit"),
            Suite::Counting => (config.permutation_limit, "permutation_limit"),
            Suite::Series => {
                let need = memory_estimate(n);
                if need > config.memory_budget {
                    return Err(CliError::Guard(format!(
                        "series suite with {n} terms needs about {need} bytes, over the memory_budget of {}",
                        config.memory_budget
                    )));
                }
                continue;
            }
            Suite::All => unreachable!(),
        };
        if n > limit {
            return Err(CliError::Guard(format!(
                "{s} suite at n = {n} exceeds {key} = {limit}; raise it in the config file to allow it"
            )));
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    let config = Config::load(cli.config.as_deref())?;
    match cli.command {
        Command::Count(a) => {
            let target = Target::parse(&a.family)?;
            let (min, max) = select_range(&a)?;
            let text = if a.by_minima {
                family::count_by_minima(&target, min, max, a.method, &config)?
            } else {
                family::format_series(
                    &family::count(&target, min, max, a.method, &config)?,
                    a.format,
                )
            };
            write_output(None, &text, &config)
        }
        Command::Enumerate(a) => {
            let target = Target::parse(&a.family)?;
            let (min, max) = select_range(&a)?;
            write_output(
                None,
                &family::enumerate(&target, min, max, a.by_minima, &config)?,
                &config,
            )
        }
        Command::Biject {
            map,
            inverse,
            input,
            out,
        } => {
            let text = biject::run(map, inverse, &read_input(input.as_deref())?)?;
            write_output(out.as_deref(), &text, &config)
        }
        Command::Verify { suite, max_n } => {
            let suite = Suite::from(suite);
            verify_guard(suite, max_n, &config)?;
            let report = verify::run(suite, max_n);
            write_output(None, &format!("{report}\n"), &config)?;
            if report.passed() {
                Ok(())
            } else {
                Err(CliError::Failed(format!(
                    "{} checks failed",
                    report.failures().count()
                )))
            }
        }
        Command::Analyze {
            kind,
            terms,
            gamma,
            alpha,
            range,
            out,
            sep,
        } => {
            let text = read_input(Some(&terms))?;
            let req = analyze::Request {
                kind,
                gamma,
                alpha,
                range,
                sep,
            };
            write_output(out.as_deref(), &analyze::run(&req, &text)?, &config)
        }
        Command::Oeis { action } => match action {
            OeisAction::Fetch(a) => {
                let cache = a.cache.unwrap_or_else(|| config.cache_dir.clone());
                let b = oeis::fetch(&a.id, &cache, a.offline)?;
                eprintln!("{}: {} entries ({})", b.id, b.entries.len(), b.source);
                write_output(None, &b.to_text(), &config)
            }
            OeisAction::Compare {
                common: a,
                shift,
                max_n,
            } => {
                oeis::check_known(&a.id)?;
                let cache = a.cache.unwrap_or_else(|| config.cache_dir.clone());
                let b = oeis::fetch(&a.id, &cache, a.offline)?;
                let n = max_n.unwrap_or_else(|| oeis::default_max_n(&a.id, &b, shift, &config));
                let report = oeis::compare_with(&a.id, &b, n, shift, &config)?;
                write_output(None, &format!("{}: {report}\n", a.id), &config)?;
                if report.agrees() {
                    Ok(())
                } else {
                    Err(CliError::Failed(format!(
                        "{} disagrees with the local series",
                        a.id
                    )))
                }
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verify_guards() {
        let c = Config::default();
        assert_eq!(verify_guard(Suite::Bijections, Some(7), &c).ok(), Some(()));
        assert_eq!(
            verify_guard(Suite::Matrices, Some(9), &c)
                .unwrap_err()
                .exit_code(),
            3
        );
        assert_eq!(
            verify_guard(Suite::Counting, Some(11), &c)
                .unwrap_err()
                .exit_code(),
            3
        );
        let tight = Config {
            memory_budget: 1,
            ..c
        };
        assert_eq!(
            verify_guard(Suite::Series, Some(557), &tight)
                .unwrap_err()
                .exit_code(),
            3
        );
    }
}

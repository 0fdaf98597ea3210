//! `count` and `enumerate`.

use std::fmt::Write as _;

use clap::ValueEnum;
use nlposets::counting::brute::brute_force_avoider_count_with_limit;
use nlposets::counting::gentree::generating_tree_counts_with;
use nlposets::counting::gf::minima_table_from_gf;
use nlposets::counting::{q_stirling_table, series_from_gf, CountSeries, CountingError, GfId};
use nlposets::enumerate::{
    count_family_by_minima, count_family_with_limit, enumerate_family_with_limit, EnumerateError,
};
use nlposets::perm::{for_each_permutation, Permutation, VincularPattern};
use nlposets::FamilyId;

use crate::config::Config;
use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// A formula or recurrence when one exists, brute force otherwise.
    Auto,
    Brute,
    Formula,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Comma-separated values on one line.
    List,
    /// `n value` lines.
    Bfile,
}

/// What a `--family` argument names.
#[derive(Debug, Clone)]
pub enum Target {
    Poset(FamilyId),
    /// `av<pattern>`, e.g. `av12-34`, `av[3-12`, `avfishburn`.
    Avoiders(VincularPattern),
    IntervalOrders,
}

impl Target {
    pub fn parse(s: &str) -> Result<Self> {
        if s == "interval-orders" {
            return Ok(Target::IntervalOrders);
        }
        if let Some(p) = s.strip_prefix("av") {
            return VincularPattern::parse(p)
                .map(Target::Avoiders)
                .map_err(|e| CliError::Usage(e.to_string()));
        }
        s.parse::<FamilyId>().map(Target::Poset).map_err(|_| {
            let names: Vec<&str> = FamilyId::ALL.iter().map(|f| f.name()).collect();
            CliError::Usage(format!(
                "unknown family {s:?}; expected one of {}, interval-orders, or av<pattern>",
                names.join(", ")
            ))
        })
    }

    fn name(&self) -> String {
        match self {
            Target::Poset(f) => f.name().to_string(),
            Target::Avoiders(p) => format!("av{p}"),
            Target::IntervalOrders => "interval-orders".to_string(),
        }
    }
}

fn poset_guard(e: EnumerateError) -> CliError {
    CliError::Guard(format!(
        "{e}; raise poset_limit in the config file to allow it"
    ))
}

fn counting_guard(e: CountingError) -> CliError {
    CliError::Guard(e.to_string())
}

fn brute_avoiders(
    p: &VincularPattern,
    min: usize,
    max: usize,
    config: &Config,
) -> Result<Vec<u64>> {
    (min..=max)
        .map(|n| {
            brute_force_avoider_count_with_limit(p, n, config.permutation_limit).map_err(|e| {
                CliError::Guard(format!(
                    "{e}; raise permutation_limit in the config file to allow it"
                ))
            })
        })
        .collect()
}

/// Counts for `n ∈ [min, max]`.
pub fn count(
    target: &Target,
    min: usize,
    max: usize,
    method: Method,
    config: &Config,
) -> Result<CountSeries> {
    let formula = || -> Result<Option<CountSeries>> {
        let full = match target {
            Target::Poset(FamilyId::Nl3Free | FamilyId::StanleyGraph) => {
                q_stirling_table(max).row_sums()
            }
            Target::Poset(FamilyId::Nl3FreeNoIso) => series_from_gf(GfId::ThreeFreeNoIsolated, max),
            Target::Poset(FamilyId::Nl3And22Free) => tree_counts(max, config)?,
            Target::Avoiders(p) if p.text() == "12-34" => tree_counts(max, config)?,
            Target::IntervalOrders => series_from_gf(GfId::IntervalOrders, max),
            _ => return Ok(None),
        };
        Ok(Some(CountSeries::new(
            target.name(),
            min,
            full.terms[min..].to_vec(),
        )))
    };
    let brute = || -> Result<CountSeries> {
        let terms = match target {
            Target::Poset(f) => (min..=max)
                .map(|n| count_family_with_limit(*f, n, config.poset_limit).map_err(poset_guard))
                .collect::<Result<Vec<u64>>>()?,
            Target::Avoiders(p) => brute_avoiders(p, min, max, config)?,
            Target::IntervalOrders => {
                brute_avoiders(&VincularPattern::fishburn(), min, max, config)?
            }
        };
        Ok(CountSeries::from_u64(target.name(), min, &terms))
    };
    match method {
        Method::Brute => brute(),
        Method::Formula => formula()?.ok_or_else(|| {
            CliError::Usage(format!(
                "no formula is implemented for {}; use --method brute",
                target.name()
            ))
        }),
        Method::Auto => match formula()? {
            Some(s) => Ok(s),
            None => brute(),
        },
    }
}

fn tree_counts(max: usize, config: &Config) -> Result<CountSeries> {
    generating_tree_counts_with(max, config.memory_budget, |_| {}).map_err(counting_guard)
}

pub fn format_series(s: &CountSeries, format: Format) -> String {
    match format {
        Format::List => {
            let terms: Vec<String> = s.terms.iter().map(|t| t.to_string()).collect();
            format!("{}\n", terms.join(","))
        }
        Format::Bfile => s.to_bfile(),
    }
}

/// `n: c_0,c_1,...,c_n` lines, `c_k` counting members with `k` minimal elements.
pub fn count_by_minima(
    target: &Target,
    min: usize,
    max: usize,
    method: Method,
    config: &Config,
) -> Result<String> {
    let Target::Poset(f) = target else {
        return Err(CliError::Usage(
            "--by-minima applies to poset families only".into(),
        ));
    };
    let table = match (f, method) {
        (FamilyId::Nl3Free | FamilyId::StanleyGraph, Method::Auto | Method::Formula) => {
            Some(q_stirling_table(max))
        }
        (FamilyId::Nl3FreeNoIso, Method::Auto | Method::Formula) => {
            minima_table_from_gf(GfId::ThreeFreeNoIsolated, max)
        }
        (_, Method::Formula) => {
            return Err(CliError::Usage(format!(
                "no formula is implemented for {f} by minima; use --method brute"
            )))
        }
        _ => None,
    };
    let mut out = String::new();
    for n in min..=max {
        let row: Vec<String> = match &table {
            Some(t) => t.row(n).iter().map(|c| c.to_string()).collect(),
            None => count_family_by_minima(*f, n, config.poset_limit)
                .map_err(poset_guard)?
                .iter()
                .map(|c| c.to_string())
                .collect(),
        };
        writeln!(out, "{n}: {}", row.join(",")).unwrap();
    }
    Ok(out)
}

/// Every object of size `n ∈ [min, max]`, one per line, each size introduced
/// by a `#` line with its count.
pub fn enumerate(
    target: &Target,
    min: usize,
    max: usize,
    by_minima: bool,
    config: &Config,
) -> Result<String> {
    let mut out = String::new();
    for n in min..=max {
        match target {
            Target::Poset(f) => {
                let all: Vec<_> = enumerate_family_with_limit(*f, n, config.poset_limit).map_err(poset_guard)?.collect();
                if by_minima {
                    for k in 0..=n {
                        let group: Vec<_> = all.iter().filter(|p| p.minima().count_ones() as usize == k).collect();
                        writeln!(out, "# n = {n}, {k} minima: {}", group.len()).unwrap();
                        for p in group {
                            writeln!(out, "{p}").unwrap();
                        }
                    }
                } else {
                    writeln!(out, "# n = {n}: {}", all.len()).unwrap();
                    for p in &all {
                        writeln!(out, "{p}").unwrap();
                    }
                }
            }
            Target::Avoiders(pat) => {
                if by_minima {
                    return Err(CliError::Usage("--by-minima applies to poset families only".into()));
                }
                if n > config.permutation_limit {
                    return Err(CliError::Guard(format!(
                        "n = {n} exceeds the permutation limit of {}",
                        config.permutation_limit
                    )));
                }
                let mut lines = Vec::new();
                for_each_permutation(n, |v| {
                    if !pat.is_contained_in(v) {
                        lines.push(Permutation::new(v.to_vec()).unwrap().to_text());
                    }
                });
                writeln!(out, "# n = {n}: {}", lines.len()).unwrap();
                for l in lines {
                    writeln!(out, "{l}").unwrap();
                }
            }
            Target::IntervalOrders => {
                return Err(CliError::Usage(
                    "interval-orders is counted from its generating function; enumerate avfishburn instead".into(),
                ))
            }
        }
    }
    Ok(out)
}

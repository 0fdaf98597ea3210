//! `analyze`: ratio tables and fits on a b-file of counts.

use clap::ValueEnum;
use nlposets::analysis::{
    direct_fit, estimate_table, ols_fit, ratio_table, ratio_transforms, ratios, AnalysisError,
    Gamma, LogSeries, Table, LOG4_INV,
};
use nlposets::bfile::{entries_to_count_series, parse_entries};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// `r_n = a(n+1)/a(n)` with `a(n) = count(n)/n!`.
    Ratios,
    /// Plot columns for the ratio method.
    Transforms,
    /// Exact three-point solves at every admissible `n`.
    Directfit,
    /// One least-squares fit over `--range`.
    Olsfit,
}

/// Parses a `--gamma` argument.
pub fn parse_gamma(s: &str) -> std::result::Result<Gamma, String> {
    match s {
        "free" => Ok(Gamma::Free),
        "log4inv" => Ok(Gamma::Fixed(LOG4_INV)),
        _ => s
            .parse::<f64>()
            .ok()
            .filter(|g| *g > 0.0 && g.is_finite())
            .map(Gamma::Fixed)
            .ok_or_else(|| format!("expected a positive number, log4inv or free, got {s:?}")),
    }
}

/// Parses `A..B` (inclusive).
pub fn parse_range(s: &str) -> std::result::Result<(usize, usize), String> {
    let bad = || format!("expected A..B with A ≤ B, got {s:?}");
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

#[derive(Debug, Clone)]
pub struct Request {
    pub kind: Kind,
    pub gamma: Gamma,
    pub alpha: f64,
    pub range: Option<(usize, usize)>,
    pub sep: char,
}

fn failed(e: AnalysisError) -> CliError {
    match e {
        AnalysisError::BadParameter(_) | AnalysisError::BadRange { .. } => {
            CliError::Usage(e.to_string())
        }
        _ => CliError::Failed(e.to_string()),
    }
}

fn fixed(gamma: Gamma, kind: &str) -> Result<f64> {
    match gamma {
        Gamma::Fixed(g) => Ok(g),
        Gamma::Free => Err(CliError::Usage(format!(
            "--gamma free is only available for olsfit, not {kind}"
        ))),
    }
}

/// Runs `req` on the b-file text `terms` and renders the result table.
pub fn run(req: &Request, terms: &str) -> Result<String> {
    let entries = parse_entries(terms).map_err(|e| CliError::Failed(format!("terms file: {e}")))?;
    let counts = entries_to_count_series(&entries, "terms")
        .map_err(|e| CliError::Failed(format!("terms file: {e}")))?;
    let mut logs = LogSeries::from_counts(&counts).map_err(failed)?;
    if let Some((a, b)) = req.range {
        if logs.is_empty() || a < logs.first || b > logs.last() {
            return Err(failed(AnalysisError::BadRange {
                start: a,
                end: b,
                first: logs.first,
                last: logs.last(),
            }));
        }
    }
    let table: Table = match req.kind {
        Kind::Ratios | Kind::Transforms | Kind::Directfit => {
            if let Some((a, b)) = req.range {
                logs = LogSeries {
                    first: a,
                    values: logs.values[a - logs.first..=b - logs.first].to_vec(),
                };
            }
            match req.kind {
                Kind::Ratios => ratio_table(&ratios(&logs).map_err(failed)?),
                Kind::Transforms => ratio_transforms(
                    &ratios(&logs).map_err(failed)?,
                    fixed(req.gamma, "transforms")?,
                    req.alpha,
                )
                .map_err(failed)?,
                _ => {
                    let g = fixed(req.gamma, "directfit")?;
                    let fits = direct_fit(&logs, g).map_err(failed)?;
                    estimate_table(&format!("direct three-point fits, gamma = {g}"), &fits)
                }
            }
        }
        Kind::Olsfit => {
            let (a, b) = req.range.unwrap_or((logs.first.max(1), logs.last()));
            let fit = ols_fit(&logs, a, b, req.gamma).map_err(failed)?;
            let how = match req.gamma {
                Gamma::Free => "gamma free".to_string(),
                Gamma::Fixed(g) => format!("gamma = {g}"),
            };
            estimate_table(&format!("least-squares fit over {a}..{b}, {how}"), &[fit])
        }
    };
    Ok(table.to_delimited(req.sep))
}

//! `oeis fetch` and `oeis compare`, with an on-disk b-file cache.

use std::path::{Path, PathBuf};

use nlposets::bfile::{compare, ANumber, BFile, CompareReport, Source};
use nlposets::counting::gentree::generating_tree_counts_with;
use nlposets::counting::{q_stirling_table, series_from_gf, CountSeries, GfId};
use nlposets::enumerate::count_family_with_limit;
use nlposets::FamilyId;

use crate::config::Config;
use crate::error::{CliError, Result};

const BASE_URL: &str = "https://oeis.org";

/// The sequences with a built-in local counterpart.
pub const KNOWN: [&str; 6] = [
    "A006455", "A135922", "A139382", "A323842", "A113226", "A022493",
];

/// Rejects ids without a local series.
pub fn check_known(id: &ANumber) -> Result<()> {
    if KNOWN.contains(&id.as_str()) {
        Ok(())
    } else {
        Err(CliError::Usage(format!(
            "no local series for {id}; compare supports {}",
            KNOWN.join(", ")
        )))
    }
}

/// Where the b-file for `id` lives inside `cache`.
pub fn cache_path(cache: &Path, id: &ANumber) -> PathBuf {
    cache.join(id.bfile_name())
}

/// The cached b-file for `id`, fetched once and stored verbatim on a miss.
pub fn fetch(id: &ANumber, cache: &Path, offline: bool) -> Result<BFile> {
    let path = cache_path(cache, id);
    if path.is_file() {
        let text = std::fs::read_to_string(&path).map_err(CliError::io(&path))?;
        return parse(id, &text, Source::Cache, &path);
    }
    if offline {
        return Err(CliError::Network(format!(
            "{} is not cached in {} and --offline forbids fetching it",
            id,
            cache.display()
        )));
    }
    let url = format!("{BASE_URL}/{id}/{}", id.bfile_name());
    let text = ureq::get(&url)
        .call()
        .and_then(|mut r| r.body_mut().read_to_string())
        .map_err(|e| CliError::Network(format!("fetching {url}: {e}")))?;
    let bfile = parse(id, &text, Source::Remote, &path)?;
    std::fs::create_dir_all(cache).map_err(CliError::io(cache))?;
    std::fs::write(&path, &text).map_err(CliError::io(&path))?;
    Ok(bfile)
}

fn parse(id: &ANumber, text: &str, source: Source, path: &Path) -> Result<BFile> {
    BFile::parse(id.clone(), text, source)
        .map_err(|e| CliError::Failed(format!("{}: {e}", path.display())))
}

fn guard(e: impl std::fmt::Display) -> CliError {
    CliError::Guard(e.to_string())
}

/// The locally computed terms of `id` up to size `max_n`, indexed as in the
/// b-file before any shift.
pub fn local_series(id: &ANumber, max_n: usize, config: &Config) -> Result<CountSeries> {
    let s = match id.as_str() {
        "A006455" => {
            if max_n > config.poset_limit {
                return Err(guard(format!(
                    "A006455 is checked by exhaustive enumeration; n = {max_n} exceeds the poset limit of {}",
                    config.poset_limit
                )));
            }
            let terms = (0..=max_n)
                .map(|n| {
                    count_family_with_limit(FamilyId::Nl, n, config.poset_limit).map_err(guard)
                })
                .collect::<Result<Vec<u64>>>()?;
            CountSeries::from_u64("nl", 0, &terms)
        }
        "A135922" => q_stirling_table(max_n).row_sums(),
        "A139382" => {
            let table = q_stirling_table(max_n);
            let terms = (1..=max_n)
                .flat_map(|n| table.row(n)[1..].to_vec())
                .collect();
            CountSeries::new("nl-3free by minima", 1, terms)
        }
        "A323842" => series_from_gf(GfId::ThreeFreeNoIsolated, max_n),
        "A113226" => {
            generating_tree_counts_with(max_n, config.memory_budget, |_| {}).map_err(guard)?
        }
        "A022493" => series_from_gf(GfId::IntervalOrders, max_n),
        _ => {
            check_known(id)?;
            unreachable!("every known id has a series")
        }
    };
    Ok(s)
}

/// Default size for a comparison: enough to cover the b-file, within limits.
pub fn default_max_n(id: &ANumber, bfile: &BFile, shift: i64, config: &Config) -> usize {
    let last = bfile
        .entries
        .last()
        .map_or(0, |e| (e.0 - shift).max(0) as usize);
    match id.as_str() {
        "A006455" => last.min(config.poset_limit),
        // Row n of the flattened triangle ends at index n(n+1)/2.
        "A139382" => (1..).find(|n| n * (n + 1) / 2 >= last).unwrap_or(1),
        _ => last,
    }
}

pub fn compare_with(
    id: &ANumber,
    bfile: &BFile,
    max_n: usize,
    shift: i64,
    config: &Config,
) -> Result<CompareReport> {
    let local = local_series(id, max_n, config)?;
    compare(&local, bfile, shift).map_err(|e| CliError::Failed(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id(s: &str) -> ANumber {
        s.parse().unwrap()
    }

    #[test]
    fn offline_cold_cache_is_a_network_error() {
        let dir = std::env::temp_dir().join("nlposets-empty-cache-test");
        let e = fetch(&id("A113226"), &dir, true).unwrap_err();
        assert_eq!(e.exit_code(), 4);
    }

    #[test]
    fn flattened_triangle_layout() {
        let s = local_series(&id("A139382"), 3, &Config::default()).unwrap();
        let terms: Vec<String> = s.terms.iter().map(|t| t.to_string()).collect();
        assert_eq!(s.offset, 1);
        assert_eq!(terms, ["1", "1", "1", "1", "4", "1"]);
    }

    #[test]
    fn unknown_ids_are_usage_errors() {
        assert_eq!(
            local_series(&id("A000045"), 5, &Config::default())
                .unwrap_err()
                .exit_code(),
            2
        );
    }

    #[test]
    fn poset_limit_guards_a006455() {
        let e = local_series(&id("A006455"), 20, &Config::default()).unwrap_err();
        assert_eq!(e.exit_code(), 3);
    }
}

//! Optional `key = value` configuration file.

use std::path::{Path, PathBuf};

use nlposets::counting::brute::PERMUTATION_LIMIT;
use nlposets::counting::gentree::DEFAULT_MEMORY_BUDGET;
use nlposets::BRUTE_FORCE_LIMIT;

use crate::error::{CliError, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    /// Largest `n` for exhaustive poset enumeration.
    pub poset_limit: usize,
    /// Largest length for exhaustive permutation scans.
    pub permutation_limit: usize,
    /// Largest size for the exhaustive matrix scan of `verify`.
    pub matrix_limit: usize,
    /// Bytes the generating-tree tables may use.
    pub memory_budget: u64,
    pub cache_dir: PathBuf,
    /// Directory that relative `--out` paths are resolved against.
    pub output_dir: Option<PathBuf>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            poset_limit: BRUTE_FORCE_LIMIT,
            permutation_limit: PERMUTATION_LIMIT,
            matrix_limit: 7,
            memory_budget: DEFAULT_MEMORY_BUDGET,
            cache_dir: PathBuf::from("oeis-cache"),
            output_dir: None,
        }
    }
}

impl Config {
    pub fn load(path: Option<&Path>) -> Result<Self> {
        match path {
            None => Ok(Config::default()),
            Some(p) => {
                let text = std::fs::read_to_string(p).map_err(CliError::io(p))?;
                Config::parse(&text).map_err(|e| CliError::Usage(format!("{}: {e}", p.display())))
            }
        }
    }

    pub fn parse(text: &str) -> std::result::Result<Self, String> {
        let mut c = Config::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or(format!("line {}: expected key = value", i + 1))?;
            let (key, value) = (key.trim(), value.trim());
            let number = |v: &str| {
                v.parse::<u64>()
                    .map_err(|_| format!("line {}: {key} needs an integer", i + 1))
            };
            match key {
                "poset_limit" => c.poset_limit = number(value)? as usize,
                "permutation_limit" => c.permutation_limit = number(value)? as usize,
                "matrix_limit" => c.matrix_limit = number(value)? as usize,
                "memory_budget" => c.memory_budget = number(value)?,
                "cache_dir" => c.cache_dir = PathBuf::from(value),
                "output_dir" => c.output_dir = Some(PathBuf::from(value)),
                _ => return Err(format!("line {}: unknown key {key:?}", i + 1)),
            }
        }
        Ok(c)
    }

    pub fn output_path(&self, out: &Path) -> PathBuf {
        match &self.output_dir {
            Some(dir) if out.is_relative() => dir.join(out),
            _ => out.to_path_buf(),
        }
    }
}

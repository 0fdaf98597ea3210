//! OEIS b-files: `#` comment lines followed by `index value` lines.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::counting::CountSeries;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BFileError {
    #[error("{0:?} is not an A-number (expected A followed by six digits)")]
    BadId(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: index {index} does not exceed the previous index")]
    NotIncreasing { line: usize, index: i64 },
    #[error("index {index} is not followed by {next}; a count series needs consecutive indices")]
    NotConsecutive { index: i64, next: i64 },
    #[error("value at index {index} is negative")]
    Negative { index: i64 },
    #[error("no common indices after shifting by {shift}")]
    EmptyOverlap { shift: i64 },
}

/// A validated OEIS identifier such as `A113226`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ANumber(String);

impl ANumber {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// The b-file name OEIS publishes, e.g. `b113226.txt`.
    pub fn bfile_name(&self) -> String {
        format!("b{}.txt", &self.0[1..])
    }
}

impl FromStr for ANumber {
    type Err = BFileError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let digits = t
            .strip_prefix(['A', 'a'])
            .ok_or_else(|| BFileError::BadId(s.to_string()))?;
        if digits.len() != 6 || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(BFileError::BadId(s.to_string()));
        }
        Ok(ANumber(format!("A{digits}")))
    }
}

impl fmt::Display for ANumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    Local,
    Cache,
    Remote,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::Local => "local",
            Source::Cache => "cache",
            Source::Remote => "remote",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    pub id: ANumber,
    /// Strictly increasing indices.
    pub entries: Vec<(i64, BigInt)>,
    pub source: Source,
}

impl BFile {
    /// Parses b-file text; see [`parse_entries`].
    pub fn parse(id: ANumber, text: &str, source: Source) -> Result<Self, BFileError> {
        Ok(BFile {
            id,
            entries: parse_entries(text)?,
            source,
        })
    }

    pub fn get(&self, index: i64) -> Option<&BigInt> {
        self.entries
            .binary_search_by_key(&index, |e| e.0)
            .ok()
            .map(|i| &self.entries[i].1)
    }

    pub fn to_count_series(&self, family: &str) -> Result<CountSeries, BFileError> {
        entries_to_count_series(&self.entries, family)
    }

    /// Writes the entries back out in b-file form.
    pub fn to_text(&self) -> String {
        let mut s = format!("# {}\n", self.id);
        for (n, v) in &self.entries {
            s.push_str(&format!("{n} {v}\n"));
        }
        s
    }
}

/// `(index, value)` pairs of b-file text. Blank lines and lines starting with
/// `#` are skipped; anything after the value on a line is ignored.
pub fn parse_entries(text: &str) -> Result<Vec<(i64, BigInt)>, BFileError> {
    let mut entries: Vec<(i64, BigInt)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let mut fields = t.split_whitespace();
        let bad = |msg: &str| BFileError::Parse {
            line,
            msg: format!("{msg} in {t:?}"),
        };
        let index: i64 = fields
            .next()
            .unwrap()
            .parse()
            .map_err(|_| bad("bad index"))?;
        let value: BigInt = fields
            .next()
            .ok_or_else(|| bad("missing value"))?
            .parse()
            .map_err(|_| bad("bad value"))?;
        if entries.last().is_some_and(|&(prev, _)| prev >= index) {
            return Err(BFileError::NotIncreasing { line, index });
        }
        entries.push((index, value));
    }
    Ok(entries)
}

/// Entries as a count series; indices must be consecutive and non-negative,
/// values non-negative.
pub fn entries_to_count_series(
    entries: &[(i64, BigInt)],
    family: &str,
) -> Result<CountSeries, BFileError> {
    let first = entries.first().map_or(0, |e| e.0);
    if first < 0 {
        return Err(BFileError::Negative { index: first });
    }
    let mut terms = Vec::with_capacity(entries.len());
    for (i, (n, v)) in entries.iter().enumerate() {
        if *n != first + i as i64 {
            let index = entries[i - 1].0;
            return Err(BFileError::NotConsecutive {
                index,
                next: index + 1,
            });
        }
        terms.push(v.to_biguint().ok_or(BFileError::Negative { index: *n })?);
    }
    Ok(CountSeries::new(family, first as usize, terms))
}

/// Outcome of [`compare`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompareReport {
    pub shift: i64,
    /// Number of local terms with a counterpart in the b-file.
    pub overlap: usize,
    /// First local index at which the values differ, with both values.
    pub mismatch: Option<(usize, BigInt, BigInt)>,
}

impl CompareReport {
    pub fn agrees(&self) -> bool {
        self.mismatch.is_none()
    }
}

impl fmt::Display for CompareReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.mismatch {
            None => write!(
                f,
                "agree on all {} overlapping terms (shift {})",
                self.overlap, self.shift
            ),
            Some((n, a, b)) => write!(
                f,
                "mismatch at n = {n} (shift {}): computed {a}, b-file {b}",
                self.shift
            ),
        }
    }
}

/// Compares local term `a(n)` with b-file entry `n + shift`.
pub fn compare(
    local: &CountSeries,
    remote: &BFile,
    shift: i64,
) -> Result<CompareReport, BFileError> {
    let mut overlap = 0;
    let mut mismatch = None;
    for (n, a) in local.iter() {
        let Some(b) = remote.get(n as i64 + shift) else {
            continue;
        };
        overlap += 1;
        let a = BigInt::from(a.clone());
        if mismatch.is_none() && &a != b {
            mismatch = Some((n, a, b.clone()));
        }
    }
    if overlap == 0 {
        return Err(BFileError::EmptyOverlap { shift });
    }
    Ok(CompareReport {
        shift,
        overlap,
        mismatch,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id() -> ANumber {
        "A113226".parse().unwrap()
    }

    #[test]
    fn ids() {
        assert_eq!(id().as_str(), "A113226");
        assert_eq!(id().bfile_name(), "b113226.txt");
        assert_eq!("a000001".parse::<ANumber>().unwrap().as_str(), "A000001");
        for bad in ["A12345", "B113226", "A1132260", "A11322x"] {
            assert!(bad.parse::<ANumber>().is_err(), "{bad}");
        }
    }

    #[test]
    fn parses_entries_and_skips_comments() {
        let b = BFile::parse(
            id(),
            "# header\n\n0 1\n5 107\n6 585 trailing\n",
            Source::Local,
        )
        .unwrap();
        assert_eq!(b.entries.len(), 3);
        assert_eq!(b.get(5), Some(&BigInt::from(107)));
        assert_eq!(b.get(4), None);
    }

    #[test]
    fn parse_errors_name_lines() {
        let e = BFile::parse(id(), "# c\n1 1\n2 x\n", Source::Local).unwrap_err();
        assert!(matches!(e, BFileError::Parse { line: 3, .. }), "{e}");
        let e = BFile::parse(id(), "1 1\n1 2\n", Source::Local).unwrap_err();
        assert_eq!(e, BFileError::NotIncreasing { line: 2, index: 1 });
        let e = BFile::parse(id(), "7\n", Source::Local).unwrap_err();
        assert!(matches!(e, BFileError::Parse { line: 1, .. }));
    }

    #[test]
    fn comparison_and_shift() {
        let b = BFile::parse(id(), "0 1\n1 1\n2 2\n3 6\n4 23\n", Source::Local).unwrap();
        let s = CountSeries::from_u64("x", 0, &[1, 1, 2, 6, 23, 107]);
        let r = compare(&s, &b, 0).unwrap();
        assert!(r.agrees());
        assert_eq!(r.overlap, 5);
        let r = compare(&s, &b, -1).unwrap();
        assert_eq!(r.mismatch.as_ref().map(|m| m.0), Some(2));
        assert_eq!(
            compare(&s, &b, 100),
            Err(BFileError::EmptyOverlap { shift: 100 })
        );
    }

    #[test]
    fn count_series_conversion() {
        let b = BFile::parse(id(), "3 6\n4 23\n", Source::Local).unwrap();
        let s = b.to_count_series("x").unwrap();
        assert_eq!((s.offset, s.len()), (3, 2));
        let gap = BFile::parse(id(), "1 1\n3 6\n", Source::Local).unwrap();
        assert_eq!(
            gap.to_count_series("x"),
            Err(BFileError::NotConsecutive { index: 1, next: 2 })
        );
        let neg = BFile::parse(id(), "0 -1\n", Source::Local).unwrap();
        assert_eq!(
            neg.to_count_series("x"),
            Err(BFileError::Negative { index: 0 })
        );
    }
}

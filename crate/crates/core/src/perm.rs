//! Permutations and vincular pattern containment.
//!
//! Pattern text follows the usual dash notation: letters written without a
//! dash between them must be adjacent in the host, a dash (`-`, `--` or an en
//! dash) allows a gap, and a leading `[` pins the first letter to the first
//! position of the host. `fishburn` names the bivincular pattern
//! `σ(j) + 1 = σ(i) < σ(i+1)` with `i < j`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("not a permutation of [{n}]: {msg}")]
    NotPermutation { n: usize, msg: String },
    #[error("bad token {0:?}")]
    BadToken(String),
}

/// A permutation of `[n]`, stored as its one-line notation with 1-based values.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self, PermError> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n {
                return Err(PermError::NotPermutation {
                    n,
                    msg: format!("value {v} out of range"),
                });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(PermError::NotPermutation {
                    n,
                    msg: format!("value {v} repeated"),
                });
            }
        }
        Ok(Permutation(values))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn into_values(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Space-separated values, or contiguous digits when `n ≤ 9`.
    pub fn to_text(&self) -> String {
        if self.len() <= 9 {
            self.0.iter().map(|v| v.to_string()).collect()
        } else {
            self.0
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({})", self.to_text())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let values: Vec<usize> = if s.contains(char::is_whitespace) || s.contains(',') {
            s.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| PermError::BadToken(t.to_string())))
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| PermError::BadToken(c.to_string()))
                })
                .collect::<Result<_, _>>()?
        };
        Permutation::new(values)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("pattern {text:?}, position {pos}: {msg}")]
pub struct PatternParseError {
    pub text: String,
    /// 0-based character position of the offending character.
    pub pos: usize,
    pub msg: String,
}

/// A vincular pattern, optionally with a prefix anchor and value-adjacency
/// requirements.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VincularPattern {
    text: String,
    /// Pattern letters, a permutation of `[m]`.
    letters: Vec<usize>,
    /// `adjacent[t]`: letters `t` and `t+1` must sit in adjacent host positions.
    adjacent: Vec<bool>,
    anchored: bool,
    /// Letter values `a` such that host values for `a` and `a+1` must differ by one.
    consecutive_values: Vec<usize>,
}

impl VincularPattern {
    pub fn parse(text: &str) -> Result<Self, PatternParseError> {
        if text.trim().eq_ignore_ascii_case("fishburn") {
            return Ok(Self::fishburn());
        }
        let err = |pos: usize, msg: &str| PatternParseError {
            text: text.to_string(),
            pos,
            msg: msg.to_string(),
        };
        let chars: Vec<char> = text.chars().collect();
        let mut i = 0;
        let anchored = chars.first() == Some(&'[');
        if anchored {
            i = 1;
        }
        let mut letters = Vec::new();
        let mut adjacent = Vec::new();
        let mut pending_gap: Option<usize> = None;
        while i < chars.len() {
            let c = chars[i];
            if let Some(d) = c.to_digit(10) {
                if d == 0 {
                    return Err(err(i, "pattern letters are 1-based"));
                }
                if !letters.is_empty() {
                    adjacent.push(pending_gap.is_none());
                }
                pending_gap = None;
                letters.push(d as usize);
                i += 1;
            } else if c == '-' || c == '\u{2013}' {
                if letters.is_empty() {
                    return Err(err(i, "dash before the first letter"));
                }
                match pending_gap {
                    None => pending_gap = Some(1),
                    Some(1) if c == '-' && chars[i - 1] == '-' => pending_gap = Some(2),
                    Some(_) => return Err(err(i, "too many dashes")),
                }
                i += 1;
            } else {
                return Err(err(i, "unexpected character"));
            }
        }
        if letters.is_empty() {
            return Err(err(chars.len(), "empty pattern"));
        }
        if pending_gap.is_some() {
            return Err(err(chars.len() - 1, "trailing dash"));
        }
        let m = letters.len();
        let mut seen = vec![false; m + 1];
        for (k, &v) in letters.iter().enumerate() {
            if v > m || std::mem::replace(&mut seen[v], true) {
                // Position of the k-th digit in the text.
                let pos = chars
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| c.is_ascii_digit())
                    .nth(k)
                    .map_or(0, |(p, _)| p);
                return Err(err(pos, "letters must form a permutation of 1..m"));
            }
        }
        Ok(VincularPattern {
            text: text.to_string(),
            letters,
            adjacent,
            anchored,
            consecutive_values: Vec::new(),
        })
    }

    /// The bivincular Fishburn pattern: `i < j` with `σ(j) + 1 = σ(i) < σ(i+1)`.
    pub fn fishburn() -> Self {
        VincularPattern {
            text: "fishburn".to_string(),
            letters: vec![2, 3, 1],
            adjacent: vec![true, false],
            anchored: false,
            consecutive_values: vec![1],
        }
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_anchored(&self) -> bool {
        self.anchored
    }

    /// Calls `f` with each occurrence (0-based host positions) until it
    /// returns `false`. Returns whether the search was stopped early.
    fn search(&self, host: &[usize], f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let mut pos = Vec::with_capacity(self.len());
        self.extend(host, &mut pos, f)
    }

    fn extend(
        &self,
        host: &[usize],
        pos: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let t = pos.len();
        if t == self.letters.len() {
            let ok = self.consecutive_values.iter().all(|&a| {
                let lo = self.letters.iter().position(|&l| l == a).unwrap();
                let hi = self.letters.iter().position(|&l| l == a + 1).unwrap();
                host[pos[hi]] == host[pos[lo]] + 1
            });
            return ok && !f(pos);
        }
        let remaining = self.letters.len() - t;
        let range = if t == 0 {
            if self.anchored {
                0..1.min(host.len())
            } else {
                0..(host.len() + 1).saturating_sub(remaining)
            }
        } else if self.adjacent[t - 1] {
            let p = pos[t - 1] + 1;
            p..(p + 1).min(host.len())
        } else {
            pos[t - 1] + 1..(host.len() + 1).saturating_sub(remaining)
        };
        for p in range {
            let v = host[p];
            let consistent = pos
                .iter()
                .enumerate()
                .all(|(s, &q)| (host[q] < v) == (self.letters[s] < self.letters[t]));
            if consistent {
                pos.push(p);
                if self.extend(host, pos, f) {
                    return true;
                }
                pos.pop();
            }
        }
        false
    }

    pub fn is_contained_in(&self, host: &[usize]) -> bool {
        self.search(host, &mut |_| false)
    }

    /// All occurrences as 0-based host position tuples, in lexicographic order.
    pub fn occurrences(&self, host: &[usize]) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        self.search(host, &mut |p| {
            out.push(p.to_vec());
            true
        });
        out
    }
}

impl fmt::Display for VincularPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

impl FromStr for VincularPattern {
    type Err = PatternParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        VincularPattern::parse(s)
    }
}

pub fn contains_pattern(p: &Permutation, pat: &VincularPattern) -> bool {
    pat.is_contained_in(p.values())
}

/// Visits every permutation of `[n]` in lexicographic order.
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut a: Vec<usize> = (1..=n).collect();
    loop {
        f(&a);
        // Next permutation in lexicographic order.
        let Some(i) = (1..n).rev().find(|&i| a[i - 1] < a[i]) else {
            return;
        };
        let j = (i..n).rev().find(|&j| a[j] > a[i - 1]).unwrap();
        a.swap(i - 1, j);
        a[i..].reverse();
    }
}

/// Maximal runs as `(start, end)` inclusive position pairs; `ascending` selects
/// ascending or descending runs. A single point is a run of either kind.
pub fn runs(values: &[usize], ascending: bool) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut start = 0;
    for i in 1..=values.len() {
        let continues = i < values.len() && ((values[i - 1] < values[i]) == ascending);
        if !continues {
            if !values.is_empty() {
                out.push((start, i - 1));
            }
            start = i;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn pat(s: &str) -> VincularPattern {
        s.parse().unwrap()
    }

    #[test]
    fn single_43_12_occurrence() {
        let p = perm("947863152");
        let occ = pat("43-12").occurrences(p.values());
        assert_eq!(occ.len(), 1);
        let vals: Vec<usize> = occ[0].iter().map(|&i| p.values()[i]).collect();
        assert_eq!(vals, vec![8, 6, 1, 5]);
    }

    #[test]
    fn anchored_3_12_occurrences() {
        let p = perm("947863152");
        let occ = pat("[3-12").occurrences(p.values());
        let vals: Vec<Vec<usize>> = occ
            .iter()
            .map(|o| o.iter().map(|&i| p.values()[i]).collect())
            .collect();
        assert_eq!(vals, vec![vec![9, 4, 7], vec![9, 7, 8], vec![9, 1, 5]]);
        // Without the anchor, 8 also starts occurrences.
        assert!(pat("3-12").occurrences(p.values()).len() > 2);
    }

    #[test]
    fn decreasing_avoids_12_34() {
        assert!(!contains_pattern(&perm("4321"), &pat("12-34")));
        assert!(contains_pattern(&perm("1234"), &pat("12-34")));
        assert!(!contains_pattern(&perm("1324"), &pat("12-34")));
        assert!(contains_pattern(&perm("12534"), &pat("12--34")));
    }

    #[test]
    fn parse_errors_name_position() {
        let e = VincularPattern::parse("12-3x").unwrap_err();
        assert_eq!(e.pos, 4);
        assert_eq!(VincularPattern::parse("12-").unwrap_err().pos, 2);
        assert_eq!(VincularPattern::parse("-12").unwrap_err().pos, 0);
        assert_eq!(VincularPattern::parse("12---3").unwrap_err().pos, 4);
        assert_eq!(VincularPattern::parse("13-4").unwrap_err().pos, 3);
        assert!(VincularPattern::parse("43–12").is_ok());
    }

    #[test]
    fn fishburn_pattern() {
        let f = VincularPattern::fishburn();
        // 231 itself: σ(3)+1 = 2 = σ(1) < σ(2).
        assert!(contains_pattern(&perm("231"), &f));
        // 2413: 2 < 4 adjacent, then 1 with 1 + 1 = 2.
        assert!(contains_pattern(&perm("2413"), &f));
        // 3412: 3 < 4 adjacent, then 2.
        assert!(contains_pattern(&perm("3412"), &f));
        assert!(!contains_pattern(&perm("3142"), &f));
    }

    #[test]
    fn permutation_iteration() {
        let mut all = Vec::new();
        for_each_permutation(3, |p| all.push(p.to_vec()));
        assert_eq!(
            all,
            vec![
                vec![1, 2, 3],
                vec![1, 3, 2],
                vec![2, 1, 3],
                vec![2, 3, 1],
                vec![3, 1, 2],
                vec![3, 2, 1]
            ]
        );
        let mut count = 0;
        for_each_permutation(0, |_| count += 1);
        assert_eq!(count, 1);
    }

    #[test]
    fn permutation_text() {
        assert_eq!(perm("3 1 2"), perm("312"));
        assert!("112".parse::<Permutation>().is_err());
        let long = Permutation::new((1..=10).rev().collect()).unwrap();
        assert_eq!(long.to_text(), "10 9 8 7 6 5 4 3 2 1");
        assert_eq!(long.to_text().parse::<Permutation>().unwrap(), long);
    }

    #[test]
    fn run_decomposition() {
        assert_eq!(
            runs(&[3, 1, 4, 10, 19, 2], true),
            vec![(0, 0), (1, 4), (5, 5)]
        );
        assert_eq!(
            runs(&[3, 1, 4, 10, 19, 2], false),
            vec![(0, 1), (2, 2), (3, 3), (4, 5)]
        );
    }
}

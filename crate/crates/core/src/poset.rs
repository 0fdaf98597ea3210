//! Strict partial orders on `[n]`, incidence matrices and family predicates.
//!
//! Elements are 0-based inside the crate and 1-based in every text format and
//! error message. Relations are stored as one `u64` per row, so `n` is capped
//! at [`MAX_ELEMENTS`].

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Largest ground set a [`Poset`] can hold (one machine word per row).
pub const MAX_ELEMENTS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("ground set of size {0} exceeds the limit of {MAX_ELEMENTS}")]
    TooLarge(usize),
    #[error("element {0} is outside [1, {1}]")]
    OutOfRange(usize, usize),
    #[error("relation is not irreflexive: {0} < {0}")]
    Reflexive(usize),
    #[error("matrix diagonal entry ({0},{0}) is 0")]
    NotUnitDiagonal(usize),
    #[error("relation is not antisymmetric: {0} < {1} and {1} < {0}")]
    NotAntisymmetric(usize, usize),
    #[error("relation is not transitive: {0} < {1} and {1} < {2} but not {0} < {2}")]
    NotTransitive(usize, usize, usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

fn mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn check_size(n: usize) -> Result<(), PosetError> {
    if n > MAX_ELEMENTS {
        return Err(PosetError::TooLarge(n));
    }
    Ok(())
}

/// Iterates over the set bits of a word, lowest first.
pub(crate) fn bits(mut w: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if w == 0 {
            None
        } else {
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(b)
        }
    })
}

/// A strict partial order on `{0, .., n-1}`.
///
/// `succ[i]` has bit `j` set iff `i ≺ j`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poset {
    n: usize,
    succ: Vec<u64>,
}

impl Poset {
    pub fn antichain(n: usize) -> Result<Self, PosetError> {
        check_size(n)?;
        Ok(Poset {
            n,
            succ: vec![0; n],
        })
    }

    pub fn empty() -> Self {
        Poset {
            n: 0,
            succ: Vec::new(),
        }
    }

    /// Builds a poset from strict successor rows, checking every invariant.
    pub fn from_successor_rows(rows: Vec<u64>) -> Result<Self, PosetError> {
        let n = rows.len();
        check_size(n)?;
        let m = mask(n);
        for (i, &r) in rows.iter().enumerate() {
            if r & !m != 0 {
                return Err(PosetError::OutOfRange(64 - r.leading_zeros() as usize, n));
            }
            if r >> i & 1 == 1 {
                return Err(PosetError::Reflexive(i + 1));
            }
        }
        let p = Poset { n, succ: rows };
        p.check_order()?;
        Ok(p)
    }

    /// Builds rows without validation; callers guarantee the invariants.
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        debug_assert!(rows.len() <= MAX_ELEMENTS);
        Poset {
            n: rows.len(),
            succ: rows,
        }
    }

    /// Transitive closure of the given 1-based relations `(a, b)` meaning `a ≺ b`.
    pub fn from_relations(n: usize, relations: &[(usize, usize)]) -> Result<Self, PosetError> {
        check_size(n)?;
        let mut succ = vec![0u64; n];
        for &(a, b) in relations {
            for x in [a, b] {
                if x == 0 || x > n {
                    return Err(PosetError::OutOfRange(x, n));
                }
            }
            if a == b {
                return Err(PosetError::Reflexive(a));
            }
            succ[a - 1] |= 1 << (b - 1);
        }
        // Warshall closure on bit rows.
        for k in 0..n {
            let row_k = succ[k];
            for row in succ.iter_mut() {
                if *row >> k & 1 == 1 {
                    *row |= row_k;
                }
            }
        }
        for (i, r) in succ.iter().enumerate() {
            if r >> i & 1 == 1 {
                let j = bits(*r & !(1 << i))
                    .find(|&j| succ[j] >> i & 1 == 1)
                    .unwrap_or(i);
                return Err(PosetError::NotAntisymmetric(i + 1, j + 1));
            }
        }
        Ok(Poset { n, succ })
    }

    fn check_order(&self) -> Result<(), PosetError> {
        for i in 0..self.n {
            for j in bits(self.succ[i]) {
                if self.succ[j] >> i & 1 == 1 {
                    return Err(PosetError::NotAntisymmetric(i + 1, j + 1));
                }
                let missing = self.succ[j] & !self.succ[i];
                if missing != 0 {
                    let k = missing.trailing_zeros() as usize;
                    return Err(PosetError::NotTransitive(i + 1, j + 1, k + 1));
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// `i ≺ j`, 0-based.
    pub fn precedes(&self, i: usize, j: usize) -> bool {
        self.succ[i] >> j & 1 == 1
    }

    pub fn successor_rows(&self) -> &[u64] {
        &self.succ
    }

    /// Strict upset of `x` as a bitmask.
    pub fn upset(&self, x: usize) -> u64 {
        self.succ[x]
    }

    /// Strict downset `D(x) = {t : t ≺ x}` as a bitmask.
    pub fn downset(&self, x: usize) -> u64 {
        self.succ
            .iter()
            .enumerate()
            .filter(|(_, r)| *r >> x & 1 == 1)
            .fold(0, |acc, (t, _)| acc | 1 << t)
    }

    pub fn downsets(&self) -> Vec<u64> {
        let mut d = vec![0u64; self.n];
        for (i, &r) in self.succ.iter().enumerate() {
            for j in bits(r) {
                d[j] |= 1 << i;
            }
        }
        d
    }

    pub fn minima(&self) -> u64 {
        let d = self.downsets();
        (0..self.n)
            .filter(|&x| d[x] == 0)
            .fold(0, |acc, x| acc | 1 << x)
    }

    pub fn maxima(&self) -> u64 {
        (0..self.n)
            .filter(|&x| self.succ[x] == 0)
            .fold(0, |acc, x| acc | 1 << x)
    }

    /// Elements comparable to nothing.
    pub fn isolated(&self) -> u64 {
        self.minima() & self.maxima()
    }

    /// Cover relations `(a, b)` with `a ⋖ b`, 0-based, sorted by `(b, a)`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let down = self.downsets();
        let mut out = Vec::new();
        for b in 0..self.n {
            for a in bits(down[b]) {
                if self.succ[a] & down[b] == 0 {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn is_naturally_labelled(&self) -> bool {
        // i ≺ j ⇒ i < j: no successor bit at or below the row index.
        self.succ
            .iter()
            .enumerate()
            .all(|(i, &r)| r & mask(i + 1) == 0)
    }

    /// No chain `x ≺ y ≺ z`.
    pub fn is_three_free(&self) -> bool {
        self.three_chain().is_none()
    }

    /// A witness `x ≺ y ≺ z`, 0-based.
    pub fn three_chain(&self) -> Option<(usize, usize, usize)> {
        for x in 0..self.n {
            for y in bits(self.succ[x]) {
                if let Some(z) = bits(self.succ[y]).next() {
                    return Some((x, y, z));
                }
            }
        }
        None
    }

    /// No induced `2+2`.
    pub fn is_two_plus_two_free(&self) -> bool {
        self.two_plus_two().is_none()
    }

    /// A witness `(i, j, k, l)` with `i ≺ j`, `k ≺ l`, and `i, j` each incomparable
    /// to both `k, l`; 0-based, `i < k`.
    pub fn two_plus_two(&self) -> Option<(usize, usize, usize, usize)> {
        let down = self.downsets();
        let comparable: Vec<u64> = (0..self.n)
            .map(|x| self.succ[x] | down[x] | 1 << x)
            .collect();
        for i in 0..self.n {
            for j in bits(self.succ[i]) {
                let free = !(comparable[i] | comparable[j]) & mask(self.n);
                for k in bits(free) {
                    if let Some(l) = bits(self.succ[k] & free).next() {
                        let (a, b, c, d) = if i < k { (i, j, k, l) } else { (k, l, i, j) };
                        return Some((a, b, c, d));
                    }
                }
            }
        }
        None
    }

    pub fn has_isolated(&self) -> bool {
        self.isolated() != 0
    }

    /// Incidence matrix: `bits(i, j) = 1` iff `i ⪯ j`.
    pub fn to_matrix(&self) -> IncidenceMatrix {
        IncidenceMatrix {
            n: self.n,
            rows: self
                .succ
                .iter()
                .enumerate()
                .map(|(i, r)| r | 1 << i)
                .collect(),
        }
    }

    pub fn from_matrix(m: &IncidenceMatrix) -> Result<Self, PosetError> {
        for (i, r) in m.rows.iter().enumerate() {
            if r >> i & 1 == 0 {
                return Err(PosetError::NotUnitDiagonal(i + 1));
            }
        }
        let rows = m
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| r & !(1 << i))
            .collect();
        Poset::from_successor_rows(rows)
    }

    /// `n; a<b,...` listing cover relations, 1-based.
    pub fn to_text(&self) -> String {
        let covers: Vec<String> = self
            .covers()
            .iter()
            .map(|(a, b)| format!("{}<{}", a + 1, b + 1))
            .collect();
        if covers.is_empty() {
            format!("{};", self.n)
        } else {
            format!("{}; {}", self.n, covers.join(","))
        }
    }

    /// Parses one line of the `n; a<b,...` format. Any relations are accepted
    /// and closed transitively.
    pub fn parse_line(line: &str, line_no: usize) -> Result<Self, PosetError> {
        let err = |msg: String| PosetError::Parse { line: line_no, msg };
        let (head, tail) = line
            .split_once(';')
            .ok_or_else(|| err("missing ';' after n".into()))?;
        let n: usize = head
            .trim()
            .parse()
            .map_err(|_| err(format!("bad size {:?}", head.trim())))?;
        let mut rels = Vec::new();
        for tok in tail.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (a, b) = tok
                .split_once('<')
                .ok_or_else(|| err(format!("bad relation {tok:?}")))?;
            let a: usize = a
                .trim()
                .parse()
                .map_err(|_| err(format!("bad element in {tok:?}")))?;
            let b: usize = b
                .trim()
                .parse()
                .map_err(|_| err(format!("bad element in {tok:?}")))?;
            rels.push((a, b));
        }
        Poset::from_relations(n, &rels)
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poset({})", self.to_text())
    }
}

impl fmt::Display for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for Poset {
    type Err = PosetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Poset::parse_line(s, 1)
    }
}

/// Reflexive incidence matrix of a poset; row `i` has bit `j` iff `i ⪯ j`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IncidenceMatrix {
    n: usize,
    rows: Vec<u64>,
}

impl IncidenceMatrix {
    pub fn from_rows(rows: Vec<u64>) -> Result<Self, PosetError> {
        let n = rows.len();
        check_size(n)?;
        if let Some(r) = rows.iter().find(|r| **r & !mask(n) != 0) {
            return Err(PosetError::OutOfRange(64 - r.leading_zeros() as usize, n));
        }
        Ok(IncidenceMatrix { n, rows })
    }

    pub fn identity(n: usize) -> Result<Self, PosetError> {
        Self::from_rows((0..n).map(|i| 1u64 << i).collect())
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Entry `(i, j)`, 0-based.
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, &r)| r & mask(i) == 0)
    }

    /// Row-major bit string, the key for canonical enumeration order.
    pub fn row_major_key(&self) -> Vec<bool> {
        (0..self.n)
            .flat_map(|i| (0..self.n).map(move |j| (i, j)))
            .map(|(i, j)| self.get(i, j))
            .collect()
    }

    /// `n` lines of `0`/`1` characters.
    pub fn to_text(&self) -> String {
        let mut s = String::with_capacity(self.n * (self.n + 1));
        for i in 0..self.n {
            for j in 0..self.n {
                s.push(if self.get(i, j) { '1' } else { '0' });
            }
            s.push('\n');
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self, PosetError> {
        let lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty())
            .collect();
        let n = lines.len();
        check_size(n)?;
        let mut rows = Vec::with_capacity(n);
        for (line, l) in lines {
            if l.chars().count() != n {
                return Err(PosetError::Parse {
                    line,
                    msg: format!("expected {n} columns, found {}", l.chars().count()),
                });
            }
            let mut r = 0u64;
            for (j, c) in l.chars().enumerate() {
                match c {
                    '1' => r |= 1 << j,
                    '0' => {}
                    _ => {
                        return Err(PosetError::Parse {
                            line,
                            msg: format!("unexpected character {c:?}"),
                        })
                    }
                }
            }
            rows.push(r);
        }
        Ok(IncidenceMatrix { n, rows })
    }
}

/// The poset families handled by the enumerators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyId {
    /// Naturally labelled: `i ≺ j ⇒ i < j`.
    Nl,
    /// 3-free naturally labelled.
    Nl3Free,
    /// 3-free naturally labelled without isolated elements.
    Nl3FreeNoIso,
    /// (2+2)-free naturally labelled.
    Nl22Free,
    /// {3, 2+2}-free naturally labelled.
    Nl3And22Free,
    /// Naturally labelled posets whose Hasse diagram is a Stanley graph.
    StanleyGraph,
}

impl FamilyId {
    pub const ALL: [FamilyId; 6] = [
        FamilyId::Nl,
        FamilyId::Nl3Free,
        FamilyId::Nl3FreeNoIso,
        FamilyId::Nl22Free,
        FamilyId::Nl3And22Free,
        FamilyId::StanleyGraph,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::Nl => "nl",
            FamilyId::Nl3Free => "nl-3free",
            FamilyId::Nl3FreeNoIso => "nl-3free-noiso",
            FamilyId::Nl22Free => "nl-22free",
            FamilyId::Nl3And22Free => "nl-3-22free",
            FamilyId::StanleyGraph => "stanley",
        }
    }

    /// Semantic membership test.
    pub fn contains(self, p: &Poset) -> bool {
        if !p.is_naturally_labelled() {
            return false;
        }
        match self {
            FamilyId::Nl => true,
            FamilyId::Nl3Free => p.is_three_free(),
            FamilyId::Nl3FreeNoIso => p.is_three_free() && !p.has_isolated(),
            FamilyId::Nl22Free => p.is_two_plus_two_free(),
            FamilyId::Nl3And22Free => p.is_three_free() && p.is_two_plus_two_free(),
            FamilyId::StanleyGraph => crate::bijections::stanley::hasse_is_stanley(p),
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyId::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown family {s:?}"))
    }
}

pub fn is_in_family(p: &Poset, f: FamilyId) -> bool {
    f.contains(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn nine_point_example() -> Poset {
        "9; 2<4,2<8,5<8,1<8,2<7,5<7,1<7,6<7,2<9,5<9,1<9,6<9"
            .parse()
            .unwrap()
    }

    #[test]
    fn chain_is_not_three_free() {
        let chain = Poset::from_relations(3, &[(1, 2), (2, 3)]).unwrap();
        assert!(chain.precedes(0, 2));
        assert!(!is_in_family(&chain, FamilyId::Nl3Free));
        assert!(is_in_family(&chain, FamilyId::Nl22Free));
        assert_eq!(chain.three_chain(), Some((0, 1, 2)));
    }

    #[test]
    fn two_plus_two_detected() {
        let p = Poset::from_relations(4, &[(1, 3), (2, 4)]).unwrap();
        assert!(!is_in_family(&p, FamilyId::Nl22Free));
        assert_eq!(p.two_plus_two(), Some((0, 2, 1, 3)));
        assert!(is_in_family(&p, FamilyId::Nl3Free));
    }

    #[test]
    fn nine_point_membership() {
        let p = nine_point_example();
        assert!(is_in_family(&p, FamilyId::Nl3And22Free));
        assert!(!is_in_family(&p, FamilyId::Nl3FreeNoIso));
        assert_eq!(p.isolated(), 1 << 2);
    }

    #[test]
    fn matrices_of_small_posets() {
        let anti = Poset::antichain(3).unwrap();
        assert_eq!(anti.to_matrix(), IncidenceMatrix::identity(3).unwrap());
        let chain = Poset::from_relations(3, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(chain.to_matrix().to_text(), "111\n011\n001\n");
    }

    #[test]
    fn nine_point_matrix() {
        let m = nine_point_example().to_matrix();
        let mut expected = vec![vec![false; 9]; 9];
        for (i, row) in expected.iter_mut().enumerate() {
            row[i] = true;
        }
        for (a, b) in [(2, 4), (2, 8), (5, 8), (1, 8)] {
            expected[a - 1][b - 1] = true;
        }
        for x in [2, 5, 1, 6] {
            expected[x - 1][6] = true;
            expected[x - 1][8] = true;
        }
        for i in 0..9 {
            for j in 0..9 {
                assert_eq!(m.get(i, j), expected[i][j], "entry ({}, {})", i + 1, j + 1);
            }
        }
        assert_eq!(Poset::from_matrix(&m).unwrap(), nine_point_example());
    }

    #[test]
    fn from_matrix_names_transitivity_witness() {
        let m = IncidenceMatrix::parse("110\n011\n001\n").unwrap();
        assert_eq!(
            Poset::from_matrix(&m),
            Err(PosetError::NotTransitive(1, 2, 3))
        );
        let m = IncidenceMatrix::parse("10\n00\n").unwrap();
        assert_eq!(Poset::from_matrix(&m), Err(PosetError::NotUnitDiagonal(2)));
    }

    #[test]
    fn text_round_trip() {
        let p = nine_point_example();
        let q: Poset = p.to_text().parse().unwrap();
        assert_eq!(p, q);
        assert_eq!(Poset::empty().to_text(), "0;");
        assert_eq!("0;".parse::<Poset>().unwrap(), Poset::empty());
        assert!(matches!(
            "3; 1<4".parse::<Poset>(),
            Err(PosetError::OutOfRange(4, 3))
        ));
        assert!(matches!(
            "2; 1<2,2<1".parse::<Poset>(),
            Err(PosetError::NotAntisymmetric(..))
        ));
    }

    #[test]
    fn covers_skip_transitive_edges() {
        let chain = Poset::from_relations(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(chain.covers(), vec![(0, 1), (1, 2)]);
    }
}

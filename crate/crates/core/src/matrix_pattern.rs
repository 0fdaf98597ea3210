//! Partial-submatrix patterns with diagonal anchors.
//!
//! A pattern occurs in a host matrix when some increasing choice of rows and
//! increasing choice of columns reproduces every `Zero`/`One` cell, `Blank`
//! cells being unconstrained, and every anchor cell lands on the host's main
//! diagonal.

use crate::poset::IncidenceMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cell {
    Zero,
    One,
    Blank,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MatrixPattern {
    name: &'static str,
    rows: usize,
    cols: usize,
    cells: Vec<Cell>,
    anchors: Vec<(usize, usize)>,
}

/// A pattern occurrence: host row and column indices, 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Occurrence {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl MatrixPattern {
    /// Builds a pattern from rows written with `0`, `1` and `.` (blank); an
    /// upper-case `B` is a `One` anchored on the diagonal.
    pub fn from_rows(name: &'static str, rows: &[&str]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut cells = Vec::with_capacity(nrows * ncols);
        let mut anchors = Vec::new();
        for (r, line) in rows.iter().enumerate() {
            assert_eq!(line.len(), ncols, "ragged pattern {name}");
            for (c, ch) in line.chars().enumerate() {
                cells.push(match ch {
                    '0' => Cell::Zero,
                    '1' => Cell::One,
                    '.' => Cell::Blank,
                    'B' => {
                        anchors.push((r, c));
                        Cell::One
                    }
                    _ => panic!("bad pattern character {ch:?} in {name}"),
                });
            }
        }
        MatrixPattern {
            name,
            rows: nrows,
            cols: ncols,
            cells,
            anchors,
        }
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn cell(&self, r: usize, c: usize) -> Cell {
        self.cells[r * self.cols + c]
    }

    pub fn anchors(&self) -> &[(usize, usize)] {
        &self.anchors
    }

    /// The transitivity obstruction `(1 0 / B 1)`: its absence among
    /// upper-triangular unit-diagonal matrices characterises NL posets.
    pub fn intransitive() -> Self {
        Self::from_rows("T", &["10", "B1"])
    }

    /// `M0 = (1 . / B 1)`: a 3-element chain.
    pub fn m0() -> Self {
        Self::from_rows("M0", &["1.", "B1"])
    }

    pub fn m1() -> Self {
        Self::from_rows("M1", &["100", "B00", ".B1"])
    }

    pub fn m2() -> Self {
        Self::from_rows("M2", &["010", "B01", ".B0"])
    }

    pub fn m3() -> Self {
        Self::from_rows("M3", &["001", "B10", ".B0"])
    }

    /// `[M0, M1, M2, M3]`.
    pub fn three_two_plus_two() -> [Self; 4] {
        [Self::m0(), Self::m1(), Self::m2(), Self::m3()]
    }
}

/// Whether `pat` occurs in `m`.
pub fn matches_pattern(m: &IncidenceMatrix, pat: &MatrixPattern) -> bool {
    find_pattern(m, pat).is_some()
}

/// First occurrence of `pat` in `m` in lexicographic order of (rows, cols).
pub fn find_pattern(m: &IncidenceMatrix, pat: &MatrixPattern) -> Option<Occurrence> {
    let n = m.len();
    if pat.rows > n || pat.cols > n {
        return None;
    }
    let mut rows = Vec::with_capacity(pat.rows);
    search_rows(m, pat, &mut rows)
}

fn search_rows(
    m: &IncidenceMatrix,
    pat: &MatrixPattern,
    rows: &mut Vec<usize>,
) -> Option<Occurrence> {
    let n = m.len();
    if rows.len() == pat.rows {
        let mut fixed = vec![None; pat.cols];
        for &(r, c) in &pat.anchors {
            match fixed[c] {
                Some(x) if x != rows[r] => return None,
                _ => fixed[c] = Some(rows[r]),
            }
        }
        let mut cols = Vec::with_capacity(pat.cols);
        return search_cols(m, pat, rows, &fixed, &mut cols);
    }
    let start = rows.last().map_or(0, |&r| r + 1);
    let remaining = pat.rows - rows.len();
    for r in start..=n - remaining {
        rows.push(r);
        if let Some(occ) = search_rows(m, pat, rows) {
            return Some(occ);
        }
        rows.pop();
    }
    None
}

fn search_cols(
    m: &IncidenceMatrix,
    pat: &MatrixPattern,
    rows: &[usize],
    fixed: &[Option<usize>],
    cols: &mut Vec<usize>,
) -> Option<Occurrence> {
    let n = m.len();
    let c = cols.len();
    if c == pat.cols {
        return Some(Occurrence {
            rows: rows.to_vec(),
            cols: cols.clone(),
        });
    }
    let start = cols.last().map_or(0, |&x| x + 1);
    let candidates: Box<dyn Iterator<Item = usize>> = match fixed[c] {
        Some(x) if x >= start => Box::new(std::iter::once(x)),
        Some(_) => return None,
        None => Box::new(start..=n - (pat.cols - c)),
    };
    for col in candidates {
        let fits = (0..pat.rows).all(|r| match pat.cell(r, c) {
            Cell::Blank => true,
            Cell::One => m.get(rows[r], col),
            Cell::Zero => !m.get(rows[r], col),
        });
        if fits {
            cols.push(col);
            if let Some(occ) = search_cols(m, pat, rows, fixed, cols) {
                return Some(occ);
            }
            cols.pop();
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::Poset;

    #[test]
    fn chain_contains_m0() {
        let m = Poset::from_relations(3, &[(1, 2), (2, 3)])
            .unwrap()
            .to_matrix();
        let occ = find_pattern(&m, &MatrixPattern::m0()).unwrap();
        assert_eq!(
            occ,
            Occurrence {
                rows: vec![0, 1],
                cols: vec![1, 2]
            }
        );
    }

    #[test]
    fn identity_avoids_everything() {
        let m = IncidenceMatrix::identity(6).unwrap();
        for pat in MatrixPattern::three_two_plus_two() {
            assert!(!matches_pattern(&m, &pat), "{}", pat.name());
        }
        assert!(!matches_pattern(&m, &MatrixPattern::intransitive()));
    }

    #[test]
    fn two_plus_two_layouts() {
        // i<j<k<l, i<k<j<l, i<k<l<j in turn.
        let cases = [
            (&[(1, 2), (3, 4)], MatrixPattern::m1()),
            (&[(1, 3), (2, 4)], MatrixPattern::m2()),
            (&[(1, 4), (2, 3)], MatrixPattern::m3()),
        ];
        for (rels, pat) in cases {
            let m = Poset::from_relations(4, rels).unwrap().to_matrix();
            assert!(matches_pattern(&m, &pat), "{rels:?} {}", pat.name());
            let others = MatrixPattern::three_two_plus_two();
            let hits: Vec<_> = others
                .iter()
                .filter(|p| matches_pattern(&m, p))
                .map(|p| p.name())
                .collect();
            assert_eq!(hits, vec![pat.name()]);
        }
    }

    #[test]
    fn pattern_larger_than_host() {
        let m = IncidenceMatrix::identity(2).unwrap();
        assert!(!matches_pattern(&m, &MatrixPattern::m1()));
        assert!(!matches_pattern(
            &IncidenceMatrix::identity(0).unwrap(),
            &MatrixPattern::m0()
        ));
    }

    #[test]
    fn intransitive_witness() {
        let m = IncidenceMatrix::parse("110\n011\n001\n").unwrap();
        let occ = find_pattern(&m, &MatrixPattern::intransitive()).unwrap();
        assert_eq!(
            occ,
            Occurrence {
                rows: vec![0, 1],
                cols: vec![1, 2]
            }
        );
    }
}

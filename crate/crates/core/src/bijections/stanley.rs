//! Stanley graphs: labelled graphs in which no vertex has both a smaller and a
//! larger neighbour. They are exactly the Hasse diagrams of 3-free NL posets.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::BijectionError;
use crate::poset::{FamilyId, Poset, MAX_ELEMENTS};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StanleyGraph {
    n: usize,
    /// Edges `(u, v)` with `u < v`, 0-based.
    edges: BTreeSet<(usize, usize)>,
}

fn bad_vertex(n: usize, edges: &BTreeSet<(usize, usize)>) -> Option<usize> {
    let mut has_left = vec![false; n];
    let mut has_right = vec![false; n];
    for &(u, v) in edges {
        has_right[u] = true;
        has_left[v] = true;
    }
    (0..n).find(|&x| has_left[x] && has_right[x])
}

impl StanleyGraph {
    /// Edges are 1-based unordered pairs.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, BijectionError> {
        if n > MAX_ELEMENTS {
            return Err(crate::poset::PosetError::TooLarge(n).into());
        }
        let mut set = BTreeSet::new();
        for &(a, b) in edges {
            if a == 0 || b == 0 || a > n || b > n || a == b {
                return Err(BijectionError::Parse(format!(
                    "bad edge {a}-{b} on {n} vertices"
                )));
            }
            set.insert((a.min(b) - 1, a.max(b) - 1));
        }
        if let Some(x) = bad_vertex(n, &set) {
            return Err(BijectionError::NotStanley(x + 1));
        }
        Ok(StanleyGraph { n, edges: set })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// 1-based edges `(u, v)`, `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(|&(u, v)| (u + 1, v + 1)).collect()
    }
}

impl fmt::Debug for StanleyGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StanleyGraph({self})")
    }
}

impl fmt::Display for StanleyGraph {
    /// `n; u-v,u-v,...`, 1-based.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .iter()
            .map(|(u, v)| format!("{u}-{v}"))
            .collect();
        if edges.is_empty() {
            write!(f, "{};", self.n)
        } else {
            write!(f, "{}; {}", self.n, edges.join(","))
        }
    }
}

impl FromStr for StanleyGraph {
    type Err = BijectionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |m: &str| BijectionError::Parse(format!("graph {s:?}: {m}"));
        let (head, tail) = s.split_once(';').ok_or_else(|| bad("missing ';'"))?;
        let n = head.trim().parse().map_err(|_| bad("bad vertex count"))?;
        let mut edges = Vec::new();
        for tok in tail.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (a, b) = tok.split_once('-').ok_or_else(|| bad("bad edge"))?;
            edges.push((
                a.trim().parse().map_err(|_| bad("bad edge"))?,
                b.trim().parse().map_err(|_| bad("bad edge"))?,
            ));
        }
        StanleyGraph::new(n, &edges)
    }
}

/// Whether the Hasse diagram of `p` (covers as undirected edges) is a Stanley graph.
pub fn hasse_is_stanley(p: &Poset) -> bool {
    let edges: BTreeSet<(usize, usize)> = p
        .covers()
        .into_iter()
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    bad_vertex(p.len(), &edges).is_none()
}

/// Edge `{u, v}` with `u < v` for each `u ≺ v`; in a 3-free poset every strict
/// relation is a cover.
pub fn stanley_from_poset(p: &Poset) -> Result<StanleyGraph, BijectionError> {
    if !p.is_naturally_labelled() || !p.is_three_free() {
        let witness = match p.three_chain() {
            Some((x, y, z)) => format!("chain {} < {} < {}", x + 1, y + 1, z + 1),
            None => "not naturally labelled".to_string(),
        };
        return Err(BijectionError::NotInFamily {
            family: FamilyId::Nl3Free,
            witness,
        });
    }
    let mut edges = BTreeSet::new();
    for (u, row) in p.successor_rows().iter().enumerate() {
        for v in crate::poset::bits(*row) {
            edges.insert((u, v));
        }
    }
    Ok(StanleyGraph { n: p.len(), edges })
}

pub fn poset_from_stanley(g: &StanleyGraph) -> Result<Poset, BijectionError> {
    if let Some(x) = bad_vertex(g.n, &g.edges) {
        return Err(BijectionError::NotStanley(x + 1));
    }
    let mut succ = vec![0u64; g.n];
    for &(u, v) in &g.edges {
        succ[u] |= 1 << v;
    }
    Ok(Poset::from_successor_rows(succ)?)
}

/// Counts Stanley graphs on `[n]` by scanning every labelled graph.
pub fn count_stanley_graphs_brute_force(n: usize) -> u64 {
    assert!(n <= 8, "2^(n choose 2) graphs");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut count = 0;
    for mask in 0u64..(1u64 << pairs.len()) {
        let mut left = 0u64;
        let mut right = 0u64;
        for (k, &(u, v)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                right |= 1 << u;
                left |= 1 << v;
            }
        }
        if left & right == 0 {
            count += 1;
        }
    }
    count
}

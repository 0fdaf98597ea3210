//! The bijection `Λ: 𝓑 → Av(43-12)` and its inverse.
//!
//! `Λ` removes colours when there is no red-blue ascent. Otherwise, for each
//! red-blue ascent `PQ` it marks `Q` together with the points of the
//! descending run starting at `Q` that lie above `P`, and moves every marked
//! point to the front in increasing order.
//!
//! `Ψ` undoes this on `𝓐₁` (43-12 avoiders containing `[3-12`): each point of
//! the initial ascending run is sent back behind the ascent of the rightmost
//! `3-12` it heads.

use std::sync::OnceLock;

use super::bicoloured::{BicolouredPermutation, Colour};
use super::BijectionError;
use crate::perm::{Permutation, VincularPattern};

fn pattern_43_12() -> &'static VincularPattern {
    static P: OnceLock<VincularPattern> = OnceLock::new();
    P.get_or_init(|| VincularPattern::parse("43-12").unwrap())
}

fn pattern_anchored_3_12() -> &'static VincularPattern {
    static P: OnceLock<VincularPattern> = OnceLock::new();
    P.get_or_init(|| VincularPattern::parse("[3-12").unwrap())
}

/// Output of [`lambda_traced`]: the image and the marked positions (0-based,
/// in the input) grouped by red-blue ascent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaTrace {
    pub image: Permutation,
    pub marked: Vec<Vec<usize>>,
    /// Set when two ascents marked a common point.
    pub overlap: Option<usize>,
}

pub fn lambda(b: &BicolouredPermutation) -> Result<Permutation, BijectionError> {
    lambda_traced(b).map(|t| t.image)
}

pub fn lambda_traced(b: &BicolouredPermutation) -> Result<LambdaTrace, BijectionError> {
    b.validate()?;
    let v = b.values();
    let ascents = b.red_blue_ascents();
    let mut is_marked = vec![false; v.len()];
    let mut overlap = None;
    let mut marked = Vec::with_capacity(ascents.len());
    for &p in &ascents {
        let below = v[p];
        let mut group = vec![p + 1];
        let mut q = p + 1;
        while q + 1 < v.len() && v[q + 1] < v[q] && v[q + 1] > below {
            q += 1;
            group.push(q);
        }
        for &g in &group {
            if std::mem::replace(&mut is_marked[g], true) {
                overlap.get_or_insert(g);
            }
        }
        marked.push(group);
    }
    let mut front: Vec<usize> = (0..v.len())
        .filter(|&i| is_marked[i])
        .map(|i| v[i])
        .collect();
    front.sort_unstable();
    front.extend((0..v.len()).filter(|&i| !is_marked[i]).map(|i| v[i]));
    let image = Permutation::new(front).expect("rearrangement of a permutation");
    Ok(LambdaTrace {
        image,
        marked,
        overlap,
    })
}

fn reject_43_12(s: &Permutation) -> Result<(), BijectionError> {
    if let Some(occ) = pattern_43_12().occurrences(s.values()).into_iter().next() {
        return Err(BijectionError::ContainsPattern {
            pattern: "43-12",
            positions: occ.iter().map(|i| i + 1).collect(),
        });
    }
    Ok(())
}

/// Colours a sequence of values: the first point and every point entered by a
/// descent are blue, points entered by an ascent are red unless `moved`.
fn colour_by_runs(values: &[usize], moved: &[bool]) -> Vec<Colour> {
    (0..values.len())
        .map(|i| {
            if i == 0 || values[i - 1] > values[i] || moved[i] {
                Colour::Blue
            } else {
                Colour::Red
            }
        })
        .collect()
}

/// `Ψ` on `𝓐₁`.
pub fn psi(s: &Permutation) -> Result<BicolouredPermutation, BijectionError> {
    reject_43_12(s)?;
    if !pattern_anchored_3_12().is_contained_in(s.values()) {
        return Err(BijectionError::MissingPattern("[3-12"));
    }
    let v = s.values();
    let n = v.len();
    let run_len = (1..n).find(|&i| v[i - 1] > v[i]).unwrap_or(n);
    // alpha[q]: initial-run points assigned to the ascent at positions (q, q+1).
    let mut alpha: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &p in &v[..run_len] {
        let q = (run_len..n - 1)
            .rev()
            .find(|&q| v[q] < v[q + 1] && v[q + 1] < p)
            .expect("every initial-run point heads a 3-12 when the first point does");
        alpha[q].push(p);
    }
    let mut values = Vec::with_capacity(n);
    let mut moved = Vec::with_capacity(n);
    for i in run_len..n {
        values.push(v[i]);
        moved.push(false);
        if i > 0 {
            let group = &mut alpha[i - 1];
            group.sort_unstable_by(|a, b| b.cmp(a));
            for &p in group.iter() {
                values.push(p);
                moved.push(true);
            }
        }
    }
    let colours = colour_by_runs(&values, &moved);
    BicolouredPermutation::new(
        Permutation::new(values).expect("rearrangement of a permutation"),
        colours,
    )
}

/// Inverse of `Λ` on all of `Av(43-12)`: the run colouring on `𝓐₀`, `Ψ` on `𝓐₁`.
pub fn lambda_full_inverse(s: &Permutation) -> Result<BicolouredPermutation, BijectionError> {
    reject_43_12(s)?;
    if pattern_anchored_3_12().is_contained_in(s.values()) {
        return psi(s);
    }
    let colours = colour_by_runs(s.values(), &vec![false; s.len()]);
    BicolouredPermutation::new(s.clone(), colours)
}

//! Labelled binary words for {3, 2+2}-free naturally labelled posets.
//!
//! The strict downsets of the non-isolated maxima form a chain
//! `D1 ⊊ D2 ⊊ … ⊊ Dk`. With `E1 = D1`, `Ei = Di \ D(i-1)`, `E(k+1)` the
//! isolated elements and `Mi` the maxima whose downset is `Di`, the word is
//! `ε1 μ1 … εk μk ε(k+1)` where each `εi` lists `Ei` as `0`s with decreasing
//! labels and each `μi` lists `Mi` as `1`s with increasing labels.

use std::fmt;
use std::str::FromStr;

use super::BijectionError;
use crate::poset::{bits, FamilyId, Poset};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Zero,
    One,
}

/// A word over `{0, 1}` whose letters carry the labels `1..=n`, each once.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabelledBinaryWord(Vec<(Letter, usize)>);

impl LabelledBinaryWord {
    /// Validates the four word conditions.
    pub fn new(letters: Vec<(Letter, usize)>) -> Result<Self, BijectionError> {
        let w = LabelledBinaryWord(letters);
        w.validate()?;
        Ok(w)
    }

    pub fn letters(&self) -> &[(Letter, usize)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn validate(&self) -> Result<(), BijectionError> {
        let n = self.0.len();
        let mut seen = vec![false; n + 1];
        for &(_, l) in &self.0 {
            if l == 0 || l > n || std::mem::replace(&mut seen[l], true) {
                return Err(BijectionError::LabelsNotPermutation(n));
            }
        }
        if let Some(&(Letter::One, _)) = self.0.first() {
            return Err(BijectionError::WordCondition {
                condition: 1,
                position: 1,
            });
        }
        let mut max_zero = 0;
        for (i, &(letter, label)) in self.0.iter().enumerate() {
            if i > 0 {
                let (prev_letter, prev_label) = self.0[i - 1];
                if prev_letter == letter {
                    if letter == Letter::Zero && prev_label < label {
                        return Err(BijectionError::WordCondition {
                            condition: 2,
                            position: i + 1,
                        });
                    }
                    if letter == Letter::One && prev_label > label {
                        return Err(BijectionError::WordCondition {
                            condition: 3,
                            position: i + 1,
                        });
                    }
                }
            }
            match letter {
                Letter::Zero => max_zero = max_zero.max(label),
                Letter::One if label < max_zero => {
                    return Err(BijectionError::WordCondition {
                        condition: 4,
                        position: i + 1,
                    })
                }
                Letter::One => {}
            }
        }
        Ok(())
    }
}

impl fmt::Display for LabelledBinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let toks: Vec<String> = self
            .0
            .iter()
            .map(|&(l, x)| format!("{}:{}", if l == Letter::Zero { 0 } else { 1 }, x))
            .collect();
        f.write_str(&toks.join(" "))
    }
}

impl FromStr for LabelledBinaryWord {
    type Err = BijectionError;

    /// Space-separated `letter:label` tokens, e.g. `0:2 1:4 0:1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            let bad = || BijectionError::Parse(format!("bad word token {tok:?}"));
            let (l, x) = tok.split_once(':').ok_or_else(bad)?;
            let letter = match l {
                "0" => Letter::Zero,
                "1" => Letter::One,
                _ => return Err(bad()),
            };
            letters.push((letter, x.parse().map_err(|_| bad())?));
        }
        LabelledBinaryWord::new(letters)
    }
}

/// Encodes a {3, 2+2}-free NL poset as its labelled binary word.
pub fn encode_word(p: &Poset) -> Result<LabelledBinaryWord, BijectionError> {
    if !p.is_naturally_labelled() {
        return Err(BijectionError::NotInFamily {
            family: FamilyId::Nl3And22Free,
            witness: "not naturally labelled".into(),
        });
    }
    if let Some((x, y, z)) = p.three_chain() {
        return Err(BijectionError::NotInFamily {
            family: FamilyId::Nl3And22Free,
            witness: format!("chain {} < {} < {}", x + 1, y + 1, z + 1),
        });
    }
    if let Some((i, j, k, l)) = p.two_plus_two() {
        return Err(BijectionError::NotInFamily {
            family: FamilyId::Nl3And22Free,
            witness: format!("induced 2+2: {} < {}, {} < {}", i + 1, j + 1, k + 1, l + 1),
        });
    }
    let down = p.downsets();
    let mut chain: Vec<u64> = down.iter().copied().filter(|&d| d != 0).collect();
    chain.sort_by_key(|d| d.count_ones());
    chain.dedup();
    let mut letters = Vec::with_capacity(p.len());
    let mut prev = 0u64;
    for &d in &chain {
        debug_assert_eq!(
            d & prev,
            prev,
            "downsets of a (2+2)-free poset form a chain"
        );
        for e in bits(d & !prev).collect::<Vec<_>>().into_iter().rev() {
            letters.push((Letter::Zero, e + 1));
        }
        for m in (0..p.len()).filter(|&x| down[x] == d) {
            letters.push((Letter::One, m + 1));
        }
        prev = d;
    }
    for e in bits(p.isolated()).collect::<Vec<_>>().into_iter().rev() {
        letters.push((Letter::Zero, e + 1));
    }
    Ok(LabelledBinaryWord(letters))
}

/// Reads the word left to right: `0_p` adds a new minimal element `p`, `1_q`
/// adds a maximal element `q` covering every minimal element added so far.
pub fn decode_word(w: &LabelledBinaryWord) -> Result<Poset, BijectionError> {
    w.validate()?;
    let n = w.len();
    let mut succ = vec![0u64; n];
    let mut minima = 0u64;
    for &(letter, label) in &w.0 {
        match letter {
            Letter::Zero => minima |= 1 << (label - 1),
            Letter::One => {
                for m in bits(minima) {
                    succ[m] |= 1 << (label - 1);
                }
            }
        }
    }
    Ok(Poset::from_successor_rows(succ)?)
}

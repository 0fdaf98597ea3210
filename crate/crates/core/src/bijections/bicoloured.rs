//! Bicoloured permutations and the class 𝓑.
//!
//! Ascents and descents are between positionally adjacent entries; an
//! inversion is any pair with the larger value first.

use std::fmt;
use std::str::FromStr;

use super::word::{LabelledBinaryWord, Letter};
use super::BijectionError;
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Colour {
    Blue,
    Red,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BicolouredPermutation {
    perm: Permutation,
    colours: Vec<Colour>,
}

impl BicolouredPermutation {
    /// Pairs a permutation with colours; membership in 𝓑 is not checked.
    pub fn new(perm: Permutation, colours: Vec<Colour>) -> Result<Self, BijectionError> {
        if perm.len() != colours.len() {
            return Err(BijectionError::Parse(format!(
                "{} values but {} colours",
                perm.len(),
                colours.len()
            )));
        }
        Ok(BicolouredPermutation { perm, colours })
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn values(&self) -> &[usize] {
        self.perm.values()
    }

    pub fn colours(&self) -> &[Colour] {
        &self.colours
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    /// First violation of the 𝓑 conditions, with 1-based positions.
    pub fn class_b_violation(&self) -> Option<BijectionError> {
        let v = self.values();
        let c = &self.colours;
        if c.first() == Some(&Colour::Red) {
            return Some(BijectionError::NotInClassB {
                kind: "red first entry",
                first: 1,
                second: 1,
            });
        }
        for i in 1..v.len() {
            if v[i - 1] < v[i] && c[i - 1] == Colour::Blue && c[i] == Colour::Blue {
                return Some(BijectionError::NotInClassB {
                    kind: "blue-blue ascent",
                    first: i,
                    second: i + 1,
                });
            }
            if v[i - 1] > v[i] && c[i - 1] == Colour::Red && c[i] == Colour::Red {
                return Some(BijectionError::NotInClassB {
                    kind: "red-red descent",
                    first: i,
                    second: i + 1,
                });
            }
        }
        // A blue entry anywhere before a smaller red entry.
        let mut max_blue: Option<(usize, usize)> = None;
        for i in 0..v.len() {
            match c[i] {
                Colour::Blue => {
                    if max_blue.is_none_or(|(_, m)| v[i] > m) {
                        max_blue = Some((i, v[i]));
                    }
                }
                Colour::Red => {
                    if let Some((j, m)) = max_blue {
                        if m > v[i] {
                            return Some(BijectionError::NotInClassB {
                                kind: "blue-red inversion",
                                first: j + 1,
                                second: i + 1,
                            });
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_in_class_b(&self) -> bool {
        self.class_b_violation().is_none()
    }

    pub fn validate(&self) -> Result<(), BijectionError> {
        match self.class_b_violation() {
            Some(e) => Err(e),
            None => Ok(()),
        }
    }

    /// Positions `p` (0-based) where `p, p+1` is a red-blue ascent.
    pub fn red_blue_ascents(&self) -> Vec<usize> {
        let v = self.values();
        (0..v.len().saturating_sub(1))
            .filter(|&p| {
                v[p] < v[p + 1]
                    && self.colours[p] == Colour::Red
                    && self.colours[p + 1] == Colour::Blue
            })
            .collect()
    }

    pub fn uncoloured(&self) -> Permutation {
        self.perm.clone()
    }
}

impl fmt::Debug for BicolouredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bicoloured({self})")
    }
}

impl fmt::Display for BicolouredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let toks: Vec<String> = self
            .values()
            .iter()
            .zip(&self.colours)
            .map(|(v, c)| format!("{v}{}", if *c == Colour::Blue { 'b' } else { 'r' }))
            .collect();
        f.write_str(&toks.join(" "))
    }
}

impl FromStr for BicolouredPermutation {
    type Err = BijectionError;

    /// Space-separated values suffixed `b` or `r`, e.g. `2b 4r 5b`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut values = Vec::new();
        let mut colours = Vec::new();
        for tok in s.split_whitespace() {
            let bad = || BijectionError::Parse(format!("bad bicoloured token {tok:?}"));
            let (num, colour) = match tok.strip_suffix('b') {
                Some(num) => (num, Colour::Blue),
                None => (tok.strip_suffix('r').ok_or_else(bad)?, Colour::Red),
            };
            values.push(num.parse().map_err(|_| bad())?);
            colours.push(colour);
        }
        let perm = Permutation::new(values).map_err(|e| BijectionError::Parse(e.to_string()))?;
        BicolouredPermutation::new(perm, colours)
    }
}

/// Swaps letters and labels: position `i` takes the label of letter `i`,
/// blue for `0` and red for `1`.
pub fn word_to_bicoloured(w: &LabelledBinaryWord) -> BicolouredPermutation {
    let (values, colours): (Vec<usize>, Vec<Colour>) = w
        .letters()
        .iter()
        .map(|&(l, x)| {
            (
                x,
                if l == Letter::Zero {
                    Colour::Blue
                } else {
                    Colour::Red
                },
            )
        })
        .unzip();
    BicolouredPermutation {
        perm: Permutation::new(values).expect("word labels form a permutation"),
        colours,
    }
}

pub fn bicoloured_to_word(b: &BicolouredPermutation) -> Result<LabelledBinaryWord, BijectionError> {
    b.validate()?;
    LabelledBinaryWord::new(
        b.values()
            .iter()
            .zip(&b.colours)
            .map(|(&x, c)| {
                (
                    if *c == Colour::Blue {
                        Letter::Zero
                    } else {
                        Letter::One
                    },
                    x,
                )
            })
            .collect(),
    )
}

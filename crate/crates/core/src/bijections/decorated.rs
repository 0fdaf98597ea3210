//! Decorated posets: a 3-free NL poset with isolated elements is recorded as
//! its restriction to the non-isolated elements plus ring counts. Each
//! isolated element becomes a ring on the nearest preceding non-isolated
//! element, or on the invisible element 0 when there is none.

use std::fmt;
use std::str::FromStr;

use super::BijectionError;
use crate::poset::{bits, FamilyId, Poset};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DecoratedPoset {
    base: Poset,
    /// `rings[0]` is the invisible element; `rings[i]` belongs to base element `i`.
    rings: Vec<usize>,
}

impl DecoratedPoset {
    pub fn new(base: Poset, rings: Vec<usize>) -> Result<Self, BijectionError> {
        if rings.len() != base.len() + 1 {
            return Err(BijectionError::BadDecoration(format!(
                "{} ring counts for a base of size {}",
                rings.len(),
                base.len()
            )));
        }
        if !FamilyId::Nl3FreeNoIso.contains(&base) {
            return Err(BijectionError::BadDecoration(
                "base must be 3-free NL with no isolated element".into(),
            ));
        }
        Ok(DecoratedPoset { base, rings })
    }

    pub fn base(&self) -> &Poset {
        &self.base
    }

    pub fn rings(&self) -> &[usize] {
        &self.rings
    }

    /// Size of the poset this decoration encodes.
    pub fn total_size(&self) -> usize {
        self.base.len() + self.rings.iter().sum::<usize>()
    }
}

impl fmt::Debug for DecoratedPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Decorated({self})")
    }
}

impl fmt::Display for DecoratedPoset {
    /// Base in poset text format, then `|` and the ring counts from element 0.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rings: Vec<String> = self.rings.iter().map(|r| r.to_string()).collect();
        write!(f, "{} | {}", self.base, rings.join(" "))
    }
}

impl FromStr for DecoratedPoset {
    type Err = BijectionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (base, rings) = s
            .split_once('|')
            .ok_or_else(|| BijectionError::Parse(format!("missing '|' in {s:?}")))?;
        let base: Poset = base.trim().parse()?;
        let rings = rings
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| BijectionError::Parse(format!("bad ring count {t:?}")))
            })
            .collect::<Result<_, _>>()?;
        DecoratedPoset::new(base, rings)
    }
}

pub fn decorated_encode(p: &Poset) -> Result<DecoratedPoset, BijectionError> {
    if !FamilyId::Nl3Free.contains(p) {
        return Err(BijectionError::NotInFamily {
            family: FamilyId::Nl3Free,
            witness: p.to_text(),
        });
    }
    let isolated = p.isolated();
    let mut new_index = vec![usize::MAX; p.len()];
    let mut rings = vec![0usize];
    for x in 0..p.len() {
        if isolated >> x & 1 == 1 {
            *rings.last_mut().unwrap() += 1;
        } else {
            new_index[x] = rings.len() - 1;
            rings.push(0);
        }
    }
    let mut succ = vec![0u64; rings.len() - 1];
    for x in 0..p.len() {
        for y in bits(p.upset(x)) {
            succ[new_index[x]] |= 1 << new_index[y];
        }
    }
    Ok(DecoratedPoset {
        base: Poset::from_successor_rows(succ)?,
        rings,
    })
}

pub fn decorated_decode(d: &DecoratedPoset) -> Result<Poset, BijectionError> {
    let n = d.total_size();
    // Position of each base element in the output.
    let mut place = Vec::with_capacity(d.base.len());
    let mut next = d.rings[0];
    for i in 0..d.base.len() {
        place.push(next);
        next += 1 + d.rings[i + 1];
    }
    let mut succ = vec![0u64; n];
    for (i, row) in d.base.successor_rows().iter().enumerate() {
        for j in bits(*row) {
            succ[place[i]] |= 1 << place[j];
        }
    }
    Ok(Poset::from_successor_rows(succ)?)
}

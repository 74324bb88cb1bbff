use std::collections::BTreeSet;

use super::fuse_basis;
use crate::error::Result;
use crate::groups::GroupCtx;
use crate::words::Word;

/// A finite set of irreducible labels.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SupportSet(pub BTreeSet<Word>);

impl SupportSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(w: Word) -> Self {
        Self(BTreeSet::from([w]))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.0.contains(w)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Word> {
        self.0.iter()
    }

    pub fn is_disjoint(&self, other: &SupportSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    /// First element of `self ∩ other`, if any.
    pub fn first_common(&self, other: &SupportSet) -> Option<Word> {
        self.0.intersection(&other.0).next().cloned()
    }

    pub fn conjugate(&self, ctx: &GroupCtx) -> Result<SupportSet> {
        self.0
            .iter()
            .map(|w| w.involute(ctx))
            .collect::<Result<_>>()
            .map(Self)
    }
}

impl FromIterator<Word> for SupportSet {
    fn from_iter<T: IntoIterator<Item = Word>>(iter: T) -> Self {
        Self(iter.into_iter().collect())
    }
}

/// `A ∘ B`: every `γ` with `ω(γ) ⊂ ω(α) ⊗ ω(β)` for some `α ∈ A`, `β ∈ B`.
pub fn support_product(a: &SupportSet, b: &SupportSet, ctx: &GroupCtx) -> Result<SupportSet> {
    let mut out = BTreeSet::new();
    for x in &a.0 {
        for y in &b.0 {
            out.extend(fuse_basis(x, y, ctx)?.support().cloned());
        }
    }
    Ok(SupportSet(out))
}

/// The four-way partition of all words by their first and last letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Region {
    /// Every letter is `e`, including the empty word.
    E2,
    /// Starts with `e` but is not all `e`.
    E3,
    /// Starts and ends with letters different from `e`.
    G2,
    /// Starts with a letter different from `e` and ends with `e`.
    G1NotG2,
}

impl Region {
    /// Starts with a letter different from `e`.
    pub fn in_g1(self) -> bool {
        matches!(self, Region::G2 | Region::G1NotG2)
    }

    /// Starts with `e` or is empty.
    pub fn in_e1(self) -> bool {
        matches!(self, Region::E2 | Region::E3)
    }

    /// Not all letters are `e`.
    pub fn in_s(self) -> bool {
        self != Region::E2
    }
}

pub fn classify_word(w: &Word, ctx: &GroupCtx) -> Region {
    let ls = w.letters();
    if ls.iter().all(|g| ctx.is_identity(g)) {
        return Region::E2;
    }
    if ctx.is_identity(&ls[0]) {
        Region::E3
    } else if ctx.is_identity(&ls[ls.len() - 1]) {
        Region::G1NotG2
    } else {
        Region::G2
    }
}

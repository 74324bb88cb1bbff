//! Fusion rules of a free product of compact quantum groups, generic over the
//! fusion rings of the factors.
//!
//! Irreducibles of the free product are alternating words: adjacent letters
//! come from different factors and no letter is trivial. For `x = v z` and
//! `y = z' w`, concatenation applies when `z` and `z'` live in different
//! factors; otherwise `x ⊗ y = Σ_{1 ≠ t ⊂ z ⊗ z'} v t w + δ_{z̄, z'} (v ⊗ w)`.

use std::collections::BTreeMap;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{fuse_basis, snplus_fuse};
use crate::error::{Error, Result};
use crate::groups::{GroupCtx, GroupElement};
use crate::words::Word;

/// Handle to the fusion ring of one factor.
pub trait ComponentRing {
    type Irr: Clone + Ord + Debug;

    fn is_trivial(&self, z: &Self::Irr) -> bool;

    fn conjugate(&self, z: &Self::Irr) -> Result<Self::Irr>;

    /// Decomposition of `z ⊗ w` into irreducibles with multiplicities.
    fn decompose(&self, z: &Self::Irr, w: &Self::Irr) -> Result<Vec<(Self::Irr, BigInt)>>;
}

/// `S_N^+`, irreducibles `v(t)` labelled by `t`.
#[derive(Clone, Copy, Debug, Default)]
pub struct So3Ring;

impl ComponentRing for So3Ring {
    type Irr = u64;

    fn is_trivial(&self, z: &u64) -> bool {
        *z == 0
    }

    fn conjugate(&self, z: &u64) -> Result<u64> {
        Ok(*z)
    }

    fn decompose(&self, z: &u64, w: &u64) -> Result<Vec<(u64, BigInt)>> {
        Ok(snplus_fuse(*z, *w)
            .into_iter()
            .map(|t| (t, BigInt::one()))
            .collect())
    }
}

/// Dual of a discrete group: one-dimensional irreducibles `g` with `g ⊗ h = gh`.
#[derive(Clone, Debug)]
pub struct GroupDualRing(pub GroupCtx);

impl ComponentRing for GroupDualRing {
    type Irr = GroupElement;

    fn is_trivial(&self, z: &GroupElement) -> bool {
        self.0.is_identity(z)
    }

    fn conjugate(&self, z: &GroupElement) -> Result<GroupElement> {
        self.0.inv(z)
    }

    fn decompose(&self, z: &GroupElement, w: &GroupElement) -> Result<Vec<(GroupElement, BigInt)>> {
        Ok(vec![(self.0.mul(z, w)?, BigInt::one())])
    }
}

/// The word fusion ring of the free wreath product over a group.
#[derive(Clone, Debug)]
pub struct WreathRing(pub GroupCtx);

impl ComponentRing for WreathRing {
    type Irr = Word;

    fn is_trivial(&self, z: &Word) -> bool {
        z.is_empty()
    }

    fn conjugate(&self, z: &Word) -> Result<Word> {
        z.involute(&self.0)
    }

    fn decompose(&self, z: &Word, w: &Word) -> Result<Vec<(Word, BigInt)>> {
        Ok(fuse_basis(z, w, &self.0)?
            .terms()
            .map(|(x, c)| (x.clone(), c.clone()))
            .collect())
    }
}

/// A letter of an alternating word: an irreducible of factor `component`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AltLetter<I> {
    pub component: usize,
    pub irr: I,
}

fn check_alternating<I: Clone + Ord + Debug>(
    components: &[&dyn ComponentRing<Irr = I>],
    x: &[AltLetter<I>],
) -> Result<()> {
    for (i, letter) in x.iter().enumerate() {
        let ring = components.get(letter.component).ok_or_else(|| {
            Error::Invalid(format!(
                "unknown component {} at position {}",
                letter.component,
                i + 1
            ))
        })?;
        if ring.is_trivial(&letter.irr) {
            return Err(Error::Invalid(format!(
                "trivial letter at position {}",
                i + 1
            )));
        }
        if i > 0 && x[i - 1].component == letter.component {
            return Err(Error::Invalid(format!(
                "word is not alternating at positions {} and {}",
                i,
                i + 1
            )));
        }
    }
    Ok(())
}

/// Decomposes `x ⊗ y` for alternating words over the given factors.
///
/// Multiplicities of `t ⊂ z ⊗ z'` are carried through when a factor ring has
/// them; the rings shipped here are multiplicity free.
pub fn free_product_fuse<I: Clone + Ord + Debug>(
    components: &[&dyn ComponentRing<Irr = I>],
    x: &[AltLetter<I>],
    y: &[AltLetter<I>],
) -> Result<BTreeMap<Vec<AltLetter<I>>, BigInt>> {
    check_alternating(components, x)?;
    check_alternating(components, y)?;
    let mut acc: BTreeMap<Vec<AltLetter<I>>, BigInt> = BTreeMap::new();
    let mut add = |w: Vec<AltLetter<I>>, c: BigInt| {
        let e = acc.entry(w).or_default();
        *e += c;
    };
    let (mut x, mut y) = (x.to_vec(), y.to_vec());
    loop {
        let (Some(z), Some(z2)) = (x.last().cloned(), y.first().cloned()) else {
            add(if x.is_empty() { y } else { x }, BigInt::one());
            break;
        };
        if z.component != z2.component {
            let mut w = x;
            w.extend(y);
            add(w, BigInt::one());
            break;
        }
        let ring = components[z.component];
        let v = &x[..x.len() - 1];
        let w = &y[1..];
        for (t, m) in ring.decompose(&z.irr, &z2.irr)? {
            if ring.is_trivial(&t) || m.is_zero() {
                continue;
            }
            let mut word = v.to_vec();
            word.push(AltLetter {
                component: z.component,
                irr: t,
            });
            word.extend_from_slice(w);
            add(word, m);
        }
        if ring.conjugate(&z.irr)? != z2.irr {
            break;
        }
        (x, y) = (v.to_vec(), w.to_vec());
    }
    acc.retain(|_, c| !c.is_zero());
    Ok(acc)
}

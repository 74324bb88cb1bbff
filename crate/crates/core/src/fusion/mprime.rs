use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use super::FusionElement;
use crate::error::{Error, Result};
use crate::groups::{GroupCtx, GroupElement};
use crate::words::MPrimeWord;

/// Writes `x = v a z_g`, reading a trailing `a` as `a z_e`.
fn split_right(x: &MPrimeWord, ctx: &GroupCtx) -> Result<(MPrimeWord, GroupElement)> {
    let k = x.exponents.len();
    let mut v = x.clone();
    if x.exponents[k - 1] >= 1 {
        v.exponents[k - 1] -= 1;
        return Ok((v, ctx.identity()));
    }
    if k < 2 || x.exponents[k - 2] == 0 {
        return Err(Error::Internal(format!(
            "{} has no a before its last letter",
            x.display(ctx)
        )));
    }
    v.exponents.pop();
    v.exponents[k - 2] -= 1;
    let g = v.letters.pop().unwrap();
    Ok((v, g))
}

/// Writes `y = z_h a w`, reading a leading `a` as `z_e a`.
fn split_left(y: &MPrimeWord, ctx: &GroupCtx) -> Result<(GroupElement, MPrimeWord)> {
    let mut w = y.clone();
    if y.exponents[0] >= 1 {
        w.exponents[0] -= 1;
        return Ok((ctx.identity(), w));
    }
    if y.exponents.len() < 2 || y.exponents[1] == 0 {
        return Err(Error::Internal(format!(
            "{} has no a after its first letter",
            y.display(ctx)
        )));
    }
    w.exponents.remove(0);
    w.exponents[0] -= 1;
    let h = w.letters.remove(0);
    Ok((h, w))
}

/// Fusion computed in the `a`/`z_g` normal form:
/// `v a z_g ⊗ z_h a w = v a z_{gh} a w + δ_{gh,e} (v ⊗ w)`, with the unit `z_e`.
///
/// Inputs must lie in the submonoid generated by the `a z_g a`; the result is
/// converted back to words.
pub fn fuse_mprime(x: &MPrimeWord, y: &MPrimeWord, ctx: &GroupCtx) -> Result<FusionElement> {
    for m in [x, y] {
        if !m.in_submonoid(ctx) {
            return Err(Error::NotInSubmonoid(m.display(ctx)));
        }
    }
    let a = MPrimeWord::a_power(1);
    let mut acc: BTreeMap<MPrimeWord, BigInt> = BTreeMap::new();
    let (mut x, mut y) = (x.clone(), y.clone());
    // The δ term is the only recursive call, so the recursion unrolls into a loop.
    loop {
        if x.is_unit() || y.is_unit() {
            let rest = if x.is_unit() { y } else { x };
            *acc.entry(rest).or_default() += 1;
            break;
        }
        let (v, g) = split_right(&x, ctx)?;
        let (h, w) = split_left(&y, ctx)?;
        let gh = ctx.mul(&g, &h)?;
        let term = v
            .mul(&a)
            .mul(&MPrimeWord::z(gh.clone(), ctx))
            .mul(&a)
            .mul(&w);
        *acc.entry(term).or_default() += BigInt::one();
        if !ctx.is_identity(&gh) {
            break;
        }
        (x, y) = (v, w);
    }
    let mut out = FusionElement::zero();
    for (m, c) in acc {
        let word = m
            .to_word(ctx)
            .map_err(|e| Error::Internal(format!("normal-form fusion left the submonoid: {e}")))?;
        out.add_term(word, c);
    }
    Ok(out)
}

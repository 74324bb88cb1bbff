use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::groups::{GroupCtx, GroupElement};
use crate::words::Word;

/// SO(3)-type fusion: `v(s) ⊗ v(t) = ⊕_{k=0}^{2 min(s,t)} v(s+t-k)`.
/// Returned in decreasing order, each with multiplicity one.
pub fn snplus_fuse(s: u64, t: u64) -> Vec<u64> {
    (0..=2 * s.min(t)).map(|k| s + t - k).collect()
}

/// Formal sum of words over `Z_s` with integer letters (`s = None` is `Z`).
pub type HsnElement = BTreeMap<Vec<i64>, BigInt>;

struct Zs(Option<u64>);

impl Zs {
    fn norm(&self, a: i64) -> i64 {
        match self.0 {
            Some(s) => a.rem_euclid(s as i64),
            None => a,
        }
    }

    fn bar(&self, z: &[i64]) -> Vec<i64> {
        z.iter().rev().map(|&a| self.norm(-a)).collect()
    }
}

/// Fusion rule for words over `Z_s` written directly on integer letters:
/// `ρ_x ⊗ ρ_y = Σ_{x=vz, y=z̄w} ρ_{vw} + Σ_{x=vz, y=z̄w, v,w≠∅} ρ_{v·w}`.
pub fn hsn_fuse(x: &[i64], y: &[i64], s: Option<u64>) -> Result<HsnElement> {
    if s == Some(0) {
        return Err(Error::Range("Z_s needs s >= 1".into()));
    }
    let zs = Zs(s);
    let x: Vec<i64> = x.iter().map(|&a| zs.norm(a)).collect();
    let y: Vec<i64> = y.iter().map(|&a| zs.norm(a)).collect();
    let mut out = HsnElement::new();
    // i is the length of v
    for i in (0..=x.len()).rev() {
        let (v, z) = x.split_at(i);
        if z.len() > y.len() || zs.bar(z) != y[..z.len()] {
            continue;
        }
        let w = &y[z.len()..];
        let mut vw = v.to_vec();
        vw.extend_from_slice(w);
        *out.entry(vw).or_default() += 1;
        if let (Some((&vl, vh)), Some((&wf, wt))) = (v.split_last(), w.split_first()) {
            let mut fused = vh.to_vec();
            fused.push(zs.norm(vl + wf));
            fused.extend_from_slice(wt);
            *out.entry(fused).or_default() += 1;
        }
    }
    Ok(out)
}

/// Integer letters of a word over `cyclic:s` or `integers`.
pub fn word_to_hsn(w: &Word, ctx: &GroupCtx) -> Result<Vec<i64>> {
    w.letters()
        .iter()
        .map(|g| match (ctx, g) {
            (GroupCtx::Cyclic(s), GroupElement::Residue(r)) if r < s => Ok(*r as i64),
            (GroupCtx::Integers, GroupElement::Integer(a)) => Ok(*a),
            _ => Err(Error::Invalid(format!(
                "{} is not a cyclic or integer group element",
                ctx.format_element(g)
            ))),
        })
        .collect()
}

pub fn hsn_to_word(letters: &[i64], ctx: &GroupCtx) -> Result<Word> {
    letters
        .iter()
        .map(|&a| match ctx {
            GroupCtx::Cyclic(s) => Ok(GroupElement::Residue(a.rem_euclid(*s as i64) as u64)),
            GroupCtx::Integers => Ok(GroupElement::Integer(a)),
            _ => Err(Error::Invalid(format!(
                "{ctx} is not cyclic or the integers"
            ))),
        })
        .collect::<Result<Vec<_>>>()
        .map(Word)
}

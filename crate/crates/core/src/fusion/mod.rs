//! The fusion ring `Z<Γ>`: formal integer combinations of words with the
//! product given by the splitting rule on words.
//!
//! For basis words `x` and `y`, every suffix `t` of `x` whose involute is a
//! prefix of `y` splits `x = u t`, `y = t̄ v` and contributes the concatenation
//! `u v`, plus the fused word `u . v` when both `u` and `v` are nonempty.

mod builtin;
mod free_product;
mod mprime;
mod support;

pub use builtin::{hsn_fuse, hsn_to_word, snplus_fuse, word_to_hsn, HsnElement};
pub use free_product::{
    free_product_fuse, AltLetter, ComponentRing, GroupDualRing, So3Ring, WreathRing,
};
pub use mprime::fuse_mprime;
pub use support::{classify_word, support_product, Region, SupportSet};

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::{GroupCtx, GroupElement};
use crate::words::Word;

/// Element of `Z<Γ>`. Zero coefficients are never stored and iteration is in
/// word order, so equal elements serialize identically.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FusionElement {
    terms: BTreeMap<Word, BigInt>,
}

impl FusionElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit `b_∅`.
    pub fn one() -> Self {
        Self::basis(Word::empty())
    }

    pub fn basis(w: Word) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, BigInt::one());
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of distinct basis words with nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Word, c: impl Into<BigInt>) {
        let c = c.into();
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigInt)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    /// Coefficient relative to `b_x` (zero when absent).
    pub fn coefficient(&self, x: &Word) -> BigInt {
        self.terms.get(x).cloned().unwrap_or_default()
    }

    /// Coefficient relative to `b_∅`, i.e. the multiplicity of the trivial corepresentation.
    pub fn trivial_multiplicity(&self) -> BigInt {
        self.coefficient(&Word::empty())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero();
        for (w, k) in &self.terms {
            out.add_term(w.clone(), k * c);
        }
        out
    }

    /// True when every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Bilinear extension of [`fuse_basis`].
    pub fn product(&self, other: &FusionElement, ctx: &GroupCtx) -> Result<FusionElement> {
        let mut out = FusionElement::zero();
        for (x, cx) in &self.terms {
            for (y, cy) in &other.terms {
                let c = cx * cy;
                for (w, m) in fuse_basis(x, y, ctx)?.terms {
                    out.add_term(w, m * &c);
                }
            }
        }
        Ok(out)
    }

    /// Relabels `b_x -> b_{x̄}`.
    pub fn conjugate(&self, ctx: &GroupCtx) -> Result<FusionElement> {
        let mut out = FusionElement::zero();
        for (w, c) in &self.terms {
            out.add_term(w.involute(ctx)?, c.clone());
        }
        Ok(out)
    }

    pub fn to_json(&self, ctx: &GroupCtx) -> FusionJson {
        FusionJson {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| TermJson {
                    word: w.tokens(ctx),
                    mult: c.to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &FusionJson, ctx: &GroupCtx) -> Result<FusionElement> {
        let mut out = FusionElement::zero();
        for t in &json.terms {
            let w = t
                .word
                .iter()
                .map(|tok| ctx.parse_element(tok))
                .collect::<Result<Vec<_>>>()?;
            let c: BigInt = t.mult.parse().map_err(|_| {
                Error::Parse(format!("multiplicity {:?} is not an integer", t.mult))
            })?;
            out.add_term(Word(w), c);
        }
        Ok(out)
    }

    /// Human readable `2*[1,0] + [] ` style rendering.
    pub fn display(&self, ctx: &GroupCtx) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(w, c)| {
                if c.is_one() {
                    w.display(ctx)
                } else {
                    format!("{c}*{}", w.display(ctx))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl Add for FusionElement {
    type Output = FusionElement;
    fn add(mut self, rhs: FusionElement) -> FusionElement {
        for (w, c) in rhs.terms {
            self.add_term(w, c);
        }
        self
    }
}

impl Neg for FusionElement {
    type Output = FusionElement;
    fn neg(mut self) -> FusionElement {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Sub for FusionElement {
    type Output = FusionElement;
    fn sub(self, rhs: FusionElement) -> FusionElement {
        self + (-rhs)
    }
}

/// `{"terms": [{"word": [...], "mult": "decimal"}]}`, sorted by word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FusionJson {
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub word: Vec<String>,
    pub mult: String,
}

/// Decomposition of `ω(x) ⊗ ω(y)` into irreducibles.
pub fn fuse_basis(x: &Word, y: &Word, ctx: &GroupCtx) -> Result<FusionElement> {
    x.check(ctx)?;
    y.check(ctx)?;
    let (xs, ys) = (x.letters(), y.letters());
    let mut out = FusionElement::zero();
    for j in 0..=xs.len().min(ys.len()) {
        let (u, t) = xs.split_at(xs.len() - j);
        let (t_bar, v) = ys.split_at(j);
        // involute(t) == t_bar, letter by letter
        let mut matches = true;
        for (a, b) in t.iter().rev().zip(t_bar) {
            if ctx.inv(a)? != *b {
                matches = false;
                break;
            }
        }
        if !matches {
            continue;
        }
        let (u, v) = (Word(u.to_vec()), Word(v.to_vec()));
        out.add_term(u.concat(&v), 1);
        if !u.is_empty() && !v.is_empty() {
            out.add_term(u.fuse(&v, ctx)?, 1);
        }
    }
    Ok(out)
}

/// Which corepresentation each generator stands for in
/// [`decompose_generator_product`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorMode {
    /// The irreducible `ω(g)`.
    Omega,
    /// The basic corepresentation `a(g) = ω(g) ⊕ δ_{g,e} 1`.
    ARep,
}

/// `ω(g_1) ⊗ ... ⊗ ω(g_k)` or `a(g_1) ⊗ ... ⊗ a(g_k)`; the empty product is `1`.
pub fn decompose_generator_product(
    gs: &[GroupElement],
    ctx: &GroupCtx,
    mode: GeneratorMode,
) -> Result<FusionElement> {
    let mut acc = FusionElement::one();
    for g in gs {
        ctx.check(g)?;
        let mut factor = FusionElement::basis(Word::letter(g.clone()));
        if mode == GeneratorMode::ARep && ctx.is_identity(g) {
            factor.add_term(Word::empty(), 1);
        }
        acc = acc.product(&factor, ctx)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(x: u64) -> GroupElement {
        GroupElement::Residue(x)
    }

    fn w(xs: &[u64]) -> Word {
        Word(xs.iter().map(|&x| r(x)).collect())
    }

    fn elem(terms: &[(&[u64], i64)]) -> FusionElement {
        let mut out = FusionElement::zero();
        for (ws, c) in terms {
            out.add_term(w(ws), *c);
        }
        out
    }

    #[test]
    fn two_letters() {
        let z3 = GroupCtx::Cyclic(3);
        // g h with gh != e
        assert_eq!(
            fuse_basis(&w(&[1]), &w(&[1]), &z3).unwrap(),
            elem(&[(&[1, 1], 1), (&[2], 1)])
        );
        // g g^{-1}
        assert_eq!(
            fuse_basis(&w(&[1]), &w(&[2]), &z3).unwrap(),
            elem(&[(&[1, 2], 1), (&[0], 1), (&[], 1)])
        );
    }

    #[test]
    fn unit_is_neutral() {
        let z3 = GroupCtx::Cyclic(3);
        let x = w(&[1, 0, 2]);
        assert_eq!(
            fuse_basis(&Word::empty(), &x, &z3).unwrap(),
            FusionElement::basis(x.clone())
        );
        assert_eq!(
            fuse_basis(&x, &Word::empty(), &z3).unwrap(),
            FusionElement::basis(x.clone())
        );
        let two_x = FusionElement::basis(x.clone()).scale(&BigInt::from(2));
        assert_eq!(two_x.product(&FusionElement::one(), &z3).unwrap(), two_x);
    }

    #[test]
    fn hand_expanded_z2_product() {
        let z2 = GroupCtx::Cyclic(2);
        let got = fuse_basis(&w(&[1, 0]), &w(&[0, 1]), &z2).unwrap();
        let expected = elem(&[
            (&[1, 0, 0, 1], 1),
            (&[1, 0, 1], 1),
            (&[1, 1], 1),
            (&[0], 1),
            (&[], 1),
        ]);
        assert_eq!(got, expected);
    }

    #[test]
    fn bilinearity() {
        let z3 = GroupCtx::Cyclic(3);
        let g = FusionElement::basis(w(&[1]));
        let sum = FusionElement::basis(w(&[2])) + FusionElement::basis(w(&[0, 1]));
        let lhs = g.product(&sum, &z3).unwrap();
        let rhs = fuse_basis(&w(&[1]), &w(&[2]), &z3).unwrap()
            + fuse_basis(&w(&[1]), &w(&[0, 1]), &z3).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn coefficient_functionals() {
        let z3 = GroupCtx::Cyclic(3);
        let x = w(&[1, 0, 2]);
        let xb = x.involute(&z3).unwrap();
        assert_eq!(
            fuse_basis(&x, &xb, &z3).unwrap().trivial_multiplicity(),
            BigInt::one()
        );
        assert!(fuse_basis(&x, &w(&[1, 0, 1]), &z3)
            .unwrap()
            .trivial_multiplicity()
            .is_zero());
        assert_eq!(
            fuse_basis(&w(&[1]), &w(&[2]), &z3)
                .unwrap()
                .coefficient(&w(&[1, 2])),
            BigInt::one()
        );
        assert!(FusionElement::zero().coefficient(&x).is_zero());
    }

    #[test]
    fn conjugation() {
        let z3 = GroupCtx::Cyclic(3);
        let a = FusionElement::basis(w(&[1, 1])).scale(&BigInt::from(3));
        assert_eq!(
            a.conjugate(&z3).unwrap(),
            FusionElement::basis(w(&[2, 2])).scale(&BigInt::from(3))
        );
        assert_eq!(
            FusionElement::one().conjugate(&z3).unwrap(),
            FusionElement::one()
        );
    }

    #[test]
    fn generator_products() {
        let z3 = GroupCtx::Cyclic(3);
        let a_e = decompose_generator_product(&[r(0)], &z3, GeneratorMode::ARep).unwrap();
        assert_eq!(a_e, elem(&[(&[0], 1), (&[], 1)]));
        assert_eq!(
            decompose_generator_product(&[], &z3, GeneratorMode::ARep).unwrap(),
            FusionElement::one()
        );
        let om = decompose_generator_product(&[r(1), r(2)], &z3, GeneratorMode::Omega).unwrap();
        assert_eq!(om, elem(&[(&[1, 2], 1), (&[0], 1), (&[], 1)]));
        // a(e) ⊗ a(e) = (1 + ω(e))^2 contains the trivial twice
        let ae2 = decompose_generator_product(&[r(0), r(0)], &z3, GeneratorMode::ARep).unwrap();
        assert_eq!(ae2.trivial_multiplicity(), BigInt::from(2));
    }

    #[test]
    fn recursion_identity_exhaustive() {
        // b_{g1..gk} = b_{g1..g(k-1)} ⊗ b_{gk} - b_{g1..g(k-1)gk} - δ b_{g1..g(k-2)}
        for ctx in [GroupCtx::Cyclic(2), GroupCtx::Cyclic(3)] {
            let alphabet = ctx.enumerate().unwrap();
            for k in 2..=4 {
                for x in Word::all_of_length(&alphabet, k) {
                    let ls = x.letters();
                    let head = Word(ls[..k - 1].to_vec());
                    let last = Word(ls[k - 1..].to_vec());
                    let fused = head.fuse(&last, &ctx).unwrap();
                    let mut rhs =
                        fuse_basis(&head, &last, &ctx).unwrap() - FusionElement::basis(fused);
                    if ctx.is_identity(&ctx.mul(&ls[k - 2], &ls[k - 1]).unwrap()) {
                        rhs = rhs - FusionElement::basis(Word(ls[..k - 2].to_vec()));
                    }
                    assert_eq!(rhs, FusionElement::basis(x.clone()), "{}", x.display(&ctx));
                }
            }
        }
    }

    #[test]
    fn json_roundtrip_and_order() {
        let z2 = GroupCtx::Cyclic(2);
        let e = fuse_basis(&w(&[1, 0]), &w(&[0, 1]), &z2).unwrap();
        let json = e.to_json(&z2);
        assert_eq!(json.terms[0].word, Vec::<String>::new());
        assert_eq!(FusionElement::from_json(&json, &z2).unwrap(), e);
        let text = serde_json::to_string(&json).unwrap();
        assert!(
            text.starts_with(r#"{"terms":[{"word":[],"mult":"1"}"#),
            "{text}"
        );
    }

    #[test]
    fn mismatched_context() {
        let z2 = GroupCtx::Cyclic(2);
        assert!(fuse_basis(&w(&[3]), &w(&[1]), &z2).is_err());
    }
}

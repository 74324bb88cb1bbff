//! Words over a group labelling irreducible corepresentations, and the
//! equivalent `a`/`z_g` normal form in the free product `N * Γ`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::{GroupCtx, GroupElement};

/// A finite sequence of group elements. Identity letters are significant:
/// `(g, e, h)` and `(g, h)` are different words.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<GroupElement>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(g: GroupElement) -> Self {
        Word(vec![g])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[GroupElement] {
        &self.0
    }

    /// `k` copies of the identity.
    pub fn identity_power(ctx: &GroupCtx, k: usize) -> Self {
        Word(vec![ctx.identity(); k])
    }

    pub fn check(&self, ctx: &GroupCtx) -> Result<()> {
        self.0.iter().try_for_each(|g| ctx.check(g))
    }

    /// Reversed sequence of inverses.
    pub fn involute(&self, ctx: &GroupCtx) -> Result<Word> {
        self.0
            .iter()
            .rev()
            .map(|g| ctx.inv(g))
            .collect::<Result<_>>()
            .map(Word)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `(g_1, .., g_k) . (h_1, .., h_l) = (g_1, .., g_k h_1, .., h_l)`.
    pub fn fuse(&self, other: &Word, ctx: &GroupCtx) -> Result<Word> {
        let (Some((last, head)), Some((first, tail))) =
            (self.0.split_last(), other.0.split_first())
        else {
            return Err(Error::EmptyFusion);
        };
        let mut v = Vec::with_capacity(self.len() + other.len() - 1);
        v.extend_from_slice(head);
        v.push(ctx.mul(last, first)?);
        v.extend_from_slice(tail);
        Ok(Word(v))
    }

    /// Sum of the `a`-exponents of the normal form. Every letter contributes
    /// exactly two, so this is `2 * len`, but it is computed from the normal form.
    pub fn l_length(&self, ctx: &GroupCtx) -> u64 {
        MPrimeWord::from_word(self, ctx).exponents.iter().sum()
    }

    pub fn to_mprime(&self, ctx: &GroupCtx) -> MPrimeWord {
        MPrimeWord::from_word(self, ctx)
    }

    /// Parses the bracketed CLI syntax `[t1, t2, ...]` (`[]` is the empty word).
    pub fn parse(text: &str, ctx: &GroupCtx) -> Result<Word> {
        let t = text.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| {
                Error::Parse(format!("word {t:?} must be a bracketed list like [a,b]"))
            })?;
        if inner.trim().is_empty() {
            return Ok(Word::empty());
        }
        inner
            .split(',')
            .enumerate()
            .map(|(i, tok)| {
                ctx.parse_element(tok.trim().trim_matches('"'))
                    .map_err(|e| Error::Parse(format!("word {t:?}, position {}: {e}", i + 1)))
            })
            .collect::<Result<_>>()
            .map(Word)
    }

    pub fn tokens(&self, ctx: &GroupCtx) -> Vec<String> {
        self.0.iter().map(|g| ctx.format_element(g)).collect()
    }

    /// Bracketed text form, the inverse of [`Word::parse`].
    pub fn display(&self, ctx: &GroupCtx) -> String {
        format!("[{}]", self.tokens(ctx).join(","))
    }

    pub fn to_json(&self, ctx: &GroupCtx) -> WordJson {
        WordJson {
            letters: self.tokens(ctx),
        }
    }

    pub fn from_json(json: &WordJson, ctx: &GroupCtx) -> Result<Word> {
        json.letters
            .iter()
            .map(|t| ctx.parse_element(t))
            .collect::<Result<_>>()
            .map(Word)
    }

    /// All words of exactly `len` letters drawn from `alphabet`, in
    /// lexicographic order of alphabet positions.
    pub fn all_of_length(alphabet: &[GroupElement], len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w| {
                    alphabet.iter().map(move |g| {
                        let mut v = w.0.clone();
                        v.push(g.clone());
                        Word(v)
                    })
                })
                .collect();
        }
        out
    }

    /// All words of length at most `max_len` over `alphabet`, shortest first.
    pub fn all_up_to(alphabet: &[GroupElement], max_len: usize) -> Vec<Word> {
        (0..=max_len)
            .flat_map(|n| Word::all_of_length(alphabet, n))
            .collect()
    }
}

impl From<Vec<GroupElement>> for Word {
    fn from(v: Vec<GroupElement>) -> Self {
        Word(v)
    }
}

/// JSON form `{"letters": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordJson {
    pub letters: Vec<String>,
}

/// Reduced word `a^{l_1} z_{g_1} a^{l_2} ... z_{g_{k-1}} a^{l_k}` in `N * Γ`.
///
/// Reduced means interior exponents are at least one and every stored letter
/// is a non-identity element. `exponents.len() == letters.len() + 1` always;
/// the unit is `exponents == [0]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MPrimeWord {
    pub exponents: Vec<u64>,
    pub letters: Vec<GroupElement>,
}

impl MPrimeWord {
    pub fn unit() -> Self {
        MPrimeWord {
            exponents: vec![0],
            letters: Vec::new(),
        }
    }

    pub fn a_power(n: u64) -> Self {
        MPrimeWord {
            exponents: vec![n],
            letters: Vec::new(),
        }
    }

    /// `z_g`, which is the unit when `g = e`.
    pub fn z(g: GroupElement, ctx: &GroupCtx) -> Self {
        if ctx.is_identity(&g) {
            Self::unit()
        } else {
            MPrimeWord {
                exponents: vec![0, 0],
                letters: vec![g],
            }
        }
    }

    pub fn is_unit(&self) -> bool {
        self.letters.is_empty() && self.exponents == [0]
    }

    /// Product in `N * Γ`. Both factors are reduced, so only the touching
    /// exponents merge; no `z_g z_h` adjacency can arise.
    pub fn mul(&self, other: &MPrimeWord) -> MPrimeWord {
        let mut exponents = self.exponents.clone();
        *exponents.last_mut().unwrap() += other.exponents[0];
        exponents.extend_from_slice(&other.exponents[1..]);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        MPrimeWord { exponents, letters }
    }

    /// Image of a word under `g -> a z_g a`, reduced.
    pub fn from_word(w: &Word, ctx: &GroupCtx) -> Self {
        let mut exponents = vec![0u64];
        let mut letters = Vec::new();
        for g in w.letters() {
            *exponents.last_mut().unwrap() += 1;
            if !ctx.is_identity(g) {
                letters.push(g.clone());
                exponents.push(0);
            }
            *exponents.last_mut().unwrap() += 1;
        }
        MPrimeWord { exponents, letters }
    }

    pub fn is_reduced(&self, ctx: &GroupCtx) -> bool {
        let k = self.exponents.len();
        k == self.letters.len() + 1
            && self.exponents[1..k.saturating_sub(1).max(1)]
                .iter()
                .all(|&l| l >= 1)
            && self
                .letters
                .iter()
                .all(|g| ctx.contains(g) && !ctx.is_identity(g))
    }

    /// Membership in the submonoid generated by the `a z_g a`.
    pub fn in_submonoid(&self, ctx: &GroupCtx) -> bool {
        if !self.is_reduced(ctx) {
            return false;
        }
        let k = self.exponents.len();
        if k == 1 {
            return self.exponents[0].is_multiple_of(2);
        }
        self.exponents[0] % 2 == 1
            && self.exponents[k - 1] % 2 == 1
            && self.exponents[1..k - 1]
                .iter()
                .all(|&l| l >= 2 && l % 2 == 0)
    }

    pub fn to_word(&self, ctx: &GroupCtx) -> Result<Word> {
        if !self.in_submonoid(ctx) {
            return Err(Error::NotInSubmonoid(format!(
                "exponents {:?}, letters [{}]",
                self.exponents,
                self.letters
                    .iter()
                    .map(|g| ctx.format_element(g))
                    .collect::<Vec<_>>()
                    .join(",")
            )));
        }
        let e = ctx.identity();
        let k = self.exponents.len();
        if k == 1 {
            return Ok(Word::identity_power(ctx, (self.exponents[0] / 2) as usize));
        }
        let mut out = Vec::new();
        for (i, &l) in self.exponents.iter().enumerate() {
            let run = if i == 0 || i == k - 1 {
                (l - 1) / 2
            } else {
                (l - 2) / 2
            };
            out.extend(std::iter::repeat_n(e.clone(), run as usize));
            if let Some(g) = self.letters.get(i) {
                out.push(g.clone());
            }
        }
        Ok(Word(out))
    }

    pub fn l_length(&self) -> u64 {
        self.exponents.iter().sum()
    }

    pub fn display(&self, ctx: &GroupCtx) -> String {
        MPrimeDisplay { word: self, ctx }.to_string()
    }

    pub fn to_json(&self, ctx: &GroupCtx) -> MPrimeJson {
        MPrimeJson {
            exponents: self.exponents.clone(),
            letters: self.letters.iter().map(|g| ctx.format_element(g)).collect(),
        }
    }

    pub fn from_json(json: &MPrimeJson, ctx: &GroupCtx) -> Result<Self> {
        let w = MPrimeWord {
            exponents: json.exponents.clone(),
            letters: json
                .letters
                .iter()
                .map(|t| ctx.parse_element(t))
                .collect::<Result<_>>()?,
        };
        if !w.is_reduced(ctx) {
            return Err(Error::Parse(format!(
                "{} is not a reduced word",
                w.display(ctx)
            )));
        }
        Ok(w)
    }
}

struct MPrimeDisplay<'a> {
    word: &'a MPrimeWord,
    ctx: &'a GroupCtx,
}

impl fmt::Display for MPrimeDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, &l) in self.word.exponents.iter().enumerate() {
            match l {
                0 => {}
                1 => parts.push("a".to_string()),
                _ => parts.push(format!("a^{l}")),
            }
            if let Some(g) = self.word.letters.get(i) {
                parts.push(format!("z_{}", self.ctx.format_element(g)));
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

/// JSON form `{"exponents": [...], "letters": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MPrimeJson {
    pub exponents: Vec<u64>,
    pub letters: Vec<String>,
}

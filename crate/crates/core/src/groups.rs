//! Discrete groups with exact, decidable element arithmetic.
//!
//! Four backends are supported: cyclic groups `Z_s` (with `Z_1` the trivial
//! group), the integers, finite groups given by a validated Cayley table, and
//! free groups of finite rank with elements stored as freely reduced words.

use std::fmt;
use std::path::Path;
use std::sync::Arc;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Generator alphabet for free groups. `e` is skipped because it always
/// denotes the identity; upper case letters denote inverses.
const FREE_ALPHABET: &[u8] = b"abcdfghijklmnopqrstuvwxyz";

/// Maximal order accepted for a Cayley table (associativity check is cubic).
pub const MAX_TABLE_ORDER: usize = 512;

/// An element of one of the group backends.
///
/// Elements do not carry their context; they are validated against a
/// [`GroupCtx`] whenever they enter an operation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElement {
    /// Residue modulo `s` for `Z_s`.
    Residue(u64),
    /// Element of the integers.
    Integer(i64),
    /// Row index into a Cayley table.
    Index(usize),
    /// Freely reduced word; generator `i` is `i + 1`, its inverse `-(i + 1)`.
    Free(Vec<i32>),
}

/// Order of a group element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ElementOrder {
    Finite(u64),
    Infinite,
}

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyTable {
    names: Vec<String>,
    identity: usize,
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

/// On-disk representation of a [`CayleyTable`].
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TableFile {
    pub order: usize,
    pub elements: Vec<String>,
    pub identity: usize,
    pub table: Vec<Vec<usize>>,
    pub inverse: Vec<usize>,
}

impl CayleyTable {
    /// Validates the group axioms and builds the table.
    pub fn new(file: TableFile) -> Result<Self> {
        let n = file.order;
        let bad = |msg: String| Err(Error::GroupAxiom(msg));
        if n == 0 {
            return bad("order must be positive".into());
        }
        if n > MAX_TABLE_ORDER {
            return Err(Error::LimitExceeded(format!(
                "table order {n} exceeds {MAX_TABLE_ORDER}"
            )));
        }
        if file.elements.len() != n {
            return bad(format!(
                "expected {n} element names, got {}",
                file.elements.len()
            ));
        }
        for (i, name) in file.elements.iter().enumerate() {
            if !valid_token(name) {
                return bad(format!("element name {name:?} is not a valid token"));
            }
            if file.elements[..i].contains(name) {
                return bad(format!("duplicate element name {name:?}"));
            }
        }
        if file.identity >= n {
            return bad(format!("identity index {} out of range", file.identity));
        }
        if file.table.len() != n || file.table.iter().any(|row| row.len() != n) {
            return bad(format!("table must be {n}x{n}"));
        }
        if file.inverse.len() != n {
            return bad(format!("inverse must have {n} entries"));
        }
        if let Some((r, c)) = file
            .table
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, &v)| (r, c, v)))
            .find(|&(_, _, v)| v >= n)
            .map(|(r, c, _)| (r, c))
        {
            return bad(format!("entry table[{r}][{c}] out of range"));
        }
        // Latin square
        for i in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for j in 0..n {
                let rv = file.table[i][j];
                let cv = file.table[j][i];
                if std::mem::replace(&mut row_seen[rv], true) {
                    return bad(format!("latin square: row {i} repeats element {rv}"));
                }
                if std::mem::replace(&mut col_seen[cv], true) {
                    return bad(format!("latin square: column {i} repeats element {cv}"));
                }
            }
        }
        let id = file.identity;
        for g in 0..n {
            if file.table[id][g] != g || file.table[g][id] != g {
                return bad(format!("identity: {id} does not act trivially on {g}"));
            }
        }
        for g in 0..n {
            let h = file.inverse[g];
            if h >= n || file.table[g][h] != id || file.table[h][g] != id {
                return bad(format!(
                    "inverse: inverse[{g}] = {h} is not a two-sided inverse"
                ));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = file.table[a][b];
                for c in 0..n {
                    if file.table[ab][c] != file.table[a][file.table[b][c]] {
                        return bad(format!("associativity fails on triple ({a}, {b}, {c})"));
                    }
                }
            }
        }
        Ok(Self {
            names: file.elements,
            identity: id,
            table: file.table,
            inverse: file.inverse,
        })
    }

    pub fn from_json(json: &str) -> Result<Self> {
        let file: TableFile = serde_json::from_str(json)
            .map_err(|e| Error::Parse(format!("group table JSON: {e}")))?;
        Self::new(file)
    }

    pub fn to_file(&self) -> TableFile {
        TableFile {
            order: self.names.len(),
            elements: self.names.clone(),
            identity: self.identity,
            table: self.table.clone(),
            inverse: self.inverse.clone(),
        }
    }

    /// The symmetric group on `n` letters, elements named by 1-based one-line
    /// notation (`"123"` is the identity of `S_3`) in lexicographic order.
    pub fn symmetric(n: usize) -> Result<Self> {
        if !(1..=5).contains(&n) {
            return Err(Error::Range(format!(
                "symmetric group degree {n} not in 1..=5"
            )));
        }
        let mut perms: Vec<Vec<usize>> = vec![(0..n).collect()];
        loop {
            let mut p = perms.last().unwrap().clone();
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
            p.swap(i, j);
            p[i + 1..].reverse();
            perms.push(p);
        }
        let index = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
        // (p * q)(i) = p(q(i))
        let table: Vec<Vec<usize>> = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| index(&q.iter().map(|&i| p[i]).collect::<Vec<_>>()))
                    .collect()
            })
            .collect();
        let inverse = perms
            .iter()
            .map(|p| {
                let mut inv = vec![0; n];
                for (i, &pi) in p.iter().enumerate() {
                    inv[pi] = i;
                }
                index(&inv)
            })
            .collect();
        let names = perms
            .iter()
            .map(|p| p.iter().map(|&i| char::from(b'1' + i as u8)).collect())
            .collect();
        Self::new(TableFile {
            order: perms.len(),
            elements: names,
            identity: 0,
            table,
            inverse,
        })
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }
}

/// A discrete group backend.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupCtx {
    /// `Z_s`; `Cyclic(1)` is the trivial group.
    Cyclic(u64),
    Integers,
    Table(Arc<CayleyTable>),
    /// Free group of the given rank.
    Free(u32),
}

impl fmt::Display for GroupCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupCtx::Cyclic(s) => write!(f, "cyclic:{s}"),
            GroupCtx::Integers => f.write_str("integers"),
            GroupCtx::Table(t) => write!(f, "table(order {})", t.order()),
            GroupCtx::Free(n) => write!(f, "free:{n}"),
        }
    }
}

fn valid_token(s: &str) -> bool {
    !s.is_empty()
        && !s
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, ',' | '[' | ']' | '"'))
}

impl GroupCtx {
    /// Parses `cyclic:<s>`, `integers`, `table:<path>`, `free:<n>` or `trivial`.
    pub fn parse(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        if spec == "trivial" {
            return Ok(GroupCtx::Cyclic(1));
        }
        if spec == "integers" {
            return Ok(GroupCtx::Integers);
        }
        if let Some(rest) = spec.strip_prefix("cyclic:") {
            let s: u64 = rest.parse().map_err(|_| {
                Error::Parse(format!("cyclic order {rest:?} is not a positive integer"))
            })?;
            if s == 0 {
                return Err(Error::Parse("cyclic order must be positive".into()));
            }
            return Ok(GroupCtx::Cyclic(s));
        }
        if let Some(rest) = spec.strip_prefix("free:") {
            let n: u32 = rest.parse().map_err(|_| {
                Error::Parse(format!("free rank {rest:?} is not a positive integer"))
            })?;
            if n == 0 || n as usize > FREE_ALPHABET.len() {
                return Err(Error::Parse(format!(
                    "free rank must be in 1..={}",
                    FREE_ALPHABET.len()
                )));
            }
            return Ok(GroupCtx::Free(n));
        }
        if let Some(path) = spec.strip_prefix("table:") {
            return Self::load_table(path);
        }
        Err(Error::Parse(format!(
            "unknown group {spec:?}; expected cyclic:<s>, integers, table:<path>, free:<n> or trivial"
        )))
    }

    pub fn load_table(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path.as_ref())?;
        Ok(GroupCtx::Table(Arc::new(CayleyTable::from_json(&text)?)))
    }

    pub fn from_table(table: CayleyTable) -> Self {
        GroupCtx::Table(Arc::new(table))
    }

    /// The trivial group.
    pub fn trivial() -> Self {
        GroupCtx::Cyclic(1)
    }

    /// Number of elements, `None` for infinite groups.
    pub fn order(&self) -> Option<u64> {
        match self {
            GroupCtx::Cyclic(s) => Some(*s),
            GroupCtx::Table(t) => Some(t.order() as u64),
            GroupCtx::Integers | GroupCtx::Free(_) => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.order().is_some()
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        match (self, g) {
            (GroupCtx::Cyclic(s), GroupElement::Residue(r)) => r < s,
            (GroupCtx::Integers, GroupElement::Integer(_)) => true,
            (GroupCtx::Table(t), GroupElement::Index(i)) => *i < t.order(),
            (GroupCtx::Free(n), GroupElement::Free(w)) => {
                w.iter().all(|&x| x != 0 && x.unsigned_abs() <= *n)
                    && w.windows(2).all(|p| p[0] != -p[1])
            }
            _ => false,
        }
    }

    pub fn check(&self, g: &GroupElement) -> Result<()> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(Error::Mismatch {
                element: format!("{g:?}"),
                group: self.to_string(),
            })
        }
    }

    pub fn identity(&self) -> GroupElement {
        match self {
            GroupCtx::Cyclic(_) => GroupElement::Residue(0),
            GroupCtx::Integers => GroupElement::Integer(0),
            GroupCtx::Table(t) => GroupElement::Index(t.identity),
            GroupCtx::Free(_) => GroupElement::Free(Vec::new()),
        }
    }

    /// Structural identity test; elements of another backend are never the identity.
    pub fn is_identity(&self, g: &GroupElement) -> bool {
        *g == self.identity()
    }

    pub fn mul(&self, g: &GroupElement, h: &GroupElement) -> Result<GroupElement> {
        self.check(g)?;
        self.check(h)?;
        Ok(match (self, g, h) {
            (GroupCtx::Cyclic(s), GroupElement::Residue(a), GroupElement::Residue(b)) => {
                GroupElement::Residue(((*a as u128 + *b as u128) % *s as u128) as u64)
            }
            (GroupCtx::Integers, GroupElement::Integer(a), GroupElement::Integer(b)) => {
                GroupElement::Integer(
                    a.checked_add(*b)
                        .ok_or_else(|| Error::Range(format!("integer overflow in {a} + {b}")))?,
                )
            }
            (GroupCtx::Table(t), GroupElement::Index(a), GroupElement::Index(b)) => {
                GroupElement::Index(t.table[*a][*b])
            }
            (GroupCtx::Free(_), GroupElement::Free(a), GroupElement::Free(b)) => {
                GroupElement::Free(free_reduce_concat(a, b))
            }
            _ => unreachable!("checked above"),
        })
    }

    pub fn inv(&self, g: &GroupElement) -> Result<GroupElement> {
        self.check(g)?;
        Ok(match (self, g) {
            (GroupCtx::Cyclic(s), GroupElement::Residue(a)) => GroupElement::Residue((s - a) % s),
            (GroupCtx::Integers, GroupElement::Integer(a)) => GroupElement::Integer(
                a.checked_neg()
                    .ok_or_else(|| Error::Range(format!("cannot negate {a}")))?,
            ),
            (GroupCtx::Table(t), GroupElement::Index(a)) => GroupElement::Index(t.inverse[*a]),
            (GroupCtx::Free(_), GroupElement::Free(w)) => {
                GroupElement::Free(w.iter().rev().map(|x| -x).collect())
            }
            _ => unreachable!("checked above"),
        })
    }

    /// `g^n` for `n >= 0`.
    pub fn pow(&self, g: &GroupElement, n: u64) -> Result<GroupElement> {
        let mut acc = self.identity();
        let mut base = g.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &base)?;
            }
            base = self.mul(&base, &base)?;
            n >>= 1;
        }
        Ok(acc)
    }

    /// Smallest `n >= 1` with `g^n = e`.
    pub fn element_order(&self, g: &GroupElement) -> Result<ElementOrder> {
        self.check(g)?;
        if self.is_identity(g) {
            return Ok(ElementOrder::Finite(1));
        }
        Ok(match (self, g) {
            (GroupCtx::Cyclic(s), GroupElement::Residue(a)) => {
                ElementOrder::Finite(s / gcd(*s, *a))
            }
            (GroupCtx::Table(_), _) => {
                let mut n = 1;
                let mut acc = g.clone();
                while !self.is_identity(&acc) {
                    acc = self.mul(&acc, g)?;
                    n += 1;
                }
                ElementOrder::Finite(n)
            }
            _ => ElementOrder::Infinite,
        })
    }

    /// All elements, identity first. Refused for infinite groups.
    pub fn enumerate(&self) -> Result<Vec<GroupElement>> {
        match self {
            GroupCtx::Cyclic(s) => Ok((0..*s).map(GroupElement::Residue).collect()),
            GroupCtx::Table(t) => {
                let mut out = vec![GroupElement::Index(t.identity)];
                out.extend(
                    (0..t.order())
                        .filter(|&i| i != t.identity)
                        .map(GroupElement::Index),
                );
                Ok(out)
            }
            GroupCtx::Integers | GroupCtx::Free(_) => Err(Error::NotEnumerable(self.to_string())),
        }
    }

    /// A small finite alphabet of elements used for exhaustive sweeps:
    /// every element of a finite group; `{0, ±1, ±2}` for the integers;
    /// the identity together with generators and their inverses for free groups.
    pub fn sample_alphabet(&self) -> Vec<GroupElement> {
        match self {
            GroupCtx::Cyclic(_) | GroupCtx::Table(_) => self.enumerate().unwrap(),
            GroupCtx::Integers => [0, 1, -1, 2, -2].map(GroupElement::Integer).to_vec(),
            GroupCtx::Free(n) => {
                let mut out = vec![self.identity()];
                for i in 1..=*n as i32 {
                    out.push(GroupElement::Free(vec![i]));
                    out.push(GroupElement::Free(vec![-i]));
                }
                out
            }
        }
    }

    /// A random element. Infinite backends draw from a bounded neighbourhood
    /// of the identity (integers in `[-3, 3]`, reduced free words of length <= 3).
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> GroupElement {
        match self {
            GroupCtx::Cyclic(s) => GroupElement::Residue(rng.gen_range(0..*s)),
            GroupCtx::Integers => GroupElement::Integer(rng.gen_range(-3..=3)),
            GroupCtx::Table(t) => GroupElement::Index(rng.gen_range(0..t.order())),
            GroupCtx::Free(n) => {
                let len = rng.gen_range(0..=3);
                let mut w: Vec<i32> = Vec::with_capacity(len);
                while w.len() < len {
                    let g = rng.gen_range(1..=*n as i32) * if rng.gen_bool(0.5) { 1 } else { -1 };
                    if w.last() != Some(&-g) {
                        w.push(g);
                    }
                }
                GroupElement::Free(w)
            }
        }
    }

    /// Token for an element: decimal residue or integer, table name, or a
    /// generator string such as `aB` (`e` for the free identity).
    pub fn format_element(&self, g: &GroupElement) -> String {
        match (self, g) {
            (GroupCtx::Cyclic(_), GroupElement::Residue(r)) => r.to_string(),
            (GroupCtx::Integers, GroupElement::Integer(a)) => a.to_string(),
            (GroupCtx::Table(t), GroupElement::Index(i)) if *i < t.order() => t.names[*i].clone(),
            (GroupCtx::Free(_), GroupElement::Free(w)) => {
                if w.is_empty() {
                    "e".to_string()
                } else {
                    w.iter()
                        .map(|&x| {
                            let c = char::from(FREE_ALPHABET[x.unsigned_abs() as usize - 1]);
                            if x < 0 {
                                c.to_ascii_uppercase()
                            } else {
                                c
                            }
                        })
                        .collect()
                }
            }
            _ => format!("{g:?}"),
        }
    }

    /// Inverse of [`format_element`](Self::format_element); `e` is accepted as
    /// the identity by every backend.
    pub fn parse_element(&self, token: &str) -> Result<GroupElement> {
        let token = token.trim();
        if token == "e" {
            return Ok(self.identity());
        }
        let err = || Error::Parse(format!("{token:?} is not an element of {self}"));
        match self {
            GroupCtx::Cyclic(s) => {
                let r: u64 = token.parse().map_err(|_| err())?;
                if r < *s {
                    Ok(GroupElement::Residue(r))
                } else {
                    Err(err())
                }
            }
            GroupCtx::Integers => token.parse().map(GroupElement::Integer).map_err(|_| err()),
            GroupCtx::Table(t) => t
                .names
                .iter()
                .position(|n| n == token)
                .map(GroupElement::Index)
                .ok_or_else(err),
            GroupCtx::Free(n) => {
                let mut acc = Vec::new();
                for c in token.bytes() {
                    let lower = c.to_ascii_lowercase();
                    let idx = FREE_ALPHABET
                        .iter()
                        .position(|&x| x == lower)
                        .filter(|&i| i < *n as usize)
                        .ok_or_else(err)?;
                    let g = idx as i32 + 1;
                    acc = free_reduce_concat(&acc, &[if c.is_ascii_uppercase() { -g } else { g }]);
                }
                Ok(GroupElement::Free(acc))
            }
        }
    }
}

fn free_reduce_concat(a: &[i32], b: &[i32]) -> Vec<i32> {
    let mut out = a.to_vec();
    for &x in b {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn s3() -> GroupCtx {
        GroupCtx::from_table(CayleyTable::symmetric(3).unwrap())
    }

    #[test]
    fn parse_specs() {
        assert_eq!(GroupCtx::parse("trivial").unwrap(), GroupCtx::Cyclic(1));
        assert_eq!(
            GroupCtx::parse("cyclic:3")
                .unwrap()
                .enumerate()
                .unwrap()
                .len(),
            3
        );
        assert_eq!(GroupCtx::parse("free:2").unwrap(), GroupCtx::Free(2));
        assert_eq!(GroupCtx::parse("integers").unwrap(), GroupCtx::Integers);
        for bad in [
            "cyclic:0",
            "cyclic:x",
            "free:0",
            "nonsense",
            "table:/nonexistent.json",
        ] {
            assert!(GroupCtx::parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn arithmetic_examples() {
        let z3 = GroupCtx::Cyclic(3);
        let r = |x| GroupElement::Residue(x);
        assert_eq!(z3.mul(&r(1), &r(2)).unwrap(), r(0));

        let f2 = GroupCtx::Free(2);
        let ab = f2.parse_element("ab").unwrap();
        let b_inv = f2.parse_element("B").unwrap();
        assert_eq!(f2.mul(&ab, &b_inv).unwrap(), f2.parse_element("a").unwrap());
        assert_eq!(f2.parse_element("aA").unwrap(), f2.identity());
        assert!(f2.parse_element("c").is_err());
    }

    #[test]
    fn mismatch_is_reported() {
        let z3 = GroupCtx::Cyclic(3);
        assert!(matches!(
            z3.mul(&GroupElement::Residue(5), &GroupElement::Residue(0)),
            Err(Error::Mismatch { .. })
        ));
        assert!(z3.inv(&GroupElement::Integer(1)).is_err());
    }

    #[test]
    fn element_orders() {
        let z6 = GroupCtx::Cyclic(6);
        assert_eq!(
            z6.element_order(&GroupElement::Residue(2)).unwrap(),
            ElementOrder::Finite(3)
        );
        assert_eq!(
            GroupCtx::Integers
                .element_order(&GroupElement::Integer(5))
                .unwrap(),
            ElementOrder::Infinite
        );
        let f2 = GroupCtx::Free(2);
        assert_eq!(
            f2.element_order(&f2.parse_element("ab").unwrap()).unwrap(),
            ElementOrder::Infinite
        );
        for ctx in [z6, GroupCtx::Integers, f2, s3()] {
            assert_eq!(
                ctx.element_order(&ctx.identity()).unwrap(),
                ElementOrder::Finite(1)
            );
        }
    }

    #[test]
    fn lagrange_on_finite_backends() {
        for ctx in [
            GroupCtx::Cyclic(12),
            s3(),
            GroupCtx::from_table(CayleyTable::symmetric(4).unwrap()),
        ] {
            let n = ctx.order().unwrap();
            for g in ctx.enumerate().unwrap() {
                let ElementOrder::Finite(k) = ctx.element_order(&g).unwrap() else {
                    panic!("finite group element of infinite order");
                };
                assert_eq!(n % k, 0);
                assert!(ctx.is_identity(&ctx.pow(&g, k).unwrap()));
            }
        }
    }

    #[test]
    fn enumeration() {
        assert_eq!(
            GroupCtx::Cyclic(2).enumerate().unwrap(),
            vec![GroupElement::Residue(0), GroupElement::Residue(1)]
        );
        let s3 = s3();
        let elems = s3.enumerate().unwrap();
        assert_eq!(elems.len(), 6);
        assert!(s3.is_identity(&elems[0]));
        assert!(matches!(
            GroupCtx::Integers.enumerate(),
            Err(Error::NotEnumerable(_))
        ));
        assert!(GroupCtx::Free(2).enumerate().is_err());
    }

    #[test]
    fn group_laws_on_random_elements() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for ctx in [
            GroupCtx::Cyclic(5),
            GroupCtx::Integers,
            s3(),
            GroupCtx::Free(2),
        ] {
            for _ in 0..200 {
                let g = ctx.random_element(&mut rng);
                let h = ctx.random_element(&mut rng);
                let k = ctx.random_element(&mut rng);
                assert!(ctx.contains(&g));
                let lhs = ctx.mul(&ctx.mul(&g, &h).unwrap(), &k).unwrap();
                let rhs = ctx.mul(&g, &ctx.mul(&h, &k).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
                assert_eq!(ctx.mul(&g, &ctx.identity()).unwrap(), g);
                assert_eq!(ctx.mul(&ctx.identity(), &g).unwrap(), g);
                assert!(ctx.is_identity(&ctx.mul(&g, &ctx.inv(&g).unwrap()).unwrap()));
                assert!(ctx.is_identity(&ctx.mul(&ctx.inv(&g).unwrap(), &g).unwrap()));
                assert_eq!(ctx.parse_element(&ctx.format_element(&g)).unwrap(), g);
            }
        }
    }

    #[test]
    fn table_validation_reports_axiom() {
        let mut file = CayleyTable::symmetric(3).unwrap().to_file();
        file.table[1].swap(0, 1);
        let err = CayleyTable::new(file).unwrap_err().to_string();
        assert!(err.contains("identity") || err.contains("latin"), "{err}");

        let mut file = CayleyTable::symmetric(3).unwrap().to_file();
        file.inverse[3] = 3;
        assert!(CayleyTable::new(file)
            .unwrap_err()
            .to_string()
            .contains("inverse"));

        // A Latin square with identity that is not associative (order 5 loop).
        let table = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let file = TableFile {
            order: 5,
            elements: ["e", "a", "b", "c", "d"].map(String::from).to_vec(),
            identity: 0,
            table,
            inverse: vec![0, 1, 2, 3, 4],
        };
        let err = CayleyTable::new(file).unwrap_err().to_string();
        assert!(err.contains("associativity fails on triple"), "{err}");
    }

    #[test]
    fn symmetric_group_is_nonabelian() {
        let s3 = s3();
        let elems = s3.enumerate().unwrap();
        let commute = elems.iter().all(|g| {
            elems
                .iter()
                .all(|h| s3.mul(g, h).unwrap() == s3.mul(h, g).unwrap())
        });
        assert!(!commute);
    }
}

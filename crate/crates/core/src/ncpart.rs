//! Non-crossing partitions between a row of `k` upper and `l` lower points,
//! their category operations and the decorated admissibility rules.
//!
//! Points are drawn on the boundary of a rectangle, so a partition is
//! non-crossing exactly when it is non-crossing for the circular order
//! `U1, …, Uk, Ll, …, L1`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::{GroupCtx, GroupElement};

/// Default bound on `k + l` for enumeration (`Catalan(12) = 208012`).
pub const DEFAULT_ENUM_LIMIT: usize = 12;

/// A point of a diagram; indices are zero based, tokens (`U1`, `L3`) one based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Point {
    Upper(usize),
    Lower(usize),
}

impl Point {
    pub fn token(self) -> String {
        match self {
            Point::Upper(i) => format!("U{}", i + 1),
            Point::Lower(j) => format!("L{}", j + 1),
        }
    }

    pub fn parse(token: &str) -> Result<Point> {
        let bad = || Error::Parse(format!("bad point token {token:?}, expected U<i> or L<j>"));
        let (row, idx) =
            token.split_at(token.char_indices().nth(1).map_or(token.len(), |(i, _)| i));
        let idx: usize = idx.parse().map_err(|_| bad())?;
        if idx == 0 {
            return Err(bad());
        }
        match row {
            "U" => Ok(Point::Upper(idx - 1)),
            "L" => Ok(Point::Lower(idx - 1)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.token())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NCPartition {
    k: usize,
    l: usize,
    blocks: Vec<Vec<Point>>,
}

impl NCPartition {
    /// Validates and canonicalizes: blocks sorted internally (upper row first)
    /// and ordered by their smallest point.
    pub fn new(k: usize, l: usize, blocks: Vec<Vec<Point>>) -> Result<Self> {
        let mut seen = vec![false; k + l];
        let mut blocks = blocks;
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::Invalid("empty block".into()));
            }
            b.sort();
            for &p in b.iter() {
                let idx = match p {
                    Point::Upper(i) if i < k => i,
                    Point::Lower(j) if j < l => k + j,
                    _ => {
                        return Err(Error::Invalid(format!(
                            "point {p} out of range for a ({k},{l}) diagram"
                        )))
                    }
                };
                if std::mem::replace(&mut seen[idx], true) {
                    return Err(Error::Invalid(format!("point {p} appears twice")));
                }
            }
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            let p = if i < k {
                Point::Upper(i)
            } else {
                Point::Lower(i - k)
            };
            return Err(Error::Invalid(format!("point {p} is in no block")));
        }
        blocks.sort();
        let p = Self { k, l, blocks };
        if let Some((a, b)) = p.crossing_pair() {
            return Err(Error::Invalid(format!(
                "blocks {} and {} cross",
                fmt_block(&p.blocks[a]),
                fmt_block(&p.blocks[b])
            )));
        }
        Ok(p)
    }

    fn from_sorted_unchecked(k: usize, l: usize, mut blocks: Vec<Vec<Point>>) -> Self {
        for b in &mut blocks {
            b.sort();
        }
        blocks.sort();
        Self { k, l, blocks }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn blocks(&self) -> &[Vec<Point>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// The vertical string `|` in `NC(1,1)`.
    pub fn identity_string() -> Self {
        Self::from_sorted_unchecked(1, 1, vec![vec![Point::Upper(0), Point::Lower(0)]])
    }

    /// `|^{⊗n}`.
    pub fn identity(n: usize) -> Self {
        Self::from_sorted_unchecked(
            n,
            n,
            (0..n)
                .map(|i| vec![Point::Upper(i), Point::Lower(i)])
                .collect(),
        )
    }

    /// The pair partition in `NC(0,2)`.
    pub fn cap() -> Self {
        Self::from_sorted_unchecked(0, 2, vec![vec![Point::Lower(0), Point::Lower(1)]])
    }

    /// The pair partition in `NC(2,0)`.
    pub fn cup() -> Self {
        Self::cap().involute()
    }

    /// The nested pairing `L_i ~ L_{2n+1-i}` in `NC(0,2n)`.
    pub fn nested_pairing(n: usize) -> Self {
        Self::from_sorted_unchecked(
            0,
            2 * n,
            (0..n)
                .map(|i| vec![Point::Lower(i), Point::Lower(2 * n - 1 - i)])
                .collect(),
        )
    }

    /// Position on the circle `U1, …, Uk, Ll, …, L1`.
    pub fn circular_position(&self, p: Point) -> usize {
        match p {
            Point::Upper(i) => i,
            Point::Lower(j) => self.k + (self.l - 1 - j),
        }
    }

    /// Index of the block containing each point, upper row then lower row.
    pub fn block_labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.k + self.l];
        for (b, block) in self.blocks.iter().enumerate() {
            for &p in block {
                labels[self.flat_index(p)] = b;
            }
        }
        labels
    }

    fn flat_index(&self, p: Point) -> usize {
        match p {
            Point::Upper(i) => i,
            Point::Lower(j) => self.k + j,
        }
    }

    fn crossing_pair(&self) -> Option<(usize, usize)> {
        let n = self.k + self.l;
        let mut circ = vec![0usize; n];
        for (b, block) in self.blocks.iter().enumerate() {
            for &p in block {
                circ[self.circular_position(p)] = b;
            }
        }
        find_crossing(&circ)
    }

    pub fn is_noncrossing(&self) -> bool {
        self.crossing_pair().is_none()
    }

    /// Horizontal concatenation, `q` to the right of `self`.
    pub fn tensor(&self, q: &NCPartition) -> NCPartition {
        let shift = |p: Point| match p {
            Point::Upper(i) => Point::Upper(i + self.k),
            Point::Lower(j) => Point::Lower(j + self.l),
        };
        let mut blocks = self.blocks.clone();
        blocks.extend(
            q.blocks
                .iter()
                .map(|b| b.iter().map(|&p| shift(p)).collect()),
        );
        Self::from_sorted_unchecked(self.k + q.k, self.l + q.l, blocks)
    }

    /// Upside-down turning.
    pub fn involute(&self) -> NCPartition {
        let flip = |p: Point| match p {
            Point::Upper(i) => Point::Lower(i),
            Point::Lower(j) => Point::Upper(j),
        };
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&p| flip(p)).collect())
            .collect();
        Self::from_sorted_unchecked(self.l, self.k, blocks)
    }

    /// Vertical concatenation `self ∘ q` with `q ∈ NC(k,l)` on top of
    /// `self ∈ NC(l,m)`. Returns the composite in `NC(k,m)` and the number of
    /// blocks that meet only the middle row.
    pub fn compose(&self, q: &NCPartition) -> Result<(NCPartition, usize)> {
        if q.l != self.k {
            return Err(Error::Shape(format!(
                "cannot compose: lower row of the top diagram has {} points, upper row of the bottom diagram has {}",
                q.l, self.k
            )));
        }
        let (k, l, m) = (q.k, q.l, self.l);
        let mut uf = UnionFind::new(k + l + m);
        let top = |p: Point| match p {
            Point::Upper(i) => i,
            Point::Lower(j) => k + j,
        };
        let bottom = |p: Point| match p {
            Point::Upper(j) => k + j,
            Point::Lower(r) => k + l + r,
        };
        for b in &q.blocks {
            for w in b.windows(2) {
                uf.union(top(w[0]), top(w[1]));
            }
        }
        for b in &self.blocks {
            for w in b.windows(2) {
                uf.union(bottom(w[0]), bottom(w[1]));
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<Point>> = Default::default();
        for i in 0..k {
            groups.entry(uf.find(i)).or_default().push(Point::Upper(i));
        }
        for r in 0..m {
            groups
                .entry(uf.find(k + l + r))
                .or_default()
                .push(Point::Lower(r));
        }
        let mut middle_roots: Vec<usize> = (k..k + l).map(|j| uf.find(j)).collect();
        middle_roots.sort_unstable();
        middle_roots.dedup();
        let closed = middle_roots
            .iter()
            .filter(|r| !groups.contains_key(r))
            .count();
        Ok((
            Self::from_sorted_unchecked(k, m, groups.into_values().collect()),
            closed,
        ))
    }

    pub fn to_json(&self) -> PartitionJson {
        PartitionJson {
            k: self.k,
            l: self.l,
            blocks: self
                .blocks
                .iter()
                .map(|b| b.iter().map(|p| p.token()).collect())
                .collect(),
        }
    }

    pub fn from_json(json: &PartitionJson) -> Result<Self> {
        let blocks = json
            .blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|t| Point::parse(t))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(json.k, json.l, blocks)
    }
}

impl fmt::Display for NCPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self.blocks.iter().map(|b| fmt_block(b)).collect();
        write!(f, "({},{})[{}]", self.k, self.l, blocks.join(" "))
    }
}

fn fmt_block(b: &[Point]) -> String {
    let pts: Vec<String> = b.iter().map(|p| p.token()).collect();
    format!("{{{}}}", pts.join(","))
}

/// Two distinct labels interleaving as `a b a b` along the sequence.
pub(crate) fn find_crossing(labels: &[usize]) -> Option<(usize, usize)> {
    let n = labels.len();
    for a in 0..n {
        for b in a + 1..n {
            if labels[b] == labels[a] {
                continue;
            }
            for c in b + 1..n {
                if labels[c] != labels[a] {
                    continue;
                }
                for d in c + 1..n {
                    if labels[d] == labels[b] {
                        return Some((labels[a].min(labels[b]), labels[a].max(labels[b])));
                    }
                }
            }
        }
    }
    None
}

/// `{"k": k, "l": l, "blocks": [["U1", "L2"], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionJson {
    pub k: usize,
    pub l: usize,
    pub blocks: Vec<Vec<String>>,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Non-crossing set partitions of the circular positions `from..to`.
fn nc_intervals(from: usize, to: usize) -> Vec<Vec<Vec<usize>>> {
    if from >= to {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    // `from` is a singleton
    for mut rest in nc_intervals(from + 1, to) {
        rest.insert(0, vec![from]);
        out.push(rest);
    }
    // `c` is the next element in the block of `from`
    for c in from + 1..to {
        let inner = nc_intervals(from + 1, c);
        let outer = nc_intervals(c, to);
        for i in &inner {
            for o in &outer {
                let mut blocks = o.clone();
                let pos = blocks
                    .iter()
                    .position(|b| b[0] == c)
                    .expect("c heads its block");
                blocks[pos].insert(0, from);
                blocks.extend(i.iter().cloned());
                out.push(blocks);
            }
        }
    }
    out
}

/// All of `NC(k, l)` in a fixed order. Fails when `k + l` exceeds `limit`.
pub fn enumerate_nc_with_limit(k: usize, l: usize, limit: usize) -> Result<Vec<NCPartition>> {
    if k + l > limit {
        return Err(Error::LimitExceeded(format!(
            "NC({k},{l}) has Catalan({}) elements; enumeration is capped at k+l <= {limit}",
            k + l
        )));
    }
    let point_at = |c: usize| {
        if c < k {
            Point::Upper(c)
        } else {
            Point::Lower(k + l - 1 - c)
        }
    };
    Ok(nc_intervals(0, k + l)
        .into_iter()
        .map(|blocks| {
            let blocks = blocks
                .into_iter()
                .map(|b| b.into_iter().map(point_at).collect())
                .collect();
            NCPartition::from_sorted_unchecked(k, l, blocks)
        })
        .collect())
}

pub fn enumerate_nc(k: usize, l: usize) -> Result<Vec<NCPartition>> {
    enumerate_nc_with_limit(k, l, DEFAULT_ENUM_LIMIT)
}

/// Group elements attached to the upper and lower points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decoration {
    pub upper: Vec<GroupElement>,
    pub lower: Vec<GroupElement>,
}

impl Decoration {
    pub fn new(upper: Vec<GroupElement>, lower: Vec<GroupElement>) -> Self {
        Self { upper, lower }
    }

    pub fn at(&self, p: Point) -> &GroupElement {
        match p {
            Point::Upper(i) => &self.upper[i],
            Point::Lower(j) => &self.lower[j],
        }
    }
}

/// Which decorated diagrams count as morphisms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    /// In each block the product of upper decorations equals the product of
    /// lower decorations, both read left to right.
    NcGamma,
    /// `NcGamma` with at most one upper point and at least one lower point per block.
    NcGammaPrime,
    /// Per block, upper and lower decorations have equal sums modulo `s`.
    NcS(u64),
    /// `NcGamma` with every block decorated by a single `g` or its inverse.
    NcStar,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Flavor::NcGamma => f.write_str("nc_gamma"),
            Flavor::NcGammaPrime => f.write_str("nc_gamma_prime"),
            Flavor::NcS(s) => write!(f, "nc_s:{s}"),
            Flavor::NcStar => f.write_str("nc_star"),
        }
    }
}

impl std::str::FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Flavor> {
        match s {
            "nc_gamma" => Ok(Flavor::NcGamma),
            "nc_gamma_prime" => Ok(Flavor::NcGammaPrime),
            "nc_star" => Ok(Flavor::NcStar),
            _ => match s.strip_prefix("nc_s:").map(str::parse::<u64>) {
                Some(Ok(n)) if n >= 1 => Ok(Flavor::NcS(n)),
                _ => Err(Error::Parse(format!(
                    "unknown flavor {s:?}; expected nc_gamma, nc_gamma_prime, nc_star or nc_s:<s> with s >= 1"
                ))),
            },
        }
    }
}

fn block_products(
    block: &[Point],
    dec: &Decoration,
    ctx: &GroupCtx,
) -> Result<(GroupElement, GroupElement)> {
    let (mut up, mut down) = (ctx.identity(), ctx.identity());
    // blocks are sorted upper row first, each row left to right
    for &pt in block {
        let g = dec.at(pt);
        match pt {
            Point::Upper(_) => up = ctx.mul(&up, g)?,
            Point::Lower(_) => down = ctx.mul(&down, g)?,
        }
    }
    Ok((up, down))
}

fn residue(g: &GroupElement, s: u64, ctx: &GroupCtx) -> Result<u64> {
    match g {
        GroupElement::Residue(r) => Ok(r % s),
        GroupElement::Integer(a) => Ok(a.rem_euclid(s as i64) as u64),
        _ => Err(Error::Invalid(format!(
            "nc_s needs cyclic or integer decorations, got {}",
            ctx.format_element(g)
        ))),
    }
}

pub fn is_admissible(
    p: &NCPartition,
    dec: &Decoration,
    flavor: Flavor,
    ctx: &GroupCtx,
) -> Result<bool> {
    if dec.upper.len() != p.k || dec.lower.len() != p.l {
        return Err(Error::Shape(format!(
            "decoration has {}+{} points, diagram is ({},{})",
            dec.upper.len(),
            dec.lower.len(),
            p.k,
            p.l
        )));
    }
    for g in dec.upper.iter().chain(&dec.lower) {
        ctx.check(g)?;
    }
    for block in &p.blocks {
        match flavor {
            Flavor::NcS(s) => {
                let (mut up, mut down) = (0u64, 0u64);
                for &pt in block {
                    let r = residue(dec.at(pt), s, ctx)?;
                    match pt {
                        Point::Upper(_) => up = (up + r) % s,
                        Point::Lower(_) => down = (down + r) % s,
                    }
                }
                if up != down {
                    return Ok(false);
                }
            }
            _ => {
                let (up, down) = block_products(block, dec, ctx)?;
                if up != down {
                    return Ok(false);
                }
                if flavor == Flavor::NcGammaPrime {
                    let uppers = block
                        .iter()
                        .filter(|pt| matches!(pt, Point::Upper(_)))
                        .count();
                    if uppers > 1 || uppers == block.len() {
                        return Ok(false);
                    }
                }
                if flavor == Flavor::NcStar {
                    let g = dec.at(block[0]);
                    let g_inv = ctx.inv(g)?;
                    if !block.iter().all(|&pt| {
                        let h = dec.at(pt);
                        h == g || *h == g_inv
                    }) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Number of admissible diagrams in `NC(|upper|, |lower|)`.
pub fn count_admissible(
    upper: &[GroupElement],
    lower: &[GroupElement],
    flavor: Flavor,
    ctx: &GroupCtx,
) -> Result<u64> {
    let dec = Decoration::new(upper.to_vec(), lower.to_vec());
    let mut n = 0;
    for p in enumerate_nc(upper.len(), lower.len())? {
        if is_admissible(&p, &dec, flavor, ctx)? {
            n += 1;
        }
    }
    Ok(n)
}

/// The admissible diagrams themselves, in enumeration order.
pub fn admissible_partitions(
    upper: &[GroupElement],
    lower: &[GroupElement],
    flavor: Flavor,
    ctx: &GroupCtx,
) -> Result<Vec<NCPartition>> {
    let dec = Decoration::new(upper.to_vec(), lower.to_vec());
    let mut out = Vec::new();
    for p in enumerate_nc(upper.len(), lower.len())? {
        if is_admissible(&p, &dec, flavor, ctx)? {
            out.push(p);
        }
    }
    Ok(out)
}

//! The linear maps `T_p` attached to non-crossing partitions, their Gram
//! matrices and exact ranks.
//!
//! Tensor indices are big-endian: `e_{i_1} ⊗ … ⊗ e_{i_k}` sits at
//! `Σ_t i_t N^{k-t}`, so Kronecker products match horizontal concatenation.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::{GroupCtx, GroupElement};
use crate::ncpart::{admissible_partitions, Flavor, NCPartition};

/// Bound on rows, columns and stored entries of a single `T_p`.
pub const PARTITION_MAP_CAP: u128 = 1_000_000;
/// Bound on `N^{k+l}` for the direct Gram backend.
pub const DIRECT_GRAM_CAP: u128 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseExactMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), BigRational>,
}

impl SparseExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries.insert((i, i), BigRational::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, r: usize, c: usize) -> BigRational {
        self.entries
            .get(&(r, c))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) -> Result<()> {
        if r >= self.rows || c >= self.cols {
            return Err(Error::Shape(format!(
                "entry ({r},{c}) outside a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
        Ok(())
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &BigRational)> {
        self.entries.iter()
    }

    pub fn transpose(&self) -> Self {
        Self {
            rows: self.cols,
            cols: self.rows,
            entries: self
                .entries
                .iter()
                .map(|(&(r, c), v)| ((c, r), v.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        let mut out = Self::zeros(self.rows, self.cols);
        if !s.is_zero() {
            out.entries = self.entries.iter().map(|(&k, v)| (k, v * s)).collect();
        }
        out
    }

    /// `self · other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut by_row: HashMap<usize, Vec<(usize, &BigRational)>> = HashMap::new();
        for (&(r, c), v) in &other.entries {
            by_row.entry(r).or_default().push((c, v));
        }
        let mut acc: BTreeMap<(usize, usize), BigRational> = BTreeMap::new();
        for (&(i, k), a) in &self.entries {
            if let Some(row) = by_row.get(&k) {
                for &(j, b) in row {
                    *acc.entry((i, j)).or_insert_with(BigRational::zero) += a * b;
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Ok(Self {
            rows: self.rows,
            cols: other.cols,
            entries: acc,
        })
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Self) -> Self {
        let mut entries = BTreeMap::new();
        for (&(r1, c1), a) in &self.entries {
            for (&(r2, c2), b) in &other.entries {
                entries.insert((r1 * other.rows + r2, c1 * other.cols + c2), a * b);
            }
        }
        Self {
            rows: self.rows * other.rows,
            cols: self.cols * other.cols,
            entries,
        }
    }

    /// First position where the two matrices differ, with both values.
    pub fn first_difference(&self, other: &Self) -> Option<MatrixDifference> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Some(MatrixDifference::Shape {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let keys: std::collections::BTreeSet<_> =
            self.entries.keys().chain(other.entries.keys()).collect();
        keys.into_iter().find_map(|&(r, c)| {
            let (a, b) = (self.get(r, c), other.get(r, c));
            (a != b).then_some(MatrixDifference::Entry {
                row: r,
                col: c,
                left: a,
                right: b,
            })
        })
    }

    pub fn to_json(&self) -> SparseMatrixJson {
        SparseMatrixJson {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|(&(r, c), v)| (r, c, v.to_string()))
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatrixDifference {
    Shape {
        left: (usize, usize),
        right: (usize, usize),
    },
    Entry {
        row: usize,
        col: usize,
        left: BigRational,
        right: BigRational,
    },
}

impl std::fmt::Display for MatrixDifference {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MatrixDifference::Shape { left, right } => {
                write!(
                    f,
                    "shapes differ: {}x{} vs {}x{}",
                    left.0, left.1, right.0, right.1
                )
            }
            MatrixDifference::Entry {
                row,
                col,
                left,
                right,
            } => {
                write!(f, "entry ({row},{col}): {left} vs {right}")
            }
        }
    }
}

/// Sparse triplets `(row, col, value)` with values as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparseMatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, String)>,
}

fn checked_pow(n: u64, e: usize) -> u128 {
    (0..e).fold(1u128, |acc, _| acc.saturating_mul(n as u128))
}

/// `T_p` as an `N^l × N^k` 0/1 matrix: entry 1 exactly when the upper and
/// lower indices are constant on every block.
pub fn partition_map(p: &NCPartition, n: u64) -> Result<SparseExactMatrix> {
    if n == 0 {
        return Err(Error::Range("N must be at least 1".into()));
    }
    let (k, l, b) = (p.k(), p.l(), p.num_blocks());
    let size = checked_pow(n, k.max(l)).max(checked_pow(n, b));
    if size > PARTITION_MAP_CAP {
        return Err(Error::LimitExceeded(format!(
            "T_p for a ({k},{l}) diagram with {b} blocks at N={n} needs {size} entries, cap is {PARTITION_MAP_CAP}"
        )));
    }
    let labels = p.block_labels();
    let n_us = n as usize;
    let mut m = SparseExactMatrix::zeros(n_us.pow(l as u32), n_us.pow(k as u32));
    let mut values = vec![0usize; b];
    loop {
        let col = (0..k).fold(0, |acc, i| acc * n_us + values[labels[i]]);
        let row = (0..l).fold(0, |acc, j| acc * n_us + values[labels[k + j]]);
        m.entries.insert((row, col), BigRational::one());
        // mixed-radix increment over block values
        let mut d = 0;
        while d < b {
            values[d] += 1;
            if values[d] < n_us {
                break;
            }
            values[d] = 0;
            d += 1;
        }
        if d == b {
            break;
        }
    }
    Ok(m)
}

/// Outcome of one functor law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawCheck {
    pub law: &'static str,
    pub holds: bool,
    pub counterexample: Option<String>,
}

impl LawCheck {
    fn from_difference(law: &'static str, diff: Option<MatrixDifference>) -> Self {
        Self {
            law,
            holds: diff.is_none(),
            counterexample: diff.map(|d| d.to_string()),
        }
    }
}

/// `T_{p⊗q} = T_p ⊗ T_q`.
pub fn check_tensor_law(p: &NCPartition, q: &NCPartition, n: u64) -> Result<LawCheck> {
    let lhs = partition_map(&p.tensor(q), n)?;
    let rhs = partition_map(p, n)?.kron(&partition_map(q, n)?);
    Ok(LawCheck::from_difference(
        "tensor",
        lhs.first_difference(&rhs),
    ))
}

/// `N^{b(p,q)} T_{pq} = T_p T_q` for `q` on top of `p`.
pub fn check_composition_law(p: &NCPartition, q: &NCPartition, n: u64) -> Result<LawCheck> {
    let (pq, closed) = p.compose(q)?;
    let factor = BigRational::from_integer(BigInt::from(n).pow(closed as u32));
    let lhs = partition_map(&pq, n)?.scale(&factor);
    let rhs = partition_map(p, n)?.mul(&partition_map(q, n)?)?;
    Ok(LawCheck::from_difference(
        "composition",
        lhs.first_difference(&rhs),
    ))
}

/// `T_{p*} = T_p^t`.
pub fn check_involution_law(p: &NCPartition, n: u64) -> Result<LawCheck> {
    let lhs = partition_map(&p.involute(), n)?;
    let rhs = partition_map(p, n)?.transpose();
    Ok(LawCheck::from_difference(
        "involution",
        lhs.first_difference(&rhs),
    ))
}

/// All three laws for a composable pair (`q` on top of `p`).
pub fn check_functor_laws(p: &NCPartition, q: &NCPartition, n: u64) -> Result<Vec<LawCheck>> {
    Ok(vec![
        check_tensor_law(p, q, n)?,
        check_composition_law(p, q, n)?,
        check_involution_law(p, n)?,
        check_involution_law(q, n)?,
    ])
}

/// Both snake identities `(T_r^* ⊗ id)(id ⊗ T_r) = id = (id ⊗ T_r^*)(T_r ⊗ id)`
/// for the nested pairing `r ∈ NC(0,2k)`.
pub fn conjugate_equations_check(k: usize, n: u64) -> Result<bool> {
    let r = partition_map(&NCPartition::nested_pairing(k), n)?;
    let id_size = checked_pow(n, k);
    if id_size.saturating_pow(3) > PARTITION_MAP_CAP {
        return Err(Error::LimitExceeded(format!(
            "snake identities for k={k}, N={n} act on N^(3k) = {} coordinates, cap is {PARTITION_MAP_CAP}",
            id_size.saturating_pow(3)
        )));
    }
    let id = SparseExactMatrix::identity(id_size as usize);
    let rt = r.transpose();
    let left = rt.kron(&id).mul(&id.kron(&r))?;
    let right = id.kron(&rt).mul(&r.kron(&id))?;
    Ok(left == id && right == id)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GramBackend {
    /// Hilbert–Schmidt inner products of the explicit matrices.
    Direct,
    /// Powers of `N` read off from diagram joins.
    Combinatorial,
}

impl std::str::FromStr for GramBackend {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "direct" => Ok(GramBackend::Direct),
            "combinatorial" => Ok(GramBackend::Combinatorial),
            _ => Err(Error::Parse(format!(
                "unknown Gram backend {s:?}; expected direct or combinatorial"
            ))),
        }
    }
}

/// Square integer matrix of inner products `⟨T_p, T_q⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramMatrix {
    pub n_param: u64,
    pub entries: Vec<Vec<BigInt>>,
}

/// `{"n": size, "N": parameter, "rows": [[decimal, …], …]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GramJson {
    pub n: usize,
    #[serde(rename = "N")]
    pub param: u64,
    pub rows: Vec<Vec<String>>,
}

impl GramMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    pub fn rank(&self) -> usize {
        bareiss_rank(&self.entries)
    }

    pub fn to_json(&self) -> GramJson {
        GramJson {
            n: self.size(),
            param: self.n_param,
            rows: self
                .entries
                .iter()
                .map(|r| r.iter().map(|v| v.to_string()).collect())
                .collect(),
        }
    }
}

/// Number of blocks of the join of two partitions of the same shape.
pub fn join_blocks(p: &NCPartition, q: &NCPartition) -> usize {
    let (lp, lq) = (p.block_labels(), q.block_labels());
    let npts = lp.len();
    let mut parent: Vec<usize> = (0..npts).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for labels in [&lp, &lq] {
        let mut first: HashMap<usize, usize> = HashMap::new();
        for (i, &b) in labels.iter().enumerate() {
            let head = *first.entry(b).or_insert(i);
            let (a, c) = (find(&mut parent, head), find(&mut parent, i));
            parent[a.max(c)] = a.min(c);
        }
    }
    (0..npts).filter(|&i| find(&mut parent, i) == i).count()
}

fn combinatorial_entry(p: &NCPartition, q: &NCPartition, n: u64) -> Result<BigInt> {
    let exponent = if p.k() == 0 {
        // ⟨T_p, T_q⟩ = T_p^* T_q = N^{b(p*, q)} for maps out of the trivial object
        p.involute().compose(q)?.1
    } else {
        join_blocks(p, q)
    };
    Ok(BigInt::from(n).pow(exponent as u32))
}

fn direct_entry(tp: &SparseExactMatrix, tq: &SparseExactMatrix) -> BigInt {
    let (small, large) = if tp.nnz() <= tq.nnz() {
        (tp, tq)
    } else {
        (tq, tp)
    };
    let mut acc = BigRational::zero();
    for (key, v) in &small.entries {
        if let Some(w) = large.entries.get(key) {
            acc += v * w;
        }
    }
    acc.to_integer()
}

pub fn gram_matrix(ps: &[NCPartition], n: u64, backend: GramBackend) -> Result<GramMatrix> {
    if n == 0 {
        return Err(Error::Range("N must be at least 1".into()));
    }
    if let Some(p0) = ps.first() {
        if let Some(bad) = ps.iter().find(|p| (p.k(), p.l()) != (p0.k(), p0.l())) {
            return Err(Error::Shape(format!(
                "Gram matrix needs one shape, got ({},{}) and ({},{})",
                p0.k(),
                p0.l(),
                bad.k(),
                bad.l()
            )));
        }
    }
    let m = ps.len();
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| (i..m).map(move |j| (i, j))).collect();
    let values: Vec<BigInt> = match backend {
        GramBackend::Combinatorial => pairs
            .par_iter()
            .map(|&(i, j)| combinatorial_entry(&ps[i], &ps[j], n))
            .collect::<Result<_>>()?,
        GramBackend::Direct => {
            if let Some(p0) = ps.first() {
                let scanned = checked_pow(n, p0.k() + p0.l());
                if scanned > DIRECT_GRAM_CAP {
                    return Err(Error::LimitExceeded(format!(
                        "direct Gram backend scans N^(k+l) = {scanned} entries, cap is {DIRECT_GRAM_CAP}"
                    )));
                }
            }
            let maps = ps
                .par_iter()
                .map(|p| partition_map(p, n))
                .collect::<Result<Vec<_>>>()?;
            pairs
                .par_iter()
                .map(|&(i, j)| direct_entry(&maps[i], &maps[j]))
                .collect()
        }
    };
    let mut entries = vec![vec![BigInt::zero(); m]; m];
    for (&(i, j), v) in pairs.iter().zip(values) {
        entries[j][i] = v.clone();
        entries[i][j] = v;
    }
    Ok(GramMatrix {
        n_param: n,
        entries,
    })
}

/// Rank over the rationals by fraction-free (Bareiss) elimination.
pub fn bareiss_rank(m: &[Vec<BigInt>]) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        for r in rank + 1..rows {
            for j in c + 1..cols {
                let v = (&a[r][j] * &a[rank][c] - &a[r][c] * &a[rank][j]) / &prev;
                a[r][j] = v;
            }
            a[r][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
    }
    rank
}

/// Partition count and exact rank for a decorated Hom space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomDimension {
    pub count: u64,
    pub rank: usize,
}

/// Rank of the span of `T_p` over the `NC_Γ`-admissible diagrams between
/// the given decorations.
pub fn hom_dimension(
    upper: &[GroupElement],
    lower: &[GroupElement],
    ctx: &GroupCtx,
    n: u64,
) -> Result<HomDimension> {
    let ps = admissible_partitions(upper, lower, Flavor::NcGamma, ctx)?;
    let gram = gram_matrix(&ps, n, GramBackend::Combinatorial)?;
    Ok(HomDimension {
        count: ps.len() as u64,
        rank: gram.rank(),
    })
}

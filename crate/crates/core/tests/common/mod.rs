//! Independent reference implementations used by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use wreath_core::groups::{GroupCtx, GroupElement};
use wreath_core::words::Word;

/// Every set partition of `n` points as a restricted growth string.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(i: usize, n: usize, cur: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<usize>>) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        for b in 0..=max {
            cur.push(b);
            go(i + 1, n, cur, if b == max { max + 1 } else { max }, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::new(), 0, &mut out);
    out
}

/// Relabels blocks by order of first appearance.
pub fn canonical(labels: &[usize]) -> Vec<usize> {
    let mut map = HashMap::new();
    labels
        .iter()
        .map(|b| {
            let next = map.len();
            *map.entry(*b).or_insert(next)
        })
        .collect()
}

/// Points `0..k` are the upper row left to right, `k..k+l` the lower row.
/// Around the circle the lower row is read right to left.
pub fn is_noncrossing(labels: &[usize], k: usize, l: usize) -> bool {
    let mut circ = Vec::with_capacity(k + l);
    circ.extend_from_slice(&labels[..k]);
    circ.extend(labels[k..].iter().rev());
    let n = circ.len();
    for a in 0..n {
        for b in a + 1..n {
            if circ[b] == circ[a] {
                continue;
            }
            for c in b + 1..n {
                if circ[c] != circ[a] {
                    continue;
                }
                for d in c + 1..n {
                    if circ[d] == circ[b] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn nc_partitions(k: usize, l: usize) -> Vec<Vec<usize>> {
    set_partitions(k + l)
        .into_iter()
        .filter(|p| is_noncrossing(p, k, l))
        .collect()
}

pub fn num_blocks(labels: &[usize]) -> usize {
    labels.iter().max().map_or(0, |m| m + 1)
}

/// Upper and lower decorations multiply left to right within each block and
/// must agree. With `prime`, each block also has at most one upper point and
/// at least one lower point.
pub fn admissible(
    labels: &[usize],
    upper: &[GroupElement],
    lower: &[GroupElement],
    ctx: &GroupCtx,
    prime: bool,
) -> bool {
    let k = upper.len();
    for b in 0..num_blocks(labels) {
        let (mut up, mut down) = (ctx.identity(), ctx.identity());
        let (mut n_up, mut n_down) = (0, 0);
        for (i, g) in upper.iter().enumerate() {
            if labels[i] == b {
                up = ctx.mul(&up, g).unwrap();
                n_up += 1;
            }
        }
        for (j, h) in lower.iter().enumerate() {
            if labels[k + j] == b {
                down = ctx.mul(&down, h).unwrap();
                n_down += 1;
            }
        }
        if up != down || (prime && (n_up > 1 || n_down == 0)) {
            return false;
        }
    }
    true
}

pub fn decorated_count(
    upper: &[GroupElement],
    lower: &[GroupElement],
    ctx: &GroupCtx,
    prime: bool,
) -> u64 {
    nc_partitions(upper.len(), lower.len())
        .iter()
        .filter(|p| admissible(p, upper, lower, ctx, prime))
        .count() as u64
}

/// Number of blocks of the finest partition coarser than both.
pub fn join_blocks(p: &[usize], q: &[usize]) -> usize {
    let n = p.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    for labels in [p, q] {
        let mut first: HashMap<usize, usize> = HashMap::new();
        for (i, b) in labels.iter().enumerate() {
            match first.get(b) {
                Some(&j) => {
                    let (a, c) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a] = c;
                }
                None => {
                    first.insert(*b, i);
                }
            }
        }
    }
    (0..n).filter(|&i| find(&mut parent, i) == i).count()
}

pub fn gram(ps: &[Vec<usize>], n: u64) -> Vec<Vec<BigInt>> {
    ps.iter()
        .map(|p| {
            ps.iter()
                .map(|q| BigInt::from(n).pow(join_blocks(p, q) as u32))
                .collect()
        })
        .collect()
}

/// Rank by Gaussian elimination over the rationals.
pub fn rank(m: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, piv);
        let pivot = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = &row[c] / &pivot[c];
                for (x, p) in row[c..].iter_mut().zip(&pivot[c..]) {
                    *x -= &f * p;
                }
            }
        }
        r += 1;
    }
    r
}

pub fn catalan(n: usize) -> u64 {
    let mut c = 1u64;
    for i in 0..n as u64 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

/// Big-endian digits of `x` in base `n`.
fn digits(mut x: usize, n: usize, len: usize) -> Vec<usize> {
    let mut d = vec![0; len];
    for slot in d.iter_mut().rev() {
        *slot = x % n;
        x /= n;
    }
    d
}

/// Dense `N^l × N^k` matrix of `T_p`.
pub fn dense_t(labels: &[usize], k: usize, l: usize, n: usize) -> Vec<Vec<i64>> {
    let rows = n.pow(l as u32);
    let cols = n.pow(k as u32);
    let uppers: Vec<Vec<usize>> = (0..cols).map(|c| digits(c, n, k)).collect();
    let mut val = vec![usize::MAX; num_blocks(labels)];
    let mut m = vec![vec![0i64; cols]; rows];
    for (r, row) in m.iter_mut().enumerate() {
        let lower = digits(r, n, l);
        for (upper, cell) in uppers.iter().zip(row.iter_mut()) {
            val.fill(usize::MAX);
            let ok = upper.iter().chain(&lower).zip(labels).all(|(&i, &b)| {
                if val[b] == usize::MAX {
                    val[b] = i;
                }
                val[b] == i
            });
            *cell = ok as i64;
        }
    }
    m
}

pub fn dense_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|t| row[t] * b[t][j]).sum())
                .collect()
        })
        .collect()
}

pub fn dense_kron(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let (br, bc) = (b.len(), b.first().map_or(0, Vec::len));
    let (ar, ac) = (a.len(), a.first().map_or(0, Vec::len));
    let mut out = vec![vec![0; ac * bc]; ar * br];
    for i in 0..ar {
        for j in 0..ac {
            for p in 0..br {
                for q in 0..bc {
                    out[i * br + p][j * bc + q] = a[i][j] * b[p][q];
                }
            }
        }
    }
    out
}

pub fn dense_transpose(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| a.iter().map(|r| r[j]).collect())
        .collect()
}

pub type Multiset = BTreeMap<Vec<u64>, i64>;

/// Fusion of words over `Z_s`: for every splitting `x = v z`, `y = z̄ w`
/// add `v w`, and also `v · w` when both are nonempty.
pub fn cyclic_fuse(x: &[u64], y: &[u64], s: u64) -> Multiset {
    let mut out = Multiset::new();
    for t in 0..=x.len().min(y.len()) {
        let (v, z) = x.split_at(x.len() - t);
        let (zbar, w) = y.split_at(t);
        let expected: Vec<u64> = z.iter().rev().map(|a| (s - a % s) % s).collect();
        if zbar != expected.as_slice() {
            continue;
        }
        let mut vw = v.to_vec();
        vw.extend_from_slice(w);
        *out.entry(vw).or_insert(0) += 1;
        if !v.is_empty() && !w.is_empty() {
            let mut f = v[..v.len() - 1].to_vec();
            f.push((v[v.len() - 1] + w[0]) % s);
            f.extend_from_slice(&w[1..]);
            *out.entry(f).or_insert(0) += 1;
        }
    }
    out
}

pub fn residues(w: &Word) -> Vec<u64> {
    w.letters()
        .iter()
        .map(|g| match g {
            GroupElement::Residue(r) => *r,
            other => panic!("not a residue: {other:?}"),
        })
        .collect()
}

pub fn residue_word(xs: &[u64]) -> Word {
    Word(xs.iter().map(|&r| GroupElement::Residue(r)).collect())
}

/// Value of the dimension polynomial of `w` at `x`, from the recursion
/// `b_{g_1..g_k} = b_{g_1..g_{k-1}} ⊗ b_{g_k} - b_{g_1..g_{k-1} g_k} - [g_{k-1} g_k = e] b_{g_1..g_{k-2}}`
/// with `b_g ↦ x - [g = e]`.
pub fn dim_recursive<T>(
    w: &[GroupElement],
    ctx: &GroupCtx,
    x: &T,
    memo: &mut HashMap<Vec<GroupElement>, T>,
) -> T
where
    T: Clone + One + std::ops::Sub<Output = T> + std::ops::Mul<Output = T>,
{
    if let Some(v) = memo.get(w) {
        return v.clone();
    }
    let k = w.len();
    let value = match k {
        0 => T::one(),
        1 => {
            if ctx.is_identity(&w[0]) {
                x.clone() - T::one()
            } else {
                x.clone()
            }
        }
        _ => {
            let head = dim_recursive(&w[..k - 1], ctx, x, memo);
            let last = dim_recursive(&w[k - 1..], ctx, x, memo);
            let prod = ctx.mul(&w[k - 2], &w[k - 1]).unwrap();
            let mut fused = w[..k - 2].to_vec();
            fused.push(prod.clone());
            let mut v = head * last - dim_recursive(&fused, ctx, x, memo);
            if ctx.is_identity(&prod) {
                v = v - dim_recursive(&w[..k - 2], ctx, x, memo);
            }
            v
        }
    };
    memo.insert(w.to_vec(), value.clone());
    value
}

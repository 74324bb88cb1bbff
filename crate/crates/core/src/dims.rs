//! Dimensions and multiplier eigenvalues from the `a`-exponents of a word.
//!
//! With `A_0 = 1`, `A_1 = X`, `X A_k = A_{k+1} + A_{k-1}`, a word with
//! normal form `a^{l_1} z a^{l_2} … a^{l_k}` has `Q = ∏ A_{l_i}`, an even
//! polynomial, and dimension `P(N)` where `P(X²) = Q(X)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::groups::GroupCtx;
use crate::words::{MPrimeWord, Word};

/// Relative tolerance for the floating-point multiplier eigenvalues.
pub const MULTIPLIER_REL_TOL: f64 = 1e-9;

/// Dense polynomial with big-integer coefficients, lowest degree first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    /// Multiplication by `X`.
    pub fn shift(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero()];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Only even-degree terms are nonzero.
    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(|c| c.is_zero())
    }

    /// `P` with `P(X²) = self(X)`; `None` unless `self` is even.
    pub fn even_part_substitution(&self) -> Option<Self> {
        self.is_even()
            .then(|| Self::from_coeffs(self.coeffs.iter().step_by(2).cloned().collect()))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            let mono = match i {
                0 => String::new(),
                1 => "X".into(),
                _ => format!("X^{i}"),
            };
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{a}{mono}")?;
            }
        }
        Ok(())
    }
}

/// The dilated Chebyshev polynomial `A_k`.
pub fn chebyshev_a(k: usize) -> IntPolynomial {
    let (mut prev, mut cur) = (IntPolynomial::one(), IntPolynomial::x());
    if k == 0 {
        return prev;
    }
    for _ in 1..k {
        let next = cur.shift().sub(&prev);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `Q = ∏ A_{l_i}` together with `P`, `P(X²) = Q(X)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterPoly {
    pub q: IntPolynomial,
    pub p: IntPolynomial,
}

pub fn character_polynomial(alpha: &MPrimeWord, ctx: &GroupCtx) -> Result<CharacterPoly> {
    if !alpha.in_submonoid(ctx) {
        return Err(Error::NotInSubmonoid(alpha.display(ctx)));
    }
    let q = alpha
        .exponents
        .iter()
        .fold(IntPolynomial::one(), |acc, &l| {
            acc.mul(&chebyshev_a(l as usize))
        });
    let p = q.even_part_substitution().ok_or_else(|| {
        Error::Internal(format!(
            "character polynomial {q} of {} is not even",
            alpha.display(ctx)
        ))
    })?;
    Ok(CharacterPoly { q, p })
}

/// Exact `dim ω(w)` at parameter `N`.
pub fn dimension(w: &Word, ctx: &GroupCtx, n: u64) -> Result<BigInt> {
    w.check(ctx)?;
    let cp = character_polynomial(&w.to_mprime(ctx), ctx)?;
    Ok(cp.p.eval(&BigInt::from(n)))
}

fn check_multiplier_range(x: f64, n: u64) -> Result<()> {
    let ok = match n {
        0..=3 => false,
        4 => (0.0..=4.0).contains(&x),
        _ => x >= 4.0 && x <= n as f64,
    };
    if ok {
        Ok(())
    } else {
        let allowed = match n {
            0..=3 => "N must be at least 4".to_string(),
            4 => "x must lie in [0, 4] for N = 4".to_string(),
            _ => format!("x must lie in [4, {n}]"),
        };
        Err(Error::Range(format!(
            "multiplier parameter x = {x} with N = {n}: {allowed}"
        )))
    }
}

/// `A_0(t), …, A_max(t)` in floating point.
fn chebyshev_values(t: f64, max: usize) -> Vec<f64> {
    let mut v = Vec::with_capacity(max + 1);
    v.push(1.0);
    if max >= 1 {
        v.push(t);
    }
    for k in 1..max {
        v.push(t * v[k] - v[k - 1]);
    }
    v
}

/// `A_l(√x) / A_l(√N)` for `l = 0..=max`.
fn exponent_ratios(x: f64, n: u64, max: usize) -> Vec<f64> {
    let num = chebyshev_values(x.sqrt(), max);
    let den = chebyshev_values((n as f64).sqrt(), max);
    num.iter().zip(&den).map(|(a, b)| a / b).collect()
}

/// `∏ A_{l_i}(√x) / A_{l_i}(√N)` over the given exponents.
pub fn multiplier_from_exponents(exponents: &[u64], x: f64, n: u64) -> Result<f64> {
    check_multiplier_range(x, n)?;
    if x == n as f64 {
        return Ok(1.0);
    }
    let max = exponents.iter().copied().max().unwrap_or(0) as usize;
    let ratios = exponent_ratios(x, n, max);
    Ok(exponents.iter().map(|&l| ratios[l as usize]).product())
}

/// The eigenvalue `c_x(w)` of the multiplier attached to evaluation at `x`.
/// Exactly `1` at `x = N`.
pub fn multiplier_eigenvalue(w: &Word, ctx: &GroupCtx, x: f64, n: u64) -> Result<f64> {
    w.check(ctx)?;
    multiplier_from_exponents(&w.to_mprime(ctx).exponents, x, n)
}

/// Every word with `L(w) ≤ R`.
pub fn ball(r: u64, ctx: &GroupCtx) -> Result<Vec<Word>> {
    let alphabet = ctx.enumerate()?;
    // L(w) = 2|w|
    let max_len = (r / 2) as usize;
    Ok(Word::all_up_to(&alphabet, max_len)
        .into_iter()
        .filter(|w| w.l_length(ctx) <= r)
        .collect())
}

/// One nonempty shell `L(w) = R` of the decay profile.
#[derive(Clone, Debug, PartialEq)]
pub struct ShellStat {
    pub r: u64,
    pub shell_size: BigInt,
    pub max_abs_c: f64,
}

fn check_decay_args(x: f64, n: u64, ctx: &GroupCtx) -> Result<u64> {
    check_multiplier_range(x, n)?;
    if !(x >= 4.0 && x < n as f64) {
        return Err(Error::Range(format!(
            "decay profile needs 4 <= x < N, got x = {x}, N = {n}"
        )));
    }
    ctx.order()
        .ok_or_else(|| Error::NotEnumerable(format!("{ctx} is infinite, shells are not finite")))
}

/// Shell maxima of `|c_x|` for `R = 0, 2, …, R_max`; odd shells are empty.
///
/// A shell of length `m = R/2` words is grouped by exponent pattern: `a^{2m}`
/// for the all-`e` word, otherwise `l_1, l_k` odd and interior `l_i` even and
/// at least 2, each pattern carrying `(|Γ|-1)^{k-1}` words. Maxima are found
/// by dynamic programming over the exponent sum.
pub fn decay_profile(x: f64, n: u64, ctx: &GroupCtx, r_max: u64) -> Result<Vec<ShellStat>> {
    let order = check_decay_args(x, n, ctx)?;
    let top = r_max as usize;
    let f: Vec<f64> = exponent_ratios(x, n, top)
        .into_iter()
        .map(f64::abs)
        .collect();
    // tail[s]: best product over (even >= 2)* followed by one odd part, summing to s
    let mut tail = vec![f64::NEG_INFINITY; top + 1];
    for s in 1..=top {
        let mut best = if s % 2 == 1 { f[s] } else { f64::NEG_INFINITY };
        for e in (2..s).step_by(2) {
            best = best.max(f[e] * tail[s - e]);
        }
        tail[s] = best;
    }
    let mut out = Vec::new();
    for r in (0..=top).step_by(2) {
        let mut best = f[r];
        if order >= 2 {
            for l1 in (1..r).step_by(2) {
                best = best.max(f[l1] * tail[r - l1]);
            }
        }
        out.push(ShellStat {
            r: r as u64,
            shell_size: BigInt::from(order).pow((r / 2) as u32),
            max_abs_c: best,
        });
    }
    Ok(out)
}

/// The same profile by enumerating every word of the ball.
pub fn decay_profile_bruteforce(
    x: f64,
    n: u64,
    ctx: &GroupCtx,
    r_max: u64,
) -> Result<Vec<ShellStat>> {
    check_decay_args(x, n, ctx)?;
    let words = ball(r_max, ctx)?;
    let values: Vec<(u64, f64)> = words
        .par_iter()
        .map(|w| Ok((w.l_length(ctx), multiplier_eigenvalue(w, ctx, x, n)?.abs())))
        .collect::<Result<_>>()?;
    let mut out: Vec<ShellStat> = (0..=r_max)
        .step_by(2)
        .map(|r| ShellStat {
            r,
            shell_size: BigInt::zero(),
            max_abs_c: f64::NEG_INFINITY,
        })
        .collect();
    for (l, c) in values {
        let s = &mut out[(l / 2) as usize];
        s.shell_size += 1;
        s.max_abs_c = s.max_abs_c.max(c);
    }
    Ok(out)
}

/// `R,shell_size,max_abs_c` with a header row.
pub fn decay_csv(profile: &[ShellStat]) -> String {
    let mut s = String::from("R,shell_size,max_abs_c\n");
    for row in profile {
        s.push_str(&format!(
            "{},{},{:e}\n",
            row.r, row.shell_size, row.max_abs_c
        ));
    }
    s
}

/// `(word, L, dim)` for every word of length at most `max_len`.
pub fn dimension_table(ctx: &GroupCtx, n: u64, max_len: usize) -> Result<Vec<(Word, u64, BigInt)>> {
    let alphabet = ctx.enumerate()?;
    Word::all_up_to(&alphabet, max_len)
        .into_par_iter()
        .map(|w| {
            let d = dimension(&w, ctx, n)?;
            let l = w.l_length(ctx);
            Ok((w, l, d))
        })
        .collect()
}

/// `word,L,dim` with a header row; words in bracket syntax, quoted.
pub fn dimension_csv(rows: &[(Word, u64, BigInt)], ctx: &GroupCtx) -> String {
    let mut s = String::from("word,L,dim\n");
    for (w, l, d) in rows {
        s.push_str(&format!("\"{}\",{l},{d}\n", w.display(ctx)));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::GroupElement;

    fn r(x: u64) -> GroupElement {
        GroupElement::Residue(x)
    }

    #[test]
    fn chebyshev_small() {
        assert_eq!(chebyshev_a(0), IntPolynomial::one());
        assert_eq!(chebyshev_a(1), IntPolynomial::x());
        assert_eq!(chebyshev_a(2), IntPolynomial::from_i64(&[-1, 0, 1]));
        assert_eq!(chebyshev_a(3), IntPolynomial::from_i64(&[0, -2, 0, 1]));
        assert_eq!(chebyshev_a(4), IntPolynomial::from_i64(&[1, 0, -3, 0, 1]));
        assert_eq!(chebyshev_a(4).to_string(), "X^4 - 3X^2 + 1");
    }

    #[test]
    fn character_polynomials() {
        let z2 = GroupCtx::Cyclic(2);
        let cp = character_polynomial(&Word(vec![r(1)]).to_mprime(&z2), &z2).unwrap();
        assert_eq!(cp.p, IntPolynomial::x());
        let cp = character_polynomial(&Word(vec![r(0)]).to_mprime(&z2), &z2).unwrap();
        assert_eq!(cp.p, IntPolynomial::from_i64(&[-1, 1]));
        let cp = character_polynomial(&MPrimeWord::unit(), &z2).unwrap();
        assert_eq!(cp.p, IntPolynomial::one());
        assert!(character_polynomial(&MPrimeWord::a_power(3), &z2).is_err());
    }

    #[test]
    fn dimensions() {
        let z3 = GroupCtx::Cyclic(3);
        for n in 1..10 {
            assert_eq!(
                dimension(&Word(vec![r(1)]), &z3, n).unwrap(),
                BigInt::from(n)
            );
            assert_eq!(
                dimension(&Word(vec![r(0)]), &z3, n).unwrap(),
                BigInt::from(n as i64 - 1)
            );
        }
        assert_eq!(
            dimension(&Word(vec![r(0), r(0)]), &z3, 5).unwrap(),
            BigInt::from(11)
        );
        assert_eq!(
            dimension(&Word(vec![r(1)]), &z3, 7).unwrap(),
            BigInt::from(7)
        );
    }

    #[test]
    fn multipliers() {
        let z2 = GroupCtx::Cyclic(2);
        let g = Word(vec![r(1)]);
        let e = Word(vec![r(0)]);
        assert_eq!(multiplier_eigenvalue(&g, &z2, 5.0, 5).unwrap(), 1.0);
        let c = multiplier_eigenvalue(&g, &z2, 4.5, 7).unwrap();
        assert!((c - 4.5 / 7.0).abs() <= MULTIPLIER_REL_TOL * 4.5 / 7.0);
        let c = multiplier_eigenvalue(&e, &z2, 4.0, 5).unwrap();
        assert!((c - 0.75).abs() <= MULTIPLIER_REL_TOL * 0.75);
        assert!(multiplier_eigenvalue(&e, &z2, 3.0, 5).is_err());
        assert!(multiplier_eigenvalue(&e, &z2, 6.0, 5).is_err());
        assert!(multiplier_eigenvalue(&e, &z2, 1.0, 4).is_ok());
        assert!(multiplier_eigenvalue(&e, &z2, 1.0, 3).is_err());
    }

    #[test]
    fn balls() {
        let z2 = GroupCtx::Cyclic(2);
        assert_eq!(ball(0, &z2).unwrap(), vec![Word::empty()]);
        assert_eq!(ball(2, &z2).unwrap().len(), 3);
        assert_eq!(ball(3, &z2).unwrap().len(), 3);
        assert!(ball(2, &GroupCtx::Integers).is_err());
    }

    #[test]
    fn profile_matches_bruteforce() {
        for ctx in [
            GroupCtx::Cyclic(2),
            GroupCtx::Cyclic(3),
            GroupCtx::trivial(),
        ] {
            let dp = decay_profile(4.0, 5, &ctx, 12).unwrap();
            let bf = decay_profile_bruteforce(4.0, 5, &ctx, 12).unwrap();
            assert_eq!(dp.len(), bf.len());
            for (a, b) in dp.iter().zip(&bf) {
                assert_eq!((a.r, &a.shell_size), (b.r, &b.shell_size));
                assert!(
                    (a.max_abs_c - b.max_abs_c).abs() <= 1e-12 * b.max_abs_c.max(1e-300),
                    "{a:?} {b:?}"
                );
            }
        }
        let dp = decay_profile(4.0, 5, &GroupCtx::Cyclic(2), 4).unwrap();
        assert_eq!(dp[0].max_abs_c, 1.0);
        assert!((dp[1].max_abs_c - 0.8).abs() < 1e-12);
        assert!(decay_profile(5.0, 5, &GroupCtx::Cyclic(2), 4).is_err());
    }

    #[test]
    fn csv_layout() {
        let z2 = GroupCtx::Cyclic(2);
        let csv = decay_csv(&decay_profile(4.0, 5, &z2, 2).unwrap());
        assert!(
            csv.starts_with("R,shell_size,max_abs_c\n0,1,1e0\n2,2,"),
            "{csv}"
        );
        let rows = dimension_table(&z2, 5, 1).unwrap();
        let csv = dimension_csv(&rows, &z2);
        assert_eq!(csv, "word,L,dim\n\"[]\",0,1\n\"[0]\",2,4\n\"[1]\",2,5\n");
    }
}

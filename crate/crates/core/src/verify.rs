//! Named verification suites. Each suite checks a family of identities over
//! an explicit finite set of cases and reports every failing case together
//! with a command line that reproduces it.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fusion::{
    classify_word, decompose_generator_product, fuse_basis, hsn_fuse, hsn_to_word, snplus_fuse,
    support_product, word_to_hsn, FusionElement, GeneratorMode, Region, SupportSet,
};
use crate::groups::{GroupCtx, GroupElement};
use crate::linmaps::{gram_matrix, GramBackend};
use crate::ncpart::{admissible_partitions, count_admissible, Flavor};
use crate::words::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    /// Coefficients of `(b_{g_1} + δ 1) ⊗ … ⊗ (b_{g_k} + δ 1)` against
    /// `NC'_Γ` counts.
    NcPrimeCoefficients,
    /// Trivial multiplicity of `a(g_1) ⊗ … ⊗ a(g_k)` against the
    /// `NC_Γ(∅; g)` count and the Gram rank.
    TrivialMultiplicity,
    /// Support inclusions and disjointness driving products into `G_2`.
    SupportG2,
    /// Support inclusions for conjugation of `E_3` and `G_1` words.
    SupportE3,
    /// Trivial-group and cyclic-group fusion against the closed-form rules.
    Reductions,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::NcPrimeCoefficients,
        Suite::TrivialMultiplicity,
        Suite::SupportG2,
        Suite::SupportE3,
        Suite::Reductions,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::NcPrimeCoefficients => "nc-prime-coefficients",
            Suite::TrivialMultiplicity => "trivial-multiplicity",
            Suite::SupportG2 => "support-g2",
            Suite::SupportE3 => "support-e3",
            Suite::Reductions => "reductions",
        }
    }

    /// Largest word length the suite accepts.
    pub fn max_len_cap(self) -> usize {
        match self {
            // both rows of the diagram hold up to max_len points
            Suite::NcPrimeCoefficients => 6,
            Suite::TrivialMultiplicity => 8,
            Suite::SupportG2 | Suite::SupportE3 | Suite::Reductions => 8,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Suite::ALL.iter().map(|x| x.name()).collect();
                Error::Parse(format!(
                    "unknown suite {s:?}; expected one of {}",
                    names.join(", ")
                ))
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub group: String,
    pub n_values: Vec<u64>,
    pub max_len: usize,
    /// Cap on `k + l` for partition enumeration.
    pub max_partition: usize,
    pub seed: u64,
    /// Worker threads; 0 uses the available parallelism.
    pub jobs: usize,
    /// Above this many cases a seeded sample of `sample_size` cases is used.
    pub exhaustive_limit: usize,
    pub sample_size: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            group: "cyclic:2".into(),
            n_values: vec![5],
            max_len: 3,
            max_partition: crate::ncpart::DEFAULT_ENUM_LIMIT,
            seed: 0,
            jobs: 0,
            exhaustive_limit: 50_000,
            sample_size: 2_000,
        }
    }
}

impl SuiteConfig {
    pub fn for_group(group: &str, max_len: usize) -> Self {
        Self {
            group: group.into(),
            max_len,
            ..Self::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub case: String,
    pub detail: String,
    pub repro: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inapplicable,
}

/// Outcome of one suite run. The wall time is not serialized so that equal
/// runs produce identical reports.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub group: String,
    pub bounds: Vec<String>,
    pub cases: u64,
    pub status: Status,
    pub note: Option<String>,
    pub failures: Vec<Failure>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

struct Outcome {
    bounds: Vec<String>,
    cases: u64,
    failures: Vec<Failure>,
    note: Option<String>,
    inapplicable: bool,
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<SuiteReport> {
    if cfg.max_len > suite.max_len_cap() {
        return Err(Error::LimitExceeded(format!(
            "suite {suite} accepts word lengths up to {}, got {}",
            suite.max_len_cap(),
            cfg.max_len
        )));
    }
    let ctx = GroupCtx::parse(&cfg.group)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    let start = Instant::now();
    let out = pool.install(|| match suite {
        Suite::NcPrimeCoefficients => nc_prime_coefficients(&ctx, cfg),
        Suite::TrivialMultiplicity => trivial_multiplicity(&ctx, cfg),
        Suite::SupportG2 => support_g2(&ctx, cfg),
        Suite::SupportE3 => support_e3(&ctx, cfg),
        Suite::Reductions => reductions(&ctx, cfg),
    })?;
    let status = if out.inapplicable {
        Status::Inapplicable
    } else if out.failures.is_empty() {
        Status::Pass
    } else {
        Status::Fail
    };
    Ok(SuiteReport {
        suite: suite.name().into(),
        group: cfg.group.clone(),
        bounds: out.bounds,
        cases: out.cases,
        status,
        note: out.note,
        failures: out.failures,
        wall_time: start.elapsed(),
    })
}

fn quote(w: &Word, ctx: &GroupCtx) -> String {
    format!("\"{}\"", w.display(ctx))
}

/// All generator tuples of length `<= max_len`, or a seeded sample when there
/// are too many. Returns the tuples and a description of the choice.
fn generator_tuples(ctx: &GroupCtx, cfg: &SuiteConfig) -> (Vec<Word>, String) {
    let alphabet = ctx.sample_alphabet();
    let total: u128 = (0..=cfg.max_len as u32)
        .map(|k| (alphabet.len() as u128).pow(k))
        .sum();
    let letters: Vec<String> = alphabet.iter().map(|g| ctx.format_element(g)).collect();
    let letters = letters.join(",");
    if total <= cfg.exhaustive_limit as u128 {
        let tuples = Word::all_up_to(&alphabet, cfg.max_len);
        let desc = format!(
            "exhaustive: all {} tuples of length <= {} over {{{letters}}}",
            tuples.len(),
            cfg.max_len
        );
        (tuples, desc)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let tuples: Vec<Word> = (0..cfg.sample_size)
            .map(|_| {
                let k = rand::Rng::gen_range(&mut rng, 0..=cfg.max_len);
                Word(
                    (0..k)
                        .map(|_| alphabet.choose(&mut rng).unwrap().clone())
                        .collect(),
                )
            })
            .collect();
        let desc = format!(
            "sampled: {} tuples of length <= {} over {{{letters}}} with seed {}",
            tuples.len(),
            cfg.max_len,
            cfg.seed
        );
        (tuples, desc)
    }
}

fn collect_failures<T: Sync>(
    cases: &[T],
    check: impl Fn(&T) -> Result<Vec<Failure>> + Sync + Send,
) -> Result<Vec<Failure>> {
    let per_case: Vec<Vec<Failure>> = cases.par_iter().map(check).collect::<Result<_>>()?;
    Ok(per_case.into_iter().flatten().collect())
}

fn nc_prime_coefficients(ctx: &GroupCtx, cfg: &SuiteConfig) -> Result<Outcome> {
    if 2 * cfg.max_len > cfg.max_partition {
        return Err(Error::LimitExceeded(format!(
            "candidate words and tuples of length {} need diagrams with {} points, cap is {}",
            cfg.max_len,
            2 * cfg.max_len,
            cfg.max_partition
        )));
    }
    let (tuples, desc) = generator_tuples(ctx, cfg);
    let alphabet = ctx.sample_alphabet();
    let counter = std::sync::atomic::AtomicU64::new(0);
    let failures = collect_failures(&tuples, |gs| {
        let p = decompose_generator_product(gs.letters(), ctx, GeneratorMode::ARep)?;
        let mut candidates: std::collections::BTreeSet<Word> =
            Word::all_up_to(&alphabet, gs.len()).into_iter().collect();
        candidates.extend(p.support().cloned());
        let mut out = Vec::new();
        for x in &candidates {
            let coeff = p.coefficient(x);
            let count = count_admissible(x.letters(), gs.letters(), Flavor::NcGammaPrime, ctx)?;
            if coeff != BigInt::from(count) {
                out.push(Failure {
                    case: format!("x={} g={}", x.display(ctx), gs.display(ctx)),
                    detail: format!(
                        "coefficient {coeff} in the generator product, {count} NC' partitions"
                    ),
                    repro: format!(
                        "wreath count --group {} --upper {} --lower {} --flavor nc_gamma_prime",
                        cfg.group,
                        quote(x, ctx),
                        quote(gs, ctx)
                    ),
                });
            }
        }
        counter.fetch_add(
            candidates.len() as u64,
            std::sync::atomic::Ordering::Relaxed,
        );
        Ok(out)
    })?;
    Ok(Outcome {
        bounds: vec![desc, "candidate words: every word of length <= |g| over the same letters, plus the support of the product".into()],
        cases: counter.into_inner(),
        failures,
        note: None,
        inapplicable: false,
    })
}

fn trivial_multiplicity(ctx: &GroupCtx, cfg: &SuiteConfig) -> Result<Outcome> {
    if cfg.max_len > cfg.max_partition {
        return Err(Error::LimitExceeded(format!(
            "tuples of length {} exceed the partition cap {}",
            cfg.max_len, cfg.max_partition
        )));
    }
    let (tuples, desc) = generator_tuples(ctx, cfg);
    let ns: Vec<u64> = cfg.n_values.iter().copied().filter(|&n| n >= 4).collect();
    let skipped: Vec<u64> = cfg.n_values.iter().copied().filter(|&n| n < 4).collect();
    let failures = collect_failures(&tuples, |gs| {
        let fusion = decompose_generator_product(gs.letters(), ctx, GeneratorMode::ARep)?
            .trivial_multiplicity();
        let omega = decompose_generator_product(gs.letters(), ctx, GeneratorMode::Omega)?;
        let ps = admissible_partitions(&[], gs.letters(), Flavor::NcGamma, ctx)?;
        let count = BigInt::from(ps.len());
        let mut out = Vec::new();
        let case = format!("g={}", gs.display(ctx));
        if fusion != count {
            out.push(Failure {
                case: case.clone(),
                detail: format!("fusion multiplicity {fusion}, NC_Gamma count {count}"),
                repro: format!(
                    "wreath count --group {} --upper \"[]\" --lower {} --flavor nc_gamma",
                    cfg.group,
                    quote(gs, ctx)
                ),
            });
        }
        // every ω(g_i) with g_i = e differs from a(g_i) by a trivial summand
        if gs.letters().iter().all(|g| !ctx.is_identity(g))
            && omega.trivial_multiplicity() != fusion
        {
            out.push(Failure {
                case: case.clone(),
                detail: format!(
                    "a-product has {fusion} trivial summands, omega-product has {}",
                    omega.trivial_multiplicity()
                ),
                repro: format!(
                    "wreath verify --suite trivial-multiplicity --group {} --max-len {}",
                    cfg.group,
                    gs.len()
                ),
            });
        }
        for &n in &ns {
            let rank = gram_matrix(&ps, n, GramBackend::Combinatorial)?.rank();
            if BigInt::from(rank) != count {
                out.push(Failure {
                    case: format!("{case} N={n}"),
                    detail: format!("Gram rank {rank}, NC_Gamma count {count}"),
                    repro: format!(
                        "wreath homdim --group {} --upper \"[]\" --lower {} --N {n}",
                        cfg.group,
                        quote(gs, ctx)
                    ),
                });
            }
        }
        Ok(out)
    })?;
    let note =
        (!skipped.is_empty()).then(|| format!("rank comparison skipped for N < 4: {skipped:?}"));
    Ok(Outcome {
        bounds: vec![desc, format!("Gram ranks at N in {ns:?}")],
        cases: tuples.len() as u64,
        failures,
        note,
        inapplicable: false,
    })
}

fn finite_words(ctx: &GroupCtx, max_len: usize) -> Result<Vec<Word>> {
    let alphabet = if ctx.is_finite() {
        ctx.enumerate()?
    } else {
        ctx.sample_alphabet()
    };
    Ok(Word::all_up_to(&alphabet, max_len))
}

fn nonidentity(ctx: &GroupCtx) -> Vec<GroupElement> {
    ctx.sample_alphabet()
        .into_iter()
        .filter(|g| !ctx.is_identity(g))
        .collect()
}

fn region_set(words: &[Word], ctx: &GroupCtx, pred: impl Fn(Region) -> bool) -> Vec<Word> {
    words
        .iter()
        .filter(|w| pred(classify_word(w, ctx)))
        .cloned()
        .collect()
}

/// `(g_0, e^t)`.
fn g0_et(g0: &GroupElement, t: usize, ctx: &GroupCtx) -> Word {
    let mut v = vec![g0.clone()];
    v.extend(std::iter::repeat_n(ctx.identity(), t));
    Word(v)
}

fn triple_support(a: &Word, b: &Word, c: &Word, ctx: &GroupCtx) -> Result<SupportSet> {
    let ab = FusionElement::basis(a.clone()).product(&FusionElement::basis(b.clone()), ctx)?;
    let abc = ab.product(&FusionElement::basis(c.clone()), ctx)?;
    Ok(abc.support().cloned().collect())
}

fn inapplicable(reason: &str) -> Outcome {
    Outcome {
        bounds: vec![],
        cases: 0,
        failures: vec![],
        note: Some(reason.into()),
        inapplicable: true,
    }
}

fn support_g2(ctx: &GroupCtx, cfg: &SuiteConfig) -> Result<Outcome> {
    if ctx.order() == Some(1) {
        return Ok(inapplicable("needs a group with at least two elements"));
    }
    let words = finite_words(ctx, cfg.max_len)?;
    let repro = format!(
        "wreath verify --suite support-g2 --group {} --max-len {}",
        cfg.group, cfg.max_len
    );
    let fail = |case: String, detail: String| Failure {
        case,
        detail,
        repro: repro.clone(),
    };
    let mut failures = Vec::new();
    let mut cases = 0u64;

    // S = E_3 ⊔ G_1
    for w in &words {
        cases += 1;
        let r = classify_word(w, ctx);
        if r.in_s() != (r == Region::E3 || r.in_g1()) {
            failures.push(fail(
                format!("w={}", w.display(ctx)),
                format!("region {r:?} breaks S = E_3 ⊔ G_1"),
            ));
        }
    }

    // G_2 ∘ E_1 ∩ E_1 = ∅
    let g2 = region_set(&words, ctx, |r| r == Region::G2);
    let e1 = region_set(&words, ctx, Region::in_e1);
    let pairs: Vec<(&Word, &Word)> = g2
        .iter()
        .flat_map(|a| e1.iter().map(move |b| (a, b)))
        .collect();
    cases += pairs.len() as u64;
    failures.extend(collect_failures(&pairs, |(a, b)| {
        let prod = fuse_basis(a, b, ctx)?;
        Ok(prod
            .support()
            .filter(|w| classify_word(w, ctx).in_e1())
            .map(|w| {
                fail(
                    format!(
                        "G_2 word {} times E_1 word {}",
                        a.display(ctx),
                        b.display(ctx)
                    ),
                    format!("product contains {} which starts with e", w.display(ctx)),
                )
            })
            .collect())
    })?);

    let g1 = region_set(&words, ctx, Region::in_g1);
    for g0 in nonidentity(ctx) {
        let alphas: Vec<(usize, Word)> =
            [1, 3, 5].iter().map(|&t| (t, g0_et(&g0, t, ctx))).collect();
        // {α_t} ∘ G_1 pairwise disjoint
        let mut prods = Vec::new();
        for (t, a) in &alphas {
            prods.push((
                *t,
                support_product(
                    &SupportSet::singleton(a.clone()),
                    &g1.iter().cloned().collect(),
                    ctx,
                )?,
            ));
        }
        for i in 0..prods.len() {
            for j in i + 1..prods.len() {
                cases += 1;
                if let Some(w) = prods[i].1.first_common(&prods[j].1) {
                    failures.push(fail(
                        format!(
                            "g0={} t={} s={}",
                            ctx.format_element(&g0),
                            prods[i].0,
                            prods[j].0
                        ),
                        format!("{} lies in both products with G_1", w.display(ctx)),
                    ));
                }
            }
        }
        // {α_t} ∘ G_2 ∘ {ᾱ_t} ⊂ G_2
        for (t, a) in &alphas {
            let abar = a.involute(ctx)?;
            cases += g2.len() as u64;
            failures.extend(collect_failures(&g2, |gamma| {
                Ok(triple_support(a, gamma, &abar, ctx)?
                    .iter()
                    .filter(|w| classify_word(w, ctx) != Region::G2)
                    .map(|w| {
                        fail(
                            format!(
                                "g0={} t={t} gamma={}",
                                ctx.format_element(&g0),
                                gamma.display(ctx)
                            ),
                            format!("conjugate contains {} outside G_2", w.display(ctx)),
                        )
                    })
                    .collect())
            })?);
        }
        // for G = S-words of length <= m, α = (g_0, e^m) and (g_0, e^{m+1})
        for m in 1..=cfg.max_len {
            let g: Vec<Word> = words
                .iter()
                .filter(|w| w.len() <= m && classify_word(w, ctx).in_s())
                .cloned()
                .collect();
            for extra in [0, 1] {
                let a = g0_et(&g0, m + extra, ctx);
                let abar = a.involute(ctx)?;
                cases += g.len() as u64;
                failures.extend(collect_failures(&g, |gamma| {
                    Ok(triple_support(&a, gamma, &abar, ctx)?
                        .iter()
                        .filter(|w| classify_word(w, ctx) != Region::G2)
                        .map(|w| {
                            fail(
                                format!("alpha={} gamma={}", a.display(ctx), gamma.display(ctx)),
                                format!("conjugate contains {} outside G_2", w.display(ctx)),
                            )
                        })
                        .collect())
                })?);
            }
        }
    }
    let letters = if ctx.is_finite() {
        "all elements"
    } else {
        "e, generators and inverses"
    };
    Ok(Outcome {
        bounds: vec![
            format!("words of length <= {} over {letters}", cfg.max_len),
            "alpha_t = (g0, e^t) for t in {1,3,5} and every g0 != e".into(),
            format!(
                "G = S-words of length <= m for m = 1..={}, alpha = (g0, e^m) and (g0, e^(m+1))",
                cfg.max_len
            ),
        ],
        cases,
        failures,
        note: None,
        inapplicable: false,
    })
}

fn support_e3(ctx: &GroupCtx, cfg: &SuiteConfig) -> Result<Outcome> {
    if ctx.order() == Some(1) {
        return Ok(inapplicable("needs a group with at least two elements"));
    }
    let words = finite_words(ctx, cfg.max_len)?;
    let repro = format!(
        "wreath verify --suite support-e3 --group {} --max-len {}",
        cfg.group, cfg.max_len
    );
    let fail = |case: String, detail: String| Failure {
        case,
        detail,
        repro: repro.clone(),
    };
    let mut failures = Vec::new();
    let mut cases = 0u64;

    // (g) ∘ β ∘ (g^{-1}) ⊂ G_1 for β ∈ E_3
    let e3 = region_set(&words, ctx, |r| r == Region::E3);
    for g in nonidentity(ctx) {
        let left = Word::letter(g.clone());
        let right = left.involute(ctx)?;
        cases += e3.len() as u64;
        failures.extend(collect_failures(&e3, |beta| {
            Ok(triple_support(&left, beta, &right, ctx)?
                .iter()
                .filter(|w| !classify_word(w, ctx).in_g1())
                .map(|w| {
                    fail(
                        format!("g={} beta={}", ctx.format_element(&g), beta.display(ctx)),
                        format!("conjugate contains {} outside G_1", w.display(ctx)),
                    )
                })
                .collect())
        })?);
    }

    // e^i ∘ G_1 ∘ e^i ⊂ E_3 for i = 2, 4, and the two are disjoint
    let g1 = region_set(&words, ctx, Region::in_g1);
    let mut conj = Vec::new();
    for i in [2usize, 4] {
        let ei = Word::identity_power(ctx, i);
        cases += g1.len() as u64;
        let per: Vec<SupportSet> = g1
            .par_iter()
            .map(|a| triple_support(&ei, a, &ei, ctx))
            .collect::<Result<_>>()?;
        for (a, s) in g1.iter().zip(&per) {
            for w in s.iter().filter(|w| classify_word(w, ctx) != Region::E3) {
                failures.push(fail(
                    format!("i={i} alpha={}", a.display(ctx)),
                    format!("conjugate contains {} outside E_3", w.display(ctx)),
                ));
            }
        }
        conj.push(per.into_iter().flat_map(|s| s.0).collect::<SupportSet>());
    }
    cases += 1;
    if let Some(w) = conj[0].first_common(&conj[1]) {
        failures.push(fail(
            "i=2 vs i=4".into(),
            format!("{} lies in both conjugate sets", w.display(ctx)),
        ));
    }
    Ok(Outcome {
        bounds: vec![
            format!("words of length <= {}", cfg.max_len),
            "every g != e of the letter set".into(),
        ],
        cases,
        failures,
        note: None,
        inapplicable: false,
    })
}

/// Bound on `s, t` for the trivial-group check.
const SO3_BOUND: u64 = 5;

fn reductions(ctx: &GroupCtx, cfg: &SuiteConfig) -> Result<Outcome> {
    let mut failures = Vec::new();
    let mut cases = 0u64;
    let triv = GroupCtx::trivial();
    for s in 0..=SO3_BOUND {
        for t in 0..=SO3_BOUND {
            cases += 1;
            let got = fuse_basis(
                &Word::identity_power(&triv, s as usize),
                &Word::identity_power(&triv, t as usize),
                &triv,
            )?;
            let mut expected = FusionElement::zero();
            for n in snplus_fuse(s, t) {
                expected.add_term(Word::identity_power(&triv, n as usize), 1);
            }
            let via_hsn = hsn_fuse(&vec![0; s as usize], &vec![0; t as usize], Some(1))?;
            let mut hsn_words = FusionElement::zero();
            for (w, c) in via_hsn {
                hsn_words.add_term(hsn_to_word(&w, &triv)?, c);
            }
            if got != expected || hsn_words != expected {
                failures.push(Failure {
                    case: format!("s={s} t={t}"),
                    detail: format!(
                        "word fusion {}, SO(3) rule {}, Z_1 rule {}",
                        got.display(&triv),
                        expected.display(&triv),
                        hsn_words.display(&triv)
                    ),
                    repro: format!(
                        "wreath fuse --group trivial --x {} --y {}",
                        quote(&Word::identity_power(&triv, s as usize), &triv),
                        quote(&Word::identity_power(&triv, t as usize), &triv)
                    ),
                });
            }
        }
    }
    let mut groups = vec![
        GroupCtx::Cyclic(2),
        GroupCtx::Cyclic(3),
        GroupCtx::Cyclic(4),
    ];
    if matches!(ctx, GroupCtx::Cyclic(_) | GroupCtx::Integers) && !groups.contains(ctx) {
        groups.push(ctx.clone());
    }
    let len = cfg.max_len.min(3);
    for g in &groups {
        let s = match g {
            GroupCtx::Cyclic(s) => Some(*s),
            _ => None,
        };
        let words = Word::all_up_to(&g.sample_alphabet(), len);
        let pairs: Vec<(&Word, &Word)> = words
            .iter()
            .flat_map(|x| words.iter().map(move |y| (x, y)))
            .collect();
        cases += pairs.len() as u64;
        failures.extend(collect_failures(&pairs, |(x, y)| {
            let got = fuse_basis(x, y, g)?;
            let mut expected = FusionElement::zero();
            for (w, c) in hsn_fuse(&word_to_hsn(x, g)?, &word_to_hsn(y, g)?, s)? {
                expected.add_term(hsn_to_word(&w, g)?, c);
            }
            Ok(if got == expected {
                vec![]
            } else {
                vec![Failure {
                    case: format!("{g} x={} y={}", x.display(g), y.display(g)),
                    detail: format!(
                        "word fusion {}, cyclic rule {}",
                        got.display(g),
                        expected.display(g)
                    ),
                    repro: format!(
                        "wreath fuse --group {g} --x {} --y {}",
                        quote(x, g),
                        quote(y, g)
                    ),
                }]
            })
        })?);
    }
    let names: Vec<String> = groups.iter().map(|g| g.to_string()).collect();
    Ok(Outcome {
        bounds: vec![
            format!("trivial group: e^s times e^t for s, t <= {SO3_BOUND}"),
            format!(
                "{}: all pairs of words of length <= {len}",
                names.join(", ")
            ),
        ],
        cases,
        failures,
        note: None,
        inapplicable: false,
    })
}

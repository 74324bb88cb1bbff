mod common;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use proptest::prelude::*;

use wreath_core::dims::{dimension, multiplier_eigenvalue};
use wreath_core::fusion::{fuse_basis, FusionElement};
use wreath_core::groups::{CayleyTable, GroupCtx, GroupElement};
use wreath_core::ncpart::{count_admissible, enumerate_nc, Flavor, NCPartition};
use wreath_core::words::{MPrimeWord, Word};

fn cyclic_word(s: u64, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..s, 0..=max_len).prop_map(|v| common::residue_word(&v))
}

fn s3() -> GroupCtx {
    GroupCtx::from_table(CayleyTable::symmetric(3).unwrap())
}

fn s3_word(max_len: usize) -> impl Strategy<Value = Vec<GroupElement>> {
    prop::collection::vec((0usize..6).prop_map(GroupElement::Index), 0..=max_len)
}

fn combo(s: u64) -> impl Strategy<Value = FusionElement> {
    prop::collection::vec((cyclic_word(s, 3), -3i64..=3), 1..=3).prop_map(|terms| {
        let mut e = FusionElement::zero();
        for (w, c) in terms {
            e.add_term(w, c);
        }
        e
    })
}

fn nc_partition(max_points: usize) -> impl Strategy<Value = NCPartition> {
    (0..=max_points)
        .prop_flat_map(|total| (0..=total).prop_map(move |k| (k, total - k)))
        .prop_flat_map(|(k, l)| {
            let all = enumerate_nc(k, l).unwrap();
            (0..all.len()).prop_map(move |i| all[i].clone())
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn product_is_associative(a in combo(3), b in combo(3), c in combo(3)) {
        let ctx = GroupCtx::Cyclic(3);
        let left = a.product(&b, &ctx).unwrap().product(&c, &ctx).unwrap();
        let right = a.product(&b.product(&c, &ctx).unwrap(), &ctx).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn product_distributes(a in combo(2), b in combo(2), c in combo(2)) {
        let ctx = GroupCtx::Cyclic(2);
        let left = a.product(&(b.clone() + c.clone()), &ctx).unwrap();
        let right = a.product(&b, &ctx).unwrap() + a.product(&c, &ctx).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn empty_word_is_unit(a in combo(4)) {
        let ctx = GroupCtx::Cyclic(4);
        let one = FusionElement::one();
        prop_assert_eq!(&one.product(&a, &ctx).unwrap(), &a);
        prop_assert_eq!(&a.product(&one, &ctx).unwrap(), &a);
    }

    #[test]
    fn conjugation_reverses_products(a in combo(3), b in combo(3)) {
        let ctx = GroupCtx::Cyclic(3);
        let lhs = a.product(&b, &ctx).unwrap().conjugate(&ctx).unwrap();
        let rhs = b.conjugate(&ctx).unwrap().product(&a.conjugate(&ctx).unwrap(), &ctx).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn basis_products_have_nonnegative_coefficients(x in s3_word(4), y in s3_word(4)) {
        let ctx = s3();
        let p = fuse_basis(&Word(x.clone()), &Word(y.clone()), &ctx).unwrap();
        prop_assert!(p.is_nonnegative());
        // the concatenation always appears exactly once
        let mut cat = x;
        cat.extend(y);
        prop_assert_eq!(p.coefficient(&Word(cat)), BigInt::from(1));
    }

    #[test]
    fn trivial_summand_only_for_conjugate_pairs(x in cyclic_word(3, 4), y in cyclic_word(3, 4)) {
        let ctx = GroupCtx::Cyclic(3);
        let p = fuse_basis(&x, &y, &ctx).unwrap();
        let expected = i32::from(y == x.involute(&ctx).unwrap());
        prop_assert_eq!(p.trivial_multiplicity(), BigInt::from(expected));
    }

    #[test]
    fn normal_form_roundtrip(w in s3_word(6)) {
        let ctx = s3();
        let w = Word(w);
        let m = w.to_mprime(&ctx);
        prop_assert!(m.in_submonoid(&ctx));
        prop_assert!(m.is_reduced(&ctx));
        prop_assert_eq!(m.to_word(&ctx).unwrap(), w.clone());
        prop_assert_eq!(MPrimeWord::from_word(&w, &ctx), m);
    }

    #[test]
    fn length_is_twice_word_length_and_conjugation_invariant(w in cyclic_word(5, 8)) {
        let ctx = GroupCtx::Cyclic(5);
        let l = w.l_length(&ctx);
        prop_assert_eq!(l, 2 * w.len() as u64);
        prop_assert_eq!(w.involute(&ctx).unwrap().l_length(&ctx), l);
        prop_assert_eq!(w.to_mprime(&ctx).l_length(), l);
    }

    #[test]
    fn dimension_is_a_ring_homomorphism(x in s3_word(3), y in s3_word(3), n in 4u64..12) {
        let ctx = s3();
        let (x, y) = (Word(x), Word(y));
        let lhs = dimension(&x, &ctx, n).unwrap() * dimension(&y, &ctx, n).unwrap();
        let mut rhs = BigInt::from(0);
        for (w, c) in fuse_basis(&x, &y, &ctx).unwrap().terms() {
            rhs += c * dimension(w, &ctx, n).unwrap();
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn dimension_is_positive_and_conjugation_invariant(w in cyclic_word(4, 6), n in 4u64..20) {
        let ctx = GroupCtx::Cyclic(4);
        let d = dimension(&w, &ctx, n).unwrap();
        prop_assert!(d > BigInt::from(0));
        prop_assert_eq!(dimension(&w.involute(&ctx).unwrap(), &ctx, n).unwrap(), d);
    }

    #[test]
    fn involution_preserves_exponent_multiset(w in s3_word(6), x in 4.0f64..7.0) {
        let ctx = s3();
        let w = Word(w);
        let wbar = w.involute(&ctx).unwrap();
        let mut a = w.to_mprime(&ctx).exponents;
        let mut b = wbar.to_mprime(&ctx).exponents;
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
        let c = multiplier_eigenvalue(&w, &ctx, x, 7).unwrap();
        let cbar = multiplier_eigenvalue(&wbar, &ctx, x, 7).unwrap();
        prop_assert!((c - cbar).abs() <= 1e-12 * c.abs().max(1e-300));
    }

    #[test]
    fn word_text_roundtrip(w in s3_word(5)) {
        let ctx = s3();
        let w = Word(w);
        prop_assert_eq!(Word::parse(&w.display(&ctx), &ctx).unwrap(), w);
    }

    #[test]
    fn fusion_json_roundtrip(a in combo(3)) {
        let ctx = GroupCtx::Cyclic(3);
        prop_assert_eq!(FusionElement::from_json(&a.to_json(&ctx), &ctx).unwrap(), a);
    }

    #[test]
    fn partition_json_roundtrip(p in nc_partition(8)) {
        prop_assert_eq!(NCPartition::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn involution_is_an_involution(p in nc_partition(8)) {
        prop_assert_eq!(p.involute().involute(), p);
    }

    #[test]
    fn composition_is_associative(
        (r, q, p) in (0usize..=3, 0usize..=3, 0usize..=3, 0usize..=3).prop_flat_map(|(a, b, c, d)| {
            let pick = |k, l| {
                let all = enumerate_nc(k, l).unwrap();
                (0..all.len()).prop_map(move |i| all[i].clone())
            };
            (pick(a, b), pick(b, c), pick(c, d))
        })
    ) {
        let (rq, c1) = q.compose(&r).unwrap();
        let (left, c2) = p.compose(&rq).unwrap();
        let (pq, c3) = p.compose(&q).unwrap();
        let (right, c4) = pq.compose(&r).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(c1 + c2, c3 + c4);
    }

    #[test]
    fn bending_preserves_decorated_counts(
        upper in prop::collection::vec(0u64..3, 1..=4),
        lower in prop::collection::vec(0u64..3, 0..=3),
    ) {
        let ctx = GroupCtx::Cyclic(3);
        let up = common::residue_word(&upper);
        let low = common::residue_word(&lower);
        let before = count_admissible(up.letters(), low.letters(), Flavor::NcGamma, &ctx).unwrap();
        let mut bent = vec![ctx.inv(&up.letters()[0]).unwrap()];
        bent.extend_from_slice(low.letters());
        let after = count_admissible(&up.letters()[1..], &bent, Flavor::NcGamma, &ctx).unwrap();
        prop_assert_eq!(before, after);
        // bending on the right end of the upper row
        let k = up.len();
        let mut right = low.letters().to_vec();
        right.push(ctx.inv(&up.letters()[k - 1]).unwrap());
        let after_right = count_admissible(&up.letters()[..k - 1], &right, Flavor::NcGamma, &ctx).unwrap();
        prop_assert_eq!(before, after_right);
    }

    #[test]
    fn nonabelian_counts_match_oracle(upper in s3_word(2), lower in s3_word(3)) {
        let ctx = s3();
        let got = count_admissible(&upper, &lower, Flavor::NcGamma, &ctx).unwrap();
        prop_assert_eq!(got, common::decorated_count(&upper, &lower, &ctx, false));
        let got = count_admissible(&upper, &lower, Flavor::NcGammaPrime, &ctx).unwrap();
        prop_assert_eq!(got, common::decorated_count(&upper, &lower, &ctx, true));
    }
}

#[test]
fn enumeration_matches_crossing_filter() {
    for total in 0..=8 {
        for k in 0..=total {
            let l = total - k;
            let lib: BTreeSet<Vec<usize>> = enumerate_nc(k, l)
                .unwrap()
                .iter()
                .map(|p| common::canonical(&p.block_labels()))
                .collect();
            let oracle: BTreeSet<Vec<usize>> = common::nc_partitions(k, l).into_iter().collect();
            assert_eq!(lib.len() as u64, common::catalan(total), "({k},{l})");
            assert_eq!(lib, oracle, "({k},{l})");
        }
    }
}

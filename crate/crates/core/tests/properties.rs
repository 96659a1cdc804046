use std::collections::BTreeSet;

use num_bigint::BigUint;
use proptest::prelude::*;

use oddchar_core::oracle::{degree, is_odd_partition, odd_partitions};
use oddchar_core::partition::{attach_unique_gamma, m_core, rim_hooks_of_length};
use oddchar_core::sym::{hook_signs, signs_hook};
use oddchar_core::{
    alpha_sn, alpha_sn_inverse, binom_is_odd, galois_act, levi_star, odd_labels, sharp_glu, sharp_glu_inverse,
    sharp_sn, sharp_sn_inverse, star_sn, GaloisElement, HookPartition, Kappa, Partition,
};

fn partition(max_n: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=6, 1..=max_n).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).unwrap()
    })
}

fn odd_partition(max_n: usize) -> impl Strategy<Value = Partition> {
    (1..=max_n, any::<prop::sample::Index>()).prop_map(|(n, i)| {
        let odd = odd_partitions(n);
        odd[i.index(odd.len())].clone()
    })
}

fn binomial(n: u64, a: u64) -> BigUint {
    (0..a).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn binomial_parity_matches_big_integers(n in 0u64..400, a in 0u64..400) {
        prop_assume!(a <= n);
        prop_assert_eq!(binom_is_odd(n, a).unwrap(), binomial(n, a).bit(0));
    }

    #[test]
    fn conjugation_preserves_degree(lambda in partition(12)) {
        prop_assert_eq!(degree(&lambda), degree(&lambda.conjugate()));
    }

    #[test]
    fn rim_hook_removal_shrinks_by_m(lambda in partition(12), m in 1usize..8) {
        for r in rim_hooks_of_length(&lambda, m) {
            prop_assert_eq!(r.remainder.size() + m, lambda.size());
            prop_assert_eq!(r.hook_type.m(), m);
            prop_assert!(lambda.contains(&r.remainder));
        }
    }

    #[test]
    fn core_does_not_depend_on_removal_order(lambda in partition(14), m in 1usize..6) {
        let core = m_core(&lambda, m);
        prop_assert!(rim_hooks_of_length(&core, m).is_empty());
        let mut other = lambda.clone();
        while let Some(r) = rim_hooks_of_length(&other, m).pop() {
            other = r.remainder;
        }
        prop_assert_eq!(core, other);
    }

    #[test]
    fn attach_inverts_removal(alpha in partition(6), e in 2u32..5, leg_seed in any::<usize>()) {
        let m = 1usize << e;
        prop_assume!(alpha.size() < m);
        let beta = HookPartition::new(m, leg_seed % m).unwrap();
        let gamma = attach_unique_gamma(&alpha, beta, alpha.size() + m).unwrap();
        let hits = rim_hooks_of_length(&gamma, m)
            .into_iter()
            .filter(|r| r.remainder == alpha && r.hook_type == beta)
            .count();
        prop_assert_eq!(hits, 1);
    }

    #[test]
    fn star_removes_one_cell(lambda in odd_partition(14)) {
        prop_assume!(lambda.size() >= 2);
        let mu = star_sn(&lambda).unwrap();
        prop_assert!(is_odd_partition(&mu));
        prop_assert!(lambda.contains(&mu));
        prop_assert_eq!(mu.size() + 1, lambda.size());
    }

    #[test]
    fn alpha_round_trips(lambda in odd_partition(20)) {
        let theta = alpha_sn(&lambda).unwrap();
        prop_assert_eq!(theta.size(), lambda.size());
        prop_assert_eq!(alpha_sn_inverse(&theta).unwrap(), lambda);
    }

    #[test]
    fn sharp_round_trips(lambda in odd_partition(20)) {
        let label = sharp_sn(&lambda).unwrap();
        prop_assert_eq!(label.size(), lambda.size());
        prop_assert_eq!(sharp_sn_inverse(&label).unwrap(), lambda);
    }

    #[test]
    fn sharp_commutes_with_conjugation_up_to_signs(lambda in odd_partition(16)) {
        // conjugating a hook reverses its leg, which complements the top bit of each block
        let a = sharp_sn(&lambda).unwrap();
        let b = sharp_sn(&lambda.conjugate()).unwrap();
        for (x, y) in a.blocks().iter().zip(b.blocks()) {
            if let (Some(&x0), Some(&y0)) = (x.first(), y.first()) {
                prop_assert_eq!(x0 ^ 1, y0);
                prop_assert_eq!(&x[1..], &y[1..]);
            }
        }
    }

    #[test]
    fn gray_code_is_invertible(e in 0usize..20, leg_seed in any::<usize>()) {
        let m = 1usize << e;
        let hook = HookPartition::new(m, leg_seed % m).unwrap();
        prop_assert_eq!(signs_hook(&hook_signs(hook).unwrap()).unwrap(), hook);
    }

    #[test]
    fn sharp_glu_round_trips(n in 1usize..=6, q in prop::sample::select(vec![3u64, 5, 7, 9]), plus in any::<bool>(), i in any::<prop::sample::Index>()) {
        let kappa = if plus { Kappa::Plus } else { Kappa::Minus };
        let labels = odd_labels(n, q, kappa).unwrap();
        let label = &labels[i.index(labels.len())];
        let omega = sharp_glu(label).unwrap();
        prop_assert_eq!(omega.rank(), n);
        prop_assert_eq!(&sharp_glu_inverse(&omega).unwrap(), label);
    }

    #[test]
    fn galois_action_is_a_group_action(n in 1usize..=5, q in prop::sample::select(vec![5u64, 7, 9, 11]), i in any::<prop::sample::Index>(), a in 1i64..40, b in 1i64..40) {
        let labels = odd_labels(n, q, Kappa::Minus).unwrap();
        let label = &labels[i.index(labels.len())];
        let modulus = (q + 1) as i64;
        prop_assume!(num_integer::gcd(a, modulus) == 1 && num_integer::gcd(b, modulus) == 1);
        let step = galois_act(GaloisElement::new(b), label).and_then(|l| galois_act(GaloisElement::new(a), &l)).unwrap();
        prop_assert_eq!(step, galois_act(GaloisElement::new(a * b), label).unwrap());
    }

    #[test]
    fn levi_factors_reassemble(n in 2usize..=7, i in any::<prop::sample::Index>()) {
        let labels = odd_labels(n, 5, Kappa::Plus).unwrap();
        let label = &labels[i.index(labels.len())];
        let blocks: Vec<usize> = oddchar_core::two_adic(n).block_sizes().collect();
        let factors = levi_star(label, &blocks).unwrap();
        let mut residues = BTreeSet::new();
        for (f, &k) in factors.iter().zip(&blocks) {
            prop_assert_eq!(f.rank(), k);
            residues.extend(f.pairs().iter().map(|p| p.s));
        }
        let expected: BTreeSet<u64> = label.pairs().iter().map(|p| p.s).collect();
        prop_assert_eq!(residues, expected);
    }
}

//! Oversemigroup enumeration and decomposition checked against brute force
//! over whole lattices of small semigroups.

mod support;

use numsg::families::{check_lemma, skn_certificate};
use numsg::oversemigroups::irreducible_oversemigroups_omitting;
use numsg::{
    bounds, constructive_decomposition, enumerate_irreducible_oversemigroups,
    enumerate_oversemigroups, halfline, maximal_irreducible_avoiding, minimal_decomposition, skn,
    smallest_prime_factor, verify_decomposition, xi, Semigroup,
};
use support::*;

const CAP: usize = 1_000_000;

fn sg(gens: &[u64]) -> Semigroup {
    Semigroup::from_generators(gens).unwrap()
}

#[test]
fn enumeration_matches_gap_subset_filter_up_to_frobenius_12() {
    for s in semigroups_with_gaps_within(12) {
        let set = enumerate_oversemigroups(&s, CAP).unwrap();
        let mut got: Vec<u64> = set.members.iter().map(|t| mask_of(&t.gaps())).collect();
        let mut expected = gap_subset_filter(&s.gaps());
        got.sort_unstable();
        expected.sort_unstable();
        assert_eq!(got, expected, "{s}");
        assert!(set.members.contains(&s));
        assert!(set.members.contains(&Semigroup::full()));
        assert!(
            set.members.windows(2).all(|w| w[0] < w[1]),
            "sorted and distinct"
        );
        assert!(set
            .members
            .iter()
            .all(|t| t.frobenius() <= s.frobenius() && t.contains_semigroup(&s)));
    }
}

#[test]
fn enumeration_examples() {
    let s = sg(&[3, 10, 11]);
    let n = enumerate_oversemigroups(&s, CAP).unwrap().len();
    assert_eq!(n, gap_subset_filter(&s.gaps()).len());
    let h4 = halfline(4).unwrap();
    assert_eq!(
        enumerate_oversemigroups(&h4, CAP).unwrap().len(),
        gap_subset_filter(&[1, 2, 3, 4]).len()
    );
}

#[test]
fn enumeration_is_deterministic() {
    let s = sg(&[5, 7, 9]);
    let a = enumerate_oversemigroups(&s, CAP).unwrap().members;
    let b = enumerate_oversemigroups(&s, CAP).unwrap().members;
    assert_eq!(a, b);
}

#[test]
fn avoiding_gives_irreducible_with_prescribed_frobenius() {
    for s in semigroups_with_gaps_within(11) {
        for x in s.gaps() {
            let t = maximal_irreducible_avoiding(&s, x).unwrap();
            assert!(t.is_irreducible(), "{s} avoiding {x}");
            assert_eq!(t.frobenius(), x as i64);
            assert!(t.contains_semigroup(&s));
        }
    }
}

#[test]
fn pruned_pool_keeps_every_useful_component() {
    for s in semigroups_with_gaps_within(11)
        .iter()
        .filter(|s| !s.is_full())
    {
        let special = s.special_gaps().unwrap();
        let full = enumerate_irreducible_oversemigroups(s, CAP)
            .unwrap()
            .members;
        let pruned = irreducible_oversemigroups_omitting(s, &special, CAP)
            .unwrap()
            .members;
        let expected: Vec<Semigroup> = full
            .into_iter()
            .filter(|t| special.iter().any(|&x| !t.contains(x as i64)))
            .collect();
        assert_eq!(pruned, expected, "{s}");
    }
}

#[test]
fn sandwich_holds_up_to_frobenius_14() {
    let lattice = enumerate_oversemigroups(&halfline(14).unwrap(), CAP)
        .unwrap()
        .members;
    for s in lattice.iter().filter(|s| !s.is_full()) {
        let b = bounds(s).unwrap();
        let exact = minimal_decomposition(s, CAP).unwrap();
        let constructive = constructive_decomposition(s).unwrap();
        assert!(
            b.h <= exact.len() && exact.len() <= b.m,
            "{s}: {b:?} {}",
            exact.len()
        );
        assert!(constructive.len() <= b.m);
        assert!(exact.len() <= constructive.len());
        assert_eq!(verify_decomposition(s, &exact.components), Ok(()));
        assert_eq!(verify_decomposition(s, &constructive.components), Ok(()));
        assert_eq!(b.witness_values.len(), b.h);
        assert!(b.h >= 1);
        for x in &b.xi_sets {
            assert!(x.members.contains(&x.a));
            assert!(x.members.iter().all(|&v| !s.contains(v as i64)), "ξ ⊆ gaps");
            assert!(x.members.iter().any(|v| b.witness_values.contains(v)));
        }
    }
}

#[test]
fn exact_size_matches_subset_search_up_to_frobenius_10() {
    for s in semigroups_with_gaps_within(10)
        .iter()
        .filter(|s| !s.is_full())
    {
        let base = mask_of(&s.gaps());
        // pool built independently: irreducible members of the subset filter
        let pool: Vec<u64> = gap_subset_filter(&s.gaps())
            .into_iter()
            .filter(|&m| m != 0)
            .filter(|&m| irreducible_by_definition(&Semigroup::from_gaps(&gaps_of(m)).unwrap()))
            .collect();
        let expected = min_subset_intersection(base, &pool).unwrap();
        assert_eq!(
            minimal_decomposition(s, CAP).unwrap().len(),
            expected,
            "{s}"
        );
    }
}

#[test]
fn cover_criterion_is_sound_for_small_pools() {
    let mut tested = 0;
    for s in semigroups_with_gaps_within(10)
        .iter()
        .filter(|s| !s.is_full())
    {
        let pool = enumerate_irreducible_oversemigroups(s, CAP)
            .unwrap()
            .members;
        if pool.len() > 12 {
            continue;
        }
        let special = s.special_gaps().unwrap();
        let base = mask_of(&s.gaps());
        let masks: Vec<u64> = pool.iter().map(|t| mask_of(&t.gaps())).collect();
        for sel in 1u32..1 << pool.len() {
            let chosen: Vec<usize> = (0..pool.len()).filter(|i| sel >> i & 1 == 1).collect();
            let meet_is_s = chosen.iter().fold(0, |m, &i| m | masks[i]) == base;
            let covers = special
                .iter()
                .all(|&x| chosen.iter().any(|&i| !pool[i].contains(x as i64)));
            assert_eq!(meet_is_s, covers, "{s} {chosen:?}");
        }
        tested += 1;
    }
    assert!(tested > 50);
}

#[test]
fn hitting_set_matches_product_minimization() {
    let mut tested = 0;
    for s in semigroups_with_gaps_within(13)
        .iter()
        .filter(|s| !s.is_full())
    {
        let b = bounds(s).unwrap();
        let sets: Vec<Vec<u64>> = b.xi_sets.iter().map(|x| x.members.clone()).collect();
        if product_size(&sets) <= 1_000_000 {
            assert_eq!(b.h, h_by_product(&sets), "{s}");
            tested += 1;
        }
    }
    assert!(tested > 100);
}

#[test]
fn xi_matches_definition() {
    for s in semigroups_with_gaps_within(11)
        .iter()
        .filter(|s| !s.is_full())
    {
        for a in s.bpf().unwrap() {
            assert_eq!(
                xi(s, a).unwrap().members,
                xi_by_definition(s, a),
                "{s} a = {a}"
            );
        }
    }
}

#[test]
fn lemma_holds_on_small_instances() {
    for (k, n) in [(3, 8), (3, 9), (3, 11), (4, 16), (5, 27), (5, 29)] {
        let r = check_lemma(k, n, CAP).unwrap();
        assert!(r.holds(), "S_{{{k},{n}}}: {:?}", r.violations);
        assert!(r.pool_size > 0);
    }
}

#[test]
fn skn_lower_bound_d_minus_one_for_small_k() {
    for k in [4u64, 6, 9] {
        let d = smallest_prime_factor(k) as usize;
        for n in k * k - 1..=90 {
            if (n - 1) % k == 0 {
                continue;
            }
            let cert = skn_certificate(k, n, 300_000).unwrap();
            assert!(cert.lower_bound() >= d - 1, "{cert:?}");
            assert!(cert.constructive >= cert.lower_bound());
            if let Some(exact) = cert.exact {
                assert!(cert.h <= exact && exact <= cert.m, "{cert:?}");
            }
        }
    }
}

#[test]
fn skn_frobenius_is_n_minus_one() {
    let mut count = 0;
    for k in 2..=14u64 {
        for n in k * k - 1..=200 {
            if (n - 1) % k != 0 {
                assert_eq!(skn(k, n).unwrap().frobenius(), n as i64 - 1);
                count += 1;
            }
        }
    }
    assert!(count > 1000);
}

#[test]
fn halfline_pf_is_one_through_n() {
    for n in 1..=60 {
        let s = halfline(n).unwrap();
        assert_eq!(s.pseudo_frobenius().unwrap(), (1..=n).collect::<Vec<_>>());
        assert_eq!(s.frobenius(), n as i64);
        assert_eq!(s.generators(), (n + 1..=2 * n + 1).collect::<Vec<_>>());
    }
}

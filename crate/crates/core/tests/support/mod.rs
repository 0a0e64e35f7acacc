//! Brute-force oracles. None of these call into the library's algorithms;
//! they work from definitions on plain integers and bitmasks.
#![allow(dead_code)]

use numsg::Semigroup;

/// Coin-problem DP: is `x` a nonnegative integer combination of `gens`?
pub fn representable(gens: &[u64], x: u64) -> bool {
    let x = x as usize;
    let mut reach = vec![false; x + 1];
    reach[0] = true;
    for v in 1..=x {
        reach[v] = gens
            .iter()
            .any(|&g| g as usize <= v && reach[v - g as usize]);
    }
    reach[x]
}

/// Bit `x` of `mask` set means `x` is a gap.
pub fn complement_closed(mask: u64) -> bool {
    if mask & 1 != 0 {
        return false;
    }
    let top = 64 - mask.leading_zeros() as u64;
    for x in 1..top {
        if mask >> x & 1 == 1 {
            continue;
        }
        for y in x..top - x {
            if mask >> y & 1 == 0 && mask >> (x + y) & 1 == 1 {
                return false;
            }
        }
    }
    true
}

pub fn mask_of(gaps: &[u64]) -> u64 {
    gaps.iter().fold(0, |m, &g| m | 1 << g)
}

pub fn gaps_of(mask: u64) -> Vec<u64> {
    (0..64).filter(|&x| mask >> x & 1 == 1).collect()
}

/// Every subset of `gaps` whose complement is additively closed, as masks:
/// exactly the oversemigroups of the semigroup with those gaps.
pub fn gap_subset_filter(gaps: &[u64]) -> Vec<u64> {
    assert!(gaps.len() <= 20 && gaps.iter().all(|&g| g < 64));
    (0u64..1 << gaps.len())
        .map(|sel| {
            gaps.iter()
                .enumerate()
                .filter(|(i, _)| sel >> i & 1 == 1)
                .fold(0u64, |m, (_, &g)| m | 1 << g)
        })
        .filter(|&m| complement_closed(m))
        .collect()
}

/// All numerical semigroups whose gaps are all at most `n` (n < 64).
pub fn semigroups_with_gaps_within(n: u64) -> Vec<Semigroup> {
    let gaps: Vec<u64> = (1..=n).collect();
    let mut out: Vec<Semigroup> = gap_subset_filter(&gaps)
        .into_iter()
        .map(|m| Semigroup::from_gaps(&gaps_of(m)).unwrap())
        .collect();
    out.sort();
    out
}

/// Pseudo-Frobenius numbers straight from the definition: test every
/// nonzero element up to `F + max generator`.
pub fn pf_by_definition(s: &Semigroup) -> Vec<u64> {
    let f = s.frobenius();
    let limit = f + *s.generators().last().unwrap() as i64;
    let nonzero: Vec<i64> = (1..=limit).filter(|&x| s.contains(x)).collect();
    (1..=f)
        .filter(|&x| !s.contains(x) && nonzero.iter().all(|&e| s.contains(x + e)))
        .map(|x| x as u64)
        .collect()
}

/// Irreducibility from the definition: no two strictly larger
/// oversemigroups intersect to `S`.
pub fn irreducible_by_definition(s: &Semigroup) -> bool {
    let base = mask_of(&s.gaps());
    let over: Vec<u64> = gap_subset_filter(&s.gaps())
        .into_iter()
        .filter(|&m| m != base)
        .collect();
    !over
        .iter()
        .enumerate()
        .any(|(i, &a)| over[i..].iter().any(|&b| a | b == base))
}

/// Smallest r for which some r-subset of `pool` (gap masks) has gap union
/// equal to `base`. Plain subset enumeration, no cover reduction.
pub fn min_subset_intersection(base: u64, pool: &[u64]) -> Option<usize> {
    fn search(base: u64, pool: &[u64], start: usize, left: usize, acc: u64) -> bool {
        if left == 0 {
            return acc == base;
        }
        (start..pool.len()).any(|i| search(base, pool, i + 1, left - 1, acc | pool[i]))
    }
    (1..=pool.len()).find(|&r| search(base, pool, 0, r, 0))
}

/// `min #{b_1, …, b_m}` over the full product of the ξ-sets.
pub fn h_by_product(xi: &[Vec<u64>]) -> usize {
    fn walk(xi: &[Vec<u64>], i: usize, picked: &mut Vec<u64>, best: &mut usize) {
        if i == xi.len() {
            let mut d = picked.clone();
            d.sort_unstable();
            d.dedup();
            *best = (*best).min(d.len());
            return;
        }
        for &v in &xi[i] {
            picked.push(v);
            walk(xi, i + 1, picked, best);
            picked.pop();
        }
    }
    let mut best = usize::MAX;
    walk(xi, 0, &mut Vec::new(), &mut best);
    best
}

pub fn product_size(xi: &[Vec<u64>]) -> u128 {
    xi.iter().map(|x| x.len() as u128).product()
}

/// ξ(a) through the definition, materializing `⟨S, t⟩` from generators.
pub fn xi_by_definition(s: &Semigroup, a: u64) -> Vec<u64> {
    let f = s.frobenius() as u64;
    (0..=f - a)
        .filter(|&t| {
            let mut gens = s.generators().to_vec();
            if t > 0 {
                gens.push(t);
            }
            !representable(&gens, a + t)
        })
        .map(|t| a + t)
        .collect()
}

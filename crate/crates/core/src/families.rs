//! Two families whose minimal irreducible decompositions grow without bound:
//! `S_{k,n} = ⟨k, n, n+1, …, n+k-1⟩` and the half-lines `{0} ∪ {n+1, …}`.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::decomposition::{bounds, constructive_decomposition, minimal_decomposition};
use crate::error::{Error, Result};
use crate::oversemigroups::enumerate_irreducible_oversemigroups;
use crate::semigroup::{Semigroup, DEFAULT_CAPACITY};

/// Largest `a` whose factorial the witness search will compute.
const FACTORIAL_LIMIT: u64 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    Skn,
    Halfline,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyWitness {
    pub kind: FamilyKind,
    pub k: u64,
    /// Smallest prime factor of `k` (`S_{k,n}` only).
    pub d: Option<u64>,
    pub n: BigUint,
    /// `a_1, …, a_k` (half-line only).
    pub a_sequence: Vec<BigUint>,
    /// `n` fits in the default table capacity.
    pub materializable: bool,
}

impl FamilyWitness {
    /// Parameters of `S_{k,n}` after checking the hypotheses.
    pub fn skn(k: u64, n: u64) -> Result<Self> {
        check_skn(k, n)?;
        Ok(FamilyWitness {
            kind: FamilyKind::Skn,
            k,
            d: Some(smallest_prime_factor(k)),
            n: BigUint::from(n),
            a_sequence: Vec::new(),
            materializable: fits(n as u128 + k as u128),
        })
    }

    /// `n` as a machine integer, when it is one.
    pub fn n_u64(&self) -> Option<u64> {
        self.n.to_u64()
    }
}

fn fits(required: u128) -> bool {
    required <= DEFAULT_CAPACITY as u128
}

pub fn smallest_prime_factor(k: u64) -> u64 {
    assert!(k >= 2, "smallest_prime_factor needs k >= 2");
    let mut p = 2;
    while p * p <= k {
        if k.is_multiple_of(p) {
            return p;
        }
        p += 1;
    }
    k
}

fn check_skn(k: u64, n: u64) -> Result<()> {
    let violated = |hypothesis| Err(Error::HypothesisViolated { hypothesis, k, n });
    if k < 2 {
        return violated("k >= 2");
    }
    if (n as u128) < (k as u128) * (k as u128) - 1 {
        return violated("n >= k^2 - 1");
    }
    if (n - 1).is_multiple_of(k) {
        return violated("k does not divide n - 1");
    }
    Ok(())
}

/// `S_{k,n} = ⟨k, n, n+1, …, n+k-1⟩`, whose Frobenius number is `n - 1`.
pub fn skn(k: u64, n: u64) -> Result<Semigroup> {
    check_skn(k, n)?;
    if !fits(n as u128 + 1) {
        return Err(Error::CapacityExceeded {
            required: n as u128 + 1,
            capacity: DEFAULT_CAPACITY,
        });
    }
    let mut gens = vec![k];
    gens.extend(n..n + k);
    let s = Semigroup::from_generators(&gens)?;
    if s.frobenius() != n as i64 - 1 {
        return Err(Error::InternalVerificationFailed(format!(
            "F(S_{{{k},{n}}}) = {}, expected {}",
            s.frobenius(),
            n - 1
        )));
    }
    Ok(s)
}

/// `⟨p, p²+1, …, p²+p-1⟩` for a prime `p`; equal to `S_{p,p²}`.
pub fn prime_square_semigroup(p: u64) -> Result<Semigroup> {
    if p < 2 || smallest_prime_factor(p) != p {
        return Err(Error::HypothesisViolated {
            hypothesis: "p is prime",
            k: p,
            n: p.saturating_mul(p),
        });
    }
    let mut gens = vec![p];
    gens.extend(p * p + 1..p * p + p);
    Semigroup::from_generators(&gens)
}

/// `{0} ∪ {n+1, n+2, …}`.
pub fn halfline(n: u64) -> Result<Semigroup> {
    if n == 0 {
        return Err(Error::InvalidArgument("half-line needs n >= 1".into()));
    }
    if !fits(n as u128 + 2) {
        return Err(Error::CapacityExceeded {
            required: n as u128 + 2,
            capacity: DEFAULT_CAPACITY,
        });
    }
    let mut member = vec![false; n as usize + 2];
    member[0] = true;
    member[n as usize + 1] = true;
    Ok(Semigroup::from_prefix(&member))
}

fn factorial(a: u64) -> BigUint {
    (2..=a).fold(BigUint::one(), |acc, i| acc * i)
}

/// `a_1 = 1`, `a_i = a_{i-1}! + a_{i-1}`, and the least `n` with
/// `a_k! | n - a_k` and `n - a_k ≥ ⌊n/2⌋ + 1`.
pub fn halfline_witness(k: u32) -> Result<FamilyWitness> {
    if k == 0 {
        return Err(Error::InvalidArgument("witness needs k >= 1".into()));
    }
    let too_large = |a: &BigUint| Error::WitnessTooLarge {
        k,
        digits: a.to_string().len(),
    };
    let mut seq = vec![BigUint::one()];
    while seq.len() < k as usize {
        let prev = seq.last().unwrap();
        let small = prev
            .to_u64()
            .filter(|&a| a <= FACTORIAL_LIMIT)
            .ok_or_else(|| too_large(prev))?;
        seq.push(factorial(small) + prev);
    }
    let last = seq.last().unwrap().clone();
    let a_k = last
        .to_u64()
        .filter(|&a| a <= FACTORIAL_LIMIT)
        .ok_or_else(|| too_large(&last))?;
    let modulus = factorial(a_k);

    // n = a_k + j·a_k!; the left side grows twice as fast, so j stays tiny
    let two = BigUint::from(2u32);
    let mut j = BigUint::zero();
    let n = loop {
        let n = &last + &j * &modulus;
        if &n - &last > &n / &two {
            break n;
        }
        j += 1u32;
    };
    let materializable = n.to_u128().is_some_and(|v| fits(v + 2));
    Ok(FamilyWitness {
        kind: FamilyKind::Halfline,
        k: k as u64,
        d: None,
        n,
        a_sequence: seq,
        materializable,
    })
}

/// Outcome of checking, over all irreducible oversemigroups `I ⊇ S_{k,n}`,
/// that a gap `n - i` (`1 ≤ i ≤ d - 1`) of `I` forces `F(I) = n - i`.
#[derive(Debug, Clone)]
pub struct LemmaReport {
    pub k: u64,
    pub n: u64,
    pub d: u64,
    pub pool_size: usize,
    /// Pairs `(I, i)` where `n - i` is a gap of `I`.
    pub instances: usize,
    pub violations: Vec<(Semigroup, u64)>,
}

impl LemmaReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn check_lemma(k: u64, n: u64, cap: usize) -> Result<LemmaReport> {
    let s = skn(k, n)?;
    let d = smallest_prime_factor(k);
    let pool = enumerate_irreducible_oversemigroups(&s, cap)?.members;
    let mut instances = 0;
    let mut violations = Vec::new();
    for t in &pool {
        for i in 1..d.min(n) {
            if !t.contains((n - i) as i64) {
                instances += 1;
                if t.frobenius() != (n - i) as i64 {
                    violations.push((t.clone(), i));
                }
            }
        }
    }
    Ok(LemmaReport {
        k,
        n,
        d,
        pool_size: pool.len(),
        instances,
        violations,
    })
}

/// Number of components with pairwise distinct Frobenius numbers `n - i`
/// that every decomposition of `S_{k,n}` must contain.
///
/// Index `i` counts when, for every `j < i`, an irreducible `I` with
/// `F(I) = n - j` and `n - i` a gap would contain `i - j` and `k`, forcing
/// `F(I) ≤ (i-j)k - (i-j) - k < n - j`, a contradiction.
pub fn lemma_component_count(k: u64, n: u64) -> Result<u64> {
    check_skn(k, n)?;
    let d = smallest_prime_factor(k);
    let count = (1..d)
        .filter(|&i| {
            (1..i).all(|j| {
                let c = (i - j) as i128;
                let k = k as i128;
                c * k - c - k < (n - j) as i128
            })
        })
        .count();
    Ok(count as u64)
}

/// Lower bound on the number of components of any irreducible
/// decomposition of `S_{k,n}`, with the evidence behind it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SknCertificate {
    pub k: u64,
    pub n: u64,
    pub d: u64,
    /// Exact minimum, when the oversemigroup pool fits under the cap.
    pub exact: Option<usize>,
    pub h: usize,
    pub m: usize,
    pub lemma_count: u64,
    pub constructive: usize,
}

impl SknCertificate {
    pub fn lower_bound(&self) -> usize {
        self.exact
            .unwrap_or_else(|| self.h.max(self.lemma_count as usize))
    }
}

pub fn skn_certificate(k: u64, n: u64, cap: usize) -> Result<SknCertificate> {
    let s = skn(k, n)?;
    let b = bounds(&s)?;
    let exact = match minimal_decomposition(&s, cap) {
        Ok(dec) => Some(dec.len()),
        Err(Error::CapExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(SknCertificate {
        k,
        n,
        d: smallest_prime_factor(k),
        exact,
        h: b.h,
        m: b.m,
        lemma_count: lemma_component_count(k, n)?,
        constructive: constructive_decomposition(&s)?.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::xi;

    #[test]
    fn skn_examples() {
        let s = skn(3, 8).unwrap();
        assert_eq!(s.generators(), &[3, 8, 10]);
        assert_eq!(s.frobenius(), 7);
        assert_eq!(
            skn(5, 26),
            Err(Error::HypothesisViolated {
                hypothesis: "k does not divide n - 1",
                k: 5,
                n: 26
            })
        );
        assert_eq!(skn(5, 27).unwrap().frobenius(), 26);
        assert!(matches!(skn(4, 14), Err(Error::HypothesisViolated { .. })));
        assert!(matches!(skn(1, 5), Err(Error::HypothesisViolated { .. })));
        assert!(matches!(
            skn(3, 2_000_000),
            Err(Error::CapacityExceeded { .. })
        ));
    }

    #[test]
    fn prime_square_is_skn_at_p_squared() {
        for p in [2, 3, 5, 7] {
            assert_eq!(prime_square_semigroup(p).unwrap(), skn(p, p * p).unwrap());
            assert_eq!(
                prime_square_semigroup(p).unwrap().frobenius(),
                (p * p - 1) as i64
            );
        }
        assert!(prime_square_semigroup(4).is_err());
    }

    #[test]
    fn halfline_examples() {
        assert_eq!(
            halfline(6).unwrap().pseudo_frobenius().unwrap(),
            vec![1, 2, 3, 4, 5, 6]
        );
        assert_eq!(
            halfline(1).unwrap(),
            Semigroup::from_generators(&[2, 3]).unwrap()
        );
        assert_eq!(
            halfline(28).unwrap().bpf().unwrap(),
            (15..=28).collect::<Vec<_>>()
        );
        assert_eq!(halfline(5).unwrap().generators(), &[6, 7, 8, 9, 10, 11]);
        assert!(halfline(0).is_err());
    }

    #[test]
    fn witness_examples() {
        let w = halfline_witness(2).unwrap();
        assert_eq!(w.a_sequence, vec![BigUint::from(1u32), BigUint::from(2u32)]);
        assert_eq!(w.n, BigUint::from(6u32));
        assert!(w.materializable);

        let w = halfline_witness(3).unwrap();
        assert_eq!(w.n_u64(), Some(28));
        assert_eq!(w.a_sequence.last().unwrap(), &BigUint::from(4u32));

        let w = halfline_witness(1).unwrap();
        assert_eq!(w.n_u64(), Some(3));
    }

    #[test]
    fn witness_k4_is_28_factorial_plus_28() {
        let w = halfline_witness(4).unwrap();
        let a: Vec<u64> = w.a_sequence.iter().map(|x| x.to_u64().unwrap()).collect();
        assert_eq!(a, vec![1, 2, 4, 28]);
        assert_eq!(w.n, factorial(28) + 28u32);
        assert_eq!(w.n.to_string(), "304888344611713860501504000028");
        assert!(!w.materializable);
    }

    #[test]
    fn witness_k5_is_rejected() {
        assert!(matches!(
            halfline_witness(5),
            Err(Error::WitnessTooLarge { k: 5, digits: 30 })
        ));
        assert!(halfline_witness(0).is_err());
    }

    #[test]
    fn witness_xi_sets_are_singletons() {
        for k in 1..=3u32 {
            let w = halfline_witness(k).unwrap();
            let n = w.n_u64().unwrap();
            let s = halfline(n).unwrap();
            for a in &w.a_sequence {
                let v = n - a.to_u64().unwrap();
                assert_eq!(xi(&s, v).unwrap().members, vec![v], "k = {k}, a = {a}");
            }
            assert!(bounds(&s).unwrap().h >= k as usize);
        }
    }

    #[test]
    fn smallest_prime_factors() {
        assert_eq!(smallest_prime_factor(2), 2);
        assert_eq!(smallest_prime_factor(9), 3);
        assert_eq!(smallest_prime_factor(91), 7);
        assert_eq!(smallest_prime_factor(97), 97);
        for k in 2..500u64 {
            let p = smallest_prime_factor(k);
            assert!(p * p <= k || p == k);
            assert_eq!(k % p, 0);
        }
    }

    #[test]
    fn lemma_small_instance() {
        let r = check_lemma(3, 8, 100_000).unwrap();
        assert!(r.holds());
        assert!(r.instances > 0);
        assert_eq!(lemma_component_count(3, 8).unwrap(), 2);
        assert_eq!(lemma_component_count(4, 16).unwrap(), 1);
    }
}

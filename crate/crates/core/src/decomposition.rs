//! Irreducible decompositions and the bounds on their size.
//!
//! Upper bound: one irreducible component per element of `BPF(S)`.
//! Lower bound: `h(S)`, the fewest distinct values that can be picked one
//! from each `ξ(a)`, `a ∈ BPF(S)`.

use thiserror::Error as ThisError;

use crate::bitset::BitSet;
use crate::cover::CoverInstance;
use crate::error::{Error, Result};
use crate::oversemigroups::{irreducible_oversemigroups_omitting, maximal_irreducible_avoiding};
use crate::semigroup::Semigroup;

/// `ξ(a) = { a + t : t ≥ 0, a + t ∉ ⟨S, t⟩ }`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XiSet {
    pub a: u64,
    pub members: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    /// `|BPF(S)|`, the upper bound.
    pub m: usize,
    /// The lower bound.
    pub h: usize,
    pub xi_sets: Vec<XiSet>,
    /// `h` values hitting every ξ-set.
    pub witness_values: Vec<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Constructive,
    ExactCover,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Constructive => "constructive",
            Method::ExactCover => "exact-cover",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub components: Vec<Semigroup>,
    pub exact_minimum: bool,
    pub method: Method,
}

impl Decomposition {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

/// Why a proposed decomposition is not one.
#[derive(Debug, Clone, PartialEq, Eq, ThisError)]
pub enum DecompositionDefect {
    #[error("no components")]
    NoComponents,
    #[error("component {index} is not irreducible")]
    NotIrreducible { index: usize },
    #[error("component {index} misses {witness}, an element of the base")]
    DoesNotContainBase { index: usize, witness: u64 },
    #[error("intersection contains {witness}, a gap of the base")]
    IntersectionTooLarge { witness: u64 },
}

/// Whether `a + t ∈ ⟨S, t⟩`, i.e. `a + t - c·t ∈ S` for some `c ≥ 0`.
fn adjoined_contains(s: &Semigroup, t: u64, x: u64) -> bool {
    if t == 0 {
        return s.has(x);
    }
    (0..=x / t).any(|c| s.has(x - c * t))
}

pub fn xi(s: &Semigroup, a: u64) -> Result<XiSet> {
    if !s.bpf()?.contains(&a) {
        return Err(Error::NotBpfElement(a));
    }
    // a + t must be a gap of ⟨S, t⟩ ⊇ S, so a + t ≤ F(S)
    let f = s.frobenius() as u64;
    let members = (0..=f - a)
        .filter(|&t| !adjoined_contains(s, t, a + t))
        .map(|t| a + t)
        .collect();
    Ok(XiSet { a, members })
}

pub fn bounds(s: &Semigroup) -> Result<BoundsReport> {
    let bpf = s.bpf()?;
    let xi_sets = bpf.iter().map(|&a| xi(s, a)).collect::<Result<Vec<_>>>()?;
    let (h, witness_values) = min_hitting_values(&xi_sets)?;
    Ok(BoundsReport {
        m: bpf.len(),
        h,
        xi_sets,
        witness_values,
    })
}

/// Minimum hitting set over the ξ-sets: value `v` covers every index whose
/// ξ-set contains it. Values are tried in ascending order.
fn min_hitting_values(xi_sets: &[XiSet]) -> Result<(usize, Vec<u64>)> {
    let mut values: Vec<u64> = xi_sets
        .iter()
        .flat_map(|x| x.members.iter().copied())
        .collect();
    values.sort_unstable();
    values.dedup();
    let covers: Vec<Vec<usize>> = values
        .iter()
        .map(|v| {
            xi_sets
                .iter()
                .enumerate()
                .filter(|(_, x)| x.members.binary_search(v).is_ok())
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let instance = CoverInstance::new(xi_sets.len(), covers)?;
    let chosen = instance.solve(None)?;
    Ok((
        chosen.len(),
        chosen.into_iter().map(|i| values[i]).collect(),
    ))
}

/// One component per BPF element: the maximal irreducible oversemigroup
/// with that element as Frobenius number.
pub fn constructive_decomposition(s: &Semigroup) -> Result<Decomposition> {
    let bpf = s.bpf()?;
    let mut components: Vec<Semigroup> = Vec::with_capacity(bpf.len());
    if s.is_irreducible() {
        components.push(s.clone());
    } else {
        for a in bpf {
            let c = maximal_irreducible_avoiding(s, a)?;
            if !components.contains(&c) {
                components.push(c);
            }
        }
    }
    check_intersection(s, &components)?;
    Ok(Decomposition {
        components,
        exact_minimum: false,
        method: Method::Constructive,
    })
}

/// Exact minimum decomposition by set cover: the universe is the special
/// gaps of `s` and an irreducible oversemigroup covers those it omits.
///
/// `T ⊇ S` equals the intersection of a family of oversemigroups exactly
/// when each special gap of `S` is omitted by some member, since
/// `max(T \ S)` is always a special gap of `S`.
pub fn minimal_decomposition(s: &Semigroup, cap: usize) -> Result<Decomposition> {
    let special = s.special_gaps()?;
    if s.is_irreducible() {
        return Ok(Decomposition {
            components: vec![s.clone()],
            exact_minimum: true,
            method: Method::ExactCover,
        });
    }
    let constructive = constructive_decomposition(s)?;
    let pool = irreducible_oversemigroups_omitting(s, &special, cap)?.members;

    let coverage = |t: &Semigroup| {
        let mut mask = BitSet::new(special.len());
        for (j, &x) in special.iter().enumerate() {
            if !t.has(x) {
                mask.set(j);
            }
        }
        mask
    };
    let mut candidates: Vec<(BitSet, Semigroup)> =
        pool.into_iter().map(|t| (coverage(&t), t)).collect();
    candidates.sort_by(|(ma, ta), (mb, tb)| {
        mb.count_ones()
            .cmp(&ma.count_ones())
            .then_with(|| tb.frobenius().cmp(&ta.frobenius()))
            .then_with(|| ta.table().cmp_lex(tb.table()))
    });
    // the first candidate of each coverage class dominates the rest
    let mut seen = std::collections::HashSet::new();
    candidates.retain(|(mask, _)| !mask.is_empty() && seen.insert(mask.clone()));

    let (masks, sets): (Vec<BitSet>, Vec<Semigroup>) = candidates.into_iter().unzip();
    let instance = CoverInstance::from_masks(special.len(), masks);
    let chosen = instance.solve(Some(constructive.len()))?;
    let components: Vec<Semigroup> = chosen.into_iter().map(|i| sets[i].clone()).collect();
    check_intersection(s, &components)?;
    Ok(Decomposition {
        components,
        exact_minimum: true,
        method: Method::ExactCover,
    })
}

fn check_intersection(s: &Semigroup, components: &[Semigroup]) -> Result<()> {
    verify_decomposition(s, components)
        .map_err(|d| Error::InternalVerificationFailed(format!("decomposition of {s}: {d}")))
}

/// Checks that every component is irreducible, contains `s`, and that the
/// components intersect to exactly `s`.
pub fn verify_decomposition(
    s: &Semigroup,
    components: &[Semigroup],
) -> std::result::Result<(), DecompositionDefect> {
    if components.is_empty() {
        return Err(DecompositionDefect::NoComponents);
    }
    for (index, c) in components.iter().enumerate() {
        if !c.is_irreducible() {
            return Err(DecompositionDefect::NotIrreducible { index });
        }
        if let Some(witness) = c.gaps().into_iter().find(|&g| s.has(g)) {
            return Err(DecompositionDefect::DoesNotContainBase { index, witness });
        }
    }
    let meet = components
        .iter()
        .skip(1)
        .fold(components[0].clone(), |acc, c| acc.intersect(c));
    if let Some(witness) = s.gaps().into_iter().find(|&g| meet.has(g)) {
        return Err(DecompositionDefect::IntersectionTooLarge { witness });
    }
    Ok(())
}

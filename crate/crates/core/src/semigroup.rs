//! Canonical numerical semigroups.
//!
//! A semigroup is stored as its membership table on `0..=F+1` together with
//! its minimal generating set. Equality, hashing and ordering only look at
//! `(F, table)`, which is a complete fingerprint.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use num_integer::Integer;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Largest membership table a constructor will allocate.
pub const DEFAULT_CAPACITY: usize = 1 << 20;

#[derive(Clone)]
pub struct Semigroup {
    generators: Vec<u64>,
    frobenius: i64,
    table: BitSet,
}

impl Semigroup {
    /// The full semigroup N.
    pub fn full() -> Self {
        Semigroup {
            generators: vec![1],
            frobenius: -1,
            table: BitSet::from_bools([true]),
        }
    }

    /// The semigroup generated by `gens`, with redundant generators removed.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        Self::from_generators_with_capacity(gens, DEFAULT_CAPACITY)
    }

    pub fn from_generators_with_capacity(gens: &[u64], capacity: usize) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyInput);
        }
        if gens.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        let gcd = gens.iter().fold(0u64, |acc, &g| acc.gcd(&g));
        if gcd != 1 {
            return Err(Error::GcdNotOne { gcd });
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let m = sorted[0];
        if m == 1 {
            return Ok(Self::full());
        }

        // F(<a, b>) for a coprime pair bounds F(S); it only sizes the buffer
        let hint = coprime_pair_bound(&sorted).unwrap_or(0);
        let mut member: Vec<bool> = Vec::with_capacity((hint as usize).min(capacity) + 2);
        let mut run = 0u64;
        let mut x = 0u64;
        // m consecutive elements mean everything beyond is in S
        while run < m {
            if x as u128 >= capacity as u128 {
                return Err(Error::CapacityExceeded {
                    required: (hint as u128 + 2).max(capacity as u128 + 1),
                    capacity,
                });
            }
            let inside = x == 0
                || sorted
                    .iter()
                    .take_while(|&&g| g <= x)
                    .any(|&g| member[(x - g) as usize]);
            member.push(inside);
            run = if inside { run + 1 } else { 0 };
            x += 1;
        }
        Ok(Self::from_prefix(&member))
    }

    /// The semigroup whose gap set is exactly `gaps`.
    pub fn from_gaps(gaps: &[u64]) -> Result<Self> {
        Self::from_gaps_with_capacity(gaps, DEFAULT_CAPACITY)
    }

    pub fn from_gaps_with_capacity(gaps: &[u64], capacity: usize) -> Result<Self> {
        if gaps.contains(&0) {
            return Err(Error::ZeroGap);
        }
        let Some(&max) = gaps.iter().max() else {
            return Ok(Self::full());
        };
        if max as u128 + 2 > capacity as u128 {
            return Err(Error::CapacityExceeded {
                required: max as u128 + 2,
                capacity,
            });
        }
        let mut member = vec![true; max as usize + 2];
        for &g in gaps {
            member[g as usize] = false;
        }
        let elements: Vec<usize> = (1..=max as usize).filter(|&i| member[i]).collect();
        for (pos, &x) in elements.iter().enumerate() {
            for &y in &elements[pos..] {
                if x + y > max as usize {
                    break;
                }
                if !member[x + y] {
                    return Err(Error::NotASemigroup {
                        x: x as u64,
                        y: y as u64,
                    });
                }
            }
        }
        Ok(Self::from_prefix(&member))
    }

    /// Builds from a membership prefix starting at 0; every integer past the
    /// prefix is taken to be an element. The prefix must describe a semigroup.
    pub(crate) fn from_prefix(member: &[bool]) -> Self {
        debug_assert!(member.first() == Some(&true));
        let frobenius = member.iter().rposition(|&b| !b).map_or(-1, |f| f as i64);
        let len = (frobenius + 2) as usize;
        let table = if len <= member.len() {
            BitSet::from_bools(member[..len].iter().copied())
        } else {
            BitSet::from_bools(
                member
                    .iter()
                    .copied()
                    .chain(std::iter::repeat(true))
                    .take(len),
            )
        };
        let generators = minimal_generators(&table, frobenius);
        Semigroup {
            generators,
            frobenius,
            table,
        }
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// Largest gap; -1 for N.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    pub fn is_full(&self) -> bool {
        self.frobenius < 0
    }

    /// Number of gaps.
    pub fn genus(&self) -> usize {
        self.table.len() - self.table.count_ones()
    }

    pub fn gaps(&self) -> Vec<u64> {
        self.gap_iter().collect()
    }

    pub(crate) fn gap_iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.table.iter_zeros().map(|x| x as u64)
    }

    /// Membership table over `0..=F+1`.
    pub fn table(&self) -> &BitSet {
        &self.table
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= 0 && self.has(x as u64)
    }

    #[inline]
    pub(crate) fn has(&self, x: u64) -> bool {
        x as i64 > self.frobenius || self.table.get(x as usize)
    }

    #[inline]
    pub(crate) fn is_gap(&self, x: u64) -> bool {
        !self.has(x)
    }

    /// `other ⊆ self`.
    pub fn contains_semigroup(&self, other: &Semigroup) -> bool {
        self.frobenius <= other.frobenius && self.gaps().iter().all(|&g| !other.has(g))
    }

    /// The semigroup generated by `self ∪ {t}`.
    pub fn adjoin(&self, t: u64) -> Semigroup {
        if t == 0 || self.has(t) {
            return self.clone();
        }
        if t == 1 {
            return Self::full();
        }
        let f = self.frobenius as usize;
        let t = t as usize;
        let mut member = Vec::with_capacity(f + 2);
        for x in 0..=f + 1 {
            let inside = self.table.get(x) || (x >= t && member[x - t]);
            member.push(inside);
        }
        Self::from_prefix(&member)
    }

    /// Intersection; the gap set is the union of both gap sets.
    pub fn intersect(&self, other: &Semigroup) -> Semigroup {
        let f = self.frobenius.max(other.frobenius);
        if f < 0 {
            return Self::full();
        }
        let member: Vec<bool> = (0..=f as u64 + 1)
            .map(|x| self.has(x) && other.has(x))
            .collect();
        Self::from_prefix(&member)
    }

    /// The unitary extension `self ∪ {h}` for a special gap `h`.
    pub fn add_special_gap(&self, h: u64) -> Result<Semigroup> {
        if !self.is_special_gap(h) {
            return Err(Error::NotASpecialGap(h));
        }
        let mut table = self.table.clone();
        table.set(h as usize);
        let frobenius = if h as i64 == self.frobenius {
            let f = (0..h as usize)
                .rev()
                .find(|&x| !table.get(x))
                .map_or(-1, |x| x as i64);
            table.truncate((f + 2) as usize);
            f
        } else {
            self.frobenius
        };
        // only generators of the form h + (element of the extension) drop out
        let extended = |x: u64| x as i64 > frobenius || table.get(x as usize);
        let mut generators: Vec<u64> = self
            .generators
            .iter()
            .copied()
            .filter(|&g| !(g > h && extended(g - h)))
            .collect();
        let pos = generators.partition_point(|&g| g < h);
        generators.insert(pos, h);
        if frobenius < 0 {
            generators = vec![1];
        }
        Ok(Semigroup {
            generators,
            frobenius,
            table,
        })
    }
}

/// Minimal generators read off a membership table: elements of `S \ {0}`
/// that are not a sum of two nonzero elements. None exceed `F + m`.
fn minimal_generators(table: &BitSet, frobenius: i64) -> Vec<u64> {
    if frobenius < 0 {
        return vec![1];
    }
    let f = frobenius as usize;
    let has = |x: usize| x > f || table.get(x);
    let m = (1..)
        .find(|&x| has(x))
        .expect("semigroup has a nonzero element");
    let members: Vec<usize> = (m..=f + m).filter(|&x| has(x)).collect();
    members
        .iter()
        .filter(|&&s| {
            !members
                .iter()
                .take_while(|&&x| 2 * x <= s)
                .any(|&x| has(s - x))
        })
        .map(|&s| s as u64)
        .collect()
}

fn coprime_pair_bound(sorted: &[u64]) -> Option<u64> {
    let mut best: Option<u64> = None;
    for (i, &a) in sorted.iter().enumerate() {
        for &b in &sorted[i + 1..] {
            if a.gcd(&b) == 1 {
                let f = (a * b).saturating_sub(a + b);
                best = Some(best.map_or(f, |cur| cur.min(f)));
            }
        }
    }
    best
}

impl PartialEq for Semigroup {
    fn eq(&self, other: &Self) -> bool {
        self.frobenius == other.frobenius && self.table == other.table
    }
}

impl Eq for Semigroup {}

impl Hash for Semigroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.frobenius.hash(state);
        self.table.hash(state);
    }
}

impl Ord for Semigroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.frobenius
            .cmp(&other.frobenius)
            .then_with(|| self.table.cmp_lex(&other.table))
    }
}

impl PartialOrd for Semigroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Semigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_full() {
            return f.write_str("N");
        }
        f.write_str("<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(">")
    }
}

impl fmt::Debug for Semigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (F = {})", self.frobenius)
    }
}

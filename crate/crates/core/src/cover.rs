//! Exact minimum set cover.
//!
//! Candidates are indexed in the caller's preference order. Among all covers
//! of minimum size the solver returns the lexicographically least sorted
//! index list, so ties are resolved by candidate order alone.

use crate::bitset::BitSet;
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct CoverInstance {
    universe: usize,
    sets: Vec<BitSet>,
}

impl CoverInstance {
    /// `sets[i]` lists the universe elements candidate `i` covers.
    pub fn new(universe: usize, sets: Vec<Vec<usize>>) -> Result<Self> {
        let sets = sets
            .into_iter()
            .map(|elems| {
                let mut b = BitSet::new(universe);
                for e in elems {
                    if e >= universe {
                        return Err(Error::InvalidArgument(format!(
                            "element {e} outside universe of size {universe}"
                        )));
                    }
                    b.set(e);
                }
                Ok(b)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CoverInstance { universe, sets })
    }

    pub fn from_masks(universe: usize, sets: Vec<BitSet>) -> Self {
        assert!(sets.iter().all(|s| s.len() == universe));
        CoverInstance { universe, sets }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn sets(&self) -> &[BitSet] {
        &self.sets
    }

    pub fn is_cover(&self, chosen: &[usize]) -> bool {
        let mut covered = BitSet::new(self.universe);
        for &i in chosen {
            covered.union_with(&self.sets[i]);
        }
        covered.count_ones() == self.universe
    }

    /// Greedy cover: repeatedly take the candidate covering the most
    /// uncovered elements (lowest index on ties). Returned sorted.
    pub fn greedy(&self) -> Option<Vec<usize>> {
        let mut uncovered = full_set(self.universe);
        let mut chosen = Vec::new();
        while !uncovered.is_empty() {
            let (best, gain) = self
                .sets
                .iter()
                .enumerate()
                .map(|(i, s)| (i, s.intersection_count(&uncovered)))
                .fold(
                    (usize::MAX, 0),
                    |acc, cur| if cur.1 > acc.1 { cur } else { acc },
                );
            if gain == 0 {
                return None;
            }
            chosen.push(best);
            uncovered.difference_with(&self.sets[best]);
        }
        chosen.sort_unstable();
        Some(chosen)
    }

    /// Minimum cover, lexicographically least among minimum covers.
    ///
    /// `upper_bound` is the size of a known cover, if any; sizes above it
    /// are never searched.
    pub fn solve(&self, upper_bound: Option<usize>) -> Result<Vec<usize>> {
        if self.universe == 0 {
            return Ok(Vec::new());
        }
        let n = self.sets.len();
        let mut suffix_union = vec![BitSet::new(self.universe); n + 1];
        let mut suffix_max = vec![0usize; n + 1];
        for i in (0..n).rev() {
            let mut u = suffix_union[i + 1].clone();
            u.union_with(&self.sets[i]);
            suffix_union[i] = u;
            suffix_max[i] = suffix_max[i + 1].max(self.sets[i].count_ones());
        }
        let all = full_set(self.universe);
        if !all.is_subset(&suffix_union[0]) {
            return Err(Error::InvalidArgument(
                "candidates do not cover the universe".into(),
            ));
        }
        let upper = upper_bound
            .or_else(|| self.greedy().map(|g| g.len()))
            .unwrap_or(n)
            .min(n);
        let lower = self.universe.div_ceil(suffix_max[0].max(1));

        let search = Search {
            sets: &self.sets,
            suffix_union: &suffix_union,
            suffix_max: &suffix_max,
        };
        for size in lower..=upper {
            let mut chosen = Vec::with_capacity(size);
            if search.find(&all, 0, size, &mut chosen) {
                return Ok(chosen);
            }
        }
        Err(Error::InternalVerificationFailed(format!(
            "no cover of size <= {upper} although one was promised"
        )))
    }
}

struct Search<'a> {
    sets: &'a [BitSet],
    suffix_union: &'a [BitSet],
    suffix_max: &'a [usize],
}

impl Search<'_> {
    /// Depth-first over increasing index lists; the first hit is the
    /// lexicographically least cover with exactly `left` more picks.
    fn find(&self, uncovered: &BitSet, start: usize, left: usize, chosen: &mut Vec<usize>) -> bool {
        if uncovered.is_empty() {
            // a minimum search never gets here with picks to spare
            return left == 0;
        }
        if left == 0 {
            return false;
        }
        let need = uncovered.count_ones();
        for i in start..self.sets.len() {
            if !uncovered.is_subset(&self.suffix_union[i]) || left * self.suffix_max[i] < need {
                return false;
            }
            // in a minimum cover every pick adds something new
            if self.sets[i].intersection_count(uncovered) == 0 {
                continue;
            }
            let mut rest = uncovered.clone();
            rest.difference_with(&self.sets[i]);
            chosen.push(i);
            if self.find(&rest, i + 1, left - 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}

fn full_set(len: usize) -> BitSet {
    let mut b = BitSet::new(len);
    for i in 0..len {
        b.set(i);
    }
    b
}

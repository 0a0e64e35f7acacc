//! Oversemigroup enumeration by unitary extensions.
//!
//! If `T ⊋ S` then `max(T \ S)` is a special gap of `S`, so every
//! oversemigroup is reached from `S` by repeatedly adjoining special gaps.
//! The extension graph is a lattice, so the search deduplicates on the
//! canonical table.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::semigroup::Semigroup;

pub const DEFAULT_CAP: usize = 5_000_000;

#[derive(Debug, Clone)]
pub struct OversemigroupSet {
    pub base: Semigroup,
    /// Sorted by `(F, table)`.
    pub members: Vec<Semigroup>,
    pub truncated: bool,
    pub cap: usize,
}

impl OversemigroupSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// `S ∪ {h}` for each special gap `h`, in increasing order of `h`.
pub fn unitary_extensions(s: &Semigroup) -> Vec<Semigroup> {
    let Ok(special) = s.special_gaps() else {
        return Vec::new();
    };
    special
        .into_iter()
        .map(|h| {
            s.add_special_gap(h)
                .expect("special gap extends to a semigroup")
        })
        .collect()
}

/// Breadth-first closure under unitary extensions, stopping once more than
/// `cap` members would be collected. Never fails; check `truncated`.
pub fn explore_oversemigroups(s: &Semigroup, cap: usize) -> OversemigroupSet {
    closure(s, cap, |_| true)
}

/// Closure restricted to oversemigroups accepted by `admit`. The admitted
/// set must be closed toward `s` (if `T` is admitted, so is every
/// oversemigroup of `s` inside `T`) for the result to be complete.
///
/// A unitary extension has exactly one gap fewer, so a semigroup can only
/// be rediscovered within the level being built and deduplication never
/// has to look back further than that.
fn closure<F: Fn(&Semigroup) -> bool>(s: &Semigroup, cap: usize, admit: F) -> OversemigroupSet {
    let cap = cap.max(1);
    let mut members = vec![s.clone()];
    let mut level_start = 0;
    let mut truncated = false;

    'levels: while level_start < members.len() {
        let level_end = members.len();
        members[level_start..level_end].sort();
        let mut next: HashSet<Semigroup> = HashSet::new();
        for i in level_start..level_end {
            for child in unitary_extensions(&members[i]) {
                if next.contains(&child) || !admit(&child) {
                    continue;
                }
                if level_end + next.len() >= cap {
                    truncated = true;
                    members.extend(next);
                    break 'levels;
                }
                next.insert(child);
            }
        }
        level_start = level_end;
        members.extend(next);
    }

    members.sort();
    OversemigroupSet {
        base: s.clone(),
        members,
        truncated,
        cap,
    }
}

/// Irreducible oversemigroups of `s` that omit at least one of `targets`.
///
/// Oversemigroups containing every target are never expanded, which is
/// what makes exact decompositions of large instances tractable: only
/// components that omit some special gap can appear in a minimal one.
pub fn irreducible_oversemigroups_omitting(
    s: &Semigroup,
    targets: &[u64],
    cap: usize,
) -> Result<OversemigroupSet> {
    if cap == 0 {
        return Err(Error::InvalidArgument("cap must be at least 1".into()));
    }
    let mut set = closure(s, cap, |t| targets.iter().any(|&x| !t.has(x)));
    if set.truncated {
        return Err(Error::CapExceeded {
            partial: set.members.len(),
            cap,
        });
    }
    set.members.retain(|t| !t.is_full() && t.is_irreducible());
    Ok(set)
}

/// Every numerical semigroup containing `s`, including `s` and N.
pub fn enumerate_oversemigroups(s: &Semigroup, cap: usize) -> Result<OversemigroupSet> {
    if cap == 0 {
        return Err(Error::InvalidArgument("cap must be at least 1".into()));
    }
    let set = explore_oversemigroups(s, cap);
    if set.truncated {
        return Err(Error::CapExceeded {
            partial: set.members.len(),
            cap,
        });
    }
    Ok(set)
}

/// Irreducible oversemigroups of `s`, excluding N.
pub fn enumerate_irreducible_oversemigroups(s: &Semigroup, cap: usize) -> Result<OversemigroupSet> {
    let mut set = enumerate_oversemigroups(s, cap)?;
    set.members.retain(|t| !t.is_full() && t.is_irreducible());
    Ok(set)
}

/// An irreducible oversemigroup of `s` whose Frobenius number is `x`.
///
/// Repeatedly adjoins the largest special gap other than `x` until `x` is
/// the only special gap left.
pub fn maximal_irreducible_avoiding(s: &Semigroup, x: u64) -> Result<Semigroup> {
    if s.contains(x as i64) {
        return Err(Error::NotAGap(x));
    }
    let mut t = s.clone();
    loop {
        let special = t.special_gaps()?;
        match special.iter().rev().find(|&&h| h != x) {
            Some(&h) => t = t.add_special_gap(h)?,
            None => {
                debug_assert_eq!(special, vec![x]);
                return Ok(t);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[u64]) -> Semigroup {
        Semigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn unitary_extension_examples() {
        let ext = unitary_extensions(&sg(&[3, 10, 11]));
        assert_eq!(ext, vec![sg(&[3, 7, 11]), sg(&[3, 8, 10])]);
        assert!(unitary_extensions(&Semigroup::full()).is_empty());
        assert_eq!(unitary_extensions(&sg(&[2, 3])), vec![Semigroup::full()]);
    }

    #[test]
    fn two_three_has_two_oversemigroups() {
        let set = enumerate_oversemigroups(&sg(&[2, 3]), 10).unwrap();
        assert_eq!(set.members, vec![Semigroup::full(), sg(&[2, 3])]);
        assert!(!set.truncated);
    }

    #[test]
    fn cap_is_reported() {
        let s = sg(&[3, 10, 11]);
        assert_eq!(
            enumerate_oversemigroups(&s, 3).unwrap_err(),
            Error::CapExceeded { partial: 3, cap: 3 }
        );
        let partial = explore_oversemigroups(&s, 3);
        assert!(partial.truncated);
        assert_eq!(partial.len(), 3);
        assert!(matches!(
            enumerate_oversemigroups(&s, 0),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn irreducible_pool_examples() {
        let pool = enumerate_irreducible_oversemigroups(&sg(&[3, 10, 11]), 1000).unwrap();
        assert!(pool.members.contains(&sg(&[3, 7, 11])));
        assert!(pool.members.contains(&sg(&[3, 5])));
        assert!(pool
            .members
            .iter()
            .all(|t| t.is_irreducible() && !t.is_full()));

        let pool = enumerate_irreducible_oversemigroups(&sg(&[2, 5]), 1000).unwrap();
        assert_eq!(pool.members, vec![sg(&[2, 3]), sg(&[2, 5])]);

        let pool = enumerate_irreducible_oversemigroups(&Semigroup::full(), 1000).unwrap();
        assert!(pool.is_empty());
    }

    #[test]
    fn avoiding_examples() {
        let s = sg(&[3, 10, 11]);
        assert_eq!(
            maximal_irreducible_avoiding(&s, 8).unwrap(),
            sg(&[3, 7, 11])
        );
        assert_eq!(maximal_irreducible_avoiding(&s, 7).unwrap(), sg(&[3, 5]));
        let irr = sg(&[3, 5]);
        assert_eq!(maximal_irreducible_avoiding(&irr, 7).unwrap(), irr);
        assert_eq!(maximal_irreducible_avoiding(&s, 3), Err(Error::NotAGap(3)));
    }

    #[test]
    fn avoiding_any_gap_gives_irreducible_with_that_frobenius() {
        let s = sg(&[5, 7, 9]);
        for x in s.gaps() {
            let t = maximal_irreducible_avoiding(&s, x).unwrap();
            assert!(t.is_irreducible());
            assert_eq!(t.frobenius(), x as i64);
            assert!(t.contains_semigroup(&s));
        }
    }
}

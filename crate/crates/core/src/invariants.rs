//! Pseudo-Frobenius numbers, special gaps and irreducibility predicates.

use crate::error::{Error, Result};
use crate::semigroup::Semigroup;

/// Invariants of a semigroup other than N.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantBundle {
    pub pf: Vec<u64>,
    pub bpf: Vec<u64>,
    pub special_gaps: Vec<u64>,
    pub symmetric: bool,
    pub pseudo_symmetric: bool,
    pub irreducible: bool,
}

impl Semigroup {
    /// Gaps `x` with `x + s ∈ S` for every nonzero `s ∈ S`.
    ///
    /// Testing the minimal generators is enough: any nonzero element is
    /// `g + s'` with `s' ∈ S`, and `x + g ∈ S` then gives `x + g + s' ∈ S`.
    pub fn pseudo_frobenius(&self) -> Result<Vec<u64>> {
        if self.is_full() {
            return Err(Error::FullSemigroup);
        }
        Ok(self
            .gap_iter()
            .filter(|&x| self.generators().iter().all(|&g| self.has(x + g)))
            .collect())
    }

    pub(crate) fn is_pseudo_frobenius(&self, x: u64) -> bool {
        self.is_gap(x) && self.generators().iter().all(|&g| self.has(x + g))
    }

    /// Pseudo-Frobenius numbers strictly above `F/2`.
    pub fn bpf(&self) -> Result<Vec<u64>> {
        let f = self.frobenius();
        Ok(self
            .pseudo_frobenius()?
            .into_iter()
            .filter(|&a| 2 * a as i64 > f)
            .collect())
    }

    /// Pseudo-Frobenius numbers `x` with `2x ∈ S`: exactly the gaps whose
    /// adjunction leaves a numerical semigroup.
    pub fn special_gaps(&self) -> Result<Vec<u64>> {
        Ok(self
            .pseudo_frobenius()?
            .into_iter()
            .filter(|&x| self.has(2 * x))
            .collect())
    }

    pub(crate) fn is_special_gap(&self, x: u64) -> bool {
        x > 0 && self.is_pseudo_frobenius(x) && self.has(2 * x)
    }

    pub fn is_symmetric(&self) -> bool {
        let f = self.frobenius();
        f > 0 && f % 2 == 1 && self.reflects_gaps(None)
    }

    pub fn is_pseudo_symmetric(&self) -> bool {
        let f = self.frobenius();
        f > 0 && f % 2 == 0 && self.reflects_gaps(Some(f as u64 / 2))
    }

    /// N counts as irreducible.
    pub fn is_irreducible(&self) -> bool {
        self.is_full() || self.is_symmetric() || self.is_pseudo_symmetric()
    }

    /// Every gap `x` (other than `skip`) has `F - x ∈ S`.
    fn reflects_gaps(&self, skip: Option<u64>) -> bool {
        let f = self.frobenius() as u64;
        self.gap_iter()
            .filter(|&x| Some(x) != skip)
            .all(|x| self.has(f - x))
    }

    pub fn invariants(&self) -> Result<InvariantBundle> {
        let pf = self.pseudo_frobenius()?;
        let f = self.frobenius();
        let bpf = pf.iter().copied().filter(|&a| 2 * a as i64 > f).collect();
        let special_gaps = pf.iter().copied().filter(|&x| self.has(2 * x)).collect();
        let symmetric = self.is_symmetric();
        let pseudo_symmetric = self.is_pseudo_symmetric();
        Ok(InvariantBundle {
            pf,
            bpf,
            special_gaps,
            symmetric,
            pseudo_symmetric,
            irreducible: symmetric || pseudo_symmetric,
        })
    }
}

//! Serializable report types. Every number is an exact integer; integers
//! that may exceed 64 bits are carried as decimal strings.

use numsg::families::FamilyKind;
use numsg::{BoundsReport, Decomposition, FamilyWitness, Semigroup};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportDocument {
    /// Canonical form of the command that produced this report.
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<InputDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub semigroup: Option<SemigroupDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariants: Option<InvariantsDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<BoundsDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<DecompositionDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub repro: Option<ReproDoc>,
    /// Set when an enumeration stopped at its cap.
    pub truncated: bool,
    /// Wall time in milliseconds; only present when requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl ReportDocument {
    pub(crate) fn new(command: String) -> Self {
        ReportDocument {
            command,
            input: None,
            semigroup: None,
            invariants: None,
            bounds: None,
            decomposition: None,
            witness: None,
            repro: None,
            truncated: false,
            timing_ms: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InputDoc {
    pub kind: &'static str,
    pub values: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemigroupDoc {
    pub generators: Vec<u64>,
    pub frobenius: i64,
    pub gaps: Vec<u64>,
}

impl From<&Semigroup> for SemigroupDoc {
    fn from(s: &Semigroup) -> Self {
        SemigroupDoc {
            generators: s.generators().to_vec(),
            frobenius: s.frobenius(),
            gaps: s.gaps(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantsDoc {
    pub multiplicity: u64,
    pub genus: usize,
    pub pf: Vec<u64>,
    pub bpf: Vec<u64>,
    pub special_gaps: Vec<u64>,
    pub symmetric: bool,
    pub pseudo_symmetric: bool,
    pub irreducible: bool,
}

impl InvariantsDoc {
    /// N has no gaps, so every gap-indexed list is empty.
    pub(crate) fn of(s: &Semigroup) -> numsg::Result<Self> {
        let (pf, bpf, special_gaps, symmetric, pseudo_symmetric, irreducible) = if s.is_full() {
            (Vec::new(), Vec::new(), Vec::new(), false, false, true)
        } else {
            let inv = s.invariants()?;
            (
                inv.pf,
                inv.bpf,
                inv.special_gaps,
                inv.symmetric,
                inv.pseudo_symmetric,
                inv.irreducible,
            )
        };
        Ok(InvariantsDoc {
            multiplicity: s.multiplicity(),
            genus: s.genus(),
            pf,
            bpf,
            special_gaps,
            symmetric,
            pseudo_symmetric,
            irreducible,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct XiDoc {
    pub a: u64,
    pub members: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsDoc {
    /// Upper bound: |BPF(S)|.
    pub m: usize,
    /// Lower bound: minimum number of distinct values hitting every ξ-set.
    pub h: usize,
    pub xi_sets: Vec<XiDoc>,
    pub witness_values: Vec<u64>,
}

impl From<&BoundsReport> for BoundsDoc {
    fn from(b: &BoundsReport) -> Self {
        BoundsDoc {
            m: b.m,
            h: b.h,
            xi_sets: b
                .xi_sets
                .iter()
                .map(|x| XiDoc {
                    a: x.a,
                    members: x.members.clone(),
                })
                .collect(),
            witness_values: b.witness_values.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionDoc {
    pub method: &'static str,
    pub exact_minimum: bool,
    pub size: usize,
    pub components: Vec<SemigroupDoc>,
    /// Always true: unverified decompositions are never emitted.
    pub verified: bool,
}

impl DecompositionDoc {
    pub(crate) fn verified(d: &Decomposition) -> Self {
        DecompositionDoc {
            method: d.method.as_str(),
            exact_minimum: d.exact_minimum,
            size: d.len(),
            components: d.components.iter().map(SemigroupDoc::from).collect(),
            verified: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessDoc {
    pub family: &'static str,
    pub k: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<u64>,
    pub n: String,
    pub a_sequence: Vec<String>,
    pub materializable: bool,
}

impl From<&FamilyWitness> for WitnessDoc {
    fn from(w: &FamilyWitness) -> Self {
        WitnessDoc {
            family: match w.kind {
                FamilyKind::Skn => "skn",
                FamilyKind::Halfline => "halfline",
            },
            k: w.k,
            d: w.d,
            n: w.n.to_string(),
            a_sequence: w.a_sequence.iter().map(|a| a.to_string()).collect(),
            materializable: w.materializable,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReproRow {
    pub id: String,
    pub claim: String,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReproDoc {
    pub rows: Vec<ReproRow>,
    pub passed: usize,
    pub failed: usize,
}

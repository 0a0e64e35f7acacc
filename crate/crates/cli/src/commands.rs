use std::time::Instant;

use numsg::families::FamilyWitness;
use numsg::{
    bounds, constructive_decomposition, halfline_witness, minimal_decomposition,
    verify_decomposition, Decomposition, Semigroup,
};

use crate::input::Descriptor;
use crate::report::{
    BoundsDoc, DecompositionDoc, InvariantsDoc, ReportDocument, ReproDoc, ReproRow, SemigroupDoc,
    WitnessDoc,
};
use crate::{repro, CliError, Mode};

/// Starts the clock only when timing was requested.
struct Clock(Option<Instant>);

impl Clock {
    fn start(timing: bool) -> Self {
        Clock(timing.then(Instant::now))
    }

    fn stamp(&self, doc: &mut ReportDocument) {
        doc.timing_ms = self.0.map(|t| t.elapsed().as_millis() as u64);
    }
}

pub fn cmd_info(input: &Descriptor, timing: bool) -> Result<ReportDocument, CliError> {
    let clock = Clock::start(timing);
    let s = input.build()?;
    let mut doc = ReportDocument::new(format!("info {}", input.to_flag()));
    doc.input = Some(input.to_doc());
    doc.semigroup = Some(SemigroupDoc::from(&s));
    doc.invariants = Some(InvariantsDoc::of(&s)?);
    clock.stamp(&mut doc);
    Ok(doc)
}

pub fn cmd_decompose(
    input: &Descriptor,
    mode: Mode,
    cap: usize,
    timing: bool,
) -> Result<ReportDocument, CliError> {
    let clock = Clock::start(timing);
    let s = input.build()?;
    if s.is_full() {
        return Err(CliError::InvalidInput(
            "N has no gaps; decompositions and bounds need a proper semigroup".into(),
        ));
    }
    let command = match mode {
        Mode::Exact => format!("decompose {} --mode exact --cap {cap}", input.to_flag()),
        _ => format!("decompose {} --mode {}", input.to_flag(), mode.as_str()),
    };
    let mut doc = ReportDocument::new(command);
    doc.input = Some(input.to_doc());
    doc.semigroup = Some(SemigroupDoc::from(&s));
    match mode {
        Mode::Exact => {
            let d = minimal_decomposition(&s, cap)?;
            doc.decomposition = Some(checked(&s, &d)?);
        }
        Mode::Construct => {
            let d = constructive_decomposition(&s)?;
            doc.decomposition = Some(checked(&s, &d)?);
        }
        Mode::Bounds => doc.bounds = Some(BoundsDoc::from(&bounds(&s)?)),
    }
    clock.stamp(&mut doc);
    Ok(doc)
}

fn checked(s: &Semigroup, d: &Decomposition) -> Result<DecompositionDoc, CliError> {
    verify_decomposition(s, &d.components)
        .map_err(|defect| CliError::Failure(format!("refusing to emit decomposition: {defect}")))?;
    Ok(DecompositionDoc::verified(d))
}

/// Half-line witness for `k`, or the parameters of `S_{k,n}`.
pub fn cmd_witness(
    halfline_k: Option<u32>,
    skn: Option<(u64, u64)>,
    timing: bool,
) -> Result<ReportDocument, CliError> {
    let clock = Clock::start(timing);
    let (command, w) = match (halfline_k, skn) {
        (Some(k), None) => (format!("witness --k {k}"), halfline_witness(k)?),
        (None, Some((k, n))) => (format!("witness --skn {k},{n}"), FamilyWitness::skn(k, n)?),
        _ => {
            return Err(CliError::InvalidInput(
                "witness takes exactly one of --k or --skn".into(),
            ))
        }
    };
    let mut doc = ReportDocument::new(command);
    doc.witness = Some(WitnessDoc::from(&w));
    clock.stamp(&mut doc);
    Ok(doc)
}

/// Runs every reproduction row; `on_row` sees each row as it finishes.
pub fn cmd_repro(timing: bool, on_row: &mut dyn FnMut(&ReproRow)) -> ReportDocument {
    let clock = Clock::start(timing);
    let mut rows = repro::run(&mut |row: &ReproRow| {
        let mut shown = row.clone();
        if !timing {
            shown.elapsed_ms = None;
        }
        on_row(&shown);
    });
    if !timing {
        for row in &mut rows {
            row.elapsed_ms = None;
        }
    }
    let passed = rows.iter().filter(|r| r.pass).count();
    let mut doc = ReportDocument::new("repro".into());
    doc.repro = Some(ReproDoc {
        failed: rows.len() - passed,
        passed,
        rows,
    });
    clock.stamp(&mut doc);
    doc
}

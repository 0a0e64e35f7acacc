//! Output formats. Human and CSV output are built from the same field list;
//! component lists and reproduction rows are rendered as tables.

use crate::input::join;
use crate::report::{ReportDocument, ReproRow, SemigroupDoc};
use crate::Format;

pub fn render(doc: &ReportDocument, format: Format) -> String {
    match format {
        Format::Json => {
            let mut out = serde_json::to_string_pretty(doc).expect("report serializes");
            out.push('\n');
            out
        }
        Format::Csv => csv(doc),
        Format::Human => human(doc),
    }
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.into()
}

fn spaced(values: &[u64]) -> String {
    join(values, " ")
}

pub(crate) fn semigroup_label(s: &SemigroupDoc) -> String {
    if s.frobenius < 0 {
        "N".into()
    } else {
        format!("<{}>", join(&s.generators, ", "))
    }
}

/// Field list shared by the human and CSV renderings.
fn fields(doc: &ReportDocument) -> Vec<(String, String)> {
    let mut f: Vec<(String, String)> = Vec::new();
    let mut put = |k: &str, v: String| f.push((k.to_string(), v));
    if let Some(s) = &doc.semigroup {
        put("semigroup", semigroup_label(s));
        put("frobenius", s.frobenius.to_string());
        put("gaps", spaced(&s.gaps));
    }
    if let Some(inv) = &doc.invariants {
        put("multiplicity", inv.multiplicity.to_string());
        put("genus", inv.genus.to_string());
        put("pseudo-frobenius", spaced(&inv.pf));
        put("bpf", spaced(&inv.bpf));
        put("special gaps", spaced(&inv.special_gaps));
        put("symmetric", yes_no(inv.symmetric));
        put("pseudo-symmetric", yes_no(inv.pseudo_symmetric));
        put("irreducible", yes_no(inv.irreducible));
    }
    if let Some(b) = &doc.bounds {
        put("m", b.m.to_string());
        put("h", b.h.to_string());
        put("witness values", spaced(&b.witness_values));
        for x in &b.xi_sets {
            put(&format!("xi({})", x.a), spaced(&x.members));
        }
    }
    if let Some(d) = &doc.decomposition {
        put("method", d.method.into());
        put("exact minimum", yes_no(d.exact_minimum));
        put("components", d.size.to_string());
        put("verified", yes_no(d.verified));
    }
    if let Some(w) = &doc.witness {
        put("family", w.family.into());
        put("k", w.k.to_string());
        if let Some(d) = w.d {
            put("d", d.to_string());
        }
        put("n", w.n.clone());
        if !w.a_sequence.is_empty() {
            put("a", w.a_sequence.join(" "));
        }
        put("materializable", yes_no(w.materializable));
    }
    if doc.truncated {
        put("truncated", yes_no(true));
    }
    f
}

fn human(doc: &ReportDocument) -> String {
    let mut out = format!("command           {}\n", doc.command);
    for (k, v) in fields(doc) {
        out.push_str(format!("{k:<17} {v}").trim_end());
        out.push('\n');
    }
    if let Some(d) = &doc.decomposition {
        for (i, c) in d.components.iter().enumerate() {
            out.push_str(&format!(
                "  {:>3}  F = {:<6} {}\n",
                i + 1,
                c.frobenius,
                semigroup_label(c)
            ));
        }
    }
    if let Some(r) = &doc.repro {
        for row in &r.rows {
            out.push_str(&repro_line(row));
        }
        out.push_str(&repro_footer(r.passed, r.failed));
    }
    if let Some(ms) = doc.timing_ms {
        out.push_str(&format!("time              {ms} ms\n"));
    }
    out
}

/// One human-readable reproduction row, newline included.
pub fn repro_line(row: &ReproRow) -> String {
    let verdict = if row.pass { "PASS" } else { "FAIL" };
    let mut line = format!(
        "{verdict}  {:<3} {:<56} expected {:<13} observed {}",
        row.id, row.claim, row.expected, row.observed
    );
    if let Some(ms) = row.elapsed_ms {
        line.push_str(&format!("  [{ms} ms]"));
    }
    line.push('\n');
    line
}

pub fn repro_footer(passed: usize, failed: usize) -> String {
    format!("{passed} passed, {failed} failed\n")
}

fn csv(doc: &ReportDocument) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut write = |record: &[String]| w.write_record(record).expect("in-memory write");
    if let Some(r) = &doc.repro {
        write(&["id", "claim", "expected", "observed", "pass"].map(String::from));
        for row in &r.rows {
            write(&[
                row.id.clone(),
                row.claim.clone(),
                row.expected.clone(),
                row.observed.clone(),
                row.pass.to_string(),
            ]);
        }
    } else if let Some(d) = &doc.decomposition {
        write(&["component", "frobenius", "generators", "gaps"].map(String::from));
        for (i, c) in d.components.iter().enumerate() {
            write(&[
                (i + 1).to_string(),
                c.frobenius.to_string(),
                spaced(&c.generators),
                spaced(&c.gaps),
            ]);
        }
    } else {
        write(&["field", "value"].map(String::from));
        for (k, v) in fields(doc) {
            write(&[k, v]);
        }
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

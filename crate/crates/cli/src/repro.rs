//! Reproduction table: exact decomposition sizes for the prime-indexed
//! family, lower bounds for `S_{k,n}`, the gap lemma behind them, the
//! half-line ξ-singletons, and the two-generator Frobenius formula.
//!
//! Every row carries a wall-time budget. Rows of one criterion share the
//! criterion's budget, so the row that crosses it is the one that fails.

use std::time::{Duration, Instant};

use num_integer::Integer;
use num_traits::ToPrimitive;
use numsg::families::{check_lemma, prime_square_semigroup, skn_certificate};
use numsg::{
    bounds, halfline, halfline_witness, minimal_decomposition, xi, FamilyWitness, Semigroup,
};

use crate::report::ReproRow;
use crate::DEFAULT_CAP;

type Outcome = numsg::Result<(String, bool)>;

struct Runner<'a> {
    rows: Vec<ReproRow>,
    on_row: &'a mut dyn FnMut(&ReproRow),
    group_start: Instant,
    group_budget: Duration,
}

impl Runner<'_> {
    fn group(&mut self, budget: Duration) {
        self.group_start = Instant::now();
        self.group_budget = budget;
    }

    fn row(&mut self, id: &str, claim: String, expected: String, check: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let (mut observed, mut pass) = match check() {
            Ok(outcome) => outcome,
            Err(e) => (format!("error: {e}"), false),
        };
        let elapsed = start.elapsed();
        if self.group_start.elapsed() > self.group_budget {
            observed = format!(
                "{observed} (over the {} s budget)",
                self.group_budget.as_secs_f64()
            );
            pass = false;
        }
        let row = ReproRow {
            id: id.into(),
            claim,
            expected,
            observed,
            pass,
            elapsed_ms: Some(elapsed.as_millis() as u64),
        };
        (self.on_row)(&row);
        self.rows.push(row);
    }
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

pub fn run(on_row: &mut dyn FnMut(&ReproRow)) -> Vec<ReproRow> {
    let mut r = Runner {
        rows: Vec::new(),
        on_row,
        group_start: Instant::now(),
        group_budget: Duration::MAX,
    };
    prime_square_rows(&mut r);
    skn_rows(&mut r);
    lemma_rows(&mut r);
    halfline_rows(&mut r);
    two_generator_row(&mut r);
    r.rows
}

fn prime_square_rows(r: &mut Runner) {
    for (id, p, budget) in [("1a", 2u64, 1), ("1b", 3, 1), ("1c", 5, 60)] {
        r.group(secs(budget));
        r.row(
            id,
            format!("p={p} exact = {}", p - 1),
            (p - 1).to_string(),
            || {
                let s = prime_square_semigroup(p)?;
                let size = minimal_decomposition(&s, DEFAULT_CAP)?.len();
                Ok((size.to_string(), size as u64 == p - 1))
            },
        );
    }
}

fn skn_rows(r: &mut Runner) {
    r.group(secs(300));
    for (id, k, n) in [("2a", 9u64, 80u64), ("2b", 9, 83), ("2c", 15, 224)] {
        r.row(
            id,
            format!("S_{{{k},{n}}} needs ≥ d-1 = 2 components"),
            "≥ 2".into(),
            || {
                let c = skn_certificate(k, n, DEFAULT_CAP)?;
                let observed = match c.exact {
                    Some(e) => format!("exact {e}"),
                    None => format!(
                        "cap reached; max(h = {}, lemma count = {}) = {}",
                        c.h,
                        c.lemma_count,
                        c.lower_bound()
                    ),
                };
                Ok((observed, c.d == 3 && c.lower_bound() >= 2))
            },
        );
    }
}

fn lemma_rows(r: &mut Runner) {
    r.group(secs(120));
    for (id, k, n) in [("3a", 3u64, 8u64), ("3b", 4, 16), ("3c", 5, 27)] {
        r.row(
            id,
            format!("S_{{{k},{n}}}: n-i a gap of irreducible I ⇒ F(I) = n-i"),
            "0 violations".into(),
            || {
                let rep = check_lemma(k, n, DEFAULT_CAP)?;
                let observed = format!(
                    "{} instances over {} irreducibles, {} violations",
                    rep.instances,
                    rep.pool_size,
                    rep.violations.len()
                );
                Ok((observed, rep.holds()))
            },
        );
    }
}

fn halfline_rows(r: &mut Runner) {
    r.group(secs(60));
    for (ids, k, expected_n) in [
        (["4a", "4b", "4c"], 2u32, 6u64),
        (["4d", "4e", "4f"], 3, 28),
    ] {
        let witness = halfline_witness(k);
        r.row(
            ids[0],
            format!("halfline k={k} witness n = {expected_n}"),
            expected_n.to_string(),
            || {
                let w = witness.clone()?;
                Ok((w.n.to_string(), w.n_u64() == Some(expected_n)))
            },
        );
        r.row(
            ids[1],
            format!("halfline k={k} ξ(n-a_i) = {{n-a_i}}"),
            "singletons".into(),
            || {
                let (w, n, s) = materialize(&witness)?;
                let mut parts = Vec::new();
                let mut pass = true;
                for a in &w.a_sequence {
                    let v = n - a.to_u64().unwrap_or(n);
                    let set = xi(&s, v)?.members;
                    pass &= set == [v];
                    parts.push(format!("ξ({v}) = {}", braces(&set)));
                }
                Ok((parts.join(", "), pass))
            },
        );
        r.row(
            ids[2],
            format!("halfline k={k} h ≥ {k}"),
            format!("≥ {k}"),
            || {
                let (_, _, s) = materialize(&witness)?;
                let h = bounds(&s)?.h;
                Ok((format!("h = {h}"), h >= k as usize))
            },
        );
    }
    r.row("4g", "halfline(6) exact = 3".into(), "3".into(), || {
        let size = minimal_decomposition(&halfline(6)?, DEFAULT_CAP)?.len();
        Ok((size.to_string(), size == 3))
    });
}

fn materialize(
    witness: &numsg::Result<FamilyWitness>,
) -> numsg::Result<(FamilyWitness, u64, Semigroup)> {
    let w = witness.clone()?;
    let n = w.n_u64().ok_or_else(|| {
        numsg::Error::InvalidArgument(format!("witness n = {} does not fit in 64 bits", w.n))
    })?;
    let s = halfline(n)?;
    Ok((w, n, s))
}

fn two_generator_row(r: &mut Runner) {
    r.group(secs(1));
    r.row(
        "7",
        "F(<a,b>) = ab-a-b for coprime a < b ≤ 25".into(),
        "0 mismatches".into(),
        || {
            let mut pairs = 0;
            let mut mismatches = 0;
            for b in 2..=25u64 {
                for a in (2..b).filter(|a| a.gcd(&b) == 1) {
                    pairs += 1;
                    let f = Semigroup::from_generators(&[a, b])?.frobenius();
                    if f != (a * b - a - b) as i64 {
                        mismatches += 1;
                    }
                }
            }
            Ok((
                format!("{pairs} pairs, {mismatches} mismatches"),
                mismatches == 0,
            ))
        },
    );
}

fn braces(values: &[u64]) -> String {
    let inner: Vec<String> = values.iter().map(u64::to_string).collect();
    format!("{{{}}}", inner.join(", "))
}

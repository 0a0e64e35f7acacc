use numsg::{halfline, skn, Semigroup};

use crate::report::InputDoc;
use crate::CliError;

/// How the semigroup was given on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Descriptor {
    Gens(Vec<u64>),
    Gaps(Vec<u64>),
    Halfline(u64),
    Skn { k: u64, n: u64 },
}

impl Descriptor {
    /// `--skn k,n` arrives as a list; exactly two values are allowed.
    pub fn skn_from_list(values: &[u64]) -> Result<Self, CliError> {
        match *values {
            [k, n] => Ok(Descriptor::Skn { k, n }),
            _ => Err(CliError::InvalidInput(format!(
                "--skn takes exactly two values k,n; got {}",
                values.len()
            ))),
        }
    }

    pub fn build(&self) -> Result<Semigroup, CliError> {
        let s = match self {
            Descriptor::Gens(g) => Semigroup::from_generators(g)?,
            Descriptor::Gaps(g) => Semigroup::from_gaps(g)?,
            Descriptor::Halfline(n) => halfline(*n)?,
            Descriptor::Skn { k, n } => skn(*k, *n)?,
        };
        Ok(s)
    }

    /// Canonical flag form, used in the command echo.
    pub fn to_flag(&self) -> String {
        match self {
            Descriptor::Gens(g) => format!("--gens {}", join(g, ",")),
            Descriptor::Gaps(g) => format!("--gaps {}", join(g, ",")),
            Descriptor::Halfline(n) => format!("--halfline {n}"),
            Descriptor::Skn { k, n } => format!("--skn {k},{n}"),
        }
    }

    pub fn to_doc(&self) -> InputDoc {
        let (kind, values) = match self {
            Descriptor::Gens(g) => ("gens", g.clone()),
            Descriptor::Gaps(g) => ("gaps", g.clone()),
            Descriptor::Halfline(n) => ("halfline", vec![*n]),
            Descriptor::Skn { k, n } => ("skn", vec![*k, *n]),
        };
        InputDoc { kind, values }
    }
}

pub(crate) fn join<T: ToString>(values: &[T], sep: &str) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use numsg_cli::{
    cmd_decompose, cmd_info, cmd_repro, cmd_witness, render, repro_footer, repro_line, CliError,
    Descriptor, Format, Mode, DEFAULT_CAP, EXIT_OK, EXIT_REPRO_FAILURE,
};

#[derive(Parser)]
#[command(
    name = "numsg",
    version,
    about = "Invariants, irreducible decompositions and decomposition bounds of numerical semigroups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Frobenius number, gaps, pseudo-Frobenius numbers and irreducibility.
    Info {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Decompose into irreducible oversemigroups, or bound the minimum size.
    Decompose {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
        /// Maximum number of oversemigroups enumerated in exact mode.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Parameters of a family member: the half-line witness for k, or S_{k,n}.
    Witness {
        #[command(flatten)]
        family: WitnessArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check the decomposition-size results; exits 1 if any row fails.
    Repro {
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// Generators, comma separated.
    #[arg(long, value_delimiter = ',', value_name = "A,B,...")]
    gens: Option<Vec<u64>>,
    /// Gaps, comma separated.
    #[arg(long, value_delimiter = ',', value_name = "G1,G2,...")]
    gaps: Option<Vec<u64>>,
    /// The half-line {0} ∪ {n+1, n+2, ...}.
    #[arg(long, value_name = "N")]
    halfline: Option<u64>,
    /// S_{k,n} = <k, n, n+1, ..., n+k-1>.
    #[arg(long, value_delimiter = ',', value_name = "K,N")]
    skn: Option<Vec<u64>>,
}

impl InputArgs {
    fn descriptor(self) -> Result<Descriptor, CliError> {
        if let Some(g) = self.gens {
            Ok(Descriptor::Gens(g))
        } else if let Some(g) = self.gaps {
            Ok(Descriptor::Gaps(g))
        } else if let Some(n) = self.halfline {
            Ok(Descriptor::Halfline(n))
        } else {
            Descriptor::skn_from_list(&self.skn.unwrap_or_default())
        }
    }
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct WitnessArgs {
    /// Half-line witness index.
    #[arg(long)]
    k: Option<u32>,
    #[arg(long, value_delimiter = ',', value_name = "K,N")]
    skn: Option<Vec<u64>>,
}

#[derive(Args)]
struct OutputArgs {
    /// Structured JSON document.
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    /// Comma-separated rows.
    #[arg(long)]
    csv: bool,
    /// Print nothing; report through the exit status only.
    #[arg(long)]
    quiet: bool,
    /// Include wall time (output then varies between runs).
    #[arg(long)]
    timing: bool,
}

impl OutputArgs {
    fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else if self.csv {
            Format::Csv
        } else {
            Format::Human
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("numsg: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn emit(text: &str, quiet: bool) {
    if !quiet {
        let mut out = std::io::stdout().lock();
        // a closed pipe is not an error worth reporting
        let _ = out.write_all(text.as_bytes());
        let _ = out.flush();
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let (doc, output) = match cli.command {
        Command::Info { input, output } => (cmd_info(&input.descriptor()?, output.timing)?, output),
        Command::Decompose {
            input,
            mode,
            cap,
            output,
        } => (
            cmd_decompose(&input.descriptor()?, mode, cap, output.timing)?,
            output,
        ),
        Command::Witness { family, output } => {
            let skn = match family.skn.as_deref() {
                None => None,
                Some(&[k, n]) => Some((k, n)),
                Some(other) => {
                    return Err(CliError::InvalidInput(format!(
                        "--skn takes exactly two values k,n; got {}",
                        other.len()
                    )))
                }
            };
            (cmd_witness(family.k, skn, output.timing)?, output)
        }
        Command::Repro { output } => {
            let stream = output.format() == Format::Human && !output.quiet;
            let doc = cmd_repro(output.timing, &mut |row| {
                if stream {
                    emit(&repro_line(row), false);
                }
            });
            let repro = doc.repro.as_ref().expect("repro document");
            if stream {
                let mut tail = repro_footer(repro.passed, repro.failed);
                if let Some(ms) = doc.timing_ms {
                    tail.push_str(&format!("time              {ms} ms\n"));
                }
                emit(&tail, false);
            } else {
                emit(&render(&doc, output.format()), output.quiet);
            }
            return Ok(if repro.failed == 0 {
                EXIT_OK
            } else {
                EXIT_REPRO_FAILURE
            });
        }
    };
    emit(&render(&doc, output.format()), output.quiet);
    Ok(EXIT_OK)
}

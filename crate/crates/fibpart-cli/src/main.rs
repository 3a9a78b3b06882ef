//! Command-line front end: codecs, set generation, classification, table
//! rendering, exhaustive verification and b-file export.
//!
//! Exit codes: 0 on success, 1 when verification finds failures, 2 on
//! usage or domain errors.

use std::fmt;
use std::io::{self, BufRead, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use fibpart::bfile::{write_bfile, Sequence};
use fibpart::complement::{classify, decompose_odd, SetId, SetKind, MAX_SET_INDEX};
use fibpart::oracle::{verify_odd_partition, verify_partition_jobs, VerificationReport};
use fibpart::tables::{render_ona1, render_ona2, render_phi_table, TableGrid};
use fibpart::zeckendorf::{zeckendorf_decode, zeckendorf_encode, ZeckendorfRep};

#[derive(Parser)]
#[command(name = "fibpart", version, about = "Zeckendorf codecs and the fibbinary partition")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Jsonl,
}

#[derive(Clone, Copy, ValueEnum)]
enum SetKindArg {
    /// A full set (set 0 is the fibbinary numbers).
    Phi,
    /// The odd members of a set (set 0 is odfib).
    Psi,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    /// Subset-by-chain table of one set.
    Phi,
    /// Odd-number array in decimal.
    Ona1,
    /// Odd-number array as prefix:suffix binary.
    Ona2,
}

#[derive(Subcommand)]
enum Command {
    /// Encode a positive integer as its Zeckendorf coefficient string.
    Encode {
        /// Integer to encode, at least 1.
        n: u64,
    },
    /// Decode a coefficient string (for example 10101) back to an integer.
    Decode {
        /// Coefficient string, most significant digit first.
        bits: String,
    },
    /// Print the partition cell of each integer, one "m k n pp op" line each.
    Classify {
        /// Integers to classify; read whitespace-separated from stdin when absent.
        values: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the members of a set that do not exceed a limit.
    Gen {
        kind: SetKindArg,
        /// Set index k.
        k: u64,
        #[arg(long)]
        limit: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Render a table.
    Table {
        kind: TableKind,
        /// Set index for phi tables; number of odd-member columns for the arrays.
        #[arg(long, default_value_t = 0)]
        k: u64,
        /// Subset rows for phi tables (default 6); last array row index (default 12).
        #[arg(long)]
        depth: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Exhaustively verify the partition up to a limit; nonzero exit on failure.
    Verify {
        #[arg(long)]
        limit: u64,
        /// Verify odd-number coverage instead of the full partition.
        #[arg(long)]
        odd: bool,
        /// Worker threads for the full verifier; any value gives identical output.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Emit a sequence in OEIS b-file format ("n a(n)" lines).
    Bfile {
        /// One of: fib, odfib, evfib, phi, psi.
        seq: String,
        /// Set index for phi and psi.
        #[arg(long, default_value_t = 0)]
        k: u64,
        /// Number of terms.
        #[arg(long)]
        count: u64,
    },
}

enum CliError {
    Domain(fibpart::Error),
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Domain(e) => e.fmt(f),
            CliError::Usage(msg) => f.write_str(msg),
        }
    }
}

impl From<fibpart::Error> for CliError {
    fn from(e: fibpart::Error) -> Self {
        CliError::Domain(e)
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = match run(cli.command, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    };
    out.flush().expect("stdout");
    ExitCode::from(code)
}

fn run(command: Command, out: &mut impl Write) -> Result<u8, CliError> {
    match command {
        Command::Encode { n } => {
            writeln!(out, "{}", zeckendorf_encode(n)?.bit_str()).expect("stdout");
            Ok(0)
        }
        Command::Decode { bits } => {
            let rep = ZeckendorfRep::from_bit_str(&bits)?;
            writeln!(out, "{}", zeckendorf_decode(&rep)).expect("stdout");
            Ok(0)
        }
        Command::Classify { values, format } => Ok(run_classify(values, format, out)),
        Command::Gen {
            kind,
            k,
            limit,
            format,
        } => run_gen(kind, k, limit, format, out),
        Command::Table {
            kind,
            k,
            depth,
            format,
        } => run_table(kind, k, depth, format, out),
        Command::Verify { limit, odd, jobs } => {
            let report = if odd {
                verify_odd_partition(limit)
            } else {
                verify_partition_jobs(limit, jobs)
            };
            print_report(&report, out);
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Bfile { seq, k, count } => {
            let seq = parse_sequence(&seq, k)?;
            write_bfile(out, seq, count)?;
            Ok(0)
        }
    }
}

fn classify_line(m: u64, format: Format) -> fibpart::Result<String> {
    let cell = classify(m)?;
    let split = decompose_odd(m >> m.trailing_zeros())?;
    let (pp, op) = (split.pp, split.op.value() << m.trailing_zeros());
    Ok(match format {
        Format::Text => format!("{m} {} {} {pp} {op}", cell.k, cell.n),
        Format::Csv => format!("{m},{},{},{pp},{op}", cell.k, cell.n),
        Format::Jsonl => format!(
            r#"{{"m":{m},"k":{},"n":{},"pp":{pp},"op":{op}}}"#,
            cell.k, cell.n
        ),
    })
}

fn run_classify(values: Vec<String>, format: Format, out: &mut impl Write) -> u8 {
    if format == Format::Csv {
        writeln!(out, "m,k,n,pp,op").expect("stdout");
    }
    let mut had_error = false;
    let mut handle = |token: &str, out: &mut dyn Write| {
        match token.parse::<u64>().ok().and_then(|m| classify_line(m, format).ok()) {
            Some(line) => writeln!(out, "{line}").expect("stdout"),
            None => {
                eprintln!("error: cannot classify {token:?}: expected a positive integer");
                had_error = true;
            }
        }
    };
    if values.is_empty() {
        let stdin = io::stdin();
        for line in stdin.lock().lines() {
            let line = line.expect("stdin");
            for token in line.split_whitespace() {
                handle(token, out);
            }
        }
    } else {
        for token in &values {
            handle(token, out);
        }
    }
    if had_error {
        2
    } else {
        0
    }
}

fn run_gen(
    kind: SetKindArg,
    k: u64,
    limit: u64,
    format: Format,
    out: &mut impl Write,
) -> Result<u8, CliError> {
    check_set_index(k)?;
    let set = SetId {
        kind: match kind {
            SetKindArg::Phi => SetKind::Phi,
            SetKindArg::Psi => SetKind::Psi,
        },
        k,
    };
    let members = set.members_up_to(limit);
    match format {
        Format::Text => {
            let line: Vec<String> = members.iter().map(u64::to_string).collect();
            writeln!(out, "{}", line.join(" ")).expect("stdout");
        }
        Format::Csv => {
            let line: Vec<String> = members.iter().map(u64::to_string).collect();
            writeln!(out, "{}", line.join(",")).expect("stdout");
        }
        Format::Jsonl => {
            for v in members {
                writeln!(out, r#"{{"value":{v}}}"#).expect("stdout");
            }
        }
    }
    Ok(0)
}

fn run_table(
    kind: TableKind,
    k: u64,
    depth: Option<u64>,
    format: Format,
    out: &mut impl Write,
) -> Result<u8, CliError> {
    check_set_index(k)?;
    let grid: TableGrid = match kind {
        TableKind::Phi => {
            let depth = depth.unwrap_or(6);
            if depth == 0 || depth > 90 {
                return Err(usage(format!("table depth {depth} not in 1..=90")));
            }
            render_phi_table(k, depth as u32)?
        }
        TableKind::Ona1 => render_ona1(depth.unwrap_or(12), k)?,
        TableKind::Ona2 => render_ona2(depth.unwrap_or(12), k)?,
    };
    match format {
        Format::Text => writeln!(out, "{}", grid.to_text()).expect("stdout"),
        Format::Csv => writeln!(out, "{}", grid.to_csv()).expect("stdout"),
        Format::Jsonl => return Err(usage("tables render as text or csv only")),
    }
    Ok(0)
}

fn print_report(report: &VerificationReport, out: &mut impl Write) {
    writeln!(out, "{}", report.summary()).expect("stdout");
    let lines = report.failure_lines();
    if !lines.is_empty() {
        write!(out, "{lines}").expect("stdout");
    }
}

fn check_set_index(k: u64) -> Result<(), CliError> {
    if k > MAX_SET_INDEX {
        Err(usage(format!("set index {k} exceeds {MAX_SET_INDEX}")))
    } else {
        Ok(())
    }
}

fn parse_sequence(name: &str, k: u64) -> Result<Sequence, CliError> {
    check_set_index(k)?;
    match name {
        "fib" => Ok(Sequence::Fib),
        "odfib" => Ok(Sequence::Odfib),
        "evfib" => Ok(Sequence::Evfib),
        "phi" => Ok(Sequence::Phi(k)),
        "psi" => Ok(Sequence::Psi(k)),
        other => Err(usage(format!(
            "unknown sequence {other:?}: expected fib, odfib, evfib, phi or psi"
        ))),
    }
}

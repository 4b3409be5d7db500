//! `monoclass`: enumerate, count, verify and export classes of finite irreducible
//! monomial groups of prime degree.

use clap::{Args, Parser, Subcommand, ValueEnum};
use monoclass::classify::{count_per_order, enumerate, Options};
use monoclass::record::{GroupLabel, GroupRecord};
use monoclass::verify::{audit, AuditConfig};
use monoclass::Error;
use rayon::prelude::*;
use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "monoclass", version, about = "Finite irreducible monomial groups of prime degree")]
struct Cli {
    /// Worker threads; affects speed only.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct ListFlags {
    /// Restrict non-solvable permutation parts to Alt(p) and Sym(p).
    #[arg(long)]
    compulsory_only: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Labels,
}

#[derive(Subcommand)]
enum Command {
    /// List the classes of one order, or of every order up to a bound.
    Enumerate {
        #[arg(long)]
        degree: u64,
        #[arg(long, required_unless_present = "max_order", conflicts_with = "max_order")]
        order: Option<u64>,
        #[arg(long)]
        max_order: Option<u64>,
        /// Keep only this family tag.
        #[arg(long)]
        family: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Leave out the primitive groups of degree 2 and 3.
        #[arg(long)]
        no_primitive: bool,
        #[command(flatten)]
        list: ListFlags,
    },
    /// Count classes by label alone.
    Count {
        #[arg(long)]
        degree: u64,
        #[arg(long)]
        max_order: u64,
        /// Print one count per order instead of the total.
        #[arg(long)]
        per_order: bool,
        /// Include the primitive groups of degree 2 and 3.
        #[arg(long)]
        primitive: bool,
        #[command(flatten)]
        list: ListFlags,
    },
    /// Audit the lists by closure, character norms and conjugacy search.
    Verify {
        #[arg(long)]
        degree: u64,
        #[arg(long)]
        max_order: u64,
        /// Also compare with the exhaustive oracle at a small modulus.
        #[arg(long)]
        deep: bool,
        /// Close at most this many classes per order.
        #[arg(long)]
        sample: Option<usize>,
        /// Test same-order pairs for conjugacy up to this order.
        #[arg(long, default_value_t = 200)]
        conjugacy_max_order: u64,
        /// Print the full per-order report as JSON lines.
        #[arg(long)]
        report: bool,
        #[command(flatten)]
        list: ListFlags,
    },
    /// Write one JSON record per label.
    Export {
        /// File of labels, one per line; `-` reads standard input.
        #[arg(long)]
        input: String,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<String>,
    },
    /// Validate JSON records against their labels and print the labels.
    Import {
        /// File of JSON records, one per line; `-` reads standard input.
        #[arg(long)]
        input: String,
    },
}

enum Failure {
    Checks(usize),
    Lib(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Self::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Self::Io(e)
    }
}

fn read_input(path: &str) -> io::Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path)
    }
}

fn warn_if_coprime(p: u64, m: u64) {
    if p != 0 && !m.is_multiple_of(p) {
        eprintln!("warning: {p} does not divide {m}; no irreducible monomial group of this order");
    }
}

fn deep_modulus(p: u64) -> u64 {
    match p {
        2 => 8,
        3 => 9,
        _ => 2,
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match cli.command {
        Command::Enumerate { degree, order, max_order, family, format, no_primitive, list } => {
            let opts = Options { compulsory_only: list.compulsory_only, primitive: !no_primitive };
            let orders: Vec<u64> = match (order, max_order) {
                (Some(m), _) => {
                    warn_if_coprime(degree, m);
                    vec![m]
                }
                (None, Some(mx)) => (1..=mx).collect(),
                (None, None) => unreachable!("clap requires one of the order flags"),
            };
            enumerate(degree, 1, opts)?;
            let per_order: Vec<Vec<String>> = orders
                .par_iter()
                .map(|&m| -> monoclass::Result<Vec<String>> {
                    enumerate(degree, m, opts)?
                        .into_iter()
                        .filter(|l| family.as_deref().is_none_or(|f| l.family() == f))
                        .map(|l| match format {
                            Format::Labels => Ok(l.to_string()),
                            Format::Json => GroupRecord::from_label(&l).map(|r| r.to_json()),
                        })
                        .collect()
                })
                .collect::<monoclass::Result<_>>()?;
            for line in per_order.into_iter().flatten() {
                writeln!(out, "{line}")?;
            }
        }
        Command::Count { degree, max_order, per_order, primitive, list } => {
            let opts = Options { compulsory_only: list.compulsory_only, primitive };
            let counts = count_per_order(degree, max_order, opts)?;
            if per_order {
                for (m, c) in counts.iter().enumerate() {
                    writeln!(out, "{}\t{c}", m + 1)?;
                }
            } else {
                writeln!(out, "{}", counts.iter().sum::<u64>())?;
            }
        }
        Command::Verify { degree, max_order, deep, sample, conjugacy_max_order, report, list } => {
            let config = AuditConfig {
                options: Options { compulsory_only: list.compulsory_only, primitive: true },
                sample,
                conjugacy_max_order,
                oracle_modulus: deep.then(|| deep_modulus(degree)),
                ..AuditConfig::default()
            };
            let r = audit(degree, max_order, &config)?;
            if report {
                for o in &r.orders {
                    writeln!(out, "{}", serde_json::to_string(o).expect("reports serialize"))?;
                }
            }
            writeln!(
                out,
                "degree {} orders 1..={}: {} classes, {} checks passed, {} failures",
                r.degree,
                r.max_order,
                r.total,
                r.checks_passed(),
                r.failure_count()
            )?;
            out.flush()?;
            let failures = r.failures.iter().chain(r.orders.iter().flat_map(|o| o.failures.iter()));
            for f in failures {
                eprintln!("FAIL {} [{}]: {}", f.label, f.check, f.detail);
            }
            if !r.passed() {
                return Err(Failure::Checks(r.failure_count()));
            }
        }
        Command::Export { input, out: path } => {
            let text = read_input(&input)?;
            let mut lines = Vec::new();
            for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
                let label: GroupLabel = line.parse()?;
                lines.push(GroupRecord::from_label(&label)?.to_json());
            }
            let body: String = lines.iter().map(|l| format!("{l}\n")).collect();
            match path {
                Some(p) => fs::write(p, body)?,
                None => out.write_all(body.as_bytes())?,
            }
        }
        Command::Import { input } => {
            let text = read_input(&input)?;
            for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
                writeln!(out, "{}", GroupRecord::from_json(line)?.label)?;
            }
        }
    }
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks(n)) => {
            eprintln!("error: {n} checks failed");
            ExitCode::from(1)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::Unsupported(..) | Error::NotPrime(_) => ExitCode::from(3),
                Error::MalformedToken(_) | Error::UnknownFamily(_) | Error::InvalidLabel(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

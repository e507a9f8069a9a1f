use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use rkm::fixtures::{self, AnalysisOptions, FixtureRow};
use rkm::gray::{element_image, gray_generator_rows, lee_weight};
use rkm::lift::{self, LiftSearchSpec, Strategy};
use rkm::macwilliams;
use rkm::{DistanceAlgorithm, Error, RingCode, RingParams};

#[derive(Parser)]
#[command(name = "rkm", version, about = "Codes over F2[u,v]/<u^k, v^m, uv-vu> and their binary Gray images")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Ring facts.
    Ring {
        #[command(subcommand)]
        command: RingCommand,
    },
    /// Polynomial string to canonical integer.
    Encode {
        element: String,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        m: u32,
    },
    /// Canonical integer to polynomial string.
    Decode {
        value: u64,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        m: u32,
    },
    /// Print the generator over the ring and its binary Gray image.
    Construct { specfile: PathBuf },
    /// Self-duality, type, minimum distance and weight-enumerator family.
    Check {
        specfile: PathBuf,
        #[arg(long, value_enum)]
        algorithm: Option<Algorithm>,
        /// Low-weight census for codes too large to enumerate fully.
        #[arg(long)]
        extended: bool,
        /// Also print the weight enumerator as CSV.
        #[arg(long)]
        csv: bool,
    },
    /// Verify the rows of a published table: golay, t1..t8 or all.
    Reproduce {
        table: String,
        /// Also check distance and alpha/beta/gamma of length 66 and 72 rows.
        #[arg(long)]
        extended: bool,
    },
    /// MacWilliams identities.
    Macwilliams {
        #[command(subcommand)]
        command: MacwilliamsCommand,
    },
    /// Search lifts of a binary seed for self-dual codes with good Gray images.
    Search {
        liftspecfile: PathBuf,
        /// Overrides the sampling seed of the spec file.
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Subcommand)]
enum RingCommand {
    Info { k: u32, m: u32 },
}

#[derive(Subcommand)]
enum MacwilliamsCommand {
    /// Random codes over R(2,1), R(2,2), R(3,1), R(3,2) against all three identities.
    Selftest {
        #[arg(long, default_value_t = 120)]
        count: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Algorithm {
    Exhaustive,
    InformationSet,
}

enum Outcome {
    Pass,
    Fail,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: cannot configure {n} threads: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.command) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn read(path: &PathBuf) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn rows_from(path: &PathBuf) -> Result<Vec<FixtureRow>, String> {
    let rows = fixtures::parse_fixtures(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))?;
    if rows.is_empty() {
        return Err(format!("{}: no constructions found", path.display()));
    }
    Ok(rows)
}

fn lib(e: Error) -> String {
    e.to_string()
}

fn run(command: Command) -> Result<Outcome, String> {
    match command {
        Command::Ring { command: RingCommand::Info { k, m } } => {
            let r = RingParams::new(k, m).map_err(lib)?;
            println!("ring: {r}");
            println!("size: {}", r.size());
            println!("units: {}", r.unit_count());
            println!("non-units: {}", r.size() - r.unit_count());
            println!("gray image bits per symbol: {}", r.bits());
            println!("{:>6}  {:<24} {:<5} {:<24} {:>3}  gray", "code", "element", "unit", "inverse", "w_L");
            for a in r.elements().take(16) {
                let inv = a.inverse().map_or("-".to_string(), |x| x.to_string());
                let img = element_image(a);
                let bits: String = (0..r.bits()).map(|b| if img >> b & 1 == 1 { '1' } else { '0' }).collect();
                println!("{:>6}  {:<24} {:<5} {:<24} {:>3}  {bits}", a.encode(), a.to_string(), a.is_unit(), inv, lee_weight(a));
            }
            if r.size() > 16 {
                println!("... ({} more)", r.size() - 16);
            }
            Ok(Outcome::Pass)
        }
        Command::Encode { element, k, m } => {
            let r = RingParams::new(k, m).map_err(lib)?;
            println!("{}", r.parse_element(&element).map_err(lib)?.encode());
            Ok(Outcome::Pass)
        }
        Command::Decode { value, k, m } => {
            let r = RingParams::new(k, m).map_err(lib)?;
            println!("{}", r.decode(value).map_err(lib)?);
            Ok(Outcome::Pass)
        }
        Command::Construct { specfile } => {
            for row in rows_from(&specfile)? {
                let g = row.spec.build().map_err(lib)?;
                println!("# {}", row.label());
                println!("generator over {} ({} x {}):", row.spec.params(), g.rows(), g.cols());
                print!("{g}");
                let code = RingCode::new(g);
                let rows = gray_generator_rows(&code);
                println!("gray image generator ({} x {}):", rows.len(), rows.first().map_or(0, |r| r.len()));
                for r in rows {
                    println!("{r}");
                }
            }
            Ok(Outcome::Pass)
        }
        Command::Check { specfile, algorithm, extended, csv } => {
            let options = AnalysisOptions {
                extended,
                algorithm: algorithm.map(|a| match a {
                    Algorithm::Exhaustive => DistanceAlgorithm::Exhaustive,
                    Algorithm::InformationSet => DistanceAlgorithm::InformationSet,
                }),
            };
            let mut outcome = Outcome::Pass;
            for row in rows_from(&specfile)? {
                println!("# {}", row.label());
                let analysis = fixtures::analyze(&row.spec, options).map_err(lib)?;
                print!("{analysis}");
                if csv {
                    if let Some(we) = &analysis.enumerator {
                        print!("{}", we.to_csv());
                    }
                }
                if !row.expected.is_empty() {
                    let report = fixtures::verify_row(&row, options).map_err(lib)?;
                    println!("{report}");
                    if !report.passed() {
                        outcome = Outcome::Fail;
                    }
                }
            }
            Ok(outcome)
        }
        Command::Reproduce { table, extended } => {
            if extended {
                eprintln!(
                    "note: --extended runs a low-weight census on every [66,33] and [72,36] row; \
                     expect seconds per row and minutes for a whole table"
                );
            }
            let reports = fixtures::reproduce(&table, AnalysisOptions { extended, algorithm: None }).map_err(lib)?;
            let failed = reports.iter().filter(|r| !r.passed()).count();
            for r in &reports {
                println!("{r}");
            }
            println!("{} rows, {} passed, {} failed", reports.len(), reports.len() - failed, failed);
            Ok(if failed == 0 { Outcome::Pass } else { Outcome::Fail })
        }
        Command::Macwilliams { command: MacwilliamsCommand::Selftest { count, seed } } => {
            let report = macwilliams::random_suite(count, seed).map_err(lib)?;
            println!("codes: {}", report.codes);
            for (name, failures) in [
                ("complete", &report.cwe_failures),
                ("hamming", &report.hamming_failures),
                ("lee", &report.lee_failures),
            ] {
                println!("{name}: {}", if failures.is_empty() { "PASS".to_string() } else { format!("FAIL ({})", failures.len()) });
                for f in failures {
                    println!("  {f}");
                }
            }
            Ok(if report.passed() { Outcome::Pass } else { Outcome::Fail })
        }
        Command::Search { liftspecfile, seed } => {
            let mut spec = LiftSearchSpec::parse(&read(&liftspecfile)?).map_err(|e| format!("{}: {e}", liftspecfile.display()))?;
            if let Some(s) = seed {
                match &mut spec.strategy {
                    Strategy::Sampled { seed, .. } => *seed = s,
                    Strategy::Exhaustive => eprintln!("note: --seed ignored for an exhaustive search"),
                }
            }
            let report = lift::search(&spec).map_err(lib)?;
            print!("{report}");
            Ok(Outcome::Pass)
        }
    }
}

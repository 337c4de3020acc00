use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use stardeck::completion::Outcome;
use stardeck::oracle::{self, Answer};
use stardeck::precentral::{minimal, suitable, Precentral};
use stardeck::{check_blocked_edge, design_exists, is_admissible, selftest, threshold_u, PartialDesign};

const SUCCESS: u8 = 0;
const NEGATIVE: u8 = 1;
const INPUT_ERROR: u8 = 2;

#[derive(Parser)]
#[command(name = "stardeck", version, about = "Complete partial k-star designs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Admissibility, existence and the completion threshold u(n,k).
    Threshold {
        n: usize,
        k: usize,
        #[arg(long)]
        json: bool,
    },
    /// Complete a partial design read from a JSON file.
    Complete {
        file: PathBuf,
        /// Print the full result with its trace instead of just the design.
        #[arg(long)]
        json: bool,
    },
    /// Check a design file for structural violations.
    Verify { file: PathBuf },
    /// Print an uncompletable design with u(n,k)+1 stars.
    GenUncompletable { n: usize, k: usize },
    /// Print a random partial design with m stars.
    GenRandom { n: usize, k: usize, m: usize, seed: u64 },
    /// Decide completability by exhaustive search.
    Oracle {
        file: PathBuf,
        #[arg(long, env = "STARDECK_ORACLE_BUDGET", default_value_t = oracle::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Show the minimal and suitable precentral functions of the leftover.
    Precentral { file: PathBuf },
    /// Run the seeded property suites.
    Selftest {
        #[arg(default_value_t = 3)]
        k_max: usize,
        #[arg(default_value_t = 15)]
        n_max: usize,
        #[arg(default_value_t = 200)]
        trials: usize,
        #[arg(default_value_t = 42)]
        seed: u64,
    },
}

/// An error that maps to a specific exit code.
struct Exit(u8, anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for Exit {
    fn from(e: E) -> Self {
        Exit(INPUT_ERROR, e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Exit(code, e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(code)
        }
    }
}

fn read_design(path: &Path) -> Result<PartialDesign, Exit> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let d = PartialDesign::from_json(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok(d)
}

fn read_valid_design(path: &Path) -> Result<PartialDesign, Exit> {
    let d = read_design(path)?;
    if let Err(violations) = d.validate() {
        for v in &violations {
            eprintln!("violation: {v}");
        }
        return Err(Exit(INPUT_ERROR, anyhow::anyhow!("{} is not a valid partial design", path.display())));
    }
    Ok(d)
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json"));
}

fn run(command: Command) -> Result<u8, Exit> {
    match command {
        Command::Threshold { n, k, json } => {
            if n == 0 || k < 2 {
                return Err(Exit(INPUT_ERROR, anyhow::anyhow!("need n >= 1 and k >= 2")));
            }
            let admissible = is_admissible(n, k);
            let u = (admissible && n > 1).then(|| threshold_u(n, k));
            if json {
                print_json(&json!({
                    "admissible": admissible,
                    "design_exists": design_exists(n, k),
                    "k": k,
                    "n": n,
                    "u": u,
                }));
            } else if !admissible {
                println!("n={n} k={k}: not admissible");
            } else {
                println!("n={n} k={k}: admissible");
                println!("design exists: {}", if design_exists(n, k) { "yes" } else { "no" });
                match u {
                    Some(u) => println!("u={u}"),
                    None => println!("u undefined for n=1"),
                }
            }
            Ok(SUCCESS)
        }
        Command::Complete { file, json } => {
            let d = read_valid_design(&file)?;
            let result = stardeck::complete(&d).map_err(|e| Exit(NEGATIVE, e.into()))?;
            if json {
                print_json(&result.to_json());
            }
            match &result.outcome {
                Outcome::Completed(full) => {
                    if !json {
                        print!("{}", full.to_json());
                    }
                    Ok(SUCCESS)
                }
                Outcome::Impossible(why) => {
                    if !json {
                        println!("impossible: {}", why.name());
                        if let stardeck::Impossibility::BlockedEdge(cert) = why {
                            print_json(&serde_json::to_value(cert).expect("json"));
                        }
                        if let stardeck::Impossibility::OddComponent(comp) = why {
                            println!("odd component: {comp:?}");
                        }
                    }
                    Ok(NEGATIVE)
                }
                Outcome::Unknown => {
                    if !json {
                        println!("unknown: above the threshold and no certificate found");
                    }
                    Ok(NEGATIVE)
                }
            }
        }
        Command::Verify { file } => {
            let d = read_design(&file)?;
            match d.validate() {
                Ok(()) => {
                    let left = d.leftover().expect("validated").edge_count();
                    println!("valid: {} stars, {} leftover edges", d.stars.len(), left);
                    if left == 0 {
                        println!("complete design");
                    } else if let Some(cert) = check_blocked_edge(&d).expect("validated") {
                        println!(
                            "uncompletable: leftover edge {:?} has endpoint degrees {:?}",
                            cert.blocked_edge, cert.degrees
                        );
                    }
                    Ok(SUCCESS)
                }
                Err(violations) => {
                    for v in &violations {
                        println!("violation: {v}");
                    }
                    Ok(NEGATIVE)
                }
            }
        }
        Command::GenUncompletable { n, k } => {
            let d = stardeck::gen_uncompletable(n, k)?;
            print!("{}", d.to_json());
            Ok(SUCCESS)
        }
        Command::GenRandom { n, k, m, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let d = stardeck::random::random_partial_design(n, k, m, &mut rng).map_err(|e| Exit(NEGATIVE, e.into()))?;
            print!("{}", d.to_json());
            Ok(SUCCESS)
        }
        Command::Oracle { file, budget } => {
            let d = read_valid_design(&file)?;
            match oracle::has_completion(&d, budget) {
                Answer::Yes(full) => {
                    print!("{}", full.to_json());
                    Ok(SUCCESS)
                }
                Answer::No => {
                    println!("no completion");
                    Ok(NEGATIVE)
                }
                Answer::Unknown => {
                    println!("unknown: budget of {budget} nodes exhausted");
                    Ok(NEGATIVE)
                }
            }
        }
        Command::Precentral { file } => {
            let d = read_valid_design(&file)?;
            let leftover = d.leftover()?;
            let m = minimal(&leftover, d.k)?;
            let s = suitable(&leftover, d.k)?;
            println!("leftover: {} vertices, {} edges, k={}", leftover.order(), leftover.edge_count(), d.k);
            println!("{:>6} {:>6} {:>4} {:>8} {:>4} {:>8}", "vertex", "deg", "m", "m*", "s", "s*");
            for x in 0..leftover.order() {
                println!(
                    "{:>6} {:>6} {:>4} {:>8} {:>4} {:>8}",
                    x,
                    leftover.degree(x),
                    m.get(x),
                    m.pstar(x).to_string(),
                    s.function.get(x),
                    s.function.pstar(x).to_string()
                );
            }
            println!("sum |m*| = {}", deviation(&m));
            println!("repair: {}", s.repair);
            if let Some(flaw) = s.residual_flaw {
                println!("advisory: flaw remains after one repair: {flaw:?}");
            }
            Ok(SUCCESS)
        }
        Command::Selftest { k_max, n_max, trials, seed } => {
            let report = selftest::run(&selftest::Config { k_max, n_max, trials, seed });
            print!("{report}");
            Ok(if report.passed() { SUCCESS } else { NEGATIVE })
        }
    }
}

fn deviation(p: &Precentral) -> stardeck::Residue {
    stardeck::Residue::new(p.scaled_total_deviation(), p.k())
}

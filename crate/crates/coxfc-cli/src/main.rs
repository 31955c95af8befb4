//! Command-line front end: enumeration, classification, reduction, heap
//! rendering, and theorem verification with newline-delimited JSON output.
//!
//! Exit codes: 0 on success, 1 on a semantic negative (a word that is not a
//! reduced word of a fully commutative element, or a verification mismatch),
//! 2 on usage errors.

use clap::{Parser, Subcommand, ValueEnum};
use coxfc::families::c_classification;
use coxfc::harness;
use coxfc::star;
use coxfc::{CoxeterGraph, Error, Family, FcElement, Word};
use serde::Serialize;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(name = "coxfc", version, about = "Fully commutative elements in Coxeter groups of types B and affine C")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    B,
    Bprime,
    Ctilde,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::B => Family::B,
            FamilyArg::Bprime => Family::Bprime,
            FamilyArg::Ctilde => Family::Ctilde,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List all fully commutative elements, one per line.
    Enumerate {
        #[arg(long = "type", value_enum)]
        family: FamilyArg,
        #[arg(long)]
        rank: usize,
        /// Required for the affine family, optional for the finite ones.
        #[arg(long)]
        max_length: Option<usize>,
        /// Print full JSON records instead of bare words.
        #[arg(long)]
        json: bool,
    },
    /// Classify one element against the non-cancellable list.
    Classify {
        #[arg(long = "type", value_enum)]
        family: FamilyArg,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        word: String,
    },
    /// Apply weak-star reductions to a fixed point, printing the move trace.
    Reduce {
        #[arg(long = "type", value_enum)]
        family: FamilyArg,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        word: String,
    },
    /// Render the canonical heap of a word (fully commutative or not).
    Heap {
        #[arg(long = "type", value_enum)]
        family: FamilyArg,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        word: String,
    },
    /// Run a verification and print its JSON report.
    Verify {
        #[command(subcommand)]
        what: VerifyCommand,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Non-cancellable classification over all of FC(B_n) and FC(B'_n).
    TheoremB {
        #[arg(long)]
        rank: usize,
    },
    /// Non-cancellable classification over FC of the affine family.
    TheoremC {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        max_length: usize,
    },
    /// Antichain width 1 exactly on the type I chains.
    PropZigzags {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        max_length: usize,
    },
    /// Star irreducibility of (x_O x_E)^k x_O for even rank.
    StarRemark {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        k_max: usize,
        #[arg(long, default_value_t = 12)]
        max_length: usize,
    },
    /// Heap reducedness test against the commutation-class criterion.
    OracleFc {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        max_length: usize,
    },
    /// Normal form factorization over all of FC(B_n).
    NormalForm {
        #[arg(long)]
        rank: usize,
    },
}

/// One serialized element, as printed by `enumerate --json` and `classify`.
#[derive(Serialize)]
struct ElementRecord {
    #[serde(rename = "type")]
    family: &'static str,
    rank: usize,
    word: Word,
    length: usize,
    n_value: usize,
    non_cancellable: bool,
    clause: Option<&'static str>,
}

fn element_record(e: &FcElement) -> Result<ElementRecord, Error> {
    let verdict = c_classification(e)?;
    Ok(ElementRecord {
        family: e.graph().family().as_str(),
        rank: e.graph().rank(),
        word: e.canonical().clone(),
        length: e.len(),
        n_value: e.heap().antichain_width(),
        non_cancellable: star::is_non_cancellable(e),
        clause: verdict.clause.map(|c| c.as_str()),
    })
}

fn parse_word(s: &str) -> Result<Word, String> {
    Word::from_str(s)
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Enumerate {
            family,
            rank,
            max_length,
            json,
        } => {
            let g = CoxeterGraph::new(family.into(), rank)?;
            for e in harness::enumerate_fc(&g, max_length)? {
                if json {
                    let record = element_record(&e)?;
                    println!("{}", serde_json::to_string(&record).expect("serializable"));
                } else {
                    println!("{}", e.canonical());
                }
            }
            Ok(0)
        }
        Command::Classify { family, rank, word } => {
            let g = CoxeterGraph::new(family.into(), rank)?;
            let w = match parse_word(&word) {
                Ok(w) => w,
                Err(msg) => {
                    eprintln!("error: {msg}");
                    return Ok(2);
                }
            };
            let e = FcElement::from_word(&w, &g)?;
            let record = element_record(&e)?;
            println!("{}", serde_json::to_string(&record).expect("serializable"));
            Ok(0)
        }
        Command::Reduce { family, rank, word } => {
            let g = CoxeterGraph::new(family.into(), rank)?;
            let w = match parse_word(&word) {
                Ok(w) => w,
                Err(msg) => {
                    eprintln!("error: {msg}");
                    return Ok(2);
                }
            };
            let e = FcElement::from_word(&w, &g)?;
            let (result, trace) = star::reduce_fully(&e);
            for mv in &trace {
                println!("{mv}");
            }
            let record = element_record(&result)?;
            println!("{}", serde_json::to_string(&record).expect("serializable"));
            Ok(0)
        }
        Command::Heap { family, rank, word } => {
            let g = CoxeterGraph::new(family.into(), rank)?;
            let w = match parse_word(&word) {
                Ok(w) => w,
                Err(msg) => {
                    eprintln!("error: {msg}");
                    return Ok(2);
                }
            };
            let h = coxfc::heap_of(&w, &g)?;
            let grid = h.render_ascii();
            if !grid.is_empty() {
                println!("{grid}");
            }
            Ok(0)
        }
        Command::Verify { what } => {
            let report = match what {
                VerifyCommand::TheoremB { rank } => harness::verify_theorem_b(rank)?,
                VerifyCommand::TheoremC { rank, max_length } => {
                    harness::verify_theorem_c(rank, max_length)?
                }
                VerifyCommand::PropZigzags { rank, max_length } => {
                    harness::verify_prop_zigzags(rank, max_length)?
                }
                VerifyCommand::StarRemark {
                    rank,
                    k_max,
                    max_length,
                } => harness::verify_star_remark(rank, k_max, max_length)?,
                VerifyCommand::OracleFc { rank, max_length } => {
                    harness::verify_fc_oracle(rank, max_length)?
                }
                VerifyCommand::NormalForm { rank } => harness::verify_normal_form(rank)?,
            };
            println!("{}", serde_json::to_string(&report).expect("serializable"));
            Ok(if report.matched { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::NotFcReduced { .. } | Error::InvalidMove { .. } => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

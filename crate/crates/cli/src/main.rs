use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use tnnflag::algebra::parse_rational;
use tnnflag::extremal::{extremal_indices, s_vw_of};
use tnnflag::membership::{decide_tnn, decide_trop};
use tnnflag::plucker::{generate_relations, parse_vector, relation_to_json, AnyVector};
use tnnflag::{Cell, Permutation, Rational, TropValue};

mod verify;

/// Totally nonnegative flags, their tropicalization, and membership certificates.
///
/// Permutations are one-line notation: digits ("4213") for n <= 9, or comma
/// separated ("4,2,1,3") for any n.
#[derive(Parser)]
#[command(name = "tnnflag", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check v <= w and describe the wiring diagram of the cell.
    Cell { v: Permutation, w: Permutation },
    /// Plücker coordinates of the cell at the given weights.
    Plucker {
        v: Permutation,
        w: Permutation,
        /// JSON object mapping weight positions to values, e.g. {"1": "2/3"}.
        #[arg(long)]
        weights: PathBuf,
        /// Treat the weights as tropical and apply the tropicalized map.
        #[arg(long)]
        tropical: bool,
    },
    /// Extremal index chains of a Plücker vector.
    Extremal { vector: PathBuf },
    /// Decide membership in the nonnegative flag variety.
    Decide { vector: PathBuf },
    /// Decide membership in the nonnegative flag Dressian.
    TropDecide { vector: PathBuf },
    /// List the incidence Plücker relations for n.
    Relations {
        n: usize,
        #[arg(long)]
        three_term: bool,
    },
    /// Run the oracle suite on every cell of S_n and print a report.
    Verify {
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
}

/// Exit status requested by a command that otherwise succeeded.
enum Status {
    Ok,
    Rejected,
}

fn read_json(path: &Path) -> anyhow::Result<Value> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_vector(path: &Path) -> anyhow::Result<AnyVector> {
    Ok(parse_vector(&read_json(path)?)?)
}

/// Accepts a flat `{"1": "2"}` map or any object with such a map under "weights".
fn read_weights(path: &Path) -> anyhow::Result<BTreeMap<usize, String>> {
    let doc = read_json(path)?;
    let map = match doc.get("weights") {
        Some(inner) => inner,
        None => &doc,
    };
    let Value::Object(map) = map else {
        bail!("weights must be a JSON object")
    };
    map.iter()
        .map(|(k, v)| {
            let id: usize = k.parse().with_context(|| format!("weight key {k:?}"))?;
            let text = match v {
                Value::String(s) => s.clone(),
                Value::Number(x) => x.to_string(),
                _ => bail!("weight {k:?} must be a string or number"),
            };
            Ok((id, text))
        })
        .collect()
}

fn cell_summary(v: &Permutation, w: &Permutation) -> anyhow::Result<Value> {
    let cell = Cell::new(v, w)?;
    let d = cell.diagram();
    let word = &d.cell().word;
    let swaps: Vec<usize> = (1..=word.len()).filter(|j| d.cell().swaps[j - 1]).collect();
    let s_vw: Vec<String> = s_vw_of(&cell)?.iter().map(|s| s.to_string()).collect();
    Ok(json!({
        "v": v.to_string(),
        "w": w.to_string(),
        "dimension": cell.dimension(),
        "word": word.letters,
        "runs": word.runs,
        "subexpression": swaps,
        "weights": cell.weight_ids(),
        "edges": d.listing(),
        "grid": d.to_string().lines().collect::<Vec<_>>(),
        "s_vw": s_vw,
    }))
}

fn run(cmd: Command) -> anyhow::Result<(Value, Status)> {
    Ok(match cmd {
        Command::Cell { v, w } => (cell_summary(&v, &w)?, Status::Ok),
        Command::Plucker {
            v,
            w,
            weights,
            tropical,
        } => {
            let raw = read_weights(&weights)?;
            let out = if tropical {
                let x: BTreeMap<usize, TropValue> = raw
                    .iter()
                    .map(|(&j, s)| Ok((j, s.parse()?)))
                    .collect::<tnnflag::Result<_>>()?;
                tnnflag::plucker::trop_phi(&v, &w, &x)?.to_json()
            } else {
                let a: BTreeMap<usize, Rational> = raw
                    .iter()
                    .map(|(&j, s)| Ok((j, parse_rational(s)?)))
                    .collect::<tnnflag::Result<_>>()?;
                tnnflag::plucker::phi(&v, &w, &a)?.to_json()
            };
            (out, Status::Ok)
        }
        Command::Extremal { vector } => {
            let chains = match read_vector(&vector)? {
                AnyVector::Classical(p) => extremal_indices(&p)?,
                AnyVector::Tropical(p) => extremal_indices(&p)?,
            };
            let chains: Vec<Value> = chains.iter().map(|c| c.to_json()).collect();
            (json!({ "chains": chains }), Status::Ok)
        }
        Command::Decide { vector } => {
            let AnyVector::Classical(p) = read_vector(&vector)? else {
                bail!("decide expects a classical vector; use trop-decide")
            };
            let cert = decide_tnn(&p)?;
            let status = if cert.is_member() { Status::Ok } else { Status::Rejected };
            (cert.to_json(), status)
        }
        Command::TropDecide { vector } => {
            let AnyVector::Tropical(p) = read_vector(&vector)? else {
                bail!("trop-decide expects a tropical vector; use decide")
            };
            let cert = decide_trop(&p)?;
            let status = if cert.is_member() { Status::Ok } else { Status::Rejected };
            (cert.to_json(), status)
        }
        Command::Relations { n, three_term } => {
            if !(2..=12).contains(&n) {
                bail!("n must be between 2 and 12");
            }
            let rels: Vec<Value> = generate_relations(n, three_term).iter().map(relation_to_json).collect();
            (
                json!({ "n": n, "three_term": three_term, "relations": rels }),
                Status::Ok,
            )
        }
        Command::Verify { n, seed, max_n } => {
            if n < 2 || n > max_n {
                bail!("n = {n} must be between 2 and --max-n = {max_n}");
            }
            let report = verify::run(n, seed)?;
            let status = if report["ok"] == Value::Bool(true) {
                Status::Ok
            } else {
                Status::Rejected
            };
            (report, status)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((out, status)) => {
            println!("{}", serde_json::to_string_pretty(&out).expect("JSON values serialize"));
            match status {
                Status::Ok => ExitCode::SUCCESS,
                Status::Rejected => ExitCode::from(1),
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

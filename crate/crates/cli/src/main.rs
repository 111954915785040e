use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use srefl_core::classify::{classify_all, ReprCandidate};
use srefl_core::groups::{build_group, GroupData, GroupSpec};
use srefl_core::mckay::build_mckay;
use srefl_core::partitions::Partition;
use srefl_core::verifier::{verify_all, Mode};
use srefl_core::Error;

#[derive(Parser)]
#[command(
    name = "srefl",
    version,
    about = "Extendable wreath-product representations of symplectic reflection algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Pretty-print the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    /// Write the JSON output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Conjugacy classes and character table.
    Group { spec: String },
    /// McKay graph and its extended Dynkin type.
    Mckay { spec: String },
    /// Every extendable irreducible of S_N ⋉ Γ^N with its parameter family.
    Classify {
        spec: String,
        #[arg(long)]
        n: usize,
    },
    /// Checks the classification against the relations at matrix level.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct VerifyArgs {
    spec: String,
    #[arg(long)]
    n: usize,
    /// Type vector, e.g. `2,0`.
    #[arg(long = "type", value_delimiter = ',')]
    type_vec: Option<Vec<usize>>,
    /// Partitions keyed by irrep index, e.g. `{"0":[2]}`.
    #[arg(long)]
    partitions: Option<String>,
    #[arg(long, default_value = "float")]
    mode: String,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Unsupported(_) => 3,
            Error::Invariant(_) => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn bad_input(message: String) -> Failure {
    Failure { code: 2, message }
}

fn group(spec: &str) -> Result<GroupData, Failure> {
    let spec: GroupSpec = spec.parse()?;
    Ok(build_group(spec)?)
}

fn cmd_group(spec: &str) -> Result<Value, Failure> {
    let g = group(spec)?;
    let irreps: Vec<Value> = (0..g.nu())
        .map(|h| json!({ "index": h, "name": g.irrep_names[h], "dim": g.dim(h) }))
        .collect();
    let table: Vec<Vec<Value>> = (0..g.nu())
        .map(|h| (0..g.nu()).map(|s| json!(g.character(h, s))).collect())
        .collect();
    Ok(json!({
        "group": g.spec.to_string(),
        "order": g.order,
        "conductor": g.conductor,
        "classes": g.classes,
        "irreps": irreps,
        "tautological": g.tautological,
        "characters": table,
    }))
}

fn cmd_mckay(spec: &str) -> Result<Value, Failure> {
    let g = group(spec)?;
    let graph = build_mckay(&g)?;
    Ok(json!({ "group": g.spec.to_string(), "graph": graph }))
}

fn cmd_classify(spec: &str, n: usize) -> Result<Value, Failure> {
    let g = group(spec)?;
    let families = classify_all(&g, n)?;
    Ok(
        json!({ "group": g.spec.to_string(), "n": n, "count": families.len(), "families": families }),
    )
}

fn parse_partitions(raw: &str) -> Result<BTreeMap<usize, Partition>, Failure> {
    let map: BTreeMap<String, Vec<usize>> = serde_json::from_str(raw)
        .map_err(|e| bad_input(format!("--partitions is not a JSON object of arrays: {e}")))?;
    map.into_iter()
        .map(|(k, v)| {
            let h = k
                .parse()
                .map_err(|_| bad_input(format!("--partitions key {k:?} is not an irrep index")))?;
            Ok((h, Partition::new(v)?))
        })
        .collect()
}

/// Returns the report and whether every candidate agreed.
fn cmd_verify(a: &VerifyArgs) -> Result<(Value, bool), Failure> {
    let g = group(&a.spec)?;
    let mode: Mode = a.mode.parse()?;
    if let Some(t) = &a.type_vec {
        if t.len() != g.nu() || t.iter().sum::<usize>() != a.n {
            return Err(bad_input(format!(
                "--type needs {} entries summing to N = {}, got {t:?}",
                g.nu(),
                a.n
            )));
        }
    }
    let parts = a.partitions.as_deref().map(parse_partitions).transpose()?;
    if let (Some(t), Some(p)) = (&a.type_vec, &parts) {
        ReprCandidate::new(t.clone(), p.clone())?;
    }
    let filter = |c: &ReprCandidate| {
        a.type_vec.as_ref().is_none_or(|t| &c.type_vec == t)
            && parts.as_ref().is_none_or(|p| &c.partitions == p)
    };
    let sweep = verify_all(&g, a.n, mode, filter)?;
    let agree = sweep.all_agree();
    let value = json!({
        "group": g.spec.to_string(),
        "n": a.n,
        "mode": mode,
        "checked": sweep.reports.len(),
        "accepted": sweep.reports.iter().filter(|r| r.oracle_accepts).count(),
        "all_agree": agree,
        "reports": sweep.reports,
        "skipped": sweep.skipped,
    });
    Ok((value, agree))
}

fn emit(value: &Value, cli: &Cli) -> Result<(), Failure> {
    let text = if cli.pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    }
    .map_err(|e| Failure {
        code: 1,
        message: e.to_string(),
    })?;
    match &cli.out {
        Some(path) => std::fs::write(path, text + "\n")
            .map_err(|e| bad_input(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            match writeln!(out, "{text}") {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(Failure {
                    code: 1,
                    message: e.to_string(),
                }),
                _ => Ok(()),
            }
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    let (value, code) = match &cli.command {
        Command::Group { spec } => (cmd_group(spec)?, 0),
        Command::Mckay { spec } => (cmd_mckay(spec)?, 0),
        Command::Classify { spec, n } => (cmd_classify(spec, *n)?, 0),
        Command::Verify(a) => {
            let (v, agree) = cmd_verify(a)?;
            (v, if agree { 0 } else { 1 })
        }
    };
    emit(&value, cli)?;
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

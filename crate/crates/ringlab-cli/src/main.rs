//! Command-line front end for the finite-ring workbench.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use ringlab::analysis::{self, RingProfile};
use ringlab::claims;
use ringlab::config::{Config, OutputFormat};
use ringlab::construct::{self, FamilyIsoKind};
use ringlab::expr::{self, RingExpr};
use ringlab::json_ring;
use ringlab::{FiniteRing, Subset};

/// Construct finite rings, analyze their structural subsets, classify them,
/// and check the built-in claim registry over a ring corpus.
#[derive(Parser)]
#[command(name = "ringlab", version, max_term_width = 100)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalOpts {
    /// Output format (text or json)
    #[arg(long, global = true, value_parser = parse_format, default_value = "text", env = "FORMAT")]
    format: String,
    /// Seed for all randomized checks (logged in reports)
    #[arg(long, global = true, default_value_t = 0, env = "SEED")]
    seed: u64,
    /// Largest ring backed by dense operation tables
    #[arg(long, global = true, default_value_t = 4096, env = "TABLE_CAP")]
    table_cap: usize,
    /// Largest ring constructible with a structure backend
    #[arg(long, global = true, default_value_t = 65536, env = "STRUCTURE_CAP")]
    structure_cap: usize,
}

fn parse_format(s: &str) -> Result<String, String> {
    match s {
        "text" | "json" => Ok(s.to_string()),
        other => Err(format!("unknown format {other:?}, expected text or json")),
    }
}

#[derive(Subcommand)]
enum Command {
    /// Full structural profile of a ring: subset sizes and members, all
    /// classifier flags
    Analyze {
        /// Construction expression, e.g. "T(3, Zmod(2))"
        expr: Option<String>,
        /// Import a raw ring from a JSON table file instead
        #[arg(long, conflicts_with = "expr")]
        json: Option<String>,
    },
    /// Classifier flags only
    Classify {
        expr: Option<String>,
        #[arg(long, conflicts_with = "expr")]
        json: Option<String>,
    },
    /// Run the claim registry over the default corpus (or selected rings)
    Claims {
        /// Comma-separated claim ids, e.g. "C15,C23"
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        /// Replace the default corpus with these construction expressions
        #[arg(long)]
        rings: Vec<String>,
        /// Check the literal idempotent-disjointness statement (flags at the
        /// zero idempotent)
        #[arg(long)]
        literal: bool,
        /// Include per-cell timings (makes reports non-reproducible)
        #[arg(long)]
        timings: bool,
        /// Write the JSON report to a file as well as stdout
        #[arg(long)]
        out: Option<String>,
    },
    /// Decide whether two constructions are isomorphic
    Iso { expr_a: String, expr_b: String },
    /// Show the default corpus
    Corpus {
        /// List labels and sizes
        #[arg(long)]
        list: bool,
    },
}

fn main() -> ExitCode {
    // die quietly when the consumer of a pipe goes away (e.g. | head)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let config = Config {
        seed: cli.global.seed,
        table_cap: cli.global.table_cap,
        structure_cap: cli.global.structure_cap,
        format: if cli.global.format == "json" {
            OutputFormat::Json
        } else {
            OutputFormat::Text
        },
        ..Config::default()
    };
    match run(cli.command, config) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::FAILURE
        }
    }
}

fn run(command: Command, mut config: Config) -> Result<ExitCode, String> {
    match command {
        Command::Analyze { expr, json } => {
            let ring = load_ring(expr.as_deref(), json.as_deref(), &config)?;
            let profile = analysis::profile(&ring, &config);
            emit_profile(&ring, &profile, &config, true);
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { expr, json } => {
            let ring = load_ring(expr.as_deref(), json.as_deref(), &config)?;
            let profile = analysis::profile(&ring, &config);
            emit_profile(&ring, &profile, &config, false);
            Ok(ExitCode::SUCCESS)
        }
        Command::Claims {
            only,
            rings,
            literal,
            timings,
            out,
        } => {
            config.literal = literal;
            config.timings = timings;
            let corpus: Vec<FiniteRing> = if rings.is_empty() {
                claims::default_corpus(&config).map_err(|e| e.to_string())?
            } else {
                let mut v = Vec::with_capacity(rings.len());
                for text in &rings {
                    let ring = expr::parse_and_eval(text, &config).map_err(|e| e.to_string())?;
                    v.push(ring.materialize(config.table_cap).unwrap_or(ring));
                }
                v
            };
            let filter = (!only.is_empty()).then_some(only.as_slice());
            let report = claims::run_claims(&corpus, filter, &config).map_err(|e| e.to_string())?;
            let rendered = match config.format {
                OutputFormat::Json => report.to_json(),
                OutputFormat::Text => report.to_text(false),
            };
            println!("{rendered}");
            if let Some(path) = out {
                let mut f = std::fs::File::create(&path)
                    .map_err(|e| format!("cannot create {path}: {e}"))?;
                f.write_all(report.to_json().as_bytes())
                    .map_err(|e| format!("cannot write {path}: {e}"))?;
            }
            if report.unexpected_failures() > 0 {
                eprintln!(
                    "error: {} unexpected claim failure(s)",
                    report.unexpected_failures()
                );
                return Ok(ExitCode::FAILURE);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Iso { expr_a, expr_b } => {
            let verdict = decide_iso(&expr_a, &expr_b, &config)?;
            match config.format {
                OutputFormat::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "left": expr_a,
                        "right": expr_b,
                        "isomorphic": verdict.is_some(),
                        "witness": verdict.as_ref().map(|m| summarize_map(m)),
                    }))
                    .unwrap()
                ),
                OutputFormat::Text => match &verdict {
                    Some(map) => {
                        println!("isomorphic");
                        println!("witness: {}", summarize_map(map));
                    }
                    None => println!("not isomorphic"),
                },
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Corpus { list: _ } => {
            let corpus = claims::default_corpus(&config).map_err(|e| e.to_string())?;
            match config.format {
                OutputFormat::Json => {
                    let entries: Vec<_> = corpus
                        .iter()
                        .map(|r| json!({"label": r.label(), "size": r.size()}))
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&entries).unwrap());
                }
                OutputFormat::Text => {
                    for r in &corpus {
                        println!("{:>6}  {}", r.size(), r.label());
                    }
                    println!("total: {} rings", corpus.len());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn load_ring(
    expr: Option<&str>,
    json: Option<&str>,
    config: &Config,
) -> Result<FiniteRing, String> {
    let ring = match (expr, json) {
        (Some(text), None) => expr::parse_and_eval(text, config).map_err(|e| e.to_string())?,
        (None, Some(path)) => {
            let text =
                std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
            json_ring::ring_from_json(&text, config).map_err(|e| e.to_string())?
        }
        _ => return Err("provide either an expression or --json FILE".to_string()),
    };
    // analysis sweeps run on dense tables whenever the ring fits
    Ok(ring.materialize(config.table_cap).unwrap_or(ring))
}

const PRINT_CAP: usize = 64;

fn subset_members(set: &Subset) -> Option<Vec<usize>> {
    (set.card() <= PRINT_CAP).then(|| set.to_vec())
}

fn emit_profile(ring: &FiniteRing, profile: &RingProfile, config: &Config, full: bool) {
    let f = &profile.flags;
    let flags = [
        ("is_UQ", f.is_uq),
        ("is_UJ", f.is_uj),
        ("is_UU", f.is_uu),
        ("is_boolean", f.is_boolean),
        ("is_reduced", f.is_reduced),
        ("is_local", f.is_local),
        ("is_division", f.is_division),
        ("is_regular", f.is_regular),
        ("is_semisimple", f.is_semisimple),
        ("is_clean", f.is_clean),
        ("is_uniquely_clean", f.is_uniquely_clean),
        ("is_strongly_clean", f.is_strongly_clean),
        ("is_J_clean", f.is_j_clean),
        ("is_dedekind_finite", f.is_dedekind_finite),
        ("is_semipotent", f.is_semipotent),
        ("is_potent", f.is_potent),
    ];
    let named: [(&str, &Subset); 6] = [
        ("units", &profile.units.set),
        ("idempotents", &profile.idempotents),
        ("nilpotents", &profile.nilpotents),
        ("jacobson", &profile.jacobson),
        ("quasinilpotents", &profile.quasinilpotents),
        ("center", &profile.center),
    ];
    match config.format {
        OutputFormat::Json => {
            let mut sets = serde_json::Map::new();
            if full {
                for (name, set) in named {
                    sets.insert(
                        name.to_string(),
                        json!({"card": set.card(), "members": subset_members(set)}),
                    );
                }
                if let Some(nstar) = &profile.lower_nilradical {
                    sets.insert(
                        "lower_nilradical".to_string(),
                        json!({"card": nstar.card(), "members": subset_members(nstar)}),
                    );
                }
            }
            let mut flag_map = serde_json::Map::new();
            for (name, value) in flags {
                flag_map.insert(name.to_string(), json!(value));
            }
            flag_map.insert("is_2primal".to_string(), json!(f.is_2primal));
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "label": ring.label(),
                    "size": ring.size(),
                    "backend": ring.backend_kind().to_string(),
                    "sets": sets,
                    "flags": flag_map,
                }))
                .unwrap()
            );
        }
        OutputFormat::Text => {
            println!(
                "{}  (size {}, {} backend)",
                ring.label(),
                ring.size(),
                ring.backend_kind()
            );
            if full {
                for (name, set) in named {
                    print_set(name, set);
                }
                match &profile.lower_nilradical {
                    Some(nstar) => print_set("lower_nilradical", nstar),
                    None => println!("  lower_nilradical: skipped (above cap)"),
                }
            }
            for (name, value) in flags {
                println!("  {name}: {value}");
            }
            match f.is_2primal {
                Some(v) => println!("  is_2primal: {v}"),
                None => println!("  is_2primal: unknown (above cap)"),
            }
        }
    }
}

fn print_set(name: &str, set: &Subset) {
    match subset_members(set) {
        Some(members) => println!("  {name}: |{}| = {:?}", set.card(), members),
        None => println!("  {name}: |{}| (elided)", set.card()),
    }
}

fn summarize_map(map: &[usize]) -> String {
    if map.len() <= PRINT_CAP {
        format!("{map:?}")
    } else {
        format!("[bijection on {} elements]", map.len())
    }
}

/// Family pairs get their explicit verified isomorphism; anything else falls
/// back to the brute-force search for tiny rings.
fn decide_iso(a: &str, b: &str, config: &Config) -> Result<Option<Vec<usize>>, String> {
    let ea = expr::parse(a).map_err(|e| format!("left: {e}"))?;
    let eb = expr::parse(b).map_err(|e| format!("right: {e}"))?;
    if let Some((kind, n, m, base)) = family_pair(&ea, &eb).or_else(|| family_pair(&eb, &ea)) {
        let base = expr::eval(&base, config).map_err(|e| e.to_string())?;
        let iso = construct::family_iso(kind, n, m, &base, config).map_err(|e| e.to_string())?;
        return Ok(Some(iso.map().to_vec()));
    }
    let ra = expr::eval(&ea, config).map_err(|e| format!("left: {e}"))?;
    let rb = expr::eval(&eb, config).map_err(|e| format!("right: {e}"))?;
    let iso = construct::brute_force_isomorphic(&ra, &rb, config).map_err(|e| e.to_string())?;
    Ok(iso.map(|i| i.map().to_vec()))
}

fn family_pair(a: &RingExpr, b: &RingExpr) -> Option<(FamilyIsoKind, usize, usize, RingExpr)> {
    match (a, b) {
        (RingExpr::APair(n1, m1, r1), RingExpr::TPair(n2, m2, r2))
            if n1 == n2 && m1 == m2 && r1 == r2 =>
        {
            Some((
                FamilyIsoKind::PolyPairToToeplitzPair,
                *n1 as usize,
                *m1 as usize,
                (**r1).clone(),
            ))
        }
        (RingExpr::BPair(n1, m1, r1), RingExpr::SGrid(n2, m2, r2))
            if n1 == n2 && m1 == m2 && r1 == r2 =>
        {
            Some((
                FamilyIsoKind::FreePairToToeplitzGrid,
                *n1 as usize,
                *m1 as usize,
                (**r1).clone(),
            ))
        }
        (RingExpr::CAlt(n1, r1), RingExpr::UAlt(n2, r2)) if n1 == n2 && r1 == r2 => Some((
            FamilyIsoKind::AlternatingToInterleaved,
            *n1 as usize,
            *n1 as usize,
            (**r1).clone(),
        )),
        _ => None,
    }
}

//! Command-line front end: braid-word parsing, floors, comparisons, normal
//! forms, fractional Dehn twist coefficients, cocycle checks, certificate
//! verification, and realisation export.
//!
//! Exit codes: 0 success, 1 usage, 2 parse, 3 resource budget exceeded,
//! 4 ambiguous rational reconstruction.

mod words;

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::json;

use ordlib::braid::{delta_squared, Braid, BraidWord};
use ordlib::fdtc::{
    self, conjugate_floor_pinpoint_budgeted, fdtc_bounds_budgeted, fdtc_exact_budgeted, FdtcResult,
    Pinpoint,
};
use ordlib::fixtures::ZMod;
use ordlib::order::certificate::{
    verify_root_certificate, CertificateOutcome, RootCertificate, RootPower,
};
use ordlib::order::cocycle::{check_cocycle, CocycleViolation};
use ordlib::order::{floor, CentralCofinal, Group};
use ordlib::rational::{to_i64_pair, Rational, RationalInterval};
use ordlib::realize::{realize_braid_ball, realize_zmod_lift, PartialAction};

const SCHEMA: &str = "ordlib/1";

#[derive(Parser)]
#[command(name = "ordlib", version, about = "Orderings, braids, and fractional Dehn twist coefficients")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fractional Dehn twist coefficient of a braid word: bounds, exact
    /// value and method when available, and the floor evidence
    Fdtc {
        #[arg(long)]
        strands: usize,
        #[arg(long)]
        word: String,
        /// Number of powers used for bounds and the root-identity search
        #[arg(long = "N", default_value_t = fdtc::DEFAULT_POWER_BOUND)]
        n: u32,
        /// Denominator cap for rational reconstruction
        #[arg(long = "max-den", default_value_t = fdtc::DEFAULT_MAX_DENOMINATOR)]
        max_den: u32,
        #[arg(long)]
        json: bool,
    },
    /// Floor of a braid word against the full twist
    Floor {
        #[arg(long)]
        strands: usize,
        #[arg(long)]
        word: String,
    },
    /// Dehornoy comparison of two braid words
    Compare {
        #[arg(long)]
        strands: usize,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Garside normal form: delta power and factor permutations
    Nf {
        #[arg(long)]
        strands: usize,
        #[arg(long)]
        word: String,
    },
    /// Exhaustive circular-ordering axiom report for a fixture group
    CocycleCheck {
        /// Fixture spec, e.g. zmod:5
        #[arg(long)]
        group: String,
    },
    /// Verify a root certificate from a JSON file
    Cert {
        /// Certificate file: {"strands": n, "z": word, "generators":
        /// [{"word": w, "n": int, "m": int}, ...]}
        #[arg(long = "spec")]
        spec: PathBuf,
    },
    /// Conjugate-floor pinpointing: compare the floor of word^power with its
    /// conjugate's floor
    Pinpoint {
        #[arg(long)]
        strands: usize,
        #[arg(long)]
        word: String,
        #[arg(long)]
        conj: String,
        #[arg(long)]
        power: u32,
    },
    /// Build a tight embedding and partial action for a fixture and export
    /// the knot data as JSON
    Realize {
        /// Fixture spec: braid:<n> or zmod-lift:<n>
        #[arg(long)]
        group: String,
        #[arg(long)]
        radius: u32,
        /// Output file; stdout when omitted
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Exponent-sum translation number next to the fdtc bounds
    Abel {
        #[arg(long)]
        strands: usize,
        #[arg(long)]
        word: String,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Parse(#[from] words::ParseError),
    #[error("{0}")]
    Lib(#[from] ordlib::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("invalid certificate file: {0}")]
    CertFormat(String),
    #[error("unknown fixture {0:?} (expected braid:<n> or zmod-lift:<n>)")]
    BadFixture(String),
    #[error("invalid ORDLIB_BUDGET value {0:?}")]
    BadBudget(String),
}

fn exit_code(err: &CliError) -> i32 {
    match err {
        CliError::Parse(_) | CliError::CertFormat(_) | CliError::BadFixture(_) => 2,
        CliError::Lib(e) if e.is_resource_limit() => 3,
        CliError::Lib(ordlib::Error::AmbiguousReconstruction(_)) => 4,
        CliError::Lib(ordlib::Error::IndexOutOfRange { .. }) => 2,
        CliError::Lib(_) | CliError::Io(_) | CliError::BadBudget(_) => 1,
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            std::process::exit(code);
        }
    };
    if let Err(err) = run(cli) {
        eprintln!("error: {err}");
        std::process::exit(exit_code(&err));
    }
}

/// Floor-search budget, overridable through ORDLIB_BUDGET.
fn floor_budget() -> Result<i64, CliError> {
    match std::env::var("ORDLIB_BUDGET") {
        Ok(text) => text
            .trim()
            .parse::<i64>()
            .ok()
            .filter(|b| *b >= 0)
            .ok_or(CliError::BadBudget(text)),
        Err(_) => Ok(ordlib::DEFAULT_FLOOR_BUDGET),
    }
}

fn parse_braid(text: &str, strands: usize) -> Result<BraidWord, CliError> {
    Ok(words::parse_word(text, strands)?.elaborate(strands))
}

fn rat_json(r: &Rational) -> serde_json::Value {
    let (num, den) = to_i64_pair(r).expect("rationals at desk scale fit machine integers");
    json!({ "num": num, "den": den })
}

fn interval_json(iv: &RationalInterval) -> serde_json::Value {
    json!({ "lo": rat_json(iv.lo()), "hi": rat_json(iv.hi()) })
}

fn evidence_json(evidence: &[(u32, i64)]) -> serde_json::Value {
    json!(evidence
        .iter()
        .map(|&(n, k)| json!({ "n": n, "floor": k }))
        .collect::<Vec<_>>())
}

fn print_fdtc_human(result: &FdtcResult) {
    println!("bounds: {}", result.bounds);
    match &result.exact {
        Some(value) => {
            println!("exact: {value}");
            println!("method: {}", result.method.name());
            println!("certified: {}", result.certified);
        }
        None => println!("exact: (none; method {})", result.method.name()),
    }
    let floors: Vec<String> = result
        .evidence
        .iter()
        .map(|(n, k)| format!("{n}:{k}"))
        .collect();
    println!("evidence: {}", floors.join(" "));
}

fn run_fdtc(strands: usize, word: &str, n: u32, max_den: u32, as_json: bool) -> Result<(), CliError> {
    let w = parse_braid(word, strands)?;
    let budget = floor_budget()?;
    match fdtc_exact_budgeted(&w, n, max_den, budget) {
        Ok(result) => {
            if as_json {
                let mut out = json!({
                    "schema": SCHEMA,
                    "strands": strands,
                    "word": word,
                    "bounds": interval_json(&result.bounds),
                    "method": result.method.name(),
                    "evidence": evidence_json(&result.evidence),
                });
                if let Some(value) = &result.exact {
                    out["exact"] = rat_json(value);
                    out["certified"] = json!(result.certified);
                }
                println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
            } else {
                print_fdtc_human(&result);
            }
            Ok(())
        }
        Err(ordlib::Error::AmbiguousReconstruction(amb)) => {
            if as_json {
                let out = json!({
                    "schema": SCHEMA,
                    "strands": strands,
                    "word": word,
                    "bounds": interval_json(&amb.bounds),
                    "method": "BoundsOnly",
                    "evidence": evidence_json(&amb.evidence),
                    "ambiguous": true,
                    "candidates": amb.candidates.iter().map(rat_json).collect::<Vec<_>>(),
                });
                println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
            } else {
                println!("bounds: {}", amb.bounds);
                let cands: Vec<String> = amb.candidates.iter().map(|c| c.to_string()).collect();
                println!(
                    "exact: ambiguous ({} candidates with denominator <= {}): {}",
                    amb.candidates.len(),
                    amb.max_denominator,
                    cands.join(", ")
                );
            }
            Err(CliError::Lib(ordlib::Error::AmbiguousReconstruction(amb)))
        }
        Err(other) => Err(other.into()),
    }
}

fn parse_fixture(spec: &str) -> Result<(&str, u64), CliError> {
    let (kind, size) = spec
        .split_once(':')
        .ok_or_else(|| CliError::BadFixture(spec.to_string()))?;
    let size: u64 = size
        .parse()
        .map_err(|_| CliError::BadFixture(spec.to_string()))?;
    Ok((kind, size))
}

fn action_json<G: Group>(
    action: &PartialAction<G>,
    group_name: &str,
    radius: u32,
    display: impl Fn(&G::Elem) -> String,
) -> serde_json::Value {
    json!({
        "schema": SCHEMA,
        "group": group_name,
        "radius": radius,
        "knots": action
            .table()
            .entries()
            .iter()
            .map(|(e, c)| json!({ "element": display(e), "coord": rat_json(c) }))
            .collect::<Vec<_>>(),
        "maps": action
            .maps()
            .iter()
            .map(|m| {
                json!({
                    "actor": display(m.actor()),
                    "knots": m
                        .knots()
                        .iter()
                        .map(|(x, y)| json!([rat_json(x), rat_json(y)]))
                        .collect::<Vec<_>>(),
                })
            })
            .collect::<Vec<_>>(),
    })
}

fn run_realize(spec: &str, radius: u32, export: Option<&PathBuf>) -> Result<(), CliError> {
    let budget = floor_budget()?;
    let (kind, size) = parse_fixture(spec)?;
    let payload = match kind {
        "braid" => {
            if size < 2 {
                return Err(CliError::BadFixture(spec.to_string()));
            }
            let action = realize_braid_ball(size as usize, radius, budget)?;
            action_json(&action, spec, radius, |e| e.to_string())
        }
        "zmod-lift" => {
            if size < 1 || radius < 1 {
                return Err(CliError::BadFixture(spec.to_string()));
            }
            let zmod = ZMod::new(size);
            let action = realize_zmod_lift(&zmod, i64::from(radius))?;
            action_json(&action, spec, radius, |e| e.to_string())
        }
        _ => return Err(CliError::BadFixture(spec.to_string())),
    };
    let text = serde_json::to_string_pretty(&payload).expect("serializable");
    match export {
        Some(path) => {
            std::fs::write(path, text)?;
            println!("wrote {}", path.display());
        }
        None => println!("{text}"),
    }
    Ok(())
}

#[derive(serde::Deserialize)]
struct CertFile {
    strands: usize,
    z: String,
    generators: Vec<CertEntry>,
}

#[derive(serde::Deserialize)]
struct CertEntry {
    word: String,
    n: i64,
    m: i64,
}

fn run_cert(path: &PathBuf) -> Result<(), CliError> {
    let text = std::fs::read_to_string(path)?;
    let file: CertFile =
        serde_json::from_str(&text).map_err(|e| CliError::CertFormat(e.to_string()))?;
    if file.strands < 2 {
        return Err(CliError::CertFormat("strands must be at least 2".into()));
    }
    let group = Braid::new(file.strands);
    let mut roots = Vec::new();
    for entry in &file.generators {
        roots.push(RootPower {
            base: parse_braid(&entry.word, file.strands)?,
            base_exponent: entry.n,
            z_exponent: entry.m,
        });
    }
    let cert = RootCertificate {
        z: parse_braid(&file.z, file.strands)?,
        roots,
    };
    match verify_root_certificate(&group, &cert) {
        Ok(CertificateOutcome::Verified) => {
            println!("verified: {} root identities hold", cert.roots.len());
            Ok(())
        }
        Ok(CertificateOutcome::Refuted { index }) => {
            let entry = &file.generators[index];
            println!(
                "refuted: generators[{index}] fails: ({})^{} != z^{}",
                entry.word, entry.n, entry.m
            );
            Ok(())
        }
        Err(ordlib::Error::ZeroExponent { index }) => Err(CliError::CertFormat(format!(
            "zero exponent in generators[{index}]"
        ))),
        Err(other) => Err(other.into()),
    }
}

fn run_cocycle_check(spec: &str) -> Result<(), CliError> {
    let (kind, size) = parse_fixture(spec)?;
    if kind != "zmod" || size < 1 {
        return Err(CliError::BadFixture(spec.to_string()));
    }
    let zmod = ZMod::new(size);
    let elems = zmod.elements();
    use ordlib::order::cocycle::CircularOrder;
    let report = check_cocycle(&zmod, |a, b| Ok(zmod.cocycle(a, b)), &elems)?;
    println!("group: {spec} (carry cocycle, exhaustive over {size} elements)");
    println!("violations: {}", report.len());
    for v in &report {
        match v {
            CocycleViolation::Inverse { g } => println!("  axiom (i) fails at g={g}"),
            CocycleViolation::Identity { g } => println!("  axiom (ii) fails at g={g}"),
            CocycleViolation::Cocycle { g1, g2, g3 } => {
                println!("  axiom (iii) fails at ({g1}, {g2}, {g3})")
            }
            CocycleViolation::Range { g, h, value } => {
                println!("  value {value} outside {{0,1}} at ({g}, {h})")
            }
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Fdtc {
            strands,
            word,
            n,
            max_den,
            json,
        } => run_fdtc(strands, &word, n, max_den, json),
        Command::Floor { strands, word } => {
            let w = parse_braid(&word, strands)?;
            let group = Braid::new(strands);
            let z = CentralCofinal::assume(delta_squared(strands));
            let k = floor(&group, &z, &w, floor_budget()?)?;
            println!("{k}");
            Ok(())
        }
        Command::Compare {
            strands,
            left,
            right,
        } => {
            let u = parse_braid(&left, strands)?;
            let v = parse_braid(&right, strands)?;
            let group = Braid::new(strands);
            use ordlib::OrderedGroup;
            let verdict = match group.compare(&u, &v)? {
                ordlib::OrderSign::Positive => "left < right",
                ordlib::OrderSign::Identity => "left = right",
                ordlib::OrderSign::Negative => "left > right",
            };
            println!("{verdict}");
            Ok(())
        }
        Command::Nf { strands, word } => {
            let w = parse_braid(&word, strands)?;
            let nf = w.normal_form();
            println!("delta_power: {}", nf.delta_power());
            if nf.factors().is_empty() {
                println!("factors: (none)");
            } else {
                let parts: Vec<String> = nf.factors().iter().map(|p| p.to_string()).collect();
                println!("factors: {}", parts.join(" "));
            }
            Ok(())
        }
        Command::CocycleCheck { group } => run_cocycle_check(&group),
        Command::Cert { spec } => run_cert(&spec),
        Command::Pinpoint {
            strands,
            word,
            conj,
            power,
        } => {
            let w = parse_braid(&word, strands)?;
            let f = parse_braid(&conj, strands)?;
            match conjugate_floor_pinpoint_budgeted(&w, &f, power, floor_budget()?)? {
                Pinpoint::Exact(value) => println!("c = {value}"),
                Pinpoint::Unknown => println!("unknown (conjugation does not move the floor)"),
            }
            Ok(())
        }
        Command::Realize {
            group,
            radius,
            export,
        } => run_realize(&group, radius, export.as_ref()),
        Command::Abel { strands, word } => {
            let w = parse_braid(&word, strands)?;
            let e = fdtc::abelianization_translation(&w);
            let bounds = fdtc_bounds_budgeted(&w, fdtc::DEFAULT_POWER_BOUND, floor_budget()?)?;
            println!("abelianization translation: {e}");
            println!("fdtc bounds: {}", bounds.bounds);
            Ok(())
        }
    }
}

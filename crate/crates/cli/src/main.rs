//! `revsym`: analyse planar polynomial maps `x' = x + p1(y), y' = y + p2(x')`.
//!
//! Exit status is 0 on success (and on `verify` PASS), 1 when `verify`
//! reports FAIL, 2 on any error, scope errors included.

mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use revsym_core::classifier::{analyze, ConditionId, OrderInfo, WitnessKind};
use revsym_core::corpus;
use revsym_core::dynamics::{find_symmetric_orbits, fix_curve, NumericMap, SearchOptions};
use revsym_core::map_algebra::GeneralisedStandardMap;
use revsym_core::par::Execution;
use revsym_core::parse::{parse_map, parse_pair};
use revsym_core::poly::{int, rational_string, PolyPair};
use revsym_core::verifier::{check_reversing_standard, check_symmetry_standard};
use serde_json::Value;

#[derive(Parser)]
#[command(name = "revsym", version, about = "Symmetries and reversing symmetries of planar polynomial maps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Detect conditions, build witnesses, report group structure.
    Analyze(AnalyzeArgs),
    /// Print the normal form and the affine change reaching it.
    Normalize(MapArgs),
    /// Check a candidate map against the symmetry or reversing relation.
    Verify(VerifyArgs),
    /// Print the factorisation into affine and elementary letters.
    Word(MapArgs),
    /// Symmetric periodic orbits on the fixed curve of a reversor, as CSV.
    Orbits(OrbitArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct MapArgs {
    /// Map file with `p1 = ...; p2 = ...`.
    #[arg(long)]
    map: PathBuf,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Map file; repeat to analyse several at once.
    #[arg(long, required_unless_present = "random", conflicts_with = "random")]
    map: Vec<PathBuf>,
    /// Analyse a seeded random map instead of a file.
    #[arg(long)]
    random: bool,
    #[arg(long, default_value_t = 0, requires = "random")]
    seed: u64,
    /// Largest shear degree for `--random`.
    #[arg(long, default_value_t = 4, requires = "random")]
    max_degree: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Relation {
    Symmetry,
    Reversing,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    map: PathBuf,
    /// Candidate as `x -> <expr>, y -> <expr>`.
    #[arg(long, allow_hyphen_values = true)]
    candidate: String,
    #[arg(long, value_enum)]
    relation: Relation,
}

#[derive(Args)]
struct OrbitArgs {
    #[arg(long)]
    map: PathBuf,
    /// Period k of the orbits sought.
    #[arg(long)]
    period: usize,
    /// Parameter range `A:B` along the fixed curve.
    #[arg(long, default_value = "-2:2", allow_hyphen_values = true)]
    interval: String,
    /// Acceptance threshold on the closing residual.
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    /// Scan resolution along the curve.
    #[arg(long, default_value_t = 2000)]
    samples: usize,
    /// Row of the reversor to use, e.g. `T2_R2`; default is the first
    /// involutory witness with a closed-form fixed curve.
    #[arg(long, conflicts_with = "candidate")]
    reversor: Option<String>,
    /// Explicit involutory reversor `x -> <expr>, y -> <expr>`.
    #[arg(long, allow_hyphen_values = true)]
    candidate: Option<String>,
}

fn read_map(path: &Path) -> Result<GeneralisedStandardMap> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_map(&text).map_err(|e| anyhow!("{}:{e}", path.display()))
}

fn read_pair(text: &str) -> Result<PolyPair> {
    parse_pair(text).map_err(|e| anyhow!("candidate:{e}"))
}

fn emit(format: Format, value: Value, text: String) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&value).expect("plain JSON values")),
        Format::Text => print!("{text}"),
    }
}

fn run_analyze(args: &AnalyzeArgs) -> Result<ExitCode> {
    if args.random {
        let l = corpus::random_map(&mut corpus::rng(args.seed), args.max_degree);
        let r = analyze(&l)?;
        emit(args.format, report::report_json(&r), report::report_text(&r));
        return Ok(ExitCode::SUCCESS);
    }
    if let [path] = args.map.as_slice() {
        let r = analyze(&read_map(path)?)?;
        emit(args.format, report::report_json(&r), report::report_text(&r));
        return Ok(ExitCode::SUCCESS);
    }

    // Each worker reads and analyses its own file; failures are reported
    // in place and turn the exit status nonzero.
    let results = Execution::default().map(&args.map, |path| {
        read_map(path).and_then(|l| analyze(&l).map_err(Into::into))
    });
    let mut failed = false;
    let mut docs = Vec::new();
    let mut text = String::new();
    for (path, res) in args.map.iter().zip(results) {
        let name = path.display().to_string();
        match res {
            Ok(r) => {
                let mut doc = report::report_json(&r);
                doc["file"] = Value::String(name.clone());
                docs.push(doc);
                text.push_str(&format!("== {name}\n{}\n", report::report_text(&r)));
            }
            Err(e) => {
                failed = true;
                docs.push(serde_json::json!({ "file": name, "error": e.to_string() }));
                text.push_str(&format!("== {name}\nerror: {e}\n\n"));
                eprintln!("error: {name}: {e}");
            }
        }
    }
    emit(args.format, Value::Array(docs), text);
    Ok(if failed { ExitCode::from(2) } else { ExitCode::SUCCESS })
}

fn run_normalize(args: &MapArgs) -> Result<ExitCode> {
    let r = analyze(&read_map(&args.map)?)?;
    let nf = r.normal_form.ok_or(revsym_core::Error::NoNormalForm)?;
    let text = format!(
        "{}\nrow: {}\nchange: {}\n",
        nf.map.to_source(),
        nf.row,
        report::change_pair(&nf.change)
    );
    let mut doc = report::normal_form_json(&nf);
    doc["schema_version"] = report::SCHEMA_VERSION.into();
    doc["input"] = r.map.to_source().into();
    emit(args.format, doc, text);
    Ok(ExitCode::SUCCESS)
}

fn run_verify(args: &VerifyArgs) -> Result<ExitCode> {
    let l = read_map(&args.map)?;
    let f = read_pair(&args.candidate)?;
    let (holds, relation) = match args.relation {
        Relation::Symmetry => (check_symmetry_standard(&f, &l), "S∘L = L∘S"),
        Relation::Reversing => (check_reversing_standard(&f, &l), "R∘L = L⁻¹∘R"),
    };
    // A polynomial automorphism has constant nonzero Jacobian.
    let jac = f.jacobian_determinant().as_constant().filter(|c| *c != int(0));
    let Some(jac) = jac else {
        println!("FAIL: candidate is not an automorphism (Jacobian {})", f.jacobian_determinant());
        return Ok(ExitCode::from(1));
    };
    if holds {
        println!("PASS: {relation} (Jacobian {})", rational_string(&jac));
        Ok(ExitCode::SUCCESS)
    } else {
        println!("FAIL: {relation} does not hold");
        Ok(ExitCode::from(1))
    }
}

fn run_word(args: &MapArgs) -> Result<ExitCode> {
    let w = read_map(&args.map)?.word_of_standard_form()?;
    emit(args.format, report::word_json(&w), report::word_text(&w));
    Ok(ExitCode::SUCCESS)
}

fn parse_interval(s: &str) -> Result<(f64, f64)> {
    let (a, b) = s.split_once(':').ok_or_else(|| anyhow!("interval must read A:B, got '{s}'"))?;
    let a: f64 = a.trim().parse().with_context(|| format!("bad interval start '{a}'"))?;
    let b: f64 = b.trim().parse().with_context(|| format!("bad interval end '{b}'"))?;
    if a.partial_cmp(&b) != Some(std::cmp::Ordering::Less) {
        bail!("interval start must be below its end");
    }
    Ok((a, b))
}

/// The reversor for the orbit search: explicit, by row, or the first
/// involution (witness or companion) whose fixed set has a closed form.
fn pick_reversor(args: &OrbitArgs, l: &GeneralisedStandardMap) -> Result<PolyPair> {
    if let Some(c) = &args.candidate {
        let r = read_pair(c)?;
        if !check_reversing_standard(&r, l) {
            bail!("candidate does not reverse the map");
        }
        return Ok(r);
    }
    let report = analyze(l)?;
    let involutions = report
        .witnesses
        .iter()
        .filter(|w| w.kind == WitnessKind::ReversingSymmetry && w.order == OrderInfo::Involution);
    if let Some(row) = &args.reversor {
        let id = ConditionId::parse(row).ok_or_else(|| anyhow!("unknown row '{row}'"))?;
        let w = report
            .witness(id)
            .ok_or_else(|| anyhow!("{id} does not hold for this map"))?;
        if w.order != OrderInfo::Involution {
            bail!("{id} witness is not an involution ({})", w.order);
        }
        return Ok(w.map.forward().clone());
    }
    let candidates = involutions.flat_map(|w| {
        std::iter::once(w.map.forward().clone()).chain(w.companion.iter().map(|c| c.forward().clone()))
    });
    for r in candidates {
        if fix_curve(&r).is_ok() {
            return Ok(r);
        }
    }
    bail!("no involutory reversor with a closed-form fixed curve; pass --candidate")
}

fn run_orbits(args: &OrbitArgs) -> Result<ExitCode> {
    if args.period == 0 {
        bail!("period must be at least 1");
    }
    let l = read_map(&args.map)?;
    let r = pick_reversor(args, &l)?;
    let opts = SearchOptions {
        interval: parse_interval(&args.interval)?,
        samples: args.samples,
        accept_tol: args.tol,
        ..SearchOptions::default()
    };
    let search = find_symmetric_orbits(&NumericMap::new(&l), &r, args.period, &opts)?;
    eprintln!("reversor {r}; fixed curve {}", search.curve);
    for d in &search.diagnostics {
        eprintln!("note: {d}");
    }
    println!("k,x,y");
    for orbit in &search.orbits {
        for (k, (x, y)) in orbit.points.iter().enumerate() {
            println!("{k},{x},{y}");
        }
    }
    eprintln!("{} orbit(s) of period {}", search.orbits.len(), args.period);
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Analyze(a) => run_analyze(a),
        Command::Normalize(a) => run_normalize(a),
        Command::Verify(a) => run_verify(a),
        Command::Word(a) => run_word(a),
        Command::Orbits(a) => run_orbits(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

//! Command-line front end.
//!
//! Exit codes: 0 for any computed verdict (unknown included), 1 when a
//! theorem verdict contradicts the search, 2 for unreadable or invalid
//! input, 3 when the search hit its state limit and no rule decided.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cubefold_core::crease::pattern_of;
use cubefold_core::rules::corroborate;
use cubefold_core::{classify, Decision, FaceId, GridPoint, Limits, Mapping, Polyomino, Rule};
use serde::Serialize;

use crate::format::{self, Format, ParseError};
use crate::report::{self, Report};
use crate::svg::render_svg;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONTRADICTION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

/// Set to a non-empty value to report `timing_ms` as null, making reports
/// byte-identical across runs.
pub const NO_TIMING_ENV: &str = "CUBEFOLD_NO_TIMING";

#[derive(Parser, Debug)]
#[command(name = "cubefold", version, about = "Decide whether a polyomino with holes and slits folds into a unit cube")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify one shape.
    Check(CheckArgs),
    /// List holes, their classes and pairwise gaps.
    Holes(HolesArgs),
    /// Classify and corroborate every shape file in a directory.
    Corpus(CorpusArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum FormatArg {
    #[default]
    Auto,
    Json,
    Ascii,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    pub path: PathBuf,
    #[arg(long, value_enum, default_value_t)]
    pub format: FormatArg,
    /// Cross-check the verdict with the search and attach a witness.
    #[arg(long)]
    pub witness: bool,
    /// Compare the search with brute-force enumeration (small shapes only).
    #[arg(long)]
    pub oracle: bool,
    #[arg(long, value_name = "N", default_value_t = Limits::default().max_states)]
    pub max_states: u64,
    #[arg(long)]
    pub json: bool,
    /// Write an SVG of the witness, or of the bare shape without one.
    #[arg(long, value_name = "OUT")]
    pub svg: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct HolesArgs {
    pub path: PathBuf,
    #[arg(long, value_enum, default_value_t)]
    pub format: FormatArg,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct CorpusArgs {
    pub dir: PathBuf,
    #[arg(long, value_enum, default_value_t)]
    pub format: FormatArg,
    #[arg(long, value_name = "N", default_value_t = Limits::default().max_states)]
    pub max_states: u64,
    #[arg(long)]
    pub json: bool,
}

pub fn load(path: &Path, format: FormatArg) -> Result<Polyomino, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let fmt = match format {
        FormatArg::Auto => format::detect(Some(path), &text),
        FormatArg::Json => Format::Json,
        FormatArg::Ascii => Format::Ascii,
    };
    format::parse(&text, fmt).map_err(|e: ParseError| format!("{}: {e}", path.display()))
}

fn limits(max_states: u64) -> Limits {
    Limits { max_states, ..Limits::default() }
}

fn timing_enabled() -> bool {
    std::env::var_os(NO_TIMING_ENV).is_none_or(|v| v.is_empty())
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Check(a) => check(&a, out, err),
        Command::Holes(a) => holes(&a, out, err),
        Command::Corpus(a) => corpus(&a, out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

/// Runs classification (and the optional extras) on one shape.
pub fn check_report(input: &str, p: &Polyomino, a: &CheckArgs) -> Report {
    analyze(input, p, a).0
}

fn analyze(input: &str, p: &Polyomino, a: &CheckArgs) -> (Report, Option<Mapping>) {
    let start = Instant::now();
    let lim = limits(a.max_states);
    let verdict = classify(p, &lim);
    let corroboration = a.witness.then(|| corroborate(p, &verdict, &lim));
    let oracle = a.oracle.then(|| report::oracle_report(p, &lim));
    let ms = timing_enabled().then(|| start.elapsed().as_millis() as u64);
    let r = report::build(input, p, &verdict, corroboration.as_ref(), oracle, ms);
    let witness = verdict.witness.or(corroboration.and_then(|c| c.witness));
    (r, witness)
}

fn check(a: &CheckArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, String> {
    let p = load(&a.path, a.format)?;
    let input = a.path.display().to_string();
    let (r, witness) = analyze(&input, &p, a);
    let io = |e: std::io::Error| e.to_string();
    if a.json {
        writeln!(out, "{}", r.to_json()).map_err(io)?;
    } else {
        write!(out, "{}", r.to_text()).map_err(io)?;
    }
    if let Some(path) = &a.svg {
        let svg = match &witness {
            Some(m) => {
                let labels: BTreeMap<GridPoint, FaceId> = m.entries().iter().map(|(s, pl)| (*s, pl.face())).collect();
                render_svg(&p, Some(&pattern_of(&p, m)), Some(&labels))
            }
            None => render_svg(&p, None, None),
        };
        fs::write(path, svg).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    if r.is_contradiction() {
        let detail = r.corroboration.as_ref().and_then(|c| c.detail.clone()).unwrap_or_default();
        let _ = writeln!(err, "CONTRADICTION: {detail}");
        return Ok(EXIT_CONTRADICTION);
    }
    if r.provenance == Rule::SearchInconclusive.id() {
        return Ok(EXIT_LIMIT);
    }
    Ok(EXIT_OK)
}

fn holes(a: &HolesArgs, out: &mut dyn Write, _err: &mut dyn Write) -> Result<i32, String> {
    let p = load(&a.path, a.format)?;
    let r = report::holes_report(&a.path.display().to_string(), &p);
    if a.json {
        writeln!(out, "{}", r.to_json()).map_err(|e| e.to_string())?;
    } else {
        write!(out, "{}", r.to_text()).map_err(|e| e.to_string())?;
    }
    Ok(EXIT_OK)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusRow {
    pub file: String,
    /// A decision, or `input_error`.
    pub decision: &'static str,
    pub provenance: Option<&'static str>,
    pub corroboration: Option<&'static str>,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CorpusSummary {
    pub folds: usize,
    pub does_not_fold: usize,
    pub unknown: usize,
    pub input_error: usize,
    pub contradictions: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusReport {
    pub rows: Vec<CorpusRow>,
    pub summary: CorpusSummary,
}

fn corpus_row(path: &Path, format: FormatArg, lim: &Limits) -> CorpusRow {
    let file = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
    let p = match load(path, format) {
        Ok(p) => p,
        Err(e) => {
            return CorpusRow { file, decision: "input_error", provenance: None, corroboration: None, detail: Some(e) }
        }
    };
    let v = classify(&p, lim);
    let c = corroborate(&p, &v, lim);
    let cr = report::corroboration_report(&c);
    CorpusRow {
        file,
        decision: v.decision.as_str(),
        provenance: Some(v.provenance.id()),
        corroboration: Some(cr.status),
        detail: cr.detail,
    }
}

/// Classifies every regular file in `dir`, in filename order. Files are
/// processed on several threads; the row order does not depend on it.
pub fn corpus_report(dir: &Path, format: FormatArg, max_states: u64) -> Result<CorpusReport, String> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| format!("{}: {e}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    files.sort_by(|a, b| a.file_name().cmp(&b.file_name()));
    let lim = limits(max_states);
    let next = AtomicUsize::new(0);
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(files.len().max(1));
    let mut rows: Vec<Option<CorpusRow>> = vec![None; files.len()];
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|_| {
                scope.spawn(|| {
                    let mut done = Vec::new();
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        let Some(path) = files.get(i) else { break };
                        done.push((i, corpus_row(path, format, &lim)));
                    }
                    done
                })
            })
            .collect();
        for h in handles {
            for (i, row) in h.join().expect("worker panicked") {
                rows[i] = Some(row);
            }
        }
    });
    let rows: Vec<CorpusRow> = rows.into_iter().map(|r| r.expect("every file processed")).collect();
    let mut summary = CorpusSummary::default();
    for r in &rows {
        match r.decision {
            "input_error" => summary.input_error += 1,
            d if d == Decision::Folds.as_str() => summary.folds += 1,
            d if d == Decision::DoesNotFold.as_str() => summary.does_not_fold += 1,
            _ => summary.unknown += 1,
        }
        if r.corroboration == Some("contradiction") {
            summary.contradictions += 1;
        }
    }
    Ok(CorpusReport { rows, summary })
}

fn corpus(a: &CorpusArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, String> {
    let r = corpus_report(&a.dir, a.format, a.max_states)?;
    let io = |e: std::io::Error| e.to_string();
    if a.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&r).expect("plain data serializes")).map_err(io)?;
    } else {
        let width = r.rows.iter().map(|row| row.file.len()).max().unwrap_or(4).max(4);
        for row in &r.rows {
            writeln!(
                out,
                "{:width$}  {:13}  {:22}  {}",
                row.file,
                row.decision,
                row.provenance.unwrap_or("-"),
                row.corroboration.unwrap_or("-"),
            )
            .map_err(io)?;
        }
        let s = &r.summary;
        writeln!(
            out,
            "folds {}, does_not_fold {}, unknown {}, input_error {}, contradictions {}",
            s.folds, s.does_not_fold, s.unknown, s.input_error, s.contradictions
        )
        .map_err(io)?;
    }
    for row in r.rows.iter().filter(|row| row.corroboration == Some("contradiction")) {
        let _ = writeln!(err, "CONTRADICTION in {}: {}", row.file, row.detail.as_deref().unwrap_or(""));
    }
    Ok(if r.summary.contradictions > 0 {
        EXIT_CONTRADICTION
    } else if r.summary.input_error > 0 {
        EXIT_INPUT
    } else {
        EXIT_OK
    })
}

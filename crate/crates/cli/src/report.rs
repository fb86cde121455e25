//! Report serialization. Bodies are byte-stable: timings only go to the sidecar.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::Serialize;

use crate::run::{ReportBundle, Summary};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Md,
    Json,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Md => "md",
            Format::Json => "json",
        }
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Format::Csv),
            "md" => Ok(Format::Md),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format `{other}` (expected csv, md or json)")),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum EmitError {
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

pub const CSV_HEADER: [&str; 8] = ["experiment", "kind", "target", "a", "r", "d", "status", "witness"];

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(ToString::to_string).unwrap_or_default()
}

pub fn to_csv(bundle: &ReportBundle) -> Result<String, EmitError> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(CSV_HEADER)?;
    for res in &bundle.results {
        for row in &res.rows {
            w.write_record([
                res.experiment.as_str(),
                res.kind.as_str(),
                row.target.as_str(),
                &opt(&row.a),
                &opt(&row.r),
                &opt(&row.d),
                row.status.as_str(),
                &opt(&row.witness),
            ])?;
        }
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv of utf-8 fields"))
}

fn cell(s: &str) -> String {
    s.replace('|', "\\|")
}

pub fn to_markdown(bundle: &ReportBundle) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# Report\n\nconfig hash: `{}`", bundle.config_hash);
    for res in &bundle.results {
        let _ = writeln!(out, "\n## {} ({}, target `{}`)\n", res.experiment, res.kind, cell(&res.target));
        let _ = writeln!(out, "outcome: {}", serde_json::to_value(res.outcome).expect("enum").as_str().unwrap_or(""));
        if let Some(err) = &res.error {
            let _ = writeln!(out, "\nerror: {}", cell(err));
        }
        match &res.summary {
            Some(Summary::Slope { max_ratio, uniform_slope, hh_slope }) => {
                let _ = writeln!(
                    out,
                    "\nmax a/r: {}, uniform slope: {}, HH slope: {}",
                    max_ratio.as_deref().unwrap_or("unresolved"),
                    uniform_slope.map_or("unresolved".to_string(), |v| v.to_string()),
                    hh_slope.map_or("unresolved".to_string(), |v| v.to_string()),
                );
            }
            Some(Summary::Lemma { e, a_holds, b_holds, window_artifact }) => {
                let show = |v: &Option<bool>| v.map_or("inconclusive".to_string(), |b| b.to_string());
                let _ = writeln!(
                    out,
                    "\nE = {e}: predicate A {}, predicate B {}, window artifact: {window_artifact}",
                    show(a_holds),
                    show(b_holds)
                );
            }
            None => {}
        }
        if res.rows.is_empty() {
            continue;
        }
        out.push_str("\n| target | a | r | d | status | witness |\n|---|---|---|---|---|---|\n");
        for row in &res.rows {
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} | {} |",
                cell(&row.target),
                opt(&row.a),
                opt(&row.r),
                opt(&row.d),
                row.status,
                cell(&opt(&row.witness)),
            );
        }
    }
    out
}

pub fn to_json(bundle: &ReportBundle) -> String {
    let mut s = serde_json::to_string_pretty(bundle).expect("bundle serializes");
    s.push('\n');
    s
}

pub fn render(bundle: &ReportBundle, format: Format) -> Result<String, EmitError> {
    Ok(match format {
        Format::Csv => to_csv(bundle)?,
        Format::Md => to_markdown(bundle),
        Format::Json => to_json(bundle),
    })
}

#[derive(Serialize)]
struct Timing<'a> {
    config_hash: &'a str,
    elapsed_ms: BTreeMap<&'a str, f64>,
}

pub fn timing_json(bundle: &ReportBundle) -> String {
    let t = Timing {
        config_hash: &bundle.config_hash,
        elapsed_ms: bundle
            .results
            .iter()
            .map(|r| (r.experiment.as_str(), r.elapsed.as_secs_f64() * 1e3))
            .collect(),
    };
    serde_json::to_string_pretty(&t).expect("timing serializes")
}

/// Writes `report.<ext>` and `timing.json` into `dir`, returning the report path.
pub fn write_dir(bundle: &ReportBundle, format: Format, dir: &Path) -> Result<PathBuf, EmitError> {
    fs::create_dir_all(dir)?;
    let path = dir.join(format!("report.{}", format.extension()));
    fs::write(&path, render(bundle, format)?)?;
    fs::write(dir.join("timing.json"), timing_json(bundle))?;
    Ok(path)
}

//! Seeded property checks and their reports.

pub mod checks;
pub mod config;
pub mod random;
pub mod report;

use std::path::{Path, PathBuf};
use std::time::Instant;

use crate::error::{Error, Result};

pub use checks::CHECK_IDS;
pub use config::{Format, RunConfig};
pub use report::{to_csv, to_json, CheckKind, CheckResult};

/// Runs the requested checks and returns their records sorted by id.
pub fn run_suite(config: &RunConfig) -> Result<Vec<CheckResult>> {
    config.validate()?;
    let mut ids: Vec<&str> = config.checks.iter().map(String::as_str).collect();
    ids.sort_unstable();
    ids.dedup();
    let mut records = Vec::new();
    for id in ids {
        let start = Instant::now();
        let mut batch = checks::run_check(id, config)?;
        let elapsed = start.elapsed();
        for r in &mut batch {
            r.wall_time = elapsed;
        }
        records.extend(batch);
    }
    records.sort_by(|a, b| a.check_id.cmp(&b.check_id));
    Ok(records)
}

pub fn all_pass(records: &[CheckResult]) -> bool {
    records.iter().all(|r| r.pass)
}

/// `<stem>.json` and `<stem>.csv`; a trailing `.json`/`.csv` on `out` is dropped.
pub fn report_paths(out: &Path) -> (PathBuf, PathBuf) {
    let stem = match out.extension().and_then(|e| e.to_str()) {
        Some("json" | "csv") => out.with_extension(""),
        _ => out.to_path_buf(),
    };
    let with = |ext: &str| {
        let mut s = stem.clone().into_os_string();
        s.push(ext);
        PathBuf::from(s)
    };
    (with(".json"), with(".csv"))
}

pub fn write_reports(records: &[CheckResult], out: &Path) -> Result<(PathBuf, PathBuf)> {
    let (json, csv) = report_paths(out);
    let io = |p: &Path, e: std::io::Error| Error::Io(format!("{}: {e}", p.display()));
    std::fs::write(&json, to_json(records)).map_err(|e| io(&json, e))?;
    std::fs::write(&csv, to_csv(records)).map_err(|e| io(&csv, e))?;
    Ok((json, csv))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick(checks: &[&str]) -> RunConfig {
        RunConfig {
            checks: checks.iter().map(|s| s.to_string()).collect(),
            n_random_series: Some(4),
            ..RunConfig::default()
        }
    }

    #[test]
    fn empty_suite() {
        let recs = run_suite(&quick(&[])).unwrap();
        assert!(recs.is_empty());
        assert!(all_pass(&recs));
    }

    #[test]
    fn unknown_id_is_an_error() {
        assert_eq!(
            run_suite(&quick(&["nope"])),
            Err(Error::UnknownCheck("nope".into()))
        );
    }

    #[test]
    fn records_are_sorted_and_referenced() {
        let recs = run_suite(&quick(&[
            "star-unit",
            "rep-formula",
            "star-assoc",
            "split-roundtrip",
        ]))
        .unwrap();
        let ids: Vec<_> = recs.iter().map(|r| r.check_id.as_str()).collect();
        assert_eq!(
            ids,
            ["rep-formula", "split-roundtrip", "star-assoc", "star-unit"]
        );
        assert!(recs.iter().all(|r| !r.paper_ref.is_empty()));
        assert!(all_pass(&recs));
    }

    #[test]
    fn report_path_stems() {
        let (j, c) = report_paths(Path::new("out/run.json"));
        assert_eq!(j, Path::new("out/run.json"));
        assert_eq!(c, Path::new("out/run.csv"));
        let (j, _) = report_paths(Path::new("out/run.v2"));
        assert_eq!(j, Path::new("out/run.v2.json"));
    }

    #[test]
    fn unwritable_output() {
        let err = write_reports(&[], Path::new("/nonexistent-dir/x/report")).unwrap_err();
        assert!(matches!(err, Error::Io(_)));
    }
}

//! Check records and their JSON/CSV renderings.

use std::time::Duration;

use serde::Serialize;

/// Default absolute tolerance of identity checks.
pub const IDENTITY_TOL: f64 = 1e-10;
/// Default relative slack on the right side of inequality checks.
pub const INEQUALITY_SLACK: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CheckKind {
    /// `lhs` is a residual, `rhs` its tolerance.
    Identity,
    /// `lhs ≤ rhs` up to the relative slack.
    Inequality { slack: f64 },
}

/// One report record.
///
/// For identities `lhs` is the worst residual, `rhs` and `constant` the
/// tolerance, and `margin = tol − lhs`. For inequalities `lhs`, `rhs` come
/// from the instance closest to saturation, `constant` is the displayed
/// constant, and `margin = 1 − lhs/rhs`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub check_id: String,
    pub paper_ref: String,
    pub lhs: f64,
    pub rhs: f64,
    pub constant: f64,
    pub margin: f64,
    pub pass: bool,
    #[serde(skip)]
    pub kind: CheckKind,
    #[serde(skip)]
    pub instances: usize,
    /// Instances within 1% of saturation (reported, never failing). Only
    /// counted where a check asks for it.
    #[serde(skip)]
    pub near_saturation: usize,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl CheckResult {
    pub fn identity(
        id: impl Into<String>,
        reference: &str,
        residual: f64,
        tol: f64,
        instances: usize,
    ) -> Self {
        Self {
            check_id: id.into(),
            paper_ref: reference.into(),
            lhs: residual,
            rhs: tol,
            constant: tol,
            margin: tol - residual,
            pass: residual.is_finite() && residual.abs() <= tol,
            kind: CheckKind::Identity,
            instances,
            near_saturation: 0,
            wall_time: Duration::ZERO,
        }
    }

    /// Builds an inequality record from per-instance `(lhs, rhs)` pairs,
    /// keeping the one with the largest ratio.
    pub fn inequality<I>(
        id: impl Into<String>,
        reference: &str,
        constant: f64,
        slack: f64,
        pairs: I,
    ) -> Self
    where
        I: IntoIterator<Item = (f64, f64)>,
    {
        let mut worst: Option<(f64, f64, f64)> = None;
        let mut instances = 0;
        let mut all_pass = true;
        for (l, r) in pairs {
            instances += 1;
            let ratio = if r > 0.0 {
                l / r
            } else if l <= 0.0 {
                0.0
            } else {
                f64::INFINITY
            };
            let ok = l <= r * (1.0 + slack);
            all_pass &= ok;
            if worst.is_none_or(|(_, _, w)| ratio > w || ratio.is_nan()) {
                worst = Some((l, r, ratio));
            }
        }
        let (lhs, rhs, ratio) = worst.unwrap_or((0.0, 0.0, 0.0));
        let margin = 1.0 - ratio;
        Self {
            check_id: id.into(),
            paper_ref: reference.into(),
            lhs: finite(lhs),
            rhs: finite(rhs),
            constant,
            margin: finite(margin),
            pass: all_pass,
            kind: CheckKind::Inequality { slack },
            instances,
            near_saturation: 0,
            wall_time: Duration::ZERO,
        }
    }
}

/// Keeps the JSON numeric (`serde_json` writes non-finite values as `null`).
/// Number of `(lhs, rhs)` pairs with `lhs ≥ 0.99 rhs`.
pub fn near_saturation(pairs: &[(f64, f64)]) -> usize {
    pairs.iter().filter(|&&(l, r)| l >= 0.99 * r).count()
}

fn finite(x: f64) -> f64 {
    if x.is_nan() {
        f64::MAX
    } else {
        x.clamp(-f64::MAX, f64::MAX)
    }
}

pub fn to_json(records: &[CheckResult]) -> String {
    let mut s = serde_json::to_string_pretty(records).expect("records serialize");
    s.push('\n');
    s
}

pub fn to_csv(records: &[CheckResult]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    if records.is_empty() {
        w.write_record([
            "check_id",
            "paper_ref",
            "lhs",
            "rhs",
            "constant",
            "margin",
            "pass",
        ])
        .expect("in-memory write");
    }
    for r in records {
        w.serialize(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_pass_rule() {
        assert!(CheckResult::identity("a", "plumbing", 1e-11, 1e-10, 1).pass);
        assert!(!CheckResult::identity("a", "plumbing", 2e-10, 1e-10, 1).pass);
        assert!(!CheckResult::identity("a", "plumbing", f64::NAN, 1e-10, 1).pass);
    }

    #[test]
    fn inequality_keeps_worst_instance() {
        let r = CheckResult::inequality(
            "b",
            "plumbing",
            4.0,
            1e-8,
            [(1.0, 4.0), (3.0, 4.0), (0.5, 4.0)],
        );
        assert_eq!((r.lhs, r.rhs), (3.0, 4.0));
        assert!(r.pass);
        assert!((r.margin - 0.25).abs() < 1e-15);
        let edge = CheckResult::inequality("b", "plumbing", 1.0, 1e-8, [(1.0 + 5e-9, 1.0)]);
        assert!(edge.pass);
        let bad = CheckResult::inequality("b", "plumbing", 1.0, 1e-8, [(1.0 + 2e-8, 1.0)]);
        assert!(!bad.pass);
    }

    #[test]
    fn csv_and_json_share_columns() {
        let recs = vec![CheckResult::identity(
            "x",
            "a \"quoted\", ref",
            0.0,
            1e-10,
            1,
        )];
        let csv = to_csv(&recs);
        assert!(csv.starts_with("check_id,paper_ref,lhs,rhs,constant,margin,pass\n"));
        let json: serde_json::Value = serde_json::from_str(&to_json(&recs)).unwrap();
        let keys: Vec<_> = json[0].as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys.len(), 7);
        assert_eq!(
            to_csv(&[]),
            "check_id,paper_ref,lhs,rhs,constant,margin,pass\n"
        );
    }
}

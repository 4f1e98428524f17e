//! Plain-text series files:
//!
//! ```text
//! slice-series v1 N=2
//! 0 1 0 0 0
//! 1 0 0 0 0
//! 2 0 1 0 0
//! ```
//!
//! Degree lines may appear in any order; each of `0..=N` exactly once.

use std::fmt::Write as _;

use super::SliceSeries;
use crate::error::{Error, Result};
use crate::quaternion::Quaternion;

const HEADER_PREFIX: &str = "slice-series v1 N=";

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_series(text: &str) -> Result<SliceSeries> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "empty series file"))?;
    let degree: usize = header
        .strip_prefix(HEADER_PREFIX)
        .ok_or_else(|| parse_err(hline, format!("expected header `{HEADER_PREFIX}<deg>`")))?
        .trim()
        .parse()
        .map_err(|e| parse_err(hline, format!("bad degree in header: {e}")))?;

    let mut coeffs: Vec<Option<Quaternion>> = vec![None; degree + 1];
    for (line, body) in lines {
        let (n_str, rest) = body
            .split_once(char::is_whitespace)
            .ok_or_else(|| parse_err(line, "expected `n x0 x1 x2 x3`"))?;
        let n: usize = n_str
            .parse()
            .map_err(|e| parse_err(line, format!("bad degree `{n_str}`: {e}")))?;
        if n > degree {
            return Err(parse_err(
                line,
                format!("degree {n} exceeds header N={degree}"),
            ));
        }
        let a: Quaternion = rest.parse().map_err(|e: String| parse_err(line, e))?;
        if coeffs[n].replace(a).is_some() {
            return Err(parse_err(line, format!("duplicate degree {n}")));
        }
    }
    let last_line = text.lines().count().max(1);
    let coeffs = coeffs
        .into_iter()
        .enumerate()
        .map(|(n, c)| c.ok_or_else(|| parse_err(last_line, format!("missing degree {n}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(SliceSeries::new(coeffs))
}

pub fn write_series(f: &SliceSeries) -> String {
    let mut out = format!("{HEADER_PREFIX}{}\n", f.degree());
    for (n, a) in f.coeffs().iter().enumerate() {
        let _ = writeln!(out, "{n} {a}");
    }
    out
}

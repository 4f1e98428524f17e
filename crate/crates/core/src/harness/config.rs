//! Run configuration and its `key=value` file form.

use std::path::PathBuf;

use crate::error::{Error, Result};
use crate::fock::{Domain, FockParams};
use crate::series::N_MAX;

use super::checks::CHECK_IDS;

/// Report format printed on stdout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::Config(format!("unknown format `{s}` (json, csv)"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    /// Parameters of the primary space. `domain` follows `plane`/`radius`.
    pub params: FockParams,
    /// Use `plane(radius)` instead of the unit disk as the primary domain.
    pub plane: bool,
    /// Radius of the truncated plane, also used by the checks whose
    /// statements live on the whole slice (growth, embedding, plane
    /// reproduction).
    pub radius: f64,
    pub seed: u64,
    /// Overrides every per-check instance count when set.
    pub n_random_series: Option<usize>,
    pub max_degree: usize,
    pub checks: Vec<String>,
    /// Report path stem; `.json` and `.csv` are appended.
    pub output: Option<PathBuf>,
    pub format: Format,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            params: FockParams::default(),
            plane: false,
            radius: 4.0,
            seed: 42,
            n_random_series: None,
            max_degree: 10,
            checks: CHECK_IDS.iter().map(|s| s.to_string()).collect(),
            output: None,
            format: Format::Json,
        }
    }
}

fn number<T: std::str::FromStr>(key: &str, value: &str) -> Result<T>
where
    T::Err: std::fmt::Display,
{
    value
        .parse()
        .map_err(|e| Error::Config(format!("bad value `{value}` for {key}: {e}")))
}

impl RunConfig {
    /// Domain the primary space integrates over.
    pub fn domain(&self) -> Domain {
        if self.plane {
            Domain::Plane {
                radius: self.radius,
            }
        } else {
            Domain::UnitDisk
        }
    }

    /// The whole-slice reading: `plane(radius)`.
    pub fn plane_domain(&self) -> Domain {
        Domain::Plane {
            radius: self.radius,
        }
    }

    /// Sets one option. Keys match the command-line flag names.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let value = value.trim();
        match key.trim() {
            "alpha" => self.params.alpha = number(key, value)?,
            "p" => self.params.p = parse_exponent(value)?,
            "degree" => self.max_degree = number(key, value)?,
            "domain" => {
                self.plane = match value {
                    "disk" => false,
                    "plane" => true,
                    _ => {
                        return Err(Error::Config(format!(
                            "unknown domain `{value}` (disk, plane)"
                        )))
                    }
                }
            }
            "radius" => self.radius = number(key, value)?,
            "quad-r" => self.params.n_r = number(key, value)?,
            "quad-theta" => self.params.n_theta = number(key, value)?,
            "slices" => self.params.n_slices = number(key, value)?,
            "truncation" => self.params.truncation = number(key, value)?,
            "seed" => self.seed = number(key, value)?,
            "series" => self.n_random_series = Some(number(key, value)?),
            "checks" => {
                self.checks = value
                    .split(',')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(String::from)
                    .collect()
            }
            "out" => self.output = Some(PathBuf::from(value)),
            "format" => self.format = value.parse()?,
            other => return Err(Error::Config(format!("unknown option `{other}`"))),
        }
        self.params.domain = self.domain();
        Ok(())
    }

    /// Applies `key=value` lines; `#` starts a comment.
    pub fn apply_text(&mut self, text: &str) -> Result<()> {
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| Error::Parse {
                line: i + 1,
                message: format!("expected key=value, got `{line}`"),
            })?;
            self.set(key, value).map_err(|e| Error::Parse {
                line: i + 1,
                message: e.to_string(),
            })?;
        }
        Ok(())
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut c = Self::default();
        c.apply_text(text)?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        self.params.validate()?;
        if !(self.radius >= 1.0 && self.radius.is_finite()) {
            return Err(Error::Config(format!(
                "radius must be >= 1, got {}",
                self.radius
            )));
        }
        if self.max_degree > N_MAX {
            return Err(Error::Config(format!(
                "degree {} exceeds the truncation cap {N_MAX}",
                self.max_degree
            )));
        }
        if let Some(id) = self
            .checks
            .iter()
            .find(|c| !CHECK_IDS.contains(&c.as_str()))
        {
            return Err(Error::UnknownCheck(id.clone()));
        }
        Ok(())
    }

    /// Instance count for a check whose nominal count is `nominal`.
    pub fn count(&self, nominal: usize) -> usize {
        self.n_random_series.unwrap_or(nominal)
    }
}

/// Accepts decimals and simple fractions such as `4/3`.
pub fn parse_exponent(value: &str) -> Result<f64> {
    match value.split_once('/') {
        Some((a, b)) => {
            let a: f64 = number("p", a.trim())?;
            let b: f64 = number("p", b.trim())?;
            Ok(a / b)
        }
        None => number("p", value),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_then_override() {
        let mut c = RunConfig::from_text(
            "# demo\nalpha = 0.5\ndomain=plane\nradius=6\nchecks=rep-formula, star-unit\n",
        )
        .unwrap();
        assert_eq!(c.params.alpha, 0.5);
        assert_eq!(c.params.domain, Domain::Plane { radius: 6.0 });
        assert_eq!(c.checks, vec!["rep-formula", "star-unit"]);
        c.set("alpha", "2").unwrap();
        assert_eq!(c.params.alpha, 2.0);
        c.validate().unwrap();
    }

    #[test]
    fn fraction_exponent() {
        let c = RunConfig::from_text("p=4/3").unwrap();
        assert_eq!(c.params.p, 4.0 / 3.0);
    }

    #[test]
    fn errors_name_the_line() {
        let err = RunConfig::from_text("alpha=1\nbogus\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = RunConfig::from_text("\nalpha=x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn unknown_check_is_rejected() {
        let c = RunConfig::from_text("checks=nope").unwrap();
        assert_eq!(c.validate(), Err(Error::UnknownCheck("nope".into())));
    }

    #[test]
    fn empty_check_list() {
        let c = RunConfig::from_text("checks=").unwrap();
        assert!(c.checks.is_empty());
        c.validate().unwrap();
    }
}

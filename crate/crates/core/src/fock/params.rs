use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::N_MAX;

/// Integration domain on each slice `ℂ_I`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "kebab-case")]
pub enum Domain {
    /// The unit disk `𝔹_I = 𝔹 ∩ ℂ_I`.
    UnitDisk,
    /// The disk of radius `radius` in `ℂ_I`, a truncation of the whole slice.
    Plane { radius: f64 },
}

impl Domain {
    pub fn radius(self) -> f64 {
        match self {
            Domain::UnitDisk => 1.0,
            Domain::Plane { radius } => radius,
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::UnitDisk => write!(f, "disk"),
            Domain::Plane { radius } => write!(f, "plane(R={radius})"),
        }
    }
}

/// Parameters of a Fock space `𝔉_α^p` and of its numerical realization.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FockParams {
    pub alpha: f64,
    pub p: f64,
    pub domain: Domain,
    /// Truncation degree for kernels and Gram tables.
    pub truncation: usize,
    /// Gauss–Legendre nodes in the radius.
    pub n_r: usize,
    /// Uniform trapezoid nodes in the angle.
    pub n_theta: usize,
    /// Size of the Fibonacci sample of 𝕊 used for the sup over slices.
    pub n_slices: usize,
}

impl Default for FockParams {
    fn default() -> Self {
        Self {
            alpha: 1.0,
            p: 2.0,
            domain: Domain::UnitDisk,
            truncation: N_MAX,
            n_r: 64,
            n_theta: 256,
            n_slices: 64,
        }
    }
}

impl FockParams {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Config(msg));
        if !(self.alpha > 0.0 && self.alpha.is_finite()) {
            return bad(format!("alpha must be > 0, got {}", self.alpha));
        }
        if !(self.p > 1.0 && self.p.is_finite()) {
            return bad(format!("p must be > 1, got {}", self.p));
        }
        if let Domain::Plane { radius } = self.domain {
            if !(radius >= 1.0 && radius.is_finite()) {
                return bad(format!("plane radius must be >= 1, got {radius}"));
            }
        }
        if self.n_r < 4 || self.n_theta < 4 {
            return bad(format!(
                "quadrature resolution must be >= 4 (n_r = {}, n_theta = {})",
                self.n_r, self.n_theta
            ));
        }
        if self.n_slices < 8 {
            return bad(format!("n_slices must be >= 8, got {}", self.n_slices));
        }
        Ok(())
    }

    pub fn with_alpha(self, alpha: f64) -> Self {
        Self { alpha, ..self }
    }

    pub fn with_p(self, p: f64) -> Self {
        Self { p, ..self }
    }

    pub fn with_domain(self, domain: Domain) -> Self {
        Self { domain, ..self }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_valid() {
        FockParams::default().validate().unwrap();
    }

    #[test]
    fn rejects_out_of_range() {
        let base = FockParams::default();
        for bad in [
            base.with_alpha(0.0),
            base.with_alpha(f64::NAN),
            base.with_p(1.0),
            base.with_domain(Domain::Plane { radius: 0.5 }),
            FockParams { n_r: 3, ..base },
            FockParams { n_theta: 2, ..base },
            FockParams {
                n_slices: 7,
                ..base
            },
        ] {
            assert!(matches!(bad.validate(), Err(Error::Config(_))), "{bad:?}");
        }
    }
}

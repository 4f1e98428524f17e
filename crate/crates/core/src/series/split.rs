use num_complex::Complex64;

use super::SliceSeries;
use crate::quaternion::{decompose_basis, recombine_basis, ImaginaryUnit, Quaternion};

/// Restriction of a slice-regular series to `ℂ_I`, written `f_I = F + L·J`
/// with `F`, `L` holomorphic and `ℂ_I`-valued.
#[derive(Debug, Clone, PartialEq)]
pub struct SplitPair {
    /// Coefficients of `F`, as `re + im·I`.
    pub f1: Vec<Complex64>,
    /// Coefficients of `L`, as `re + im·I`.
    pub f2: Vec<Complex64>,
    pub unit: ImaginaryUnit,
    pub ortho: ImaginaryUnit,
}

fn horner(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

impl SplitPair {
    pub(crate) fn from_series(f: &SliceSeries, unit: ImaginaryUnit) -> Self {
        let ortho = unit.orthogonal_unit();
        let (f1, f2) = f
            .coeffs()
            .iter()
            .map(|&a| decompose_basis(a, unit, ortho).expect("orthogonal_unit is orthogonal"))
            .unzip();
        Self {
            f1,
            f2,
            unit,
            ortho,
        }
    }

    /// Rebuilds the quaternion coefficients `zₙ + wₙ J`.
    pub fn recombine(&self) -> SliceSeries {
        SliceSeries::new(
            self.f1
                .iter()
                .zip(&self.f2)
                .map(|(&z, &w)| recombine_basis(z, w, self.unit, self.ortho))
                .collect(),
        )
    }

    /// `f_I(x + yI) = F(z) + L(z)·J` for the complex point `z = x + y·i`.
    pub fn slice_value(&self, z: Complex64) -> Quaternion {
        let f = horner(&self.f1, z);
        let l = horner(&self.f2, z);
        self.unit.embed_complex(f) + self.unit.embed_complex(l) * self.ortho.quaternion()
    }

    /// Extends the slice function to all of ℍ:
    /// `½[(1 − I_q I) f_I(x+yI) + (1 + I_q I) f_I(x−yI)]` for `q = x + y I_q`.
    pub fn extend(&self, q: Quaternion) -> Quaternion {
        let c = q.slice_coords();
        let fz = self.slice_value(Complex64::new(c.x, c.y));
        let fzbar = self.slice_value(Complex64::new(c.x, -c.y));
        let iq_i = c.unit.quaternion() * self.unit.quaternion();
        ((Quaternion::ONE - iq_i) * fz + (Quaternion::ONE + iq_i) * fzbar) * 0.5
    }
}

//! Real quaternions, the sphere of imaginary units, and slice coordinates.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Quaternion `x0 + x1 i + x2 j + x3 k`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Quaternion {
    pub x0: f64,
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

impl Quaternion {
    pub const ZERO: Self = Self::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Self = Self::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Self = Self::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Self = Self::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Self = Self::new(0.0, 0.0, 0.0, 1.0);

    #[inline]
    pub const fn new(x0: f64, x1: f64, x2: f64, x3: f64) -> Self {
        Self { x0, x1, x2, x3 }
    }

    #[inline]
    pub const fn real(x: f64) -> Self {
        Self::new(x, 0.0, 0.0, 0.0)
    }

    /// Pure imaginary quaternion with the given `(i, j, k)` components.
    #[inline]
    pub const fn pure(v: [f64; 3]) -> Self {
        Self::new(0.0, v[0], v[1], v[2])
    }

    #[inline]
    pub fn re(self) -> f64 {
        self.x0
    }

    /// Imaginary part as a vector in ℝ³.
    #[inline]
    pub fn im(self) -> [f64; 3] {
        [self.x1, self.x2, self.x3]
    }

    #[inline]
    pub fn conj(self) -> Self {
        Self::new(self.x0, -self.x1, -self.x2, -self.x3)
    }

    #[inline]
    pub fn norm_sqr(self) -> f64 {
        self.x0 * self.x0 + self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.norm_sqr().sqrt()
    }

    #[inline]
    pub fn im_norm(self) -> f64 {
        (self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3).sqrt()
    }

    /// Multiplicative inverse `conj(q) / |q|²`.
    pub fn inverse(self) -> Result<Self> {
        let n2 = self.norm_sqr();
        if n2 == 0.0 || !n2.is_finite() {
            return Err(Error::NonInvertible(format!("{self}")));
        }
        Ok(self.conj() / n2)
    }

    #[inline]
    pub fn scale(self, s: f64) -> Self {
        Self::new(self.x0 * s, self.x1 * s, self.x2 * s, self.x3 * s)
    }

    /// Largest absolute component difference.
    pub fn max_abs_diff(self, other: Self) -> f64 {
        let d = self - other;
        d.x0.abs().max(d.x1.abs()).max(d.x2.abs()).max(d.x3.abs())
    }

    /// Threshold below which `|Im(q)|` counts as zero.
    #[inline]
    pub fn axis_epsilon(self) -> f64 {
        1e-13 * (1.0 + self.norm())
    }

    /// The imaginary unit `I_q = Im(q)/|Im(q)|`, or `i` when `q` is real.
    pub fn axis(self) -> ImaginaryUnit {
        let m = self.im_norm();
        if m > self.axis_epsilon() {
            ImaginaryUnit(Self::new(0.0, self.x1 / m, self.x2 / m, self.x3 / m))
        } else {
            ImaginaryUnit::i()
        }
    }

    /// Writes `q = x + y I_q` with `y ≥ 0`.
    pub fn slice_coords(self) -> SliceCoords {
        let unit = self.axis();
        let y = if self.im_norm() > self.axis_epsilon() {
            self.im_norm()
        } else {
            0.0
        };
        SliceCoords {
            x: self.x0,
            y,
            unit,
        }
    }

    pub fn is_finite(self) -> bool {
        self.x0.is_finite() && self.x1.is_finite() && self.x2.is_finite() && self.x3.is_finite()
    }
}

impl Add for Quaternion {
    type Output = Self;
    #[inline]
    fn add(self, r: Self) -> Self {
        Self::new(
            self.x0 + r.x0,
            self.x1 + r.x1,
            self.x2 + r.x2,
            self.x3 + r.x3,
        )
    }
}

impl AddAssign for Quaternion {
    #[inline]
    fn add_assign(&mut self, r: Self) {
        *self = *self + r;
    }
}

impl Sub for Quaternion {
    type Output = Self;
    #[inline]
    fn sub(self, r: Self) -> Self {
        Self::new(
            self.x0 - r.x0,
            self.x1 - r.x1,
            self.x2 - r.x2,
            self.x3 - r.x3,
        )
    }
}

impl SubAssign for Quaternion {
    #[inline]
    fn sub_assign(&mut self, r: Self) {
        *self = *self - r;
    }
}

impl Neg for Quaternion {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self::new(-self.x0, -self.x1, -self.x2, -self.x3)
    }
}

/// Hamilton product.
impl Mul for Quaternion {
    type Output = Self;
    #[inline]
    fn mul(self, b: Self) -> Self {
        let a = self;
        Self::new(
            a.x0 * b.x0 - a.x1 * b.x1 - a.x2 * b.x2 - a.x3 * b.x3,
            a.x0 * b.x1 + a.x1 * b.x0 + a.x2 * b.x3 - a.x3 * b.x2,
            a.x0 * b.x2 - a.x1 * b.x3 + a.x2 * b.x0 + a.x3 * b.x1,
            a.x0 * b.x3 + a.x1 * b.x2 - a.x2 * b.x1 + a.x3 * b.x0,
        )
    }
}

impl Mul<f64> for Quaternion {
    type Output = Self;
    #[inline]
    fn mul(self, s: f64) -> Self {
        self.scale(s)
    }
}

impl Div<f64> for Quaternion {
    type Output = Self;
    #[inline]
    fn div(self, s: f64) -> Self {
        Self::new(self.x0 / s, self.x1 / s, self.x2 / s, self.x3 / s)
    }
}

impl From<f64> for Quaternion {
    fn from(x: f64) -> Self {
        Self::real(x)
    }
}

fn fmt_component(x: f64) -> f64 {
    // keeps "-0" out of the text form
    if x == 0.0 {
        0.0
    } else {
        x
    }
}

/// Text form `"x0 x1 x2 x3"`.
impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} {}",
            fmt_component(self.x0),
            fmt_component(self.x1),
            fmt_component(self.x2),
            fmt_component(self.x3)
        )
    }
}

impl FromStr for Quaternion {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split_whitespace().collect();
        if parts.len() != 4 {
            return Err(format!(
                "expected 4 whitespace-separated components, found {}",
                parts.len()
            ));
        }
        let mut x = [0.0; 4];
        for (slot, p) in x.iter_mut().zip(&parts) {
            *slot = p
                .parse::<f64>()
                .map_err(|e| format!("bad component `{p}`: {e}"))?;
            if !slot.is_finite() {
                return Err(format!("non-finite component `{p}`"));
            }
        }
        Ok(Self::new(x[0], x[1], x[2], x[3]))
    }
}

fn dot3(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross3(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn normalize3(v: [f64; 3]) -> Option<[f64; 3]> {
    let n = dot3(v, v).sqrt();
    (n > 0.0 && n.is_finite()).then(|| [v[0] / n, v[1] / n, v[2] / n])
}

/// A purely imaginary unit quaternion, an element of the sphere 𝕊.
///
/// Every `I` in 𝕊 squares to `-1` and determines the slice `ℂ_I = ℝ + ℝI`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ImaginaryUnit(Quaternion);

impl ImaginaryUnit {
    pub const fn i() -> Self {
        Self(Quaternion::I)
    }

    pub const fn j() -> Self {
        Self(Quaternion::J)
    }

    pub const fn k() -> Self {
        Self(Quaternion::K)
    }

    /// Normalizes the vector `(v1, v2, v3)` onto 𝕊.
    pub fn from_vector(v: [f64; 3]) -> Result<Self> {
        normalize3(v)
            .map(|u| Self(Quaternion::pure(u)))
            .ok_or_else(|| Error::Domain(format!("cannot normalize {v:?} onto the unit sphere")))
    }

    /// Accepts `q` only if it is already (to 1e-12) a pure unit quaternion.
    pub fn new(q: Quaternion) -> Result<Self> {
        if q.x0.abs() > 1e-12 || (q.norm() - 1.0).abs() > 1e-12 {
            return Err(Error::Domain(format!("{q} is not a pure imaginary unit")));
        }
        Self::from_vector(q.im())
    }

    #[inline]
    pub fn quaternion(self) -> Quaternion {
        self.0
    }

    #[inline]
    pub fn vector(self) -> [f64; 3] {
        self.0.im()
    }

    /// Euclidean dot product in Im(ℍ) ≅ ℝ³.
    #[inline]
    pub fn dot(self, other: Self) -> f64 {
        dot3(self.vector(), other.vector())
    }

    /// The point `x + yI` of the slice `ℂ_I`.
    #[inline]
    pub fn embed(self, x: f64, y: f64) -> Quaternion {
        Quaternion::new(x, y * self.0.x1, y * self.0.x2, y * self.0.x3)
    }

    /// Embeds a complex number `re + im·i` as `re + im·I`.
    #[inline]
    pub fn embed_complex(self, z: Complex64) -> Quaternion {
        self.embed(z.re, z.im)
    }

    /// Deterministic unit `J` orthogonal to `self`.
    ///
    /// `J` is the normalized cross product `k × I`, so `i ↦ j`, `j ↦ -i`;
    /// within 1e-8 of `±k` the fallback is `j`. A final Gram–Schmidt pass
    /// keeps `I·J + J·I` at rounding level.
    pub fn orthogonal_unit(self) -> Self {
        let v = self.vector();
        let near_k = {
            let dp = [v[0], v[1], v[2] - 1.0];
            let dm = [v[0], v[1], v[2] + 1.0];
            dot3(dp, dp).sqrt() < 1e-8 || dot3(dm, dm).sqrt() < 1e-8
        };
        let candidate = if near_k {
            [0.0, 1.0, 0.0]
        } else {
            cross3([0.0, 0.0, 1.0], v)
        };
        let d = dot3(candidate, v);
        let projected = [
            candidate[0] - d * v[0],
            candidate[1] - d * v[1],
            candidate[2] - d * v[2],
        ];
        // `projected` has norm ≥ ~1e-8 by construction of the two branches.
        Self(Quaternion::pure(
            normalize3(projected).expect("orthogonal complement is nonzero"),
        ))
    }
}

impl From<ImaginaryUnit> for Quaternion {
    fn from(u: ImaginaryUnit) -> Self {
        u.0
    }
}

impl fmt::Display for ImaginaryUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Slice coordinates `q = x + yI` with `y ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SliceCoords {
    pub x: f64,
    pub y: f64,
    pub unit: ImaginaryUnit,
}

impl SliceCoords {
    pub fn reassemble(self) -> Quaternion {
        self.unit.embed(self.x, self.y)
    }
}

/// Coordinates of `a` in the basis `{1, I, J, IJ}`, grouped as `a = z + w·J`
/// with `z, w ∈ ℂ_I` (returned as complex numbers `re + im·I`).
pub fn decompose_basis(
    a: Quaternion,
    unit: ImaginaryUnit,
    ortho: ImaginaryUnit,
) -> Result<(Complex64, Complex64)> {
    let d = unit.dot(ortho);
    if d.abs() > 1e-12 {
        return Err(Error::NonOrthogonal(d));
    }
    let ij = (unit.quaternion() * ortho.quaternion()).im();
    let v = a.im();
    Ok((
        Complex64::new(a.x0, dot3(v, unit.vector())),
        Complex64::new(dot3(v, ortho.vector()), dot3(v, ij)),
    ))
}

/// Inverse of [`decompose_basis`]: `z + w·J`.
pub fn recombine_basis(
    z: Complex64,
    w: Complex64,
    unit: ImaginaryUnit,
    ortho: ImaginaryUnit,
) -> Quaternion {
    unit.embed_complex(z) + unit.embed_complex(w) * ortho.quaternion()
}

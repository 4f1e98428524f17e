//! Truncated slice-regular power series `f(q) = Σ qⁿ aₙ` with quaternion
//! coefficients on the right.

mod io;
mod split;

pub use io::{parse_series, write_series};
pub use split::SplitPair;

use crate::error::{Error, Result};
use crate::quaternion::{ImaginaryUnit, Quaternion};

/// Default truncation cap for ⋆-products.
pub const N_MAX: usize = 64;

/// A polynomial `Σ_{n≤N} qⁿ aₙ` standing in for an entire slice-regular
/// function.
#[derive(Debug, Clone, PartialEq)]
pub struct SliceSeries {
    coeffs: Vec<Quaternion>,
    /// Number of degrees discarded by capped ⋆-products that produced or fed
    /// into this series.
    dropped_degrees: usize,
}

impl SliceSeries {
    /// An empty coefficient list is read as the zero series.
    pub fn new(coeffs: Vec<Quaternion>) -> Self {
        let coeffs = if coeffs.is_empty() {
            vec![Quaternion::ZERO]
        } else {
            coeffs
        };
        Self {
            coeffs,
            dropped_degrees: 0,
        }
    }

    pub fn zero() -> Self {
        Self::new(vec![Quaternion::ZERO])
    }

    pub fn constant(a: Quaternion) -> Self {
        Self::new(vec![a])
    }

    /// `qᵐ a`.
    pub fn monomial(m: usize, a: Quaternion) -> Self {
        let mut coeffs = vec![Quaternion::ZERO; m + 1];
        coeffs[m] = a;
        Self::new(coeffs)
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Quaternion::real(c)).collect())
    }

    /// Truncation degree `N` (length of the coefficient list minus one).
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Quaternion] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Quaternion {
        self.coeffs.get(n).copied().unwrap_or(Quaternion::ZERO)
    }

    pub fn dropped_degrees(&self) -> usize {
        self.dropped_degrees
    }

    pub fn max_coeff_norm(&self) -> f64 {
        self.coeffs.iter().map(|a| a.norm()).fold(0.0, f64::max)
    }

    /// Scale-aware zero threshold `1e-12·(1 + max |aₙ|)`.
    pub fn zero_epsilon(&self) -> f64 {
        1e-12 * (1.0 + self.max_coeff_norm())
    }

    /// `Σ qⁿ aₙ` by Horner's scheme, `aₙ + q·(aₙ₊₁ + q·(…))`; powers of `q`
    /// multiply from the left.
    pub fn eval(&self, q: Quaternion) -> Quaternion {
        let mut acc = Quaternion::ZERO;
        for &a in self.coeffs.iter().rev() {
            acc = q * acc + a;
        }
        acc
    }

    /// Coefficient-wise sum; the shorter series is zero-padded.
    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Self::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect());
        out.dropped_degrees = self.dropped_degrees.max(other.dropped_degrees);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale_right(Quaternion::real(-1.0)))
    }

    /// The function `q ↦ f(q)·a`.
    pub fn scale_right(&self, a: Quaternion) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|&c| c * a).collect(),
            dropped_degrees: self.dropped_degrees,
        }
    }

    /// `f|≤m`, the partial sum through degree `m`.
    pub fn truncate(&self, m: usize) -> Self {
        let end = (m + 1).min(self.coeffs.len());
        Self {
            coeffs: self.coeffs[..end].to_vec(),
            dropped_degrees: self.dropped_degrees,
        }
    }

    /// Regular (⋆) product, capped at [`N_MAX`].
    pub fn star_mul(&self, other: &Self) -> Self {
        self.star_mul_capped(other, N_MAX)
    }

    /// Cauchy convolution `cₙ = Σ_k a_k b_{n−k}` kept through degree
    /// `min(N_f + N_g, cap)`.
    pub fn star_mul_capped(&self, other: &Self, cap: usize) -> Self {
        let full = self.degree() + other.degree();
        let top = full.min(cap);
        let mut coeffs = vec![Quaternion::ZERO; top + 1];
        for (n, c) in coeffs.iter_mut().enumerate() {
            let lo = n.saturating_sub(other.degree());
            let hi = n.min(self.degree());
            for k in lo..=hi {
                *c += self.coeffs[k] * other.coeffs[n - k];
            }
        }
        Self {
            coeffs,
            dropped_degrees: self.dropped_degrees + other.dropped_degrees + (full - top),
        }
    }

    /// `f^c(q) = Σ qⁿ conj(aₙ)`.
    pub fn regular_conjugate(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a.conj()).collect(),
            dropped_degrees: self.dropped_degrees,
        }
    }

    /// The ⋆-inverse `(f⋆f^c)⁻¹ f^c` through degree `order`.
    ///
    /// `f⋆f^c` has real coefficients, so its formal inverse is a real series
    /// and commutes with everything under ⋆.
    pub fn star_reciprocal(&self, order: usize) -> Result<Self> {
        let a0 = self.coeffs[0].norm();
        let eps = self.zero_epsilon();
        if a0 <= eps {
            return Err(Error::ReciprocalUndefined(a0));
        }
        let conj = self.regular_conjugate();
        let sym: Vec<f64> = self
            .star_mul_capped(&conj, order)
            .coeffs
            .iter()
            .map(|c| c.re())
            .collect();
        let s0 = sym[0];
        if s0 <= eps {
            return Err(Error::ReciprocalUndefined(a0));
        }
        let mut inv = vec![0.0; order + 1];
        inv[0] = 1.0 / s0;
        for n in 1..=order {
            let acc: f64 = (1..=n.min(sym.len() - 1))
                .map(|k| sym[k] * inv[n - k])
                .sum();
            inv[n] = -acc / s0;
        }
        let inv = Self::from_real(&inv);
        let mut out = inv.star_mul_capped(&conj, order);
        out.dropped_degrees = self.dropped_degrees;
        Ok(out)
    }

    /// `f_r(q) = f(rq)`: coefficient `k` scaled by `rᵏ`.
    pub fn dilate(&self, r: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&r) {
            return Err(Error::Domain(format!("dilation factor {r} outside [0, 1]")));
        }
        let mut scale = 1.0;
        let coeffs = self
            .coeffs
            .iter()
            .map(|&a| {
                let c = a * scale;
                scale *= r;
                c
            })
            .collect();
        Ok(Self {
            coeffs,
            dropped_degrees: self.dropped_degrees,
        })
    }

    /// Truncated ⋆-exponential `Σ_{n≤N} qⁿ (α w̄)ⁿ / n!`, i.e. the kernel
    /// section `B_α(·, w)`.
    pub fn star_exponential(w: Quaternion, alpha: f64, n: usize) -> Self {
        let step = w.conj() * alpha;
        let mut coeffs = Vec::with_capacity(n + 1);
        let mut term = Quaternion::ONE;
        coeffs.push(term);
        for k in 1..=n {
            term = term * step / k as f64;
            coeffs.push(term);
        }
        Self::new(coeffs)
    }

    /// Splits every coefficient as `aₙ = zₙ + wₙ J` with `J` the
    /// [`ImaginaryUnit::orthogonal_unit`] of `unit`.
    pub fn split(&self, unit: ImaginaryUnit) -> SplitPair {
        SplitPair::from_series(self, unit)
    }
}

/// Residual of the pointwise form of the ⋆-product at `q`:
/// `|(f⋆g)(q)|` when `f(q) = 0`, otherwise
/// `|(f⋆g)(q) − f(q)·g(f(q)⁻¹ q f(q))|`.
pub fn star_pointwise_residual(f: &SliceSeries, g: &SliceSeries, q: Quaternion) -> f64 {
    let fg = f.star_mul_capped(g, usize::MAX).eval(q);
    let fq = f.eval(q);
    if fq.norm() <= f.zero_epsilon() {
        return fg.norm();
    }
    let inv = fq.inverse().expect("nonzero by the branch above");
    (fg - fq * g.eval(inv * q * fq)).norm()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quaternion::Quaternion as Q;

    fn q(x0: f64, x1: f64, x2: f64, x3: f64) -> Q {
        Q::new(x0, x1, x2, x3)
    }

    #[test]
    fn eval_examples() {
        let f = SliceSeries::new(vec![Q::ONE, Q::I]);
        assert_eq!(f.eval(Q::J), q(1.0, 0.0, 0.0, -1.0));
        let g = SliceSeries::new(vec![q(0.3, 1.0, 2.0, -1.0), Q::K, Q::J]);
        assert_eq!(g.eval(Q::ZERO), g.coeff(0));
        let sq = SliceSeries::monomial(2, Q::ONE);
        assert_eq!(sq.eval(q(1.0, 1.0, 0.0, 0.0)), q(0.0, 2.0, 0.0, 0.0));
    }

    #[test]
    fn star_mul_examples() {
        let f = SliceSeries::monomial(1, Q::I);
        let g = SliceSeries::monomial(1, Q::J);
        assert_eq!(f.star_mul(&g), SliceSeries::monomial(2, Q::K));
        assert_eq!(g.star_mul(&f), SliceSeries::monomial(2, -Q::K));
        let h = SliceSeries::new(vec![q(1.0, 2.0, 0.0, 0.5), Q::J, q(0.0, -1.0, 3.0, 0.0)]);
        assert_eq!(SliceSeries::constant(Q::ONE).star_mul(&h), h);
    }

    #[test]
    fn star_mul_records_truncation() {
        let f = SliceSeries::monomial(40, Q::ONE);
        let p = f.star_mul(&f);
        assert_eq!(p.degree(), N_MAX);
        assert_eq!(p.dropped_degrees(), 80 - N_MAX);
        assert_eq!(
            p.star_mul(&SliceSeries::constant(Q::ONE)).dropped_degrees(),
            16
        );
    }

    #[test]
    fn conjugate_examples() {
        let f = SliceSeries::monomial(1, Q::I);
        assert_eq!(f.regular_conjugate(), SliceSeries::monomial(1, -Q::I));
        let r = SliceSeries::from_real(&[1.0, -2.0, 0.5]);
        assert_eq!(r.regular_conjugate(), r);
        let f = SliceSeries::new(vec![Q::I, Q::J]);
        assert_eq!(
            f.star_mul(&f.regular_conjugate()),
            SliceSeries::from_real(&[1.0, 0.0, 1.0])
        );
    }

    #[test]
    fn reciprocal_examples() {
        let one = SliceSeries::constant(Q::ONE);
        assert_eq!(one.star_reciprocal(6).unwrap().truncate(0), one);

        let a = q(0.2, -0.5, 0.1, 0.4);
        let f = SliceSeries::new(vec![Q::ONE, -a]);
        let r = f.star_reciprocal(5).unwrap();
        let mut power = Q::ONE;
        for n in 0..=5 {
            assert!(r.coeff(n).max_abs_diff(power) < 1e-14, "degree {n}");
            power = power * a;
        }

        let f = SliceSeries::new(vec![Q::I, Q::J]);
        let r = f.star_reciprocal(4).unwrap();
        let prod = f.star_mul(&r);
        for n in 0..=4 {
            let target = if n == 0 { Q::ONE } else { Q::ZERO };
            assert!(prod.coeff(n).max_abs_diff(target) < 1e-12);
        }

        let g = SliceSeries::new(vec![Q::ZERO, Q::ONE]);
        assert!(matches!(
            g.star_reciprocal(3),
            Err(Error::ReciprocalUndefined(_))
        ));
    }

    #[test]
    fn pointwise_examples() {
        let f = SliceSeries::from_real(&[1.0, -1.0]);
        let g = SliceSeries::new(vec![q(0.5, 1.0, -2.0, 0.0), q(0.0, 0.3, 0.0, 1.0), Q::K]);
        assert!(star_pointwise_residual(&f, &g, Q::ONE) < 1e-12);

        let f = SliceSeries::from_real(&[0.5, 2.0, -1.0]);
        let g = SliceSeries::from_real(&[1.0, 0.25, 3.0]);
        assert!(star_pointwise_residual(&f, &g, q(0.2, 0.7, 0.0, 0.0)) < 1e-15);
    }

    #[test]
    fn dilate_examples() {
        let f = SliceSeries::from_real(&[1.0, 1.0, 1.0]);
        assert_eq!(f.dilate(1.0).unwrap(), f);
        assert_eq!(
            f.dilate(0.0).unwrap(),
            SliceSeries::from_real(&[1.0, 0.0, 0.0])
        );
        assert_eq!(
            f.dilate(0.5).unwrap(),
            SliceSeries::from_real(&[1.0, 0.5, 0.25])
        );
        assert!(f.dilate(1.5).is_err());
        assert!(f.dilate(-0.1).is_err());
    }

    #[test]
    fn star_exponential_examples() {
        let e = SliceSeries::star_exponential(Q::ZERO, 1.3, 12);
        assert_eq!(e.eval(q(0.1, 0.5, -0.2, 0.3)), Q::ONE);

        let e = SliceSeries::star_exponential(Q::real(0.8), 1.5, 30);
        let x = 0.6;
        assert!((e.eval(Q::real(x)).re() - (1.5 * 0.8 * x).exp()).abs() < 1e-14);

        // term-by-term: Σ iⁿ (−j)ⁿ / n!
        let e = SliceSeries::star_exponential(Q::J, 1.0, 20);
        let mut expected = Q::ZERO;
        let mut fact = 1.0;
        for n in 0..=20 {
            if n > 0 {
                fact *= n as f64;
            }
            let mut ip = Q::ONE;
            let mut jp = Q::ONE;
            for _ in 0..n {
                ip = ip * Q::I;
                jp = jp * (-Q::J);
            }
            expected += ip * jp / fact;
        }
        assert!(e.eval(Q::I).max_abs_diff(expected) < 1e-15);
    }
}

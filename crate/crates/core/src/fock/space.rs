use std::f64::consts::PI;
use std::sync::{Arc, OnceLock};

use num_complex::Complex64;

use super::params::{Domain, FockParams};
use super::quadrature::QuadratureGrid;
use super::special;
use super::sphere::slice_sample;
use crate::error::{Error, Result};
use crate::quaternion::{ImaginaryUnit, Quaternion};
use crate::series::SliceSeries;

/// `x^{p/2}` for `x ≥ 0`, avoiding `powf` for the common exponents.
#[inline]
fn half_power(x: f64, p: f64) -> f64 {
    if p == 2.0 {
        x
    } else if p == 3.0 {
        x * x.sqrt()
    } else if p == 4.0 {
        x * x
    } else if p == 4.0 / 3.0 {
        let c = x.cbrt();
        c * c
    } else {
        x.powf(0.5 * p)
    }
}

/// Supremum of the slice norms over the sampled imaginary units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SupNorm {
    /// `‖f‖_{𝔉_α^p}` estimated on the sample.
    pub norm: f64,
    /// `‖f‖^p`.
    pub power: f64,
    /// The sampled unit achieving the maximum.
    pub unit: ImaginaryUnit,
}

/// Squared norms `‖q^m‖²` under `dλ_{α,I}`, `m = 0..=N`.
#[derive(Debug, Clone, PartialEq)]
pub struct GramTable {
    pub diag: Vec<f64>,
    pub domain: Domain,
    pub alpha: f64,
}

impl GramTable {
    /// `γ(m+1, αR²)/α^m` from the incomplete-gamma series.
    pub fn closed_form(&self) -> Vec<f64> {
        (0..self.diag.len())
            .map(|m| special::monomial_norm_sqr(self.domain, self.alpha, m))
            .collect()
    }

    /// `m!/α^m`, the whole-plane limit.
    pub fn plane_limit(&self) -> Vec<f64> {
        (0..self.diag.len())
            .map(|m| special::monomial_norm_sqr_plane(self.alpha, m))
            .collect()
    }
}

/// Kernel used by [`FockSpace::project`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProjectionKernel {
    /// `B_α(q, w) = Σ qⁿ (α w̄)ⁿ / n!`.
    Exponential,
    /// `Σ_m q^m w̄^m / ‖q^m‖²` with the measured Gram diagonal.
    GramCorrected,
}

/// A series tabulated on the polar grid in a slice-independent form.
///
/// For `z = x + iy` and any `J ∈ 𝕊`, `(x + yJ)ⁿ = Re(zⁿ) + J·Im(zⁿ)`, so
/// `f(x + yJ) = C + J·S` with `C = Σ Re(zⁿ) aₙ`, `S = Σ Im(zⁿ) aₙ`. Then
/// `|f|² = |C|² + |S|² + 2 Σ_k J_k Re(C̄ e_k S)` is affine in `J`.
#[derive(Debug, Clone)]
pub struct SliceField {
    base: Vec<f64>,
    linear: Vec<[f64; 3]>,
}

impl SliceField {
    pub fn new(f: &SliceSeries, grid: &QuadratureGrid) -> Self {
        let mut base = Vec::with_capacity(grid.len());
        let mut linear = Vec::with_capacity(grid.len());
        for node in grid.nodes() {
            let z = Complex64::new(node.radius * node.cos, node.radius * node.sin);
            let mut zn = Complex64::new(1.0, 0.0);
            let mut c = Quaternion::ZERO;
            let mut s = Quaternion::ZERO;
            for &a in f.coeffs() {
                c += a * zn.re;
                s += a * zn.im;
                zn *= z;
            }
            let cbar = c.conj();
            base.push(c.norm_sqr() + s.norm_sqr());
            linear.push([
                (cbar * Quaternion::I * s).re(),
                (cbar * Quaternion::J * s).re(),
                (cbar * Quaternion::K * s).re(),
            ]);
        }
        Self { base, linear }
    }

    /// `|f(node on ℂ_J)|²` for every node.
    pub fn norm_sqr_on(&self, unit: ImaginaryUnit) -> impl Iterator<Item = f64> + '_ {
        let v = unit.vector();
        self.base
            .iter()
            .zip(&self.linear)
            .map(move |(b, l)| (b + 2.0 * (v[0] * l[0] + v[1] * l[1] + v[2] * l[2])).max(0.0))
    }
}

/// A Fock space `𝔉_α^p` together with the grid that realizes its integrals.
#[derive(Debug, Clone)]
pub struct FockSpace {
    params: FockParams,
    grid: Arc<QuadratureGrid>,
    /// `e^{−α r²}` per node.
    gauss: Arc<Vec<f64>>,
    gram: OnceLock<GramTable>,
}

impl FockSpace {
    pub fn new(params: FockParams) -> Result<Self> {
        let grid = QuadratureGrid::build(&params)?;
        let gauss = grid
            .nodes()
            .iter()
            .map(|n| (-params.alpha * n.radius * n.radius).exp())
            .collect();
        Ok(Self {
            params,
            grid: Arc::new(grid),
            gauss: Arc::new(gauss),
            gram: OnceLock::new(),
        })
    }

    /// Same `α`, domain and grid with a different exponent `p`.
    pub fn with_exponent(&self, p: f64) -> Result<Self> {
        let params = self.params.with_p(p);
        params.validate()?;
        Ok(Self {
            params,
            grid: Arc::clone(&self.grid),
            gauss: Arc::clone(&self.gauss),
            gram: self.gram.clone(),
        })
    }

    pub fn params(&self) -> &FockParams {
        &self.params
    }

    pub fn grid(&self) -> &QuadratureGrid {
        &self.grid
    }

    fn norm_prefactor(&self) -> f64 {
        self.params.alpha * self.params.p / (2.0 * PI)
    }

    /// `(αp/2π) ∫ |f(z) e^{−α|z|²/2}|^p dA_I(z)`, the p-th power of the slice
    /// norm, evaluating `f` directly at the points of `ℂ_I`.
    pub fn norm_slice_pow(&self, f: &SliceSeries, unit: ImaginaryUnit) -> f64 {
        let p = self.params.p;
        let sum: f64 = self
            .grid
            .nodes()
            .iter()
            .zip(self.gauss.iter())
            .map(|(n, g)| n.weight * half_power(f.eval(n.point(unit)).norm_sqr() * g, p))
            .sum();
        self.norm_prefactor() * sum
    }

    /// `‖f‖_{𝔉_{α,I}^p}`.
    pub fn norm_slice(&self, f: &SliceSeries, unit: ImaginaryUnit) -> f64 {
        self.norm_slice_pow(f, unit).powf(1.0 / self.params.p)
    }

    /// p-th power of the slice norm from a precomputed [`SliceField`].
    pub fn field_norm_pow(&self, field: &SliceField, unit: ImaginaryUnit) -> f64 {
        let p = self.params.p;
        let sum: f64 = field
            .norm_sqr_on(unit)
            .zip(self.grid.nodes())
            .zip(self.gauss.iter())
            .map(|((m2, n), g)| n.weight * half_power(m2 * g, p))
            .sum();
        self.norm_prefactor() * sum
    }

    /// p-th power of the slice norm from `|f|²` tabulated at the grid nodes
    /// of one slice.
    pub fn norm_pow_of_sqr(&self, sqr: &[f64]) -> Result<f64> {
        if sqr.len() != self.grid.len() {
            return Err(Error::GridMismatch {
                expected: self.grid.len(),
                got: sqr.len(),
            });
        }
        let p = self.params.p;
        let sum: f64 = sqr
            .iter()
            .zip(self.grid.nodes())
            .zip(self.gauss.iter())
            .map(|((m2, n), g)| n.weight * half_power(m2 * g, p))
            .sum();
        Ok(self.norm_prefactor() * sum)
    }

    /// `‖f‖_{𝔉_α^p}`: the largest slice norm over [`slice_sample`].
    pub fn norm(&self, f: &SliceSeries) -> SupNorm {
        let field = SliceField::new(f, &self.grid);
        self.norm_of_field(&field)
    }

    /// p-th powers of the slice norms on every unit of [`slice_sample`].
    pub fn slice_profile(&self, field: &SliceField) -> Vec<(ImaginaryUnit, f64)> {
        slice_sample(self.params.n_slices)
            .into_iter()
            .map(|unit| (unit, self.field_norm_pow(field, unit)))
            .collect()
    }

    pub fn norm_of_field(&self, field: &SliceField) -> SupNorm {
        let mut best: Option<(f64, ImaginaryUnit)> = None;
        for (unit, v) in self.slice_profile(field) {
            if best.is_none_or(|(b, _)| v > b) {
                best = Some((v, unit));
            }
        }
        let (power, unit) = best.expect("slice sample is nonempty");
        SupNorm {
            norm: power.powf(1.0 / self.params.p),
            power,
            unit,
        }
    }

    /// `⟨f, g⟩ = ∫_{ℂ_I} conj(f(z)) g(z) dλ_{α,I}(z)` over the domain.
    ///
    /// Right linear in `g`: `⟨f, g·a⟩ = ⟨f, g⟩ a`.
    pub fn inner_product(
        &self,
        f: &SliceSeries,
        g: &SliceSeries,
        unit: ImaginaryUnit,
    ) -> Quaternion {
        let alpha = self.params.alpha;
        self.grid
            .nodes()
            .iter()
            .zip(self.gauss.iter())
            .fold(Quaternion::ZERO, |acc, (n, gauss)| {
                let z = n.point(unit);
                acc + f.eval(z).conj() * g.eval(z) * (n.weight * alpha / PI * gauss)
            })
    }

    /// `‖q^m‖²` for `m = 0..=N`, measured by [`Self::inner_product`] on `ℂ_i`.
    pub fn gram_table(&self) -> &GramTable {
        self.gram.get_or_init(|| {
            let unit = ImaginaryUnit::i();
            let diag = (0..=self.params.truncation)
                .map(|m| {
                    let mono = SliceSeries::monomial(m, Quaternion::ONE);
                    self.inner_product(&mono, &mono, unit).re()
                })
                .collect();
            GramTable {
                diag,
                domain: self.params.domain,
                alpha: self.params.alpha,
            }
        })
    }

    /// `B_α(q, w) = e_⋆^{α q w̄}` truncated at degree `N`.
    pub fn kernel_eval(&self, q: Quaternion, w: Quaternion) -> Quaternion {
        SliceSeries::star_exponential(w, self.params.alpha, self.params.truncation).eval(q)
    }

    /// `Σ_{m≤N} q^m w̄^m / ‖q^m‖²`, the reproducing kernel of the polynomial
    /// span on the chosen domain.
    pub fn corrected_kernel_eval(&self, q: Quaternion, w: Quaternion) -> Quaternion {
        let diag = &self.gram_table().diag;
        let mut coeffs = Vec::with_capacity(diag.len());
        let mut wpow = Quaternion::ONE;
        for d in diag {
            coeffs.push(wpow / *d);
            wpow = wpow * w.conj();
        }
        SliceSeries::new(coeffs).eval(q)
    }

    /// `T f(q) = ∫_{ℂ_I} K(q, w) f(w) dλ_{α,I}(w)` from samples of `f` on the
    /// grid nodes of `ℂ_I` (as produced by [`QuadratureGrid::sample`]).
    pub fn project(
        &self,
        samples: &[Quaternion],
        q: Quaternion,
        unit: ImaginaryUnit,
        kernel: ProjectionKernel,
    ) -> Result<Quaternion> {
        if samples.len() != self.grid.len() {
            return Err(Error::GridMismatch {
                expected: self.grid.len(),
                got: samples.len(),
            });
        }
        let alpha = self.params.alpha;
        let n_terms = self.params.truncation + 1;
        let qpow: Vec<Quaternion> = std::iter::successors(Some(Quaternion::ONE), |x| Some(*x * q))
            .take(n_terms)
            .collect();
        let diag = match kernel {
            ProjectionKernel::Exponential => None,
            ProjectionKernel::GramCorrected => Some(&self.gram_table().diag),
        };
        let mut acc = Quaternion::ZERO;
        for ((node, gauss), &fw) in self.grid.nodes().iter().zip(self.gauss.iter()).zip(samples) {
            let wbar = node.point(unit).conj();
            let mut k = Quaternion::ZERO;
            let mut c = Quaternion::ONE;
            for (n, qn) in qpow.iter().enumerate() {
                match diag {
                    None => {
                        if n > 0 {
                            c = c * wbar * (alpha / n as f64);
                        }
                        k += *qn * c;
                    }
                    Some(d) => {
                        if n > 0 {
                            c = c * wbar;
                        }
                        k += *qn * c / d[n];
                    }
                }
            }
            acc += k * fw * (node.weight * alpha / PI * gauss);
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::oracle::disk_gram_simpson;

    fn disk() -> FockSpace {
        FockSpace::new(FockParams::default()).unwrap()
    }

    #[test]
    fn norm_of_zero_and_one() {
        let s = disk();
        assert_eq!(s.norm_slice(&SliceSeries::zero(), ImaginaryUnit::i()), 0.0);
        let one = SliceSeries::constant(Quaternion::ONE);
        let expected = (1.0 - (-1.0f64).exp()).sqrt();
        assert!((s.norm_slice(&one, ImaginaryUnit::i()) - expected).abs() < 1e-13);
        assert!((expected - 0.795).abs() < 1e-3);
    }

    #[test]
    fn real_coefficients_give_equal_slices() {
        let s = disk().with_exponent(3.0).unwrap();
        let f = SliceSeries::from_real(&[0.5, -1.0, 2.0, 0.25]);
        let a = s.norm_slice(&f, ImaginaryUnit::i());
        let b = s.norm_slice(&f, ImaginaryUnit::j());
        assert!((a - b).abs() < 1e-12 * a);
        let sup = s.norm(&f);
        assert!((sup.norm - a).abs() < 1e-12 * a);
    }

    #[test]
    fn field_matches_direct_evaluation() {
        let s = disk().with_exponent(4.0 / 3.0).unwrap();
        let f = SliceSeries::new(vec![
            Quaternion::new(0.3, -1.0, 0.2, 0.9),
            Quaternion::new(-0.7, 0.4, 1.1, -0.2),
            Quaternion::new(0.0, 0.5, -0.5, 1.5),
        ]);
        let field = SliceField::new(&f, s.grid());
        for unit in slice_sample(8) {
            let direct = s.norm_slice_pow(&f, unit);
            let fast = s.field_norm_pow(&field, unit);
            assert!((direct - fast).abs() < 1e-12 * direct, "{unit}");
        }
    }

    #[test]
    fn sup_dominates_members() {
        let s = disk().with_exponent(3.0).unwrap();
        let f = SliceSeries::new(vec![
            Quaternion::K,
            Quaternion::new(1.0, 0.0, 2.0, 0.0),
            Quaternion::I,
        ]);
        let sup = s.norm(&f);
        for unit in slice_sample(s.params().n_slices) {
            assert!(s.norm_slice(&f, unit) <= sup.norm * (1.0 + 1e-12));
        }
    }

    #[test]
    fn monomial_inner_products() {
        let s = disk();
        let unit = ImaginaryUnit::from_vector([0.2, 0.9, -0.3]).unwrap();
        for m in 0..6 {
            let qm = SliceSeries::monomial(m, Quaternion::ONE);
            let own = s.inner_product(&qm, &qm, unit);
            assert!(own.im_norm() < 1e-15);
            assert!((own.re() - disk_gram_simpson(1.0, m)).abs() < 1e-10);
            for n in m + 1..6 {
                let qn = SliceSeries::monomial(n, Quaternion::ONE);
                assert!(s.inner_product(&qm, &qn, unit).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn gram_table_examples() {
        let g = disk().gram_table().clone();
        assert!((g.diag[0] - (1.0 - (-1.0f64).exp())).abs() < 1e-13);
        assert!(g.diag.iter().all(|&d| d > 0.0));
        assert!(g.diag.windows(2).all(|w| w[1] < w[0]));

        let plane =
            FockSpace::new(FockParams::default().with_domain(Domain::Plane { radius: 8.0 }))
                .unwrap();
        assert!((plane.gram_table().diag[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn kernel_examples() {
        let s = disk();
        let q = Quaternion::new(0.2, 0.1, -0.4, 0.3);
        assert_eq!(s.kernel_eval(q, Quaternion::ZERO), Quaternion::ONE);

        // both arguments in ℂ_i: the complex kernel e^{α z w̄}
        let z = Complex64::new(0.3, 0.6);
        let w = Complex64::new(-0.5, 0.2);
        let expected = (z * w.conj()).exp();
        let got = s.kernel_eval(
            Quaternion::new(z.re, z.im, 0.0, 0.0),
            Quaternion::new(w.re, w.im, 0.0, 0.0),
        );
        assert!(got.max_abs_diff(Quaternion::new(expected.re, expected.im, 0.0, 0.0)) < 1e-15);

        let w = Quaternion::new(-0.1, 0.5, 0.3, -0.6);
        let lhs = s.kernel_eval(q, w);
        let rhs = s.kernel_eval(w, q).conj();
        assert!(lhs.max_abs_diff(rhs) < 1e-15);
    }

    #[test]
    fn corrected_kernel_examples() {
        let s = disk();
        let q = Quaternion::new(0.2, 0.1, -0.4, 0.3);
        let at_zero = s.corrected_kernel_eval(q, Quaternion::ZERO);
        assert!((at_zero.re() - 1.0 / (1.0 - (-1.0f64).exp())).abs() < 1e-12);
        assert!(at_zero.im_norm() == 0.0);

        let w = Quaternion::new(-0.1, 0.5, 0.3, -0.6);
        let lhs = s.corrected_kernel_eval(q, w);
        let rhs = s.corrected_kernel_eval(w, q).conj();
        assert!(lhs.max_abs_diff(rhs) < 1e-13);

        let plane =
            FockSpace::new(FockParams::default().with_domain(Domain::Plane { radius: 8.0 }))
                .unwrap();
        let a = plane.corrected_kernel_eval(q, w);
        let b = plane.kernel_eval(q, w);
        assert!(a.max_abs_diff(b) < 1e-10, "{a} vs {b}");
    }

    #[test]
    fn projection_reproduces_constants_and_rejects_bad_grids() {
        let plane =
            FockSpace::new(FockParams::default().with_domain(Domain::Plane { radius: 8.0 }))
                .unwrap();
        let unit = ImaginaryUnit::i();
        let ones = plane.grid().sample(unit, |_| Quaternion::ONE);
        let q = Quaternion::new(0.3, -0.2, 0.5, 0.1);
        let t = plane
            .project(&ones, q, unit, ProjectionKernel::Exponential)
            .unwrap();
        assert!(t.max_abs_diff(Quaternion::ONE) < 1e-8);

        let err = plane.project(&ones[1..], q, unit, ProjectionKernel::Exponential);
        assert!(matches!(err, Err(Error::GridMismatch { .. })));
    }

    #[test]
    fn corrected_projection_reproduces_disk_monomials() {
        let s = disk();
        let unit = ImaginaryUnit::j();
        let q = Quaternion::new(0.1, 0.4, -0.3, 0.5);
        for m in 0..=8 {
            let a = Quaternion::new(0.5, -1.0, 0.25, 2.0);
            let f = SliceSeries::monomial(m, a);
            let samples = s.grid().sample(unit, |w| f.eval(w));
            let t = s
                .project(&samples, q, unit, ProjectionKernel::GramCorrected)
                .unwrap();
            assert!(t.max_abs_diff(f.eval(q)) < 1e-12, "m = {m}");
        }
    }
}

//! The property checks run by `verify`.

use rand::Rng;

use crate::error::Result;
use crate::fock::oracle::gram_simpson;
use crate::fock::special::monomial_norm_sqr;
use crate::fock::{
    gaussian_mass_exact, Domain, FockParams, FockSpace, ProjectionKernel, SliceField,
};
use crate::quaternion::{ImaginaryUnit, Quaternion};
use crate::series::{star_pointwise_residual, SliceSeries};

use super::config::RunConfig;
use super::random::{
    derive_seed, gaussian_quaternion, imaginary_unit, point_in_ball, rng, series_from_rng,
    InstanceRng,
};
use super::report::{near_saturation, CheckResult, IDENTITY_TOL, INEQUALITY_SLACK};

/// Every check id accepted by `--checks`, sorted.
pub const CHECK_IDS: &[&str] = &[
    "dilation",
    "embedding",
    "growth",
    "hermiticity",
    "norm-sandwich",
    "orthogonality",
    "poly-density",
    "quad-calibration",
    "rep-formula",
    "reproducing-disk",
    "reproducing-plane",
    "split-roundtrip",
    "star-assoc",
    "star-conj-real",
    "star-pointwise",
    "star-reciprocal",
    "star-unit",
];

const REF_REPRESENTATION: &str = "P_I[f](x+yI_q)=½[(1-I_qI)f(x+yI)+(1+I_qI)f(x-yI)]";
const REF_SPLIT: &str = "f_I(z)=F(z)+L(z)J";
const REF_STAR: &str = "the regular product (or ⋆-product)";
const REF_CONJ: &str = "f^c(q) =∑ q^n a_n-bar";
const REF_RECIPROCAL: &str = "with respect to the ⋆-product";
const REF_POINTWISE: &str = "f(q) g(f(q)^{-1} qf(q))";
const REF_SANDWICH: &str = "have equivalent norms";
const REF_MEASURE: &str = "dλ_{α,I}(q)= (α/π) e^{−α|q|²} dA_I(q)";
const REF_ORTHO: &str = "is orthonormal in the";
const REF_GROWTH_NORMALIZED: &str = "growth rate estimation for entire slice";
const REF_GROWTH_BOUND: &str = "2^{p+1}e^{α/2|q|²}";
const REF_KERNEL: &str = "B_α(q,w)=e^{α q w̄}_⋆";
const REF_DILATION: &str = "lim_{r→1}‖f_r−f‖^p=0";
const REF_EMBEDDING: &str = "𝔉_α^p ⊂ 𝔉_α^u";
const REF_HERMITICITY: &str = "quaternionic hermiticity";
const REF_LINEARITY: &str = "right linearity";
const REF_DENSITY: &str = "slice regular Fock space is separable";
const PLUMBING: &str = "plumbing";

/// Runs one check by id. `id` must be one of [`CHECK_IDS`].
pub(crate) fn run_check(id: &str, cfg: &RunConfig) -> Result<Vec<CheckResult>> {
    match id {
        "rep-formula" => Ok(rep_formula(cfg)),
        "split-roundtrip" => Ok(split_roundtrip(cfg)),
        "star-assoc" => Ok(star_assoc(cfg)),
        "star-unit" => Ok(star_unit(cfg)),
        "star-conj-real" => Ok(star_conj_real(cfg)),
        "star-reciprocal" => star_reciprocal(cfg),
        "star-pointwise" => Ok(star_pointwise(cfg)),
        "norm-sandwich" => norm_sandwich(cfg),
        "quad-calibration" => quad_calibration(cfg),
        "orthogonality" => orthogonality(cfg),
        "growth" => growth(cfg),
        "reproducing-plane" => reproducing(
            cfg,
            cfg.plane_domain(),
            ProjectionKernel::Exponential,
            1e-6,
            "reproducing-plane",
            REF_KERNEL,
        ),
        "reproducing-disk" => reproducing(
            cfg,
            Domain::UnitDisk,
            ProjectionKernel::GramCorrected,
            1e-8,
            "reproducing-disk",
            PLUMBING,
        ),
        "dilation" => dilation(cfg),
        "embedding" => embedding(cfg),
        "hermiticity" => hermiticity(cfg),
        "poly-density" => poly_density(cfg),
        other => Err(crate::error::Error::UnknownCheck(other.to_string())),
    }
}

fn instance_rng(cfg: &RunConfig, label: &str, index: usize) -> InstanceRng {
    rng(derive_seed(cfg.seed, label, index as u64))
}

fn random_degree(r: &mut InstanceRng, max: usize) -> usize {
    r.random_range(0..=max)
}

/// Short label for an exponent: `4/3`, `3/2`, or the decimal form.
pub fn exponent_label(p: f64) -> String {
    if p == 4.0 / 3.0 {
        "4/3".into()
    } else if p == 1.5 {
        "3/2".into()
    } else {
        format!("{p}")
    }
}

fn coeff_diff(a: &SliceSeries, b: &SliceSeries) -> f64 {
    let n = a.coeffs().len().max(b.coeffs().len());
    (0..n)
        .map(|k| a.coeff(k).max_abs_diff(b.coeff(k)))
        .fold(0.0, f64::max)
}

fn rep_formula(cfg: &RunConfig) -> Vec<CheckResult> {
    let n = cfg.count(100);
    let mut worst: f64 = 0.0;
    for i in 0..n {
        let mut r = instance_rng(cfg, "rep-formula", i);
        let deg = random_degree(&mut r, cfg.max_degree);
        let f = series_from_rng(&mut r, deg);
        let unit = imaginary_unit(&mut r);
        let split = f.split(unit);
        for _ in 0..100 {
            let q = point_in_ball(&mut r);
            worst = worst.max((split.extend(q) - f.eval(q)).norm());
        }
    }
    vec![CheckResult::identity(
        "rep-formula",
        REF_REPRESENTATION,
        worst,
        1e-12,
        n * 100,
    )]
}

fn split_roundtrip(cfg: &RunConfig) -> Vec<CheckResult> {
    let n = cfg.count(200);
    let mut worst: f64 = 0.0;
    for i in 0..n {
        let mut r = instance_rng(cfg, "split-roundtrip", i);
        let deg = random_degree(&mut r, cfg.max_degree);
        let f = series_from_rng(&mut r, deg);
        let unit = imaginary_unit(&mut r);
        let back = f.split(unit).recombine();
        for (a, b) in f.coeffs().iter().zip(back.coeffs()) {
            worst = worst.max(a.max_abs_diff(*b) / a.norm().max(1.0));
        }
    }
    vec![CheckResult::identity(
        "split-roundtrip",
        REF_SPLIT,
        worst,
        1e-15,
        n,
    )]
}

fn star_assoc(cfg: &RunConfig) -> Vec<CheckResult> {
    let n = cfg.count(200);
    let mut worst: f64 = 0.0;
    for i in 0..n {
        let mut r = instance_rng(cfg, "star-assoc", i);
        let draw = |r: &mut InstanceRng| {
            let d = random_degree(r, 5.min(cfg.max_degree));
            series_from_rng(r, d)
        };
        let (f, g, h) = (draw(&mut r), draw(&mut r), draw(&mut r));
        let left = f.star_mul(&g).star_mul(&h);
        let right = f.star_mul(&g.star_mul(&h));
        worst = worst.max(coeff_diff(&left, &right));
    }
    vec![CheckResult::identity(
        "star-assoc",
        REF_STAR,
        worst,
        IDENTITY_TOL,
        n,
    )]
}

fn star_unit(cfg: &RunConfig) -> Vec<CheckResult> {
    let n = cfg.count(200);
    let one = SliceSeries::constant(Quaternion::ONE);
    let mut worst: f64 = 0.0;
    for i in 0..n {
        let mut r = instance_rng(cfg, "star-unit", i);
        let deg = random_degree(&mut r, cfg.max_degree);
        let f = series_from_rng(&mut r, deg);
        worst = worst
            .max(coeff_diff(&f.star_mul(&one), &f))
            .max(coeff_diff(&one.star_mul(&f), &f));
    }
    vec![CheckResult::identity(
        "star-unit",
        REF_STAR,
        worst,
        IDENTITY_TOL,
        n,
    )]
}

fn star_conj_real(cfg: &RunConfig) -> Vec<CheckResult> {
    let n = cfg.count(200);
    let mut worst: f64 = 0.0;
    for i in 0..n {
        let mut r = instance_rng(cfg, "star-conj-real", i);
        let deg = random_degree(&mut r, cfg.max_degree);
        let f = series_from_rng(&mut r, deg);
        let sym = f.star_mul(&f.regular_conjugate());
        worst = sym
            .coeffs()
            .iter()
            .map(|c| c.im_norm())
            .fold(worst, f64::max);
    }
    vec![CheckResult::identity(
        "star-conj-real",
        REF_CONJ,
        worst,
        IDENTITY_TOL,
        n,
    )]
}

/// Coefficient residuals of `f ⋆ r − 1` through `order`, each divided by
/// `max(1, Σ_k |a_k| |r_{n−k}|)`: the size of the terms that cancel. Rounding
/// the coefficients of `r` to doubles already leaves a residual of order
/// `ε · Σ_k |a_k| |r_{n−k}|`, so the absolute residual is unbounded over
/// ill-conditioned instances while the scaled one is not.
pub fn reciprocal_residuals(f: &SliceSeries, recip: &SliceSeries, order: usize) -> (f64, f64) {
    let prod = f.star_mul_capped(recip, order);
    let mut scaled: f64 = 0.0;
    let mut absolute: f64 = 0.0;
    for n in 0..=order {
        let target = if n == 0 {
            Quaternion::ONE
        } else {
            Quaternion::ZERO
        };
        let res = (prod.coeff(n) - target).norm();
        let scale: f64 = (0..=n)
            .map(|k| f.coeff(k).norm() * recip.coeff(n - k).norm())
            .sum();
        absolute = absolute.max(res);
        scaled = scaled.max(res / scale.max(1.0));
    }
    (scaled, absolute)
}

/// `n` random series with `|a_0| ≥ 0.1` for the reciprocal check.
pub fn reciprocal_instances(cfg: &RunConfig, n: usize) -> Vec<SliceSeries> {
    (0..n)
        .map(|i| {
            let mut r = instance_rng(cfg, "star-reciprocal", i);
            let deg = random_degree(&mut r, cfg.max_degree);
            let f = series_from_rng(&mut r, deg);
            let mut coeffs = f.coeffs().to_vec();
            while coeffs[0].norm() < 0.1 {
                coeffs[0] = gaussian_quaternion(&mut r);
            }
            SliceSeries::new(coeffs)
        })
        .collect()
}

fn star_reciprocal(cfg: &RunConfig) -> Result<Vec<CheckResult>> {
    let n = cfg.count(200);
    let order = cfg.max_degree;
    let mut worst: f64 = 0.0;
    for f in reciprocal_instances(cfg, n) {
        let recip = f.star_reciprocal(order)?;
        worst = worst.max(reciprocal_residuals(&f, &recip, order).0);
    }
    Ok(vec![CheckResult::identity(
        "star-reciprocal",
        REF_RECIPROCAL,
        worst,
        IDENTITY_TOL,
        n,
    )])
}

fn star_pointwise(cfg: &RunConfig) -> Vec<CheckResult> {
    let n = cfg.count(500);
    let zeros = n / 10;
    let mut worst: f64 = 0.0;
    for i in 0..n {
        let mut r = instance_rng(cfg, "star-pointwise", i);
        let (f, q) = if i < zeros {
            // f = (q − q0) ⋆ h vanishes at q0
            let q0 = point_in_ball(&mut r);
            let d = random_degree(&mut r, cfg.max_degree.saturating_sub(1));
            let h = series_from_rng(&mut r, d);
            (
                SliceSeries::new(vec![-q0, Quaternion::ONE]).star_mul(&h),
                q0,
            )
        } else {
            let d = random_degree(&mut r, cfg.max_degree);
            (series_from_rng(&mut r, d), point_in_ball(&mut r))
        };
        let d = random_degree(&mut r, cfg.max_degree);
        let g = series_from_rng(&mut r, d);
        worst = worst.max(star_pointwise_residual(&f, &g, q));
    }
    vec![CheckResult::identity(
        "star-pointwise",
        REF_POINTWISE,
        worst,
        IDENTITY_TOL,
        n,
    )]
}

pub const SWEEP_ALPHAS: [f64; 3] = [0.5, 1.0, 2.0];
pub const SWEEP_EXPONENTS: [f64; 3] = [4.0 / 3.0, 2.0, 3.0];

fn space(cfg: &RunConfig, alpha: f64, p: f64, domain: Domain) -> Result<FockSpace> {
    let params = FockParams {
        alpha,
        p,
        domain,
        ..cfg.params
    };
    FockSpace::new(params)
}

fn slice_sqr(f: &SliceSeries, space: &FockSpace, unit: ImaginaryUnit) -> Vec<f64> {
    space
        .grid()
        .nodes()
        .iter()
        .map(|n| f.eval(n.point(unit)).norm_sqr())
        .collect()
}

/// For every sampled `I`: `‖f‖_I^p ≤ ‖f‖^p ≤ 2^p ‖f‖_I^p`. The sampled
/// slices come from the affine field; the slice `i` and one random slice
/// are also integrated by direct evaluation.
fn norm_sandwich(cfg: &RunConfig) -> Result<Vec<CheckResult>> {
    let n = cfg.count(200);
    let spaces: Vec<Vec<FockSpace>> = SWEEP_ALPHAS
        .iter()
        .map(|&a| {
            let base = space(cfg, a, 2.0, cfg.domain())?;
            SWEEP_EXPONENTS
                .iter()
                .map(|&p| base.with_exponent(p))
                .collect()
        })
        .collect::<Result<_>>()?;
    let mut lower = vec![vec![Vec::new(); SWEEP_EXPONENTS.len()]; SWEEP_ALPHAS.len()];
    let mut upper = lower.clone();
    for i in 0..n {
        let mut r = instance_rng(cfg, "norm-sandwich", i);
        let deg = random_degree(&mut r, cfg.max_degree);
        let f = series_from_rng(&mut r, deg);
        let extra = imaginary_unit(&mut r);
        let probe = &spaces[0][0];
        let field = SliceField::new(&f, probe.grid());
        let direct_i = slice_sqr(&f, probe, ImaginaryUnit::i());
        let direct_extra = slice_sqr(&f, probe, extra);
        for (ai, row) in spaces.iter().enumerate() {
            for (pi, sp) in row.iter().enumerate() {
                let profile = sp.slice_profile(&field);
                let sup = profile.iter().map(|&(_, v)| v).fold(f64::MIN, f64::max);
                let min = profile.iter().map(|&(_, v)| v).fold(f64::MAX, f64::min);
                let c = 2f64.powf(sp.params().p);
                let at_i = sp.norm_pow_of_sqr(&direct_i)?;
                let at_extra = sp.norm_pow_of_sqr(&direct_extra)?;
                lower[ai][pi].push((at_i, sup));
                let up = &mut upper[ai][pi];
                up.push((sup, c * min));
                up.push((sup, c * at_i));
                up.push((sup, c * at_extra));
            }
        }
    }
    let mut records = Vec::new();
    for (ai, &a) in SWEEP_ALPHAS.iter().enumerate() {
        for (pi, &p) in SWEEP_EXPONENTS.iter().enumerate() {
            let label = exponent_label(p);
            for (side, constant, pairs) in [
                ("lower", 1.0, &lower[ai][pi]),
                ("upper", 2f64.powf(p), &upper[ai][pi]),
            ] {
                let mut rec = CheckResult::inequality(
                    format!("norm-sandwich/{side}/p={label}/alpha={a}"),
                    REF_SANDWICH,
                    constant,
                    INEQUALITY_SLACK,
                    pairs.iter().copied(),
                );
                rec.instances = n;
                records.push(rec);
            }
        }
    }
    Ok(records)
}

/// Gaussian mass and Gram diagonal (`m ≤ 12`) of the grid, and the
/// incomplete-gamma closed form, against adaptive Simpson.
fn quad_calibration(cfg: &RunConfig) -> Result<Vec<CheckResult>> {
    let domain = cfg.domain();
    let radius = domain.radius();
    let mut records = Vec::new();
    for &a in &SWEEP_ALPHAS {
        let sp = space(cfg, a, 2.0, domain)?;
        let rel = |x: f64, oracle: f64| (x - oracle).abs() / oracle.abs().max(1.0);
        let mass_oracle = gram_simpson(a, radius, 0);
        let mut worst = rel(sp.grid().gaussian_mass(a), mass_oracle)
            .max(rel(gaussian_mass_exact(domain, a), mass_oracle));
        for m in 0..=12 {
            let mono = SliceSeries::monomial(m, Quaternion::ONE);
            let grid = sp.inner_product(&mono, &mono, ImaginaryUnit::i()).re();
            let oracle = gram_simpson(a, radius, m);
            worst = worst
                .max(rel(grid, oracle))
                .max(rel(monomial_norm_sqr(domain, a, m), oracle));
        }
        records.push(CheckResult::identity(
            format!("quad-calibration/alpha={a}"),
            REF_MEASURE,
            worst,
            1e-9,
            14,
        ));
    }
    Ok(records)
}

fn orthogonality(cfg: &RunConfig) -> Result<Vec<CheckResult>> {
    let sp = space(cfg, cfg.params.alpha, 2.0, cfg.domain())?;
    let mut r = instance_rng(cfg, "orthogonality", 0);
    let units = [ImaginaryUnit::i(), imaginary_unit(&mut r)];
    let monos: Vec<SliceSeries> = (0..=12)
        .map(|m| SliceSeries::monomial(m, Quaternion::ONE))
        .collect();
    let mut worst: f64 = 0.0;
    for unit in units {
        let norms: Vec<f64> = monos
            .iter()
            .map(|f| sp.inner_product(f, f, unit).re().sqrt())
            .collect();
        for m in 0..monos.len() {
            for n in m + 1..monos.len() {
                let ip = sp.inner_product(&monos[m], &monos[n], unit).norm();
                worst = worst.max(ip / (norms[m] * norms[n]));
            }
        }
    }
    Ok(vec![CheckResult::identity(
        "orthogonality",
        REF_ORTHO,
        worst,
        IDENTITY_TOL,
        2 * 78,
    )])
}

/// Growth estimates on the truncated plane, at points of 𝔹.
fn growth(cfg: &RunConfig) -> Result<Vec<CheckResult>> {
    let n = cfg.count(100);
    let alpha = cfg.params.alpha;
    let base = space(cfg, alpha, 2.0, cfg.plane_domain())?;
    let spaces: Vec<FockSpace> = SWEEP_EXPONENTS
        .iter()
        .map(|&p| base.with_exponent(p))
        .collect::<Result<_>>()?;
    let mut normalized = vec![Vec::new(); spaces.len()];
    let mut bound = vec![Vec::new(); spaces.len()];
    for i in 0..n {
        let mut r = instance_rng(cfg, "growth", i);
        let deg = random_degree(&mut r, cfg.max_degree);
        let f = series_from_rng(&mut r, deg);
        let field = SliceField::new(&f, base.grid());
        let values: Vec<(f64, f64)> = (0..500)
            .map(|_| {
                let q = point_in_ball(&mut r);
                (f.eval(q).norm(), (0.5 * alpha * q.norm_sqr()).exp())
            })
            .collect();
        for (k, sp) in spaces.iter().enumerate() {
            let norm = sp.norm_of_field(&field).norm;
            let c = 2f64.powf(sp.params().p + 1.0);
            let worst = values
                .iter()
                .map(|&(v, w)| v / (w * norm))
                .fold(0.0, f64::max);
            normalized[k].push((worst, 2.0));
            bound[k].extend(values.iter().map(|&(v, w)| (v, c * w * norm)));
        }
    }
    let mut records = Vec::new();
    for (k, &p) in SWEEP_EXPONENTS.iter().enumerate() {
        let label = exponent_label(p);
        let mut rec = CheckResult::inequality(
            format!("growth-normalized/p={label}"),
            REF_GROWTH_NORMALIZED,
            2.0,
            0.5e-6,
            normalized[k].iter().copied(),
        );
        rec.instances = n * 500;
        records.push(rec);
        let mut rec = CheckResult::inequality(
            format!("growth-bound/p={label}"),
            REF_GROWTH_BOUND,
            2f64.powf(p + 1.0),
            INEQUALITY_SLACK,
            bound[k].iter().copied(),
        );
        rec.instances = n * 500;
        records.push(rec);
    }
    Ok(records)
}

/// `T q^m = q^m` for `m ≤ 8` at random points of 𝔹.
fn reproducing(
    cfg: &RunConfig,
    domain: Domain,
    kernel: ProjectionKernel,
    tol: f64,
    id: &str,
    reference: &str,
) -> Result<Vec<CheckResult>> {
    let sp = space(cfg, cfg.params.alpha, 2.0, domain)?;
    let mut r = instance_rng(cfg, id, 0);
    let unit = imaginary_unit(&mut r);
    let points: Vec<Quaternion> = (0..cfg.count(20)).map(|_| point_in_ball(&mut r)).collect();
    let mut worst: f64 = 0.0;
    for m in 0..=8 {
        let mono = SliceSeries::monomial(m, Quaternion::ONE);
        let samples = sp.grid().sample(unit, |w| mono.eval(w));
        for &q in &points {
            let t = sp.project(&samples, q, unit, kernel)?;
            worst = worst.max((t - mono.eval(q)).norm());
        }
    }
    Ok(vec![CheckResult::identity(
        id,
        reference,
        worst,
        tol,
        9 * points.len(),
    )])
}

pub const DILATION_RADII: [f64; 3] = [0.9, 0.99, 0.999];

/// `‖f_r − f‖` for `r` in [`DILATION_RADII`] and `‖f‖`.
pub fn dilation_profile(sp: &FockSpace, f: &SliceSeries) -> Result<([f64; 3], f64)> {
    let mut d = [0.0; 3];
    for (slot, &r) in d.iter_mut().zip(&DILATION_RADII) {
        *slot = sp.norm(&f.dilate(r)?.sub(f)).norm;
    }
    Ok((d, sp.norm(f).norm))
}

fn dilation(cfg: &RunConfig) -> Result<Vec<CheckResult>> {
    let n = cfg.count(50);
    let sp = space(cfg, cfg.params.alpha, cfg.params.p, cfg.domain())?;
    let mut monotone = Vec::new();
    let mut limit = Vec::new();
    for i in 0..n {
        let mut r = instance_rng(cfg, "dilation", i);
        let f = series_from_rng(&mut r, cfg.max_degree);
        let (d, norm) = dilation_profile(&sp, &f)?;
        monotone.push((d[1], d[0]));
        monotone.push((d[2], d[1]));
        limit.push((d[2], 1e-3 * norm));
    }
    let mut mono = CheckResult::inequality("dilation-monotone", REF_DILATION, 1.0, 0.0, monotone);
    mono.instances = n;
    let mut lim = CheckResult::inequality("dilation-limit", REF_DILATION, 1e-3, 0.0, limit);
    lim.instances = n;
    Ok(vec![mono, lim])
}

pub const EMBEDDING_PAIRS: [(f64, f64); 3] = [(4.0 / 3.0, 4.0), (1.5, 3.0), (2.0, 2.0)];

/// `‖f‖_u^u ≤ 2^{u+1}(u/p)‖f‖_p^u` on the truncated plane.
fn embedding(cfg: &RunConfig) -> Result<Vec<CheckResult>> {
    let n = cfg.count(100);
    let base = space(cfg, cfg.params.alpha, 2.0, cfg.plane_domain())?;
    let mut records = Vec::new();
    let mut pairs = vec![Vec::new(); EMBEDDING_PAIRS.len()];
    let spaces: Vec<(FockSpace, FockSpace)> = EMBEDDING_PAIRS
        .iter()
        .map(|&(p, u)| Ok((base.with_exponent(p)?, base.with_exponent(u)?)))
        .collect::<Result<_>>()?;
    for i in 0..n {
        let mut r = instance_rng(cfg, "embedding", i);
        let deg = random_degree(&mut r, cfg.max_degree);
        let f = series_from_rng(&mut r, deg);
        let field = SliceField::new(&f, base.grid());
        for (k, ((sp, su), &(p, u))) in spaces.iter().zip(&EMBEDDING_PAIRS).enumerate() {
            let lhs = su.norm_of_field(&field).power;
            let rhs = 2f64.powf(u + 1.0) * u / p * sp.norm_of_field(&field).norm.powf(u);
            pairs[k].push((lhs, rhs));
        }
    }
    for (k, &(p, u)) in EMBEDDING_PAIRS.iter().enumerate() {
        let mut rec = CheckResult::inequality(
            format!("embedding/p={}/u={}", exponent_label(p), exponent_label(u)),
            REF_EMBEDDING,
            2f64.powf(u + 1.0) * u / p,
            INEQUALITY_SLACK,
            pairs[k].iter().copied(),
        );
        rec.near_saturation = near_saturation(&pairs[k]);
        records.push(rec);
    }
    Ok(records)
}

/// Residuals are divided by `‖f‖‖g‖` (resp. `‖f‖(‖g‖|a| + ‖h‖)`), the
/// Cauchy–Schwarz size of the products involved.
fn hermiticity(cfg: &RunConfig) -> Result<Vec<CheckResult>> {
    let n = cfg.count(50);
    let sp = space(cfg, cfg.params.alpha, 2.0, cfg.domain())?;
    let mut herm: f64 = 0.0;
    let mut lin: f64 = 0.0;
    for i in 0..n {
        let mut r = instance_rng(cfg, "hermiticity", i);
        let draw = |r: &mut InstanceRng| {
            let d = random_degree(r, cfg.max_degree);
            series_from_rng(r, d)
        };
        let (f, g, h) = (draw(&mut r), draw(&mut r), draw(&mut r));
        let a = gaussian_quaternion(&mut r);
        let unit = imaginary_unit(&mut r);
        let ip = |x: &SliceSeries, y: &SliceSeries| sp.inner_product(x, y, unit);
        let nf = ip(&f, &f).re().sqrt();
        let ng = ip(&g, &g).re().sqrt();
        let nh = ip(&h, &h).re().sqrt();
        let fg = ip(&f, &g);
        herm = herm.max((fg - ip(&g, &f).conj()).norm() / (nf * ng));
        let combo = g.scale_right(a).add(&h);
        let res = (ip(&f, &combo) - (fg * a + ip(&f, &h))).norm();
        lin = lin.max(res / (nf * (ng * a.norm() + nh)));
    }
    Ok(vec![
        CheckResult::identity("hermiticity", REF_HERMITICITY, herm, IDENTITY_TOL, n),
        CheckResult::identity("right-linearity", REF_LINEARITY, lin, IDENTITY_TOL, n),
    ])
}

/// Truncation errors `‖f − f|_{≤m}‖` for `m = 0..=20` of a degree-20 series
/// with coefficients `g_n √(αⁿ/n!)`.
pub fn density_profile(cfg: &RunConfig) -> Result<Vec<f64>> {
    let alpha = cfg.params.alpha;
    let sp = space(cfg, alpha, cfg.params.p, cfg.domain())?;
    let mut r = instance_rng(cfg, "poly-density", 0);
    let mut w = 1.0;
    let coeffs = (0..=20)
        .map(|n| {
            if n > 0 {
                w *= (alpha / n as f64).sqrt();
            }
            gaussian_quaternion(&mut r) * w
        })
        .collect();
    let f = SliceSeries::new(coeffs);
    Ok((0..=20)
        .map(|m| sp.norm(&f.sub(&f.truncate(m))).norm)
        .collect())
}

fn poly_density(cfg: &RunConfig) -> Result<Vec<CheckResult>> {
    let errs = density_profile(cfg)?;
    let rise = errs.windows(2).map(|w| w[1] - w[0]).fold(0.0, f64::max);
    let mut limit = CheckResult::inequality(
        "poly-density-limit",
        REF_DENSITY,
        1e-6,
        0.0,
        [(errs[20], 1e-6)],
    );
    limit.instances = 1;
    Ok(vec![
        CheckResult::identity(
            "poly-density-monotone",
            REF_DENSITY,
            rise,
            IDENTITY_TOL,
            errs.len(),
        ),
        limit,
    ])
}

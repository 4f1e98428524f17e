//! Closed forms for Gaussian moments on disks.

use super::params::Domain;

/// Lower incomplete gamma `γ(s, x) = ∫₀ˣ t^{s−1} e^{−t} dt` for `s > 0`,
/// `x ≥ 0`, from the positive series `x^s e^{−x} Σ_k x^k / (s)_{k+1}`.
pub fn lower_incomplete_gamma(s: f64, x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    let mut term = 1.0 / s;
    let mut sum = term;
    let mut k = 1.0;
    while term > 1e-17 * sum {
        term *= x / (s + k);
        sum += term;
        k += 1.0;
    }
    (s * x.ln() - x).exp() * sum
}

/// `e^{−x} Σ_{k≤m} x^k/k!`, the share of `Γ(m+1)` lying beyond `x`.
pub fn upper_regularized_gamma_int(m: usize, x: f64) -> f64 {
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..=m {
        term *= x / k as f64;
        sum += term;
    }
    (-x).exp() * sum
}

/// Squared norm `∫ |z|^{2m} dλ_α` of `z^m` over the domain:
/// `γ(m+1, α R²)/α^m`.
pub fn monomial_norm_sqr(domain: Domain, alpha: f64, m: usize) -> f64 {
    let r = domain.radius();
    lower_incomplete_gamma(m as f64 + 1.0, alpha * r * r) / alpha.powi(m as i32)
}

/// Whole-plane limit `m!/α^m`.
pub fn monomial_norm_sqr_plane(alpha: f64, m: usize) -> f64 {
    (1..=m).fold(1.0, |acc, k| acc * k as f64 / alpha)
}

/// Relative deficit `1 − γ(m+1, αR²)/m!` of the truncated plane against the
/// whole plane, for monomials of degree `m`.
pub fn plane_tail(domain: Domain, alpha: f64, m: usize) -> f64 {
    let r = domain.radius();
    upper_regularized_gamma_int(m, alpha * r * r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let x = 0.7f64;
        assert!((lower_incomplete_gamma(1.0, x) - (1.0 - (-x).exp())).abs() < 1e-16);
        // γ(2, x) = 1 − (1 + x) e^{−x}
        assert!((lower_incomplete_gamma(2.0, x) - (1.0 - (1.0 + x) * (-x).exp())).abs() < 1e-16);
        assert_eq!(lower_incomplete_gamma(3.0, 0.0), 0.0);
    }

    #[test]
    fn large_argument_tends_to_factorial() {
        assert!((lower_incomplete_gamma(5.0, 80.0) - 24.0).abs() < 1e-12);
        assert!((monomial_norm_sqr_plane(2.0, 3) - 6.0 / 8.0).abs() < 1e-16);
    }

    #[test]
    fn tail_plus_body_is_factorial() {
        let d = Domain::Plane { radius: 3.0 };
        for m in 0..10 {
            let body = monomial_norm_sqr(d, 1.0, m);
            let whole = monomial_norm_sqr_plane(1.0, m);
            let tail = plane_tail(d, 1.0, m);
            assert!((body / whole + tail - 1.0).abs() < 1e-13, "m = {m}");
        }
    }
}

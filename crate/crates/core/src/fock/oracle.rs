//! Reference values computed by routes independent of the polar grid.

/// Adaptive Simpson quadrature of `f` on `[a, b]` to absolute tolerance `tol`.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    simpson_step(f, a, b, fa, fm, fb, whole, tol, 50)
}

#[allow(clippy::too_many_arguments)]
fn simpson_step<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
        + simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
}

/// `γ(m+1, x)` by adaptive Simpson on `t^m e^{−t}`.
pub fn incomplete_gamma_simpson(m: usize, x: f64) -> f64 {
    adaptive_simpson(&|t: f64| t.powi(m as i32) * (-t).exp(), 0.0, x, 1e-12)
}

/// `‖z^m‖²` under `dλ_α` on the unit disk, `γ(m+1, α)/α^m`, via Simpson on
/// `(t/α)^m e^{−t}` so the tolerance applies to the result itself.
pub fn disk_gram_simpson(alpha: f64, m: usize) -> f64 {
    gram_simpson(alpha, 1.0, m)
}

/// `‖z^m‖²` under `dλ_α` on the disk of radius `radius`,
/// `R^{2m} ∫₀^{αR²} (t/αR²)^m e^{−t} dt`. The integrand stays in `[0, 1]`.
pub fn gram_simpson(alpha: f64, radius: f64, m: usize) -> f64 {
    let x = alpha * radius * radius;
    let r2m = (radius * radius).powi(m as i32);
    r2m * adaptive_simpson(&|t: f64| (t / x).powi(m as i32) * (-t).exp(), 0.0, x, 1e-12)
}

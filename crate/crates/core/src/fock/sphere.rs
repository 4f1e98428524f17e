use std::f64::consts::PI;

use crate::quaternion::ImaginaryUnit;

/// The coordinate units `i, j, k` followed by an `n`-point Fibonacci lattice
/// on 𝕊.
pub fn slice_sample(n: usize) -> Vec<ImaginaryUnit> {
    let mut out = vec![ImaginaryUnit::i(), ImaginaryUnit::j(), ImaginaryUnit::k()];
    out.extend(fibonacci_sphere(n));
    out
}

/// `n` nearly uniform points on the unit sphere, spiraling from the north
/// pole with the golden angle.
pub fn fibonacci_sphere(n: usize) -> Vec<ImaginaryUnit> {
    let golden_angle = PI * (3.0 - 5f64.sqrt());
    (0..n)
        .map(|k| {
            let z = 1.0 - (2.0 * k as f64 + 1.0) / n as f64;
            let rho = (1.0 - z * z).max(0.0).sqrt();
            let phi = golden_angle * k as f64;
            ImaginaryUnit::from_vector([rho * phi.cos(), rho * phi.sin(), z])
                .expect("points lie on the unit sphere")
        })
        .collect()
}

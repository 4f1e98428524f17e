//! Seeded instance generation.
//!
//! All randomness comes from `ChaCha8Rng::seed_from_u64`; normal variates use
//! `rand_distr::StandardNormal`. Both are portable and value-stable, so a
//! seed pins the same instances on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::quaternion::{ImaginaryUnit, Quaternion};
use crate::series::SliceSeries;

pub type InstanceRng = ChaCha8Rng;

/// SplitMix64 finalizer.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Sub-seed for instance `index` of the stream named `label`.
pub fn derive_seed(seed: u64, label: &str, index: u64) -> u64 {
    // FNV-1a over the label
    let h = label.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0000_0100_0000_01b3)
    });
    mix(mix(seed ^ h).wrapping_add(index))
}

pub fn rng(seed: u64) -> InstanceRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gaussian_quaternion<R: Rng + ?Sized>(rng: &mut R) -> Quaternion {
    Quaternion::new(
        rng.sample(StandardNormal),
        rng.sample(StandardNormal),
        rng.sample(StandardNormal),
        rng.sample(StandardNormal),
    )
}

/// Series of degree exactly `degree` with i.i.d. standard normal components.
pub fn random_series(seed: u64, degree: usize) -> SliceSeries {
    let mut r = rng(seed);
    series_from_rng(&mut r, degree)
}

pub fn series_from_rng<R: Rng + ?Sized>(rng: &mut R, degree: usize) -> SliceSeries {
    SliceSeries::new((0..=degree).map(|_| gaussian_quaternion(rng)).collect())
}

/// Uniform point of the open unit ball 𝔹 ⊂ ℍ.
pub fn point_in_ball<R: Rng + ?Sized>(rng: &mut R) -> Quaternion {
    loop {
        let g = gaussian_quaternion(rng);
        let n = g.norm();
        if n > 0.0 {
            let radius: f64 = rng.random::<f64>().powf(0.25);
            return g * (radius / n);
        }
    }
}

/// Uniform point of 𝕊.
pub fn imaginary_unit<R: Rng + ?Sized>(rng: &mut R) -> ImaginaryUnit {
    loop {
        let v = [
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
        ];
        if let Ok(u) = ImaginaryUnit::from_vector(v) {
            return u;
        }
    }
}

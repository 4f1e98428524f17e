//! Quaternionic slice-regular power series and numerics for slice
//! hyperholomorphic Fock spaces with Gaussian weight.
//!
//! * [`quaternion`]: ℍ arithmetic, imaginary units, slice coordinates.
//! * [`series`]: truncated series `Σ qⁿ aₙ`, the ⋆-algebra, splitting onto a
//!   slice and extension back to ℍ.
//! * [`fock`]: polar Gaussian quadrature on a slice, Fock p-norms, the inner
//!   product, Gram data, reproducing kernels and the projection.
//! * [`harness`]: seeded random instances and the property-check suite with
//!   JSON/CSV reports.

pub mod error;
pub mod fock;
pub mod harness;
pub mod quaternion;
pub mod series;

pub use error::{Error, Result};
pub use quaternion::{decompose_basis, recombine_basis, ImaginaryUnit, Quaternion, SliceCoords};
pub use series::{star_pointwise_residual, SliceSeries, SplitPair};

//! Gaussian-weighted Fock-space numerics on slices `ℂ_I`.

pub mod oracle;
mod params;
mod quadrature;
mod space;
pub mod special;
mod sphere;

pub use params::{Domain, FockParams};
pub use quadrature::{gaussian_mass_exact, GridNode, QuadratureGrid};
pub use space::{FockSpace, GramTable, ProjectionKernel, SliceField, SupNorm};
pub use sphere::{fibonacci_sphere, slice_sample};

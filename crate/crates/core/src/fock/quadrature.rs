use std::f64::consts::PI;

use gauss_quad::legendre::GaussLegendre;

use super::params::{Domain, FockParams};
use crate::error::{Error, Result};
use crate::quaternion::{ImaginaryUnit, Quaternion};

/// One node `r e^{Iθ}` of the polar grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridNode {
    pub radius: f64,
    pub angle: f64,
    pub cos: f64,
    pub sin: f64,
    /// Lebesgue area weight `w_r · r · 2π/n_θ`.
    pub weight: f64,
}

impl GridNode {
    /// The node as a point of `ℂ_I`.
    #[inline]
    pub fn point(&self, unit: ImaginaryUnit) -> Quaternion {
        unit.embed(self.radius * self.cos, self.radius * self.sin)
    }

    /// Gaussian density `(α/π) e^{−α r²}` at the node.
    #[inline]
    pub fn gaussian_density(&self, alpha: f64) -> f64 {
        alpha / PI * (-alpha * self.radius * self.radius).exp()
    }
}

/// Tensor polar grid on a disk of `ℂ_I`: Gauss–Legendre in the radius,
/// uniform trapezoid in the angle.
///
/// Node `k` of each ring sits at `θ_k = 2πk/n_θ`, so the grid is closed under
/// `θ ↦ −θ` (conjugation `z ↦ z̄`). Nodes are stored ring by ring.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureGrid {
    nodes: Vec<GridNode>,
    r_max: f64,
    n_r: usize,
    n_theta: usize,
}

impl QuadratureGrid {
    pub fn build(params: &FockParams) -> Result<Self> {
        params.validate()?;
        let r_max = params.domain.radius();
        let rule = GaussLegendre::new(params.n_r).map_err(|e| Error::Config(e.to_string()))?;
        let dtheta = 2.0 * PI / params.n_theta as f64;
        let mut radial: Vec<(f64, f64)> = rule
            .as_node_weight_pairs()
            .iter()
            .map(|&(x, w)| (0.5 * r_max * (x + 1.0), 0.5 * r_max * w))
            .collect();
        radial.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut nodes = Vec::with_capacity(params.n_r * params.n_theta);
        for &(r, wr) in &radial {
            for k in 0..params.n_theta {
                let angle = k as f64 * dtheta;
                let (sin, cos) = angle.sin_cos();
                nodes.push(GridNode {
                    radius: r,
                    angle,
                    cos,
                    sin,
                    weight: wr * r * dtheta,
                });
            }
        }
        Ok(Self {
            nodes,
            r_max,
            n_r: params.n_r,
            n_theta: params.n_theta,
        })
    }

    pub fn nodes(&self) -> &[GridNode] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn r_max(&self) -> f64 {
        self.r_max
    }

    pub fn resolution(&self) -> (usize, usize) {
        (self.n_r, self.n_theta)
    }

    /// Index of the node mirrored under `θ ↦ −θ`.
    pub fn conjugate_index(&self, idx: usize) -> usize {
        let ring = idx / self.n_theta;
        let k = idx % self.n_theta;
        ring * self.n_theta + (self.n_theta - k) % self.n_theta
    }

    /// `Σ w · (α/π) e^{−α r²}`, the Gaussian mass `λ_{α,I}` of the domain.
    pub fn gaussian_mass(&self, alpha: f64) -> f64 {
        self.nodes
            .iter()
            .map(|n| n.weight * n.gaussian_density(alpha))
            .sum()
    }

    /// Samples `f` at every node of the slice `ℂ_I`.
    pub fn sample<F>(&self, unit: ImaginaryUnit, mut f: F) -> Vec<Quaternion>
    where
        F: FnMut(Quaternion) -> Quaternion,
    {
        self.nodes.iter().map(|n| f(n.point(unit))).collect()
    }
}

/// Exact Gaussian mass of the domain: `1 − e^{−α R²}`.
pub fn gaussian_mass_exact(domain: Domain, alpha: f64) -> f64 {
    let r = domain.radius();
    -(-alpha * r * r).exp_m1()
}

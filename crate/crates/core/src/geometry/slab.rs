//! Anisotropic slabs: wide along the tangent space, thin along the normals.

use super::manifold::ParametricManifold;
use crate::error::{Error, Result};
use crate::linalg;

/// A closed box centered at a manifold point, with halfwidth b1*sqrt(eps)
/// along each tangent direction and b2*eps along each normal direction.
#[derive(Debug, Clone)]
pub struct Slab {
    pub center: Vec<f64>,
    pub tangent_basis: Vec<Vec<f64>>,
    pub normal_basis: Vec<Vec<f64>>,
    pub tangent_halfwidth: f64,
    pub normal_halfwidth: f64,
}

impl Slab {
    pub fn ambient_dim(&self) -> usize {
        self.center.len()
    }

    /// Radius of the smallest ball containing the slab.
    pub fn circumradius(&self) -> f64 {
        let t = self.tangent_halfwidth * self.tangent_halfwidth * self.tangent_basis.len() as f64;
        let n = self.normal_halfwidth * self.normal_halfwidth * self.normal_basis.len() as f64;
        (t + n).sqrt()
    }

    /// Volume of the slab.
    pub fn volume(&self) -> f64 {
        (2.0 * self.tangent_halfwidth).powi(self.tangent_basis.len() as i32)
            * (2.0 * self.normal_halfwidth).powi(self.normal_basis.len() as i32)
    }
}

/// Slab at `embed(u)`: tangent basis from the orthonormalized jacobian
/// columns, normal basis the orthonormal complement.
pub fn build_slab(
    m: &ParametricManifold,
    chart: usize,
    u: &[f64],
    eps: f64,
    b1: f64,
    b2: f64,
) -> Result<Slab> {
    if eps <= 0.0 || b1 <= 0.0 || b2 <= 0.0 {
        return Err(Error::InvalidParameter(
            "slab needs eps, b1, b2 all > 0".into(),
        ));
    }
    let ch = &m.charts[chart];
    let jac = ch.jacobian(u);
    let tangent_basis = linalg::orthonormalize(&jac).ok_or_else(|| {
        let (lo, _) = linalg::singular_range(&jac);
        Error::RankDeficient {
            chart,
            sigma_min: lo,
        }
    })?;
    let full = linalg::complete_basis(&tangent_basis, m.ambient_dim);
    let normal_basis = full[tangent_basis.len()..].to_vec();
    Ok(Slab {
        center: ch.embed(u),
        tangent_basis,
        normal_basis,
        tangent_halfwidth: b1 * eps.sqrt(),
        normal_halfwidth: b2 * eps,
    })
}

/// Closed-slab membership: |tangent coordinates| <= b1*sqrt(eps) and
/// |normal coordinates| <= b2*eps componentwise.
pub fn slab_membership(slab: &Slab, x: &[f64]) -> Result<bool> {
    if x.len() != slab.ambient_dim() {
        return Err(Error::DimMismatch {
            expected: slab.ambient_dim(),
            got: x.len(),
        });
    }
    let rel = linalg::sub(x, &slab.center);
    for t in &slab.tangent_basis {
        if linalg::dot(&rel, t).abs() > slab.tangent_halfwidth {
            return Ok(false);
        }
    }
    for n in &slab.normal_basis {
        if linalg::dot(&rel, n).abs() > slab.normal_halfwidth {
            return Ok(false);
        }
    }
    Ok(true)
}

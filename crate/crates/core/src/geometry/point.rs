//! Point clouds in R^D.

use crate::error::{Error, Result};

/// A finite set of points with a common ambient dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct PointCloud {
    dim: usize,
    points: Vec<Vec<f64>>,
}

impl PointCloud {
    pub fn new(dim: usize, points: Vec<Vec<f64>>) -> Result<Self> {
        for p in &points {
            if p.len() != dim {
                return Err(Error::DimMismatch {
                    expected: dim,
                    got: p.len(),
                });
            }
            if p.iter().any(|x| !x.is_finite()) {
                return Err(Error::NonFinite("point cloud coordinate"));
            }
        }
        Ok(Self { dim, points })
    }

    pub fn empty(dim: usize) -> Self {
        Self {
            dim,
            points: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn push(&mut self, p: Vec<f64>) -> Result<()> {
        if p.len() != self.dim {
            return Err(Error::DimMismatch {
                expected: self.dim,
                got: p.len(),
            });
        }
        self.points.push(p);
        Ok(())
    }

    /// Points inside the closed box, as a new cloud.
    pub fn clipped_to_box(&self, bounds: &[(f64, f64)]) -> Self {
        let points = self
            .points
            .iter()
            .filter(|p| {
                p.iter()
                    .zip(bounds)
                    .all(|(x, (lo, hi))| *x >= *lo && *x <= *hi)
            })
            .cloned()
            .collect();
        Self {
            dim: self.dim,
            points,
        }
    }
}

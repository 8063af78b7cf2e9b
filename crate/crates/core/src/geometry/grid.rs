//! Axis-aligned evaluation grids over compact boxes.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridAxis {
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

/// Tensor grid of nodes: `count` equally spaced values per axis, endpoints
/// included, spacing (max-min)/(count-1).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    axes: Vec<GridAxis>,
}

impl Grid {
    pub fn new(axes: Vec<GridAxis>) -> Result<Self> {
        for ax in &axes {
            if ax.count < 2 {
                return Err(Error::InvalidParameter(
                    "grid axis needs at least 2 nodes".into(),
                ));
            }
            if !(ax.min < ax.max) {
                return Err(Error::InvalidParameter("grid axis min must be < max".into()));
            }
        }
        Ok(Self { axes })
    }

    /// Grid over `bounds` with node spacing at most `spacing` per axis.
    pub fn with_spacing(bounds: &[(f64, f64)], spacing: f64) -> Result<Self> {
        let axes = bounds
            .iter()
            .map(|&(min, max)| {
                let count = (((max - min) / spacing).ceil() as usize + 1).max(2);
                GridAxis { min, max, count }
            })
            .collect();
        Self::new(axes)
    }

    pub fn dim(&self) -> usize {
        self.axes.len()
    }

    pub fn axes(&self) -> &[GridAxis] {
        &self.axes
    }

    pub fn spacing(&self, axis: usize) -> f64 {
        let ax = &self.axes[axis];
        (ax.max - ax.min) / (ax.count - 1) as f64
    }

    /// Volume element associated with one node.
    pub fn cell_volume(&self) -> f64 {
        (0..self.dim()).map(|a| self.spacing(a)).product()
    }

    pub fn len(&self) -> usize {
        self.axes.iter().map(|a| a.count).product()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Node coordinates for a flat index (row-major, last axis fastest).
    pub fn node(&self, mut flat: usize) -> Vec<f64> {
        let mut idx = vec![0usize; self.dim()];
        for a in (0..self.dim()).rev() {
            idx[a] = flat % self.axes[a].count;
            flat /= self.axes[a].count;
        }
        idx.iter()
            .enumerate()
            .map(|(a, &i)| self.axes[a].min + self.spacing(a) * i as f64)
            .collect()
    }

    pub fn bounds(&self) -> Vec<(f64, f64)> {
        self.axes.iter().map(|a| (a.min, a.max)).collect()
    }

    pub fn contains(&self, p: &[f64]) -> bool {
        p.iter()
            .zip(&self.axes)
            .all(|(x, a)| *x >= a.min && *x <= a.max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spacing_and_nodes() {
        let g = Grid::new(vec![
            GridAxis {
                min: 0.0,
                max: 1.0,
                count: 5,
            },
            GridAxis {
                min: -1.0,
                max: 1.0,
                count: 3,
            },
        ])
        .unwrap();
        assert_eq!(g.spacing(0), 0.25);
        assert_eq!(g.spacing(1), 1.0);
        assert_eq!(g.len(), 15);
        assert_eq!(g.node(0), vec![0.0, -1.0]);
        assert_eq!(g.node(1), vec![0.0, 0.0]);
        assert_eq!(g.node(14), vec![1.0, 1.0]);
    }

    #[test]
    fn degenerate_axis_rejected() {
        assert!(Grid::new(vec![GridAxis {
            min: 0.0,
            max: 1.0,
            count: 1
        }])
        .is_err());
    }
}

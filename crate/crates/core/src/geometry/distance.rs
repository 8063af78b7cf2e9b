//! Point-to-manifold distance and Hausdorff distance between manifolds, both
//! with explicit accuracy bounds.

use super::hausdorff::hausdorff_distance;
use super::manifold::ParametricManifold;
use super::point::PointCloud;
use crate::error::{Error, Result};
use crate::linalg;
use std::cmp::Ordering;
use std::collections::BinaryHeap;

/// A value together with the numerical error bound it was computed under.
#[derive(Debug, Clone, Copy)]
pub struct BoundedValue {
    pub value: f64,
    pub bound: f64,
}

struct Cell {
    chart: usize,
    center: Vec<f64>,
    halfwidths: Vec<f64>,
    lower: f64,
}

impl PartialEq for Cell {
    fn eq(&self, other: &Self) -> bool {
        self.lower == other.lower
    }
}
impl Eq for Cell {}
impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Cell {
    fn cmp(&self, other: &Self) -> Ordering {
        // min-heap on the lower bound
        other
            .lower
            .partial_cmp(&self.lower)
            .unwrap_or(Ordering::Equal)
    }
}

/// Distance from `x` to the manifold, to within `tol`, by branch-and-bound
/// over parameter cells with Lipschitz pruning. The returned value is the
/// distance to an actual manifold point, so it always upper-bounds the true
/// distance and exceeds it by at most `tol`.
pub fn distance_to_manifold(x: &[f64], m: &ParametricManifold, tol: f64) -> Result<f64> {
    if x.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite("query point"));
    }
    if x.len() != m.ambient_dim {
        return Err(Error::DimMismatch {
            expected: m.ambient_dim,
            got: x.len(),
        });
    }
    if tol <= 0.0 {
        return Err(Error::InvalidParameter("tol must be > 0".into()));
    }
    let lip = m.lipschitz().max(1e-12);
    let mut heap = BinaryHeap::new();
    let mut best = f64::INFINITY;
    for (ci, chart) in m.charts.iter().enumerate() {
        let center: Vec<f64> = chart
            .param_box
            .iter()
            .map(|&(lo, hi)| 0.5 * (lo + hi))
            .collect();
        let halfwidths: Vec<f64> = chart
            .param_box
            .iter()
            .map(|&(lo, hi)| 0.5 * (hi - lo))
            .collect();
        let d = linalg::dist(x, &chart.embed(&center));
        best = best.min(d);
        let radius = linalg::norm(&halfwidths);
        heap.push(Cell {
            chart: ci,
            center,
            halfwidths,
            lower: (d - lip * radius).max(0.0),
        });
    }
    let mut iterations = 0usize;
    while let Some(cell) = heap.pop() {
        if cell.lower >= best - tol {
            break;
        }
        iterations += 1;
        if iterations > 2_000_000 {
            break; // tol still honored up to the heap's lower bound gap
        }
        // split along the widest axis
        let axis = cell
            .halfwidths
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.partial_cmp(b.1).unwrap_or(Ordering::Equal))
            .map(|(i, _)| i)
            .unwrap();
        for side in [-0.5, 0.5] {
            let mut center = cell.center.clone();
            center[axis] += side * cell.halfwidths[axis];
            let mut halfwidths = cell.halfwidths.clone();
            halfwidths[axis] *= 0.5;
            let chart = &m.charts[cell.chart];
            let d = linalg::dist(x, &chart.embed(&center));
            best = best.min(d);
            let radius = linalg::norm(&halfwidths);
            let lower = (d - lip * radius).max(0.0);
            if lower < best - tol {
                heap.push(Cell {
                    chart: cell.chart,
                    center,
                    halfwidths,
                    lower,
                });
            }
        }
    }
    Ok(best)
}

/// Dense discretization of the manifold with ambient gap at most
/// `resolution` / 2: parameter midpoint nets at spacing
/// resolution / (lipschitz * sqrt(d)).
pub fn discretize_manifold(m: &ParametricManifold, resolution: f64) -> Result<PointCloud> {
    if resolution <= 0.0 {
        return Err(Error::InvalidParameter("resolution must be > 0".into()));
    }
    let lip = m.lipschitz().max(1e-12);
    let spacing = resolution / (lip * (m.intrinsic_dim as f64).sqrt());
    let mut cloud = PointCloud::empty(m.ambient_dim);
    for chart in &m.charts {
        for u in chart.net(spacing) {
            cloud.push(chart.embed(&u))?;
        }
    }
    if cloud.is_empty() {
        return Err(Error::Empty("manifold discretization"));
    }
    Ok(cloud)
}

/// Hausdorff distance between manifolds via dense discretizations. The
/// `bound` field reports the worst-case discretization error, at most
/// `resolution`.
pub fn manifold_hausdorff(
    m0: &ParametricManifold,
    m1: &ParametricManifold,
    resolution: f64,
) -> Result<BoundedValue> {
    if m0.ambient_dim != m1.ambient_dim {
        return Err(Error::DimMismatch {
            expected: m0.ambient_dim,
            got: m1.ambient_dim,
        });
    }
    let c0 = discretize_manifold(m0, resolution)?;
    let c1 = discretize_manifold(m1, resolution)?;
    let value = hausdorff_distance(&c0, &c1)?;
    Ok(BoundedValue {
        value,
        bound: resolution,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::families;

    #[test]
    fn center_of_unit_circle() {
        let m = families::circle([0.0, 0.0], 1.0).unwrap();
        let d = distance_to_manifold(&[0.0, 0.0], &m, 1e-6).unwrap();
        assert!((d - 1.0).abs() < 1e-6);
    }

    #[test]
    fn membership_gives_zero() {
        let m = families::circle([0.0, 0.0], 1.0).unwrap();
        let p = m.charts[0].embed(&[1.234]);
        let d = distance_to_manifold(&p, &m, 1e-8).unwrap();
        assert!(d <= 1e-8);
    }

    #[test]
    fn orthogonal_projection_to_line() {
        let m = families::segment(vec![-100.0, 0.0], vec![100.0, 0.0]).unwrap();
        let d = distance_to_manifold(&[2.0, 1.0], &m, 1e-9).unwrap();
        assert!((d - 1.0).abs() < 1e-9);
    }

    #[test]
    fn non_finite_query_rejected() {
        let m = families::circle([0.0, 0.0], 1.0).unwrap();
        assert!(distance_to_manifold(&[f64::NAN, 0.0], &m, 1e-6).is_err());
    }

    #[test]
    fn identical_manifolds_zero_hausdorff() {
        let m = families::circle([0.0, 0.0], 1.0).unwrap();
        let h = manifold_hausdorff(&m, &m, 1e-3).unwrap();
        assert_eq!(h.value, 0.0);
    }

    #[test]
    fn concentric_circles() {
        let m0 = families::circle([0.0, 0.0], 1.0).unwrap();
        let m1 = families::circle([0.0, 0.0], 1.2).unwrap();
        let h = manifold_hausdorff(&m0, &m1, 1e-3).unwrap();
        assert!(
            (h.value - 0.2).abs() <= h.bound,
            "value={} bound={}",
            h.value,
            h.bound
        );
    }
}

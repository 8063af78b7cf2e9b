//! Numeric reach validation.
//!
//! The reach is validated, never computed exactly: a curvature criterion
//! (finite-difference normal acceleration at most 1/kappa on a parameter net)
//! and a bottleneck criterion (no two net points that are far apart along the
//! manifold lie within 2*kappa of each other in ambient space).

use super::manifold::ParametricManifold;
use crate::linalg;

#[derive(Debug, Clone)]
pub struct ReachReport {
    pub pass: bool,
    pub curvature_pass: bool,
    pub bottleneck_pass: bool,
    pub max_curvature: f64,
    pub bottleneck_violations: usize,
    /// Conservative lower estimate for the reach implied by the checks.
    pub estimated_reach_lower: f64,
}

const CURVATURE_SLACK: f64 = 1e-6;

/// Validate that the manifold plausibly has reach at least `kappa`, sampling
/// at ambient resolution `resolution`. Failure is a valid result, not an
/// error.
pub fn reach_validate(m: &ParametricManifold, kappa: f64, resolution: f64) -> ReachReport {
    let lip = m.lipschitz().max(1e-12);
    let spacing = resolution / lip;
    let fd_step = (spacing * 0.05).min(1e-4);

    // --- curvature criterion ---------------------------------------------
    let mut max_curv = 0.0f64;
    let mut sigma_min = vec![f64::INFINITY; m.charts.len()];
    let d = m.intrinsic_dim;
    let mut directions: Vec<Vec<f64>> = Vec::new();
    for axis in 0..d {
        let mut v = vec![0.0; d];
        v[axis] = 1.0;
        directions.push(v);
    }
    if d == 2 {
        let s = 1.0 / 2f64.sqrt();
        directions.push(vec![s, s]);
        directions.push(vec![s, -s]);
    }
    for (ci, chart) in m.charts.iter().enumerate() {
        for u in chart.net(spacing) {
            let jac = chart.jacobian(&u);
            let (sig_lo, _) = linalg::singular_range(&jac);
            sigma_min[ci] = sigma_min[ci].min(sig_lo);
            let tangent = match linalg::orthonormalize(&jac) {
                Some(t) => t,
                None => {
                    // rank-deficient sample: treat as curvature failure
                    max_curv = f64::INFINITY;
                    continue;
                }
            };
            for v in &directions {
                let fwd: Vec<f64> = u.iter().zip(v).map(|(a, b)| a + fd_step * b).collect();
                let bwd: Vec<f64> = u.iter().zip(v).map(|(a, b)| a - fd_step * b).collect();
                let (pf, pb, pc) = (chart.embed(&fwd), chart.embed(&bwd), chart.embed(&u));
                let second: Vec<f64> = (0..pc.len())
                    .map(|i| (pf[i] - 2.0 * pc[i] + pb[i]) / (fd_step * fd_step))
                    .collect();
                // speed along v
                let vel: Vec<f64> = (0..pc.len())
                    .map(|i| jac.iter().zip(v).map(|(col, &vk)| col[i] * vk).sum())
                    .collect();
                let speed_sq = linalg::dot(&vel, &vel);
                if speed_sq < 1e-20 {
                    continue;
                }
                // normal component of the acceleration
                let mut norm_acc = second.clone();
                for t in &tangent {
                    let c = linalg::dot(&norm_acc, t);
                    norm_acc = linalg::axpy(&norm_acc, -c, t);
                }
                max_curv = max_curv.max(linalg::norm(&norm_acc) / speed_sq);
            }
        }
    }
    let curvature_pass = max_curv <= (1.0 + CURVATURE_SLACK) / kappa;

    // --- bottleneck criterion --------------------------------------------
    // Net points that are certainly far apart along the manifold (different
    // charts, or parameter separation that forces intrinsic distance above
    // pi*kappa) must not come within 2*kappa in ambient space.
    let mut nets: Vec<(usize, Vec<Vec<f64>>, Vec<Vec<f64>>)> = Vec::new();
    for (ci, chart) in m.charts.iter().enumerate() {
        let params = chart.net(spacing);
        let pts: Vec<Vec<f64>> = params.iter().map(|u| chart.embed(u)).collect();
        nets.push((ci, params, pts));
    }
    let threshold = std::f64::consts::PI * kappa;
    let close = 2.0 * kappa * (1.0 - 1e-9);
    let mut violations = 0usize;
    let mut min_far_gap = f64::INFINITY;
    for a in 0..nets.len() {
        for b in a..nets.len() {
            let (ca, pa, xa) = &nets[a];
            let (_, pb, xb) = &nets[b];
            let same_chart = a == b;
            let chart_a = &m.charts[*ca];
            for i in 0..xa.len() {
                let j0 = if same_chart { i + 1 } else { 0 };
                for j in j0..xb.len() {
                    let gap = linalg::dist(&xa[i], &xb[j]);
                    let far = if same_chart {
                        lip * chart_a.param_dist(&pa[i], &pb[j]) >= threshold
                    } else {
                        true
                    };
                    if far {
                        min_far_gap = min_far_gap.min(gap);
                        if gap < close {
                            violations += 1;
                        }
                    }
                }
            }
        }
    }
    let bottleneck_pass = violations == 0;

    let curvature_reach = if max_curv > 0.0 {
        1.0 / max_curv
    } else {
        f64::INFINITY
    };
    let estimated_reach_lower = curvature_reach.min(min_far_gap / 2.0);

    ReachReport {
        pass: curvature_pass && bottleneck_pass,
        curvature_pass,
        bottleneck_pass,
        max_curvature: max_curv,
        bottleneck_violations: violations,
        estimated_reach_lower,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::families;

    #[test]
    fn circle_passes_at_its_radius() {
        let m = families::circle([0.0, 0.0], 1.0).unwrap();
        let r = reach_validate(&m, 1.0, 0.02);
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn circle_fails_beyond_its_radius() {
        let m = families::circle([0.0, 0.0], 1.0).unwrap();
        let r = reach_validate(&m, 1.5, 0.02);
        assert!(!r.pass, "{r:?}");
        assert!(!r.curvature_pass);
    }

    #[test]
    fn circle_reach_scan() {
        let m = families::circle([0.0, 0.0], 1.0).unwrap();
        for kappa in [0.3, 0.6, 0.9, 1.0] {
            assert!(reach_validate(&m, kappa, 0.02).pass, "kappa={kappa}");
        }
        for kappa in [1.5, 2.0, 3.0] {
            assert!(!reach_validate(&m, kappa, 0.02).pass, "kappa={kappa}");
        }
    }

    #[test]
    fn segment_passes_at_any_kappa() {
        let m = families::segment(vec![0.0, 0.0], vec![1.0, 0.0]).unwrap();
        for kappa in [0.1, 1.0, 10.0, 1000.0] {
            let r = reach_validate(&m, kappa, 0.01);
            assert!(r.pass, "kappa={kappa}: {r:?}");
        }
    }

    #[test]
    fn cosine_manifold_passes_when_a_exceeds_sqrt_kappa() {
        // profile curvature bound 1/a^2 < 1/kappa whenever a > sqrt(kappa)
        let kappa = 1.0;
        let m = families::cosine_graph(0.1, 1.2, 1, 2, 1.0, 6.0).unwrap();
        let r = reach_validate(&m, kappa, 0.05);
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn parallel_segments_fail_on_bottleneck() {
        // two parallel segments 0.4 apart: reach is 0.2, so kappa = 0.5 fails
        let a = families::segment(vec![0.0, 0.0], vec![4.0, 0.0]).unwrap();
        let b = families::segment(vec![0.0, 0.4], vec![4.0, 0.4]).unwrap();
        let m = crate::geometry::ParametricManifold::new(
            2,
            1,
            vec![a.charts[0].clone(), b.charts[0].clone()],
            0.2,
            None,
            "pair",
        )
        .unwrap();
        let r = reach_validate(&m, 0.5, 0.05);
        assert!(!r.pass);
        assert!(!r.bottleneck_pass);
        assert!(reach_validate(&m, 0.19, 0.05).pass);
    }
}

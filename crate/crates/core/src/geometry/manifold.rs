//! Chart-based embedded manifolds.
//!
//! Built-in families carry analytic embeddings and jacobians; the chart
//! Lipschitz constant (largest jacobian singular value over a fine net, with
//! a small safety factor) is estimated once at construction and drives net
//! spacings everywhere else.

use crate::error::{Error, Result};
use crate::linalg;
use crate::quad::midpoints;
use std::sync::Arc;

type EmbedFn = Arc<dyn Fn(&[f64]) -> Vec<f64> + Send + Sync>;
type JacobianFn = Arc<dyn Fn(&[f64]) -> Vec<Vec<f64>> + Send + Sync>;

/// One parametric chart: a box in R^d mapped into R^D.
#[derive(Clone)]
pub struct Chart {
    pub param_box: Vec<(f64, f64)>,
    pub periodic: Vec<bool>,
    embed: EmbedFn,
    /// d columns, each of length D.
    jacobian: JacobianFn,
}

impl Chart {
    pub fn new(
        param_box: Vec<(f64, f64)>,
        periodic: Vec<bool>,
        embed: EmbedFn,
        jacobian: JacobianFn,
    ) -> Self {
        Self {
            param_box,
            periodic,
            embed,
            jacobian,
        }
    }

    pub fn embed(&self, u: &[f64]) -> Vec<f64> {
        (self.embed)(u)
    }

    pub fn jacobian(&self, u: &[f64]) -> Vec<Vec<f64>> {
        (self.jacobian)(u)
    }

    pub fn intrinsic_dim(&self) -> usize {
        self.param_box.len()
    }

    /// Midpoint net with per-axis spacing at most `spacing`.
    pub fn net(&self, spacing: f64) -> Vec<Vec<f64>> {
        let axes: Vec<Vec<f64>> = self
            .param_box
            .iter()
            .map(|&(lo, hi)| {
                let count = (((hi - lo) / spacing).ceil() as usize).max(1);
                midpoints(lo, hi, count)
            })
            .collect();
        let mut out = Vec::with_capacity(axes.iter().map(Vec::len).product());
        let mut idx = vec![0usize; axes.len()];
        loop {
            out.push(idx.iter().enumerate().map(|(a, &i)| axes[a][i]).collect());
            let mut a = axes.len();
            loop {
                if a == 0 {
                    return out;
                }
                a -= 1;
                idx[a] += 1;
                if idx[a] < axes[a].len() {
                    break;
                }
                idx[a] = 0;
            }
        }
    }

    /// Distance between parameters, respecting periodic axes.
    pub fn param_dist(&self, a: &[f64], b: &[f64]) -> f64 {
        let mut acc = 0.0;
        for k in 0..a.len() {
            let mut d = (a[k] - b[k]).abs();
            if self.periodic[k] {
                let period = self.param_box[k].1 - self.param_box[k].0;
                d = d.min(period - d);
            }
            acc += d * d;
        }
        acc.sqrt()
    }
}

/// Embedded d-manifold in R^D given by parametric charts, with a certified
/// reach floor and an optional compact bounding box.
#[derive(Clone)]
pub struct ParametricManifold {
    pub ambient_dim: usize,
    pub intrinsic_dim: usize,
    pub charts: Vec<Chart>,
    pub reach_floor: f64,
    pub bounding_box: Option<Vec<(f64, f64)>>,
    label: String,
    lipschitz: f64,
}

impl ParametricManifold {
    pub fn new(
        ambient_dim: usize,
        intrinsic_dim: usize,
        charts: Vec<Chart>,
        reach_floor: f64,
        bounding_box: Option<Vec<(f64, f64)>>,
        label: impl Into<String>,
    ) -> Result<Self> {
        if intrinsic_dim == 0 || intrinsic_dim >= ambient_dim {
            return Err(Error::InvalidParameter(format!(
                "need 1 <= d < D, got d={intrinsic_dim}, D={ambient_dim}"
            )));
        }
        if charts.is_empty() {
            return Err(Error::Empty("manifold needs at least one chart"));
        }
        let mut m = Self {
            ambient_dim,
            intrinsic_dim,
            charts,
            reach_floor,
            bounding_box,
            label: label.into(),
            lipschitz: 0.0,
        };
        m.lipschitz = m.estimate_lipschitz();
        Ok(m)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Upper bound on the jacobian operator norm over all charts.
    pub fn lipschitz(&self) -> f64 {
        self.lipschitz
    }

    fn estimate_lipschitz(&self) -> f64 {
        let mut max_sigma = 0.0f64;
        for chart in &self.charts {
            // ~64 samples per axis is plenty for the smooth built-ins
            let spacing = chart
                .param_box
                .iter()
                .map(|&(lo, hi)| (hi - lo) / 64.0)
                .fold(f64::INFINITY, f64::min);
            for u in chart.net(spacing) {
                let (_, hi) = linalg::singular_range(&chart.jacobian(&u));
                max_sigma = max_sigma.max(hi);
            }
        }
        max_sigma * 1.05
    }

    /// Checks the constructor invariants on a parameter net: full-rank
    /// jacobians everywhere, and containment in the padded bounding box when
    /// the manifold is flagged compact.
    pub fn validate_invariants(&self, net_spacing: f64, box_padding: f64) -> Result<()> {
        for (ci, chart) in self.charts.iter().enumerate() {
            for u in chart.net(net_spacing) {
                let jac = chart.jacobian(&u);
                let (lo, _) = linalg::singular_range(&jac);
                if lo <= 0.0 {
                    return Err(Error::RankDeficient {
                        chart: ci,
                        sigma_min: lo,
                    });
                }
                if let Some(bb) = &self.bounding_box {
                    let p = chart.embed(&u);
                    for (x, (lo_b, hi_b)) in p.iter().zip(bb) {
                        if *x < lo_b - box_padding || *x > hi_b + box_padding {
                            return Err(Error::ManifoldOutsideBox);
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The manifold rigidly moved: x -> R x + v. `rotation` is given by rows.
    pub fn transformed(&self, rotation: Vec<Vec<f64>>, translation: Vec<f64>) -> Result<Self> {
        if rotation.len() != self.ambient_dim || translation.len() != self.ambient_dim {
            return Err(Error::DimMismatch {
                expected: self.ambient_dim,
                got: rotation.len().min(translation.len()),
            });
        }
        let rot = Arc::new(rotation);
        let trans = Arc::new(translation);
        let charts = self
            .charts
            .iter()
            .map(|c| {
                let base_embed = c.embed.clone();
                let base_jac = c.jacobian.clone();
                let rot_e = rot.clone();
                let trans_e = trans.clone();
                let rot_j = rot.clone();
                Chart::new(
                    c.param_box.clone(),
                    c.periodic.clone(),
                    Arc::new(move |u: &[f64]| {
                        let p = base_embed(u);
                        linalg::add(&linalg::mat_vec(&rot_e, &p), &trans_e)
                    }),
                    Arc::new(move |u: &[f64]| {
                        base_jac(u)
                            .iter()
                            .map(|col| linalg::mat_vec(&rot_j, col))
                            .collect()
                    }),
                )
            })
            .collect();
        let bounding_box = None; // a rotated box is no longer axis-aligned
        let mut m = Self {
            ambient_dim: self.ambient_dim,
            intrinsic_dim: self.intrinsic_dim,
            charts,
            reach_floor: self.reach_floor,
            bounding_box,
            label: format!("{}+rigid", self.label),
            lipschitz: 0.0,
        };
        m.lipschitz = m.estimate_lipschitz();
        Ok(m)
    }

    /// The manifold translated by `shift`.
    pub fn translated(&self, shift: &[f64]) -> Result<Self> {
        let eye: Vec<Vec<f64>> = (0..self.ambient_dim)
            .map(|i| {
                (0..self.ambient_dim)
                    .map(|j| if i == j { 1.0 } else { 0.0 })
                    .collect()
            })
            .collect();
        let mut m = self.transformed(eye, shift.to_vec())?;
        m.label = format!("{}+shift", self.label);
        Ok(m)
    }
}

/// Constructors for the built-in manifold families.
pub mod families {
    use super::*;

    /// Segment from `a` to `b` (any ambient dimension).
    pub fn segment(a: Vec<f64>, b: Vec<f64>) -> Result<ParametricManifold> {
        let dim = a.len();
        if b.len() != dim {
            return Err(Error::DimMismatch {
                expected: dim,
                got: b.len(),
            });
        }
        let dir: Vec<f64> = linalg::sub(&b, &a);
        let a2 = a.clone();
        let dir2 = dir.clone();
        ParametricManifold::new(
            dim,
            1,
            vec![Chart::new(
                vec![(0.0, 1.0)],
                vec![false],
                Arc::new(move |u: &[f64]| linalg::axpy(&a2, u[0], &dir2)),
                Arc::new(move |_u: &[f64]| vec![dir.clone()]),
            )],
            f64::INFINITY,
            None,
            "segment",
        )
    }

    /// Circle of radius `r` centered at `center` in R^2.
    pub fn circle(center: [f64; 2], r: f64) -> Result<ParametricManifold> {
        if r <= 0.0 {
            return Err(Error::InvalidParameter("circle radius must be > 0".into()));
        }
        let c = center;
        let bb = vec![
            (c[0] - r, c[0] + r),
            (c[1] - r, c[1] + r),
        ];
        ParametricManifold::new(
            2,
            1,
            vec![Chart::new(
                vec![(0.0, std::f64::consts::TAU)],
                vec![true],
                Arc::new(move |u: &[f64]| {
                    vec![c[0] + r * u[0].cos(), c[1] + r * u[0].sin()]
                }),
                Arc::new(move |u: &[f64]| vec![vec![-r * u[0].sin(), r * u[0].cos()]]),
            )],
            r,
            Some(bb),
            format!("circle(r={r})"),
        )
    }

    /// Sphere of radius `r` centered at `center` in R^3, in spherical
    /// coordinates (azimuth periodic, polar angle in [0, pi]). The jacobian
    /// degenerates exactly at the poles; nets are midpoint-based so sampled
    /// parameters stay interior.
    pub fn sphere(center: [f64; 3], r: f64) -> Result<ParametricManifold> {
        if r <= 0.0 {
            return Err(Error::InvalidParameter("sphere radius must be > 0".into()));
        }
        let c = center;
        let bb = (0..3).map(|i| (c[i] - r, c[i] + r)).collect();
        ParametricManifold::new(
            3,
            2,
            vec![Chart::new(
                vec![(0.0, std::f64::consts::TAU), (0.0, std::f64::consts::PI)],
                vec![true, false],
                Arc::new(move |u: &[f64]| {
                    let (th, ph) = (u[0], u[1]);
                    vec![
                        c[0] + r * ph.sin() * th.cos(),
                        c[1] + r * ph.sin() * th.sin(),
                        c[2] + r * ph.cos(),
                    ]
                }),
                Arc::new(move |u: &[f64]| {
                    let (th, ph) = (u[0], u[1]);
                    vec![
                        vec![-r * ph.sin() * th.sin(), r * ph.sin() * th.cos(), 0.0],
                        vec![r * ph.cos() * th.cos(), r * ph.cos() * th.sin(), -r * ph.sin()],
                    ]
                }),
            )],
            r,
            Some(bb),
            format!("sphere(r={r})"),
        )
    }

    /// Torus in R^3 with major radius `big_r` and minor radius `small_r`.
    pub fn torus(big_r: f64, small_r: f64) -> Result<ParametricManifold> {
        if !(small_r > 0.0 && big_r > small_r) {
            return Err(Error::InvalidParameter(
                "torus needs 0 < minor < major radius".into(),
            ));
        }
        let reach = small_r.min(big_r - small_r);
        let ext = big_r + small_r;
        let bb = vec![(-ext, ext), (-ext, ext), (-small_r, small_r)];
        ParametricManifold::new(
            3,
            2,
            vec![Chart::new(
                vec![(0.0, std::f64::consts::TAU), (0.0, std::f64::consts::TAU)],
                vec![true, true],
                Arc::new(move |u: &[f64]| {
                    let (th, ph) = (u[0], u[1]);
                    let w = big_r + small_r * ph.cos();
                    vec![w * th.cos(), w * th.sin(), small_r * ph.sin()]
                }),
                Arc::new(move |u: &[f64]| {
                    let (th, ph) = (u[0], u[1]);
                    let w = big_r + small_r * ph.cos();
                    vec![
                        vec![-w * th.sin(), w * th.cos(), 0.0],
                        vec![
                            -small_r * ph.sin() * th.cos(),
                            -small_r * ph.sin() * th.sin(),
                            small_r * ph.cos(),
                        ],
                    ]
                }),
            )],
            reach,
            Some(bb),
            format!("torus({big_r},{small_r})"),
        )
    }

    /// Graph curve {(u, f(u))} in R^2 over `domain`, with analytic derivative.
    pub fn graph(
        f: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
        df: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
        domain: (f64, f64),
        reach_floor: f64,
        label: impl Into<String>,
    ) -> Result<ParametricManifold> {
        let f2 = f.clone();
        ParametricManifold::new(
            2,
            1,
            vec![Chart::new(
                vec![domain],
                vec![false],
                Arc::new(move |u: &[f64]| vec![u[0], f(u[0])]),
                Arc::new(move |u: &[f64]| {
                    let _ = &f2;
                    vec![vec![1.0, df(u[0])]]
                }),
            )],
            reach_floor,
            None,
            label,
        )
    }

    /// One member of the cosine least-favorable pair:
    /// u -> (u, sign * gamma * prod_l cos(u_l / (a sqrt(gamma))), 0, ...)
    /// with the parameter domain truncated to [-span, span]^d.
    pub fn cosine_graph(
        gamma: f64,
        a: f64,
        d: usize,
        big_d: usize,
        sign: f64,
        span: f64,
    ) -> Result<ParametricManifold> {
        if gamma <= 0.0 || a <= 0.0 || d == 0 || d >= big_d {
            return Err(Error::InvalidParameter(
                "cosine graph needs gamma > 0, a > 0, 1 <= d < D".into(),
            ));
        }
        let freq = 1.0 / (a * gamma.sqrt());
        let emb_d = d;
        let embed = move |u: &[f64]| {
            let mut p = vec![0.0; big_d];
            p[..emb_d].copy_from_slice(u);
            p[emb_d] = sign * gamma * u.iter().map(|&x| (x * freq).cos()).product::<f64>();
            p
        };
        let jac = move |u: &[f64]| {
            let cosv: Vec<f64> = u.iter().map(|&x| (x * freq).cos()).collect();
            let mut cols = Vec::with_capacity(emb_d);
            for l in 0..emb_d {
                let mut col = vec![0.0; big_d];
                col[l] = 1.0;
                let mut prod = -gamma * freq * (u[l] * freq).sin();
                for (m, c) in cosv.iter().enumerate() {
                    if m != l {
                        prod *= c;
                    }
                }
                col[emb_d] = sign * prod;
                cols.push(col);
            }
            cols
        };
        ParametricManifold::new(
            big_d,
            d,
            vec![Chart::new(
                vec![(-span, span); d],
                vec![false; d],
                Arc::new(embed),
                Arc::new(jac),
            )],
            a * a, // curvature of the profile is at most 1/a^2
            None,
            format!("cosine(gamma={gamma},a={a},sign={sign})"),
        )
    }

    /// Closed stadium curve in R^2 (two horizontal segments of length
    /// `seg_len` joined by semicircular caps of radius `cap_r`), optionally
    /// with an outward C^2 bump of height `gamma` and half-width `w` centered
    /// on the bottom segment. Arc parameter is one periodic chart.
    pub fn stadium(
        seg_len: f64,
        cap_r: f64,
        bump: Option<(f64, f64)>,
    ) -> Result<ParametricManifold> {
        if seg_len <= 0.0 || cap_r <= 0.0 {
            return Err(Error::InvalidParameter(
                "stadium needs positive segment length and cap radius".into(),
            ));
        }
        if let Some((gamma, w)) = bump {
            if gamma < 0.0 || w <= 0.0 || 2.0 * w >= seg_len {
                return Err(Error::InvalidParameter(
                    "bump must fit within the bottom segment".into(),
                ));
            }
        }
        let s = seg_len;
        let rho = cap_r;
        let total = 2.0 * s + 2.0 * std::f64::consts::PI * rho;
        let (gamma, w) = bump.unwrap_or((0.0, 1.0));
        let profile = move |x: f64| -> f64 {
            let z = x / w;
            if z.abs() >= 1.0 {
                0.0
            } else {
                gamma * (1.0 - z * z).powi(3)
            }
        };
        let dprofile = move |x: f64| -> f64 {
            let z = x / w;
            if z.abs() >= 1.0 {
                0.0
            } else {
                -6.0 * gamma * z * (1.0 - z * z).powi(2) / w
            }
        };
        let embed = move |u: &[f64]| -> Vec<f64> {
            let t = u[0].rem_euclid(total);
            let pi = std::f64::consts::PI;
            if t < s {
                vec![t, -profile(t - s / 2.0)]
            } else if t < s + pi * rho {
                let phi = (t - s) / rho;
                vec![s + rho * phi.sin(), rho * (1.0 - phi.cos())]
            } else if t < 2.0 * s + pi * rho {
                let x = s - (t - s - pi * rho);
                vec![x, 2.0 * rho]
            } else {
                let phi = (t - 2.0 * s - pi * rho) / rho;
                vec![-rho * phi.sin(), rho * (1.0 + phi.cos())]
            }
        };
        let jacobian = move |u: &[f64]| -> Vec<Vec<f64>> {
            let t = u[0].rem_euclid(total);
            let pi = std::f64::consts::PI;
            let col = if t < s {
                vec![1.0, -dprofile(t - s / 2.0)]
            } else if t < s + pi * rho {
                let phi = (t - s) / rho;
                vec![phi.cos(), phi.sin()]
            } else if t < 2.0 * s + pi * rho {
                vec![-1.0, 0.0]
            } else {
                let phi = (t - 2.0 * s - pi * rho) / rho;
                vec![-phi.cos(), -phi.sin()]
            };
            vec![col]
        };
        let bb = vec![(-rho - 0.1, s + rho + 0.1), (-gamma - 0.1, 2.0 * rho + 0.1)];
        ParametricManifold::new(
            2,
            1,
            vec![Chart::new(
                vec![(0.0, total)],
                vec![true],
                Arc::new(embed),
                Arc::new(jacobian),
            )],
            rho.min(if gamma > 0.0 {
                w * w / (6.0 * gamma)
            } else {
                f64::INFINITY
            }),
            Some(bb),
            if gamma > 0.0 {
                format!("stadium+bump(gamma={gamma})")
            } else {
                "stadium".to_string()
            },
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_chart_basics() {
        let m = families::circle([0.0, 0.0], 1.0).unwrap();
        let p = m.charts[0].embed(&[0.0]);
        assert!((p[0] - 1.0).abs() < 1e-15 && p[1].abs() < 1e-15);
        assert!((m.lipschitz() - 1.05).abs() < 1e-6);
        m.validate_invariants(0.01, 1e-9).unwrap();
    }

    #[test]
    fn rejects_bad_dimensions() {
        assert!(ParametricManifold::new(2, 2, vec![], 1.0, None, "x").is_err());
    }

    #[test]
    fn stadium_closes_up_and_is_unit_speed_off_bump() {
        let m = families::stadium(4.0, 1.25, Some((0.05, 0.6))).unwrap();
        let total = m.charts[0].param_box[0].1;
        let a = m.charts[0].embed(&[0.0]);
        let b = m.charts[0].embed(&[total - 1e-12]);
        assert!(crate::linalg::dist(&a, &b) < 1e-9);
        let j = m.charts[0].jacobian(&[5.0]);
        assert!((crate::linalg::norm(&j[0]) - 1.0).abs() < 1e-12);
        m.validate_invariants(0.01, 1e-9).unwrap();
    }

    #[test]
    fn cosine_graph_tangent_horizontal_at_origin() {
        let m = families::cosine_graph(0.1, 1.2, 1, 2, 1.0, 6.0).unwrap();
        let j = m.charts[0].jacobian(&[0.0]);
        assert!(j[0][1].abs() < 1e-14);
        let p = m.charts[0].embed(&[0.0]);
        assert!((p[1] - 0.1).abs() < 1e-15);
    }

    #[test]
    fn transformed_preserves_geometry() {
        let m = families::circle([0.0, 0.0], 1.0).unwrap();
        let rot = crate::linalg::rotation2(0.7);
        let moved = m.transformed(rot, vec![2.0, -1.0]).unwrap();
        let p = moved.charts[0].embed(&[1.3]);
        // still at distance 1 from the new center
        let d = crate::linalg::dist(&p, &[2.0, -1.0]);
        assert!((d - 1.0).abs() < 1e-12);
    }
}

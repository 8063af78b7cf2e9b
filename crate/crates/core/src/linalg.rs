//! Small dense vector/matrix helpers for low ambient dimensions.
//!
//! Everything here works on slices so callers can keep points as plain
//! `Vec<f64>`. Matrices are stored column-major as `Vec<Vec<f64>>` (a list of
//! columns), matching how jacobians are produced by charts.

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub fn dist(a: &[f64], b: &[f64]) -> f64 {
    dist_sq(a, b).sqrt()
}

pub fn dist_sq(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

pub fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale(a: &[f64], s: f64) -> Vec<f64> {
    a.iter().map(|x| x * s).collect()
}

/// a + s*b
pub fn axpy(a: &[f64], s: f64, b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + s * y).collect()
}

/// Modified Gram-Schmidt on the given columns. Returns `None` if a column is
/// (numerically) dependent on the previous ones.
pub fn orthonormalize(cols: &[Vec<f64>]) -> Option<Vec<Vec<f64>>> {
    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(cols.len());
    for col in cols {
        let mut v = col.clone();
        for b in &basis {
            let c = dot(&v, b);
            v = axpy(&v, -c, b);
        }
        // second pass for numerical orthogonality
        for b in &basis {
            let c = dot(&v, b);
            v = axpy(&v, -c, b);
        }
        let n = norm(&v);
        if n < 1e-12 * (1.0 + norm(col)) {
            return None;
        }
        basis.push(scale(&v, 1.0 / n));
    }
    Some(basis)
}

/// Extend an orthonormal set to a full orthonormal basis of R^dim.
/// Candidate directions are the coordinate axes, taken in a deterministic
/// order, so the completion is reproducible.
pub fn complete_basis(partial: &[Vec<f64>], dim: usize) -> Vec<Vec<f64>> {
    let mut basis: Vec<Vec<f64>> = partial.to_vec();
    for axis in 0..dim {
        if basis.len() == dim {
            break;
        }
        let mut v = vec![0.0; dim];
        v[axis] = 1.0;
        for b in &basis {
            let c = dot(&v, b);
            v = axpy(&v, -c, b);
        }
        for b in &basis {
            let c = dot(&v, b);
            v = axpy(&v, -c, b);
        }
        let n = norm(&v);
        if n > 1e-8 {
            basis.push(scale(&v, 1.0 / n));
        }
    }
    debug_assert_eq!(basis.len(), dim);
    basis
}

/// Smallest and largest singular values of a D x d matrix given as d columns
/// (d <= 2 solved in closed form; larger d by Jacobi iteration on J^T J).
pub fn singular_range(cols: &[Vec<f64>]) -> (f64, f64) {
    let d = cols.len();
    match d {
        0 => (0.0, 0.0),
        1 => {
            let n = norm(&cols[0]);
            (n, n)
        }
        2 => {
            let a = dot(&cols[0], &cols[0]);
            let b = dot(&cols[0], &cols[1]);
            let c = dot(&cols[1], &cols[1]);
            let tr = a + c;
            let disc = ((a - c) * (a - c) + 4.0 * b * b).sqrt();
            let lam_max = 0.5 * (tr + disc);
            let lam_min = 0.5 * (tr - disc);
            (lam_min.max(0.0).sqrt(), lam_max.max(0.0).sqrt())
        }
        _ => {
            // Jacobi eigenvalue iteration on the d x d Gram matrix.
            let mut g = vec![vec![0.0; d]; d];
            for i in 0..d {
                for j in 0..d {
                    g[i][j] = dot(&cols[i], &cols[j]);
                }
            }
            for _ in 0..50 {
                let mut off = 0.0;
                let (mut p, mut q) = (0, 1);
                for i in 0..d {
                    for j in (i + 1)..d {
                        if g[i][j].abs() > off {
                            off = g[i][j].abs();
                            p = i;
                            q = j;
                        }
                    }
                }
                if off < 1e-14 {
                    break;
                }
                let theta = 0.5 * (2.0 * g[p][q]).atan2(g[p][p] - g[q][q]);
                let (c, s) = (theta.cos(), theta.sin());
                for i in 0..d {
                    let (gip, giq) = (g[i][p], g[i][q]);
                    g[i][p] = c * gip + s * giq;
                    g[i][q] = -s * gip + c * giq;
                }
                for j in 0..d {
                    let (gpj, gqj) = (g[p][j], g[q][j]);
                    g[p][j] = c * gpj + s * gqj;
                    g[q][j] = -s * gpj + c * gqj;
                }
            }
            let mut lo = f64::INFINITY;
            let mut hi = 0.0f64;
            for i in 0..d {
                lo = lo.min(g[i][i]);
                hi = hi.max(g[i][i]);
            }
            (lo.max(0.0).sqrt(), hi.max(0.0).sqrt())
        }
    }
}

/// sqrt(det(J^T J)) for a D x d matrix given as d columns: the volume
/// distortion factor of the chart.
pub fn gram_volume(cols: &[Vec<f64>]) -> f64 {
    let d = cols.len();
    match d {
        0 => 1.0,
        1 => norm(&cols[0]),
        2 => {
            let a = dot(&cols[0], &cols[0]);
            let b = dot(&cols[0], &cols[1]);
            let c = dot(&cols[1], &cols[1]);
            (a * c - b * b).max(0.0).sqrt()
        }
        _ => {
            // Gram determinant via Cholesky.
            let mut g = vec![vec![0.0; d]; d];
            for i in 0..d {
                for j in 0..d {
                    g[i][j] = dot(&cols[i], &cols[j]);
                }
            }
            let mut det = 1.0;
            for i in 0..d {
                let mut diag = g[i][i];
                for k in 0..i {
                    diag -= g[i][k] * g[i][k];
                }
                if diag <= 0.0 {
                    return 0.0;
                }
                let l = diag.sqrt();
                det *= l;
                for j in (i + 1)..d {
                    let mut v = g[j][i];
                    for k in 0..i {
                        v -= g[j][k] * g[i][k];
                    }
                    g[j][i] = v / l;
                }
            }
            det
        }
    }
}

/// Apply a D x D rotation (rows) to a vector.
pub fn mat_vec(rows: &[Vec<f64>], v: &[f64]) -> Vec<f64> {
    rows.iter().map(|r| dot(r, v)).collect()
}

/// 2-D rotation matrix by `angle`, as rows.
pub fn rotation2(angle: f64) -> Vec<Vec<f64>> {
    let (s, c) = angle.sin_cos();
    vec![vec![c, -s], vec![s, c]]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orthonormalize_produces_identity_gram() {
        let cols = vec![vec![1.0, 1.0, 0.0], vec![0.0, 1.0, 1.0]];
        let basis = orthonormalize(&cols).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!((dot(&basis[i], &basis[j]) - expected).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn complete_basis_full_rank() {
        let partial = orthonormalize(&[vec![1.0, 2.0, 2.0]]).unwrap();
        let basis = complete_basis(&partial, 3);
        assert_eq!(basis.len(), 3);
        for i in 0..3 {
            for j in 0..3 {
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!((dot(&basis[i], &basis[j]) - expected).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn singular_range_matches_hand_values() {
        // columns (3,0) and (0,4): singular values 3 and 4
        let (lo, hi) = singular_range(&[vec![3.0, 0.0], vec![0.0, 4.0]]);
        assert!((lo - 3.0).abs() < 1e-12);
        assert!((hi - 4.0).abs() < 1e-12);
    }

    #[test]
    fn gram_volume_parallelogram() {
        let v = gram_volume(&[vec![2.0, 0.0, 0.0], vec![1.0, 3.0, 0.0]]);
        assert!((v - 6.0).abs() < 1e-12);
    }
}

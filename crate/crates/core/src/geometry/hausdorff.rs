//! Hausdorff distance between finite point sets.

use super::kdtree::KdTree;
use super::point::PointCloud;
use crate::error::{Error, Result};
use rayon::prelude::*;

/// Directed Hausdorff distance sup_{a in A} d(a, B), computed with a kd-tree
/// over B. Exact for finite sets.
pub fn directed_hausdorff(from: &PointCloud, to: &PointCloud) -> Result<f64> {
    if from.is_empty() || to.is_empty() {
        return Err(Error::Empty("empty set has undefined Hausdorff distance"));
    }
    if from.dim() != to.dim() {
        return Err(Error::DimMismatch {
            expected: from.dim(),
            got: to.dim(),
        });
    }
    let tree = KdTree::build(to.points());
    let max_sq = from
        .points()
        .par_iter()
        .map(|p| tree.nearest_sq(p))
        .reduce(|| 0.0, f64::max);
    Ok(max_sq.sqrt())
}

/// Hausdorff distance: max of the two directed distances. Symmetric, zero iff
/// the point sets are equal.
pub fn hausdorff_distance(a: &PointCloud, b: &PointCloud) -> Result<f64> {
    let ab = directed_hausdorff(a, b)?;
    let ba = directed_hausdorff(b, a)?;
    Ok(ab.max(ba))
}

#[cfg(test)]
pub(crate) fn brute_force_hausdorff(a: &PointCloud, b: &PointCloud) -> f64 {
    // O(nm) double loop oracle, kept independent of the kd-tree path.
    let directed = |x: &PointCloud, y: &PointCloud| -> f64 {
        x.points()
            .iter()
            .map(|p| {
                y.points()
                    .iter()
                    .map(|q| crate::linalg::dist_sq(p, q))
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max)
    };
    directed(a, b).max(directed(b, a)).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::Rng;
    use rand::SeedableRng;

    fn cloud(points: Vec<Vec<f64>>) -> PointCloud {
        PointCloud::new(points[0].len(), points).unwrap()
    }

    #[test]
    fn identical_clouds_have_zero_distance() {
        let a = cloud(vec![vec![0.1, 0.2], vec![1.0, -1.0], vec![3.0, 4.0]]);
        assert_eq!(hausdorff_distance(&a, &a).unwrap(), 0.0);
    }

    #[test]
    fn single_pair_euclidean() {
        let a = cloud(vec![vec![0.0, 0.0]]);
        let b = cloud(vec![vec![3.0, 4.0]]);
        assert!((hausdorff_distance(&a, &b).unwrap() - 5.0).abs() < 1e-15);
    }

    #[test]
    fn circle_with_outlier_matches_brute_force() {
        let mut pts = Vec::new();
        for i in 0..1000 {
            let t = 2.0 * std::f64::consts::PI * (i as f64) / 1000.0;
            pts.push(vec![t.cos(), t.sin()]);
        }
        let a = cloud(pts.clone());
        let mut pts_b = pts;
        pts_b.push(vec![1.2, 0.0]);
        let b = cloud(pts_b);
        let fast = hausdorff_distance(&a, &b).unwrap();
        let brute = brute_force_hausdorff(&a, &b);
        assert!((fast - brute).abs() < 1e-12);
        assert!((fast - 0.2).abs() < 1e-2);
    }

    #[test]
    fn empty_input_is_an_error() {
        let a = cloud(vec![vec![0.0, 0.0]]);
        let e = PointCloud::empty(2);
        assert!(hausdorff_distance(&a, &e).is_err());
        assert!(hausdorff_distance(&e, &a).is_err());
    }

    #[test]
    fn indexed_equals_brute_on_random_pairs() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        for _ in 0..25 {
            let n = rng.gen_range(1..200);
            let m = rng.gen_range(1..200);
            let mk = |rng: &mut rand_chacha::ChaCha8Rng, count: usize| {
                cloud(
                    (0..count)
                        .map(|_| vec![rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0)])
                        .collect(),
                )
            };
            let a = mk(&mut rng, n);
            let b = mk(&mut rng, m);
            let fast = hausdorff_distance(&a, &b).unwrap();
            let brute = brute_force_hausdorff(&a, &b);
            assert!((fast - brute).abs() <= 1e-12);
        }
    }

    #[test]
    fn adding_a_point_monotonicity() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
        for _ in 0..30 {
            let mk = |rng: &mut rand_chacha::ChaCha8Rng, count: usize| -> Vec<Vec<f64>> {
                (0..count)
                    .map(|_| vec![rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)])
                    .collect()
            };
            let a_pts = mk(&mut rng, 20);
            let b = cloud(mk(&mut rng, 20));
            let extra = vec![rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)];
            let a = cloud(a_pts.clone());
            let mut bigger_pts = a_pts;
            bigger_pts.push(extra);
            let a_plus = cloud(bigger_pts);
            // directed from A can only grow when A gains a point
            assert!(
                directed_hausdorff(&a_plus, &b).unwrap()
                    >= directed_hausdorff(&a, &b).unwrap() - 1e-15
            );
            // directed to A can only shrink when A gains a point
            assert!(
                directed_hausdorff(&b, &a_plus).unwrap()
                    <= directed_hausdorff(&b, &a).unwrap() + 1e-15
            );
        }
    }

    proptest! {
        #[test]
        fn symmetry_and_triangle_inequality(
            pa in proptest::collection::vec((-10.0f64..10.0, -10.0f64..10.0), 1..12),
            pb in proptest::collection::vec((-10.0f64..10.0, -10.0f64..10.0), 1..12),
            pc in proptest::collection::vec((-10.0f64..10.0, -10.0f64..10.0), 1..12),
        ) {
            let to_cloud = |v: &Vec<(f64, f64)>| cloud(v.iter().map(|&(x, y)| vec![x, y]).collect());
            let (a, b, c) = (to_cloud(&pa), to_cloud(&pb), to_cloud(&pc));
            let ab = hausdorff_distance(&a, &b).unwrap();
            let ba = hausdorff_distance(&b, &a).unwrap();
            prop_assert!((ab - ba).abs() < 1e-12);
            let ac = hausdorff_distance(&a, &c).unwrap();
            let cb = hausdorff_distance(&c, &b).unwrap();
            prop_assert!(ab <= ac + cb + 1e-12);
        }
    }
}

//! Kd-tree over point indices for nearest-neighbour queries in low dimension.

/// Static kd-tree built once over a point set.
pub struct KdTree<'a> {
    points: &'a [Vec<f64>],
    // nodes laid out in build order; children referenced by index
    nodes: Vec<Node>,
    root: usize,
}

struct Node {
    index: usize, // point index at this node
    axis: usize,
    left: Option<usize>,
    right: Option<usize>,
}

impl<'a> KdTree<'a> {
    pub fn build(points: &'a [Vec<f64>]) -> Self {
        assert!(!points.is_empty(), "kd-tree over empty set");
        let dim = points[0].len();
        let mut order: Vec<usize> = (0..points.len()).collect();
        let mut nodes = Vec::with_capacity(points.len());
        let root = Self::build_rec(points, dim, &mut order[..], &mut nodes);
        KdTree {
            points,
            nodes,
            root,
        }
    }

    fn build_rec(
        points: &[Vec<f64>],
        dim: usize,
        order: &mut [usize],
        nodes: &mut Vec<Node>,
    ) -> usize {
        // split on the axis with the widest spread of this subset
        let mut axis = 0;
        let mut best_spread = -1.0;
        for a in 0..dim {
            let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
            for &i in order.iter() {
                lo = lo.min(points[i][a]);
                hi = hi.max(points[i][a]);
            }
            if hi - lo > best_spread {
                best_spread = hi - lo;
                axis = a;
            }
        }
        let mid = order.len() / 2;
        order.select_nth_unstable_by(mid, |&a, &b| {
            points[a][axis]
                .partial_cmp(&points[b][axis])
                .unwrap_or(std::cmp::Ordering::Equal)
        });
        let index = order[mid];
        let node_slot = nodes.len();
        nodes.push(Node {
            index,
            axis,
            left: None,
            right: None,
        });
        // children built after the parent slot is reserved
        if mid > 0 {
            let l = Self::build_rec(points, dim, &mut order[..mid], nodes);
            nodes[node_slot].left = Some(l);
        }
        if mid + 1 < order.len() {
            let r = Self::build_rec(points, dim, &mut order[mid + 1..], nodes);
            nodes[node_slot].right = Some(r);
        }
        node_slot
    }

    /// Squared distance to the nearest point.
    pub fn nearest_sq(&self, query: &[f64]) -> f64 {
        let mut best = f64::INFINITY;
        self.search(self.root, query, &mut best);
        best
    }

    /// Distance to the nearest point.
    pub fn nearest(&self, query: &[f64]) -> f64 {
        self.nearest_sq(query).sqrt()
    }

    fn search(&self, node: usize, query: &[f64], best: &mut f64) {
        let n = &self.nodes[node];
        let p = &self.points[n.index];
        let d2: f64 = p
            .iter()
            .zip(query)
            .map(|(a, b)| (a - b) * (a - b))
            .sum();
        if d2 < *best {
            *best = d2;
        }
        let delta = query[n.axis] - p[n.axis];
        let (near, far) = if delta < 0.0 {
            (n.left, n.right)
        } else {
            (n.right, n.left)
        };
        if let Some(c) = near {
            self.search(c, query, best);
        }
        if let Some(c) = far {
            if delta * delta < *best {
                self.search(c, query, best);
            }
        }
    }

    /// Indices of all points within `radius` (closed ball) of the query.
    pub fn within(&self, query: &[f64], radius: f64) -> Vec<usize> {
        let mut out = Vec::new();
        self.within_rec(self.root, query, radius * radius, &mut out);
        out
    }

    fn within_rec(&self, node: usize, query: &[f64], r2: f64, out: &mut Vec<usize>) {
        let n = &self.nodes[node];
        let p = &self.points[n.index];
        let d2: f64 = p
            .iter()
            .zip(query)
            .map(|(a, b)| (a - b) * (a - b))
            .sum();
        if d2 <= r2 {
            out.push(n.index);
        }
        let delta = query[n.axis] - p[n.axis];
        let (near, far) = if delta < 0.0 {
            (n.left, n.right)
        } else {
            (n.right, n.left)
        };
        if let Some(c) = near {
            self.within_rec(c, query, r2, out);
        }
        if let Some(c) = far {
            if delta * delta <= r2 {
                self.within_rec(c, query, r2, out);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;

    fn brute_nearest_sq(points: &[Vec<f64>], q: &[f64]) -> f64 {
        points
            .iter()
            .map(|p| {
                p.iter()
                    .zip(q)
                    .map(|(a, b)| (a - b) * (a - b))
                    .sum::<f64>()
            })
            .fold(f64::INFINITY, f64::min)
    }

    #[test]
    fn nearest_matches_brute_force() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for dim in [1usize, 2, 3] {
            let pts: Vec<Vec<f64>> = (0..400)
                .map(|_| (0..dim).map(|_| rng.gen_range(-3.0..3.0)).collect())
                .collect();
            let tree = KdTree::build(&pts);
            for _ in 0..200 {
                let q: Vec<f64> = (0..dim).map(|_| rng.gen_range(-4.0..4.0)).collect();
                let a = tree.nearest_sq(&q);
                let b = brute_nearest_sq(&pts, &q);
                assert!((a - b).abs() <= 1e-12 * (1.0 + b));
            }
        }
    }

    #[test]
    fn within_matches_brute_force() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let pts: Vec<Vec<f64>> = (0..300)
            .map(|_| vec![rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)])
            .collect();
        let tree = KdTree::build(&pts);
        for _ in 0..50 {
            let q = vec![rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)];
            let r = rng.gen_range(0.05..0.8);
            let mut got = tree.within(&q, r);
            got.sort_unstable();
            let mut want: Vec<usize> = pts
                .iter()
                .enumerate()
                .filter(|(_, p)| {
                    ((p[0] - q[0]).powi(2) + (p[1] - q[1]).powi(2)).sqrt() <= r
                })
                .map(|(i, _)| i)
                .collect();
            want.sort_unstable();
            assert_eq!(got, want);
        }
    }
}

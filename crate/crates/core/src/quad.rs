//! Quadrature building blocks: Gauss-Legendre panels and an oscillatory
//! cosine tail rule used by the kernel transform checks.

/// 16-point Gauss-Legendre nodes on [-1, 1].
pub const GL16_X: [f64; 16] = [
    -0.9894009349916499,
    -0.9445750230732326,
    -0.8656312023878318,
    -0.7554044083550030,
    -0.6178762444026438,
    -0.4580167776572274,
    -0.2816035507792589,
    -0.0950125098376374,
    0.0950125098376374,
    0.2816035507792589,
    0.4580167776572274,
    0.6178762444026438,
    0.7554044083550030,
    0.8656312023878318,
    0.9445750230732326,
    0.9894009349916499,
];

/// Weights matching [`GL16_X`].
pub const GL16_W: [f64; 16] = [
    0.0271524594117541,
    0.0622535239386479,
    0.0951585116824928,
    0.1246289712555339,
    0.1495959888165767,
    0.1691565193950025,
    0.1826034150449236,
    0.1894506104550685,
    0.1894506104550685,
    0.1826034150449236,
    0.1691565193950025,
    0.1495959888165767,
    0.1246289712555339,
    0.0951585116824928,
    0.0622535239386479,
    0.0271524594117541,
];

/// 16-point Gauss-Legendre on [a, b].
pub fn gl16<F: Fn(f64) -> f64>(f: F, a: f64, b: f64) -> f64 {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut acc = 0.0;
    for (&x, &w) in GL16_X.iter().zip(GL16_W.iter()) {
        acc += w * f(mid + half * x);
    }
    acc * half
}

/// Composite Gauss-Legendre with `panels` equal panels on [a, b].
pub fn gl_composite<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, panels: usize) -> f64 {
    let panels = panels.max(1);
    let step = (b - a) / panels as f64;
    let mut acc = 0.0;
    for i in 0..panels {
        acc += gl16(&f, a + i as f64 * step, a + (i + 1) as f64 * step);
    }
    acc
}

/// Midpoint nodes on [a, b]: centers of `count` equal cells. Used for
/// parameter nets so that boundary/periodic duplication never occurs.
pub fn midpoints(a: f64, b: f64, count: usize) -> Vec<f64> {
    let count = count.max(1);
    let step = (b - a) / count as f64;
    (0..count).map(|i| a + (i as f64 + 0.5) * step).collect()
}

/// int_Y^inf cos(b y) y^{-p} dy for p >= 2, b >= 0, Y > 0.
///
/// The slowly-oscillating stretch up to ~30 periods of phase is integrated by
/// quarter-period Gauss panels; the remainder uses the integration-by-parts
/// asymptotic series, whose terms shrink geometrically once b*y >= 30.
pub fn cos_tail(b: f64, y0: f64, p: u32) -> f64 {
    assert!(p >= 2 && y0 > 0.0);
    let pf = f64::from(p);
    if b < 1e-12 {
        return y0.powf(1.0 - pf) / (pf - 1.0);
    }
    let y_star = y0.max(45.0 / b);
    let mut total = 0.0;
    if y_star > y0 {
        let quarter = 0.5 * std::f64::consts::PI / b;
        let panels = (((y_star - y0) / quarter).ceil() as usize).max(8);
        total += gl_composite(|y| (b * y).cos() * y.powi(-(p as i32)), y0, y_star, panels);
    }
    // asymptotic series from y_star, truncated at the smallest term
    let x = y_star;
    let (sin_bx, cos_bx) = (b * x).sin_cos();
    let mut val = 0.0;
    let mut coef = 1.0;
    let mut q = pf;
    let mut last = f64::INFINITY;
    for _ in 0..12 {
        let t1 = coef / (b * x.powf(q));
        if t1.abs() >= last {
            break;
        }
        val += t1 * (-sin_bx);
        last = t1.abs();
        coef *= q / b;
        q += 1.0;
        let t2 = coef / (b * x.powf(q));
        if t2.abs() >= last {
            break;
        }
        val += t2 * cos_bx;
        last = t2.abs();
        coef *= -q / b;
        q += 1.0;
        if last < 1e-20 {
            break;
        }
    }
    total + val
}

//! Independent oracles and seeded instance generators shared by the
//! integration tests. Nothing here calls into the closed-form code paths.

#![allow(dead_code)]

use fermat_quad::geom::{is_convex_quad, Point};
use fermat_quad::QuarticPoly;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Minimizer of a unimodal `f` on `[lo, hi]` by golden-section search.
pub fn golden_section_min(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = hi - inv_phi * (hi - lo);
    let mut d = lo + inv_phi * (hi - lo);
    let (mut fc, mut fd) = (f(c), f(d));
    while hi - lo > tol {
        if fc < fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = f(d);
        }
    }
    (lo + hi) / 2.0
}

/// Real roots of `p` inside `[lo, hi]` found by sign changes on a uniform
/// grid of `cells` cells, each refined by bisection. Misses even-order roots
/// that do not change sign.
pub fn sign_change_roots(p: &QuarticPoly, lo: f64, hi: f64, cells: usize) -> Vec<f64> {
    let eval = |y: f64| {
        let [c4, c3, c2, c1, c0] = p.coefficients();
        c4 * y.powi(4) + c3 * y.powi(3) + c2 * y * y + c1 * y + c0
    };
    let mut roots = Vec::new();
    let step = (hi - lo) / cells as f64;
    let mut a = lo;
    let mut fa = eval(a);
    for i in 1..=cells {
        let b = lo + step * i as f64;
        let fb = eval(b);
        if fa == 0.0 {
            roots.push(a);
        } else if fa * fb < 0.0 {
            let (mut x0, mut x1, mut f0) = (a, b, fa);
            for _ in 0..200 {
                let mid = 0.5 * (x0 + x1);
                let fm = eval(mid);
                if fm == 0.0 || mid == x0 || mid == x1 {
                    x0 = mid;
                    x1 = mid;
                    break;
                }
                if f0 * fm < 0.0 {
                    x1 = mid;
                } else {
                    x0 = mid;
                    f0 = fm;
                }
            }
            roots.push(0.5 * (x0 + x1));
        }
        a = b;
        fa = fb;
    }
    roots
}

/// Four distinct real roots in `[-10, 10]` with pairwise gaps of at least
/// `min_gap`.
pub fn random_roots(rng: &mut ChaCha8Rng, min_gap: f64) -> [f64; 4] {
    loop {
        let mut r: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-10.0..10.0));
        r.sort_by(|a, b| a.total_cmp(b));
        if r.windows(2).all(|w| w[1] - w[0] >= min_gap) {
            return r;
        }
    }
}

/// Central finite difference.
pub fn derivative(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    (f(x + h) - f(x - h)) / (2.0 * h)
}

/// A random strictly convex quadrilateral in counterclockwise or clockwise
/// order, placed at a random offset and scale.
pub fn random_convex_quad(rng: &mut ChaCha8Rng) -> [Point; 4] {
    loop {
        let mut angles: [f64; 4] =
            std::array::from_fn(|_| rng.gen_range(0.0..std::f64::consts::TAU));
        angles.sort_by(|a, b| a.total_cmp(b));
        let gaps_ok = (0..4).all(|i| {
            let next = if i == 3 {
                angles[0] + std::f64::consts::TAU
            } else {
                angles[i + 1]
            };
            let gap = next - angles[i];
            gap > 0.3 && gap < 2.6
        });
        if !gaps_ok {
            continue;
        }
        let scale = rng.gen_range(0.5..20.0);
        let cx = rng.gen_range(-50.0..50.0);
        let cy = rng.gen_range(-50.0..50.0);
        let mut v: [Point; 4] = std::array::from_fn(|i| {
            let r = scale * rng.gen_range(0.6..1.4);
            Point::new(cx + r * angles[i].cos(), cy + r * angles[i].sin())
        });
        if rng.gen_bool(0.5) {
            v.reverse();
        }
        if is_convex_quad(&v).unwrap_or(false) {
            return v;
        }
    }
}

/// Four random points in general position (not necessarily convex).
pub fn random_points(rng: &mut ChaCha8Rng) -> [Point; 4] {
    loop {
        let scale = rng.gen_range(0.5..10.0);
        let v: [Point; 4] = std::array::from_fn(|_| {
            Point::new(rng.gen_range(-scale..scale), rng.gen_range(-scale..scale))
        });
        let min_gap = (0..4)
            .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
            .map(|(i, j)| v[i].distance(&v[j]))
            .fold(f64::INFINITY, f64::min);
        if min_gap > 0.05 * scale {
            return v;
        }
    }
}

/// Apply `x -> s·R(θ)·x + t` to a point.
pub fn similarity(p: Point, scale: f64, theta: f64, shift: (f64, f64)) -> Point {
    let (s, c) = theta.sin_cos();
    Point::new(
        scale * (c * p.x - s * p.y) + shift.0,
        scale * (s * p.x + c * p.y) + shift.1,
    )
}

/// The canonical square vertices pushed away from (or toward) `center`
/// along the rays through each vertex.
pub fn push_along_rays(vertices: &[Point; 4], center: Point, factors: [f64; 4]) -> [Point; 4] {
    std::array::from_fn(|i| {
        let v = vertices[i];
        Point::new(
            center.x + factors[i] * (v.x - center.x),
            center.y + factors[i] * (v.y - center.y),
        )
    })
}

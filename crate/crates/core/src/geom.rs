//! Planar primitives shared by the solvers.
//!
//! Angles are radians throughout. Orientation tests use a relative
//! tolerance of [`ORIENTATION_REL_TOL`] on cross products.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Relative tolerance applied to cross products in orientation tests.
pub const ORIENTATION_REL_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

/// A displacement in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PlanarVector {
    pub dx: f64,
    pub dy: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn distance(&self, other: &Point) -> f64 {
        (*other - *self).norm()
    }

    pub fn translate(&self, v: PlanarVector) -> Point {
        Point::new(self.x + v.dx, self.y + v.dy)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl PlanarVector {
    pub const fn new(dx: f64, dy: f64) -> Self {
        PlanarVector { dx, dy }
    }

    pub fn is_finite(&self) -> bool {
        self.dx.is_finite() && self.dy.is_finite()
    }

    pub fn norm(&self) -> f64 {
        self.dx.hypot(self.dy)
    }

    pub fn dot(&self, other: &PlanarVector) -> f64 {
        self.dx * other.dx + self.dy * other.dy
    }

    /// z-component of the 3-D cross product.
    pub fn cross(&self, other: &PlanarVector) -> f64 {
        self.dx * other.dy - self.dy * other.dx
    }

    /// Counterclockwise rotation by `theta` radians.
    pub fn rotate(&self, theta: f64) -> PlanarVector {
        let (s, c) = theta.sin_cos();
        PlanarVector::new(c * self.dx - s * self.dy, s * self.dx + c * self.dy)
    }
}

impl Sub for Point {
    type Output = PlanarVector;

    fn sub(self, rhs: Point) -> PlanarVector {
        PlanarVector::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Add for PlanarVector {
    type Output = PlanarVector;

    fn add(self, rhs: PlanarVector) -> PlanarVector {
        PlanarVector::new(self.dx + rhs.dx, self.dy + rhs.dy)
    }
}

impl Sub for PlanarVector {
    type Output = PlanarVector;

    fn sub(self, rhs: PlanarVector) -> PlanarVector {
        PlanarVector::new(self.dx - rhs.dx, self.dy - rhs.dy)
    }
}

impl Mul<PlanarVector> for f64 {
    type Output = PlanarVector;

    fn mul(self, rhs: PlanarVector) -> PlanarVector {
        PlanarVector::new(self * rhs.dx, self * rhs.dy)
    }
}

impl Neg for PlanarVector {
    type Output = PlanarVector;

    fn neg(self) -> PlanarVector {
        PlanarVector::new(-self.dx, -self.dy)
    }
}

/// Unit vector pointing from `from` toward `to`.
pub fn unit_vector(from: Point, to: Point) -> Result<PlanarVector> {
    let d = to - from;
    let len = d.norm();
    if !(len > 0.0) || !len.is_finite() {
        return Err(Error::DegenerateInput(format!(
            "unit vector between coincident or non-finite points {from} and {to}"
        )));
    }
    Ok(PlanarVector::new(d.dx / len, d.dy / len))
}

/// The angle at `vertex` between the rays toward `p` and `q`, in `[0, π]`.
pub fn angle_at(vertex: Point, p: Point, q: Point) -> Result<f64> {
    let u = unit_vector(vertex, p)?;
    let w = unit_vector(vertex, q)?;
    // atan2 keeps precision near 0 and π where acos(dot) does not.
    Ok(u.cross(&w).abs().atan2(u.dot(&w)))
}

pub fn rotate(v: PlanarVector, theta: f64) -> PlanarVector {
    v.rotate(theta)
}

/// Sign of the turn `a -> b -> c`: `1` left, `-1` right, `0` within tolerance
/// of collinear.
pub fn orientation(a: Point, b: Point, c: Point) -> i8 {
    let ab = b - a;
    let ac = c - a;
    let cross = ab.cross(&ac);
    let scale = ab.norm() * ac.norm();
    if cross.abs() <= ORIENTATION_REL_TOL * scale {
        0
    } else if cross > 0.0 {
        1
    } else {
        -1
    }
}

/// Intersection of the closed segments `[a, b]` and `[c, d]`.
///
/// Returns `Ok(None)` when they are disjoint and an error when they overlap
/// along a common line, where the intersection is not a single point.
pub fn segment_intersection(a: Point, b: Point, c: Point, d: Point) -> Result<Option<Point>> {
    if a == b || c == d {
        return Err(Error::DegenerateInput(
            "segment with coincident endpoints".into(),
        ));
    }
    let o1 = orientation(a, b, c);
    let o2 = orientation(a, b, d);
    let o3 = orientation(c, d, a);
    let o4 = orientation(c, d, b);

    if o1 == 0 && o2 == 0 {
        // Collinear supports: compare the projections onto a-b.
        let dir = b - a;
        let len2 = dir.dot(&dir);
        let tc = (c - a).dot(&dir) / len2;
        let td = (d - a).dot(&dir) / len2;
        let (lo, hi) = if tc <= td { (tc, td) } else { (td, tc) };
        if hi < 0.0 || lo > 1.0 {
            return Ok(None);
        }
        if hi == 0.0 {
            return Ok(Some(a));
        }
        if lo == 1.0 {
            return Ok(Some(b));
        }
        return Err(Error::DegenerateInput(
            "collinear overlapping segments have no unique intersection".into(),
        ));
    }

    if o1 * o2 > 0 || o3 * o4 > 0 {
        return Ok(None);
    }

    let r = b - a;
    let s = d - c;
    let denom = r.cross(&s);
    if denom == 0.0 {
        return Ok(None);
    }
    let t = ((c - a).cross(&s) / denom).clamp(0.0, 1.0);
    Ok(Some(a.translate(t * r)))
}

/// Whether the four vertices, in the given cyclic order, form a strictly
/// convex simple quadrilateral.
pub fn is_convex_quad(vertices: &[Point; 4]) -> Result<bool> {
    for i in 0..4 {
        for j in (i + 1)..4 {
            if vertices[i] == vertices[j] {
                return Err(Error::DegenerateInput(format!(
                    "vertices A{} and A{} coincide",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    let mut sign = 0i8;
    for i in 0..4 {
        let o = orientation(vertices[i], vertices[(i + 1) % 4], vertices[(i + 2) % 4]);
        if o == 0 || (sign != 0 && o != sign) {
            return Ok(false);
        }
        sign = o;
    }
    Ok(true)
}

/// Whether `p` lies strictly inside the triangle `abc` (either orientation).
pub fn strictly_inside_triangle(p: Point, a: Point, b: Point, c: Point) -> bool {
    let o1 = orientation(a, b, p);
    let o2 = orientation(b, c, p);
    let o3 = orientation(c, a, p);
    o1 != 0 && o1 == o2 && o2 == o3
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, SQRT_2};

    fn p(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn unit_vector_examples() {
        assert_eq!(
            unit_vector(p(0.0, 0.0), p(3.0, 0.0)).unwrap(),
            PlanarVector::new(1.0, 0.0)
        );
        let u = unit_vector(p(1.0, 1.0), p(2.0, 2.0)).unwrap();
        assert!((u.dx - SQRT_2 / 2.0).abs() < 1e-15);
        assert!((u.dy - SQRT_2 / 2.0).abs() < 1e-15);
        assert!(matches!(
            unit_vector(p(0.0, 0.0), p(0.0, 0.0)),
            Err(Error::DegenerateInput(_))
        ));
    }

    #[test]
    fn angle_examples() {
        let o = p(0.0, 0.0);
        assert!((angle_at(o, p(1.0, 0.0), p(0.0, 1.0)).unwrap() - FRAC_PI_2).abs() < 1e-15);
        assert!((angle_at(o, p(1.0, 0.0), p(-1.0, 0.0)).unwrap() - PI).abs() < 1e-15);
        assert!((angle_at(o, p(1.0, 0.0), p(1.0, 1.0)).unwrap() - FRAC_PI_4).abs() < 1e-15);
        assert!(angle_at(o, o, p(1.0, 0.0)).is_err());
    }

    #[test]
    fn segment_examples() {
        let x = segment_intersection(p(-1.0, -1.0), p(1.0, 1.0), p(-1.0, 1.0), p(1.0, -1.0))
            .unwrap()
            .unwrap();
        assert!(x.x.abs() < 1e-15 && x.y.abs() < 1e-15);
        assert_eq!(
            segment_intersection(p(0.0, 0.0), p(1.0, 0.0), p(0.0, 1.0), p(1.0, 1.0)).unwrap(),
            None
        );
        assert_eq!(
            segment_intersection(p(0.0, 0.0), p(2.0, 0.0), p(1.0, -1.0), p(1.0, 1.0)).unwrap(),
            Some(p(1.0, 0.0))
        );
    }

    #[test]
    fn segment_collinear_cases() {
        assert!(matches!(
            segment_intersection(p(0.0, 0.0), p(2.0, 0.0), p(1.0, 0.0), p(3.0, 0.0)),
            Err(Error::DegenerateInput(_))
        ));
        assert_eq!(
            segment_intersection(p(0.0, 0.0), p(1.0, 0.0), p(2.0, 0.0), p(3.0, 0.0)).unwrap(),
            None
        );
        assert_eq!(
            segment_intersection(p(0.0, 0.0), p(1.0, 0.0), p(1.0, 0.0), p(3.0, 0.0)).unwrap(),
            Some(p(1.0, 0.0))
        );
        assert!(segment_intersection(p(0.0, 0.0), p(0.0, 0.0), p(1.0, 0.0), p(3.0, 0.0)).is_err());
    }

    #[test]
    fn rotate_examples() {
        let r = rotate(PlanarVector::new(1.0, 0.0), FRAC_PI_2);
        assert!(r.dx.abs() < 1e-15 && (r.dy - 1.0).abs() < 1e-15);
        assert_eq!(
            rotate(PlanarVector::new(1.0, 0.0), 0.0),
            PlanarVector::new(1.0, 0.0)
        );
        let r = rotate(PlanarVector::new(0.0, 1.0), PI);
        assert!(r.dx.abs() < 1e-15 && (r.dy + 1.0).abs() < 1e-15);
    }

    #[test]
    fn convexity_examples() {
        assert!(is_convex_quad(&[p(1.0, 1.0), p(-1.0, 1.0), p(-1.0, -1.0), p(1.0, -1.0)]).unwrap());
        assert!(!is_convex_quad(&[p(0.0, 0.0), p(2.0, 0.0), p(1.0, 0.1), p(1.0, 2.0)]).unwrap());
        assert!(!is_convex_quad(&[p(0.0, 0.0), p(1.0, 0.0), p(2.0, 0.0), p(1.0, 1.0)]).unwrap());
        // bowtie ordering
        assert!(!is_convex_quad(&[p(0.0, 0.0), p(1.0, 1.0), p(1.0, 0.0), p(0.0, 1.0)]).unwrap());
        // clockwise is still convex
        assert!(is_convex_quad(&[p(1.0, -1.0), p(-1.0, -1.0), p(-1.0, 1.0), p(1.0, 1.0)]).unwrap());
        assert!(is_convex_quad(&[p(0.0, 0.0), p(0.0, 0.0), p(1.0, 0.0), p(0.0, 1.0)]).is_err());
    }
}

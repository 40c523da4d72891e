//! The symmetric tetragon: a square of side `a` with weight `B1` at the two
//! upper vertices and `B4` at the two lower ones.
//!
//! The optimum lies on the vertical axis, at signed height `y` above the
//! centre. It is a root of the equilibrium quartic, which is solved
//! numerically and filtered to the minimizing root. The nested-radical
//! closed forms are kept as a separate evaluation path for cross-checking.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geom::{angle_at, Point};
use crate::quartic::{solve_real_quartic, QuarticPoly};
use crate::solver::{classify, CaseTag, QuadProblem};

/// Relative tolerance under which two weight magnitudes count as equal.
pub const WEIGHT_MATCH_REL_TOL: f64 = 1e-12;

pub(crate) fn weights_match(a: f64, b: f64) -> bool {
    (a - b).abs() <= WEIGHT_MATCH_REL_TOL * a.abs().max(b.abs())
}

/// Canonical frame: `A1 = (a/2, a/2)`, `A2 = (−a/2, a/2)`,
/// `A3 = (−a/2, −a/2)`, `A4 = (a/2, −a/2)`, centre at the origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SquareProblem {
    side: f64,
    upper_weight: f64,
    lower_weight: f64,
}

impl SquareProblem {
    /// `upper_weight` sits on A1 and A2, `lower_weight` on A3 and A4.
    /// Weights may carry either sign.
    pub fn new(side: f64, upper_weight: f64, lower_weight: f64) -> Result<Self> {
        if !(side.is_finite() && side > 0.0) {
            return Err(Error::InvalidInput(format!(
                "side length must be positive, got {side}"
            )));
        }
        for w in [upper_weight, lower_weight] {
            if !w.is_finite() || w == 0.0 {
                return Err(Error::InvalidInput(format!(
                    "weights must be finite and nonzero, got {w}"
                )));
            }
        }
        Ok(SquareProblem {
            side,
            upper_weight,
            lower_weight,
        })
    }

    pub fn side(&self) -> f64 {
        self.side
    }

    pub fn upper_weight(&self) -> f64 {
        self.upper_weight
    }

    pub fn lower_weight(&self) -> f64 {
        self.lower_weight
    }

    pub fn vertices(&self) -> [Point; 4] {
        let h = self.side / 2.0;
        [
            Point::new(h, h),
            Point::new(-h, h),
            Point::new(-h, -h),
            Point::new(h, -h),
        ]
    }

    pub fn weights(&self) -> [f64; 4] {
        [
            self.upper_weight,
            self.upper_weight,
            self.lower_weight,
            self.lower_weight,
        ]
    }

    /// The same instance as a general four-point problem.
    pub fn quad_problem(&self) -> QuadProblem {
        QuadProblem::new(self.vertices(), self.weights())
            .expect("canonical square is a valid four-point problem")
    }

    /// The point at signed height `y` on the axis.
    pub fn location(&self, y: f64) -> Point {
        Point::new(0.0, y)
    }

    fn swapped(&self) -> SquareProblem {
        SquareProblem {
            side: self.side,
            upper_weight: self.lower_weight,
            lower_weight: self.upper_weight,
        }
    }

    fn magnitudes(&self) -> SquareProblem {
        SquareProblem {
            side: self.side,
            upper_weight: self.upper_weight.abs(),
            lower_weight: self.lower_weight.abs(),
        }
    }
}

/// The squared first-order condition along the axis:
/// `8(B1²−B4²)y⁴ + 2a²(B4²−B1²)y² − 2a³(B1²+B4²)y + a⁴(B1²−B4²)`.
///
/// Depends on the weights only through their squares.
pub fn equilibrium_quartic(sp: &SquareProblem) -> Result<QuarticPoly> {
    let a = sp.side;
    let b1 = sp.upper_weight * sp.upper_weight;
    let b4 = sp.lower_weight * sp.lower_weight;
    if weights_match(sp.upper_weight.abs(), sp.lower_weight.abs()) {
        return Err(Error::DegenerateCoefficients);
    }
    let diff = b1 - b4;
    let a2 = a * a;
    Ok(QuarticPoly::new(
        8.0 * diff,
        0.0,
        -2.0 * a2 * diff,
        -2.0 * a2 * a * (b1 + b4),
        a2 * a2 * diff,
    ))
}

/// `f/2` restricted to the axis: `B1·|A0A1| + B4·|A0A4|` at `A0 = (0, y)`.
pub fn objective_on_axis(sp: &SquareProblem, y: f64) -> f64 {
    let h = sp.side / 2.0;
    sp.upper_weight * h.hypot(h - y) + sp.lower_weight * h.hypot(h + y)
}

/// Height of the weighted Fermat-Torricelli point above the centre.
///
/// Positive weights only. Equal weights give the centre. When the lower
/// weight is heavier the answer is the mirror image of the swapped problem.
pub fn solve_square_ft(sp: &SquareProblem) -> Result<f64> {
    if sp.upper_weight <= 0.0 || sp.lower_weight <= 0.0 {
        return Err(Error::InvalidInput(
            "the square solver needs positive weights; use solve_square_complementary for signed ones"
                .into(),
        ));
    }
    if let CaseTag::AbsorbedAt(vertex) = classify(&sp.quad_problem())? {
        return Err(Error::NotFloating { vertex });
    }
    if weights_match(sp.upper_weight, sp.lower_weight) {
        return Ok(0.0);
    }
    if sp.lower_weight > sp.upper_weight {
        return solve_square_ft(&sp.swapped()).map(|y| -y);
    }

    let h = sp.side / 2.0;
    let roots = solve_real_quartic(&equilibrium_quartic(sp)?)?;
    roots
        .distinct()
        .into_iter()
        .filter(|&y| (0.0..h).contains(&y))
        .min_by(|a, b| objective_on_axis(sp, *a).total_cmp(&objective_on_axis(sp, *b)))
        .ok_or_else(|| {
            Error::OutsideFloatingRegime("equilibrium quartic has no root inside the square".into())
        })
}

/// Stationary point of the mixed-sign problem (one pair of weights negated).
///
/// This is the other real root of the equilibrium quartic; it lies outside
/// the square, above the upper edge when `|B1| > |B4|` and below the lower
/// edge otherwise.
pub fn solve_square_complementary(sp: &SquareProblem) -> Result<f64> {
    if (sp.upper_weight > 0.0) == (sp.lower_weight > 0.0) {
        return Err(Error::InvalidInput(
            "complementary point needs weights of opposite sign".into(),
        ));
    }
    let mags = sp.magnitudes();
    if weights_match(mags.upper_weight, mags.lower_weight) {
        return Err(Error::InvalidInput(
            "complementary point needs |B1| != |B4|".into(),
        ));
    }
    if mags.lower_weight > mags.upper_weight {
        return solve_square_complementary(&sp.swapped()).map(|y| -y);
    }

    let h = sp.side / 2.0;
    let roots = solve_real_quartic(&equilibrium_quartic(&mags)?)?;
    roots
        .distinct()
        .into_iter()
        .filter(|&y| y > h)
        .max_by(|a, b| a.total_cmp(b))
        .ok_or_else(|| {
            Error::OutsideFloatingRegime(
                "equilibrium quartic has no root beyond the upper edge".into(),
            )
        })
}

/// Auxiliary quantities `t, p, q, r` of the radical closed form for the
/// floating point, `B1 > B4 > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FerrariIntermediates {
    pub t: f64,
    pub p: f64,
    pub q: f64,
    pub r: f64,
}

impl FerrariIntermediates {
    pub fn new(sp: &SquareProblem) -> FerrariIntermediates {
        let a = sp.side;
        let (b1, b4) = (sp.upper_weight, sp.lower_weight);
        let (b1_2, b4_2) = (b1 * b1, b4 * b4);
        let a2 = a * a;
        let a4 = a2 * a2;
        let a6 = a4 * a2;
        let diff = b1_2 - b4_2;

        let t = 2000.0 * a6 * b1_2.powi(3) - 2544.0 * a6 * b1_2 * b1_2 * b4_2
            + 2544.0 * a6 * b1_2 * b4_2 * b4_2
            - 2000.0 * a6 * b4_2.powi(3)
            + 192.0
                * 3f64.sqrt()
                * (a6
                    * a6
                    * b1_2
                    * b4_2
                    * diff
                    * diff
                    * (125.0 * b1_2 * b1_2 - 142.0 * b1_2 * b4_2 + 125.0 * b4_2 * b4_2))
                    .sqrt();
        let p = a4 * b1_2 * b1_2 - 2.0 * a4 * b1_2 * b4_2 + a4 * b4_2 * b4_2;
        let q = b1_2.powi(3) - 3.0 * b1_2 * b1_2 * b4_2 + 3.0 * b1_2 * b4_2 * b4_2 - b4_2.powi(3);
        let r = cube_root_terms(t, p, q, diff) - (a2 * b1_2 - a2 * b4_2) / (12.0 * diff);
        FerrariIntermediates { t, p, q, r }
    }
}

/// `t^{1/3}/(24·2^{1/3}·q^{1/3}) + 25·p·q^{1/3}/(3·2^{2/3}·t^{1/3}·(B1²−B4²)²)`.
fn cube_root_terms(t: f64, p: f64, q: f64, diff: f64) -> f64 {
    let t3 = t.cbrt();
    let q3 = q.cbrt();
    t3 / (24.0 * 2f64.cbrt() * q3) + 25.0 * p * q3 / (3.0 * 4f64.cbrt() * t3 * diff * diff)
}

/// The floating height from the nested-radical closed form.
///
/// `None` outside `B1 > B4 > 0` or when a radicand turns negative.
pub fn literal_floating_y(sp: &SquareProblem) -> Option<f64> {
    let (b1, b4) = (sp.upper_weight, sp.lower_weight);
    if !(b1 > b4 && b4 > 0.0) || weights_match(b1, b4) {
        return None;
    }
    let a = sp.side;
    let a2 = a * a;
    let diff = b1 * b1 - b4 * b4;
    let ints = FerrariIntermediates::new(sp);
    let outer = a2 / 4.0 + ints.r;
    if !(ints.t > 0.0 && ints.q > 0.0 && outer > 0.0) {
        return None;
    }
    let root_outer = outer.sqrt();
    let inner = a2 / 4.0 - cube_root_terms(ints.t, ints.p, ints.q, diff)
        + (a2 * b1 * b1 - a2 * b4 * b4) / (12.0 * diff)
        - (-a2 * a * b1 * b1 - a2 * a * b4 * b4) / (2.0 * root_outer * diff);
    if inner < 0.0 {
        return None;
    }
    Some(0.5 * root_outer - 0.5 * inner.sqrt())
}

/// Auxiliary quantities `z, w, s, d` of the radical closed form for the
/// complementary point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplementaryIntermediates {
    pub z: f64,
    pub w: f64,
    pub s: f64,
    /// `None` when `s < 0` puts the cube root off the real line.
    pub d: Option<f64>,
}

/// The side length at which the complementary radical form is an exact root
/// of the equilibrium quartic. Other sides are reached by rescaling.
pub const COMPLEMENTARY_FORM_SIDE: f64 = 2.0;

impl ComplementaryIntermediates {
    /// Evaluated at side `a` with weight magnitudes `|B1|`, `|B4|`.
    pub fn at_side(a: f64, upper_weight: f64, lower_weight: f64) -> ComplementaryIntermediates {
        let (b1_2, b4_2) = (upper_weight * upper_weight, lower_weight * lower_weight);
        let a2 = a * a;
        let diff = b1_2 - b4_2;
        let m = -a * b1_2 + a2 * b1_2 + a * b4_2 - a2 * b4_2;
        let n = 2.0 * a2 * a * b1_2 + a2 * a2 * b1_2 - 2.0 * a2 * a * b4_2 - a2 * a2 * b4_2;
        let sum = a2 * b1_2 + a2 * b4_2;

        let z = -1024.0 * m * m * m + 27648.0 * diff * sum * sum + 9216.0 * diff * m * n;
        let w = 64.0 * m * m + 192.0 * diff * n;
        let s = -4.0 * w * w * w + z * z;
        let d = (s >= 0.0).then(|| {
            let c = (s.sqrt() + z).cbrt();
            0.5 * (-a + a2) + w / (24.0 * 4f64.cbrt() * c * diff) + c / (48.0 * 2f64.cbrt() * diff)
                - m / (6.0 * diff)
        });
        ComplementaryIntermediates { z, w, s, d }
    }
}

/// The complementary height from the nested-radical closed form.
///
/// Requires opposite-sign weights with `|B1| > |B4|`. The expression is
/// evaluated at side [`COMPLEMENTARY_FORM_SIDE`] and scaled to `sp.side()`.
pub fn literal_complementary_y(sp: &SquareProblem) -> Option<f64> {
    let (b1, b4) = (sp.upper_weight.abs(), sp.lower_weight.abs());
    if (sp.upper_weight > 0.0) == (sp.lower_weight > 0.0) || !(b1 > b4) || weights_match(b1, b4) {
        return None;
    }
    let a = COMPLEMENTARY_FORM_SIDE;
    let ints = ComplementaryIntermediates::at_side(a, b1, b4);
    let d = ints.d.filter(|d| *d > 0.0)?;
    let c = (ints.s.sqrt() + ints.z).cbrt();
    let diff = b1 * b1 - b4 * b4;
    let root_d = d.sqrt();
    let numer = 2.0 * 2f64.cbrt() * ints.w / c
        + 4f64.cbrt() * c
        + 32.0 * a * (2.0 + a * (-2.0 - 3.0 / root_d)) * b1 * b1
        + 32.0 * a * (-2.0 + 2.0 * a - 3.0 * a / root_d) * b4 * b4;
    let radicand = -numer / (96.0 * diff);
    if radicand < 0.0 {
        return None;
    }
    let y = root_d / 2.0 + 0.5 * radicand.sqrt();
    Some(y * sp.side / COMPLEMENTARY_FORM_SIDE)
}

/// The four angles subtended at a point by consecutive vertices, radians.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleSet {
    pub alpha102: f64,
    pub alpha203: f64,
    pub alpha304: f64,
    pub alpha401: f64,
}

impl AngleSet {
    /// Measured directly at `point`.
    pub fn at(point: Point, vertices: &[Point; 4]) -> Result<AngleSet> {
        let [a1, a2, a3, a4] = *vertices;
        Ok(AngleSet {
            alpha102: angle_at(point, a1, a2)?,
            alpha203: angle_at(point, a2, a3)?,
            alpha304: angle_at(point, a3, a4)?,
            alpha401: angle_at(point, a4, a1)?,
        })
    }

    pub fn sum(&self) -> f64 {
        self.alpha102 + self.alpha203 + self.alpha304 + self.alpha401
    }

    pub fn as_array(&self) -> [f64; 4] {
        [self.alpha102, self.alpha203, self.alpha304, self.alpha401]
    }

    pub fn to_degrees(&self) -> [f64; 4] {
        self.as_array().map(f64::to_degrees)
    }
}

/// Angles at the on-axis point of height `y`, from the equilibrium relations
/// `B1·cos(α102/2) = B4·cos(α304/2)` and `α401 = α203 = π − α102/2 − α304/2`.
pub fn angles_from_y(sp: &SquareProblem, y: f64) -> Result<AngleSet> {
    let h = sp.side / 2.0;
    if sp.upper_weight <= 0.0 || sp.lower_weight <= 0.0 {
        return Err(Error::InvalidInput(
            "angle formulas need positive weights".into(),
        ));
    }
    if !(y.is_finite() && y.abs() < h) {
        return Err(Error::OutsideFloatingRegime(format!(
            "height {y} is not strictly inside the square"
        )));
    }
    let half_upper_cos = (h - y) / h.hypot(h - y);
    let alpha102 = 2.0 * half_upper_cos.acos();
    let arg = sp.upper_weight / sp.lower_weight * half_upper_cos;
    if !(-1.0 - 1e-12..=1.0 + 1e-12).contains(&arg) {
        return Err(Error::OutsideFloatingRegime(format!(
            "(B1/B4)·cos(α102/2) = {arg} is outside [-1, 1]"
        )));
    }
    let alpha304 = 2.0 * arg.clamp(-1.0, 1.0).acos();
    let side = PI - alpha102 / 2.0 - alpha304 / 2.0;
    Ok(AngleSet {
        alpha102,
        alpha203: side,
        alpha304,
        alpha401: side,
    })
}

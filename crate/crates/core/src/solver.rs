//! Case classification and dispatch for general four-point instances.

use std::f64::consts::PI;
use std::fmt;

use crate::error::{Error, Result};
use crate::geom::{
    angle_at, is_convex_quad, orientation, segment_intersection, strictly_inside_triangle,
    unit_vector, PlanarVector, Point,
};
use crate::square::{angles_from_y, solve_square_ft, weights_match, AngleSet, SquareProblem};

/// Floating solutions must cancel to this fraction of `Σ|B_i|`.
pub const RESIDUAL_REL_TOL: f64 = 1e-6;
/// The diagonal crossing cancels exactly up to rounding.
pub const DIAGONAL_RESIDUAL_REL_TOL: f64 = 1e-9;
pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITER: usize = 10_000;
/// Distance, relative to the problem scale, at which an iterate is treated
/// as sitting on a vertex.
const VERTEX_HIT_REL: f64 = 1e-12;
/// On convergence, an iterate this close to a vertex (relative to scale)
/// snaps to it if the vertex passes the absorbed test.
const VERTEX_SNAP_REL: f64 = 1e-6;
/// Weiszfeld tries a Newton finish this often, and keeps it when the
/// gradient there is below this fraction of `ΣB`.
const NEWTON_ATTEMPT_EVERY: usize = 100;
const NEWTON_ACCEPT_REL: f64 = 1e-12;

/// Four ordered vertices `A1..A4` with their weights `B1..B4`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadProblem {
    vertices: [Point; 4],
    weights: [f64; 4],
}

impl QuadProblem {
    /// Rejects non-finite data, coincident vertices, four collinear points and
    /// zero weights. Weights of either sign are accepted here.
    pub fn new(vertices: [Point; 4], weights: [f64; 4]) -> Result<Self> {
        if let Some(i) = vertices.iter().position(|p| !p.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "vertex A{} is not finite",
                i + 1
            )));
        }
        if let Some(i) = weights.iter().position(|w| !w.is_finite() || *w == 0.0) {
            return Err(Error::InvalidInput(format!(
                "weight B{} must be finite and nonzero",
                i + 1
            )));
        }
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
        let [a, b, c, d] = vertices;
        if orientation(a, b, c) == 0 && orientation(a, b, d) == 0 {
            return Err(Error::DegenerateInput(
                "the four points are collinear".into(),
            ));
        }
        Ok(QuadProblem { vertices, weights })
    }

    pub fn vertices(&self) -> &[Point; 4] {
        &self.vertices
    }

    pub fn weights(&self) -> &[f64; 4] {
        &self.weights
    }

    /// `Σ |B_i|`.
    pub fn weight_sum(&self) -> f64 {
        self.weights.iter().map(|w| w.abs()).sum()
    }

    /// Largest pairwise vertex distance.
    pub fn scale(&self) -> f64 {
        let mut s = 0.0f64;
        for i in 0..4 {
            for j in (i + 1)..4 {
                s = s.max(self.vertices[i].distance(&self.vertices[j]));
            }
        }
        s
    }

    pub fn with_weights(&self, weights: [f64; 4]) -> Result<QuadProblem> {
        QuadProblem::new(self.vertices, weights)
    }

    fn all_positive(&self) -> bool {
        self.weights.iter().all(|w| *w > 0.0)
    }

    fn require_positive(&self) -> Result<()> {
        if self.all_positive() {
            Ok(())
        } else {
            Err(Error::InvalidInput(
                "solving and classification need positive weights".into(),
            ))
        }
    }

    /// Cyclic relabeling `A_i -> A_{i+2}`.
    fn shifted_by_two(&self) -> QuadProblem {
        let v = self.vertices;
        let w = self.weights;
        QuadProblem {
            vertices: [v[2], v[3], v[0], v[1]],
            weights: [w[2], w[3], w[0], w[1]],
        }
    }
}

/// Where the optimum sits, per the vertex test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseTag {
    Floating,
    /// 1-based vertex index.
    AbsorbedAt(usize),
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseTag::Floating => f.write_str("Floating"),
            CaseTag::AbsorbedAt(i) => write!(f, "AbsorbedAt({i})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    ClosedFormSquare,
    AngleTransfer,
    Diagonal,
    Weiszfeld,
    Absorbed,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::ClosedFormSquare => "closed-form-square",
            Method::AngleTransfer => "angle-transfer",
            Method::Diagonal => "diagonal",
            Method::Weiszfeld => "weiszfeld",
            Method::Absorbed => "absorbed",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Solution {
    pub location: Point,
    pub case: CaseTag,
    pub method: Method,
    /// Equilibrium norm for floating solutions; for absorbed ones the slack
    /// `B_i − R_i ≥ 0` of the vertex test.
    pub residual: f64,
    pub objective: f64,
    /// A closed form was attempted but failed verification, and the
    /// location came from Weiszfeld iteration instead.
    pub fallback: bool,
}

impl Solution {
    fn floating(
        qp: &QuadProblem,
        location: Point,
        method: Method,
        fallback: bool,
    ) -> Result<Solution> {
        Ok(Solution {
            location,
            case: CaseTag::Floating,
            method,
            residual: equilibrium_residual(qp, location)?,
            objective: objective(qp, location),
            fallback,
        })
    }
}

/// `Σ B_j·u(A_i, A_j)` over `j ≠ i`: the pull of the other vertices at `A_i`.
pub fn vertex_pull(qp: &QuadProblem, i: usize) -> PlanarVector {
    pull_at_vertex(qp.vertices(), qp.weights(), i)
}

fn pull_at_vertex(points: &[Point], weights: &[f64], i: usize) -> PlanarVector {
    let mut sum = PlanarVector::default();
    for (j, (p, w)) in points.iter().zip(weights).enumerate() {
        if j == i || *p == points[i] {
            continue;
        }
        let u = unit_vector(points[i], *p).expect("distinct points");
        sum = sum + *w * u;
    }
    sum
}

/// `R_i = ‖Σ_{j≠i} B_j·u(A_i, A_j)‖` for each vertex.
pub fn vertex_pulls(qp: &QuadProblem) -> [f64; 4] {
    std::array::from_fn(|i| vertex_pull(qp, i).norm())
}

/// Floating, or absorbed at the unique vertex with `R_i ≤ B_i`.
pub fn classify(qp: &QuadProblem) -> Result<CaseTag> {
    qp.require_positive()?;
    let pulls = vertex_pulls(qp);
    let absorbing: Vec<usize> = (0..4).filter(|&i| pulls[i] <= qp.weights[i]).collect();
    match absorbing.as_slice() {
        [] => Ok(CaseTag::Floating),
        [i] => Ok(CaseTag::AbsorbedAt(i + 1)),
        [i, j, ..] => Err(Error::InconsistentClassification {
            first: i + 1,
            second: j + 1,
        }),
    }
}

/// `‖Σ B_i·u(x, A_i)‖`; signed weights allowed.
pub fn equilibrium_residual(qp: &QuadProblem, x: Point) -> Result<f64> {
    let mut sum = PlanarVector::default();
    for (p, w) in qp.vertices.iter().zip(qp.weights) {
        sum = sum + w * unit_vector(x, *p)?;
    }
    Ok(sum.norm())
}

/// `Σ B_i·‖x − A_i‖`; signed weights allowed.
pub fn objective(qp: &QuadProblem, x: Point) -> f64 {
    qp.vertices
        .iter()
        .zip(qp.weights)
        .map(|(p, w)| w * x.distance(p))
        .sum()
}

/// Weighted geometric median by Weiszfeld's fixed-point iteration.
///
/// Starts at the weighted centroid. An iterate that lands on a vertex is
/// either accepted there (absorbed test passes) or pushed off along the
/// pull of the other points. `tol` is relative to the bounding-box diagonal.
pub fn weiszfeld(points: &[Point], weights: &[f64], tol: f64, max_iter: usize) -> Result<Point> {
    if points.len() < 3 || points.len() != weights.len() {
        return Err(Error::InvalidInput(
            "weiszfeld needs at least three points with one weight each".into(),
        ));
    }
    if weights.iter().any(|w| !(w.is_finite() && *w > 0.0)) {
        return Err(Error::InvalidInput(
            "weiszfeld needs positive finite weights".into(),
        ));
    }
    if points.iter().any(|p| !p.is_finite()) {
        return Err(Error::InvalidInput("weiszfeld needs finite points".into()));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidInput("tolerance must be positive".into()));
    }
    if points
        .iter()
        .skip(2)
        .all(|p| orientation(points[0], points[1], *p) == 0)
    {
        return Err(Error::DegenerateInput(
            "weiszfeld needs non-collinear points".into(),
        ));
    }

    let (mut lo, mut hi) = (points[0], points[0]);
    for p in points {
        lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
    }
    let scale = lo.distance(&hi);
    let total: f64 = weights.iter().sum();
    let mut x = Point::new(
        points
            .iter()
            .zip(weights)
            .map(|(p, w)| w * p.x)
            .sum::<f64>()
            / total,
        points
            .iter()
            .zip(weights)
            .map(|(p, w)| w * p.y)
            .sum::<f64>()
            / total,
    );

    for iter in 1..=max_iter {
        let hit = points
            .iter()
            .position(|p| x.distance(p) <= VERTEX_HIT_REL * scale);
        let next = match hit {
            Some(k) => {
                let pull = pull_at_vertex(points, weights, k);
                let r = pull.norm();
                if r <= weights[k] {
                    return Ok(points[k]);
                }
                // Step length that a Weiszfeld update would take with the
                // vertex's own term removed, scaled by the excess pull.
                let denom: f64 = points
                    .iter()
                    .zip(weights)
                    .enumerate()
                    .filter(|(j, _)| *j != k)
                    .map(|(_, (p, w))| w / points[k].distance(p))
                    .sum();
                let step = (r - weights[k]) / denom;
                points[k].translate((step / r) * pull)
            }
            None => {
                let (mut sx, mut sy, mut sw) = (0.0, 0.0, 0.0);
                for (p, w) in points.iter().zip(weights) {
                    let c = w / x.distance(p);
                    sx += c * p.x;
                    sy += c * p.y;
                    sw += c;
                }
                Point::new(sx / sw, sy / sw)
            }
        };
        let step = x.distance(&next);
        x = next;
        if step < tol * scale {
            let x = snap_to_absorbing_vertex(points, weights, x, scale);
            if points.contains(&x) {
                return Ok(x);
            }
            return Ok(newton_polish(points, weights, x, scale));
        }
        // Weiszfeld converges only linearly when the optimum sits close to a
        // vertex; a Newton attempt from the current iterate usually finishes.
        if iter % NEWTON_ATTEMPT_EVERY == 0 && hit.is_none() {
            let polished = newton_polish(points, weights, x, scale);
            if interior_gradient(points, weights, polished, scale)
                .is_some_and(|g| g <= NEWTON_ACCEPT_REL * total)
            {
                return Ok(polished);
            }
        }
    }

    let residual = {
        let mut sum = PlanarVector::default();
        for (p, w) in points.iter().zip(weights) {
            if let Ok(u) = unit_vector(x, *p) {
                sum = sum + *w * u;
            }
        }
        sum.norm()
    };
    Err(Error::NonConvergence {
        last: x,
        residual,
        iterations: max_iter,
    })
}

/// Damped Newton steps on the gradient of `Σ B_i·‖x − A_i‖` from an
/// interior point, kept only while the objective does not increase.
fn newton_polish(points: &[Point], weights: &[f64], mut x: Point, scale: f64) -> Point {
    let value = |x: Point| -> f64 {
        points
            .iter()
            .zip(weights)
            .map(|(p, w)| w * x.distance(p))
            .sum()
    };
    let mut fx = value(x);
    for _ in 0..20 {
        let (mut gx, mut gy) = (0.0, 0.0);
        let (mut hxx, mut hxy, mut hyy) = (0.0, 0.0, 0.0);
        for (p, w) in points.iter().zip(weights) {
            let d = x.distance(p);
            if d <= VERTEX_HIT_REL * scale {
                return x;
            }
            let (ux, uy) = ((x.x - p.x) / d, (x.y - p.y) / d);
            gx += w * ux;
            gy += w * uy;
            let c = w / d;
            hxx += c * (1.0 - ux * ux);
            hxy -= c * ux * uy;
            hyy += c * (1.0 - uy * uy);
        }
        let det = hxx * hyy - hxy * hxy;
        if !(det > 0.0) {
            return x;
        }
        let step = PlanarVector::new(-(hyy * gx - hxy * gy) / det, -(hxx * gy - hxy * gx) / det);
        let mut t = 1.0;
        let mut improved = false;
        for _ in 0..30 {
            let candidate = x.translate(t * step);
            let fc = value(candidate);
            if fc <= fx {
                let moved = candidate.distance(&x);
                x = candidate;
                fx = fc;
                improved = moved > 0.0;
                break;
            }
            t *= 0.5;
        }
        if !improved || t * step.norm() <= 1e-15 * scale {
            break;
        }
    }
    x
}

/// Norm of the objective gradient at a point away from every vertex.
fn interior_gradient(points: &[Point], weights: &[f64], x: Point, scale: f64) -> Option<f64> {
    let mut sum = PlanarVector::default();
    for (p, w) in points.iter().zip(weights) {
        if x.distance(p) <= VERTEX_HIT_REL * scale {
            return None;
        }
        sum = sum + *w * unit_vector(x, *p).ok()?;
    }
    Some(sum.norm())
}

fn snap_to_absorbing_vertex(points: &[Point], weights: &[f64], x: Point, scale: f64) -> Point {
    let nearest = points
        .iter()
        .enumerate()
        .min_by(|a, b| x.distance(a.1).total_cmp(&x.distance(b.1)))
        .map(|(k, _)| k)
        .expect("non-empty");
    if x.distance(&points[nearest]) <= VERTEX_SNAP_REL * scale
        && pull_at_vertex(points, weights, nearest).norm() <= weights[nearest]
    {
        points[nearest]
    } else {
        x
    }
}

fn is_diagonal_pattern(w: &[f64; 4]) -> bool {
    weights_match(w[0], w[2]) && weights_match(w[1], w[3])
}

fn is_pair_pattern(w: &[f64; 4]) -> bool {
    weights_match(w[0], w[1]) && weights_match(w[2], w[3]) && !weights_match(w[0], w[2])
}

/// `B1 = B3`, `B2 = B4` on a convex quadrilateral: the diagonals cross at the
/// optimum. Uniformly negative weights give the same stationary point.
pub fn solve_diagonal_case(qp: &QuadProblem) -> Result<Solution> {
    if !is_diagonal_pattern(qp.weights()) {
        return Err(Error::WrongCase(
            "diagonal case needs B1 = B3 and B2 = B4".into(),
        ));
    }
    let positive = qp.all_positive();
    if !positive && !qp.weights.iter().all(|w| *w < 0.0) {
        return Err(Error::WrongCase(
            "diagonal case needs all weights of one sign".into(),
        ));
    }
    if !is_convex_quad(qp.vertices())? {
        return Err(Error::WrongCase(
            "diagonal case needs a convex quadrilateral".into(),
        ));
    }
    let magnitudes = qp.with_weights(qp.weights.map(f64::abs))?;
    if let CaseTag::AbsorbedAt(vertex) = classify(&magnitudes)? {
        return Err(Error::NotFloating { vertex });
    }
    let [a1, a2, a3, a4] = qp.vertices;
    let location = segment_intersection(a1, a3, a2, a4)?
        .ok_or_else(|| Error::WrongCase("diagonals do not cross".into()))?;
    let solution = Solution::floating(qp, location, Method::Diagonal, false)?;
    if solution.residual > DIAGONAL_RESIDUAL_REL_TOL * qp.weight_sum() {
        return Err(Error::OutsideFloatingRegime(format!(
            "diagonal crossing leaves residual {:e}",
            solution.residual
        )));
    }
    Ok(solution)
}

/// Whether the quadrilateral is a square, with `(centre, unit normal of
/// A1A2 pointing from the centre toward that edge, side)`.
fn as_square(qp: &QuadProblem) -> Option<(Point, PlanarVector, f64)> {
    let v = qp.vertices;
    let side = v[0].distance(&v[1]);
    let tol = 1e-12;
    let sides_equal = (0..4).all(|i| (v[i].distance(&v[(i + 1) % 4]) - side).abs() <= tol * side);
    let d1 = v[0].distance(&v[2]);
    let d2 = v[1].distance(&v[3]);
    if !sides_equal || (d1 - d2).abs() > tol * d1 {
        return None;
    }
    let centre = segment_intersection(v[0], v[2], v[1], v[3]).ok()??;
    let mid = Point::new((v[0].x + v[1].x) / 2.0, (v[0].y + v[1].y) / 2.0);
    let up = unit_vector(centre, mid).ok()?;
    Some((centre, up, side))
}

/// Optimum for `B1 = B2`, `B3 = B4` (either pair heavier) on a convex
/// quadrilateral, by transferring the vertex angles of the matching square.
///
/// The angles at the optimum depend only on `B1/B4`. Given them, the
/// direction from `A1` to the optimum makes the angle `α013` with `A1A3`,
/// where
///
/// `cot α013 = (sin φ − cos φ·cot α102 − k·cot(α304+α401)) / (k − cos φ − sin φ·cot α102)`
///
/// with `φ = ∠A2A1A3` and `k = |A1A3|/|A1A2|`, and the distance follows
/// from the sine law in triangle `A1A0A2`. The result is checked against
/// the equilibrium condition; on failure the Weiszfeld result is returned
/// with `fallback` set.
pub fn solve_pair_case(qp: &QuadProblem) -> Result<Solution> {
    if !is_pair_pattern(qp.weights()) {
        return Err(Error::WrongCase(
            "pair case needs B1 = B2 and B3 = B4 with B1 != B3".into(),
        ));
    }
    qp.require_positive()?;
    if !is_convex_quad(qp.vertices())? {
        return Err(Error::WrongCase(
            "pair case needs a convex quadrilateral".into(),
        ));
    }
    if let CaseTag::AbsorbedAt(vertex) = classify(qp)? {
        return Err(Error::NotFloating { vertex });
    }
    let labeled = if qp.weights[2] > qp.weights[0] {
        qp.shifted_by_two()
    } else {
        *qp
    };
    match angle_transfer(&labeled) {
        Some(location) => {
            let solution = Solution::floating(qp, location, Method::AngleTransfer, false)?;
            if solution.residual <= RESIDUAL_REL_TOL * qp.weight_sum() {
                return Ok(solution);
            }
            weiszfeld_fallback(qp)
        }
        None => weiszfeld_fallback(qp),
    }
}

fn weiszfeld_fallback(qp: &QuadProblem) -> Result<Solution> {
    let location = weiszfeld(qp.vertices(), qp.weights(), DEFAULT_TOL, DEFAULT_MAX_ITER)?;
    Solution::floating(qp, location, Method::Weiszfeld, true)
}

/// Angle-transfer location, or `None` when a denominator vanishes or the
/// point falls outside triangle `A1A2A3`. Expects `B1 = B2 > B3 = B4`.
fn angle_transfer(qp: &QuadProblem) -> Option<Point> {
    let [a1, a2, a3, _] = qp.vertices;
    let heavy = qp.weights[0];
    let light = qp.weights[3];

    let unit = SquareProblem::new(1.0, heavy, light).ok()?;
    let y = solve_square_ft(&unit).ok()?;
    let AngleSet {
        alpha102,
        alpha304: _,
        alpha401,
        ..
    } = angles_from_y(&unit, y).ok()?;

    let near_zero = |v: f64| v.abs() <= 1e-12;

    // cot(α304 + α401) from the equilibrium of the four weighted directions.
    let cot_denom = light * alpha401.sin() - heavy * alpha102.sin();
    if near_zero(cot_denom / heavy) {
        return None;
    }
    let cot_opposite = (heavy + heavy * alpha102.cos() + light * alpha401.cos()) / cot_denom;

    let phi = angle_at(a1, a2, a3).ok()?;
    let a12 = a1.distance(&a2);
    let k = a1.distance(&a3) / a12;
    let sin_102 = alpha102.sin();
    if near_zero(sin_102) {
        return None;
    }
    let cot_102 = alpha102.cos() / sin_102;

    let numer = phi.sin() - phi.cos() * cot_102 - k * cot_opposite;
    let denom = -phi.cos() - phi.sin() * cot_102 + k;
    if near_zero(denom) && near_zero(numer) {
        return None;
    }
    // arccot onto (0, π)
    let alpha013 = denom.atan2(numer).rem_euclid(PI);
    if alpha013 == 0.0 {
        return None;
    }

    let alpha120 = PI - alpha102 - (phi - alpha013);
    let a01 = a12 * alpha120.sin() / sin_102;
    if !(a01 > 0.0) {
        return None;
    }
    let toward_a3 = unit_vector(a1, a3).ok()?;
    let turn = (a2 - a1).cross(&(a3 - a1));
    let direction = if turn < 0.0 {
        toward_a3.rotate(alpha013)
    } else {
        toward_a3.rotate(-alpha013)
    };
    let location = a1.translate(a01 * direction);
    strictly_inside_triangle(location, a1, a2, a3).then_some(location)
}

/// Which solution route `solve_with` may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MethodChoice {
    #[default]
    Auto,
    /// Only closed forms (square, angle transfer, diagonal); anything else is
    /// an error.
    ClosedForm,
    Weiszfeld,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveOptions {
    pub method: MethodChoice,
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            method: MethodChoice::Auto,
            tol: DEFAULT_TOL,
            max_iter: DEFAULT_MAX_ITER,
        }
    }
}

/// Classify, then dispatch to the absorbed vertex, the diagonal crossing,
/// the square or angle-transfer closed form, or Weiszfeld iteration.
pub fn solve(qp: &QuadProblem) -> Result<Solution> {
    solve_with(qp, &SolveOptions::default())
}

pub fn solve_with(qp: &QuadProblem, options: &SolveOptions) -> Result<Solution> {
    qp.require_positive()?;

    if options.method == MethodChoice::Weiszfeld {
        let location = weiszfeld(qp.vertices(), qp.weights(), options.tol, options.max_iter)?;
        return match qp.vertices.iter().position(|v| *v == location) {
            Some(i) => Ok(absorbed_solution(qp, i)),
            None => Solution::floating(qp, location, Method::Weiszfeld, false),
        };
    }

    if let CaseTag::AbsorbedAt(vertex) = classify(qp)? {
        if options.method == MethodChoice::ClosedForm {
            return Err(Error::NotFloating { vertex });
        }
        return Ok(absorbed_solution(qp, vertex - 1));
    }

    let convex = is_convex_quad(qp.vertices())?;
    let solution = if convex && is_diagonal_pattern(qp.weights()) {
        solve_diagonal_case(qp)?
    } else if convex && is_pair_pattern(qp.weights()) {
        match closed_form_square(qp) {
            Some(solution) => solution,
            None => solve_pair_case(qp)?,
        }
    } else if options.method == MethodChoice::ClosedForm {
        return Err(Error::WrongCase(
            "no closed form for this weight pattern or shape".into(),
        ));
    } else {
        let location = weiszfeld(qp.vertices(), qp.weights(), options.tol, options.max_iter)?;
        Solution::floating(qp, location, Method::Weiszfeld, false)?
    };

    if options.method == MethodChoice::ClosedForm && solution.fallback {
        return Err(Error::WrongCase(
            "closed form failed verification for this quadrilateral".into(),
        ));
    }
    Ok(solution)
}

fn absorbed_solution(qp: &QuadProblem, index: usize) -> Solution {
    let location = qp.vertices[index];
    Solution {
        location,
        case: CaseTag::AbsorbedAt(index + 1),
        method: Method::Absorbed,
        residual: qp.weights[index] - vertex_pull(qp, index).norm(),
        objective: objective(qp, location),
        fallback: false,
    }
}

/// The square closed form mapped onto an arbitrary placement of a square.
fn closed_form_square(qp: &QuadProblem) -> Option<Solution> {
    let labeled = if qp.weights[2] > qp.weights[0] {
        qp.shifted_by_two()
    } else {
        *qp
    };
    let (centre, up, side) = as_square(&labeled)?;
    let sp = SquareProblem::new(side, labeled.weights[0], labeled.weights[3]).ok()?;
    let y = solve_square_ft(&sp).ok()?;
    let location = centre.translate(y * up);
    let solution = Solution::floating(qp, location, Method::ClosedFormSquare, false).ok()?;
    (solution.residual <= RESIDUAL_REL_TOL * qp.weight_sum()).then_some(solution)
}

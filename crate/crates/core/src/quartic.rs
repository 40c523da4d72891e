//! Real roots of real quartics.
//!
//! Ferrari's reduction through the resolvent cubic gives starting values;
//! every candidate is then polished by Newton iteration on the original
//! (max-coefficient normalized) polynomial. Candidates closer than
//! `1e-7 * max(1, |root|)` are merged into one root with multiplicity.

use crate::error::{Error, Result};

const MAX_POLISH_ITERATIONS: usize = 50;
const MERGE_REL_TOL: f64 = 1e-7;
/// Accepted residual of a polished root, relative to `max(1, scale_at(r))`.
pub const ROOT_RESIDUAL_TOL: f64 = 1e-9;

/// `c4·y⁴ + c3·y³ + c2·y² + c1·y + c0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuarticPoly {
    pub c4: f64,
    pub c3: f64,
    pub c2: f64,
    pub c1: f64,
    pub c0: f64,
}

impl QuarticPoly {
    pub const fn new(c4: f64, c3: f64, c2: f64, c1: f64, c0: f64) -> Self {
        QuarticPoly { c4, c3, c2, c1, c0 }
    }

    /// `lead · Π (y − r_i)`.
    pub fn from_roots(lead: f64, roots: [f64; 4]) -> Self {
        let [a, b, c, d] = roots;
        QuarticPoly {
            c4: lead,
            c3: -lead * (a + b + c + d),
            c2: lead * (a * b + a * c + a * d + b * c + b * d + c * d),
            c1: -lead * (a * b * c + a * b * d + a * c * d + b * c * d),
            c0: lead * a * b * c * d,
        }
    }

    /// Coefficients from the leading term down.
    pub fn coefficients(&self) -> [f64; 5] {
        [self.c4, self.c3, self.c2, self.c1, self.c0]
    }

    pub fn is_finite(&self) -> bool {
        self.coefficients().iter().all(|c| c.is_finite())
    }

    pub fn evaluate(&self, y: f64) -> f64 {
        (((self.c4 * y + self.c3) * y + self.c2) * y + self.c1) * y + self.c0
    }

    /// Value and first derivative by Horner's scheme.
    fn eval_with_derivative(&self, y: f64) -> (f64, f64) {
        let mut p = self.c4;
        let mut dp = 0.0;
        for c in [self.c3, self.c2, self.c1, self.c0] {
            dp = dp * y + p;
            p = p * y + c;
        }
        (p, dp)
    }

    /// `Σ |c_k|·|y|^k`, the magnitude against which a residual at `y` is judged.
    pub fn scale_at(&self, y: f64) -> f64 {
        let ay = y.abs();
        self.coefficients()
            .iter()
            .fold(0.0, |acc, c| acc * ay + c.abs())
    }

    /// Copy divided by the largest coefficient magnitude.
    pub fn normalized(&self) -> QuarticPoly {
        let m = self
            .coefficients()
            .iter()
            .fold(0.0f64, |acc, c| acc.max(c.abs()));
        if m == 0.0 {
            return *self;
        }
        QuarticPoly::new(
            self.c4 / m,
            self.c3 / m,
            self.c2 / m,
            self.c1 / m,
            self.c0 / m,
        )
    }
}

/// Horner evaluation of `p` at `y`.
pub fn evaluate(p: &QuarticPoly, y: f64) -> f64 {
    p.evaluate(y)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealRoot {
    pub value: f64,
    pub multiplicity: usize,
}

/// Real roots in ascending order, with multiplicities.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct RealRoots {
    roots: Vec<RealRoot>,
}

impl RealRoots {
    pub fn roots(&self) -> &[RealRoot] {
        &self.roots
    }

    /// Root values repeated by multiplicity, ascending.
    pub fn values(&self) -> Vec<f64> {
        self.roots
            .iter()
            .flat_map(|r| std::iter::repeat_n(r.value, r.multiplicity))
            .collect()
    }

    /// Distinct root values, ascending.
    pub fn distinct(&self) -> Vec<f64> {
        self.roots.iter().map(|r| r.value).collect()
    }

    /// Total count including multiplicity.
    pub fn count(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }
}

/// All real roots of a quartic with nonzero leading coefficient.
pub fn solve_real_quartic(p: &QuarticPoly) -> Result<RealRoots> {
    if !p.is_finite() {
        return Err(Error::InvalidInput(
            "quartic has non-finite coefficients".into(),
        ));
    }
    if p.c4 == 0.0 {
        return Err(Error::InvalidInput(
            "leading quartic coefficient is zero".into(),
        ));
    }
    let scaled = p.normalized();

    let mut candidates: Vec<(f64, usize)> = ferrari_candidates(&scaled)
        .into_iter()
        .map(|y| polish(&scaled, y))
        .filter(|&y| accept(&scaled, y))
        .map(|y| (y, 1))
        .collect();
    candidates.sort_by(|a, b| a.0.total_cmp(&b.0));

    Ok(RealRoots {
        roots: merge(candidates),
    })
}

fn accept(p: &QuarticPoly, y: f64) -> bool {
    y.is_finite() && p.evaluate(y).abs() <= ROOT_RESIDUAL_TOL * p.scale_at(y).max(1.0)
}

/// Closed-form starting values, possibly with duplicates.
fn ferrari_candidates(p: &QuarticPoly) -> Vec<f64> {
    let b = p.c3 / p.c4;
    let c = p.c2 / p.c4;
    let d = p.c1 / p.c4;
    let e = p.c0 / p.c4;

    // y = x − b/4 removes the cubic term: x⁴ + px² + qx + r.
    let shift = b / 4.0;
    let b2 = b * b;
    let dp = c - 3.0 * b2 / 8.0;
    let dq = d - b * c / 2.0 + b2 * b / 8.0;
    let dr = e - b * d / 4.0 + b2 * c / 16.0 - 3.0 * b2 * b2 / 256.0;

    let magnitude = dp.abs().max(dq.abs()).max(dr.abs()).max(1e-300);
    let mut xs = Vec::with_capacity(4);

    if dq.abs() <= 1e-14 * magnitude {
        // Biquadratic in x².
        for z in quadratic_roots(1.0, dp, dr) {
            if z >= 0.0 {
                let s = z.sqrt();
                xs.push(s);
                xs.push(-s);
            } else if z > -1e-12 * magnitude.sqrt() {
                xs.push(0.0);
            }
        }
    } else {
        // (x² + m)² = (2m − p)x² − qx + (m² − r) is a perfect square when m
        // solves the resolvent cubic; its largest root has 2m − p > 0.
        let m = largest_cubic_root(-dp / 2.0, -dr, dp * dr / 2.0 - dq * dq / 8.0);
        let two_m_minus_p = 2.0 * m - dp;
        if two_m_minus_p > 0.0 {
            let s = two_m_minus_p.sqrt();
            let k = dq / (2.0 * s);
            xs.extend(quadratic_roots(1.0, -s, m + k));
            xs.extend(quadratic_roots(1.0, s, m - k));
        } else {
            xs.extend(quadratic_roots(1.0, dp, dr));
        }
    }
    xs.into_iter().map(|x| x - shift).collect()
}

/// Real roots of `a·x² + b·x + c`, using the cancellation-free form.
///
/// A discriminant within rounding of zero yields two starting values split
/// around the vertex, so that polishing can separate a close pair of real
/// roots or converge both onto a double root.
fn quadratic_roots(a: f64, b: f64, c: f64) -> Vec<f64> {
    let disc = b * b - 4.0 * a * c;
    let tol = 1e-12 * (b * b + (4.0 * a * c).abs());
    if disc < -tol {
        return Vec::new();
    }
    if disc <= tol {
        let r = -b / (2.0 * a);
        let delta = 0.5 * tol.sqrt() / a.abs();
        return vec![r - delta, r + delta];
    }
    let q = -0.5 * (b + b.signum() * disc.sqrt());
    if q == 0.0 {
        return vec![0.0, 0.0];
    }
    vec![q / a, c / q]
}

/// Largest real root of the monic cubic `m³ + a·m² + b·m + c`.
fn largest_cubic_root(a: f64, b: f64, c: f64) -> f64 {
    let shift = a / 3.0;
    let p = b - a * a / 3.0;
    let q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    let half_q = q / 2.0;
    let third_p = p / 3.0;
    let disc = half_q * half_q + third_p * third_p * third_p;

    let t = if disc > 0.0 {
        // One real root; real cube roots only.
        let u = (-half_q - half_q.signum() * disc.sqrt()).cbrt();
        if u == 0.0 {
            0.0
        } else {
            u - third_p / u
        }
    } else if p == 0.0 {
        0.0
    } else {
        // Three real roots: trigonometric form, k = 0 branch is the largest.
        let r = (-third_p).sqrt();
        let arg = (-half_q / (r * r * r)).clamp(-1.0, 1.0);
        2.0 * r * (arg.acos() / 3.0).cos()
    };

    // A few Newton steps on the original cubic.
    let mut m = t - shift;
    for _ in 0..8 {
        let f = ((m + a) * m + b) * m + c;
        let df = (3.0 * m + 2.0 * a) * m + b;
        if df == 0.0 || !f.is_finite() {
            break;
        }
        let next = m - f / df;
        if (next - m).abs() <= 1e-16 * m.abs().max(1.0) {
            m = next;
            break;
        }
        m = next;
    }
    m
}

/// Newton iteration from `y` until |P| stops decreasing.
fn polish(p: &QuarticPoly, mut y: f64) -> f64 {
    let mut best = p.evaluate(y).abs();
    for _ in 0..MAX_POLISH_ITERATIONS {
        let (f, df) = p.eval_with_derivative(y);
        if f == 0.0 || df == 0.0 {
            break;
        }
        let next = y - f / df;
        let value = p.evaluate(next).abs();
        if !(value < best) {
            // Accept equal-residual steps only while they still move.
            if value == best && next != y {
                y = next;
                continue;
            }
            break;
        }
        best = value;
        y = next;
    }
    y
}

fn merge(sorted: Vec<(f64, usize)>) -> Vec<RealRoot> {
    let mut out: Vec<(f64, usize, f64)> = Vec::new(); // (sum, count, first)
    for (y, mult) in sorted {
        if let Some(last) = out.last_mut() {
            let mean = last.0 / last.1 as f64;
            if (y - mean).abs() < MERGE_REL_TOL * y.abs().max(mean.abs()).max(1.0) {
                last.0 += y * mult as f64;
                last.1 += mult;
                continue;
            }
        }
        out.push((y * mult as f64, mult, y));
    }
    out.into_iter()
        .map(|(sum, count, _)| RealRoot {
            value: sum / count as f64,
            multiplicity: count.min(4),
        })
        .collect()
}

//! Ratio sweeps over the square configuration with `B1 = B2 = ratio` and
//! `B3 = B4 = 1`.
//!
//! CSV header: `ratio,y,alpha102,alpha304,alpha401,residual`. Angles are in
//! degrees. A row whose optimum is absorbed at a vertex carries `absorbed`
//! in the `y` column and leaves the other columns empty.

use fermat_quad::solver::equilibrium_residual;
use fermat_quad::square::{angles_from_y, solve_square_ft};
use fermat_quad::{classify, CaseTag, SquareProblem};
use rayon::prelude::*;

use crate::error::CliError;
use crate::report::num;

pub const HEADER: [&str; 6] = ["ratio", "y", "alpha102", "alpha304", "alpha401", "residual"];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    pub side: f64,
    pub ratio_min: f64,
    pub ratio_max: f64,
    pub steps: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SweepRow {
    Floating {
        ratio: f64,
        y: f64,
        /// α102, α304, α401 in radians.
        angles: [f64; 3],
        residual: f64,
    },
    Absorbed {
        ratio: f64,
    },
}

impl SweepSpec {
    pub fn validate(&self) -> Result<(), CliError> {
        if !(self.side.is_finite() && self.side > 0.0) {
            return Err(CliError::input(format!(
                "side must be positive and finite, got {}",
                self.side
            )));
        }
        if !(self.ratio_min.is_finite() && self.ratio_max.is_finite())
            || self.ratio_min < 1.0
            || self.ratio_min >= self.ratio_max
        {
            return Err(CliError::input(format!(
                "invalid ratio range [{}, {}]: need 1 <= ratio-min < ratio-max",
                self.ratio_min, self.ratio_max
            )));
        }
        if self.steps < 2 {
            return Err(CliError::input(format!(
                "steps must be at least 2, got {}",
                self.steps
            )));
        }
        Ok(())
    }

    /// Evenly spaced ratios, both ends included.
    pub fn ratios(&self) -> Vec<f64> {
        let last = (self.steps - 1) as f64;
        (0..self.steps)
            .map(|k| match k {
                0 => self.ratio_min,
                k if k == self.steps - 1 => self.ratio_max,
                k => self.ratio_min + (self.ratio_max - self.ratio_min) * (k as f64 / last),
            })
            .collect()
    }
}

/// Rows in ratio order; rows are evaluated in parallel.
pub fn run(spec: &SweepSpec) -> Result<Vec<SweepRow>, CliError> {
    spec.validate()?;
    spec.ratios()
        .into_par_iter()
        .map(|ratio| row(spec.side, ratio))
        .collect()
}

fn row(side: f64, ratio: f64) -> Result<SweepRow, CliError> {
    let sp = SquareProblem::new(side, ratio, 1.0)?;
    let qp = sp.quad_problem();
    if let CaseTag::AbsorbedAt(_) = classify(&qp)? {
        return Ok(SweepRow::Absorbed { ratio });
    }
    let y = solve_square_ft(&sp)?;
    let angles = angles_from_y(&sp, y)?;
    Ok(SweepRow::Floating {
        ratio,
        y,
        angles: [angles.alpha102, angles.alpha304, angles.alpha401],
        residual: equilibrium_residual(&qp, sp.location(y))?,
    })
}

pub fn to_csv(rows: &[SweepRow]) -> Result<String, CliError> {
    let fail = |e: csv::Error| CliError::solver(format!("cannot write CSV: {e}"));
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(HEADER).map_err(fail)?;
    for r in rows {
        let record = match *r {
            SweepRow::Floating {
                ratio,
                y,
                angles,
                residual,
            } => {
                let [a, b, c] = angles.map(|t| num(t.to_degrees()));
                [num(ratio), num(y), a, b, c, num(residual)]
            }
            SweepRow::Absorbed { ratio } => [
                num(ratio),
                "absorbed".into(),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
            ],
        };
        w.write_record(&record).map_err(fail)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::solver(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::solver(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equal_weights_row_is_centered_with_right_angles() {
        let rows = run(&SweepSpec {
            side: 2.0,
            ratio_min: 1.0,
            ratio_max: 2.0,
            steps: 3,
        })
        .unwrap();
        let SweepRow::Floating {
            y,
            angles,
            residual,
            ..
        } = rows[0]
        else {
            panic!("ratio 1 must float");
        };
        assert_eq!(y, 0.0);
        for a in angles {
            assert!((a.to_degrees() - 90.0).abs() < 1e-9);
        }
        assert!(residual < 1e-12);
    }

    #[test]
    fn ratios_hit_both_ends_and_are_increasing() {
        let spec = SweepSpec {
            side: 1.0,
            ratio_min: 1.0,
            ratio_max: 3.0,
            steps: 7,
        };
        let r = spec.ratios();
        assert_eq!(r.len(), 7);
        assert_eq!((r[0], r[6]), (1.0, 3.0));
        assert!(r.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn invalid_ranges_are_rejected() {
        for spec in [
            SweepSpec {
                side: 2.0,
                ratio_min: 0.5,
                ratio_max: 2.0,
                steps: 3,
            },
            SweepSpec {
                side: 2.0,
                ratio_min: 2.0,
                ratio_max: 2.0,
                steps: 3,
            },
            SweepSpec {
                side: 2.0,
                ratio_min: 1.0,
                ratio_max: 2.0,
                steps: 1,
            },
            SweepSpec {
                side: -1.0,
                ratio_min: 1.0,
                ratio_max: 2.0,
                steps: 3,
            },
        ] {
            assert_eq!(run(&spec).unwrap_err().code, crate::EXIT_INPUT);
        }
    }
}

//! Solve reports in text, JSON and CSV form.
//!
//! JSON angles are in radians; text and CSV angles are in degrees. JSON
//! numbers use the shortest representation that parses back to the same
//! `f64`, so a report re-read as a problem file solves identically.

use std::fmt::Write as _;

use fermat_quad::{AngleSet, CaseTag, QuadProblem, Solution};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Angles {
    pub alpha102: f64,
    pub alpha203: f64,
    pub alpha304: f64,
    pub alpha401: f64,
}

impl From<AngleSet> for Angles {
    fn from(s: AngleSet) -> Self {
        Angles {
            alpha102: s.alpha102,
            alpha203: s.alpha203,
            alpha304: s.alpha304,
            alpha401: s.alpha401,
        }
    }
}

/// Shortest round-trip decimal, switching to exponent notation for very
/// small or very large magnitudes.
pub(crate) fn num(x: f64) -> String {
    if x != 0.0 && x.is_finite() && !(1e-4..1e15).contains(&x.abs()) {
        format!("{x:e}")
    } else {
        x.to_string()
    }
}

impl Angles {
    fn degrees(&self) -> [f64; 4] {
        [self.alpha102, self.alpha203, self.alpha304, self.alpha401].map(f64::to_degrees)
    }
}

/// Outcome of seeded random probes around the reported location.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProbeCheck {
    pub seed: u64,
    pub count: usize,
    /// Smallest `(f(probe) − f(x)) / f(x)` seen; negative means a probe
    /// improved on the reported optimum.
    pub worst_margin: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub points: [[f64; 2]; 4],
    pub weights: [f64; 4],
    pub location: [f64; 2],
    pub case: String,
    pub method: String,
    pub residual: f64,
    pub objective: f64,
    pub angles: Option<Angles>,
    pub fallback: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub probes: Option<ProbeCheck>,
}

impl Report {
    pub fn new(label: Option<String>, problem: &QuadProblem, solution: &Solution) -> Report {
        let angles = match solution.case {
            CaseTag::Floating => AngleSet::at(solution.location, problem.vertices())
                .ok()
                .map(Angles::from),
            CaseTag::AbsorbedAt(_) => None,
        };
        Report {
            label,
            points: problem.vertices().map(|p| [p.x, p.y]),
            weights: *problem.weights(),
            location: [solution.location.x, solution.location.y],
            case: solution.case.to_string(),
            method: solution.method.as_str().to_string(),
            residual: solution.residual,
            objective: solution.objective,
            angles,
            fallback: solution.fallback,
            probes: None,
        }
    }

    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Text => Ok(self.to_text()),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self)
                    .map_err(|e| CliError::solver(format!("cannot serialize report: {e}")))?;
                s.push('\n');
                Ok(s)
            }
            Format::Csv => self.to_csv(),
        }
    }

    fn to_text(&self) -> String {
        let mut s = String::new();
        if let Some(label) = &self.label {
            let _ = writeln!(s, "label      {label}");
        }
        let _ = writeln!(s, "case       {}", self.case);
        let _ = writeln!(s, "method     {}", self.method);
        let _ = writeln!(s, "location   ({}, {})", self.location[0], self.location[1]);
        let _ = writeln!(s, "residual   {:e}", self.residual);
        let _ = writeln!(s, "objective  {}", self.objective);
        match &self.angles {
            Some(a) => {
                let [d1, d2, d3, d4] = a.degrees();
                let _ = writeln!(
                    s,
                    "angles     a102 = {d1:.6} deg, a203 = {d2:.6} deg, a304 = {d3:.6} deg, a401 = {d4:.6} deg"
                );
            }
            None => {
                let _ = writeln!(s, "angles     n/a");
            }
        }
        let _ = writeln!(s, "fallback   {}", if self.fallback { "yes" } else { "no" });
        if let Some(p) = &self.probes {
            let _ = writeln!(
                s,
                "probes     {} (seed {}), worst margin {:e}",
                p.count, p.seed, p.worst_margin
            );
        }
        s
    }

    fn to_csv(&self) -> Result<String, CliError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let fail = |e: csv::Error| CliError::solver(format!("cannot write CSV: {e}"));
        w.write_record([
            "label",
            "x",
            "y",
            "case",
            "method",
            "residual",
            "objective",
            "alpha102",
            "alpha203",
            "alpha304",
            "alpha401",
            "fallback",
        ])
        .map_err(fail)?;
        let angles = match &self.angles {
            Some(a) => a.degrees().map(num),
            None => std::array::from_fn(|_| String::new()),
        };
        let mut row = vec![
            self.label.clone().unwrap_or_default(),
            num(self.location[0]),
            num(self.location[1]),
            self.case.clone(),
            self.method.clone(),
            num(self.residual),
            num(self.objective),
        ];
        row.extend(angles);
        row.push(self.fallback.to_string());
        w.write_record(&row).map_err(fail)?;
        let bytes = w
            .into_inner()
            .map_err(|e| CliError::solver(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| CliError::solver(e.to_string()))
    }
}

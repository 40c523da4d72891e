//! Subcommand bodies. Each returns the text to emit, or a [`CliError`]
//! carrying the exit code.

use std::fmt::Write as _;

use fermat_quad::solver::vertex_pulls;
use fermat_quad::{classify, objective, solve_with, CaseTag, MethodChoice, Point, SolveOptions};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::CliError;
use crate::input::ProblemFile;
use crate::report::{num, Format, ProbeCheck, Report};
use crate::{render, sweep};

/// Probes are drawn uniformly from a disk of this radius, relative to the
/// problem scale.
const PROBE_RADIUS_REL: f64 = 1e-3;
/// A probe counts as better only past this relative margin.
const PROBE_SLACK_REL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveArgs {
    pub method: MethodChoice,
    pub tol: f64,
    pub max_iter: usize,
    pub probes: usize,
    pub seed: u64,
}

pub fn solve(pf: &ProblemFile, args: &SolveArgs, format: Format) -> Result<String, CliError> {
    let report = solve_report(pf, args)?;
    let text = report.render(format)?;
    match report.probes {
        Some(p) if p.worst_margin < -PROBE_SLACK_REL => Err(CliError::solver(format!(
            "a seeded probe (seed {}) improved on the reported optimum by {:e}",
            p.seed, -p.worst_margin
        ))),
        _ => Ok(text),
    }
}

pub fn solve_report(pf: &ProblemFile, args: &SolveArgs) -> Result<Report, CliError> {
    if !(args.tol.is_finite() && args.tol > 0.0) {
        return Err(CliError::input(format!(
            "--tol must be positive, got {}",
            args.tol
        )));
    }
    let options = SolveOptions {
        method: args.method,
        tol: args.tol,
        max_iter: args.max_iter,
    };
    let solution = solve_with(&pf.problem, &options)?;
    let mut report = Report::new(pf.label.clone(), &pf.problem, &solution);
    if args.probes > 0 {
        report.probes = Some(probe(pf, solution.location, args.probes, args.seed));
    }
    Ok(report)
}

fn probe(pf: &ProblemFile, x: Point, count: usize, seed: u64) -> ProbeCheck {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let f0 = objective(&pf.problem, x);
    let radius = PROBE_RADIUS_REL * pf.problem.scale();
    let mut worst = f64::INFINITY;
    for _ in 0..count {
        let t = rng.gen_range(0.0..std::f64::consts::TAU);
        let r = radius * rng.gen::<f64>().sqrt();
        let p = Point::new(x.x + r * t.cos(), x.y + r * t.sin());
        worst = worst.min((objective(&pf.problem, p) - f0) / f0);
    }
    ProbeCheck {
        seed,
        count,
        worst_margin: worst,
    }
}

#[derive(Serialize)]
struct VertexRow {
    vertex: usize,
    pull: f64,
    weight: f64,
    absorbs: bool,
}

#[derive(Serialize)]
struct Classification {
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    vertices: Vec<VertexRow>,
    case: String,
}

/// Per-vertex `R_i` against `B_i`, then the case tag.
pub fn classify_cmd(pf: &ProblemFile, format: Format) -> Result<String, CliError> {
    let case = classify(&pf.problem)?;
    let pulls = vertex_pulls(&pf.problem);
    let rows: Vec<VertexRow> = (0..4)
        .map(|i| VertexRow {
            vertex: i + 1,
            pull: pulls[i],
            weight: pf.problem.weights()[i],
            absorbs: case == CaseTag::AbsorbedAt(i + 1),
        })
        .collect();
    match format {
        Format::Text => {
            let mut s = String::new();
            if let Some(label) = &pf.label {
                let _ = writeln!(s, "label   {label}");
            }
            let _ = writeln!(s, "{:<7} {:>22} {:>22}  test", "vertex", "R_i", "B_i");
            for r in &rows {
                let test = if r.pull > r.weight { "R > B" } else { "R <= B" };
                let _ = writeln!(
                    s,
                    "{:<7} {:>22} {:>22}  {test}",
                    format!("A{}", r.vertex),
                    r.pull,
                    r.weight
                );
            }
            let _ = writeln!(s, "case    {case}");
            Ok(s)
        }
        Format::Json => {
            let c = Classification {
                label: pf.label.clone(),
                vertices: rows,
                case: case.to_string(),
            };
            let mut s =
                serde_json::to_string_pretty(&c).map_err(|e| CliError::solver(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => {
            let fail = |e: csv::Error| CliError::solver(format!("cannot write CSV: {e}"));
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["vertex", "pull", "weight", "absorbs", "case"])
                .map_err(fail)?;
            for r in &rows {
                w.write_record([
                    r.vertex.to_string(),
                    num(r.pull),
                    num(r.weight),
                    r.absorbs.to_string(),
                    case.to_string(),
                ])
                .map_err(fail)?;
            }
            let bytes = w
                .into_inner()
                .map_err(|e| CliError::solver(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| CliError::solver(e.to_string()))
        }
    }
}

pub fn sweep_cmd(spec: &sweep::SweepSpec) -> Result<String, CliError> {
    sweep::to_csv(&sweep::run(spec)?)
}

pub fn render_cmd(pf: &ProblemFile, args: &SolveArgs) -> Result<String, CliError> {
    let options = SolveOptions {
        method: args.method,
        tol: args.tol,
        max_iter: args.max_iter,
    };
    let solution = solve_with(&pf.problem, &options).map_err(|e| {
        let e = CliError::from(e);
        // Anything but bad input is a solver failure here.
        if e.code == crate::EXIT_INPUT {
            e
        } else {
            CliError::solver(e.message)
        }
    })?;
    Ok(render::svg(&pf.problem, &solution, pf.label.as_deref()))
}

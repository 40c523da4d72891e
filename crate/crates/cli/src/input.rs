//! Problem files.
//!
//! ```json
//! {"points": [[0, 0], [4, 0], [5, 3], [1, 4]], "weights": [2, 1, 2, 1], "label": "kite"}
//! {"square": {"a": 2, "B1": 1.5, "B4": 1}}
//! ```
//!
//! Unknown top-level fields are ignored so that a JSON report, which carries
//! its own `points` and `weights`, can be fed back in.

use std::io::Read;
use std::path::Path;

use fermat_quad::{Point, QuadProblem, SquareProblem};
use serde::Deserialize;

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq)]
pub struct ProblemFile {
    pub label: Option<String>,
    pub problem: QuadProblem,
    /// Present when the file used the square shorthand.
    pub square: Option<SquareProblem>,
}

#[derive(Deserialize)]
struct RawProblem {
    points: Option<Vec<Vec<f64>>>,
    weights: Option<Vec<f64>>,
    label: Option<String>,
    square: Option<RawSquare>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSquare {
    a: f64,
    #[serde(rename = "B1")]
    b1: f64,
    #[serde(rename = "B4")]
    b4: f64,
}

/// Reads a problem from `path`, or from stdin when `path` is `-`.
pub fn read_problem(path: &Path) -> Result<ProblemFile, CliError> {
    let (text, name) = if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        (text, "<stdin>".to_string())
    } else {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
        (text, path.display().to_string())
    };
    parse_problem(&text).map_err(|e| CliError::input(format!("{name}: {}", e.message)))
}

pub fn parse_problem(text: &str) -> Result<ProblemFile, CliError> {
    let raw: RawProblem = serde_json::from_str(text).map_err(|e| CliError::input(e.to_string()))?;
    match (raw.square, raw.points, raw.weights) {
        (Some(sq), None, None) => {
            let square = SquareProblem::new(sq.a, sq.b1, sq.b4)
                .map_err(|e| CliError::input(format!("field `square`: {e}")))?;
            Ok(ProblemFile {
                label: raw.label,
                problem: square.quad_problem(),
                square: Some(square),
            })
        }
        (Some(_), _, _) => Err(CliError::input(
            "field `square` cannot be combined with `points` or `weights`",
        )),
        (None, Some(points), Some(weights)) => {
            let vertices = parse_points(&points)?;
            let weights: [f64; 4] = weights.as_slice().try_into().map_err(|_| {
                CliError::input(format!(
                    "field `weights`: expected 4 numbers, got {}",
                    weights.len()
                ))
            })?;
            let problem = QuadProblem::new(vertices, weights)
                .map_err(|e| CliError::input(format!("fields `points`/`weights`: {e}")))?;
            Ok(ProblemFile {
                label: raw.label,
                problem,
                square: None,
            })
        }
        (None, None, _) => Err(CliError::input(
            "missing field `points` (or a `square` object)",
        )),
        (None, Some(_), None) => Err(CliError::input("missing field `weights`")),
    }
}

fn parse_points(points: &[Vec<f64>]) -> Result<[Point; 4], CliError> {
    if points.len() != 4 {
        return Err(CliError::input(format!(
            "field `points`: expected 4 coordinate pairs, got {}",
            points.len()
        )));
    }
    let mut out = [Point::ORIGIN; 4];
    for (i, p) in points.iter().enumerate() {
        match p.as_slice() {
            [x, y] => out[i] = Point::new(*x, *y),
            _ => {
                return Err(CliError::input(format!(
                    "field `points[{i}]`: expected an [x, y] pair, got {} numbers",
                    p.len()
                )))
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_shorthand_builds_the_canonical_frame() {
        let pf =
            parse_problem(r#"{"square": {"a": 2, "B1": 1.5, "B4": 1}, "label": "s"}"#).unwrap();
        assert_eq!(pf.problem.weights(), &[1.5, 1.5, 1.0, 1.0]);
        assert_eq!(pf.problem.vertices()[0], Point::new(1.0, 1.0));
        assert_eq!(pf.label.as_deref(), Some("s"));
        assert!(pf.square.is_some());
    }

    #[test]
    fn diagnostics_name_the_field() {
        let e =
            parse_problem(r#"{"points": [[0,0],[1,0],[1,1]], "weights": [1,1,1,1]}"#).unwrap_err();
        assert!(e.message.contains("points"), "{}", e.message);
        let e = parse_problem(r#"{"points": [[0,0],[1,0],[1,1],[0]], "weights": [1,1,1,1]}"#)
            .unwrap_err();
        assert!(e.message.contains("points[3]"), "{}", e.message);
        let e = parse_problem(r#"{"points": [[0,0],[1,0],[1,1],[0,1]], "weights": [1,1,1]}"#)
            .unwrap_err();
        assert!(e.message.contains("weights"), "{}", e.message);
        let e = parse_problem("{\n  \"points\": [[0,0],[1,0],[1,1],[0,\"x\"]]\n}").unwrap_err();
        assert!(e.message.contains("line 2"), "{}", e.message);
    }

    #[test]
    fn coincident_points_are_rejected() {
        let e = parse_problem(r#"{"points": [[0,0],[0,0],[1,1],[0,1]], "weights": [1,1,1,1]}"#)
            .unwrap_err();
        assert_eq!(e.code, crate::EXIT_INPUT);
        assert!(e.message.contains("coincide"), "{}", e.message);
    }
}

mod common;

use common::*;
use fermat_quad::geom::{angle_at, rotate, segment_intersection, unit_vector, PlanarVector, Point};
use fermat_quad::quartic::{solve_real_quartic, QuarticPoly};
use fermat_quad::solver::{solve_diagonal_case, RESIDUAL_REL_TOL};
use fermat_quad::square::{angles_from_y, equilibrium_quartic, objective_on_axis, solve_square_ft};
use fermat_quad::{objective, solve, CaseTag, QuadProblem, SquareProblem};
use proptest::prelude::*;
use rand::Rng;

fn coord() -> impl Strategy<Value = f64> {
    -100.0..100.0f64
}

fn point() -> impl Strategy<Value = Point> {
    (coord(), coord()).prop_map(|(x, y)| Point::new(x, y))
}

proptest! {
    #[test]
    fn unit_vectors_have_unit_norm(a in point(), b in point()) {
        prop_assume!(a.distance(&b) > 1e-9);
        let u = unit_vector(a, b).unwrap();
        prop_assert!((u.norm() - 1.0).abs() <= 1e-14);
    }

    #[test]
    fn angle_is_symmetric(v in point(), p in point(), q in point()) {
        prop_assume!(v.distance(&p) > 1e-9 && v.distance(&q) > 1e-9);
        let a = angle_at(v, p, q).unwrap();
        prop_assert_eq!(a, angle_at(v, q, p).unwrap());
        prop_assert!((0.0..=std::f64::consts::PI).contains(&a));
    }

    #[test]
    fn crossings_lie_on_both_segments(a in point(), b in point(), c in point(), d in point()) {
        prop_assume!(a.distance(&b) > 1e-6 && c.distance(&d) > 1e-6);
        if let Ok(Some(x)) = segment_intersection(a, b, c, d) {
            for (p, q) in [(a, b), (c, d)] {
                let dir = q - p;
                let off = dir.cross(&(x - p)).abs() / dir.norm();
                prop_assert!(off <= 1e-12 * (1.0 + p.distance(&q) + x.distance(&p)), "{off}");
            }
        }
    }

    #[test]
    fn rotation_round_trips(dx in coord(), dy in coord(), theta in -10.0..10.0f64) {
        let v = PlanarVector::new(dx, dy);
        let r = rotate(rotate(v, theta), -theta);
        let mag = 1.0 + v.norm();
        prop_assert!((r.dx - dx).abs() <= 1e-12 * mag && (r.dy - dy).abs() <= 1e-12 * mag);
        prop_assert!((rotate(v, theta).norm() - v.norm()).abs() <= 1e-14 * mag);
    }

    #[test]
    fn real_root_count_is_even(c in prop::array::uniform5(-10.0..10.0f64)) {
        prop_assume!(c[0].abs() > 1e-3);
        let p = QuarticPoly::new(c[0], c[1], c[2], c[3], c[4]);
        let roots = solve_real_quartic(&p).unwrap();
        prop_assert!(roots.count().is_multiple_of(2), "{:?}", roots);
        let scaled = p.normalized();
        for r in roots.distinct() {
            prop_assert!(scaled.evaluate(r).abs() <= 1e-9 * scaled.scale_at(r).max(1.0));
        }
    }

    #[test]
    fn roots_reconstruct_the_polynomial(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let roots = random_roots(&mut rng, 0.05);
        let lead = rng.gen_range(0.5..5.0);
        let p = QuarticPoly::from_roots(lead, roots);
        let found = solve_real_quartic(&p).unwrap().values();
        prop_assert_eq!(found.len(), 4);
        let rebuilt = QuarticPoly::from_roots(1.0, [found[0], found[1], found[2], found[3]]);
        let monic = p.coefficients().map(|c| c / lead);
        for (x, y) in rebuilt.coefficients().iter().zip(monic) {
            prop_assert!((x - y).abs() <= 1e-7 * y.abs().max(1.0), "{x} vs {y}");
        }
    }

    #[test]
    fn square_solution_is_scale_and_weight_invariant(
        a in 0.1..50.0f64,
        ratio in 1.001..30.0f64,
        lambda in 0.01..100.0f64,
        kappa in 0.01..100.0f64,
    ) {
        let y = solve_square_ft(&SquareProblem::new(a, ratio, 1.0).unwrap()).unwrap();
        let y_scaled = solve_square_ft(&SquareProblem::new(lambda * a, ratio, 1.0).unwrap()).unwrap();
        prop_assert!((y_scaled - lambda * y).abs() <= 1e-9 * lambda * y.abs().max(a * 1e-3));
        let y_weighted = solve_square_ft(&SquareProblem::new(a, kappa * ratio, kappa).unwrap()).unwrap();
        prop_assert!((y_weighted - y).abs() <= 1e-9 * y.abs().max(a * 1e-3));

        let angles = angles_from_y(&SquareProblem::new(a, ratio, 1.0).unwrap(), y).unwrap();
        let scaled = angles_from_y(&SquareProblem::new(lambda * a, ratio, 1.0).unwrap(), lambda * y).unwrap();
        for (p, q) in angles.as_array().iter().zip(scaled.as_array()) {
            prop_assert!((p - q).abs() <= 1e-9);
        }
    }

    #[test]
    fn square_solution_satisfies_first_order_condition(a in 0.1..50.0f64, ratio in 1.001..30.0f64) {
        let sp = SquareProblem::new(a, ratio, 1.0).unwrap();
        let y = solve_square_ft(&sp).unwrap();
        let slope = derivative(|t| objective_on_axis(&sp, t), y, 1e-6 * a);
        prop_assert!(slope.abs() <= 1e-7 * (ratio + 1.0), "{slope}");
    }

    #[test]
    fn square_mirror_and_sign_symmetry(a in 0.1..50.0f64, b1 in 0.1..10.0f64, b4 in 0.1..10.0f64) {
        prop_assume!((b1 - b4).abs() > 1e-6);
        let y = solve_square_ft(&SquareProblem::new(a, b1, b4).unwrap()).unwrap();
        let m = solve_square_ft(&SquareProblem::new(a, b4, b1).unwrap()).unwrap();
        prop_assert!((y + m).abs() <= 1e-9 * a);
        prop_assert_eq!(
            equilibrium_quartic(&SquareProblem::new(a, b1, b4).unwrap()).unwrap(),
            equilibrium_quartic(&SquareProblem::new(a, -b1, -b4).unwrap()).unwrap()
        );
    }

    #[test]
    fn floating_square_quartic_has_one_root_inside_one_outside(a in 0.1..50.0f64, ratio in 1.001..30.0f64) {
        let sp = SquareProblem::new(a, ratio, 1.0).unwrap();
        let roots = solve_real_quartic(&equilibrium_quartic(&sp).unwrap()).unwrap().values();
        prop_assert_eq!(roots.len(), 2);
        prop_assert!(roots[0] >= 0.0 && roots[0] < a / 2.0);
        prop_assert!(roots[1] > a / 2.0);
    }

    #[test]
    fn solution_is_similarity_equivariant(
        seed in any::<u64>(),
        scale in 0.1..10.0f64,
        theta in -3.0..3.0f64,
        tx in -100.0..100.0f64,
        ty in -100.0..100.0f64,
        kappa in 0.1..10.0f64,
    ) {
        let mut rng = rng(seed);
        let v = random_points(&mut rng);
        let w: [f64; 4] = std::array::from_fn(|_| rng.gen_range(0.2..3.0));
        let qp = QuadProblem::new(v, w).unwrap();
        let s = solve(&qp).unwrap();

        let moved = QuadProblem::new(v.map(|p| similarity(p, scale, theta, (tx, ty))), w).unwrap();
        let sm = solve(&moved).unwrap();
        let expected = similarity(s.location, scale, theta, (tx, ty));
        prop_assert!(sm.location.distance(&expected) <= 1e-9 * moved.scale().max(1.0),
            "{} vs {}", sm.location, expected);

        let heavier = qp.with_weights(w.map(|x| kappa * x)).unwrap();
        let sh = solve(&heavier).unwrap();
        prop_assert!(sh.location.distance(&s.location) <= 1e-9 * qp.scale());
        prop_assert!((sh.objective - kappa * s.objective).abs() <= 1e-9 * kappa * s.objective);
    }

    #[test]
    fn floating_solutions_beat_their_neighbourhood(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let v = random_points(&mut rng);
        let w: [f64; 4] = std::array::from_fn(|_| rng.gen_range(0.2..3.0));
        let qp = QuadProblem::new(v, w).unwrap();
        let s = solve(&qp).unwrap();
        prop_assert!((s.objective - objective(&qp, s.location)).abs() <= 1e-12 * s.objective);
        if s.case == CaseTag::Floating {
            prop_assert!(s.residual <= RESIDUAL_REL_TOL * qp.weight_sum());
        }
        let radius = 1e-3 * qp.scale();
        for _ in 0..100 {
            let t = rng.gen_range(0.0..std::f64::consts::TAU);
            let r = radius * rng.gen_range(0.0..1.0f64).sqrt();
            let probe = Point::new(s.location.x + r * t.cos(), s.location.y + r * t.sin());
            prop_assert!(s.objective <= objective(&qp, probe) + 1e-12 * s.objective);
        }
    }

    #[test]
    fn diagonal_crossing_balances_opposite_angles(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let v = random_convex_quad(&mut rng);
        let (b1, b2) = (rng.gen_range(0.2..3.0), rng.gen_range(0.2..3.0));
        let qp = QuadProblem::new(v, [b1, b2, b1, b2]).unwrap();
        let s = solve_diagonal_case(&qp).unwrap();
        let x = s.location;
        let a102 = angle_at(x, v[0], v[1]).unwrap();
        let a304 = angle_at(x, v[2], v[3]).unwrap();
        let a104 = angle_at(x, v[0], v[3]).unwrap();
        let a203 = angle_at(x, v[1], v[2]).unwrap();
        prop_assert!((a102 - a304).abs() <= 1e-6);
        prop_assert!((a104 - a203).abs() <= 1e-6);
    }
}

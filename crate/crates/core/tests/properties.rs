//! Randomized invariants of the geometry, replication, solver, and metric
//! surfaces.

use proptest::prelude::*;

use triform::geometry::{
    canonical_permutation, distance, interior_angles, is_similar, perimeter_normalize,
    sorted_angles, Orientation, Permutation3, Point, Triangle,
};
use triform::metric::{angles_of, tau, tau_from_angles};
use triform::replication::{machine_circle, spanner_circle, trivial_replication};
use triform::solver::{rigid_solve, solve};

fn coord() -> impl Strategy<Value = f64> {
    -50.0f64..50.0
}

/// Non-degenerate triangles with min height at least 1% of the longest side.
fn arb_triangle() -> impl Strategy<Value = Triangle> {
    (coord(), coord(), coord(), coord(), coord(), coord()).prop_filter_map(
        "well-conditioned triangle",
        |(ax, ay, bx, by, cx, cy)| {
            let t = Triangle::new(Point::new(ax, ay), Point::new(bx, by), Point::new(cx, cy)).ok()?;
            let long = t.longest_side();
            (2.0 * t.signed_area().abs() / long >= 1e-2 * long).then_some(t)
        },
    )
}

/// A random similarity map: rotation, uniform scale, translation, optional
/// reflection, vertex permutation.
#[derive(Debug, Clone, Copy)]
struct SimilarityMap {
    theta: f64,
    scale: f64,
    shift: (f64, f64),
    reflect: bool,
    perm: usize,
}

fn arb_similarity() -> impl Strategy<Value = SimilarityMap> {
    (
        0.0..std::f64::consts::TAU,
        0.05f64..20.0,
        (coord(), coord()),
        any::<bool>(),
        0usize..6,
    )
        .prop_map(|(theta, scale, shift, reflect, perm)| SimilarityMap {
            theta,
            scale,
            shift,
            reflect,
            perm,
        })
}

impl SimilarityMap {
    fn apply(&self, t: &Triangle) -> Triangle {
        let (sin, cos) = self.theta.sin_cos();
        let map = |p: Point| {
            let p = if self.reflect { Point::new(p.x, -p.y) } else { p };
            Point::new(
                self.scale * (p.x * cos - p.y * sin) + self.shift.0,
                self.scale * (p.x * sin + p.y * cos) + self.shift.1,
            )
        };
        let v = Permutation3::ALL[self.perm].apply(t).vertices();
        Triangle::new(map(v[0]), map(v[1]), map(v[2])).expect("similarity preserves validity")
    }
}

proptest! {
    #[test]
    fn distance_symmetry_and_triangle_inequality(
        (ax, ay, bx, by, cx, cy) in (coord(), coord(), coord(), coord(), coord(), coord())
    ) {
        let a = Point::new(ax, ay);
        let b = Point::new(bx, by);
        let c = Point::new(cx, cy);
        prop_assert!((distance(a, b) - distance(b, a)).abs() <= 1e-12);
        prop_assert!(distance(a, c) <= distance(a, b) + distance(b, c) + 1e-12);
        prop_assert!(distance(a, b) >= 0.0);
    }

    #[test]
    fn interior_angles_sum_to_pi(t in arb_triangle()) {
        let sum: f64 = interior_angles(&t).iter().sum();
        prop_assert!((sum - std::f64::consts::PI).abs() <= 1e-12);
    }

    #[test]
    fn canonical_permutation_sorts_the_chain(t in arb_triangle()) {
        let c = canonical_permutation(&t).apply(&t);
        let [d01, d12, d20] = c.side_lengths();
        prop_assert!(d01 <= d12 && d12 <= d20);
    }

    #[test]
    fn similarity_holds_under_any_composition(t in arb_triangle(), m in arb_similarity()) {
        prop_assert!(is_similar(&t, &m.apply(&t), 1e-9));
    }

    #[test]
    fn perimeter_normalize_is_similar_and_unit(t in arb_triangle()) {
        let n = perimeter_normalize(&t);
        prop_assert!((n.perimeter() - 1.0).abs() <= 1e-12);
        prop_assert!(is_similar(&t, &n, 1e-9));
    }

    #[test]
    fn machine_points_stay_on_the_circle(
        p in arb_triangle(),
        (ux, uy, vx, vy) in (coord(), coord(), coord(), coord()),
        r in 0.0f64..5.0,
        k in 0usize..36,
    ) {
        let u = Point::new(ux, uy);
        let v = Point::new(vx, vy);
        prop_assume!(distance(u, v) > 1e-3);
        let circle = machine_circle(&p, u, v, r, Orientation::Ccw).unwrap();
        let phi = std::f64::consts::TAU * k as f64 / 36.0;
        let moved = v + Point::new(phi.cos(), phi.sin()) * r;
        prop_assume!(moved != u);
        let t2 = trivial_replication(&p, u, moved, Orientation::Ccw).unwrap().replication_point;
        // Residual scales with the configuration; the anchors live in a
        // +-50 box so 1e-9 absolute is ample headroom.
        prop_assert!((distance(circle.center, t2) - circle.radius).abs() <= 1e-9 * (1.0 + circle.radius));
    }

    #[test]
    fn machine_pair_composes_to_spanner(
        p in arb_triangle(),
        (ux, uy, vx, vy) in (coord(), coord(), coord(), coord()),
        r in 0.0f64..5.0,
    ) {
        let u = Point::new(ux, uy);
        let v = Point::new(vx, vy);
        prop_assume!(distance(u, v) > 1e-3);
        let machine = machine_circle(&p, u, v, r, Orientation::Ccw).unwrap();
        let swapped = Permutation3::new([1, 0, 2]).unwrap().apply(&p);
        let machine_swapped = machine_circle(&swapped, v, u, r, Orientation::Cw).unwrap();
        let spanner = spanner_circle(&p, u, v, r, Orientation::Ccw).unwrap();
        prop_assert!(distance(machine.center, machine_swapped.center) <= 1e-12 * (1.0 + machine.center.norm()));
        prop_assert!(
            (machine.radius + machine_swapped.radius - spanner.radius).abs()
                <= 1e-12 * (1.0 + spanner.radius)
        );
    }

    #[test]
    fn solver_travels_agree_and_destinations_are_valid(
        r in arb_triangle(),
        p in arb_triangle(),
    ) {
        let sol = solve(&r, &p).unwrap();
        let travels = sol.travel_per_robot(&r);
        let max = travels.iter().cloned().fold(0.0, f64::max);
        let min = travels.iter().cloned().fold(f64::INFINITY, f64::min);
        prop_assert!(max - min <= 1e-12 * max + 1e-15);
        prop_assert!((sol.d_star - max).abs() <= 1e-12 * max + 1e-15);
        prop_assert!(is_similar(&sol.rigid.destinations, &p, 1e-9));
    }

    #[test]
    fn solver_never_beats_itself_across_variants(
        r in arb_triangle(),
        p in arb_triangle(),
    ) {
        let sol = solve(&r, &p).unwrap();
        for perm in Permutation3::ALL {
            let variant = perm.apply(&p);
            for orientation in [Orientation::Ccw, Orientation::Cw] {
                let travel = rigid_solve(&r, &variant, orientation).unwrap().travel;
                prop_assert!(sol.d_star <= travel + 1e-12 * (1.0 + travel));
            }
        }
    }

    #[test]
    fn solver_scale_equivariance(r in arb_triangle(), p in arb_triangle(), k in 0.1f64..10.0) {
        let base = solve(&r, &p).unwrap().d_star;
        let v = r.vertices();
        let scaled = Triangle::new(v[0] * k, v[1] * k, v[2] * k).unwrap();
        let got = solve(&scaled, &p).unwrap().d_star;
        prop_assert!((got - k * base).abs() <= 1e-9 * (1.0 + k * base));
    }

    #[test]
    fn tau_nonnegative_symmetric_and_similarity_invariant(
        a in arb_triangle(),
        b in arb_triangle(),
        m in arb_similarity(),
    ) {
        let d = tau(&a, &b);
        prop_assert!(d >= 0.0);
        prop_assert!((d - tau(&b, &a)).abs() <= 1e-15);
        prop_assert!(tau(&a, &m.apply(&a)) <= 1e-9);
        // tau and the angle fingerprint agree on what "similar" means.
        let sim = is_similar(&a, &b, 1e-9);
        if d > 1e-6 {
            prop_assert!(!sim);
        }
    }

    #[test]
    fn tau_formula_matches_angle_level_entry(a in arb_triangle(), b in arb_triangle()) {
        let direct = tau(&a, &b);
        let via_angles = tau_from_angles(&angles_of(&a), &angles_of(&b));
        prop_assert!((direct - via_angles).abs() <= 1e-15);
    }

    #[test]
    fn sorted_angles_are_similarity_fingerprints(a in arb_triangle(), m in arb_similarity()) {
        let sa = sorted_angles(&a);
        let sb = sorted_angles(&m.apply(&a));
        for (x, y) in sa.iter().zip(sb.iter()) {
            prop_assert!((x - y).abs() <= 1e-9);
        }
    }
}

// The angle-sum invariant at the scale the module contract names.
#[test]
fn interior_angles_sum_over_ten_thousand_triangles() {
    let mut rng = triform::instances::rng_for_seed(17);
    for _ in 0..10_000 {
        let t = triform::instances::random_triangle(&mut rng, 50.0);
        let sum: f64 = interior_angles(&t).iter().sum();
        assert!((sum - std::f64::consts::PI).abs() <= 1e-12);
    }
}

//! Optimal min-max formation for three robots.
//!
//! For a fixed robot-to-vertex assignment and orientation sign, the
//! construction is geometric: the target `t_i` of robot `i` is the replication
//! point of the (unit-perimeter) pattern on the other two robots' positions,
//! and every robot travels the common distance
//!
//! ```text
//! r = d(r_i, t_i) * d(p_{i+1}, p_{i-1})
//! ```
//!
//! toward its target — the same value for each `i`. The destinations reached
//! after moving distance `r` form a triangle rigidly similar to the pattern,
//! and no smaller common travel admits a valid formation.
//!
//! [`solve`] reduces the full problem ("similar" allows reflection and vertex
//! permutation) to two runs of [`rigid_solve`]: reordering both triangles so
//! their side-length chains are sorted picks the optimal assignment, and the
//! cheaper of the two orientation signs settles reflection.

use crate::error::{Error, Result};
use crate::geometry::{
    canonical_permutation, distance, perimeter_normalize, Orientation, Permutation3, Point,
    Triangle,
};
use crate::replication::trivial_replication;

/// Movements smaller than this fraction of the configuration size count as
/// "no movement" (zero-travel solutions land here by floating-point noise).
pub const MOVEMENT_EPS: f64 = 1e-12;

/// Angular tolerance below which movement lines count as parallel.
pub const PARALLEL_EPS: f64 = 1e-9;

/// Result of the geometric construction for one fixed assignment and
/// orientation sign.
#[derive(Debug, Clone, Copy)]
pub struct RigidSolution {
    /// Where each robot ends up; rigidly similar to the requested pattern
    /// variant. Index order matches the robot order passed in.
    pub destinations: Triangle,
    /// Replication-point target each robot moves toward (`q_i` lies on the
    /// segment from `r_i` to `targets[i]`).
    pub targets: [Point; 3],
    /// Common travel distance.
    pub travel: f64,
    /// Orientation sign of the destination triangle.
    pub orientation: Orientation,
}

/// The point all robots move directly toward or away from, or the marker for
/// translation-like motion along parallel lines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FocalPoint {
    Point(Point),
    AtInfinity,
}

/// Globally optimal formation: assignment, reflection flag, destinations, and
/// the minimum worst-case travel `d_star`.
#[derive(Debug, Clone, Copy)]
pub struct Solution {
    /// Minimum over all valid strategies of the maximum robot travel.
    pub d_star: f64,
    /// Robot `j` takes the role of pattern vertex `assignment[j]`.
    pub assignment: Permutation3,
    /// Whether the formed triangle is a mirror image of the pattern.
    pub mirrored: bool,
    /// The winning construction, reindexed to the caller's robot order.
    pub rigid: RigidSolution,
    /// `None` when no robot moves (every point qualifies as focal).
    pub focal: Option<FocalPoint>,
}

impl Solution {
    /// Travel distance of each robot to its destination (all equal `d_star`
    /// up to floating-point rounding).
    pub fn travel_per_robot(&self, robots: &Triangle) -> [f64; 3] {
        let r = robots.vertices();
        let q = self.rigid.destinations.vertices();
        [
            distance(r[0], q[0]),
            distance(r[1], q[1]),
            distance(r[2], q[2]),
        ]
    }
}

/// Targets and common travel of the construction, without the destination
/// endpoints. `pattern_norm` must already have unit perimeter.
struct Construction {
    targets: [Point; 3],
    travel: f64,
}

fn construct(
    robots: &Triangle,
    pattern_norm: &Triangle,
    orientation: Orientation,
) -> Result<Construction> {
    let r = robots.vertices();
    let p = pattern_norm.vertices();
    let mut targets = [Point::ORIGIN; 3];
    let mut travels = [0.0f64; 3];
    for i in 0..3 {
        let (i1, i2) = ((i + 1) % 3, (i + 2) % 3);
        // Cyclic rotation keeps the pattern's orientation sign, so the
        // requested absolute sign applies to every replication alike.
        let rotated = Permutation3::new([i1, i2, i]).unwrap().apply(pattern_norm);
        let repl = trivial_replication(&rotated, r[i1], r[i2], orientation)?;
        targets[i] = repl.replication_point;
        travels[i] = distance(r[i], targets[i]) * distance(p[i1], p[i2]);
    }
    // The three values agree to floating-point accuracy; return their mean.
    Ok(Construction {
        targets,
        travel: (travels[0] + travels[1] + travels[2]) / 3.0,
    })
}

/// Moves each robot `travel` toward its target and validates the result.
fn destinations_of(robots: &Triangle, c: &Construction) -> Result<Triangle> {
    let r = robots.vertices();
    let mut destinations = [Point::ORIGIN; 3];
    for i in 0..3 {
        let to_target = c.targets[i] - r[i];
        let dist = to_target.norm();
        if dist == 0.0 {
            if c.travel > MOVEMENT_EPS * robots.longest_side() {
                return Err(Error::CoincidentTarget(i));
            }
            destinations[i] = r[i];
        } else {
            // travel < dist always: the pattern side factor is below 1.
            destinations[i] = r[i] + to_target * (c.travel / dist);
        }
    }
    Triangle::new(destinations[0], destinations[1], destinations[2])
}

/// Runs the geometric construction for the identity assignment and a fixed
/// orientation sign.
///
/// The pattern is perimeter-normalized internally; callers may pass any scale.
/// When the requested sign mirrors a configuration that already matches the
/// pattern, the formation collapses toward a point and the construction
/// reports the degenerate destinations as an error; [`solve`] compares the
/// two signs by travel alone, so it is not affected.
pub fn rigid_solve(
    robots: &Triangle,
    pattern: &Triangle,
    orientation: Orientation,
) -> Result<RigidSolution> {
    let pn = perimeter_normalize(pattern);
    let c = construct(robots, &pn, orientation)?;
    let destinations = destinations_of(robots, &c)?;
    Ok(RigidSolution {
        destinations,
        targets: c.targets,
        travel: c.travel,
        orientation,
    })
}

/// Reindexes a rigid solution from canonical robot order back to the caller's.
/// An odd reindexing flips the destination triangle's orientation sign.
fn unpermute(rigid: &RigidSolution, inv: &Permutation3) -> RigidSolution {
    let idx = inv.indices();
    let destinations = inv.apply(&rigid.destinations);
    RigidSolution {
        destinations,
        targets: [rigid.targets[idx[0]], rigid.targets[idx[1]], rigid.targets[idx[2]]],
        travel: rigid.travel,
        orientation: destinations.orientation(),
    }
}

/// Computes the optimal formation of `pattern` for robots at `robots`.
///
/// Both triangles are reordered to sorted side-length chains (the optimal
/// assignment), the construction runs for both orientation signs, and the
/// smaller travel wins; on a tie the non-mirrored solution is returned.
/// `d_star` is a lower bound on the travel of all 12 (assignment, sign)
/// variants.
pub fn solve(robots: &Triangle, pattern: &Triangle) -> Result<Solution> {
    let rho = canonical_permutation(robots);
    let pi = canonical_permutation(pattern);
    let robots_c = rho.apply(robots);
    let pattern_c = pi.apply(pattern);

    let pn = perimeter_normalize(&pattern_c);
    let natural = pattern_c.orientation();
    // Travels are compared before any destination is built: the losing
    // orientation's formation may legitimately collapse (mirroring a
    // configuration that already matches the pattern).
    let plain = construct(&robots_c, &pn, natural)?;
    let mirror = construct(&robots_c, &pn, natural.flipped())?;

    let tie = (plain.travel - mirror.travel).abs()
        <= 1e-12 * (1.0 + plain.travel.max(mirror.travel));
    let (winner, mirrored, orientation) = if tie || plain.travel <= mirror.travel {
        (plain, false, natural)
    } else {
        (mirror, true, natural.flipped())
    };
    let winner = RigidSolution {
        destinations: destinations_of(&robots_c, &winner)?,
        targets: winner.targets,
        travel: winner.travel,
        orientation,
    };

    let inv = rho.inverse();
    let rigid = unpermute(&winner, &inv);
    let assignment = pi.compose(&inv);

    let focal = match focal_point(robots, &rigid.destinations) {
        Ok(f) => Some(f),
        Err(Error::NoMovement) => None,
        Err(e) => return Err(e),
    };

    Ok(Solution {
        d_star: rigid.travel,
        assignment,
        mirrored,
        rigid,
        focal,
    })
}

/// Intersection of the movement lines through `(r_i, q_i)`.
///
/// Returns [`FocalPoint::AtInfinity`] when the lines are pairwise parallel
/// within [`PARALLEL_EPS`], and [`Error::NoMovement`] when fewer than two
/// robots move (the focal point is then undefined).
pub fn focal_point(robots: &Triangle, destinations: &Triangle) -> Result<FocalPoint> {
    let r = robots.vertices();
    let q = destinations.vertices();
    let scale = robots.longest_side();

    let mut movers: Vec<(Point, Point)> = Vec::with_capacity(3);
    for i in 0..3 {
        let m = q[i] - r[i];
        let len = m.norm();
        if len > MOVEMENT_EPS * scale {
            movers.push((r[i], m * (1.0 / len)));
        }
    }
    if movers.len() < 2 {
        return Err(Error::NoMovement);
    }

    let mut best: Option<(f64, usize, usize)> = None;
    for i in 0..movers.len() {
        for j in (i + 1)..movers.len() {
            let cross = movers[i].1.cross(movers[j].1).abs();
            if best.is_none_or(|(c, _, _)| cross > c) {
                best = Some((cross, i, j));
            }
        }
    }
    let (cross, i, j) = best.unwrap();
    if cross < PARALLEL_EPS {
        return Ok(FocalPoint::AtInfinity);
    }
    let (p1, d1) = movers[i];
    let (p2, d2) = movers[j];
    let t = (p2 - p1).cross(d2) / d1.cross(d2);
    Ok(FocalPoint::Point(p1 + d1 * t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{interior_angles, is_similar};

    fn tri(v: [[f64; 2]; 3]) -> Triangle {
        Triangle::from_array(v).unwrap()
    }

    fn equilateral_at(cx: f64, cy: f64, scale: f64) -> Triangle {
        let h = 3f64.sqrt() / 2.0;
        Triangle::new(
            Point::new(cx - 0.5 * scale, cy - h / 3.0 * scale),
            Point::new(cx + 0.5 * scale, cy - h / 3.0 * scale),
            Point::new(cx, cy + 2.0 * h / 3.0 * scale),
        )
        .unwrap()
    }

    #[test]
    fn rigid_solve_identity_is_zero_travel() {
        let t = tri([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]);
        let sol = rigid_solve(&t, &t, t.orientation()).unwrap();
        assert!(sol.travel < 1e-12);
        for (a, b) in t.vertices().iter().zip(sol.destinations.vertices()) {
            assert!(distance(*a, b) < 1e-9);
        }
    }

    #[test]
    fn rigid_solve_matching_equilaterals() {
        let r = equilateral_at(0.0, 0.0, 2.0);
        let p = equilateral_at(7.0, -3.0, 0.4);
        let sol = rigid_solve(&r, &p, r.orientation()).unwrap();
        assert!(sol.travel < 1e-12);
    }

    #[test]
    fn rigid_solve_equal_travel_and_validity() {
        let r = tri([[0.0, 0.0], [4.0, 0.0], [1.0, 3.0]]);
        let p = equilateral_at(0.0, 0.0, 1.0);
        for orientation in [Orientation::Ccw, Orientation::Cw] {
            let pn = perimeter_normalize(&p);
            let rv = r.vertices();
            let pv = pn.vertices();
            let mut travels = [0.0; 3];
            for i in 0..3 {
                let (i1, i2) = ((i + 1) % 3, (i + 2) % 3);
                let rotated = Permutation3::new([i1, i2, i]).unwrap().apply(&pn);
                let t = trivial_replication(&rotated, rv[i1], rv[i2], orientation).unwrap();
                travels[i] = distance(rv[i], t.replication_point) * distance(pv[i1], pv[i2]);
            }
            let max = travels.iter().cloned().fold(0.0, f64::max);
            let min = travels.iter().cloned().fold(f64::INFINITY, f64::min);
            assert!((max - min) <= 1e-12 * max);

            let sol = rigid_solve(&r, &p, orientation).unwrap();
            assert!(is_similar(&sol.destinations, &p, 1e-9));
            assert_eq!(sol.destinations.orientation(), orientation);
            // Destinations keep the vertex correspondence of the pattern.
            let da = interior_angles(&sol.destinations);
            let pa = interior_angles(&p);
            for i in 0..3 {
                assert!((da[i] - pa[i]).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn solve_similar_input_is_zero() {
        let r = tri([[0.2, 0.1], [3.0, 0.4], [1.1, 2.2]]);
        // Mirrored, permuted, scaled, translated copy.
        let v = r.vertices();
        let map = |p: Point| Point::new(2.0 * p.x + 1.0, -2.0 * p.y + 3.0);
        let p = Triangle::new(map(v[1]), map(v[2]), map(v[0])).unwrap();
        let sol = solve(&r, &p).unwrap();
        assert!(sol.d_star <= 1e-12 * r.longest_side());
        assert!(sol.focal.is_none());
    }

    #[test]
    fn solve_equals_min_over_all_variants() {
        let cases = [
            ([[0.0, 0.0], [4.0, 0.0], [1.0, 3.0]], [[0.0, 0.0], [1.0, 0.0], [0.3, 0.8]]),
            ([[-2.0, 1.0], [3.0, 0.5], [0.5, -2.5]], [[0.0, 0.0], [5.0, 1.0], [2.0, 6.0]]),
            ([[0.1, 0.1], [2.0, 0.3], [1.0, 1.8]], [[0.0, 0.0], [0.4, 0.0], [0.1, 1.5]]),
        ];
        for (rv, pv) in cases {
            let r = tri(rv);
            let p = tri(pv);
            let sol = solve(&r, &p).unwrap();
            let mut best = f64::INFINITY;
            for perm in Permutation3::ALL {
                let variant = perm.apply(&p);
                for orientation in [Orientation::Ccw, Orientation::Cw] {
                    best = best.min(rigid_solve(&r, &variant, orientation).unwrap().travel);
                }
            }
            assert!(
                sol.d_star <= best + 1e-12 * (1.0 + best),
                "d_star {} exceeds enumerated minimum {}",
                sol.d_star,
                best
            );
            assert!((sol.d_star - best).abs() <= 1e-12 * (1.0 + best));
        }
    }

    #[test]
    fn solve_reports_consistent_assignment() {
        let r = tri([[0.0, 0.0], [4.0, 0.0], [1.0, 3.0]]);
        let p = tri([[0.0, 0.0], [1.0, 0.0], [0.3, 0.8]]);
        let sol = solve(&r, &p).unwrap();
        // Destination side between robots j and k matches the pattern side
        // between their assigned vertices, up to the common scale.
        let q = sol.rigid.destinations.vertices();
        let pv = p.vertices();
        let a = sol.assignment.indices();
        let scale = distance(q[0], q[1]) / distance(pv[a[0]], pv[a[1]]);
        for (j, k) in [(1usize, 2usize), (2, 0)] {
            let got = distance(q[j], q[k]);
            let want = scale * distance(pv[a[j]], pv[a[k]]);
            assert!((got - want).abs() < 1e-9 * (1.0 + want));
        }
    }

    #[test]
    fn focal_point_inward_equilateral() {
        let r = equilateral_at(0.0, 0.0, 2.0);
        let v = r.vertices();
        let q = Triangle::new(v[0] * 0.5, v[1] * 0.5, v[2] * 0.5).unwrap();
        match focal_point(&r, &q).unwrap() {
            FocalPoint::Point(f) => assert!(f.norm() < 1e-9),
            FocalPoint::AtInfinity => panic!("expected a finite focal point"),
        }
    }

    #[test]
    fn focal_point_no_movement() {
        let r = tri([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]);
        assert!(matches!(focal_point(&r, &r), Err(Error::NoMovement)));
    }

    #[test]
    fn focal_point_translation_is_at_infinity() {
        let r = tri([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]);
        let v = r.vertices();
        let shift = Point::new(0.3, 0.4);
        let q = Triangle::new(v[0] + shift, v[1] + shift, v[2] + shift).unwrap();
        assert_eq!(focal_point(&r, &q).unwrap(), FocalPoint::AtInfinity);
    }

    #[test]
    fn focal_lines_concurrent_for_optimal_solutions() {
        let r = tri([[0.0, 0.0], [4.0, 0.0], [1.0, 3.0]]);
        let p = tri([[0.0, 0.0], [1.0, 0.0], [0.3, 0.8]]);
        let sol = solve(&r, &p).unwrap();
        let f = match sol.focal {
            Some(FocalPoint::Point(f)) => f,
            other => panic!("unexpected focal {:?}", other),
        };
        // Every movement line passes through the focal point.
        let q = sol.rigid.destinations.vertices();
        let rv = r.vertices();
        for i in 0..3 {
            let dir = q[i] - rv[i];
            let offset = f - rv[i];
            let residual = dir.cross(offset).abs() / dir.norm();
            assert!(residual < 1e-6 * r.longest_side());
        }
    }

    #[test]
    fn centroid_examples() {
        let t = tri([[0.0, 0.0], [3.0, 0.0], [0.0, 3.0]]);
        assert!(distance(t.centroid(), Point::new(1.0, 1.0)) < 1e-15);
        let e = equilateral_at(0.0, 0.0, 1.5);
        assert!(e.centroid().norm() < 1e-12);
    }

    #[test]
    fn centroid_preserved_for_equilateral_patterns() {
        let r = tri([[0.3, -0.7], [4.2, 0.4], [1.5, 3.1]]);
        let p = equilateral_at(10.0, 10.0, 3.0);
        let sol = solve(&r, &p).unwrap();
        assert!(distance(r.centroid(), sol.rigid.destinations.centroid()) < 1e-9);
    }

    #[test]
    fn scale_equivariance() {
        let r = tri([[0.0, 0.0], [4.0, 0.0], [1.0, 3.0]]);
        let p = tri([[0.0, 0.0], [1.0, 0.0], [0.3, 0.8]]);
        let base = solve(&r, &p).unwrap().d_star;
        for k in [0.25, 3.0, 17.5] {
            let v = r.vertices();
            let scaled = Triangle::new(v[0] * k, v[1] * k, v[2] * k).unwrap();
            let got = solve(&scaled, &p).unwrap().d_star;
            assert!((got - k * base).abs() <= 1e-9 * (k * base));
        }
    }
}

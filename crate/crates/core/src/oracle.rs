//! Independent brute-force check of the analytic solver.
//!
//! The search runs directly over similarity-transform space. For a fixed
//! vertex assignment, reflection flag, rotation `theta`, and scale `s`, the
//! best translation has a closed form: with residuals
//! `e_i = r_i - s * Rot(theta) * p_i`, the translation minimizing the maximum
//! robot travel is the center of the smallest circle enclosing the three
//! residual points, and that circle's radius is the travel. The remaining
//! search is two-dimensional — a coarse grid over `(theta, log s)` for each of
//! the 12 (assignment, reflection) variants, followed by local grid refinement
//! around each incumbent.
//!
//! Straight-line motion is optimal once destinations are fixed, so the value
//! found here approximates the same quantity the solver computes; nothing in
//! this module calls into the solver.

use crate::geometry::{distance, perimeter_normalize, Circle, Permutation3, Point, Triangle};

/// Smallest circle containing three points (coincident or collinear inputs
/// allowed): either the diameter circle of the farthest pair or the
/// circumcircle.
pub fn min_enclosing_circle_3(a: Point, b: Point, c: Point) -> Circle {
    let pts = [a, b, c];
    // Farthest pair determines the diameter-circle candidate.
    let mut far = (0usize, 1usize, distance(a, b));
    for (i, j) in [(1usize, 2usize), (2usize, 0usize)] {
        let d = distance(pts[i], pts[j]);
        if d > far.2 {
            far = (i, j, d);
        }
    }
    let (i, j, diam) = far;
    let center = (pts[i] + pts[j]) * 0.5;
    let third = pts[3 - i - j];
    if diam == 0.0 || distance(center, third) <= diam * 0.5 {
        return Circle::new(center, diam * 0.5);
    }

    // Acute triangle: circumcircle. Shift to `a` for conditioning.
    let u = b - a;
    let v = c - a;
    let det = 2.0 * u.cross(v);
    if det == 0.0 {
        // Collinear fallback; unreachable when the diameter test above passed.
        return Circle::new(center, distance(center, third).max(diam * 0.5));
    }
    let nu = u.dot(u);
    let nv = v.dot(v);
    let cx = (nu * v.y - nv * u.y) / det;
    let cy = (u.x * nv - v.x * nu) / det;
    let circumcenter = a + Point::new(cx, cy);
    let radius = distance(circumcenter, a)
        .max(distance(circumcenter, b))
        .max(distance(circumcenter, c));
    Circle::new(circumcenter, radius)
}

/// Resolution of the transform-space search.
#[derive(Debug, Clone, Copy)]
pub struct GridSpec {
    /// Rotation samples over `[0, 2*pi)`.
    pub theta_cells: usize,
    /// Samples of `log s` across the scale window.
    pub scale_cells: usize,
    /// The scale axis spans `[s0 / scale_window, s0 * scale_window]` around
    /// the diameter ratio `s0` of the two triangles.
    pub scale_window: f64,
    /// Points per axis in each refinement round (odd).
    pub refine_points: usize,
    /// Refinement stops after this many rounds even if the tolerance is not
    /// yet met.
    pub max_refine_rounds: usize,
    /// Refinement stops once both axis half-widths drop below this.
    pub refine_tol: f64,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            theta_cells: 360,
            scale_cells: 200,
            scale_window: 4.0,
            refine_points: 33,
            max_refine_rounds: 12,
            refine_tol: 1e-8,
        }
    }
}

impl GridSpec {
    /// Coarse pass only; refinement disabled.
    pub fn coarse_only(theta_cells: usize, scale_cells: usize) -> Self {
        GridSpec {
            theta_cells,
            scale_cells,
            max_refine_rounds: 0,
            ..GridSpec::default()
        }
    }
}

/// Rotation, uniform scale, and translation applied to the pattern variant.
#[derive(Debug, Clone, Copy)]
pub struct SimilarityTransform {
    pub theta: f64,
    pub scale: f64,
    pub translation: Point,
}

/// Best placement found by the search.
#[derive(Debug, Clone, Copy)]
pub struct OracleResult {
    /// Max robot travel at the best placement; approximates the optimal value
    /// up to search resolution.
    pub d_star_approx: f64,
    pub best_transform: SimilarityTransform,
    /// Robot `j` is matched to pattern vertex `permutation[j]`.
    pub permutation: Permutation3,
    pub mirrored: bool,
}

impl OracleResult {
    /// Per-robot travels realized by the stored transform; the maximum equals
    /// `d_star_approx` by construction.
    pub fn realized_travels(&self, robots: &Triangle, pattern: &Triangle) -> [f64; 3] {
        let variant = variant_points(&perimeter_normalize(pattern), &self.permutation, self.mirrored);
        let (sin, cos) = self.best_transform.theta.sin_cos();
        let r = robots.vertices();
        let mut travels = [0.0; 3];
        for i in 0..3 {
            let p = variant[i];
            let placed = Point::new(
                self.best_transform.scale * (p.x * cos - p.y * sin),
                self.best_transform.scale * (p.x * sin + p.y * cos),
            ) + self.best_transform.translation;
            travels[i] = distance(r[i], placed);
        }
        travels
    }
}

fn variant_points(pattern: &Triangle, perm: &Permutation3, mirrored: bool) -> [Point; 3] {
    let v = pattern.vertices();
    let idx = perm.indices();
    let mut out = [Point::ORIGIN; 3];
    for i in 0..3 {
        let p = v[idx[i]];
        out[i] = if mirrored { Point::new(p.x, -p.y) } else { p };
    }
    out
}

/// Max travel (and optimal translation) for one variant at a fixed rotation
/// and scale.
fn evaluate(robots: &[Point; 3], base: &[Point; 3], sin: f64, cos: f64, scale: f64) -> (f64, Point) {
    let mut residuals = [Point::ORIGIN; 3];
    for i in 0..3 {
        let p = base[i];
        residuals[i] = Point::new(
            robots[i].x - scale * (p.x * cos - p.y * sin),
            robots[i].y - scale * (p.x * sin + p.y * cos),
        );
    }
    let circle = min_enclosing_circle_3(residuals[0], residuals[1], residuals[2]);
    (circle.radius, circle.center)
}

#[derive(Debug, Clone, Copy)]
struct Incumbent {
    value: f64,
    theta: f64,
    log_scale: f64,
    coarse_cell: (usize, usize),
}

/// Fixed-size list of the best coarse cells, kept Chebyshev-separated so the
/// entries land in distinct basins rather than crowding the single best one.
struct TopCells {
    entries: Vec<Incumbent>,
    capacity: usize,
    min_separation: usize,
    theta_cells: usize,
}

impl TopCells {
    fn new(capacity: usize, min_separation: usize, theta_cells: usize) -> Self {
        TopCells {
            entries: Vec::with_capacity(capacity + 1),
            capacity,
            min_separation,
            theta_cells,
        }
    }

    fn offer(&mut self, candidate: Incumbent) {
        if self.entries.len() == self.capacity
            && candidate.value >= self.entries.last().unwrap().value
        {
            return;
        }
        let (sep, wrap) = (self.min_separation, self.theta_cells);
        let same_basin = |e: &Incumbent| {
            let dt = e.coarse_cell.0.abs_diff(candidate.coarse_cell.0);
            let dt = dt.min(wrap - dt); // theta wraps
            dt.max(e.coarse_cell.1.abs_diff(candidate.coarse_cell.1)) < sep
        };
        match self.entries.iter().position(same_basin) {
            Some(i) => {
                if candidate.value < self.entries[i].value {
                    self.entries[i] = candidate;
                }
            }
            None => self.entries.push(candidate),
        }
        self.entries
            .sort_by(|a, b| a.value.partial_cmp(&b.value).unwrap());
        self.entries.truncate(self.capacity);
    }
}

/// Searches all 12 (assignment, reflection) variants over the `(theta, log s)`
/// grid and returns the global best placement after refinement.
///
/// Deterministic: cells are scanned in lexicographic order and only strictly
/// better values replace an incumbent.
pub fn oracle_minmax(robots: &Triangle, pattern: &Triangle, grid: &GridSpec) -> OracleResult {
    let all: Vec<(Permutation3, bool)> = Permutation3::ALL
        .iter()
        .flat_map(|perm| [false, true].map(|m| (*perm, m)))
        .collect();
    oracle_over_variants(robots, pattern, grid, &all)
}

/// Same search restricted to one assignment and reflection flag: the best
/// placement of `mirror(pattern ∘ perm)` alone. Cross-checks the fixed-variant
/// construction.
pub fn oracle_minmax_variant(
    robots: &Triangle,
    pattern: &Triangle,
    perm: &Permutation3,
    mirrored: bool,
    grid: &GridSpec,
) -> OracleResult {
    oracle_over_variants(robots, pattern, grid, &[(*perm, mirrored)])
}

fn oracle_over_variants(
    robots: &Triangle,
    pattern: &Triangle,
    grid: &GridSpec,
    variants: &[(Permutation3, bool)],
) -> OracleResult {
    assert!(grid.theta_cells > 0 && grid.scale_cells > 1, "grid resolution must be positive");
    assert!(grid.scale_window > 1.0);

    let pn = perimeter_normalize(pattern);
    let r = robots.vertices();

    let mut window = grid.scale_window;
    loop {
        let (result, boundary) = search_window(&r, &pn, grid, window, variants);
        // A coarse incumbent pinned to the scale boundary means the window may
        // have clipped the optimum.
        if !boundary || window > grid.scale_window.powi(3) {
            return result;
        }
        window *= grid.scale_window;
    }
}

fn search_window(
    robots: &[Point; 3],
    pattern_norm: &Triangle,
    grid: &GridSpec,
    window: f64,
    variant_set: &[(Permutation3, bool)],
) -> (OracleResult, bool) {
    let robot_tri = Triangle::from_vertices_unchecked(*robots);
    let s0 = robot_tri.longest_side() / pattern_norm.longest_side();
    let log_min = (s0 / window).ln();
    let log_max = (s0 * window).ln();
    let log_step = (log_max - log_min) / (grid.scale_cells - 1) as f64;
    let theta_step = std::f64::consts::TAU / grid.theta_cells as f64;

    let scales: Vec<f64> = (0..grid.scale_cells)
        .map(|li| (log_min + li as f64 * log_step).exp())
        .collect();

    let variants: Vec<(Permutation3, bool, [Point; 3])> = variant_set
        .iter()
        .map(|&(perm, m)| (perm, m, variant_points(pattern_norm, &perm, m)))
        .collect();

    // Track several separated coarse cells per variant: the global basin is
    // not always the one holding the single best coarse sample.
    let mut candidates: Vec<TopCells> = (0..variants.len())
        .map(|_| TopCells::new(4, 4, grid.theta_cells))
        .collect();

    for ti in 0..grid.theta_cells {
        let theta = ti as f64 * theta_step;
        let (sin, cos) = theta.sin_cos();
        for (li, &s) in scales.iter().enumerate() {
            for (v, (_, _, base)) in variants.iter().enumerate() {
                let (value, _) = evaluate(robots, base, sin, cos, s);
                candidates[v].offer(Incumbent {
                    value,
                    theta,
                    log_scale: log_min + li as f64 * log_step,
                    coarse_cell: (ti, li),
                });
            }
        }
    }

    // Local refinement from every candidate basin of every variant, so a
    // shallow basin cannot mask the global minimum. The window re-centers
    // without shrinking while the best point keeps landing on its edge: the
    // objective's minimum lies in a narrow curved valley (the equal-travel
    // family), and shrinking too eagerly stalls partway along it.
    let mut best: Option<(Incumbent, usize)> = None;
    let n = grid.refine_points.max(3) | 1; // odd
    for (v, (_, _, base)) in variants.iter().enumerate() {
        for start in &candidates[v].entries {
            let mut inc = *start;
            let mut half_theta = 2.5 * theta_step;
            let mut half_log = 2.5 * log_step;
            let mut shrinks = 0;
            let mut rounds = 0;
            while shrinks < grid.max_refine_rounds && rounds < 8 * grid.max_refine_rounds {
                rounds += 1;
                if half_theta <= grid.refine_tol && half_log <= grid.refine_tol {
                    break;
                }
                let (center_theta, center_log) = (inc.theta, inc.log_scale);
                let mut round_best: Option<(f64, usize, usize)> = None;
                for a in 0..n {
                    let theta = center_theta - half_theta
                        + 2.0 * half_theta * a as f64 / (n - 1) as f64;
                    let (sin, cos) = theta.sin_cos();
                    for b in 0..n {
                        let log_s =
                            center_log - half_log + 2.0 * half_log * b as f64 / (n - 1) as f64;
                        let (value, _) = evaluate(robots, base, sin, cos, log_s.exp());
                        if round_best.is_none_or(|(rv, _, _)| value < rv) {
                            round_best = Some((value, a, b));
                        }
                    }
                }
                let (value, a, b) = round_best.unwrap();
                let improved = value < inc.value;
                if improved {
                    inc.value = value;
                    inc.theta = center_theta - half_theta
                        + 2.0 * half_theta * a as f64 / (n - 1) as f64;
                    inc.log_scale =
                        center_log - half_log + 2.0 * half_log * b as f64 / (n - 1) as f64;
                }
                let on_edge = a == 0 || a == n - 1 || b == 0 || b == n - 1;
                if !(improved && on_edge) {
                    // Interior minimum (or stagnation): tighten the window.
                    half_theta *= 4.0 / (n - 1) as f64;
                    half_log *= 4.0 / (n - 1) as f64;
                    shrinks += 1;
                }
            }
            if best.is_none_or(|(b, _)| inc.value < b.value) {
                best = Some((inc, v));
            }
        }
    }
    let (best, best_v) = best.expect("coarse grid produced at least one candidate");
    let (perm, mirrored, base) = variants[best_v];

    let (sin, cos) = best.theta.sin_cos();
    let scale = best.log_scale.exp();
    let (value, translation) = evaluate(robots, &base, sin, cos, scale);
    let theta = best.theta.rem_euclid(std::f64::consts::TAU);

    let on_boundary = best.coarse_cell.1 == 0 || best.coarse_cell.1 == grid.scale_cells - 1;
    (
        OracleResult {
            d_star_approx: value,
            best_transform: SimilarityTransform {
                theta,
                scale,
                translation,
            },
            permutation: perm,
            mirrored,
        },
        on_boundary,
    )
}

//! Foundational 2D primitives: points, circles, validated triangles,
//! vertex permutations, and similarity predicates.
//!
//! A [`Triangle`] is validated at construction: vertices must be finite and
//! non-degenerate (no side and no height shorter than `1e-9` times the longest
//! side). Every operation downstream can therefore assume a well-conditioned
//! input instead of re-checking it.

use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};

/// Relative degeneracy threshold: sides and heights shorter than this fraction
/// of the longest side are rejected.
pub const DEGENERACY_EPS: f64 = 1e-9;

/// Default tolerance for angle comparisons in similarity checks (radians).
pub const SIMILARITY_TOL: f64 = 1e-9;

/// A location in the shared global frame. Doubles as a 2D vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn dot(&self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the cross product, treating both points as vectors.
    pub fn cross(&self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(&self) -> f64 {
        self.x.hypot(self.y)
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, k: f64) -> Point {
        Point::new(self.x * k, self.y * k)
    }
}

/// Euclidean distance between two points.
pub fn distance(u: Point, v: Point) -> f64 {
    (u - v).norm()
}

/// A circle given by center and non-negative radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circle {
    pub center: Point,
    pub radius: f64,
}

impl Circle {
    pub fn new(center: Point, radius: f64) -> Self {
        debug_assert!(radius >= 0.0 && center.is_finite());
        Circle { center, radius }
    }

    /// Whether `p` lies inside or on the circle, with `slack` absorbing
    /// floating-point error in the caller's favor.
    pub fn contains(&self, p: Point, slack: f64) -> bool {
        distance(self.center, p) <= self.radius + slack
    }

    /// The point on the circle at angle `phi` from the positive x-axis.
    pub fn point_at(&self, phi: f64) -> Point {
        self.center + Point::new(phi.cos(), phi.sin()) * self.radius
    }
}

/// Orientation sign of an ordered triangle: counterclockwise (positive signed
/// area) or clockwise (negative).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Ccw,
    Cw,
}

impl Orientation {
    pub fn flipped(self) -> Orientation {
        match self {
            Orientation::Ccw => Orientation::Cw,
            Orientation::Cw => Orientation::Ccw,
        }
    }
}

/// An ordered sequence of three distinct, non-collinear points.
///
/// Serves both as a robot configuration and as a pattern to form. The vertex
/// order is meaningful: permuting vertices produces a different (but congruent)
/// value, and an odd permutation flips [`Triangle::orientation`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle {
    vertices: [Point; 3],
}

impl Triangle {
    /// Validates finiteness and non-degeneracy.
    pub fn new(a: Point, b: Point, c: Point) -> Result<Self> {
        let vertices = [a, b, c];
        if vertices.iter().any(|p| !p.is_finite()) {
            return Err(Error::NonFinite("triangle vertex"));
        }
        let sides = [distance(a, b), distance(b, c), distance(c, a)];
        let longest = sides.iter().cloned().fold(0.0, f64::max);
        if longest == 0.0 {
            return Err(Error::DegenerateTriangle("all vertices coincide"));
        }
        let eps = DEGENERACY_EPS * longest;
        if sides.iter().any(|&s| s <= eps) {
            return Err(Error::DegenerateTriangle("two vertices (nearly) coincide"));
        }
        // Minimum height is 2|area| / longest side.
        let area2 = (b - a).cross(c - a).abs();
        if area2 / longest <= eps {
            return Err(Error::DegenerateTriangle("vertices (nearly) collinear"));
        }
        Ok(Triangle { vertices })
    }

    pub fn from_array(v: [[f64; 2]; 3]) -> Result<Self> {
        Triangle::new(
            Point::new(v[0][0], v[0][1]),
            Point::new(v[1][0], v[1][1]),
            Point::new(v[2][0], v[2][1]),
        )
    }

    /// Bypasses validation; for vertex reorderings and scalings of triangles
    /// that were already validated.
    pub(crate) fn from_vertices_unchecked(vertices: [Point; 3]) -> Self {
        Triangle { vertices }
    }

    pub fn vertex(&self, i: usize) -> Point {
        self.vertices[i]
    }

    pub fn vertices(&self) -> [Point; 3] {
        self.vertices
    }

    /// Side lengths `[d(v0,v1), d(v1,v2), d(v2,v0)]`.
    pub fn side_lengths(&self) -> [f64; 3] {
        let [a, b, c] = self.vertices;
        [distance(a, b), distance(b, c), distance(c, a)]
    }

    pub fn longest_side(&self) -> f64 {
        self.side_lengths().iter().cloned().fold(0.0, f64::max)
    }

    pub fn perimeter(&self) -> f64 {
        self.side_lengths().iter().sum()
    }

    pub fn signed_area(&self) -> f64 {
        let [a, b, c] = self.vertices;
        0.5 * (b - a).cross(c - a)
    }

    pub fn orientation(&self) -> Orientation {
        if self.signed_area() > 0.0 {
            Orientation::Ccw
        } else {
            Orientation::Cw
        }
    }

    pub fn centroid(&self) -> Point {
        let [a, b, c] = self.vertices;
        Point::new((a.x + b.x + c.x) / 3.0, (a.y + b.y + c.y) / 3.0)
    }
}

/// A bijection on vertex indices {0, 1, 2}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Permutation3 {
    map: [usize; 3],
}

impl Permutation3 {
    pub const IDENTITY: Permutation3 = Permutation3 { map: [0, 1, 2] };

    /// All six permutations in lexicographic order of their index arrays.
    pub const ALL: [Permutation3; 6] = [
        Permutation3 { map: [0, 1, 2] },
        Permutation3 { map: [0, 2, 1] },
        Permutation3 { map: [1, 0, 2] },
        Permutation3 { map: [1, 2, 0] },
        Permutation3 { map: [2, 0, 1] },
        Permutation3 { map: [2, 1, 0] },
    ];

    pub fn new(map: [usize; 3]) -> Result<Self> {
        let mut seen = [false; 3];
        for &i in &map {
            if i > 2 || seen[i] {
                return Err(Error::NotAPermutation);
            }
            seen[i] = true;
        }
        Ok(Permutation3 { map })
    }

    pub fn indices(&self) -> [usize; 3] {
        self.map
    }

    /// Reorders vertices: slot `k` of the result holds vertex `map[k]` of `t`.
    pub fn apply(&self, t: &Triangle) -> Triangle {
        Triangle::from_vertices_unchecked([
            t.vertex(self.map[0]),
            t.vertex(self.map[1]),
            t.vertex(self.map[2]),
        ])
    }

    pub fn inverse(&self) -> Permutation3 {
        let mut inv = [0usize; 3];
        for (k, &i) in self.map.iter().enumerate() {
            inv[i] = k;
        }
        Permutation3 { map: inv }
    }

    /// Function composition: `self.compose(inner)` maps `k` to
    /// `self[inner[k]]`.
    pub fn compose(&self, inner: &Permutation3) -> Permutation3 {
        Permutation3 {
            map: [
                self.map[inner.map[0]],
                self.map[inner.map[1]],
                self.map[inner.map[2]],
            ],
        }
    }
}

/// Interior angle (radians) at each vertex, returned in vertex order.
///
/// The three values sum to pi up to floating-point rounding.
pub fn interior_angles(t: &Triangle) -> [f64; 3] {
    let v = t.vertices();
    let mut angles = [0.0; 3];
    for i in 0..3 {
        let a = v[(i + 1) % 3] - v[i];
        let b = v[(i + 2) % 3] - v[i];
        angles[i] = a.cross(b).abs().atan2(a.dot(b));
    }
    angles
}

/// The lexicographically first permutation whose reordering of `t` has
/// non-decreasing side chain `d(v0,v1) <= d(v1,v2) <= d(v2,v0)`.
///
/// Lexicographic-first makes tie handling deterministic for isoceles and
/// equilateral inputs.
pub fn canonical_permutation(t: &Triangle) -> Permutation3 {
    let v = t.vertices();
    for perm in Permutation3::ALL {
        let [i, j, k] = perm.indices();
        let d01 = distance(v[i], v[j]);
        let d12 = distance(v[j], v[k]);
        let d20 = distance(v[k], v[i]);
        if d01 <= d12 && d12 <= d20 {
            return perm;
        }
    }
    // Sorting three side lengths always admits a valid ordering.
    unreachable!("no permutation satisfies the side-length chain");
}

/// Interior angles sorted ascending; the shape fingerprint used by
/// [`is_similar`].
pub fn sorted_angles(t: &Triangle) -> [f64; 3] {
    let mut angles = interior_angles(t);
    angles.sort_by(|a, b| a.partial_cmp(b).unwrap());
    angles
}

/// Whether two triangles are similar (equal up to translation, rotation,
/// uniform scaling, reflection, and vertex permutation): their sorted interior
/// angles agree pairwise within `tol` radians.
pub fn is_similar(a: &Triangle, b: &Triangle, tol: f64) -> bool {
    let sa = sorted_angles(a);
    let sb = sorted_angles(b);
    sa.iter().zip(sb.iter()).all(|(x, y)| (x - y).abs() <= tol)
}

/// Scales `t` about its centroid so the result has perimeter 1.
pub fn perimeter_normalize(t: &Triangle) -> Triangle {
    let c = t.centroid();
    let k = 1.0 / t.perimeter();
    let v = t.vertices();
    Triangle::from_vertices_unchecked([
        c + (v[0] - c) * k,
        c + (v[1] - c) * k,
        c + (v[2] - c) * k,
    ])
}

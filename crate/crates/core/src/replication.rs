//! Rigidly similar copies of a pattern pinned to a pair of anchor points.
//!
//! The trivial replication of a triangle `P` on anchors `(u, v)` is the unique
//! triangle rigidly similar to `P` (or to its mirror image, depending on the
//! requested orientation) with its first vertex at `u` and its second at `v`.
//! The image of the third vertex is the *replication point*.
//!
//! Perturbing one anchor on a circle of radius `r` makes the replication point
//! trace a circle around the unperturbed replication point (the *machine
//! circle*); perturbing both anchors sweeps a disk whose boundary is the
//! *spanner circle*. Both radii have closed forms, implemented here:
//!
//! ```text
//! machine radius = r * d(u, c) / d(u, v)
//! spanner radius = r * (d(u, c) + d(v, c)) / d(u, v)
//! ```
//!
//! where `c` is the replication point of the unperturbed anchors.

use crate::error::{Error, Result};
use crate::geometry::{distance, Circle, Orientation, Point, Triangle};

/// The rigidly similar copy of a pattern with its first two vertices pinned
/// to the anchors.
#[derive(Debug, Clone, Copy)]
pub struct TrivialReplication {
    /// The replicated triangle `(u, v, replication_point)`.
    pub triangle: Triangle,
    /// The pinned first and second vertices.
    pub anchors: (Point, Point),
    /// The image of the pattern's third vertex.
    pub replication_point: Point,
}

/// Machine and spanner circles of a replication under anchor perturbations of
/// radius `r`.
#[derive(Debug, Clone, Copy)]
pub struct ReplicationCircleSet {
    pub machine_circle: Circle,
    pub spanner_circle: Circle,
    pub base: TrivialReplication,
    pub r: f64,
}

/// Complex ratio `(p2 - p0) / (p1 - p0)` of the pattern, conjugated when the
/// requested orientation differs from the pattern's own.
fn shape_ratio(pattern: &Triangle, orientation: Orientation) -> Point {
    let [p0, p1, p2] = pattern.vertices();
    let base = p1 - p0;
    let free = p2 - p0;
    let denom = base.dot(base);
    let mut w = Point::new(free.dot(base) / denom, base.cross(free) / denom);
    if pattern.orientation() != orientation {
        w.y = -w.y;
    }
    w
}

/// Builds the trivial replication of `pattern` on anchors `(u, v)`.
///
/// The returned triangle has the requested orientation sign; its shape matches
/// `pattern` (same correspondence of vertices), mirrored when the requested
/// sign differs from the pattern's.
pub fn trivial_replication(
    pattern: &Triangle,
    u: Point,
    v: Point,
    orientation: Orientation,
) -> Result<TrivialReplication> {
    if !u.is_finite() || !v.is_finite() {
        return Err(Error::NonFinite("replication anchor"));
    }
    if u == v {
        return Err(Error::CoincidentAnchors);
    }
    let w = shape_ratio(pattern, orientation);
    let span = v - u;
    // t2 = u + w * (v - u), complex multiplication.
    let t2 = Point::new(
        u.x + w.x * span.x - w.y * span.y,
        u.y + w.x * span.y + w.y * span.x,
    );
    let triangle = Triangle::new(u, v, t2)?;
    Ok(TrivialReplication {
        triangle,
        anchors: (u, v),
        replication_point: t2,
    })
}

/// Circle traced by the replication point when the second anchor moves on
/// `C(v, r)` while the first stays at `u`.
pub fn machine_circle(
    pattern: &Triangle,
    u: Point,
    v: Point,
    r: f64,
    orientation: Orientation,
) -> Result<Circle> {
    let c = trivial_replication(pattern, u, v, orientation)?.replication_point;
    Ok(Circle::new(c, r * distance(u, c) / distance(u, v)))
}

/// Smallest circle enclosing the replication points when both anchors move on
/// circles of radius `r` around `u` and `v`.
pub fn spanner_circle(
    pattern: &Triangle,
    u: Point,
    v: Point,
    r: f64,
    orientation: Orientation,
) -> Result<Circle> {
    let c = trivial_replication(pattern, u, v, orientation)?.replication_point;
    let radius = r * (distance(u, c) + distance(v, c)) / distance(u, v);
    Ok(Circle::new(c, radius))
}

/// Bundles the unperturbed replication with both circles.
pub fn replication_circle_set(
    pattern: &Triangle,
    u: Point,
    v: Point,
    r: f64,
    orientation: Orientation,
) -> Result<ReplicationCircleSet> {
    let base = trivial_replication(pattern, u, v, orientation)?;
    let c = base.replication_point;
    let d_uv = distance(u, v);
    let machine = Circle::new(c, r * distance(u, c) / d_uv);
    let spanner = Circle::new(c, r * (distance(u, c) + distance(v, c)) / d_uv);
    Ok(ReplicationCircleSet {
        machine_circle: machine,
        spanner_circle: spanner,
        base,
        r,
    })
}

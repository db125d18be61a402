//! A distance between triangle *shapes*: zero iff the triangles are similar.
//!
//! Both triangles are reduced to their sorted interior angles and replicated
//! onto the unit segment `((0,0), (1,0))` with positive orientation; `tau` is
//! the Euclidean distance between the two free vertices. Since it is a
//! distance between points in the plane, the metric axioms come for free.
//!
//! With sorted angles `a = (a0 <= a1 <= a2)` and `b`, the law of sines places
//! the free vertices at distance `sin(a1)/sin(a2)` and `sin(b1)/sin(b2)` from
//! the origin, at angles `a0` and `b0` above the segment, so the law of
//! cosines gives
//!
//! ```text
//! tau^2 = sin^2(a1)/sin^2(a2) + sin^2(b1)/sin^2(b2)
//!         - 2 * (sin(a1) sin(b1)) / (sin(a2) sin(b2)) * cos(a0 - b0)
//! ```
//!
//! The value is unbounded as a triangle flattens (`a2 -> pi` drives
//! `sin(a2) -> 0`); no clamping or normalization is applied.

use crate::error::{Error, Result};
use crate::geometry::{sorted_angles, Triangle};

/// Interior angles of a triangle sorted ascending. `a0 <= a1 <= a2`, all in
/// `(0, pi)`, summing to pi.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleTriple {
    a0: f64,
    a1: f64,
    a2: f64,
}

impl AngleTriple {
    /// Angle-sum slack; atan2-derived angles land well inside this.
    pub const SUM_TOL: f64 = 1e-12;

    pub fn new(a0: f64, a1: f64, a2: f64) -> Result<Self> {
        if !(a0.is_finite() && a1.is_finite() && a2.is_finite()) {
            return Err(Error::InvalidAngles("non-finite angle"));
        }
        if a0 <= 0.0 {
            return Err(Error::InvalidAngles("smallest angle must be positive"));
        }
        if !(a0 <= a1 && a1 <= a2) {
            return Err(Error::InvalidAngles("angles must be sorted ascending"));
        }
        if a2 >= std::f64::consts::PI {
            return Err(Error::InvalidAngles("largest angle must be below pi"));
        }
        if (a0 + a1 + a2 - std::f64::consts::PI).abs() > Self::SUM_TOL {
            return Err(Error::InvalidAngles("angles must sum to pi"));
        }
        Ok(AngleTriple { a0, a1, a2 })
    }

    pub fn values(&self) -> [f64; 3] {
        [self.a0, self.a1, self.a2]
    }
}

/// Sorted interior angles of `t`.
pub fn angles_of(t: &Triangle) -> AngleTriple {
    let [a0, a1, a2] = sorted_angles(t);
    AngleTriple { a0, a1, a2 }
}

/// Shape distance between two angle triples.
///
/// The law-of-cosines expression `la^2 + lb^2 - 2 la lb cos(a0 - b0)` is
/// evaluated in the algebraically identical form
/// `(la - lb)^2 + 4 la lb sin^2((a0 - b0) / 2)`: the direct form cancels
/// catastrophically for near-similar shapes (its absolute rounding floor puts
/// a ~1e-8 floor under tau), while both terms here are non-negative and
/// relatively accurate. Swapping the arguments is bitwise symmetric: each
/// term pairs the operands commutatively and squaring absorbs the sign of
/// the angle difference.
pub fn tau_from_angles(alpha: &AngleTriple, beta: &AngleTriple) -> f64 {
    let la = alpha.a1.sin() / alpha.a2.sin();
    let lb = beta.a1.sin() / beta.a2.sin();
    let half_sin = (0.5 * (alpha.a0 - beta.a0)).sin();
    ((la - lb) * (la - lb) + 4.0 * (la * lb) * (half_sin * half_sin)).sqrt()
}

/// Shape distance between two triangles; zero iff they are similar.
pub fn tau(a: &Triangle, b: &Triangle) -> f64 {
    tau_from_angles(&angles_of(a), &angles_of(b))
}

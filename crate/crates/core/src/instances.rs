//! Seeded random problem instances for verification runs.
//!
//! Vertices are drawn uniformly from a square; triangles whose minimum height
//! is below 1% of the longest side are resampled so the tight tolerances of
//! the verification suites (equal travel to 1e-12 relative, similarity to
//! 1e-9) stay meaningful rather than drowning in conditioning error.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::geometry::{Point, Triangle};

/// Default half-width of the sampling square.
pub const DEFAULT_EXTENT: f64 = 5.0;

/// Minimum height over longest side accepted by the sampler.
pub const MIN_ASPECT: f64 = 1e-2;

/// Deterministic RNG for a given seed; the same seed reproduces the same
/// instance stream on every platform.
pub fn rng_for_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly random point in `[-extent, extent]^2`.
pub fn random_point<R: Rng>(rng: &mut R, extent: f64) -> Point {
    Point::new(rng.gen_range(-extent..extent), rng.gen_range(-extent..extent))
}

/// A random non-degenerate, reasonably conditioned triangle.
pub fn random_triangle<R: Rng>(rng: &mut R, extent: f64) -> Triangle {
    loop {
        let a = random_point(rng, extent);
        let b = random_point(rng, extent);
        let c = random_point(rng, extent);
        if let Ok(t) = Triangle::new(a, b, c) {
            let long = t.longest_side();
            let min_height = 2.0 * t.signed_area().abs() / long;
            if min_height >= MIN_ASPECT * long {
                return t;
            }
        }
    }
}

/// A random (robots, pattern) pair at the default extent.
pub fn random_instance<R: Rng>(rng: &mut R) -> (Triangle, Triangle) {
    (
        random_triangle(rng, DEFAULT_EXTENT),
        random_triangle(rng, DEFAULT_EXTENT),
    )
}

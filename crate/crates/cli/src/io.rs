//! Scenario files and output documents.

use serde::{Deserialize, Serialize};
use triform::simulator::SimConfig;
use triform::solver::{FocalPoint, Solution};
use triform::{Point, Triangle};

/// Input scenario: robot positions, target pattern, optional seed and
/// simulation parameters.
#[derive(Debug, Deserialize)]
pub struct Scenario {
    pub robots: [[f64; 2]; 3],
    pub pattern: [[f64; 2]; 3],
    #[serde(default)]
    #[allow(dead_code)] // reserved field of the on-disk schema
    pub seed: Option<u64>,
    #[serde(default)]
    pub sim: Option<SimSection>,
}

#[derive(Debug, Deserialize)]
pub struct SimSection {
    #[serde(default)]
    pub step: Option<f64>,
    #[serde(default)]
    pub max_cycles: Option<u64>,
    #[serde(default)]
    pub similarity_tol: Option<f64>,
}

impl Scenario {
    pub fn sim_config(&self, step: f64, tolerance_override: Option<f64>) -> SimConfig {
        let mut cfg = SimConfig::with_step(step);
        if let Some(sim) = &self.sim {
            if let Some(m) = sim.max_cycles {
                cfg.max_cycles = m;
            }
            if let Some(t) = sim.similarity_tol {
                cfg.similarity_tol = t;
            }
        }
        if let Some(t) = tolerance_override {
            cfg.similarity_tol = t;
        }
        cfg
    }
}

/// Rounds to 12 significant digits so emitted documents are stable across
/// runs and platforms. Goes through the decimal representation: power-of-ten
/// arithmetic is inexact for extreme exponents.
pub fn sig12(v: f64) -> f64 {
    if v == 0.0 {
        return 0.0;
    }
    if !v.is_finite() {
        return v;
    }
    format!("{:.11e}", v).parse().expect("formatted float parses")
}

fn pair(p: Point) -> [f64; 2] {
    [sig12(p.x), sig12(p.y)]
}

fn triple(t: &Triangle) -> [[f64; 2]; 3] {
    let v = t.vertices();
    [pair(v[0]), pair(v[1]), pair(v[2])]
}

/// Emitted by `solve`.
#[derive(Debug, Serialize)]
pub struct SolutionDocument {
    pub d_star: f64,
    pub permutation: [usize; 3],
    pub mirrored: bool,
    pub destinations: [[f64; 2]; 3],
    pub targets: [[f64; 2]; 3],
    pub focal: serde_json::Value,
    pub travel_per_robot: [f64; 3],
    pub tolerance: f64,
}

impl SolutionDocument {
    /// Travels at or below `tolerance` x the configuration size are reported
    /// as exact zeros; the focal point is omitted for zero-travel solutions.
    pub fn new(robots: &Triangle, solution: &Solution, tolerance: f64) -> Self {
        let zero = solution.d_star <= tolerance * robots.longest_side();
        let travels = solution.travel_per_robot(robots);
        let focal = if zero {
            serde_json::Value::Null
        } else {
            match solution.focal {
                Some(FocalPoint::Point(p)) => serde_json::json!(pair(p)),
                Some(FocalPoint::AtInfinity) => serde_json::json!("infinity"),
                None => serde_json::Value::Null,
            }
        };
        SolutionDocument {
            d_star: if zero { 0.0 } else { sig12(solution.d_star) },
            permutation: solution.assignment.indices(),
            mirrored: solution.mirrored,
            destinations: triple(&solution.rigid.destinations),
            targets: [
                pair(solution.rigid.targets[0]),
                pair(solution.rigid.targets[1]),
                pair(solution.rigid.targets[2]),
            ],
            focal,
            travel_per_robot: if zero {
                [0.0; 3]
            } else {
                [sig12(travels[0]), sig12(travels[1]), sig12(travels[2])]
            },
            tolerance,
        }
    }
}

/// Emitted by `verify`.
#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub instances: usize,
    pub seed: u64,
    pub tolerance: f64,
    pub max_rel_discrepancy: f64,
    pub equal_travel_violations: usize,
    pub similarity_violations: usize,
    pub pass: bool,
}

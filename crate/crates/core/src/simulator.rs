//! Synchronous look-compute-move execution of the incremental strategy.
//!
//! Each cycle every robot observes the current configuration, solves for the
//! optimal destinations from scratch (no memory), and moves
//! `min(remaining, step)` straight toward its destination. Recomputing from
//! the intermediate configuration reproduces the same destinations, so the
//! motion is straight-line overall and each robot's total path length equals
//! the original `d_star`.
//!
//! Should the configuration pass close to collinear mid-run (where the solve
//! is ill-conditioned), the run keeps the destinations from the last
//! well-conditioned cycle across that stretch — they would not change anyway —
//! and counts the affected cycles in [`SimTrace::frozen_cycles`].

use std::io;

use crate::error::{Error, Result};
use crate::geometry::{distance, Point, Triangle};
use crate::solver::solve;

/// Remaining-distance threshold at which a robot counts as arrived. Robots
/// land exactly on their destination in the final move, so this only absorbs
/// rounding in the recomputation that follows arrival.
pub const ARRIVAL_TOL: f64 = 1e-12;

/// Destinations are recomputed only while the configuration's minimum height
/// stays above this fraction of its longest side; below it the previous
/// destinations are reused.
pub const FREEZE_ASPECT: f64 = 1e-6;

/// Execution parameters of a run.
#[derive(Debug, Clone, Copy)]
pub struct SimConfig {
    /// Distance every robot covers per cycle until it arrives.
    pub step: f64,
    /// Abort threshold for runaway loops.
    pub max_cycles: u64,
    /// Tolerance for the terminal similar-to-pattern check.
    pub similarity_tol: f64,
}

impl SimConfig {
    pub fn with_step(step: f64) -> Self {
        SimConfig {
            step,
            max_cycles: 1_000_000,
            similarity_tol: 1e-9,
        }
    }
}

/// State recorded at the start of each cycle, before the move.
#[derive(Debug, Clone, Copy)]
pub struct CycleRecord {
    /// Robot positions when the cycle begins. Raw points: trajectories may
    /// legitimately pass through collinear configurations.
    pub positions: [Point; 3],
    /// Destinations computed (or reused) this cycle.
    pub destinations: [Point; 3],
    /// Worst-case remaining travel this cycle.
    pub travel: f64,
}

/// Time-indexed record of a full run.
#[derive(Debug, Clone)]
pub struct SimTrace {
    pub cycles: Vec<CycleRecord>,
    /// Cycles that reused destinations because the configuration was too
    /// close to collinear to recompute them reliably.
    pub frozen_cycles: usize,
}

impl SimTrace {
    pub fn final_positions(&self) -> [Point; 3] {
        self.cycles.last().expect("trace has at least one cycle").positions
    }

    /// Number of cycles in which robots moved.
    pub fn movement_cycles(&self) -> usize {
        self.cycles.len() - 1
    }

    /// Total distance each robot covered, summed over per-cycle displacements.
    pub fn path_lengths(&self) -> [f64; 3] {
        let mut lengths = [0.0; 3];
        for pair in self.cycles.windows(2) {
            for (i, length) in lengths.iter_mut().enumerate() {
                *length += distance(pair[0].positions[i], pair[1].positions[i]);
            }
        }
        lengths
    }

    /// Writes the trace as CSV with columns
    /// `cycle,robot_index,x,y,dest_x,dest_y,remaining`.
    pub fn write_csv<W: io::Write>(&self, out: &mut W) -> io::Result<()> {
        writeln!(out, "cycle,robot_index,x,y,dest_x,dest_y,remaining")?;
        for (cycle, rec) in self.cycles.iter().enumerate() {
            for i in 0..3 {
                let p = rec.positions[i];
                let d = rec.destinations[i];
                writeln!(
                    out,
                    "{},{},{:.11e},{:.11e},{:.11e},{:.11e},{:.11e}",
                    cycle,
                    i,
                    p.x,
                    p.y,
                    d.x,
                    d.y,
                    distance(p, d)
                )?;
            }
        }
        Ok(())
    }
}

fn well_conditioned(positions: &[Point; 3]) -> Option<Triangle> {
    let t = Triangle::new(positions[0], positions[1], positions[2]).ok()?;
    let long = t.longest_side();
    if 2.0 * t.signed_area().abs() / long >= FREEZE_ASPECT * long {
        Some(t)
    } else {
        None
    }
}

fn move_toward(positions: &mut [Point; 3], destinations: &[Point; 3], step: f64) {
    for i in 0..3 {
        let to = destinations[i] - positions[i];
        let dist = to.norm();
        if dist <= step {
            positions[i] = destinations[i];
        } else if dist > 0.0 {
            positions[i] = positions[i] + to * (step / dist);
        }
    }
}

/// One look-compute-move cycle from a non-degenerate configuration: solves for
/// destinations and moves every robot `min(remaining, step)` toward its own.
///
/// Returns the new positions and the destinations computed this cycle.
pub fn sim_step(positions: &Triangle, pattern: &Triangle, step: f64) -> Result<(Triangle, Triangle)> {
    let sol = solve(positions, pattern)?;
    let destinations = sol.rigid.destinations;
    let mut moved = positions.vertices();
    move_toward(&mut moved, &destinations.vertices(), step);
    let new_positions = Triangle::new(moved[0], moved[1], moved[2])?;
    Ok((new_positions, destinations))
}

/// Runs cycles until every robot is within [`ARRIVAL_TOL`] of its destination
/// or `cfg.max_cycles` is exceeded. The first trace record holds the initial
/// configuration; each subsequent record follows one move.
pub fn run(robots: &Triangle, pattern: &Triangle, cfg: &SimConfig) -> Result<SimTrace> {
    assert!(cfg.step > 0.0, "step must be positive");
    let mut positions = robots.vertices();
    let mut cycles: Vec<CycleRecord> = Vec::new();
    let mut frozen_cycles = 0usize;
    let mut previous: Option<[Point; 3]> = None;

    for _ in 0..=cfg.max_cycles {
        let destinations = match (well_conditioned(&positions), previous) {
            (Some(t), _) => solve(&t, pattern)?.rigid.destinations.vertices(),
            (None, Some(prev)) => {
                frozen_cycles += 1;
                prev
            }
            (None, None) => {
                // First cycle of a thin-but-valid start: solve it as-is.
                let t = Triangle::new(positions[0], positions[1], positions[2])?;
                solve(&t, pattern)?.rigid.destinations.vertices()
            }
        };
        previous = Some(destinations);

        let remaining = [
            distance(positions[0], destinations[0]),
            distance(positions[1], destinations[1]),
            distance(positions[2], destinations[2]),
        ];
        let travel = remaining.iter().cloned().fold(0.0, f64::max);
        cycles.push(CycleRecord {
            positions,
            destinations,
            travel,
        });

        if remaining.iter().all(|&d| d <= ARRIVAL_TOL) {
            return Ok(SimTrace {
                cycles,
                frozen_cycles,
            });
        }
        move_toward(&mut positions, &destinations, cfg.step);
    }
    Err(Error::CycleLimitExceeded(cfg.max_cycles))
}

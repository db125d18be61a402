//! Command-line front end: solve scenarios, compare triangle shapes, run
//! look-compute-move simulations, and batch-verify the solver against the
//! brute-force oracle.
//!
//! Exit codes: 0 success, 2 parse/usage error, 3 degenerate input,
//! 4 cycle limit exceeded, 5 verification failure.

mod io;
mod svg;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rayon::prelude::*;

use triform::geometry::{
    distance, is_similar, perimeter_normalize, Orientation, Permutation3, Triangle,
};
use triform::instances;
use triform::metric::tau;
use triform::oracle::{oracle_minmax, GridSpec};
use triform::replication::trivial_replication;
use triform::simulator::run;
use triform::solver::solve;
use triform::Error as CoreError;

use io::{Scenario, SolutionDocument, VerifyReport};

#[derive(Parser)]
#[command(
    name = "triform",
    version,
    about = "Optimal min-max formation of triangular patterns by three robots"
)]
struct Cli {
    /// Numeric tolerance: zero-travel threshold for `solve` and `metric`,
    /// terminal similarity tolerance for `simulate`, pass threshold for
    /// `verify`. Defaults: 1e-9 (1e-6 for verify).
    #[arg(long, global = true)]
    tolerance: Option<f64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a scenario file and print the solution document as JSON
    Solve {
        /// Scenario JSON with `robots` and `pattern`
        scenario: PathBuf,
    },
    /// Print the shape distance between two triangle files
    Metric {
        /// Triangle JSON: three [x, y] pairs
        a: PathBuf,
        b: PathBuf,
    },
    /// Simulate look-compute-move cycles and write the CSV trace to stdout
    Simulate {
        scenario: PathBuf,
        /// Distance each robot moves per cycle (falls back to the scenario's
        /// `sim.step`)
        #[arg(long)]
        step: Option<f64>,
        /// Also render the run as an SVG file
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Solve seeded random instances and compare against the oracle
    Verify {
        /// Number of instances (must be positive)
        #[arg(long)]
        instances: usize,
        /// RNG seed
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        Failure::new(2, message)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::new(2, format!("io error: {e}"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn dispatch(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Solve { scenario } => cmd_solve(&scenario, cli.tolerance.unwrap_or(1e-9)),
        Command::Metric { a, b } => cmd_metric(&a, &b, cli.tolerance.unwrap_or(1e-9)),
        Command::Simulate { scenario, step, svg } => {
            cmd_simulate(&scenario, step, svg.as_deref(), cli.tolerance)
        }
        Command::Verify { instances, seed } => {
            cmd_verify(instances, seed, cli.tolerance.unwrap_or(1e-6))
        }
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::usage(format!("cannot parse {}: {e}", path.display())))
}

/// Validates one triangle of a scenario, naming it on failure.
fn load_triangle(vertices: [[f64; 2]; 3], name: &str) -> Result<Triangle, Failure> {
    Triangle::from_array(vertices)
        .map_err(|e| Failure::new(3, format!("degenerate input: {name}: {e}")))
}

fn cmd_solve(path: &Path, tolerance: f64) -> Result<(), Failure> {
    let scenario: Scenario = parse_json(path)?;
    let robots = load_triangle(scenario.robots, "robots")?;
    let pattern = load_triangle(scenario.pattern, "pattern")?;
    let solution = solve(&robots, &pattern).map_err(core_failure)?;
    let document = SolutionDocument::new(&robots, &solution, tolerance);
    println!("{}", serde_json::to_string_pretty(&document).expect("document serializes"));
    Ok(())
}

fn cmd_metric(path_a: &Path, path_b: &Path, tolerance: f64) -> Result<(), Failure> {
    let a = load_triangle(parse_json(path_a)?, "triangle A")?;
    let b = load_triangle(parse_json(path_b)?, "triangle B")?;
    let mut value = tau(&a, &b);
    if value < tolerance {
        value = 0.0;
    }
    println!("{:.12}", value);
    Ok(())
}

fn cmd_simulate(
    path: &Path,
    step_flag: Option<f64>,
    svg_out: Option<&Path>,
    tolerance: Option<f64>,
) -> Result<(), Failure> {
    let scenario: Scenario = parse_json(path)?;
    let robots = load_triangle(scenario.robots, "robots")?;
    let pattern = load_triangle(scenario.pattern, "pattern")?;

    let step = step_flag
        .or_else(|| scenario.sim.as_ref().and_then(|s| s.step))
        .ok_or_else(|| Failure::usage("no step size: pass --step or set sim.step in the scenario"))?;
    if !step.is_finite() || step <= 0.0 {
        return Err(Failure::usage(format!("step must be positive, got {step}")));
    }
    let cfg = scenario.sim_config(step, tolerance);

    let trace = run(&robots, &pattern, &cfg).map_err(core_failure)?;

    let f = trace.final_positions();
    match Triangle::new(f[0], f[1], f[2]) {
        Ok(formed) if is_similar(&formed, &pattern, cfg.similarity_tol) => {}
        _ => eprintln!(
            "warning: terminal formation missed the pattern at tolerance {}",
            cfg.similarity_tol
        ),
    }

    if let Some(svg_path) = svg_out {
        let solution = solve(&robots, &pattern).map_err(core_failure)?;
        std::fs::write(svg_path, svg::render(&robots, &pattern, &solution, &trace))?;
    }

    let mut stdout = std::io::stdout().lock();
    match trace.write_csv(&mut stdout) {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {}
        other => other?,
    }
    Ok(())
}

/// The three per-robot construction values whose agreement the verify report
/// counts; rebuilt from the replication surface.
fn travel_products(r: &Triangle, p: &Triangle, orientation: Orientation) -> [f64; 3] {
    let pn = perimeter_normalize(p);
    let rv = r.vertices();
    let pv = pn.vertices();
    let mut out = [0.0; 3];
    for i in 0..3 {
        let (i1, i2) = ((i + 1) % 3, (i + 2) % 3);
        let rotated = Permutation3::new([i1, i2, i]).unwrap().apply(&pn);
        let target = trivial_replication(&rotated, rv[i1], rv[i2], orientation)
            .expect("valid replication scene")
            .replication_point;
        out[i] = distance(rv[i], target) * distance(pv[i1], pv[i2]);
    }
    out
}

fn cmd_verify(count: usize, seed: u64, tolerance: f64) -> Result<(), Failure> {
    if count == 0 {
        return Err(Failure::usage("--instances must be positive"));
    }
    let mut rng = instances::rng_for_seed(seed);
    let cases: Vec<(Triangle, Triangle)> =
        (0..count).map(|_| instances::random_instance(&mut rng)).collect();

    struct Outcome {
        rel_discrepancy: f64,
        equal_travel_ok: bool,
        similar_ok: bool,
    }

    let outcomes: Vec<Outcome> = cases
        .par_iter()
        .map(|(r, p)| {
            let sol = solve(r, p).expect("generated instances are non-degenerate");
            let oracle = oracle_minmax(r, p, &GridSpec::default());
            let rel_discrepancy = (sol.d_star - oracle.d_star_approx).abs()
                / (1.0 + sol.d_star.max(oracle.d_star_approx));
            let mut equal_travel_ok = true;
            for orientation in [Orientation::Ccw, Orientation::Cw] {
                let t = travel_products(r, p, orientation);
                let max = t.iter().cloned().fold(0.0, f64::max);
                let min = t.iter().cloned().fold(f64::INFINITY, f64::min);
                equal_travel_ok &= max - min <= 1e-12 * max;
            }
            let similar_ok = is_similar(&sol.rigid.destinations, p, 1e-9);
            Outcome {
                rel_discrepancy,
                equal_travel_ok,
                similar_ok,
            }
        })
        .collect();

    let max_rel = outcomes.iter().map(|o| o.rel_discrepancy).fold(0.0, f64::max);
    let equal_travel_violations = outcomes.iter().filter(|o| !o.equal_travel_ok).count();
    let similarity_violations = outcomes.iter().filter(|o| !o.similar_ok).count();
    let pass = max_rel <= tolerance && equal_travel_violations == 0 && similarity_violations == 0;

    let report = VerifyReport {
        instances: count,
        seed,
        tolerance,
        max_rel_discrepancy: io::sig12(max_rel),
        equal_travel_violations,
        similarity_violations,
        pass,
    };
    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    if pass {
        Ok(())
    } else {
        Err(Failure::new(5, "verification failed; see report"))
    }
}

fn core_failure(e: CoreError) -> Failure {
    let code = match e {
        CoreError::CycleLimitExceeded(_) => 4,
        CoreError::DegenerateTriangle(_) | CoreError::NonFinite(_) => 3,
        _ => 2,
    };
    Failure::new(code, e.to_string())
}

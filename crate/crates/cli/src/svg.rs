//! Static SVG rendering of a solved scenario: start positions, destinations,
//! trajectories, targets with their replication circles, the focal point, and
//! the pattern as an inset.

use std::fmt::Write;

use triform::geometry::{distance, Point, Triangle};
use triform::simulator::SimTrace;
use triform::solver::{FocalPoint, Solution};

struct Bounds {
    min: Point,
    max: Point,
}

impl Bounds {
    fn new() -> Self {
        Bounds {
            min: Point::new(f64::INFINITY, f64::INFINITY),
            max: Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
        }
    }

    fn add(&mut self, p: Point) {
        self.min.x = self.min.x.min(p.x);
        self.min.y = self.min.y.min(p.y);
        self.max.x = self.max.x.max(p.x);
        self.max.y = self.max.y.max(p.y);
    }

    fn add_circle(&mut self, center: Point, radius: f64) {
        self.add(center + Point::new(radius, radius));
        self.add(center - Point::new(radius, radius));
    }
}

/// y grows upward in the plane but downward in SVG; flip once here.
fn flip(p: Point) -> (f64, f64) {
    (p.x, -p.y)
}

pub fn render(robots: &Triangle, pattern: &Triangle, solution: &Solution, trace: &SimTrace) -> String {
    let q = solution.rigid.destinations.vertices();
    let r = robots.vertices();
    let targets = solution.rigid.targets;

    let mut bounds = Bounds::new();
    for i in 0..3 {
        bounds.add(r[i]);
        bounds.add(q[i]);
        // Spanner circle of the winning construction around each target.
        let radius = (distance(r[i], targets[i]) - solution.d_star).max(0.0);
        bounds.add_circle(targets[i], radius);
    }
    if let Some(FocalPoint::Point(f)) = solution.focal {
        bounds.add(f);
    }

    let span = (bounds.max.x - bounds.min.x).max(bounds.max.y - bounds.min.y).max(1e-9);
    let margin = 0.08 * span;
    let view_x = bounds.min.x - margin;
    let view_y = -(bounds.max.y + margin);
    let view_w = bounds.max.x - bounds.min.x + 2.0 * margin;
    let view_h = bounds.max.y - bounds.min.y + 2.0 * margin;
    let stroke = 0.004 * span;
    let dot = 0.012 * span;
    let font = 0.035 * span;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r##"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{:.4} {:.4} {:.4} {:.4}">"##,
        view_x, view_y, view_w, view_h
    );
    let _ = writeln!(
        out,
        r##"<rect x="{:.4}" y="{:.4}" width="{:.4}" height="{:.4}" fill="white"/>"##,
        view_x, view_y, view_w, view_h
    );

    // Replication circles (dashed) around the targets.
    for i in 0..3 {
        let radius = (distance(r[i], targets[i]) - solution.d_star).max(0.0);
        let (cx, cy) = flip(targets[i]);
        let _ = writeln!(
            out,
            r##"<circle cx="{:.4}" cy="{:.4}" r="{:.4}" fill="none" stroke="#bbbbbb" stroke-width="{:.4}" stroke-dasharray="{:.4} {:.4}"/>"##,
            cx, cy, radius, stroke, 3.0 * stroke, 3.0 * stroke
        );
    }

    // Trajectories.
    for i in 0..3 {
        let mut points = String::new();
        for rec in &trace.cycles {
            let (x, y) = flip(rec.positions[i]);
            let _ = write!(points, "{:.4},{:.4} ", x, y);
        }
        let _ = writeln!(
            out,
            r##"<polyline points="{}" fill="none" stroke="#4682b4" stroke-width="{:.4}"/>"##,
            points.trim_end(),
            1.5 * stroke
        );
    }

    // Start positions, destinations, targets.
    for i in 0..3 {
        let (x, y) = flip(r[i]);
        let _ = writeln!(
            out,
            r##"<circle cx="{:.4}" cy="{:.4}" r="{:.4}" fill="#333333"/>"##,
            x, y, dot
        );
        let _ = writeln!(
            out,
            r##"<text x="{:.4}" y="{:.4}" font-size="{:.4}" fill="#333333">r{}</text>"##,
            x + 1.5 * dot,
            y - 0.5 * dot,
            font,
            i
        );
        let (x, y) = flip(q[i]);
        let _ = writeln!(
            out,
            r##"<circle cx="{:.4}" cy="{:.4}" r="{:.4}" fill="none" stroke="#d2691e" stroke-width="{:.4}"/>"##,
            x, y, dot, stroke * 1.5
        );
        let _ = writeln!(
            out,
            r##"<text x="{:.4}" y="{:.4}" font-size="{:.4}" fill="#d2691e">q{}</text>"##,
            x + 1.5 * dot,
            y + 2.0 * dot,
            font,
            i
        );
        let (x, y) = flip(targets[i]);
        let _ = writeln!(
            out,
            r##"<path d="M {:.4} {:.4} L {:.4} {:.4} M {:.4} {:.4} L {:.4} {:.4}" stroke="#999999" stroke-width="{:.4}"/>"##,
            x - dot, y, x + dot, y, x, y - dot, x, y + dot, stroke
        );
    }

    if let Some(FocalPoint::Point(f)) = solution.focal {
        let (x, y) = flip(f);
        let _ = writeln!(
            out,
            r##"<path d="M {:.4} {:.4} L {:.4} {:.4} M {:.4} {:.4} L {:.4} {:.4}" stroke="#c22222" stroke-width="{:.4}"/>"##,
            x - dot, y - dot, x + dot, y + dot, x - dot, y + dot, x + dot, y - dot, 1.5 * stroke
        );
        let _ = writeln!(
            out,
            r##"<text x="{:.4}" y="{:.4}" font-size="{:.4}" fill="#c22222">focal</text>"##,
            x + 1.5 * dot,
            y,
            font
        );
    }

    // Pattern inset, top-right corner.
    let pv = pattern.vertices();
    let mut pb = Bounds::new();
    for v in pv {
        pb.add(v);
    }
    let pspan = (pb.max.x - pb.min.x).max(pb.max.y - pb.min.y).max(1e-12);
    let inset = 0.16 * span;
    let scale = inset / pspan;
    let corner = Point::new(view_x + view_w - inset - margin * 0.5, view_y + margin * 0.5);
    let place = |v: Point| {
        (
            corner.x + (v.x - pb.min.x) * scale,
            corner.y + (pb.max.y - v.y) * scale,
        )
    };
    let mut points = String::new();
    for v in [pv[0], pv[1], pv[2], pv[0]] {
        let (x, y) = place(v);
        let _ = write!(points, "{:.4},{:.4} ", x, y);
    }
    let _ = writeln!(
        out,
        r##"<polyline points="{}" fill="none" stroke="#2e8b57" stroke-width="{:.4}"/>"##,
        points.trim_end(),
        stroke
    );
    let _ = writeln!(
        out,
        r##"<text x="{:.4}" y="{:.4}" font-size="{:.4}" fill="#2e8b57">pattern</text>"##,
        corner.x,
        corner.y + inset + font,
        font
    );

    out.push_str("</svg>\n");
    out
}

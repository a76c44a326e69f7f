//! Static SVG pictures of the lattice polytopes.
//!
//! `n = 3` draws the triangle `T_r` in the plane with its four bounding lines.
//! `n = 4` draws the eliminated polytope in `(s_0, s_1, s_2)` under a fixed
//! orthographic projection, with the edges of the region cut out by the
//! eliminated constraints.

use std::fmt::Write as _;
use std::path::Path;

use nalgebra::{Matrix3, Vector3};

use crate::enumeration::{eliminated_system, enumerate_compositions, triangle_lattice_points};
use crate::error::{Error, Result};

const SIZE: f64 = 480.0;
const MARGIN: f64 = 40.0;

/// Writes the picture for `(n, r)` to `path` and returns the number of
/// marked lattice points.
pub fn plot_polytope(n: usize, r: u64, path: &Path) -> Result<usize> {
    let (svg, count) = polytope_svg(n, r)?;
    std::fs::write(path, svg)
        .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display())))?;
    Ok(count)
}

pub fn polytope_svg(n: usize, r: u64) -> Result<(String, usize)> {
    match n {
        3 => triangle_svg(r),
        4 => projected_svg(r),
        _ => Err(Error::InvalidArgument(format!(
            "unsupported plot dimension: n = {n} (only 3 and 4)"
        ))),
    }
}

struct Canvas {
    lo: [f64; 2],
    scale: f64,
    body: String,
}

impl Canvas {
    fn new(lo: [f64; 2], hi: [f64; 2]) -> Self {
        let span = (hi[0] - lo[0]).max(hi[1] - lo[1]).max(1e-9);
        Canvas { lo, scale: (SIZE - 2.0 * MARGIN) / span, body: String::new() }
    }

    fn map(&self, p: [f64; 2]) -> (f64, f64) {
        let x = MARGIN + (p[0] - self.lo[0]) * self.scale;
        let y = SIZE - MARGIN - (p[1] - self.lo[1]) * self.scale;
        (x, y)
    }

    fn line(&mut self, a: [f64; 2], b: [f64; 2], class: &str) {
        let (x1, y1) = self.map(a);
        let (x2, y2) = self.map(b);
        let _ = writeln!(
            self.body,
            r#"<line class="{class}" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}"/>"#
        );
    }

    fn point(&mut self, p: [f64; 2], label: &str) {
        let (x, y) = self.map(p);
        let _ = writeln!(
            self.body,
            r#"<circle class="point" cx="{x:.2}" cy="{y:.2}" r="3.5"><title>{label}</title></circle>"#
        );
    }

    fn finish(self, title: &str, count: usize) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
        );
        s.push_str(
            "<style>.constraint{stroke:#888;stroke-width:1;stroke-dasharray:4 3}\
             .edge{stroke:#225;stroke-width:1.5}.point{fill:#c33}\
             text{font-family:sans-serif;font-size:13px}</style>\n",
        );
        let _ = writeln!(s, r#"<rect width="{SIZE}" height="{SIZE}" fill="white"/>"#);
        let _ = writeln!(s, r#"<text x="10" y="20">{title}</text>"#);
        s.push_str(&self.body);
        let _ = writeln!(s, r#"<text class="legend" x="10" y="{}">points: {count}</text>"#, SIZE - 10.0);
        s.push_str("</svg>\n");
        s
    }
}

fn triangle_svg(r: u64) -> Result<(String, usize)> {
    let pts = triangle_lattice_points(r)?;
    let rf = r as f64;
    let mut c = Canvas::new([-0.5 * rf, -0.5 * rf], [3.5 * rf, 3.5 * rf]);
    let (lo, hi) = (-0.5 * rf, 3.5 * rf);
    // x + y = 3r, 2x + y = 4r, x + 2y = 2r, -x + y = r
    let lines: [(f64, f64, f64); 4] = [(1.0, 1.0, 3.0), (2.0, 1.0, 4.0), (1.0, 2.0, 2.0), (-1.0, 1.0, 1.0)];
    for (a, b, k) in lines {
        let y = |x: f64| (k * rf - a * x) / b;
        c.line([lo, y(lo)], [hi, y(hi)], "constraint");
    }
    let v = [[0.0, rf], [rf, 2.0 * rf], [2.0 * rf, 0.0]];
    for i in 0..3 {
        c.line(v[i], v[(i + 1) % 3], "edge");
    }
    for p in &pts {
        let (x, y) = (p.0[0], p.0[1]);
        c.point([x as f64, y as f64], &format!("({x}, {y})"));
    }
    Ok((c.finish(&format!("T_{r}"), pts.len()), pts.len()))
}

fn project(p: [f64; 3]) -> [f64; 2] {
    // isometric-style view
    let (s, c) = (std::f64::consts::FRAC_PI_6.sin(), std::f64::consts::FRAC_PI_6.cos());
    [(p[0] - p[1]) * c, p[2] + (p[0] + p[1]) * s]
}

fn projected_svg(r: u64) -> Result<(String, usize)> {
    let sys = eliminated_system(4, r)?;
    let rows: Vec<[f64; 4]> = sys
        .rows()
        .iter()
        .map(|row| [row[0] as f64, row[1] as f64, row[2] as f64, row[3] as f64])
        .collect();
    let feasible = |q: &Vector3<f64>| {
        rows.iter().all(|row| row[0] + row[1] * q[0] + row[2] * q[1] + row[3] * q[2] >= -1e-9)
    };
    // vertices: feasible intersections of three constraint planes
    let mut vertices: Vec<(Vector3<f64>, Vec<usize>)> = Vec::new();
    let m = rows.len();
    for a in 0..m {
        for b in a + 1..m {
            for d in b + 1..m {
                let mat = Matrix3::from_fn(|i, j| rows[[a, b, d][i]][j + 1]);
                let rhs = Vector3::from_fn(|i, _| -rows[[a, b, d][i]][0]);
                let Some(q) = mat.lu().solve(&rhs) else { continue };
                if !feasible(&q) || vertices.iter().any(|(v, _)| (v - q).norm() < 1e-9) {
                    continue;
                }
                let active = (0..m)
                    .filter(|&k| {
                        let row = rows[k];
                        (row[0] + row[1] * q[0] + row[2] * q[1] + row[3] * q[2]).abs() < 1e-9
                    })
                    .collect();
                vertices.push((q, active));
            }
        }
    }
    let pts: Vec<[f64; 3]> = enumerate_compositions(4, r)?
        .iter()
        .map(|s| [s.0[0] as f64, s.0[1] as f64, s.0[2] as f64])
        .collect();
    let mut all: Vec<[f64; 2]> = vertices.iter().map(|(v, _)| project([v[0], v[1], v[2]])).collect();
    all.extend(pts.iter().map(|&p| project(p)));
    let lo = all.iter().fold([f64::MAX; 2], |a, p| [a[0].min(p[0]), a[1].min(p[1])]);
    let hi = all.iter().fold([f64::MIN; 2], |a, p| [a[0].max(p[0]), a[1].max(p[1])]);
    let pad = 0.5;
    let mut c = Canvas::new([lo[0] - pad, lo[1] - pad], [hi[0] + pad, hi[1] + pad]);
    for (i, (u, au)) in vertices.iter().enumerate() {
        for (v, av) in &vertices[i + 1..] {
            if au.iter().filter(|k| av.contains(k)).count() >= 2 {
                c.line(project([u[0], u[1], u[2]]), project([v[0], v[1], v[2]]), "edge");
            }
        }
    }
    for p in &pts {
        c.point(project(*p), &format!("({}, {}, {})", p[0], p[1], p[2]));
    }
    Ok((c.finish(&format!("P_4, r = {r}"), pts.len()), pts.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circles(svg: &str) -> usize {
        svg.matches("<circle").count()
    }

    #[test]
    fn triangle_points_match_enumeration() {
        let (svg, count) = polytope_svg(3, 2).unwrap();
        assert_eq!(count, 10);
        assert_eq!(circles(&svg), 10);
        assert!(svg.contains("points: 10"));
        assert_eq!(polytope_svg(3, 1).unwrap().1, 4);
    }

    #[test]
    fn four_variable_projection() {
        let (svg, count) = polytope_svg(4, 1).unwrap();
        assert_eq!(count, enumerate_compositions(4, 1).unwrap().len());
        assert_eq!(circles(&svg), count);
        assert!(svg.contains("class=\"edge\""));
    }

    #[test]
    fn unsupported_dimension() {
        assert!(polytope_svg(5, 1).is_err());
    }
}

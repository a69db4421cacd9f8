//! Schlegel-style drawing of a projectivized cone of dimension at most 3.

use super::ConeLattice;
use crate::rational::to_f64;
use std::fmt::Write;

type P = Vec<f64>;

fn sub(a: &[f64], b: &[f64]) -> P {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn dotf(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn orthonormal(vs: &[P]) -> Vec<P> {
    let mut out: Vec<P> = Vec::new();
    for v in vs {
        let mut w = v.clone();
        for u in &out {
            let c = dotf(&w, u);
            w = w.iter().zip(u).map(|(x, y)| x - c * y).collect();
        }
        let n = dotf(&w, &w).sqrt();
        if n > 1e-9 {
            out.push(w.into_iter().map(|x| x / n).collect());
        }
    }
    out
}

/// Points of the quotient polytope in its own affine span.
fn chart_points(lat: &ConeLattice) -> Vec<P> {
    let (_, pivots, _) = lat.hrep.quotient();
    let ys: Vec<P> = lat.rays.iter().map(|v| pivots.iter().map(|&p| to_f64(&v[p])).collect()).collect();
    let (e, _, _) = lat.hrep.quotient();
    // an interior functional: the sum of all rows, positive on every ray
    let rows_y: Vec<P> = lat.hrep.rows.iter().map(|r| pivots.iter().map(|&p| to_f64(&r.coeffs[p])).collect()).collect();
    let w: P = (0..e.len()).map(|j| rows_y.iter().map(|r| r[j]).sum()).collect();
    let pts: Vec<P> = ys.iter().map(|y| y.iter().map(|x| x / dotf(&w, y)).collect()).collect();
    let g: P = (0..e.len()).map(|j| pts.iter().map(|p| p[j]).sum::<f64>() / pts.len() as f64).collect();
    let diffs: Vec<P> = pts.iter().map(|p| sub(p, &g)).collect();
    let basis = orthonormal(&diffs);
    diffs.iter().map(|d| basis.iter().map(|b| dotf(d, b)).collect()).collect()
}

/// Perspective projection of a 3-polytope from a point just beyond `facet`.
fn schlegel(pts: &[P], facet: &[usize]) -> Vec<(f64, f64)> {
    let c: P = (0..3).map(|j| facet.iter().map(|&v| pts[v][j]).sum::<f64>() / facet.len() as f64).collect();
    let n = dotf(&c, &c).sqrt();
    let d: P = c.iter().map(|x| x / n).collect();
    let eye: P = c.iter().zip(&d).map(|(x, y)| x + 0.6 * n * y).collect();
    let helper = if d[0].abs() < 0.9 { vec![1.0, 0.0, 0.0] } else { vec![0.0, 1.0, 0.0] };
    let frame = orthonormal(&[d.clone(), helper, vec![0.0, 0.0, 1.0]]);
    pts.iter()
        .map(|p| {
            let t = dotf(&sub(&c, &eye), &d) / dotf(&sub(p, &eye), &d);
            let q: P = eye.iter().zip(p).map(|(e, x)| e + t * (x - e)).collect();
            let r = sub(&q, &c);
            (dotf(&r, &frame[1]), dotf(&r, &frame[2]))
        })
        .collect()
}

/// SVG of the vertex-edge graph, with an optional label per vertex ray.
pub fn prism_svg(lat: &ConeLattice, labels: &[String]) -> Option<String> {
    let dim = lat.dim();
    if !(1..=3).contains(&dim) {
        return None;
    }
    let pts = chart_points(lat);
    let flat: Vec<(f64, f64)> = if dim == 3 {
        let facet = lat.facets().into_iter().max_by_key(|f| f.verts.len())?.verts.clone();
        schlegel(&pts, &facet)
    } else {
        pts.iter().map(|p| (p[0], p.get(1).copied().unwrap_or(0.0))).collect()
    };
    let (w, h, pad) = (480.0, 480.0, 60.0);
    let xs = flat.iter().map(|p| p.0);
    let ys = flat.iter().map(|p| p.1);
    let (x0, x1) = (xs.clone().fold(f64::MAX, f64::min), xs.fold(f64::MIN, f64::max));
    let (y0, y1) = (ys.clone().fold(f64::MAX, f64::min), ys.fold(f64::MIN, f64::max));
    let scale = ((w - 2.0 * pad) / (x1 - x0).max(1e-9)).min((h - 2.0 * pad) / (y1 - y0).max(1e-9));
    let at = |p: (f64, f64)| (pad + (p.0 - x0) * scale, h - pad - (p.1 - y0) * scale);
    let mut s = String::new();
    writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#).ok()?;
    writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#).ok()?;
    for f in lat.faces.iter().filter(|f| f.dim == 1) {
        let (a, b) = (at(flat[f.verts[0]]), at(flat[f.verts[1]]));
        writeln!(s, r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="black" stroke-width="2"/>"#, a.0, a.1, b.0, b.1).ok()?;
    }
    for (i, &p) in flat.iter().enumerate() {
        let (x, y) = at(p);
        writeln!(s, r#"<circle cx="{x:.2}" cy="{y:.2}" r="5" fill="steelblue"/>"#).ok()?;
        let text = labels.get(i).cloned().unwrap_or_else(|| format!("v{i}"));
        writeln!(s, r#"<text x="{:.2}" y="{:.2}" font-family="monospace" font-size="13">{}</text>"#, x + 8.0, y - 8.0, text).ok()?;
    }
    s.push_str("</svg>\n");
    Some(s)
}

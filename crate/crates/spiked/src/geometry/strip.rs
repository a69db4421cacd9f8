//! Strip deformations as tangent vectors in the chart.
//!
//! Every lift of an arc splits the cover; the side away from the point at
//! infinity, the puncture and the hole moves by an infinitesimal isometry
//! pushing it off the arc, the rest stays put.  Crown core arcs change the
//! holonomy instead, which is undone by a conjugation before gauge fixing.

use super::{check_family, DecoratedMetric, GeometryError};
use crate::rational::{approximate, q, to_f64, Q};
use crate::surface::{arcs_disjoint, Anchor, Arc, Family};
use num_traits::{One, Signed, Zero};

/// Killing field `a + b z + c z²` on the upper half-plane.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Field {
    a: Q,
    b: Q,
    c: Q,
}

impl Field {
    fn at(&self, z: &Q) -> Q {
        &self.a + &self.b * z + &self.c * z * z
    }

    fn derivative(&self, z: &Q) -> Q {
        &self.b + q(2) * &self.c * z
    }

    /// Hyperbolic translation flowing toward `u`, away from `v`.
    fn toward(u: &Q, v: Option<&Q>) -> Field {
        match v {
            Some(v) => {
                let d = v - u;
                Field { a: u * v / &d, b: -(u + v) / &d, c: Q::one() / &d }
            }
            None => Field { a: u.clone(), b: -Q::one(), c: Q::zero() },
        }
    }

    fn parabolic(x: &Q, k: Q) -> Field {
        Field { a: &k * x * x, b: -q(2) * &k * x, c: k }
    }
}

/// `φ(z) = (z - p)/(q - z)`, sending the geodesic `p q` to the imaginary axis.
fn phi(z: Option<&Q>, p: &Q, qq: &Q) -> Q {
    match z {
        Some(z) => (z - p) / (qq - z),
        None => -Q::one(),
    }
}

/// Height where the geodesic `p q` meets the geodesic with ends `ends`, in φ coordinates.
fn foot_height(ends: (Option<Q>, Option<Q>), p: &Q, qq: &Q) -> f64 {
    let prod = phi(ends.0.as_ref(), p, qq) * phi(ends.1.as_ref(), p, qq);
    assert!(prod.is_negative(), "arc geodesic does not cross its boundary edge");
    to_f64(&-prod).sqrt()
}

/// Hyperbolic field for the compact arc on the geodesic `p q` crossing the
/// given edge geodesics, translating along the perpendicular at the waist.
/// `waist` in `(0, 1)` is the fraction of the distance between the feet.
fn compact_field(p: &Q, qq: &Q, feet: [(Option<Q>, Option<Q>); 2], waist: f64) -> Field {
    let (y1, y2) = (foot_height(feet[0].clone(), p, qq), foot_height(feet[1].clone(), p, qq));
    let target = (y1.ln() + waist * (y2.ln() - y1.ln())).exp();
    let mut den = 64;
    let rho = loop {
        let r = approximate(target, den);
        let rf = to_f64(&r);
        let inside = (rf - y1) * (rf - y2) < 0.0;
        if inside && r.is_positive() {
            break r;
        }
        den *= 4;
        assert!(den < 1 << 40, "waist approximation failed: {y1} {y2} {target}");
    };
    let u = (p + qq * &rho) / (Q::one() + &rho);
    if rho.is_one() {
        return Field::toward(&u, None);
    }
    let v = (p - qq * &rho) / (Q::one() - &rho);
    Field::toward(&u, Some(&v))
}

/// Geodesic ends of boundary edge `i` in the lift containing model point `k`.
fn edge_ends(m: &DecoratedMetric, k: usize) -> (Option<Q>, Option<Q>) {
    let s = &m.surface;
    let len = s.point_count();
    let Anchor::Edge(i) = s.points()[k % len] else { unreachable!() };
    let turns = (k / len) as i64;
    let lift = |x: Option<Q>| -> Option<Q> {
        let x = x?;
        Some(match s.family {
            Family::PuncturedPolygon => x + q(turns),
            Family::Crown => (0..turns).fold(x, |acc, _| acc * m.lambda()),
            _ => x,
        })
    };
    let a = m.positions[i].clone();
    let b = if i + 1 < s.n {
        m.positions[i + 1].clone()
    } else {
        match s.family {
            Family::PuncturedPolygon => Some(q(1)),
            Family::Crown => Some(m.lambda()),
            _ => m.positions[0].clone(),
        }
    };
    (lift(a), lift(b))
}

/// Velocity and horoball change at every spike, before gauge fixing.
type Motion = (Vec<Q>, Vec<Q>);

fn push_region(m: &DecoratedMetric, field: &Field, lo: &Q, hi: Option<&Q>) -> Motion {
    let s = &m.surface;
    let n = s.n;
    let mut dx = vec![Q::zero(); n];
    let mut du = vec![Q::zero(); n];
    let inside = |x: &Q| x > lo && hi.map_or(true, |h| x < h);
    for j in 0..n {
        let Some(x) = m.positions[j].clone() else { continue };
        match s.family {
            Family::Polygon => {
                if inside(&x) {
                    dx[j] = field.at(&x);
                    du[j] = field.derivative(&x);
                }
            }
            Family::PuncturedPolygon => {
                for k in -3i64..=3 {
                    let y = &x - q(k);
                    if inside(&y) {
                        dx[j] = field.at(&y);
                        du[j] = field.derivative(&y);
                    }
                }
            }
            _ => {
                let lam = m.lambda();
                for k in -3i32..=3 {
                    let scale = if k >= 0 { (0..k).fold(Q::one(), |a, _| a * &lam) } else { (0..-k).fold(Q::one(), |a, _| a / &lam) };
                    let y = &x / &scale;
                    if inside(&y) {
                        dx[j] = &scale * field.at(&y);
                        du[j] = field.derivative(&y);
                    }
                }
            }
        }
    }
    (dx, du)
}

pub fn strip_vector(m: &DecoratedMetric, arc: &Arc) -> Result<Vec<Q>, GeometryError> {
    strip_vector_with_waist(m, arc, 0.5)
}

/// Strip deformation of `arc`; `waist` places the waist of compact arcs as a
/// fraction of the distance between the two feet.
pub fn strip_vector_with_waist(m: &DecoratedMetric, arc: &Arc, waist: f64) -> Result<Vec<Q>, GeometryError> {
    let s = &m.surface;
    check_family(s)?;
    let pts = s.points();
    let len = pts.len();
    let is_spike = |k: usize| matches!(pts[k % len], Anchor::Spike(_));
    let mut dt = Q::zero();
    let (mut dx, mut du) = match *arc {
        Arc::Chord { start, len: l } => {
            let end = start + l;
            let (p, e) = (m.point_position(start), m.point_position(end));
            match (p, e) {
                (Some(p), Some(e)) => {
                    let (lo, hi) = if p < e { (p.clone(), e.clone()) } else { (e.clone(), p.clone()) };
                    let field = match (is_spike(start), is_spike(end)) {
                        (true, _) | (_, true) => {
                            let (x, g) = if is_spike(start) { (&p, &e) } else { (&e, &p) };
                            let k = if g > x { -Q::one() } else { Q::one() };
                            Field::parabolic(x, k)
                        }
                        _ => compact_field(&lo, &hi, [edge_ends(m, start), edge_ends(m, end)], waist),
                    };
                    push_region(m, &field, &lo, Some(&hi))
                }
                // ray from the spike at infinity: shear the right-hand side
                (None, Some(g)) | (Some(g), None) => {
                    push_region(m, &Field { a: Q::one(), b: Q::zero(), c: Q::zero() }, &g, None)
                }
                (None, None) => unreachable!(),
            }
        }
        Arc::ToCore { at } => {
            let x = m.point_position(at).expect("crown points are finite");
            let field = if is_spike(at) {
                Field::parabolic(&x, Q::one())
            } else {
                let axis = (Some(Q::zero()), None);
                compact_field(&-x.clone(), &x, [edge_ends(m, at), axis], waist)
            };
            let lam = m.lambda();
            let mut dx = vec![Q::zero(); s.n];
            let mut du = vec![Q::zero(); s.n];
            for j in 0..s.n {
                let xj = m.positions[j].clone().expect("finite");
                if xj < x {
                    dx[j] = field.at(&xj);
                    du[j] = field.derivative(&xj);
                }
            }
            // holonomy becomes exp(εZ)∘λ with Z(z) = -λ X(z/λ)
            let (al, be, ga) = (-&lam * &field.a, -field.b.clone(), -&field.c / &lam);
            let y = Field { a: &al / (Q::one() - &lam), b: Q::zero(), c: &ga / (Q::one() - Q::one() / &lam) };
            for j in 0..s.n {
                let xj = m.positions[j].clone().expect("finite");
                dx[j] -= y.at(&xj);
                du[j] -= y.derivative(&xj);
            }
            dt = be;
            (dx, du)
        }
        Arc::Cross { .. } => return Err(GeometryError::UnsupportedFamily("moebius")),
    };
    // gauge fixing
    match s.family {
        Family::Polygon => {
            let (v0, v1) = (dx[0].clone(), dx[1].clone());
            let g = Field { a: v0.clone(), b: &v1 - &v0, c: Q::zero() };
            let n = s.n;
            for j in 0..n {
                match m.positions[j].clone() {
                    Some(x) => {
                        dx[j] -= g.at(&x);
                        du[j] -= &g.b;
                    }
                    None => du[j] += &g.b,
                }
            }
        }
        Family::PuncturedPolygon => {
            let v0 = dx[0].clone();
            for v in dx.iter_mut() {
                *v -= &v0;
            }
        }
        _ => {
            let sc = dx[0].clone() / m.positions[0].clone().expect("finite");
            for j in 0..s.n {
                let xj = m.positions[j].clone().expect("finite");
                dx[j] -= &sc * xj;
                du[j] -= &sc;
            }
        }
    }
    let chart = m.chart();
    let mut out = vec![Q::zero(); chart.dim];
    if let Some(k) = chart.t {
        out[k] = dt;
    }
    for j in 0..s.n {
        if let Some(k) = chart.x[j] {
            out[k] = dx[j].clone();
        }
        if let Some(k) = chart.u[j] {
            out[k] = du[j].clone();
        }
    }
    Ok(out)
}

/// Weighted sum of strip vectors over a simplex of arcs.
pub fn strip_map(m: &DecoratedMetric, weights: &[(Arc, Q)]) -> Result<Vec<Q>, GeometryError> {
    let s = &m.surface;
    for (i, (a, _)) in weights.iter().enumerate() {
        for (b, _) in &weights[i + 1..] {
            if !arcs_disjoint(a, b, s) {
                return Err(GeometryError::NotASimplex);
            }
        }
    }
    if weights.iter().any(|(_, w)| w.is_negative()) || weights.iter().all(|(_, w)| w.is_zero()) {
        return Err(GeometryError::NotASimplex);
    }
    let mut out = vec![Q::zero(); m.chart().dim];
    for (a, w) in weights {
        for (o, v) in out.iter_mut().zip(strip_vector(m, a)?) {
            *o += w * v;
        }
    }
    Ok(out)
}

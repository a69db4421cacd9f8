//! Decorated hyperbolic metrics in the upper half-plane for polygons,
//! punctured polygons and crowns.
//!
//! Spikes sit on the real line in boundary order.  A horoball at a finite
//! point has Euclidean diameter `e^u`; the horoball at `∞` is `{y > e^-u}`.
//! Charts fix the Möbius gauge as follows.
//!
//! * polygon: `x_1 = 0`, `x_2 = 1`, `x_n = ∞`; coordinates `x_3..x_{n-1}`.
//! * punctured: holonomy `z ↦ z + 1`, `x_1 = 0`; coordinates `x_2..x_n` in `(0, 1)`.
//! * crown: holonomy `z ↦ λz` with `λ = e^t`, `x_1 = 1`; coordinates `t`
//!   then `x_2..x_n` in `(1, λ)`.
//!
//! The log-diameters `u_i` of decorated spikes follow, in spike order.

mod length;
mod oracle;
mod strip;

pub use length::{horoconnection_length, length_differential, length_from_coordinates, LengthFunctional};
pub use oracle::{geodesic_arc_beta_disjoint, geodesic_arcs_disjoint, geodesic_betas_cross};
pub use strip::{strip_map, strip_vector, strip_vector_with_waist};

use crate::rational::{format_q, parse_q, q, qf, to_f64, Q};
use crate::surface::{Anchor, Family, SurfaceSpec};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum GeometryError {
    #[error("no metric realization for the {0} family")]
    UnsupportedFamily(&'static str),
    #[error("connection has an undecorated endpoint")]
    UndecoratedEndpoint,
    #[error("arcs do not span a simplex")]
    NotASimplex,
    #[error("malformed metric: {0}")]
    Malformed(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecoratedMetric {
    pub surface: SurfaceSpec,
    /// Spike positions in boundary order; `None` is the point at infinity.
    pub positions: Vec<Option<Q>>,
    /// Log-diameters, one per spike (ignored for undecorated spikes).
    pub log_diameters: Vec<Q>,
    /// Holonomy scaling factor `λ = e^t` of a crown.
    pub lambda: Option<Q>,
}

/// Where each chart quantity lives in a tangent vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartIndex {
    pub t: Option<usize>,
    pub x: Vec<Option<usize>>,
    pub u: Vec<Option<usize>>,
    pub dim: usize,
}

impl ChartIndex {
    pub fn new(s: &SurfaceSpec) -> ChartIndex {
        let n = s.n;
        let mut next = 0;
        let mut take = || {
            next += 1;
            Some(next - 1)
        };
        let t = if s.family == Family::Crown { take() } else { None };
        let free = |i: usize| match s.family {
            Family::Polygon => i >= 2 && i + 1 < n,
            _ => i >= 1,
        };
        let x = (0..n).map(|i| if free(i) { take() } else { None }).collect();
        let u = (0..n).map(|i| if s.decorations[i] { take() } else { None }).collect();
        ChartIndex { t, x, u, dim: next }
    }
}

pub fn chart_name(f: Family) -> &'static str {
    match f {
        Family::Polygon => "polygon-affine",
        Family::PuncturedPolygon => "punctured-parabolic",
        Family::Crown => "crown-hyperbolic",
        Family::Moebius => "none",
    }
}

fn check_family(s: &SurfaceSpec) -> Result<(), GeometryError> {
    if s.family == Family::Moebius {
        Err(GeometryError::UnsupportedFamily("moebius"))
    } else {
        Ok(())
    }
}

/// Sorted distinct rationals `k / den` strictly inside `(0, 1)`.
fn sorted_fractions(rng: &mut ChaCha8Rng, count: usize, den: i64) -> Vec<Q> {
    let mut ks: Vec<i64> = Vec::new();
    while ks.len() < count {
        let k = rng.gen_range(1..den);
        if !ks.contains(&k) {
            ks.push(k);
        }
    }
    ks.sort_unstable();
    ks.into_iter().map(|k| qf(k, den)).collect()
}

pub fn random_metric(s: &SurfaceSpec, seed: u64) -> Result<DecoratedMetric, GeometryError> {
    check_family(s)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = s.n;
    let den = 4 * n as i64 + 8;
    let (positions, lambda) = match s.family {
        Family::Polygon => {
            let mut p = vec![Some(q(0)), Some(q(1))];
            let mut x = q(1);
            for _ in 2..n - 1 {
                x += qf(rng.gen_range(2..=8), 4);
                p.push(Some(x.clone()));
            }
            p.push(None);
            (p, None)
        }
        Family::PuncturedPolygon => {
            let mut p = vec![Some(q(0))];
            p.extend(sorted_fractions(&mut rng, n - 1, den).into_iter().map(Some));
            (p, None)
        }
        Family::Crown => {
            let lambda = q(1) + qf(rng.gen_range(4..=12), 4);
            let mut p = vec![Some(q(1))];
            p.extend(sorted_fractions(&mut rng, n - 1, den).into_iter().map(|f| Some(q(1) + f * (&lambda - q(1)))));
            (p, Some(lambda))
        }
        Family::Moebius => unreachable!(),
    };
    let log_diameters = (0..n)
        .map(|i| if s.decorations[i] { qf(rng.gen_range(-8..=8), 8) } else { Q::zero() })
        .collect();
    Ok(DecoratedMetric { surface: s.clone(), positions, log_diameters, lambda })
}

impl DecoratedMetric {
    pub fn chart(&self) -> ChartIndex {
        ChartIndex::new(&self.surface)
    }

    pub fn lambda(&self) -> Q {
        self.lambda.clone().unwrap_or_else(Q::one)
    }

    /// Real position of model point `k`, counted along the boundary of the
    /// universal cover (indices past the last point continue into the next
    /// holonomy translate).  `None` is infinity.
    pub fn point_position(&self, k: usize) -> Option<Q> {
        let s = &self.surface;
        let pts = s.points();
        let m = pts.len();
        let (base, turns) = (k % m, k / m);
        let p = match pts[base] {
            Anchor::Spike(i) => self.positions[i].clone()?,
            Anchor::Edge(i) => self.edge_anchor(i)?,
            Anchor::Core => return None,
        };
        Some(match s.family {
            Family::PuncturedPolygon => p + q(turns as i64),
            Family::Crown => {
                let mut v = p;
                for _ in 0..turns {
                    v *= self.lambda();
                }
                v
            }
            _ => p,
        })
    }

    /// A rational point strictly between the endpoints of edge `i`.
    pub fn edge_anchor(&self, i: usize) -> Option<Q> {
        let n = self.surface.n;
        let a = self.positions[i].clone();
        let b = if i + 1 < n {
            self.positions[i + 1].clone()
        } else {
            match self.surface.family {
                Family::PuncturedPolygon => Some(q(1)),
                Family::Crown => Some(self.lambda()),
                _ => self.positions[0].clone(),
            }
        };
        Some(match (a, b) {
            (Some(a), Some(b)) => (a + b) / q(2),
            (Some(a), None) => a + q(1),
            (None, Some(b)) => b - q(1),
            (None, None) => return None,
        })
    }

    /// Chart coordinates in floating point (`t = ln λ` for crowns).
    pub fn coordinates(&self) -> Vec<f64> {
        let c = self.chart();
        let mut v = vec![0.0; c.dim];
        if let Some(t) = c.t {
            v[t] = to_f64(&self.lambda()).ln();
        }
        for i in 0..self.surface.n {
            if let Some(k) = c.x[i] {
                v[k] = to_f64(self.positions[i].as_ref().expect("free positions are finite"));
            }
            if let Some(k) = c.u[i] {
                v[k] = to_f64(&self.log_diameters[i]);
            }
        }
        v
    }

    pub fn to_json(&self) -> serde_json::Value {
        let pos: Vec<String> = self.positions.iter().map(|p| p.as_ref().map_or("inf".to_string(), format_q)).collect();
        json!({
            "chart": chart_name(self.surface.family),
            "surface": self.surface,
            "positions": pos,
            "log_diameters": self.log_diameters.iter().map(format_q).collect::<Vec<_>>(),
            "lambda": self.lambda.as_ref().map(format_q),
            "dimension": self.chart().dim,
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<DecoratedMetric, GeometryError> {
        let bad = |w: &str| GeometryError::Malformed(w.to_string());
        let surface: SurfaceSpec = serde_json::from_value(v["surface"].clone()).map_err(|_| bad("surface"))?;
        surface.validate().map_err(|e| bad(&e.to_string()))?;
        let strings = |key: &str| -> Result<Vec<String>, GeometryError> {
            v[key].as_array().ok_or_else(|| bad(key))?.iter().map(|x| x.as_str().map(str::to_string).ok_or_else(|| bad(key))).collect()
        };
        let positions = strings("positions")?
            .iter()
            .map(|p| if p == "inf" { Ok(None) } else { parse_q(p).map(Some).ok_or_else(|| bad("positions")) })
            .collect::<Result<Vec<_>, _>>()?;
        let log_diameters =
            strings("log_diameters")?.iter().map(|p| parse_q(p).ok_or_else(|| bad("log_diameters"))).collect::<Result<Vec<_>, _>>()?;
        let lambda = match v["lambda"].as_str() {
            Some(l) => Some(parse_q(l).ok_or_else(|| bad("lambda"))?),
            None => None,
        };
        if positions.len() != surface.n || log_diameters.len() != surface.n {
            return Err(bad("coordinate count"));
        }
        Ok(DecoratedMetric { surface, positions, log_diameters, lambda })
    }
}

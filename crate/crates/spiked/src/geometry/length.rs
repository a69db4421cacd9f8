use super::{check_family, ChartIndex, DecoratedMetric, GeometryError};
use crate::rational::{q, Q};
use crate::surface::{Beta, Family, SurfaceSpec};
use num_traits::{One, Zero};

/// The covector `dl_β` in chart coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthFunctional {
    pub beta: Beta,
    pub coeffs: Vec<Q>,
}

/// Endpoint spikes and the number `c` of holonomy turns applied to the
/// terminal spike so that the lift runs forward along the boundary.
fn lift_data(s: &SurfaceSpec, beta: &Beta) -> Result<(usize, usize, u32), GeometryError> {
    match *beta {
        Beta::Connection { from, to, wrap } => {
            if !s.decorations[from] || !s.decorations[to] {
                return Err(GeometryError::UndecoratedEndpoint);
            }
            let c = match s.family {
                Family::Polygon => 0,
                _ => u32::from(to <= from) + wrap,
            };
            Ok((from, to, c))
        }
        Beta::Crossing { .. } => Err(GeometryError::UnsupportedFamily("moebius")),
        Beta::Loop => unreachable!("handled by callers"),
    }
}

/// Length from floating chart coordinates; used for finite-difference checks.
pub fn length_from_coordinates(s: &SurfaceSpec, coords: &[f64], beta: &Beta) -> Result<f64, GeometryError> {
    check_family(s)?;
    let chart = ChartIndex::new(s);
    let t = chart.t.map(|k| coords[k]);
    if *beta == Beta::Loop {
        return t.ok_or(GeometryError::UnsupportedFamily("loop outside crowns"));
    }
    let (a, b, c) = lift_data(s, beta)?;
    let x = |i: usize| -> Option<f64> {
        if let Some(k) = chart.x[i] {
            return Some(coords[k]);
        }
        match (s.family, i) {
            (Family::Polygon, 0) => Some(0.0),
            (Family::Polygon, 1) => Some(1.0),
            (Family::Polygon, _) => None,
            (Family::PuncturedPolygon, _) => Some(0.0),
            _ => Some(1.0),
        }
    };
    let u = |i: usize| coords[chart.u[i].expect("decorated")];
    let (xa, xb) = (x(a), x(b));
    Ok(match s.family {
        Family::Polygon => match (xa, xb) {
            (Some(xa), Some(xb)) => 2.0 * (xb - xa).abs().ln() - u(a) - u(b),
            _ => -u(a) - u(b),
        },
        Family::PuncturedPolygon => 2.0 * (xb.unwrap() + c as f64 - xa.unwrap()).ln() - u(a) - u(b),
        _ => {
            let t = t.unwrap();
            let scale = (c as f64 * t).exp();
            2.0 * (scale * xb.unwrap() - xa.unwrap()).ln() - u(a) - u(b) - c as f64 * t
        }
    })
}

/// Signed length between the two horoballs (or the loop's translation length).
pub fn horoconnection_length(m: &DecoratedMetric, beta: &Beta) -> Result<f64, GeometryError> {
    length_from_coordinates(&m.surface, &m.coordinates(), beta)
}

fn pow(x: &Q, k: u32) -> Q {
    (0..k).fold(Q::one(), |acc, _| acc * x)
}

/// Exact differential of the closed-form length in chart coordinates.
pub fn length_differential(m: &DecoratedMetric, beta: &Beta) -> Result<LengthFunctional, GeometryError> {
    let s = &m.surface;
    check_family(s)?;
    let chart = m.chart();
    let mut coeffs = vec![Q::zero(); chart.dim];
    if *beta == Beta::Loop {
        let t = chart.t.ok_or(GeometryError::UnsupportedFamily("loop outside crowns"))?;
        coeffs[t] = Q::one();
        return Ok(LengthFunctional { beta: *beta, coeffs });
    }
    let (a, b, c) = lift_data(s, beta)?;
    for i in [a, b] {
        coeffs[chart.u[i].expect("decorated")] -= Q::one();
    }
    let (Some(xa), Some(xb)) = (m.positions[a].clone(), m.positions[b].clone()) else {
        // a connection to infinity only sees the two horoballs
        return Ok(LengthFunctional { beta: *beta, coeffs });
    };
    let scale = match s.family {
        Family::Crown => pow(&m.lambda(), c),
        _ => Q::one(),
    };
    let shift = match s.family {
        Family::PuncturedPolygon => q(c as i64),
        _ => Q::zero(),
    };
    let far = &scale * &xb + shift;
    let gap = &far - &xa;
    let two = q(2);
    if let Some(k) = chart.x[a] {
        coeffs[k] -= &two / &gap;
    }
    if let Some(k) = chart.x[b] {
        coeffs[k] += &two * &scale / &gap;
    }
    if let Some(k) = chart.t {
        let ct = q(c as i64);
        coeffs[k] += &two * &ct * &scale * &xb / &gap - ct;
    }
    Ok(LengthFunctional { beta: *beta, coeffs })
}

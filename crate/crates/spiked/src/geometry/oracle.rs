//! Crossing tests between actual geodesics of a metric, independent of the
//! combinatorial model: two geodesics cross when their ideal endpoints
//! interleave on the circle at infinity, for some pair of lifts.

use super::{check_family, DecoratedMetric, GeometryError};
use crate::rational::{q, Q};
use crate::surface::{Arc, Beta, Family};
use num_traits::{One, Zero};
use std::cmp::Ordering;

type End = Option<Q>;

fn cmp_end(a: &End, b: &End) -> Ordering {
    match (a, b) {
        (None, None) => Ordering::Equal,
        (None, _) => Ordering::Greater,
        (_, None) => Ordering::Less,
        (Some(x), Some(y)) => x.cmp(y),
    }
}

fn cross(a: &(End, End), b: &(End, End)) -> bool {
    if a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1 {
        return false;
    }
    let (lo, hi) = if cmp_end(&a.0, &a.1) == Ordering::Less { (&a.0, &a.1) } else { (&a.1, &a.0) };
    let inside = |x: &End| cmp_end(lo, x) == Ordering::Less && cmp_end(x, hi) == Ordering::Less;
    inside(&b.0) != inside(&b.1)
}

fn arc_geodesic(m: &DecoratedMetric, a: &Arc) -> (End, End) {
    match *a {
        Arc::Chord { start, len } => (m.point_position(start), m.point_position(start + len)),
        Arc::ToCore { at } => {
            let x = m.point_position(at).expect("finite");
            (Some(-x.clone()), Some(x))
        }
        Arc::Cross { .. } => unreachable!("checked"),
    }
}

fn beta_geodesic(m: &DecoratedMetric, b: &Beta) -> (End, End) {
    match *b {
        Beta::Loop => (Some(Q::zero()), None),
        Beta::Connection { from, to, wrap } => {
            let s = &m.surface;
            let xa = m.positions[from].clone();
            let xb = m.positions[to].clone();
            let c = if s.family == Family::Polygon { 0 } else { u32::from(to <= from) + wrap };
            let far = xb.map(|x| match s.family {
                Family::PuncturedPolygon => x + q(c as i64),
                Family::Crown => (0..c).fold(x, |acc, _| acc * m.lambda()),
                _ => x,
            });
            (xa, far)
        }
        Beta::Crossing { .. } => unreachable!("checked"),
    }
}

fn translate(m: &DecoratedMetric, g: &(End, End), k: i64) -> (End, End) {
    let mv = |x: &End| -> End {
        let x = x.clone()?;
        Some(match m.surface.family {
            Family::PuncturedPolygon => x + q(k),
            Family::Crown => {
                let lam = m.lambda();
                let f = if k >= 0 { (0..k).fold(Q::one(), |a, _| a * &lam) } else { (0..-k).fold(Q::one(), |a, _| a / &lam) };
                x * f
            }
            _ => x,
        })
    };
    (mv(&g.0), mv(&g.1))
}

fn any_lift_crosses(m: &DecoratedMetric, a: &(End, End), b: &(End, End), reach: i64) -> bool {
    let range = if m.surface.family == Family::Polygon { 0..=0 } else { -reach..=reach };
    range.into_iter().any(|k| cross(a, &translate(m, b, k)))
}

pub fn geodesic_arcs_disjoint(m: &DecoratedMetric, a: &Arc, b: &Arc) -> Result<bool, GeometryError> {
    check_family(&m.surface)?;
    if a == b {
        return Ok(false);
    }
    Ok(!any_lift_crosses(m, &arc_geodesic(m, a), &arc_geodesic(m, b), 4))
}

pub fn geodesic_arc_beta_disjoint(m: &DecoratedMetric, a: &Arc, b: &Beta) -> Result<bool, GeometryError> {
    check_family(&m.surface)?;
    Ok(!any_lift_crosses(m, &arc_geodesic(m, a), &beta_geodesic(m, b), 4 + b.wrap() as i64))
}

pub fn geodesic_betas_cross(m: &DecoratedMetric, a: &Beta, b: &Beta) -> Result<bool, GeometryError> {
    check_family(&m.surface)?;
    if a == b {
        return Ok(false);
    }
    Ok(any_lift_crosses(m, &beta_geodesic(m, a), &beta_geodesic(m, b), 4 + a.wrap().max(b.wrap()) as i64))
}

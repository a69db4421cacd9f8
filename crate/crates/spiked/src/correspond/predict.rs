use super::CorrespondError;
use crate::complex::CertifiedType;
use crate::surface::{arc_beta_disjoint, boundary_connections, enumerate_arcs, enumerate_simple_betas, Anchor, Arc, Beta, Family, SurfaceSpec};
use std::collections::BTreeSet;

/// Labels of the connections (and loop) expected to cut out facets.
pub fn predicted_facets(s: &SurfaceSpec) -> BTreeSet<String> {
    enumerate_simple_betas(s)
        .into_iter()
        .filter(|b| !(s.family == Family::Moebius && b.is_maximal(s)))
        .map(|b| b.label(s))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PredictedVertex {
    pub arc: Arc,
    pub label: String,
    pub separating: bool,
    /// Facet connections disjoint from the arc.
    pub degree: usize,
    /// Closed-form degree for polygons and punctured polygons.
    pub formula_degree: Option<usize>,
    pub simple: bool,
}

fn spikes_inside(s: &SurfaceSpec, a: &Arc) -> usize {
    let Arc::Chord { start, len } = *a else { return 0 };
    let pts = s.points();
    ((start + 1)..(start + len)).filter(|&k| matches!(pts[k % pts.len()], Anchor::Spike(_))).count()
}

fn formula_degree(s: &SurfaceSpec, a: &Arc) -> Option<usize> {
    if !a.is_spike_to_edge(s) {
        return None;
    }
    let n = s.n as i64;
    match (s.family, a) {
        (Family::Polygon, Arc::Chord { .. }) => {
            let k = spikes_inside(s, a) as i64 + 1;
            Some(((2 * k * k + n * n - 2 * k - 2 * n * k + n) / 2) as usize)
        }
        (Family::PuncturedPolygon, Arc::Chord { .. }) => {
            let k = n - spikes_inside(s, a) as i64;
            Some(((3 * k * k + n * n - k - 2 * n * k + n) / 2) as usize)
        }
        _ => None,
    }
}

/// Vertex rays expected for a fully decorated surface.
pub fn predicted_vertices(s: &SurfaceSpec) -> Result<Vec<PredictedVertex>, CorrespondError> {
    if !s.is_fully_decorated() {
        return Err(CorrespondError::NotFullyDecorated);
    }
    let facets: Vec<Beta> =
        enumerate_simple_betas(s).into_iter().filter(|b| !(s.family == Family::Moebius && b.is_maximal(s))).collect();
    let one_spiked_hole = s.n == 1 && matches!(s.family, Family::Crown | Family::Moebius);
    let monogon = s.n == 1 && s.family == Family::PuncturedPolygon;
    let proj_dim = s.dimension() as isize - 1;
    Ok(enumerate_arcs(s)
        .into_iter()
        .filter(|a| {
            a.is_spike_to_edge(s)
                || (monogon && a.is_edge_to_edge(s))
                || (one_spiked_hole && a.is_edge_to_edge(s) && arc_beta_disjoint(a, &Beta::Loop, s).unwrap_or(false))
        })
        .map(|a| {
            let degree = facets.iter().filter(|b| arc_beta_disjoint(&a, b, s).unwrap_or(false)).count();
            PredictedVertex {
                arc: a,
                label: a.label(s),
                separating: matches!(a, Arc::Chord { .. }),
                degree,
                formula_degree: formula_degree(s, &a),
                simple: degree as isize <= proj_dim,
            }
        })
        .collect())
}

/// The marked collections admitted for a surface: sides between decorated
/// spikes, plus the loop where there is one.
pub fn admissible_marks(s: &SurfaceSpec) -> Vec<Beta> {
    let mut out = boundary_connections(s);
    if s.family.has_loop() {
        out.push(Beta::Loop);
    }
    out
}

/// Expected type of the marked arc complex.
pub fn prop33_prediction(s: &SurfaceSpec, marks: &[Beta]) -> CertifiedType {
    let (n, r, h) = (s.n, s.r(), marks.len());
    let big_n = s.dimension() as isize - 1 - h as isize;
    let all_sides = boundary_connections(s).iter().all(|b| marks.contains(b));
    let empty = match s.family {
        Family::Polygon | Family::PuncturedPolygon => (r, h) == (n, n),
        Family::Crown => (r, h) == (n, n + 1),
        Family::Moebius => (r, h) == (n, n + 1) || ((r, h) == (n, n) && all_sides),
    };
    let sphere = match s.family {
        Family::Polygon => matches!((r, h), (0, 0) | (1, 0) | (2, 1)),
        Family::PuncturedPolygon => (r, h) == (0, 0),
        Family::Crown | Family::Moebius => (r, h) == (0, 1),
    };
    // the sphere of dimension -1 is the empty complex
    if empty || (sphere && big_n < 0) {
        CertifiedType::Empty
    } else if sphere {
        CertifiedType::Sphere(big_n.max(0) as usize)
    } else {
        CertifiedType::Ball(big_n.max(0) as usize)
    }
}

use super::{betas_cross, Beta, Family, SurfaceError, SurfaceSpec};

/// One complementary piece of a cut, with the cut curve recorded as marked
/// boundary connections of the piece.  `spikes[k]` is the original index of
/// the piece's spike `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutPiece {
    pub surface: SurfaceSpec,
    pub marked: Vec<Beta>,
    pub spikes: Vec<usize>,
}

fn polygon_side(k: usize, a: usize, b: usize) -> Beta {
    let (from, to) = if a < b { (a, b) } else { (b, a) };
    debug_assert!(to == from + 1 || (from == 0 && to == k - 1));
    Beta::Connection { from, to, wrap: 0 }
}

fn piece(family: Family, spikes: Vec<usize>, s: &SurfaceSpec, marked: Vec<Beta>) -> CutPiece {
    let decorations = spikes.iter().map(|&i| s.decorations[i]).collect();
    CutPiece { surface: SurfaceSpec { family, n: spikes.len(), decorations }, marked, spikes }
}

/// Cut along a single simple connection or the loop.
///
/// A cut along a side of the surface leaves a degenerate two-spiked piece,
/// which carries no arcs and is omitted.  Cutting along several curves at
/// once is only accepted when they are pairwise disjoint, and then only the
/// first is applied per call; callers iterate on the pieces.
pub fn cut_along(s: &SurfaceSpec, items: &[Beta]) -> Result<Vec<CutPiece>, SurfaceError> {
    for (i, x) in items.iter().enumerate() {
        for y in &items[i + 1..] {
            if betas_cross(x, y, s) {
                return Err(SurfaceError::NotDisjoint);
            }
        }
    }
    let Some(beta) = items.first() else {
        return Ok(vec![CutPiece { surface: s.clone(), marked: Vec::new(), spikes: (0..s.n).collect() }]);
    };
    if beta.wrap() > 0 {
        return Err(SurfaceError::WrapUnsupported { wrap: beta.wrap(), bound: 0 });
    }
    let n = s.n;
    let fwd = |a: usize, b: usize| -> Vec<usize> {
        // spikes a, a+1, ..., b going forward; a full turn when a == b
        let steps = if b > a { b - a } else { b + n - a };
        (0..=steps).map(|k| (a + k) % n).collect()
    };
    match *beta {
        Beta::Loop => Ok(vec![piece(Family::PuncturedPolygon, (0..n).collect(), s, Vec::new())]),
        Beta::Connection { from: a, to: b, .. } => {
            let mut out = Vec::new();
            let inner = fwd(a, b);
            if inner.len() >= 3 {
                let k = inner.len();
                out.push(piece(Family::Polygon, inner, s, vec![polygon_side(k, 0, k - 1)]));
            }
            match s.family {
                Family::Polygon => {
                    let outer = fwd(b, a);
                    if outer.len() >= 3 {
                        let k = outer.len();
                        out.push(piece(Family::Polygon, outer, s, vec![polygon_side(k, 0, k - 1)]));
                    }
                }
                f => {
                    let outer = if a == b { vec![a] } else { fwd(b, a) };
                    let k = outer.len();
                    out.push(piece(f, outer, s, vec![Beta::Connection { from: k - 1, to: 0, wrap: 0 }]));
                }
            }
            Ok(out)
        }
        Beta::Crossing { lo: i, hi: j, .. } => {
            let mut spikes = fwd(j, i);
            let la = spikes.len();
            let back: Vec<usize> = if i == j { vec![j] } else { (i..=j).rev().collect() };
            spikes.extend(back);
            let k = spikes.len();
            let marked = vec![polygon_side(k, la - 1, la), polygon_side(k, k - 1, 0)];
            Ok(vec![piece(Family::Polygon, spikes, s, marked)])
        }
    }
}

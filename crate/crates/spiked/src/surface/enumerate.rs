use super::{Anchor, Arc, Beta, Family, SurfaceSpec};

/// All permitted arcs, one canonical encoding per isotopy class.
pub fn enumerate_arcs(s: &SurfaceSpec) -> Vec<Arc> {
    let pts = s.points();
    let m = pts.len();
    let red = |i: usize| matches!(pts[i % m], Anchor::Spike(_));
    let mut out = Vec::new();
    match s.family {
        Family::Polygon => {
            for a in 0..m {
                for b in (a + 2)..m {
                    if b - a == m - 1 || (red(a) && red(b)) {
                        continue;
                    }
                    out.push(Arc::Chord { start: a, len: b - a });
                }
            }
        }
        _ => {
            for start in 0..m {
                for len in 2..=m {
                    if red(start) && red(start + len) {
                        continue;
                    }
                    out.push(Arc::Chord { start, len });
                }
            }
        }
    }
    match s.family {
        Family::Crown => out.extend((0..m).map(|at| Arc::ToCore { at })),
        Family::Moebius => {
            for lo in 0..m {
                for hi in lo..m {
                    if !(red(lo) && red(hi)) {
                        out.push(Arc::Cross { lo, hi });
                    }
                }
            }
        }
        _ => {}
    }
    out
}

/// All simple horoball connections, plus the loop for crowns and Möbius strips.
pub fn enumerate_simple_betas(s: &SurfaceSpec) -> Vec<Beta> {
    let dec: Vec<usize> = (0..s.n).filter(|&i| s.decorations[i]).collect();
    let mut out = Vec::new();
    if s.family == Family::Polygon {
        for (k, &i) in dec.iter().enumerate() {
            for &j in &dec[k + 1..] {
                out.push(Beta::Connection { from: i, to: j, wrap: 0 });
            }
        }
        return out;
    }
    for &i in &dec {
        for &j in &dec {
            out.push(Beta::Connection { from: i, to: j, wrap: 0 });
        }
    }
    if s.family == Family::Moebius {
        for (k, &i) in dec.iter().enumerate() {
            for &j in &dec[k..] {
                out.push(Beta::Crossing { lo: i, hi: j, wrap: 0 });
            }
        }
    }
    if s.family.has_loop() {
        out.push(Beta::Loop);
    }
    out
}

/// Simple connections running parallel to a single side.
pub fn boundary_connections(s: &SurfaceSpec) -> Vec<Beta> {
    enumerate_simple_betas(s).into_iter().filter(|b| b.is_boundary(s)).collect()
}

pub fn loop_beta(s: &SurfaceSpec) -> Option<Beta> {
    s.family.has_loop().then_some(Beta::Loop)
}

//! Diagonal complexes of bicolored marked disks, punctured disks, crowns
//! and Möbius bands.  Boundary points are red or blue; a diagonal is
//! permitted unless both its ends are red.  The crown's center is blue.

use super::{clique_complex, Complex, ComplexError};
use crate::surface::{arc_lift_in, Arc, Cover};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BicoloredKind {
    Disk,
    Punctured,
    Crown,
    Moebius,
}

impl BicoloredKind {
    fn cover(self, m: usize) -> Cover {
        let period = m as i64;
        match self {
            BicoloredKind::Disk => Cover::Circle,
            BicoloredKind::Punctured => Cover::Line { period },
            BicoloredKind::Crown => Cover::Strip { period },
            BicoloredKind::Moebius => Cover::Glide { period },
        }
    }
}

/// Permitted diagonals of the model with the given colors (`true` = red).
pub fn model_arcs(kind: BicoloredKind, red: &[bool]) -> Vec<Arc> {
    let m = red.len();
    let rr = |a: usize, b: usize| red[a % m] && red[b % m];
    let mut out = Vec::new();
    if kind == BicoloredKind::Disk {
        for a in 0..m {
            for b in (a + 2)..m {
                if !(a == 0 && b == m - 1) && !rr(a, b) {
                    out.push(Arc::Chord { start: a, len: b - a });
                }
            }
        }
        return out;
    }
    for start in 0..m {
        for len in 2..=m {
            if !rr(start, start + len) {
                out.push(Arc::Chord { start, len });
            }
        }
    }
    match kind {
        BicoloredKind::Crown => out.extend((0..m).map(|at| Arc::ToCore { at })),
        BicoloredKind::Moebius => {
            for lo in 0..m {
                for hi in lo..m {
                    if !rr(lo, hi) {
                        out.push(Arc::Cross { lo, hi });
                    }
                }
            }
        }
        _ => {}
    }
    out
}

fn model_label(a: &Arc) -> String {
    match *a {
        Arc::Chord { start, len } => format!("c{start}+{len}"),
        Arc::ToCore { at } => format!("k{at}"),
        Arc::Cross { lo, hi } => format!("x{lo},{hi}"),
    }
}

pub(crate) fn model_disjoint(kind: BicoloredKind, m: usize, a: &Arc, b: &Arc) -> bool {
    if a == b {
        return false;
    }
    let cover = kind.cover(m);
    let (la, lb) = (arc_lift_in(a, m as i64, cover), arc_lift_in(b, m as i64, cover));
    !cover.lifts_cross(&la, &lb, cover.translation_range(2))
}

/// The complex spanned by the red-blue and blue-blue diagonals.
pub fn bicolored_model(kind: BicoloredKind, red: &[bool]) -> Result<Complex, ComplexError> {
    let min = if kind == BicoloredKind::Disk { 3 } else { 1 };
    if red.len() < min {
        return Err(ComplexError::InvalidColoring(format!("{kind:?} model needs at least {min} points")));
    }
    let arcs = model_arcs(kind, red);
    let labels = arcs.iter().map(model_label).collect();
    let m = red.len();
    Ok(clique_complex(labels, |i, j| model_disjoint(kind, m, &arcs[i], &arcs[j])))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_red_disk_is_void() {
        assert!(bicolored_model(BicoloredKind::Disk, &[true; 5]).unwrap().is_void());
    }

    #[test]
    fn blue_pentagon_is_a_cycle() {
        let c = bicolored_model(BicoloredKind::Disk, &[false; 5]).unwrap();
        assert_eq!(c.f_vector(), vec![5, 5]);
    }

    #[test]
    fn disk_needs_three_points() {
        assert!(bicolored_model(BicoloredKind::Disk, &[false; 2]).is_err());
    }
}

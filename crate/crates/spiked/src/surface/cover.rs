//! Lifts of arcs and connections to a simply connected cover.
//!
//! Every cover used here is a disk whose boundary is one or two lines of
//! anchor points.  Two geodesics with distinct endpoints cross exactly when
//! their endpoints interleave along that boundary, so disjointness of two
//! curves reduces to checking one lift of the first against the deck
//! translates of the second.

use super::{Arc, Beta, SurfaceSpec};

/// A point on the boundary of the cover: `side` 0 is the line carrying the
/// spikes, side 1 the opposite line (the closed boundary of a crown, or the
/// second boundary lift of a Möbius strip).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LiftPoint {
    pub side: u8,
    pub x: i64,
}

impl LiftPoint {
    fn key(&self) -> (u8, i64) {
        if self.side == 0 {
            (0, self.x)
        } else {
            (1, -self.x)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Lift(pub LiftPoint, pub LiftPoint);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cover {
    /// The disk itself (polygons).
    Circle,
    /// Half-plane with translations by `period` (punctured polygons).
    Line { period: i64 },
    /// Strip with the closed boundary as the second line (crowns).
    Strip { period: i64 },
    /// Strip with a glide reflection by half of `2 * period` in doubled
    /// coordinates (Möbius strips).  Its square is the orientation double cover's deck group.
    Glide { period: i64 },
}

fn top(x: i64) -> LiftPoint {
    LiftPoint { side: 0, x }
}

fn bottom(x: i64) -> LiftPoint {
    LiftPoint { side: 1, x }
}

/// Strict crossing of two chords with no common endpoint.
pub fn chords_cross(a: &Lift, b: &Lift) -> bool {
    if a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1 {
        return false;
    }
    let (lo, hi) = {
        let (p, q) = (a.0.key(), a.1.key());
        if p < q {
            (p, q)
        } else {
            (q, p)
        }
    };
    let inside = |p: &LiftPoint| {
        let k = p.key();
        lo < k && k < hi
    };
    inside(&b.0) != inside(&b.1)
}

impl Cover {
    pub fn translate(&self, l: &Lift, j: i64) -> Lift {
        let move_point = |p: LiftPoint| match *self {
            Cover::Circle => p,
            Cover::Line { period } | Cover::Strip { period } => LiftPoint { side: p.side, x: p.x + j * period },
            Cover::Glide { period } => LiftPoint {
                side: if j.rem_euclid(2) == 1 { 1 - p.side } else { p.side },
                x: p.x + j * period,
            },
        };
        Lift(move_point(l.0), move_point(l.1))
    }

    /// Deck translations to try when the lifts span at most `periods` periods.
    pub fn translation_range(&self, periods: i64) -> std::ops::RangeInclusive<i64> {
        match self {
            Cover::Circle => 0..=0,
            Cover::Line { .. } | Cover::Strip { .. } => -periods..=periods,
            Cover::Glide { .. } => -(2 * periods + 2)..=(2 * periods + 2),
        }
    }

    pub fn lifts_cross(&self, a: &Lift, b: &Lift, range: std::ops::RangeInclusive<i64>) -> bool {
        range.into_iter().any(|j| chords_cross(a, &self.translate(b, j)))
    }
}

/// The canonical lift of an arc.
pub fn arc_lift(a: &Arc, s: &SurfaceSpec) -> Lift {
    arc_lift_in(a, s.point_count() as i64, s.cover())
}

/// Lift of an arc in a model with `m` boundary points and the given cover.
pub fn arc_lift_in(a: &Arc, m: i64, cover: Cover) -> Lift {
    match (*a, cover) {
        (Arc::Chord { start, len }, Cover::Glide { .. }) => Lift(top(2 * start as i64), top(2 * (start + len) as i64)),
        (Arc::Chord { start, len }, _) => Lift(top(start as i64), top((start + len) as i64)),
        (Arc::ToCore { at }, _) => Lift(top(at as i64), bottom(at as i64)),
        (Arc::Cross { lo, hi }, _) => Lift(top(2 * hi as i64), bottom(2 * lo as i64 + m)),
    }
}

/// The canonical lift of a connection.  The loop has no chord lift.
pub fn beta_lift(b: &Beta, s: &SurfaceSpec) -> Lift {
    let m = s.point_count() as i64;
    match *b {
        Beta::Connection { from, wrap, .. } => {
            let p = s.spike_position(from) as i64;
            let len = b.span(s).expect("connection") as i64 + wrap as i64 * m;
            match s.cover() {
                Cover::Glide { .. } => Lift(top(2 * p), top(2 * (p + len))),
                _ => Lift(top(p), top(p + len)),
            }
        }
        Beta::Crossing { lo, hi, wrap } => {
            let (p, q) = (s.spike_position(lo) as i64, s.spike_position(hi) as i64);
            Lift(top(2 * q), bottom(2 * p + m + 2 * wrap as i64 * m))
        }
        Beta::Loop => panic!("the loop has no chord lift"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interleaving_chords_cross() {
        let a = Lift(top(0), top(2));
        let b = Lift(top(1), top(3));
        assert!(chords_cross(&a, &b));
        assert!(chords_cross(&b, &a));
    }

    #[test]
    fn shared_endpoint_is_not_a_crossing() {
        let a = Lift(top(0), top(2));
        let b = Lift(top(2), top(5));
        assert!(!chords_cross(&a, &b));
    }

    #[test]
    fn nested_chords_do_not_cross() {
        let a = Lift(top(0), top(5));
        let b = Lift(top(1), top(3));
        assert!(!chords_cross(&a, &b));
    }

    #[test]
    fn glide_flips_sides_on_odd_steps() {
        let c = Cover::Glide { period: 3 };
        let l = Lift(top(0), bottom(3));
        let t = c.translate(&l, 1);
        assert_eq!(t, Lift(bottom(3), top(6)));
        assert_eq!(c.translate(&l, 2), Lift(top(6), bottom(9)));
    }
}

//! Combinatorial model of the four surface families.
//!
//! A surface is encoded by its cyclic sequence of boundary anchors: each
//! decorated spike and each edge gives one point, in boundary order
//! `s1?, e1, s2?, e2, ...`.  Undecorated spikes carry no point, so two
//! consecutive edge points stand for an undecorated spike between them.
//! Arcs are chords between anchor points, drawn in a cover of the surface
//! where crossing is a plain interleaving test.

mod cover;
mod cut;
mod enumerate;
mod spread;

pub use cover::{arc_lift, arc_lift_in, beta_lift, chords_cross, Cover, Lift, LiftPoint};
pub use cut::{cut_along, CutPiece};
pub use enumerate::{boundary_connections, enumerate_arcs, enumerate_simple_betas, loop_beta};
pub use spread::{enumerate_spread_subsets, filled_subsurface, is_spread, FilledSubsurface, SpreadSubset};

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SurfaceError {
    #[error("invalid topology: {0}")]
    InvalidTopology(String),
    #[error("decoration pattern has length {got}, expected {expected}")]
    DecorationLength { expected: usize, got: usize },
    #[error("wrap {wrap} exceeds the configured bound {bound}")]
    WrapUnsupported { wrap: u32, bound: u32 },
    #[error("cutting set is not pairwise disjoint")]
    NotDisjoint,
    #[error("cannot parse label {0:?}")]
    BadLabel(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Polygon,
    #[serde(rename = "punctured")]
    PuncturedPolygon,
    Crown,
    Moebius,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Polygon, Family::PuncturedPolygon, Family::Crown, Family::Moebius];

    pub fn min_spikes(self) -> usize {
        match self {
            Family::Polygon => 3,
            _ => 1,
        }
    }

    pub fn is_orientable(self) -> bool {
        self != Family::Moebius
    }

    pub fn has_loop(self) -> bool {
        matches!(self, Family::Crown | Family::Moebius)
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Polygon => "polygon",
            Family::PuncturedPolygon => "punctured",
            Family::Crown => "crown",
            Family::Moebius => "moebius",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        match s {
            "polygon" => Some(Family::Polygon),
            "punctured" => Some(Family::PuncturedPolygon),
            "crown" => Some(Family::Crown),
            "moebius" => Some(Family::Moebius),
            _ => None,
        }
    }
}

/// A boundary anchor: a decorated spike, an edge, or (crowns) the closed boundary loop.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Anchor {
    Spike(usize),
    Edge(usize),
    Core,
}

impl fmt::Display for Anchor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Anchor::Spike(i) => write!(f, "s{}", i + 1),
            Anchor::Edge(i) => write!(f, "e{}", i + 1),
            Anchor::Core => write!(f, "core"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceSpec {
    pub family: Family,
    pub n: usize,
    pub decorations: Vec<bool>,
}

impl SurfaceSpec {
    pub fn new(family: Family, n: usize, decorations: Vec<bool>) -> Result<SurfaceSpec, SurfaceError> {
        if n < family.min_spikes() {
            return Err(SurfaceError::InvalidTopology(format!(
                "{} needs at least {} spikes, got {n}",
                family.name(),
                family.min_spikes()
            )));
        }
        if decorations.len() != n {
            return Err(SurfaceError::DecorationLength { expected: n, got: decorations.len() });
        }
        Ok(SurfaceSpec { family, n, decorations })
    }

    pub fn fully_decorated(family: Family, n: usize) -> Result<SurfaceSpec, SurfaceError> {
        SurfaceSpec::new(family, n, vec![true; n])
    }

    pub fn undecorated(family: Family, n: usize) -> Result<SurfaceSpec, SurfaceError> {
        SurfaceSpec::new(family, n, vec![false; n])
    }

    /// Decoration pattern from the low `n` bits of `mask` (bit `i` = spike `i+1`).
    pub fn from_mask(family: Family, n: usize, mask: u64) -> Result<SurfaceSpec, SurfaceError> {
        SurfaceSpec::new(family, n, (0..n).map(|i| mask >> i & 1 == 1).collect())
    }

    pub fn validate(&self) -> Result<(), SurfaceError> {
        SurfaceSpec::new(self.family, self.n, self.decorations.clone()).map(|_| ())
    }

    pub fn r(&self) -> usize {
        self.decorations.iter().filter(|&&d| d).count()
    }

    pub fn is_fully_decorated(&self) -> bool {
        self.r() == self.n
    }

    /// Dimension of the deformation space.
    pub fn dimension(&self) -> usize {
        let (n, r) = (self.n, self.r());
        match self.family {
            Family::Polygon => n + r - 3,
            Family::PuncturedPolygon => n + r - 1,
            Family::Crown | Family::Moebius => n + r,
        }
    }

    /// Number of simple horoball connections plus loops predicted by the counting table.
    pub fn simple_beta_count(&self) -> usize {
        let r = self.r();
        match self.family {
            Family::Polygon => r * r.saturating_sub(1) / 2,
            Family::PuncturedPolygon => r * r,
            Family::Crown => r * r + 1,
            Family::Moebius => r * (r + 1) / 2 + r * r + 1,
        }
    }

    /// Boundary anchor points in cyclic order.
    pub fn points(&self) -> Vec<Anchor> {
        let mut out = Vec::with_capacity(self.n + self.r());
        for i in 0..self.n {
            if self.decorations[i] {
                out.push(Anchor::Spike(i));
            }
            out.push(Anchor::Edge(i));
        }
        out
    }

    pub fn point_count(&self) -> usize {
        self.n + self.r()
    }

    /// Position of an anchor in [`SurfaceSpec::points`].
    pub fn position(&self, a: Anchor) -> Option<usize> {
        self.points().iter().position(|&p| p == a)
    }

    pub fn spike_position(&self, i: usize) -> usize {
        self.position(Anchor::Spike(i)).expect("spike is decorated")
    }

    pub fn cover(&self) -> Cover {
        let m = self.point_count() as i64;
        match self.family {
            Family::Polygon => Cover::Circle,
            Family::PuncturedPolygon => Cover::Line { period: m },
            Family::Crown => Cover::Strip { period: m },
            Family::Moebius => Cover::Glide { period: m },
        }
    }

    pub fn label(&self) -> String {
        let bits: String = self.decorations.iter().map(|&d| if d { '1' } else { '0' }).collect();
        format!("{}(n={}, d={})", self.family.name(), self.n, bits)
    }
}

/// An isotopy class of permitted arcs, in model coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Arc {
    /// Chord cutting off the boundary stretch that runs forward from point
    /// `start` for `len` steps (no puncture, hole or core on that side).
    /// Polygons use `start < start + len < m`.
    Chord { start: usize, len: usize },
    /// Crown arc from a boundary point to the closed boundary loop.
    ToCore { at: usize },
    /// Möbius arc crossing the core once, between points `lo <= hi`.
    Cross { lo: usize, hi: usize },
}

impl Arc {
    pub fn endpoints(&self, s: &SurfaceSpec) -> (Anchor, Anchor) {
        let pts = s.points();
        let m = pts.len();
        match *self {
            Arc::Chord { start, len } => (pts[start], pts[(start + len) % m]),
            Arc::ToCore { at } => (pts[at], Anchor::Core),
            Arc::Cross { lo, hi } => (pts[lo], pts[hi]),
        }
    }

    pub fn is_spike_to_edge(&self, s: &SurfaceSpec) -> bool {
        let (a, b) = self.endpoints(s);
        matches!(a, Anchor::Spike(_)) != matches!(b, Anchor::Spike(_))
    }

    pub fn is_edge_to_edge(&self, s: &SurfaceSpec) -> bool {
        !self.is_spike_to_edge(s)
    }

    /// Canonical string such as `A:s1-e3:windA`.
    pub fn label(&self, s: &SurfaceSpec) -> String {
        let (a, b) = self.endpoints(s);
        match *self {
            Arc::Chord { start, len } => {
                let m = s.point_count();
                let end = (start + len) % m;
                let tag = match s.family {
                    Family::Polygon => "plain",
                    _ if start <= end => "windA",
                    _ => "windB",
                };
                if start <= end {
                    format!("A:{a}-{b}:{tag}")
                } else {
                    format!("A:{b}-{a}:{tag}")
                }
            }
            Arc::ToCore { .. } => format!("A:{a}-core:plain"),
            Arc::Cross { .. } => format!("A:{a}-{b}:cross"),
        }
    }
}

/// A simple or wrapped horoball connection, or the closed loop.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Beta {
    /// Connection from spike `from` to spike `to` (spike indices) with the
    /// puncture, hole or core on its left; in polygons `from < to`.
    /// `wrap` counts extra turns around the puncture or hole.
    Connection { from: usize, to: usize, wrap: u32 },
    /// Möbius connection crossing the core, spikes `lo <= hi`.
    Crossing { lo: usize, hi: usize, wrap: u32 },
    /// The closed boundary geodesic of a crown or the core of a Möbius strip.
    Loop,
}

impl Beta {
    pub fn wrap(&self) -> u32 {
        match *self {
            Beta::Connection { wrap, .. } | Beta::Crossing { wrap, .. } => wrap,
            Beta::Loop => 0,
        }
    }

    pub fn is_simple(&self) -> bool {
        self.wrap() == 0
    }

    pub fn spikes(&self) -> Option<(usize, usize)> {
        match *self {
            Beta::Connection { from, to, .. } => Some((from, to)),
            Beta::Crossing { lo, hi, .. } => Some((lo, hi)),
            Beta::Loop => None,
        }
    }

    pub fn is_separating(&self) -> bool {
        matches!(self, Beta::Connection { .. })
    }

    /// Number of anchor steps spanned by a connection's puncture-free side.
    pub fn span(&self, s: &SurfaceSpec) -> Option<usize> {
        match *self {
            Beta::Connection { from, to, .. } => {
                let m = s.point_count();
                let (p, q) = (s.spike_position(from), s.spike_position(to));
                let len = (q + m - p) % m;
                Some(if len == 0 { m } else { len })
            }
            _ => None,
        }
    }

    /// A side of the surface between two consecutive decorated spikes.
    pub fn is_boundary(&self, s: &SurfaceSpec) -> bool {
        match *self {
            Beta::Connection { from, to, wrap: 0 } => match s.family {
                Family::Polygon => to == from + 1 || (from == 0 && to == s.n - 1),
                _ => to == (from + 1) % s.n,
            },
            _ => false,
        }
    }

    /// A separating connection cutting off a one-spiked piece containing the
    /// puncture, hole or core.
    pub fn is_maximal(&self, s: &SurfaceSpec) -> bool {
        s.family != Family::Polygon && matches!(*self, Beta::Connection { from, to, wrap: 0 } if from == to)
    }

    /// Canonical string such as `B:2>5:w0`.
    pub fn label(&self, s: &SurfaceSpec) -> String {
        match *self {
            Beta::Connection { from, to, wrap } => {
                let sep = if s.family == Family::Polygon { '-' } else { '>' };
                format!("B:{}{}{}:w{}", from + 1, sep, to + 1, wrap)
            }
            Beta::Crossing { lo, hi, wrap } => format!("B:{}x{}:w{}", lo + 1, hi + 1, wrap),
            Beta::Loop => "L".to_string(),
        }
    }

    pub fn parse(label: &str, s: &SurfaceSpec) -> Result<Beta, SurfaceError> {
        let bad = || SurfaceError::BadLabel(label.to_string());
        if label == "L" {
            return if s.family.has_loop() { Ok(Beta::Loop) } else { Err(bad()) };
        }
        let rest = label.strip_prefix("B:").ok_or_else(bad)?;
        let (pair, wrap) = rest.split_once(":w").ok_or_else(bad)?;
        let wrap: u32 = wrap.parse().map_err(|_| bad())?;
        let sep = pair.find(['-', '>', 'x']).ok_or_else(bad)?;
        let a: usize = pair[..sep].parse().map_err(|_| bad())?;
        let b: usize = pair[sep + 1..].parse().map_err(|_| bad())?;
        if a == 0 || b == 0 || a > s.n || b > s.n || !s.decorations[a - 1] || !s.decorations[b - 1] {
            return Err(bad());
        }
        let (a, b) = (a - 1, b - 1);
        let beta = match (&pair[sep..sep + 1], s.family) {
            ("-", Family::Polygon) if a != b && wrap == 0 => Beta::Connection { from: a.min(b), to: a.max(b), wrap },
            (">", f) if f != Family::Polygon => Beta::Connection { from: a, to: b, wrap },
            ("x", Family::Moebius) => Beta::Crossing { lo: a.min(b), hi: a.max(b), wrap },
            _ => return Err(bad()),
        };
        Ok(beta)
    }
}

/// Whether two arcs admit disjoint representatives.  Equal arcs return `false`.
pub fn arcs_disjoint(a: &Arc, b: &Arc, s: &SurfaceSpec) -> bool {
    if a == b {
        return false;
    }
    let cover = s.cover();
    !cover.lifts_cross(&cover::arc_lift(a, s), &cover::arc_lift(b, s), cover.translation_range(2))
}

/// Whether an arc and a connection or loop admit disjoint representatives.
/// Wrapped connections are supported up to `kmax` turns.
pub fn arc_beta_disjoint_bounded(a: &Arc, beta: &Beta, s: &SurfaceSpec, kmax: u32) -> Result<bool, SurfaceError> {
    if beta.wrap() > kmax {
        return Err(SurfaceError::WrapUnsupported { wrap: beta.wrap(), bound: kmax });
    }
    if *beta == Beta::Loop {
        return Ok(!matches!(a, Arc::ToCore { .. } | Arc::Cross { .. }));
    }
    let cover = s.cover();
    let range = cover.translation_range(beta.wrap() as i64 + 2);
    Ok(!cover.lifts_cross(&cover::arc_lift(a, s), &cover::beta_lift(beta, s), range))
}

pub const DEFAULT_KMAX: u32 = 4;

pub fn arc_beta_disjoint(a: &Arc, beta: &Beta, s: &SurfaceSpec) -> Result<bool, SurfaceError> {
    arc_beta_disjoint_bounded(a, beta, s, DEFAULT_KMAX)
}

/// Whether two simple connections or loops cross.
pub fn betas_cross(x: &Beta, y: &Beta, s: &SurfaceSpec) -> bool {
    if x == y {
        return false;
    }
    match (x, y) {
        (Beta::Loop, Beta::Loop) => false,
        (Beta::Loop, b) | (b, Beta::Loop) => matches!(b, Beta::Crossing { .. }),
        _ => {
            let cover = s.cover();
            let range = cover.translation_range((x.wrap().max(y.wrap())) as i64 + 2);
            cover.lifts_cross(&cover::beta_lift(x, s), &cover::beta_lift(y, s), range)
        }
    }
}

pub fn arc_from_label(label: &str, s: &SurfaceSpec) -> Option<Arc> {
    enumerate_arcs(s).into_iter().find(|a| a.label(s) == label)
}

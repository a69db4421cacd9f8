//! Filled subsurfaces and spread subsets, computed from the incidence
//! between arcs and simple connections.
//!
//! For a set of arcs `D`, let `H(D)` be the simple connections (and loop)
//! disjoint from every arc of `D`.  The filled subsurface of a set `B` of
//! connections is recovered from its support `H(D(B))`, where `D(B)` are
//! the arcs disjoint from all of `B`.  A support `S` is spread when some
//! simplex `σ` of arcs has `H(σ) = S` exactly.

use super::{arc_beta_disjoint, betas_cross, enumerate_arcs, enumerate_simple_betas, Arc, Beta, SurfaceSpec};
use crate::complex::clique_complex;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ComponentKind {
    Loop,
    Connection,
    Subsurface,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Component {
    pub kind: ComponentKind,
    pub betas: Vec<Beta>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FilledSubsurface {
    /// Every simple connection or loop contained in the filled set, sorted.
    pub support: Vec<Beta>,
    /// Classes of the support under the crossing relation.
    pub components: Vec<Component>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpreadSubset {
    pub filled: FilledSubsurface,
    /// Arcs disjoint from the whole support: the vertices of the face complex.
    pub arcs: Vec<Arc>,
}

impl SpreadSubset {
    pub fn support(&self) -> &[Beta] {
        &self.filled.support
    }
}

/// Precomputed incidence between arcs and simple connections.
pub(crate) struct Incidence {
    pub surface: SurfaceSpec,
    pub arcs: Vec<Arc>,
    pub betas: Vec<Beta>,
    /// `disjoint[a][b]`: arc `a` misses connection `b`.
    pub disjoint: Vec<Vec<bool>>,
}

impl Incidence {
    pub fn new(s: &SurfaceSpec) -> Incidence {
        let arcs = enumerate_arcs(s);
        let betas = enumerate_simple_betas(s);
        let disjoint = arcs
            .iter()
            .map(|a| betas.iter().map(|b| arc_beta_disjoint(a, b, s).expect("simple")).collect())
            .collect();
        Incidence { surface: s.clone(), arcs, betas, disjoint }
    }

    /// Connections missed by every listed arc.
    pub fn h(&self, arcs: &[usize]) -> BTreeSet<usize> {
        (0..self.betas.len()).filter(|&b| arcs.iter().all(|&a| self.disjoint[a][b])).collect()
    }

    /// Arcs missing every listed connection.
    pub fn d(&self, betas: &BTreeSet<usize>) -> Vec<usize> {
        (0..self.arcs.len()).filter(|&a| betas.iter().all(|&b| self.disjoint[a][b])).collect()
    }

    pub fn closure(&self, betas: &BTreeSet<usize>) -> BTreeSet<usize> {
        self.h(&self.d(betas))
    }

    fn index_of(&self, b: &Beta) -> Option<usize> {
        self.betas.iter().position(|x| x == b)
    }
}

fn components(s: &SurfaceSpec, support: &[Beta]) -> Vec<Component> {
    let n = support.len();
    let mut comp: Vec<usize> = (0..n).collect();
    fn find(c: &mut Vec<usize>, x: usize) -> usize {
        if c[x] != x {
            let r = find(c, c[x]);
            c[x] = r;
        }
        c[x]
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if betas_cross(&support[i], &support[j], s) {
                let (a, b) = (find(&mut comp, i), find(&mut comp, j));
                comp[a] = b;
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<Beta>> = Default::default();
    for i in 0..n {
        let r = find(&mut comp, i);
        groups.entry(r).or_default().push(support[i]);
    }
    let mut out: Vec<Component> = groups
        .into_values()
        .map(|betas| {
            let kind = match betas.as_slice() {
                [Beta::Loop] => ComponentKind::Loop,
                [_] => ComponentKind::Connection,
                _ => ComponentKind::Subsurface,
            };
            Component { kind, betas }
        })
        .collect();
    out.sort();
    out
}

fn filled_from(s: &SurfaceSpec, inc: &Incidence, set: &BTreeSet<usize>) -> FilledSubsurface {
    let support: Vec<Beta> = set.iter().map(|&i| inc.betas[i]).collect();
    let components = components(s, &support);
    FilledSubsurface { support, components }
}

/// Saturated support of the filled subsurface of `betas`.  Members that are
/// not simple connections or the loop of `s` are ignored.
pub fn filled_subsurface(s: &SurfaceSpec, betas: &[Beta]) -> FilledSubsurface {
    let inc = Incidence::new(s);
    let set = betas.iter().filter_map(|b| inc.index_of(b)).collect();
    filled_from(s, &inc, &inc.closure(&set))
}

fn spread_witness(inc: &Incidence, set: &BTreeSet<usize>) -> Option<Vec<usize>> {
    if set.is_empty() {
        return None;
    }
    let arcs = inc.d(set);
    if arcs.is_empty() {
        return None;
    }
    let labels = arcs.iter().map(|i| i.to_string()).collect();
    let s_arcs: Vec<Arc> = arcs.iter().map(|&i| inc.arcs[i]).collect();
    let c = clique_complex(labels, |i, j| super::arcs_disjoint(&s_arcs[i], &s_arcs[j], &inc.surface));
    c.maximal.iter().map(|m| m.iter().map(|&k| arcs[k]).collect::<Vec<_>>()).find(|sigma| &inc.h(sigma) == set)
}

/// Whether a set of connections is the support of a spread subset.
pub fn is_spread(s: &SurfaceSpec, betas: &[Beta]) -> bool {
    let inc = Incidence::new(s);
    let set: BTreeSet<usize> = betas.iter().filter_map(|b| inc.index_of(b)).collect();
    if set.len() != betas.iter().collect::<BTreeSet<_>>().len() || inc.closure(&set) != set {
        return false;
    }
    spread_witness(&inc, &set).is_some()
}

/// All spread subsets, ordered by support size then support.
pub fn enumerate_spread_subsets(s: &SurfaceSpec) -> Vec<SpreadSubset> {
    let inc = Incidence::new(s);
    // closed sets of the Galois connection, by breadth-first joins
    let mut closed: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    let mut frontier: Vec<BTreeSet<usize>> = Vec::new();
    for b in 0..inc.betas.len() {
        let c = inc.closure(&BTreeSet::from([b]));
        if closed.insert(c.clone()) {
            frontier.push(c);
        }
    }
    while let Some(c) = frontier.pop() {
        for b in 0..inc.betas.len() {
            if c.contains(&b) {
                continue;
            }
            let mut next = c.clone();
            next.insert(b);
            let next = inc.closure(&next);
            if inc.d(&next).is_empty() {
                continue;
            }
            if closed.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    let mut out: Vec<SpreadSubset> = closed
        .into_iter()
        .filter(|set| spread_witness(&inc, set).is_some())
        .map(|set| SpreadSubset { filled: filled_from(s, &inc, &set), arcs: inc.d(&set).into_iter().map(|a| inc.arcs[a]).collect() })
        .collect();
    out.sort_by(|a, b| a.support().len().cmp(&b.support().len()).then_with(|| a.support().cmp(b.support())));
    out
}

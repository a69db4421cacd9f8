use super::collapse::{free_face_collapse_with_budget, strong_collapse, CollapseError, DEFAULT_BUDGET};
use super::homology::{homology, Homology};
use super::{is_subset, Complex};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CertifiedType {
    Empty,
    Ball(usize),
    Sphere(usize),
    Other(String),
}

impl CertifiedType {
    pub fn is_inconclusive(&self) -> bool {
        matches!(self, CertifiedType::Other(r) if r.contains("inconclusive"))
    }
}

impl std::fmt::Display for CertifiedType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CertifiedType::Empty => write!(f, "empty"),
            CertifiedType::Ball(d) => write!(f, "ball({d})"),
            CertifiedType::Sphere(d) => write!(f, "sphere({d})"),
            CertifiedType::Other(r) => write!(f, "other({r})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifyReport {
    pub kind: CertifiedType,
    pub dim: isize,
    pub pure: bool,
    pub pseudo_manifold: bool,
    pub manifold: bool,
    pub has_boundary: bool,
    pub betti: Vec<usize>,
    pub collapse: String,
}

pub fn certify_type(c: &Complex) -> CertifiedType {
    certify_report(c).kind
}

enum Collapsible {
    Yes(&'static str),
    No,
    Unknown,
}

fn collapsible(c: &Complex, budget: u64) -> Collapsible {
    let strong = strong_collapse(c);
    if strong.reaches_point() {
        return Collapsible::Yes("strong collapse");
    }
    match free_face_collapse_with_budget(&strong.terminal, budget) {
        Ok(_) => Collapsible::Yes("elementary collapses"),
        Err(CollapseError::DepthExceeded(_)) => Collapsible::Unknown,
        Err(_) => Collapsible::No,
    }
}

/// 0 and 1 dimensional balls and spheres, recognized directly.
fn low_dim(c: &Complex) -> Option<CertifiedType> {
    match c.dim() {
        -1 => Some(CertifiedType::Empty),
        0 => Some(match c.maximal.len() {
            1 => CertifiedType::Ball(0),
            2 => CertifiedType::Sphere(0),
            k => CertifiedType::Other(format!("{k} isolated points")),
        }),
        1 => {
            if !c.is_pure() {
                return Some(CertifiedType::Other("not pure".into()));
            }
            let mut deg: HashMap<usize, usize> = HashMap::new();
            for e in &c.maximal {
                for &v in e {
                    *deg.entry(v).or_default() += 1;
                }
            }
            if deg.values().any(|&d| d > 2) {
                return Some(CertifiedType::Other("graph vertex of degree > 2".into()));
            }
            let ends = deg.values().filter(|&&d| d == 1).count();
            let connected = homology(c).betti.first() == Some(&1);
            Some(match (connected, ends) {
                (true, 0) => CertifiedType::Sphere(1),
                (true, 2) => CertifiedType::Ball(1),
                _ => CertifiedType::Other("disconnected graph".into()),
            })
        }
        _ => None,
    }
}

/// Codimension-one faces with the number of maximal simplices containing each.
fn ridge_counts(c: &Complex) -> HashMap<Vec<usize>, usize> {
    let mut counts = HashMap::new();
    for m in &c.maximal {
        for drop in 0..m.len() {
            let mut r = m.clone();
            r.remove(drop);
            *counts.entry(r).or_insert(0) += 1;
        }
    }
    counts
}

/// A ball or sphere test that does not look at links; the caller checks
/// links of all faces globally.
fn shallow(c: &Complex, expect_dim: usize, budget: u64) -> CertifiedType {
    if let Some(t) = low_dim(c) {
        return t;
    }
    if !c.is_pure() || c.dim() != expect_dim as isize {
        return CertifiedType::Other("link of wrong dimension".into());
    }
    let ridges = ridge_counts(c);
    if ridges.values().any(|&k| k > 2) {
        return CertifiedType::Other("link is not a pseudo-manifold".into());
    }
    let boundary = ridges.values().any(|&k| k == 1);
    let h = homology(c);
    classify_from(boundary, &h, expect_dim, || collapsible(c, budget)).0
}

fn classify_from(
    boundary: bool,
    h: &Homology,
    d: usize,
    collapse: impl FnOnce() -> Collapsible,
) -> (CertifiedType, String) {
    if boundary {
        if !h.is_acyclic() {
            return (CertifiedType::Other("manifold with boundary but not acyclic".into()), "skipped".into());
        }
        match collapse() {
            Collapsible::Yes(how) => (CertifiedType::Ball(d), how.into()),
            Collapsible::No => (CertifiedType::Other("acyclic but no collapse found".into()), "failed".into()),
            Collapsible::Unknown => (CertifiedType::Other("inconclusive: collapse budget exhausted".into()), "budget".into()),
        }
    } else if h.is_sphere(d) {
        (CertifiedType::Sphere(d), "not applicable".into())
    } else {
        (CertifiedType::Other("closed manifold without sphere homology".into()), "not applicable".into())
    }
}

/// Pure dimension, pseudo-manifold, links of all faces, homology and
/// collapsibility.  Links are checked face by face, which covers the
/// recursive link condition since links of faces in a link are links in
/// the whole complex.
pub fn certify_report(c: &Complex) -> CertifyReport {
    let mut report = CertifyReport {
        kind: CertifiedType::Empty,
        dim: c.dim(),
        pure: c.is_pure(),
        pseudo_manifold: true,
        manifold: true,
        has_boundary: false,
        betti: Vec::new(),
        collapse: "not attempted".into(),
    };
    if c.is_void() {
        return report;
    }
    if let Some(t) = low_dim(c) {
        report.betti = homology(c).betti;
        report.has_boundary = matches!(t, CertifiedType::Ball(_));
        report.manifold = !matches!(t, CertifiedType::Other(_));
        report.pseudo_manifold = report.manifold;
        report.kind = t;
        return report;
    }
    let d = c.dim() as usize;
    if !report.pure {
        report.kind = CertifiedType::Other("not pure".into());
        return report;
    }
    let ridges = ridge_counts(c);
    report.pseudo_manifold = ridges.values().all(|&k| k <= 2);
    report.has_boundary = ridges.values().any(|&k| k == 1);
    if !report.pseudo_manifold {
        report.kind = CertifiedType::Other("not a pseudo-manifold".into());
        return report;
    }
    let mut by_vertex: HashMap<usize, Vec<&Vec<usize>>> = HashMap::new();
    for m in &c.maximal {
        for &v in m {
            by_vertex.entry(v).or_default().push(m);
        }
    }
    let faces = c.all_faces();
    'links: for (k, fs) in faces.iter().enumerate().take(d.saturating_sub(1)) {
        let link_dim = d - k - 1;
        for f in fs {
            let simplices = by_vertex[&f[0]]
                .iter()
                .filter(|m| is_subset(f, m))
                .map(|m| m.iter().copied().filter(|v| f.binary_search(v).is_err()).collect())
                .collect();
            let link = Complex::new(c.vertices.clone(), simplices);
            match shallow(&link, link_dim, DEFAULT_BUDGET) {
                CertifiedType::Ball(_) | CertifiedType::Sphere(_) => {}
                CertifiedType::Other(r) if r.contains("inconclusive") => {
                    report.kind = CertifiedType::Other(format!("inconclusive: link of {f:?}: {r}"));
                    report.manifold = false;
                    break 'links;
                }
                other => {
                    report.kind = CertifiedType::Other(format!("link of {f:?} is {other}"));
                    report.manifold = false;
                    break 'links;
                }
            }
        }
    }
    let h = homology(c);
    report.betti = h.betti.clone();
    if !report.manifold {
        return report;
    }
    let (kind, how) = classify_from(report.has_boundary, &h, d, || collapsible(c, DEFAULT_BUDGET));
    report.kind = kind;
    report.collapse = how;
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::join;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("v{i}")).collect()
    }

    #[test]
    fn octahedron_is_a_two_sphere() {
        let s0 = |a: &str, b: &str| Complex::new(vec![a.into(), b.into()], vec![vec![0], vec![1]]);
        let c = join(&join(&s0("a", "b"), &s0("c", "d")), &s0("e", "f"));
        assert_eq!(certify_type(&c), CertifiedType::Sphere(2));
    }

    #[test]
    fn filled_triangle_is_a_ball() {
        assert_eq!(certify_type(&Complex::simplex(labels(3))), CertifiedType::Ball(2));
    }

    #[test]
    fn bowtie_is_not_a_manifold() {
        let c = Complex::new(labels(5), vec![vec![0, 1, 2], vec![0, 3, 4]]);
        assert!(matches!(certify_type(&c), CertifiedType::Other(_)));
    }
}

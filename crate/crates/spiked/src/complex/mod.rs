//! Finite abstract simplicial complexes with labelled vertices.
//!
//! A complex is stored by its maximal simplices, each a sorted list of
//! vertex indices.  The void complex (no vertices, only the empty simplex)
//! has an empty facet list and dimension -1; it is the unit for [`join`].

mod bicolored;
mod certify;
mod collapse;
mod homology;

pub use bicolored::{bicolored_model, model_arcs, BicoloredKind};
pub use certify::{certify_report, certify_type, CertifiedType, CertifyReport};
pub use collapse::{
    free_face_collapse, free_face_collapse_with_budget, replay, strong_collapse, strong_collapse_with_order,
    CollapseCertificate, CollapseError, Move, DEFAULT_BUDGET,
};
pub use homology::{homology, Homology};

use crate::surface::{arc_beta_disjoint, arcs_disjoint, enumerate_arcs, Arc, Beta, SurfaceSpec};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Complex {
    pub vertices: Vec<String>,
    pub maximal: Vec<Vec<usize>>,
}

/// Sort, deduplicate and drop simplices contained in others.
fn reduce(mut simplices: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    for s in simplices.iter_mut() {
        s.sort_unstable();
        s.dedup();
    }
    simplices.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    simplices.dedup();
    let mut kept: Vec<Vec<usize>> = Vec::new();
    for s in simplices {
        if s.is_empty() {
            continue;
        }
        if !kept.iter().any(|k| is_subset(&s, k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// Both slices sorted.
pub(crate) fn is_subset(a: &[usize], b: &[usize]) -> bool {
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

impl Complex {
    pub fn new(vertices: Vec<String>, simplices: Vec<Vec<usize>>) -> Complex {
        Complex { vertices, maximal: reduce(simplices) }
    }

    pub fn void() -> Complex {
        Complex { vertices: Vec::new(), maximal: Vec::new() }
    }

    pub fn simplex(labels: Vec<String>) -> Complex {
        let all = (0..labels.len()).collect();
        Complex::new(labels, vec![all])
    }

    pub fn is_void(&self) -> bool {
        self.maximal.is_empty()
    }

    pub fn dim(&self) -> isize {
        self.maximal.iter().map(|s| s.len() as isize - 1).max().unwrap_or(-1)
    }

    pub fn is_pure(&self) -> bool {
        let d = self.dim();
        self.maximal.iter().all(|s| s.len() as isize - 1 == d)
    }

    /// Vertices that appear in some simplex.
    pub fn used_vertices(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self.maximal.iter().flatten().copied().collect();
        set.into_iter().collect()
    }

    pub fn contains(&self, simplex: &[usize]) -> bool {
        let mut s = simplex.to_vec();
        s.sort_unstable();
        s.is_empty() && !self.is_void() || self.maximal.iter().any(|m| is_subset(&s, m))
    }

    /// All faces of dimension `k`, sorted.
    pub fn faces(&self, k: usize) -> Vec<Vec<usize>> {
        let mut set = BTreeSet::new();
        for m in &self.maximal {
            if m.len() > k {
                for_each_subset(m, k + 1, &mut |s| {
                    set.insert(s.to_vec());
                });
            }
        }
        set.into_iter().collect()
    }

    /// All nonempty faces grouped by dimension.
    pub fn all_faces(&self) -> Vec<Vec<Vec<usize>>> {
        let d = self.dim();
        (0..=d.max(-1)).filter(|&k| k >= 0).map(|k| self.faces(k as usize)).collect()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.all_faces().iter().map(Vec::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().iter().enumerate().map(|(k, &f)| if k % 2 == 0 { f as i64 } else { -(f as i64) }).sum()
    }

    /// Link of a face, keeping the vertex labels.  The link of a face that is
    /// itself maximal is the void complex; a face not in the complex also
    /// yields the void complex.
    pub fn link(&self, face: &[usize]) -> Complex {
        let mut f = face.to_vec();
        f.sort_unstable();
        let simplices = self
            .maximal
            .iter()
            .filter(|m| is_subset(&f, m))
            .map(|m| m.iter().copied().filter(|v| f.binary_search(v).is_err()).collect())
            .collect();
        Complex::new(self.vertices.clone(), simplices)
    }

    /// Remove a vertex and every simplex containing it.
    pub fn deletion(&self, v: usize) -> Complex {
        let simplices = self.maximal.iter().map(|m| m.iter().copied().filter(|&x| x != v).collect()).collect();
        Complex::new(self.vertices.clone(), simplices)
    }

    /// Full subcomplex on a vertex subset, keeping indices.
    pub fn induced(&self, keep: &[usize]) -> Complex {
        let k: BTreeSet<usize> = keep.iter().copied().collect();
        let simplices = self.maximal.iter().map(|m| m.iter().copied().filter(|x| k.contains(x)).collect()).collect();
        Complex::new(self.vertices.clone(), simplices)
    }

    /// Drop unused vertices and renumber.
    pub fn compact(&self) -> Complex {
        let used = self.used_vertices();
        let mut index = vec![usize::MAX; self.vertices.len()];
        for (i, &v) in used.iter().enumerate() {
            index[v] = i;
        }
        let vertices = used.iter().map(|&v| self.vertices[v].clone()).collect();
        let simplices = self.maximal.iter().map(|m| m.iter().map(|&v| index[v]).collect()).collect();
        Complex::new(vertices, simplices)
    }

    /// Maximal simplices as sorted label sets, for comparisons across complexes.
    pub fn labelled_facets(&self) -> BTreeSet<BTreeSet<String>> {
        self.maximal.iter().map(|m| m.iter().map(|&v| self.vertices[v].clone()).collect()).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("complex serializes")
    }
}

pub(crate) fn for_each_subset(items: &[usize], size: usize, f: &mut dyn FnMut(&[usize])) {
    fn go(items: &[usize], size: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == size {
            f(cur);
            return;
        }
        for i in start..items.len() {
            if items.len() - i < size - cur.len() {
                break;
            }
            cur.push(items[i]);
            go(items, size, i + 1, cur, f);
            cur.pop();
        }
    }
    go(items, size, 0, &mut Vec::with_capacity(size), f);
}

/// Flag complex of a compatibility relation; maximal simplices are the
/// maximal cliques, found by Bron–Kerbosch with pivoting.
pub fn clique_complex(vertices: Vec<String>, compatible: impl Fn(usize, usize) -> bool) -> Complex {
    let n = vertices.len();
    let mut adj = vec![vec![false; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            if compatible(i, j) {
                adj[i][j] = true;
                adj[j][i] = true;
            }
        }
    }
    let mut cliques = Vec::new();
    let mut r = Vec::new();
    bron_kerbosch(&adj, &mut r, (0..n).collect(), Vec::new(), &mut cliques);
    Complex::new(vertices, cliques)
}

fn bron_kerbosch(adj: &[Vec<bool>], r: &mut Vec<usize>, p: Vec<usize>, x: Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if p.is_empty() {
        if x.is_empty() && !r.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .copied()
        .max_by_key(|&u| p.iter().filter(|&&v| adj[u][v]).count())
        .expect("nonempty");
    let candidates: Vec<usize> = p.iter().copied().filter(|&v| !adj[pivot][v]).collect();
    let (mut p, mut x) = (p, x);
    for v in candidates {
        let np = p.iter().copied().filter(|&w| adj[v][w]).collect();
        let nx = x.iter().copied().filter(|&w| adj[v][w]).collect();
        r.push(v);
        bron_kerbosch(adj, r, np, nx, out);
        r.pop();
        p.retain(|&w| w != v);
        x.push(v);
    }
}

/// Simplices are unions of one simplex from each factor.  Labels of `b`
/// are appended after those of `a`.
pub fn join(a: &Complex, b: &Complex) -> Complex {
    let mut vertices = a.vertices.clone();
    vertices.extend(b.vertices.iter().cloned());
    let off = a.vertices.len();
    let shift = |s: &Vec<usize>| s.iter().map(|&v| v + off).collect::<Vec<_>>();
    let simplices = match (a.is_void(), b.is_void()) {
        (true, true) => Vec::new(),
        (true, false) => b.maximal.iter().map(shift).collect(),
        (false, true) => a.maximal.clone(),
        (false, false) => a
            .maximal
            .iter()
            .flat_map(|x| b.maximal.iter().map(move |y| (x, y)))
            .map(|(x, y)| {
                let mut s = x.clone();
                s.extend(shift(y));
                s
            })
            .collect(),
    };
    Complex::new(vertices, simplices)
}

/// The arc complex: vertices are the permitted arcs, labelled canonically.
pub fn arc_complex(s: &SurfaceSpec) -> (Complex, Vec<Arc>) {
    arcs_complex(s, enumerate_arcs(s))
}

fn arcs_complex(s: &SurfaceSpec, arcs: Vec<Arc>) -> (Complex, Vec<Arc>) {
    let labels = arcs.iter().map(|a| a.label(s)).collect();
    let c = clique_complex(labels, |i, j| arcs_disjoint(&arcs[i], &arcs[j], s));
    (c, arcs)
}

/// Subcomplex spanned by the arcs disjoint from every member of `marked`.
pub fn marked_arc_complex(s: &SurfaceSpec, marked: &[Beta]) -> (Complex, Vec<Arc>) {
    let arcs = enumerate_arcs(s)
        .into_iter()
        .filter(|a| marked.iter().all(|b| arc_beta_disjoint(a, b, s).unwrap_or(false)))
        .collect();
    arcs_complex(s, arcs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("v{i}")).collect()
    }

    #[test]
    fn reduce_drops_faces_of_larger_simplices() {
        let c = Complex::new(labels(3), vec![vec![0, 1], vec![2, 1, 0], vec![1]]);
        assert_eq!(c.maximal, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn cliques_of_a_path() {
        let c = clique_complex(labels(3), |i, j| i.abs_diff(j) == 1);
        assert_eq!(c.maximal, vec![vec![0, 1], vec![1, 2]]);
    }

    #[test]
    fn join_with_void_is_identity() {
        let x = Complex::simplex(labels(2));
        let j = join(&x, &Complex::void());
        assert_eq!(j.maximal, x.maximal);
    }

    #[test]
    fn link_of_vertex_in_triangle() {
        let c = Complex::simplex(labels(3));
        assert_eq!(c.link(&[0]).maximal, vec![vec![1, 2]]);
        assert!(c.link(&[0, 1, 2]).is_void());
    }
}

use super::{is_subset, Complex};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap};
use thiserror::Error;

pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Move {
    /// Remove `sigma` and the unique maximal face `tau` containing it.
    FreeFace { sigma: Vec<usize>, tau: Vec<usize> },
    /// Remove `vertex`, whose link is a cone with apex `dominator`.
    StrongRemove { vertex: usize, dominator: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollapseCertificate {
    pub moves: Vec<Move>,
    pub terminal: Complex,
}

impl CollapseCertificate {
    pub fn reaches_point(&self) -> bool {
        self.terminal.maximal.len() == 1 && self.terminal.maximal[0].len() == 1
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CollapseError {
    #[error("search budget of {0} nodes exhausted")]
    DepthExceeded(u64),
    #[error("no sequence of elementary collapses reaches a point")]
    NoCollapse,
    #[error("move {index} is not valid: {reason}")]
    InvalidMove { index: usize, reason: String },
}

/// `dominator` lies in every maximal simplex containing `v`.
fn dominator(c: &Complex, v: usize) -> Option<usize> {
    let mut containing = c.maximal.iter().filter(|m| m.binary_search(&v).is_ok());
    let first = containing.next()?;
    let mut common: BTreeSet<usize> = first.iter().copied().filter(|&x| x != v).collect();
    for m in containing {
        common.retain(|x| m.binary_search(x).is_ok());
        if common.is_empty() {
            return None;
        }
    }
    common.into_iter().next()
}

/// Greedy removal of dominated vertices in index order until none remain.
pub fn strong_collapse(c: &Complex) -> CollapseCertificate {
    let order = c.used_vertices();
    strong_collapse_with_order(c, &order)
}

/// As [`strong_collapse`], scanning vertices in the given order on each pass.
pub fn strong_collapse_with_order(c: &Complex, order: &[usize]) -> CollapseCertificate {
    let mut cur = c.clone();
    let mut moves = Vec::new();
    loop {
        let mut changed = false;
        for &v in order {
            if cur.used_vertices().len() <= 1 {
                break;
            }
            if !cur.maximal.iter().any(|m| m.binary_search(&v).is_ok()) {
                continue;
            }
            if let Some(d) = dominator(&cur, v) {
                cur = cur.deletion(v);
                moves.push(Move::StrongRemove { vertex: v, dominator: d });
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    CollapseCertificate { moves, terminal: cur }
}

/// Face poset with live coface counts, for elementary collapses.
struct FaceState {
    faces: Vec<Vec<usize>>,
    facets: Vec<Vec<usize>>,
    cofaces: Vec<Vec<usize>>,
    alive: Vec<bool>,
    live_cofaces: Vec<usize>,
    live: usize,
}

impl FaceState {
    fn new(c: &Complex) -> FaceState {
        let faces: Vec<Vec<usize>> = c.all_faces().into_iter().flatten().collect();
        let index: HashMap<&Vec<usize>, usize> = faces.iter().enumerate().map(|(i, f)| (f, i)).collect();
        let mut facets = vec![Vec::new(); faces.len()];
        let mut cofaces = vec![Vec::new(); faces.len()];
        for (i, f) in faces.iter().enumerate() {
            if f.len() < 2 {
                continue;
            }
            for drop in 0..f.len() {
                let mut b = f.clone();
                b.remove(drop);
                let j = index[&b];
                facets[i].push(j);
                cofaces[j].push(i);
            }
        }
        let live_cofaces = cofaces.iter().map(Vec::len).collect();
        let n = faces.len();
        FaceState { faces, facets, cofaces, alive: vec![true; n], live_cofaces, live: n }
    }

    /// The partner of a free face, if `s` is one.
    fn partner(&self, s: usize) -> Option<usize> {
        if !self.alive[s] || self.live_cofaces[s] != 1 {
            return None;
        }
        let t = *self.cofaces[s].iter().find(|&&t| self.alive[t])?;
        (self.live_cofaces[t] == 0).then_some(t)
    }

    fn kill(&mut self, i: usize) {
        self.alive[i] = false;
        self.live -= 1;
        for &f in &self.facets[i] {
            self.live_cofaces[f] -= 1;
        }
    }

    fn revive(&mut self, i: usize) {
        self.alive[i] = true;
        self.live += 1;
        for &f in &self.facets[i] {
            self.live_cofaces[f] += 1;
        }
    }

    fn affected(&self, s: usize, t: usize) -> Vec<usize> {
        let mut out = vec![s];
        for &x in self.facets[t].iter().chain(self.facets[s].iter()) {
            out.push(x);
            out.extend(self.facets[x].iter().copied());
        }
        out
    }
}

/// Backtracking search for elementary collapses down to a single vertex,
/// smallest free face first.
pub fn free_face_collapse(c: &Complex) -> Result<CollapseCertificate, CollapseError> {
    free_face_collapse_with_budget(c, DEFAULT_BUDGET)
}

pub fn free_face_collapse_with_budget(c: &Complex, budget: u64) -> Result<CollapseCertificate, CollapseError> {
    if c.is_void() {
        return Err(CollapseError::NoCollapse);
    }
    let mut st = FaceState::new(c);
    let mut free: BTreeSet<usize> = (0..st.faces.len()).filter(|&s| st.partner(s).is_some()).collect();
    // each frame: the pair removed and the free set before removal
    let mut stack: Vec<(usize, usize)> = Vec::new();
    let mut nodes = 0u64;
    let mut resume_after: Option<usize> = None;
    loop {
        if st.live == 1 {
            break;
        }
        let next = match resume_after {
            Some(prev) => free.range(prev + 1..).next().copied(),
            None => free.iter().next().copied(),
        };
        resume_after = None;
        match next {
            Some(s) => {
                nodes += 1;
                if nodes > budget {
                    return Err(CollapseError::DepthExceeded(budget));
                }
                let t = st.partner(s).expect("free face");
                st.kill(t);
                st.kill(s);
                for x in st.affected(s, t) {
                    free.remove(&x);
                    if st.partner(x).is_some() {
                        free.insert(x);
                    }
                }
                free.remove(&t);
                stack.push((s, t));
            }
            None => {
                let Some((s, t)) = stack.pop() else {
                    return Err(CollapseError::NoCollapse);
                };
                st.revive(s);
                st.revive(t);
                for x in st.affected(s, t).into_iter().chain([t]) {
                    free.remove(&x);
                    if st.partner(x).is_some() {
                        free.insert(x);
                    }
                }
                resume_after = Some(s);
            }
        }
    }
    let moves = stack
        .iter()
        .map(|&(s, t)| Move::FreeFace { sigma: st.faces[s].clone(), tau: st.faces[t].clone() })
        .collect();
    let rest: Vec<Vec<usize>> = (0..st.faces.len()).filter(|&i| st.alive[i]).map(|i| st.faces[i].clone()).collect();
    Ok(CollapseCertificate { moves, terminal: Complex::new(c.vertices.clone(), rest) })
}

/// Re-run a certificate from `c`, checking each move's precondition.
pub fn replay(c: &Complex, cert: &CollapseCertificate) -> Result<Complex, CollapseError> {
    let mut faces: BTreeSet<Vec<usize>> = c.all_faces().into_iter().flatten().collect();
    let mut cur = c.clone();
    let mut face_mode = false;
    for (index, m) in cert.moves.iter().enumerate() {
        let bad = |reason: &str| CollapseError::InvalidMove { index, reason: reason.to_string() };
        match m {
            Move::StrongRemove { vertex, dominator: d } => {
                if face_mode {
                    return Err(bad("strong move after elementary collapses"));
                }
                if vertex == d {
                    return Err(bad("vertex cannot dominate itself"));
                }
                let containing: Vec<&Vec<usize>> = cur.maximal.iter().filter(|s| s.binary_search(vertex).is_ok()).collect();
                if containing.is_empty() || !containing.iter().all(|s| s.binary_search(d).is_ok()) {
                    return Err(bad("vertex is not dominated"));
                }
                cur = cur.deletion(*vertex);
            }
            Move::FreeFace { sigma, tau } => {
                if !face_mode {
                    faces = cur.all_faces().into_iter().flatten().collect();
                    face_mode = true;
                }
                if !faces.contains(sigma) || !faces.contains(tau) || tau.len() != sigma.len() + 1 || !is_subset(sigma, tau) {
                    return Err(bad("not a collapsible pair"));
                }
                if faces.iter().any(|f| f != tau && f.len() > sigma.len() && is_subset(sigma, f)) {
                    return Err(bad("face is not free"));
                }
                faces.remove(sigma);
                faces.remove(tau);
            }
        }
    }
    if face_mode {
        cur = Complex::new(c.vertices.clone(), faces.into_iter().collect());
    }
    if cur.maximal != cert.terminal.maximal {
        return Err(CollapseError::InvalidMove { index: cert.moves.len(), reason: "terminal complex differs".into() });
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("v{i}")).collect()
    }

    #[test]
    fn simplex_strongly_collapses() {
        let c = Complex::simplex(labels(4));
        let cert = strong_collapse(&c);
        assert!(cert.reaches_point());
        assert!(replay(&c, &cert).is_ok());
    }

    #[test]
    fn circle_has_no_free_face() {
        let c = Complex::new(labels(3), vec![vec![0, 1], vec![1, 2], vec![0, 2]]);
        assert_eq!(free_face_collapse(&c), Err(CollapseError::NoCollapse));
        assert!(!strong_collapse(&c).reaches_point());
    }

    #[test]
    fn triangulated_disk_collapses() {
        let c = Complex::new(labels(4), vec![vec![0, 1, 2], vec![0, 2, 3]]);
        let cert = free_face_collapse(&c).unwrap();
        assert!(cert.reaches_point());
        assert!(replay(&c, &cert).is_ok());
    }
}

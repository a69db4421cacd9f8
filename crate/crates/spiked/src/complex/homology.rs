use super::Complex;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet, HashMap};

/// Integral homology: Betti numbers and torsion coefficients per degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homology {
    pub betti: Vec<usize>,
    pub torsion: Vec<Vec<BigInt>>,
}

impl Homology {
    pub fn is_torsion_free(&self) -> bool {
        self.torsion.iter().all(Vec::is_empty)
    }

    /// Homology of a point.
    pub fn is_acyclic(&self) -> bool {
        self.is_torsion_free() && self.betti.first() == Some(&1) && self.betti[1..].iter().all(|&b| b == 0)
    }

    /// Homology of the `d`-sphere.
    pub fn is_sphere(&self, d: usize) -> bool {
        if !self.is_torsion_free() || self.betti.len() != d + 1 {
            return false;
        }
        if d == 0 {
            return self.betti == [2];
        }
        self.betti.iter().enumerate().all(|(k, &b)| b == usize::from(k == 0 || k == d))
    }
}

/// Smith normal form invariants of a sparse integer matrix given by columns.
/// Returns the nonzero diagonal entries.
fn invariant_factors(mut cols: Vec<BTreeMap<usize, i64>>, nrows: usize) -> Vec<BigInt> {
    let mut rowcols: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); nrows];
    for (j, c) in cols.iter().enumerate() {
        for &i in c.keys() {
            rowcols[i].insert(j);
        }
    }
    let mut alive = vec![true; cols.len()];
    let mut units = 0usize;
    let mut progress = true;
    while progress {
        progress = false;
        for pj in 0..cols.len() {
            if !alive[pj] {
                continue;
            }
            let Some(pi) = cols[pj].iter().filter(|(_, v)| v.abs() == 1).map(|(&i, _)| i).min_by_key(|&i| rowcols[i].len())
            else {
                continue;
            };
            let pivot_col = std::mem::take(&mut cols[pj]);
            let pv = pivot_col[&pi];
            let others: Vec<usize> = rowcols[pi].iter().copied().filter(|&j| j != pj).collect();
            for j in others {
                let f = cols[j][&pi] * pv;
                for (&i, &v) in &pivot_col {
                    let prod = f.checked_mul(v).expect("entry overflow during elimination");
                    let cur = cols[j].get(&i).copied().unwrap_or(0);
                    let new = cur.checked_sub(prod).expect("entry overflow during elimination");
                    if new == 0 {
                        cols[j].remove(&i);
                        rowcols[i].remove(&j);
                    } else {
                        if cur == 0 {
                            rowcols[i].insert(j);
                        }
                        cols[j].insert(i, new);
                    }
                }
            }
            for &i in pivot_col.keys() {
                rowcols[i].remove(&pj);
            }
            alive[pj] = false;
            units += 1;
            progress = true;
        }
    }
    let mut out: Vec<BigInt> = vec![BigInt::one(); units];
    let rest: Vec<&BTreeMap<usize, i64>> = cols.iter().zip(&alive).filter(|(c, &a)| a && !c.is_empty()).map(|(c, _)| c).collect();
    if !rest.is_empty() {
        let rows: BTreeSet<usize> = rest.iter().flat_map(|c| c.keys().copied()).collect();
        let ridx: HashMap<usize, usize> = rows.iter().enumerate().map(|(k, &r)| (r, k)).collect();
        let mut dense = vec![vec![BigInt::zero(); rest.len()]; rows.len()];
        for (j, c) in rest.iter().enumerate() {
            for (&i, &v) in c.iter() {
                dense[ridx[&i]][j] = BigInt::from(v);
            }
        }
        out.extend(smith_diagonal(dense));
    }
    out
}

/// Diagonal of the Smith normal form of a dense integer matrix (nonzero entries, divisibility chain).
pub(crate) fn smith_diagonal(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = a.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = a[0].len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[i][j].is_zero() && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(t, bi);
        for row in a.iter_mut() {
            row.swap(t, bj);
        }
        loop {
            let mut changed = false;
            for i in (t + 1)..rows {
                if !a[i][t].is_zero() {
                    let qt = a[i][t].div_floor(&a[t][t]);
                    for j in t..cols {
                        let s = &a[t][j] * &qt;
                        a[i][j] -= s;
                    }
                    if !a[i][t].is_zero() {
                        a.swap(t, i);
                        changed = true;
                    }
                }
            }
            for j in (t + 1)..cols {
                if !a[t][j].is_zero() {
                    let qt = a[t][j].div_floor(&a[t][t]);
                    for row in a.iter_mut().skip(t) {
                        let s = &row[t] * &qt;
                        row[j] -= s;
                    }
                    if !a[t][j].is_zero() {
                        for row in a.iter_mut() {
                            row.swap(t, j);
                        }
                        changed = true;
                    }
                }
            }
            if !changed {
                // enforce divisibility of the remaining block
                let bad = (t + 1..rows).flat_map(|i| (t + 1..cols).map(move |j| (i, j))).find(|&(i, j)| !(&a[i][j] % &a[t][t]).is_zero());
                match bad {
                    Some((i, _)) => {
                        for j in t..cols {
                            let v = a[i][j].clone();
                            a[t][j] += v;
                        }
                    }
                    None => break,
                }
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

pub fn homology(c: &Complex) -> Homology {
    let faces = c.all_faces();
    if faces.is_empty() {
        return Homology { betti: Vec::new(), torsion: Vec::new() };
    }
    let index: Vec<HashMap<&Vec<usize>, usize>> =
        faces.iter().map(|fs| fs.iter().enumerate().map(|(i, f)| (f, i)).collect()).collect();
    // invariants[k] = invariant factors of the boundary map from k-faces
    let mut invariants: Vec<Vec<BigInt>> = vec![Vec::new(); faces.len()];
    for k in 1..faces.len() {
        let cols = faces[k]
            .iter()
            .map(|f| {
                let mut col = BTreeMap::new();
                for drop in 0..f.len() {
                    let b: Vec<usize> = f.iter().enumerate().filter(|&(i, _)| i != drop).map(|(_, &v)| v).collect();
                    col.insert(index[k - 1][&b], if drop % 2 == 0 { 1 } else { -1 });
                }
                col
            })
            .collect();
        invariants[k] = invariant_factors(cols, faces[k - 1].len());
    }
    let mut betti = Vec::with_capacity(faces.len());
    let mut torsion = Vec::with_capacity(faces.len());
    for k in 0..faces.len() {
        let rank_out = invariants[k].len();
        let rank_in = invariants.get(k + 1).map_or(0, Vec::len);
        betti.push(faces[k].len() - rank_out - rank_in);
        torsion.push(
            invariants
                .get(k + 1)
                .map(|v| v.iter().filter(|x| !x.is_one()).cloned().collect())
                .unwrap_or_default(),
        );
    }
    Homology { betti, torsion }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("v{i}")).collect()
    }

    #[test]
    fn circle() {
        let c = Complex::new(labels(3), vec![vec![0, 1], vec![1, 2], vec![0, 2]]);
        let h = homology(&c);
        assert_eq!(h.betti, vec![1, 1]);
        assert!(h.is_sphere(1));
    }

    #[test]
    fn simplex_is_acyclic() {
        let h = homology(&Complex::simplex(labels(4)));
        assert!(h.is_acyclic());
    }

    #[test]
    fn projective_plane_has_two_torsion() {
        // six-vertex triangulation
        let f = vec![
            vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 4], vec![0, 4, 5], vec![0, 1, 5],
            vec![1, 2, 4], vec![2, 3, 5], vec![1, 3, 4], vec![1, 3, 5], vec![2, 4, 5],
        ];
        let h = homology(&Complex::new(labels(6), f));
        assert_eq!(h.betti, vec![1, 0, 0]);
        assert_eq!(h.torsion[1], vec![BigInt::from(2)]);
    }

    #[test]
    fn smith_of_small_matrix() {
        let a = vec![vec![BigInt::from(2), BigInt::from(4)], vec![BigInt::from(6), BigInt::from(8)]];
        assert_eq!(smith_diagonal(a), vec![BigInt::from(2), BigInt::from(4)]);
    }
}

use super::{assemble, ConeError, ConeHRep, ConeLattice};
use crate::rational::{dot, kernel, primitive, rank, Q};
use num_traits::{Signed, Zero};
use std::collections::BTreeSet;

const MAX_DIM: usize = 5;
const MAX_ROWS: usize = 16;

fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            go(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, m, k, &mut Vec::new(), &mut out);
    out
}

/// Independent enumeration: candidate rays from every row subset of rank
/// `rank - 1`, then every face as the rays tight on some row subset.
pub fn brute_force_oracle(h: &ConeHRep) -> Result<ConeLattice, ConeError> {
    if h.dim > MAX_DIM || h.rows.len() > MAX_ROWS {
        return Err(ConeError::TooLarge(format!("oracle limited to dimension {MAX_DIM} and {MAX_ROWS} rows")));
    }
    let (_, _, rows_y) = h.quotient();
    let r = h.rank;
    let mut rays: BTreeSet<Vec<Q>> = BTreeSet::new();
    if r > 0 {
        for sub in subsets(rows_y.len(), r - 1) {
            let m: Vec<Vec<Q>> = sub.iter().map(|&i| rows_y[i].clone()).collect();
            if rank(&m) != r - 1 {
                continue;
            }
            let k = if m.is_empty() { vec![vec![Q::from_integer(1.into())]] } else { kernel(&m, r) };
            let y = &k[0];
            let signs: Vec<Q> = rows_y.iter().map(|c| dot(c, y)).collect();
            let y = if signs.iter().all(|s| !s.is_negative()) {
                y.clone()
            } else if signs.iter().all(|s| !s.is_positive()) {
                y.iter().map(|x| -x).collect()
            } else {
                continue;
            };
            rays.insert(primitive(&y));
        }
    }
    let rays: Vec<Vec<Q>> = rays.into_iter().collect();
    let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
    for mask in 0u32..(1 << rows_y.len()) {
        let f: Vec<usize> = (0..rays.len())
            .filter(|&v| (0..rows_y.len()).all(|i| mask >> i & 1 == 0 || dot(&rows_y[i], &rays[v]).is_zero()))
            .collect();
        if !f.is_empty() {
            faces.insert(f);
        }
    }
    Ok(assemble(h.clone(), rays, faces))
}

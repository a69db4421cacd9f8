use super::{assemble, ConeError, ConeHRep, ConeLattice};
use crate::rational::{dot, inverse, primitive, rank, Q};
use num_traits::{Signed, Zero};
use std::collections::BTreeSet;

pub(crate) const MAX_DIM: usize = 10;
pub(crate) const MAX_ROWS: usize = 128;

struct Ray {
    y: Vec<Q>,
    zeros: u128,
}

fn zero_set(rows: &[Vec<Q>], done: u128, y: &[Q]) -> u128 {
    (0..rows.len()).filter(|&i| done >> i & 1 == 1 && dot(&rows[i], y).is_zero()).fold(0, |z, i| z | 1 << i)
}

/// Extreme rays of the pointed cone `{y : c_i · y ≥ 0}` of full dimension.
pub(crate) fn extreme_rays(rows: &[Vec<Q>], r: usize) -> Vec<Vec<Q>> {
    if r == 0 {
        return Vec::new();
    }
    let mut basis: Vec<usize> = Vec::new();
    for i in 0..rows.len() {
        let mut trial: Vec<Vec<Q>> = basis.iter().map(|&b| rows[b].clone()).collect();
        trial.push(rows[i].clone());
        if rank(&trial) == trial.len() {
            basis.push(i);
        }
        if basis.len() == r {
            break;
        }
    }
    let cb: Vec<Vec<Q>> = basis.iter().map(|&b| rows[b].clone()).collect();
    let inv = inverse(&cb).expect("basis rows are independent");
    let mut done: u128 = basis.iter().fold(0, |z, &b| z | 1 << b);
    let mut rays: Vec<Ray> = (0..r)
        .map(|j| {
            let y: Vec<Q> = primitive(&(0..r).map(|i| inv[i][j].clone()).collect::<Vec<_>>());
            Ray { zeros: zero_set(rows, done, &y), y }
        })
        .collect();
    for i in 0..rows.len() {
        if done >> i & 1 == 1 {
            continue;
        }
        let s: Vec<Q> = rays.iter().map(|ray| dot(&rows[i], &ray.y)).collect();
        let mut next: Vec<Ray> = Vec::new();
        for (k, ray) in rays.iter().enumerate() {
            if !s[k].is_negative() {
                let zeros = if s[k].is_zero() { ray.zeros | 1 << i } else { ray.zeros };
                next.push(Ray { y: ray.y.clone(), zeros });
            }
        }
        for p in 0..rays.len() {
            if !s[p].is_positive() {
                continue;
            }
            for n in 0..rays.len() {
                if !s[n].is_negative() {
                    continue;
                }
                let common = rays[p].zeros & rays[n].zeros;
                if (common.count_ones() as usize) + 2 < r {
                    continue;
                }
                let blocked = (0..rays.len()).any(|k| k != p && k != n && rays[k].zeros & common == common);
                if blocked {
                    continue;
                }
                let y: Vec<Q> = rays[n].y.iter().zip(&rays[p].y).map(|(yn, yp)| &s[p] * yn - &s[n] * yp).collect();
                let y = primitive(&y);
                next.push(Ray { zeros: common | 1 << i, y });
            }
        }
        done |= 1 << i;
        rays = next;
    }
    let mut out: Vec<Vec<Q>> = rays.into_iter().map(|r| r.y).collect();
    out.sort();
    out.dedup();
    out
}

/// Face lattice by double description in the lineality quotient.
pub fn face_lattice(h: &ConeHRep) -> Result<ConeLattice, ConeError> {
    if h.dim > MAX_DIM || h.rows.len() > MAX_ROWS {
        return Err(ConeError::TooLarge(format!("dimension {} with {} rows", h.dim, h.rows.len())));
    }
    let (_, _, rows_y) = h.quotient();
    let rays = extreme_rays(&rows_y, h.rank);
    let full = rank(&rays);
    let on_row = |i: usize| -> Vec<usize> { (0..rays.len()).filter(|&v| dot(&rows_y[i], &rays[v]).is_zero()).collect() };
    let mut facets: BTreeSet<Vec<usize>> = BTreeSet::new();
    for i in 0..rows_y.len() {
        let vs = on_row(i);
        if vs.len() == rays.len() {
            continue;
        }
        let span: Vec<Vec<Q>> = vs.iter().map(|&v| rays[v].clone()).collect();
        if rank(&span) + 1 == full {
            facets.insert(vs);
        }
    }
    let mut faces: BTreeSet<Vec<usize>> = facets.clone();
    let mut queue: Vec<Vec<usize>> = facets.iter().cloned().collect();
    while let Some(f) = queue.pop() {
        for g in &facets {
            let meet: Vec<usize> = f.iter().copied().filter(|v| g.contains(v)).collect();
            if !meet.is_empty() && faces.insert(meet.clone()) {
                queue.push(meet);
            }
        }
    }
    Ok(assemble(h.clone(), rays, faces))
}

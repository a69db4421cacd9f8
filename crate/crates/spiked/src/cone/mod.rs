//! Exact polyhedral cones `{v : ℓ_i(v) ≥ 0}` and their projectivized face
//! lattices.
//!
//! Rays are computed in the quotient by the lineality space, where the cone is
//! pointed; each face is stored by its tight rows and incident vertex rays.

mod dd;
mod dominance;
mod oracle;
mod svg;

pub use dd::face_lattice;

/// Largest chart dimension handled by the exact engine.
pub const MAX_CONE_DIM: usize = dd::MAX_DIM;
pub use dominance::{dominance_check, DominanceEntry, DominanceReport, DominanceStatus};
pub use oracle::brute_force_oracle;
pub use svg::prism_svg;

use crate::geometry::{ChartIndex, LengthFunctional};
use crate::surface::SurfaceSpec;
use crate::rational::{format_q, kernel, primitive, rank, row_reduce, Q};
use num_traits::Zero;
use serde_json::json;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ConeError {
    #[error("functional of length {found} in a cone of dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("cone too large: {0}")]
    TooLarge(String),
}

/// One inequality, possibly shared by several connections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeRow {
    pub labels: Vec<String>,
    pub coeffs: Vec<Q>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeHRep {
    pub dim: usize,
    pub rows: Vec<ConeRow>,
    /// Rank of the row space.
    pub rank: usize,
    /// Basis of the common kernel of all rows.
    pub lineality: Vec<Vec<Q>>,
}

pub fn build_cone(dim: usize, functionals: &[(String, Vec<Q>)]) -> Result<ConeHRep, ConeError> {
    let mut rows: Vec<ConeRow> = Vec::new();
    for (label, coeffs) in functionals {
        if coeffs.len() != dim {
            return Err(ConeError::DimensionMismatch { expected: dim, found: coeffs.len() });
        }
        let key = primitive(coeffs);
        match rows.iter_mut().find(|r| r.coeffs == key) {
            Some(r) => r.labels.push(label.clone()),
            None => rows.push(ConeRow { labels: vec![label.clone()], coeffs: key }),
        }
    }
    let matrix: Vec<Vec<Q>> = rows.iter().map(|r| r.coeffs.clone()).collect();
    let rank = rank(&matrix);
    let lineality = kernel(&matrix, dim);
    Ok(ConeHRep { dim, rows, rank, lineality })
}

pub fn cone_from_functionals(s: &SurfaceSpec, fs: &[LengthFunctional]) -> Result<ConeHRep, ConeError> {
    let pairs: Vec<(String, Vec<Q>)> = fs.iter().map(|f| (f.beta.label(s), f.coeffs.clone())).collect();
    build_cone(ChartIndex::new(s).dim, &pairs)
}

impl ConeHRep {
    pub fn is_properly_convex(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn row_of(&self, label: &str) -> Option<usize> {
        self.rows.iter().position(|r| r.labels.iter().any(|l| l == label))
    }

    /// Coordinates on the quotient by the lineality space: the row space is
    /// brought to reduced echelon form `E`, and `y = E v`.  Returns `E`, its
    /// pivot columns, and every row expressed in `y`.
    pub(crate) fn quotient(&self) -> (Vec<Vec<Q>>, Vec<usize>, Vec<Vec<Q>>) {
        let mut e: Vec<Vec<Q>> = self.rows.iter().map(|r| r.coeffs.clone()).collect();
        let pivots = row_reduce(&mut e);
        e.truncate(pivots.len());
        let rows_y = self.rows.iter().map(|r| pivots.iter().map(|&p| r.coeffs[p].clone()).collect()).collect();
        (e, pivots, rows_y)
    }

    /// A representative in the full chart of a quotient vector.
    pub(crate) fn lift(&self, pivots: &[usize], y: &[Q]) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim];
        for (&p, x) in pivots.iter().zip(y) {
            v[p] = x.clone();
        }
        v
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ConeFace {
    /// Rows vanishing on the face.
    pub tight: Vec<usize>,
    /// Incident vertex rays.
    pub verts: Vec<usize>,
    /// Dimension of the projectivized face after the lineality quotient.
    pub dim: isize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeLattice {
    pub hrep: ConeHRep,
    /// Vertex rays in the full chart, primitive integer vectors.
    pub rays: Vec<Vec<Q>>,
    /// Faces ordered by dimension then vertex set; the last one is the whole cone.
    pub faces: Vec<ConeFace>,
}

/// Shared assembly from vertex rays given in quotient coordinates.
pub(crate) fn assemble(hrep: ConeHRep, rays_y: Vec<Vec<Q>>, faces: BTreeSet<Vec<usize>>) -> ConeLattice {
    let (_, pivots, rows_y) = hrep.quotient();
    let total = rays_y.len();
    // the apex is a facet of a half-line and the sphere at infinity when
    // there is a lineality space; otherwise it is not counted
    let mut all: BTreeSet<Vec<usize>> = faces.into_iter().filter(|f| !f.is_empty()).collect();
    all.insert((0..total).collect());
    if rank(&rays_y) == 1 || !hrep.lineality.is_empty() {
        all.insert(Vec::new());
    }
    let mut out: Vec<ConeFace> = all
        .into_iter()
        .map(|verts| {
            let tight = (0..rows_y.len())
                .filter(|&i| verts.iter().all(|&v| crate::rational::dot(&rows_y[i], &rays_y[v]).is_zero()))
                .collect();
            let span: Vec<Vec<Q>> = verts.iter().map(|&v| rays_y[v].clone()).collect();
            ConeFace { tight, verts, dim: rank(&span) as isize - 1 }
        })
        .collect();
    out.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| a.verts.cmp(&b.verts)));
    let rays = rays_y.iter().map(|y| primitive(&hrep.lift(&pivots, y))).collect();
    ConeLattice { hrep, rays, faces: out }
}

impl ConeLattice {
    pub fn lineality_dim(&self) -> usize {
        self.hrep.lineality.len()
    }

    pub fn top(&self) -> &ConeFace {
        self.faces.last().expect("top face")
    }

    /// Projective dimension of the quotient polytope.
    pub fn dim(&self) -> isize {
        self.top().dim
    }

    pub fn facets(&self) -> Vec<&ConeFace> {
        let d = self.dim();
        self.faces.iter().filter(|f| f.dim == d - 1).collect()
    }

    /// Labels carried by the rows that cut out some facet.
    pub fn facet_labels(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for f in self.facets() {
            for &t in &f.tight {
                if self.vertices_on_row(t) == f.verts && !self.top().tight.contains(&t) {
                    out.extend(self.hrep.rows[t].labels.iter().cloned());
                }
            }
        }
        out
    }

    pub fn vertices_on_row(&self, row: usize) -> Vec<usize> {
        let c = &self.hrep.rows[row].coeffs;
        (0..self.rays.len()).filter(|&v| crate::rational::dot(c, &self.rays[v]).is_zero()).collect()
    }

    /// Face counts by projective dimension `0..=dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        (0..=self.dim().max(-1)).map(|d| self.faces.iter().filter(|f| f.dim == d).count()).collect()
    }

    /// Face counts by dimension as suspensions of the lineality sphere,
    /// `-1..=dim + lineality`; zero below the sphere at infinity.
    pub fn sphere_f_vector(&self) -> Vec<usize> {
        let lin = self.lineality_dim() as isize;
        (-1..=self.dim() + lin).map(|d| self.faces.iter().filter(|f| f.dim + lin == d).count()).collect()
    }

    /// Number of facets through a vertex ray.
    pub fn vertex_degree(&self, v: usize) -> usize {
        self.facets().iter().filter(|f| f.verts.contains(&v)).count()
    }

    pub fn is_simple_vertex(&self, v: usize) -> bool {
        self.vertex_degree(v) as isize <= self.dim()
    }

    pub fn face_by_tight(&self, tight: &BTreeSet<usize>) -> Option<usize> {
        self.faces.iter().position(|f| f.tight.iter().copied().collect::<BTreeSet<_>>() == *tight)
    }

    /// Whether two lattices over the same rows have the same faces.
    pub fn same_faces(&self, other: &ConeLattice) -> bool {
        let key = |l: &ConeLattice| -> BTreeSet<(Vec<usize>, isize)> { l.faces.iter().map(|f| (f.tight.clone(), f.dim)).collect() };
        key(self) == key(other)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let qs = |v: &[Q]| v.iter().map(format_q).collect::<Vec<_>>();
        json!({
            "dim": self.hrep.dim,
            "rank": self.hrep.rank,
            "lineality": self.hrep.lineality.iter().map(|v| qs(v)).collect::<Vec<_>>(),
            "rows": self.hrep.rows.iter().map(|r| json!({
                "beta": r.labels.join("="),
                "labels": r.labels,
                "coeffs": qs(&r.coeffs),
            })).collect::<Vec<_>>(),
            "vertices": self.rays.iter().map(|v| qs(v)).collect::<Vec<_>>(),
            "faces": self.faces.iter().map(|f| json!({
                "tight": f.tight,
                "verts": f.verts,
                "dim": f.dim,
                "sphere_dim": f.dim + self.lineality_dim() as isize,
            })).collect::<Vec<_>>(),
            "f_vector": self.f_vector(),
            "sphere_f_vector": self.sphere_f_vector(),
        })
    }
}

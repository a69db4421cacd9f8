use super::ConeLattice;
use crate::rational::{dot, primitive, Q};
use num_traits::{Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DominanceStatus {
    /// Nonnegative on the cone and cutting out no facet.
    Redundant,
    /// A positive multiple of an existing row.
    SameRow(Vec<String>),
    /// Tight exactly on the facet cut out by these rows.
    SameFacet(Vec<String>),
    /// Negative somewhere on the cone.
    Violated,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominanceEntry {
    pub label: String,
    pub status: DominanceStatus,
    pub tight_vertices: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DominanceReport {
    pub entries: Vec<DominanceEntry>,
}

impl DominanceReport {
    pub fn violations(&self) -> Vec<&DominanceEntry> {
        self.entries.iter().filter(|e| e.status == DominanceStatus::Violated).collect()
    }

    pub fn is_consistent(&self) -> bool {
        self.violations().is_empty()
    }
}

/// Classifies extra constraints against the cone of the lattice.
pub fn dominance_check(lat: &ConeLattice, extra: &[(String, Vec<Q>)]) -> DominanceReport {
    let mut entries = Vec::new();
    for (label, coeffs) in extra {
        let values: Vec<Q> = lat.rays.iter().map(|v| dot(coeffs, v)).collect();
        let tight_vertices: Vec<usize> = (0..values.len()).filter(|&i| values[i].is_zero()).collect();
        let key = primitive(coeffs);
        let status = if let Some(row) = lat.hrep.rows.iter().find(|r| r.coeffs == key) {
            DominanceStatus::SameRow(row.labels.clone())
        } else if values.iter().any(Signed::is_negative) || lat.hrep.lineality.iter().any(|l| !dot(coeffs, l).is_zero()) {
            DominanceStatus::Violated
        } else if let Some(f) = lat.facets().into_iter().find(|f| f.verts == tight_vertices) {
            let labels = f
                .tight
                .iter()
                .filter(|&&t| lat.vertices_on_row(t) == f.verts)
                .flat_map(|&t| lat.hrep.rows[t].labels.clone())
                .collect();
            DominanceStatus::SameFacet(labels)
        } else {
            DominanceStatus::Redundant
        };
        entries.push(DominanceEntry { label: label.clone(), status, tight_vertices });
    }
    DominanceReport { entries }
}

use super::{CorrespondError, VerificationReport};
use crate::complex::{certify_type, join, marked_arc_complex, CertifiedType, Complex};
use crate::cone::ConeLattice;
use crate::geometry::{strip_vector, DecoratedMetric};
use crate::rational::{dot, primitive, rank, Q};
use crate::surface::{cut_along, enumerate_arcs, enumerate_spread_subsets, Arc, Beta, Family, SurfaceError, SurfaceSpec};
use num_traits::{Signed, Zero};
use std::collections::BTreeSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeElement {
    /// Support of the spread subset; empty for the top face.
    pub support: Vec<Beta>,
    pub arcs: Vec<Arc>,
    pub complex: Complex,
    pub certified: Option<CertifiedType>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombinatorialLattice {
    pub surface: SurfaceSpec,
    /// Spread subsets by support size, then the top face.
    pub elements: Vec<LatticeElement>,
}

impl CombinatorialLattice {
    /// Face order: `i ≤ j` when the support of `i` contains that of `j`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        let a: BTreeSet<&Beta> = self.elements[i].support.iter().collect();
        self.elements[j].support.iter().all(|b| a.contains(b))
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// The face lattice predicted from spread subsets.  With `certify`, every
/// face complex is also certified as a ball or sphere.
pub fn combinatorial_lattice(s: &SurfaceSpec, certify: bool) -> CombinatorialLattice {
    let mut elements: Vec<LatticeElement> = enumerate_spread_subsets(s)
        .into_iter()
        .map(|p| {
            let (complex, arcs) = marked_arc_complex(s, p.support());
            LatticeElement { support: p.support().to_vec(), arcs, complex, certified: None }
        })
        .collect();
    let (complex, arcs) = marked_arc_complex(s, &[]);
    elements.push(LatticeElement { support: Vec::new(), arcs, complex, certified: None });
    if certify {
        for e in &mut elements {
            e.certified = Some(certify_type(&e.complex));
        }
    }
    CombinatorialLattice { surface: s.clone(), elements }
}

/// The face complex of a single connection, assembled as the join of the
/// marked arc complexes of the pieces obtained by cutting along it.
pub fn join_formula_complex(s: &SurfaceSpec, beta: &Beta) -> Result<Complex, SurfaceError> {
    let pieces = cut_along(s, &[*beta])?;
    let mut out = Complex::void();
    for (k, p) in pieces.iter().enumerate() {
        let (c, _) = marked_arc_complex(&p.surface, &p.marked);
        let renamed = Complex::new(c.vertices.iter().map(|v| format!("{k}:{v}")).collect(), c.maximal.clone());
        out = join(&out, &renamed);
    }
    Ok(out)
}

/// Vertex rays in quotient coordinates; rays are stored as lifts, so these
/// are their pivot entries.
fn quotient_coords(lat: &ConeLattice, v: &[Q]) -> Vec<Q> {
    let (e, _, _) = lat.hrep.quotient();
    e.iter().map(|row| dot(row, v)).collect()
}

/// The arc whose strip deformation spans each vertex ray, if any.
pub fn vertex_arcs(lat: &ConeLattice, m: &DecoratedMetric) -> Result<Vec<Option<Arc>>, CorrespondError> {
    let s = &m.surface;
    let images: Vec<(Arc, Vec<Q>)> = enumerate_arcs(s)
        .into_iter()
        .map(|a| Ok((a, primitive(&quotient_coords(lat, &strip_vector(m, &a)?)))))
        .collect::<Result<_, CorrespondError>>()?;
    Ok(lat
        .rays
        .iter()
        .map(|r| {
            let y = primitive(&quotient_coords(lat, r));
            images.iter().find(|(_, im)| *im == y).map(|(a, _)| *a)
        })
        .collect())
}

/// Matches spread subsets with faces of the cone and checks order, dimension
/// and the image of each face complex under the strip map.
pub fn compare_lattices(comb: &CombinatorialLattice, geo: &ConeLattice, m: &DecoratedMetric) -> Result<VerificationReport, CorrespondError> {
    let s = &comb.surface;
    if s.family == Family::Moebius {
        return Err(CorrespondError::MissingGeometry);
    }
    let tag = s.label();
    let mut rep = VerificationReport::default();
    let simple: BTreeSet<String> = crate::surface::enumerate_simple_betas(s).iter().map(|b| b.label(s)).collect();
    let lin = geo.lineality_dim() as isize;
    let top = geo.faces.len() - 1;
    let faces: Vec<usize> = (0..geo.faces.len()).filter(|&f| geo.faces[f].dim + lin >= 0 || f == top).collect();
    let face_support = |f: usize| -> BTreeSet<String> {
        geo.faces[f].tight.iter().flat_map(|&t| geo.hrep.rows[t].labels.iter().cloned()).filter(|l| simple.contains(l)).collect()
    };
    let mapping: Vec<Option<usize>> = comb
        .elements
        .iter()
        .map(|e| {
            let want: BTreeSet<String> = e.support.iter().map(|b| b.label(s)).collect();
            faces.iter().copied().find(|&f| face_support(f) == want)
        })
        .collect();
    rep.check(format!("{tag}.lattice.size"), "face lattice", comb.len(), faces.len());
    let matched: BTreeSet<usize> = mapping.iter().flatten().copied().collect();
    let unmatched = mapping.iter().filter(|x| x.is_none()).count();
    rep.check(
        format!("{tag}.lattice.bijection"),
        "face lattice",
        format!("0 unmatched, {} distinct images", comb.len()),
        format!("{unmatched} unmatched, {} distinct images", matched.len()),
    );
    if unmatched > 0 {
        return Ok(rep);
    }
    let mapping: Vec<usize> = mapping.into_iter().flatten().collect();
    let mut bad_order = 0;
    for i in 0..comb.len() {
        for j in 0..comb.len() {
            let fi: BTreeSet<usize> = geo.faces[mapping[i]].verts.iter().copied().collect();
            let inside = geo.faces[mapping[j]].verts.iter().copied().collect::<BTreeSet<_>>().is_superset(&fi);
            if comb.leq(i, j) != inside {
                bad_order += 1;
            }
        }
    }
    rep.check(format!("{tag}.lattice.order"), "reverse inclusion of supports", 0, bad_order);
    let bad_dim = (0..comb.len()).filter(|&i| geo.faces[mapping[i]].dim + lin != comb.elements[i].complex.dim()).count();
    rep.check(format!("{tag}.lattice.dimension"), "face dimension", 0, bad_dim);
    let mut bad_strip = 0;
    for (i, e) in comb.elements.iter().enumerate() {
        let face = &geo.faces[mapping[i]];
        let mut images = Vec::new();
        for a in &e.arcs {
            let v = strip_vector(m, a)?;
            let ok = geo.hrep.rows.iter().enumerate().all(|(t, row)| {
                let x = dot(&row.coeffs, &v);
                if face.tight.contains(&t) { x.is_zero() } else { !x.is_negative() }
            });
            if !ok {
                bad_strip += 1;
            }
            images.push(quotient_coords(geo, &v));
        }
        if rank(&images) as isize != face.dim + 1 {
            bad_strip += 1;
        }
    }
    rep.check(format!("{tag}.lattice.strip"), "strip map onto faces", 0, bad_strip);
    Ok(rep)
}

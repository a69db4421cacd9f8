use super::{combinatorial_lattice, compare_lattices, predicted_facets, predicted_vertices, vertex_arcs, CorrespondError, VerificationReport};
use crate::cone::{cone_from_functionals, dominance_check, face_lattice, ConeLattice, DominanceReport, DominanceStatus};
use crate::geometry::{length_differential, random_metric, DecoratedMetric};
use crate::surface::{enumerate_simple_betas, Arc, Beta, Family, SurfaceSpec};
use std::collections::BTreeSet;

/// Which decoration patterns a grid run covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RMode {
    Full,
    All,
}

/// Connections turning `1..=kmax` extra times around the puncture or hole.
pub fn wrapped_betas(s: &SurfaceSpec, kmax: u32) -> Vec<Beta> {
    if !matches!(s.family, Family::PuncturedPolygon | Family::Crown) {
        return Vec::new();
    }
    let dec: Vec<usize> = (0..s.n).filter(|&i| s.decorations[i]).collect();
    let mut out = Vec::new();
    for wrap in 1..=kmax {
        for &from in &dec {
            for &to in &dec {
                out.push(Beta::Connection { from, to, wrap });
            }
        }
    }
    out
}

/// The cone cut out by simple connections, and how wrapped connections up
/// to `kmax` sit against it.
pub fn admissible_cone(m: &DecoratedMetric, kmax: u32) -> Result<(ConeLattice, DominanceReport), CorrespondError> {
    let s = &m.surface;
    let fs = enumerate_simple_betas(s).iter().map(|b| length_differential(m, b)).collect::<Result<Vec<_>, _>>()?;
    let lat = face_lattice(&cone_from_functionals(s, &fs)?)?;
    let extra = wrapped_betas(s, kmax)
        .iter()
        .map(|b| Ok((b.label(s), length_differential(m, b)?.coeffs)))
        .collect::<Result<Vec<_>, CorrespondError>>()?;
    let dom = dominance_check(&lat, &extra);
    Ok((lat, dom))
}

/// Whether the wrapped connection is one of the loops around the puncture
/// from a single spike, whose row is that of the monogon boundary.
fn monogon_family(s: &SurfaceSpec, label: &str) -> bool {
    s.family == Family::PuncturedPolygon && (0..s.n).any(|i| label.starts_with(&format!("B:{0}>{0}:", i + 1)))
}

fn census(lat: &ConeLattice, arcs: &[Option<Arc>]) -> (usize, usize, usize, BTreeSet<usize>) {
    let (mut sep, mut nonsep, mut non) = (0, 0, 0);
    let mut degs = BTreeSet::new();
    for v in 0..lat.rays.len() {
        if lat.is_simple_vertex(v) {
            if matches!(arcs[v], Some(Arc::ToCore { .. })) {
                nonsep += 1;
            } else {
                sep += 1;
            }
        } else {
            non += 1;
            degs.insert(lat.vertex_degree(v));
        }
    }
    (sep, nonsep, non, degs)
}

fn degrees(d: &BTreeSet<usize>) -> String {
    if d.is_empty() {
        String::new()
    } else {
        format!(" ({})", d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
    }
}

/// Every check that applies to one surface.
pub fn verify_instance(s: &SurfaceSpec, seed: u64, kmax: u32) -> Result<VerificationReport, CorrespondError> {
    let tag = s.label();
    let mut rep = VerificationReport::default();
    rep.check(format!("{tag}.count"), "simple connection count", s.simple_beta_count(), enumerate_simple_betas(s).len());
    if s.family == Family::Moebius {
        let comb = combinatorial_lattice(s, false);
        let note = format!("no geometry; {} faces", comb.len());
        rep.report_only(format!("{tag}.geometry"), "Möbius strips", &note, &note);
        return Ok(rep);
    }
    if s.dimension() > crate::cone::MAX_CONE_DIM {
        return Ok(rep);
    }
    let m = random_metric(s, seed)?;
    let (lat, dom) = admissible_cone(&m, kmax)?;
    rep.check(format!("{tag}.facets"), "facet classification", join(&predicted_facets(s)), join(&lat.facet_labels()));
    let dominated = dom
        .entries
        .iter()
        .filter(|e| match &e.status {
            DominanceStatus::Redundant => true,
            DominanceStatus::SameRow(_) | DominanceStatus::SameFacet(_) => monogon_family(s, &e.label),
            DominanceStatus::Violated => false,
        })
        .count();
    rep.check(format!("{tag}.dominance.k{kmax}"), "wrapped connections", dom.entries.len(), dominated);
    let lin = predicted_lineality(s);
    rep.check(format!("{tag}.properly-convex"), "lineality", lin == 0, lat.hrep.is_properly_convex());
    rep.check(format!("{tag}.lineality"), "lineality", lin, lat.lineality_dim());
    if s.dimension() <= 6 {
        rep.extend(compare_lattices(&combinatorial_lattice(s, false), &lat, &m)?);
    }
    if s.is_fully_decorated() {
        let predicted = predicted_vertices(s)?;
        let arcs = vertex_arcs(&lat, &m)?;
        let want: BTreeSet<String> = predicted.iter().map(|p| p.label.clone()).collect();
        let got: BTreeSet<String> = arcs.iter().map(|a| a.map_or("?".to_string(), |a| a.label(s))).collect();
        rep.check(format!("{tag}.vertices"), "vertex classification", join(&want), join(&got));
        let mut bad = 0;
        for (v, a) in arcs.iter().enumerate() {
            let Some(p) = predicted.iter().find(|p| Some(p.arc) == *a) else { continue };
            let d = lat.vertex_degree(v);
            if p.degree != d || p.formula_degree.is_some_and(|f| f != d) {
                bad += 1;
            }
        }
        rep.check(format!("{tag}.degrees"), "vertex degrees", 0, bad);
    }
    Ok(rep)
}

/// Dimension of the motions invisible to every connection: the chart
/// dimension minus that of the fully decorated surface on the decorated
/// spikes alone.  This is `n - r` once enough spikes are decorated.
pub fn predicted_lineality(s: &SurfaceSpec) -> usize {
    let r = s.r() as isize;
    let core = match s.family {
        Family::Polygon => (2 * r - 3).max(0),
        Family::PuncturedPolygon => (2 * r - 1).max(0),
        _ => (2 * r).max(1),
    };
    (s.dimension() as isize - core) as usize
}

fn join(set: &BTreeSet<String>) -> String {
    set.iter().cloned().collect::<Vec<_>>().join(" ")
}

/// Vertex census of a fully decorated cone: simple separating, simple
/// non-separating, non-simple, and the degrees of the non-simple ones.
pub fn vertex_census(s: &SurfaceSpec, seed: u64) -> Result<(usize, usize, usize, BTreeSet<usize>), CorrespondError> {
    let m = random_metric(s, seed)?;
    let (lat, _) = admissible_cone(&m, 0)?;
    let arcs = vertex_arcs(&lat, &m)?;
    Ok(census(&lat, &arcs))
}

/// Counting table over all decoration patterns, the vertex tables, and the
/// per-instance checks over a grid.
pub fn verify_tables(families: &[Family], nmax: usize, mode: RMode, seed: u64, kmax: u32) -> Result<VerificationReport, CorrespondError> {
    let mut rep = VerificationReport::default();
    for &f in families {
        for n in f.min_spikes()..=nmax {
            let bad = (0..1u64 << n)
                .filter(|&mask| {
                    let s = SurfaceSpec::from_mask(f, n, mask).expect("valid");
                    s.simple_beta_count() != enumerate_simple_betas(&s).len()
                })
                .count();
            rep.check(format!("{}.n{n}.count-table", f.name()), "simple connection count", 0, bad);
        }
    }
    let cells: &[(Family, usize, &str, bool)] = &[
        (Family::Polygon, 3, "simple 3, non-simple 0", true),
        (Family::Polygon, 4, "simple 4, non-simple 0", false),
        (Family::Polygon, 5, "simple 5, non-simple 10 (7)", true),
        (Family::PuncturedPolygon, 1, "simple 1, non-simple 0", true),
        (Family::PuncturedPolygon, 2, "simple 4, non-simple 0", true),
        (Family::PuncturedPolygon, 3, "simple 6, non-simple 6 (5)", true),
        (Family::Crown, 1, "simple 1+1, non-simple 0", true),
        (Family::Crown, 2, "simple 4+2, non-simple 0", true),
        (Family::Crown, 3, "simple 6+0, non-simple 6 (5)", false),
    ];
    for &(f, n, paper, asserted) in cells {
        if !families.contains(&f) || n > nmax {
            continue;
        }
        let s = SurfaceSpec::fully_decorated(f, n).expect("valid");
        let (sep, nonsep, non, degs) = vertex_census(&s, seed)?;
        let computed = if f == Family::Crown {
            format!("simple {sep}+{nonsep}, non-simple {non}{}", degrees(&degs))
        } else {
            format!("simple {}, non-simple {non}{}", sep + nonsep, degrees(&degs))
        };
        if asserted {
            rep.check(format!("{}.n{n}.vertex-table", f.name()), "vertex census", paper, computed);
        } else {
            rep.report_only(format!("{}.n{n}.vertex-table", f.name()), "vertex census", paper, computed);
        }
    }
    if families.contains(&Family::Polygon) && nmax >= 6 {
        let s = SurfaceSpec::fully_decorated(Family::Polygon, 6).expect("valid");
        let (sep, nonsep, _, _) = vertex_census(&s, seed)?;
        rep.check("polygon.n6.all-non-simple", "vertex census", 0, sep + nonsep);
    }
    for &f in families {
        for n in f.min_spikes()..=nmax {
            let masks: Vec<u64> = match mode {
                RMode::Full => vec![(1u64 << n) - 1],
                RMode::All => (0..1u64 << n).collect(),
            };
            for mask in masks {
                let s = SurfaceSpec::from_mask(f, n, mask).expect("valid");
                if s.dimension() > crate::cone::MAX_CONE_DIM {
                    continue;
                }
                rep.extend(verify_instance(&s, seed, kmax)?);
            }
        }
    }
    Ok(rep)
}

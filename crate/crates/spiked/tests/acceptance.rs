//! One line per acceptance criterion, each computed from scratch against
//! oracles that live in this file.

use spiked::complex::{
    arc_complex, bicolored_model, certify_type, marked_arc_complex, strong_collapse, strong_collapse_with_order, BicoloredKind, CertifiedType,
    Complex,
};
use spiked::cone::{ConeLattice, DominanceStatus};
use spiked::correspond::{admissible_cone, admissible_marks, combinatorial_lattice, predicted_facets, prop33_prediction};
use spiked::geometry::{
    geodesic_arc_beta_disjoint, geodesic_arcs_disjoint, geodesic_betas_cross, length_differential, length_from_coordinates, random_metric,
    strip_vector,
};
use spiked::rational::{determinant, q, to_f64};
use spiked::surface::{arc_beta_disjoint, arcs_disjoint, betas_cross, enumerate_arcs, enumerate_simple_betas, Beta, Family, SurfaceSpec};
use std::collections::{BTreeMap, BTreeSet};
use std::io::Write;

const ALL: [Family; 4] = [Family::Polygon, Family::PuncturedPolygon, Family::Crown, Family::Moebius];
const ORIENTABLE: [Family; 3] = [Family::Polygon, Family::PuncturedPolygon, Family::Crown];

/// Every decoration pattern of every family with `n + r <= bound` (and `n <= nmax`).
fn surfaces(families: &[Family], nmax: usize, bound: usize) -> Vec<SurfaceSpec> {
    let mut out = Vec::new();
    for &f in families {
        for n in f.min_spikes()..=nmax {
            for mask in 0..(1u64 << n) {
                let s = SurfaceSpec::from_mask(f, n, mask).unwrap();
                if n + s.r() <= bound {
                    out.push(s);
                }
            }
        }
    }
    out
}

fn expected_count(f: Family, r: usize) -> usize {
    match f {
        Family::Polygon => r * r.saturating_sub(1) / 2,
        Family::PuncturedPolygon => r * r,
        Family::Crown => r * r + 1,
        Family::Moebius => r * (r + 1) / 2 + r * r + 1,
    }
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn counting_table() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for s in surfaces(&ALL, 8, usize::MAX) {
        count += 1;
        let got = enumerate_simple_betas(&s).len();
        if got != expected_count(s.family, s.r()) {
            bad.push(format!("{}: {got}", s.label()));
        }
    }
    outcome(bad.is_empty(), format!("{count} surfaces, {} wrong {:?}", bad.len(), bad.iter().take(3).collect::<Vec<_>>()))
}

fn simplices_and_determinants() -> Outcome {
    let (mut total, mut wrong_size, mut singular) = (0, 0, 0);
    for s in surfaces(&ORIENTABLE, 7, 7) {
        let dim = s.dimension();
        let m = random_metric(&s, 7).unwrap();
        let (c, arcs) = arc_complex(&s);
        let vectors: Vec<_> = arcs.iter().map(|a| strip_vector(&m, a).unwrap()).collect();
        for simplex in &c.maximal {
            total += 1;
            if simplex.len() != dim {
                wrong_size += 1;
                continue;
            }
            let mat: Vec<_> = simplex.iter().map(|&v| vectors[v].clone()).collect();
            if determinant(&mat) == q(0) {
                singular += 1;
            }
        }
    }
    outcome(wrong_size == 0 && singular == 0, format!("{total} maximal simplices, {wrong_size} of wrong size, {singular} singular"))
}

fn prediction_sweep() -> Outcome {
    let (mut ok, mut bad, mut inconclusive) = (0, 0, 0);
    for s in surfaces(&ALL, 6, 6) {
        let marks = admissible_marks(&s);
        for sub in 0..(1u64 << marks.len()) {
            let chosen: Vec<Beta> = (0..marks.len()).filter(|i| sub >> i & 1 == 1).map(|i| marks[i]).collect();
            let (c, _) = marked_arc_complex(&s, &chosen);
            let got = certify_type(&c);
            let want = prop33_prediction(&s, &chosen);
            let dim = s.dimension() as isize - 1 - chosen.len() as isize;
            let dim_ok = match &got {
                CertifiedType::Ball(d) | CertifiedType::Sphere(d) => *d as isize == dim,
                _ => true,
            };
            if got.is_inconclusive() {
                inconclusive += 1;
            } else if got == want && dim_ok {
                ok += 1;
            } else {
                bad += 1;
            }
        }
    }
    outcome(bad == 0, format!("{ok} match, {bad} mismatch, {inconclusive} inconclusive"))
}

fn cone(s: &SurfaceSpec, seed: u64) -> ConeLattice {
    admissible_cone(&random_metric(s, seed).unwrap(), 4).unwrap().0
}

fn row_labels(lat: &ConeLattice, tight: &[usize]) -> BTreeSet<String> {
    tight.iter().flat_map(|&r| lat.hrep.rows[r].labels.iter().cloned()).collect()
}

fn crown_prism() -> Outcome {
    let s = SurfaceSpec::fully_decorated(Family::Crown, 2).unwrap();
    let spread: Vec<BTreeSet<String>> = combinatorial_lattice(&s, false).elements.iter().map(|e| e.support.iter().map(|b| b.label(&s)).collect()).collect();
    let mut failures = Vec::new();
    let seeds = [1u64, 2, 3, 11];
    for &seed in &seeds {
        let lat = cone(&s, seed);
        let proper: Vec<_> = lat.faces.iter().filter(|f| !f.verts.is_empty()).collect();
        let fv: Vec<usize> = (0..3).map(|d| proper.iter().filter(|f| f.dim == d).count()).collect();
        let facets: Vec<_> = proper.iter().filter(|f| f.dim == 2).collect();
        let shapes = (facets.iter().filter(|f| f.verts.len() == 3).count(), facets.iter().filter(|f| f.verts.len() == 4).count());
        if fv != [6, 9, 5] || shapes != (2, 3) {
            failures.push(format!("seed {seed}: f {fv:?} shapes {shapes:?}"));
            continue;
        }
        // faces keyed by their tight connections; the top has none
        let by_support: BTreeMap<BTreeSet<String>, BTreeSet<usize>> =
            proper.iter().map(|f| (row_labels(&lat, &f.tight), f.verts.iter().copied().collect())).collect();
        let spread_set: BTreeSet<_> = spread.iter().cloned().collect();
        let face_set: BTreeSet<_> = by_support.keys().cloned().collect();
        if spread_set != face_set || spread.len() != by_support.len() {
            failures.push(format!("seed {seed}: {} spread subsets against {} faces", spread.len(), by_support.len()));
            continue;
        }
        for a in &spread {
            for b in &spread {
                let comb = a.is_superset(b);
                let geo = by_support[a].is_subset(&by_support[b]);
                if comb != geo {
                    failures.push(format!("seed {seed}: order differs at {a:?} {b:?}"));
                }
            }
        }
    }
    outcome(failures.is_empty(), format!("{} metrics checked, {:?}", seeds.len(), failures.iter().take(2).collect::<Vec<_>>()))
}

/// `(vertices, simple vertices, vertex count by degree)`.
fn census(s: &SurfaceSpec) -> (usize, usize, BTreeMap<usize, usize>) {
    let lat = cone(s, 1);
    let proj = lat.top().dim as usize;
    let verts: Vec<_> = lat.faces.iter().filter(|f| f.verts.len() == 1 && f.dim == 0).map(|f| *f.verts.iter().next().unwrap()).collect();
    let facets: Vec<_> = lat.faces.iter().filter(|f| f.dim == lat.top().dim - 1).collect();
    let mut simple = 0;
    let mut degrees = BTreeMap::new();
    for v in &verts {
        let d = facets.iter().filter(|f| f.verts.contains(v)).count();
        if d <= proj {
            simple += 1;
        }
        *degrees.entry(d).or_insert(0) += 1;
    }
    (verts.len(), simple, degrees)
}

fn full(f: Family, n: usize) -> SurfaceSpec {
    SurfaceSpec::fully_decorated(f, n).unwrap()
}

fn polygon_census() -> Outcome {
    let c3 = census(&full(Family::Polygon, 3));
    let c4 = census(&full(Family::Polygon, 4));
    let c5 = census(&full(Family::Polygon, 5));
    let c6 = census(&full(Family::Polygon, 6));
    let ok3 = c3.0 == 3 && c3.1 == 3;
    let ok5 = c5.0 == 15 && c5.1 == 5 && c5.2 == BTreeMap::from([(6, 5), (7, 10)]);
    let ok6 = c6.0 > 0 && c6.1 == 0;
    outcome(ok3 && ok5 && ok6, format!("(3,3) {c3:?}; (4,4) reported {c4:?}; (5,5) {c5:?}; (6,6) {} vertices, {} simple", c6.0, c6.1))
}

fn punctured_census() -> Outcome {
    let c1 = census(&full(Family::PuncturedPolygon, 1));
    let c2 = census(&full(Family::PuncturedPolygon, 2));
    let c3 = census(&full(Family::PuncturedPolygon, 3));
    let ok = c1.0 == 1 && c2.0 == 4 && c2.1 == 4 && c3.0 == 12 && c3.1 == 6 && c3.2.get(&5) == Some(&6);
    outcome(ok, format!("(1,1) {c1:?}; (2,2) {c2:?}; (3,3) {c3:?}"))
}

fn is_monogon_loop(s: &SurfaceSpec, label: &str) -> Option<String> {
    if s.family != Family::PuncturedPolygon {
        return None;
    }
    (1..=s.n).find(|i| label.starts_with(&format!("B:{i}>{i}:"))).map(|i| format!("B:{i}>{i}:w0"))
}

fn facets_and_dominance() -> Outcome {
    let (mut instances, mut facet_bad, mut dom_bad, mut wrapped) = (0, Vec::new(), Vec::new(), 0);
    for s in surfaces(&ORIENTABLE, 7, usize::MAX) {
        if s.dimension() > 6 || s.r() == 0 {
            continue;
        }
        instances += 1;
        let m = random_metric(&s, 3).unwrap();
        let (lat, dom) = admissible_cone(&m, 4).unwrap();
        if lat.facet_labels() != predicted_facets(&s) {
            facet_bad.push(s.label());
        }
        for e in &dom.entries {
            wrapped += 1;
            let fine = match &e.status {
                DominanceStatus::Redundant => true,
                DominanceStatus::SameRow(with) | DominanceStatus::SameFacet(with) => is_monogon_loop(&s, &e.label).is_some_and(|b| with.contains(&b)),
                DominanceStatus::Violated => false,
            };
            if !fine {
                dom_bad.push(format!("{} {}", s.label(), e.label));
            }
        }
    }
    outcome(
        facet_bad.is_empty() && dom_bad.is_empty(),
        format!("{instances} instances, {wrapped} wrapped functionals, facets wrong on {:?}, dominance wrong on {:?}", facet_bad, dom_bad.iter().take(3).collect::<Vec<_>>()),
    )
}

/// Fourth-order central difference.
fn derivative(f: impl Fn(f64) -> f64, h: f64) -> f64 {
    (8.0 * (f(h) - f(-h)) - (f(2.0 * h) - f(-2.0 * h))) / (12.0 * h)
}

fn finite_differences() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut draws = 0;
    for f in ORIENTABLE {
        let pool: Vec<_> = surfaces(&[f], 7, 7).into_iter().filter(|s| s.r() > 0 && !enumerate_simple_betas(s).is_empty()).collect();
        for k in 0..100u64 {
            let s = &pool[(k as usize * 7919) % pool.len()];
            let m = random_metric(s, 1000 + k).unwrap();
            let x0 = m.coordinates();
            draws += 1;
            for beta in enumerate_simple_betas(s) {
                let exact = length_differential(&m, &beta).unwrap();
                for (i, c) in exact.coeffs.iter().enumerate() {
                    let g = |h: f64| {
                        let mut x = x0.clone();
                        x[i] += h;
                        length_from_coordinates(s, &x, &beta).unwrap()
                    };
                    let fd = derivative(g, 2e-5);
                    let e = to_f64(c);
                    worst = worst.max((fd - e).abs() / e.abs().max(1.0));
                }
            }
        }
    }
    outcome(worst < 1e-8, format!("{draws} metrics, worst relative error {worst:.2e}"))
}

fn disjointness_oracle() -> Outcome {
    let (mut pairs, mut bad) = (0, Vec::new());
    for s in surfaces(&ORIENTABLE, 6, 6) {
        let m = random_metric(&s, 5).unwrap();
        let arcs = enumerate_arcs(&s);
        let mut betas = enumerate_simple_betas(&s);
        betas.extend(spiked::correspond::wrapped_betas(&s, 2));
        for a in &arcs {
            for b in &arcs {
                pairs += 1;
                if arcs_disjoint(a, b, &s) != geodesic_arcs_disjoint(&m, a, b).unwrap() {
                    bad.push(format!("{} {} {}", s.label(), a.label(&s), b.label(&s)));
                }
            }
            for beta in &betas {
                let Ok(comb) = arc_beta_disjoint(a, beta, &s) else { continue };
                pairs += 1;
                if comb != geodesic_arc_beta_disjoint(&m, a, beta).unwrap() {
                    bad.push(format!("{} {} {}", s.label(), a.label(&s), beta.label(&s)));
                }
            }
        }
        for x in &betas {
            for y in &betas {
                pairs += 1;
                if betas_cross(x, y, &s) != geodesic_betas_cross(&m, x, y).unwrap() {
                    bad.push(format!("{} {} {}", s.label(), x.label(&s), y.label(&s)));
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("{pairs} pairs, {} disagreements {:?}", bad.len(), bad.iter().take(3).collect::<Vec<_>>()))
}

fn colorings(m: usize) -> impl Iterator<Item = Vec<bool>> {
    (0u32..1 << m).map(move |c| (0..m).map(|i| c >> i & 1 == 1).collect())
}

fn is_full_simplex(c: &Complex, vertices: &BTreeSet<usize>) -> bool {
    c.maximal.len() == 1 && c.maximal[0].iter().copied().collect::<BTreeSet<_>>() == *vertices
}

/// Smallest rotation or reflection of a coloring.
fn canonical(red: &[bool]) -> Vec<bool> {
    let m = red.len();
    let mut best = red.to_vec();
    for r in 0..m {
        for flip in [false, true] {
            let v: Vec<bool> = (0..m).map(|i| if flip { red[(r + m - i) % m] } else { red[(r + i) % m] }).collect();
            best = best.min(v);
        }
    }
    best
}

fn bicolored() -> Outcome {
    let mut bad = Vec::new();
    let mut crowns = 0;
    for m in 1..=6 {
        for red in colorings(m).filter(|r| r.iter().any(|&x| x)) {
            crowns += 1;
            let c = bicolored_model(BicoloredKind::Crown, &red).unwrap();
            let core: BTreeSet<usize> = (0..c.vertices.len()).filter(|&i| c.vertices[i].starts_with('k')).collect();
            let order: Vec<usize> = (0..c.vertices.len()).filter(|i| !core.contains(i)).collect();
            let first = strong_collapse_with_order(&c, &order);
            if core.len() != m || !is_full_simplex(&first.terminal, &core) || !strong_collapse(&first.terminal).reaches_point() {
                bad.push(format!("crown {red:?}"));
            }
        }
    }
    let mut disks = 0;
    for m in 3..=9 {
        let classes: BTreeSet<Vec<bool>> = colorings(m).map(|r| canonical(&r)).collect();
        for red in classes {
            disks += 1;
            let c = bicolored_model(BicoloredKind::Disk, &red).unwrap();
            let red_diagonal = (0..m).any(|a| (a + 2..m).any(|b| !(a == 0 && b == m - 1) && red[a] && red[b]));
            let want = if m == 3 || red.iter().all(|&x| x) {
                CertifiedType::Empty
            } else if !red_diagonal {
                CertifiedType::Sphere(m - 4)
            } else {
                CertifiedType::Ball(m - 4)
            };
            let got = certify_type(&c);
            if got != want && !got.is_inconclusive() {
                bad.push(format!("disk {red:?}: {got} not {want}"));
            }
        }
    }
    outcome(bad.is_empty(), format!("{crowns} crown colorings, {disks} disk classes, failures {:?}", bad.iter().take(3).collect::<Vec<_>>()))
}

#[test]
fn acceptance() {
    let criteria: Vec<(&str, fn() -> Outcome)> = vec![
        ("simple connection counts", counting_table),
        ("maximal simplices and strip determinants", simplices_and_determinants),
        ("marked complex types", prediction_sweep),
        ("2-crown prism", crown_prism),
        ("polygon vertex census", polygon_census),
        ("punctured vertex census", punctured_census),
        ("facets and dominance", facets_and_dominance),
        ("finite differences", finite_differences),
        ("disjointness oracle", disjointness_oracle),
        ("bicolored complexes", bicolored),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = std::time::Instant::now();
        let o = run();
        let line = format!("criterion {:>2} {}: {name} ({}; {:.1?})\n", i + 1, if o.pass { "PASS" } else { "FAIL" }, o.detail, start.elapsed());
        // written to the handle directly so the lines survive output capture
        std::io::stderr().write_all(line.as_bytes()).unwrap();
        if !o.pass {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}

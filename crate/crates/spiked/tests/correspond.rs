use spiked::complex::CertifiedType;
use spiked::correspond::{
    admissible_cone, admissible_marks, combinatorial_lattice, compare_lattices, predicted_facets, predicted_lineality, predicted_vertices,
    prop33_prediction, vertex_arcs, verify_instance, verify_tables, RMode, Status,
};
use spiked::geometry::random_metric;
use spiked::surface::{boundary_connections, Beta, Family, SurfaceSpec};

fn full(f: Family, n: usize) -> SurfaceSpec {
    SurfaceSpec::fully_decorated(f, n).unwrap()
}

#[test]
fn lattices_correspond_on_small_surfaces() {
    for s in [full(Family::Crown, 2), full(Family::Polygon, 4), full(Family::PuncturedPolygon, 2), SurfaceSpec::from_mask(Family::Crown, 3, 0b101).unwrap()] {
        let m = random_metric(&s, 4).unwrap();
        let (lat, _) = admissible_cone(&m, 3).unwrap();
        let rep = compare_lattices(&combinatorial_lattice(&s, false), &lat, &m).unwrap();
        assert!(rep.all_match(), "{}\n{}", s.label(), rep.to_markdown());
    }
}

#[test]
fn dropping_a_spread_subset_is_detected() {
    let s = full(Family::Crown, 2);
    let m = random_metric(&s, 1).unwrap();
    let (lat, _) = admissible_cone(&m, 2).unwrap();
    let mut comb = combinatorial_lattice(&s, false);
    comb.elements.remove(3);
    let rep = compare_lattices(&comb, &lat, &m).unwrap();
    assert!(!rep.mismatches().is_empty());
}

#[test]
fn vertices_are_spike_to_edge_arcs() {
    let s = full(Family::Polygon, 5);
    let m = random_metric(&s, 2).unwrap();
    let (lat, _) = admissible_cone(&m, 0).unwrap();
    let arcs = vertex_arcs(&lat, &m).unwrap();
    assert_eq!(arcs.len(), 15);
    assert!(arcs.iter().all(|a| a.is_some_and(|a| a.is_spike_to_edge(&s))));
    let predicted = predicted_vertices(&s).unwrap();
    assert_eq!(predicted.len(), 15);
    assert_eq!(predicted.iter().filter(|v| v.simple).count(), 5);
}

#[test]
fn predictions_for_marked_complexes() {
    let crown = full(Family::Crown, 2);
    assert_eq!(prop33_prediction(&crown, &[]), CertifiedType::Ball(3));
    assert_eq!(prop33_prediction(&crown, &[Beta::Loop]), CertifiedType::Ball(2));
    assert_eq!(prop33_prediction(&crown, &admissible_marks(&crown)), CertifiedType::Empty);
    let bare = SurfaceSpec::undecorated(Family::Crown, 2).unwrap();
    assert_eq!(prop33_prediction(&bare, &[Beta::Loop]), CertifiedType::Sphere(bare.dimension() - 2));
    let tri = full(Family::Polygon, 3);
    assert_eq!(prop33_prediction(&tri, &boundary_connections(&tri)), CertifiedType::Empty);
}

#[test]
fn facets_are_the_simple_connections() {
    let s = full(Family::PuncturedPolygon, 3);
    let (lat, dom) = admissible_cone(&random_metric(&s, 1).unwrap(), 3).unwrap();
    assert_eq!(lat.facet_labels(), predicted_facets(&s));
    assert!(dom.is_consistent());
    assert_eq!(lat.lineality_dim(), predicted_lineality(&s));
}

#[test]
fn instance_report_is_clean() {
    for s in [full(Family::Crown, 3), full(Family::Moebius, 2), SurfaceSpec::from_mask(Family::Polygon, 5, 0b10110).unwrap()] {
        let rep = verify_instance(&s, 1, 2).unwrap();
        assert!(rep.mismatches().is_empty(), "{}\n{}", s.label(), rep.to_markdown());
    }
}

#[test]
fn small_grid_verifies() {
    let rep = verify_tables(&Family::ALL, 3, RMode::All, 1, 2).unwrap();
    assert!(rep.mismatches().is_empty(), "{}", rep.to_markdown());
    assert!(rep.claims.iter().any(|c| c.status == Status::Match));
    let json = rep.to_json();
    assert!(json["claims"].as_array().is_some_and(|c| !c.is_empty()));
}

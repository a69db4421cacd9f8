use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spiked::cone::{brute_force_oracle, build_cone, dominance_check, face_lattice, prism_svg, ConeError, DominanceStatus};
use spiked::correspond::admissible_cone;
use spiked::geometry::random_metric;
use spiked::rational::{q, Q};
use spiked::surface::{Family, SurfaceSpec};

fn rows(v: &[&[i64]]) -> Vec<(String, Vec<Q>)> {
    v.iter().enumerate().map(|(i, r)| (format!("r{i}"), r.iter().map(|&x| q(x)).collect())).collect()
}

#[test]
fn cone_over_a_square() {
    let h = build_cone(3, &rows(&[&[1, 0, 0], &[0, 1, 0], &[-1, 0, 1], &[0, -1, 1]])).unwrap();
    let lat = face_lattice(&h).unwrap();
    assert_eq!(lat.f_vector(), vec![4, 4, 1]);
    assert!(lat.hrep.is_properly_convex());
    assert!((0..4).all(|v| lat.is_simple_vertex(v)));
}

#[test]
fn cone_over_an_octahedron_has_degree_four_vertices() {
    let mut r: Vec<Vec<i64>> = Vec::new();
    for a in [-1, 1] {
        for b in [-1, 1] {
            for c in [-1, 1] {
                r.push(vec![a, b, c, 1]);
            }
        }
    }
    let refs: Vec<&[i64]> = r.iter().map(|x| x.as_slice()).collect();
    let lat = face_lattice(&build_cone(4, &rows(&refs)).unwrap()).unwrap();
    assert_eq!(lat.f_vector(), vec![6, 12, 8, 1]);
    assert!((0..6).all(|v| lat.vertex_degree(v) == 4 && !lat.is_simple_vertex(v)));
}

#[test]
fn lineality_is_quotiented() {
    // a half-plane times a line
    let lat = face_lattice(&build_cone(3, &rows(&[&[1, 0, 0], &[0, 1, 0]])).unwrap()).unwrap();
    assert_eq!(lat.lineality_dim(), 1);
    assert_eq!(lat.rays.len(), 2);
}

#[test]
fn duplicate_rows_share_a_facet() {
    let lat = face_lattice(&build_cone(2, &rows(&[&[1, 0], &[2, 0], &[0, 1]])).unwrap()).unwrap();
    assert_eq!(lat.hrep.rows.len(), 2);
    assert_eq!(lat.facet_labels(), ["r0", "r1", "r2"].iter().map(|s| s.to_string()).collect());
}

#[test]
fn dominance_statuses() {
    let lat = face_lattice(&build_cone(2, &rows(&[&[1, 0], &[0, 1]])).unwrap()).unwrap();
    let rep = dominance_check(&lat, &rows(&[&[1, 1], &[3, 0], &[1, -1]]));
    assert_eq!(rep.entries[0].status, DominanceStatus::Redundant);
    assert!(matches!(rep.entries[1].status, DominanceStatus::SameRow(_)));
    assert_eq!(rep.entries[2].status, DominanceStatus::Violated);
    assert!(!rep.is_consistent());
}

#[test]
fn dimension_mismatch_is_reported() {
    assert!(matches!(build_cone(3, &rows(&[&[1, 0]])), Err(ConeError::DimensionMismatch { .. })));
}

#[test]
fn random_cones_agree_with_the_brute_force_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut checked = 0;
    while checked < 50 {
        let dim = rng.gen_range(2..=4);
        let m = rng.gen_range(dim..=dim + 5);
        let mut r: Vec<Vec<i64>> = (0..m).map(|_| (0..dim).map(|_| rng.gen_range(-3..=3)).collect()).collect();
        // keep the cone pointed and nontrivial by adding the positive orthant
        for i in 0..dim {
            let mut e = vec![0; dim];
            e[i] = 1;
            r.push(e);
        }
        let refs: Vec<&[i64]> = r.iter().map(|x| x.as_slice()).collect();
        let h = build_cone(dim, &rows(&refs)).unwrap();
        if h.rows.len() > 16 {
            continue;
        }
        let fast = face_lattice(&h).unwrap();
        let slow = brute_force_oracle(&h).unwrap();
        assert_eq!(fast.rays, slow.rays, "{r:?}");
        assert!(fast.same_faces(&slow), "{r:?}");
        checked += 1;
    }
}

#[test]
fn crown_prism_svg() {
    let s = SurfaceSpec::fully_decorated(Family::Crown, 2).unwrap();
    let (lat, _) = admissible_cone(&random_metric(&s, 1).unwrap(), 2).unwrap();
    let labels: Vec<String> = (0..lat.rays.len()).map(|i| format!("v{i}")).collect();
    let svg = prism_svg(&lat, &labels).unwrap();
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("<line").count(), 9);
    assert_eq!(svg.matches("<circle").count(), 6);
}

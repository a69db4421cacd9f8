use spiked::geometry::{
    horoconnection_length, length_differential, length_from_coordinates, random_metric, strip_map, strip_vector, strip_vector_with_waist,
    DecoratedMetric, GeometryError,
};
use spiked::rational::{dot, q};
use spiked::surface::{arc_beta_disjoint, arcs_disjoint, enumerate_arcs, enumerate_simple_betas, Family, SurfaceSpec};

fn orientable(nmax: usize) -> Vec<SurfaceSpec> {
    let mut out = Vec::new();
    for f in [Family::Polygon, Family::PuncturedPolygon, Family::Crown] {
        for n in f.min_spikes()..=nmax {
            for mask in 0..(1u64 << n) {
                out.push(SurfaceSpec::from_mask(f, n, mask).unwrap());
            }
        }
    }
    out
}

#[test]
fn moebius_has_no_metric() {
    let s = SurfaceSpec::fully_decorated(Family::Moebius, 2).unwrap();
    assert_eq!(random_metric(&s, 1), Err(GeometryError::UnsupportedFamily("moebius")));
}

#[test]
fn metrics_round_trip_through_json() {
    for s in orientable(4) {
        let m = random_metric(&s, 9).unwrap();
        assert_eq!(DecoratedMetric::from_json(&m.to_json()).unwrap(), m);
        assert_eq!(m.coordinates().len(), s.dimension());
    }
}

#[test]
fn metrics_are_reproducible() {
    let s = SurfaceSpec::fully_decorated(Family::Crown, 3).unwrap();
    assert_eq!(random_metric(&s, 4).unwrap(), random_metric(&s, 4).unwrap());
    assert_ne!(random_metric(&s, 4).unwrap(), random_metric(&s, 5).unwrap());
}

#[test]
fn polygon_triangle_lengths() {
    // x = 0, 1, ∞ with horoball diameters e^u: λ(0,1) = 2 ln 1 - u0 - u1
    let s = SurfaceSpec::fully_decorated(Family::Polygon, 3).unwrap();
    let b = enumerate_simple_betas(&s)[0];
    let l = length_from_coordinates(&s, &[0.25, -0.5, 1.0], &b).unwrap();
    assert!((l - 0.25).abs() < 1e-12, "{l}");
}

#[test]
fn differentials_match_central_differences() {
    for s in orientable(4) {
        let m = random_metric(&s, 2).unwrap();
        let x = m.coordinates();
        for b in enumerate_simple_betas(&s) {
            let d = length_differential(&m, &b).unwrap();
            assert!((horoconnection_length(&m, &b).unwrap() - length_from_coordinates(&s, &x, &b).unwrap()).abs() < 1e-12);
            for (i, c) in d.coeffs.iter().enumerate() {
                let h = 1e-6;
                let mut up = x.clone();
                let mut down = x.clone();
                up[i] += h;
                down[i] -= h;
                let fd = (length_from_coordinates(&s, &up, &b).unwrap() - length_from_coordinates(&s, &down, &b).unwrap()) / (2.0 * h);
                let exact = spiked::rational::to_f64(c);
                assert!((fd - exact).abs() < 1e-5 * exact.abs().max(1.0), "{} {} coordinate {i}", s.label(), b.label(&s));
            }
        }
    }
}

#[test]
fn strips_lengthen_exactly_the_crossed_connections() {
    for s in orientable(4) {
        let m = random_metric(&s, 3).unwrap();
        let betas = enumerate_simple_betas(&s);
        let diffs: Vec<_> = betas.iter().map(|b| length_differential(&m, b).unwrap()).collect();
        for a in enumerate_arcs(&s) {
            for waist in [0.5, 0.25] {
                let v = strip_vector_with_waist(&m, &a, waist).unwrap();
                for (b, d) in betas.iter().zip(&diffs) {
                    let rate = dot(&d.coeffs, &v);
                    if arc_beta_disjoint(&a, b, &s).unwrap() {
                        assert_eq!(rate, q(0), "{} {} {}", s.label(), a.label(&s), b.label(&s));
                    } else {
                        assert!(rate > q(0), "{} {} {}", s.label(), a.label(&s), b.label(&s));
                    }
                }
            }
        }
    }
}

#[test]
fn strip_map_needs_a_simplex() {
    let s = SurfaceSpec::fully_decorated(Family::PuncturedPolygon, 2).unwrap();
    let m = random_metric(&s, 1).unwrap();
    let arcs = enumerate_arcs(&s);
    let (a, b) = arcs.iter().flat_map(|a| arcs.iter().map(move |b| (a, b))).find(|(a, b)| a != b && !arcs_disjoint(a, b, &s)).unwrap();
    assert_eq!(strip_map(&m, &[(*a, q(1)), (*b, q(1))]), Err(GeometryError::NotASimplex));
    assert_eq!(strip_map(&m, &[(*a, q(2))]).unwrap(), strip_vector(&m, a).unwrap().iter().map(|x| x * q(2)).collect::<Vec<_>>());
}

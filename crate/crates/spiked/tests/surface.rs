use proptest::prelude::*;
use spiked::surface::{
    arc_from_label, arcs_disjoint, betas_cross, enumerate_arcs, enumerate_simple_betas, enumerate_spread_subsets, filled_subsurface, is_spread, Beta,
    Family, SurfaceSpec,
};

fn spec(f: Family, n: usize, mask: u64) -> SurfaceSpec {
    SurfaceSpec::from_mask(f, n, mask).unwrap()
}

#[test]
fn rejects_degenerate_polygons() {
    assert!(SurfaceSpec::fully_decorated(Family::Polygon, 2).is_err());
    assert!(SurfaceSpec::new(Family::Crown, 3, vec![true]).is_err());
}

#[test]
fn labels_are_stable() {
    let s = SurfaceSpec::fully_decorated(Family::Polygon, 3).unwrap();
    assert_eq!(s.label(), "polygon(n=3, d=111)");
    let labels: Vec<_> = enumerate_simple_betas(&s).iter().map(|b| b.label(&s)).collect();
    assert!(labels.contains(&"B:1-2:w0".to_string()));
    let c = SurfaceSpec::fully_decorated(Family::Crown, 1).unwrap();
    assert_eq!(enumerate_simple_betas(&c).iter().map(|b| b.label(&c)).collect::<Vec<_>>(), ["B:1>1:w0", "L"]);
}

#[test]
fn one_crown_has_three_arcs() {
    let s = SurfaceSpec::fully_decorated(Family::Crown, 1).unwrap();
    assert_eq!(enumerate_arcs(&s).len(), 3);
}

#[test]
fn undecorated_polygon_arcs_are_diagonals() {
    // an edge-to-edge arc of an n-gon separates the same spikes as a diagonal
    for n in 4..=9 {
        let s = SurfaceSpec::undecorated(Family::Polygon, n).unwrap();
        assert_eq!(enumerate_arcs(&s).len(), n * (n - 3) / 2, "n = {n}");
    }
}

#[test]
fn spread_subsets_of_small_surfaces() {
    let tri = SurfaceSpec::fully_decorated(Family::Polygon, 3).unwrap();
    assert_eq!(enumerate_spread_subsets(&tri).len(), 6);
    let crown = SurfaceSpec::fully_decorated(Family::Crown, 2).unwrap();
    let spread = enumerate_spread_subsets(&crown);
    assert_eq!(spread.len(), 20);
    for sp in &spread {
        assert!(is_spread(&crown, sp.support()));
        assert_eq!(filled_subsurface(&crown, sp.support()).support, sp.support());
    }
}

#[test]
fn the_whole_support_is_not_spread() {
    let s = SurfaceSpec::fully_decorated(Family::Crown, 2).unwrap();
    let full = filled_subsurface(&s, &[Beta::Loop]);
    assert!(full.support.contains(&Beta::Loop));
    assert!(!is_spread(&s, &enumerate_simple_betas(&s)));
}

fn any_surface() -> impl Strategy<Value = SurfaceSpec> {
    (0usize..4, 1usize..6, any::<u64>()).prop_map(|(f, n, mask)| {
        let f = Family::ALL[f];
        let n = n.max(f.min_spikes());
        spec(f, n, mask & ((1 << n) - 1))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn arc_labels_round_trip(s in any_surface()) {
        for a in enumerate_arcs(&s) {
            prop_assert_eq!(arc_from_label(&a.label(&s), &s), Some(a));
        }
    }

    #[test]
    fn beta_labels_round_trip(s in any_surface()) {
        for b in enumerate_simple_betas(&s) {
            prop_assert_eq!(Beta::parse(&b.label(&s), &s).unwrap(), b);
        }
    }

    #[test]
    fn disjointness_is_symmetric(s in any_surface()) {
        let arcs = enumerate_arcs(&s);
        for a in &arcs {
            prop_assert!(!arcs_disjoint(a, a, &s));
            for b in &arcs {
                prop_assert_eq!(arcs_disjoint(a, b, &s), arcs_disjoint(b, a, &s));
            }
        }
        let betas = enumerate_simple_betas(&s);
        for x in &betas {
            for y in &betas {
                prop_assert_eq!(betas_cross(x, y, &s), betas_cross(y, x, &s));
            }
        }
    }
}

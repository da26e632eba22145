mod common;

use std::collections::BTreeMap;

use proptest::prelude::*;

use normsurf::bounds::{bound_report, genus_caps, BoundOptions};
use normsurf::certificates::enumerated;
use normsurf::classify::classify_with;
use normsurf::coords::{
    haken_sum, lift_with, matching_system_with, quad_projection, validate_with, NormalCoordinates, System,
};
use normsurf::generators::{family_an, family_bg, fixture, inflate_fxi, FIXTURE_NAMES};
use normsurf::homology::homology_with;
use normsurf::surface::build_surface;
use normsurf::{Skeleton, Triangulation};

fn corpus_member(i: usize) -> Triangulation {
    let small = ["s3-one-tet", "s3-genus2", "ball", "nonorientable", "torus-bundle", "s3-genus3", "haken-sum"];
    match i {
        0..=6 => fixture(small[i]).unwrap().triangulation,
        7 => family_bg(2).unwrap().triangulation,
        8 => family_an(3).unwrap().triangulation,
        _ => inflate_fxi(1).unwrap().triangulation,
    }
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// Multiset of (chi, q, triangles, orientable) over vertex surfaces.
fn surface_census(tri: &Triangulation, system: System) -> BTreeMap<(i64, usize, usize, bool), usize> {
    let sk = Skeleton::compute(tri);
    let mut m = BTreeMap::new();
    for e in enumerated(tri, &sk, system).unwrap() {
        let s = e.summary;
        *m.entry((s.chi, s.q, s.triangles, s.orientable)).or_insert(0) += 1;
    }
    m
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn relabelling_preserves_invariants(
        (i, order) in (0usize..10).prop_flat_map(|i| (Just(i), permutation(corpus_member(i).size())))
    ) {
        let tri = corpus_member(i);
        let other = tri.relabel(&order).unwrap();
        let (sa, sb) = (Skeleton::compute(&tri), Skeleton::compute(&other));
        prop_assert_eq!(homology_with(&tri, &sa), homology_with(&other, &sb));
        let (fa, fb) = (classify_with(&tri, &sa), classify_with(&other, &sb));
        prop_assert_eq!(fa.orientable, fb.orientable);
        prop_assert_eq!(fa.edge_degree_census, fb.edge_degree_census);
        prop_assert_eq!(sa.num_vertices, sb.num_vertices);
        prop_assert_eq!(surface_census(&tri, System::Standard), surface_census(&other, System::Standard));
    }

    #[test]
    fn text_round_trip(i in 0usize..10) {
        let tri = corpus_member(i);
        let text = tri.to_text();
        let again = Triangulation::parse(&text).unwrap();
        prop_assert_eq!(&again, &tri);
        prop_assert_eq!(again.to_text(), text);
    }

    #[test]
    fn coordinate_text_round_trip(values in proptest::collection::vec(0u64..1000, 1..8usize), quad in any::<bool>()) {
        let width = if quad { 3 } else { 7 };
        let n = values.len();
        let mut x = NormalCoordinates::zero(if quad { System::Quad } else { System::Standard }, n);
        for (t, v) in values.iter().enumerate() {
            x.values[t * width + (*v as usize % width)] = *v;
        }
        prop_assert_eq!(NormalCoordinates::parse(&x.to_text()).unwrap(), x);
    }

    #[test]
    fn haken_sums_add_euler_characteristic(i in 0usize..10, a in 0usize..64, b in 0usize..64, m in 1u64..4, k in 1u64..4) {
        let tri = corpus_member(i);
        let sk = Skeleton::compute(&tri);
        let vs = enumerated(&tri, &sk, System::Standard).unwrap();
        let (x, y) = (&vs[a % vs.len()], &vs[b % vs.len()]);
        if let Ok(sum) = haken_sum(&tri, &[(m, x.coords.clone()), (k, y.coords.clone())]) {
            let s = build_surface(&tri, &sk, &sum).unwrap().summary();
            prop_assert_eq!(s.chi, m as i64 * x.summary.chi + k as i64 * y.summary.chi);
            prop_assert_eq!(s.q as u64, m * x.summary.q as u64 + k * y.summary.q as u64);
            prop_assert!(validate_with(&tri, &sk, &sum).unwrap().ok());
        }
    }

    #[test]
    fn quad_projection_satisfies_q_matching(i in 0usize..10, a in 0usize..64) {
        let tri = corpus_member(i);
        let sk = Skeleton::compute(&tri);
        prop_assume!(classify_with(&tri, &sk).orientable);
        let vs = enumerated(&tri, &sk, System::Standard).unwrap();
        let x = &vs[a % vs.len()].coords;
        let q = matching_system_with(&tri, &sk, System::Quad).unwrap();
        let y = quad_projection(x);
        prop_assert!(q.is_satisfied(&y.values));
        // lifting returns a vector with the same quads
        prop_assert_eq!(quad_projection(&lift_with(&tri, &sk, &y).unwrap()), y);
    }

    #[test]
    fn bounds_hold_on_vertex_surfaces(i in 0usize..10, a in 0usize..64) {
        let tri = corpus_member(i);
        let sk = Skeleton::compute(&tri);
        let flags = classify_with(&tri, &sk);
        let vs = enumerated(&tri, &sk, System::Standard).unwrap();
        let s = &vs[a % vs.len()].summary;
        let r = bound_report(&flags, s, None, &BoundOptions::default()).unwrap();
        for name in ["closed-orientable", "closed-non-orientable", "bounded", "simplicial"] {
            prop_assert!(!r.record(name).unwrap().violated(), "{}", name);
        }
    }

    #[test]
    fn fxi_invariants(g in 1usize..5) {
        let p = inflate_fxi(g).unwrap();
        let sk = Skeleton::compute(&p.triangulation);
        let flags = classify_with(&p.triangulation, &sk);
        prop_assert_eq!(p.triangulation.size(), 10 * g - 4);
        prop_assert!(flags.max_boundary_faces_per_tet() <= 1);
        prop_assert_eq!(common::betti_mod_p(&p.triangulation, 65_537)[1], 2 * g);
    }
}

#[test]
fn genus_caps_grow() {
    let mut prev = genus_caps(1);
    for n in 2..12 {
        let next = genus_caps(n);
        assert!(next.0 > prev.0 && next.1 > prev.1);
        assert!(next.0 > next.1);
        prev = next;
    }
}

#[test]
fn every_fixture_round_trips() {
    for name in FIXTURE_NAMES {
        let p = fixture(name).unwrap();
        assert_eq!(Triangulation::parse(&p.triangulation.to_text()).unwrap(), p.triangulation);
        for s in &p.surfaces {
            assert_eq!(NormalCoordinates::parse(&s.coords.to_text()).unwrap(), s.coords);
        }
    }
}

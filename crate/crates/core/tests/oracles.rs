mod common;

use std::collections::BTreeSet;

use normsurf::coords::System;
use normsurf::enumerate::vertex_normal_surfaces;
use normsurf::generators::{family_an, family_bg, fixture, inflate_fxi, s2xi};
use normsurf::homology::homology;
use normsurf::Triangulation;

fn small_triangulations() -> Vec<(String, Triangulation)> {
    let mut out = Vec::new();
    for name in ["s3-one-tet", "s3-genus2", "ball"] {
        let p = fixture(name).unwrap();
        out.push((p.name, p.triangulation));
    }
    for n in 1..=4 {
        let p = family_an(n).unwrap();
        out.push((p.name, p.triangulation));
    }
    let p = family_bg(2).unwrap();
    out.push((p.name, p.triangulation));
    out
}

fn dd_set(tri: &Triangulation, system: System) -> BTreeSet<Vec<u64>> {
    vertex_normal_surfaces(tri, system).unwrap().into_iter().map(|x| x.values).collect()
}

#[test]
fn quad_enumeration_matches_support_enumeration() {
    for (name, tri) in small_triangulations() {
        assert_eq!(dd_set(&tri, System::Quad), common::support_enumeration(&tri, System::Quad), "{name}");
    }
}

#[test]
fn standard_enumeration_matches_support_enumeration() {
    for (name, tri) in small_triangulations() {
        assert_eq!(
            dd_set(&tri, System::Standard),
            common::support_enumeration(&tri, System::Standard),
            "{name}"
        );
    }
}

#[test]
fn homology_agrees_with_ranks_mod_p() {
    let mut cases: Vec<Triangulation> = small_triangulations().into_iter().map(|(_, t)| t).collect();
    for name in ["torus-bundle", "nonorientable", "haken-sum", "s3-genus3"] {
        cases.push(fixture(name).unwrap().triangulation);
    }
    cases.push(inflate_fxi(2).unwrap().triangulation);
    cases.push(s2xi().unwrap().triangulation);
    for tri in cases {
        let h = homology(&tri);
        // torsion free iff the mod p Betti numbers agree for every p
        for p in [2, 3, 5, 7, 1_000_003] {
            let b = common::betti_mod_p(&tri, p);
            if h.torsion.is_empty() {
                assert_eq!(b, h.betti);
            } else {
                assert!(b[1] >= h.betti[1]);
            }
        }
    }
}

#[test]
fn known_homology() {
    assert_eq!(common::betti_mod_p(&fixture("torus-bundle").unwrap().triangulation, 101)[1], 3);
    assert_eq!(common::betti_mod_p(&fixture("nonorientable").unwrap().triangulation, 101)[1], 1);
    for g in 1..=3 {
        assert_eq!(common::betti_mod_p(&inflate_fxi(g).unwrap().triangulation, 101)[1], 2 * g);
    }
}

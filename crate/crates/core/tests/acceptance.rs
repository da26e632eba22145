//! Runs every end-to-end criterion, with the test-side oracles layered on
//! top of the library's own checks. Prints one line per criterion.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use normsurf::certificates::{run, CriterionResult};
use normsurf::coords::System;
use normsurf::enumerate::vertex_normal_surfaces;
use normsurf::generators::{family_an, family_bg, fixture, gale, inflate_fxi};
use normsurf::Triangulation;

/// Extra checks against oracles independent of the library code paths.
fn oracle(id: usize) -> Result<(), String> {
    let ensure = |ok: bool, what: &str| if ok { Ok(()) } else { Err(what.to_string()) };
    match id {
        1 => {
            let p = fixture("s3-one-tet").map_err(|e| e.to_string())?;
            let rays = common::support_enumeration(&p.triangulation, System::Standard);
            let torus = p.surface("torus").unwrap().values.clone();
            ensure(rays.contains(&torus), "torus is not an extreme ray under support enumeration")
        }
        2 => {
            for g in 2..=6 {
                let p = family_bg(g).map_err(|e| e.to_string())?;
                ensure(common::betti_mod_p(&p.triangulation, 101) == [1, 0, 0, 1], "sphere homology")?;
            }
            Ok(())
        }
        6 => {
            let p = fixture("haken-sum").map_err(|e| e.to_string())?;
            let (a, b) = (&p.surface("s1").unwrap().values, &p.surface("s2").unwrap().values);
            let sum: Vec<u64> = a.iter().zip(b).map(|(x, y)| 2 * x + y).collect();
            ensure(sum == p.surface("combined").unwrap().values, "coordinate-wise sum")
        }
        7 => {
            let p = fixture("torus-bundle").map_err(|e| e.to_string())?;
            ensure(common::betti_mod_p(&p.triangulation, 101)[1] == 3, "H1 rank mod p")
        }
        9 => {
            for n in [8usize, 10, 12] {
                let p = gale(n).map_err(|e| e.to_string())?;
                ensure(p.triangulation.size() == n * (n - 3) / 2, "facet count of the cyclic polytope")?;
                ensure(common::betti_mod_p(&p.triangulation, 101) == [1, 0, 0, 1], "sphere homology")?;
            }
            Ok(())
        }
        10 => {
            for g in 1..=4 {
                let p = inflate_fxi(g).map_err(|e| e.to_string())?;
                let b = common::betti_mod_p(&p.triangulation, 101);
                ensure(b[0] == 1 && b[1] == 2 * g && b[3] == 0, "homology of F x I mod p")?;
            }
            Ok(())
        }
        12 => {
            for n in 1..=6 {
                let p = family_an(n).map_err(|e| e.to_string())?;
                ensure(common::betti_mod_p(&p.triangulation, 101) == [1, 0, 0, 1], "sphere homology")?;
            }
            Ok(())
        }
        14 => {
            let mut cases: Vec<Triangulation> = ["s3-one-tet", "s3-genus2", "ball"]
                .iter()
                .map(|n| fixture(n).unwrap().triangulation)
                .collect();
            cases.push(family_bg(2).unwrap().triangulation);
            for n in 1..=4 {
                cases.push(family_an(n).unwrap().triangulation);
            }
            for tri in &cases {
                for system in [System::Standard, System::Quad] {
                    let dd: BTreeSet<Vec<u64>> = vertex_normal_surfaces(tri, system)
                        .map_err(|e| e.to_string())?
                        .into_iter()
                        .map(|x| x.values)
                        .collect();
                    ensure(dd == common::support_enumeration(tri, system), "support enumeration oracle")?;
                }
            }
            Ok(())
        }
        _ => Ok(()),
    }
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mut failed = 0;
    for id in 1..=14 {
        let t = Instant::now();
        let mut r: CriterionResult = run(id);
        if let Err(e) = oracle(id) {
            r.passed = false;
            r.detail.push_str(&format!("; FAILED oracle: {e}"));
        }
        let mark = if r.passed { "PASS" } else { "FAIL" };
        println!("criterion {id:>2}: {mark}  {}  ({:.2?})", r.title, t.elapsed());
        if !r.passed {
            println!("    {}", r.detail);
            failed += 1;
        }
    }
    println!("acceptance: {}/14 passed in {:.2?}", 14 - failed, start.elapsed());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! The 𝒜ₙ cycles, the 𝓑_g 3-spheres and the boundaries of cyclic 4-polytopes.

use std::collections::HashMap;

use super::{verified, GeneratedPackage, Manifest, NamedSurface, SurfaceExpectation};
use crate::classify::classify_with;
use crate::coords::{lift_with, splitting_coordinates, NormalCoordinates, System};
use crate::error::{Error, Result};
use crate::perm::Perm4;
use crate::skeleton::Skeleton;
use crate::tri::{face_vertices, Triangulation, TriangulationBuilder};

/// Cycle of `n` tetrahedra, each folded onto itself around its edge 01,
/// face (123) of tetrahedron i glued to face (023) of tetrahedron i+1.
pub fn an_triangulation(n: usize) -> Result<Triangulation> {
    if n < 1 {
        return Err(Error::Precondition("the cycle needs at least one tetrahedron".into()));
    }
    let mut b = TriangulationBuilder::new(n);
    let step = Perm4::new([1, 2, 3, 0]).unwrap();
    for i in 0..n {
        b.glue_faces(i, [0, 1, 2], i, [0, 1, 3])?;
    }
    for i in 0..n {
        b.glue(i, 0, (i + 1) % n, step)?;
    }
    b.build()
}

/// Quad vector dual to the degree-one edges of the tetrahedra in `subset`.
pub fn an_dual_quads(n: usize, subset: &[usize]) -> NormalCoordinates {
    let mut y = NormalCoordinates::zero(System::Quad, n);
    for &t in subset {
        y.values[3 * t] = 1;
    }
    y
}

pub fn family_an(n: usize) -> Result<GeneratedPackage> {
    let tri = an_triangulation(n)?;
    let sk = Skeleton::compute(&tri);
    if sk.degree_one_edges().len() != n {
        return Err(Error::Internal(format!("A{n}: wrong number of degree one edges")));
    }
    let all: Vec<usize> = (0..n).collect();
    let x = lift_with(&tri, &sk, &an_dual_quads(n, &all))?;
    verified(GeneratedPackage {
        name: format!("an-{n}"),
        triangulation: tri,
        surfaces: vec![NamedSurface { name: "dual".into(), coords: x }],
        manifest: Manifest {
            tetrahedra: n,
            vertices: Some(1),
            h1_rank: Some(0),
            h1_torsion_free: Some(true),
            orientable: Some(true),
            boundary_genera: Some(Vec::new()),
            surfaces: vec![SurfaceExpectation {
                name: "dual".into(),
                genus: Some(n as i64),
                quads: Some(n),
                connected: Some(true),
                ..Default::default()
            }],
        },
        frame: None,
        census: None,
        notes: Vec::new(),
    })
}

/// Gluing table of 𝓑_g in the text format.
pub fn bg_table(g: usize) -> String {
    let n = 2 * g;
    let mut s = format!("tri {n}\n");
    for i in 0..n {
        let row = if i == 0 {
            "0(032) 1(013) 0(021) 1(123)".to_string()
        } else if i == n - 1 {
            format!("{i}(032) {p}(013) {i}(021) {p}(123)", p = i - 1)
        } else if i % 2 == 1 {
            format!("{a}(012) {b}(013) {a}(023) {b}(123)", a = i + 1, b = i - 1)
        } else {
            format!("{a}(012) {b}(013) {a}(023) {b}(123)", a = i - 1, b = i + 1)
        };
        s.push_str(&format!("{i}: {row}\n"));
    }
    s
}

pub fn family_bg(g: usize) -> Result<GeneratedPackage> {
    if g < 2 {
        return Err(Error::Precondition("the family starts at genus 2".into()));
    }
    let tri = Triangulation::parse(&bg_table(g))?;
    let mut x = NormalCoordinates::zero(System::Standard, tri.size());
    for t in 0..tri.size() {
        // separates vertices 0, 2 from 1, 3
        x.values[7 * t + 5] = 1;
    }
    verified(GeneratedPackage {
        name: format!("bg-{g}"),
        triangulation: tri,
        surfaces: vec![NamedSurface { name: "splitting".into(), coords: x }],
        manifest: Manifest {
            tetrahedra: 2 * g,
            vertices: Some(3),
            h1_rank: Some(0),
            h1_torsion_free: Some(true),
            orientable: Some(true),
            boundary_genera: Some(Vec::new()),
            surfaces: vec![SurfaceExpectation {
                name: "splitting".into(),
                genus: Some(g as i64),
                quads: Some(2 * g),
                triangles: Some(0),
                vertices: Some(2),
                connected: Some(true),
                ..Default::default()
            }],
        },
        frame: None,
        census: None,
        notes: Vec::new(),
    })
}

/// Facets of the cyclic 4-polytope on `n` vertices by Gale's evenness
/// condition, each sorted.
pub fn gale_facets(n: usize) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let s = [a, b, c, d];
                    let even = (0..n).filter(|i| !s.contains(i)).all(|i| {
                        (i + 1..n)
                            .filter(|j| !s.contains(j))
                            .all(|j| s.iter().filter(|&&v| i < v && v < j).count() % 2 == 0)
                    });
                    if even {
                        out.push(s);
                    }
                }
            }
        }
    }
    out
}

pub fn gale_triangulation(n: usize) -> Result<Triangulation> {
    let facets = gale_facets(n);
    let mut b = TriangulationBuilder::new(facets.len());
    let mut owner: HashMap<[usize; 3], (usize, usize)> = HashMap::new();
    for (t, f) in facets.iter().enumerate() {
        for face in 0..4 {
            let local = face_vertices(face);
            let key = local.map(|v| f[v]);
            match owner.remove(&key) {
                None => {
                    owner.insert(key, (t, face));
                }
                Some((u, uface)) => {
                    let from = face_vertices(uface).map(|v| v as u8);
                    let to = local.map(|v| v as u8);
                    b.glue_faces(u, from, t, to)?;
                }
            }
        }
    }
    if !owner.is_empty() {
        return Err(Error::Internal("cyclic polytope boundary is not closed".into()));
    }
    b.build()
}

/// ∂C₄(n) with the all-quad surface separating odd from even vertices.
pub fn gale(n: usize) -> Result<GeneratedPackage> {
    if n < 8 || n % 2 == 1 {
        return Err(Error::Precondition(format!("need an even n ≥ 8, got {n}")));
    }
    let tri = gale_triangulation(n)?;
    let sk = Skeleton::compute(&tri);
    // vertex class of each polytope vertex
    let facets = gale_facets(n);
    let mut label = vec![usize::MAX; sk.num_vertices];
    for (t, f) in facets.iter().enumerate() {
        for v in 0..4 {
            label[sk.vertex_of[t][v]] = f[v];
        }
    }
    let red: Vec<bool> = label.iter().map(|l| l % 2 == 1).collect();
    let (x, census) = splitting_coordinates(&tri, &sk, &red)?;
    let flags = classify_with(&tri, &sk);
    if !flags.combinatorial_manifold {
        return Err(Error::Internal(format!("boundary of C4({n}) is not a combinatorial manifold")));
    }
    let pairs = n * (n - 1) / 2 - n;
    let genus = (n * n / 8 + 1) as i64 - (3 * n / 4) as i64;
    verified(GeneratedPackage {
        name: format!("gale-{n}"),
        triangulation: tri,
        surfaces: vec![NamedSurface { name: "gale".into(), coords: x }],
        manifest: Manifest {
            tetrahedra: pairs,
            vertices: Some(n),
            h1_rank: Some(0),
            h1_torsion_free: Some(true),
            orientable: Some(true),
            boundary_genera: Some(Vec::new()),
            surfaces: vec![SurfaceExpectation {
                name: "gale".into(),
                genus: Some(genus),
                quads: Some(pairs),
                triangles: Some(0),
                vertices: Some(n * n / 4),
                connected: Some(true),
                ..Default::default()
            }],
        },
        frame: None,
        census: Some(census),
        notes: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gale_facet_count() {
        for n in [6, 8, 10] {
            assert_eq!(gale_facets(n).len(), n * (n - 3) / 2);
        }
    }

    #[test]
    fn bg_table_rows() {
        let t = bg_table(2);
        assert!(t.contains("1: 2(012) 0(013) 2(023) 0(123)"));
        assert!(t.contains("3: 3(032) 2(013) 3(021) 2(123)"));
    }
}

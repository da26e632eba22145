//! Minimal triangulations of F×I obtained by inflating a cone over a
//! one-vertex surface along a frame.

use std::collections::HashMap;

use serde::Serialize;

use super::surface2::{add_cone, fan, surface_one_vertex_with_sides};
use super::{verified, GeneratedPackage, Manifest, NamedSurface, SurfaceExpectation};
use crate::classify::classify_with;
use crate::coords::{splitting_coordinates, TypeCensus};
use crate::error::{Error, Result};
use crate::homology::homology_with;
use crate::perm::Perm4;
use crate::skeleton::Skeleton;
use crate::surface::{build_surface, region_decomposition};
use crate::tri::{Triangulation, TriangulationBuilder};

/// A frame in the vertex link: its edges and branch points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Frame {
    pub genus: usize,
    pub edges: usize,
    pub branch_points: usize,
    /// Number of tetrahedra the inflation adds beyond the cone.
    pub complexity: usize,
}

impl Frame {
    /// The boundary word of the 4g-gon, one edge per side pair.
    pub fn canonical(g: usize) -> Frame {
        Frame { genus: g, edges: 2 * g, branch_points: 1, complexity: 6 * g - 2 }
    }
}

/// Vertex colouring that puts the class of `(tet, v)` on its own side.
fn two_colouring(sk: &Skeleton, tet: usize, v: usize) -> Vec<bool> {
    let red = sk.vertex_of[tet][v];
    (0..sk.num_vertices).map(|c| c == red).collect()
}

pub(crate) fn fxi_triangulation(g: usize) -> Result<Triangulation> {
    let (f, sides, pairs) = surface_one_vertex_with_sides(g)?;
    let mut b = TriangulationBuilder::new(0);
    add_cone(&mut b, &f)?;
    // free faces of the middle tetrahedra, keyed by the unordered pair of
    // polygon corners their red vertices sit over
    let mut free: HashMap<(usize, usize), (usize, [u8; 3], usize)> = HashMap::new();
    let m = 4 * g;
    for &(k, l) in &pairs {
        let (p, q) = (sides[k], sides[l]);
        b.unglue(p.triangle, p.edge());
        let e = b.add_tetrahedron();
        b.glue_faces(e, [0, 2, 3], p.triangle, [3, p.start as u8, p.end as u8])?;
        b.glue_faces(e, [1, 2, 3], q.triangle, [3, q.end as u8, q.start as u8])?;
        // (e)(012): vertex 0 over corner k, vertex 1 over corner l+1
        // (e)(013): vertex 0 over corner k+1, vertex 1 over corner l
        for (a, c, blue) in [(k, (l + 1) % m, 2u8), ((k + 1) % m, l, 3u8)] {
            let key = (a.min(c), a.max(c));
            let verts = if a < c { [0, 1, blue] } else { [1, 0, blue] };
            if free.insert(key, (e, verts, a.min(c))).is_some() {
                return Err(Error::Internal(format!("corner pair {key:?} used twice")));
            }
        }
    }
    // the free faces form a cycle through the 4g corners
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); m];
    for &(a, c) in free.keys() {
        adj[a].push(c);
        adj[c].push(a);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    if adj.iter().any(|l| l.len() != 2) {
        return Err(Error::Internal("free faces do not form a cycle".into()));
    }
    let mut cycle = vec![0, adj[0][0]];
    while cycle.len() < m {
        let (prev, cur) = (cycle[cycle.len() - 2], cycle[cycle.len() - 1]);
        let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
        cycle.push(next);
    }
    if !adj[cycle[m - 1]].contains(&0) || cycle.iter().filter(|&&c| c == 0).count() != 1 {
        return Err(Error::Internal("free faces do not close up".into()));
    }
    let (disc, disc_sides) = fan(m)?;
    let offset = add_cone(&mut b, &disc)?;
    for (i, side) in disc_sides.iter().enumerate() {
        let (a, c) = (cycle[i], cycle[(i + 1) % m]);
        let (e, verts, low) = free[&(a.min(c), a.max(c))];
        // verts lists the red vertex over the lower corner first
        let (va, vc) = if a == low { (verts[0], verts[1]) } else { (verts[1], verts[0]) };
        b.glue_faces(
            offset + side.triangle,
            [side.start as u8, side.end as u8, 3],
            e,
            [va, vc, verts[2]],
        )?;
    }
    b.build()
}

/// The minimal triangulation of F_g×I with its splitting surface.
pub fn inflate_fxi(g: usize) -> Result<GeneratedPackage> {
    let tri = fxi_triangulation(g)?;
    let sk = Skeleton::compute(&tri);
    let (x, census) = splitting_coordinates(&tri, &sk, &two_colouring(&sk, 0, 3))?;
    let gi = g as i64;
    let pkg = verified(GeneratedPackage {
        name: format!("fxi-{g}"),
        triangulation: tri,
        surfaces: vec![NamedSurface { name: "splitting".into(), coords: x }],
        manifest: Manifest {
            tetrahedra: 10 * g - 4,
            vertices: Some(2),
            h1_rank: Some(2 * g),
            h1_torsion_free: Some(true),
            orientable: Some(true),
            boundary_genera: Some(vec![gi, gi]),
            surfaces: vec![SurfaceExpectation {
                name: "splitting".into(),
                genus: Some(gi),
                quads: Some(2 * g),
                orientable: Some(true),
                boundary: Some(0),
                connected: Some(true),
                ..Default::default()
            }],
        },
        frame: Some(Frame::canonical(g)),
        census: Some(census),
        notes: Vec::new(),
    })?;
    check_fxi_extras(&pkg, g)?;
    Ok(pkg)
}

fn check_fxi_extras(pkg: &GeneratedPackage, g: usize) -> Result<()> {
    let tri = &pkg.triangulation;
    let sk = Skeleton::compute(tri);
    let flags = classify_with(tri, &sk);
    let fail = |m: String| Err(Error::Internal(format!("{}: {m}", pkg.name)));
    if flags.max_boundary_faces_per_tet() > 1 {
        return fail("a tetrahedron has two boundary faces".into());
    }
    for c in &flags.boundary_components {
        if c.vertices.len() != 1 || c.triangles != 4 * g - 2 {
            return fail(format!("boundary component {c:?}"));
        }
    }
    let s = build_surface(tri, &sk, pkg.surface("splitting").unwrap())?;
    let regions = region_decomposition(&s);
    let discs = regions.triangle.len() == 2
        && regions
            .triangle
            .iter()
            .all(|r| r.simply_connected && r.boundary_chains == vec![4 * g]);
    if !discs {
        return fail(format!("triangle regions {:?}", regions.triangle));
    }
    Ok(())
}

fn folded_cone(b: &mut TriangulationBuilder) -> Result<usize> {
    let t = b.add_tetrahedron();
    b.glue_faces(t, [0, 1, 3], t, [0, 2, 3])?;
    Ok(t)
}

/// Candidate S²×I triangulations: two folded cones on each side of one
/// middle tetrahedron, with the four connecting gluings given.
fn s2xi_candidate(perms: [Perm4; 4]) -> Result<Triangulation> {
    let mut b = TriangulationBuilder::new(0);
    let cones: Vec<usize> = (0..2).map(|_| folded_cone(&mut b)).collect::<Result<_>>()?;
    let e = b.add_tetrahedron();
    let others: Vec<usize> = (0..2).map(|_| folded_cone(&mut b)).collect::<Result<_>>()?;
    // loop faces (123) to the middle faces (023), (123), (012), (013)
    for (i, &t) in cones.iter().chain(&others).enumerate() {
        b.glue(t, 0, e, perms[i])?;
    }
    b.build()
}

fn s2xi_package(tri: Triangulation, variant: usize) -> Result<Option<GeneratedPackage>> {
    let sk = Skeleton::compute(&tri);
    if !sk.is_valid() {
        return Ok(None);
    }
    let flags = classify_with(&tri, &sk);
    let spheres = flags.boundary_components.len() == 2
        && flags.boundary_components.iter().all(|c| c.topology.is_sphere());
    if !flags.orientable || !spheres || !homology_with(&tri, &sk).h1_trivial() {
        return Ok(None);
    }
    let links_ok = sk.vertex_links.iter().all(|l| l.is_disc());
    if !links_ok {
        return Ok(None);
    }
    // colour by boundary component; the second holds the far cones
    let far = &flags.boundary_components;
    let red_side = far.iter().position(|c| c.vertices.contains(&sk.vertex_of[3][0]));
    let Some(red_side) = red_side else { return Ok(None) };
    let red: Vec<bool> = (0..sk.num_vertices)
        .map(|v| far[red_side].vertices.contains(&v))
        .collect();
    if far[1 - red_side].vertices.iter().any(|v| red[*v]) {
        return Ok(None);
    }
    let Ok((x, census)) = splitting_coordinates(&tri, &sk, &red) else { return Ok(None) };
    let want = TypeCensus { a_red: 0, a_blue: 0, b_red: 2, b_blue: 2, c: 1 };
    if census != want {
        return Ok(None);
    }
    let pkg = GeneratedPackage {
        name: format!("s2xi-{variant}"),
        triangulation: tri,
        surfaces: vec![NamedSurface { name: "splitting".into(), coords: x }],
        manifest: Manifest {
            tetrahedra: 5,
            vertices: Some(sk.num_vertices),
            h1_rank: Some(0),
            h1_torsion_free: Some(true),
            orientable: Some(true),
            boundary_genera: Some(vec![0, 0]),
            surfaces: vec![SurfaceExpectation {
                name: "splitting".into(),
                genus: Some(0),
                quads: Some(1),
                chi: Some(2),
                connected: Some(true),
                ..Default::default()
            }],
        },
        frame: Some(Frame { genus: 0, edges: 1, branch_points: 0, complexity: 1 }),
        census: Some(census),
        notes: Vec::new(),
    };
    Ok(verified(pkg).ok())
}

/// Sorted edge degrees, used to tell variants apart.
fn degree_signature(tri: &Triangulation) -> Vec<usize> {
    let mut d = Skeleton::compute(tri).edge_degree;
    d.sort_unstable();
    d
}

/// Every inequivalent (by edge-degree signature) five-tetrahedron S²×I
/// reachable from the folded-cone inflation.
pub fn s2xi_variants() -> Result<Vec<GeneratedPackage>> {
    let mut out: Vec<GeneratedPackage> = Vec::new();
    let mut seen: Vec<Vec<usize>> = Vec::new();
    let targets = [1usize, 0, 3, 2];
    let choices: Vec<Vec<Perm4>> = targets
        .iter()
        .map(|&f| Perm4::all().filter(|p| p.apply(0) == f).collect())
        .collect();
    for a in &choices[0] {
        for b in &choices[1] {
            for c in &choices[2] {
                for d in &choices[3] {
                    let tri = s2xi_candidate([*a, *b, *c, *d])?;
                    let sig = degree_signature(&tri);
                    if seen.contains(&sig) {
                        continue;
                    }
                    if let Some(pkg) = s2xi_package(tri, out.len())? {
                        seen.push(sig);
                        out.push(pkg);
                    }
                }
            }
        }
    }
    if out.is_empty() {
        return Err(Error::Internal("no S²×I variant passed the checks".into()));
    }
    Ok(out)
}

/// The shipped five-tetrahedron S²×I.
pub fn s2xi() -> Result<GeneratedPackage> {
    s2xi_variants().map(|mut v| v.swap_remove(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_times_interval_has_six_tetrahedra() {
        let p = inflate_fxi(1).unwrap();
        assert_eq!(p.triangulation.size(), 6);
        assert_eq!(p.census.as_ref().unwrap().c, 2);
    }

    #[test]
    fn frame_complexity_accounts_for_the_inflation() {
        for g in 1..=4 {
            let f = Frame::canonical(g);
            assert_eq!(4 * g - 2 + f.complexity, 10 * g - 4);
        }
    }
}

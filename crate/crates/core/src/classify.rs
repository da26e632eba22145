//! Orientability, simplicial structure, boundary surfaces and censuses.

use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::Serialize;

use crate::polygon::{ComponentTopology, PolygonComplex};
use crate::skeleton::Skeleton;
use crate::tri::{face_vertices, Triangulation, EDGES};

#[derive(Clone, Debug, Serialize)]
pub struct BoundaryComponent {
    pub vertices: Vec<usize>,
    pub genus: i64,
    pub triangles: usize,
    pub topology: ComponentTopology,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationFlags {
    pub closed: bool,
    pub orientable: bool,
    /// Orientation sign of each tetrahedron; empty when non-orientable.
    pub orientation: Vec<i8>,
    pub simplicial: bool,
    pub combinatorial_manifold: bool,
    pub valid: bool,
    pub boundary_components: Vec<BoundaryComponent>,
    pub edge_degree_census: BTreeMap<usize, usize>,
    pub boundary_faces_census: BTreeMap<usize, usize>,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub face_count: usize,
    pub tetrahedra: usize,
}

impl ClassificationFlags {
    pub fn max_boundary_faces_per_tet(&self) -> usize {
        self.boundary_faces_census.keys().copied().max().unwrap_or(0)
    }
}

/// Orientation signs with tetrahedron 0 (of each component) positive, so
/// that every gluing permutation is odd between equal signs.
pub fn orientation(tri: &Triangulation) -> Option<Vec<i8>> {
    let n = tri.size();
    let mut sign = vec![0i8; n];
    for start in 0..n {
        if sign[start] != 0 {
            continue;
        }
        sign[start] = 1;
        let mut queue = VecDeque::from([start]);
        while let Some(t) = queue.pop_front() {
            for f in 0..4 {
                let Some(g) = tri.gluing(t, f) else { continue };
                let want = if g.perm.sign() < 0 { sign[t] } else { -sign[t] };
                if sign[g.tet] == 0 {
                    sign[g.tet] = want;
                    queue.push_back(g.tet);
                } else if sign[g.tet] != want {
                    return None;
                }
            }
        }
    }
    Some(sign)
}

pub fn classify(tri: &Triangulation) -> ClassificationFlags {
    let sk = Skeleton::compute(tri);
    classify_with(tri, &sk)
}

pub fn classify_with(tri: &Triangulation, sk: &Skeleton) -> ClassificationFlags {
    let n = tri.size();
    let orient = orientation(tri);
    let simplicial = is_simplicial(sk);
    let links_ok = sk.vertex_links.iter().zip(&sk.vertex_boundary).all(|(l, &b)| {
        if b {
            l.is_disc()
        } else {
            l.is_sphere()
        }
    });
    let mut edge_degree_census = BTreeMap::new();
    for &d in &sk.edge_degree {
        *edge_degree_census.entry(d).or_insert(0) += 1;
    }
    let mut boundary_faces_census = BTreeMap::new();
    for t in 0..n {
        let k = (0..4).filter(|&f| tri.is_boundary(t, f)).count();
        *boundary_faces_census.entry(k).or_insert(0) += 1;
    }
    ClassificationFlags {
        closed: tri.is_closed(),
        orientable: orient.is_some(),
        orientation: orient.unwrap_or_default(),
        simplicial,
        combinatorial_manifold: simplicial && links_ok,
        valid: sk.is_valid(),
        boundary_components: boundary_surface(tri, sk),
        edge_degree_census,
        boundary_faces_census,
        vertex_count: sk.num_vertices,
        edge_count: sk.num_edges,
        face_count: sk.num_faces,
        tetrahedra: n,
    }
}

fn is_simplicial(sk: &Skeleton) -> bool {
    let n = sk.vertex_of.len();
    let mut edges: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut faces: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut tets: HashMap<Vec<usize>, usize> = HashMap::new();
    let key = |t: usize, vs: &[usize]| -> Vec<usize> {
        let mut k: Vec<usize> = vs.iter().map(|&v| sk.vertex_of[t][v]).collect();
        k.sort_unstable();
        k
    };
    for t in 0..n {
        let k = key(t, &[0, 1, 2, 3]);
        if k.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        if tets.insert(k, t).is_some() {
            return false;
        }
        for (e, &(a, b)) in EDGES.iter().enumerate() {
            let c = sk.edge_of[t][e];
            if *edges.entry(key(t, &[a, b])).or_insert(c) != c {
                return false;
            }
        }
        for f in 0..4 {
            let c = sk.face_of[t][f];
            if *faces.entry(key(t, &face_vertices(f))).or_insert(c) != c {
                return false;
            }
        }
    }
    true
}

/// Boundary faces glued along boundary edges into closed surfaces.
fn boundary_surface(tri: &Triangulation, sk: &Skeleton) -> Vec<BoundaryComponent> {
    let n = tri.size();
    let mut poly_of = HashMap::new();
    let mut faces = Vec::new();
    let mut pc = PolygonComplex::new();
    for t in 0..n {
        for f in 0..4 {
            if tri.is_boundary(t, f) {
                poly_of.insert((t, f), pc.add_polygon(3));
                faces.push((t, f));
            }
        }
    }
    for &(t, f) in &faces {
        let p = poly_of[&(t, f)];
        let fv = face_vertices(f);
        for i in 0..3 {
            let (a, b) = (fv[i], fv[(i + 1) % 3]);
            let Some((t2, f2, a2, b2)) = walk_to_boundary(tri, t, f, a, b) else {
                continue;
            };
            let q = poly_of[&(t2, f2)];
            let gv = face_vertices(f2);
            let j = (0..3)
                .find(|&j| {
                    let (s, e) = (gv[j], gv[(j + 1) % 3]);
                    (s == a2 && e == b2) || (s == b2 && e == a2)
                })
                .expect("edge lies in boundary face");
            if (p, i) >= (q, j) {
                continue;
            }
            pc.glue(p, i, q, j, a2 == gv[(j + 1) % 3]);
        }
    }
    let topo = pc.topology();
    let mut out: Vec<BoundaryComponent> = topo
        .components
        .iter()
        .map(|c| BoundaryComponent {
            vertices: Vec::new(),
            genus: c.genus,
            triangles: c.faces,
            topology: c.clone(),
        })
        .collect();
    for (k, &(t, f)) in faces.iter().enumerate() {
        let c = topo.component_of[k];
        for v in face_vertices(f) {
            let x = sk.vertex_of[t][v];
            if !out[c].vertices.contains(&x) {
                out[c].vertices.push(x);
            }
        }
    }
    for c in &mut out {
        c.vertices.sort_unstable();
    }
    out
}

/// Walks around edge `ab` starting inside tetrahedron `t` from boundary
/// face `f` until the next boundary face; returns that face and the images
/// of `a`, `b` there.
fn walk_to_boundary(
    tri: &Triangulation,
    t: usize,
    f: usize,
    a: usize,
    b: usize,
) -> Option<(usize, usize, usize, usize)> {
    let (mut t, mut a, mut b, mut entered) = (t, a, b, f);
    for _ in 0..=4 * tri.size() {
        let other = (0..4).find(|&v| v != a && v != b && v != entered).unwrap();
        match tri.gluing(t, other) {
            None => return Some((t, other, a, b)),
            Some(g) => {
                t = g.tet;
                a = g.perm.apply(a);
                b = g.perm.apply(b);
                entered = g.perm.apply(other);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplex_is_a_simplicial_ball() {
        let t = Triangulation::parse("tri 1\n0: bdy bdy bdy bdy\n").unwrap();
        let c = classify(&t);
        assert!(c.simplicial && c.combinatorial_manifold && c.orientable);
        assert_eq!(c.boundary_components.len(), 1);
        assert_eq!(c.boundary_components[0].topology.chi, 2);
        assert_eq!(c.boundary_components[0].triangles, 4);
        assert_eq!(c.max_boundary_faces_per_tet(), 4);
    }

    #[test]
    fn doubled_simplex_is_closed_orientable_not_simplicial() {
        let t = Triangulation::parse("tri 1\n0: bdy bdy bdy bdy\n")
            .unwrap()
            .double()
            .unwrap();
        let c = classify(&t);
        assert!(c.closed && c.orientable);
        assert_eq!(c.orientation, vec![1, -1]);
        assert!(!c.simplicial);
        assert!(c.boundary_components.is_empty());
    }
}

//! Quotient skeleton: vertex, edge and face classes of a triangulation.

use serde::Serialize;

use crate::dsu::Dsu;
use crate::polygon::{ComponentTopology, PolygonComplex};
use crate::tri::{edge_index, face_vertices, Triangulation, EDGES};

#[derive(Clone, Debug, Serialize)]
pub struct Skeleton {
    pub num_vertices: usize,
    pub num_edges: usize,
    pub num_faces: usize,
    /// Vertex class of each tetrahedron corner.
    pub vertex_of: Vec<[usize; 4]>,
    /// Edge class of each tetrahedron edge (indexed as [`EDGES`]).
    pub edge_of: Vec<[usize; 6]>,
    /// Whether the tetrahedron edge, read from lower to higher local
    /// vertex, runs against the orientation of its class.
    pub edge_flipped: Vec<[bool; 6]>,
    /// Face class of each tetrahedron face.
    pub face_of: Vec<[usize; 4]>,
    /// Number of tetrahedron edges in each edge class.
    pub edge_degree: Vec<usize>,
    pub edge_boundary: Vec<bool>,
    pub face_boundary: Vec<bool>,
    pub vertex_boundary: Vec<bool>,
    /// Edge classes identified with themselves in reverse.
    pub edge_reversed: Vec<bool>,
    /// Oriented endpoints (tail, head) of each edge class.
    pub edge_ends: Vec<(usize, usize)>,
    /// Representative (tet, edge index) of each edge class.
    pub edge_rep: Vec<(usize, usize)>,
    /// Representative (tet, face) of each face class.
    pub face_rep: Vec<(usize, usize)>,
    /// Topology of the link of each vertex class.
    pub vertex_links: Vec<ComponentTopology>,
}

impl Skeleton {
    pub fn compute(tri: &Triangulation) -> Skeleton {
        let n = tri.size();
        let mut vd = Dsu::new(4 * n);
        let mut ed = Dsu::new(6 * n);
        let mut edge_bad = vec![false; 6 * n];
        for t in 0..n {
            for f in 0..4 {
                let Some(g) = tri.gluing(t, f) else { continue };
                for v in face_vertices(f) {
                    vd.union(4 * t + v, 4 * g.tet + g.perm.apply(v));
                }
                let fv = face_vertices(f);
                for (i, &a) in fv.iter().enumerate() {
                    for &b in &fv[i + 1..] {
                        let (pa, pb) = (g.perm.apply(a), g.perm.apply(b));
                        let odd = pa > pb;
                        let x = 6 * t + edge_index(a, b);
                        let y = 6 * g.tet + edge_index(pa, pb);
                        if !ed.union_with_parity(x, y, odd) {
                            edge_bad[x] = true;
                        }
                    }
                }
            }
        }
        let (vlab, num_vertices) = vd.labels();
        let (elab, num_edges) = ed.labels();
        let mut vertex_of = vec![[0usize; 4]; n];
        let mut edge_of = vec![[0usize; 6]; n];
        let mut edge_flipped = vec![[false; 6]; n];
        let mut edge_degree = vec![0usize; num_edges];
        let mut edge_rep = vec![(usize::MAX, 0); num_edges];
        let mut edge_reversed = vec![false; num_edges];
        for t in 0..n {
            for v in 0..4 {
                vertex_of[t][v] = vlab[4 * t + v];
            }
        }
        // orient each edge class like its first tetrahedron edge
        let mut rep_parity = vec![false; num_edges];
        for t in 0..n {
            for e in 0..6 {
                let x = 6 * t + e;
                let c = elab[x];
                let (_, par) = ed.find_with_parity(x);
                if edge_rep[c].0 == usize::MAX {
                    edge_rep[c] = (t, e);
                    rep_parity[c] = par;
                }
                edge_of[t][e] = c;
                edge_flipped[t][e] = par != rep_parity[c];
                edge_degree[c] += 1;
                if edge_bad[x] {
                    edge_reversed[c] = true;
                }
            }
        }
        let edge_ends = edge_rep
            .iter()
            .map(|&(t, e)| {
                let (a, b) = EDGES[e];
                (vertex_of[t][a], vertex_of[t][b])
            })
            .collect();

        let mut face_of = vec![[usize::MAX; 4]; n];
        let mut face_rep = Vec::new();
        let mut face_boundary = Vec::new();
        for t in 0..n {
            for f in 0..4 {
                if face_of[t][f] != usize::MAX {
                    continue;
                }
                let id = face_rep.len();
                face_rep.push((t, f));
                face_of[t][f] = id;
                match tri.gluing(t, f) {
                    Some(g) => {
                        face_of[g.tet][g.perm.apply(f)] = id;
                        face_boundary.push(false);
                    }
                    None => face_boundary.push(true),
                }
            }
        }
        let num_faces = face_rep.len();
        let mut edge_boundary = vec![false; num_edges];
        let mut vertex_boundary = vec![false; num_vertices];
        for t in 0..n {
            for f in 0..4 {
                if tri.is_boundary(t, f) {
                    let fv = face_vertices(f);
                    for (i, &a) in fv.iter().enumerate() {
                        vertex_boundary[vertex_of[t][a]] = true;
                        for &b in &fv[i + 1..] {
                            edge_boundary[edge_of[t][edge_index(a, b)]] = true;
                        }
                    }
                }
            }
        }

        let vertex_links = vertex_link_topology(tri, &vertex_of, num_vertices);
        Skeleton {
            num_vertices,
            num_edges,
            num_faces,
            vertex_of,
            edge_of,
            edge_flipped,
            face_of,
            edge_degree,
            edge_boundary,
            face_boundary,
            vertex_boundary,
            edge_reversed,
            edge_ends,
            edge_rep,
            face_rep,
            vertex_links,
        }
    }

    /// `V - E + F - T`.
    pub fn euler_characteristic(&self) -> i64 {
        self.num_vertices as i64 - self.num_edges as i64 + self.num_faces as i64
            - self.vertex_of.len() as i64
    }

    pub fn is_valid(&self) -> bool {
        !self.edge_reversed.iter().any(|&b| b)
    }

    /// Edge classes of degree one.
    pub fn degree_one_edges(&self) -> Vec<usize> {
        (0..self.num_edges).filter(|&e| self.edge_degree[e] == 1).collect()
    }
}

/// The link of every vertex class, assembled as a triangulated surface
/// with one triangle per tetrahedron corner.
fn vertex_link_topology(
    tri: &Triangulation,
    vertex_of: &[[usize; 4]],
    num_vertices: usize,
) -> Vec<ComponentTopology> {
    let n = tri.size();
    let mut pc = PolygonComplex::new();
    // corner (t, v) -> triangle with sides ordered by the three faces
    // containing v; side k lies in face link_faces(v)[k]
    for _ in 0..4 * n {
        pc.add_polygon(3);
    }
    for t in 0..n {
        for v in 0..4 {
            for f in 0..4 {
                if f == v {
                    continue;
                }
                let Some(g) = tri.gluing(t, f) else { continue };
                let (t2, v2, f2) = (g.tet, g.perm.apply(v), g.perm.apply(f));
                let (p, i) = (4 * t + v, link_side(v, f));
                let (q, j) = (4 * t2 + v2, link_side(v2, f2));
                if (p, i) >= (q, j) {
                    continue;
                }
                // side i of corner v in face f runs between the tetrahedron
                // edges (v,a) -> (v,b) with (a,b) the cyclic successors
                let (a, b) = link_side_ends(v, f);
                let (a2, b2) = (g.perm.apply(a), g.perm.apply(b));
                let (c, d) = link_side_ends(v2, f2);
                debug_assert!((a2 == c && b2 == d) || (a2 == d && b2 == c));
                pc.glue(p, i, q, j, a2 == d);
            }
        }
    }
    let topo = pc.topology();
    let mut out = vec![None; num_vertices];
    for t in 0..n {
        for v in 0..4 {
            let c = topo.component_of[4 * t + v];
            out[vertex_of[t][v]].get_or_insert_with(|| topo.components[c].clone());
        }
    }
    out.into_iter().map(|c| c.expect("vertex without corners")).collect()
}

/// The three other vertices of `v`, in a fixed cyclic order; the link
/// triangle at `v` has corners on edges (v, others[k]).
fn link_others(v: usize) -> [usize; 3] {
    match v {
        0 => [1, 2, 3],
        1 => [0, 2, 3],
        2 => [0, 1, 3],
        _ => [0, 1, 2],
    }
}

/// Side `k` of the link triangle at `v` runs from corner k to corner k+1,
/// i.e. from edge (v, others[k]) to edge (v, others[k+1]); it lies in the
/// face opposite the remaining vertex.
fn link_side(v: usize, f: usize) -> usize {
    let o = link_others(v);
    (0..3).find(|&k| o[(k + 2) % 3] == f).unwrap()
}

fn link_side_ends(v: usize, f: usize) -> (usize, usize) {
    let o = link_others(v);
    let k = link_side(v, f);
    (o[k], o[(k + 1) % 3])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_simplex_skeleton() {
        let t = Triangulation::parse("tri 1\n0: bdy bdy bdy bdy\n").unwrap();
        let s = Skeleton::compute(&t);
        assert_eq!((s.num_vertices, s.num_edges, s.num_faces), (4, 6, 4));
        assert_eq!(s.euler_characteristic(), 1);
        assert!(s.vertex_links.iter().all(|l| l.is_disc()));
        assert_eq!(s.edge_degree.iter().sum::<usize>(), 6);
    }

    #[test]
    fn doubled_simplex_is_a_sphere() {
        let t = Triangulation::parse("tri 1\n0: bdy bdy bdy bdy\n")
            .unwrap()
            .double()
            .unwrap();
        let s = Skeleton::compute(&t);
        assert_eq!(s.euler_characteristic(), 0);
        assert_eq!(s.num_faces, 4);
        assert!(s.vertex_links.iter().all(|l| l.is_sphere()));
        assert!(s.is_valid());
    }
}

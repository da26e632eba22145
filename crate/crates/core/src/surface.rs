//! Reconstruction of the embedded normal surface from standard
//! coordinates, its topology, regions and arc classification.

use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::Serialize;

use crate::coords::{quad_pairs, quad_separating, validate_with, NormalCoordinates, System};
use crate::dsu::Dsu;
use crate::error::{Error, Result};
use crate::polygon::{genus_of, PolygonComplex, PolygonTopology};
use crate::skeleton::Skeleton;
use crate::tri::{face_vertices, Triangulation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum DiscKind {
    /// Triangle cutting off the given vertex.
    Triangle(usize),
    /// Quadrilateral of the given type (0 = 01|23, 1 = 02|13, 2 = 03|12).
    Quad(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Disc {
    pub tet: usize,
    pub kind: DiscKind,
    pub sheet: usize,
}

impl Disc {
    pub fn is_quad(&self) -> bool {
        matches!(self.kind, DiscKind::Quad(_))
    }

    pub fn sides(&self) -> usize {
        if self.is_quad() {
            4
        } else {
            3
        }
    }
}

/// Where side `i` of a disc sits: in tetrahedron face `face`, cutting off
/// tetrahedron vertex `cut`, running from the corner on edge (cut, from)
/// to the corner on edge (cut, to).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SidePlace {
    pub face: usize,
    pub cut: usize,
    pub from: usize,
    pub to: usize,
}

pub fn side_place(kind: DiscKind, i: usize) -> SidePlace {
    match kind {
        DiscKind::Triangle(v) => {
            let o = link_others(v);
            SidePlace {
                face: o[(i + 2) % 3],
                cut: v,
                from: o[i],
                to: o[(i + 1) % 3],
            }
        }
        DiscKind::Quad(k) => {
            let [[x, y], [z, w]] = quad_pairs(k);
            // corners on xz, yz, yw, xw
            let (face, cut, from, to) = match i {
                0 => (w, z, x, y),
                1 => (x, y, z, w),
                2 => (z, w, y, x),
                _ => (y, x, w, z),
            };
            SidePlace { face, cut, from, to }
        }
    }
}

/// Tetrahedron edge (as an unordered vertex pair) carrying corner `i`.
pub fn corner_edge(kind: DiscKind, i: usize) -> (usize, usize) {
    let p = side_place(kind, i);
    (p.cut.min(p.from), p.cut.max(p.from))
}

fn link_others(v: usize) -> [usize; 3] {
    match v {
        0 => [1, 2, 3],
        1 => [0, 2, 3],
        2 => [0, 1, 3],
        _ => [0, 1, 2],
    }
}

/// A normal arc of the surface: one or two disc sides.
#[derive(Clone, Debug, Serialize)]
pub struct ArcClass {
    pub sides: Vec<(usize, usize)>,
    /// Vertex class cut off by the arc.
    pub cut_vertex: usize,
    pub face_class: usize,
}

#[derive(Clone, Debug)]
pub struct NormalSurfaceComplex {
    pub coords: NormalCoordinates,
    pub discs: Vec<Disc>,
    pub arcs: Vec<ArcClass>,
    /// Arc index of each disc side.
    pub side_arc: Vec<Vec<usize>>,
    pub complex: PolygonComplex,
    pub topology: PolygonTopology,
    /// Intersection count with each edge class.
    pub edge_weights: Vec<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FVector {
    pub f0: usize,
    pub f1: usize,
    pub f2: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentSummary {
    pub chi: i64,
    pub orientable: bool,
    pub b: usize,
    pub v: usize,
    pub q: usize,
    pub triangles: usize,
    pub genus: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TopologySummary {
    pub components: Vec<ComponentSummary>,
    pub f_vector: FVector,
    pub chi: i64,
    pub orientable: bool,
    pub b: usize,
    pub v: usize,
    pub q: usize,
    pub triangles: usize,
    /// Genus of the whole surface; meaningful when connected.
    pub genus: i64,
}

impl TopologySummary {
    pub fn connected(&self) -> bool {
        self.components.len() == 1
    }

    pub fn closed(&self) -> bool {
        self.b == 0
    }
}

pub fn build_surface(tri: &Triangulation, sk: &Skeleton, x: &NormalCoordinates) -> Result<NormalSurfaceComplex> {
    if x.system != System::Standard {
        return Err(Error::InvalidInput("surfaces are rebuilt from standard coordinates".into()));
    }
    let rep = validate_with(tri, sk, x)?;
    if let Some(t) = rep.inadmissible_tet {
        return Err(Error::NotAdmissible { tet: t });
    }
    if let Some(row) = rep.violated_row {
        return Err(Error::MatchingViolated(row));
    }
    let n = tri.size();
    let mut discs = Vec::new();
    let mut complex = PolygonComplex::new();
    // (tet, face, cut vertex, index from the cut vertex) -> (disc, side)
    let mut slot: HashMap<(usize, usize, usize, usize), (usize, usize)> = HashMap::new();
    for t in 0..n {
        for v in 0..4 {
            for s in 0..x.triangle(t, v) as usize {
                discs.push(Disc { tet: t, kind: DiscKind::Triangle(v), sheet: s });
            }
        }
        for k in 0..3 {
            for s in 0..x.quad(t, k) as usize {
                discs.push(Disc { tet: t, kind: DiscKind::Quad(k), sheet: s });
            }
        }
    }
    for (d, disc) in discs.iter().enumerate() {
        let p = complex.add_polygon(disc.sides());
        debug_assert_eq!(p, d);
        for i in 0..disc.sides() {
            let place = side_place(disc.kind, i);
            let idx = match disc.kind {
                DiscKind::Triangle(_) => disc.sheet,
                DiscKind::Quad(k) => {
                    let q = x.quad(disc.tet, k) as usize;
                    let low = quad_pairs(k)[0].contains(&place.cut);
                    x.triangle(disc.tet, place.cut) as usize
                        + if low { disc.sheet } else { q - 1 - disc.sheet }
                }
            };
            slot.insert((disc.tet, place.face, place.cut, idx), (d, i));
        }
    }
    let mut side_arc: Vec<Vec<usize>> = discs.iter().map(|d| vec![usize::MAX; d.sides()]).collect();
    let mut arcs = Vec::new();
    let mut keys: Vec<_> = slot.keys().copied().collect();
    keys.sort_unstable();
    for key in keys {
        let (t, f, a, k) = key;
        let (d, i) = slot[&key];
        if side_arc[d][i] != usize::MAX {
            continue;
        }
        let id = arcs.len();
        side_arc[d][i] = id;
        let mut sides = vec![(d, i)];
        if let Some(g) = tri.gluing(t, f) {
            let other = (g.tet, g.perm.apply(f), g.perm.apply(a), k);
            let &(d2, j) = slot
                .get(&other)
                .ok_or_else(|| Error::MatchingViolated(format!("arc {key:?} has no partner")))?;
            let pi = side_place(discs[d].kind, i);
            let pj = side_place(discs[d2].kind, j);
            complex.glue(d, i, d2, j, g.perm.apply(pi.from) == pj.to);
            side_arc[d2][j] = id;
            sides.push((d2, j));
        }
        arcs.push(ArcClass {
            sides,
            cut_vertex: sk.vertex_of[t][a],
            face_class: sk.face_of[t][f],
        });
    }
    let topology = complex.topology();
    let mut edge_weights = vec![0u64; sk.num_edges];
    for (e, w) in edge_weights.iter_mut().enumerate() {
        let (t, ei) = sk.edge_rep[e];
        let (a, b) = crate::tri::EDGES[ei];
        *w = x.triangle(t, a) + x.triangle(t, b) + (0..3).filter(|&k| k != quad_separating(a, b)).map(|k| x.quad(t, k)).sum::<u64>();
    }
    Ok(NormalSurfaceComplex {
        coords: x.clone(),
        discs,
        arcs,
        side_arc,
        complex,
        topology,
        edge_weights,
    })
}

impl NormalSurfaceComplex {
    pub fn f_vector(&self) -> FVector {
        FVector {
            f0: self.topology.vertex_count,
            f1: self.arcs.len(),
            f2: self.discs.len(),
        }
    }

    pub fn quad_count(&self) -> usize {
        self.discs.iter().filter(|d| d.is_quad()).count()
    }

    pub fn summary(&self) -> TopologySummary {
        let topo = &self.topology;
        let nc = topo.components.len();
        let mut comps: Vec<ComponentSummary> = topo
            .components
            .iter()
            .map(|c| ComponentSummary {
                chi: c.chi,
                orientable: c.orientable,
                b: c.boundary_components,
                v: c.vertices,
                q: 0,
                triangles: 0,
                genus: c.genus,
            })
            .collect();
        for (d, disc) in self.discs.iter().enumerate() {
            let c = &mut comps[topo.component_of[d]];
            if disc.is_quad() {
                c.q += 1;
            } else {
                c.triangles += 1;
            }
        }
        let chi: i64 = comps.iter().map(|c| c.chi).sum();
        let b: usize = comps.iter().map(|c| c.b).sum();
        let orientable = comps.iter().all(|c| c.orientable);
        let genus = if nc == 1 {
            comps[0].genus
        } else {
            genus_of(chi, orientable, b)
        };
        TopologySummary {
            f_vector: self.f_vector(),
            chi,
            orientable,
            b,
            v: comps.iter().map(|c| c.v).sum(),
            q: comps.iter().map(|c| c.q).sum(),
            triangles: comps.iter().map(|c| c.triangles).sum(),
            genus,
            components: comps,
        }
    }

    /// Surface vertices at the two ends of an arc.
    pub fn arc_ends(&self, arc: usize) -> (usize, usize) {
        let (d, i) = self.arcs[arc].sides[0];
        let cv = &self.topology.corner_vertex[d];
        (cv[i], cv[(i + 1) % cv.len()])
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Region {
    pub discs: Vec<usize>,
    pub chi: i64,
    pub boundary_chains: Vec<usize>,
    pub simply_connected: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RegionDecomposition {
    pub triangle: Vec<Region>,
    pub quad: Vec<Region>,
    /// Shortest boundary chain of a non-simply connected triangle region;
    /// `None` stands for infinity.
    pub min_chain_length: Option<usize>,
}

impl RegionDecomposition {
    /// Whether some triangle region contains two normally isotopic triangles.
    pub fn has_parallel_triangles(&self, s: &NormalSurfaceComplex) -> bool {
        self.triangle.iter().any(|r| {
            let mut seen = std::collections::HashSet::new();
            r.discs.iter().any(|&d| !seen.insert((s.discs[d].tet, s.discs[d].kind)))
        })
    }
}

pub fn region_decomposition(s: &NormalSurfaceComplex) -> RegionDecomposition {
    let triangle = regions_of(s, false);
    let quad = regions_of(s, true);
    let min_chain_length = triangle
        .iter()
        .filter(|r| !r.simply_connected)
        .flat_map(|r| r.boundary_chains.iter().copied())
        .min();
    RegionDecomposition { triangle, quad, min_chain_length }
}

fn regions_of(s: &NormalSurfaceComplex, quads: bool) -> Vec<Region> {
    let nd = s.discs.len();
    let mut dsu = Dsu::new(nd);
    let member = |d: usize| s.discs[d].is_quad() == quads;
    for arc in &s.arcs {
        if let [(d1, _), (d2, _)] = arc.sides[..] {
            if member(d1) && member(d2) {
                dsu.union(d1, d2);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for d in (0..nd).filter(|&d| member(d)) {
        groups.entry(dsu.find(d)).or_default().push(d);
    }
    let mut out = Vec::new();
    for discs in groups.into_values() {
        let local: HashMap<usize, usize> = discs.iter().enumerate().map(|(i, &d)| (d, i)).collect();
        let mut pc = PolygonComplex::new();
        for &d in &discs {
            pc.add_polygon(s.discs[d].sides());
        }
        for arc in &s.arcs {
            if let [(d1, i), (d2, j)] = arc.sides[..] {
                if let (Some(&p), Some(&q)) = (local.get(&d1), local.get(&d2)) {
                    pc.glue(p, i, q, j, s.complex_reverses(d1, i));
                }
            }
        }
        let topo = pc.topology();
        let comp = &topo.components[0];
        let chains: Vec<usize> = topo.boundary_cycles.iter().map(|c| c.len()).collect();
        let simply_connected =
            (comp.chi == 1 && chains.len() == 1) || (comp.chi == 2 && chains.is_empty());
        out.push(Region {
            discs,
            chi: comp.chi,
            boundary_chains: chains,
            simply_connected,
        });
    }
    out
}

impl NormalSurfaceComplex {
    /// Orientation behaviour of the gluing at side `i` of disc `d`.
    fn complex_reverses(&self, d: usize, i: usize) -> bool {
        self.complex.reverses(d, i).expect("glued side")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EdgeClassification {
    /// Per arc: `Some(true)` for long, `Some(false)` for short.
    pub arc_long: Vec<bool>,
    /// Per disc: tetrahedron vertices on the positive side.
    pub positive_side: Vec<Vec<usize>>,
    /// Per triangle disc: small (positive side is the cut-off vertex).
    pub triangle_small: BTreeMap<usize, bool>,
    /// Long-edge class of each quad long edge.
    pub long_class_of_arc: BTreeMap<usize, usize>,
    pub long_edge_classes: usize,
    /// Lengths of the vertical short edge paths.
    pub vertical_paths: Vec<usize>,
}

/// Short/long classification from a transverse orientation; `flip`
/// selects the opposite transverse orientation.
pub fn edge_classification(
    tri: &Triangulation,
    s: &NormalSurfaceComplex,
    flip: bool,
) -> Result<EdgeClassification> {
    if crate::classify::orientation(tri).is_none() {
        return Err(Error::NonOrientable);
    }
    if !s.topology.components.iter().all(|c| c.orientable) {
        return Err(Error::Precondition("surface is not orientable".into()));
    }
    let nd = s.discs.len();
    let mut pos: Vec<Option<u8>> = vec![None; nd];
    for start in 0..nd {
        if pos[start].is_some() {
            continue;
        }
        pos[start] = Some(default_side(s.discs[start].kind));
        let mut queue = VecDeque::from([start]);
        while let Some(d) = queue.pop_front() {
            let p = pos[d].unwrap();
            for i in 0..s.discs[d].sides() {
                let arc = &s.arcs[s.side_arc[d][i]];
                let Some(&(d2, j)) = arc.sides.iter().find(|&&x| x != (d, i)) else {
                    continue;
                };
                let pi = side_place(s.discs[d].kind, i);
                let g = tri.gluing(s.discs[d].tet, pi.face).expect("glued arc");
                let mut want = 0u8;
                for v in face_vertices(pi.face) {
                    if p & (1 << v) != 0 {
                        want |= 1 << g.perm.apply(v);
                    }
                }
                let pj = side_place(s.discs[d2].kind, j);
                let fmask = face_mask(pj.face);
                let cands = side_options(s.discs[d2].kind);
                let choice = cands
                    .iter()
                    .copied()
                    .find(|&c| c & fmask == want)
                    .ok_or_else(|| Error::Internal("transverse orientation mismatch".into()))?;
                match pos[d2] {
                    None => {
                        pos[d2] = Some(choice);
                        queue.push_back(d2);
                    }
                    Some(c) if c != choice => {
                        return Err(Error::Precondition("surface is one-sided".into()));
                    }
                    _ => {}
                }
            }
        }
    }
    let pos: Vec<u8> = pos
        .into_iter()
        .map(|p| {
            let p = p.unwrap();
            if flip {
                !p & 0xf
            } else {
                p
            }
        })
        .collect();
    let arc_long: Vec<bool> = s
        .arcs
        .iter()
        .map(|a| {
            let (d, i) = a.sides[0];
            let place = side_place(s.discs[d].kind, i);
            (pos[d] & face_mask(place.face)).count_ones() == 2
        })
        .collect();
    let mut triangle_small = BTreeMap::new();
    for (d, disc) in s.discs.iter().enumerate() {
        if let DiscKind::Triangle(_) = disc.kind {
            triangle_small.insert(d, pos[d].count_ones() == 1);
        }
    }
    // long edges of quads, joined through each quad
    let quad_long: Vec<(usize, [usize; 2], [usize; 2])> = s
        .discs
        .iter()
        .enumerate()
        .filter(|(_, d)| d.is_quad())
        .map(|(d, _)| {
            let arcs = &s.side_arc[d];
            let long: Vec<usize> = (0..4).filter(|&i| arc_long[arcs[i]]).collect();
            let short: Vec<usize> = (0..4).filter(|&i| !arc_long[arcs[i]]).collect();
            (d, [long[0], long[1]], [short[0], short[1]])
        })
        .collect();
    let mut dsu = Dsu::new(s.arcs.len());
    let mut is_long_quad_edge = vec![false; s.arcs.len()];
    for (d, long, _) in &quad_long {
        let (a, b) = (s.side_arc[*d][long[0]], s.side_arc[*d][long[1]]);
        is_long_quad_edge[a] = true;
        is_long_quad_edge[b] = true;
        dsu.union(a, b);
    }
    let mut long_class_of_arc = BTreeMap::new();
    let mut label: HashMap<usize, usize> = HashMap::new();
    for a in (0..s.arcs.len()).filter(|&a| is_long_quad_edge[a]) {
        let r = dsu.find(a);
        let next = label.len();
        long_class_of_arc.insert(a, *label.entry(r).or_insert(next));
    }
    // vertical short edge paths: short quad edges meeting at an endpoint
    // of a long edge shared by two quads
    let mut vs = Dsu::new(s.arcs.len());
    let mut is_short_quad_edge = vec![false; s.arcs.len()];
    let mut by_long: HashMap<usize, Vec<usize>> = HashMap::new();
    for (d, long, short) in &quad_long {
        for &i in short {
            is_short_quad_edge[s.side_arc[*d][i]] = true;
        }
        for &i in long {
            by_long.entry(s.side_arc[*d][i]).or_default().push(*d);
        }
    }
    for (&l, quads) in &by_long {
        if quads.len() != 2 || quads[0] == quads[1] {
            continue;
        }
        let (u, w) = s.arc_ends(l);
        for end in [u, w] {
            let mut touching = Vec::new();
            for &(d, _, short) in quad_long.iter().filter(|(d, _, _)| quads.contains(d)) {
                for &i in &short {
                    let a = s.side_arc[d][i];
                    let (p, q) = s.arc_ends(a);
                    if p == end || q == end {
                        touching.push(a);
                    }
                }
            }
            for pair in touching.windows(2) {
                vs.union(pair[0], pair[1]);
            }
        }
    }
    let mut path_len: BTreeMap<usize, usize> = BTreeMap::new();
    for a in (0..s.arcs.len()).filter(|&a| is_short_quad_edge[a]) {
        *path_len.entry(vs.find(a)).or_default() += 1;
    }
    Ok(EdgeClassification {
        arc_long,
        positive_side: pos
            .iter()
            .map(|&p| (0..4).filter(|v| p & (1 << v) != 0).collect())
            .collect(),
        triangle_small,
        long_edge_classes: label.len(),
        long_class_of_arc,
        vertical_paths: path_len.into_values().collect(),
    })
}

fn face_mask(f: usize) -> u8 {
    0xf & !(1 << f)
}

fn default_side(kind: DiscKind) -> u8 {
    side_options(kind)[0]
}

/// The two possible positive sides of a disc, as vertex bit masks.
fn side_options(kind: DiscKind) -> [u8; 2] {
    match kind {
        DiscKind::Triangle(v) => [1 << v, 0xf & !(1 << v)],
        DiscKind::Quad(k) => {
            let [[a, b], [c, d]] = quad_pairs(k);
            [(1 << a) | (1 << b), (1 << c) | (1 << d)]
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sides_are_consistent() {
        for kind in [
            DiscKind::Triangle(0),
            DiscKind::Triangle(3),
            DiscKind::Quad(0),
            DiscKind::Quad(1),
            DiscKind::Quad(2),
        ] {
            let n = if matches!(kind, DiscKind::Quad(_)) { 4 } else { 3 };
            for i in 0..n {
                let p = side_place(kind, i);
                let q = side_place(kind, (i + 1) % n);
                // consecutive sides share the corner edge
                let e1 = (p.cut.min(p.to), p.cut.max(p.to));
                let e2 = (q.cut.min(q.from), q.cut.max(q.from));
                assert_eq!(e1, e2, "{kind:?} side {i}");
                assert!(p.face != p.cut && p.face != p.from && p.face != p.to);
            }
        }
    }
}

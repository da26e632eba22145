//! Vistas of a normal surface from the vertex links, and the genus
//! obstruction for surfaces in combinatorial 3-manifolds.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::classify::classify_with;
use crate::error::{Error, Result};
use crate::skeleton::Skeleton;
use crate::surface::NormalSurfaceComplex;
use crate::tri::Triangulation;

/// The arcs of the quadrilateral subcomplex cutting off vertex class `x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VistaGraph {
    pub vertex: usize,
    pub arcs: Vec<usize>,
    /// Surface vertices at the ends of those arcs.
    pub nodes: Vec<usize>,
    pub v: usize,
    pub e: usize,
    /// e < 3v, vacuous for an empty vista.
    #[serde(rename = "lemma_ok")]
    pub edge_bound_ok: bool,
}

/// Pushing the discs of the least occupied tetrahedron out of it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NearRealisation {
    pub tetrahedron: usize,
    pub triangles: u64,
    pub quads: u64,
    /// One cone point per triangle, four new vertices per quadrilateral.
    pub delta: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealisationReport {
    pub vistas: Vec<VistaGraph>,
    pub genus: i64,
    pub f0: usize,
    pub q: usize,
    /// 2g < 7 f₀.
    #[serde(rename = "theorem_ok")]
    pub genus_bound_ok: bool,
    /// Σ f₀(C_x) ≤ 2 f₀(S).
    pub vertex_sum: usize,
    /// Σ |C_x| ≥ 2q.
    pub edge_sum: usize,
    /// Every vertex of the quadrilateral subcomplex is in exactly two vistas.
    pub two_vistas_ok: bool,
    pub near_realisation: NearRealisation,
    pub near_realisation_delta: u64,
}

impl RealisationReport {
    pub fn all_ok(&self) -> bool {
        self.genus_bound_ok
            && self.two_vistas_ok
            && self.vistas.iter().all(|v| v.edge_bound_ok)
            && self.vertex_sum <= 2 * self.f0
            && self.edge_sum >= 2 * self.q
    }
}

fn quad_arcs(s: &NormalSurfaceComplex) -> Vec<usize> {
    (0..s.arcs.len())
        .filter(|&a| s.arcs[a].sides.iter().any(|&(d, _)| s.discs[d].is_quad()))
        .collect()
}

fn check_preconditions(tri: &Triangulation, sk: &Skeleton, s: &NormalSurfaceComplex) -> Result<()> {
    if !classify_with(tri, sk).combinatorial_manifold {
        return Err(Error::Precondition("triangulation is not a combinatorial manifold".into()));
    }
    let summary = s.summary();
    if !summary.closed() || !summary.orientable {
        return Err(Error::Precondition("surface must be closed and orientable".into()));
    }
    Ok(())
}

fn build_vista(s: &NormalSurfaceComplex, arcs: &[usize], x: usize) -> VistaGraph {
    let arcs: Vec<usize> = arcs.iter().copied().filter(|&a| s.arcs[a].cut_vertex == x).collect();
    let nodes: BTreeSet<usize> = arcs
        .iter()
        .flat_map(|&a| {
            let (p, q) = s.arc_ends(a);
            [p, q]
        })
        .collect();
    let (v, e) = (nodes.len(), arcs.len());
    VistaGraph {
        vertex: x,
        arcs,
        nodes: nodes.into_iter().collect(),
        v,
        e,
        edge_bound_ok: e == 0 || e < 3 * v,
    }
}

pub fn vista_graph(tri: &Triangulation, sk: &Skeleton, s: &NormalSurfaceComplex, x: usize) -> Result<VistaGraph> {
    if x >= sk.num_vertices {
        return Err(Error::IndexOutOfRange { index: x, size: sk.num_vertices });
    }
    check_preconditions(tri, sk, s)?;
    Ok(build_vista(s, &quad_arcs(s), x))
}

pub fn near_realisation(s: &NormalSurfaceComplex) -> NearRealisation {
    let x = &s.coords;
    let n = x.tetrahedra();
    let counts = |t: usize| -> (u64, u64) {
        let tr = (0..4).map(|v| x.triangle(t, v)).sum();
        let q = (0..3).map(|k| x.quad(t, k)).sum();
        (tr, q)
    };
    let t = (0..n)
        .min_by_key(|&t| {
            let (a, b) = counts(t);
            (a + b, t)
        })
        .unwrap_or(0);
    let (triangles, quads) = if n == 0 { (0, 0) } else { counts(t) };
    NearRealisation { tetrahedron: t, triangles, quads, delta: triangles + 4 * quads }
}

pub fn realisation_report(tri: &Triangulation, sk: &Skeleton, s: &NormalSurfaceComplex) -> Result<RealisationReport> {
    check_preconditions(tri, sk, s)?;
    let arcs = quad_arcs(s);
    let vistas: Vec<VistaGraph> = (0..sk.num_vertices).map(|x| build_vista(s, &arcs, x)).collect();
    let mut membership: BTreeMap<usize, usize> = BTreeMap::new();
    for v in &vistas {
        for &node in &v.nodes {
            *membership.entry(node).or_insert(0) += 1;
        }
    }
    let summary = s.summary();
    let f0 = summary.f_vector.f0;
    let near = near_realisation(s);
    Ok(RealisationReport {
        genus: summary.genus,
        f0,
        q: summary.q,
        genus_bound_ok: 2 * summary.genus < 7 * f0 as i64,
        vertex_sum: vistas.iter().map(|v| v.v).sum(),
        edge_sum: vistas.iter().map(|v| v.e).sum(),
        two_vistas_ok: membership.values().all(|&c| c == 2),
        near_realisation_delta: near.delta,
        near_realisation: near,
        vistas,
    })
}

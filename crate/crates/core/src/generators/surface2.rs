//! Triangulated surfaces and cones over them.

use crate::error::{Error, Result};
use crate::perm::Perm3;
use crate::polygon::{PolygonComplex, PolygonTopology};
use crate::tri::{Triangulation, TriangulationBuilder};

/// A 2-dimensional gluing structure. Edge `i` of a triangle is the edge
/// opposite its vertex `i`; `gluings[t][i] = Some((u, p))` maps the vertices
/// of triangle `t` to those of `u`, sending edge `i` to edge `p(i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceTriangulation {
    gluings: Vec<[Option<(usize, Perm3)>; 3]>,
}

/// Where a side of a fanned polygon lives: triangle and the local vertices
/// at its two ends (start, end).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SideLocation {
    pub triangle: usize,
    pub start: usize,
    pub end: usize,
}

impl SideLocation {
    /// The local vertex opposite the side, i.e. its edge index.
    pub fn edge(&self) -> usize {
        3 - self.start - self.end
    }
}

impl SurfaceTriangulation {
    pub fn new(n: usize) -> Self {
        SurfaceTriangulation { gluings: vec![[None; 3]; n] }
    }

    pub fn size(&self) -> usize {
        self.gluings.len()
    }

    pub fn gluing(&self, t: usize, e: usize) -> Option<(usize, Perm3)> {
        self.gluings[t][e]
    }

    pub fn glue(&mut self, t: usize, e: usize, u: usize, p: Perm3) -> Result<()> {
        let f = p.apply(e);
        if (t, e) == (u, f) {
            return Err(Error::InvalidInput(format!("edge {e} of triangle {t} glued to itself")));
        }
        if self.gluings[t][e].is_some() || self.gluings[u][f].is_some() {
            return Err(Error::InvalidInput(format!("edge glued twice: {t}:{e} or {u}:{f}")));
        }
        self.gluings[t][e] = Some((u, p));
        self.gluings[u][f] = Some((t, p.inverse()));
        Ok(())
    }

    /// Identifies two fan sides so that `a.start ~ b.end` and `a.end ~ b.start`.
    pub fn glue_sides_reversed(&mut self, a: SideLocation, b: SideLocation) -> Result<()> {
        let p = Perm3::from_pairs(a.start as u8, b.end as u8, a.end as u8, b.start as u8)
            .ok_or_else(|| Error::Internal("degenerate side pairing".into()))?;
        self.glue(a.triangle, a.edge(), b.triangle, p)
    }

    pub fn polygon_complex(&self) -> PolygonComplex {
        // polygon side i runs from corner i to corner i+1 and is the edge
        // opposite vertex i+2
        let mut pc = PolygonComplex::new();
        for _ in 0..self.size() {
            pc.add_polygon(3);
        }
        for t in 0..self.size() {
            for e in 0..3 {
                let Some((u, p)) = self.gluings[t][e] else { continue };
                let f = p.apply(e);
                if (t, e) >= (u, f) {
                    continue;
                }
                let side = (e + 1) % 3;
                let other = (f + 1) % 3;
                pc.glue(t, side, u, other, p.apply(side) == (other + 1) % 3);
            }
        }
        pc
    }

    pub fn topology(&self) -> PolygonTopology {
        self.polygon_complex().topology()
    }
}

/// Fan triangulation of an `m`-gon from corner 0. Triangle `i - 1` has
/// local vertices (c₀, cᵢ, cᵢ₊₁). Returns the surface with its diagonals
/// glued and the location of each polygon side cₖ → cₖ₊₁.
pub fn fan(m: usize) -> Result<(SurfaceTriangulation, Vec<SideLocation>)> {
    if m < 3 {
        return Err(Error::InvalidInput(format!("a polygon needs 3 sides, got {m}")));
    }
    let n = m - 2;
    let mut s = SurfaceTriangulation::new(n);
    let swap = Perm3::new([0, 2, 1]).unwrap();
    for t in 0..n - 1 {
        s.glue(t, 1, t + 1, swap)?;
    }
    let sides = (0..m)
        .map(|k| match k {
            0 => SideLocation { triangle: 0, start: 0, end: 1 },
            k if k == m - 1 => SideLocation { triangle: n - 1, start: 2, end: 0 },
            k => SideLocation { triangle: k - 1, start: 1, end: 2 },
        })
        .collect();
    Ok((s, sides))
}

/// The one-vertex genus-`g` surface: a fanned 4g-gon with boundary word
/// a₁b₁a₁⁻¹b₁⁻¹⋯. Also returns the side locations and the side pairs.
pub fn surface_one_vertex_with_sides(
    g: usize,
) -> Result<(SurfaceTriangulation, Vec<SideLocation>, Vec<(usize, usize)>)> {
    if g < 1 {
        return Err(Error::Precondition("genus must be at least 1".into()));
    }
    let (mut s, sides) = fan(4 * g)?;
    let mut pairs = Vec::new();
    for j in 0..g {
        pairs.push((4 * j, 4 * j + 2));
        pairs.push((4 * j + 1, 4 * j + 3));
    }
    for &(k, m) in &pairs {
        s.glue_sides_reversed(sides[k], sides[m])?;
    }
    Ok((s, sides, pairs))
}

pub fn surface_one_vertex(g: usize) -> Result<SurfaceTriangulation> {
    surface_one_vertex_with_sides(g).map(|(s, _, _)| s)
}

/// Adds the cone over `f` to `b`: one tetrahedron per triangle, vertex 3 the
/// apex, face 3 the (unglued) base. Returns the index of the first new
/// tetrahedron.
pub fn add_cone(b: &mut TriangulationBuilder, f: &SurfaceTriangulation) -> Result<usize> {
    let offset = b.size();
    for _ in 0..f.size() {
        b.add_tetrahedron();
    }
    for t in 0..f.size() {
        for e in 0..3 {
            let Some((u, p)) = f.gluing(t, e) else { continue };
            if b.is_free(offset + t, e) {
                b.glue(offset + t, e, offset + u, p.extend())?;
            }
        }
    }
    Ok(offset)
}

pub fn cone_over(f: &SurfaceTriangulation) -> Result<Triangulation> {
    let mut b = TriangulationBuilder::new(0);
    add_cone(&mut b, f)?;
    b.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_has_two_triangles_and_one_vertex() {
        let s = surface_one_vertex(1).unwrap();
        assert_eq!(s.size(), 2);
        let t = s.topology();
        assert_eq!(t.vertex_count, 1);
        assert_eq!(t.components[0].chi, 0);
        assert!(t.components[0].orientable);
    }

    #[test]
    fn genus_grows_with_the_polygon() {
        for g in 1..=5 {
            let s = surface_one_vertex(g).unwrap();
            assert_eq!(s.size(), 4 * g - 2);
            let c = &s.topology().components[0];
            assert_eq!((c.genus, c.vertices, c.boundary_components), (g as i64, 1, 0));
        }
        assert!(surface_one_vertex(0).is_err());
    }

    #[test]
    fn fan_is_a_disc() {
        let (s, _) = fan(7).unwrap();
        assert!(s.topology().components[0].is_disc());
    }
}

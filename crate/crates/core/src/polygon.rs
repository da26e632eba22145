//! Surfaces assembled from polygons glued along their sides.
//!
//! Vertices are the classes of polygon corners identified through side
//! gluings, so the result is always a surface (possibly with boundary).
//! Used for vertex links, boundary surfaces, triangle regions and the
//! one-vertex surface triangulations.

use serde::Serialize;

use crate::dsu::Dsu;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct SideGlue {
    side: usize,
    /// The two sides are traversed in opposite directions along the shared
    /// edge, i.e. the gluing respects the polygons' cyclic orientations.
    reverses: bool,
}

#[derive(Clone, Debug, Default)]
pub struct PolygonComplex {
    offsets: Vec<usize>,
    sides: Vec<usize>,
    glue: Vec<Option<SideGlue>>,
}

/// Euler characteristic, orientability and boundary of one connected
/// component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentTopology {
    pub chi: i64,
    pub orientable: bool,
    pub boundary_components: usize,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    /// Orientable genus, or the number of cross-caps when non-orientable.
    pub genus: i64,
}

impl ComponentTopology {
    pub fn is_sphere(&self) -> bool {
        self.orientable && self.boundary_components == 0 && self.chi == 2
    }

    pub fn is_disc(&self) -> bool {
        self.orientable && self.boundary_components == 1 && self.chi == 1
    }
}

/// Genus from Euler characteristic and boundary count.
pub fn genus_of(chi: i64, orientable: bool, boundary: usize) -> i64 {
    let b = boundary as i64;
    if orientable {
        (2 - chi - b) / 2
    } else {
        2 - chi - b
    }
}

#[derive(Clone, Debug)]
pub struct PolygonTopology {
    /// Component index of each polygon.
    pub component_of: Vec<usize>,
    pub components: Vec<ComponentTopology>,
    /// Corner vertex class: `corner_vertex[p][k]`.
    pub corner_vertex: Vec<Vec<usize>>,
    pub vertex_count: usize,
    /// Orientation sign of each polygon (meaningful per orientable component).
    pub polygon_sign: Vec<i8>,
    /// Each boundary cycle as a list of (polygon, side).
    pub boundary_cycles: Vec<Vec<(usize, usize)>>,
}

impl PolygonComplex {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_polygon(&mut self, sides: usize) -> usize {
        assert!(sides >= 1);
        let start = self.glue.len();
        self.offsets.push(start);
        self.sides.push(sides);
        self.glue.extend(std::iter::repeat_n(None, sides));
        self.sides.len() - 1
    }

    pub fn polygon_count(&self) -> usize {
        self.sides.len()
    }

    pub fn side_count(&self, p: usize) -> usize {
        self.sides[p]
    }

    fn sid(&self, p: usize, i: usize) -> usize {
        debug_assert!(i < self.sides[p]);
        self.offsets[p] + i
    }

    fn owner(&self, s: usize) -> (usize, usize) {
        let p = match self.offsets.binary_search(&s) {
            Ok(p) => p,
            Err(p) => p - 1,
        };
        (p, s - self.offsets[p])
    }

    pub fn is_glued(&self, p: usize, i: usize) -> bool {
        self.glue[self.sid(p, i)].is_some()
    }

    /// Whether the gluing at side `i` of `p` reverses direction; `None`
    /// for an unglued side.
    pub fn reverses(&self, p: usize, i: usize) -> Option<bool> {
        self.glue[self.sid(p, i)].map(|g| g.reverses)
    }

    /// Glues side `i` of `p` to side `j` of `q`. With `reverses` the sides
    /// are identified running in opposite directions (compatible cyclic
    /// orientations).
    pub fn glue(&mut self, p: usize, i: usize, q: usize, j: usize, reverses: bool) {
        let a = self.sid(p, i);
        let b = self.sid(q, j);
        assert!(a != b, "side glued to itself");
        assert!(
            self.glue[a].is_none() && self.glue[b].is_none(),
            "side glued twice"
        );
        self.glue[a] = Some(SideGlue { side: b, reverses });
        self.glue[b] = Some(SideGlue { side: a, reverses });
    }

    pub fn topology(&self) -> PolygonTopology {
        let np = self.sides.len();
        let nside = self.glue.len();
        // corners share the side numbering: corner k of p = start of side k
        let mut corners = Dsu::new(nside);
        let mut polys = Dsu::new(np);
        let mut orient = Dsu::new(np);
        let mut orientable_conflict = vec![false; np];
        let next = |this: &Self, s: usize| -> usize {
            let (p, i) = this.owner(s);
            this.sid(p, (i + 1) % this.sides[p])
        };
        for a in 0..nside {
            let Some(g) = self.glue[a] else { continue };
            let b = g.side;
            if a > b {
                continue;
            }
            let (pa, _) = self.owner(a);
            let (pb, _) = self.owner(b);
            polys.union(pa, pb);
            if g.reverses {
                corners.union(a, next(self, b));
                corners.union(next(self, a), b);
            } else {
                corners.union(a, b);
                corners.union(next(self, a), next(self, b));
            }
            // opposite traversal means equal signs
            if !orient.union_with_parity(pa, pb, !g.reverses) {
                orientable_conflict[pa] = true;
            }
        }
        let (vlabel, vcount) = corners.labels();
        let (plabel, ccount) = polys.labels();
        let mut comp_bad = vec![false; ccount];
        for p in 0..np {
            if orientable_conflict[p] {
                comp_bad[plabel[p]] = true;
            }
        }
        let polygon_sign: Vec<i8> = (0..np)
            .map(|p| if orient.find_with_parity(p).1 { -1 } else { 1 })
            .collect();

        let mut faces = vec![0usize; ccount];
        let mut edges = vec![0usize; ccount];
        let mut verts = vec![0usize; ccount];
        let mut vertex_comp = vec![usize::MAX; vcount];
        for (p, &c) in plabel.iter().enumerate() {
            faces[c] += 1;
            for i in 0..self.sides[p] {
                let s = self.sid(p, i);
                match self.glue[s] {
                    Some(g) if g.side < s => {}
                    _ => edges[c] += 1,
                }
                let v = vlabel[s];
                if vertex_comp[v] == usize::MAX {
                    vertex_comp[v] = c;
                    verts[c] += 1;
                }
            }
        }

        // boundary cycles: unglued sides chained through their end corners
        let boundary_sides: Vec<usize> = (0..nside).filter(|&s| self.glue[s].is_none()).collect();
        let mut bdsu = Dsu::new(vcount);
        let mut bverts = vec![false; vcount];
        for &s in &boundary_sides {
            let u = vlabel[s];
            let w = vlabel[next(self, s)];
            bverts[u] = true;
            bverts[w] = true;
            bdsu.union(u, w);
        }
        let mut cycle_of_root: std::collections::BTreeMap<usize, usize> = Default::default();
        let mut boundary_cycles: Vec<Vec<(usize, usize)>> = Vec::new();
        for &s in &boundary_sides {
            let r = bdsu.find(vlabel[s]);
            let idx = *cycle_of_root.entry(r).or_insert_with(|| {
                boundary_cycles.push(Vec::new());
                boundary_cycles.len() - 1
            });
            boundary_cycles[idx].push(self.owner(s));
        }
        let mut bcount = vec![0usize; ccount];
        for cyc in &boundary_cycles {
            let (p, _) = cyc[0];
            bcount[plabel[p]] += 1;
        }

        let components = (0..ccount)
            .map(|c| {
                let chi = verts[c] as i64 - edges[c] as i64 + faces[c] as i64;
                let orientable = !comp_bad[c];
                ComponentTopology {
                    chi,
                    orientable,
                    boundary_components: bcount[c],
                    vertices: verts[c],
                    edges: edges[c],
                    faces: faces[c],
                    genus: genus_of(chi, orientable, bcount[c]),
                }
            })
            .collect();
        let corner_vertex = (0..np)
            .map(|p| (0..self.sides[p]).map(|i| vlabel[self.sid(p, i)]).collect())
            .collect();
        PolygonTopology {
            component_of: plabel,
            components,
            corner_vertex,
            vertex_count: vcount,
            polygon_sign,
            boundary_cycles,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_torus() {
        let mut c = PolygonComplex::new();
        let p = c.add_polygon(4);
        // a b a^-1 b^-1
        c.glue(p, 0, p, 2, true);
        c.glue(p, 1, p, 3, true);
        let t = c.topology();
        assert_eq!(t.components.len(), 1);
        let comp = &t.components[0];
        assert_eq!((comp.vertices, comp.edges, comp.faces), (1, 2, 1));
        assert_eq!(comp.chi, 0);
        assert!(comp.orientable);
        assert_eq!(comp.genus, 1);
    }

    #[test]
    fn klein_bottle_and_disc() {
        let mut c = PolygonComplex::new();
        let p = c.add_polygon(4);
        c.glue(p, 0, p, 2, false);
        c.glue(p, 1, p, 3, true);
        let q = c.add_polygon(3);
        let t = c.topology();
        let kb = &t.components[t.component_of[p]];
        assert!(!kb.orientable);
        assert_eq!(kb.chi, 0);
        assert_eq!(kb.genus, 2);
        let disc = &t.components[t.component_of[q]];
        assert!(disc.is_disc());
    }

    #[test]
    fn folded_triangle_is_a_disc() {
        let mut c = PolygonComplex::new();
        let p = c.add_polygon(3);
        // sides 0 and 2 meet at corner 0; fold them together
        c.glue(p, 2, p, 0, true);
        let t = c.topology();
        let comp = &t.components[0];
        assert!(comp.is_disc(), "{comp:?}");
        assert_eq!(t.boundary_cycles.len(), 1);
    }
}

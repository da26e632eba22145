//! Normal coordinates, matching systems, admissibility and the
//! quadrilateral-to-standard lift.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::classify::orientation;
use crate::error::{Error, Result};
use crate::skeleton::Skeleton;
use crate::tri::{face_vertices, Triangulation, EDGES};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum System {
    Standard,
    Quad,
}

impl System {
    pub fn width(self) -> usize {
        match self {
            System::Standard => 7,
            System::Quad => 3,
        }
    }

    pub fn keyword(self) -> &'static str {
        match self {
            System::Standard => "std",
            System::Quad => "quad",
        }
    }
}

/// Quadrilateral type separating the pair `{a, b}` from its complement:
/// 0 = 01|23, 1 = 02|13, 2 = 03|12.
pub fn quad_separating(a: usize, b: usize) -> usize {
    debug_assert!(a != b && a < 4 && b < 4);
    let other = if a == 0 { b } else if b == 0 { a } else { 6 - a - b };
    other - 1
}

/// The two vertex pairs split by quad type `k`.
pub fn quad_pairs(k: usize) -> [[usize; 2]; 2] {
    match k {
        0 => [[0, 1], [2, 3]],
        1 => [[0, 2], [1, 3]],
        _ => [[0, 3], [1, 2]],
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalCoordinates {
    pub system: System,
    pub values: Vec<u64>,
}

impl NormalCoordinates {
    pub fn zero(system: System, n: usize) -> Self {
        NormalCoordinates {
            system,
            values: vec![0; system.width() * n],
        }
    }

    pub fn tetrahedra(&self) -> usize {
        self.values.len() / self.system.width()
    }

    pub fn triangle(&self, t: usize, v: usize) -> u64 {
        debug_assert_eq!(self.system, System::Standard);
        self.values[7 * t + v]
    }

    pub fn quad(&self, t: usize, k: usize) -> u64 {
        match self.system {
            System::Standard => self.values[7 * t + 4 + k],
            System::Quad => self.values[3 * t + k],
        }
    }

    pub fn quad_count(&self) -> u64 {
        (0..self.tetrahedra())
            .flat_map(|t| (0..3).map(move |k| (t, k)))
            .map(|(t, k)| self.quad(t, k))
            .sum()
    }

    pub fn triangle_count(&self) -> u64 {
        match self.system {
            System::Quad => 0,
            System::Standard => (0..self.tetrahedra())
                .flat_map(|t| (0..4).map(move |v| self.values[7 * t + v]))
                .sum(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// At most one quadrilateral type present in every tetrahedron.
    pub fn first_inadmissible(&self) -> Option<usize> {
        (0..self.tetrahedra()).find(|&t| (0..3).filter(|&k| self.quad(t, k) > 0).count() > 1)
    }

    pub fn is_admissible(&self) -> bool {
        self.first_inadmissible().is_none()
    }

    pub fn scaled(&self, m: u64) -> Result<NormalCoordinates> {
        let values = self
            .values
            .iter()
            .map(|&v| v.checked_mul(m))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::InvalidInput("coordinate overflow".into()))?;
        Ok(NormalCoordinates { system: self.system, values })
    }

    /// Coordinates of the induced surface in the double of the triangulation.
    pub fn doubled(&self) -> NormalCoordinates {
        let mut values = self.values.clone();
        values.extend_from_slice(&self.values);
        NormalCoordinates { system: self.system, values }
    }

    pub fn to_text(&self) -> String {
        let n = self.tetrahedra();
        let mut s = format!("surface {} {}\n", self.system.keyword(), n);
        for t in 0..n {
            match self.system {
                System::Standard => {
                    let v = &self.values[7 * t..7 * t + 7];
                    writeln!(
                        s,
                        "{t}: {} {} {} {} ; {} {} {}",
                        v[0], v[1], v[2], v[3], v[4], v[5], v[6]
                    )
                    .unwrap();
                }
                System::Quad => {
                    let v = &self.values[3 * t..3 * t + 3];
                    writeln!(s, "{t}: {} {} {}", v[0], v[1], v[2]).unwrap();
                }
            }
        }
        s
    }

    pub fn parse(text: &str) -> Result<NormalCoordinates> {
        let syntax = |line: usize, column: usize, message: &str| Error::Syntax {
            line,
            column,
            message: message.into(),
        };
        let mut lines = text.lines().enumerate().filter_map(|(i, l)| {
            let body = l.split('#').next().unwrap_or("");
            (!body.trim().is_empty()).then_some((i + 1, body))
        });
        let (hl, header) = lines.next().ok_or_else(|| syntax(1, 1, "empty document"))?;
        let words: Vec<&str> = header.split_whitespace().collect();
        if words.len() != 3 || words[0] != "surface" {
            return Err(syntax(hl, 1, "expected `surface <std|quad> <n>`"));
        }
        let system = match words[1] {
            "std" => System::Standard,
            "quad" => System::Quad,
            _ => return Err(syntax(hl, 9, "coordinate system must be std or quad")),
        };
        let n: usize = words[2]
            .parse()
            .map_err(|_| syntax(hl, header.find(words[2]).unwrap_or(0) + 1, "bad count"))?;
        let w = system.width();
        let mut values = vec![0u64; w * n];
        let mut seen = vec![false; n];
        for (ln, line) in lines {
            let (idx, rest) = line
                .split_once(':')
                .ok_or_else(|| syntax(ln, 1, "expected `<i>:`"))?;
            let t: usize = idx
                .trim()
                .parse()
                .map_err(|_| syntax(ln, 1, "bad tetrahedron index"))?;
            if t >= n {
                return Err(Error::IndexOutOfRange { index: t, size: n });
            }
            if seen[t] {
                return Err(syntax(ln, 1, "duplicate row"));
            }
            seen[t] = true;
            let nums: Vec<&str> = match system {
                System::Standard => {
                    let (tri, quad) = rest
                        .split_once(';')
                        .ok_or_else(|| syntax(ln, idx.len() + 2, "expected `;`"))?;
                    let a: Vec<&str> = tri.split_whitespace().collect();
                    let b: Vec<&str> = quad.split_whitespace().collect();
                    if a.len() != 4 || b.len() != 3 {
                        return Err(syntax(ln, idx.len() + 2, "expected 4 triangle and 3 quad entries"));
                    }
                    a.into_iter().chain(b).collect()
                }
                System::Quad => {
                    let a: Vec<&str> = rest.split_whitespace().collect();
                    if a.len() != 3 {
                        return Err(syntax(ln, idx.len() + 2, "expected 3 quad entries"));
                    }
                    a
                }
            };
            for (k, s) in nums.iter().enumerate() {
                let col = line.find(s).unwrap_or(0) + 1;
                values[w * t + k] = s
                    .parse()
                    .map_err(|_| syntax(ln, col, "expected a non-negative integer"))?;
            }
        }
        if let Some(t) = seen.iter().position(|&s| !s) {
            return Err(syntax(hl, 1, &format!("missing row {t}")));
        }
        Ok(NormalCoordinates { system, values })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LinearSystem {
    pub system: System,
    pub columns: usize,
    pub rows: Vec<Vec<i64>>,
    pub labels: Vec<String>,
}

impl LinearSystem {
    pub fn residual(&self, x: &[u64]) -> Option<usize> {
        self.rows.iter().position(|r| {
            r.iter()
                .zip(x)
                .map(|(&a, &b)| a as i128 * b as i128)
                .sum::<i128>()
                != 0
        })
    }

    pub fn is_satisfied(&self, x: &[u64]) -> bool {
        self.residual(x).is_none()
    }
}

fn std_tri(t: usize, v: usize) -> usize {
    7 * t + v
}

fn std_quad(t: usize, k: usize) -> usize {
    7 * t + 4 + k
}

pub fn matching_system(tri: &Triangulation, system: System) -> Result<LinearSystem> {
    let sk = Skeleton::compute(tri);
    matching_system_with(tri, &sk, system)
}

pub fn matching_system_with(tri: &Triangulation, sk: &Skeleton, system: System) -> Result<LinearSystem> {
    match system {
        System::Standard => Ok(standard_system(tri, sk)),
        System::Quad => quad_system(tri, sk),
    }
}

fn standard_system(tri: &Triangulation, sk: &Skeleton) -> LinearSystem {
    let n = tri.size();
    let mut rows = Vec::new();
    let mut labels = Vec::new();
    for (c, &(t, f)) in sk.face_rep.iter().enumerate() {
        let Some(g) = tri.gluing(t, f) else { continue };
        let (t2, f2) = (g.tet, g.perm.apply(f));
        for a in face_vertices(f) {
            let a2 = g.perm.apply(a);
            let mut row: BTreeMap<usize, i64> = BTreeMap::new();
            *row.entry(std_tri(t, a)).or_default() += 1;
            *row.entry(std_quad(t, quad_separating(a, f))).or_default() += 1;
            *row.entry(std_tri(t2, a2)).or_default() -= 1;
            *row.entry(std_quad(t2, quad_separating(a2, f2))).or_default() -= 1;
            if row.values().all(|&v| v == 0) {
                continue;
            }
            let mut dense = vec![0i64; 7 * n];
            for (k, v) in row {
                dense[k] = v;
            }
            rows.push(dense);
            labels.push(format!("face {c} arc at vertex {a} of {t}:{f}"));
        }
    }
    LinearSystem {
        system: System::Standard,
        columns: 7 * n,
        rows,
        labels,
    }
}

/// Slope weights of the quads meeting edge `e` of tetrahedron `t` under
/// orientation sign `s`: returns the (+1, −1) quad types.
pub fn slope_quads(e: usize, s: i8) -> (usize, usize) {
    let (a, b) = EDGES[e];
    let mut rest = (0..4).filter(|&v| v != a && v != b);
    let (mut c, mut d) = (rest.next().unwrap(), rest.next().unwrap());
    let p = crate::perm::Perm4::new([a as u8, b as u8, c as u8, d as u8]).unwrap();
    if p.sign() * (s as i32) < 0 {
        std::mem::swap(&mut c, &mut d);
    }
    (quad_separating(a, c), quad_separating(a, d))
}

fn quad_system(tri: &Triangulation, sk: &Skeleton) -> Result<LinearSystem> {
    let n = tri.size();
    let orient = orientation(tri).ok_or(Error::NonOrientable)?;
    let mut rows = vec![vec![0i64; 3 * n]; sk.num_edges];
    for t in 0..n {
        for e in 0..6 {
            let (plus, minus) = slope_quads(e, orient[t]);
            let r = sk.edge_of[t][e];
            rows[r][3 * t + plus] += 1;
            rows[r][3 * t + minus] -= 1;
        }
    }
    let mut out_rows = Vec::new();
    let mut labels = Vec::new();
    for (e, row) in rows.into_iter().enumerate() {
        if sk.edge_boundary[e] || row.iter().all(|&v| v == 0) {
            continue;
        }
        out_rows.push(row);
        labels.push(format!("edge {e}"));
    }
    Ok(LinearSystem {
        system: System::Quad,
        columns: 3 * n,
        rows: out_rows,
        labels,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub matching_ok: bool,
    pub admissible: bool,
    /// Largest k with k copies of the link of each vertex class below x.
    pub vertex_linking_part: Vec<u64>,
    pub violated_row: Option<String>,
    pub inadmissible_tet: Option<usize>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.matching_ok && self.admissible
    }
}

pub fn validate_coordinates(tri: &Triangulation, x: &NormalCoordinates) -> Result<ValidationReport> {
    let sk = Skeleton::compute(tri);
    validate_with(tri, &sk, x)
}

pub fn validate_with(tri: &Triangulation, sk: &Skeleton, x: &NormalCoordinates) -> Result<ValidationReport> {
    let n = tri.size();
    let expected = x.system.width() * n;
    if x.values.len() != expected {
        return Err(Error::DimensionMismatch { expected, found: x.values.len() });
    }
    let sys = matching_system_with(tri, sk, x.system)?;
    let violated = sys.residual(&x.values);
    let vertex_linking_part = match x.system {
        System::Quad => vec![0; sk.num_vertices],
        System::Standard => {
            let mut m = vec![u64::MAX; sk.num_vertices];
            for t in 0..n {
                for v in 0..4 {
                    let c = sk.vertex_of[t][v];
                    m[c] = m[c].min(x.triangle(t, v));
                }
            }
            m
        }
    };
    let bad = x.first_inadmissible();
    Ok(ValidationReport {
        matching_ok: violated.is_none(),
        admissible: bad.is_none(),
        vertex_linking_part,
        violated_row: violated.map(|r| sys.labels[r].clone()),
        inadmissible_tet: bad,
    })
}

pub fn quad_projection(x: &NormalCoordinates) -> NormalCoordinates {
    match x.system {
        System::Quad => x.clone(),
        System::Standard => NormalCoordinates {
            system: System::Quad,
            values: (0..x.tetrahedra())
                .flat_map(|t| (0..3).map(move |k| (t, k)))
                .map(|(t, k)| x.quad(t, k))
                .collect(),
        },
    }
}

/// The smallest standard solution with quadrilateral part `y`.
pub fn lift_to_standard(tri: &Triangulation, y: &NormalCoordinates) -> Result<NormalCoordinates> {
    let sk = Skeleton::compute(tri);
    lift_with(tri, &sk, y)
}

pub fn lift_with(tri: &Triangulation, sk: &Skeleton, y: &NormalCoordinates) -> Result<NormalCoordinates> {
    let n = tri.size();
    if y.system != System::Quad {
        return Err(Error::InvalidInput("lift expects quadrilateral coordinates".into()));
    }
    if y.values.len() != 3 * n {
        return Err(Error::DimensionMismatch { expected: 3 * n, found: y.values.len() });
    }
    if let Some(t) = y.first_inadmissible() {
        return Err(Error::NotAdmissible { tet: t });
    }
    if orientation(tri).is_some() {
        let q = quad_system(tri, sk)?;
        if let Some(r) = q.residual(&y.values) {
            return Err(Error::NoLift(format!("Q-matching violated at {}", q.labels[r])));
        }
    }
    let yq = |t: usize, k: usize| y.values[3 * t + k] as i128;
    // potentials on tetrahedron corners, propagated across faces
    let mut pot: Vec<Option<i128>> = vec![None; 4 * n];
    for start in 0..4 * n {
        if pot[start].is_some() {
            continue;
        }
        pot[start] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(c) = queue.pop_front() {
            let (t, a) = (c / 4, c % 4);
            let here = pot[c].unwrap();
            for f in 0..4 {
                if f == a {
                    continue;
                }
                let Some(g) = tri.gluing(t, f) else { continue };
                let (t2, a2, f2) = (g.tet, g.perm.apply(a), g.perm.apply(f));
                let want = here + yq(t, quad_separating(a, f)) - yq(t2, quad_separating(a2, f2));
                let d = 4 * t2 + a2;
                match pot[d] {
                    None => {
                        pot[d] = Some(want);
                        queue.push_back(d);
                    }
                    Some(p) if p != want => {
                        return Err(Error::NoLift(format!(
                            "inconsistent triangle counts around vertex {}",
                            sk.vertex_of[t][a]
                        )));
                    }
                    _ => {}
                }
            }
        }
    }
    let mut low = vec![i128::MAX; sk.num_vertices];
    for t in 0..n {
        for a in 0..4 {
            let v = sk.vertex_of[t][a];
            low[v] = low[v].min(pot[4 * t + a].unwrap());
        }
    }
    let mut x = NormalCoordinates::zero(System::Standard, n);
    for t in 0..n {
        for a in 0..4 {
            let v = pot[4 * t + a].unwrap() - low[sk.vertex_of[t][a]];
            x.values[7 * t + a] =
                u64::try_from(v).map_err(|_| Error::Internal("lift overflow".into()))?;
        }
        for k in 0..3 {
            x.values[7 * t + 4 + k] = y.values[3 * t + k];
        }
    }
    Ok(x)
}

/// Coordinate-wise `Σ mᵢ·xᵢ` of compatible standard vectors.
pub fn haken_sum(tri: &Triangulation, summands: &[(u64, NormalCoordinates)]) -> Result<NormalCoordinates> {
    let n = tri.size();
    let mut out = NormalCoordinates::zero(System::Standard, n);
    for (m, x) in summands {
        if x.system != System::Standard {
            return Err(Error::InvalidInput("Haken sums take standard coordinates".into()));
        }
        if x.values.len() != 7 * n {
            return Err(Error::DimensionMismatch { expected: 7 * n, found: x.values.len() });
        }
        for (o, &v) in out.values.iter_mut().zip(&x.values) {
            *o = v
                .checked_mul(*m)
                .and_then(|p| o.checked_add(p))
                .ok_or_else(|| Error::InvalidInput("coordinate overflow".into()))?;
        }
    }
    if let Some(t) = out.first_inadmissible() {
        return Err(Error::Incompatible { tet: t });
    }
    Ok(out)
}

pub fn vertex_link_coordinates(tri: &Triangulation, sk: &Skeleton, vertex: usize) -> Result<NormalCoordinates> {
    if vertex >= sk.num_vertices {
        return Err(Error::IndexOutOfRange { index: vertex, size: sk.num_vertices });
    }
    let mut x = NormalCoordinates::zero(System::Standard, tri.size());
    for t in 0..tri.size() {
        for a in 0..4 {
            if sk.vertex_of[t][a] == vertex {
                x.values[7 * t + a] += 1;
            }
        }
    }
    Ok(x)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TypeCensus {
    pub a_red: usize,
    pub a_blue: usize,
    pub b_red: usize,
    pub b_blue: usize,
    pub c: usize,
}

/// The canonical splitting surface of a red/blue colouring of vertex
/// classes (`true` = red).
pub fn splitting_coordinates(
    tri: &Triangulation,
    sk: &Skeleton,
    red: &[bool],
) -> Result<(NormalCoordinates, TypeCensus)> {
    if red.len() != sk.num_vertices {
        return Err(Error::DimensionMismatch { expected: sk.num_vertices, found: red.len() });
    }
    if red.iter().all(|&r| r) || red.iter().all(|&r| !r) {
        return Err(Error::Precondition("colouring is monochromatic".into()));
    }
    let mut x = NormalCoordinates::zero(System::Standard, tri.size());
    let mut census = TypeCensus::default();
    for t in 0..tri.size() {
        let reds: Vec<usize> = (0..4).filter(|&v| red[sk.vertex_of[t][v]]).collect();
        let blues: Vec<usize> = (0..4).filter(|&v| !red[sk.vertex_of[t][v]]).collect();
        match reds.len() {
            4 => census.a_red += 1,
            0 => census.a_blue += 1,
            3 => {
                census.b_red += 1;
                x.values[7 * t + blues[0]] = 1;
            }
            1 => {
                census.b_blue += 1;
                x.values[7 * t + reds[0]] = 1;
            }
            _ => {
                census.c += 1;
                x.values[7 * t + 4 + quad_separating(reds[0], reds[1])] = 1;
            }
        }
    }
    Ok((x, census))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quad_types_are_consistent() {
        for k in 0..3 {
            let [[a, b], [c, d]] = quad_pairs(k);
            assert_eq!(quad_separating(a, b), k);
            assert_eq!(quad_separating(c, d), k);
            assert_eq!(quad_separating(b, a), k);
        }
    }

    #[test]
    fn surface_text_round_trip() {
        let text = "surface std 2\n0: 1 0 0 2 ; 0 1 0\n1: 0 0 0 0 ; 3 0 0  # comment\n";
        let x = NormalCoordinates::parse(text).unwrap();
        assert_eq!(x.values, vec![1, 0, 0, 2, 0, 1, 0, 0, 0, 0, 0, 3, 0, 0]);
        assert_eq!(NormalCoordinates::parse(&x.to_text()).unwrap(), x);
        let q = NormalCoordinates::parse("surface quad 1\n0: 0 1 0\n").unwrap();
        assert_eq!(q.quad_count(), 1);
        assert!(NormalCoordinates::parse("surface std 1\n0: 1 2 3 ; 0 0 0\n").is_err());
    }

    #[test]
    fn two_quad_types_are_inadmissible() {
        let mut x = NormalCoordinates::zero(System::Quad, 2);
        x.values[3] = 1;
        x.values[5] = 2;
        assert_eq!(x.first_inadmissible(), Some(1));
    }
}

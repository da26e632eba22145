//! Semi-simplicial triangulations given by face pairings, and the gluing
//! table text format.
//!
//! Faces are indexed by their opposite vertex: face `f` of a tetrahedron
//! is spanned by the three vertices other than `f`. A gluing of face `f`
//! of tetrahedron `t` records the target tetrahedron and a full
//! permutation of `{0,1,2,3}` that carries the vertices of `t` to the
//! vertices of the target, the opposite vertex `f` going to the opposite
//! vertex of the target face.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::perm::Perm4;

/// Face indices in the column order of the text format:
/// `(012) (013) (023) (123)`.
pub const COLUMN_FACES: [usize; 4] = [3, 2, 1, 0];

/// Vertices of face `f` in increasing order.
pub fn face_vertices(f: usize) -> [usize; 3] {
    match f {
        0 => [1, 2, 3],
        1 => [0, 2, 3],
        2 => [0, 1, 3],
        3 => [0, 1, 2],
        _ => panic!("face index {f} out of range"),
    }
}

/// The six edges of a tetrahedron, as increasing vertex pairs.
pub const EDGES: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Index into [`EDGES`] of the edge joining `a` and `b`.
pub fn edge_index(a: usize, b: usize) -> usize {
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    match (lo, hi) {
        (0, 1) => 0,
        (0, 2) => 1,
        (0, 3) => 2,
        (1, 2) => 3,
        (1, 3) => 4,
        (2, 3) => 5,
        _ => panic!("not an edge: {a}{b}"),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Gluing {
    pub tet: usize,
    pub perm: Perm4,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    gluings: Vec<[Option<Gluing>; 4]>,
}

impl Triangulation {
    /// Validates and wraps a raw gluing table.
    pub fn from_gluings(gluings: Vec<[Option<Gluing>; 4]>) -> Result<Triangulation> {
        let tri = Triangulation { gluings };
        tri.check()?;
        Ok(tri)
    }

    fn check(&self) -> Result<()> {
        let n = self.size();
        for t in 0..n {
            for f in 0..4 {
                let Some(g) = self.gluings[t][f] else { continue };
                if g.tet >= n {
                    return Err(Error::IndexOutOfRange { index: g.tet, size: n });
                }
                let f2 = g.perm.apply(f);
                if g.tet == t && f2 == f {
                    return Err(Error::SelfGluedFace { tet: t, face: f });
                }
                match self.gluings[g.tet][f2] {
                    Some(back) if back.tet == t && back.perm == g.perm.inverse() => {}
                    _ => return Err(Error::NonInvolutive { tet: t, face: f }),
                }
            }
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.gluings.len()
    }

    pub fn gluing(&self, tet: usize, face: usize) -> Option<Gluing> {
        self.gluings[tet][face]
    }

    pub fn is_boundary(&self, tet: usize, face: usize) -> bool {
        self.gluings[tet][face].is_none()
    }

    pub fn is_closed(&self) -> bool {
        self.gluings.iter().all(|row| row.iter().all(Option::is_some))
    }

    pub fn boundary_face_count(&self) -> usize {
        self.gluings
            .iter()
            .map(|row| row.iter().filter(|g| g.is_none()).count())
            .sum()
    }

    pub fn raw(&self) -> &[[Option<Gluing>; 4]] {
        &self.gluings
    }

    /// Relabels tetrahedra: tetrahedron `t` becomes `order[t]`.
    pub fn relabel(&self, order: &[usize]) -> Result<Triangulation> {
        let n = self.size();
        if order.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: order.len() });
        }
        let mut out = vec![[None; 4]; n];
        for t in 0..n {
            for f in 0..4 {
                out[order[t]][f] = self.gluings[t][f].map(|g| Gluing {
                    tet: order[g.tet],
                    perm: g.perm,
                });
            }
        }
        Triangulation::from_gluings(out)
    }

    /// The double along the boundary: two copies, with each boundary face
    /// of the first copy glued identically to its twin in the second.
    pub fn double(&self) -> Result<Triangulation> {
        if self.is_closed() {
            return Err(Error::Precondition(
                "cannot double a closed triangulation".into(),
            ));
        }
        let n = self.size();
        let mut out = vec![[None; 4]; 2 * n];
        for t in 0..n {
            for f in 0..4 {
                match self.gluings[t][f] {
                    Some(g) => {
                        out[t][f] = Some(g);
                        out[t + n][f] = Some(Gluing { tet: g.tet + n, perm: g.perm });
                    }
                    None => {
                        out[t][f] = Some(Gluing { tet: t + n, perm: Perm4::IDENTITY });
                        out[t + n][f] = Some(Gluing { tet: t, perm: Perm4::IDENTITY });
                    }
                }
            }
        }
        Triangulation::from_gluings(out)
    }

    /// Serializes to the gluing table text format.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "tri {}", self.size()).unwrap();
        for (t, row) in self.gluings.iter().enumerate() {
            write!(s, "{t}:").unwrap();
            for &f in &COLUMN_FACES {
                match row[f] {
                    None => s.push_str(" bdy"),
                    Some(g) => {
                        let img: String = face_vertices(f)
                            .iter()
                            .map(|&v| char::from(b'0' + g.perm.apply(v) as u8))
                            .collect();
                        write!(s, " {}({})", g.tet, img).unwrap();
                    }
                }
            }
            s.push('\n');
        }
        s
    }

    /// Parses the gluing table text format.
    pub fn parse(text: &str) -> Result<Triangulation> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l))
            .filter(|(_, l)| {
                let t = l.trim();
                !t.is_empty() && !t.starts_with('#')
            });
        let (hline, header) = lines.next().ok_or(Error::Syntax {
            line: 1,
            column: 1,
            message: "empty document".into(),
        })?;
        let n = parse_header(hline, header)?;
        let mut rows: Vec<Option<[Option<(usize, [u8; 3])>; 4]>> = vec![None; n];
        for (lineno, line) in lines {
            let (idx, entries) = parse_row(lineno, line)?;
            if idx >= n {
                return Err(Error::IndexOutOfRange { index: idx, size: n });
            }
            if rows[idx].is_some() {
                return Err(syntax(lineno, 1, format!("duplicate row for tetrahedron {idx}")));
            }
            rows[idx] = Some(entries);
        }
        let mut gluings = vec![[None; 4]; n];
        for (t, row) in rows.into_iter().enumerate() {
            let row = row.ok_or_else(|| syntax(0, 0, format!("missing row for tetrahedron {t}")))?;
            for (col, entry) in row.into_iter().enumerate() {
                let f = COLUMN_FACES[col];
                if let Some((target, img)) = entry {
                    if target >= n {
                        return Err(Error::IndexOutOfRange { index: target, size: n });
                    }
                    let from = face_vertices(f).map(|v| v as u8);
                    let perm = Perm4::from_face_map(from, img).ok_or_else(|| {
                        syntax(0, 0, format!("bad vertex images in tetrahedron {t}"))
                    })?;
                    gluings[t][f] = Some(Gluing { tet: target, perm });
                }
            }
        }
        Triangulation::from_gluings(gluings)
    }
}

fn syntax(line: usize, column: usize, message: String) -> Error {
    Error::Syntax { line, column, message }
}

fn parse_header(lineno: usize, line: &str) -> Result<usize> {
    let mut parts = line.split_whitespace();
    match (parts.next(), parts.next(), parts.next()) {
        (Some("tri"), Some(n), None) => n
            .parse::<usize>()
            .map_err(|_| syntax(lineno, column_of(line, n), format!("bad tetrahedron count `{n}`"))),
        _ => Err(syntax(lineno, 1, "expected header `tri <n>`".into())),
    }
}

fn column_of(line: &str, token: &str) -> usize {
    line.find(token).map(|c| c + 1).unwrap_or(1)
}

type RowEntries = [Option<(usize, [u8; 3])>; 4];

fn parse_row(lineno: usize, line: &str) -> Result<(usize, RowEntries)> {
    let colon = line
        .find(':')
        .ok_or_else(|| syntax(lineno, 1, "expected `<index>:`".into()))?;
    let idx_str = line[..colon].trim();
    let idx = idx_str
        .parse::<usize>()
        .map_err(|_| syntax(lineno, 1, format!("bad row index `{idx_str}`")))?;
    let rest = &line[colon + 1..];
    let tokens: Vec<(usize, &str)> = tokenize(rest, colon + 2);
    if tokens.len() != 4 {
        return Err(syntax(
            lineno,
            colon + 2,
            format!("expected 4 gluing entries, found {}", tokens.len()),
        ));
    }
    let mut entries = [None; 4];
    for (slot, (col, tok)) in entries.iter_mut().zip(tokens) {
        *slot = parse_entry(lineno, col, tok)?;
    }
    Ok((idx, entries))
}

fn tokenize(s: &str, base_col: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in s.char_indices() {
        if c.is_whitespace() {
            if let Some(st) = start.take() {
                out.push((base_col + st, &s[st..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(st) = start {
        out.push((base_col + st, &s[st..]));
    }
    out
}

fn parse_entry(lineno: usize, col: usize, tok: &str) -> Result<Option<(usize, [u8; 3])>> {
    if tok == "bdy" || tok == "∂" {
        return Ok(None);
    }
    let bad = || syntax(lineno, col, format!("bad gluing entry `{tok}`"));
    let open = tok.find('(').ok_or_else(bad)?;
    if !tok.ends_with(')') {
        return Err(bad());
    }
    let target = tok[..open].parse::<usize>().map_err(|_| bad())?;
    let verts = &tok[open + 1..tok.len() - 1];
    let bytes = verts.as_bytes();
    if bytes.len() != 3 || !bytes.iter().all(|b| (b'0'..=b'3').contains(b)) {
        return Err(bad());
    }
    let img = [bytes[0] - b'0', bytes[1] - b'0', bytes[2] - b'0'];
    if img[0] == img[1] || img[0] == img[2] || img[1] == img[2] {
        return Err(bad());
    }
    Ok(Some((target, img)))
}

/// Incremental construction of a triangulation, gluing both sides of each
/// face pair at once.
#[derive(Clone, Debug)]
pub struct TriangulationBuilder {
    gluings: Vec<[Option<Gluing>; 4]>,
}

impl TriangulationBuilder {
    pub fn new(n: usize) -> Self {
        TriangulationBuilder { gluings: vec![[None; 4]; n] }
    }

    pub fn add_tetrahedron(&mut self) -> usize {
        self.gluings.push([None; 4]);
        self.gluings.len() - 1
    }

    pub fn size(&self) -> usize {
        self.gluings.len()
    }

    pub fn is_free(&self, tet: usize, face: usize) -> bool {
        self.gluings[tet][face].is_none()
    }

    /// Glues face `face` of `tet` to the face `perm(face)` of `target`.
    pub fn glue(&mut self, tet: usize, face: usize, target: usize, perm: Perm4) -> Result<()> {
        let f2 = perm.apply(face);
        if tet == target && f2 == face {
            return Err(Error::SelfGluedFace { tet, face });
        }
        if self.gluings[tet][face].is_some() || self.gluings[target][f2].is_some() {
            return Err(Error::Internal(format!(
                "face already glued: {tet}:{face} or {target}:{f2}"
            )));
        }
        self.gluings[tet][face] = Some(Gluing { tet: target, perm });
        self.gluings[target][f2] = Some(Gluing { tet, perm: perm.inverse() });
        Ok(())
    }

    /// Glues the face of `tet` spanned by `from` to the face of `target`
    /// spanned by `to`, vertex by vertex.
    pub fn glue_faces(&mut self, tet: usize, from: [u8; 3], target: usize, to: [u8; 3]) -> Result<()> {
        let perm = Perm4::from_face_map(from, to)
            .ok_or_else(|| Error::Internal(format!("bad face map {from:?} -> {to:?}")))?;
        let face = (0..4).find(|v| !from.contains(&(*v as u8))).unwrap();
        self.glue(tet, face, target, perm)
    }

    pub fn unglue(&mut self, tet: usize, face: usize) {
        if let Some(g) = self.gluings[tet][face].take() {
            self.gluings[g.tet][g.perm.apply(face)] = None;
        }
    }

    pub fn build(self) -> Result<Triangulation> {
        Triangulation::from_gluings(self.gluings)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TWO_TET_BAD: &str = "tri 2\n0: 1(012) bdy bdy bdy\n1: 0(013) bdy bdy bdy\n";

    #[test]
    fn non_involutive_table_is_rejected() {
        let err = Triangulation::parse(TWO_TET_BAD).unwrap_err();
        assert!(matches!(err, Error::NonInvolutive { .. }), "{err:?}");
    }

    #[test]
    fn self_glued_face_is_rejected() {
        let text = "tri 1\n0: 0(012) bdy bdy bdy\n";
        assert!(matches!(
            Triangulation::parse(text).unwrap_err(),
            Error::SelfGluedFace { .. }
        ));
    }

    #[test]
    fn out_of_range_and_syntax_errors() {
        let text = "tri 1\n0: 3(012) bdy bdy bdy\n";
        assert!(matches!(
            Triangulation::parse(text).unwrap_err(),
            Error::IndexOutOfRange { index: 3, size: 1 }
        ));
        let err = Triangulation::parse("tri 1\n0: bdy bdy 0(0x2) bdy\n").unwrap_err();
        match err {
            Error::Syntax { line, column, .. } => {
                assert_eq!(line, 2);
                assert_eq!(column, 12);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            Triangulation::parse("trio 2").unwrap_err(),
            Error::Syntax { line: 1, .. }
        ));
    }

    #[test]
    fn single_simplex_doubles_to_closed_pair() {
        let one = Triangulation::parse("tri 1\n0: bdy bdy bdy bdy\n").unwrap();
        let d = one.double().unwrap();
        assert_eq!(d.size(), 2);
        assert!(d.is_closed());
        assert!(d.double().is_err());
    }

    #[test]
    fn comments_and_round_trip() {
        let text = "# a fold\ntri 1\n0: 0(013) 0(012) bdy bdy\n";
        let t = Triangulation::parse(text).unwrap();
        assert_eq!(t.to_text(), "tri 1\n0: 0(013) 0(012) bdy bdy\n");
        assert_eq!(Triangulation::parse(&t.to_text()).unwrap(), t);
    }

    #[test]
    fn boundary_symbol_synonym() {
        let a = Triangulation::parse("tri 1\n0: ∂ ∂ ∂ ∂\n").unwrap();
        assert_eq!(a.boundary_face_count(), 4);
        assert_eq!(a.to_text(), "tri 1\n0: bdy bdy bdy bdy\n");
    }
}

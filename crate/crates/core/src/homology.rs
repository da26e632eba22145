//! Integral homology of the quotient cell structure.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::skeleton::Skeleton;
use crate::tri::{edge_index, face_vertices, Triangulation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyProfile {
    pub betti: [usize; 4],
    /// Torsion coefficients of H₁, each greater than one.
    pub torsion: Vec<String>,
}

impl HomologyProfile {
    pub fn h1_trivial(&self) -> bool {
        self.betti[1] == 0 && self.torsion.is_empty()
    }
}

/// Boundary matrices ∂₁, ∂₂, ∂₃ of the quotient cell complex, each stored
/// as rows indexed by the lower-dimensional cells.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    pub dims: [usize; 4],
    pub boundary: [Vec<Vec<i64>>; 3],
}

impl ChainComplex {
    pub fn build(tri: &Triangulation, sk: &Skeleton) -> ChainComplex {
        let n = tri.size();
        let (nv, ne, nf) = (sk.num_vertices, sk.num_edges, sk.num_faces);
        let mut d1 = vec![vec![0i64; ne]; nv];
        for (e, &(tail, head)) in sk.edge_ends.iter().enumerate() {
            d1[head][e] += 1;
            d1[tail][e] -= 1;
        }
        let mut d2 = vec![vec![0i64; nf]; ne];
        for (c, &(t, f)) in sk.face_rep.iter().enumerate() {
            let [v0, v1, v2] = face_vertices(f);
            for (a, b, s) in [(v1, v2, 1), (v0, v2, -1), (v0, v1, 1)] {
                let e = edge_index(a, b);
                let s = if sk.edge_flipped[t][e] { -s } else { s };
                d2[sk.edge_of[t][e]][c] += s;
            }
        }
        let mut d3 = vec![vec![0i64; n]; nf];
        for t in 0..n {
            for f in 0..4 {
                let c = sk.face_of[t][f];
                let rel = face_orientation_relative_to_rep(tri, sk, t, f);
                let s = if f % 2 == 0 { 1 } else { -1 };
                d3[c][t] += s * rel;
            }
        }
        ChainComplex {
            dims: [nv, ne, nf, n],
            boundary: [d1, d2, d3],
        }
    }
}

/// +1 when face `f` of `t` with sorted vertex order agrees with the sorted
/// order of its class representative.
fn face_orientation_relative_to_rep(tri: &Triangulation, sk: &Skeleton, t: usize, f: usize) -> i64 {
    let (rt, rf) = sk.face_rep[sk.face_of[t][f]];
    if (rt, rf) == (t, f) {
        return 1;
    }
    let g = tri.gluing(rt, rf).expect("non-representative face is glued");
    debug_assert_eq!((g.tet, g.perm.apply(rf)), (t, f));
    let img = face_vertices(rf).map(|v| g.perm.apply(v));
    let mut inv = 0;
    for i in 0..3 {
        for j in i + 1..3 {
            if img[i] > img[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Diagonal of the Smith normal form (non-zero entries only, positive).
pub fn smith_diagonal(m: &[Vec<i64>]) -> Vec<BigInt> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut diag = Vec::new();
    let mut r0 = 0;
    let mut c0 = 0;
    while r0 < rows && c0 < cols {
        // pivot: smallest non-zero absolute value in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in r0..rows {
            for j in c0..cols {
                if !a[i][j].is_zero()
                    && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(r0, pi);
        for row in a.iter_mut() {
            row.swap(c0, pj);
        }
        loop {
            let p = a[r0][c0].clone();
            let mut dirty = false;
            for i in r0 + 1..rows {
                if a[i][c0].is_zero() {
                    continue;
                }
                let q = a[i][c0].div_floor(&p);
                for j in c0..cols {
                    let v = &a[r0][j] * &q;
                    a[i][j] -= v;
                }
                if !a[i][c0].is_zero() {
                    dirty = true;
                }
            }
            for j in c0 + 1..cols {
                if a[r0][j].is_zero() {
                    continue;
                }
                let q = a[r0][j].div_floor(&p);
                for row in a.iter_mut().skip(r0) {
                    let v = &row[c0] * &q;
                    row[j] -= v;
                }
                if !a[r0][j].is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                // enforce divisibility of the remaining block by the pivot
                let bad = (r0 + 1..rows)
                    .flat_map(|i| (c0 + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| !(&a[i][j] % &p).is_zero());
                match bad {
                    None => break,
                    Some((i, _)) => {
                        for j in c0..cols {
                            let v = a[i][j].clone();
                            a[r0][j] += v;
                        }
                        continue;
                    }
                }
            }
            // move the smallest entry of the pivot row/column into place
            let mut best = (r0, c0);
            for i in r0..rows {
                if !a[i][c0].is_zero() && a[i][c0].abs() < a[best.0][best.1].abs() {
                    best = (i, c0);
                }
            }
            for j in c0..cols {
                if !a[r0][j].is_zero() && a[r0][j].abs() < a[best.0][best.1].abs() {
                    best = (r0, j);
                }
            }
            a.swap(r0, best.0);
            for row in a.iter_mut() {
                row.swap(c0, best.1);
            }
        }
        diag.push(a[r0][c0].abs());
        r0 += 1;
        c0 += 1;
    }
    diag
}

pub fn homology(tri: &Triangulation) -> HomologyProfile {
    let sk = Skeleton::compute(tri);
    homology_with(tri, &sk)
}

pub fn homology_with(tri: &Triangulation, sk: &Skeleton) -> HomologyProfile {
    let cc = ChainComplex::build(tri, sk);
    let diags: Vec<Vec<BigInt>> = cc.boundary.iter().map(|m| smith_diagonal(m)).collect();
    let rank = |k: usize| -> usize {
        // rank of ∂_k for k = 1..3, zero otherwise
        if (1..=3).contains(&k) {
            diags[k - 1].len()
        } else {
            0
        }
    };
    let mut betti = [0usize; 4];
    for (k, b) in betti.iter_mut().enumerate() {
        *b = cc.dims[k] - rank(k) - rank(k + 1);
    }
    let torsion = diags[1]
        .iter()
        .filter(|d| !d.is_one())
        .map(|d| d.to_string())
        .collect();
    HomologyProfile { betti, torsion }
}

/// Checks ∂∘∂ = 0; used as a self-test of the sign conventions.
pub fn boundary_squares_to_zero(cc: &ChainComplex) -> bool {
    for k in 0..2 {
        let (lo, hi) = (&cc.boundary[k], &cc.boundary[k + 1]);
        for row in lo {
            for c in 0..cc.dims[k + 2] {
                let s: i64 = (0..cc.dims[k + 1]).map(|m| row[m] * hi[m][c]).sum();
                if s != 0 {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smith_of_small_matrices() {
        assert_eq!(smith_diagonal(&[vec![2, 4], vec![6, 8]]), vec![2.into(), 4.into()]);
        assert_eq!(smith_diagonal(&[vec![2, 0], vec![0, 3]]), vec![1.into(), 6.into()]);
        assert!(smith_diagonal(&[vec![0, 0]]).is_empty());
    }

    #[test]
    fn doubled_simplex_is_a_homology_sphere() {
        let t = Triangulation::parse("tri 1\n0: bdy bdy bdy bdy\n")
            .unwrap()
            .double()
            .unwrap();
        let sk = Skeleton::compute(&t);
        assert!(boundary_squares_to_zero(&ChainComplex::build(&t, &sk)));
        let h = homology(&t);
        assert_eq!(h.betti, [1, 0, 0, 1]);
        assert!(h.torsion.is_empty());
    }

    #[test]
    fn simplex_is_contractible() {
        let t = Triangulation::parse("tri 1\n0: bdy bdy bdy bdy\n").unwrap();
        assert_eq!(homology(&t).betti, [1, 0, 0, 0]);
    }
}

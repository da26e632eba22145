//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use normsurf::coords::{matching_system_with, System};
use normsurf::homology::ChainComplex;
use normsurf::{Skeleton, Triangulation};

/// Rank of an integer matrix over GF(p).
pub fn rank_mod_p(m: &[Vec<i64>], p: i64) -> usize {
    let mut a: Vec<Vec<i64>> = m.iter().map(|r| r.iter().map(|x| x.rem_euclid(p)).collect()).collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..a.len()).find(|&i| a[i][c] != 0) else { continue };
        a.swap(rank, piv);
        let inv = pow_mod(a[rank][c], p - 2, p);
        for x in a[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..a.len() {
            if i != rank && a[i][c] != 0 {
                let f = a[i][c];
                for k in 0..cols {
                    a[i][k] = (a[i][k] - f * a[rank][k]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: i64, mut e: i64, p: i64) -> i64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Betti numbers over GF(p) of the assembled cell complex.
pub fn betti_mod_p(tri: &Triangulation, p: i64) -> [usize; 4] {
    let sk = Skeleton::compute(tri);
    let cc = ChainComplex::build(tri, &sk);
    let r: Vec<usize> = cc.boundary.iter().map(|m| rank_mod_p(m, p)).collect();
    let rank = |k: usize| if (1..=3).contains(&k) { r[k - 1] } else { 0 };
    let mut b = [0; 4];
    for (k, x) in b.iter_mut().enumerate() {
        *x = cc.dims[k] - rank(k) - rank(k + 1);
    }
    b
}

/// Kernel of `rows` restricted to `cols`, if it is one dimensional and
/// spanned by a vector positive on every column; as a primitive integer vector.
fn positive_kernel_line(rows: &[Vec<i64>], cols: &[usize]) -> Option<Vec<BigInt>> {
    let k = cols.len();
    let mut a: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| cols.iter().map(|&c| BigRational::from_integer(r[c].into())).collect())
        .filter(|r: &Vec<BigRational>| r.iter().any(|x| !x.is_zero()))
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..k {
        let Some(piv) = (rank..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(rank, piv);
        let inv = a[rank][c].recip();
        for x in a[rank].iter_mut() {
            *x *= &inv;
        }
        for i in 0..a.len() {
            if i != rank && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..k {
                    let d = &f * &a[rank][j];
                    a[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        rank += 1;
    }
    if k - rank != 1 {
        return None;
    }
    let free = (0..k).find(|c| !pivots.contains(c)).unwrap();
    let mut x = vec![BigRational::zero(); k];
    x[free] = BigRational::one();
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = -a[row][free].clone();
    }
    if x.iter().all(|v| v.is_negative()) {
        for v in x.iter_mut() {
            *v = -v.clone();
        }
    }
    if !x.iter().all(|v| v.is_positive()) {
        return None;
    }
    let lcm = x.iter().fold(BigInt::one(), |l, v| l.lcm(v.denom()));
    let ints: Vec<BigInt> = x.iter().map(|v| (v * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, v| g.gcd(v));
    Some(ints.into_iter().map(|v| v / &g).collect())
}

/// Admissible extreme rays found by enumerating supports: a support carries
/// an extreme ray exactly when the matching equations restricted to it have
/// a one dimensional kernel spanned by a positive vector.
pub fn support_enumeration(tri: &Triangulation, system: System) -> BTreeSet<Vec<u64>> {
    let sk = Skeleton::compute(tri);
    let sys = matching_system_with(tri, &sk, system).unwrap();
    let d = sys.columns;
    let (width, quad_start) = match system {
        System::Standard => (7, 4),
        System::Quad => (3, 0),
    };
    // rows to check once their last column is decided
    let mut due: Vec<Vec<usize>> = vec![Vec::new(); d];
    for (i, r) in sys.rows.iter().enumerate() {
        if let Some(last) = r.iter().rposition(|&x| x != 0) {
            due[last].push(i);
        }
    }
    let mut out = BTreeSet::new();
    let mut chosen = vec![false; d];
    search(&sys.rows, &due, width, quad_start, 0, &mut chosen, &mut out);
    out
}

fn search(
    rows: &[Vec<i64>],
    due: &[Vec<usize>],
    width: usize,
    quad_start: usize,
    c: usize,
    chosen: &mut Vec<bool>,
    out: &mut BTreeSet<Vec<u64>>,
) {
    let d = chosen.len();
    if c == d {
        let cols: Vec<usize> = (0..d).filter(|&i| chosen[i]).collect();
        if cols.is_empty() {
            return;
        }
        if let Some(v) = positive_kernel_line(rows, &cols) {
            let mut x = vec![0u64; d];
            for (&c, v) in cols.iter().zip(v) {
                x[c] = v.try_into().unwrap();
            }
            out.insert(x);
        }
        return;
    }
    for take in [false, true] {
        if take {
            let t = c / width;
            let local = c % width;
            if local >= quad_start && (quad_start..local).any(|q| chosen[t * width + q]) {
                continue;
            }
        }
        chosen[c] = take;
        // a row met on one side only forces its support to vanish
        let consistent = due[c].iter().all(|&r| {
            let pos = rows[r].iter().enumerate().any(|(i, &a)| a > 0 && chosen[i]);
            let neg = rows[r].iter().enumerate().any(|(i, &a)| a < 0 && chosen[i]);
            pos == neg
        });
        if consistent {
            search(rows, due, width, quad_start, c + 1, chosen, out);
        }
        chosen[c] = false;
    }
}

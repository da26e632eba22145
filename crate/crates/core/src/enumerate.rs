//! Extreme rays of `{x ≥ 0, Ax = 0}` by the double description method,
//! and vertex normal surfaces.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::coords::{lift_with, matching_system_with, LinearSystem, NormalCoordinates, System};
use crate::error::{Error, Result};
use crate::skeleton::Skeleton;
use crate::tri::Triangulation;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Adjacency {
    /// No third ray vanishes wherever both candidates vanish.
    #[default]
    Combinatorial,
    /// Rank of the constraints active on both candidates.
    Algebraic,
}

#[derive(Clone, Debug, Default)]
pub struct DdOptions {
    pub adjacency: Adjacency,
    /// Groups of columns of which at most one may be non-zero; rays
    /// violating this are discarded as soon as they appear.
    pub exclusive_groups: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RayList {
    pub rays: Vec<Vec<BigInt>>,
    pub admissible: Vec<bool>,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(d: usize) -> Bits {
        Bits(vec![0; d.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn contains(&self, o: &Bits) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a & b == *b)
    }
}

struct Ray {
    v: Vec<BigInt>,
    zero: Bits,
}

fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && g != BigInt::from(1) {
        for x in &mut v {
            *x /= &g;
        }
    }
    v
}

fn zero_set(v: &[BigInt]) -> Bits {
    let mut z = Bits::new(v.len());
    for (i, x) in v.iter().enumerate() {
        if x.is_zero() {
            z.set(i);
        }
    }
    z
}

/// Rows of `rows` that are linearly independent of their predecessors.
fn independent_rows(rows: &[Vec<i64>]) -> Vec<usize> {
    let mut basis: Vec<(usize, Vec<BigInt>)> = Vec::new();
    let mut keep = Vec::new();
    for (r, row) in rows.iter().enumerate() {
        let mut v: Vec<BigInt> = row.iter().map(|&x| BigInt::from(x)).collect();
        for (p, b) in &basis {
            if v[*p].is_zero() {
                continue;
            }
            let (f, g) = (b[*p].clone(), v[*p].clone());
            for (x, y) in v.iter_mut().zip(b) {
                *x = &*x * &f - y * &g;
            }
            v = primitive(v);
        }
        if let Some(p) = v.iter().position(|x| !x.is_zero()) {
            basis.push((p, v));
            keep.push(r);
        }
    }
    keep
}

fn rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let mut r = 0;
    let cols = m.first().map_or(0, |row| row.len());
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let (f, g) = (m[r][c].clone(), m[i][c].clone());
            let pivot = m[r].clone();
            for (x, y) in m[i].iter_mut().zip(&pivot) {
                *x = &*x * &f - y * &g;
            }
        }
        r += 1;
    }
    r
}

fn violates_groups(zero: &Bits, groups: &[Vec<usize>]) -> bool {
    groups
        .iter()
        .any(|g| g.iter().filter(|&&c| !zero.get(c)).count() > 1)
}

/// Extreme rays of the cone `{x ≥ 0, Ax = 0}`, primitive and sorted.
pub fn extreme_rays(sys: &LinearSystem, opts: &DdOptions) -> Result<RayList> {
    let d = sys.columns;
    if let Some(row) = sys.rows.iter().find(|r| r.len() != d) {
        return Err(Error::DimensionMismatch { expected: d, found: row.len() });
    }
    let rows = independent_rows(&sys.rows);
    let mut rays: Vec<Ray> = (0..d)
        .map(|i| {
            let mut v = vec![BigInt::zero(); d];
            v[i] = BigInt::from(1);
            let zero = zero_set(&v);
            Ray { v, zero }
        })
        .collect();
    let mut processed: Vec<usize> = Vec::new();
    let mut pending = rows;
    let dot = |a: &[i64], ray: &Ray| -> BigInt {
        a.iter()
            .zip(&ray.v)
            .filter(|(c, x)| **c != 0 && !x.is_zero())
            .map(|(c, x)| x * *c)
            .sum()
    };
    for j in 0..pending.len() {
        // next the row creating the fewest candidate pairs, ties by index
        let (at, dots) = pending
            .iter()
            .enumerate()
            .map(|(at, &r)| {
                let dots: Vec<BigInt> = rays.iter().map(|ray| dot(&sys.rows[r], ray)).collect();
                (at, dots)
            })
            .min_by_key(|(at, dots)| {
                let p = dots.iter().filter(|x| x.is_positive()).count();
                let n = dots.iter().filter(|x| x.is_negative()).count();
                (p * n, *at)
            })
            .expect("pending rows");
        let r = pending.remove(at);
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| dots[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| dots[i].is_negative()).collect();
        let need = d.saturating_sub(j + 2);
        let mut fresh = Vec::new();
        for &p in &pos {
            for &n in &neg {
                let common = rays[p].zero.and(&rays[n].zero);
                if common.count() < need {
                    continue;
                }
                if violates_groups(&common, &opts.exclusive_groups) {
                    continue;
                }
                let adjacent = match opts.adjacency {
                    Adjacency::Combinatorial => !rays
                        .iter()
                        .enumerate()
                        .any(|(k, ray)| k != p && k != n && ray.zero.contains(&common)),
                    Adjacency::Algebraic => {
                        let mut m: Vec<Vec<BigInt>> = processed
                            .iter()
                            .map(|&q| sys.rows[q].iter().map(|&x| BigInt::from(x)).collect())
                            .collect();
                        for i in (0..d).filter(|&i| common.get(i)) {
                            let mut e = vec![BigInt::zero(); d];
                            e[i] = BigInt::from(1);
                            m.push(e);
                        }
                        rank(m) == d - 2
                    }
                };
                if !adjacent {
                    continue;
                }
                let (dp, dn) = (&dots[p], &dots[n]);
                let v: Vec<BigInt> = rays[n]
                    .v
                    .iter()
                    .zip(&rays[p].v)
                    .map(|(xn, xp)| xn * dp - xp * dn)
                    .collect();
                let v = primitive(v);
                let zero = zero_set(&v);
                fresh.push(Ray { v, zero });
            }
        }
        let mut next: Vec<Ray> = rays
            .into_iter()
            .zip(&dots)
            .filter(|(_, dt)| dt.is_zero())
            .map(|(r, _)| r)
            .collect();
        next.extend(fresh);
        rays = next;
        processed.push(r);
    }
    let mut out: Vec<(Bits, Vec<BigInt>)> = rays.into_iter().map(|r| (r.zero, r.v)).collect();
    out.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
    out.dedup_by(|a, b| a.1 == b.1);
    let admissible = out
        .iter()
        .map(|(z, _)| !violates_groups(z, &opts.exclusive_groups))
        .collect();
    Ok(RayList {
        rays: out.into_iter().map(|(_, v)| v).collect(),
        admissible,
    })
}

/// Column groups of the quadrilateral coordinates of each tetrahedron.
pub fn quad_groups(system: System, n: usize) -> Vec<Vec<usize>> {
    (0..n)
        .map(|t| match system {
            System::Standard => (7 * t + 4..7 * t + 7).collect(),
            System::Quad => (3 * t..3 * t + 3).collect(),
        })
        .collect()
}

fn to_coords(system: System, v: &[BigInt]) -> Result<NormalCoordinates> {
    let values = v
        .iter()
        .map(|x| x.to_u64())
        .collect::<Option<Vec<u64>>>()
        .ok_or_else(|| Error::Internal("coordinate does not fit in 64 bits".into()))?;
    Ok(NormalCoordinates { system, values })
}

/// Admissible vertex normal surfaces, as primitive integer vectors.
pub fn vertex_normal_surfaces(tri: &Triangulation, system: System) -> Result<Vec<NormalCoordinates>> {
    let sk = Skeleton::compute(tri);
    vertex_normal_surfaces_with(tri, &sk, system)
}

pub fn vertex_normal_surfaces_with(
    tri: &Triangulation,
    sk: &Skeleton,
    system: System,
) -> Result<Vec<NormalCoordinates>> {
    let sys = matching_system_with(tri, sk, system)?;
    let opts = DdOptions {
        adjacency: Adjacency::Combinatorial,
        exclusive_groups: quad_groups(system, tri.size()),
    };
    let list = extreme_rays(&sys, &opts)?;
    list.rays
        .iter()
        .zip(&list.admissible)
        .filter(|(_, &ok)| ok)
        .map(|(v, _)| to_coords(system, v))
        .collect()
}

/// Quad vertex surfaces lifted to their smallest standard representatives.
pub fn lifted_quad_vertex_surfaces(tri: &Triangulation, sk: &Skeleton) -> Result<Vec<NormalCoordinates>> {
    vertex_normal_surfaces_with(tri, sk, System::Quad)?
        .iter()
        .map(|y| lift_with(tri, sk, y))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn system(rows: Vec<Vec<i64>>, columns: usize) -> LinearSystem {
        let labels = (0..rows.len()).map(|i| i.to_string()).collect();
        LinearSystem { system: System::Standard, columns, rows, labels }
    }

    #[test]
    fn line_in_the_quadrant() {
        let r = extreme_rays(&system(vec![vec![1, -1]], 2), &DdOptions::default()).unwrap();
        assert_eq!(r.rays, vec![vec![BigInt::from(1), BigInt::from(1)]]);
    }

    #[test]
    fn unconstrained_orthant_and_dependent_rows() {
        let r = extreme_rays(&system(vec![], 3), &DdOptions::default()).unwrap();
        assert_eq!(r.rays.len(), 3);
        let r = extreme_rays(
            &system(vec![vec![1, 1, -1, -1], vec![2, 2, -2, -2]], 4),
            &DdOptions::default(),
        )
        .unwrap();
        assert_eq!(r.rays.len(), 4);
    }

    #[test]
    fn algebraic_adjacency_agrees() {
        let sys = system(vec![vec![1, 1, -1, -1, 0], vec![0, 1, 0, -1, 1]], 5);
        let a = extreme_rays(&sys, &DdOptions::default()).unwrap();
        let b = extreme_rays(
            &sys,
            &DdOptions { adjacency: Adjacency::Algebraic, ..Default::default() },
        )
        .unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn mismatched_rows_are_rejected() {
        assert!(extreme_rays(&system(vec![vec![1]], 2), &DdOptions::default()).is_err());
    }
}

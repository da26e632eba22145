//! Permutations of the four vertices of a tetrahedron (and of the three
//! vertices of a triangle).

use std::fmt;

/// A bijection of `{0, 1, 2, 3}`, stored as its image table.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm4([u8; 4]);

impl Perm4 {
    pub const IDENTITY: Perm4 = Perm4([0, 1, 2, 3]);

    /// Builds a permutation from its images, returning `None` if `images`
    /// is not a bijection of `{0,1,2,3}`.
    pub fn new(images: [u8; 4]) -> Option<Perm4> {
        let mut seen = [false; 4];
        for &i in &images {
            if i > 3 || seen[i as usize] {
                return None;
            }
            seen[i as usize] = true;
        }
        Some(Perm4(images))
    }

    /// The unique permutation sending `from[k]` to `to[k]` for the three
    /// listed vertices and the remaining vertex to the remaining vertex.
    pub fn from_face_map(from: [u8; 3], to: [u8; 3]) -> Option<Perm4> {
        let rest = |s: [u8; 3]| -> Option<u8> {
            let mut mask = 0u8;
            for v in s {
                if v > 3 || mask & (1 << v) != 0 {
                    return None;
                }
                mask |= 1 << v;
            }
            (0..4).find(|v| mask & (1 << v) == 0)
        };
        let (rf, rt) = (rest(from)?, rest(to)?);
        let mut img = [0u8; 4];
        for k in 0..3 {
            img[from[k] as usize] = to[k];
        }
        img[rf as usize] = rt;
        Perm4::new(img)
    }

    #[inline]
    pub fn apply(self, v: usize) -> usize {
        self.0[v] as usize
    }

    pub fn images(self) -> [u8; 4] {
        self.0
    }

    pub fn inverse(self) -> Perm4 {
        let mut inv = [0u8; 4];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Perm4(inv)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(self, other: Perm4) -> Perm4 {
        let mut out = [0u8; 4];
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.0[other.0[i] as usize];
        }
        Perm4(out)
    }

    /// +1 for even permutations, -1 for odd ones.
    pub fn sign(self) -> i32 {
        let mut inversions = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                if self.0[i] > self.0[j] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn all() -> impl Iterator<Item = Perm4> {
        (0..24u32).map(|mut k| {
            let mut pool: Vec<u8> = vec![0, 1, 2, 3];
            let mut img = [0u8; 4];
            for (slot, radix) in img.iter_mut().zip([6u32, 2, 1, 1]) {
                let idx = (k / radix) as usize;
                k %= radix;
                *slot = pool.remove(idx);
            }
            Perm4(img)
        })
    }
}

impl fmt::Debug for Perm4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}{}", self.0[0], self.0[1], self.0[2], self.0[3])
    }
}

/// Bijection of `{0, 1, 2}` used by 2-dimensional gluings.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Perm3([u8; 3]);

impl Perm3 {
    pub const IDENTITY: Perm3 = Perm3([0, 1, 2]);

    pub fn new(images: [u8; 3]) -> Option<Perm3> {
        let mut seen = [false; 3];
        for &i in &images {
            if i > 2 || seen[i as usize] {
                return None;
            }
            seen[i as usize] = true;
        }
        Some(Perm3(images))
    }

    /// Permutation with `a -> b` and `c -> d`, remaining vertex to remaining vertex.
    pub fn from_pairs(a: u8, b: u8, c: u8, d: u8) -> Option<Perm3> {
        if a == c || b == d || a > 2 || b > 2 || c > 2 || d > 2 {
            return None;
        }
        let mut img = [0u8; 3];
        img[a as usize] = b;
        img[c as usize] = d;
        img[(3 - a - c) as usize] = 3 - b - d;
        Perm3::new(img)
    }

    #[inline]
    pub fn apply(self, v: usize) -> usize {
        self.0[v] as usize
    }

    pub fn inverse(self) -> Perm3 {
        let mut inv = [0u8; 3];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Perm3(inv)
    }

    pub fn sign(self) -> i32 {
        let mut inversions = 0;
        for i in 0..3 {
            for j in i + 1..3 {
                if self.0[i] > self.0[j] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Extends to a permutation of `{0,1,2,3}` fixing 3.
    pub fn extend(self) -> Perm4 {
        Perm4([self.0[0], self.0[1], self.0[2], 3])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_perms_distinct_and_signs_balanced() {
        let all: Vec<Perm4> = Perm4::all().collect();
        assert_eq!(all.len(), 24);
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 24);
        assert_eq!(all.iter().filter(|p| p.sign() == 1).count(), 12);
    }

    #[test]
    fn face_map_sends_opposite_to_opposite() {
        let p = Perm4::from_face_map([0, 1, 2], [3, 0, 1]).unwrap();
        assert_eq!(p.apply(3), 2);
        assert_eq!(p.inverse().compose(p), Perm4::IDENTITY);
        assert!(Perm4::from_face_map([0, 0, 2], [1, 2, 3]).is_none());
    }

    #[test]
    fn compose_applies_right_first() {
        let a = Perm4::new([1, 0, 2, 3]).unwrap();
        let b = Perm4::new([0, 2, 1, 3]).unwrap();
        // b then a: 1 -> 2 -> 2
        assert_eq!(a.compose(b).apply(1), 2);
        assert_eq!(a.compose(b).sign(), 1);
    }
}

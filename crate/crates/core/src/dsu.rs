//! Union-find with an optional parity (orientation) label per element.

#[derive(Clone, Debug)]
pub struct Dsu {
    parent: Vec<usize>,
    rank: Vec<u8>,
    // parity of the element relative to its parent
    parity: Vec<bool>,
}

impl Dsu {
    pub fn new(n: usize) -> Dsu {
        Dsu {
            parent: (0..n).collect(),
            rank: vec![0; n],
            parity: vec![false; n],
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    /// Root of `x` and the parity of `x` relative to that root.
    pub fn find_with_parity(&mut self, x: usize) -> (usize, bool) {
        let mut path = Vec::new();
        let mut cur = x;
        while self.parent[cur] != cur {
            path.push(cur);
            cur = self.parent[cur];
        }
        let root = cur;
        // path compression, accumulating parity from the top down
        let mut acc = false;
        for &node in path.iter().rev() {
            acc ^= self.parity[node];
            self.parity[node] = acc;
            self.parent[node] = root;
        }
        (root, self.parity[x] && x != root)
    }

    pub fn find(&mut self, x: usize) -> usize {
        self.find_with_parity(x).0
    }

    /// Merges the classes of `a` and `b`, asserting that the parity of `a`
    /// relative to `b` is `odd`. Returns `false` if this contradicts an
    /// earlier union.
    pub fn union_with_parity(&mut self, a: usize, b: usize, odd: bool) -> bool {
        let (ra, pa) = self.find_with_parity(a);
        let (rb, pb) = self.find_with_parity(b);
        if ra == rb {
            return (pa ^ pb) == odd;
        }
        let rel = pa ^ pb ^ odd;
        let (big, small) = if self.rank[ra] >= self.rank[rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[small] = big;
        self.parity[small] = rel;
        if self.rank[big] == self.rank[small] {
            self.rank[big] += 1;
        }
        true
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return false;
        }
        self.union_with_parity(a, b, false);
        true
    }

    /// Dense class labels `0..k`, numbered in order of first appearance.
    pub fn labels(&mut self) -> (Vec<usize>, usize) {
        let n = self.parent.len();
        let mut root_label = vec![usize::MAX; n];
        let mut labels = vec![0; n];
        let mut next = 0;
        for (x, label) in labels.iter_mut().enumerate() {
            let r = self.find(x);
            if root_label[r] == usize::MAX {
                root_label[r] = next;
                next += 1;
            }
            *label = root_label[r];
        }
        (labels, next)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_is_tracked_through_unions() {
        let mut d = Dsu::new(4);
        assert!(d.union_with_parity(0, 1, true));
        assert!(d.union_with_parity(1, 2, true));
        assert!(d.union_with_parity(0, 2, false));
        assert!(!d.union_with_parity(2, 0, true));
        let (_, p3) = d.find_with_parity(3);
        assert!(!p3);
        let (labels, k) = d.labels();
        assert_eq!(k, 2);
        assert_eq!(labels, vec![0, 0, 0, 1]);
    }
}

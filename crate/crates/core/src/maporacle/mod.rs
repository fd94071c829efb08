//! Brute-force enumerators used as independent checks on the algebra:
//! polygon-side gluings and permutation/matching encodings of rooted maps.

mod glue;
mod lambda;
mod rooted;

pub use glue::{
    compositions, enumerate_patterns, glue_census, CensusRow, GlueCensus, GluedSurface,
    GluingPattern, SurfaceClass,
};
pub use lambda::{lambda_from_census, lambda_from_census_bounded, polygon_lambda};
pub use rooted::{
    rooted_locally_orientable_counts, rooted_locally_orientable_counts_bounded,
    rooted_orientable_counts, rooted_orientable_counts_bounded, RootedCounts,
};

/// Largest edge count enumerated unless a caller raises the bound.
pub const DEFAULT_BOUND: u32 = 3;

/// Disjoint-set forest over `0..n` with path halving.
#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }

    pub(crate) fn class_sizes(&mut self) -> Vec<u32> {
        let mut sizes = vec![0u32; self.parent.len()];
        for x in 0..self.parent.len() {
            let r = self.find(x);
            sizes[r] += 1;
        }
        sizes.retain(|&s| s > 0);
        sizes
    }
}

/// Call `f` with the partner array of every perfect matching of `0..n`.
pub(crate) fn for_each_matching(n: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(partner: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        let Some(first) = partner.iter().position(|&p| p == usize::MAX) else {
            f(partner);
            return;
        };
        for second in first + 1..partner.len() {
            if partner[second] == usize::MAX {
                partner[first] = second;
                partner[second] = first;
                rec(partner, f);
                partner[first] = usize::MAX;
                partner[second] = usize::MAX;
            }
        }
    }
    rec(&mut vec![usize::MAX; n], f);
}

/// Every perfect matching of `0..n` as a partner array; `n` must be even.
pub(crate) fn perfect_matchings(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_matching(n, &mut |m| out.push(m.to_vec()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matching_counts_are_double_factorials() {
        assert_eq!(perfect_matchings(0).len(), 1);
        assert_eq!(perfect_matchings(2).len(), 1);
        assert_eq!(perfect_matchings(4).len(), 3);
        assert_eq!(perfect_matchings(6).len(), 15);
        assert_eq!(perfect_matchings(8).len(), 105);
    }

    #[test]
    fn union_find_classes() {
        let mut uf = UnionFind::new(5);
        uf.union(0, 1);
        uf.union(3, 4);
        uf.union(1, 4);
        let mut sizes = uf.class_sizes();
        sizes.sort();
        assert_eq!(sizes, vec![1, 4]);
    }
}

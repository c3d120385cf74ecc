//! Dynkin-diagram queries on subsets of simple roots.

use std::fmt;

use super::{RootSystem, RootType};

/// A subset of the simple roots, stored as a bitmask over 0-based indices.
///
/// Displayed with 1-based labels (`{α1,α3}`) to match the usual numbering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SimpleSet(pub u64);

impl SimpleSet {
    pub const EMPTY: SimpleSet = SimpleSet(0);

    /// All simple roots of a rank-`rank` system.
    pub fn full(rank: usize) -> Self {
        assert!(rank <= 64, "rank {rank} exceeds the 64-bit subset encoding");
        if rank == 64 {
            SimpleSet(u64::MAX)
        } else {
            SimpleSet((1u64 << rank) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        SimpleSet(indices.into_iter().fold(0u64, |acc, i| acc | (1u64 << i)))
    }

    /// Contiguous 0-based range `lo..=hi`.
    pub fn interval(lo: usize, hi: usize) -> Self {
        Self::from_indices(lo..=hi)
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: SimpleSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: SimpleSet) -> SimpleSet {
        SimpleSet(self.0 | other.0)
    }

    pub fn without(self, i: usize) -> SimpleSet {
        SimpleSet(self.0 & !(1u64 << i))
    }

    pub fn with(self, i: usize) -> SimpleSet {
        SimpleSet(self.0 | (1u64 << i))
    }

    pub fn complement(self, rank: usize) -> SimpleSet {
        SimpleSet(Self::full(rank).0 & !self.0)
    }

    pub fn min_index(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..64).filter(move |i| bits >> i & 1 == 1)
    }
}

impl fmt::Display for SimpleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "α{}", i + 1)?;
        }
        f.write_str("}")
    }
}

/// Whether simple roots `i` and `j` are joined in the Dynkin diagram.
pub fn adjacent(rs: &RootSystem, i: usize, j: usize) -> bool {
    i != j && rs.gram()[i][j] < 0
}

/// Connected components of the Dynkin diagram restricted to `set`, ordered
/// by smallest index.
pub fn components(rs: &RootSystem, set: SimpleSet) -> Vec<SimpleSet> {
    let mut remaining = set;
    let mut out = Vec::new();
    while let Some(start) = remaining.min_index() {
        let mut comp = SimpleSet::EMPTY.with(start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in set.iter() {
                if !comp.contains(w) && adjacent(rs, v, w) {
                    comp = comp.with(w);
                    stack.push(w);
                }
            }
        }
        remaining = SimpleSet(remaining.0 & !comp.0);
        out.push(comp);
    }
    out
}

pub fn is_connected(rs: &RootSystem, set: SimpleSet) -> bool {
    !set.is_empty() && components(rs, set).len() == 1
}

/// Cartan type of a connected set of simple roots, read off the diagram.
///
/// Rank-two double bonds are reported as `C`, and a three-node string as
/// `A`, so that `B2 = C2` and `D3 = A3` each have a single name.
pub fn connected_type(rs: &RootSystem, set: SimpleSet) -> (RootType, usize) {
    let nodes: Vec<usize> = set.iter().collect();
    let n = nodes.len();
    assert!(n > 0 && is_connected(rs, set), "connected_type needs a connected set");
    let g = rs.gram();
    let bond = |a: usize, b: usize| -> i64 {
        let num = 4 * g[a][b] * g[a][b];
        num / (g[a][a] * g[b][b])
    };
    let degree = |a: usize| nodes.iter().filter(|&&b| adjacent(rs, a, b)).count();
    if n == 1 {
        return (RootType::A, 1);
    }
    let mut double = None;
    for (x, &a) in nodes.iter().enumerate() {
        for &b in &nodes[x + 1..] {
            match bond(a, b) {
                3 => return (RootType::G2, 2),
                2 => double = Some((a, b)),
                _ => {}
            }
        }
    }
    if let Some((a, b)) = double {
        if n == 2 {
            return (RootType::C, 2);
        }
        if degree(a) == 2 && degree(b) == 2 {
            return (RootType::F4, 4);
        }
        let (leaf, other) = if degree(a) == 1 { (a, b) } else { (b, a) };
        return if g[leaf][leaf] < g[other][other] {
            (RootType::B, n)
        } else {
            (RootType::C, n)
        };
    }
    let Some(&branch) = nodes.iter().find(|&&a| degree(a) == 3) else {
        return (RootType::A, n);
    };
    let mut arms: Vec<usize> = nodes
        .iter()
        .filter(|&&b| adjacent(rs, branch, b))
        .map(|&first| {
            let mut len = 1;
            let (mut prev, mut cur) = (branch, first);
            while let Some(&next) = nodes
                .iter()
                .find(|&&c| c != prev && adjacent(rs, cur, c))
            {
                prev = cur;
                cur = next;
                len += 1;
            }
            len
        })
        .collect();
    arms.sort_unstable();
    match arms.as_slice() {
        [1, 1, _] => (RootType::D, n),
        [1, 2, 2] => (RootType::E6, 6),
        [1, 2, 3] => (RootType::E7, 7),
        [1, 2, 4] => (RootType::E8, 8),
        other => panic!("non-finite diagram with arms {other:?}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootkit::build_root_system;

    #[test]
    fn a4_components() {
        let rs = build_root_system(RootType::A, 4).unwrap();
        let comps = components(&rs, SimpleSet::from_indices([0, 1, 3]));
        assert_eq!(
            comps,
            vec![SimpleSet::from_indices([0, 1]), SimpleSet::from_indices([3])]
        );
        assert!(components(&rs, SimpleSet::EMPTY).is_empty());
    }

    #[test]
    fn b_tail_is_one_component() {
        let rs = build_root_system(RootType::B, 6).unwrap();
        for k in 0..5 {
            let tail = SimpleSet::interval(k, 5);
            assert_eq!(components(&rs, tail), vec![tail]);
        }
    }

    #[test]
    fn d_branch_node_joins_three_arms() {
        let rs = build_root_system(RootType::D, 5).unwrap();
        let set = SimpleSet::from_indices([2, 3, 4]);
        assert_eq!(components(&rs, set).len(), 1);
        assert_eq!(components(&rs, SimpleSet::from_indices([3, 4])).len(), 2);
    }

    #[test]
    fn recognises_whole_diagrams() {
        for (t, r) in [
            (RootType::A, 5),
            (RootType::B, 4),
            (RootType::C, 5),
            (RootType::D, 6),
            (RootType::E6, 6),
            (RootType::E7, 7),
            (RootType::E8, 8),
            (RootType::F4, 4),
            (RootType::G2, 2),
        ] {
            let rs = build_root_system(t, r).unwrap();
            assert_eq!(connected_type(&rs, SimpleSet::full(r)), (t, r), "{t}{r}");
        }
    }

    #[test]
    fn small_coincidences_are_normalised() {
        let b2 = build_root_system(RootType::B, 2).unwrap();
        assert_eq!(connected_type(&b2, SimpleSet::full(2)), (RootType::C, 2));
        let d4 = build_root_system(RootType::D, 4).unwrap();
        assert_eq!(
            connected_type(&d4, SimpleSet::from_indices([1, 2, 3])),
            (RootType::A, 3)
        );
        let f4 = build_root_system(RootType::F4, 4).unwrap();
        assert_eq!(
            connected_type(&f4, SimpleSet::from_indices([0, 1, 2])),
            (RootType::B, 3)
        );
        assert_eq!(
            connected_type(&f4, SimpleSet::from_indices([1, 2, 3])),
            (RootType::C, 3)
        );
        let e8 = build_root_system(RootType::E8, 8).unwrap();
        assert_eq!(
            connected_type(&e8, SimpleSet::from_indices([1, 2, 3, 4, 5])),
            (RootType::D, 5)
        );
    }
}

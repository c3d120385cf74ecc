//! Standard parabolic subgroups and the codimension-type invariants built
//! from them.
//!
//! A parabolic is encoded by the set `Π_Q` of simple roots it contains. A
//! negative root `-β` lies in `Σ_Q` exactly when every simple root in the
//! support of `β` belongs to `Π_Q`, and `β`, `2β` share a support, so whole
//! coarse classes go missing together.

use thiserror::Error;

use crate::catalogue::GroupDescriptor;
use crate::rootkit::{dynkin, CoarseClass, SimpleSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FlagError {
    #[error("simple root index {index} is out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
}

/// A standard parabolic `Q` with its derived root data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicSubset {
    pub pi_q: SimpleSet,
    /// Indices (into the root list) of the roots outside `Σ_Q`.
    pub missing_roots: Vec<usize>,
    /// Representatives of the coarse classes outside `Σ̂_Q`.
    pub missing_classes: Vec<usize>,
}

impl ParabolicSubset {
    /// Indices of the roots in `Σ_Q`.
    pub fn sigma_q(&self, desc: &GroupDescriptor) -> Vec<usize> {
        (0..desc.root_system().roots().len())
            .filter(|i| self.missing_roots.binary_search(i).is_err())
            .collect()
    }
}

fn check(desc: &GroupDescriptor, pi_q: SimpleSet) -> Result<(), FlagError> {
    let rank = desc.rank;
    match pi_q.iter().find(|&i| i >= rank) {
        Some(index) => Err(FlagError::IndexOutOfRange { index, rank }),
        None => Ok(()),
    }
}

/// Derives `Σ_Q` and the missing roots and classes for `Π_Q`.
pub fn parabolic(desc: &GroupDescriptor, pi_q: SimpleSet) -> Result<ParabolicSubset, FlagError> {
    check(desc, pi_q)?;
    let rs = desc.root_system();
    let missing_roots: Vec<usize> = rs
        .roots()
        .iter()
        .enumerate()
        .filter(|(_, r)| !r.is_positive() && !r.support().is_subset(pi_q))
        .map(|(i, _)| i)
        .collect();
    let missing_classes = rs
        .coarse_classes()
        .into_iter()
        .filter(|c| missing_roots.binary_search(&c.representative).is_ok())
        .map(|c| c.representative)
        .collect();
    Ok(ParabolicSubset { pi_q, missing_roots, missing_classes })
}

/// `dim G/Q`: total multiplicity of the missing roots.
pub fn flag_codimension(desc: &GroupDescriptor, pq: &ParabolicSubset) -> i64 {
    pq.missing_roots.iter().map(|&i| desc.mult_of_root(i)).sum()
}

/// `r₀([β])`: 1 when the class has total multiplicity 1, otherwise 2.
pub fn r0_of_class(desc: &GroupDescriptor, c: &CoarseClass) -> i64 {
    let total: i64 = c.members.iter().map(|&i| desc.mult_of_root(i)).sum();
    if total == 1 {
        1
    } else {
        2
    }
}

pub fn r0_of_parabolic(desc: &GroupDescriptor, pq: &ParabolicSubset) -> i64 {
    let classes = desc.root_system().coarse_classes();
    classes
        .iter()
        .filter(|c| pq.missing_classes.contains(&c.representative))
        .map(|c| r0_of_class(desc, c))
        .sum()
}

/// Connected components of the Dynkin diagram on `Π_Q`, by smallest index.
pub fn dynkin_components(desc: &GroupDescriptor, pi_q: SimpleSet) -> Result<Vec<SimpleSet>, FlagError> {
    check(desc, pi_q)?;
    Ok(dynkin::components(desc.root_system(), pi_q))
}

/// One positive coarse class, reduced to what the subset searches need.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassInfo {
    pub representative: usize,
    pub support: SimpleSet,
    pub mult: i64,
    pub r0: i64,
}

/// The positive coarse classes of a descriptor. The three parabolic counts
/// only depend on which supports escape `Π_Q`, so they can be evaluated
/// without materialising root lists.
#[derive(Debug, Clone)]
pub struct ClassProfile {
    pub rank: usize,
    pub classes: Vec<ClassInfo>,
}

impl ClassProfile {
    pub fn of(desc: &GroupDescriptor) -> Self {
        let rs = desc.root_system();
        let classes = rs
            .coarse_classes()
            .iter()
            .filter(|c| rs.root(c.representative).is_positive())
            .map(|c| ClassInfo {
                representative: c.representative,
                support: rs.root(c.representative).support(),
                mult: c.members.iter().map(|&i| desc.mult_of_root(i)).sum(),
                r0: r0_of_class(desc, c),
            })
            .collect();
        ClassProfile { rank: desc.rank, classes }
    }

    fn missing(&self, pi_q: SimpleSet) -> impl Iterator<Item = &ClassInfo> {
        self.classes.iter().filter(move |c| !c.support.is_subset(pi_q))
    }

    pub fn codimension(&self, pi_q: SimpleSet) -> i64 {
        self.missing(pi_q).map(|c| c.mult).sum()
    }

    pub fn missing_class_count(&self, pi_q: SimpleSet) -> i64 {
        self.missing(pi_q).count() as i64
    }

    pub fn r0(&self, pi_q: SimpleSet) -> i64 {
        self.missing(pi_q).map(|c| c.r0).sum()
    }

    /// Minimum of `f` over the maximal proper subsets `Π∖{α}`.
    pub fn min_over_maximal(&self, f: impl Fn(&Self, SimpleSet) -> i64) -> i64 {
        let full = SimpleSet::full(self.rank);
        (0..self.rank).map(|i| f(self, full.without(i))).min().expect("rank is positive")
    }
}

/// `v(G)`: minimal codimension of a proper parabolic.
pub fn v_of_group(desc: &GroupDescriptor) -> i64 {
    ClassProfile::of(desc).min_over_maximal(ClassProfile::codimension)
}

/// `r(G)`: minimal number of missing coarse classes.
pub fn r_of_group(desc: &GroupDescriptor) -> i64 {
    ClassProfile::of(desc).min_over_maximal(ClassProfile::missing_class_count)
}

/// `r₀(G)`: minimal `r₀(Q)` over proper parabolics.
pub fn r0_of_group(desc: &GroupDescriptor) -> i64 {
    ClassProfile::of(desc).min_over_maximal(ClassProfile::r0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalogue::{describe, parse_group_spec};
    use crate::linalg;

    fn desc(s: &str) -> GroupDescriptor {
        describe(&parse_group_spec(s).unwrap()).unwrap()
    }

    #[test]
    fn sl3_parabolics() {
        let d = desc("SL(3,C)");
        let rs = d.root_system();
        let min = parabolic(&d, SimpleSet::EMPTY).unwrap();
        assert_eq!(min.missing_roots.len(), 3);
        let q = parabolic(&d, SimpleSet::from_indices([0])).unwrap();
        let mut coords: Vec<Vec<i64>> = q.missing_roots.iter().map(|&i| rs.root(i).coords.clone()).collect();
        coords.sort();
        assert_eq!(coords, vec![vec![-1, 0, 1], vec![0, -1, 1]]);
        let all = parabolic(&d, SimpleSet::full(2)).unwrap();
        assert!(all.missing_roots.is_empty());
        assert_eq!(flag_codimension(&d, &all), 0);
        assert_eq!(r0_of_parabolic(&d, &all), 0);
        assert_eq!(all.sigma_q(&d).len(), 6);
    }

    #[test]
    fn out_of_range_index() {
        let d = desc("SL(3,C)");
        assert_eq!(
            parabolic(&d, SimpleSet::from_indices([2])),
            Err(FlagError::IndexOutOfRange { index: 2, rank: 2 })
        );
    }

    #[test]
    fn support_test_matches_rational_span() {
        for s in ["SU(4,2)", "SO+(7,3)", "G2", "Sp(6,C)"] {
            let d = desc(s);
            let rs = d.root_system();
            for mask in 0..(1u64 << d.rank) {
                let pi = SimpleSet(mask);
                let basis: Vec<Vec<i64>> = pi
                    .iter()
                    .map(|i| (0..d.rank).map(|j| i64::from(i == j)).collect())
                    .collect();
                let pq = parabolic(&d, pi).unwrap();
                for (i, r) in rs.roots().iter().enumerate() {
                    let in_sigma = r.is_positive() || linalg::in_span(&basis, &r.coeffs);
                    assert_eq!(in_sigma, pq.missing_roots.binary_search(&i).is_err(), "{s} {pi}");
                }
            }
        }
    }

    #[test]
    fn codimension_examples() {
        let d = desc("SO+(7,3)");
        let pq = parabolic(&d, SimpleSet::full(3).without(0)).unwrap();
        assert_eq!(flag_codimension(&d, &pq), 8);
        let d = desc("SL(4,C)");
        let pq = parabolic(&d, SimpleSet::full(3).without(1)).unwrap();
        assert_eq!(flag_codimension(&d, &pq), 8);
    }

    #[test]
    fn group_minima() {
        for n in 3..=12 {
            let d = desc(&format!("SL({n},C)"));
            assert_eq!(v_of_group(&d), 2 * n - 2);
            assert_eq!(r_of_group(&d), n - 1);
        }
        assert_eq!(r0_of_group(&desc("SL(3,C)")), 4);
        assert_eq!(r_of_group(&desc("G2")), 5);
        assert_eq!(v_of_group(&desc("SO*(14)")), 4 * 7 - 7);
    }

    #[test]
    fn class_r0_values() {
        let d = desc("SU(3,3)");
        let rs = d.root_system();
        for c in rs.coarse_classes() {
            let rep = &rs.root(c.representative).coords;
            let expected = if rep.iter().filter(|&&x| x != 0).count() == 1 { 1 } else { 2 };
            assert_eq!(r0_of_class(&d, &c), expected, "{rep:?}");
        }
        let d = desc("SO+(7,3)");
        let rs = d.root_system();
        for c in rs.coarse_classes() {
            let rep = &rs.root(c.representative).coords;
            let expected = if rep.iter().filter(|&&x| x != 0).count() == 1 { 2 } else { 1 };
            assert_eq!(r0_of_class(&d, &c), expected, "{rep:?}");
        }
    }

    #[test]
    fn profile_agrees_with_root_lists() {
        let d = desc("Sp(3,2)");
        let p = ClassProfile::of(&d);
        for mask in 0..(1u64 << d.rank) {
            let pq = parabolic(&d, SimpleSet(mask)).unwrap();
            assert_eq!(p.codimension(pq.pi_q), flag_codimension(&d, &pq));
            assert_eq!(p.missing_class_count(pq.pi_q), pq.missing_classes.len() as i64);
            assert_eq!(p.r0(pq.pi_q), r0_of_parabolic(&d, &pq));
        }
    }

    #[test]
    fn components_of_parabolic() {
        let d = desc("SL(5,C)");
        assert_eq!(
            dynkin_components(&d, SimpleSet::from_indices([0, 1, 3])).unwrap(),
            vec![SimpleSet::from_indices([0, 1]), SimpleSet::from_indices([3])]
        );
        assert!(dynkin_components(&d, SimpleSet::EMPTY).unwrap().is_empty());
    }
}

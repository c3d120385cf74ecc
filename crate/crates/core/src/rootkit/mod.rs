//! Abstract root systems in exact integer coordinates.
//!
//! Classical systems live in the usual `e_i` coordinates (`A_l` inside
//! `Z^{l+1}`); `F4` and the `E` series use the half-integral models scaled by
//! two, `G2` sits in the trace-zero plane of `Z^3`. Every root also carries its
//! coefficient vector on the simple roots, which is what heights, supports and
//! parabolic membership are computed from.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::linalg;

pub mod dynkin;

pub use dynkin::SimpleSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootType {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
    BC,
}

impl RootType {
    /// Whether the rank is implied by the label.
    pub fn fixed_rank(self) -> Option<usize> {
        match self {
            RootType::E6 => Some(6),
            RootType::E7 => Some(7),
            RootType::E8 => Some(8),
            RootType::F4 => Some(4),
            RootType::G2 => Some(2),
            _ => None,
        }
    }

    pub fn is_reduced(self) -> bool {
        self != RootType::BC
    }

    /// Names of the root-length classes, longest first, together with the
    /// squared length of a member in this crate's coordinates.
    pub fn length_classes(self) -> &'static [(&'static str, i64)] {
        match self {
            RootType::A => &[("e_i-e_j", 2)],
            RootType::D => &[("e_i+-e_j", 2)],
            RootType::B => &[("e_i+-e_j", 2), ("e_i", 1)],
            RootType::C => &[("2e_i", 4), ("e_i+-e_j", 2)],
            RootType::BC => &[("2e_i", 4), ("e_i+-e_j", 2), ("e_i", 1)],
            RootType::E6 | RootType::E7 | RootType::E8 => &[("all", 8)],
            RootType::F4 => &[("long", 8), ("short", 4)],
            RootType::G2 => &[("long", 6), ("short", 2)],
        }
    }

    fn name(self) -> &'static str {
        match self {
            RootType::A => "A",
            RootType::B => "B",
            RootType::C => "C",
            RootType::D => "D",
            RootType::E6 => "E6",
            RootType::E7 => "E7",
            RootType::E8 => "E8",
            RootType::F4 => "F4",
            RootType::G2 => "G2",
            RootType::BC => "BC",
        }
    }
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RootType {
    type Err = RootError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.trim().to_ascii_uppercase().as_str() {
            "A" => RootType::A,
            "B" => RootType::B,
            "C" => RootType::C,
            "D" => RootType::D,
            "E6" => RootType::E6,
            "E7" => RootType::E7,
            "E8" => RootType::E8,
            "F4" => RootType::F4,
            "G2" => RootType::G2,
            "BC" => RootType::BC,
            _ => return Err(RootError::UnknownType(s.to_string())),
        })
    }
}

/// Parses labels such as `A4`, `BC2`, `E8`, `G2`.
pub fn parse_type_and_rank(s: &str) -> Result<(RootType, usize), RootError> {
    let s = s.trim();
    let upper = s.to_ascii_uppercase();
    for fixed in ["E6", "E7", "E8", "F4", "G2"] {
        if upper == fixed {
            let t: RootType = fixed.parse()?;
            return Ok((t, t.fixed_rank().unwrap()));
        }
    }
    let split = upper
        .find(|c: char| c.is_ascii_digit())
        .ok_or_else(|| RootError::UnknownType(s.to_string()))?;
    let t: RootType = upper[..split].parse()?;
    let rank = upper[split..]
        .parse()
        .map_err(|_| RootError::UnknownType(s.to_string()))?;
    Ok((t, rank))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootError {
    #[error("unknown root system type `{0}`")]
    UnknownType(String),
    #[error("invalid rank {rank} for type {label}: {constraint}")]
    InvalidRank {
        label: RootType,
        rank: usize,
        constraint: &'static str,
    },
    #[error("{0:?} is not a root")]
    NotARoot(Vec<i64>),
    #[error("filtration index {k} out of range 0..={max}")]
    FiltrationOutOfRange { k: usize, max: usize },
    #[error("operation needs an irreducible root system")]
    Reducible,
    #[error("subspace must be nonzero and proper (dimension {dim}, rank {rank})")]
    TrivialSubspace { dim: usize, rank: usize },
    #[error("subspace basis vectors are linearly dependent")]
    DependentBasis,
    #[error("vector length {found} does not match expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("simple roots are linearly dependent or empty")]
    BadSimpleRoots,
    #[error("reflection closure failed: {0}")]
    NotCrystallographic(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    /// Ambient integer coordinates.
    pub coords: Vec<i64>,
    /// Coefficients on the simple roots.
    pub coeffs: Vec<i64>,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().any(|&c| c > 0)
    }

    /// Simple roots appearing with nonzero coefficient.
    pub fn support(&self) -> SimpleSet {
        SimpleSet::from_indices(
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, _)| i),
        )
    }
}

/// A finite root system with a chosen base.
#[derive(Debug, Clone)]
pub struct RootSystem {
    label: RootType,
    rank: usize,
    ambient_dim: usize,
    simple: Vec<Vec<i64>>,
    gram: Vec<Vec<i64>>,
    /// Positive roots by non-increasing height, then the negatives in the same order.
    roots: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
}

fn unit(dim: usize, i: usize, scale: i64) -> Vec<i64> {
    let mut v = vec![0; dim];
    v[i] = scale;
    v
}

fn diff(dim: usize, i: usize, j: usize, scale: i64) -> Vec<i64> {
    let mut v = vec![0; dim];
    v[i] += scale;
    v[j] -= scale;
    v
}

/// Builds the standard root system of the given type and rank.
pub fn build_root_system(label: RootType, rank: usize) -> Result<RootSystem, RootError> {
    let bad = |constraint| Err(RootError::InvalidRank { label, rank, constraint });
    if rank > 64 {
        return bad("rank must be at most 64");
    }
    match label {
        RootType::A if rank < 1 => return bad("A_l needs l >= 1"),
        RootType::B if rank < 2 => return bad("B_n needs n >= 2"),
        RootType::C if rank < 2 => return bad("C_n needs n >= 2"),
        RootType::D if rank < 3 => return bad("D_n needs n >= 3"),
        RootType::BC if rank < 1 => return bad("BC_n needs n >= 1"),
        _ => {}
    }
    if let Some(fixed) = label.fixed_rank() {
        if rank != fixed {
            return bad("exceptional types have a fixed rank");
        }
    }
    let n = rank;
    let simple: Vec<Vec<i64>> = match label {
        RootType::A => (0..n).map(|i| diff(n + 1, i, i + 1, 1)).collect(),
        RootType::B | RootType::BC => (0..n)
            .map(|i| if i + 1 < n { diff(n, i, i + 1, 1) } else { unit(n, n - 1, 1) })
            .collect(),
        RootType::C => (0..n)
            .map(|i| if i + 1 < n { diff(n, i, i + 1, 1) } else { unit(n, n - 1, 2) })
            .collect(),
        RootType::D => (0..n)
            .map(|i| {
                if i + 1 < n {
                    diff(n, i, i + 1, 1)
                } else {
                    let mut v = vec![0; n];
                    v[n - 2] = 1;
                    v[n - 1] = 1;
                    v
                }
            })
            .collect(),
        RootType::G2 => vec![vec![1, -1, 0], vec![-2, 1, 1]],
        RootType::F4 => vec![
            vec![0, 2, -2, 0],
            vec![0, 0, 2, -2],
            vec![0, 0, 0, 2],
            vec![1, -1, -1, -1],
        ],
        RootType::E6 | RootType::E7 | RootType::E8 => {
            let mut e8 = vec![vec![1, -1, -1, -1, -1, -1, -1, 1]];
            let mut a2 = vec![0; 8];
            a2[0] = 2;
            a2[1] = 2;
            e8.push(a2);
            for i in 0..6 {
                e8.push(diff(8, i + 1, i, 2));
            }
            e8.truncate(n);
            e8
        }
    };
    RootSystem::from_simple_roots(label, simple, label == RootType::BC)
}

impl RootSystem {
    /// Generates the root system spanned by `simple` under reflections.
    ///
    /// With `doubles`, twice every shortest root is added as well, which turns
    /// `B_n` into `BC_n`.
    pub fn from_simple_roots(
        label: RootType,
        simple: Vec<Vec<i64>>,
        doubles: bool,
    ) -> Result<Self, RootError> {
        let rank = simple.len();
        if rank == 0 || rank > 64 {
            return Err(RootError::BadSimpleRoots);
        }
        let ambient_dim = simple[0].len();
        if simple.iter().any(|s| s.len() != ambient_dim) || linalg::rank(&simple, ambient_dim) != rank {
            return Err(RootError::BadSimpleRoots);
        }
        let dot = |x: &[i64], y: &[i64]| x.iter().zip(y).map(|(a, b)| a * b).sum::<i64>();
        let gram: Vec<Vec<i64>> = simple
            .iter()
            .map(|a| simple.iter().map(|b| dot(a, b)).collect())
            .collect();
        // cartan[i][j] = <alpha_j, alpha_i^vee>
        let mut cartan = vec![vec![0i64; rank]; rank];
        for i in 0..rank {
            for j in 0..rank {
                let num = 2 * gram[i][j];
                if num % gram[i][i] != 0 {
                    return Err(RootError::NotCrystallographic(format!(
                        "<α{},α{}^∨> is not an integer",
                        j + 1,
                        i + 1
                    )));
                }
                cartan[i][j] = num / gram[i][i];
            }
        }

        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..rank {
            let e = unit(rank, i, 1);
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(c) = queue.pop_front() {
            for i in 0..rank {
                let pairing: i64 = (0..rank).map(|j| c[j] * cartan[i][j]).sum();
                if pairing == 0 {
                    continue;
                }
                let mut next = c.clone();
                next[i] -= pairing;
                if !seen.contains(&next) {
                    if seen.len() > 100_000 {
                        return Err(RootError::NotCrystallographic(
                            "reflection orbit does not close".into(),
                        ));
                    }
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
        let to_coords = |c: &[i64]| -> Vec<i64> {
            (0..ambient_dim)
                .map(|k| c.iter().zip(&simple).map(|(ci, s)| ci * s[k]).sum())
                .collect()
        };
        let mut all: Vec<Root> = seen
            .into_iter()
            .map(|coeffs| Root { coords: to_coords(&coeffs), coeffs })
            .collect();
        if doubles {
            let norm = |r: &Root| dot(&r.coords, &r.coords);
            let shortest = all.iter().map(norm).min().unwrap();
            let extra: Vec<Root> = all
                .iter()
                .filter(|r| norm(r) == shortest)
                .map(|r| Root {
                    coords: r.coords.iter().map(|x| 2 * x).collect(),
                    coeffs: r.coeffs.iter().map(|x| 2 * x).collect(),
                })
                .collect();
            all.extend(extra);
        }
        let mut positive: Vec<Root> = all.into_iter().filter(Root::is_positive).collect();
        positive.sort_by(|a, b| b.height().cmp(&a.height()).then_with(|| b.coords.cmp(&a.coords)));
        let negative: Vec<Root> = positive
            .iter()
            .map(|r| Root {
                coords: r.coords.iter().map(|x| -x).collect(),
                coeffs: r.coeffs.iter().map(|x| -x).collect(),
            })
            .collect();
        let roots: Vec<Root> = positive.into_iter().chain(negative).collect();
        let index = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.coords.clone(), i))
            .collect();
        Ok(RootSystem {
            label,
            rank,
            ambient_dim,
            simple,
            gram,
            roots,
            index,
        })
    }

    pub fn label(&self) -> RootType {
        self.label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn simple_roots(&self) -> &[Vec<i64>] {
        &self.simple
    }

    /// Gram matrix `<α_i, α_j>` of the simple roots.
    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    /// Positive roots, already in non-increasing height order.
    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.num_positive()]
    }

    pub fn find(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    pub fn contains(&self, coords: &[i64]) -> bool {
        self.index.contains_key(coords)
    }

    pub fn root(&self, i: usize) -> &Root {
        &self.roots[i]
    }

    /// Index of `-roots[i]`.
    pub fn negation(&self, i: usize) -> usize {
        let p = self.num_positive();
        if i < p {
            i + p
        } else {
            i - p
        }
    }

    pub fn inner(&self, x: &[i64], y: &[i64]) -> i64 {
        x.iter().zip(y).map(|(a, b)| a * b).sum()
    }

    pub fn norm2(&self, coords: &[i64]) -> i64 {
        self.inner(coords, coords)
    }

    /// `σ_α(β)` in ambient coordinates, or `None` when `α` is zero.
    pub fn reflect(&self, alpha: &[i64], beta: &[i64]) -> Option<Vec<i64>> {
        let aa = self.norm2(alpha);
        if aa == 0 {
            return None;
        }
        let num = 2 * self.inner(alpha, beta);
        if num % aa != 0 {
            return None;
        }
        let c = num / aa;
        Some(beta.iter().zip(alpha).map(|(b, a)| b - c * a).collect())
    }

    pub fn is_irreducible(&self) -> bool {
        dynkin::is_connected(self, SimpleSet::full(self.rank))
    }

    /// Sum of the simple-root coefficients of `beta`.
    pub fn height(&self, beta: &[i64]) -> Result<i64, RootError> {
        self.find(beta)
            .map(|i| self.roots[i].height())
            .ok_or_else(|| RootError::NotARoot(beta.to_vec()))
    }

    /// All positive roots, sorted by non-increasing height with ties broken by
    /// descending lexicographic order of the coordinates.
    pub fn positive_roots_by_height(&self) -> Vec<Vec<i64>> {
        self.positive_roots().iter().map(|r| r.coords.clone()).collect()
    }

    /// Whether the span of the first `k` positive roots (in height order) is
    /// closed under adding positive roots, checked at the root level.
    pub fn filtration_is_ideal(&self, k: usize) -> Result<bool, RootError> {
        let pos = self.positive_roots();
        if k > pos.len() {
            return Err(RootError::FiltrationOutOfRange { k, max: pos.len() });
        }
        for (i, bi) in pos.iter().enumerate().take(k) {
            for bj in pos {
                let sum: Vec<i64> = bi.coords.iter().zip(&bj.coords).map(|(a, b)| a + b).collect();
                if let Some(idx) = self.find(&sum) {
                    if idx >= k {
                        return Ok(false);
                    }
                    debug_assert!(idx < pos.len(), "sum of positive roots {i} is positive");
                }
            }
        }
        Ok(true)
    }

    /// Proportionality classes `[β] = R_{>0} β ∩ Σ`, positive classes first.
    pub fn coarse_classes(&self) -> Vec<CoarseClass> {
        let mut by_rep: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, r) in self.roots.iter().enumerate() {
            let rep = if r.coords.iter().all(|x| x % 2 == 0) {
                let half: Vec<i64> = r.coords.iter().map(|x| x / 2).collect();
                self.find(&half).unwrap_or(i)
            } else {
                i
            };
            by_rep.entry(rep).or_default().push(i);
        }
        by_rep
            .into_iter()
            .map(|(rep, mut members)| {
                members.sort_unstable();
                CoarseClass {
                    representative: rep,
                    members,
                }
            })
            .collect()
    }

    /// Rank of the span of the roots lying in neither `W` nor `W^⊥`.
    pub fn span_complement_rank(&self, w: &RootSubspace) -> Result<usize, RootError> {
        if !self.is_irreducible() {
            return Err(RootError::Reducible);
        }
        if w.basis.iter().any(|b| b.len() != self.rank) {
            return Err(RootError::DimensionMismatch {
                expected: self.rank,
                found: w.basis.iter().map(Vec::len).find(|&l| l != self.rank).unwrap(),
            });
        }
        let dim = w.dimension();
        if dim == 0 || dim >= self.rank {
            return Err(RootError::TrivialSubspace { dim, rank: self.rank });
        }
        // x ∈ W^⊥  ⇔  (B G) x = 0;  x ∈ W  ⇔  (N G) x = 0 with N a basis of W^⊥.
        let bg = linalg::mul_gram(&w.basis, &self.gram);
        let perp = linalg::Echelon::of(&bg, self.rank).nullspace();
        let ng = linalg::mul_gram(&perp, &self.gram);
        let annihilates = |rows: &[Vec<i64>], c: &[i64]| {
            rows.iter()
                .all(|row| row.iter().zip(c).map(|(a, b)| a * b).sum::<i64>() == 0)
        };
        let outside: Vec<Vec<i64>> = self
            .roots
            .iter()
            .filter(|r| !annihilates(&ng, &r.coeffs) && !annihilates(&bg, &r.coeffs))
            .map(|r| r.coeffs.clone())
            .collect();
        Ok(linalg::rank(&outside, self.rank))
    }
}

/// A class of positively proportional roots, keyed by its indivisible member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoarseClass {
    /// Index of the indivisible member in [`RootSystem::roots`].
    pub representative: usize,
    /// Indices of all members (the representative and possibly its double).
    pub members: Vec<usize>,
}

/// A rational subspace of the root space, given by a basis in simple-root
/// coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSubspace {
    basis: Vec<Vec<i64>>,
}

impl RootSubspace {
    pub fn new(basis: Vec<Vec<i64>>) -> Result<Self, RootError> {
        if let Some(first) = basis.first() {
            let dim = first.len();
            if basis.iter().any(|b| b.len() != dim) {
                return Err(RootError::DimensionMismatch {
                    expected: dim,
                    found: basis.iter().map(Vec::len).find(|&l| l != dim).unwrap(),
                });
            }
            if linalg::rank(&basis, dim) != basis.len() {
                return Err(RootError::DependentBasis);
            }
        }
        Ok(RootSubspace { basis })
    }

    /// Span of the given 0-based simple roots.
    pub fn spanned_by_simple(rank: usize, set: SimpleSet) -> Self {
        RootSubspace {
            basis: set.iter().map(|i| unit(rank, i, 1)).collect(),
        }
    }

    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(t: RootType, r: usize) -> RootSystem {
        build_root_system(t, r).unwrap()
    }

    #[test]
    fn root_counts() {
        assert_eq!(rs(RootType::A, 2).roots().len(), 6);
        assert_eq!(rs(RootType::BC, 2).roots().len(), 12);
        assert_eq!(rs(RootType::B, 3).roots().len(), 18);
        assert_eq!(rs(RootType::C, 3).roots().len(), 18);
        assert_eq!(rs(RootType::D, 4).roots().len(), 24);
        assert_eq!(rs(RootType::G2, 2).roots().len(), 12);
        assert_eq!(rs(RootType::F4, 4).roots().len(), 48);
        assert_eq!(rs(RootType::E6, 6).roots().len(), 72);
        assert_eq!(rs(RootType::E7, 7).roots().len(), 126);
        assert_eq!(rs(RootType::E8, 8).roots().len(), 240);
    }

    #[test]
    fn bc2_roots_are_the_expected_set() {
        let bc = rs(RootType::BC, 2);
        let mut expected = Vec::new();
        for s in [1, -1] {
            for t in [1, -1] {
                expected.push(vec![s, t]);
            }
            expected.push(vec![s, 0]);
            expected.push(vec![0, s]);
            expected.push(vec![2 * s, 0]);
            expected.push(vec![0, 2 * s]);
        }
        assert_eq!(expected.len(), 12);
        for e in &expected {
            assert!(bc.contains(e), "{e:?}");
        }
    }

    #[test]
    fn invalid_ranks_name_the_constraint() {
        let err = build_root_system(RootType::D, 2).unwrap_err();
        assert!(err.to_string().contains("D_n needs n >= 3"));
        assert!(build_root_system(RootType::BC, 0).is_err());
        assert!(build_root_system(RootType::E7, 6).is_err());
        assert!(build_root_system(RootType::BC, 1).is_ok());
    }

    #[test]
    fn heights() {
        let a2 = rs(RootType::A, 2);
        assert_eq!(a2.height(&[1, 0, -1]).unwrap(), 2);
        for s in a2.simple_roots() {
            assert_eq!(a2.height(s).unwrap(), 1);
        }
        assert_eq!(a2.height(&[-1, 0, 1]).unwrap(), -2);
        assert!(matches!(a2.height(&[2, 0, -2]), Err(RootError::NotARoot(_))));
        let c3 = rs(RootType::C, 3);
        assert_eq!(c3.height(&[2, 0, 0]).unwrap(), 5);
    }

    #[test]
    fn height_order() {
        let a2 = rs(RootType::A, 2);
        assert_eq!(
            a2.positive_roots_by_height(),
            vec![vec![1, 0, -1], vec![1, -1, 0], vec![0, 1, -1]]
        );
        let a3 = rs(RootType::A, 3);
        let hs: Vec<i64> = a3.positive_roots().iter().map(Root::height).collect();
        assert_eq!(hs, vec![3, 2, 2, 1, 1, 1]);
        let bc2 = rs(RootType::BC, 2);
        let pos = bc2.positive_roots_by_height();
        assert_eq!(pos.len(), 6);
        assert_eq!(pos[0], vec![2, 0]);
        assert_eq!(bc2.height(&[2, 0]).unwrap(), 4);
    }

    #[test]
    fn filtration_examples() {
        let a2 = rs(RootType::A, 2);
        assert!(a2.filtration_is_ideal(1).unwrap());
        assert!(a2.filtration_is_ideal(0).unwrap());
        assert!(matches!(
            a2.filtration_is_ideal(4),
            Err(RootError::FiltrationOutOfRange { k: 4, max: 3 })
        ));
        let f4 = rs(RootType::F4, 4);
        for k in 0..=24 {
            assert!(f4.filtration_is_ideal(k).unwrap(), "k = {k}");
        }
    }

    #[test]
    fn coarse_class_counts() {
        let a2 = rs(RootType::A, 2);
        let classes = a2.coarse_classes();
        assert_eq!(classes.len(), 6);
        assert!(classes.iter().all(|c| c.members.len() == 1));

        let bc2 = rs(RootType::BC, 2);
        let classes = bc2.coarse_classes();
        assert_eq!(classes.len(), 8);
        let doubled: Vec<_> = classes.iter().filter(|c| c.members.len() == 2).collect();
        assert_eq!(doubled.len(), 4);
        for c in doubled {
            let rep = &bc2.root(c.representative).coords;
            assert_eq!(rep.iter().map(|x| x.abs()).sum::<i64>(), 1);
        }
        for n in 2..6 {
            let c = rs(RootType::C, n);
            assert_eq!(c.coarse_classes().len(), 2 * n * n);
        }
    }

    #[test]
    fn span_complement_examples() {
        let a2 = rs(RootType::A, 2);
        let w = RootSubspace::spanned_by_simple(2, SimpleSet::from_indices([0]));
        assert_eq!(a2.span_complement_rank(&w).unwrap(), 2);
        let zero = RootSubspace::new(vec![]).unwrap();
        assert!(matches!(
            a2.span_complement_rank(&zero),
            Err(RootError::TrivialSubspace { .. })
        ));
        // e_1 = α1 + α2 + α3 in B3.
        let b3 = rs(RootType::B, 3);
        let w = RootSubspace::new(vec![vec![1, 1, 1]]).unwrap();
        assert_eq!(b3.span_complement_rank(&w).unwrap(), 3);
    }

    #[test]
    fn reducible_input_is_rejected() {
        let a1a1 = RootSystem::from_simple_roots(
            RootType::A,
            vec![vec![1, -1, 0, 0], vec![0, 0, 1, -1]],
            false,
        )
        .unwrap();
        assert_eq!(a1a1.roots().len(), 4);
        assert!(!a1a1.is_irreducible());
        let w = RootSubspace::spanned_by_simple(2, SimpleSet::from_indices([0]));
        assert_eq!(a1a1.span_complement_rank(&w), Err(RootError::Reducible));
    }

    #[test]
    fn dependent_basis_rejected() {
        assert_eq!(
            RootSubspace::new(vec![vec![1, 0], vec![2, 0]]),
            Err(RootError::DependentBasis)
        );
    }

    #[test]
    fn parse_labels() {
        assert_eq!(parse_type_and_rank("A4").unwrap(), (RootType::A, 4));
        assert_eq!(parse_type_and_rank("bc2").unwrap(), (RootType::BC, 2));
        assert_eq!(parse_type_and_rank("E8").unwrap(), (RootType::E8, 8));
        assert!(parse_type_and_rank("Q3").is_err());
    }
}

//! The Weyl dimension formula in exact arithmetic.
//!
//! For a positive root `α = Σ c_i α_i` the coroot pairing is
//! `⟨λ+ρ, α^∨⟩ = Σ c_i |α_i|² (k_i+1) / |α|²`, and the `|α|²` cancels in the
//! ratio against `⟨ρ, α^∨⟩`, so every factor is a ratio of integers.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::RepError;
use crate::rootkit::{build_root_system, RootSystem, RootType};

/// Precomputed positive-root data for repeated dimension queries.
#[derive(Debug, Clone)]
pub struct WeylCalculator {
    root_type: RootType,
    rank: usize,
    /// For each positive root, `c_i |α_i|²` per simple root.
    weights: Vec<Vec<u64>>,
    denominator: BigUint,
}

impl WeylCalculator {
    pub fn new(root_type: RootType, rank: usize) -> Result<Self, RepError> {
        if root_type == RootType::BC {
            return Err(RepError::NonReduced);
        }
        let rs = build_root_system(root_type, rank)?;
        Ok(Self::from_root_system(&rs))
    }

    pub fn from_root_system(rs: &RootSystem) -> Self {
        let g = rs.gram();
        let weights: Vec<Vec<u64>> = rs
            .positive_roots()
            .iter()
            .map(|r| {
                r.coeffs
                    .iter()
                    .enumerate()
                    .map(|(i, &c)| (c * g[i][i]) as u64)
                    .collect()
            })
            .collect();
        let denominator = weights
            .iter()
            .map(|w| BigUint::from(w.iter().sum::<u64>()))
            .fold(BigUint::one(), |acc, x| acc * x);
        WeylCalculator {
            root_type: rs.label(),
            rank: rs.rank(),
            weights,
            denominator,
        }
    }

    pub fn root_type(&self) -> RootType {
        self.root_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn check_weight(&self, lambda: &[i64]) -> Result<(), RepError> {
        if lambda.len() != self.rank {
            return Err(RepError::WrongLength { expected: self.rank, found: lambda.len() });
        }
        if let Some(i) = lambda.iter().position(|&k| k < 0) {
            return Err(RepError::NotDominant { index: i + 1, value: lambda[i] });
        }
        Ok(())
    }

    /// `d_λ` for a dominant weight given by its fundamental-weight coefficients.
    pub fn dim(&self, lambda: &[i64]) -> Result<BigUint, RepError> {
        self.check_weight(lambda)?;
        let numerator = self
            .weights
            .iter()
            .map(|w| {
                let s: u64 = w.iter().zip(lambda).map(|(&wi, &k)| wi * (k as u64 + 1)).sum();
                BigUint::from(s)
            })
            .fold(BigUint::one(), |acc, x| acc * x);
        let (q, r) = numerator.div_rem(&self.denominator);
        assert!(r.is_zero(), "Weyl product is not an integer for {lambda:?}");
        Ok(q)
    }
}

/// `d_λ` for the complex simple algebra of the given type.
pub fn weyl_dim(root_type: RootType, rank: usize, lambda: &[i64]) -> Result<BigUint, RepError> {
    WeylCalculator::new(root_type, rank)?.dim(lambda)
}

/// All nonzero dominant weights with coefficient sum at most `max_sum`, in
/// lexicographic order of their coefficient vectors.
pub fn weight_box(rank: usize, max_sum: i64) -> Vec<Vec<i64>> {
    fn rec(rank: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == rank {
            if cur.iter().any(|&k| k > 0) {
                out.push(cur.clone());
            }
            return;
        }
        for k in 0..=left {
            cur.push(k);
            rec(rank, left - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(rank, max_sum, &mut Vec::with_capacity(rank), &mut out);
    out.sort();
    out
}

/// Minimal nontrivial dimension over the box `Σk_i ≤ 2`, with all minimisers.
pub fn min_nontrivial_complex_dim(root_type: RootType, rank: usize) -> Result<(BigUint, Vec<Vec<i64>>), RepError> {
    let calc = WeylCalculator::new(root_type, rank)?;
    let mut best: Option<BigUint> = None;
    let mut argmin = Vec::new();
    for lambda in weight_box(rank, 2) {
        let d = calc.dim(&lambda)?;
        match &best {
            Some(b) if d > *b => {}
            Some(b) if d == *b => argmin.push(lambda),
            _ => {
                best = Some(d);
                argmin = vec![lambda];
            }
        }
    }
    Ok((best.expect("box is nonempty"), argmin))
}

/// The fundamental weight `ϖ_i` (1-based) as a coefficient vector.
pub fn fundamental(rank: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; rank];
    v[i - 1] = 1;
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(t: RootType, r: usize, l: &[i64]) -> u64 {
        u64::try_from(weyl_dim(t, r, l).unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(d(RootType::A, 4, &[0, 1, 0, 0]), 10);
        assert_eq!(d(RootType::C, 4, &[1, 0, 0, 0]), 8);
        assert_eq!(d(RootType::D, 5, &[0, 0, 0, 1, 0]), 16);
        assert_eq!(d(RootType::G2, 2, &[0, 0]), 1);
        assert_eq!(d(RootType::G2, 2, &[1, 0]), 7);
        assert_eq!(d(RootType::G2, 2, &[0, 1]), 14);
        assert_eq!(d(RootType::F4, 4, &[0, 0, 0, 1]), 26);
        assert_eq!(d(RootType::E8, 8, &[0, 0, 0, 0, 0, 0, 0, 1]), 248);
        assert_eq!(d(RootType::E8, 8, &[1, 0, 0, 0, 0, 0, 0, 0]), 3875);
        assert_eq!(d(RootType::E6, 6, &[1, 0, 0, 0, 0, 0]), 27);
        assert_eq!(d(RootType::E7, 7, &[0, 0, 0, 0, 0, 0, 1]), 56);
        for l in 4..=8 {
            let mut w = vec![0; l];
            w[0] = 1;
            w[l - 1] = 1;
            assert_eq!(d(RootType::A, l, &w), (l * (l + 2)) as u64);
        }
    }

    #[test]
    fn rejects_bad_weights() {
        assert!(matches!(weyl_dim(RootType::A, 2, &[1, -1]), Err(RepError::NotDominant { index: 2, .. })));
        assert!(matches!(weyl_dim(RootType::A, 2, &[1]), Err(RepError::WrongLength { .. })));
        assert!(matches!(weyl_dim(RootType::BC, 2, &[1, 0]), Err(RepError::NonReduced)));
    }

    #[test]
    fn complex_minima() {
        for l in 2..=8 {
            let (m, arg) = min_nontrivial_complex_dim(RootType::A, l).unwrap();
            assert_eq!(m, BigUint::from(l as u64 + 1));
            assert_eq!(arg, vec![fundamental(l, l), fundamental(l, 1)]);
            let (m, arg) = min_nontrivial_complex_dim(RootType::C, l).unwrap();
            assert_eq!(m, BigUint::from(2 * l as u64));
            if l > 2 {
                assert_eq!(arg, vec![fundamental(l, 1)]);
            }
        }
        for n in 5..=9 {
            let (m, arg) = min_nontrivial_complex_dim(RootType::D, n).unwrap();
            assert_eq!(m, BigUint::from(2 * n as u64));
            assert_eq!(arg, vec![fundamental(n, 1)]);
        }
    }

    #[test]
    fn box_sizes() {
        assert_eq!(weight_box(3, 2).len(), 9);
        assert_eq!(weight_box(2, 3).len(), 9);
    }
}

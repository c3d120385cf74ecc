//! Weight multiplicities by Freudenthal's recursion, used as an oracle for
//! the Weyl dimension formula.
//!
//! Weights are kept in fundamental-weight coordinates. The recursion
//! `(|λ+ρ|² − |μ+ρ|²) m(μ) = 2 Σ_{α>0} Σ_{j≥1} m(μ+jα) ⟨μ+jα, α⟩`
//! is evaluated on dominant weights only, in order of depth below `λ`; other
//! weights are looked up through their dominant conjugate, and the total
//! counts each dominant weight once per element of its Weyl orbit.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, HashSet};

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{One, Zero};

use super::RepError;
use crate::rootkit::{build_root_system, RootType};

/// Largest rank the oracle accepts.
pub const MAX_RANK: usize = 6;
/// Largest total dimension the oracle accepts.
pub const MAX_DIM: u64 = 2_000_000;

type Weight = [i64; MAX_RANK];

/// Inverse of a small integer matrix over the rationals.
fn invert(m: &[Vec<i64>]) -> Vec<Vec<Ratio<i128>>> {
    let n = m.len();
    let mut a: Vec<Vec<Ratio<i128>>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Ratio<i128>> = row.iter().map(|&x| Ratio::from_integer(x as i128)).collect();
            r.extend((0..n).map(|j| if i == j { Ratio::one() } else { Ratio::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero()).expect("Gram matrix is invertible");
        a.swap(col, p);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for c in 0..2 * n {
                    let delta = f * a[col][c];
                    a[r][c] -= delta;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// Total dimension of the irreducible module with highest weight `λ`.
pub fn freudenthal_dim(root_type: RootType, rank: usize, lambda: &[i64]) -> Result<BigUint, RepError> {
    if root_type == RootType::BC {
        return Err(RepError::NonReduced);
    }
    if rank > MAX_RANK {
        return Err(RepError::OracleLimit(format!("rank {rank} exceeds {MAX_RANK}")));
    }
    let rs = build_root_system(root_type, rank)?;
    if lambda.len() != rank {
        return Err(RepError::WrongLength { expected: rank, found: lambda.len() });
    }
    if let Some(i) = lambda.iter().position(|&k| k < 0) {
        return Err(RepError::NotDominant { index: i + 1, value: lambda[i] });
    }
    let g = rs.gram();
    // Fundamental weights in the simple-root basis: ϖ_i = Σ_k M_ik α_k with
    // M = diag(g_ii / 2) G^{-1}; then ⟨ϖ_i, ϖ_j⟩ = M_ij g_jj / 2.
    let ginv = invert(g);
    let form: Vec<Vec<Ratio<i128>>> = (0..rank)
        .map(|i| {
            (0..rank)
                .map(|j| Ratio::new(g[i][i] as i128, 2) * ginv[i][j] * Ratio::new(g[j][j] as i128, 2))
                .collect()
        })
        .collect();
    let scale = form
        .iter()
        .flatten()
        .fold(1i128, |acc, x| num_integer::lcm(acc, *x.denom()));
    let f: Vec<Vec<i64>> = form
        .iter()
        .map(|row| row.iter().map(|x| i64::try_from((x * scale).to_integer()).expect("small form")).collect())
        .collect();
    let ip = |x: &Weight, y: &Weight| -> i64 {
        (0..rank).map(|i| x[i] * (0..rank).map(|j| f[i][j] * y[j]).sum::<i64>()).sum()
    };

    // Simple roots and positive roots in fundamental-weight coordinates.
    let mut simple: Vec<Weight> = vec![[0; MAX_RANK]; rank];
    for (j, row) in simple.iter_mut().enumerate() {
        for i in 0..rank {
            row[i] = 2 * g[j][i] / g[i][i];
        }
    }
    let positive: Vec<(Weight, i64)> = rs
        .positive_roots()
        .iter()
        .map(|r| {
            let mut v = [0i64; MAX_RANK];
            for (j, &c) in r.coeffs.iter().enumerate() {
                for i in 0..rank {
                    v[i] += c * simple[j][i];
                }
            }
            (v, r.height())
        })
        .collect();

    let mut lam = [0i64; MAX_RANK];
    lam[..rank].copy_from_slice(lambda);
    let shift = |v: &Weight| -> Weight {
        let mut out = *v;
        out[..rank].iter_mut().for_each(|x| *x += 1);
        out
    };
    let top = ip(&shift(&lam), &shift(&lam));

    // Dominant conjugate via simple reflections s_i(μ) = μ − μ_i α_i.
    let dominant = |mut w: Weight| -> Weight {
        while let Some(i) = (0..rank).find(|&i| w[i] < 0) {
            let c = w[i];
            (0..rank).for_each(|k| w[k] -= c * simple[i][k]);
        }
        w
    };
    let orbit_size = |mu: &Weight| -> u64 {
        let mut seen = HashSet::from([*mu]);
        let mut stack = vec![*mu];
        while let Some(w) = stack.pop() {
            for i in (0..rank).filter(|&i| w[i] != 0) {
                let mut x = w;
                (0..rank).for_each(|k| x[k] -= w[i] * simple[i][k]);
                if seen.insert(x) {
                    stack.push(x);
                }
            }
        }
        seen.len() as u64
    };

    // Dominant weights below λ are visited in order of depth ht(λ − μ). Each
    // is reachable from λ through dominant weights by subtracting positive
    // roots, so a min-heap on depth discovers every weight before it is due.
    let mut discovered = HashSet::from([lam]);
    let mut queue = BinaryHeap::from([Reverse((0i64, lam))]);
    let mut mult: HashMap<Weight, i64> = HashMap::new();
    let mut total: u64 = 0;
    while let Some(Reverse((depth, mu))) = queue.pop() {
        for (alpha, ht) in &positive {
            let mut w = mu;
            (0..rank).for_each(|i| w[i] -= alpha[i]);
            if w[..rank].iter().all(|&x| x >= 0) && discovered.insert(w) {
                queue.push(Reverse((depth + ht, w)));
            }
        }
        let m = if depth == 0 {
            1
        } else {
            let den = top - ip(&shift(&mu), &shift(&mu));
            assert!(den > 0, "dominant weight below the highest weight");
            let mut sum = 0i64;
            for (alpha, ht) in &positive {
                let mut w = mu;
                let mut j = 1i64;
                while j * ht <= depth {
                    (0..rank).for_each(|i| w[i] += alpha[i]);
                    if let Some(&m) = mult.get(&dominant(w)) {
                        sum += m * ip(&w, alpha);
                    }
                    j += 1;
                }
            }
            assert!((2 * sum) % den == 0, "Freudenthal quotient is not an integer");
            2 * sum / den
        };
        if m > 0 {
            mult.insert(mu, m);
            total += m as u64 * orbit_size(&mu);
            if total > MAX_DIM {
                return Err(RepError::OracleLimit(format!("dimension exceeds {MAX_DIM}")));
            }
        }
    }
    Ok(BigUint::from(total))
}

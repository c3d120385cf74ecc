//! Exact linear algebra over the rationals for small dense integer matrices.
//!
//! Everything here works on row vectors of `i64` entries and eliminates over
//! [`BigRational`], so no intermediate value can overflow or round.

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Reduced row echelon form of an integer matrix given as rows.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub rows: Vec<Vec<BigRational>>,
    pub pivots: Vec<usize>,
    pub cols: usize,
}

impl Echelon {
    pub fn of(rows: &[Vec<i64>], cols: usize) -> Self {
        let mut m: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "ragged matrix");
                r.iter().map(|&x| BigRational::from_integer(x.into())).collect()
            })
            .collect();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for col in 0..cols {
            if lead >= m.len() {
                break;
            }
            let Some(p) = (lead..m.len()).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(lead, p);
            let inv = m[lead][col].recip();
            for x in m[lead].iter_mut() {
                *x = &*x * &inv;
            }
            for r in 0..m.len() {
                if r != lead && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in col..cols {
                        let delta = &f * &m[lead][c];
                        m[r][c] -= delta;
                    }
                }
            }
            pivots.push(col);
            lead += 1;
        }
        m.truncate(pivots.len());
        Echelon { rows: m, pivots, cols }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Integer basis of the right null space `{x : A x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<i64>> {
        let free: Vec<usize> = (0..self.cols).filter(|c| !self.pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![BigRational::zero(); self.cols];
                v[f] = BigRational::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    v[p] = -row[f].clone();
                }
                clear_denominators(&v)
            })
            .collect()
    }
}

fn clear_denominators(v: &[BigRational]) -> Vec<i64> {
    let lcm = v
        .iter()
        .fold(num_bigint::BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<num_bigint::BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let g = ints
        .iter()
        .fold(num_bigint::BigInt::zero(), |acc, x| acc.gcd(x));
    ints.iter()
        .map(|x| {
            let y = if g.is_zero() { x.clone() } else { x / &g };
            y.to_i64().expect("null space vector entry exceeds i64")
        })
        .collect()
}

/// Rank of the matrix whose rows are `rows`.
pub fn rank(rows: &[Vec<i64>], cols: usize) -> usize {
    Echelon::of(rows, cols).rank()
}

/// Whether `v` lies in the rational span of `basis`.
pub fn in_span(basis: &[Vec<i64>], v: &[i64]) -> bool {
    let cols = v.len();
    let r = rank(basis, cols);
    let mut ext = basis.to_vec();
    ext.push(v.to_vec());
    rank(&ext, cols) == r
}

/// `x^T G y` for an integer Gram matrix.
pub fn bilinear(gram: &[Vec<i64>], x: &[i64], y: &[i64]) -> i64 {
    x.iter()
        .enumerate()
        .filter(|(_, xi)| **xi != 0)
        .map(|(i, xi)| xi * gram[i].iter().zip(y).map(|(g, yj)| g * yj).sum::<i64>())
        .sum()
}

/// Product `rows * gram`, used to turn membership tests into orthogonality tests.
pub fn mul_gram(rows: &[Vec<i64>], gram: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = gram.len();
    rows.iter()
        .map(|r| (0..n).map(|j| (0..n).map(|i| r[i] * gram[i][j]).sum()).collect())
        .collect()
}

pub fn is_zero_vec(v: &[i64]) -> bool {
    v.iter().all(|x| *x == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_dependent_rows() {
        let m = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        assert_eq!(rank(&m, 3), 2);
        assert_eq!(rank(&[], 3), 0);
    }

    #[test]
    fn nullspace_is_annihilated() {
        let m = vec![vec![1, -1, 0, 0], vec![0, 1, -1, 0]];
        let e = Echelon::of(&m, 4);
        let ns = e.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for row in &m {
                assert_eq!(row.iter().zip(v).map(|(a, b)| a * b).sum::<i64>(), 0);
            }
        }
    }

    #[test]
    fn span_membership() {
        let b = vec![vec![1, 0, 1], vec![0, 2, 0]];
        assert!(in_span(&b, &[2, 3, 2]));
        assert!(!in_span(&b, &[1, 0, 0]));
    }
}

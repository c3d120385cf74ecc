//! Minimal real representations of `su(m,n)`, `sp(m,n)` and `so*(2n)` from
//! the diagram involution `s₀` and the Cartan index `ε`.
//!
//! A nonzero dominant `λ` gives a real representation of dimension `d_λ`
//! when `λ ∈ ker ε`, and one of dimension `2 d_λ` in every case. Searching
//! the box `Σk ≤ 2` gives an upper bound; every weight outside the box
//! dominates a weight with `Σk = 2` and has strictly larger dimension, which
//! gives a matching lower bound whenever the minimum is found inside the box.

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::weyl::{weight_box, WeylCalculator};
use super::RepError;
use crate::catalogue::{Family, GroupSpec};
use crate::rootkit::RootType;

/// Real forms with a known `s₀` (and, except for `su`, a known `ε`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RealForm {
    Su { m: i64, n: i64 },
    Sp { m: i64, n: i64 },
    /// `so*(2n)`, stored by `n`.
    SoStar { n: i64 },
}

impl RealForm {
    pub fn from_spec(spec: &GroupSpec) -> Option<RealForm> {
        let p = spec.params();
        match spec.family() {
            Family::Su => Some(RealForm::Su { m: p[0], n: p[1] }),
            Family::SpPq => Some(RealForm::Sp { m: p[0], n: p[1] }),
            Family::SoStar => Some(RealForm::SoStar { n: p[0] }),
            _ => None,
        }
    }
}

impl std::fmt::Display for RealForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RealForm::Su { m, n } => write!(f, "su({m},{n})"),
            RealForm::Sp { m, n } => write!(f, "sp({m},{n})"),
            RealForm::SoStar { n } => write!(f, "so*({})", 2 * n),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealRepClassifier {
    pub form: RealForm,
    pub complex_type: (RootType, usize),
    /// Diagram involution as a 0-based permutation of the nodes.
    pub s0: Vec<usize>,
    /// 0-based indices `S` with `ε(λ) = (-1)^{Σ_{i∈S} k_i}`; `None` when not known.
    pub eps: Option<Vec<usize>>,
}

impl RealRepClassifier {
    pub fn apply_s0(&self, lambda: &[i64]) -> Vec<i64> {
        let mut out = vec![0; lambda.len()];
        for (i, &k) in lambda.iter().enumerate() {
            out[self.s0[i]] = k;
        }
        out
    }

    pub fn is_fixed(&self, lambda: &[i64]) -> bool {
        self.apply_s0(lambda) == lambda
    }

    /// `ε(λ)` for `λ ∈ Λ^{s₀}`; `None` off `Λ^{s₀}` or when `ε` is not known.
    pub fn eps(&self, lambda: &[i64]) -> Option<i8> {
        let s = self.eps.as_ref()?;
        if !self.is_fixed(lambda) {
            return None;
        }
        let parity: i64 = s.iter().map(|&i| lambda[i]).sum();
        Some(if parity % 2 == 0 { 1 } else { -1 })
    }
}

/// Builds the classifier for the forms covered by the case analysis.
pub fn classifier_for(form: RealForm) -> Result<RealRepClassifier, RepError> {
    let unsupported = || RepError::UnsupportedForm(form.to_string());
    let reverse = |l: usize| (0..l).map(|i| l - 1 - i).collect::<Vec<_>>();
    match form {
        RealForm::Su { m, n } => {
            if !(m >= n && n >= 2) || (m, n) == (2, 2) {
                return Err(unsupported());
            }
            let l = (m + n - 1) as usize;
            Ok(RealRepClassifier { form, complex_type: (RootType::A, l), s0: reverse(l), eps: None })
        }
        RealForm::Sp { m, n } => {
            if !(m >= n && n >= 2) {
                return Err(unsupported());
            }
            let l = (m + n) as usize;
            // Odd positions 1, 3, ... up to [(l+1)/2] terms.
            let eps = (1..=l.div_ceil(2)).map(|i| 2 * i - 2).collect();
            Ok(RealRepClassifier { form, complex_type: (RootType::C, l), s0: (0..l).collect(), eps: Some(eps) })
        }
        RealForm::SoStar { n } => {
            if n < 5 {
                return Err(unsupported());
            }
            let l = n as usize;
            let mut s0: Vec<usize> = (0..l).collect();
            if l % 2 == 1 {
                s0.swap(l - 2, l - 1);
            }
            let eps = (1..=l / 2).map(|i| 2 * i - 2).collect();
            Ok(RealRepClassifier { form, complex_type: (RootType::D, l), s0, eps: Some(eps) })
        }
    }
}

/// Where a value of `n` came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    Classifier,
    Catalogue,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinRealRep {
    pub value: i64,
    /// A proven lower bound; equal to `value` when `exact`.
    pub lower: i64,
    pub exact: bool,
    pub source: Source,
    /// Weights whose representation attains `value`.
    pub minimizers: Vec<Vec<i64>>,
    /// Whether the minimisers form a single `s₀`-orbit.
    pub unique_up_to_s0: bool,
}

fn small(d: &BigUint) -> i64 {
    d.to_i64().expect("dimension fits in i64")
}

/// Minimal nontrivial real representation dimension from the classifier.
pub fn min_real_rep_classified(cls: &RealRepClassifier) -> Result<MinRealRep, RepError> {
    let (t, l) = cls.complex_type;
    let calc = WeylCalculator::new(t, l)?;
    let mut upper: Option<BigUint> = None;
    let mut lower: Option<BigUint> = None;
    let mut realised: Vec<(Vec<i64>, BigUint)> = Vec::new();
    let keep_min = |slot: &mut Option<BigUint>, x: &BigUint| {
        if slot.as_ref().is_none_or(|s| x < s) {
            *slot = Some(x.clone());
        }
    };
    for lambda in weight_box(l, 2) {
        let d = calc.dim(&lambda)?;
        if lambda.iter().sum::<i64>() == 2 {
            keep_min(&mut lower, &d);
        }
        let real_dim = match cls.eps(&lambda) {
            Some(1) => d.clone(),
            _ => &d * 2u32,
        };
        let bound = if cls.is_fixed(&lambda) && cls.eps.is_none() { &d } else { &real_dim };
        keep_min(&mut lower, bound);
        keep_min(&mut upper, &real_dim);
        realised.push((lambda, real_dim));
    }
    let upper = upper.expect("weight box is nonempty");
    let lower = small(&lower.expect("weight box is nonempty"));
    let minimizers: Vec<Vec<i64>> = realised
        .into_iter()
        .filter(|(_, d)| *d == upper)
        .map(|(w, _)| w)
        .collect();
    let unique_up_to_s0 = match minimizers.as_slice() {
        [a] => cls.is_fixed(a),
        [a, b] => cls.apply_s0(a) == *b,
        _ => false,
    };
    Ok(MinRealRep {
        value: small(&upper),
        lower,
        exact: lower == small(&upper),
        source: Source::Classifier,
        minimizers,
        unique_up_to_s0,
    })
}

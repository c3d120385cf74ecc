//! Representation dimensions: the Weyl formula, a Freudenthal oracle, and
//! minimal real representations of real forms.

use thiserror::Error;

use crate::catalogue::{Catalogue, CatalogueError, GroupDescriptor, GroupSpec, Invariant, Signature};
use crate::rootkit::{dynkin, RootError, SimpleSet};

pub mod classifier;
pub mod freudenthal;
pub mod weyl;

pub use classifier::{classifier_for, MinRealRep, RealForm, RealRepClassifier, Source};
pub use freudenthal::freudenthal_dim;
pub use weyl::{min_nontrivial_complex_dim, weyl_dim, WeylCalculator};

#[derive(Debug, Error)]
pub enum RepError {
    #[error(transparent)]
    Root(#[from] RootError),
    #[error("representations of a non-reduced root system are not defined")]
    NonReduced,
    #[error("weight has {found} coefficients, expected {expected}")]
    WrongLength { expected: usize, found: usize },
    #[error("coefficient k{index} = {value} is negative, weight is not dominant")]
    NotDominant { index: usize, value: i64 },
    #[error("oracle scale limit: {0}")]
    OracleLimit(String),
    #[error("no classifier or catalogue value for {0}")]
    UnsupportedForm(String),
    #[error("{0} is not a connected set of simple roots")]
    NotConnected(SimpleSet),
    #[error("{0} has fewer than two simple roots")]
    TooSmall(SimpleSet),
    #[error(transparent)]
    Catalogue(#[from] CatalogueError),
}

/// `n(G)`: from the classifier where it applies, else from the catalogue.
pub fn min_real_rep(cat: &Catalogue, spec: &GroupSpec) -> Result<MinRealRep, RepError> {
    if let Some(form) = RealForm::from_spec(spec) {
        if let Ok(cls) = classifier_for(form) {
            return classifier::min_real_rep_classified(&cls);
        }
    }
    match cat.tabulated_invariant(spec, Invariant::NG) {
        Ok(t) => Ok(MinRealRep {
            value: t.value,
            lower: t.value,
            exact: true,
            source: Source::Catalogue,
            minimizers: Vec::new(),
            unique_up_to_s0: false,
        }),
        Err(CatalogueError::NoValue { .. }) => Err(RepError::UnsupportedForm(spec.to_string())),
        Err(e) => Err(e.into()),
    }
}

/// The identified subalgebra `g_Δ` and its `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubalgebraRep {
    pub n: i64,
    pub signature: Signature,
    pub matches: Vec<GroupSpec>,
}

/// `n(g_Δ)` for a connected `Δ` with at least two simple roots.
///
/// `g_Δ` is identified by its restricted root type and multiplicities;
/// the value is the tabulated `n` of the matching catalogue entries.
pub fn n_of_subalgebra(cat: &Catalogue, desc: &GroupDescriptor, delta: SimpleSet) -> Result<SubalgebraRep, RepError> {
    if delta.len() < 2 {
        return Err(RepError::TooSmall(delta));
    }
    if !delta.is_subset(SimpleSet::full(desc.rank)) || !dynkin::is_connected(desc.root_system(), delta) {
        return Err(RepError::NotConnected(delta));
    }
    let signature = desc.signature_of(delta);
    let (n, matches) = cat.n_of_signature(&signature)?;
    Ok(SubalgebraRep { n, signature, matches })
}

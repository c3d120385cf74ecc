//! Root systems, parabolic invariants and bounds for real simple Lie groups.

pub mod linalg;
pub mod rootkit;
pub mod catalogue;
pub mod flagcalc;
pub mod repdim;
pub mod zimmerbounds;

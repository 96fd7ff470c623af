//! A finite-field coding-theory workbench: exact arithmetic in GF(p^m),
//! dense linear algebra over it, construction of Reed-Solomon and
//! generalized Roth-Lempel codes, exhaustive weight distributions, and the
//! closed-form weight theory for the canonical 2x2-tail families, with every
//! closed form cross-checkable against brute force.

pub mod code;
pub mod combinatorics;
pub mod error;
pub mod formulas;
pub mod gf;
pub mod golden;
pub mod grl;
pub mod matrix;
pub mod sweep;

pub use code::{
    classify_from_distributions, macwilliams_transform, CodeClass, LinearCode, SingletonReport,
    WeightDistribution, DEFAULT_ENUMERATION_BUDGET,
};
pub use error::{Error, Result};
pub use formulas::{
    a_min_weight_closed, exceptional_mds_dims, is_monomial_tail, is_swap_tail,
    nmds_full_distribution, nmds_theorem_dims, predict, subset_sum_count_bruteforce,
    subset_sum_count_closed, v_of_b, PredictedClass, Prediction, PredictionSource,
};
pub use gf::{Field, FieldElem, MAX_FIELD_ORDER};
pub use grl::{canonical_alpha, grl_generator, rl_code, rs_generator, Alphabet, GrlSpec};
pub use matrix::{vandermonde_gap_closed_form, vandermonde_gap_det, MatrixGF, Rref};

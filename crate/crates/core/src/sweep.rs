//! Cross-validation machinery: seeded tail generators and the
//! theory-versus-enumeration checks run by the CLI sweep command and the
//! acceptance suite.
//!
//! Everything is deterministic: tails come from a seeded ChaCha stream in a
//! fixed order, and the enumeration results do not depend on worker counts.

use num_bigint::BigUint;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::code::{CodeClass, SingletonReport};
use crate::error::{Error, Result};
use crate::formulas::{nmds_full_distribution, predict, PredictedClass};
use crate::gf::Field;
use crate::grl::{rl_code, Alphabet};
use crate::matrix::MatrixGF;

/// Default seed for tail generation.
pub const DEFAULT_SEED: u64 = 42;

/// Field orders swept by default when cross-validating the closed theory.
pub const DEFAULT_SWEEP_ORDERS: [u64; 5] = [4, 5, 7, 8, 9];

/// Field orders swept by the subset-sum cross-check.
pub const SUBSET_SUM_SWEEP_ORDERS: [u64; 6] = [4, 5, 7, 8, 9, 11];

/// Builds the field of the given prime-power order with defaults.
pub fn field_of_order(q: u64) -> Result<Field> {
    if q < 2 {
        return Err(Error::NotPrime(q));
    }
    let mut p = q;
    let mut f = 2;
    while f * f <= p {
        if p % f == 0 {
            p = f;
            break;
        }
        f += 1;
    }
    let mut m = 0u32;
    let mut rest = q;
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    if rest != 1 {
        return Err(Error::NotPrime(q));
    }
    Field::new(p, m)
}

/// A deterministic tail stream for one field.
pub fn tail_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniformly random invertible 2x2 tail, by rejection.
pub fn random_invertible_tail(field: &Field, rng: &mut ChaCha8Rng) -> MatrixGF {
    loop {
        let data: Vec<_> = (0..4)
            .map(|_| field.elem(rng.random_range(0..field.q())).unwrap())
            .collect();
        let tail = MatrixGF::new(field.clone(), 2, 2, data).unwrap();
        if !tail.det().unwrap().is_zero() {
            return tail;
        }
    }
}

/// Random invertible monomial (diagonal or anti-diagonal) 2x2 tail.
pub fn random_monomial_tail(field: &Field, rng: &mut ChaCha8Rng) -> MatrixGF {
    let a = field.elem(rng.random_range(1..field.q())).unwrap();
    let b = field.elem(rng.random_range(1..field.q())).unwrap();
    let mut tail = MatrixGF::zeros(field.clone(), 2, 2);
    if rng.random_range(0..2u32) == 0 {
        tail.set(0, 0, a);
        tail.set(1, 1, b);
    } else {
        tail.set(0, 1, a);
        tail.set(1, 0, b);
    }
    tail
}

/// Outcome of one closed-theory-versus-enumeration check.
#[derive(Debug, Clone)]
pub struct TheoremCase {
    pub q: u64,
    pub alphabet: Alphabet,
    pub k: usize,
    pub tail_text: String,
    pub predicted_class: PredictedClass,
    pub predicted_d: Option<usize>,
    pub observed: SingletonReport,
    /// Closed-form count of minimum-weight codewords (when predicted NMDS).
    pub a_min_closed: Option<BigUint>,
    /// Enumerated count of minimum-weight codewords of the dual.
    pub a_min_observed: BigUint,
    pub distributions_match: bool,
    pub pass: bool,
}

/// Runs the full cross-check for a dimension inside the closed-theory range:
/// prediction against classification, the closed minimum-weight count
/// against the enumerated one, and the recurrence-generated distributions
/// against the enumerated ones on both sides.
pub fn check_theorem_case(
    field: &Field,
    alphabet: Alphabet,
    k: usize,
    tail: &MatrixGF,
    budget: u64,
) -> Result<TheoremCase> {
    let prediction = predict(field, alphabet, k, tail)?;
    let code = rl_code(field, alphabet, k, tail)?;
    let primal_dist = code.weight_distribution_with_budget(budget)?;
    let dual_dist = code.dual().weight_distribution_with_budget(budget)?;
    let observed = crate::code::classify_from_distributions(code.n(), code.dim(), &primal_dist, &dual_dist)?;

    let a_min_observed = dual_dist.count(k).clone();
    let mut pass = prediction.klass == PredictedClass::Nmds
        && observed.klass == CodeClass::Nmds
        && prediction.d == Some(observed.d);
    let mut distributions_match = false;
    if let Some(a_min) = &prediction.a_min {
        pass &= *a_min == a_min_observed;
        pass &= *a_min == *primal_dist.count(code.n() - k);
        let (expect_primal, expect_dual) =
            nmds_full_distribution(code.n(), k, field.q(), a_min)?;
        distributions_match = expect_primal == primal_dist && expect_dual == dual_dist;
        pass &= distributions_match;
    } else {
        pass = false;
    }
    Ok(TheoremCase {
        q: field.q(),
        alphabet,
        k,
        tail_text: tail.to_text(),
        predicted_class: prediction.klass,
        predicted_d: prediction.d,
        observed,
        a_min_closed: prediction.a_min,
        a_min_observed,
        distributions_match,
        pass,
    })
}

/// Outcome of one exceptional-dimension MDS check.
#[derive(Debug, Clone)]
pub struct ExceptionalCase {
    pub q: u64,
    pub alphabet: Alphabet,
    pub k: usize,
    pub tail_text: String,
    pub predicted_class: PredictedClass,
    pub observed: SingletonReport,
    pub pass: bool,
}

/// Checks that a covered tail at an exceptional dimension classifies as MDS
/// with the predicted distance.
pub fn check_exceptional_case(
    field: &Field,
    alphabet: Alphabet,
    k: usize,
    tail: &MatrixGF,
    budget: u64,
) -> Result<ExceptionalCase> {
    let prediction = predict(field, alphabet, k, tail)?;
    let code = rl_code(field, alphabet, k, tail)?;
    let observed = code.classify_with_budget(budget)?;
    let pass = prediction.klass == PredictedClass::Mds
        && observed.klass == CodeClass::Mds
        && prediction.d == Some(observed.d);
    Ok(ExceptionalCase {
        q: field.q(),
        alphabet,
        k,
        tail_text: tail.to_text(),
        predicted_class: prediction.klass,
        observed,
        pass,
    })
}

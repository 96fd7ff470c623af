//! Exact closed-form engine: subset-sum counts over the unit group or the
//! whole field, the weight-distribution recurrences shared by all
//! near-Singleton codes, the closed minimum-weight count for the canonical
//! 2x2-tail families, and the class/parameter predictor.
//!
//! All formula arithmetic runs over arbitrary-precision integers with a final
//! exact-division assertion, so a transcription bug surfaces as
//! `NonIntegerResult` rather than as a silently wrong count.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::code::WeightDistribution;
use crate::combinatorics::{binomial, binomial_u128_saturating, Combinations};
use crate::error::{Error, Result};
use crate::gf::{Field, FieldElem};
use crate::grl::{canonical_alpha, Alphabet};
use crate::matrix::MatrixGF;

/// Ceiling on the number of subsets the brute-force counter will visit.
pub const SUBSET_SUM_BUDGET: u64 = 10_000_000;

/// The sign-carrying weight `v(b)`: `q - 1` at zero, `-1` elsewhere.
pub fn v_of_b(field: &Field, b: FieldElem) -> i64 {
    if b.is_zero() {
        field.q() as i64 - 1
    } else {
        -1
    }
}

/// Closed-form count of k-element subsets of `D` summing to `b`, where `D`
/// is the unit group or the whole field.
pub fn subset_sum_count_closed(
    field: &Field,
    k: u64,
    b: FieldElem,
    domain: Alphabet,
) -> Result<BigUint> {
    let q = field.q();
    let p = field.p();
    let v = BigInt::from(v_of_b(field, b));
    let numerator = match domain {
        Alphabet::Units => {
            let sign = if (k + k / p) % 2 == 0 { 1 } else { -1 };
            BigInt::from(binomial(q - 1, k))
                + BigInt::from(sign) * v * BigInt::from(binomial(q / p - 1, k / p))
        }
        Alphabet::Full => {
            if k % p != 0 {
                BigInt::from(binomial(q, k))
            } else {
                let sign = if (k + k / p) % 2 == 0 { 1 } else { -1 };
                BigInt::from(binomial(q, k))
                    + BigInt::from(sign) * v * BigInt::from(binomial(q / p, k / p))
            }
        }
    };
    exact_nonneg_div(numerator, q, "subset-sum count")
}

/// Literal subset enumeration over the canonical ordering of `D`.
pub fn subset_sum_count_bruteforce(
    field: &Field,
    k: u64,
    b: FieldElem,
    domain: Alphabet,
) -> Result<BigUint> {
    let elems = canonical_alpha(field, domain);
    let total = binomial_u128_saturating(elems.len() as u64, k);
    if total > SUBSET_SUM_BUDGET as u128 {
        return Err(Error::BudgetExceeded {
            needed: total,
            budget: SUBSET_SUM_BUDGET,
        });
    }
    if k > elems.len() as u64 {
        return Ok(BigUint::zero());
    }
    let mut count: u64 = 0;
    let mut combos = Combinations::new(elems.len(), k as usize);
    while let Some(sel) = combos.advance() {
        let mut sum = FieldElem::ZERO;
        for &i in sel {
            sum = field.add(sum, elems[i]);
        }
        if sum == b {
            count += 1;
        }
    }
    Ok(BigUint::from(count))
}

/// The weight distributions of an `[n, k, n-k]` code with Singleton defect 1
/// on both sides, pinned down by the shared minimum-weight count
/// `a_min = A_{n-k} = A_k of the dual`. Returns `(primal, dual)`.
pub fn nmds_full_distribution(
    n: usize,
    k: usize,
    q: u64,
    a_min: &BigUint,
) -> Result<(WeightDistribution, WeightDistribution)> {
    if k == 0 || k >= n {
        return Err(Error::BadDimension(format!(
            "need 0 < k < n, got [{n}, {k}]"
        )));
    }
    let a_min = BigInt::from(a_min.clone());
    let primal = defect_one_counts(n, k, q, &a_min)?;
    let dual = defect_one_counts(n, n - k, q, &a_min)?;
    Ok((primal, dual))
}

/// Counts `A_0..A_n` of an `[n, k, n-k]` code with `A_{n-k} = a_min`:
/// `A_{n-k+l} = C(n, k-l) * sum_{j=0}^{l-1} (-1)^j C(n-k+l, j) (q^{l-j} - 1)
///             + (-1)^l C(k, l) a_min` for `1 <= l <= k`.
fn defect_one_counts(n: usize, k: usize, q: u64, a_min: &BigInt) -> Result<WeightDistribution> {
    let mut counts = vec![BigUint::zero(); n + 1];
    counts[0] = BigUint::one();
    counts[n - k] = a_min
        .to_biguint()
        .ok_or_else(|| Error::NegativeCount(format!("A_{} = {a_min}", n - k)))?;
    for l in 1..=k {
        let w = n - k + l;
        let mut sum = BigInt::zero();
        for j in 0..l {
            let term = BigInt::from(binomial(w as u64, j as u64))
                * (BigInt::from(q).pow((l - j) as u32) - BigInt::one());
            if j % 2 == 0 {
                sum += term;
            } else {
                sum -= term;
            }
        }
        let mut a = BigInt::from(binomial(n as u64, (k - l) as u64)) * sum;
        let tail = BigInt::from(binomial(k as u64, l as u64)) * a_min;
        if l % 2 == 0 {
            a += tail;
        } else {
            a -= tail;
        }
        counts[w] = a
            .to_biguint()
            .ok_or_else(|| Error::NegativeCount(format!("A_{w} = {a}")))?;
    }
    Ok(WeightDistribution::new(counts))
}

/// Returns the dimensions for which the canonical family over this alphabet
/// is covered by the closed weight theory (and is near-Singleton on both
/// sides). Empty when the field is too small.
pub fn nmds_theorem_dims(field: &Field, alphabet: Alphabet) -> Vec<usize> {
    let q = field.q() as usize;
    let (lo, hi) = match (alphabet, field.p() == 2) {
        (Alphabet::Units, true) => (4, q.saturating_sub(3)),
        (Alphabet::Units, false) => (3, q.saturating_sub(2)),
        (Alphabet::Full, true) => (4, q.saturating_sub(2)),
        (Alphabet::Full, false) => (3, q),
    };
    (lo..=hi).collect()
}

/// Dimensions excluded from the closed weight theory where the canonical
/// family degenerates to MDS for the right tails: over the units these are
/// `{3, q-2, q-1}` in characteristic 2 and `{q-1}` otherwise; over the full
/// field, `{3, q-1}` in characteristic 2.
pub fn exceptional_mds_dims(field: &Field, alphabet: Alphabet) -> Vec<usize> {
    let q = field.q() as usize;
    let char2 = field.p() == 2;
    let mut dims: Vec<usize> = match (alphabet, char2) {
        (Alphabet::Units, true) => vec![3, q - 2, q - 1],
        (Alphabet::Units, false) => vec![q - 1],
        (Alphabet::Full, true) => vec![3, q - 1],
        (Alphabet::Full, false) => vec![],
    };
    let max_k = match alphabet {
        Alphabet::Units => q - 1,
        Alphabet::Full => q,
    };
    dims.retain(|&k| (3..=max_k).contains(&k));
    dims.sort_unstable();
    dims.dedup();
    dims
}

/// True when the 2x2 tail is diagonal or anti-diagonal. For an invertible
/// tail this is exactly the condition that both subset-sum targets of
/// [`a_min_weight_closed`] are zero.
pub fn is_monomial_tail(tail: &MatrixGF) -> bool {
    debug_assert_eq!((tail.rows(), tail.cols()), (2, 2));
    let diag = tail.get(0, 1).is_zero() && tail.get(1, 0).is_zero();
    let anti = tail.get(0, 0).is_zero() && tail.get(1, 1).is_zero();
    diag || anti
}

/// True for the swap tail [[0,1],[1,0]].
pub fn is_swap_tail(tail: &MatrixGF) -> bool {
    (tail.rows(), tail.cols()) == (2, 2)
        && tail.get(0, 0).is_zero()
        && tail.get(1, 1).is_zero()
        && tail.get(0, 1) == FieldElem::ONE
        && tail.get(1, 0) == FieldElem::ONE
}

fn check_tail(field: &Field, tail: &MatrixGF) -> Result<()> {
    if tail.field() != field {
        return Err(Error::MixedFields);
    }
    if (tail.rows(), tail.cols()) != (2, 2) {
        return Err(Error::BadDimension(format!(
            "tail block must be 2x2, got {}x{}",
            tail.rows(),
            tail.cols()
        )));
    }
    if tail.det()?.is_zero() {
        return Err(Error::SingularTailBlock);
    }
    Ok(())
}

/// Closed count of minimum-weight dual codewords for the canonical family:
/// `(q-1) * [a11 != 0] N(k-1, a21/a11, D) + (q-1) * [a12 != 0] N(k-1, a22/a12, D)`.
/// This unified two-term sum reproduces every displayed case split of the
/// weight lemmas; the cases are kept as test oracles.
pub fn a_min_weight_closed(
    field: &Field,
    alphabet: Alphabet,
    k: usize,
    tail: &MatrixGF,
) -> Result<BigUint> {
    check_tail(field, tail)?;
    if !nmds_theorem_dims(field, alphabet).contains(&k) {
        return Err(Error::DimensionOutOfRange(format!(
            "k = {k} is outside the closed weight theory for the {alphabet} alphabet over GF({})",
            field.q()
        )));
    }
    let mut total = BigUint::zero();
    for col in 0..2 {
        let top = tail.get(0, col);
        if top.is_zero() {
            continue;
        }
        let target = field.div(tail.get(1, col), top)?;
        total += subset_sum_count_closed(field, (k - 1) as u64, target, alphabet)?;
    }
    Ok(total * BigUint::from(field.q() - 1))
}

/// Predicted class of a canonical-family code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PredictedClass {
    Mds,
    Nmds,
    Undetermined,
}

impl fmt::Display for PredictedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PredictedClass::Mds => "MDS",
            PredictedClass::Nmds => "NMDS",
            PredictedClass::Undetermined => "undetermined",
        })
    }
}

/// Which piece of the closed theory produced a prediction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PredictionSource {
    /// Units alphabet, dimension in the closed-theory range.
    NmdsUnitsRange,
    /// Full alphabet, dimension in the closed-theory range.
    NmdsFullRange,
    /// Units alphabet, exceptional dimension, monomial tail.
    MdsExceptionalUnits,
    /// Full alphabet, exceptional dimension, swap tail.
    MdsExceptionalFull,
}

impl fmt::Display for PredictionSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PredictionSource::NmdsUnitsRange => "nmds-units-range",
            PredictionSource::NmdsFullRange => "nmds-full-range",
            PredictionSource::MdsExceptionalUnits => "mds-exceptional-units",
            PredictionSource::MdsExceptionalFull => "mds-exceptional-full",
        })
    }
}

/// Theory-only prediction for a canonical-family code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prediction {
    pub n: usize,
    pub k: usize,
    pub klass: PredictedClass,
    /// Predicted minimum distance; absent when undetermined.
    pub d: Option<usize>,
    /// Predicted count of minimum-weight codewords (equal on both sides);
    /// present only for NMDS predictions.
    pub a_min: Option<BigUint>,
    pub source: Option<PredictionSource>,
}

/// Dispatches on (alphabet, characteristic, k, tail shape).
///
/// Inside the closed-theory dimension range every invertible tail yields the
/// same near-Singleton outcome, with the minimum-weight count from
/// [`a_min_weight_closed`]. At the exceptional dimensions only specific tail
/// shapes are covered: monomial tails over the units, the swap tail over the
/// full field in characteristic 2. Everything else is reported as
/// undetermined, because both MDS and non-MDS outcomes occur there.
pub fn predict(
    field: &Field,
    alphabet: Alphabet,
    k: usize,
    tail: &MatrixGF,
) -> Result<Prediction> {
    check_tail(field, tail)?;
    let q = field.q() as usize;
    let max_k = match alphabet {
        Alphabet::Units => q - 1,
        Alphabet::Full => q,
    };
    if k < 3 || k > max_k {
        return Err(Error::DimensionOutOfRange(format!(
            "k = {k} outside 3..={max_k} for the {alphabet} alphabet over GF({q})"
        )));
    }
    let n = match alphabet {
        Alphabet::Units => q + 1,
        Alphabet::Full => q + 2,
    };
    if nmds_theorem_dims(field, alphabet).contains(&k) {
        let a_min = a_min_weight_closed(field, alphabet, k, tail)?;
        let source = match alphabet {
            Alphabet::Units => PredictionSource::NmdsUnitsRange,
            Alphabet::Full => PredictionSource::NmdsFullRange,
        };
        return Ok(Prediction {
            n,
            k,
            klass: PredictedClass::Nmds,
            d: Some(n - k),
            a_min: Some(a_min),
            source: Some(source),
        });
    }
    if exceptional_mds_dims(field, alphabet).contains(&k) {
        let covered = match alphabet {
            Alphabet::Units => is_monomial_tail(tail),
            Alphabet::Full => is_swap_tail(tail),
        };
        if covered {
            let source = match alphabet {
                Alphabet::Units => PredictionSource::MdsExceptionalUnits,
                Alphabet::Full => PredictionSource::MdsExceptionalFull,
            };
            return Ok(Prediction {
                n,
                k,
                klass: PredictedClass::Mds,
                d: Some(n - k + 1),
                a_min: None,
                source: Some(source),
            });
        }
    }
    Ok(Prediction {
        n,
        k,
        klass: PredictedClass::Undetermined,
        d: None,
        a_min: None,
        source: None,
    })
}

fn exact_nonneg_div(numerator: BigInt, q: u64, what: &str) -> Result<BigUint> {
    let (quot, rem) = numerator.div_rem(&BigInt::from(q));
    if !rem.is_zero() {
        return Err(Error::NonIntegerResult(format!(
            "{what}: {numerator} is not divisible by {q}"
        )));
    }
    if quot.is_negative() {
        return Err(Error::NegativeCount(format!("{what}: {quot}")));
    }
    Ok(quot.to_biguint().expect("nonnegative"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64, m: u32) -> Field {
        Field::new(p, m).unwrap()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn v_of_b_cases() {
        let f9 = gf(3, 2);
        assert_eq!(v_of_b(&f9, f9.zero()), 8);
        assert_eq!(v_of_b(&f9, f9.omega()), -1);
        let f8 = gf(2, 3);
        assert_eq!(v_of_b(&f8, f8.one()), -1);
    }

    #[test]
    fn closed_subset_sum_examples() {
        let f8 = gf(2, 3);
        assert_eq!(
            subset_sum_count_closed(&f8, 2, f8.zero(), Alphabet::Units).unwrap(),
            big(0)
        );
        let f9 = gf(3, 2);
        assert_eq!(
            subset_sum_count_closed(&f9, 4, f9.elem(2).unwrap(), Alphabet::Units).unwrap(),
            big(8)
        );
        assert_eq!(
            subset_sum_count_closed(&f9, 3, f9.zero(), Alphabet::Full).unwrap(),
            big(12)
        );
    }

    #[test]
    fn bruteforce_subset_sum_examples() {
        let f5 = gf(5, 1);
        // singletons: 1 when b is in the domain, else 0
        assert_eq!(
            subset_sum_count_bruteforce(&f5, 1, f5.zero(), Alphabet::Units).unwrap(),
            big(0)
        );
        assert_eq!(
            subset_sum_count_bruteforce(&f5, 1, f5.zero(), Alphabet::Full).unwrap(),
            big(1)
        );
        assert_eq!(
            subset_sum_count_bruteforce(&f5, 1, f5.elem(3).unwrap(), Alphabet::Units).unwrap(),
            big(1)
        );
        // pairs of units summing to zero over GF(5): {1,4} and {2,3}
        assert_eq!(
            subset_sum_count_bruteforce(&f5, 2, f5.zero(), Alphabet::Units).unwrap(),
            big(2)
        );
        // k beyond the domain size
        assert_eq!(
            subset_sum_count_bruteforce(&f5, 6, f5.zero(), Alphabet::Units).unwrap(),
            big(0)
        );
    }

    #[test]
    fn closed_matches_bruteforce_spot_fields() {
        for (p, m) in [(5, 1), (2, 3)] {
            let f = gf(p, m);
            for domain in [Alphabet::Units, Alphabet::Full] {
                let size = match domain {
                    Alphabet::Units => f.q() - 1,
                    Alphabet::Full => f.q(),
                };
                for k in 0..=size {
                    for b in 0..f.q() {
                        let b = f.elem(b).unwrap();
                        assert_eq!(
                            subset_sum_count_closed(&f, k, b, domain).unwrap(),
                            subset_sum_count_bruteforce(&f, k, b, domain).unwrap(),
                            "q={} domain={domain} k={k} b={b}",
                            f.q()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn nmds_distribution_frozen_values() {
        let (primal, dual) = nmds_full_distribution(10, 5, 9, &big(128)).unwrap();
        assert_eq!(primal.count(5), &big(128));
        assert_eq!(primal.count(6), &big(1040));
        assert_eq!(primal.count(7), &big(4160));
        assert_eq!(primal.count(8), &big(12760));
        assert_eq!(primal.count(9), &big(22800));
        assert_eq!(primal.count(10), &big(18160));
        assert_eq!(primal.total(), BigUint::from(9u64).pow(5));
        // self-dual dimensions here: the dual shares the distribution
        assert_eq!(dual.count(5), &big(128));
        assert_eq!(dual.count(6), &big(1040));
        assert_eq!(dual.total(), BigUint::from(9u64).pow(5));
    }

    #[test]
    fn nmds_distribution_rejects_inconsistent_seed() {
        assert!(matches!(
            nmds_full_distribution(10, 5, 9, &big(1_000_000)),
            Err(Error::NegativeCount(_))
        ));
        assert!(nmds_full_distribution(10, 0, 9, &big(1)).is_err());
    }

    #[test]
    fn a_min_closed_examples() {
        let f9 = gf(3, 2);
        let tail = MatrixGF::parse(&f9, "1,1;2,1").unwrap();
        assert_eq!(
            a_min_weight_closed(&f9, Alphabet::Units, 5, &tail).unwrap(),
            big(128)
        );
        assert_eq!(
            a_min_weight_closed(&f9, Alphabet::Full, 4, &tail).unwrap(),
            big(144)
        );
        let id = MatrixGF::identity(f9.clone(), 2);
        assert_eq!(
            a_min_weight_closed(&f9, Alphabet::Units, 5, &id).unwrap(),
            big(48)
        );
    }

    #[test]
    fn a_min_closed_range_checks() {
        let f8 = gf(2, 3);
        let tail = MatrixGF::parse(&f8, "0,1;1,0").unwrap();
        // characteristic 2 over units: theory covers 4..=q-3 only
        assert!(a_min_weight_closed(&f8, Alphabet::Units, 4, &tail).is_ok());
        assert!(matches!(
            a_min_weight_closed(&f8, Alphabet::Units, 3, &tail),
            Err(Error::DimensionOutOfRange(_))
        ));
        let singular = MatrixGF::parse(&f8, "1,1;1,1").unwrap();
        assert_eq!(
            a_min_weight_closed(&f8, Alphabet::Units, 4, &singular).unwrap_err(),
            Error::SingularTailBlock
        );
    }

    #[test]
    fn theorem_dims_and_exceptions() {
        let f9 = gf(3, 2);
        assert_eq!(nmds_theorem_dims(&f9, Alphabet::Units), vec![3, 4, 5, 6, 7]);
        assert_eq!(
            nmds_theorem_dims(&f9, Alphabet::Full),
            vec![3, 4, 5, 6, 7, 8, 9]
        );
        assert_eq!(exceptional_mds_dims(&f9, Alphabet::Units), vec![8]);
        assert_eq!(exceptional_mds_dims(&f9, Alphabet::Full), Vec::<usize>::new());

        let f8 = gf(2, 3);
        assert_eq!(nmds_theorem_dims(&f8, Alphabet::Units), vec![4, 5]);
        assert_eq!(nmds_theorem_dims(&f8, Alphabet::Full), vec![4, 5, 6]);
        assert_eq!(exceptional_mds_dims(&f8, Alphabet::Units), vec![3, 6, 7]);
        assert_eq!(exceptional_mds_dims(&f8, Alphabet::Full), vec![3, 7]);

        let f4 = gf(2, 2);
        assert!(nmds_theorem_dims(&f4, Alphabet::Units).is_empty());
        assert!(nmds_theorem_dims(&f4, Alphabet::Full).is_empty());
        assert_eq!(exceptional_mds_dims(&f4, Alphabet::Units), vec![3]);
        assert_eq!(exceptional_mds_dims(&f4, Alphabet::Full), vec![3]);
    }

    #[test]
    fn predict_golden_units_gf9() {
        let f9 = gf(3, 2);
        let tail = MatrixGF::parse(&f9, "1,1;2,1").unwrap();
        let p = predict(&f9, Alphabet::Units, 5, &tail).unwrap();
        assert_eq!(p.klass, PredictedClass::Nmds);
        assert_eq!((p.n, p.k, p.d), (10, 5, Some(5)));
        assert_eq!(p.a_min, Some(big(128)));
        assert_eq!(p.source, Some(PredictionSource::NmdsUnitsRange));
    }

    #[test]
    fn predict_exceptional_units_needs_monomial_tail() {
        let f8 = gf(2, 3);
        // diagonal and anti-diagonal tails are covered at k in {3, q-2, q-1}
        for text in ["w,0;0,1", "0,w^3;w,0", "0,1;1,0"] {
            let tail = MatrixGF::parse(&f8, text).unwrap();
            for k in [3usize, 6, 7] {
                let p = predict(&f8, Alphabet::Units, k, &tail).unwrap();
                assert_eq!(p.klass, PredictedClass::Mds, "tail {text} k {k}");
                assert_eq!(p.d, Some(9 - k + 1));
                assert!(p.a_min.is_none());
            }
        }
        // a generic tail at an exceptional dimension is out of theory
        let generic = MatrixGF::parse(&f8, "1,1;w,1").unwrap();
        let p = predict(&f8, Alphabet::Units, 3, &generic).unwrap();
        assert_eq!(p.klass, PredictedClass::Undetermined);
        assert!(p.d.is_none());
    }

    #[test]
    fn predict_exceptional_full_needs_swap_tail() {
        let f8 = gf(2, 3);
        let swap = MatrixGF::parse(&f8, "0,1;1,0").unwrap();
        let p = predict(&f8, Alphabet::Full, 3, &swap).unwrap();
        assert_eq!(p.klass, PredictedClass::Mds);
        assert_eq!((p.n, p.d), (10, Some(8)));
        let p = predict(&f8, Alphabet::Full, 7, &swap).unwrap();
        assert_eq!(p.klass, PredictedClass::Mds);
        assert_eq!(p.d, Some(4));

        let other = MatrixGF::parse(&f8, "0,w^2;w,0").unwrap();
        let p = predict(&f8, Alphabet::Full, 3, &other).unwrap();
        assert_eq!(p.klass, PredictedClass::Undetermined);

        // k = q is outside every covered range in characteristic 2
        let p = predict(&f8, Alphabet::Full, 8, &swap).unwrap();
        assert_eq!(p.klass, PredictedClass::Undetermined);
    }

    #[test]
    fn predict_range_errors() {
        let f9 = gf(3, 2);
        let tail = MatrixGF::parse(&f9, "1,1;2,1").unwrap();
        assert!(matches!(
            predict(&f9, Alphabet::Units, 2, &tail),
            Err(Error::DimensionOutOfRange(_))
        ));
        assert!(matches!(
            predict(&f9, Alphabet::Units, 9, &tail),
            Err(Error::DimensionOutOfRange(_))
        ));
        assert!(predict(&f9, Alphabet::Full, 9, &tail).is_ok());
    }

    /// The displayed case split of the closed minimum-weight count, kept
    /// verbatim as an oracle for the unified two-term form.
    fn a_min_displayed_cases(
        field: &Field,
        alphabet: Alphabet,
        k: usize,
        tail: &MatrixGF,
    ) -> BigUint {
        let q = field.q();
        let p = field.p();
        let km1 = (k - 1) as u64;
        let a11 = !tail.get(0, 0).is_zero();
        let a12 = !tail.get(0, 1).is_zero();
        let a21 = !tail.get(1, 0).is_zero();
        let a22 = !tail.get(1, 1).is_zero();
        let sign = |exp: u64| if exp % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        // (weight of the leading binomial term, signed weight of the correction)
        let (lead, corr): (u64, BigInt) = match (a11, a12, a21, a22) {
            (true, true, true, true) => {
                (2 * (q - 1), sign(k as u64 + km1 / p) * BigInt::from(2 * (q - 1)))
            }
            (true, true, true, false) | (true, true, false, true) => (
                2 * (q - 1),
                sign(k as u64 - 1 + km1 / p) * BigInt::from(q * q - 3 * q + 2),
            ),
            (true, false, true, true) | (false, true, true, true) => {
                (q - 1, sign(k as u64 + km1 / p) * BigInt::from(q - 1))
            }
            (false, true, true, false) | (true, false, false, true) => (
                q - 1,
                sign(k as u64 - 1 + km1 / p) * BigInt::from((q - 1) * (q - 1)),
            ),
            _ => unreachable!("pattern not realizable by an invertible tail"),
        };
        let numerator = match alphabet {
            Alphabet::Units => {
                BigInt::from(lead) * BigInt::from(binomial(q - 1, km1))
                    + corr * BigInt::from(binomial(q / p - 1, km1 / p))
            }
            Alphabet::Full => {
                let main = BigInt::from(lead) * BigInt::from(binomial(q, km1));
                if km1 % p != 0 {
                    main
                } else {
                    main + corr * BigInt::from(binomial(q / p, km1 / p))
                }
            }
        };
        exact_nonneg_div(numerator, q, "displayed case").unwrap()
    }

    #[test]
    fn unified_form_reproduces_every_displayed_case() {
        for (p, m) in [(2, 2), (5, 1), (7, 1), (2, 3), (3, 2)] {
            let f = gf(p, m);
            let q = f.q();
            for alphabet in [Alphabet::Units, Alphabet::Full] {
                for k in nmds_theorem_dims(&f, alphabet) {
                    // every invertible 2x2 tail over the field
                    for code in 0..q * q * q * q {
                        let vals = [
                            code % q,
                            code / q % q,
                            code / (q * q) % q,
                            code / (q * q * q),
                        ];
                        let tail = MatrixGF::new(
                            f.clone(),
                            2,
                            2,
                            vals.iter().map(|&v| f.elem(v).unwrap()).collect(),
                        )
                        .unwrap();
                        if tail.det().unwrap().is_zero() {
                            continue;
                        }
                        assert_eq!(
                            a_min_weight_closed(&f, alphabet, k, &tail).unwrap(),
                            a_min_displayed_cases(&f, alphabet, k, &tail),
                            "q={q} alphabet={alphabet} k={k} tail={}",
                            tail.to_text()
                        );
                    }
                }
            }
        }
    }
}

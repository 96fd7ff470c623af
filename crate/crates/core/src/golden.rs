//! The golden regression cases: canonical-family codes over GF(9) and GF(8)
//! whose classifications and, where pinned, full weight distributions are
//! known exactly. The CLI's `verify-paper` command and the acceptance suite
//! both run this table.
//!
//! Tail entries are built through field operations on the primitive element,
//! so every expected value is invariant under the modulus choice.

use num_bigint::BigUint;

use crate::code::{classify_from_distributions, CodeClass, SingletonReport, WeightDistribution};
use crate::error::Result;
use crate::gf::Field;
use crate::grl::{rl_code, Alphabet};
use crate::matrix::MatrixGF;

/// One pinned regression case.
pub struct GoldenCase {
    pub name: &'static str,
    pub p: u64,
    pub m: u32,
    pub alphabet: Alphabet,
    pub k: usize,
    pub tail: fn(&Field) -> MatrixGF,
    pub expect_class: CodeClass,
    /// Expected (n, k, d).
    pub expect_params: (usize, usize, usize),
    /// Full expected counts `A_0..A_n` where the enumerator is pinned.
    pub expect_counts: Option<&'static [u64]>,
}

/// Result of running one golden case.
pub struct GoldenOutcome {
    pub name: &'static str,
    pub report: SingletonReport,
    pub distribution: WeightDistribution,
    pub dual_distribution: WeightDistribution,
    pub pass: bool,
    pub detail: String,
}

fn tail_1121(f: &Field) -> MatrixGF {
    MatrixGF::parse(f, "1,1;2,1").expect("valid tail")
}

fn tail_swap(f: &Field) -> MatrixGF {
    MatrixGF::parse(f, "0,1;1,0").expect("valid tail")
}

fn tail_antidiag_w2_w(f: &Field) -> MatrixGF {
    let w = f.omega();
    let w2 = f.pow(w, 2).unwrap();
    MatrixGF::from_rows(
        f.clone(),
        vec![vec![f.zero(), w2], vec![w, f.zero()]],
    )
    .expect("valid tail")
}

fn tail_generic_k3(f: &Field) -> MatrixGF {
    // [[0, w^2 + 1], [1, w]]
    let w = f.omega();
    let w2p1 = f.add(f.pow(w, 2).unwrap(), f.one());
    MatrixGF::from_rows(
        f.clone(),
        vec![vec![f.zero(), w2p1], vec![f.one(), w]],
    )
    .expect("valid tail")
}

fn tail_generic_k7(f: &Field) -> MatrixGF {
    // [[0, w^2], [w, w]]
    let w = f.omega();
    let w2 = f.pow(w, 2).unwrap();
    MatrixGF::from_rows(f.clone(), vec![vec![f.zero(), w2], vec![w, w]])
        .expect("valid tail")
}

const GF9_UNITS_K5_COUNTS: [u64; 11] =
    [1, 0, 0, 0, 0, 128, 1040, 4160, 12760, 22800, 18160];
const GF9_FULL_K4_COUNTS: [u64; 12] = [1, 0, 0, 0, 0, 0, 0, 144, 744, 1304, 2592, 1776];
const GF9_FULL_K6_COUNTS: [u64; 12] =
    [1, 0, 0, 0, 0, 224, 2352, 11280, 47000, 125240, 199824, 145520];

/// The eight golden cases, in a fixed order.
pub fn golden_cases() -> Vec<GoldenCase> {
    vec![
        GoldenCase {
            name: "gf9-units-k5",
            p: 3,
            m: 2,
            alphabet: Alphabet::Units,
            k: 5,
            tail: tail_1121,
            expect_class: CodeClass::Nmds,
            expect_params: (10, 5, 5),
            expect_counts: Some(&GF9_UNITS_K5_COUNTS),
        },
        GoldenCase {
            name: "gf9-full-k4",
            p: 3,
            m: 2,
            alphabet: Alphabet::Full,
            k: 4,
            tail: tail_1121,
            expect_class: CodeClass::Nmds,
            expect_params: (11, 4, 7),
            expect_counts: Some(&GF9_FULL_K4_COUNTS),
        },
        GoldenCase {
            name: "gf9-full-k6",
            p: 3,
            m: 2,
            alphabet: Alphabet::Full,
            k: 6,
            tail: tail_1121,
            expect_class: CodeClass::Nmds,
            expect_params: (11, 6, 5),
            expect_counts: Some(&GF9_FULL_K6_COUNTS),
        },
        GoldenCase {
            name: "gf8-full-k3-swap",
            p: 2,
            m: 3,
            alphabet: Alphabet::Full,
            k: 3,
            tail: tail_swap,
            expect_class: CodeClass::Mds,
            expect_params: (10, 3, 8),
            expect_counts: None,
        },
        GoldenCase {
            name: "gf8-full-k3-antidiag",
            p: 2,
            m: 3,
            alphabet: Alphabet::Full,
            k: 3,
            tail: tail_antidiag_w2_w,
            expect_class: CodeClass::Mds,
            expect_params: (10, 3, 8),
            expect_counts: None,
        },
        GoldenCase {
            name: "gf8-full-k3-generic",
            p: 2,
            m: 3,
            alphabet: Alphabet::Full,
            k: 3,
            tail: tail_generic_k3,
            expect_class: CodeClass::Nmds,
            expect_params: (10, 3, 7),
            expect_counts: None,
        },
        GoldenCase {
            name: "gf8-full-k7-swap",
            p: 2,
            m: 3,
            alphabet: Alphabet::Full,
            k: 7,
            tail: tail_swap,
            expect_class: CodeClass::Mds,
            expect_params: (10, 7, 4),
            expect_counts: None,
        },
        GoldenCase {
            name: "gf8-full-k7-generic",
            p: 2,
            m: 3,
            alphabet: Alphabet::Full,
            k: 7,
            tail: tail_generic_k7,
            expect_class: CodeClass::Nmds,
            expect_params: (10, 7, 3),
            expect_counts: None,
        },
    ]
}

/// Builds the case's code, classifies it by exhaustive enumeration, and
/// compares class, parameters, and any pinned distribution.
pub fn run_golden_case(case: &GoldenCase, budget: u64) -> Result<GoldenOutcome> {
    let field = Field::new(case.p, case.m)?;
    let tail = (case.tail)(&field);
    let code = rl_code(&field, case.alphabet, case.k, &tail)?;
    let distribution = code.weight_distribution_with_budget(budget)?;
    let dual_distribution = code.dual().weight_distribution_with_budget(budget)?;
    let report =
        classify_from_distributions(code.n(), code.dim(), &distribution, &dual_distribution)?;

    let mut failures = Vec::new();
    if report.klass != case.expect_class {
        failures.push(format!(
            "class {} != expected {}",
            report.klass, case.expect_class
        ));
    }
    let got_params = (report.n, report.k, report.d);
    if got_params != case.expect_params {
        failures.push(format!(
            "parameters {:?} != expected {:?}",
            got_params, case.expect_params
        ));
    }
    if let Some(expected) = case.expect_counts {
        let expected: Vec<BigUint> = expected.iter().map(|&c| BigUint::from(c)).collect();
        if distribution.counts() != &expected[..] {
            failures.push(format!(
                "distribution {} != expected",
                distribution.enumerator_string()
            ));
        }
    }
    let pass = failures.is_empty();
    let detail = if pass {
        format!(
            "[{},{},{}] {}",
            report.n, report.k, report.d, report.klass
        )
    } else {
        failures.join("; ")
    };
    Ok(GoldenOutcome {
        name: case.name,
        report,
        distribution,
        dual_distribution,
        pass,
        detail,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_golden_cases_pass() {
        for case in golden_cases() {
            let outcome = run_golden_case(&case, 1 << 24).unwrap();
            assert!(outcome.pass, "{}: {}", outcome.name, outcome.detail);
        }
    }
}

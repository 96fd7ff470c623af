//! Generic linear-code analysis: dual codes, exact weight distributions,
//! minimum distance, and Singleton-defect classification.
//!
//! Weight distributions are exact. The enumerator always walks the cheaper
//! side, `min(k, n-k)` message coordinates, and recovers the other side with
//! the MacWilliams transform when needed.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::matrix::MatrixGF;

/// Default ceiling on the number of enumerated message vectors.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 100_000_000;

/// Exact codeword-weight counts `A_0 ..= A_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    counts: Vec<BigUint>,
}

impl WeightDistribution {
    pub fn new(counts: Vec<BigUint>) -> WeightDistribution {
        WeightDistribution { counts }
    }

    pub fn from_u64_counts(counts: &[u64]) -> WeightDistribution {
        WeightDistribution {
            counts: counts.iter().map(|&c| BigUint::from(c)).collect(),
        }
    }

    /// Block length, i.e. the largest weight tracked.
    pub fn n(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn count(&self, weight: usize) -> &BigUint {
        &self.counts[weight]
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// Minimum distance of the code the distribution came from; `None` for
    /// the zero code.
    pub fn min_positive_weight(&self) -> Option<usize> {
        (1..self.counts.len()).find(|&i| !self.counts[i].is_zero())
    }

    /// Renders `1 + A_d z^d + ... + A_n z^n`, skipping zero terms.
    pub fn enumerator_string(&self) -> String {
        let mut parts = vec![self.counts[0].to_string()];
        for (i, c) in self.counts.iter().enumerate().skip(1) {
            if !c.is_zero() {
                parts.push(format!("{c} z^{i}"));
            }
        }
        parts.join(" + ")
    }
}

/// How far a code and its dual sit from the Singleton bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CodeClass {
    Mds,
    AmdsNotNmds,
    Nmds,
    Other,
}

impl fmt::Display for CodeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CodeClass::Mds => "MDS",
            CodeClass::AmdsNotNmds => "AMDS-not-NMDS",
            CodeClass::Nmds => "NMDS",
            CodeClass::Other => "other",
        };
        f.write_str(s)
    }
}

impl FromStr for CodeClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<CodeClass> {
        match s {
            "MDS" => Ok(CodeClass::Mds),
            "AMDS-not-NMDS" => Ok(CodeClass::AmdsNotNmds),
            "NMDS" => Ok(CodeClass::Nmds),
            "other" => Ok(CodeClass::Other),
            _ => Err(Error::Parse(format!("unknown code class {s:?}"))),
        }
    }
}

/// Parameters and Singleton defects of a code and its dual.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingletonReport {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub d_dual: usize,
    pub defect: i64,
    pub defect_dual: i64,
    pub klass: CodeClass,
}

/// A linear `[n, k]` code given by a generator matrix. Rows of the input may
/// be dependent; the dimension is the matrix rank and a reduced basis is kept
/// alongside the original generator.
#[derive(Debug, Clone)]
pub struct LinearCode {
    field: Field,
    generator: MatrixGF,
    basis: MatrixGF,
    n: usize,
    k: usize,
}

impl LinearCode {
    pub fn from_generator(generator: MatrixGF) -> LinearCode {
        let rref = generator.rank_rref();
        let basis = MatrixGF::from_fn(
            generator.field().clone(),
            rref.rank,
            generator.cols(),
            |i, j| rref.rref.get(i, j),
        );
        LinearCode {
            field: generator.field().clone(),
            n: generator.cols(),
            k: rref.rank,
            generator,
            basis,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn generator(&self) -> &MatrixGF {
        &self.generator
    }

    /// Row-reduced basis of the row space (k independent rows).
    pub fn basis(&self) -> &MatrixGF {
        &self.basis
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    /// The `[n, n-k]` dual code; its generator rows satisfy `G_dual G^T = 0`.
    pub fn dual(&self) -> LinearCode {
        LinearCode::from_generator(self.basis.nullspace())
    }

    /// True iff the two codes have the same codeword set.
    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.field == other.field && self.basis == other.basis
    }

    pub fn weight_distribution(&self) -> Result<WeightDistribution> {
        self.weight_distribution_with_budget(DEFAULT_ENUMERATION_BUDGET)
    }

    /// Exact distribution, enumerating `q^min(k, n-k)` messages. When the
    /// dual side is the cheaper one, the distribution is recovered through
    /// the MacWilliams transform of the dual's exhaustive distribution.
    pub fn weight_distribution_with_budget(&self, budget: u64) -> Result<WeightDistribution> {
        let side = self.k.min(self.n - self.k);
        let needed = (self.field.q() as u128)
            .checked_pow(side as u32)
            .unwrap_or(u128::MAX);
        if needed > budget as u128 {
            return Err(Error::BudgetExceeded { needed, budget });
        }
        if side == self.k {
            Ok(WeightDistribution::from_u64_counts(&enumerate_histogram(
                &self.basis,
            )))
        } else {
            let dual = self.dual();
            let dual_dist =
                WeightDistribution::from_u64_counts(&enumerate_histogram(&dual.basis));
            macwilliams_transform(&dual_dist, self.n, dual.k, self.field.q())
        }
    }

    /// Exact distribution by enumerating this code's own `q^k` messages,
    /// never routing through the dual. Exists so the transform path has an
    /// independent route to be checked against.
    pub fn weight_distribution_direct_with_budget(
        &self,
        budget: u64,
    ) -> Result<WeightDistribution> {
        let needed = (self.field.q() as u128)
            .checked_pow(self.k as u32)
            .unwrap_or(u128::MAX);
        if needed > budget as u128 {
            return Err(Error::BudgetExceeded { needed, budget });
        }
        Ok(WeightDistribution::from_u64_counts(&enumerate_histogram(
            &self.basis,
        )))
    }

    pub fn classify(&self) -> Result<SingletonReport> {
        self.classify_with_budget(DEFAULT_ENUMERATION_BUDGET)
    }

    /// Empirical classification from the exact distributions of the code and
    /// its dual.
    pub fn classify_with_budget(&self, budget: u64) -> Result<SingletonReport> {
        if self.k == 0 || self.k == self.n {
            return Err(Error::ZeroCode);
        }
        let primal = self.weight_distribution_with_budget(budget)?;
        let dual = self.dual().weight_distribution_with_budget(budget)?;
        classify_from_distributions(self.n, self.k, &primal, &dual)
    }
}

/// Singleton-defect classification given both exact distributions.
pub fn classify_from_distributions(
    n: usize,
    k: usize,
    primal: &WeightDistribution,
    dual: &WeightDistribution,
) -> Result<SingletonReport> {
    let d = primal.min_positive_weight().ok_or(Error::ZeroCode)?;
    let d_dual = dual.min_positive_weight().ok_or(Error::ZeroCode)?;
    let defect = (n - k + 1) as i64 - d as i64;
    let defect_dual = (k + 1) as i64 - d_dual as i64;
    let klass = match (defect, defect_dual) {
        (0, _) => CodeClass::Mds,
        (1, 1) => CodeClass::Nmds,
        (1, _) => CodeClass::AmdsNotNmds,
        _ => CodeClass::Other,
    };
    Ok(SingletonReport {
        n,
        k,
        d,
        d_dual,
        defect,
        defect_dual,
        klass,
    })
}

/// Exact MacWilliams transform: takes the distribution of an `[n, k]_q` code
/// to the distribution of its `[n, n-k]_q` dual. `NonIntegerResult` means
/// the input was not the distribution of a linear code.
pub fn macwilliams_transform(
    dist: &WeightDistribution,
    n: usize,
    k: usize,
    q: u64,
) -> Result<WeightDistribution> {
    if dist.n() != n {
        return Err(Error::BadDimension(format!(
            "distribution tracks weights up to {}, expected {}",
            dist.n(),
            n
        )));
    }
    let binom: Vec<Vec<BigInt>> = (0..=n as u64)
        .map(|a| {
            (0..=n as u64)
                .map(|b| BigInt::from(binomial(a, b)))
                .collect()
        })
        .collect();
    let mut qm1_pows = Vec::with_capacity(n + 1);
    qm1_pows.push(BigInt::one());
    for _ in 0..n {
        qm1_pows.push(qm1_pows.last().unwrap() * BigInt::from(q - 1));
    }
    let size = BigInt::from(q).pow(k as u32);

    let mut out = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let mut acc = BigInt::zero();
        for i in 0..=n {
            let a_i = dist.count(i);
            if a_i.is_zero() {
                continue;
            }
            // Krawtchouk polynomial K_j(i) over the q-ary Hamming scheme
            let mut kraw = BigInt::zero();
            for t in 0..=j.min(i) {
                let term = &binom[i][t] * &binom[n - i][j - t] * &qm1_pows[j - t];
                if t % 2 == 0 {
                    kraw += term;
                } else {
                    kraw -= term;
                }
            }
            acc += BigInt::from_biguint(Sign::Plus, a_i.clone()) * kraw;
        }
        let (quot, rem) = acc.div_rem(&size);
        if !rem.is_zero() || quot.is_negative() {
            return Err(Error::NonIntegerResult(format!(
                "transform coefficient {j} is {acc}/{size}"
            )));
        }
        out.push(quot.to_biguint().expect("nonnegative"));
    }
    Ok(WeightDistribution::new(out))
}

struct Walker<'a> {
    field: &'a Field,
    q: u64,
    n: usize,
    k: usize,
    rows: &'a [Vec<u64>],
    /// Row `depth` scaled by every scalar, indexed `depth * q + s`; absent
    /// when the table would be too large, in which case products are formed
    /// on the fly.
    scaled: Option<&'a [Vec<u64>]>,
}

impl Walker<'_> {
    fn step_into(&self, depth: usize, s: u64, acc: &[u64], out: &mut [u64]) {
        match self.scaled {
            Some(table) => {
                let srow = &table[depth * self.q as usize + s as usize];
                for j in 0..self.n {
                    out[j] = self.field.raw_add(acc[j], srow[j]);
                }
            }
            None => {
                let row = &self.rows[depth];
                for j in 0..self.n {
                    out[j] = self.field.raw_add(acc[j], self.field.raw_mul(s, row[j]));
                }
            }
        }
    }

    fn walk(&self, depth: usize, acc: &[u64], bufs: &mut [Vec<u64>], hist: &mut [u64]) {
        if depth == self.k {
            let w = acc.iter().filter(|&&x| x != 0).count();
            hist[w] += 1;
            return;
        }
        let (buf, rest) = bufs.split_first_mut().expect("one buffer per level");
        // scalar 0 leaves the partial codeword unchanged
        self.walk(depth + 1, acc, rest, hist);
        for s in 1..self.q {
            self.step_into(depth, s, acc, buf);
            self.walk(depth + 1, buf, rest, hist);
        }
    }
}

/// Exhaustive weight histogram of the row space of `basis` (rows must be
/// linearly independent). Work is partitioned over the first message
/// coordinate; partial histograms are summed, so the result does not depend
/// on the number of workers.
fn enumerate_histogram(basis: &MatrixGF) -> Vec<u64> {
    let field = basis.field().clone();
    let q = field.q();
    let k = basis.rows();
    let n = basis.cols();
    if k == 0 {
        let mut hist = vec![0u64; n + 1];
        hist[0] = 1;
        return hist;
    }
    let rows: Vec<Vec<u64>> = (0..k)
        .map(|i| basis.row(i).iter().map(|e| e.value()).collect())
        .collect();
    let table_entries = (k as u128) * (q as u128) * (n as u128);
    let scaled: Option<Vec<Vec<u64>>> = if table_entries <= 1 << 24 {
        let mut table = Vec::with_capacity(k * q as usize);
        for row in &rows {
            for s in 0..q {
                table.push(row.iter().map(|&x| field.raw_mul(s, x)).collect());
            }
        }
        Some(table)
    } else {
        None
    };
    let walker = Walker {
        field: &field,
        q,
        n,
        k,
        rows: &rows,
        scaled: scaled.as_deref(),
    };

    (0..q)
        .into_par_iter()
        .map(|s0| {
            let mut hist = vec![0u64; n + 1];
            let mut bufs: Vec<Vec<u64>> = vec![vec![0u64; n]; k];
            let zero = vec![0u64; n];
            let (first, rest) = bufs.split_first_mut().expect("k >= 1");
            walker.step_into(0, s0, &zero, first);
            walker.walk(1, first, rest, &mut hist);
            hist
        })
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldElem;

    fn gf(p: u64, m: u32) -> Field {
        Field::new(p, m).unwrap()
    }

    /// Independent oracle: plain odometer over all q^k messages.
    fn slow_distribution(code: &LinearCode) -> WeightDistribution {
        let f = code.field();
        let q = f.q();
        let (k, n) = (code.dim(), code.n());
        let mut hist = vec![0u64; n + 1];
        let mut msg = vec![0u64; k];
        loop {
            let mut cw = vec![FieldElem::ZERO; n];
            for (i, &s) in msg.iter().enumerate() {
                if s != 0 {
                    let s = f.elem(s).unwrap();
                    for j in 0..n {
                        cw[j] = f.add(cw[j], f.mul(s, code.basis().get(i, j)));
                    }
                }
            }
            hist[cw.iter().filter(|e| !e.is_zero()).count()] += 1;
            let mut i = 0;
            loop {
                if i == k {
                    return WeightDistribution::from_u64_counts(&hist);
                }
                msg[i] += 1;
                if msg[i] < q {
                    break;
                }
                msg[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn constant_code_distribution() {
        // evaluations of constants at 5 distinct points: A_0 = 1, A_5 = 4
        let f5 = gf(5, 1);
        let g = MatrixGF::parse(&f5, "1,1,1,1,1").unwrap();
        let code = LinearCode::from_generator(g);
        let dist = code.weight_distribution().unwrap();
        assert_eq!(dist.counts(), &[1u32, 0, 0, 0, 0, 4].map(BigUint::from));
    }

    #[test]
    fn distribution_agrees_with_slow_oracle_both_sides() {
        let f5 = gf(5, 1);
        // [6, 4] code: the API walks the dual side; the oracle walks the primal
        let g = MatrixGF::parse(&f5, "1,0,0,0,1,2;0,1,0,0,2,3;0,0,1,0,3,1;0,0,0,1,1,1").unwrap();
        let code = LinearCode::from_generator(g);
        assert_eq!(code.weight_distribution().unwrap(), slow_distribution(&code));

        // [6, 2] code: the API walks the primal side directly
        let code2 = code.dual();
        assert_eq!(
            code2.weight_distribution().unwrap(),
            slow_distribution(&code2)
        );
    }

    #[test]
    fn dependent_generator_rows_are_reduced() {
        let f3 = gf(3, 1);
        let g = MatrixGF::parse(&f3, "1,0,1;0,1,1;1,1,2").unwrap();
        let code = LinearCode::from_generator(g);
        assert_eq!(code.dim(), 2);
        assert_eq!(code.weight_distribution().unwrap().total(), BigUint::from(9u32));
    }

    #[test]
    fn dual_relations() {
        let f9 = gf(3, 2);
        let g = MatrixGF::parse(&f9, "1,1,1,1;0,1,2,w^3").unwrap();
        let code = LinearCode::from_generator(g);
        let dual = code.dual();
        assert_eq!(dual.dim(), code.n() - code.dim());
        assert!(dual
            .generator()
            .matmul(&code.basis().transpose())
            .unwrap()
            .is_zero());
        assert!(code.dual().dual().same_code(&code));

        // the dual of the full space is the zero code
        let full = LinearCode::from_generator(MatrixGF::identity(f9, 3));
        let zero = full.dual();
        assert_eq!(zero.dim(), 0);
        assert_eq!(
            zero.weight_distribution().unwrap().counts(),
            &[1u32, 0, 0, 0].map(BigUint::from)
        );
    }

    #[test]
    fn macwilliams_zero_code_gives_binomials() {
        let dist = WeightDistribution::from_u64_counts(&[1, 0, 0, 0, 0]);
        let out = macwilliams_transform(&dist, 4, 0, 3).unwrap();
        let expect: Vec<BigUint> = (0..=4u64)
            .map(|i| binomial(4, i) * BigUint::from(2u64).pow(i as u32))
            .collect();
        assert_eq!(out.counts(), &expect[..]);
        assert_eq!(out.total(), BigUint::from(81u32));
    }

    #[test]
    fn macwilliams_is_an_involution() {
        let f5 = gf(5, 1);
        let g = MatrixGF::parse(&f5, "1,0,2,3,1;0,1,4,1,2").unwrap();
        let code = LinearCode::from_generator(g);
        let dist = code.weight_distribution().unwrap();
        let dual = macwilliams_transform(&dist, 5, 2, 5).unwrap();
        let back = macwilliams_transform(&dual, 5, 3, 5).unwrap();
        assert_eq!(back, dist);
    }

    #[test]
    fn macwilliams_rejects_invalid_distribution() {
        // not a code distribution: A_1 = 1 with A_0 = 1 over GF(2), n = 2, k = 1
        let dist = WeightDistribution::from_u64_counts(&[1, 0, 3]);
        assert!(matches!(
            macwilliams_transform(&dist, 2, 1, 2),
            Err(Error::NonIntegerResult(_))
        ));
    }

    #[test]
    fn classify_mds_and_other() {
        let f3 = gf(3, 1);
        // the [4, 2, 3] tetracode is MDS
        let g = MatrixGF::parse(&f3, "1,0,1,1;0,1,1,2").unwrap();
        let report = LinearCode::from_generator(g).classify().unwrap();
        assert_eq!(report.klass, CodeClass::Mds);
        assert_eq!((report.n, report.k, report.d), (4, 2, 3));
        assert_eq!((report.defect, report.defect_dual), (0, 0));

        // a weight-1 row drops the distance to 1: defect 2
        let f2 = gf(2, 1);
        let g = MatrixGF::parse(&f2, "1,0,0,0;0,1,1,1").unwrap();
        let report = LinearCode::from_generator(g).classify().unwrap();
        assert_eq!(report.klass, CodeClass::Other);
        assert_eq!(report.d, 1);
    }

    #[test]
    fn classify_rejects_degenerate_dimensions() {
        let f2 = gf(2, 1);
        let zero = LinearCode::from_generator(MatrixGF::zeros(f2.clone(), 2, 3));
        assert_eq!(zero.classify().unwrap_err(), Error::ZeroCode);
        let full = LinearCode::from_generator(MatrixGF::identity(f2, 3));
        assert_eq!(full.classify().unwrap_err(), Error::ZeroCode);
    }

    #[test]
    fn budget_is_enforced() {
        let f5 = gf(5, 1);
        let g = MatrixGF::parse(&f5, "1,0,2,3,1;0,1,4,1,2").unwrap();
        let code = LinearCode::from_generator(g);
        assert!(matches!(
            code.weight_distribution_with_budget(10),
            Err(Error::BudgetExceeded { needed: 25, .. })
        ));
        assert!(code.weight_distribution_with_budget(25).is_ok());
    }

    #[test]
    fn enumerator_string_format() {
        let dist = WeightDistribution::from_u64_counts(&[1, 0, 4]);
        assert_eq!(dist.enumerator_string(), "1 + 4 z^2");
    }
}

//! Construction of the studied code families: plain Reed-Solomon generators
//! and generalized Roth-Lempel codes, where an RS generator is extended by
//! `l` columns that carry the top `l` message coefficients through an
//! invertible `l x l` tail block.
//!
//! The two canonical families evaluate over the unit group or over the whole
//! field, in the canonical orderings of the field module, with all-ones
//! multipliers and a 2x2 tail.

use std::fmt;
use std::str::FromStr;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf::{Field, FieldElem};
use crate::matrix::MatrixGF;

/// Which evaluation-point set a canonical code uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Alphabet {
    /// The q-1 nonzero elements, ordered `w^0, ..., w^(q-2)`.
    Units,
    /// All q elements, ordered `0, w^0, ..., w^(q-2)`.
    Full,
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Alphabet::Units => "units",
            Alphabet::Full => "full",
        })
    }
}

impl FromStr for Alphabet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Alphabet> {
        match s {
            "units" => Ok(Alphabet::Units),
            "full" => Ok(Alphabet::Full),
            _ => Err(Error::Parse(format!(
                "unknown alphabet {s:?}, expected units or full"
            ))),
        }
    }
}

/// Canonical evaluation points for an alphabet choice.
pub fn canonical_alpha(field: &Field, alphabet: Alphabet) -> Vec<FieldElem> {
    match alphabet {
        Alphabet::Units => field.units(),
        Alphabet::Full => field.full_ordering(),
    }
}

/// A validated recipe for one generalized Roth-Lempel code.
#[derive(Debug, Clone)]
pub struct GrlSpec {
    field: Field,
    alpha: Vec<FieldElem>,
    v: Vec<FieldElem>,
    k: usize,
    tail: MatrixGF,
}

impl GrlSpec {
    /// Validates evaluation points (pairwise distinct), multipliers (nonzero,
    /// one per point, default all ones), dimension, and tail block
    /// (invertible `l x l` with `l < k <= n <= q`).
    pub fn new(
        field: &Field,
        alpha: Vec<FieldElem>,
        v: Option<Vec<FieldElem>>,
        k: usize,
        tail: MatrixGF,
    ) -> Result<GrlSpec> {
        let n = alpha.len();
        if alpha.iter().any(|a| a.value() >= field.q()) {
            return Err(Error::MixedFields);
        }
        let mut seen = alpha.clone();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::DuplicatePoints);
        }
        let v = v.unwrap_or_else(|| vec![FieldElem::ONE; n]);
        if v.len() != n {
            return Err(Error::BadDimension(format!(
                "{} multipliers for {} evaluation points",
                v.len(),
                n
            )));
        }
        if v.iter().any(|m| m.is_zero()) {
            return Err(Error::BadDimension("multipliers must be nonzero".into()));
        }
        if v.iter().any(|m| m.value() >= field.q()) {
            return Err(Error::MixedFields);
        }
        if tail.field() != field {
            return Err(Error::MixedFields);
        }
        let l = tail.rows();
        if tail.cols() != l || l == 0 {
            return Err(Error::BadDimension(format!(
                "tail block must be square and nonempty, got {}x{}",
                tail.rows(),
                tail.cols()
            )));
        }
        if l >= k || k > n || n as u64 > field.q() {
            return Err(Error::BadDimension(format!(
                "need tail size < k <= n <= q, got l={l}, k={k}, n={n}, q={}",
                field.q()
            )));
        }
        if tail.det()?.is_zero() {
            return Err(Error::SingularTailBlock);
        }
        Ok(GrlSpec {
            field: field.clone(),
            alpha,
            v,
            k,
            tail,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn alpha(&self) -> &[FieldElem] {
        &self.alpha
    }

    pub fn multipliers(&self) -> &[FieldElem] {
        &self.v
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    pub fn tail(&self) -> &MatrixGF {
        &self.tail
    }

    pub fn tail_size(&self) -> usize {
        self.tail.rows()
    }

    /// Code length `n + l`.
    pub fn len(&self) -> usize {
        self.alpha.len() + self.tail.rows()
    }

    /// Encodes message coefficients `f_0, ..., f_{k-1}` in the evaluation
    /// form: coordinates `v_i f(alpha_i)` followed by
    /// `(f_{k-l}, ..., f_{k-1})` times the tail block.
    pub fn encode(&self, coeffs: &[FieldElem]) -> Result<Vec<FieldElem>> {
        if coeffs.len() != self.k {
            return Err(Error::BadDimension(format!(
                "message has {} coefficients, expected {}",
                coeffs.len(),
                self.k
            )));
        }
        let f = &self.field;
        let l = self.tail_size();
        let mut out = Vec::with_capacity(self.len());
        for (&a, &m) in self.alpha.iter().zip(&self.v) {
            // Horner evaluation of f at a
            let mut acc = FieldElem::ZERO;
            for &c in coeffs.iter().rev() {
                acc = f.add(f.mul(acc, a), c);
            }
            out.push(f.mul(m, acc));
        }
        for col in 0..l {
            let mut acc = FieldElem::ZERO;
            for row in 0..l {
                acc = f.add(acc, f.mul(coeffs[self.k - l + row], self.tail.get(row, col)));
            }
            out.push(acc);
        }
        Ok(out)
    }
}

/// The k x n generator with entry (i, j) = alpha_j^i.
pub fn rs_generator(field: &Field, alpha: &[FieldElem], k: usize) -> Result<MatrixGF> {
    if alpha.iter().any(|a| a.value() >= field.q()) {
        return Err(Error::MixedFields);
    }
    let mut seen: Vec<_> = alpha.to_vec();
    seen.sort_unstable();
    if seen.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::DuplicatePoints);
    }
    if k == 0 || k > alpha.len() {
        return Err(Error::BadDimension(format!(
            "dimension {k} for {} evaluation points",
            alpha.len()
        )));
    }
    Ok(MatrixGF::from_fn(field.clone(), k, alpha.len(), |i, j| {
        field.pow(alpha[j], i as i64).expect("nonnegative exponent")
    }))
}

/// The k x (n + l) generalized Roth-Lempel generator: the first n columns are
/// the multiplied RS columns; the last l columns are zero on rows below k - l
/// and carry the rows of the tail block on the top-degree rows.
pub fn grl_generator(spec: &GrlSpec) -> MatrixGF {
    let f = spec.field();
    let (k, n, l) = (spec.dim(), spec.alpha().len(), spec.tail_size());
    MatrixGF::from_fn(f.clone(), k, n + l, |i, j| {
        if j < n {
            let p = f.pow(spec.alpha()[j], i as i64).expect("nonnegative exponent");
            f.mul(spec.multipliers()[j], p)
        } else if i < k - l {
            FieldElem::ZERO
        } else {
            spec.tail().get(i - (k - l), j - n)
        }
    })
}

/// One of the two canonical families: canonical evaluation points, all-ones
/// multipliers, and a 2x2 tail. Length is q+1 over the units, q+2 over the
/// full field.
pub fn rl_code(field: &Field, alphabet: Alphabet, k: usize, tail: &MatrixGF) -> Result<LinearCode> {
    if tail.rows() != 2 || tail.cols() != 2 {
        return Err(Error::BadDimension(format!(
            "tail block must be 2x2, got {}x{}",
            tail.rows(),
            tail.cols()
        )));
    }
    let max_k = match alphabet {
        Alphabet::Units => field.q() - 1,
        Alphabet::Full => field.q(),
    } as usize;
    if k < 3 || k > max_k {
        return Err(Error::DimensionOutOfRange(format!(
            "k = {k} outside 3..={max_k} for the {alphabet} alphabet over GF({})",
            field.q()
        )));
    }
    let spec = GrlSpec::new(field, canonical_alpha(field, alphabet), None, k, tail.clone())?;
    Ok(LinearCode::from_generator(grl_generator(&spec)))
}

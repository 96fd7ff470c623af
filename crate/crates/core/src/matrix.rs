//! Exact dense linear algebra over a [`Field`]: determinant, rank, reduced
//! echelon form, nullspace, minor tests, and the gap-Vandermonde determinant
//! (the Vandermonde-like matrix whose top rows have degrees `0..=n-2` and
//! whose last row has degree `n`).

use crate::combinatorics::{binomial_u128_saturating, Combinations};
use crate::error::{Error, Result};
use crate::gf::{Field, FieldElem};

/// Default ceiling on the number of column subsets a minor test will visit.
pub const MINOR_TEST_BUDGET: u64 = 10_000_000;

/// A dense matrix over one field. Immutable by convention: operations return
/// new matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixGF {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<FieldElem>,
}

/// Result of [`MatrixGF::rank_rref`].
#[derive(Debug, Clone)]
pub struct Rref {
    pub rank: usize,
    pub rref: MatrixGF,
    pub pivot_cols: Vec<usize>,
}

impl MatrixGF {
    pub fn new(field: Field, rows: usize, cols: usize, data: Vec<FieldElem>) -> Result<MatrixGF> {
        if data.len() != rows * cols {
            return Err(Error::BadDimension(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                data.len()
            )));
        }
        if data.iter().any(|e| e.value() >= field.q()) {
            return Err(Error::MixedFields);
        }
        Ok(MatrixGF {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> MatrixGF {
        MatrixGF {
            field,
            rows,
            cols,
            data: vec![FieldElem::ZERO; rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> MatrixGF {
        let mut m = MatrixGF::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, FieldElem::ONE);
        }
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<FieldElem>>) -> Result<MatrixGF> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::BadDimension("ragged rows".into()));
        }
        MatrixGF::new(field, r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(
        field: Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> FieldElem,
    ) -> MatrixGF {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        MatrixGF {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElem {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FieldElem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> MatrixGF {
        MatrixGF::from_fn(self.field.clone(), self.cols, self.rows, |i, j| {
            self.get(j, i)
        })
    }

    pub fn select_cols(&self, sel: &[usize]) -> MatrixGF {
        MatrixGF::from_fn(self.field.clone(), self.rows, sel.len(), |i, j| {
            self.get(i, sel[j])
        })
    }

    pub fn scale_col(&self, col: usize, c: FieldElem) -> MatrixGF {
        let mut out = self.clone();
        for i in 0..self.rows {
            out.set(i, col, self.field.mul(self.get(i, col), c));
        }
        out
    }

    pub fn matmul(&self, other: &MatrixGF) -> Result<MatrixGF> {
        if self.field != other.field {
            return Err(Error::MixedFields);
        }
        if self.cols != other.rows {
            return Err(Error::BadDimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        Ok(MatrixGF::from_fn(
            f.clone(),
            self.rows,
            other.cols,
            |i, j| {
                let mut acc = FieldElem::ZERO;
                for t in 0..self.cols {
                    acc = f.add(acc, f.mul(self.get(i, t), other.get(t, j)));
                }
                acc
            },
        ))
    }

    /// Exact determinant by Gaussian elimination with row pivoting.
    pub fn det(&self) -> Result<FieldElem> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let f = &self.field;
        let mut a = self.data.clone();
        let at = |a: &[FieldElem], i: usize, j: usize| a[i * n + j];
        let mut det = FieldElem::ONE;
        let mut swaps = 0usize;
        for col in 0..n {
            let pivot = match (col..n).find(|&r| !at(&a, r, col).is_zero()) {
                Some(r) => r,
                None => return Ok(FieldElem::ZERO),
            };
            if pivot != col {
                for j in 0..n {
                    a.swap(col * n + j, pivot * n + j);
                }
                swaps += 1;
            }
            let p = at(&a, col, col);
            det = f.mul(det, p);
            let pinv = f.inv(p).expect("pivot is nonzero");
            for r in col + 1..n {
                let factor = at(&a, r, col);
                if factor.is_zero() {
                    continue;
                }
                let scale = f.mul(factor, pinv);
                for j in col..n {
                    let v = f.sub(at(&a, r, j), f.mul(scale, at(&a, col, j)));
                    a[r * n + j] = v;
                }
            }
        }
        if swaps % 2 == 1 {
            det = f.neg(det);
        }
        Ok(det)
    }

    /// Unique reduced row-echelon form, rank, and pivot columns.
    pub fn rank_rref(&self) -> Rref {
        let f = &self.field;
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.data.clone();
        let mut pivot_cols = Vec::new();
        let mut r = 0usize;
        for c in 0..cols {
            let pivot = match (r..rows).find(|&i| !a[i * cols + c].is_zero()) {
                Some(i) => i,
                None => continue,
            };
            if pivot != r {
                for j in 0..cols {
                    a.swap(r * cols + j, pivot * cols + j);
                }
            }
            let pinv = f.inv(a[r * cols + c]).expect("pivot is nonzero");
            for j in c..cols {
                a[r * cols + j] = f.mul(a[r * cols + j], pinv);
            }
            for i in 0..rows {
                if i == r || a[i * cols + c].is_zero() {
                    continue;
                }
                let factor = a[i * cols + c];
                for j in c..cols {
                    let v = f.sub(a[i * cols + j], f.mul(factor, a[r * cols + j]));
                    a[i * cols + j] = v;
                }
            }
            pivot_cols.push(c);
            r += 1;
            if r == rows {
                break;
            }
        }
        Rref {
            rank: r,
            rref: MatrixGF {
                field: f.clone(),
                rows,
                cols,
                data: a,
            },
            pivot_cols,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank_rref().rank
    }

    /// Basis matrix `N` with `self * N^T = 0` and `rank(N) = cols - rank`.
    /// Rows are indexed by the free columns in ascending order.
    pub fn nullspace(&self) -> MatrixGF {
        let f = self.field.clone();
        let cols = self.cols;
        let Rref {
            rank,
            rref,
            pivot_cols,
        } = self.rank_rref();
        let free: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
        let mut out = MatrixGF::zeros(f.clone(), free.len(), cols);
        for (bi, &fc) in free.iter().enumerate() {
            out.set(bi, fc, FieldElem::ONE);
            for (ri, &pc) in pivot_cols.iter().enumerate().take(rank) {
                out.set(bi, pc, f.neg(rref.get(ri, fc)));
            }
        }
        out
    }

    /// Checks that every k-subset of columns is nonsingular. On failure the
    /// witness is the first failing subset in lexicographic order.
    pub fn all_k_column_subsets_nonsingular(
        &self,
        k: usize,
        force: bool,
    ) -> Result<(bool, Option<Vec<usize>>)> {
        if k != self.rows || k > self.cols {
            return Err(Error::BadDimension(format!(
                "minor test needs k = rows <= cols, got k={}, {}x{}",
                k, self.rows, self.cols
            )));
        }
        let total = binomial_u128_saturating(self.cols as u64, k as u64);
        if !force && total > MINOR_TEST_BUDGET as u128 {
            return Err(Error::BudgetExceeded {
                needed: total,
                budget: MINOR_TEST_BUDGET,
            });
        }
        let mut combos = Combinations::new(self.cols, k);
        while let Some(sel) = combos.advance() {
            let sub = self.select_cols(sel);
            if sub.det()?.is_zero() {
                return Ok((false, Some(sel.to_vec())));
            }
        }
        Ok((true, None))
    }

    /// Text form: rows separated by ";", entries by ",", entries in the
    /// element syntax of the field ("7", "w^3", "0").
    pub fn parse(field: &Field, text: &str) -> Result<MatrixGF> {
        let mut rows = Vec::new();
        for row_text in text.split(';') {
            let row: Result<Vec<FieldElem>> = row_text
                .split(',')
                .map(|entry| field.parse_elem(entry))
                .collect();
            rows.push(row?);
        }
        MatrixGF::from_rows(field.clone(), rows)
    }

    pub fn to_text(&self) -> String {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join(";")
    }
}

/// Determinant of the n x n matrix whose rows are the powers
/// `x^0, x^1, ..., x^(n-2), x^n` of the given points, computed by generic
/// elimination.
pub fn vandermonde_gap_det(field: &Field, points: &[FieldElem]) -> Result<FieldElem> {
    let m = gap_matrix(field, points)?;
    m.det()
}

/// Closed form for the same determinant:
/// `(sum of the points) * prod_{i<j} (x_j - x_i)`.
pub fn vandermonde_gap_closed_form(field: &Field, points: &[FieldElem]) -> Result<FieldElem> {
    check_gap_points(field, points)?;
    let mut sum = FieldElem::ZERO;
    for &x in points {
        sum = field.add(sum, x);
    }
    let mut prod = FieldElem::ONE;
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            prod = field.mul(prod, field.sub(points[j], points[i]));
        }
    }
    Ok(field.mul(sum, prod))
}

fn check_gap_points(field: &Field, points: &[FieldElem]) -> Result<()> {
    if points.len() < 2 {
        return Err(Error::BadDimension(
            "gap-Vandermonde determinant needs at least 2 points".into(),
        ));
    }
    if points.len() as u64 > field.q() {
        return Err(Error::DuplicatePoints);
    }
    let mut seen = points.to_vec();
    seen.sort_unstable();
    if seen.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::DuplicatePoints);
    }
    Ok(())
}

fn gap_matrix(field: &Field, points: &[FieldElem]) -> Result<MatrixGF> {
    check_gap_points(field, points)?;
    let n = points.len();
    Ok(MatrixGF::from_fn(field.clone(), n, n, |i, j| {
        let e = if i == n - 1 { n } else { i };
        field.pow(points[j], e as i64).expect("nonnegative exponent")
    }))
}

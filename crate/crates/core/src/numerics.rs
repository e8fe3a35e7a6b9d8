//! Dense 64-bit linear algebra with deterministic reduction order.
//!
//! All reductions run left to right so repeated runs produce identical bits.
//! Matrices are row-major and reject non-finite values on construction,
//! which lets downstream code assume every stored value is a finite `f64`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Result, RqError};
use crate::fmath;

/// Row-major dense matrix of finite 64-bit reals.
///
/// `rows` may be zero (an empty token batch); `cols` must be at least one.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    values: Vec<f64>,
}

impl Matrix {
    /// Build a matrix, validating the element count and finiteness.
    pub fn new(rows: usize, cols: usize, values: Vec<f64>) -> Result<Self> {
        if cols == 0 {
            return Err(RqError::Argument("matrix must have at least one column".into()));
        }
        if values.len() != rows * cols {
            return Err(RqError::Argument(format!(
                "expected {}x{} = {} values, got {}",
                rows,
                cols,
                rows * cols,
                values.len()
            )));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(RqError::NonFinite("matrix values"));
        }
        Ok(Self { rows, cols, values })
    }

    /// Build from per-row slices; all rows must share one length.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let cols = rows.first().map(|r| r.len()).unwrap_or(0);
        let mut values = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(RqError::Argument("ragged rows".into()));
            }
            values.extend_from_slice(row);
        }
        Self::new(rows.len(), cols, values)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(cols > 0, "matrix must have at least one column");
        Self {
            rows,
            cols,
            values: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.values[i * n + i] = 1.0;
        }
        m
    }

    /// Internal constructor for values already known to be finite.
    pub(crate) fn from_raw(rows: usize, cols: usize, values: Vec<f64>) -> Self {
        debug_assert!(cols > 0 && values.len() == rows * cols);
        debug_assert!(values.iter().all(|v| v.is_finite()));
        Self { rows, cols, values }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn row(&self, r: usize) -> &[f64] {
        &self.values[r * self.cols..(r + 1) * self.cols]
    }

    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.values[r * self.cols + c]
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0
    }
}

/// Standard matrix product with 64-bit left-to-right accumulation.
pub fn matmul(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    if a.cols != b.rows {
        return Err(RqError::Shape {
            op: "matmul",
            left: (a.rows, a.cols),
            right: (b.rows, b.cols),
        });
    }
    let mut out = vec![0.0; a.rows * b.cols];
    for i in 0..a.rows {
        let lhs = a.row(i);
        for j in 0..b.cols {
            let mut acc = 0.0;
            for (k, &l) in lhs.iter().enumerate() {
                acc += l * b.values[k * b.cols + j];
            }
            out[i * b.cols + j] = acc;
        }
    }
    Matrix::new(a.rows, b.cols, out)
}

/// Matrix-vector product, used on the model's hot path.
pub(crate) fn mat_vec(w: &Matrix, x: &[f64]) -> Result<Vec<f64>> {
    if w.cols != x.len() {
        return Err(RqError::Shape {
            op: "mat_vec",
            left: (w.rows, w.cols),
            right: (x.len(), 1),
        });
    }
    let mut out = Vec::with_capacity(w.rows);
    for r in 0..w.rows {
        let mut acc = 0.0;
        for (k, &v) in w.row(r).iter().enumerate() {
            acc += v * x[k];
        }
        out.push(acc);
    }
    Ok(out)
}

/// Numerically stable softmax over one logit row.
///
/// The running maximum is subtracted before exponentiation, so arbitrarily
/// large (finite) logits cannot overflow. Output order follows input order.
pub fn softmax_row(logits: &[f64]) -> Result<Vec<f64>> {
    if logits.is_empty() {
        return Err(RqError::Argument("softmax over empty logits".into()));
    }
    if logits.iter().any(|v| !v.is_finite()) {
        return Err(RqError::NonFinite("softmax logits"));
    }
    let mut max = logits[0];
    for &v in &logits[1..] {
        if v > max {
            max = v;
        }
    }
    let mut exps = Vec::with_capacity(logits.len());
    let mut sum = 0.0;
    for &v in logits {
        let e = fmath::exp(v - max);
        exps.push(e);
        sum += e;
    }
    for e in &mut exps {
        *e /= sum;
    }
    Ok(exps)
}

/// Indices of the `k` largest scores, in descending score order.
/// Equal scores rank by ascending index.
pub fn topk_indices(scores: &[f64], k: usize) -> Result<Vec<usize>> {
    if k == 0 {
        return Err(RqError::Argument("top-k requires k >= 1".into()));
    }
    if k > scores.len() {
        return Err(RqError::Argument(format!(
            "top-k requires k <= {} scores, got k = {}",
            scores.len(),
            k
        )));
    }
    if scores.iter().any(|v| !v.is_finite()) {
        return Err(RqError::NonFinite("top-k scores"));
    }
    let mut idx: Vec<usize> = (0..scores.len()).collect();
    idx.sort_by(|&i, &j| {
        scores[j]
            .partial_cmp(&scores[i])
            .expect("scores are finite")
            .then_with(|| i.cmp(&j))
    });
    idx.truncate(k);
    Ok(idx)
}

/// Per-column L2 norms: `out[j] = sqrt(sum_i x[i][j]^2)`.
pub fn col_l2_norms(x: &Matrix) -> Result<Vec<f64>> {
    if x.is_empty() {
        return Err(RqError::Argument("column norms of an empty matrix".into()));
    }
    let mut sums = vec![0.0; x.cols];
    for r in 0..x.rows {
        for (j, &v) in x.row(r).iter().enumerate() {
            sums[j] += v * v;
        }
    }
    Ok(sums.into_iter().map(fmath::sqrt).collect())
}

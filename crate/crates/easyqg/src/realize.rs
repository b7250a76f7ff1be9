//! The functor from diagrams to matrices: a diagram over words of lengths
//! l and k becomes the n^l × n^k 0/1 matrix whose (I, J) entry is 1 exactly
//! when the index labelling is constant on every block. Weight matrices are
//! complex-weighted sums over a spanning set.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::catalog::{enumerate_spanning, GroupSpec};
use crate::diagram::PartitionDiagram;
use crate::error::{Error, Result};
use crate::exact::IntRowSpace;

/// Default per-axis dimension cap: n^l and n^k must stay at or below this.
pub const DEFAULT_DIM_CAP: usize = 1 << 20;

/// A tuple of 1-based indices, each in `1..=n`, indexing one tensor leg per
/// entry.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiIndex(pub Vec<usize>);

impl MultiIndex {
    pub fn arity(&self) -> usize {
        self.0.len()
    }

    /// Validates entries against the leg dimension.
    pub fn validate(&self, n: usize) -> Result<()> {
        for &entry in &self.0 {
            if entry == 0 || entry > n {
                return Err(Error::IndexOutOfRange { entry, n });
            }
        }
        Ok(())
    }

    /// Row-major flattening: `(1, …, 1) ↦ 0` and the last leg varies fastest.
    pub fn flatten(&self, n: usize) -> Result<usize> {
        self.validate(n)?;
        Ok(flatten_unchecked(&self.0, n))
    }
}

fn flatten_unchecked(entries: &[usize], n: usize) -> usize {
    entries.iter().fold(0, |acc, &e| acc * n + (e - 1))
}

/// Iterates all multi-indices of the given arity in row-major order.
pub fn multi_indices(arity: usize, n: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = n.checked_pow(arity as u32).unwrap_or(0);
    (0..total).map(move |flat| {
        let mut entries = vec![1; arity];
        let mut rest = flat;
        for slot in entries.iter_mut().rev() {
            *slot = rest % n + 1;
            rest /= n;
        }
        entries
    })
}

/// The 0/1 matrix realizing one diagram, stored as the set of unit positions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntertwinerMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeSet<(usize, usize)>,
    diagram: PartitionDiagram,
    n: usize,
}

impl IntertwinerMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.entries.iter().copied()
    }

    /// The source diagram this matrix realizes.
    pub fn diagram(&self) -> &PartitionDiagram {
        &self.diagram
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        i64::from(self.entries.contains(&(row, col)))
    }

    /// Flattens into one integer row vector of length rows·cols.
    pub fn flat_row(&self) -> Vec<BigInt> {
        let mut row = vec![BigInt::from(0); self.rows * self.cols];
        for &(r, c) in &self.entries {
            row[r * self.cols + c] = BigInt::from(1);
        }
        row
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        let mut data = vec![0i64; self.rows * self.cols];
        for &(r, c) in &self.entries {
            data[r * self.cols + c] = 1;
        }
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn to_complex(&self) -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(self.rows, self.cols);
        for &(r, c) in &self.entries {
            m.set(r, c, Complex64::new(1.0, 0.0));
        }
        m
    }

    /// Sparse triplet export `{rows, cols, nnz, entries: [{r, c, v}]}`.
    pub fn to_triplets(&self) -> SparseTriplets {
        SparseTriplets {
            rows: self.rows,
            cols: self.cols,
            nnz: self.entries.len(),
            entries: self
                .entries
                .iter()
                .map(|&(r, c)| Triplet { r, c, v: 1 })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SparseTriplets {
    pub rows: usize,
    pub cols: usize,
    pub nnz: usize,
    pub entries: Vec<Triplet>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct Triplet {
    pub r: usize,
    pub c: usize,
    pub v: i64,
}

/// The (I, J) entry of the realized matrix: 1 iff the labelling that places
/// I on the top row and J on the bottom row is constant on every block.
pub fn entry(d: &PartitionDiagram, top: &MultiIndex, bottom: &MultiIndex, n: usize) -> Result<u8> {
    if top.arity() != d.top_len() {
        return Err(Error::ArityMismatch {
            expected: d.top_len(),
            got: top.arity(),
        });
    }
    if bottom.arity() != d.bottom_len() {
        return Err(Error::ArityMismatch {
            expected: d.bottom_len(),
            got: bottom.arity(),
        });
    }
    top.validate(n)?;
    bottom.validate(n)?;
    let l = d.top_len();
    let label = |v: usize| {
        if v <= l {
            top.0[v - 1]
        } else {
            bottom.0[v - l - 1]
        }
    };
    let constant = d
        .partition()
        .blocks()
        .iter()
        .all(|block| block.iter().all(|&v| label(v) == label(block[0])));
    Ok(u8::from(constant))
}

fn checked_dim(n: usize, exponent: usize, k: usize, l: usize, cap: usize) -> Result<usize> {
    let mut dim: usize = 1;
    for _ in 0..exponent {
        dim = dim.checked_mul(n).ok_or(Error::DimCapExceeded {
            n,
            k,
            l,
            exponent,
            cap,
        })?;
        if dim > cap {
            return Err(Error::DimCapExceeded {
                n,
                k,
                l,
                exponent,
                cap,
            });
        }
    }
    Ok(dim)
}

/// Realizes a diagram with the default dimension cap.
pub fn realize(d: &PartitionDiagram, n: usize) -> Result<IntertwinerMatrix> {
    realize_capped(d, n, DEFAULT_DIM_CAP)
}

/// Realizes a diagram as its n^l × n^k 0/1 matrix by enumerating the
/// n^(#blocks) free block labellings rather than scanning all index pairs.
pub fn realize_capped(d: &PartitionDiagram, n: usize, cap: usize) -> Result<IntertwinerMatrix> {
    if n == 0 {
        return Err(Error::InvalidDimension);
    }
    let l = d.top_len();
    let k = d.bottom_len();
    let rows = checked_dim(n, l, k, l, cap)?;
    let cols = checked_dim(n, k, k, l, cap)?;

    let ids = d.partition().block_ids();
    let num_blocks = d.partition().num_blocks();
    let mut entries = BTreeSet::new();
    for labelling in multi_indices(num_blocks, n) {
        let mut row = 0usize;
        for v in 1..=l {
            row = row * n + (labelling[ids[v - 1]] - 1);
        }
        let mut col = 0usize;
        for v in l + 1..=l + k {
            col = col * n + (labelling[ids[v - 1]] - 1);
        }
        entries.insert((row, col));
    }
    Ok(IntertwinerMatrix {
        rows,
        cols,
        entries,
        diagram: d.clone(),
        n,
    })
}

/// Dense integer matrix used by the exact functoriality checks.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(dim: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(dim, dim);
        for i in 0..dim {
            m.data[i * dim + i] = 1;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn matmul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: other.rows,
                right_cols: other.cols,
            });
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for m in 0..self.cols {
                let a = self.get(r, m);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    out.data[r * other.cols + c] += a * other.get(m, c);
                }
            }
        }
        Ok(out)
    }

    pub fn kronecker(&self, other: &IntMatrix) -> IntMatrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = IntMatrix::zeros(rows, cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                if a == 0 {
                    continue;
                }
                for r2 in 0..other.rows {
                    for c2 in 0..other.cols {
                        out.set(
                            r1 * other.rows + r2,
                            c1 * other.cols + c2,
                            a * other.get(r2, c2),
                        );
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c));
            }
        }
        out
    }

    pub fn scaled(&self, factor: i64) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * factor).collect(),
        }
    }

    pub fn flat_row(&self) -> Vec<BigInt> {
        self.data.iter().map(|&v| BigInt::from(v)).collect()
    }
}

/// Dense complex matrix for weighted sums, sampling and residuals.
#[derive(Clone, PartialEq, Debug)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> ComplexMatrix {
        ComplexMatrix {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(dim: usize) -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(dim, dim);
        for i in 0..dim {
            m.data[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// The 1×1 matrix [1], the empty tensor power.
    pub fn scalar_one() -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(1, 1);
        m.data[0] = Complex64::new(1.0, 0.0);
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Complex64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn matmul(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: other.rows,
                right_cols: other.cols,
            });
        }
        let mut out = ComplexMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for m in 0..self.cols {
                let a = self.get(r, m);
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for c in 0..other.cols {
                    out.data[r * other.cols + c] += a * other.get(m, c);
                }
            }
        }
        Ok(out)
    }

    pub fn matvec(&self, x: &[Complex64]) -> Result<Vec<Complex64>> {
        if x.len() != self.cols {
            return Err(Error::ShapeMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: x.len(),
                right_cols: 1,
            });
        }
        let mut out = vec![Complex64::new(0.0, 0.0); self.rows];
        for (r, slot) in out.iter_mut().enumerate() {
            let mut acc = Complex64::new(0.0, 0.0);
            for (c, xc) in x.iter().enumerate() {
                acc += self.get(r, c) * xc;
            }
            *slot = acc;
        }
        Ok(out)
    }

    pub fn kronecker(&self, other: &ComplexMatrix) -> ComplexMatrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = ComplexMatrix::zeros(rows, cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                for r2 in 0..other.rows {
                    for c2 in 0..other.cols {
                        out.set(
                            r1 * other.rows + r2,
                            c1 * other.cols + c2,
                            a * other.get(r2, c2),
                        );
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c));
            }
        }
        out
    }

    /// Entrywise complex conjugate (no transpose).
    pub fn conj(&self) -> ComplexMatrix {
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v.conj()).collect(),
        }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> ComplexMatrix {
        self.conj().transpose()
    }

    pub fn scaled(&self, factor: Complex64) -> ComplexMatrix {
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * factor).collect(),
        }
    }

    pub fn add(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.zip(other, |a, b| a - b)
    }

    fn zip(
        &self,
        other: &ComplexMatrix,
        f: impl Fn(Complex64, Complex64) -> Complex64,
    ) -> Result<ComplexMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: other.rows,
                right_cols: other.cols,
            });
        }
        Ok(ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(other.data.iter())
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    /// Largest absolute value of an entry (max of |re|, |im| per entry would
    /// be coarser; this uses the complex modulus).
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &ComplexMatrix) -> Result<f64> {
        Ok(self.sub(other)?.max_abs())
    }

    /// Dense export `{rows, cols, re: [[…]], im: [[…]]}`.
    pub fn to_dense_json(&self) -> DenseComplexJson {
        let mut re = Vec::with_capacity(self.rows);
        let mut im = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut re_row = Vec::with_capacity(self.cols);
            let mut im_row = Vec::with_capacity(self.cols);
            for c in 0..self.cols {
                let v = self.get(r, c);
                re_row.push(v.re);
                im_row.push(v.im);
            }
            re.push(re_row);
            im.push(im_row);
        }
        DenseComplexJson {
            rows: self.rows,
            cols: self.cols,
            re,
            im,
        }
    }

    /// Dense CSV with `re+imi` cells, one row per line.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for r in 0..self.rows {
            for c in 0..self.cols {
                if c > 0 {
                    out.push(',');
                }
                let v = self.get(r, c);
                if v.im >= 0.0 {
                    out.push_str(&format!("{}+{}i", v.re, v.im));
                } else {
                    out.push_str(&format!("{}-{}i", v.re, -v.im));
                }
            }
            out.push('\n');
        }
        out
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct DenseComplexJson {
    pub rows: usize,
    pub cols: usize,
    pub re: Vec<Vec<f64>>,
    pub im: Vec<Vec<f64>>,
}

/// Weights attached to an ordered spanning set of diagrams.
#[derive(Clone, Debug)]
pub struct WeightAssignment {
    pub diagrams: Vec<PartitionDiagram>,
    pub weights: Vec<Complex64>,
}

impl WeightAssignment {
    pub fn new(
        diagrams: Vec<PartitionDiagram>,
        weights: Vec<Complex64>,
    ) -> Result<WeightAssignment> {
        if diagrams.len() != weights.len() {
            return Err(Error::WeightMismatch {
                expected: diagrams.len(),
                got: weights.len(),
            });
        }
        Ok(WeightAssignment { diagrams, weights })
    }
}

/// The weight matrix `W = Σ w_π D_π` over the family's spanning set for
/// `(w_k, w_l)`. The assignment's diagram list must match the spanning
/// enumeration exactly, order included.
pub fn weight_matrix(
    spec: &GroupSpec,
    w_k: &crate::word::Word,
    w_l: &crate::word::Word,
    assignment: &WeightAssignment,
) -> Result<ComplexMatrix> {
    weight_matrix_capped(spec, w_k, w_l, assignment, DEFAULT_DIM_CAP)
}

pub fn weight_matrix_capped(
    spec: &GroupSpec,
    w_k: &crate::word::Word,
    w_l: &crate::word::Word,
    assignment: &WeightAssignment,
    cap: usize,
) -> Result<ComplexMatrix> {
    let spanning = enumerate_spanning(spec, w_k, w_l)?;
    if spanning != assignment.diagrams {
        return Err(Error::WeightMismatch {
            expected: spanning.len(),
            got: assignment.diagrams.len(),
        });
    }
    let rows = checked_dim(spec.n, w_l.len(), w_k.len(), w_l.len(), cap)?;
    let cols = checked_dim(spec.n, w_k.len(), w_k.len(), w_l.len(), cap)?;
    let mut out = ComplexMatrix::zeros(rows, cols);
    for (d, &w) in assignment.diagrams.iter().zip(assignment.weights.iter()) {
        let m = realize_capped(d, spec.n, cap)?;
        for (r, c) in m.entries() {
            let v = out.get(r, c) + w;
            out.set(r, c, v);
        }
    }
    Ok(out)
}

/// Rank/basis report for a list of realized matrices.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct RankReport {
    pub count: usize,
    pub rank: usize,
    pub is_basis: bool,
}

/// Exact rank over the rationals of the flattened matrices.
pub fn rank_of_span(mats: &[IntertwinerMatrix]) -> Result<RankReport> {
    let count = mats.len();
    if count == 0 {
        return Ok(RankReport {
            count: 0,
            rank: 0,
            is_basis: true,
        });
    }
    let (rows, cols) = (mats[0].rows(), mats[0].cols());
    let mut space = IntRowSpace::new(rows * cols);
    for m in mats {
        if m.rows() != rows || m.cols() != cols {
            return Err(Error::ShapeMismatch {
                left_rows: rows,
                left_cols: cols,
                right_rows: m.rows(),
                right_cols: m.cols(),
            });
        }
        space.insert(m.flat_row());
    }
    let rank = space.rank();
    Ok(RankReport {
        count,
        rank,
        is_basis: rank == count,
    })
}

/// Exact membership of an integer matrix in the rational span of realized
/// basis matrices.
pub fn in_span(m: &IntMatrix, basis: &[IntertwinerMatrix]) -> Result<bool> {
    let mut space = IntRowSpace::new(m.rows() * m.cols());
    for b in basis {
        if b.rows() != m.rows() || b.cols() != m.cols() {
            return Err(Error::ShapeMismatch {
                left_rows: m.rows(),
                left_cols: m.cols(),
                right_rows: b.rows(),
                right_cols: b.cols(),
            });
        }
        space.insert(b.flat_row());
    }
    Ok(space.contains(&m.flat_row()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::FamilyId;
    use crate::diagram::DualityOrder;
    use crate::partition::SetPartition;
    use crate::word::Word;

    fn word(text: &str) -> Word {
        text.parse().unwrap()
    }

    fn diagram(top: &str, bottom: &str, partition: &str) -> PartitionDiagram {
        let top = word(top);
        let bottom = word(bottom);
        let p = SetPartition::parse(partition, top.len() + bottom.len()).unwrap();
        PartitionDiagram::new(top, bottom, p).unwrap()
    }

    // Independent oracle: scan all n^(l+k) index pairs and test block
    // constancy directly on the partition, without the block-labelling path.
    fn brute_force_positions(d: &PartitionDiagram, n: usize) -> BTreeSet<(usize, usize)> {
        let l = d.top_len();
        let k = d.bottom_len();
        let mut positions = BTreeSet::new();
        for top in multi_indices(l, n) {
            for bottom in multi_indices(k, n) {
                let label = |v: usize| {
                    if v <= l {
                        top[v - 1]
                    } else {
                        bottom[v - l - 1]
                    }
                };
                let constant = d
                    .partition()
                    .blocks()
                    .iter()
                    .all(|b| b.iter().all(|&v| label(v) == label(b[0])));
                if constant {
                    positions.insert((flatten_unchecked(&top, n), flatten_unchecked(&bottom, n)));
                }
            }
        }
        positions
    }

    #[test]
    fn entry_on_a_six_block_diagram() {
        let d = diagram("bwbbw", "wbbwbw", "{1,6|2,3|4,8|5,9|7,10|11}");
        let one = entry(
            &d,
            &MultiIndex(vec![1, 2, 2, 1, 3]),
            &MultiIndex(vec![1, 2, 1, 3, 2, 2]),
            3,
        )
        .unwrap();
        assert_eq!(one, 1);
        let zero = entry(
            &d,
            &MultiIndex(vec![1, 1, 2, 1, 3]),
            &MultiIndex(vec![2, 2, 1, 3, 1, 2]),
            3,
        )
        .unwrap();
        assert_eq!(zero, 0);
    }

    #[test]
    fn entry_validates_arity_and_range() {
        let d = PartitionDiagram::identity(&word("ww"));
        assert!(matches!(
            entry(&d, &MultiIndex(vec![1]), &MultiIndex(vec![1, 1]), 2),
            Err(Error::ArityMismatch { .. })
        ));
        assert!(matches!(
            entry(&d, &MultiIndex(vec![1, 3]), &MultiIndex(vec![1, 1]), 2),
            Err(Error::IndexOutOfRange { entry: 3, n: 2 })
        ));
    }

    #[test]
    fn identity_entries_only_on_the_diagonal() {
        let d = PartitionDiagram::identity(&word("ww"));
        for top in multi_indices(2, 3) {
            for bottom in multi_indices(2, 3) {
                let e =
                    entry(&d, &MultiIndex(top.clone()), &MultiIndex(bottom.clone()), 3).unwrap();
                assert_eq!(e == 1, top == bottom);
            }
        }
    }

    #[test]
    fn flatten_is_row_major() {
        assert_eq!(MultiIndex(vec![1, 1]).flatten(2).unwrap(), 0);
        assert_eq!(MultiIndex(vec![2, 2]).flatten(2).unwrap(), 3);
        assert_eq!(MultiIndex(vec![1, 2, 1]).flatten(3).unwrap(), 3);
        assert_eq!(MultiIndex(vec![]).flatten(5).unwrap(), 0);
    }

    #[test]
    fn realize_agrees_with_brute_force_scan() {
        let samples = [
            diagram("bwbbw", "wbbwbw", "{1,6|2,3|4,8|5,9|7,10|11}"),
            diagram("ww", "ww", "{1,2,3,4}"),
            diagram("ww", "ww", "{1|2|3|4}"),
            diagram("wb", "-", "{1,2}"),
            diagram("-", "ww", "{1,2}"),
            diagram("w", "www", "{1,2|3,4}"),
            diagram("-", "-", "{}"),
        ];
        for n in [1, 2, 3] {
            for d in &samples {
                let m = realize(d, n).unwrap();
                assert_eq!(
                    m.entries().collect::<BTreeSet<_>>(),
                    brute_force_positions(d, n),
                    "diagram {d} at n = {n}"
                );
                assert_eq!(m.nnz(), n.pow(d.partition().num_blocks() as u32));
            }
        }
    }

    #[test]
    fn realize_identity_is_identity_matrix() {
        let d = PartitionDiagram::identity(&word("ww"));
        let m = realize(&d, 3).unwrap();
        assert_eq!(m.to_int_matrix(), IntMatrix::identity(9));
    }

    #[test]
    fn realize_duality_column_matches_delta_rule() {
        let d = PartitionDiagram::duality(DualityOrder::WhiteBlack);
        let m = realize(&d, 3).unwrap();
        assert_eq!(m.rows(), 9);
        assert_eq!(m.cols(), 1);
        let expected: BTreeSet<(usize, usize)> = [(0, 0), (4, 0), (8, 0)].into_iter().collect();
        assert_eq!(m.entries().collect::<BTreeSet<_>>(), expected);
        // n = 2: the 4x1 column (1, 0, 0, 1)ᵀ realizing 1 ↦ Σ eᵢ ⊗ eᵢ.
        let m = realize(&d, 2).unwrap();
        let column: Vec<i64> = (0..4).map(|r| m.get(r, 0)).collect();
        assert_eq!(column, vec![1, 0, 0, 1]);
    }

    #[test]
    fn realize_enforces_dimension_cap() {
        let d = PartitionDiagram::identity(&word("www"));
        let err = realize_capped(&d, 10, 100).unwrap_err();
        assert!(matches!(err, Error::DimCapExceeded { n: 10, .. }));
    }

    #[test]
    fn weight_matrix_sums_the_spanning_set() {
        let spec = GroupSpec::new(FamilyId::On, 2).unwrap();
        let wk = word("ww");
        let wl = word("ww");
        let spanning = enumerate_spanning(&spec, &wk, &wl).unwrap();
        assert_eq!(spanning.len(), 3);

        let zero =
            WeightAssignment::new(spanning.clone(), vec![Complex64::new(0.0, 0.0); 3]).unwrap();
        let w = weight_matrix(&spec, &wk, &wl, &zero).unwrap();
        assert_eq!(w.max_abs(), 0.0);

        // All-ones weights sum the three realized matrices elementwise.
        let ones =
            WeightAssignment::new(spanning.clone(), vec![Complex64::new(1.0, 0.0); 3]).unwrap();
        let w = weight_matrix(&spec, &wk, &wl, &ones).unwrap();
        let mut expected = ComplexMatrix::zeros(4, 4);
        for d in &spanning {
            expected = expected.add(&realize(d, 2).unwrap().to_complex()).unwrap();
        }
        assert_eq!(w.max_abs_diff(&expected).unwrap(), 0.0);

        // A single unit weight picks out that diagram's matrix.
        let mut weights = vec![Complex64::new(0.0, 0.0); 3];
        weights[1] = Complex64::new(1.0, 0.0);
        let single = WeightAssignment::new(spanning.clone(), weights).unwrap();
        let w = weight_matrix(&spec, &wk, &wl, &single).unwrap();
        let expected = realize(&spanning[1], 2).unwrap().to_complex();
        assert_eq!(w.max_abs_diff(&expected).unwrap(), 0.0);

        // Wrong-length weights are rejected.
        assert!(WeightAssignment::new(spanning, vec![Complex64::new(1.0, 0.0)]).is_err());
    }

    #[test]
    fn rank_of_span_on_degenerate_and_free_sets() {
        let sn2 = GroupSpec::new(FamilyId::Sn, 2).unwrap();
        let wk = word("ww");
        let wl = word("ww");
        let mats: Vec<IntertwinerMatrix> = enumerate_spanning(&sn2, &wk, &wl)
            .unwrap()
            .iter()
            .map(|d| realize(d, 2).unwrap())
            .collect();
        let report = rank_of_span(&mats).unwrap();
        assert_eq!(report.count, 15);
        assert_eq!(report.rank, 8);
        assert!(!report.is_basis);

        let sn_plus4 = GroupSpec::new(FamilyId::SnPlus, 4).unwrap();
        let mats: Vec<IntertwinerMatrix> = enumerate_spanning(&sn_plus4, &wk, &wl)
            .unwrap()
            .iter()
            .map(|d| realize(d, 4).unwrap())
            .collect();
        let report = rank_of_span(&mats).unwrap();
        assert_eq!(report.count, 14);
        assert_eq!(report.rank, 14);
        assert!(report.is_basis);

        let empty = rank_of_span(&[]).unwrap();
        assert_eq!(empty.rank, 0);
    }

    #[test]
    fn span_membership_examples() {
        let spec = GroupSpec::new(FamilyId::SnPlus, 4).unwrap();
        let wk = word("ww");
        let wl = word("ww");
        let basis: Vec<IntertwinerMatrix> = enumerate_spanning(&spec, &wk, &wl)
            .unwrap()
            .iter()
            .map(|d| realize(d, 4).unwrap())
            .collect();
        // Every element of the list is in its own span.
        for b in &basis {
            assert!(in_span(&b.to_int_matrix(), &basis).unwrap());
        }
        // A product of two spanning matrices stays in the span.
        let product = basis[0]
            .to_int_matrix()
            .matmul(&basis[1].to_int_matrix())
            .unwrap();
        assert!(in_span(&product, &basis).unwrap());
        // The swap matrix is outside the O(4)⁺ spanning set.
        let on_plus = GroupSpec::new(FamilyId::OnPlus, 4).unwrap();
        let on_basis: Vec<IntertwinerMatrix> = enumerate_spanning(&on_plus, &wk, &wl)
            .unwrap()
            .iter()
            .map(|d| realize(d, 4).unwrap())
            .collect();
        let swap = realize(&diagram("ww", "ww", "{1,4|2,3}"), 4).unwrap();
        assert!(!in_span(&swap.to_int_matrix(), &on_basis).unwrap());
    }

    #[test]
    fn rank_is_permutation_invariant() {
        let spec = GroupSpec::new(FamilyId::Bn, 2).unwrap();
        let wk = word("ww");
        let wl = word("ww");
        let mut mats: Vec<IntertwinerMatrix> = enumerate_spanning(&spec, &wk, &wl)
            .unwrap()
            .iter()
            .map(|d| realize(d, 2).unwrap())
            .collect();
        let forward = rank_of_span(&mats).unwrap();
        mats.reverse();
        let backward = rank_of_span(&mats).unwrap();
        assert_eq!(forward.rank, backward.rank);
    }
}

//! Exact integer linear algebra: an incrementally reduced row space over
//! arbitrary-precision integers, used for rank and span-membership questions
//! without any floating point.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// A row space held in fraction-free echelon form. Rows are integer vectors;
/// scaling a row never changes the span, so every reduction step multiplies
/// through by the pivot and then divides out the content.
#[derive(Debug, Default)]
pub struct IntRowSpace {
    cols: usize,
    // (pivot column, reduced row), kept sorted by pivot column.
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl IntRowSpace {
    pub fn new(cols: usize) -> IntRowSpace {
        IntRowSpace {
            cols,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Eliminates all stored pivots from `v` in place.
    fn reduce(&self, v: &mut [BigInt]) {
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let scale_v = row[*pivot].clone();
            let scale_row = v[*pivot].clone();
            for (lhs, rhs) in v.iter_mut().zip(row.iter()) {
                *lhs = &*lhs * &scale_v - rhs * &scale_row;
            }
            normalize(v);
        }
    }

    /// Adds a row; returns true iff it enlarged the span.
    pub fn insert(&mut self, mut v: Vec<BigInt>) -> bool {
        assert_eq!(v.len(), self.cols, "row length must match column count");
        self.reduce(&mut v);
        match v.iter().position(|x| !x.is_zero()) {
            None => false,
            Some(pivot) => {
                let at = self.rows.partition_point(|(existing, _)| *existing < pivot);
                self.rows.insert(at, (pivot, v));
                true
            }
        }
    }

    /// Exact membership: is `v` a rational linear combination of the rows?
    pub fn contains(&self, v: &[BigInt]) -> bool {
        assert_eq!(v.len(), self.cols, "row length must match column count");
        let mut v = v.to_vec();
        self.reduce(&mut v);
        v.iter().all(|x| x.is_zero())
    }
}

/// Divides out the gcd of the entries and makes the leading entry positive.
fn normalize(v: &mut [BigInt]) {
    let one = BigInt::from(1);
    let mut content = BigInt::zero();
    for x in v.iter() {
        if !x.is_zero() {
            content = content.gcd(x);
            if content == one {
                break;
            }
        }
    }
    if content.is_zero() {
        return;
    }
    let leading_negative = v
        .iter()
        .find(|x| !x.is_zero())
        .map(|x| x.is_negative())
        .unwrap_or(false);
    if content == one && !leading_negative {
        return;
    }
    if leading_negative {
        content = -content;
    }
    for x in v.iter_mut() {
        *x = &*x / &content;
    }
}

/// Rank of a list of integer rows.
pub fn rank_of_rows(cols: usize, rows: impl IntoIterator<Item = Vec<BigInt>>) -> usize {
    let mut space = IntRowSpace::new(cols);
    for row in rows {
        space.insert(row);
    }
    space.rank()
}

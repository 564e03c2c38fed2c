//! Dense matrices over GF(q).
//!
//! Column indices in public results (pivots, supports) are 1-based.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{Elem, FiniteField};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Arc<FiniteField>,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

/// Result of a reduced row echelon computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    /// Pivot columns, 1-based and ascending.
    pub pivots: Vec<usize>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{} over {:?} [", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn new(field: Arc<FiniteField>, rows: usize, cols: usize, data: Vec<Elem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        if let Some(e) = data.iter().find(|e| e.index() >= field.q()) {
            return Err(Error::ElementOutOfRange { index: e.index() as u64, q: field.q() });
        }
        Ok(Self { field, rows, cols, data })
    }

    pub fn zeros(field: Arc<FiniteField>, rows: usize, cols: usize) -> Self {
        Self { field, rows, cols, data: vec![Elem::ZERO; rows * cols] }
    }

    pub fn identity(field: Arc<FiniteField>, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Elem::ONE);
        }
        m
    }

    /// Builds a matrix from rows of element indices.
    pub fn from_rows<R: AsRef<[u32]>>(field: Arc<FiniteField>, rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
            for &v in r {
                data.push(field.elem(v as u64)?);
            }
        }
        Ok(Self { field, rows: rows.len(), cols, data })
    }

    pub(crate) fn from_raw(field: Arc<FiniteField>, rows: usize, cols: usize, data: Vec<Elem>) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        Self { field, rows, cols, data }
    }

    #[inline]
    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn data(&self) -> &[Elem] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|e| e.index()).collect()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field.clone(), self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    /// Columns by 0-based index, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for i in 0..self.rows {
            for &c in cols {
                data.push(self.get(i, c));
            }
        }
        Matrix::from_raw(self.field.clone(), self.rows, cols.len(), data)
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        Matrix::from_raw(self.field.clone(), rows.len(), self.cols, data)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!("cannot stack {} and {} columns", self.cols, other.cols)));
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix::from_raw(self.field.clone(), self.rows + other.rows, self.cols, data))
    }

    pub fn mat_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let f = &*self.field;
        let mut out = Matrix::zeros(self.field.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(l, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Gauss-Jordan elimination to the unique reduced row echelon form.
    pub fn rref(&self) -> Rref {
        let (matrix, pivots0) = self.rref_with_pivots();
        Rref { rank: pivots0.len(), pivots: pivots0.iter().map(|c| c + 1).collect(), matrix }
    }

    pub(crate) fn rref_with_pivots(&self) -> (Matrix, Vec<usize>) {
        let f = &*self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, pr);
            let inv = f.inv(m.get(row, col)).expect("pivot is nonzero");
            m.scale_row(row, inv);
            for r in 0..m.rows {
                if r != row {
                    let factor = m.get(r, col);
                    if !factor.is_zero() {
                        m.add_scaled_row(r, row, f.neg(factor));
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    /// Basis of `{v : M v^T = 0}` as the rows of a `(cols - rank) x cols` matrix.
    pub fn right_kernel_basis(&self) -> Matrix {
        let f = &*self.field;
        let (r, pivots) = self.rref_with_pivots();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(self.field.clone(), free.len(), self.cols);
        for (t, &fc) in free.iter().enumerate() {
            out.set(t, fc, Elem::ONE);
            for (i, &pc) in pivots.iter().enumerate() {
                out.set(t, pc, f.neg(r.get(i, fc)));
            }
        }
        out
    }

    /// Columns containing a nonzero entry, 1-based.
    pub fn support(&self) -> Vec<usize> {
        self.support0().into_iter().map(|c| c + 1).collect()
    }

    pub(crate) fn support0(&self) -> Vec<usize> {
        (0..self.cols).filter(|&j| (0..self.rows).any(|i| !self.get(i, j).is_zero())).collect()
    }

    pub fn support_size(&self) -> usize {
        (0..self.cols).filter(|&j| (0..self.rows).any(|i| !self.get(i, j).is_zero())).count()
    }

    /// True when both matrices span the same row space.
    pub fn same_row_space(&self, other: &Matrix) -> bool {
        if self.cols != other.cols || self.field != other.field {
            return false;
        }
        let a = self.rref();
        let b = other.rref();
        a.rank == b.rank && (0..a.rank).all(|i| a.matrix.row(i) == b.matrix.row(i))
    }

    /// True when every row of `other` lies in the row space of `self`.
    pub fn row_space_contains(&self, other: &Matrix) -> bool {
        match self.vstack(other) {
            Ok(stacked) => stacked.rank() == self.rank(),
            Err(_) => false,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn scale_row(&mut self, r: usize, c: Elem) {
        let f = self.field.clone();
        for v in &mut self.data[r * self.cols..(r + 1) * self.cols] {
            *v = f.mul(*v, c);
        }
    }

    /// row[dst] += c * row[src]
    fn add_scaled_row(&mut self, dst: usize, src: usize, c: Elem) {
        let f = self.field.clone();
        for j in 0..self.cols {
            let v = f.add(self.get(dst, j), f.mul(c, self.get(src, j)));
            self.set(dst, j, v);
        }
    }
}

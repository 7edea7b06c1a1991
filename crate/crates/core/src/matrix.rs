//! Dense matrices over [`Scalar`] with exact elimination.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

/// Result of a row reduction: the reduced matrix and its pivot columns.
struct Rref {
    reduced: Matrix,
    pivots: Vec<usize>,
}

impl Matrix {
    /// Row-major construction. Entries are promoted to a common conductor.
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::shape(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Self::promoted(rows, cols, entries))
    }

    fn promoted(rows: usize, cols: usize, mut entries: Vec<Scalar>) -> Self {
        let n = entries.iter().map(Scalar::conductor).fold(1u32, num_integer::lcm);
        if n > 1 {
            for e in entries.iter_mut() {
                if e.conductor() != n {
                    *e = e.promote(n).expect("lcm of conductors");
                }
            }
        }
        Matrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::shape("ragged rows"));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Integer matrix literal, mostly for tests and generators.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let v = rows
            .iter()
            .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
            .collect();
        Self::from_rows(v).expect("rectangular literal")
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self::promoted(rows, cols, entries)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Scalar::one();
        }
        m
    }

    /// The matrix unit with a single 1 at `(i, j)`.
    pub fn unit(rows: usize, cols: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(rows, cols);
        m.entries[i * cols + j] = Scalar::one();
        m
    }

    pub fn column_vector(v: Vec<Scalar>) -> Self {
        let n = v.len();
        Self::promoted(n, 1, v)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        let n = self.entries.first().map_or(1, Scalar::conductor);
        let idx = i * self.cols + j;
        if v.conductor() == n {
            self.entries[idx] = v;
        } else {
            self.entries[idx] = v;
            let entries = std::mem::take(&mut self.entries);
            *self = Self::promoted(self.rows, self.cols, entries);
        }
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let entries = self.entries.iter().map(|e| e * s).collect();
        Self::promoted(self.rows, self.cols, entries)
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch in add"
        );
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch in sub"
        );
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, other.rows,
            "cannot multiply {}x{} by {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = vec![Scalar::zero(); self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.entries[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.entries[k * other.cols + j];
                    if !b.is_zero() {
                        let slot = &mut out[i * other.cols + j];
                        *slot = &*slot + &(a * b);
                    }
                }
            }
        }
        Self::promoted(self.rows, other.cols, out)
    }

    /// Kronecker product: `(A⊗B)[i·rB + k, j·cB + l] = A[i,j]·B[k,l]`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (rb, cb) = (other.rows, other.cols);
        Matrix::from_fn(self.rows * rb, self.cols * cb, |r, c| {
            let a = self.get(r / rb, c / cb);
            if a.is_zero() {
                Scalar::zero()
            } else {
                a * other.get(r % rb, c % cb)
            }
        })
    }

    /// Block-diagonal matrix with the given blocks in order.
    pub fn block_diag(blocks: &[Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        let mut entries = std::mem::take(&mut out.entries);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    entries[(r0 + i) * cols + c0 + j] = b.get(i, j).clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        Self::promoted(rows, cols, entries)
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(parts: &[Matrix], cols: usize) -> Result<Matrix> {
        if parts.iter().any(|p| p.cols != cols) {
            return Err(Error::shape("vstack parts disagree on column count"));
        }
        let rows = parts.iter().map(|p| p.rows).sum();
        let entries = parts.iter().flat_map(|p| p.entries.iter().cloned()).collect();
        Ok(Self::promoted(rows, cols, entries))
    }

    /// Column j holds the matrices' columns side by side.
    pub fn hstack(parts: &[Matrix], rows: usize) -> Result<Matrix> {
        if parts.iter().any(|p| p.rows != rows) {
            return Err(Error::shape("hstack parts disagree on row count"));
        }
        let t: Vec<Matrix> = parts.iter().map(Matrix::transpose).collect();
        Ok(Matrix::vstack(&t, rows)?.transpose())
    }

    /// Reshapes into `rows x cols` keeping row-major order.
    pub fn reshape(&self, rows: usize, cols: usize) -> Result<Matrix> {
        Matrix::new(rows, cols, self.entries.clone())
    }

    fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..m.cols {
            if prow == m.rows {
                break;
            }
            let Some(found) = (prow..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if found != prow {
                for j in 0..m.cols {
                    m.entries.swap(found * m.cols + j, prow * m.cols + j);
                }
            }
            let inv = m.get(prow, col).inv().expect("pivot is nonzero");
            for j in col..m.cols {
                let idx = prow * m.cols + j;
                m.entries[idx] = &m.entries[idx] * &inv;
            }
            for r in 0..m.rows {
                if r == prow || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for j in col..m.cols {
                    let p = &m.entries[prow * m.cols + j];
                    if p.is_zero() {
                        continue;
                    }
                    let delta = &factor * p;
                    let idx = r * m.cols + j;
                    m.entries[idx] = &m.entries[idx] - &delta;
                }
            }
            pivots.push(col);
            prow += 1;
        }
        Rref { reduced: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the right null space as the columns of the result.
    ///
    /// One basis vector per non-pivot column of the reduced row echelon form,
    /// taken left to right, with a 1 in its own free coordinate. The basis is
    /// a deterministic function of the matrix.
    pub fn kernel(&self) -> Matrix {
        let Rref { reduced, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Matrix::zeros(self.cols, free.len());
        for (b, &fc) in free.iter().enumerate() {
            k.entries[fc * free.len() + b] = Scalar::one();
            for (row, &pc) in pivots.iter().enumerate() {
                let v = reduced.get(row, fc);
                if !v.is_zero() {
                    k.entries[pc * free.len() + b] = -v;
                }
            }
        }
        Self::promoted(k.rows, k.cols, k.entries)
    }

    /// Solves `A·X = B`. `None` when the system is inconsistent. When the
    /// solution is not unique the free variables are set to zero.
    pub fn solve(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows, "solve: row counts differ");
        let n = self.cols;
        let aug = Matrix::hstack(&[self.clone(), rhs.clone()], self.rows).expect("rows agree");
        let Rref { reduced, pivots } = aug.rref();
        if pivots.iter().any(|&p| p >= n) {
            return None;
        }
        let mut x = Matrix::zeros(n, rhs.cols);
        for (row, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.entries[pc * rhs.cols + j] = reduced.get(row, n + j).clone();
            }
        }
        Some(Self::promoted(x.rows, x.cols, x.entries))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() || self.rank() != self.rows {
            return None;
        }
        self.solve(&Matrix::identity(self.rows))
    }

    pub fn determinant(&self) -> Scalar {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let mut m = self.clone();
        let n = m.rows;
        let mut det = Scalar::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Scalar::zero();
            };
            if p != col {
                for j in 0..n {
                    m.entries.swap(p * n + j, col * n + j);
                }
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det = &det * &pivot;
            let inv = pivot.inv().expect("nonzero pivot");
            for r in col + 1..n {
                if m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col) * &inv;
                for j in col..n {
                    let delta = &factor * m.get(col, j);
                    let idx = r * n + j;
                    m.entries[idx] = &m.entries[idx] - &delta;
                }
            }
        }
        det
    }

    /// If `self = λ·I` for some λ, returns λ.
    pub fn scalar_multiple_of_identity(&self) -> Option<Scalar> {
        if !self.is_square() {
            return None;
        }
        let lambda = if self.rows == 0 {
            Scalar::one()
        } else {
            self.get(0, 0).clone()
        };
        (0..self.rows)
            .all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        *e == lambda
                    } else {
                        e.is_zero()
                    }
                })
            })
            .then_some(lambda)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

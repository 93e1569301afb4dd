use std::fmt;
use std::ops::{Index, IndexMut};

use super::scalar::{FieldSpec, Scalar};
use crate::error::{Error, Result};

/// Dense row-major matrix over a single field.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    data: Vec<Scalar>,
}

/// Result of Gauss-Jordan elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub rank: usize,
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, field, data: field.zeros(rows * cols) }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_fn(field: FieldSpec, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, field, data }
    }

    /// Build from rows, checking that every entry lives in `field`.
    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::InvalidInput("ragged matrix rows".into()));
            }
            for s in row {
                if s.field() != field {
                    return Err(Error::FieldMismatch(field, s.field()));
                }
                data.push(s);
            }
        }
        Ok(Matrix { rows: nrows, cols, field, data })
    }

    /// Integer entries, for tests and fixtures.
    pub fn from_ints(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_fn(field, rows.len(), cols, |i, j| field.int(rows[i][j]))
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: FieldSpec, nrows: usize, columns: &[Vec<Scalar>]) -> Self {
        Self::from_fn(field, nrows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| if i == j { self[(i, j)].is_one() } else { self[(i, j)].is_zero() }))
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Matrix product; panics on shape mismatch.
    pub fn matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matmul shape mismatch");
        assert_eq!(self.field, other.field, "matmul field mismatch");
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let cur = &out.data[i * other.cols + j];
                        out.data[i * other.cols + j] = cur + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "mul_vec shape mismatch");
        let mut out = self.field.zeros(self.rows);
        for (k, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = &self[(i, k)];
                if !a.is_zero() {
                    *o = &*o + &(a * x);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| &self[(i, j)] + &other[(i, j)])
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| &self[(i, j)] - &other[(i, j)])
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| &self[(i, j)] * c)
    }

    /// Kronecker product; index `(i*p + k, j*q + l)` holds `a_ij * b_kl`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (p, q) = (other.rows, other.cols);
        let mut out = Matrix::zeros(self.field, self.rows * p, self.cols * q);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..p {
                    for l in 0..q {
                        let b = &other[(k, l)];
                        if !b.is_zero() {
                            out[(i * p + k, j * q + l)] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// Stack `self` on top of `other`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { rows: self.rows + other.rows, cols: self.cols, field: self.field, data }
    }

    /// Place `other` to the right of `self`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        })
    }

    /// Reduced row-echelon form by Gauss-Jordan elimination.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let (rows, cols) = (m.rows, m.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().unwrap();
            let support: Vec<usize> = (c..cols).filter(|&j| !m[(r, j)].is_zero()).collect();
            for &j in &support {
                m[(r, j)] = &m[(r, j)] * &inv;
            }
            for i in 0..rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for &j in &support {
                    let d = &f * &m[(r, j)];
                    m[(i, j)] = &m[(i, j)] - &d;
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { rank: pivots.len(), reduced: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Basis of the null space `{x : self * x = 0}`, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let Rref { reduced, pivots, .. } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = self.field.zeros(self.cols);
                v[f] = self.field.one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -&reduced[(i, f)];
                }
                v
            })
            .collect()
    }

    /// Solve `self * x = b` exactly; free variables are set to zero.
    pub fn solve(&self, b: &Matrix) -> Result<Option<Matrix>> {
        if self.field != b.field {
            return Err(Error::FieldMismatch(self.field, b.field));
        }
        if self.rows != b.rows {
            return Err(Error::InvalidInput(format!(
                "solve: {} equations but right-hand side has {} rows",
                self.rows, b.rows
            )));
        }
        let Rref { reduced, pivots, .. } = self.hstack(b).rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(self.field, self.cols, b.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x[(p, j)] = reduced[(i, self.cols + j)].clone();
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let id = Matrix::identity(self.field, self.rows);
        let x = self.solve(&id).ok().flatten()?;
        (self.matmul(&x) == id).then_some(x)
    }

    pub fn determinant(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        let n = self.rows;
        let mut det = self.field.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return self.field.zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let piv = m[(c, c)].clone();
            det = &det * &piv;
            let inv = piv.inv().unwrap();
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] * &inv;
                for j in c..n {
                    let d = &f * &m[(c, j)];
                    m[(i, j)] = &m[(i, j)] - &d;
                }
            }
        }
        det
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|s| s.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Free-function form of [`Matrix::rref`].
pub fn rref(m: &Matrix) -> Rref {
    m.rref()
}

/// One exact solution of `a x = b`, or `None` if the system is inconsistent.
pub fn solve_linear(a: &Matrix, b: &Matrix) -> Result<Option<Matrix>> {
    a.solve(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rational;

    #[test]
    fn proportional_rows_have_rank_one() {
        assert_eq!(Matrix::from_ints(Q, &[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn identity_over_f5_has_full_rank() {
        let f5 = FieldSpec::Prime(5);
        let r = Matrix::identity(f5, 3).rref();
        assert_eq!(r.rank, 3);
        assert_eq!(r.pivots, vec![0, 1, 2]);
    }

    #[test]
    fn solve_identity_system() {
        let b = Matrix::from_rows(Q, vec![vec![Q.int(3)], vec![Q.ratio(5, 2).unwrap()]]).unwrap();
        let x = solve_linear(&Matrix::identity(Q, 2), &b).unwrap().unwrap();
        assert_eq!(x, b);
    }

    #[test]
    fn inconsistent_system_has_no_solution() {
        let a = Matrix::from_ints(Q, &[&[1, 1], &[1, 1]]);
        let b = Matrix::from_ints(Q, &[&[1], &[0]]);
        assert_eq!(solve_linear(&a, &b).unwrap(), None);
    }

    #[test]
    fn modular_solve() {
        let f7 = FieldSpec::Prime(7);
        let x = solve_linear(&Matrix::from_ints(f7, &[&[3]]), &Matrix::from_ints(f7, &[&[1]])).unwrap().unwrap();
        assert_eq!(x[(0, 0)], f7.int(5));
    }

    #[test]
    fn solve_rejects_mixed_fields() {
        let a = Matrix::identity(Q, 1);
        let b = Matrix::identity(FieldSpec::Prime(3), 1);
        assert!(matches!(solve_linear(&a, &b), Err(Error::FieldMismatch(..))));
        let bad = Matrix::from_rows(Q, vec![vec![FieldSpec::Prime(3).one()]]);
        assert!(matches!(bad, Err(Error::FieldMismatch(..))));
    }

    #[test]
    fn free_variables_are_zero() {
        let a = Matrix::from_ints(Q, &[&[1, 1, 0]]);
        let b = Matrix::from_ints(Q, &[&[2]]);
        let x = solve_linear(&a, &b).unwrap().unwrap();
        assert_eq!(x.column(0), vec![Q.int(2), Q.int(0), Q.int(0)]);
    }

    #[test]
    fn kernel_and_inverse() {
        let a = Matrix::from_ints(Q, &[&[1, 2, 3], &[2, 4, 6]]);
        let k = a.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(a.mul_vec(v).iter().all(Scalar::is_zero));
        }
        let m = Matrix::from_ints(Q, &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert!(m.matmul(&inv).is_identity());
        assert_eq!(m.determinant(), Q.int(1));
        assert!(Matrix::from_ints(Q, &[&[1, 2], &[2, 4]]).inverse().is_none());
    }
}

//! Dense 3-index tensors and helpers for vectors in tensor powers.
//!
//! A vector in `V_0 ⊗ … ⊗ V_{k-1}` is stored flat, row-major: the basis
//! tensor `e_{i_0} ⊗ … ⊗ e_{i_{k-1}}` sits at `((i_0·d_1 + i_1)·d_2 + …)`.

use crate::exactla::{FieldSpec, Matrix, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor3 {
    field: FieldSpec,
    dims: [usize; 3],
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(field: FieldSpec, dims: [usize; 3]) -> Self {
        Tensor3 { field, dims, data: field.zeros(dims[0] * dims[1] * dims[2]) }
    }

    pub fn from_fn(field: FieldSpec, dims: [usize; 3], mut f: impl FnMut(usize, usize, usize) -> Scalar) -> Self {
        let mut t = Self::zeros(field, dims);
        for i in 0..dims[0] {
            for j in 0..dims[1] {
                for k in 0..dims[2] {
                    t.set(i, j, k, f(i, j, k));
                }
            }
        }
        t
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    fn offset(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dims[1] + j) * self.dims[2] + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[self.offset(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let o = self.offset(i, j, k);
        self.data[o] = v;
    }

    /// Nonzero entries in lexicographic index order.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = ([usize; 3], &Scalar)> + '_ {
        let [_, d1, d2] = self.dims;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.is_zero())
            .map(move |(o, s)| ([o / (d1 * d2), (o / d2) % d1, o % d2], s))
    }

    /// Tensor with the index positions permuted: `out[p(i)] = self[i]`,
    /// i.e. `out.get(idx[perm[0]], idx[perm[1]], idx[perm[2]]) = self.get(idx)`.
    pub fn permuted(&self, perm: [usize; 3]) -> Tensor3 {
        let mut dims = [0; 3];
        for a in 0..3 {
            dims[perm[a]] = self.dims[a];
        }
        let mut out = Tensor3::zeros(self.field, dims);
        for (idx, s) in self.nonzero_entries() {
            let mut o = [0; 3];
            for a in 0..3 {
                o[perm[a]] = idx[a];
            }
            out.set(o[0], o[1], o[2], s.clone());
        }
        out
    }
}

/// Sparse columns of a matrix.
pub fn sparse_columns(m: &Matrix) -> Vec<Vec<(usize, Scalar)>> {
    let mut cols = vec![Vec::new(); m.cols()];
    for i in 0..m.rows() {
        for (j, s) in m.row(i).iter().enumerate() {
            if !s.is_zero() {
                cols[j].push((i, s.clone()));
            }
        }
    }
    cols
}

/// Apply `m` to the middle block of a vector in `k^outer ⊗ k^{m.cols} ⊗ k^inner`.
pub fn apply_block(v: &[Scalar], outer: usize, inner: usize, m: &Matrix) -> Vec<Scalar> {
    apply_block_sparse(v, outer, inner, m.cols(), m.rows(), &sparse_columns(m), m.field())
}

pub fn apply_block_sparse(
    v: &[Scalar],
    outer: usize,
    inner: usize,
    din: usize,
    dout: usize,
    cols: &[Vec<(usize, Scalar)>],
    field: FieldSpec,
) -> Vec<Scalar> {
    assert_eq!(v.len(), outer * din * inner, "apply_block: length mismatch");
    let mut out = field.zeros(outer * dout * inner);
    for (pos, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let a = pos / (din * inner);
        let b = (pos / inner) % din;
        let c = pos % inner;
        for (i, s) in &cols[b] {
            let o = (a * dout + i) * inner + c;
            out[o] = &out[o] + &(x * s);
        }
    }
    out
}

/// `a ⊗ b`.
pub fn outer(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let field = a.first().or(b.first()).map(Scalar::field).expect("outer of empty vectors");
    let mut out = field.zeros(a.len() * b.len());
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i * b.len() + j] = x * y;
            }
        }
    }
    out
}

/// Swap the two factors of a vector in `k^p ⊗ k^q`.
pub fn flip(v: &[Scalar], p: usize, q: usize) -> Vec<Scalar> {
    let mut out = v.to_vec();
    for i in 0..p {
        for j in 0..q {
            out[j * p + i] = v[i * q + j].clone();
        }
    }
    out
}

/// Reshape a vector in `k^p ⊗ k^q` into the `p × q` matrix of its coefficients.
pub fn as_matrix(v: &[Scalar], field: FieldSpec, p: usize, q: usize) -> Matrix {
    Matrix::from_fn(field, p, q, |i, j| v[i * q + j].clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rational;

    #[test]
    fn permutation_moves_indices() {
        let t = Tensor3::from_fn(Q, [2, 3, 4], |i, j, k| Q.int((100 * i + 10 * j + k) as i64));
        let p = t.permuted([1, 0, 2]);
        assert_eq!(p.dims(), [3, 2, 4]);
        assert_eq!(p.get(2, 1, 3), t.get(1, 2, 3));
    }

    #[test]
    fn apply_block_matches_kron() {
        let m = Matrix::from_ints(Q, &[&[1, 2], &[0, 1], &[3, 0]]);
        let v: Vec<Scalar> = (0..8).map(|i| Q.int(i)).collect();
        let direct = apply_block(&v, 2, 2, &m);
        let kron = Matrix::identity(Q, 2).kron(&m).kron(&Matrix::identity(Q, 2));
        assert_eq!(direct, kron.mul_vec(&v));
    }

    #[test]
    fn flip_is_involutive() {
        let v: Vec<Scalar> = (0..6).map(|i| Q.int(i)).collect();
        assert_eq!(flip(&flip(&v, 2, 3), 3, 2), v);
    }
}

use super::matrix::Matrix;
use super::scalar::{FieldSpec, Scalar};
use super::vector::is_zero_vec;
use crate::error::{Error, Result};

/// A subspace of `k^n`, stored by its reduced row-echelon basis.
///
/// The basis is canonical: two subspaces are equal iff their stored bases
/// are equal. Coordinates of a member are its entries at the pivot columns.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    field: FieldSpec,
    ambient_dim: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace { field, ambient_dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            field,
            ambient_dim,
            basis: (0..ambient_dim).map(|i| field.unit_vector(ambient_dim, i)).collect(),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of `vectors`, which must all have length `ambient_dim`.
    pub fn span(field: FieldSpec, ambient_dim: usize, vectors: &[Vec<Scalar>]) -> Result<Self> {
        let mut rows = Vec::new();
        for v in vectors {
            if v.len() != ambient_dim {
                return Err(Error::InvalidInput(format!(
                    "vector of length {} in ambient dimension {ambient_dim}",
                    v.len()
                )));
            }
            if let Some(s) = v.iter().find(|s| s.field() != field) {
                return Err(Error::FieldMismatch(field, s.field()));
            }
            if !is_zero_vec(v) {
                rows.push(v.clone());
            }
        }
        if rows.is_empty() {
            return Ok(Self::zero(field, ambient_dim));
        }
        let r = Matrix::from_rows(field, rows)?.rref();
        let basis = (0..r.rank).map(|i| r.reduced.row(i).to_vec()).collect();
        Ok(Subspace { field, ambient_dim, basis, pivots: r.pivots })
    }

    /// Column space of `m`.
    pub fn column_space(m: &Matrix) -> Self {
        Self::span(m.field(), m.rows(), &m.columns()).expect("columns have matching length")
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Ambient × dim matrix whose columns are the basis vectors.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_columns(self.field, self.ambient_dim, &self.basis)
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is not a member.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        (self.combine(&coords) == v).then_some(coords)
    }

    /// `Σ coords[a] · basis[a]`.
    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.field.zeros(self.ambient_dim);
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(b) {
                if !x.is_zero() {
                    *o = &*o + &(c * x);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Subspace::span(self.field, self.ambient_dim, &all).expect("same ambient space")
    }
}

/// `k^n / relations`, with explicit projection and section.
///
/// Quotient coordinates are indexed by the non-pivot columns of the
/// relation basis; the section sends the `i`-th quotient basis vector to
/// the standard basis vector at the `i`-th free column.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuotientSpace {
    pub ambient_dim: usize,
    pub relations: Subspace,
    pub projection: Matrix,
    pub section: Matrix,
}

impl QuotientSpace {
    pub fn dim(&self) -> usize {
        self.projection.rows()
    }

    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.projection.mul_vec(v)
    }

    pub fn lift(&self, q: &[Scalar]) -> Vec<Scalar> {
        self.section.mul_vec(q)
    }
}

/// Quotient of `k^ambient_dim` by the span of `relation_vectors`.
pub fn quotient_by(field: FieldSpec, ambient_dim: usize, relation_vectors: &[Vec<Scalar>]) -> Result<QuotientSpace> {
    let relations = Subspace::span(field, ambient_dim, relation_vectors)?;
    let free: Vec<usize> = (0..ambient_dim).filter(|c| !relations.pivots.contains(c)).collect();
    let q = free.len();
    let mut projection = Matrix::zeros(field, q, ambient_dim);
    let mut section = Matrix::zeros(field, ambient_dim, q);
    for (a, &f) in free.iter().enumerate() {
        projection[(a, f)] = field.one();
        section[(f, a)] = field.one();
    }
    // e_p for a pivot column p is congruent to e_p - row = -Σ_f row[f] e_f.
    for (row, &p) in relations.basis.iter().zip(&relations.pivots) {
        for (a, &f) in free.iter().enumerate() {
            if !row[f].is_zero() {
                projection[(a, p)] = -&row[f];
            }
        }
    }
    Ok(QuotientSpace { ambient_dim, relations, projection, section })
}

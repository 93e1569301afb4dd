//! Generators for test instances: groupoid and monoid algebras, function
//! algebras, matrix and split algebras, enveloping bialgebroids, and the
//! named fixtures used throughout the test suite.

mod groupoid;

pub use groupoid::{check_groupoid, Arrow, FiniteGroupoid};

use crate::algcore::{FinDimAlgebra, FinDimCoalgebra};
use crate::bialgebroid::{self, FsBialgebroid};
use crate::duality::dual_weak_bialgebra;
use crate::error::{Error, Result};
use crate::exactla::{FieldSpec, Matrix};
use crate::frobenius::{matrix_ifs, trace_ifs_commutative, FrobeniusSystem};
use crate::weakcore::WeakBialgebra;

/// Groupoid algebra: product is composition (zero when not composable),
/// every arrow grouplike, antipode `a ↦ a⁻¹`.
pub fn groupoid_algebra(g: &FiniteGroupoid, field: FieldSpec) -> Result<WeakBialgebra> {
    let report = check_groupoid(g);
    if !report.overall() {
        return Err(Error::InvalidGroupoid(report.failed_ids().join(", ")));
    }
    let n = g.len();
    let mut unit = field.zeros(n);
    for &i in &g.identities {
        unit[i] = field.one();
    }
    let algebra = FinDimAlgebra::from_products(field, n, unit, |a, b| match g.compose[a][b] {
        Some(c) => vec![(c, field.one())],
        None => vec![],
    })?;
    let coalgebra = FinDimCoalgebra::from_coproducts(field, n, vec![field.one(); n], |a| vec![((a, a), field.one())])?;
    let s = Matrix::from_fn(field, n, n, |i, j| if g.inverse[j] == i { field.one() } else { field.zero() });
    Ok(WeakBialgebra::new(algebra, coalgebra, Some(s))?.with_names(g.names()))
}

/// Functions on the arrows: the dual of the groupoid algebra.
pub fn groupoid_function_algebra(g: &FiniteGroupoid, field: FieldSpec) -> Result<WeakBialgebra> {
    let h = groupoid_algebra(g, field)?;
    let names: Vec<String> = g.names().iter().map(|n| format!("d{n}")).collect();
    Ok(dual_weak_bialgebra(&h)?.with_names(names))
}

/// Monoid algebra with grouplike basis from a multiplication table.
pub fn monoid_bialgebra(table: &[Vec<usize>], names: &[String], field: FieldSpec) -> Result<WeakBialgebra> {
    let m = table.len();
    if names.len() != m || table.iter().any(|r| r.len() != m || r.iter().any(|&x| x >= m)) {
        return Err(Error::InvalidInput("malformed monoid table".into()));
    }
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::NotAssociative((a, b, c)));
                }
            }
        }
    }
    let e = (0..m)
        .find(|&e| (0..m).all(|x| table[e][x] == x && table[x][e] == x))
        .ok_or_else(|| Error::InvalidInput("monoid table has no identity".into()))?;
    let algebra = FinDimAlgebra::from_products(field, m, field.unit_vector(m, e), |a, b| vec![(table[a][b], field.one())])?;
    let coalgebra = FinDimCoalgebra::from_coproducts(field, m, vec![field.one(); m], |a| vec![((a, a), field.one())])?;
    Ok(WeakBialgebra::new(algebra, coalgebra, None)?.with_names(names.to_vec()))
}

/// `M_n(k)` with matrix units `e_ij` at index `i·n + j`.
pub fn matrix_algebra(n: usize, field: FieldSpec) -> FinDimAlgebra {
    let mut unit = field.zeros(n * n);
    for i in 0..n {
        unit[i * n + i] = field.one();
    }
    FinDimAlgebra::from_products(field, n * n, unit, |p, q| {
        let (i, j, k, l) = (p / n, p % n, q / n, q % n);
        if j == k {
            vec![(i * n + l, field.one())]
        } else {
            vec![]
        }
    })
    .expect("consistent shape")
}

/// `k^n` with orthogonal idempotents `p_1, …, p_n`.
pub fn product_algebra(n: usize, field: FieldSpec) -> FinDimAlgebra {
    FinDimAlgebra::from_products(field, n, vec![field.one(); n], |i, j| {
        if i == j {
            vec![(i, field.one())]
        } else {
            vec![]
        }
    })
    .expect("consistent shape")
}

/// The enveloping bialgebroid `R ⊗ R^op` over `R` with IFS `s`:
/// `src(r) = r⊗1`, `tgt(r) = 1⊗r`, `Γ(r⊗s) = (r⊗1)⊗(1⊗s)` (normalised),
/// `C(r⊗s)(x) = rxs`. Basis `r_a ⊗ r_b` at index `a·dim R + b`.
pub fn enveloping_bialgebroid(r: &FinDimAlgebra, s: &FrobeniusSystem) -> Result<FsBialgebroid> {
    bialgebroid::enveloping(r, s)
}

/// Named fixtures.
pub mod fixtures {
    use super::*;

    pub fn pg2(field: FieldSpec) -> WeakBialgebra {
        groupoid_algebra(&FiniteGroupoid::pair(2), field).expect("pair groupoid")
    }

    pub fn pg3(field: FieldSpec) -> WeakBialgebra {
        groupoid_algebra(&FiniteGroupoid::pair(3), field).expect("pair groupoid")
    }

    /// Group algebra of `Z/2`, basis `1, u`.
    pub fn k2(field: FieldSpec) -> WeakBialgebra {
        groupoid_algebra(&FiniteGroupoid::cyclic(2), field).expect("cyclic group")
    }

    /// Monoid algebra of `{1, x}` with `x² = x`.
    pub fn mx(field: FieldSpec) -> WeakBialgebra {
        monoid_bialgebra(&[vec![0, 1], vec![1, 1]], &["1".into(), "x".into()], field).expect("monoid")
    }

    pub fn pg2_dual(field: FieldSpec) -> WeakBialgebra {
        groupoid_function_algebra(&FiniteGroupoid::pair(2), field).expect("pair groupoid")
    }

    pub fn pg3_dual(field: FieldSpec) -> WeakBialgebra {
        groupoid_function_algebra(&FiniteGroupoid::pair(3), field).expect("pair groupoid")
    }

    /// `k × k`.
    pub fn r2(field: FieldSpec) -> FinDimAlgebra {
        product_algebra(2, field)
    }

    /// `M_2(k)`.
    pub fn m2(field: FieldSpec) -> FinDimAlgebra {
        matrix_algebra(2, field)
    }

    /// Enveloping bialgebroid of `k × k` with the trace system.
    pub fn eb2(field: FieldSpec) -> FsBialgebroid {
        let r = r2(field);
        let s = trace_ifs_commutative(&r).expect("k x k is separable");
        enveloping_bialgebroid(&r, &s).expect("valid base")
    }

    /// Scaled-trace system `(2 tr, ½ Σ e_ij ⊗ e_ji)` on `M_2(k)`; needs characteristic ≠ 2.
    pub fn m2_scaled_trace(field: FieldSpec) -> FrobeniusSystem {
        matrix_ifs(2, &Matrix::identity(field, 2).scale(&field.int(2)), field).expect("char != 2")
    }

    /// Enveloping bialgebroid of `M_2(k)` with the scaled-trace system.
    pub fn ebm2(field: FieldSpec) -> FsBialgebroid {
        enveloping_bialgebroid(&m2(field), &m2_scaled_trace(field)).expect("valid base")
    }

    /// The weak bialgebra of the enveloping bialgebroid of `k × k`.
    pub fn eb2_weak(field: FieldSpec) -> WeakBialgebra {
        let l = eb2(field);
        let s = l.base.clone();
        bialgebroid::bialgebroid_to_weak(&l, &s).expect("valid bialgebroid")
    }

    /// Every weak bialgebra fixture, by name.
    pub fn all_weak(field: FieldSpec) -> Vec<(&'static str, WeakBialgebra)> {
        vec![
            ("PG2", pg2(field)),
            ("PG3", pg3(field)),
            ("K2", k2(field)),
            ("MX", mx(field)),
            ("PG2*", pg2_dual(field)),
            ("PG3*", pg3_dual(field)),
            ("EB2", eb2_weak(field)),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::algcore::check_algebra;
    use crate::weakcore::check_weak_bialgebra;

    const Q: FieldSpec = FieldSpec::Rational;

    #[test]
    fn matrix_and_product_algebras_are_associative() {
        assert!(check_algebra(&matrix_algebra(3, Q)).overall());
        assert!(check_algebra(&product_algebra(3, Q)).overall());
    }

    #[test]
    fn monoid_tables() {
        assert!(check_weak_bialgebra(&mx(Q)).overall());
        let bad = monoid_bialgebra(&[vec![0, 1], vec![1, 0]], &["a".into(), "b".into()], Q);
        assert!(bad.is_ok());
        // x·y = y everywhere except x·x = x, y·y = x: not associative
        let t = vec![vec![0, 1, 2], vec![1, 0, 1], vec![2, 2, 2]];
        assert!(matches!(
            monoid_bialgebra(&t, &["1".into(), "a".into(), "b".into()], Q),
            Err(Error::NotAssociative(_))
        ));
    }

    #[test]
    fn groupoid_algebras_pass() {
        let f5 = FieldSpec::prime(5).unwrap();
        for field in [Q, f5] {
            for h in [pg2(field), pg3(field), k2(field)] {
                assert!(check_weak_bialgebra(&h).overall());
            }
        }
        let u = FiniteGroupoid::cyclic(2).disjoint_union(&FiniteGroupoid::pair(2));
        assert!(check_weak_bialgebra(&groupoid_algebra(&u, Q).unwrap()).overall());
    }
}

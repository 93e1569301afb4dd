//! Antipodes: the weak Hopf axioms, the canonical map
//! `β: H ⊗_{H_s} H → Δ(1)(H⊗H)`, extraction of the antipode through its
//! inverse, the bialgebroid version, and the module criterion for
//! sub- and quotient weak bialgebras.

use crate::algcore::tensor::outer;
use crate::algcore::{CheckItem, CheckReport};
use crate::bialgebroid::{check_bialgebroid, FsBialgebroid, SparseProjector};
use crate::error::{Error, Result};
use crate::exactla::{quotient_by, FieldSpec, Matrix, QuotientSpace, Scalar, Subspace};
use crate::weakcore::{counital_data, WeakBialgebra};

/// `Σ c f(e_a)·g(e_b)` for `v = Σ c e_a⊗e_b`.
fn contract_with(h: &WeakBialgebra, v: &[Scalar], f: &Matrix, g: &Matrix) -> Vec<Scalar> {
    let n = h.dim();
    let fc = f.columns();
    let gc = g.columns();
    let mut out = h.field().zeros(n);
    for (idx, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let x = h.mul(&fc[idx / n], &gc[idx % n]);
        crate::exactla::vector::axpy(&mut out, c, &x);
    }
    out
}

/// Antipode axioms and their consequences, one item each, on all basis
/// elements: `antipode-left` (`S(h₁)h₂ = ε_s(h)`), `antipode-right`
/// (`h₁S(h₂) = ε_t(h)`), `antipode-middle` (`S(h₁)h₂S(h₃) = S(h)`),
/// `anti-multiplicative`, `unit`, `absorb-t` (`S(h₁)ε_t(h₂) = S(h)`),
/// `absorb-s` (`ε_s(h₁)S(h₂) = S(h)`), `reconstruction`
/// (`h₁⊗h₂S(h₃) = 1₁h⊗1₂`).
pub fn verify_antipode(h: &WeakBialgebra, s: &Matrix) -> CheckReport {
    let n = h.dim();
    let field = h.field();
    let mut report = CheckReport::new();
    let mut shape = CheckItem::new("shape");
    shape.record_bool(&[], s.rows() == n && s.cols() == n && s.field() == field);
    let cd = if shape.passed { counital_data(h).ok() } else { None };
    shape.record_bool(&[], cd.is_some());
    report.push(shape);
    let Some(cd) = cd else {
        return report;
    };
    let id = Matrix::identity(field, n);
    let a = &h.algebra;

    let mut left = CheckItem::new("antipode-left");
    let mut right = CheckItem::new("antipode-right");
    let mut middle = CheckItem::new("antipode-middle");
    let mut absorb_t = CheckItem::new("absorb-t");
    let mut absorb_s = CheckItem::new("absorb-s");
    let mut recon = CheckItem::new("reconstruction");
    let scols = s.columns();
    let d1 = h.delta_one();
    for i in 0..n {
        let x = h.basis(i);
        let d = h.delta(&x);
        left.record(&[i], &contract_with(h, &d, s, &id), &cd.eps_s.column(i));
        right.record(&[i], &contract_with(h, &d, &id, s), &cd.eps_t.column(i));
        absorb_t.record(&[i], &contract_with(h, &d, s, &cd.eps_t), &scols[i]);
        absorb_s.record(&[i], &contract_with(h, &d, &cd.eps_s, s), &scols[i]);

        let d2 = h.coalgebra.delta2(&x);
        let mut mid = field.zeros(n);
        let mut rec = field.zeros(n * n);
        for (idx, c) in d2.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (p, q, r) = (idx / (n * n), (idx / n) % n, idx % n);
            crate::exactla::vector::axpy(&mut mid, c, &a.mul3(&scols[p], &a.basis(q), &scols[r]));
            let right_factor = a.mul(&a.basis(q), &scols[r]);
            crate::exactla::vector::axpy(&mut rec, c, &outer(&a.basis(p), &right_factor));
        }
        middle.record(&[i], &mid, &scols[i]);
        let expect = a.mul_power(2, &d1, &outer(&x, a.unit()));
        recon.record(&[i], &rec, &expect);
    }

    let mut anti = CheckItem::new("anti-multiplicative");
    for i in 0..n {
        for j in 0..n {
            let lhs = s.mul_vec(&a.mul(&a.basis(i), &a.basis(j)));
            anti.record(&[i, j], &lhs, &a.mul(&scols[j], &scols[i]));
        }
    }
    let mut unit = CheckItem::new("unit");
    unit.record(&[], &s.mul_vec(a.unit()), a.unit());

    for item in [left, right, middle, anti, unit, absorb_t, absorb_s, recon] {
        report.push(item);
    }
    report
}

/// The canonical map `β₀(g⊗h) = g₁⊗g₂h`, induced on `H ⊗_{H_s} H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaData {
    pub domain: QuotientSpace,
    pub codomain: Subspace,
    /// `β₀` on `H⊗H`.
    pub beta0: Matrix,
    /// The induced map in quotient and codomain coordinates.
    pub matrix: Matrix,
    pub rank: usize,
    pub bijective: bool,
}

/// Relations `g·y⊗h − g⊗y·h` for `y` in a spanning set.
fn balancing(h_alg: &crate::algcore::FinDimAlgebra, ys: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let n = h_alg.dim();
    let mut rels = Vec::new();
    for y in ys {
        let ry = h_alg.right_mult(y);
        let ly = h_alg.left_mult(y);
        for g in 0..n {
            for k in 0..n {
                let v = outer(&ry.column(g), &h_alg.basis(k));
                let w = outer(&h_alg.basis(g), &ly.column(k));
                rels.push(crate::exactla::vector::sub_vec(&v, &w));
            }
        }
    }
    rels
}

/// Induce `map` (on `H⊗H`, landing in `codomain`) on the quotient, failing
/// when a relation has a nonzero image.
fn induce(map: &Matrix, domain: &QuotientSpace, codomain: &Subspace, what: &str) -> Result<Matrix> {
    for rel in domain.relations.basis() {
        if !crate::exactla::vector::is_zero_vec(&map.mul_vec(rel)) {
            return Err(Error::IllDefined(format!("{what} does not vanish on the balancing relations")));
        }
    }
    let cols = domain
        .section
        .columns()
        .iter()
        .map(|v| {
            codomain
                .coordinates(&map.mul_vec(v))
                .ok_or_else(|| Error::IllDefined(format!("{what} leaves its codomain")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(map.field(), codomain.dim(), &cols))
}

pub fn beta_map(h: &WeakBialgebra) -> Result<BetaData> {
    let cd = counital_data(h)?;
    let n = h.dim();
    let field = h.field();
    let a = &h.algebra;
    let domain = quotient_by(field, n * n, &balancing(a, cd.h_s.basis()))?;
    let d1 = h.delta_one();
    let d1_cols: Vec<Vec<Scalar>> = (0..n * n).map(|idx| a.mul_power(2, &d1, &field.unit_vector(n * n, idx))).collect();
    let codomain = Subspace::column_space(&Matrix::from_columns(field, n * n, &d1_cols));
    let cols: Vec<Vec<Scalar>> = (0..n * n)
        .map(|idx| a.mul_power(2, &h.delta(&a.basis(idx / n)), &outer(a.unit(), &a.basis(idx % n))))
        .collect();
    let beta0 = Matrix::from_columns(field, n * n, &cols);
    let matrix = induce(&beta0, &domain, &codomain, "beta")?;
    let rank = matrix.rank();
    let bijective = domain.dim() == codomain.dim() && rank == domain.dim();
    Ok(BetaData { domain, codomain, beta0, matrix, rank, bijective })
}

/// `S(h) = π β⁻¹(1₁h⊗1₂)` with `π(g⊗h) = ε_s(g)h`.
pub fn solve_antipode(h: &WeakBialgebra) -> Result<Matrix> {
    let beta = beta_map(h)?;
    if !beta.bijective {
        return Err(Error::NotHopf {
            domain_dim: beta.domain.dim(),
            codomain_dim: beta.codomain.dim(),
            rank: beta.rank,
        });
    }
    let cd = counital_data(h)?;
    let n = h.dim();
    let field = h.field();
    let a = &h.algebra;
    let pi_cols: Vec<Vec<Scalar>> =
        (0..n * n).map(|idx| a.mul(&cd.eps_s.column(idx / n), &a.basis(idx % n))).collect();
    let pi0 = Matrix::from_columns(field, n, &pi_cols);
    let pi = induce(&pi0, &beta.domain, &Subspace::full(field, n), "pi")?;
    let inv = beta.matrix.inverse().expect("bijective");
    let d1 = h.delta_one();
    let cols: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            let target = a.mul_power(2, &d1, &outer(&a.basis(i), a.unit()));
            let coords = beta.codomain.coordinates(&target).expect("1₁h⊗1₂ lies in Δ(1)(H⊗H)");
            pi.mul_vec(&inv.mul_vec(&coords))
        })
        .collect();
    let s = Matrix::from_columns(field, n, &cols);
    let report = verify_antipode(h, &s);
    if !report.overall() {
        return Err(Error::AxiomFailure { context: "solve_antipode".into(), report: Box::new(report) });
    }
    Ok(s)
}

/// Bijectivity of `g⊗h ↦ g⁽¹⁾⊗g⁽²⁾h` from `H ⊗_{tgt R} H` onto the image
/// of the projector.
pub fn check_tak_hopf(l: &FsBialgebroid) -> Result<bool> {
    if !check_bialgebroid(l).overall() {
        return Err(Error::InvalidInput("check_tak_hopf: input is not a bialgebroid".into()));
    }
    let n = l.dim();
    let field = l.field();
    let h = &l.total;
    let domain = quotient_by(field, n * n, &balancing(h, &l.tgt.columns()))?;
    let pm = l.projector();
    let codomain = Subspace::column_space(&pm);
    let p = SparseProjector::new(&pm);
    let gammas = l.gamma.columns();
    let cols: Vec<Vec<Scalar>> = (0..n * n)
        .map(|idx| p.apply(&h.mul_power(2, &gammas[idx / n], &outer(h.unit(), &h.basis(idx % n))), 1, 1))
        .collect();
    let map = Matrix::from_columns(field, n * n, &cols);
    let m = induce(&map, &domain, &codomain, "canonical map")?;
    Ok(domain.dim() == codomain.dim() && m.rank() == domain.dim())
}

/// Outcome of an isomorphism search between two modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleIso {
    /// An invertible intertwiner.
    Found(Matrix),
    /// No invertible intertwiner: exhaustive over `F_p`, or the intertwiner
    /// space is zero/has no invertible element among the candidates tried
    /// over `Q`.
    NotFound,
    /// Over `F_p` with too many candidates to exhaust.
    Undecided,
}

impl ModuleIso {
    pub fn is_found(&self) -> bool {
        matches!(self, ModuleIso::Found(_))
    }
}

const Q_SEARCH_CAP: usize = 20_000;

/// Intertwiners `f` with `f·A_k = B_k·f` for paired action matrices, as
/// `n×n` matrices.
pub fn intertwiners(field: FieldSpec, n: usize, left: &[Matrix], right: &[Matrix]) -> Vec<Matrix> {
    // unknown f_ij at i·n + j
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for (am, bm) in left.iter().zip(right) {
        for i in 0..n {
            for j in 0..n {
                let mut row = field.zeros(n * n);
                for k in 0..n {
                    row[i * n + k] = &row[i * n + k] + &am[(k, j)];
                    row[k * n + j] = &row[k * n + j] - &bm[(i, k)];
                }
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return (0..n * n).map(|idx| Matrix::from_fn(field, n, n, |i, j| if i * n + j == idx { field.one() } else { field.zero() })).collect();
    }
    let sys = Matrix::from_rows(field, rows).expect("uniform rows");
    sys.kernel()
        .into_iter()
        .map(|v| Matrix::from_fn(field, n, n, |i, j| v[i * n + j].clone()))
        .collect()
}

/// Search the intertwiner space for an invertible element.
pub fn find_module_isomorphism(field: FieldSpec, n: usize, left: &[Matrix], right: &[Matrix]) -> ModuleIso {
    let basis = intertwiners(field, n, left, right);
    let m = basis.len();
    if m == 0 {
        return ModuleIso::NotFound;
    }
    let id = Matrix::identity(field, n);
    let is_intertwiner = |f: &Matrix| left.iter().zip(right).all(|(a, b)| f.matmul(a) == b.matmul(f));
    if is_intertwiner(&id) {
        return ModuleIso::Found(id);
    }
    for f in &basis {
        if !f.determinant().is_zero() {
            return ModuleIso::Found(f.clone());
        }
    }
    let combine = |coeffs: &[i64]| {
        let mut f = Matrix::zeros(field, n, n);
        for (c, b) in coeffs.iter().zip(&basis) {
            if *c != 0 {
                f = f.add(&b.scale(&field.int(*c)));
            }
        }
        f
    };
    let (lo, hi, exhaustive) = match field {
        FieldSpec::Rational => (-2i64, 2i64, false),
        FieldSpec::Prime(p) => (0, p as i64 - 1, (m as u32) <= 4),
    };
    let mut coeffs = vec![lo; m];
    let mut tried = 0usize;
    loop {
        if coeffs.iter().any(|&c| c != 0) {
            let f = combine(&coeffs);
            if !f.determinant().is_zero() {
                return ModuleIso::Found(f);
            }
            tried += 1;
            if !exhaustive && tried >= Q_SEARCH_CAP {
                break;
            }
        }
        // odometer increment
        let mut k = 0;
        loop {
            if k == m {
                return if matches!(field, FieldSpec::Prime(_)) && !exhaustive {
                    ModuleIso::Undecided
                } else {
                    ModuleIso::NotFound
                };
            }
            coeffs[k] += 1;
            if coeffs[k] > hi {
                coeffs[k] = lo;
                k += 1;
            } else {
                break;
            }
        }
    }
    match field {
        FieldSpec::Rational => ModuleIso::NotFound,
        FieldSpec::Prime(_) => ModuleIso::Undecided,
    }
}

/// Whether `B` as a right `B_s`-module by multiplication is isomorphic to
/// `B` with `x·y = ε_t(y)x`. Under the hypothesis that `B` is a sub- or
/// quotient weak bialgebra of a weak Hopf algebra, this decides whether
/// `B` is itself weak Hopf.
pub fn sub_quotient_hopf_criterion(b: &WeakBialgebra) -> Result<ModuleIso> {
    let cd = counital_data(b)?;
    let a = &b.algebra;
    let mut left = Vec::new();
    let mut right = Vec::new();
    for y in cd.h_s.basis() {
        left.push(a.right_mult(y));
        right.push(a.left_mult(&cd.eps_t.mul_vec(y)));
    }
    Ok(find_module_isomorphism(b.field(), b.dim(), &left, &right))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebroid::weak_to_bialgebroid;
    use crate::duality::dual_weak_bialgebra;
    use crate::weakcore::check_weak_bialgebra;
    use crate::zoo::fixtures::*;

    const Q: FieldSpec = FieldSpec::Rational;

    #[test]
    fn groupoid_antipodes_verify() {
        let h = pg2(Q);
        assert!(verify_antipode(&h, h.antipode.as_ref().unwrap()).overall());
        let k = k2(Q);
        assert!(verify_antipode(&k, k.antipode.as_ref().unwrap()).overall());
    }

    #[test]
    fn identity_is_not_an_antipode_of_pg2() {
        let h = pg2(Q);
        let r = verify_antipode(&h, &Matrix::identity(Q, 4));
        let item = r.item("antipode-left").unwrap();
        assert!(!item.passed);
        // g21 composes with itself to nothing, while ε_s(g21) = g11
        assert_eq!(item.witness().unwrap().indices, vec![h.index_of("g21").unwrap()]);
        assert!(!r.passed("antipode-left"));
    }

    #[test]
    fn beta_dimensions() {
        let b = beta_map(&pg2(Q)).unwrap();
        assert_eq!((b.domain.dim(), b.codomain.dim(), b.bijective), (8, 8, true));
        let b = beta_map(&mx(Q)).unwrap();
        assert_eq!((b.domain.dim(), b.codomain.dim(), b.rank, b.bijective), (4, 4, 3, false));
        let b = beta_map(&k2(Q)).unwrap();
        assert_eq!((b.domain.dim(), b.bijective), (4, true));
    }

    #[test]
    fn solved_antipodes() {
        let h = pg2(Q);
        assert_eq!(&solve_antipode(&h).unwrap(), h.antipode.as_ref().unwrap());
        assert!(matches!(
            solve_antipode(&mx(Q)),
            Err(Error::NotHopf { domain_dim: 4, codomain_dim: 4, rank: 3 })
        ));
        let d = dual_weak_bialgebra(&h).unwrap();
        assert_eq!(solve_antipode(&d).unwrap(), h.antipode.as_ref().unwrap().transpose());
    }

    #[test]
    fn three_way_agreement_on_fixtures() {
        for field in [Q, FieldSpec::prime(3).unwrap()] {
            for (name, h) in all_weak(field) {
                assert!(check_weak_bialgebra(&h).overall(), "{name}");
                let beta = beta_map(&h).unwrap().bijective;
                let solved = solve_antipode(&h);
                let tak = check_tak_hopf(&weak_to_bialgebroid(&h).unwrap()).unwrap();
                assert_eq!(beta, solved.is_ok(), "{name}");
                assert_eq!(beta, tak, "{name}");
                if let (Ok(s), Some(given)) = (&solved, &h.antipode) {
                    assert_eq!(s, given, "{name}");
                }
            }
        }
    }

    #[test]
    fn enveloping_is_hopf() {
        assert!(check_tak_hopf(&eb2(Q)).unwrap());
    }

    #[test]
    fn criterion_examples() {
        let h = pg2(Q);
        assert!(sub_quotient_hopf_criterion(&h).unwrap().is_found());

        // Q×Q acting on Q² with multiplicities (2,0) and (1,1)
        let p1a = Matrix::from_ints(Q, &[&[1, 0], &[0, 1]]);
        let p2a = Matrix::from_ints(Q, &[&[0, 0], &[0, 0]]);
        let p1b = Matrix::from_ints(Q, &[&[1, 0], &[0, 0]]);
        let p2b = Matrix::from_ints(Q, &[&[0, 0], &[0, 1]]);
        assert_eq!(find_module_isomorphism(Q, 2, &[p1a, p2a], &[p1b, p2b]), ModuleIso::NotFound);
    }

    #[test]
    fn criterion_on_target_subalgebra() {
        // span{g11, g22} is the weak bialgebra k×k with grouplike idempotents
        let h = crate::zoo::groupoid_algebra(
            &crate::zoo::FiniteGroupoid::pair(1).disjoint_union(&crate::zoo::FiniteGroupoid::pair(1)),
            Q,
        )
        .unwrap();
        assert_eq!(sub_quotient_hopf_criterion(&h).unwrap(), ModuleIso::Found(Matrix::identity(Q, 2)));
    }
}

//! Small helpers on plain coefficient vectors.

use super::scalar::Scalar;

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn add_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vec(c: &Scalar, v: &[Scalar]) -> Vec<Scalar> {
    v.iter().map(|x| c * x).collect()
}

/// `acc += c * v`, skipping zero entries.
pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = &*a + &(c * x);
        }
    }
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut it = a.iter().zip(b);
    let (x0, y0) = it.next().expect("dot of empty vectors");
    let mut acc = x0 * y0;
    for (x, y) in it {
        if !x.is_zero() && !y.is_zero() {
            acc = &acc + &(x * y);
        }
    }
    acc
}

/// Indices and values of the nonzero entries.
pub fn nonzeros(v: &[Scalar]) -> impl Iterator<Item = (usize, &Scalar)> {
    v.iter().enumerate().filter(|(_, s)| !s.is_zero())
}

/// Nonzero entries of a difference, as reported in check witnesses.
pub fn sparse_diff(lhs: &[Scalar], rhs: &[Scalar]) -> Vec<(usize, Scalar)> {
    lhs.iter()
        .zip(rhs)
        .enumerate()
        .filter_map(|(i, (a, b))| {
            let d = a - b;
            (!d.is_zero()).then_some((i, d))
        })
        .collect()
}

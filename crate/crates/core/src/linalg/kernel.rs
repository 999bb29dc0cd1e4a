use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::SparseMat;
use crate::scalars::Field;
use crate::{Error, Result};

/// Reduced row echelon form: the pivot rows (each normalized so the pivot is
/// 1 and every other pivot column is 0) and their pivot columns, ascending.
pub struct Rref<F> {
    pub pivots: Vec<usize>,
    pub rows: Vec<BTreeMap<usize, F>>,
    pub cols: usize,
}

fn axpy<F: Field>(target: &mut BTreeMap<usize, F>, factor: &F, source: &BTreeMap<usize, F>) {
    for (c, v) in source {
        let term = factor.mul(v);
        match target.get_mut(c) {
            Some(slot) => {
                *slot = slot.sub(&term);
                if slot.is_zero() {
                    target.remove(c);
                }
            }
            None => {
                target.insert(*c, term.neg());
            }
        }
    }
}

/// Row reduction over a field. The result is the (unique) reduced row
/// echelon form, so it does not depend on pivot-selection heuristics.
pub fn rref<F: Field>(a: &SparseMat<F>) -> Rref<F> {
    let mut pending: Vec<BTreeMap<usize, F>> = (0..a.rows())
        .map(|r| a.row(r).clone())
        .filter(|row| !row.is_empty())
        .collect();
    let mut done: Vec<(usize, BTreeMap<usize, F>)> = Vec::new();
    loop {
        // next pivot column = smallest leading column among pending rows
        let Some(col) = pending.iter().filter_map(|r| r.keys().next().copied()).min() else {
            break;
        };
        let (best, _) = pending
            .iter()
            .enumerate()
            .filter(|(_, r)| r.keys().next() == Some(&col))
            .map(|(i, r)| (i, r.values().map(|v| v.weight()).sum::<usize>()))
            .min_by_key(|&(i, w)| (w, i))
            .expect("pivot column has a row");
        let mut prow = pending.swap_remove(best);
        let inv = prow[&col].inv().expect("pivot is nonzero");
        for v in prow.values_mut() {
            *v = v.mul(&inv);
        }
        for row in pending.iter_mut() {
            if let Some(f) = row.get(&col).cloned() {
                axpy(row, &f, &prow);
            }
        }
        pending.retain(|r| !r.is_empty());
        for (_, row) in done.iter_mut() {
            if let Some(f) = row.get(&col).cloned() {
                axpy(row, &f, &prow);
            }
        }
        done.push((col, prow));
    }
    done.sort_by_key(|(c, _)| *c);
    Rref {
        pivots: done.iter().map(|(c, _)| *c).collect(),
        rows: done.into_iter().map(|(_, r)| r).collect(),
        cols: a.cols(),
    }
}

pub fn rank<F: Field>(a: &SparseMat<F>) -> usize {
    rref(a).pivots.len()
}

/// Basis of the right nullspace `{v : a v = 0}`.
///
/// One vector per free column, in increasing free-column order; the vector
/// for free column `f` has a 1 at `f` and 0 at every other free column.
pub fn kernel<F: Field>(a: &SparseMat<F>) -> Vec<Vec<F>> {
    let red = rref(a);
    let pivot_set: BTreeMap<usize, usize> = red.pivots.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let mut basis = Vec::new();
    for free in (0..red.cols).filter(|c| !pivot_set.contains_key(c)) {
        let mut v = vec![F::zero(); red.cols];
        v[free] = F::one();
        for (i, row) in red.rows.iter().enumerate() {
            if let Some(x) = row.get(&free) {
                v[red.pivots[i]] = x.neg();
            }
        }
        basis.push(v);
    }
    basis
}

/// Inverse of a square matrix; `None` if singular.
pub fn inverse<F: Field>(a: &SparseMat<F>) -> Result<Option<SparseMat<F>>> {
    let n = a.rows();
    if n != a.cols() {
        return Err(Error::ShapeMismatch {
            op: "inverse",
            left: a.shape(),
            right: a.shape(),
        });
    }
    let mut aug = SparseMat::zeros(n, 2 * n);
    aug.set_block(0, 0, a);
    aug.set_block(0, n, &SparseMat::identity(n));
    let red = rref(&aug);
    if red.pivots.len() < n || red.pivots[n - 1] != n - 1 {
        return Ok(None);
    }
    let mut inv = SparseMat::zeros(n, n);
    for (i, row) in red.rows.iter().take(n).enumerate() {
        for (c, v) in row.range(n..) {
            inv.set(i, c - n, v.clone());
        }
    }
    Ok(Some(inv))
}

/// Some solution of `a x = b`, or `None` if the system is inconsistent.
pub fn solve<F: Field>(a: &SparseMat<F>, b: &[F]) -> Result<Option<Vec<F>>> {
    if b.len() != a.rows() {
        return Err(Error::ShapeMismatch {
            op: "solve",
            left: a.shape(),
            right: (b.len(), 1),
        });
    }
    let n = a.cols();
    let mut aug = SparseMat::zeros(a.rows(), n + 1);
    aug.set_block(0, 0, a);
    for (r, v) in b.iter().enumerate() {
        aug.set(r, n, v.clone());
    }
    let red = rref(&aug);
    if red.pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = vec![F::zero(); n];
    for (i, row) in red.rows.iter().enumerate() {
        if let Some(v) = row.get(&n) {
            x[red.pivots[i]] = v.clone();
        }
    }
    Ok(Some(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{RatFunc, Ring};

    fn s() -> RatFunc {
        RatFunc::var()
    }

    #[test]
    fn rank_one_kernel() {
        let a = SparseMat::from_triplets(
            2,
            2,
            [(0, 0, RatFunc::one()), (0, 1, s()), (1, 0, s()), (1, 1, s().mul(&s()))],
        );
        let k = kernel(&a);
        assert_eq!(k, vec![vec![s().neg(), RatFunc::one()]]);
        assert!(a.apply(&k[0]).unwrap().iter().all(Ring::is_zero));
    }

    #[test]
    fn identity_has_trivial_kernel() {
        assert!(kernel(&SparseMat::<RatFunc>::identity(4)).is_empty());
    }

    #[test]
    fn inverse_roundtrip() {
        let a = SparseMat::from_triplets(
            2,
            2,
            [(0, 0, s()), (0, 1, RatFunc::one()), (1, 0, RatFunc::one()), (1, 1, s())],
        );
        let inv = inverse(&a).unwrap().unwrap();
        assert!(a.compose(&inv).unwrap().is_identity());
        let singular = SparseMat::from_triplets(2, 2, [(0, 0, s()), (1, 0, s())]);
        assert!(inverse(&singular).unwrap().is_none());
    }
}

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;

use crate::scalars::{RatFunc, Ring};
use crate::{Error, Result};

/// Sparse matrix over a commutative ring. Rows are ordered maps from column
/// to entry; zero entries are never stored, so structural equality is exact
/// equality.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMat<T> {
    rows: usize,
    cols: usize,
    data: Vec<BTreeMap<usize, T>>,
}

impl<T: Ring> SparseMat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMat {
            rows,
            cols,
            data: vec![BTreeMap::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = SparseMat::zeros(n, n);
        for i in 0..n {
            m.data[i].insert(i, T::one());
        }
        m
    }

    pub fn diagonal(entries: Vec<T>) -> Self {
        let n = entries.len();
        let mut m = SparseMat::zeros(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m.set(i, i, e);
        }
        m
    }

    pub fn from_triplets(rows: usize, cols: usize, triplets: impl IntoIterator<Item = (usize, usize, T)>) -> Self {
        let mut m = SparseMat::zeros(rows, cols);
        for (r, c, v) in triplets {
            m.add_to(r, c, &v);
        }
        m
    }

    /// Matrix whose columns are the given dense vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<T>]) -> Self {
        let mut m = SparseMat::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            for (r, v) in col.iter().enumerate() {
                m.set(r, c, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(BTreeMap::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> T {
        self.data[r].get(&c).cloned().unwrap_or_else(T::zero)
    }

    pub fn get_ref(&self, r: usize, c: usize) -> Option<&T> {
        self.data[r].get(&c)
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        assert!(r < self.rows && c < self.cols, "index out of range");
        if v.is_zero() {
            self.data[r].remove(&c);
        } else {
            self.data[r].insert(c, v);
        }
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &T) {
        if v.is_zero() {
            return;
        }
        let cur = self.get(r, c);
        self.set(r, c, cur.add(v));
    }

    pub fn row(&self, r: usize) -> &BTreeMap<usize, T> {
        &self.data[r]
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BTreeMap::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self
                .data
                .iter()
                .enumerate()
                .all(|(r, row)| row.len() == 1 && row.get(&r).is_some_and(T::is_one))
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> SparseMat<U> {
        SparseMat::from_triplets(self.rows, self.cols, self.entries().map(|(r, c, v)| (r, c, f(v))))
    }

    pub fn try_map<U: Ring>(&self, f: impl Fn(&T) -> Result<U>) -> Result<SparseMat<U>> {
        let mut out = SparseMat::zeros(self.rows, self.cols);
        for (r, c, v) in self.entries() {
            out.set(r, c, f(v)?);
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        SparseMat::from_triplets(self.cols, self.rows, self.entries().map(|(r, c, v)| (c, r, v.clone())))
    }

    pub fn scale(&self, k: &T) -> Self {
        if k.is_zero() {
            return SparseMat::zeros(self.rows, self.cols);
        }
        self.map(|v| v.mul(k))
    }

    fn check_same_shape(&self, other: &Self, op: &'static str) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::ShapeMismatch {
                op,
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other, "add")?;
        let mut out = self.clone();
        for (r, c, v) in other.entries() {
            out.add_to(r, c, v);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other, "sub")?;
        let mut out = self.clone();
        for (r, c, v) in other.entries() {
            out.add_to(r, c, &v.neg());
        }
        Ok(out)
    }

    /// `self · other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch {
                op: "compose",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut out = SparseMat::zeros(self.rows, other.cols);
        for (r, row) in self.data.iter().enumerate() {
            let mut acc: BTreeMap<usize, T> = BTreeMap::new();
            for (k, a) in row {
                for (c, b) in &other.data[*k] {
                    let term = a.mul(b);
                    match acc.get_mut(c) {
                        Some(slot) => *slot = slot.add(&term),
                        None => {
                            acc.insert(*c, term);
                        }
                    }
                }
            }
            acc.retain(|_, v| !v.is_zero());
            out.data[r] = acc;
        }
        Ok(out)
    }

    /// Kronecker product; `self` indexes the leftmost (slower) tensor slot.
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = SparseMat::zeros(self.rows * other.rows, self.cols * other.cols);
        for (r1, c1, a) in self.entries() {
            for (r2, c2, b) in other.entries() {
                out.set(r1 * other.rows + r2, c1 * other.cols + c2, a.mul(b));
            }
        }
        out
    }

    /// Matrix-vector product on a dense vector.
    pub fn apply(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch {
                op: "apply",
                left: self.shape(),
                right: (v.len(), 1),
            });
        }
        Ok(self
            .data
            .iter()
            .map(|row| {
                row.iter().fold(
                    T::zero(),
                    |acc, (c, a)| {
                        if v[*c].is_zero() {
                            acc
                        } else {
                            acc.add(&a.mul(&v[*c]))
                        }
                    },
                )
            })
            .collect())
    }

    /// Integer power of a square matrix (nonnegative exponent).
    pub fn pow(&self, e: usize) -> Result<Self> {
        let mut acc = SparseMat::identity(self.rows);
        for _ in 0..e {
            acc = acc.compose(self)?;
        }
        Ok(acc)
    }

    /// Sub-block `rows × cols` starting at `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        let mut out = SparseMat::zeros(rows, cols);
        for r in 0..rows {
            for (c, v) in self.data[r0 + r].range(c0..c0 + cols) {
                out.set(r, c - c0, v.clone());
            }
        }
        out
    }

    /// Place `m` with its top-left corner at `(r0, c0)`, overwriting.
    pub fn set_block(&mut self, r0: usize, c0: usize, m: &Self) {
        for r in 0..m.rows {
            for c in 0..m.cols {
                self.data[r0 + r].remove(&(c0 + c));
            }
        }
        for (r, c, v) in m.entries() {
            self.set(r0 + r, c0 + c, v.clone());
        }
    }

    /// First entry (row-major) where the two matrices differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize, T, T)> {
        if self.shape() != other.shape() {
            return Some((usize::MAX, usize::MAX, T::zero(), T::zero()));
        }
        for r in 0..self.rows {
            if self.data[r] == other.data[r] {
                continue;
            }
            let cols: alloc::collections::BTreeSet<usize> =
                self.data[r].keys().chain(other.data[r].keys()).copied().collect();
            for c in cols {
                let (a, b) = (self.get(r, c), other.get(r, c));
                if a != b {
                    return Some((r, c, a, b));
                }
            }
        }
        None
    }
}

impl SparseMat<RatFunc> {
    /// Evaluate every entry at a rational point.
    pub fn eval(&self, point: &BigRational) -> Result<SparseMat<BigRational>> {
        self.try_map(|v| v.eval(point))
    }
}

/// Tensor-slot helper: apply a `local` operator to the contiguous slots
/// starting at position `prefix` of a vector laid out as
/// `prefix ⊗ local_in ⊗ suffix` (dimensions of the flattened pieces).
pub fn apply_local<T: Ring>(local: &SparseMat<T>, prefix: usize, suffix: usize, v: &[T]) -> Result<Vec<T>> {
    let din = local.cols();
    let dout = local.rows();
    if v.len() != prefix * din * suffix {
        return Err(Error::ShapeMismatch {
            op: "apply_local",
            left: (dout, din),
            right: (v.len(), prefix * suffix),
        });
    }
    let mut out = vec![T::zero(); prefix * dout * suffix];
    for p in 0..prefix {
        for (r, row) in local.data.iter().enumerate() {
            for (c, a) in row {
                for x in 0..suffix {
                    let src = &v[(p * din + c) * suffix + x];
                    if src.is_zero() {
                        continue;
                    }
                    let dst = &mut out[(p * dout + r) * suffix + x];
                    *dst = dst.add(&a.mul(src));
                }
            }
        }
    }
    Ok(out)
}

/// Embed a local operator on adjacent slots as `Id_prefix ⊗ local ⊗ Id_suffix`.
pub fn embed<T: Ring>(local: &SparseMat<T>, prefix: usize, suffix: usize) -> SparseMat<T> {
    SparseMat::identity(prefix)
        .kron(local)
        .kron(&SparseMat::identity(suffix))
}

/// Place `local`, an operator on the tensor product of the factors listed
/// in `legs` (in that order), into the tensor product of all factors with
/// dimensions `dims`. The local operator must preserve the leg dimensions.
pub fn on_legs<T: Ring>(dims: &[usize], legs: &[usize], local: &SparseMat<T>) -> SparseMat<T> {
    let total: usize = dims.iter().product();
    let strides: Vec<usize> = (0..dims.len()).map(|i| dims[i + 1..].iter().product()).collect();
    let local_dims: Vec<usize> = legs.iter().map(|&l| dims[l]).collect();
    let mut out = SparseMat::zeros(total, total);
    for col in 0..total {
        let digit = |l: usize| (col / strides[l]) % dims[l];
        let lc = legs.iter().fold(0, |acc, &l| acc * dims[l] + digit(l));
        let base = col - legs.iter().map(|&l| digit(l) * strides[l]).sum::<usize>();
        for r in 0..local.rows() {
            let Some(v) = local.get_ref(r, lc) else {
                continue;
            };
            let mut rest = r;
            let mut row = base;
            for (i, &l) in legs.iter().enumerate().rev() {
                row += (rest % local_dims[i]) * strides[l];
                rest /= local_dims[i];
            }
            out.set(row, col, v.clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::RatFunc;

    fn s() -> RatFunc {
        RatFunc::var()
    }

    #[test]
    fn on_legs_matches_kron_and_permutes() {
        let a = SparseMat::from_triplets(2, 2, [(0, 1, s()), (1, 0, RatFunc::from_int(2)), (1, 1, s())]);
        let b = SparseMat::from_triplets(3, 3, [(2, 0, s()), (0, 0, RatFunc::one()), (1, 2, s())]);
        let ab = a.kron(&b);
        assert_eq!(on_legs(&[2, 3], &[0, 1], &ab), ab);
        assert_eq!(on_legs(&[2, 3, 2], &[0, 1], &ab), ab.kron(&SparseMat::identity(2)));
        // legs listed out of order act through the permuted factors
        let ba = b.kron(&a);
        assert_eq!(on_legs(&[2, 3], &[1, 0], &ba), ab);
        let mid = on_legs(&[2, 3, 2], &[0, 2], &a.kron(&a));
        assert_eq!(
            mid,
            a.kron(&SparseMat::identity(3))
                .kron(&a)
                .compose(&SparseMat::identity(12))
                .unwrap()
        );
    }

    #[test]
    fn kron_dimension_and_slot_convention() {
        let a = SparseMat::diagonal(vec![s(), RatFunc::one()]);
        let b = SparseMat::diagonal(vec![RatFunc::one(), s()]);
        let k = a.kron(&b);
        assert_eq!(k.shape(), (4, 4));
        let expected = SparseMat::diagonal(vec![s(), s().mul(&s()), RatFunc::one(), s()]);
        assert_eq!(k, expected);
        let big = SparseMat::<RatFunc>::identity(2).kron(&SparseMat::identity(3));
        assert_eq!(big.shape(), (6, 6));
    }

    #[test]
    fn identity_is_neutral_and_shapes_are_checked() {
        let a = SparseMat::from_triplets(2, 3, [(0, 1, s()), (1, 2, RatFunc::from_int(3))]);
        assert_eq!(SparseMat::identity(2).compose(&a).unwrap(), a);
        assert!(matches!(a.compose(&a), Err(Error::ShapeMismatch { .. })));
        assert!(a.add(&a.transpose()).is_err());
    }

    #[test]
    fn apply_local_matches_embedded_matrix() {
        let local = SparseMat::from_triplets(
            2,
            2,
            [(0, 1, s()), (1, 0, RatFunc::from_int(2)), (1, 1, RatFunc::one())],
        );
        let v: Vec<RatFunc> = (0..12).map(RatFunc::from_int).collect();
        let full = embed(&local, 3, 2);
        assert_eq!(apply_local(&local, 3, 2, &v).unwrap(), full.apply(&v).unwrap());
    }
}

use alloc::vec::Vec;

use crate::linalg::{embed, SparseMat};
use crate::rea::{x_inv_local, x_local, y_local, Conventions, ProductTables, YShape};
use crate::scalars::{RatFunc, Ring};
use crate::uqsl2::{braiding, braiding_inverse, Rep};
use crate::Result;

use super::space::{invariants, InvariantBasis};

/// The generators `T_i^{±1}`, `Y_i`, `X_i^{±1}` on the ambient space
/// `V^{⊗n} ⊗ A_{≤K}`. Vectors are indexed from 0, so `t[0]` is `T_1`.
#[derive(Clone, Debug)]
pub struct AmbientOps {
    pub n: usize,
    pub tables: ProductTables,
    pub conv: Conventions,
    pub t: Vec<SparseMat<RatFunc>>,
    pub t_inv: Vec<SparseMat<RatFunc>>,
    pub y: Vec<SparseMat<RatFunc>>,
    pub x: Vec<SparseMat<RatFunc>>,
    pub x_inv: Vec<SparseMat<RatFunc>>,
}

fn conjugate(a: &SparseMat<RatFunc>, b: &SparseMat<RatFunc>, c: &SparseMat<RatFunc>) -> SparseMat<RatFunc> {
    a.compose(b).unwrap().compose(c).unwrap()
}

/// `Y_1 = ` the chosen shape on slots 1 and 0, `Y_{i+1} = T_i Y_i T_i`.
pub fn y_generators(
    tables: &ProductTables,
    conv: Conventions,
    shape: YShape,
    t: &[SparseMat<RatFunc>],
) -> Vec<SparseMat<RatFunc>> {
    let prefix = 1 << t.len();
    let mut y = alloc::vec![embed(&y_local(&tables.layout, conv.y, shape), prefix, 1)];
    for (i, ti) in t.iter().enumerate() {
        let next = conjugate(ti, &y[i], ti);
        y.push(next);
    }
    y
}

impl AmbientOps {
    pub fn new(n: usize, k: usize, conv: Conventions, shape: YShape) -> Result<Self> {
        let tables = ProductTables::new(k, 1, conv.product);
        let dk = tables.layout.dim();
        let v = Rep::irrep(1);
        let (br, br_inv) = (braiding(&v, &v), braiding_inverse(&v, &v));
        let t: Vec<_> = (1..n)
            .map(|i| embed(&br, 1 << (n - i - 1), (1 << (i - 1)) * dk))
            .collect();
        let t_inv: Vec<_> = (1..n)
            .map(|i| embed(&br_inv, 1 << (n - i - 1), (1 << (i - 1)) * dk))
            .collect();
        let prefix = 1 << (n - 1);
        let y = y_generators(&tables, conv, shape, &t);
        let mut x = alloc::vec![embed(&x_local(&tables, conv)?, prefix, 1)];
        let mut x_inv = alloc::vec![embed(&x_inv_local(&tables, conv)?, prefix, 1)];
        for i in 0..n - 1 {
            x.push(conjugate(&t[i], &x[i], &t[i]));
            x_inv.push(conjugate(&t_inv[i], &x_inv[i], &t_inv[i]));
        }
        Ok(AmbientOps {
            n,
            tables,
            conv,
            t,
            t_inv,
            y,
            x,
            x_inv,
        })
    }

    pub fn dim(&self) -> usize {
        (1 << self.n) * self.tables.layout.dim()
    }

    /// `Ỹ = Y_1 ⋯ Y_n`.
    pub fn y_tilde(&self) -> SparseMat<RatFunc> {
        product(self.dim(), self.y.iter())
    }

    /// `X̃ = X_1 ⋯ X_n`.
    pub fn x_tilde(&self) -> SparseMat<RatFunc> {
        product(self.dim(), self.x.iter())
    }
}

/// Left-to-right product of a sequence of square matrices.
pub fn product<'a>(dim: usize, ops: impl Iterator<Item = &'a SparseMat<RatFunc>>) -> SparseMat<RatFunc> {
    ops.fold(SparseMat::identity(dim), |acc, m| acc.compose(m).unwrap())
}

/// An operator on `W`, exact on the basis vectors of layer at most
/// `K - x_degree`; columns above that are zero.
#[derive(Clone, Debug, PartialEq)]
pub struct WOperator {
    pub matrix: SparseMat<RatFunc>,
    pub x_degree: usize,
    /// First trusted basis column whose image left `W`, if any.
    pub escapes: Option<usize>,
}

/// Restrict an ambient operator of the given X-degree to `W`.
pub fn restrict(basis: &InvariantBasis, op: &SparseMat<RatFunc>, x_degree: usize) -> WOperator {
    let d = basis.dim();
    let mut matrix = SparseMat::zeros(d, d);
    let mut escapes = None;
    for (c, bv) in basis.vectors.iter().enumerate() {
        if bv.layer + x_degree > basis.k {
            continue;
        }
        let image = op.apply(&bv.vector).unwrap();
        if escapes.is_none() && !basis.contains(&image) {
            escapes = Some(c);
        }
        for (r, x) in basis.coordinates(&image).into_iter().enumerate() {
            if !x.is_zero() {
                matrix.set(r, c, x);
            }
        }
    }
    WOperator {
        matrix,
        x_degree,
        escapes,
    }
}

/// The generators restricted to `W`, indexed from 0.
#[derive(Clone, Debug)]
pub struct WOps {
    pub basis: InvariantBasis,
    pub t: Vec<WOperator>,
    pub t_inv: Vec<WOperator>,
    pub y: Vec<WOperator>,
    pub x: Vec<WOperator>,
    pub x_inv: Vec<WOperator>,
}

impl WOps {
    pub fn new(ambient: &AmbientOps) -> Self {
        Self::with_basis(ambient, invariants(ambient.n, ambient.tables.layout.max_layer()))
    }

    /// Restrict to a previously computed basis of `W` for the same `(n, K)`.
    pub fn with_basis(ambient: &AmbientOps, basis: InvariantBasis) -> Self {
        let all = |ops: &[SparseMat<RatFunc>], deg: usize| -> Vec<WOperator> {
            ops.iter().map(|m| restrict(&basis, m, deg)).collect()
        };
        WOps {
            t: all(&ambient.t, 0),
            t_inv: all(&ambient.t_inv, 0),
            y: all(&ambient.y, 0),
            x: all(&ambient.x, 1),
            x_inv: all(&ambient.x_inv, 1),
            basis,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    /// First column on the window `layer ≤ window` where two `W` matrices differ.
    pub fn first_difference(
        &self,
        lhs: &SparseMat<RatFunc>,
        rhs: &SparseMat<RatFunc>,
        window: i64,
    ) -> Option<(usize, usize, RatFunc, RatFunc)> {
        for (c, bv) in self.basis.vectors.iter().enumerate() {
            if bv.layer as i64 > window {
                continue;
            }
            for r in 0..self.dim() {
                let (a, b) = (lhs.get(r, c), rhs.get(r, c));
                if a != b {
                    return Some((r, c, a, b));
                }
            }
        }
        None
    }
}

/// `c · Id` on a space of dimension `d`.
pub fn scalar(d: usize, c: &RatFunc) -> SparseMat<RatFunc> {
    SparseMat::diagonal(alloc::vec![c.clone(); d])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w_ops(n: usize, k: usize) -> WOps {
        let a = AmbientOps::new(n, k, Conventions::default(), YShape::DoubleBraiding).unwrap();
        WOps::new(&a)
    }

    #[test]
    fn t_satisfies_the_hecke_quadratic_with_both_eigenvalues() {
        let w = w_ops(2, 2);
        let t = &w.t[0].matrix;
        let d = w.dim();
        let a = t.sub(&scalar(d, &RatFunc::var_pow(1))).unwrap();
        let b = t.add(&scalar(d, &RatFunc::var_pow(-3))).unwrap();
        assert!(a.compose(&b).unwrap().is_zero());
        assert!(!a.is_zero());
        assert!(!b.is_zero());
    }

    #[test]
    fn y_operators_commute_and_x_inverse_inverts() {
        let w = w_ops(2, 4);
        let (y1, y2) = (&w.y[0].matrix, &w.y[1].matrix);
        assert_eq!(y1.compose(y2).unwrap(), y2.compose(y1).unwrap());
        let id = SparseMat::identity(w.dim());
        for i in 0..2 {
            let p = w.x_inv[i].matrix.compose(&w.x[i].matrix).unwrap();
            assert!(w.first_difference(&p, &id, 2).is_none());
            let q = w.x[i].matrix.compose(&w.x_inv[i].matrix).unwrap();
            assert!(w.first_difference(&q, &id, 2).is_none());
        }
    }

    #[test]
    fn generators_preserve_w() {
        let w = w_ops(2, 3);
        for op in w.t.iter().chain(&w.y).chain(&w.x).chain(&w.x_inv) {
            assert!(op.escapes.is_none());
        }
    }
}

use alloc::vec::Vec;

use crate::linalg::{kernel, SparseMat};
use crate::rea::{layer_rep, Layout};
use crate::scalars::{RatFunc, Ring};
use crate::uqsl2::Rep;

/// `V_1^{⊗n}` as a module.
pub fn tensor_power_rep(n: usize) -> Rep {
    (1..n).fold(Rep::irrep(1), |acc, _| acc.tensor(&Rep::irrep(1)))
}

/// One basis vector of `W`: its layer, its ambient coordinates, and the
/// ambient index at which it has coordinate 1 while every other basis vector
/// of the same layer vanishes.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantVector {
    pub layer: usize,
    pub pivot: usize,
    pub vector: Vec<RatFunc>,
}

/// Basis of `W = (V_1^{⊗n} ⊗ A_{≤K})^inv`, layer by layer.
///
/// The ambient space is `V^{⊗n} ⊗ A_{≤K}` with ambient index
/// `v · dim(A_{≤K}) + a`; `V` slots are numbered `n, …, 1` from left to right
/// and `A` is slot 0.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantBasis {
    pub n: usize,
    pub k: usize,
    pub layout: Layout,
    pub vectors: Vec<InvariantVector>,
}

impl InvariantBasis {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn ambient_dim(&self) -> usize {
        (1usize << self.n) * self.layout.dim()
    }

    pub fn layer_dims(&self) -> Vec<usize> {
        let mut out = alloc::vec![0; self.k + 1];
        for v in &self.vectors {
            out[v.layer] += 1;
        }
        out
    }

    /// Layer of an ambient index.
    pub fn ambient_layer(&self, idx: usize) -> usize {
        self.layout.layer_of(idx % self.layout.dim())
    }

    /// Basis vectors as the columns of an ambient matrix.
    pub fn basis_matrix(&self) -> SparseMat<RatFunc> {
        let cols: Vec<Vec<RatFunc>> = self.vectors.iter().map(|v| v.vector.clone()).collect();
        SparseMat::from_columns(self.ambient_dim(), &cols)
    }

    /// Coordinates of an ambient vector assumed to lie in `W`, read off at
    /// the pivot indices.
    pub fn coordinates(&self, y: &[RatFunc]) -> Vec<RatFunc> {
        self.vectors.iter().map(|v| y[v.pivot].clone()).collect()
    }

    /// Whether `y` equals the combination of basis vectors given by its
    /// coordinates.
    pub fn contains(&self, y: &[RatFunc]) -> bool {
        let c = self.coordinates(y);
        let mut acc = alloc::vec![RatFunc::zero(); self.ambient_dim()];
        for (v, cv) in self.vectors.iter().zip(&c) {
            if cv.is_zero() {
                continue;
            }
            for (slot, x) in acc.iter_mut().zip(&v.vector) {
                if !x.is_zero() {
                    *slot = slot.add(&cv.mul(x));
                }
            }
        }
        acc.as_slice() == y
    }
}

/// Exact basis of the invariants of `V_1^{⊗n} ⊗ (V_m ⊗ V_m*)` for each layer
/// `m ≤ K`: the common kernel of `E` and `F` on the weight-zero subspace.
pub fn invariants(n: usize, k: usize) -> InvariantBasis {
    let layout = Layout::new(k);
    let dk = layout.dim();
    let vn = tensor_power_rep(n);
    let mut vectors = Vec::new();
    for m in 0..=k {
        let dm = Layout::layer_dim(m);
        let rep = vn.tensor(&layer_rep(m));
        let zero_weight = rep.weight_indices(0);
        let d = rep.dim();
        let mut stacked = SparseMat::zeros(2 * d, zero_weight.len());
        for (c, &col) in zero_weight.iter().enumerate() {
            for (r, x) in rep.e().transpose().row(col) {
                stacked.set(*r, c, x.clone());
            }
            for (r, x) in rep.f().transpose().row(col) {
                stacked.set(d + *r, c, x.clone());
            }
        }
        let to_ambient = |local: usize| (local / dm) * dk + layout.offset(m) + local % dm;
        for kv in kernel(&stacked) {
            let mut vector = alloc::vec![RatFunc::zero(); (1usize << n) * dk];
            for (c, x) in kv.into_iter().enumerate() {
                if !x.is_zero() {
                    vector[to_ambient(zero_weight[c])] = x;
                }
            }
            vectors.push((m, vector));
        }
    }
    let vectors = fix_pivots(vectors);
    InvariantBasis { n, k, layout, vectors }
}

fn fix_pivots(raw: Vec<(usize, Vec<RatFunc>)>) -> Vec<InvariantVector> {
    let mut out: Vec<InvariantVector> = Vec::new();
    let mut start = 0;
    while start < raw.len() {
        let layer = raw[start].0;
        let end = start + raw[start..].iter().take_while(|r| r.0 == layer).count();
        let group = &raw[start..end];
        for (i, (_, v)) in group.iter().enumerate() {
            let pivot = (0..v.len())
                .find(|&p| v[p].is_one() && group.iter().enumerate().all(|(j, (_, w))| j == i || w[p].is_zero()))
                .expect("kernel basis has a free column per vector");
            out.push(InvariantVector {
                layer,
                pivot,
                vector: v.clone(),
            });
        }
        start = end;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rea::Decomposition;

    /// `Σ_j mult(V_j, V_1^{⊗n}) · dim Hom(V_m, V_j ⊗ V_m)` per layer.
    fn cg_count(n: usize, k: usize) -> Vec<usize> {
        let decomp = Decomposition::tensor_power(n);
        (0..=k)
            .map(|m| decomp.parts.iter().filter(|p| p.j % 2 == 0 && p.j <= 2 * m).count())
            .collect()
    }

    #[test]
    fn dimensions_match_clebsch_gordan_counts() {
        let b = invariants(2, 2);
        assert_eq!(b.layer_dims(), alloc::vec![1, 2, 2]);
        assert_eq!(b.dim(), 5);
        let b = invariants(4, 2);
        assert_eq!(b.layer_dims(), alloc::vec![2, 5, 6]);
        assert_eq!(b.dim(), 13);
        for (n, k) in [(2, 4), (4, 3), (6, 1)] {
            assert_eq!(invariants(n, k).layer_dims(), cg_count(n, k));
        }
    }

    #[test]
    fn odd_tensor_powers_have_no_invariants() {
        for k in 0..4 {
            assert_eq!(invariants(1, k).dim(), 0);
            assert_eq!(invariants(3, k.min(2)).dim(), 0);
        }
    }

    #[test]
    fn basis_vectors_are_invariant_and_pivots_are_coordinates() {
        let b = invariants(2, 3);
        let vn = tensor_power_rep(2);
        let dk = b.layout.dim();
        for v in &b.vectors {
            let m = v.layer;
            let dm = Layout::layer_dim(m);
            let rep = vn.tensor(&layer_rep(m));
            let local: Vec<RatFunc> = (0..rep.dim())
                .map(|i| v.vector[(i / dm) * dk + b.layout.offset(m) + i % dm].clone())
                .collect();
            assert!(rep.e().apply(&local).unwrap().iter().all(Ring::is_zero));
            assert!(rep.f().apply(&local).unwrap().iter().all(Ring::is_zero));
            assert_eq!(rep.k().apply(&local).unwrap(), local);
            assert!(b.contains(&v.vector));
        }
        for (i, v) in b.vectors.iter().enumerate() {
            let mut expect = alloc::vec![RatFunc::zero(); b.dim()];
            expect[i] = RatFunc::one();
            assert_eq!(b.coordinates(&v.vector), expect);
        }
    }
}

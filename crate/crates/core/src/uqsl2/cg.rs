use alloc::vec::Vec;

use crate::linalg::{inverse, kernel, SparseMat};
use crate::scalars::{Field, RatFunc, Ring};

use super::rep::{qint, Rep};

/// One isotypic summand `V_j ⊂ V_a ⊗ V_b` with inclusion `ι_j` and the
/// projection `π_j` along the other summands (`π_j ι_j = 1`).
#[derive(Clone, Debug, PartialEq)]
pub struct CgComponent {
    pub j: usize,
    pub iota: SparseMat<RatFunc>,
    pub pi: SparseMat<RatFunc>,
}

/// Decomposition `V_a ⊗ V_b = ⊕_j V_j`, `j = a+b, a+b-2, …, |a-b|`.
///
/// Each highest-weight vector is normalized so its first nonzero coordinate
/// (largest left-slot weight) is 1; lower basis vectors follow from
/// `ι(v_{i+1}) = Δ(F) ι(v_i) / [j - i]`.
#[derive(Clone, Debug, PartialEq)]
pub struct CgDecomposition {
    pub a: usize,
    pub b: usize,
    pub components: Vec<CgComponent>,
}

impl CgDecomposition {
    pub fn new(a: usize, b: usize) -> Self {
        let t = Rep::irrep(a).tensor(&Rep::irrep(b));
        let n = t.dim();
        let top = a + b;
        let bottom = a.abs_diff(b);
        let mut columns: Vec<Vec<RatFunc>> = Vec::with_capacity(n);
        let mut spans = Vec::new();
        for j in (bottom..=top).rev().step_by(2) {
            let idx = t.weight_indices(j as i64);
            let restricted = SparseMat::from_columns(
                n,
                &idx.iter()
                    .map(|&c| (0..n).map(|r| t.e().get(r, c)).collect())
                    .collect::<Vec<_>>(),
            );
            let ker = kernel(&restricted);
            assert_eq!(ker.len(), 1, "highest-weight space of weight {j} is one-dimensional");
            let mut hw = alloc::vec![RatFunc::zero(); n];
            for (k, &c) in idx.iter().enumerate() {
                hw[c] = ker[0][k].clone();
            }
            let lead = hw.iter().find(|x| !x.is_zero()).unwrap().inv().unwrap();
            let mut v: Vec<RatFunc> = hw.iter().map(|x| x.mul(&lead)).collect();
            let start = columns.len();
            for i in 0..=j {
                columns.push(v.clone());
                if i < j {
                    let fi = t.f().apply(&v).unwrap();
                    let d = qint((j - i) as i64).inv().unwrap();
                    v = fi.iter().map(|x| x.mul(&d)).collect();
                }
            }
            spans.push((j, start));
        }
        let basis = SparseMat::from_columns(n, &columns);
        let inv = inverse(&basis).unwrap().expect("Clebsch-Gordan basis is invertible");
        let components = spans
            .into_iter()
            .map(|(j, start)| CgComponent {
                j,
                iota: basis.block(0, start, n, j + 1),
                pi: inv.block(start, 0, j + 1, n),
            })
            .collect();
        CgDecomposition { a, b, components }
    }

    pub fn component(&self, j: usize) -> Option<&CgComponent> {
        self.components.iter().find(|c| c.j == j)
    }
}

/// `V_m ⊗ V_1 = V_{m+1} ⊕ V_{m-1}`.
pub fn cg(m: usize) -> CgDecomposition {
    CgDecomposition::new(m, 1)
}

#[cfg(test)]
mod tests {
    use super::super::rep::Gen;
    use super::*;

    fn check_intertwiners(d: &CgDecomposition) {
        let (va, vb) = (Rep::irrep(d.a), Rep::irrep(d.b));
        let n = va.dim() * vb.dim();
        let mut sum = SparseMat::zeros(n, n);
        for c in &d.components {
            let vj = Rep::irrep(c.j);
            for g in Gen::ALL {
                let t = va.coproduct_action(&vb, g);
                assert_eq!(t.compose(&c.iota).unwrap(), c.iota.compose(&vj.act(g)).unwrap());
                assert_eq!(c.pi.compose(&t).unwrap(), vj.act(g).compose(&c.pi).unwrap());
            }
            assert!(c.pi.compose(&c.iota).unwrap().is_identity());
            for o in &d.components {
                if o.j != c.j {
                    assert!(c.pi.compose(&o.iota).unwrap().is_zero());
                }
            }
            sum = sum.add(&c.iota.compose(&c.pi).unwrap()).unwrap();
        }
        assert!(sum.is_identity());
    }

    #[test]
    fn cg_with_fundamental() {
        for m in 0..=8 {
            let d = cg(m);
            assert_eq!(d.components.len(), if m == 0 { 1 } else { 2 });
            check_intertwiners(&d);
            // top component starts at v0 ⊗ v0
            let top = d.component(m + 1).unwrap();
            assert!(top.iota.get(0, 0).is_one());
        }
    }

    #[test]
    fn general_pairs() {
        for a in 0..=3 {
            for b in 0..=3 {
                check_intertwiners(&CgDecomposition::new(a, b));
            }
        }
    }

    #[test]
    fn singlet_in_fundamental_square() {
        // V_1 ⊗ V_1: the invariant vector is v0⊗v1 - s^2 v1⊗v0 up to scale
        let d = CgDecomposition::new(1, 1);
        let c = d.component(0).unwrap();
        let col: Vec<RatFunc> = (0..4).map(|r| c.iota.get(r, 0)).collect();
        assert!(col[0].is_zero() && col[3].is_zero());
        assert_eq!(col[1], RatFunc::one());
        assert_eq!(col[2], RatFunc::var_pow(2).neg());
    }
}

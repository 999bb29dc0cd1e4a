use crate::linalg::SparseMat;
use crate::scalars::RatFunc;
use crate::uqsl2::{Gen, Rep};

use super::layout::Layout;

fn word_matrix(rep: &Rep, word: &[Gen]) -> SparseMat<RatFunc> {
    word.iter().fold(SparseMat::identity(rep.dim()), |acc, g| {
        acc.compose(&rep.act(*g)).unwrap()
    })
}

fn layer_diagonal(layout: &Layout, block: impl Fn(usize) -> SparseMat<RatFunc>) -> SparseMat<RatFunc> {
    let mut out = SparseMat::zeros(layout.dim(), layout.dim());
    for m in 0..=layout.max_layer() {
        let b = block(m);
        let o = layout.offset(m);
        for (r, c, v) in b.entries() {
            out.set(o + r, o + c, v.clone());
        }
    }
    out
}

/// `∂_◁`: the word acts on the v-slot `V_m` of every layer.
pub fn act_right(layout: &Layout, word: &[Gen]) -> SparseMat<RatFunc> {
    layer_diagonal(layout, |m| {
        word_matrix(&Rep::irrep(m), word).kron(&SparseMat::identity(m + 1))
    })
}

/// The word acts on the f-slot `V_m*` of every layer through the dual action.
pub fn act_left(layout: &Layout, word: &[Gen]) -> SparseMat<RatFunc> {
    layer_diagonal(layout, |m| {
        SparseMat::identity(m + 1).kron(&word_matrix(&Rep::irrep(m).dual(), word))
    })
}

/// Module structure of layer `m` as the tensor product `V_m ⊗ V_m*`.
pub fn layer_rep(m: usize) -> Rep {
    let v = Rep::irrep(m);
    v.tensor(&v.dual())
}

/// Adjoint action `ad x = Σ ∂_◁(x₁) · (x₂ on the f-slot)`.
pub fn ad_action(layout: &Layout, g: Gen) -> SparseMat<RatFunc> {
    let mut acc = SparseMat::zeros(layout.dim(), layout.dim());
    for (x1, x2) in g.coproduct() {
        let r = act_right(layout, x1.as_slice());
        let l = act_left(layout, x2.as_slice());
        acc = acc.add(&r.compose(&l).unwrap()).unwrap();
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::kernel;
    use crate::scalars::Ring;
    use alloc::vec::Vec;

    #[test]
    fn bimodule_actions_commute() {
        let l = Layout::new(3);
        for g in Gen::ALL {
            for h in Gen::ALL {
                let a = act_left(&l, &[g]);
                let b = act_right(&l, &[h]);
                assert_eq!(a.compose(&b).unwrap(), b.compose(&a).unwrap());
            }
        }
    }

    #[test]
    fn k_acts_diagonally() {
        let l = Layout::new(2);
        let r = act_right(&l, &[Gen::K]);
        assert_eq!(r.get(l.index(1, 0, 1), l.index(1, 0, 1)), RatFunc::var_pow(2));
        let f = act_left(&l, &[Gen::K]);
        // f-slot e_1* of V_1 has weight +1
        assert_eq!(f.get(l.index(1, 0, 1), l.index(1, 0, 1)), RatFunc::var_pow(2));
    }

    #[test]
    fn ad_matches_tensor_module_and_fixes_identity() {
        let l = Layout::new(3);
        for m in 0..=3 {
            let rep = layer_rep(m);
            let o = l.offset(m);
            let d = Layout::layer_dim(m);
            let mut id = alloc::vec![RatFunc::zero(); l.dim()];
            for i in 0..=m {
                id[l.index(m, i, i)] = RatFunc::one();
            }
            for g in Gen::ALL {
                let ad = ad_action(&l, g);
                assert_eq!(
                    ad.block(o, o, d, d),
                    Rep::irrep(m).coproduct_action(&Rep::irrep(m).dual(), g)
                );
                assert_eq!(ad.block(o, o, d, d), rep.act(g));
                let image = ad.apply(&id).unwrap();
                match g {
                    Gen::E | Gen::F => assert!(image.iter().all(Ring::is_zero)),
                    _ => assert_eq!(image, id),
                }
            }
            // the invariants of each layer form a line
            let stacked = {
                let e = rep.e().clone();
                let f = rep.f().clone();
                let mut s = SparseMat::zeros(2 * d, d);
                s.set_block(0, 0, &e);
                s.set_block(d, 0, &f);
                s
            };
            let ker: Vec<_> = kernel(&stacked);
            assert_eq!(ker.len(), 1);
        }
    }
}

use alloc::vec::Vec;

use crate::linalg::{inverse, solve, SparseMat};
use crate::scalars::{RatFunc, Ring};
use crate::uqsl2::{coev, Rep};
use crate::{Error, Result};

use super::layout::{LayeredElement, Layout};
use super::product::{product_blocks, signed_braiding, Decomposition, ProductTables};

/// Counit `ε(e_v ⊗ e_f*) = e_f*(K⁻¹ e_v)` on every layer of `layout`.
pub fn counit(layout: &Layout) -> Vec<RatFunc> {
    let mut out = alloc::vec![RatFunc::zero(); layout.dim()];
    for m in 0..=layout.max_layer() {
        for i in 0..=m {
            let weight = m as i64 - 2 * i as i64;
            out[layout.index(m, i, i)] = RatFunc::var_pow(-2 * weight);
        }
    }
    out
}

fn raw_coaction(rep: &Rep, decomp: &Decomposition, eps: i64, coeff_layout: &Layout) -> SparseMat<RatFunc> {
    let d = rep.dim();
    let with_coev = SparseMat::identity(d).kron(&coev(rep));
    let braided = signed_braiding(rep, rep, eps)
        .kron(&SparseMat::identity(d))
        .compose(&with_coev)
        .unwrap();
    SparseMat::identity(d)
        .kron(&decomp.push_matrix(coeff_layout))
        .compose(&braided)
        .unwrap()
}

/// `(1 ⊗ ε) ∘ δ` for the unnormalized coaction of `rep`.
pub fn curl(rep: &Rep, decomp: &Decomposition, eps: i64) -> SparseMat<RatFunc> {
    let full = Layout::new(decomp.max_j());
    let raw = raw_coaction(rep, decomp, eps, &full);
    let e = SparseMat::from_columns(
        1,
        &counit(&full).into_iter().map(|x| alloc::vec![x]).collect::<Vec<_>>(),
    );
    SparseMat::identity(rep.dim()).kron(&e).compose(&raw).unwrap()
}

/// Coaction `W → W ⊗ A`: `w ↦ Σ_k σ^{ε}(w ⊗ e_k) ⊗ e_k*`, with the
/// `W ⊗ W*` part pushed into the layers of `coeff_layout`, precomposed with
/// the inverse of its curl so that `(1 ⊗ ε) ∘ δ = 1`.
///
/// Rows are indexed by `w_out · dim(coeff_layout) + α`.
pub fn coaction_matrix(
    rep: &Rep,
    decomp: &Decomposition,
    eps: i64,
    coeff_layout: &Layout,
) -> Result<SparseMat<RatFunc>> {
    let c = curl(rep, decomp, eps);
    let c_inv = inverse(&c)?.ok_or_else(|| Error::InvalidArgument("coaction curl is singular".into()))?;
    Ok(raw_coaction(rep, decomp, eps, coeff_layout).compose(&c_inv).unwrap())
}

/// A degree-one coefficient: a vector in layer 1 (`V_1 ⊗ V_1*`).
pub type CoeffTensor = Vec<RatFunc>;

/// The entries of `L` for `V = V_1`: `δ(e_j) = Σ_i e_i ⊗ L[i][j]`.
pub fn l_entries(eps: i64) -> Vec<Vec<CoeffTensor>> {
    let lay = Layout::new(1);
    let delta = coaction_matrix(&Rep::irrep(1), &Decomposition::irrep(1), eps, &lay).unwrap();
    let dl = lay.dim();
    (0..2)
        .map(|i| {
            (0..2)
                .map(|j| (0..4).map(|b| delta.get(i * dl + lay.offset(1) + b, j)).collect())
                .collect()
        })
        .collect()
}

/// `c · e` for a degree-one coefficient `c`; the window shrinks by one.
pub fn mult_coeff(tables: &ProductTables, c: &CoeffTensor, e: &LayeredElement) -> Result<LayeredElement> {
    let window = e.window.shrink(1).require()?;
    let lay = &tables.layout;
    let flat = e.to_flat();
    let dk = lay.dim();
    let mut input = alloc::vec![RatFunc::zero(); 4 * dk];
    for (a, ca) in c.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (b, x) in flat.iter().enumerate() {
            input[a * dk + b] = ca.mul(x);
        }
    }
    let out = tables.left_mult(1).apply(&input)?;
    LayeredElement::from_flat(lay, &out, window)
}

/// Product of two degree-one coefficients, as a vector on `Layout::new(2)`.
pub fn coeff_product(c: &CoeffTensor, d: &CoeffTensor, eps: i64) -> Vec<RatFunc> {
    product_from_blocks(&product_blocks(1, 1, eps), &Layout::new(2), c, d)
}

/// Entries `b_{jl}` of the inverse of `L`: `Σ_j L_{ij} b_{jl} = δ_{il} · 1`.
///
/// Solved exactly over `Q(s)`; the result is checked to be a two-sided
/// inverse.
pub fn antipode_coeff(coaction: i64, product: i64) -> Result<Vec<Vec<CoeffTensor>>> {
    let l = l_entries(coaction);
    let lay = Layout::new(2);
    let blocks = product_blocks(1, 1, product);
    // column (j, l, beta) -> 16 unknowns; rows (i, l', output coordinate)
    let dl = lay.dim();
    let mut a = SparseMat::zeros(4 * dl, 16);
    let mut rhs = alloc::vec![RatFunc::zero(); 4 * dl];
    for i in 0..2 {
        for lcol in 0..2 {
            rhs[(i * 2 + lcol) * dl] = if i == lcol { RatFunc::one() } else { RatFunc::zero() };
            for j in 0..2 {
                for beta in 0..4 {
                    let mut unit = alloc::vec![RatFunc::zero(); 4];
                    unit[beta] = RatFunc::one();
                    let prod = product_from_blocks(&blocks, &lay, &l[i][j], &unit);
                    for (r, x) in prod.into_iter().enumerate() {
                        if !x.is_zero() {
                            a.add_to((i * 2 + lcol) * dl + r, (j * 2 + lcol) * 4 + beta, &x);
                        }
                    }
                }
            }
        }
    }
    let sol =
        solve(&a, &rhs)?.ok_or_else(|| Error::InvalidArgument("L has no inverse with degree-one entries".into()))?;
    let b: Vec<Vec<CoeffTensor>> = (0..2)
        .map(|j| {
            (0..2)
                .map(|lcol| sol[(j * 2 + lcol) * 4..(j * 2 + lcol) * 4 + 4].to_vec())
                .collect()
        })
        .collect();
    // two-sided check
    for i in 0..2 {
        for lcol in 0..2 {
            let mut acc = alloc::vec![RatFunc::zero(); dl];
            for j in 0..2 {
                let p = product_from_blocks(&blocks, &lay, &b[i][j], &l[j][lcol]);
                for (r, x) in p.into_iter().enumerate() {
                    acc[r] = acc[r].add(&x);
                }
            }
            let mut expect = alloc::vec![RatFunc::zero(); dl];
            if i == lcol {
                expect[0] = RatFunc::one();
            }
            if acc != expect {
                return Err(Error::InvalidArgument("solved inverse of L is only one-sided".into()));
            }
        }
    }
    Ok(b)
}

fn product_from_blocks(
    blocks: &[(usize, SparseMat<RatFunc>)],
    lay: &Layout,
    c: &CoeffTensor,
    d: &CoeffTensor,
) -> Vec<RatFunc> {
    let mut input = Vec::with_capacity(16);
    for x in c {
        for y in d {
            input.push(x.mul(y));
        }
    }
    let mut out = alloc::vec![RatFunc::zero(); lay.dim()];
    for (j, blk) in blocks {
        for (r, x) in blk.apply(&input).unwrap().into_iter().enumerate() {
            out[lay.offset(*j) + r] = x;
        }
    }
    out
}

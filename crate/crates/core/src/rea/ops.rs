use alloc::vec::Vec;

use crate::linalg::SparseMat;
use crate::scalars::{RatFunc, Ring};
use crate::uqsl2::{braiding, braiding_inverse, double_braiding_pow, r_matrix, Gen, Rep};
use crate::Result;

use super::coeff::{antipode_coeff, coaction_matrix, CoeffTensor};
use super::layout::Layout;
use super::product::{Decomposition, ProductTables};

/// Orientation choices for the braidings entering the construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Conventions {
    /// `σ` (`+1`) or `σ⁻¹` (`-1`) in the coaction `V → V ⊗ A`.
    pub coaction: i64,
    /// `σ` (`+1`) or `σ⁻¹` (`-1`) in the braided product of `A`.
    pub product: i64,
    /// `Y_1` is the double braiding (`+1`) or its inverse (`-1`).
    pub y: i64,
}

impl Default for Conventions {
    fn default() -> Self {
        Conventions {
            coaction: 1,
            product: -1,
            y: 1,
        }
    }
}

/// Shape of the operator placed on slot 1 and the M slot as `Y_1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum YShape {
    /// The (signed) double braiding of `V` with the `∂_◁`-slot of `M`.
    DoubleBraiding,
    /// Only `R_{01}`, a negative control.
    SingleR,
}

/// Per-layer transport `B = σ_{V_m, V_m*}` taking `V_m ⊗ V_m*` to `V_m* ⊗ V_m`.
fn transport(m: usize) -> (SparseMat<RatFunc>, SparseMat<RatFunc>) {
    let vm = Rep::irrep(m);
    let dual = vm.dual();
    (braiding(&vm, &dual), braiding_inverse(&vm, &dual))
}

/// `∂_◁(x)` on layer `m`: `x` acts on the f-slot moved in front by `B`,
/// `B⁻¹ (x ⊗ 1) B`.
pub fn dmodule_block(m: usize, x: &SparseMat<RatFunc>) -> SparseMat<RatFunc> {
    let (b, b_inv) = transport(m);
    b_inv
        .compose(&x.kron(&SparseMat::identity(m + 1)))
        .unwrap()
        .compose(&b)
        .unwrap()
}

/// `∂_◁` of a word in the generators, on all of `A_{≤K}`.
pub fn act_dmodule(layout: &Layout, word: &[Gen]) -> SparseMat<RatFunc> {
    lift_per_layer(layout, 1, |m| {
        let dual = Rep::irrep(m).dual();
        let x = word
            .iter()
            .fold(SparseMat::identity(m + 1), |acc, g| acc.compose(&dual.act(*g)).unwrap());
        dmodule_block(m, &x)
    })
}

/// Lift per-layer operators on `X ⊗ (V_m ⊗ V_m*)` (`X` of dimension
/// `d_left`) to `X ⊗ A_{≤K}`.
pub fn lift_per_layer(
    layout: &Layout,
    d_left: usize,
    block: impl Fn(usize) -> SparseMat<RatFunc>,
) -> SparseMat<RatFunc> {
    let dk = layout.dim();
    let mut out = SparseMat::zeros(d_left * dk, d_left * dk);
    for m in 0..=layout.max_layer() {
        let dm = Layout::layer_dim(m);
        let b = block(m);
        let place = |i: usize| (i / dm) * dk + layout.offset(m) + i % dm;
        for (r, c, v) in b.entries() {
            out.set(place(r), place(c), v.clone());
        }
    }
    out
}

/// `Y_1` on `V_1 ⊗ A_{≤K}`: the double braiding of `V_1` with the
/// `∂_◁`-slot of every layer.
pub fn y_local(layout: &Layout, sign: i64, shape: YShape) -> SparseMat<RatFunc> {
    let v = Rep::irrep(1);
    lift_per_layer(layout, 2, |m| {
        let dual = Rep::irrep(m).dual();
        let core = match shape {
            YShape::DoubleBraiding => double_braiding_pow(&v, &dual, sign),
            YShape::SingleR => r_matrix(&v, &dual),
        };
        let (b, b_inv) = transport(m);
        let id2 = SparseMat::identity(2);
        id2.kron(&b_inv)
            .compose(&core.kron(&SparseMat::identity(m + 1)))
            .unwrap()
            .compose(&id2.kron(&b))
            .unwrap()
    })
}

/// `X_1 = L_{01}` on `V_1 ⊗ A_{≤K}`: coact on `V_1`, then multiply the
/// new coefficient into `M`. Layers above `K` are dropped.
pub fn x_local(tables: &ProductTables, conv: Conventions) -> Result<SparseMat<RatFunc>> {
    coact_multiply(&Rep::irrep(1), &Decomposition::irrep(1), tables, conv)
}

/// `(1 ⊗ μ) ∘ (δ_W ⊗ 1)` on `W ⊗ A_{≤K}` for a module `W` with a
/// decomposition into irreducibles.
pub fn coact_multiply(
    rep: &Rep,
    decomp: &Decomposition,
    tables: &ProductTables,
    conv: Conventions,
) -> Result<SparseMat<RatFunc>> {
    let d = rep.dim();
    let coeff_layout = Layout::new(tables.a_max);
    let delta = coaction_matrix(rep, decomp, conv.coaction, &coeff_layout)?;
    let dk = tables.layout.dim();
    let lifted = delta.kron(&SparseMat::identity(dk));
    Ok(SparseMat::identity(d)
        .kron(&tables.full_mult())
        .compose(&lifted)
        .unwrap())
}

/// Left multiplication by a degree-one coefficient, as an operator on `A_{≤K}`.
pub fn coeff_operator(tables: &ProductTables, c: &CoeffTensor) -> SparseMat<RatFunc> {
    let dk = tables.layout.dim();
    let mut embed = SparseMat::zeros(4 * dk, dk);
    for (a, ca) in c.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for b in 0..dk {
            embed.set(a * dk + b, b, ca.clone());
        }
    }
    tables.left_mult(1).compose(&embed).unwrap()
}

/// `X_1⁻¹` on `V_1 ⊗ A_{≤K}` from the solved inverse of `L`:
/// `e_l ⊗ m ↦ Σ_j e_j ⊗ b_{jl} · m`.
pub fn x_inv_local(tables: &ProductTables, conv: Conventions) -> Result<SparseMat<RatFunc>> {
    let b = antipode_coeff(conv.coaction, conv.product)?;
    Ok(matrix_of_coeffs(tables, &b))
}

/// `e_l ⊗ m ↦ Σ_j e_j ⊗ c_{jl} · m`.
pub fn matrix_of_coeffs(tables: &ProductTables, c: &[Vec<CoeffTensor>]) -> SparseMat<RatFunc> {
    let dk = tables.layout.dim();
    let mut out = SparseMat::zeros(2 * dk, 2 * dk);
    for (j, row) in c.iter().enumerate() {
        for (l, cjl) in row.iter().enumerate() {
            let op = coeff_operator(tables, cjl);
            for (r, cc, v) in op.entries() {
                out.set(j * dk + r, l * dk + cc, v.clone());
            }
        }
    }
    out
}

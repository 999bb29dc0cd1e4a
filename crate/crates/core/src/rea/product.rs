use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::linalg::{embed, SparseMat};
use crate::scalars::{RatFunc, Ring};
use crate::uqsl2::{braiding, braiding_inverse, CgComponent, CgDecomposition, Rep};

use super::actions::layer_rep;
use super::layout::Layout;

/// A complete decomposition of a module into irreducibles:
/// `Σ ι_α π_α = 1` with `π_α ι_β = δ_{αβ}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition {
    pub dim: usize,
    pub parts: Vec<CgComponent>,
}

impl Decomposition {
    pub fn irrep(m: usize) -> Self {
        Decomposition {
            dim: m + 1,
            parts: alloc::vec![CgComponent {
                j: m,
                iota: SparseMat::identity(m + 1),
                pi: SparseMat::identity(m + 1),
            }],
        }
    }

    pub fn pair(a: usize, b: usize) -> Self {
        Decomposition {
            dim: (a + 1) * (b + 1),
            parts: CgDecomposition::new(a, b).components,
        }
    }

    /// `self ⊗ V_1`, refining every summand with the `V_j ⊗ V_1` decomposition.
    pub fn tensor_fundamental(&self) -> Self {
        let id2 = SparseMat::identity(2);
        let mut parts = Vec::new();
        for p in &self.parts {
            for c in CgDecomposition::new(p.j, 1).components {
                parts.push(CgComponent {
                    j: c.j,
                    iota: p.iota.kron(&id2).compose(&c.iota).unwrap(),
                    pi: c.pi.compose(&p.pi.kron(&id2)).unwrap(),
                });
            }
        }
        Decomposition {
            dim: self.dim * 2,
            parts,
        }
    }

    /// `V_1^{⊗n}`.
    pub fn tensor_power(n: usize) -> Self {
        (1..n).fold(Decomposition::irrep(1), |d, _| d.tensor_fundamental())
    }

    pub fn max_j(&self) -> usize {
        self.parts.iter().map(|p| p.j).max().unwrap_or(0)
    }

    /// Push `W ⊗ W*` to `A` using `c_{h, w} = Σ_α c_{h∘ι_α, π_α w}`.
    ///
    /// Columns are indexed by `w·dim + x` where `x` labels the dual basis
    /// vector `e_x*`; rows follow `layout`, and summands beyond its top
    /// layer are dropped.
    pub fn push_matrix(&self, layout: &Layout) -> SparseMat<RatFunc> {
        let d = self.dim;
        let mut out = SparseMat::zeros(layout.dim(), d * d);
        for p in &self.parts {
            if p.j > layout.max_layer() {
                continue;
            }
            for (r, w, a) in p.pi.entries() {
                for (x, i, b) in p.iota.entries() {
                    out.add_to(layout.index(p.j, r, i), w * d + x, &a.mul(b));
                }
            }
        }
        out
    }
}

/// `σ^{ε}` as a map `X ⊗ Y → Y ⊗ X`.
pub fn signed_braiding(x: &Rep, y: &Rep, eps: i64) -> SparseMat<RatFunc> {
    if eps >= 0 {
        braiding(x, y)
    } else {
        braiding_inverse(y, x)
    }
}

/// Permutation taking `V_a ⊗ V_b ⊗ V_b* ⊗ V_a*` to `W ⊗ W*` for `W = V_a ⊗ V_b`,
/// using `(V_a ⊗ V_b)* ≅ V_b* ⊗ V_a*`, `(g ⊗ f)(v ⊗ w) = f(v) g(w)`.
fn regroup(a: usize, b: usize) -> SparseMat<RatFunc> {
    let (da, db) = (a + 1, b + 1);
    let d = da * db;
    let mut out = SparseMat::zeros(d * d, d * d);
    for va in 0..da {
        for vb in 0..db {
            for gb in 0..db {
                for fa in 0..da {
                    let src = ((va * db + vb) * db + gb) * da + fa;
                    let w = va * db + vb;
                    let x = fa * db + gb;
                    out.set(w * d + x, src, RatFunc::one());
                }
            }
        }
    }
    out
}

/// Braided product `A_a ⊗ A_b → ⊕_j A_j`, one block per output layer `j`.
///
/// `(v ⊗ f) · (w ⊗ g)`: braid `f` past `w ⊗ g` with `σ^{ε}`, read the result
/// as a coefficient of `V_a ⊗ V_b`, and split it along the Clebsch-Gordan
/// summands.
pub fn product_blocks(a: usize, b: usize, eps: i64) -> Vec<(usize, SparseMat<RatFunc>)> {
    let da = a + 1;
    let braid = embed(&signed_braiding(&Rep::irrep(a).dual(), &layer_rep(b), eps), da, 1);
    let decomp = Decomposition::pair(a, b);
    let raw = regroup(a, b).compose(&braid).unwrap();
    let top = a + b;
    let layout = Layout::new(top);
    let pushed = decomp.push_matrix(&layout).compose(&raw).unwrap();
    (a.abs_diff(b)..=top)
        .step_by(2)
        .map(|j| {
            let o = layout.offset(j);
            (j, pushed.block(o, 0, Layout::layer_dim(j), pushed.cols()))
        })
        .collect()
}

/// Cached product blocks `μ_{a,b}` for `a ≤ a_max`, `b ≤ K`.
#[derive(Clone, Debug)]
pub struct ProductTables {
    pub eps: i64,
    pub layout: Layout,
    pub a_max: usize,
    blocks: BTreeMap<(usize, usize), Vec<(usize, SparseMat<RatFunc>)>>,
}

impl ProductTables {
    pub fn new(k: usize, a_max: usize, eps: i64) -> Self {
        let mut blocks = BTreeMap::new();
        for a in 0..=a_max {
            for b in 0..=k {
                blocks.insert((a, b), product_blocks(a, b, eps));
            }
        }
        ProductTables {
            eps,
            layout: Layout::new(k),
            a_max,
            blocks,
        }
    }

    pub fn blocks(&self, a: usize, b: usize) -> &[(usize, SparseMat<RatFunc>)] {
        &self.blocks[&(a, b)]
    }

    /// Left multiplication `A_a ⊗ A_{≤K} → A_{≤K}` (layers above `K` dropped).
    /// Columns are indexed by `α·dim(A_{≤K}) + β`.
    pub fn left_mult(&self, a: usize) -> SparseMat<RatFunc> {
        let l = &self.layout;
        let dk = l.dim();
        let da = Layout::layer_dim(a);
        let mut out = SparseMat::zeros(dk, da * dk);
        for b in 0..=l.max_layer() {
            let db = Layout::layer_dim(b);
            for (j, blk) in self.blocks(a, b) {
                if *j > l.max_layer() {
                    continue;
                }
                for (r, c, v) in blk.entries() {
                    let (alpha, beta) = (c / db, c % db);
                    out.set(l.offset(*j) + r, alpha * dk + l.offset(b) + beta, v.clone());
                }
            }
        }
        out
    }

    /// Multiplication `A_{≤a_max} ⊗ A_{≤K} → A_{≤K}`, columns indexed by
    /// `α·dim(A_{≤K}) + β` with `α` a flat index of `Layout::new(a_max)`.
    pub fn full_mult(&self) -> SparseMat<RatFunc> {
        let src = Layout::new(self.a_max);
        let dk = self.layout.dim();
        let mut out = SparseMat::zeros(dk, src.dim() * dk);
        for a in 0..=self.a_max {
            let lm = self.left_mult(a);
            for (r, c, v) in lm.entries() {
                out.set(r, (src.offset(a) + c / dk) * dk + c % dk, v.clone());
            }
        }
        out
    }
}

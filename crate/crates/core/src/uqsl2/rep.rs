use alloc::vec::Vec;

use crate::linalg::SparseMat;
use crate::scalars::{Field, RatFunc, Ring};

/// Generators of `U_q(sl_2)` acting on weight modules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    E,
    F,
    K,
    KInv,
}

impl Gen {
    pub const ALL: [Gen; 4] = [Gen::E, Gen::F, Gen::K, Gen::KInv];

    pub fn name(self) -> &'static str {
        match self {
            Gen::E => "E",
            Gen::F => "F",
            Gen::K => "K",
            Gen::KInv => "K^-1",
        }
    }

    /// `Δ(x) = Σ x₁ ⊗ x₂` with `Δ(E) = E⊗1 + K⊗E`, `Δ(F) = F⊗K⁻¹ + 1⊗F`,
    /// `Δ(K^{±1}) = K^{±1}⊗K^{±1}`. `None` stands for the unit.
    pub fn coproduct(self) -> &'static [(Option<Gen>, Option<Gen>)] {
        match self {
            Gen::E => &[(Some(Gen::E), None), (Some(Gen::K), Some(Gen::E))],
            Gen::F => &[(Some(Gen::F), Some(Gen::KInv)), (None, Some(Gen::F))],
            Gen::K => &[(Some(Gen::K), Some(Gen::K))],
            Gen::KInv => &[(Some(Gen::KInv), Some(Gen::KInv))],
        }
    }
}

/// `q = s²`.
pub fn q() -> RatFunc {
    RatFunc::var_pow(2)
}

/// Quantum integer `[n] = (qⁿ - q⁻ⁿ)/(q - q⁻¹)`, a Laurent polynomial in `s`.
pub fn qint(n: i64) -> RatFunc {
    let sign = if n < 0 { -1 } else { 1 };
    let n = n.abs();
    let mut acc = RatFunc::zero();
    for j in 0..n {
        acc = acc.add(&RatFunc::var_pow(2 * (n - 1 - 2 * j)));
    }
    acc.mul(&RatFunc::from_int(sign))
}

pub fn qfactorial(n: i64) -> RatFunc {
    (1..=n).fold(RatFunc::one(), |acc, j| acc.mul(&qint(j)))
}

/// A finite-dimensional weight module given by its weight basis and the
/// matrices of `E` and `F`; `K` acts diagonally by `q^{weight} = s^{2·weight}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Rep {
    weights: Vec<i64>,
    e: SparseMat<RatFunc>,
    f: SparseMat<RatFunc>,
}

impl Rep {
    pub fn new(weights: Vec<i64>, e: SparseMat<RatFunc>, f: SparseMat<RatFunc>) -> Self {
        let n = weights.len();
        assert_eq!(e.shape(), (n, n));
        assert_eq!(f.shape(), (n, n));
        Rep { weights, e, f }
    }

    /// The irreducible `V_m` on `v_0 (highest) … v_m (lowest)`:
    /// `E v_j = [j] v_{j-1}`, `F v_j = [m-j] v_{j+1}`, `K v_j = q^{m-2j} v_j`.
    pub fn irrep(m: usize) -> Rep {
        let n = m + 1;
        let mi = m as i64;
        let weights = (0..n as i64).map(|j| mi - 2 * j).collect();
        let mut e = SparseMat::zeros(n, n);
        let mut f = SparseMat::zeros(n, n);
        for j in 0..n {
            if j > 0 {
                e.set(j - 1, j, qint(j as i64));
            }
            if j < m {
                f.set(j + 1, j, qint(mi - j as i64));
            }
        }
        Rep { weights, e, f }
    }

    /// The trivial module.
    pub fn unit() -> Rep {
        Rep::irrep(0)
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn e(&self) -> &SparseMat<RatFunc> {
        &self.e
    }

    pub fn f(&self) -> &SparseMat<RatFunc> {
        &self.f
    }

    /// `K^p` for an integer power `p`.
    pub fn k_pow(&self, p: i64) -> SparseMat<RatFunc> {
        SparseMat::diagonal(self.weights.iter().map(|w| RatFunc::var_pow(2 * p * w)).collect())
    }

    pub fn k(&self) -> SparseMat<RatFunc> {
        self.k_pow(1)
    }

    pub fn k_inv(&self) -> SparseMat<RatFunc> {
        self.k_pow(-1)
    }

    pub fn act(&self, g: Gen) -> SparseMat<RatFunc> {
        match g {
            Gen::E => self.e.clone(),
            Gen::F => self.f.clone(),
            Gen::K => self.k(),
            Gen::KInv => self.k_inv(),
        }
    }

    pub fn act_opt(&self, g: Option<Gen>) -> SparseMat<RatFunc> {
        g.map_or_else(|| SparseMat::identity(self.dim()), |g| self.act(g))
    }

    /// Antipode image `S(g)` acting on this module:
    /// `S(E) = -K⁻¹E`, `S(F) = -FK`, `S(K^{±1}) = K^{∓1}`.
    pub fn act_antipode(&self, g: Gen) -> SparseMat<RatFunc> {
        let minus = RatFunc::from_int(-1);
        match g {
            Gen::E => self.k_inv().compose(&self.e).unwrap().scale(&minus),
            Gen::F => self.f.compose(&self.k()).unwrap().scale(&minus),
            Gen::K => self.k_inv(),
            Gen::KInv => self.k(),
        }
    }

    /// Dual module `V*` on the dual basis, `(x·φ)(v) = φ(S(x) v)`.
    pub fn dual(&self) -> Rep {
        Rep {
            weights: self.weights.iter().map(|w| -w).collect(),
            e: self.act_antipode(Gen::E).transpose(),
            f: self.act_antipode(Gen::F).transpose(),
        }
    }

    /// `self ⊗ other` through the fixed coproduct; `self` is the left slot.
    pub fn tensor(&self, other: &Rep) -> Rep {
        let ia = SparseMat::identity(self.dim());
        let ib = SparseMat::identity(other.dim());
        let e = self.e.kron(&ib).add(&self.k().kron(&other.e)).unwrap();
        let f = self.f.kron(&other.k_inv()).add(&ia.kron(&other.f)).unwrap();
        let weights = self
            .weights
            .iter()
            .flat_map(|a| other.weights.iter().map(move |b| a + b))
            .collect();
        Rep { weights, e, f }
    }

    /// Matrix of `Δ(g)` on `self ⊗ other`.
    pub fn coproduct_action(&self, other: &Rep, g: Gen) -> SparseMat<RatFunc> {
        let mut acc = SparseMat::zeros(self.dim() * other.dim(), self.dim() * other.dim());
        for (x1, x2) in g.coproduct() {
            acc = acc.add(&self.act_opt(*x1).kron(&other.act_opt(*x2))).unwrap();
        }
        acc
    }

    /// Indices of basis vectors of a given weight.
    pub fn weight_indices(&self, w: i64) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.weights[i] == w).collect()
    }

    /// Check `KEK⁻¹ = q²E`, `KFK⁻¹ = q⁻²F`, `[E,F] = (K-K⁻¹)/(q-q⁻¹)`.
    pub fn satisfies_relations(&self) -> bool {
        let k = self.k();
        let ki = self.k_inv();
        let q2 = q().mul(&q());
        let kek = k.compose(&self.e).unwrap().compose(&ki).unwrap();
        let kfk = k.compose(&self.f).unwrap().compose(&ki).unwrap();
        let comm = self
            .e
            .compose(&self.f)
            .unwrap()
            .sub(&self.f.compose(&self.e).unwrap())
            .unwrap();
        let denom = q().sub(&q().inv().unwrap()).inv().unwrap();
        let rhs = k.sub(&ki).unwrap().scale(&denom);
        kek == self.e.scale(&q2) && kfk == self.f.scale(&q2.inv().unwrap()) && comm == rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quantum_integers() {
        assert_eq!(qint(0), RatFunc::zero());
        assert_eq!(qint(1), RatFunc::one());
        assert_eq!(qint(2), RatFunc::var_pow(2).add(&RatFunc::var_pow(-2)));
        assert_eq!(qint(-3), qint(3).neg());
    }

    #[test]
    fn small_irreps() {
        let v1 = Rep::irrep(1);
        assert_eq!(
            v1.k(),
            SparseMat::diagonal(alloc::vec![RatFunc::var_pow(2), RatFunc::var_pow(-2)])
        );
        let v0 = Rep::irrep(0);
        assert!(v0.e().is_zero() && v0.f().is_zero() && v0.k().is_identity());
    }

    #[test]
    fn relations_hold_on_irreps_duals_and_tensors() {
        for m in 0..5 {
            let v = Rep::irrep(m);
            assert!(v.satisfies_relations(), "V_{m}");
            assert!(v.dual().satisfies_relations(), "V_{m}*");
        }
        let t = Rep::irrep(1).tensor(&Rep::irrep(2).dual());
        assert!(t.satisfies_relations());
    }
}

use alloc::format;

use num_rational::BigRational;

use crate::linalg::{embed, SparseMat};
use crate::report::{Outcome, Report};
use crate::scalars::{RatFunc, Ring};
use crate::uqsl2::{braiding, Rep};

/// The braiding `σ_{VV}` of the defining representation of `U_t(sl_N)` over
/// `Q(u)` with `t = u^N`.
#[derive(Clone, Debug, PartialEq)]
pub struct VectorRepR {
    pub n: usize,
    /// `N² × N²`, the coordinate of `e_i ⊗ e_j` is `i·N + j`.
    pub rhat: SparseMat<RatFunc>,
}

/// Jimbo's `Ř` with `q = u^N`, rescaled by `u⁻¹`:
/// `e_i ⊗ e_i ↦ u^{N-1} e_i ⊗ e_i`, and for `i < j`
/// `e_i ⊗ e_j ↦ u⁻¹ (e_j ⊗ e_i + (q - q⁻¹) e_i ⊗ e_j)`,
/// `e_j ⊗ e_i ↦ u⁻¹ e_i ⊗ e_j`.
pub fn rhat(n: usize) -> VectorRepR {
    let big_n = n as i64;
    let u_inv = RatFunc::var_pow(-1);
    let q = RatFunc::var_pow(big_n);
    let q_minus = q.sub(&RatFunc::var_pow(-big_n));
    let mut m = SparseMat::zeros(n * n, n * n);
    for i in 0..n {
        m.set(i * n + i, i * n + i, RatFunc::var_pow(big_n - 1));
        for j in i + 1..n {
            m.set(j * n + i, i * n + j, u_inv.clone());
            m.set(i * n + j, i * n + j, u_inv.mul(&q_minus));
            m.set(i * n + j, j * n + i, u_inv.clone());
        }
    }
    VectorRepR { n, rhat: m }
}

impl VectorRepR {
    /// The two Hecke roots `u^{N-1}` and `-u^{-N-1}`.
    pub fn hecke_roots(&self) -> (RatFunc, RatFunc) {
        let big_n = self.n as i64;
        (RatFunc::var_pow(big_n - 1), RatFunc::var_pow(-big_n - 1).neg())
    }

    /// `(σ - a)(σ - b)` for the Hecke roots `a`, `b`.
    pub fn hecke_residual(&self) -> SparseMat<RatFunc> {
        let (a, b) = self.hecke_roots();
        let d = self.n * self.n;
        let shift = |c: &RatFunc| self.rhat.sub(&SparseMat::diagonal(alloc::vec![c.clone(); d])).unwrap();
        shift(&a).compose(&shift(&b)).unwrap()
    }

    /// `σ₁σ₂σ₁ - σ₂σ₁σ₂` on `V^{⊗3}`.
    pub fn ybe_residual(&self) -> SparseMat<RatFunc> {
        let s1 = embed(&self.rhat, self.n, 1);
        let s2 = embed(&self.rhat, 1, self.n);
        let l = s1.compose(&s2).unwrap().compose(&s1).unwrap();
        let r = s2.compose(&s1).unwrap().compose(&s2).unwrap();
        l.sub(&r).unwrap()
    }
}

/// Hecke relation and YBE for `σ_{VV}`, its classical limit, and the
/// comparison with the `U_q(sl_2)` braiding at `N = 2`.
pub fn check_hecke(n: usize) -> Report {
    let r = rhat(n);
    let mut rep = Report::new(format!("Hecke condition for sl_{n}"));
    let big_n = n as i64;
    rep.fact("Hecke roots", format!("u^{}, -u^{}", big_n - 1, -big_n - 1));
    rep.push(Outcome::new(
        format!("(sigma - u^{})(sigma + u^{}) = 0", big_n - 1, -big_n - 1),
        None,
        r.hecke_residual().is_zero(),
        "",
    ));
    rep.push(Outcome::new(
        "sigma1 sigma2 sigma1 = sigma2 sigma1 sigma2",
        None,
        r.ybe_residual().is_zero(),
        "",
    ));
    let at_one = r.rhat.eval(&BigRational::from_integer(1.into())).unwrap();
    let flip = crate::uqsl2::flip(n, n).map(|x| x.eval(&BigRational::from_integer(1.into())).unwrap());
    rep.push(Outcome::new("sigma = P at u = 1", None, at_one == flip, ""));
    if n == 2 {
        let v = Rep::irrep(1);
        rep.push(Outcome::new(
            "sigma agrees with the U_q(sl_2) braiding under u = s",
            None,
            r.rhat == braiding(&v, &v),
            "",
        ));
    }
    rep
}

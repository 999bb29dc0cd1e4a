use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;

use crate::linalg::{embed, SparseMat};
use crate::report::{Outcome, Report};
use crate::scalars::{format_ratfunc, Field, Jet, RatFunc, Ring};
use crate::{Error, Result};

use super::classical::{inv_n, omega, omega_on, slot_flip};
use super::vector::rhat;

/// Default jet order: terms through `ħ²`.
pub const DEFAULT_ORDER: usize = 3;

/// The parameter `k`: the variable of `Q(k)` or a fixed rational value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KParam {
    Symbolic,
    Value(BigRational),
}

impl KParam {
    pub fn as_ratfunc(&self) -> RatFunc {
        match self {
            KParam::Symbolic => RatFunc::var(),
            KParam::Value(v) => RatFunc::from_rational(v),
        }
    }
}

impl fmt::Display for KParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KParam::Symbolic => f.write_str("k"),
            KParam::Value(v) => write!(f, "{v}"),
        }
    }
}

/// Format an element of `Q(k)`.
pub fn show_k(x: &RatFunc) -> String {
    format_ratfunc(x, 'k')
}

/// Evaluate a polynomial with integer coefficients at a jet (Horner).
fn poly_at(coeffs: &[num_bigint::BigInt], x: &Jet, order: usize) -> Jet {
    coeffs
        .iter()
        .rev()
        .fold(Jet::constant(order, RatFunc::zero()), |acc, c| {
            acc.mul(x).add(&Jet::constant(order, RatFunc::from_bigint(c.clone())))
        })
}

/// `u = exp(n k ħ / N)`, so that `t = u^N = e^{nkħ}`.
pub fn u_jet(big_n: usize, n: usize, k: &RatFunc, order: usize) -> Result<Jet> {
    let rate = RatFunc::from_ratio(n as i64, big_n as i64)?.mul(k);
    Jet::hbar_times(order, rate).exp()
}

/// Substitute `u = exp(n k ħ / N)` into a rational function of `u`.
pub fn substitute(f: &RatFunc, u: &Jet, order: usize) -> Result<Jet> {
    let num = poly_at(f.numer().coeffs(), u, order);
    let den = poly_at(f.denom().coeffs(), u, order);
    let inv = den.try_inv().ok_or(Error::DivisionByZero)?;
    Ok(num.mul(&inv))
}

/// Entrywise substitution of a matrix over `Q(u)`.
pub fn substitute_matrix(m: &SparseMat<RatFunc>, u: &Jet, order: usize) -> Result<SparseMat<Jet>> {
    m.try_map(|x| substitute(x, u, order))
}

/// Coefficient of `ħ^i` of every entry.
pub fn coefficient(m: &SparseMat<Jet>, i: usize) -> SparseMat<RatFunc> {
    m.map(|x| x.coeff(i))
}

/// `T_i` and `Y_i` as jet matrices on `V^{⊗n} ⊗ V_aux`, `V_aux = V` at slot 0.
#[derive(Clone, Debug)]
pub struct FormalOps {
    pub big_n: usize,
    pub n: usize,
    pub order: usize,
    pub k: KParam,
    /// Substituted `σ_{VV}` on `V ⊗ V`.
    pub sigma: SparseMat<Jet>,
    pub t: Vec<SparseMat<Jet>>,
    pub y: Vec<SparseMat<Jet>>,
}

impl FormalOps {
    pub fn dim(&self) -> usize {
        self.big_n.pow(self.n as u32 + 1)
    }
}

/// `T_i = σ` on slots `i+1, i`; `Y_1 = σ²` on slots `1, 0`; `Y_{i+1} = T_i Y_i T_i`.
pub fn build_formal_ops(big_n: usize, n: usize, k: &KParam, order: usize) -> Result<FormalOps> {
    if big_n < 2 || n < 1 {
        return Err(Error::InvalidArgument(format!(
            "need N >= 2 and n >= 1, got N = {big_n}, n = {n}"
        )));
    }
    let u = u_jet(big_n, n, &k.as_ratfunc(), order)?;
    let sigma = substitute_matrix(&rhat(big_n).rhat, &u, order)?;
    let pw = |e: usize| big_n.pow(e as u32);
    let t: Vec<_> = (1..n).map(|i| embed(&sigma, pw(n - i - 1), pw(i))).collect();
    let double = sigma.compose(&sigma)?;
    let mut y = alloc::vec![embed(&double, pw(n - 1), 1)];
    for (i, ti) in t.iter().enumerate() {
        let next = ti.compose(&y[i])?.compose(ti)?;
        y.push(next);
    }
    Ok(FormalOps {
        big_n,
        n,
        order,
        k: k.clone(),
        sigma,
        t,
        y,
    })
}

/// The degenerate operators: `s_i` over `Q` and `y_i` over `Q(k)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Degenerate {
    pub s: Vec<SparseMat<RatFunc>>,
    pub y: Vec<SparseMat<RatFunc>>,
}

fn scalar_jet(dim: usize, c: &Jet) -> SparseMat<Jet> {
    SparseMat::diagonal(alloc::vec![c.clone(); dim])
}

/// `s_i = (q T_i - sinh(ħk)) / cosh(ħk)` and `y_i = (1/ħ) log Y_i`, both at `ħ⁰`.
pub fn extract_degenerate(ops: &FormalOps) -> Result<Degenerate> {
    let order = ops.order;
    let d = ops.dim();
    let k = ops.k.as_ratfunc();
    let q = Jet::hbar_times(order, RatFunc::one()).exp()?;
    let hk = Jet::hbar_times(order, k);
    let sinh = hk.sinh()?;
    let cosh_inv = hk.cosh()?.try_inv().ok_or(Error::DivisionByZero)?;
    let mut s = Vec::new();
    for t in &ops.t {
        let full = t.scale(&q).sub(&scalar_jet(d, &sinh))?.scale(&cosh_inv);
        s.push(coefficient(&full, 0));
    }
    let id = SparseMat::<Jet>::identity(d);
    let mut y = Vec::new();
    for (i, yi) in ops.y.iter().enumerate() {
        if !coefficient(yi, 0).is_identity() {
            return Err(Error::NotUnipotent { index: i + 1 });
        }
        let l = yi.sub(&id)?;
        let mut log = SparseMat::zeros(d, d);
        let mut power = id.clone();
        for j in 1..order.max(2) {
            power = power.compose(&l)?;
            let c = RatFunc::from_ratio(if j % 2 == 1 { 1 } else { -1 }, j as i64)?;
            log = log.add(&power.map(|x| x.scale(&c)))?;
        }
        let divided = log.try_map(|x| x.div_hbar())?;
        y.push(coefficient(&divided, 0));
    }
    Ok(Degenerate { s, y })
}

/// `α` with `a = α b`, if `b ≠ 0` and the two are exactly proportional.
pub fn proportionality(a: &SparseMat<RatFunc>, b: &SparseMat<RatFunc>) -> Option<RatFunc> {
    let (r, c, bv) = b.entries().next()?;
    let alpha = a.get(r, c).div(bv)?;
    (b.scale(&alpha) == *a).then_some(alpha)
}

/// `Ω_{i,0} + Σ_{j<i} s_{ij} - (i-1)/N` on `V^{⊗n} ⊗ V_aux`.
pub fn yis_shape(big_n: usize, n: usize, i: usize) -> SparseMat<RatFunc> {
    let slots = n + 1;
    let dim = big_n.pow(slots as u32);
    let mut acc = omega_on(big_n, slots, i, 0);
    for j in 1..i {
        acc = acc.add(&slot_flip(big_n, slots, i, j)).unwrap();
    }
    let shift = RatFunc::from_int(i as i64 - 1).mul(&inv_n(big_n));
    acc.sub(&SparseMat::diagonal(alloc::vec![shift; dim])).unwrap()
}

/// The degeneration chain for `(N, n, k)`: jet substitution, the formal
/// operators, the extracted `s_i`, `y_i`, and the measured constants
/// `c`, `c'`, `α` against the claimed `α = k`.
pub fn check_yis(big_n: usize, n: usize, k: &KParam, order: usize) -> Result<Report> {
    let ops = build_formal_ops(big_n, n, k, order)?;
    let kv = k.as_ratfunc();
    let mut rep = Report::new(format!("trigonometric degeneration, N = {big_n}, n = {n}, k = {k}"));
    let slots = n + 1;
    let p = slot_flip(big_n, 2, 0, 1);

    let sigma0 = coefficient(&ops.sigma, 0);
    rep.push(Outcome::new("sigma = P mod h", None, sigma0 == p, ""));

    let u = u_jet(big_n, n, &kv, order)?;
    let root = substitute(&RatFunc::var_pow(big_n as i64 - 1), &u, order)?;
    let expect = RatFunc::from_ratio((big_n as i64 - 1) * n as i64, big_n as i64)?.mul(&kv);
    rep.push(Outcome::new(
        "u^(N-1) = 1 + (N-1)(nk/N) h mod h^2",
        None,
        root.coeff(0).is_one() && root.coeff(1) == expect,
        "",
    ));

    let sq = ops.sigma.compose(&ops.sigma)?;
    let c = proportionality(&coefficient(&sq, 1), &omega(big_n));
    let c_ok = coefficient(&sq, 0).is_identity() && c.is_some();
    rep.push(Outcome::new("sigma^2 = 1 + c h Omega mod h^2", None, c_ok, ""));
    if let Some(c) = &c {
        rep.fact("c", show_k(c));
    }

    for (i, t) in ops.t.iter().enumerate() {
        let flip = slot_flip(big_n, slots, i + 2, i + 1);
        rep.push(Outcome::new(
            format!("T{} = s_({},{}) mod h", i + 1, i + 2, i + 1),
            None,
            coefficient(t, 0) == flip,
            "",
        ));
    }
    for (i, y) in ops.y.iter().enumerate() {
        rep.push(Outcome::new(
            format!("Y{} = 1 mod h", i + 1),
            None,
            coefficient(y, 0).is_identity(),
            "",
        ));
    }

    let deg = extract_degenerate(&ops)?;
    for (i, s) in deg.s.iter().enumerate() {
        let flip = slot_flip(big_n, slots, i + 2, i + 1);
        rep.push(Outcome::new(
            format!("s{} is the flip of slots {}, {}", i + 1, i + 2, i + 1),
            None,
            *s == flip,
            "",
        ));
        rep.push(Outcome::new(
            format!("s{}^2 = 1", i + 1),
            None,
            s.compose(s)?.is_identity(),
            "",
        ));
    }

    let c_prime = proportionality(&deg.y[0], &omega_on(big_n, slots, 1, 0));
    rep.push(Outcome::new("y1 = c' Omega_(1,0)", None, c_prime.is_some(), ""));
    if let Some(cp) = &c_prime {
        rep.fact("c'", show_k(cp));
    }

    let mut alphas = Vec::new();
    for (i, y) in deg.y.iter().enumerate() {
        let shape = yis_shape(big_n, n, i + 1);
        let a = proportionality(y, &shape);
        let detail = match &a {
            Some(a) => format!("alpha = {}", show_k(a)),
            None => String::from("not proportional"),
        };
        rep.push(Outcome::new(
            format!("y{0} = alpha (Omega_({0},0) + sum_(j<{0}) s_({0},j) - {1}/N)", i + 1, i),
            None,
            a.is_some(),
            detail,
        ));
        alphas.push(a);
    }
    let single = alphas.iter().all(|a| a.is_some() && *a == alphas[0]);
    rep.push(Outcome::new("one alpha for every i", None, single, ""));
    if let Some(Some(alpha)) = alphas.first() {
        rep.fact("alpha", show_k(alpha));
        rep.fact("claimed alpha", show_k(&kv));
        if let Some(ratio) = alpha.div(&kv) {
            rep.fact("alpha / claimed", show_k(&ratio));
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn substitution_matches_exponential_expansion() {
        let k = RatFunc::var();
        let u = u_jet(3, 2, &k, 3).unwrap();
        assert!(u.coeff(0).is_one());
        assert_eq!(u.coeff(1), RatFunc::from_ratio(2, 3).unwrap().mul(&k));
        let inv = substitute(&RatFunc::var_pow(-1), &u, 3).unwrap();
        assert_eq!(inv.mul(&u), Jet::constant(3, RatFunc::one()));
    }

    #[test]
    fn degeneration_for_small_cases() {
        for big_n in [2, 3] {
            for n in [2, 3] {
                let rep = check_yis(big_n, n, &KParam::Symbolic, DEFAULT_ORDER).unwrap();
                assert!(rep.all_passed(), "{rep}");
            }
        }
    }

    #[test]
    fn rational_k_gives_rational_constants() {
        let k = KParam::Value(BigRational::new(1.into(), 1.into()));
        let rep = check_yis(2, 2, &k, DEFAULT_ORDER).unwrap();
        assert!(rep.all_passed(), "{rep}");
    }

    #[test]
    fn non_unipotent_y_is_rejected() {
        let mut ops = build_formal_ops(2, 2, &KParam::Symbolic, DEFAULT_ORDER).unwrap();
        ops.y[1] = ops.y[1].scale(&Jet::constant(3, RatFunc::from_int(2)));
        assert_eq!(extract_degenerate(&ops), Err(Error::NotUnipotent { index: 2 }));
    }
}

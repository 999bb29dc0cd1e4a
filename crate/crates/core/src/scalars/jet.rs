use alloc::vec;
use alloc::vec::Vec;

use super::{Field, RatFunc, Ring};
use crate::{Error, Result};

/// Truncated power series `c_0 + c_1 ħ + … + c_{d-1} ħ^{d-1}` over `Q(k)`.
///
/// `order == 0` marks an exact constant (produced by [`Ring::zero`],
/// [`Ring::one`], [`Ring::from_i64`]); it adopts the order of whatever it is
/// combined with.
#[derive(Clone, Debug)]
pub struct Jet {
    order: usize,
    coeffs: Vec<RatFunc>,
}

impl PartialEq for Jet {
    fn eq(&self, other: &Self) -> bool {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = RatFunc::zero();
        (0..n).all(|i| self.coeffs.get(i).unwrap_or(&z) == other.coeffs.get(i).unwrap_or(&z))
    }
}

impl Jet {
    pub fn new(order: usize, coeffs: Vec<RatFunc>) -> Self {
        let mut j = Jet { order, coeffs };
        j.trim();
        j
    }

    pub fn constant(order: usize, c: RatFunc) -> Self {
        Jet::new(order, vec![c])
    }

    /// `c ħ`.
    pub fn hbar_times(order: usize, c: RatFunc) -> Self {
        Jet::new(order, vec![RatFunc::zero(), c])
    }

    fn trim(&mut self) {
        if self.order > 0 && self.coeffs.len() > self.order {
            self.coeffs.truncate(self.order);
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `ħ^i`.
    pub fn coeff(&self, i: usize) -> RatFunc {
        self.coeffs.get(i).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn constant_term(&self) -> RatFunc {
        self.coeff(0)
    }

    fn joint_order(&self, other: &Jet) -> usize {
        match (self.order, other.order) {
            (0, o) | (o, 0) => o,
            (a, b) => a.min(b),
        }
    }

    fn with_order(&self, order: usize) -> Jet {
        Jet::new(order, self.coeffs.clone())
    }

    /// Multiply by a scalar of `Q(k)`.
    pub fn scale(&self, c: &RatFunc) -> Jet {
        Jet::new(self.order, self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Divide by `ħ`; the constant term must vanish. The order drops by one.
    pub fn div_hbar(&self) -> Result<Jet> {
        if !self.constant_term().is_zero() {
            return Err(Error::InvalidArgument("jet is not divisible by h".into()));
        }
        Ok(Jet::new(
            self.order.saturating_sub(1),
            self.coeffs.iter().skip(1).cloned().collect(),
        ))
    }

    /// Power series `Σ a_j x^j` evaluated on a jet with zero constant term.
    fn series_nilpotent(x: &Jet, order: usize, coeff: impl Fn(usize) -> RatFunc) -> Jet {
        let mut acc = Jet::constant(order, coeff(0));
        let mut power = Jet::constant(order, RatFunc::one());
        for j in 1..order.max(1) {
            power = power.mul(x).with_order(order);
            let c = coeff(j);
            if !c.is_zero() {
                acc = acc.add(&power.scale(&c));
            }
        }
        acc
    }

    fn factorial_inv(j: usize) -> RatFunc {
        let mut f = 1i64;
        for i in 2..=j as i64 {
            f *= i;
        }
        RatFunc::from_ratio(1, f).expect("nonzero factorial")
    }

    /// `exp(x)`. A nonzero constant term must itself be exponentiable in
    /// `Q(k)`, which only holds for 0; anything else is rejected.
    pub fn exp(&self) -> Result<Jet> {
        if !self.constant_term().is_zero() {
            return Err(Error::InvalidArgument(
                "exp of a jet needs zero constant term over Q(k)".into(),
            ));
        }
        let order = self.order.max(1);
        Ok(Jet::series_nilpotent(self, order, Jet::factorial_inv))
    }

    /// `log(x)`, requiring constant term 1.
    pub fn log(&self) -> Result<Jet> {
        if !self.constant_term().is_one() {
            return Err(Error::LogDomain);
        }
        let order = self.order.max(1);
        let x = self.sub(&Jet::one());
        Ok(Jet::series_nilpotent(&x, order, |j| {
            if j == 0 {
                RatFunc::zero()
            } else {
                let sign = if j % 2 == 1 { 1 } else { -1 };
                RatFunc::from_ratio(sign, j as i64).expect("nonzero")
            }
        }))
    }

    pub fn sinh(&self) -> Result<Jet> {
        let e = self.exp()?;
        let em = self.neg().exp()?;
        Ok(e.sub(&em).scale(&RatFunc::from_ratio(1, 2)?))
    }

    pub fn cosh(&self) -> Result<Jet> {
        let e = self.exp()?;
        let em = self.neg().exp()?;
        Ok(e.add(&em).scale(&RatFunc::from_ratio(1, 2)?))
    }

    /// Multiplicative inverse; exists iff the constant term is nonzero.
    pub fn try_inv(&self) -> Option<Jet> {
        let c0 = self.constant_term().inv()?;
        let order = self.order.max(1);
        // x = c0 (1 + y) with y nilpotent: x^{-1} = c0^{-1} Σ (-y)^j
        let y = self.scale(&c0).sub(&Jet::one());
        let geo = Jet::series_nilpotent(&y.neg(), order, |_| RatFunc::one());
        Some(geo.scale(&c0))
    }
}

impl Ring for Jet {
    fn zero() -> Self {
        Jet {
            order: 0,
            coeffs: Vec::new(),
        }
    }

    fn one() -> Self {
        Jet::constant(0, RatFunc::one())
    }

    fn from_i64(n: i64) -> Self {
        Jet::constant(0, RatFunc::from_int(n))
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect();
        Jet::new(self.joint_order(other), coeffs)
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn mul(&self, other: &Self) -> Self {
        let order = self.joint_order(other);
        if self.is_zero() || other.is_zero() {
            return Jet {
                order,
                coeffs: Vec::new(),
            };
        }
        let mut n = self.coeffs.len() + other.coeffs.len() - 1;
        if order > 0 {
            n = n.min(order);
        }
        let mut coeffs = vec![RatFunc::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j < n && !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
                }
            }
        }
        Jet::new(order, coeffs)
    }

    fn neg(&self) -> Self {
        Jet {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k() -> RatFunc {
        RatFunc::var()
    }

    #[test]
    fn log_inverts_exp() {
        let x = Jet::hbar_times(3, k());
        assert_eq!(x.exp().unwrap().log().unwrap(), x);
    }

    #[test]
    fn exp_of_opposites_multiply_to_one() {
        let h = Jet::hbar_times(3, RatFunc::one());
        let prod = h.exp().unwrap().mul(&h.neg().exp().unwrap());
        assert_eq!(prod, Jet::one());
    }

    #[test]
    fn sinh_cosh_truncate() {
        let x = Jet::hbar_times(3, k());
        assert_eq!(x.sinh().unwrap(), x);
        assert_eq!(
            x.cosh().unwrap(),
            Jet::constant(3, RatFunc::one()).add(&Jet::new(
                3,
                vec![
                    RatFunc::zero(),
                    RatFunc::zero(),
                    k().mul(&k()).mul(&RatFunc::from_ratio(1, 2).unwrap())
                ]
            ))
        );
        // mod h^2 cosh is 1
        let x2 = Jet::hbar_times(2, k());
        assert_eq!(x2.cosh().unwrap(), Jet::one());
    }

    #[test]
    fn log_rejects_wrong_constant() {
        let x = Jet::constant(3, RatFunc::from_int(2));
        assert_eq!(x.log(), Err(Error::LogDomain));
    }

    #[test]
    fn inverse_of_unit() {
        let x = Jet::new(3, vec![RatFunc::from_int(2), k(), k()]);
        assert_eq!(x.mul(&x.try_inv().unwrap()), Jet::one());
    }
}

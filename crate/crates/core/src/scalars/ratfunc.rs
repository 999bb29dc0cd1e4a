use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Field, Poly, Ring};
use crate::{Error, Result};

/// Element of `Q(x)` in canonical form: `num / den` with `gcd(num, den) = 1`
/// in `Z[x]` and `den` having positive leading coefficient.
///
/// The variable is anonymous; the engines read it as `s` (with `q = s^2`),
/// `u` (with `t = u^N`) or the degeneration parameter `k`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Build and canonicalize `num / den`.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc::zero_value();
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        };
        if den.leading().is_some_and(|l| l.is_negative()) {
            num = num.neg();
            den = den.neg();
        }
        RatFunc { num, den }
    }

    fn zero_value() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        RatFunc::from_poly(Poly::constant(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        RatFunc::from_poly(Poly::constant(n))
    }

    /// The rational constant `p / q`.
    pub fn from_ratio(p: i64, q: i64) -> Result<Self> {
        RatFunc::new(Poly::constant(p.into()), Poly::constant(q.into()))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        RatFunc::normalized(Poly::constant(r.numer().clone()), Poly::constant(r.denom().clone()))
    }

    /// The variable itself.
    pub fn var() -> Self {
        RatFunc::from_poly(Poly::monomial(BigInt::one(), 1))
    }

    /// `x^e` for any integer `e`.
    pub fn var_pow(e: i64) -> Self {
        let m = Poly::monomial(BigInt::one(), e.unsigned_abs() as usize);
        if e >= 0 {
            RatFunc::from_poly(m)
        } else {
            RatFunc {
                num: Poly::one(),
                den: m,
            }
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// Exact value at a rational point.
    pub fn eval(&self, point: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(point);
        if Zero::is_zero(&d) {
            return Err(Error::Pole);
        }
        Ok(self.num.eval(point) / d)
    }

    pub fn eval_int(&self, point: i64) -> Result<BigRational> {
        self.eval(&BigRational::from_integer(point.into()))
    }

    pub fn checked_div(&self, other: &RatFunc) -> Result<RatFunc> {
        other.inv().map(|i| self.mul(&i)).ok_or(Error::DivisionByZero)
    }

    pub fn pow(&self, e: i64) -> Result<RatFunc> {
        let base = if e < 0 {
            self.inv().ok_or(Error::DivisionByZero)?
        } else {
            self.clone()
        };
        let mut acc = RatFunc::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Largest degree among numerator and denominator.
    pub fn degree_bound(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }

    /// `Some((c, e))` when the element is `c·x^e`.
    pub fn as_monomial(&self) -> Option<(BigRational, i64)> {
        if self.is_zero() {
            return None;
        }
        let nd = self.num.degree()?;
        let dd = self.den.degree()?;
        if self.num.valuation() != nd || self.den.valuation() != dd {
            return None;
        }
        let c = BigRational::new(self.num.coeffs()[nd].clone(), self.den.coeffs()[dd].clone());
        Some((c, nd as i64 - dd as i64))
    }

    /// Substitute `x -> x^k`.
    pub fn compose_power(&self, k: usize) -> RatFunc {
        RatFunc::normalized(self.num.compose_power(k), self.den.compose_power(k))
    }
}

impl Ring for RatFunc {
    fn zero() -> Self {
        RatFunc::zero_value()
    }

    fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }

    fn from_i64(n: i64) -> Self {
        RatFunc::from_int(n)
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    fn weight(&self) -> usize {
        self.num.coeffs().len() + self.den.coeffs().len()
    }

    fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return RatFunc::normalized(self.num.add(&other.num), self.den.clone());
        }
        let g = self.den.gcd(&other.den);
        let b = self.den.div_exact(&g);
        let d = other.den.div_exact(&g);
        let num = self.num.mul(&d).add(&other.num.mul(&b));
        RatFunc::normalized(num, self.den.mul(&d))
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1);
        let d2 = other.den.div_exact(&g1);
        let n2 = other.num.div_exact(&g2);
        let d1 = self.den.div_exact(&g2);
        let mut num = n1.mul(&n2);
        let mut den = d1.mul(&d2);
        if den.leading().is_some_and(|l| l.is_negative()) {
            num = num.neg();
            den = den.neg();
        }
        RatFunc { num, den }
    }

    fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Field for RatFunc {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.leading().is_some_and(|l| l.is_negative()) {
            num = num.neg();
            den = den.neg();
        }
        Some(RatFunc { num, den })
    }
}

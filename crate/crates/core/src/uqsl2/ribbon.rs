use alloc::vec::Vec;

use num_traits::One;

use crate::linalg::SparseMat;
use crate::scalars::{Field, RatFunc, Ring};
use crate::{Error, Result};

use super::cg::CgDecomposition;
use super::rep::Rep;
use super::rmatrix::{braiding, double_braiding};

/// `coev: 1 → V ⊗ V*`, `1 ↦ Σ_i e_i ⊗ e_i*`, as a column.
pub fn coev(v: &Rep) -> SparseMat<RatFunc> {
    let d = v.dim();
    SparseMat::from_triplets(d * d, 1, (0..d).map(|i| (i * d + i, 0, RatFunc::one())))
}

/// `ev: V* ⊗ V → 1`, `f ⊗ x ↦ f(x)`, as a row.
pub fn ev(v: &Rep) -> SparseMat<RatFunc> {
    let d = v.dim();
    SparseMat::from_triplets(1, d * d, (0..d).map(|i| (0, i * d + i, RatFunc::one())))
}

/// Scalar by which the double braiding acts on the
/// summand `V_j ⊂ V_a ⊗ V_b`.
pub fn double_braiding_on_component(a: usize, b: usize, j: usize) -> Result<RatFunc> {
    let (va, vb) = (Rep::irrep(a), Rep::irrep(b));
    let d = CgDecomposition::new(a, b);
    let c = d
        .component(j)
        .ok_or_else(|| Error::InvalidArgument(alloc::format!("V_{j} is not a summand of V_{a} ⊗ V_{b}")))?;
    let m = c.pi.compose(&double_braiding(&va, &vb))?.compose(&c.iota)?;
    let x = m.get(0, 0);
    if m != SparseMat::identity(j + 1).scale(&x) {
        return Err(Error::InvalidArgument(alloc::format!(
            "double braiding is not scalar on V_{j} ⊂ V_{a} ⊗ V_{b}"
        )));
    }
    Ok(x)
}

fn monomial_sqrt(x: &RatFunc) -> Result<RatFunc> {
    match x.as_monomial() {
        Some((c, e)) if One::is_one(&c) && e % 2 == 0 => Ok(RatFunc::var_pow(e / 2)),
        _ => Err(Error::InvalidArgument(alloc::format!(
            "{x} has no monomial square root"
        ))),
    }
}

/// Ribbon scalars `θ_m` on `V_m`, in the convention where the double
/// braiding acts on `V_j ⊂ V_a ⊗ V_b` by `θ_j / (θ_a θ_b)`.
///
/// They are measured from the braiding: `θ_1² = 1 / (double braiding on V_0 ⊂ V_1⊗V_1)`
/// with the root taken as a positive power of `s`, and
/// `θ_{m+1} = θ_m θ_1 · (double braiding on V_{m+1} ⊂ V_m ⊗ V_1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RibbonData {
    theta: Vec<RatFunc>,
}

impl RibbonData {
    pub fn new(max_m: usize) -> Result<Self> {
        let mut theta = alloc::vec![RatFunc::one()];
        if max_m == 0 {
            return Ok(RibbonData { theta });
        }
        let singlet = double_braiding_on_component(1, 1, 0)?;
        let t1 = monomial_sqrt(&singlet.inv().ok_or(Error::DivisionByZero)?)?;
        theta.push(t1.clone());
        for m in 1..max_m {
            let top = double_braiding_on_component(m, 1, m + 1)?;
            let next = theta[m].mul(&t1).mul(&top);
            theta.push(next);
        }
        Ok(RibbonData { theta })
    }

    pub fn max_m(&self) -> usize {
        self.theta.len() - 1
    }

    pub fn theta(&self, m: usize) -> &RatFunc {
        &self.theta[m]
    }

    /// The two candidate scalars for the ribbon constant on `V_m`:
    /// `θ_m` and `θ_m⁻¹`.
    pub fn candidates(&self, m: usize) -> [RatFunc; 2] {
        [self.theta[m].clone(), self.theta[m].inv().unwrap()]
    }
}

/// `ev ∘ σ_{V,V*} ∘ (θ^{±1} ⊗ 1) ∘ coev` on `V_m`.
pub fn categorical_trace(m: usize, ribbon: &RibbonData, twist_sign: i64) -> RatFunc {
    let v = Rep::irrep(m);
    let vd = v.dual();
    let th = if twist_sign >= 0 {
        ribbon.theta(m).clone()
    } else {
        ribbon.theta(m).inv().unwrap()
    };
    let twisted = coev(&v).scale(&th);
    ev(&v)
        .compose(&braiding(&v, &vd))
        .unwrap()
        .compose(&twisted)
        .unwrap()
        .get(0, 0)
}

#[cfg(test)]
mod tests {
    use super::super::rep::{qint, Gen};
    use super::*;
    use crate::linalg::embed;

    #[test]
    fn duality_maps_are_module_maps_and_zigzag() {
        for m in 0..=3 {
            let v = Rep::irrep(m);
            let vd = v.dual();
            let unit = Rep::unit();
            for g in Gen::ALL {
                let lhs = v.coproduct_action(&vd, g).compose(&coev(&v)).unwrap();
                let rhs = coev(&v).compose(&unit.act(g)).unwrap();
                assert_eq!(lhs, rhs);
                let lhs = ev(&v).compose(&vd.coproduct_action(&v, g)).unwrap();
                let rhs = unit.act(g).compose(&ev(&v)).unwrap();
                assert_eq!(lhs, rhs);
            }
            let d = v.dim();
            // (1_V ⊗ ev)(coev ⊗ 1_V) = 1_V
            let zz = embed(&ev(&v), d, 1).compose(&embed(&coev(&v), 1, d)).unwrap();
            assert!(zz.is_identity());
            // (ev ⊗ 1_{V*})(1_{V*} ⊗ coev) = 1_{V*}
            let zz = embed(&ev(&v), 1, d).compose(&embed(&coev(&v), d, 1)).unwrap();
            assert!(zz.is_identity());
        }
    }

    #[test]
    fn twist_values() {
        let r = RibbonData::new(6).unwrap();
        for m in 0..=6i64 {
            assert_eq!(r.theta(m as usize), &RatFunc::var_pow(m * (m + 2)));
        }
    }

    #[test]
    fn ribbon_axiom_on_components() {
        let r = RibbonData::new(6).unwrap();
        for a in 0..=3usize {
            for b in 0..=3usize {
                for j in (a.abs_diff(b)..=a + b).step_by(2) {
                    let x = double_braiding_on_component(a, b, j).unwrap();
                    let expect = r.theta(j).checked_div(&r.theta(a).mul(r.theta(b))).unwrap();
                    assert_eq!(x, expect, "V_{j} in V_{a} ⊗ V_{b}");
                }
            }
        }
    }

    #[test]
    fn categorical_trace_is_quantum_dimension() {
        let r = RibbonData::new(3).unwrap();
        for m in 0..=3 {
            assert_eq!(categorical_trace(m, &r, 1), qint(m as i64 + 1));
        }
    }
}

use crate::linalg::SparseMat;
use crate::scalars::{Field, RatFunc, Ring};

use super::rep::{q, qfactorial, Rep};

/// Permutation `x ⊗ y ↦ y ⊗ x` from `X ⊗ Y` (dims `dx`, `dy`) to `Y ⊗ X`.
pub fn flip(dx: usize, dy: usize) -> SparseMat<RatFunc> {
    SparseMat::from_triplets(
        dx * dy,
        dx * dy,
        (0..dx).flat_map(|i| (0..dy).map(move |j| (j * dx + i, i * dy + j, RatFunc::one()))),
    )
}

/// `s^{±w_x·w_y}` on `X ⊗ Y`, i.e. `q^{±H⊗H/2}`.
fn cartan_factor(x: &Rep, y: &Rep, sign: i64) -> SparseMat<RatFunc> {
    SparseMat::diagonal(
        x.weights()
            .iter()
            .flat_map(|a| y.weights().iter().map(move |b| RatFunc::var_pow(sign * a * b)))
            .collect(),
    )
}

/// `Σ_n c_n F^n ⊗ E^n` with `c_n = ε(n) (q - q⁻¹)ⁿ / [n]!`.
fn theta_series(x: &Rep, y: &Rep, coeff_sign: i64) -> SparseMat<RatFunc> {
    let qq = q();
    let diff = qq.sub(&qq.inv().unwrap());
    let mut acc = SparseMat::identity(x.dim() * y.dim());
    let mut fx = SparseMat::identity(x.dim());
    let mut ey = SparseMat::identity(y.dim());
    let mut n: i64 = 1;
    loop {
        fx = fx.compose(x.f()).unwrap();
        ey = ey.compose(y.e()).unwrap();
        if fx.is_zero() || ey.is_zero() {
            return acc;
        }
        let tri = n * (n - 1) / 2;
        let mut c = qq.pow(coeff_sign * tri).unwrap().mul(&diff.pow(n).unwrap());
        c = c.checked_div(&qfactorial(n)).unwrap();
        if coeff_sign < 0 && n % 2 == 1 {
            c = c.neg();
        }
        acc = acc.add(&fx.kron(&ey).scale(&c)).unwrap();
        n += 1;
    }
}

/// The universal R-matrix on `X ⊗ Y`:
/// `R = q^{H⊗H/2} · Σ_n q^{n(n-1)/2} (q - q⁻¹)ⁿ / [n]! · Fⁿ ⊗ Eⁿ`.
pub fn r_matrix(x: &Rep, y: &Rep) -> SparseMat<RatFunc> {
    cartan_factor(x, y, 1).compose(&theta_series(x, y, 1)).unwrap()
}

/// `R⁻¹` on `X ⊗ Y` from the closed series
/// `Σ_n (-1)ⁿ q^{-n(n-1)/2} (q - q⁻¹)ⁿ / [n]! · Fⁿ ⊗ Eⁿ · q^{-H⊗H/2}`.
pub fn r_inverse(x: &Rep, y: &Rep) -> SparseMat<RatFunc> {
    theta_series(x, y, -1).compose(&cartan_factor(x, y, -1)).unwrap()
}

/// Braiding `σ_{X,Y} = P ∘ R : X ⊗ Y → Y ⊗ X`.
pub fn braiding(x: &Rep, y: &Rep) -> SparseMat<RatFunc> {
    flip(x.dim(), y.dim()).compose(&r_matrix(x, y)).unwrap()
}

/// `σ_{X,Y}⁻¹ = R⁻¹ ∘ P : Y ⊗ X → X ⊗ Y`.
pub fn braiding_inverse(x: &Rep, y: &Rep) -> SparseMat<RatFunc> {
    r_inverse(x, y).compose(&flip(y.dim(), x.dim())).unwrap()
}

/// `σ_{Y,X} ∘ σ_{X,Y}` on `X ⊗ Y`.
pub fn double_braiding(x: &Rep, y: &Rep) -> SparseMat<RatFunc> {
    braiding(y, x).compose(&braiding(x, y)).unwrap()
}

/// Signed double braiding: `σ_{Y,X}σ_{X,Y}` for `sign = 1`, its inverse for `sign = -1`.
pub fn double_braiding_pow(x: &Rep, y: &Rep, sign: i64) -> SparseMat<RatFunc> {
    if sign >= 0 {
        double_braiding(x, y)
    } else {
        braiding_inverse(x, y).compose(&braiding_inverse(y, x)).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::super::rep::Gen;
    use super::*;
    use crate::linalg::embed;

    fn s(e: i64) -> RatFunc {
        RatFunc::var_pow(e)
    }

    #[test]
    fn inverse_series_is_inverse() {
        for a in 0..4 {
            for b in 0..4 {
                let (x, y) = (Rep::irrep(a), Rep::irrep(b));
                assert!(r_matrix(&x, &y).compose(&r_inverse(&x, &y)).unwrap().is_identity());
                assert!(r_inverse(&x, &y).compose(&r_matrix(&x, &y)).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn braiding_intertwines() {
        let reps = [Rep::irrep(1), Rep::irrep(2), Rep::irrep(1).dual(), Rep::irrep(3)];
        for x in &reps {
            for y in &reps {
                let c = braiding(x, y);
                for g in Gen::ALL {
                    let lhs = c.compose(&x.coproduct_action(y, g)).unwrap();
                    let rhs = y.coproduct_action(x, g).compose(&c).unwrap();
                    assert_eq!(lhs, rhs, "{:?}", g);
                }
            }
        }
    }

    #[test]
    fn quasi_triangularity() {
        for a in 1..=3 {
            for b in 1..=3 {
                for c in 1..=2 {
                    let (x, y, z) = (Rep::irrep(a), Rep::irrep(b), Rep::irrep(c));
                    // (Δ⊗1)R = R13 R23
                    let lhs = r_matrix(&x.tensor(&y), &z);
                    let pyz = embed(&flip(y.dim(), z.dim()), x.dim(), 1);
                    let pzy = embed(&flip(z.dim(), y.dim()), x.dim(), 1);
                    let r13 = pzy
                        .compose(&r_matrix(&x, &z).kron(&SparseMat::identity(y.dim())))
                        .unwrap()
                        .compose(&pyz)
                        .unwrap();
                    let r23 = embed(&r_matrix(&y, &z), x.dim(), 1);
                    assert_eq!(lhs, r13.compose(&r23).unwrap());
                    // (1⊗Δ)R = R13 R12
                    let lhs = r_matrix(&x, &y.tensor(&z));
                    let r12 = r_matrix(&x, &y).kron(&SparseMat::identity(z.dim()));
                    assert_eq!(lhs, r13.compose(&r12).unwrap());
                }
            }
        }
    }

    #[test]
    fn yang_baxter() {
        for a in 1..=2 {
            for b in 1..=2 {
                for c in 1..=2 {
                    let (x, y, z) = (Rep::irrep(a), Rep::irrep(b), Rep::irrep(c));
                    let first = embed(&braiding(&x, &y), 1, z.dim()); // X Y Z -> Y X Z
                    let second = embed(&braiding(&x, &z), y.dim(), 1); // Y X Z -> Y Z X
                    let third = embed(&braiding(&y, &z), 1, x.dim()); // Y Z X -> Z Y X
                    let l = third.compose(&second).unwrap().compose(&first).unwrap();
                    let first = embed(&braiding(&y, &z), x.dim(), 1); // X Y Z -> X Z Y
                    let second = embed(&braiding(&x, &z), 1, y.dim()); // X Z Y -> Z X Y
                    let third = embed(&braiding(&x, &y), z.dim(), 1); // Z X Y -> Z Y X
                    let r = third.compose(&second).unwrap().compose(&first).unwrap();
                    assert_eq!(l, r);
                }
            }
        }
    }

    #[test]
    fn hecke_relation_on_fundamental() {
        let v = Rep::irrep(1);
        let c = braiding(&v, &v);
        let id = SparseMat::identity(4);
        let lhs = c
            .sub(&id.scale(&s(1)))
            .unwrap()
            .compose(&c.add(&id.scale(&s(-3))).unwrap())
            .unwrap();
        assert!(lhs.is_zero());
        assert_eq!(c.get(0, 0), s(1));
    }
}

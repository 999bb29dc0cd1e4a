use alloc::format;

use crate::linalg::SparseMat;
use crate::report::{Outcome, Report};
use crate::scalars::{RatFunc, Ring};

/// `1/N`.
pub fn inv_n(n: usize) -> RatFunc {
    RatFunc::from_ratio(1, n as i64).expect("N > 0")
}

/// Elementary matrix `E_ij` on `C^N`.
pub fn elementary(n: usize, i: usize, j: usize) -> SparseMat<RatFunc> {
    SparseMat::from_triplets(n, n, [(i, j, RatFunc::one())])
}

/// Permutation of the tensor slots of `(C^N)^{⊗slots}` exchanging slots `a`
/// and `b`; slot 0 is the rightmost factor.
pub fn slot_flip(n: usize, slots: usize, a: usize, b: usize) -> SparseMat<RatFunc> {
    let dim = n.pow(slots as u32);
    let (pa, pb) = (n.pow(a as u32), n.pow(b as u32));
    let mut m = SparseMat::zeros(dim, dim);
    for c in 0..dim {
        let (da, db) = ((c / pa) % n, (c / pb) % n);
        let r = c - da * pa - db * pb + db * pa + da * pb;
        m.set(r, c, RatFunc::one());
    }
    m
}

/// `Ω = P - 1/N` on `C^N ⊗ C^N`.
pub fn omega(n: usize) -> SparseMat<RatFunc> {
    let d = n * n;
    slot_flip(n, 2, 0, 1)
        .sub(&SparseMat::diagonal(alloc::vec![inv_n(n); d]))
        .unwrap()
}

/// `Ω_{a,b} = s_{ab} - 1/N` on `(C^N)^{⊗slots}`.
pub fn omega_on(n: usize, slots: usize, a: usize, b: usize) -> SparseMat<RatFunc> {
    let dim = n.pow(slots as u32);
    slot_flip(n, slots, a, b)
        .sub(&SparseMat::diagonal(alloc::vec![inv_n(n); dim]))
        .unwrap()
}

/// `Σ_p b_p ⊗ b_p` for an orthonormal basis of `sl_N` under the trace form:
/// `Σ_{i≠j} E_ij ⊗ E_ji` plus the Cartan part `Σ_i E_ii ⊗ E_ii - (1/N) 1 ⊗ 1`.
pub fn casimir_tensor(n: usize) -> SparseMat<RatFunc> {
    let mut acc = SparseMat::zeros(n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            acc = acc.add(&elementary(n, i, j).kron(&elementary(n, j, i))).unwrap();
        }
    }
    acc.sub(&SparseMat::diagonal(alloc::vec![inv_n(n); n * n])).unwrap()
}

/// The classical Casimir `C = Σ_p b_p²` on `C^N`.
pub fn casimir(n: usize) -> SparseMat<RatFunc> {
    let mut acc = SparseMat::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            acc = acc
                .add(&elementary(n, i, j).compose(&elementary(n, j, i)).unwrap())
                .unwrap();
        }
    }
    acc.sub(&SparseMat::diagonal(alloc::vec![inv_n(n); n])).unwrap()
}

/// Identities for `Ω`: the Casimir expression, its two descriptions, symmetry
/// under the flip, and invariance under the diagonal `sl_N` action.
pub fn check_omega(n: usize) -> Report {
    let mut rep = Report::new(format!("classical tensors for sl_{n}"));
    let om = omega(n);
    let p = slot_flip(n, 2, 0, 1);
    rep.push(Outcome::new(
        "Omega = sum_p b_p (x) b_p",
        None,
        casimir_tensor(n) == om,
        "",
    ));
    let c = casimir(n);
    let id = SparseMat::identity(n);
    let delta_c = {
        let mut acc = SparseMat::zeros(n * n, n * n);
        for i in 0..n {
            for j in 0..n {
                let x = elementary(n, i, j)
                    .kron(&id)
                    .add(&id.kron(&elementary(n, i, j)))
                    .unwrap();
                let y = elementary(n, j, i)
                    .kron(&id)
                    .add(&id.kron(&elementary(n, j, i)))
                    .unwrap();
                acc = acc.add(&x.compose(&y).unwrap()).unwrap();
            }
        }
        let cart = {
            let mut h = SparseMat::zeros(n * n, n * n);
            for i in 0..n {
                h = h
                    .add(
                        &elementary(n, i, i)
                            .kron(&id)
                            .add(&id.kron(&elementary(n, i, i)))
                            .unwrap(),
                    )
                    .unwrap();
            }
            h.compose(&h).unwrap().scale(&inv_n(n))
        };
        acc.sub(&cart).unwrap()
    };
    let half = RatFunc::from_ratio(1, 2).unwrap();
    let from_c = delta_c
        .sub(&c.kron(&id))
        .unwrap()
        .sub(&id.kron(&c))
        .unwrap()
        .scale(&half);
    rep.push(Outcome::new(
        "Omega = (Delta(C) - C (x) 1 - 1 (x) C) / 2",
        None,
        from_c == om,
        "",
    ));
    rep.push(Outcome::new(
        "P Omega P = Omega",
        None,
        p.compose(&om).unwrap().compose(&p).unwrap() == om,
        "",
    ));
    let mut commutes = true;
    for i in 0..n {
        for j in 0..n {
            let e = elementary(n, i, j);
            let d = e.kron(&id).add(&id.kron(&e)).unwrap();
            commutes &= d.compose(&om).unwrap() == om.compose(&d).unwrap();
        }
    }
    rep.push(Outcome::new(
        "Omega commutes with the diagonal sl_N action",
        None,
        commutes,
        "",
    ));
    let trace: RatFunc = (0..n * n).map(|i| om.get(i, i)).fold(RatFunc::zero(), |a, b| a.add(&b));
    rep.fact("trace Omega", format!("{trace}"));
    let expect = RatFunc::from_int(n as i64).sub(&RatFunc::from_int((n * n) as i64).mul(&inv_n(n)));
    rep.push(Outcome::new("trace Omega = N - N^2 / N", None, trace == expect, ""));
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_identities() {
        for n in 2..=4 {
            let rep = check_omega(n);
            assert!(rep.all_passed(), "{rep}");
        }
    }

    #[test]
    fn slot_flip_is_an_involution_and_matches_kron_flip() {
        let f = slot_flip(3, 3, 0, 2);
        assert!(f.compose(&f).unwrap().is_identity());
        assert_eq!(slot_flip(2, 2, 0, 1), crate::uqsl2::flip(2, 2));
        let mid = slot_flip(2, 3, 0, 1);
        assert_eq!(mid, SparseMat::identity(2).kron(&crate::uqsl2::flip(2, 2)));
    }
}

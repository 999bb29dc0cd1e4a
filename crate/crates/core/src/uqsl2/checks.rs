use alloc::format;
use alloc::vec::Vec;

use crate::linalg::{embed, SparseMat};
use crate::report::{Outcome, Report};
use crate::scalars::RatFunc;

use super::rep::{Gen, Rep};
use super::rmatrix::{braiding, flip, r_matrix};

/// `Δ^op(g)` on `X ⊗ Y`.
fn coproduct_op(x: &Rep, y: &Rep, g: Gen) -> SparseMat<RatFunc> {
    let to_yx = flip(x.dim(), y.dim());
    let to_xy = flip(y.dim(), x.dim());
    to_xy
        .compose(&y.coproduct_action(x, g))
        .unwrap()
        .compose(&to_yx)
        .unwrap()
}

/// First `(g, a, b)` with `R Δ(g) ≠ Δ^op(g) R` on `V_a ⊗ V_b`.
fn intertwining_failure(max: usize, r: impl Fn(&Rep, &Rep) -> SparseMat<RatFunc>) -> Option<(Gen, usize, usize)> {
    for a in 0..=max {
        for b in 0..=max {
            let (x, y) = (Rep::irrep(a), Rep::irrep(b));
            let rm = r(&x, &y);
            for g in Gen::ALL {
                let lhs = rm.compose(&x.coproduct_action(&y, g)).unwrap();
                let rhs = coproduct_op(&x, &y, g).compose(&rm).unwrap();
                if lhs != rhs {
                    return Some((g, a, b));
                }
            }
        }
    }
    None
}

/// `(Δ ⊗ 1)R = R13 R23` and `(1 ⊗ Δ)R = R13 R12` on `V_a ⊗ V_b ⊗ V_c`.
fn hexagons_hold(a: usize, b: usize, c: usize) -> bool {
    let (x, y, z) = (Rep::irrep(a), Rep::irrep(b), Rep::irrep(c));
    let pyz = embed(&flip(y.dim(), z.dim()), x.dim(), 1);
    let pzy = embed(&flip(z.dim(), y.dim()), x.dim(), 1);
    let r13 = pzy
        .compose(&r_matrix(&x, &z).kron(&SparseMat::identity(y.dim())))
        .unwrap()
        .compose(&pyz)
        .unwrap();
    let r23 = embed(&r_matrix(&y, &z), x.dim(), 1);
    let r12 = r_matrix(&x, &y).kron(&SparseMat::identity(z.dim()));
    r_matrix(&x.tensor(&y), &z) == r13.compose(&r23).unwrap()
        && r_matrix(&x, &y.tensor(&z)) == r13.compose(&r12).unwrap()
}

/// `σ_{YZ} σ_{XZ} σ_{XY} = σ_{XY} σ_{XZ} σ_{YZ}` as maps `X ⊗ Y ⊗ Z → Z ⊗ Y ⊗ X`.
fn ybe_holds(a: usize, b: usize, c: usize) -> bool {
    let (x, y, z) = (Rep::irrep(a), Rep::irrep(b), Rep::irrep(c));
    let l = embed(&braiding(&y, &z), 1, x.dim())
        .compose(&embed(&braiding(&x, &z), y.dim(), 1))
        .unwrap()
        .compose(&embed(&braiding(&x, &y), 1, z.dim()))
        .unwrap();
    let r = embed(&braiding(&x, &y), z.dim(), 1)
        .compose(&embed(&braiding(&x, &z), 1, y.dim()))
        .unwrap()
        .compose(&embed(&braiding(&y, &z), x.dim(), 1))
        .unwrap();
    l == r
}

/// Quasi-triangularity on pairs `V_a ⊗ V_b` with `a, b ≤ max_pair`, the
/// hexagon identities and the Yang–Baxter equation on triples with entries
/// `≤ max_triple`, and a control with `R` replaced by `1`.
pub fn check_quasitriangular(max_pair: usize, max_triple: usize) -> Report {
    let mut rep = Report::new(format!(
        "quasi-triangularity, pairs <= {max_pair}, triples <= {max_triple}"
    ));
    let fail = intertwining_failure(max_pair, r_matrix);
    let detail = fail
        .map(|(g, a, b)| format!("{} on V_{a} (x) V_{b}", g.name()))
        .unwrap_or_default();
    rep.push(Outcome::new(
        "R Delta(x) = Delta^op(x) R for x in E, F, K",
        None,
        fail.is_none(),
        detail,
    ));
    let triples: Vec<_> = (0..=max_triple)
        .flat_map(|a| (0..=max_triple).flat_map(move |b| (0..=max_triple).map(move |c| (a, b, c))))
        .collect();
    let bad_hex = triples.iter().find(|t| !hexagons_hold(t.0, t.1, t.2));
    rep.push(Outcome::new(
        "(Delta (x) 1)R = R13 R23, (1 (x) Delta)R = R13 R12",
        None,
        bad_hex.is_none(),
        bad_hex.map(|t| format!("fails on {t:?}")).unwrap_or_default(),
    ));
    let bad_ybe = triples.iter().find(|t| !ybe_holds(t.0, t.1, t.2));
    rep.push(Outcome::new(
        "Yang-Baxter equation",
        None,
        bad_ybe.is_none(),
        bad_ybe.map(|t| format!("fails on {t:?}")).unwrap_or_default(),
    ));
    let trivial = intertwining_failure(max_pair.max(1), |x, y| SparseMat::identity(x.dim() * y.dim()));
    rep.push(Outcome::control(
        "R = 1 breaks R Delta = Delta^op R",
        None,
        trivial.is_some(),
        "",
    ));
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranges_pass() {
        let rep = check_quasitriangular(2, 1);
        assert!(rep.all_passed(), "{rep}");
    }
}

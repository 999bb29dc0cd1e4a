use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_rational::BigRational;

use crate::linalg::{on_legs, SparseMat};
use crate::report::{Outcome, Report};
use crate::scalars::{RatFunc, Ring};
use crate::uqsl2::{braiding, braiding_inverse, flip, r_inverse, r_matrix, Gen, Rep};
use crate::Result;

use super::actions::{ad_action, layer_rep};
use super::coeff::{antipode_coeff, coeff_product, l_entries};
use super::layout::Layout;
use super::ops::{act_dmodule, coeff_operator, x_local, Conventions};
use super::product::ProductTables;

/// First entry where `lhs` and `rhs` differ, among columns whose M-layer
/// (column index modulo `dim(A_{≤K})`) is at most `window`.
pub fn first_difference_on_window<T: Ring>(
    lhs: &SparseMat<T>,
    rhs: &SparseMat<T>,
    layout: &Layout,
    window: i64,
) -> Option<(usize, usize, T, T)> {
    let dk = layout.dim();
    let keep = |c: usize| (layout.layer_of(c % dk) as i64) <= window;
    let lt = lhs.transpose();
    let rt = rhs.transpose();
    for c in (0..lhs.cols()).filter(|&c| keep(c)) {
        if lt.row(c) != rt.row(c) {
            for r in 0..lhs.rows() {
                let (a, b) = (lhs.get(r, c), rhs.get(r, c));
                if a != b {
                    return Some((r, c, a, b));
                }
            }
        }
    }
    None
}

fn describe<T>(d: &Option<(usize, usize, T, T)>) -> String {
    match d {
        None => String::new(),
        Some((r, c, _, _)) => format!("first difference at ({r}, {c})"),
    }
}

fn outcome_eq(name: &str, window: i64, diff: Option<(usize, usize, RatFunc, RatFunc)>) -> Outcome {
    let detail = match &diff {
        None => String::new(),
        Some((r, c, a, b)) => format!("first difference at ({r}, {c}): {a} vs {b}"),
    };
    Outcome::new(name, Some(window), diff.is_none(), detail)
}

/// Both sides of the reflection equation on `V ⊗ V ⊗ A_{≤K}` (slots 2, 1, 0).
/// With `mutate`, the second `R_{21}` on the left side becomes `R_{12}`.
pub fn reflection_sides(
    tables: &ProductTables,
    conv: Conventions,
    mutate: bool,
) -> Result<(SparseMat<RatFunc>, SparseMat<RatFunc>)> {
    let dk = tables.layout.dim();
    let v = Rep::irrep(1);
    let id_m = SparseMat::identity(dk);
    let p = flip(2, 2).kron(&id_m);
    let l01 = SparseMat::identity(2).kron(&x_local(tables, conv)?);
    let l02 = p.compose(&l01).unwrap().compose(&p).unwrap();
    // first leg on slot 2 (the left V), second on slot 1
    let r21 = r_matrix(&v, &v).kron(&id_m);
    let r12 = p.compose(&r21).unwrap().compose(&p).unwrap();
    let last = if mutate { &r12 } else { &r21 };
    let lhs = l01.compose(&r12).unwrap().compose(&l02).unwrap().compose(last).unwrap();
    let rhs = r12.compose(&l02).unwrap().compose(&r21).unwrap().compose(&l01).unwrap();
    Ok((lhs, rhs))
}

/// `L_{01}R_{12}L_{02}R_{21} = R_{12}L_{02}R_{21}L_{01}` on layers `≤ K-2`,
/// plus the mutation control.
pub fn reflection_check(k: usize, conv: Conventions) -> Result<Report> {
    let tables = ProductTables::new(k, 1, conv.product);
    let w = k as i64 - 2;
    let mut rep = Report::new(format!("reflection equation, K = {k}"));
    let (lhs, rhs) = reflection_sides(&tables, conv, false)?;
    rep.push(outcome_eq(
        "L01 R12 L02 R21 = R12 L02 R21 L01",
        w,
        first_difference_on_window(&lhs, &rhs, &tables.layout, w),
    ));
    let (lhs, rhs) = reflection_sides(&tables, conv, true)?;
    let diff = first_difference_on_window(&lhs, &rhs, &tables.layout, w);
    rep.push(Outcome::control(
        "mutation R21 -> R12 breaks the reflection equation",
        Some(w),
        diff.is_some(),
        describe(&diff),
    ));
    Ok(rep)
}

/// Right-hand side operator of the D-module rule on `A_1 ⊗ A_{≤K}` for one
/// generator. In the transported frame `V_m* ⊗ V_m` of every layer, `x₁`
/// acts on the dual slot of `a` and `R⁻¹ (1 ⊗ x₂) R` acts on the `V` slot of
/// `a` together with the `∂_◁` slot of `m`.
fn dmodule_rhs_inner(lay: &Layout, g: Gen, conjugate: bool) -> SparseMat<RatFunc> {
    let dk = lay.dim();
    let v1 = Rep::irrep(1);
    let d1 = v1.dual();
    let t1 = braiding(&v1, &d1);
    let t1_inv = braiding_inverse(&v1, &d1);
    let mut out = SparseMat::zeros(4 * dk, 4 * dk);
    for m in 0..=lay.max_layer() {
        let vm = Rep::irrep(m);
        let dm = vm.dual();
        let dims = [2, 2, m + 1, m + 1];
        let r = r_matrix(&v1, &dm);
        let r_inv = r_inverse(&v1, &dm);
        let mut core = SparseMat::zeros(4 * (m + 1) * (m + 1), 4 * (m + 1) * (m + 1));
        for (x1, x2) in g.coproduct() {
            let first = on_legs(&dims, &[0], &d1.act_opt(*x1));
            let second = on_legs(&dims, &[2], &dm.act_opt(*x2));
            let braided = if conjugate {
                on_legs(&dims, &[1, 2], &r_inv)
                    .compose(&second)
                    .unwrap()
                    .compose(&on_legs(&dims, &[1, 2], &r))
                    .unwrap()
            } else {
                second
            };
            core = core.add(&first.compose(&braided).unwrap()).unwrap();
        }
        let bm = braiding(&vm, &dm);
        let bm_inv = braiding_inverse(&vm, &dm);
        let block = t1_inv
            .kron(&bm_inv)
            .compose(&core)
            .unwrap()
            .compose(&t1.kron(&bm))
            .unwrap();
        let ld = Layout::layer_dim(m);
        let place = |i: usize| (i / ld) * dk + lay.offset(m) + i % ld;
        for (r, c, v) in block.entries() {
            out.set(place(r), place(c), v.clone());
        }
    }
    out
}

/// The D-module commutation rule between `∂_◁(x)` and left multiplication
/// by layer-1 coefficients:
/// `x (a m) = Σ ((x₁ ⊗ S(r_j⁺) r_k⁺) ▷ a) (r_j⁻ x₂ r_k⁻ m)`.
pub fn dmodule_axiom_check(k: usize, conv: Conventions) -> Report {
    let tables = ProductTables::new(k, 1, conv.product);
    let lay = &tables.layout;
    let w = k as i64 - 1;
    let mu = tables.left_mult(1);
    let mut rep = Report::new(format!("D-module axiom, K = {k}"));
    for g in Gen::ALL {
        let lhs = act_dmodule(lay, &[g]).compose(&mu).unwrap();
        let rhs = mu.compose(&dmodule_rhs_inner(lay, g, true)).unwrap();
        rep.push(outcome_eq(
            &format!("D-module rule for {}", g.name()),
            w,
            first_difference_on_window(&lhs, &rhs, lay, w),
        ));
        if matches!(g, Gen::E | Gen::F) {
            let plain = mu.compose(&dmodule_rhs_inner(lay, g, false)).unwrap();
            let diff = first_difference_on_window(&lhs, &plain, lay, w);
            rep.push(Outcome::control(
                format!("dropping the R-conjugation breaks the rule for {}", g.name()),
                Some(w),
                diff.is_some(),
                describe(&diff),
            ));
        }
    }
    rep
}

/// `ad x (a · m) = Σ (ad x₁ a)(ad x₂ m)` for layer-1 coefficients `a`.
pub fn module_algebra_check(k: usize, conv: Conventions) -> Report {
    let tables = ProductTables::new(k, 1, conv.product);
    let lay = &tables.layout;
    let w = k as i64 - 1;
    let mu = tables.left_mult(1);
    let a1 = layer_rep(1);
    let mut rep = Report::new(format!("module-algebra property, K = {k}"));
    for g in Gen::ALL {
        let lhs = ad_action(lay, g).compose(&mu).unwrap();
        let mut inner = SparseMat::zeros(mu.cols(), mu.cols());
        for (x1, x2) in g.coproduct() {
            let ad2 = match x2 {
                Some(h) => ad_action(lay, *h),
                None => SparseMat::identity(lay.dim()),
            };
            inner = inner.add(&a1.act_opt(*x1).kron(&ad2)).unwrap();
        }
        let rhs = mu.compose(&inner).unwrap();
        rep.push(outcome_eq(
            &format!("ad {} is a derivation-like action", g.name()),
            w,
            first_difference_on_window(&lhs, &rhs, lay, w),
        ));
    }
    rep
}

/// `(c c') m = c (c' m)` for layer-1 coefficients on layers `≤ K-2`.
pub fn associativity_check(k: usize, conv: Conventions) -> Report {
    let tables = ProductTables::new(k, 2, conv.product);
    let lay = &tables.layout;
    let dk = lay.dim();
    let w = k as i64 - 2;
    let mu1 = tables.left_mult(1);
    let nested = mu1.compose(&SparseMat::identity(4).kron(&mu1)).unwrap();
    // μ_{1,1} as a map A_1 ⊗ A_1 → A_{≤2}
    let l2 = Layout::new(2);
    let mut mu11 = SparseMat::zeros(l2.dim(), 16);
    for a in 0..4 {
        for b in 0..4 {
            let mut ea = alloc::vec![RatFunc::zero(); 4];
            ea[a] = RatFunc::one();
            let mut eb = alloc::vec![RatFunc::zero(); 4];
            eb[b] = RatFunc::one();
            for (r, x) in coeff_product(&ea, &eb, conv.product).into_iter().enumerate() {
                if !x.is_zero() {
                    mu11.set(r, a * 4 + b, x);
                }
            }
        }
    }
    let paired = tables
        .full_mult()
        .compose(&mu11.kron(&SparseMat::identity(dk)))
        .unwrap();
    let mut rep = Report::new(format!("associativity, K = {k}"));
    rep.push(outcome_eq(
        "(c c') m = c (c' m)",
        w,
        first_difference_on_window(&paired, &nested, lay, w),
    ));
    rep
}

fn at_one(m: &SparseMat<RatFunc>) -> SparseMat<BigRational> {
    m.eval(&BigRational::from_integer(1.into())).expect("no pole at s = 1")
}

/// Classical limit: at `s = 1` left multiplications by layer-1
/// coefficients commute, and the solved inverse of `L` is the adjugate.
pub fn classical_limit_check(k: usize, conv: Conventions) -> Report {
    let tables = ProductTables::new(k, 1, conv.product);
    let lay = &tables.layout;
    let w = k as i64 - 2;
    let mut rep = Report::new(format!("classical limit s = 1, K = {k}"));
    let basis: Vec<_> = (0..4)
        .map(|a| {
            let mut e = alloc::vec![RatFunc::zero(); 4];
            e[a] = RatFunc::one();
            at_one(&coeff_operator(&tables, &e))
        })
        .collect();
    let mut diff = None;
    'outer: for a in 0..4 {
        for b in 0..4 {
            let lhs = basis[a].compose(&basis[b]).unwrap();
            let rhs = basis[b].compose(&basis[a]).unwrap();
            if let Some(d) = first_difference_on_window(&lhs, &rhs, lay, w) {
                diff = Some((a, b, d.0, d.1));
                break 'outer;
            }
        }
    }
    rep.push(Outcome::new(
        "layer-1 coefficients commute at s = 1",
        Some(w),
        diff.is_none(),
        diff.map(|d| format!("{d:?}")).unwrap_or_default(),
    ));
    let ok = match antipode_coeff(conv.coaction, conv.product) {
        Ok(b) => {
            let l = l_entries(conv.coaction);
            let one = BigRational::from_integer(1.into());
            let ev = |c: &Vec<RatFunc>| -> Vec<BigRational> { c.iter().map(|x| x.eval(&one).unwrap()).collect() };
            let neg = |c: Vec<BigRational>| -> Vec<BigRational> { c.into_iter().map(|x| -x).collect() };
            ev(&b[0][0]) == ev(&l[1][1])
                && ev(&b[1][1]) == ev(&l[0][0])
                && ev(&b[0][1]) == neg(ev(&l[0][1]))
                && ev(&b[1][0]) == neg(ev(&l[1][0]))
        }
        Err(_) => false,
    };
    rep.push(Outcome::new("inverse of L is the adjugate at s = 1", None, ok, ""));
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::SparseMat;
    use crate::rea::x_inv_local;

    fn assert_passed(rep: &Report) {
        assert!(rep.all_passed(), "{rep}");
    }

    #[test]
    fn reflection_equation_holds_and_mutation_breaks_it() {
        assert_passed(&reflection_check(3, Conventions::default()).unwrap());
    }

    #[test]
    fn reflection_equation_fails_for_wrong_product_sign() {
        let conv = Conventions {
            product: 1,
            ..Conventions::default()
        };
        let tables = ProductTables::new(3, 1, conv.product);
        let (lhs, rhs) = reflection_sides(&tables, conv, false).unwrap();
        assert!(first_difference_on_window(&lhs, &rhs, &tables.layout, 1).is_some());
    }

    #[test]
    fn dmodule_and_module_algebra() {
        assert_passed(&dmodule_axiom_check(3, Conventions::default()));
        assert_passed(&module_algebra_check(3, Conventions::default()));
    }

    #[test]
    fn associativity_and_classical_limit() {
        assert_passed(&associativity_check(3, Conventions::default()));
        assert_passed(&classical_limit_check(3, Conventions::default()));
    }

    #[test]
    fn x_inverse_is_two_sided_on_window() {
        let conv = Conventions::default();
        let t = ProductTables::new(3, 1, conv.product);
        let x = x_local(&t, conv).unwrap();
        let xi = x_inv_local(&t, conv).unwrap();
        let id = SparseMat::identity(x.rows());
        assert!(first_difference_on_window(&x.compose(&xi).unwrap(), &id, &t.layout, 1).is_none());
        assert!(first_difference_on_window(&xi.compose(&x).unwrap(), &id, &t.layout, 1).is_none());
    }

    #[test]
    fn unit_coefficient_acts_trivially() {
        use crate::rea::{mult_coeff, LayeredElement};
        let conv = Conventions::default();
        let t = ProductTables::new(2, 1, conv.product);
        // the identity of V_1 ⊗ V_1* times the unit lands in layer 1 only
        let mut id1 = alloc::vec![RatFunc::zero(); 4];
        id1[0] = RatFunc::one();
        id1[3] = RatFunc::one();
        let u = LayeredElement::unit(2);
        let out = mult_coeff(&t, &id1, &u).unwrap();
        assert_eq!(out.layers[1], id1);
        assert!(out.layers[0].iter().all(Ring::is_zero));
    }
}

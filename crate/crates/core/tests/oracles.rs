//! End-to-end checks against independently known values.

use braidrep_core::elliptic::{check_daha, check_elliptic, check_scalars, invariants, Mode};
use braidrep_core::rea::{reflection_check, Conventions};
use braidrep_core::scalars::RatFunc;
use braidrep_core::slnjets::{check_yis, KParam};
use braidrep_core::uqsl2::RibbonData;

fn fact<'a>(r: &'a braidrep_core::report::Report, key: &str) -> &'a str {
    &r.facts.iter().find(|f| f.0 == key).unwrap().1
}

#[test]
fn ribbon_twist_on_the_fundamental_is_s_cubed() {
    let rd = RibbonData::new(3).unwrap();
    assert_eq!(rd.theta(0), &RatFunc::var_pow(0));
    assert_eq!(rd.theta(1), &RatFunc::var_pow(3));
    assert_eq!(rd.theta(2), &RatFunc::var_pow(8));
}

#[test]
fn invariant_dimensions_for_two_strands() {
    for k in 0..5 {
        assert_eq!(invariants(2, k).dim(), 2 * k + 1);
    }
}

#[test]
fn elliptic_suite_passes_in_both_modes() {
    let exact = check_elliptic(2, 3, Mode::Exact).unwrap();
    let sampled = check_elliptic(2, 3, Mode::Probabilistic { trials: 2, seed: 11 }).unwrap();
    assert!(exact.all_passed(), "{exact}");
    let names = |r: &braidrep_core::report::Report| {
        r.outcomes
            .iter()
            .map(|o| (o.name.clone(), o.passed))
            .collect::<Vec<_>>()
    };
    assert_eq!(names(&exact), names(&sampled));
}

#[test]
fn ribbon_constant_is_the_inverse_twist() {
    let rep = check_scalars(2, 3).unwrap();
    assert!(rep.all_passed(), "{rep}");
    assert_eq!(fact(&rep, "c_V"), "theta_1^-1 = 1*s^0 / 1*s^3");
}

#[test]
fn hecke_quotient_and_reflection_equation() {
    let rep = check_daha(2, 3).unwrap();
    assert!(rep.all_passed(), "{rep}");
    let rep = reflection_check(3, Conventions::default()).unwrap();
    assert!(rep.all_passed(), "{rep}");
}

#[test]
fn degeneration_constant_is_two_n_k() {
    let rep = check_yis(3, 2, &KParam::Symbolic, 3).unwrap();
    assert!(rep.all_passed(), "{rep}");
    assert_eq!(fact(&rep, "alpha"), "4*k^1");
    assert_eq!(fact(&rep, "claimed alpha"), "1*k^1");
}

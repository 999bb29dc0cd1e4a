//! The elliptic braid group and DAHA operators on `W = (V^{⊗n} ⊗ A_{≤K})^inv`.

mod checks;
mod ops;
mod space;

pub use checks::{
    affine_hecke_check, auxiliary_relations, build, check_daha, check_daha_on, check_elliptic, check_elliptic_on,
    check_scalars, check_scalars_on, elliptic_relations, first_difference_on_columns, grading_outcomes,
    t_product_literal, t_tilde, x_tilde_via_coaction, Clock, Generators, Letter, Mode, Relation, WChecker,
};
pub use ops::{product, restrict, scalar, y_generators, AmbientOps, WOperator, WOps};
pub use space::{invariants, tensor_power_rep, InvariantBasis, InvariantVector};

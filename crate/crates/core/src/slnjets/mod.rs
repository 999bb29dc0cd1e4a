//! The defining representation of `U_t(sl_N)` and the trigonometric
//! degeneration `q = e^ħ`, `t = e^{nkħ}` of the operators `T_i`, `Y_i`.

mod classical;
mod degenerate;
mod vector;

pub use classical::{casimir, casimir_tensor, check_omega, elementary, inv_n, omega, omega_on, slot_flip};
pub use degenerate::{
    build_formal_ops, check_yis, coefficient, extract_degenerate, proportionality, show_k, substitute,
    substitute_matrix, u_jet, yis_shape, Degenerate, FormalOps, KParam, DEFAULT_ORDER,
};
pub use vector::{check_hecke, rhat, VectorRepR};

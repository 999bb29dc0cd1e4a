//! The truncated reflection equation algebra `A_{≤K} = ⊕_{m≤K} V_m ⊗ V_m*`
//! as a quantum D-module: bimodule and adjoint actions, the braided
//! product, the coaction element `L`, its inverse, and executable checks.

mod actions;
mod checks;
mod coeff;
mod layout;
mod ops;
mod product;

pub use actions::{act_left, act_right, ad_action, layer_rep};
pub use checks::{
    associativity_check, classical_limit_check, dmodule_axiom_check, first_difference_on_window, module_algebra_check,
    reflection_check, reflection_sides,
};
pub use coeff::{antipode_coeff, coaction_matrix, coeff_product, counit, curl, l_entries, mult_coeff, CoeffTensor};
pub use layout::{LayeredElement, Layout, Window};
pub use ops::{
    act_dmodule, coact_multiply, coeff_operator, dmodule_block, lift_per_layer, matrix_of_coeffs, x_inv_local, x_local,
    y_local, Conventions, YShape,
};
pub use product::{product_blocks, signed_braiding, Decomposition, ProductTables};

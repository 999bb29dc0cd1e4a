//! Finite-dimensional weight modules of `U_q(sl_2)` over `Q(s)`, `q = s²`,
//! with the braided ribbon structure used by the other engines.

mod cg;
mod checks;
mod rep;
mod ribbon;
mod rmatrix;

pub use cg::{cg, CgComponent, CgDecomposition};
pub use checks::check_quasitriangular;
pub use rep::{q, qfactorial, qint, Gen, Rep};
pub use ribbon::{categorical_trace, coev, double_braiding_on_component, ev, RibbonData};
pub use rmatrix::{braiding, braiding_inverse, double_braiding, double_braiding_pow, flip, r_inverse, r_matrix};

//! η-Ricci soliton residuals and checks of the main results on concrete
//! structures.

mod example;
mod residual;
mod theorems;

pub use example::builtin_example;
pub use residual::{
    check_soliton, gradient_soliton_residual, potential_vector, soliton_residual, Potential,
    SolitonClass, SolitonData, SolitonVerdict,
};
pub use theorems::{
    all_theorem_reports, nullity_branch_residuals, ricci_norm_identity_value, ricci_norm_squared,
    sasakian_soliton_ricci_coefficients, verify_gradient_soliton_k_contact,
    verify_kappa_mu_gradient_soliton, verify_reeb_colinear_soliton, verify_ricci_norm_identity,
    verify_sasakian_ricci_form, verify_sasakian_soliton_dichotomy, TheoremOutcome, TheoremReport,
};

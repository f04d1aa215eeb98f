//! Contact pseudo-metric structures: axioms, structure tensors, classification
//! and D-homothetic deformations.

mod classify;
mod deform;
mod identities;
mod report;
mod structure;

pub use classify::{
    classify, fixed_coefficient, require_contact, solve_eta_einstein, solve_kappa_mu,
    ClassificationResult, EtaEinstein, KappaMu, NullityMu,
};
pub use deform::{d_homothetic_deform, deformed_eta_einstein_coefficients};
pub use identities::{
    compute_ell, compute_h, contact_identities, contact_volume, curvature_on_xi,
    k_contact_identities, kappa_mu_identities, normality_tensor, nullity_residual,
    sasakian_covariant_residual, sasakian_identities, verify_contact_condition, verify_structure,
};
pub use report::{IdentityCheck, StructureReport};
pub use structure::{ContactStructure, Epsilon};

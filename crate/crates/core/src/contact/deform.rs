use super::structure::{ContactStructure, Epsilon};
use crate::error::{Error, Result};
use crate::symbolic::Rational;

/// D-homothetic deformation: `η̃ = tη`, `ξ̃ = ξ/t`, `φ̃ = φ`,
/// `g̃ = t g + ε t(t-1) η⊗η`.
pub fn d_homothetic_deform(s: &ContactStructure, t: &Rational) -> Result<ContactStructure> {
    if *t == Rational::from_integer(0.into()) {
        return Err(Error::ZeroParameter);
    }
    let one = Rational::from_integer(1.into());
    let eps = s.epsilon().rational();
    let c = &(&eps * t) * &(t - &one);
    let g = s
        .metric()
        .scale(t)
        .try_add(&s.eta_eta().scale(&c))
        .expect("same slots");
    ContactStructure::new(
        s.phi().clone(),
        s.xi().scale(&t.recip()),
        s.eta().scale(t),
        g,
        s.epsilon(),
    )
}

/// η-Einstein coefficients after deforming by `t` a K-contact η-Einstein
/// structure with coefficient `a`: `ã = (a - 2εt + 2ε)/t`, `b̃ = 2n - εã`.
pub fn deformed_eta_einstein_coefficients(
    a: &Rational,
    epsilon: Epsilon,
    n: usize,
    t: &Rational,
) -> Result<(Rational, Rational)> {
    if *t == Rational::from_integer(0.into()) {
        return Err(Error::ZeroParameter);
    }
    let eps = epsilon.rational();
    let two = Rational::from_integer(2.into());
    let a_new = (a - &(&(&two * &eps) * t) + &two * &eps) / t;
    let b_new = Rational::from_integer((2 * n as i64).into()) - &eps * &a_new;
    Ok((a_new, b_new))
}

use super::identities::{
    compute_ell, compute_h, normality_tensor, nullity_residual, sasakian_covariant_residual,
    verify_contact_condition, verify_structure,
};
use super::structure::{ContactStructure, Epsilon};
use crate::error::{Error, Result};
use crate::symbolic::{Rational, RationalFunction};
use crate::tensor::TensorField;

/// Outcome of the η-Einstein test `Ric = a g + b η⊗η`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EtaEinstein {
    Constant {
        a: Rational,
        b: Rational,
    },
    /// The residual vanishes but `a` or `b` is not constant; not certified.
    NonConstant {
        a: RationalFunction,
        b: RationalFunction,
    },
}

impl EtaEinstein {
    pub fn constants(&self) -> Option<(&Rational, &Rational)> {
        match self {
            EtaEinstein::Constant { a, b } => Some((a, b)),
            EtaEinstein::NonConstant { .. } => None,
        }
    }
}

/// The `μ` of a `(κ, μ)`-nullity structure. It drops out of the defining
/// equation when `h = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NullityMu {
    Value(Rational),
    Indeterminate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KappaMu {
    pub kappa: Rational,
    pub mu: NullityMu,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationResult {
    pub is_contact: bool,
    pub is_k_contact: bool,
    pub is_sasakian: bool,
    pub eta_einstein: Option<EtaEinstein>,
    pub kappa_mu: Option<KappaMu>,
    pub d_fixed: bool,
}

/// Fails with `NotContact` naming the first violated axiom.
pub fn require_contact(s: &ContactStructure) -> Result<()> {
    let mut report = verify_structure(s);
    report.extend(verify_contact_condition(s));
    let failed = report.failures().next().map(|c| c.name.clone());
    match failed {
        None => Ok(()),
        Some(name) => Err(Error::NotContact(format!("`{name}` fails"))),
    }
}

/// Solves `Ric = a g + b η⊗η` and verifies the full residual.
pub fn solve_eta_einstein(s: &ContactStructure) -> Option<EtaEinstein> {
    let chart = s.chart();
    let ric = s.ricci();
    let g = s.metric();
    let dim = chart.dim();
    // On φ e_i, η vanishes, so Ric(φe_i, φe_i) = a g(φe_i, φe_i).
    let quad = |t: &TensorField, v: &TensorField| -> RationalFunction {
        let tv = t.contract_with(1, v, 0).expect("slots");
        tv.contract_with(0, v, 0).expect("slots").components()[0].clone()
    };
    let a = (0..dim).find_map(|i| {
        let col = TensorField::from_fn(chart, &[crate::tensor::Variance::Up], |k| {
            s.phi().get(&[k[0], i]).clone()
        });
        let den = quad(g, &col);
        if den.is_zero() {
            None
        } else {
            Some(&quad(ric, &col) / &den)
        }
    })?;
    let eps = s.eps_fn();
    let b = &quad(ric, s.xi()) - &(&eps * &a);
    let model = g
        .scale_by(&a)
        .try_add(&s.eta_eta().scale_by(&b))
        .expect("same slots");
    if !ric.equals(&model).expect("same slots") {
        return None;
    }
    Some(match (a.constant_value(), b.constant_value()) {
        (Some(a), Some(b)) => EtaEinstein::Constant { a, b },
        _ => EtaEinstein::NonConstant { a, b },
    })
}

/// Solves the nullity equation for constant `(κ, μ)` and verifies it.
pub fn solve_kappa_mu(s: &ContactStructure) -> Option<KappaMu> {
    let eps = s.epsilon().rational();
    let ell = compute_ell(s);
    let h = compute_h(s);
    // ℓ = εκ(I - η⊗ξ) + εμh, and tr h = 0.
    let two_n = Rational::from_integer((2 * s.n() as i64).into());
    let kappa = (ell.trace().ok()?.constant_value()? * &eps) / two_n;
    let mu = match h
        .components()
        .iter()
        .enumerate()
        .find(|(_, c)| !c.is_zero())
    {
        None => NullityMu::Indeterminate,
        Some((flat, hc)) => {
            let base = TensorField::identity(s.chart())
                .try_sub(&s.xi_eta())
                .expect("(1,1)")
                .scale(&(&eps * &kappa));
            let rest = &ell.components()[flat] - &base.components()[flat];
            let m = (&rest / hc).constant_value()? * &eps;
            NullityMu::Value(m)
        }
    };
    let mu_for_check = match &mu {
        NullityMu::Value(m) => m.clone(),
        NullityMu::Indeterminate => Rational::from_integer(0.into()),
    };
    if !nullity_residual(s, &kappa, &mu_for_check).is_zero() {
        return None;
    }
    Some(KappaMu { kappa, mu })
}

/// `a = -2ε`, the coefficient preserved by D-homothetic deformations.
pub fn fixed_coefficient(epsilon: Epsilon) -> Rational {
    Rational::from_integer((-2 * epsilon.sign()).into())
}

pub fn classify(s: &ContactStructure) -> Result<ClassificationResult> {
    require_contact(s)?;
    let is_k_contact = compute_h(s).is_zero();
    let normal = normality_tensor(s).is_zero();
    let covariant = sasakian_covariant_residual(s).is_zero();
    if normal != covariant {
        return Err(Error::Internal(format!(
            "normality ({normal}) disagrees with the covariant Sasakian criterion ({covariant})"
        )));
    }
    let is_sasakian = normal && is_k_contact;
    if normal && !is_k_contact {
        return Err(Error::Internal(
            "normal contact structure with h ≠ 0".into(),
        ));
    }
    let eta_einstein = solve_eta_einstein(s);
    let kappa_mu = solve_kappa_mu(s);
    let d_fixed = is_k_contact
        && matches!(
            eta_einstein.as_ref().and_then(EtaEinstein::constants),
            Some((a, _)) if *a == fixed_coefficient(s.epsilon())
        );
    Ok(ClassificationResult {
        is_contact: true,
        is_k_contact,
        is_sasakian,
        eta_einstein,
        kappa_mu,
        d_fixed,
    })
}

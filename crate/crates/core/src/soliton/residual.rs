use crate::contact::ContactStructure;
use crate::error::{Error, Result};
use crate::symbolic::{Rational, RationalFunction};
use crate::tensor::{gradient, hessian, lie_derivative, TensorField};

/// The soliton potential: a vector field `V`, or a function `f` with `V = Df`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Potential {
    Vector(TensorField),
    Scalar(RationalFunction),
}

/// `(V or f, λ, μ)`. In the `(κ, μ)`-nullity setting the soliton constant
/// `mu` is the one usually written `τ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolitonData {
    pub potential: Potential,
    pub lambda: Rational,
    pub mu: Rational,
}

impl SolitonData {
    pub fn vector(v: TensorField, lambda: Rational, mu: Rational) -> Self {
        SolitonData {
            potential: Potential::Vector(v),
            lambda,
            mu,
        }
    }

    pub fn scalar(f: RationalFunction, lambda: Rational, mu: Rational) -> Self {
        SolitonData {
            potential: Potential::Scalar(f),
            lambda,
            mu,
        }
    }

    pub fn class(&self) -> SolitonClass {
        SolitonClass::of(&self.lambda)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SolitonClass {
    Shrinking,
    Steady,
    Expanding,
}

impl SolitonClass {
    /// Shrinking for `λ < 0`, steady for `λ = 0`, expanding for `λ > 0`.
    pub fn of(lambda: &Rational) -> Self {
        use num_traits::Signed;
        if lambda.is_negative() {
            SolitonClass::Shrinking
        } else if lambda.is_positive() {
            SolitonClass::Expanding
        } else {
            SolitonClass::Steady
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SolitonClass::Shrinking => "shrinking",
            SolitonClass::Steady => "steady",
            SolitonClass::Expanding => "expanding",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolitonVerdict {
    pub is_soliton: bool,
    pub residual: TensorField,
    pub class: SolitonClass,
    pub potential_is_killing: bool,
    pub lie_phi_vanishes: bool,
}

/// The potential vector field: `V` itself, or `Df`.
pub fn potential_vector(s: &ContactStructure, d: &SolitonData) -> Result<TensorField> {
    match &d.potential {
        Potential::Vector(v) => {
            if v.chart() != s.chart() {
                return Err(Error::ChartMismatch(
                    "potential on a different chart".into(),
                ));
            }
            Ok(v.clone())
        }
        Potential::Scalar(f) => gradient(f, s.geometry()),
    }
}

fn verdict(
    s: &ContactStructure,
    d: &SolitonData,
    residual: TensorField,
    v: &TensorField,
) -> Result<SolitonVerdict> {
    let lie_g = lie_derivative(s.metric(), v)?;
    let lie_phi = lie_derivative(s.phi(), v)?;
    Ok(SolitonVerdict {
        is_soliton: residual.is_zero(),
        residual,
        class: d.class(),
        potential_is_killing: lie_g.is_zero(),
        lie_phi_vanishes: lie_phi.is_zero(),
    })
}

/// `2Ric + 2λg + 2μη⊗η`.
fn curvature_part(s: &ContactStructure, d: &SolitonData, factor: i64) -> TensorField {
    let f = Rational::from_integer(factor.into());
    s.ricci()
        .scale(&f)
        .try_add(&s.metric().scale(&(&f * &d.lambda)))
        .and_then(|t| t.try_add(&s.eta_eta().scale(&(&f * &d.mu))))
        .expect("same slots")
}

/// `𝔏_V g + 2Ric + 2λg + 2μη⊗η` for a vector potential.
pub fn soliton_residual(s: &ContactStructure, d: &SolitonData) -> Result<SolitonVerdict> {
    let Potential::Vector(_) = &d.potential else {
        return Err(Error::InvariantViolation(
            "η-Ricci soliton check needs a vector potential".into(),
        ));
    };
    let v = potential_vector(s, d)?;
    let residual = lie_derivative(s.metric(), &v)?.try_add(&curvature_part(s, d, 2))?;
    verdict(s, d, residual, &v)
}

/// `Hess f + Ric + λg + μη⊗η` for a scalar potential.
pub fn gradient_soliton_residual(s: &ContactStructure, d: &SolitonData) -> Result<SolitonVerdict> {
    let Potential::Scalar(f) = &d.potential else {
        return Err(Error::InvariantViolation(
            "gradient η-Ricci soliton check needs a scalar potential".into(),
        ));
    };
    if f.vars() != s.chart().vars() {
        return Err(Error::ChartMismatch(
            "potential on a different chart".into(),
        ));
    }
    let residual = hessian(f, &s.geometry().connection)?.try_add(&curvature_part(s, d, 1))?;
    let v = potential_vector(s, d)?;
    verdict(s, d, residual, &v)
}

/// Dispatches on the potential kind.
pub fn check_soliton(s: &ContactStructure, d: &SolitonData) -> Result<SolitonVerdict> {
    match d.potential {
        Potential::Vector(_) => soliton_residual(s, d),
        Potential::Scalar(_) => gradient_soliton_residual(s, d),
    }
}

use super::residual::{check_soliton, potential_vector, Potential, SolitonData};
use crate::contact::{
    classify, compute_h, curvature_on_xi, require_contact, solve_eta_einstein, ContactStructure,
    EtaEinstein, IdentityCheck, NullityMu,
};
use crate::symbolic::{Rational, RationalFunction, VarSet};
use crate::tensor::{lie_derivative, TensorField};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TheoremOutcome {
    Verified,
    HypothesisNotMet,
    Violation,
}

impl TheoremOutcome {
    pub fn as_str(self) -> &'static str {
        match self {
            TheoremOutcome::Verified => "verified",
            TheoremOutcome::HypothesisNotMet => "hypothesis_not_met",
            TheoremOutcome::Violation => "violation",
        }
    }
}

/// Hypotheses and conclusions of one result, each checked exactly.
/// Conclusions are only evaluated when every hypothesis holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub name: String,
    pub hypotheses: Vec<IdentityCheck>,
    pub conclusions: Vec<IdentityCheck>,
    pub outcome: TheoremOutcome,
}

struct Builder {
    name: &'static str,
    hypotheses: Vec<IdentityCheck>,
}

impl Builder {
    fn new(name: &'static str) -> Self {
        Builder {
            name,
            hypotheses: Vec::new(),
        }
    }

    fn hypothesis(&mut self, check: IdentityCheck) -> bool {
        let holds = check.holds;
        self.hypotheses.push(check);
        holds
    }

    fn not_met(self) -> TheoremReport {
        TheoremReport {
            name: self.name.to_string(),
            hypotheses: self.hypotheses,
            conclusions: Vec::new(),
            outcome: TheoremOutcome::HypothesisNotMet,
        }
    }

    fn conclude(self, conclusions: Vec<IdentityCheck>) -> TheoremReport {
        let outcome = if conclusions.iter().all(|c| c.holds) {
            TheoremOutcome::Verified
        } else {
            TheoremOutcome::Violation
        };
        TheoremReport {
            name: self.name.to_string(),
            hypotheses: self.hypotheses,
            conclusions,
            outcome,
        }
    }
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn half(r: Rational) -> Rational {
    r / q(2)
}

fn rational_check(
    name: impl Into<String>,
    s: &ContactStructure,
    lhs: &Rational,
    rhs: &Rational,
) -> IdentityCheck {
    IdentityCheck::vanishing_scalar(name, s.chart(), s.chart().constant(lhs - rhs))
}

/// `Ric - a g - b η⊗η`.
fn eta_einstein_residual(s: &ContactStructure, a: &Rational, b: &Rational) -> TensorField {
    s.ricci()
        .try_sub(&s.metric().scale(a))
        .and_then(|t| t.try_sub(&s.eta_eta().scale(b)))
        .expect("same slots")
}

fn contact_hypothesis(s: &ContactStructure) -> IdentityCheck {
    IdentityCheck::flag(
        "contact pseudo-metric structure",
        require_contact(s).is_ok(),
    )
}

fn soliton_hypothesis(s: &ContactStructure, d: &SolitonData) -> IdentityCheck {
    let name = match d.potential {
        Potential::Vector(_) => "𝔏_Vg + 2Ric + 2λg + 2μη⊗η = 0",
        Potential::Scalar(_) => "Hess f + Ric + λg + μη⊗η = 0",
    };
    match check_soliton(s, d) {
        Ok(v) => IdentityCheck::vanishing(name, v.residual),
        Err(_) => IdentityCheck::flag(name, false),
    }
}

fn sasakian_hypothesis(s: &ContactStructure) -> IdentityCheck {
    let sasakian = classify(s).map(|c| c.is_sasakian).unwrap_or(false);
    IdentityCheck::flag("Sasakian", sasakian)
}

fn k_contact_hypothesis(s: &ContactStructure) -> IdentityCheck {
    IdentityCheck::vanishing("h = 0 (K-contact)", compute_h(s))
}

/// `a = nε + (με - λ)/2`, `b = n(ε+1)/2 + λ(ε+1)/4 + (ε-3)μ/4` and
/// `r = ε(λ - μ + 8n² + (4μ + 6)n)/4 + (-λ + μ - 4λn + 2n)/4`.
pub fn sasakian_soliton_ricci_coefficients(
    n: usize,
    epsilon: crate::contact::Epsilon,
    lambda: &Rational,
    mu: &Rational,
) -> (Rational, Rational, Rational) {
    let n = q(n as i64);
    let e = epsilon.rational();
    let a = &n * &e + half(mu * &e - lambda);
    let e1 = &e + q(1);
    let b = half(&n * &e1) + lambda * &e1 / q(4) + (&e - q(3)) * mu / q(4);
    let r = &e * (lambda - mu + q(8) * &n * &n + (q(4) * mu + q(6)) * &n) / q(4)
        + (-lambda + mu - q(4) * lambda * &n + q(2) * &n) / q(4);
    (a, b, r)
}

/// On a Sasakian η-Ricci soliton the metric is η-Einstein with the closed-form
/// coefficients of [`sasakian_soliton_ricci_coefficients`].
pub fn verify_sasakian_ricci_form(s: &ContactStructure, d: &SolitonData) -> TheoremReport {
    let mut b = Builder::new("Sasakian η-Ricci soliton is η-Einstein");
    let ok = b.hypothesis(contact_hypothesis(s))
        && b.hypothesis(sasakian_hypothesis(s))
        && b.hypothesis(soliton_hypothesis(s, d));
    if !ok {
        return b.not_met();
    }
    let (a, bb, r) = sasakian_soliton_ricci_coefficients(s.n(), s.epsilon(), &d.lambda, &d.mu);
    let chart = s.chart();
    b.conclude(vec![
        IdentityCheck::vanishing(
            format!("Ric = ({a})g + ({bb})η⊗η"),
            eta_einstein_residual(s, &a, &bb),
        ),
        IdentityCheck::vanishing_scalar(
            format!("r = {r}"),
            chart,
            s.scalar_curvature() - &chart.constant(r.clone()),
        ),
    ])
}

/// `Ric^{ij} Ric_{ij}`.
pub fn ricci_norm_squared(s: &ContactStructure) -> RationalFunction {
    s.geometry()
        .inner_product_02(s.ricci(), s.ricci())
        .expect("(0,2) tensors")
}

/// `Ric^{ij}Ric_{ij} + λr + μ(εa + b)`.
pub fn ricci_norm_identity_value(
    s: &ContactStructure,
    a: &Rational,
    b: &Rational,
    lambda: &Rational,
    mu: &Rational,
) -> RationalFunction {
    let chart = s.chart();
    let e = s.epsilon().rational();
    let tail = mu * &(&e * a + b);
    &(&ricci_norm_squared(s) + &s.scalar_curvature().scale(lambda)) + &chart.constant(tail)
}

/// On an η-Einstein manifold with constant coefficients carrying an η-Ricci
/// soliton, `Ric^{ij}Ric_{ij} + λr + μ(εa + b) = 0`.
pub fn verify_ricci_norm_identity(s: &ContactStructure, d: &SolitonData) -> TheoremReport {
    let mut b = Builder::new("Ricci norm identity for η-Einstein solitons");
    if !b.hypothesis(contact_hypothesis(s)) {
        return b.not_met();
    }
    let coeffs = solve_eta_einstein(s);
    let Some(EtaEinstein::Constant { a, b: bb }) = coeffs else {
        b.hypothesis(IdentityCheck::flag(
            "Ric = ag + bη⊗η with constant a, b",
            false,
        ));
        return b.not_met();
    };
    b.hypothesis(IdentityCheck::flag(
        format!("Ric = ({a})g + ({bb})η⊗η"),
        true,
    ));
    if !b.hypothesis(soliton_hypothesis(s, d)) {
        return b.not_met();
    }
    let value = ricci_norm_identity_value(s, &a, &bb, &d.lambda, &d.mu);
    b.conclude(vec![IdentityCheck::vanishing_scalar(
        "Ric^{ij}Ric_{ij} + λr + μ(εa + b) = 0",
        s.chart(),
        value,
    )])
}

/// On a Sasakian η-Ricci soliton: timelike `ξ` forces `V` Killing; spacelike
/// `ξ` with `V` not Killing forces `Ric = -2g + 2(n+1)η⊗η`, D-homothetic
/// fixedness, `𝔏_Vφ = 0` and `λ - μ = 2n + 4`.
pub fn verify_sasakian_soliton_dichotomy(s: &ContactStructure, d: &SolitonData) -> TheoremReport {
    let mut b = Builder::new("Sasakian η-Ricci soliton dichotomy");
    let ok = b.hypothesis(contact_hypothesis(s))
        && b.hypothesis(sasakian_hypothesis(s))
        && b.hypothesis(soliton_hypothesis(s, d));
    if !ok {
        return b.not_met();
    }
    let v = potential_vector(s, d).expect("soliton check passed");
    let lie_g = lie_derivative(s.metric(), &v).expect("same chart");
    let n = q(s.n() as i64);
    let killing = lie_g.is_zero();
    let mut out = Vec::new();
    match s.epsilon() {
        crate::contact::Epsilon::Timelike => {
            out.push(IdentityCheck::vanishing("𝔏_Vg = 0 (V Killing)", lie_g));
            out.push(rational_check(
                "λ - μ = 2n",
                s,
                &(&d.lambda - &d.mu),
                &(q(2) * &n),
            ));
        }
        crate::contact::Epsilon::Spacelike if killing => {
            out.push(IdentityCheck::flag("𝔏_Vg = 0 (V Killing)", true));
        }
        crate::contact::Epsilon::Spacelike => {
            let bb = q(2) * (&n + q(1));
            out.push(IdentityCheck::vanishing(
                "Ric = -2g + 2(n+1)η⊗η",
                eta_einstein_residual(s, &q(-2), &bb),
            ));
            let fixed = classify(s).map(|c| c.d_fixed).unwrap_or(false);
            out.push(IdentityCheck::flag("D-homothetically fixed", fixed));
            out.push(IdentityCheck::vanishing(
                "𝔏_Vφ = 0",
                lie_derivative(s.phi(), &v).expect("same chart"),
            ));
            out.push(rational_check(
                "λ - μ = 2n + 4",
                s,
                &(&d.lambda - &d.mu),
                &(q(2) * &n + q(4)),
            ));
        }
    }
    b.conclude(out)
}

/// A gradient η-Ricci soliton on a K-contact manifold has
/// `Ric = -λg - μη⊗η` and `-ελ - μ = 2n`.
pub fn verify_gradient_soliton_k_contact(s: &ContactStructure, d: &SolitonData) -> TheoremReport {
    let mut b = Builder::new("gradient η-Ricci soliton on K-contact");
    let ok = b.hypothesis(contact_hypothesis(s))
        && b.hypothesis(k_contact_hypothesis(s))
        && b.hypothesis(IdentityCheck::flag(
            "potential is a function",
            matches!(d.potential, Potential::Scalar(_)),
        ))
        && b.hypothesis(soliton_hypothesis(s, d));
    if !ok {
        return b.not_met();
    }
    let e = s.epsilon().rational();
    let n = q(s.n() as i64);
    b.conclude(vec![
        IdentityCheck::vanishing(
            "Ric = -λg - μη⊗η",
            eta_einstein_residual(s, &-d.lambda.clone(), &-d.mu.clone()),
        ),
        rational_check(
            "-ελ - μ = 2n",
            s,
            &(-(&e * &d.lambda) - &d.mu),
            &(q(2) * &n),
        ),
    ])
}

/// If `V = fξ` and `Qφ = φQ` on an η-Ricci soliton, the manifold is an
/// η-Einstein K-contact manifold.
pub fn verify_reeb_colinear_soliton(s: &ContactStructure, d: &SolitonData) -> TheoremReport {
    let mut b = Builder::new("η-Ricci soliton with V colinear with ξ");
    if !b.hypothesis(contact_hypothesis(s)) {
        return b.not_met();
    }
    let Ok(v) = potential_vector(s, d) else {
        b.hypothesis(IdentityCheck::flag("V = fξ", false));
        return b.not_met();
    };
    let f = s.eta().contract_with(0, &v, 0).expect("slots");
    let f = f.as_scalar().expect("scalar");
    let colinear = v.try_sub(&s.xi().scale_by(f)).expect("same slots");
    let q_op = s.ricci_operator();
    let comm = q_op
        .compose(s.phi())
        .and_then(|a| a.try_sub(&s.phi().compose(&q_op)?))
        .expect("endomorphisms");
    let ok = b.hypothesis(IdentityCheck::vanishing("V = η(V)ξ", colinear))
        && b.hypothesis(IdentityCheck::vanishing("Qφ = φQ", comm))
        && b.hypothesis(soliton_hypothesis(s, d));
    if !ok {
        return b.not_met();
    }
    let eta_einstein = match solve_eta_einstein(s) {
        Some(EtaEinstein::Constant { a, b }) => {
            IdentityCheck::flag(format!("Ric = ({a})g + ({b})η⊗η"), true)
        }
        Some(EtaEinstein::NonConstant { .. }) => IdentityCheck::flag("Ric = ag + bη⊗η", true),
        None => IdentityCheck::flag("Ric = ag + bη⊗η", false),
    };
    b.conclude(vec![k_contact_hypothesis(s), eta_einstein])
}

/// Residuals of `εκ(μ - 2) - (nμ + μ + τ)` on the two branches
/// `μ = 0, τ = -2εκ` and `μ = 2 - 2n, τ = 2n(-1/n + n - εκ)`, as functions of
/// an indeterminate `kappa`.
pub fn nullity_branch_residuals(
    n: usize,
    epsilon: crate::contact::Epsilon,
) -> [RationalFunction; 2] {
    let vars = VarSet::new(["kappa"]).expect("valid name");
    let kappa = RationalFunction::var(&vars, 0);
    let c = |r: Rational| RationalFunction::constant(&vars, r);
    let e = epsilon.rational();
    let nq = q(n as i64);
    let ek = kappa.scale(&e);
    let constraint = |mu: &RationalFunction, tau: &RationalFunction| {
        let lhs = &ek * &(mu - &c(q(2)));
        let rhs = &mu.scale(&(&nq + q(1))) + tau;
        &lhs - &rhs
    };
    let first = constraint(&c(q(0)), &ek.scale(&q(-2)));
    let mu2 = c(q(2) - q(2) * &nq);
    let tau2 = (&c(-(q(1) / &nq) + &nq) - &ek).scale(&(q(2) * &nq));
    [first, constraint(&mu2, &tau2)]
}

/// For a gradient η-Ricci soliton `(f, λ, τ)` on a `(κ, μ)` structure with
/// `εκ < 1`: `εκ(μ - 2) = nμ + μ + τ`; either `μ = 0, τ = -2εκ` or
/// `Ric = -λg - τη⊗η, μ = 2 - 2n, τ = 2n(-1/n + n - εκ)`; and `τ = 0` forces
/// `R(X, Y)ξ = 0`.
pub fn verify_kappa_mu_gradient_soliton(s: &ContactStructure, d: &SolitonData) -> TheoremReport {
    let mut b = Builder::new("gradient η-Ricci soliton on a (κ, μ) structure");
    if !b.hypothesis(contact_hypothesis(s)) {
        return b.not_met();
    }
    let km = classify(s).ok().and_then(|c| c.kappa_mu);
    let (kappa, mu) = match km {
        Some(crate::contact::KappaMu {
            kappa,
            mu: NullityMu::Value(mu),
        }) => (kappa, mu),
        _ => {
            b.hypothesis(IdentityCheck::flag(
                "(κ, μ)-nullity with determined κ, μ",
                false,
            ));
            return b.not_met();
        }
    };
    b.hypothesis(IdentityCheck::flag(
        format!("(κ, μ)-nullity with κ = {kappa}, μ = {mu}"),
        true,
    ));
    let e = s.epsilon().rational();
    let ek = &e * &kappa;
    let ok = b.hypothesis(IdentityCheck::flag("εκ < 1", ek < q(1)))
        && b.hypothesis(IdentityCheck::flag(
            "potential is a function",
            matches!(d.potential, Potential::Scalar(_)),
        ))
        && b.hypothesis(soliton_hypothesis(s, d));
    if !ok {
        return b.not_met();
    }
    let n = q(s.n() as i64);
    let tau = &d.mu;
    let lambda = &d.lambda;
    let mut out = vec![rational_check(
        "εκ(μ - 2) = nμ + μ + τ",
        s,
        &(&ek * &(&mu - q(2))),
        &(&n * &mu + &mu + tau),
    )];
    let branch1 = mu == q(0) && *tau == q(-2) * &ek;
    let branch2 = mu == q(2) - q(2) * &n
        && *tau == q(2) * &n * (-(q(1) / &n) + &n - &ek)
        && eta_einstein_residual(s, &-lambda.clone(), &-tau.clone()).is_zero();
    out.push(IdentityCheck::flag(
        "μ = 0, τ = -2εκ or Ric = -λg - τη⊗η, μ = 2 - 2n, τ = 2n(-1/n + n - εκ)",
        branch1 || branch2,
    ));
    if *tau == q(0) {
        out.push(IdentityCheck::vanishing("R(X, Y)ξ = 0", curvature_on_xi(s)));
    }
    b.conclude(out)
}

/// Every theorem check, in a fixed order.
pub fn all_theorem_reports(s: &ContactStructure, d: &SolitonData) -> Vec<TheoremReport> {
    vec![
        verify_sasakian_ricci_form(s, d),
        verify_ricci_norm_identity(s, d),
        verify_sasakian_soliton_dichotomy(s, d),
        verify_gradient_soliton_k_contact(s, d),
        verify_reeb_colinear_soliton(s, d),
        verify_kappa_mu_gradient_soliton(s, d),
    ]
}

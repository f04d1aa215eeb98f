use super::report::{IdentityCheck, StructureReport};
use super::structure::ContactStructure;
use crate::symbolic::{rat, Rational};
use crate::tensor::{
    covariant_derivative, covariant_derivative_along, invert_matrix, lie_derivative, TensorField,
    Variance,
};

use Variance::{Down, Up};

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn sub(a: &TensorField, b: &TensorField) -> TensorField {
    a.try_sub(b).expect("compatible tensors")
}

fn add(a: &TensorField, b: &TensorField) -> TensorField {
    a.try_add(b).expect("compatible tensors")
}

fn compose(a: &TensorField, b: &TensorField) -> TensorField {
    a.compose(b).expect("endomorphisms")
}

/// Algebraic axioms of an almost contact pseudo-metric structure.
pub fn verify_structure(s: &ContactStructure) -> StructureReport {
    let chart = s.chart();
    let eps = s.epsilon().rational();
    let id = TensorField::identity(chart);
    let phi = s.phi();
    let g = s.metric();
    let mut r = StructureReport::new();

    let eta_xi = s
        .eta()
        .contract_with(0, s.xi(), 0)
        .expect("covector and vector");
    r.push(IdentityCheck::vanishing(
        "η(ξ) = 1",
        sub(&eta_xi, &TensorField::scalar(chart, chart.one())),
    ));

    let phi2 = compose(phi, phi);
    r.push(IdentityCheck::vanishing(
        "φ² = -I + η⊗ξ",
        sub(&add(&phi2, &id), &s.xi_eta()),
    ));

    // φᵀ g φ, components g(φ∂i, φ∂j)
    let gphi = s.lower_endomorphism(phi).expect("(1,1)"); // [j, i] = g(φ∂j, ∂i)
    let phigphi = gphi.contract_with(1, phi, 0).expect("slots"); // [i, j] = g(φ∂i, φ∂j)
    let rhs = sub(g, &s.eta_eta().scale(&eps));
    r.push(IdentityCheck::vanishing(
        "g(φX, φY) = g(X, Y) - εη(X)η(Y)",
        sub(&phigphi, &rhs),
    ));

    let g_xi = g.contract_with(1, s.xi(), 0).expect("slots");
    r.push(IdentityCheck::vanishing(
        "η(X) = εg(ξ, X)",
        sub(s.eta(), &g_xi.scale(&eps)),
    ));

    r.push(IdentityCheck::vanishing_scalar(
        "g(ξ, ξ) = ε",
        chart,
        &s.g_apply(s.xi(), s.xi()) - &chart.constant(eps.clone()),
    ));

    r.push(IdentityCheck::vanishing(
        "φξ = 0",
        phi.apply(s.xi()).expect("vector"),
    ));
    r.push(IdentityCheck::vanishing(
        "η∘φ = 0",
        s.eta().contract_with(0, phi, 0).expect("slots"),
    ));

    let big_phi = s.fundamental_two_form();
    r.push(IdentityCheck::vanishing(
        "g(φX, Y) = -g(X, φY)",
        add(&big_phi, &big_phi.transpose().expect("rank 2")),
    ));
    r
}

/// `η ∧ (dη)^n`, up to a nonzero constant, as the determinant of the bordered
/// matrix `[[0, η], [-η, dη]]`.
pub fn contact_volume(s: &ContactStructure) -> crate::symbolic::RationalFunction {
    let chart = s.chart();
    let d = chart.dim();
    let deta = s.d_eta();
    let mut m = vec![vec![chart.zero(); d + 1]; d + 1];
    for i in 0..d {
        m[0][i + 1] = s.eta().get(&[i]).clone();
        m[i + 1][0] = -s.eta().get(&[i]);
        for j in 0..d {
            m[i + 1][j + 1] = deta.get(&[i, j]).clone();
        }
    }
    invert_matrix(&m).0
}

/// `g(X, φY) = dη(X, Y)` and `η ∧ (dη)^n ≠ 0`.
pub fn verify_contact_condition(s: &ContactStructure) -> StructureReport {
    let mut r = StructureReport::new();
    r.push(IdentityCheck::vanishing(
        "g(X, φY) = dη(X, Y)",
        sub(&s.fundamental_two_form(), &s.d_eta()),
    ));
    r.push(IdentityCheck::nonvanishing(
        "η∧(dη)ⁿ ≠ 0",
        s.chart(),
        contact_volume(s),
    ));
    r
}

/// `h = ½ 𝔏_ξ φ`.
pub fn compute_h(s: &ContactStructure) -> TensorField {
    lie_derivative(s.phi(), s.xi())
        .expect("same chart")
        .scale(&rat(1, 2))
}

/// `ℓX = R(X, ξ)ξ`.
pub fn compute_ell(s: &ContactStructure) -> TensorField {
    // R[h, k, j, i] ξ^j ξ^i
    let r = &s.geometry().riemann;
    let rx = r.contract_with(3, s.xi(), 0).expect("slots");
    rx.contract_with(2, s.xi(), 0).expect("slots")
}

fn self_adjoint_residual(s: &ContactStructure, t: &TensorField) -> TensorField {
    let lowered = s.lower_endomorphism(t).expect("(1,1)");
    sub(&lowered, &lowered.transpose().expect("rank 2"))
}

/// Identities valid on every contact pseudo-metric manifold.
pub fn contact_identities(s: &ContactStructure) -> StructureReport {
    let chart = s.chart();
    let eps = s.epsilon().rational();
    let h = compute_h(s);
    let ell = compute_ell(s);
    let phi = s.phi();
    let conn = &s.geometry().connection;
    let mut r = StructureReport::new();

    r.push(IdentityCheck::vanishing_scalar(
        "tr h = 0",
        chart,
        h.trace().expect("(1,1)"),
    ));
    let hphi = compose(&h, phi);
    r.push(IdentityCheck::vanishing_scalar(
        "tr(hφ) = 0",
        chart,
        hphi.trace().expect("(1,1)"),
    ));
    r.push(IdentityCheck::vanishing(
        "η∘h = 0",
        s.eta().contract_with(0, &h, 0).expect("slots"),
    ));
    r.push(IdentityCheck::vanishing(
        "hξ = 0",
        h.apply(s.xi()).expect("vector"),
    ));
    r.push(IdentityCheck::vanishing(
        "ℓξ = 0",
        ell.apply(s.xi()).expect("vector"),
    ));
    r.push(IdentityCheck::vanishing(
        "hφ + φh = 0",
        add(&hphi, &compose(phi, &h)),
    ));
    r.push(IdentityCheck::vanishing(
        "∇_ξφ = 0",
        covariant_derivative_along(phi, s.xi(), conn).expect("same chart"),
    ));
    let expected = sub(&phi.scale(&-eps.clone()), &compose(phi, &h));
    r.push(IdentityCheck::vanishing(
        "∇_Xξ = -εφX - φhX",
        sub(&s.nabla_xi(), &expected),
    ));
    let ric_xi_xi = {
        let ric = s.ricci();
        let t = ric.contract_with(1, s.xi(), 0).expect("slots");
        t.contract_with(0, s.xi(), 0).expect("slots")
    };
    let h2 = compose(&h, &h).trace().expect("(1,1)");
    let two_n = chart.int(2 * s.n() as i64);
    r.push(IdentityCheck::vanishing(
        "Ric(ξ, ξ) = 2n - tr h²",
        sub(&ric_xi_xi, &TensorField::scalar(chart, &two_n - &h2)),
    ));
    r.push(IdentityCheck::vanishing(
        "h is g-self-adjoint",
        self_adjoint_residual(s, &h),
    ));
    r.push(IdentityCheck::vanishing(
        "ℓ is g-self-adjoint",
        self_adjoint_residual(s, &ell),
    ));
    r
}

/// Identities of K-contact manifolds (`h = 0`).
pub fn k_contact_identities(s: &ContactStructure) -> StructureReport {
    let eps = s.epsilon().rational();
    let n = int(s.n() as i64);
    let phi = s.phi();
    let q = s.ricci_operator();
    let conn = &s.geometry().connection;
    let mut r = StructureReport::new();

    let q_xi = q.apply(s.xi()).expect("vector");
    r.push(IdentityCheck::vanishing(
        "Qξ = 2nεξ",
        sub(&q_xi, &s.xi().scale(&(int(2) * &n * &eps))),
    ));
    r.push(IdentityCheck::vanishing(
        "∇_Xξ = -εφX",
        add(&s.nabla_xi(), &phi.scale(&eps)),
    ));

    let dq = covariant_derivative(&q, conn).expect("same chart"); // [i, j, k] = (∇_k Q)^i_j
    let dq_xi = dq.contract_with(1, s.xi(), 0).expect("slots"); // [i, k] = ((∇_k Q) ξ)^i
    let qphi = compose(&q, phi);
    let phiq = compose(phi, &q);
    let rhs = sub(&qphi.scale(&eps), &phi.scale(&(int(2) * &n)));
    r.push(IdentityCheck::vanishing(
        "(∇_XQ)ξ = -2nφX + εQφX",
        sub(&dq_xi, &rhs),
    ));

    let dq_along = covariant_derivative_along(&q, s.xi(), conn).expect("same chart");
    r.push(IdentityCheck::vanishing(
        "(∇_ξQ)X = ε(Qφ - φQ)X",
        sub(&dq_along, &sub(&qphi, &phiq).scale(&eps)),
    ));
    r
}

/// Normality tensor `[φ, φ] + 2dη ⊗ ξ`, components
/// `N^i_{jk} + (∂_j η_k - ∂_k η_j) ξ^i` with slots `[i, j, k]`.
pub fn normality_tensor(s: &ContactStructure) -> TensorField {
    let phi = s.phi();
    let n = s.chart().dim();
    let dphi = phi.partials(); // [i, j, l] = ∂_l φ^i_j
    let deta = s.eta().partials(); // [k, j] = ∂_j η_k
    TensorField::from_fn(s.chart(), &[Up, Down, Down], |idx| {
        let (i, j, k) = (idx[0], idx[1], idx[2]);
        let mut acc = s.chart().zero();
        for l in 0..n {
            let a = phi.get(&[l, j]);
            if !a.is_zero() {
                acc = &acc + &(a * dphi.get(&[i, k, l]));
            }
            let b = phi.get(&[l, k]);
            if !b.is_zero() {
                acc = &acc - &(b * dphi.get(&[i, j, l]));
            }
            let c = phi.get(&[i, l]);
            if !c.is_zero() {
                let t = dphi.get(&[l, j, k]) - dphi.get(&[l, k, j]);
                acc = &acc + &(c * &t);
            }
        }
        let d = deta.get(&[k, j]) - deta.get(&[j, k]);
        &acc + &(&d * s.xi().get(&[i]))
    })
}

/// `(∇_Xφ)Y - g(X, Y)ξ + εη(Y)X`, slots `[i, j, k]` for `X = ∂_k`, `Y = ∂_j`.
pub fn sasakian_covariant_residual(s: &ContactStructure) -> TensorField {
    let eps = s.epsilon().rational();
    let dphi = covariant_derivative(s.phi(), &s.geometry().connection).expect("same chart");
    let g = s.metric();
    let target = TensorField::from_fn(s.chart(), &[Up, Down, Down], |idx| {
        let (i, j, k) = (idx[0], idx[1], idx[2]);
        let mut t = g.get(&[k, j]) * s.xi().get(&[i]);
        if i == k {
            t = &t - &s.eta().get(&[j]).scale(&eps);
        }
        t
    });
    sub(&dphi, &target)
}

/// `R(X, Y)ξ` with slots `[h, k, j]` for `X = ∂_k`, `Y = ∂_j`.
pub fn curvature_on_xi(s: &ContactStructure) -> TensorField {
    s.geometry()
        .riemann
        .contract_with(3, s.xi(), 0)
        .expect("slots")
}

/// `η(Y)A X - η(X)A Y` with slots `[h, k, j]` for a `(1,1)` tensor `A`.
pub(crate) fn eta_wedge(s: &ContactStructure, a: &TensorField) -> TensorField {
    let eta = s.eta();
    TensorField::from_fn(s.chart(), &[Up, Down, Down], |idx| {
        let (h, k, j) = (idx[0], idx[1], idx[2]);
        &(eta.get(&[j]) * a.get(&[h, k])) - &(eta.get(&[k]) * a.get(&[h, j]))
    })
}

/// Sasakian criteria and Qφ = φQ.
pub fn sasakian_identities(s: &ContactStructure) -> StructureReport {
    let mut r = StructureReport::new();
    r.push(IdentityCheck::vanishing(
        "[φ, φ] + 2dη⊗ξ = 0",
        normality_tensor(s),
    ));
    r.push(IdentityCheck::vanishing(
        "(∇_Xφ)Y = g(X, Y)ξ - εη(Y)X",
        sasakian_covariant_residual(s),
    ));
    let id = TensorField::identity(s.chart());
    r.push(IdentityCheck::vanishing(
        "R(X, Y)ξ = η(Y)X - η(X)Y",
        sub(&curvature_on_xi(s), &eta_wedge(s, &id)),
    ));
    let q = s.ricci_operator();
    r.push(IdentityCheck::vanishing(
        "Qφ = φQ",
        sub(&compose(&q, s.phi()), &compose(s.phi(), &q)),
    ));
    r
}

/// Nullity residual `R(X,Y)ξ - εκ(η(Y)X - η(X)Y) - εμ(η(Y)hX - η(X)hY)`.
pub fn nullity_residual(s: &ContactStructure, kappa: &Rational, mu: &Rational) -> TensorField {
    let eps = s.epsilon().rational();
    let id = TensorField::identity(s.chart());
    let h = compute_h(s);
    let rhs = add(
        &eta_wedge(s, &id).scale(&(&eps * kappa)),
        &eta_wedge(s, &h).scale(&(&eps * mu)),
    );
    sub(&curvature_on_xi(s), &rhs)
}

/// Identities of `(κ, μ)`-nullity structures with `εκ < 1`.
pub fn kappa_mu_identities(
    s: &ContactStructure,
    kappa: &Rational,
    mu: &Rational,
) -> StructureReport {
    let chart = s.chart();
    let eps = s.epsilon().rational();
    let n = int(s.n() as i64);
    let one = int(1);
    let two = int(2);
    let phi = s.phi();
    let h = compute_h(s);
    let q = s.ricci_operator();
    let id = TensorField::identity(chart);
    let mut r = StructureReport::new();

    r.push(IdentityCheck::vanishing(
        "R(X, Y)ξ = εκ(η(Y)X - η(X)Y) + εμ(η(Y)hX - η(X)hY)",
        nullity_residual(s, kappa, mu),
    ));
    let phi2 = compose(phi, phi);
    r.push(IdentityCheck::vanishing(
        "h² = (εκ - 1)φ²",
        sub(&compose(&h, &h), &phi2.scale(&(&eps * kappa - &one))),
    ));
    r.push(IdentityCheck::vanishing(
        "Qξ = 2nκξ",
        sub(
            &q.apply(s.xi()).expect("vector"),
            &s.xi().scale(&(&two * &n * kappa)),
        ),
    ));
    let nabla_xi_h =
        covariant_derivative_along(&h, s.xi(), &s.geometry().connection).expect("same chart");
    r.push(IdentityCheck::vanishing(
        "∇_ξh = -εμφh",
        add(&nabla_xi_h, &compose(phi, &h).scale(&(&eps * mu))),
    ));

    let n1 = &n - &one;
    let c_id = &eps * &(&two * &n1 - &n * mu);
    let c_h = &two * &n1 + mu;
    let c_xi = &(&(&two * &(&one - &n)) * &eps + &(&two * &n) * kappa) + &(&(&n * &eps) * mu);
    let q_expected = add(
        &add(&id.scale(&c_id), &h.scale(&c_h)),
        &s.xi_eta().scale(&c_xi),
    );
    r.push(IdentityCheck::vanishing(
        "QX = ε[2(n-1) - nμ]X + (2(n-1) + μ)hX + [2(1-n)ε + 2nκ + nεμ]η(X)ξ",
        sub(&q, &q_expected),
    ));
    let r_expected = &(&(&two * &n) * &(kappa - &(&two * &eps)))
        + &(&(&(&two * &n) * &n) * &(&eps * &(&two - mu)));
    r.push(IdentityCheck::vanishing_scalar(
        "r = 2n(κ - 2ε) + 2n²ε(2 - μ)",
        chart,
        s.scalar_curvature() - &chart.constant(r_expected),
    ));
    r
}

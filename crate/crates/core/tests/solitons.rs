mod support;

use contactgeom::contact::{ContactStructure, Epsilon};
use contactgeom::soliton::*;
use contactgeom::symbolic::{rat, Rational};
use contactgeom::tensor::TensorField;
use support::*;

fn printed_v(s: &ContactStructure, eps: Epsilon, lambda: i64, mu: i64) -> TensorField {
    let (a, b, c) = example_potential(eps, lambda, mu);
    let ch = s.chart();
    TensorField::vector(
        ch,
        vec![
            ch.coordinate(0).scale(&q(a)),
            ch.coordinate(1).scale(&q(b)),
            ch.coordinate(2).scale(&q(c)),
        ],
    )
    .unwrap()
}

#[test]
fn builtin_example_matches_hand_built_structure() {
    for eps in BOTH {
        for (l, m) in [(6, 0), (-2, -4), (3, 8)] {
            let (s, d) = builtin_example(eps, &q(l), &q(m));
            assert_eq!(s, example(eps));
            assert_eq!(d.potential, Potential::Vector(printed_v(&s, eps, l, m)));
        }
    }
}

#[test]
fn example_solitons_for_spacelike_reeb_field() {
    for (l, m) in [(6, 0), (7, 1), (5, -1)] {
        let (s, d) = builtin_example(Epsilon::Spacelike, &q(l), &q(m));
        let v = soliton_residual(&s, &d).unwrap();
        assert!(v.is_soliton && v.residual.is_zero());
        assert!(!v.potential_is_killing);
        assert!(v.lie_phi_vanishes);
    }
}

#[test]
fn timelike_soliton_has_vanishing_potential() {
    let (s, d) = builtin_example(Epsilon::Timelike, &q(-2), &q(-4));
    assert_eq!(
        d.potential,
        Potential::Vector(TensorField::zeros(
            s.chart(),
            &[contactgeom::tensor::Variance::Up]
        ))
    );
    let v = soliton_residual(&s, &d).unwrap();
    assert!(v.is_soliton && v.potential_is_killing);
    assert_eq!(v.class, SolitonClass::Shrinking);
}

#[test]
fn soliton_exists_exactly_when_difference_is_six() {
    for diff in 4..=8 {
        for m in -1..=1 {
            let (s, d) = builtin_example(Epsilon::Spacelike, &q(diff + m), &q(m));
            let v = soliton_residual(&s, &d).unwrap();
            assert_eq!(v.is_soliton, diff == 6, "λ - μ = {diff}, μ = {m}");
            assert_eq!(v.is_soliton, v.residual.is_zero());
            assert!(v.residual.equals(&v.residual.transpose().unwrap()).unwrap());
        }
    }
    let (s, d) = builtin_example(Epsilon::Spacelike, &q(0), &q(0));
    assert!(!soliton_residual(&s, &d).unwrap().is_soliton);
}

#[test]
fn zero_potential_leaves_curvature_terms() {
    let s = rotating_contact(Epsilon::Timelike);
    let zero = TensorField::zeros(s.chart(), &[contactgeom::tensor::Variance::Up]);
    let (l, m) = (rat(3, 2), rat(-1, 3));
    let v = soliton_residual(&s, &SolitonData::vector(zero, l.clone(), m.clone())).unwrap();
    assert!(!v.is_soliton);
    let expected = s
        .ricci()
        .try_add(&s.metric().scale(&l))
        .unwrap()
        .try_add(&s.eta_eta().scale(&m))
        .unwrap()
        .scale(&rat(2, 1));
    assert!(v.residual.equals(&expected).unwrap());
}

#[test]
fn residual_is_affine_in_the_constants() {
    let s = example(Epsilon::Spacelike);
    let v = printed_v(&s, Epsilon::Spacelike, 6, 0);
    let res = |l: Rational, m: Rational| {
        soliton_residual(&s, &SolitonData::vector(v.clone(), l, m))
            .unwrap()
            .residual
    };
    let base = res(q(0), q(0));
    let (l1, m1, l2, m2) = (rat(3, 2), rat(-1, 4), rat(5, 1), rat(2, 3));
    let lhs = res(&l1 + &l2, &m1 + &m2);
    let rhs = res(l1, m1)
        .try_add(&res(l2, m2))
        .unwrap()
        .try_sub(&base)
        .unwrap();
    assert!(lhs.equals(&rhs).unwrap());
}

#[test]
fn soliton_class_follows_sign_of_lambda() {
    assert_eq!(SolitonClass::of(&rat(-1, 3)), SolitonClass::Shrinking);
    assert_eq!(SolitonClass::of(&rat(0, 1)), SolitonClass::Steady);
    assert_eq!(SolitonClass::of(&rat(6, 1)), SolitonClass::Expanding);
}

#[test]
fn gradient_solitons() {
    let s = example(Epsilon::Spacelike);
    let ch = s.chart();
    let d = SolitonData::scalar(ch.int(7), q(2), q(-4));
    let v = gradient_soliton_residual(&s, &d).unwrap();
    assert!(v.is_soliton && v.potential_is_killing);

    let d = SolitonData::scalar(ch.int(7), q(2), q(-3));
    let v = gradient_soliton_residual(&s, &d).unwrap();
    assert!(v.residual.equals(&s.eta_eta()).unwrap());

    let flat = rotating_contact(Epsilon::Spacelike);
    let d = SolitonData::scalar(flat.chart().coordinate(0), q(0), q(0));
    let v = gradient_soliton_residual(&flat, &d).unwrap();
    assert!(v.is_soliton);
    assert!(v.residual.equals(&v.residual.transpose().unwrap()).unwrap());
}

#[test]
fn potential_kind_is_enforced() {
    let (s, d) = builtin_example(Epsilon::Spacelike, &q(6), &q(0));
    assert!(gradient_soliton_residual(&s, &d).is_err());
    let f = SolitonData::scalar(s.chart().zero(), q(2), q(-4));
    assert!(soliton_residual(&s, &f).is_err());
    assert!(check_soliton(&s, &f).unwrap().is_soliton);
}

#[test]
fn closed_form_ricci_for_sasakian_solitons() {
    let cases = [
        (Epsilon::Spacelike, 6, 0, (-2, 4, -2)),
        (Epsilon::Spacelike, 7, 1, (-2, 4, -2)),
        (Epsilon::Spacelike, 5, -1, (-2, 4, -2)),
        (Epsilon::Timelike, -2, -4, (2, 4, 2)),
    ];
    for (eps, l, m, (a, b, r)) in cases {
        assert_eq!(
            sasakian_soliton_ricci_coefficients(1, eps, &q(l), &q(m)),
            (q(a), q(b), q(r))
        );
        let (s, d) = builtin_example(eps, &q(l), &q(m));
        let report = verify_sasakian_ricci_form(&s, &d);
        assert_eq!(report.outcome, TheoremOutcome::Verified, "{report:?}");
        assert_eq!(s.scalar_curvature(), &s.chart().int(r));
    }
    let (s, d) = builtin_example(Epsilon::Spacelike, &q(1), &q(0));
    assert_eq!(
        verify_sasakian_ricci_form(&s, &d).outcome,
        TheoremOutcome::HypothesisNotMet
    );
    let flat = rotating_contact(Epsilon::Spacelike);
    let d = SolitonData::scalar(flat.chart().coordinate(0), q(0), q(0));
    assert_eq!(
        verify_sasakian_ricci_form(&flat, &d).outcome,
        TheoremOutcome::HypothesisNotMet
    );
}

#[test]
fn ricci_norm_identity() {
    for (l, m) in [(6, 0), (7, 1), (5, -1)] {
        let (s, d) = builtin_example(Epsilon::Spacelike, &q(l), &q(m));
        assert_eq!(ricci_norm_squared(&s), s.chart().int(12));
        let report = verify_ricci_norm_identity(&s, &d);
        assert_eq!(report.outcome, TheoremOutcome::Verified);
    }
    // Off the soliton line the scalar identity fails by 2(μ - λ + 2n + 4).
    let s = example(Epsilon::Spacelike);
    for (l, m) in [(1, 0), (0, 3), (9, 1)] {
        let value = ricci_norm_identity_value(&s, &q(-2), &q(4), &q(l), &q(m));
        assert_eq!(value, s.chart().int(2 * (m - l + 6)));
        let (s, d) = builtin_example(Epsilon::Spacelike, &q(l), &q(m));
        assert_eq!(
            verify_ricci_norm_identity(&s, &d).outcome,
            TheoremOutcome::HypothesisNotMet
        );
    }
    let (s, d) = builtin_example(Epsilon::Timelike, &q(-2), &q(-4));
    assert_eq!(
        verify_ricci_norm_identity(&s, &d).outcome,
        TheoremOutcome::Verified
    );
    let flat = flat_r3();
    let d = SolitonData::scalar(flat.chart().zero(), q(0), q(0));
    assert_eq!(
        verify_ricci_norm_identity(&flat, &d).outcome,
        TheoremOutcome::HypothesisNotMet
    );
}

#[test]
fn sasakian_dichotomy() {
    let (s, d) = builtin_example(Epsilon::Spacelike, &q(6), &q(0));
    let r = verify_sasakian_soliton_dichotomy(&s, &d);
    assert_eq!(r.outcome, TheoremOutcome::Verified);
    assert_eq!(r.conclusions.len(), 4);
    let (s, d) = builtin_example(Epsilon::Timelike, &q(-2), &q(-4));
    let r = verify_sasakian_soliton_dichotomy(&s, &d);
    assert_eq!(r.outcome, TheoremOutcome::Verified);
    assert!(r.conclusions.iter().any(|c| c.name.contains("Killing")));
    let (s, d) = builtin_example(Epsilon::Timelike, &q(0), &q(0));
    assert_eq!(
        verify_sasakian_soliton_dichotomy(&s, &d).outcome,
        TheoremOutcome::HypothesisNotMet
    );
}

#[test]
fn gradient_soliton_on_k_contact() {
    let s = example(Epsilon::Spacelike);
    let d = SolitonData::scalar(s.chart().zero(), q(2), q(-4));
    assert_eq!(
        verify_gradient_soliton_k_contact(&s, &d).outcome,
        TheoremOutcome::Verified
    );
    let d = SolitonData::scalar(s.chart().zero(), q(3), q(-4));
    assert_eq!(
        verify_gradient_soliton_k_contact(&s, &d).outcome,
        TheoremOutcome::HypothesisNotMet
    );
    let t = example(Epsilon::Timelike);
    let d = SolitonData::scalar(t.chart().int(3), q(-2), q(-4));
    assert_eq!(
        verify_gradient_soliton_k_contact(&t, &d).outcome,
        TheoremOutcome::Verified
    );
}

#[test]
fn reeb_colinear_soliton() {
    let s = example(Epsilon::Spacelike);
    let d = SolitonData::vector(s.xi().clone(), q(2), q(-4));
    let r = verify_reeb_colinear_soliton(&s, &d);
    assert_eq!(r.outcome, TheoremOutcome::Verified, "{r:?}");
    let d = SolitonData::vector(printed_v(&s, Epsilon::Spacelike, 6, 0), q(6), q(0));
    assert_eq!(
        verify_reeb_colinear_soliton(&s, &d).outcome,
        TheoremOutcome::HypothesisNotMet
    );
}

#[test]
fn nullity_gradient_soliton() {
    let flat = rotating_contact(Epsilon::Spacelike);
    let d = SolitonData::scalar(flat.chart().coordinate(0), q(0), q(0));
    let r = verify_kappa_mu_gradient_soliton(&flat, &d);
    assert_eq!(r.outcome, TheoremOutcome::Verified, "{r:?}");
    assert!(r
        .conclusions
        .iter()
        .any(|c| c.name == "R(X, Y)ξ = 0" && c.holds));

    // μ is indeterminate on the Sasakian example
    let s = example(Epsilon::Spacelike);
    let d = SolitonData::scalar(s.chart().zero(), q(2), q(-4));
    assert_eq!(
        verify_kappa_mu_gradient_soliton(&s, &d).outcome,
        TheoremOutcome::HypothesisNotMet
    );

    let t = rotating_contact(Epsilon::Timelike);
    let d = SolitonData::scalar(t.chart().coordinate(0), q(0), q(0));
    assert_eq!(
        verify_kappa_mu_gradient_soliton(&t, &d).outcome,
        TheoremOutcome::HypothesisNotMet
    );
}

#[test]
fn nullity_branches_are_identities() {
    for n in 1..=3 {
        for eps in BOTH {
            let [first, second] = nullity_branch_residuals(n, eps);
            assert!(first.is_zero() && second.is_zero(), "n = {n}, ε = {eps:?}");
        }
    }
}

#[test]
fn all_reports_never_violate_on_fixtures() {
    for eps in BOTH {
        for (l, m) in [(6, 0), (-2, -4), (1, 1)] {
            let (s, d) = builtin_example(eps, &q(l), &q(m));
            for r in all_theorem_reports(&s, &d) {
                assert_ne!(r.outcome, TheoremOutcome::Violation, "{r:?}");
                if r.outcome == TheoremOutcome::HypothesisNotMet {
                    assert!(r.hypotheses.iter().any(|h| !h.holds));
                }
            }
        }
    }
}

use std::path::Path;

use contactgeom::contact::Epsilon;
use contactgeom::contact::{
    classify, contact_identities, d_homothetic_deform, k_contact_identities, kappa_mu_identities,
    require_contact, sasakian_identities, verify_contact_condition, verify_structure,
    ClassificationResult, EtaEinstein, IdentityCheck, KappaMu, NullityMu, StructureReport,
};
use contactgeom::soliton::{
    all_theorem_reports, builtin_example, check_soliton, gradient_soliton_residual, SolitonData,
    SolitonVerdict, TheoremOutcome,
};
use contactgeom::symbolic::Rational;
use contactgeom::Error;

use crate::document::{rational, Loaded, ManifoldDocument};
use crate::error::CliError;
use crate::report::Report;

pub fn load(path: &Path) -> Result<Loaded, CliError> {
    ManifoldDocument::read(path)?.load()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn verify(doc: &Loaded) -> Report {
    let s = &doc.structure;
    let mut report = Report::new("verify", &doc.name);
    let mut axioms = verify_structure(s);
    axioms.extend(verify_contact_condition(s));
    report.add_checks(&axioms);
    if !axioms.all_hold() {
        report.fact("contact", "no");
        return report;
    }
    report.add_checks(&contact_identities(s));
    match classify(s) {
        Ok(c) => {
            if c.is_k_contact {
                report.add_checks(&k_contact_identities(s));
            }
            if c.is_sasakian {
                report.add_checks(&sasakian_identities(s));
            }
            if let Some(KappaMu {
                kappa,
                mu: NullityMu::Value(mu),
            }) = &c.kappa_mu
            {
                report.add_checks(&kappa_mu_identities(s, kappa, mu));
            }
            describe(&mut report, &c);
        }
        Err(e) => internal(&mut report, e),
    }
    report
}

fn internal(report: &mut Report, e: Error) {
    report.fact("error", e);
    report.passed = false;
}

fn describe(report: &mut Report, c: &ClassificationResult) {
    report.fact("contact", yes_no(c.is_contact));
    report.fact("K-contact", yes_no(c.is_k_contact));
    report.fact("Sasakian", yes_no(c.is_sasakian));
    report.fact(
        "η-Einstein",
        match &c.eta_einstein {
            None => "no".to_string(),
            Some(EtaEinstein::Constant { a, b }) => format!("a = {a}, b = {b}"),
            Some(EtaEinstein::NonConstant { a, b }) => format!("non-constant a = {a}, b = {b}"),
        },
    );
    report.fact(
        "(κ, μ)-nullity",
        match &c.kappa_mu {
            None => "no".to_string(),
            Some(KappaMu {
                kappa,
                mu: NullityMu::Value(mu),
            }) => format!("κ = {kappa}, μ = {mu}"),
            Some(KappaMu {
                kappa,
                mu: NullityMu::Indeterminate,
            }) => {
                format!("κ = {kappa}, μ indeterminate (h = 0)")
            }
        },
    );
    report.fact("D-homothetically fixed", yes_no(c.d_fixed));
}

pub fn classify_command(doc: &Loaded) -> Report {
    let s = &doc.structure;
    let mut report = Report::new("classify", &doc.name);
    if require_contact(s).is_err() {
        let mut axioms = verify_structure(s);
        axioms.extend(verify_contact_condition(s));
        report.add_check_list(&failures(&axioms));
        report.fact("contact", "no");
        return report;
    }
    match classify(s) {
        Ok(c) => describe(&mut report, &c),
        Err(e) => internal(&mut report, e),
    }
    report
}

fn failures(r: &StructureReport) -> Vec<IdentityCheck> {
    r.failures().cloned().collect()
}

pub fn curvature(doc: &Loaded) -> Report {
    let s = &doc.structure;
    let geo = s.geometry();
    let n = s.chart().dim();
    let mut report = Report::new("curvature", &doc.name);
    let mut nonzero = 0;
    for h in 0..n {
        for i in 0..n {
            for j in 0..n {
                if !geo.connection.get(h, i, j).is_zero() {
                    nonzero += 1;
                }
            }
        }
    }
    report.fact(
        "Christoffel symbols",
        format!("available, {nonzero} of {} nonzero", n * n * n),
    );
    report.fact("scalar curvature r", s.scalar_curvature());
    report.tensor("Ric", s.ricci());
    report
}

/// The document's soliton data with `--lambda` / `--mu` overrides applied.
pub fn soliton_data(
    doc: &Loaded,
    lambda: Option<&str>,
    mu: Option<&str>,
) -> Result<SolitonData, CliError> {
    let mut d = doc
        .soliton
        .clone()
        .ok_or_else(|| CliError::Usage(format!("`{}` has no soliton block", doc.name)))?;
    if let Some(l) = lambda {
        d.lambda = rational("--lambda", l)?;
    }
    if let Some(m) = mu {
        d.mu = rational("--mu", m)?;
    }
    Ok(d)
}

fn verdict_report(report: &mut Report, label: &str, d: &SolitonData, v: &SolitonVerdict) {
    report.add_check_list(&[IdentityCheck::vanishing(
        "𝔏_Vg + 2Ric + 2λg + 2μη⊗η = 0",
        v.residual.clone(),
    )]);
    report.fact("λ", &d.lambda);
    report.fact("μ", &d.mu);
    report.fact("class", v.class.as_str());
    report.fact("V Killing", yes_no(v.potential_is_killing));
    report.fact("𝔏_Vφ = 0", yes_no(v.lie_phi_vanishes));
    report.summary = Some(if v.is_soliton {
        format!(
            "{label}: YES, {}, {}",
            if v.potential_is_killing {
                "Killing"
            } else {
                "non-Killing"
            },
            if v.lie_phi_vanishes {
                "𝔏_Vφ=0"
            } else {
                "𝔏_Vφ≠0"
            },
        )
    } else {
        format!("{label}: NO")
    });
}

pub fn soliton(doc: &Loaded, lambda: Option<&str>, mu: Option<&str>) -> Result<Report, CliError> {
    let d = soliton_data(doc, lambda, mu)?;
    let v = check_soliton(&doc.structure, &d).map_err(|e| CliError::Usage(e.to_string()))?;
    let mut report = Report::new("soliton", &doc.name);
    verdict_report(&mut report, "η-Ricci soliton", &d, &v);
    Ok(report)
}

pub fn gradient_soliton(
    doc: &Loaded,
    potential: &str,
    lambda: Option<&str>,
    mu: Option<&str>,
) -> Result<Report, CliError> {
    let (lambda, mu) = match (lambda, mu, &doc.soliton) {
        (Some(l), Some(m), _) => (rational("--lambda", l)?, rational("--mu", m)?),
        (l, m, Some(d)) => (
            l.map(|l| rational("--lambda", l))
                .transpose()?
                .unwrap_or_else(|| d.lambda.clone()),
            m.map(|m| rational("--mu", m))
                .transpose()?
                .unwrap_or_else(|| d.mu.clone()),
        ),
        _ => {
            return Err(CliError::Usage(
                "--lambda and --mu are required when the document has no soliton block".into(),
            ))
        }
    };
    let f = doc
        .structure
        .chart()
        .parse(potential)
        .map_err(|e| CliError::Invalid {
            field: "--potential".into(),
            reason: e.to_string(),
        })?;
    let d = SolitonData::scalar(f, lambda, mu);
    let v = gradient_soliton_residual(&doc.structure, &d)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let mut report = Report::new("gradient-soliton", &doc.name);
    report.fact("f", potential);
    verdict_report(&mut report, "gradient η-Ricci soliton", &d, &v);
    Ok(report)
}

pub fn deform(doc: &Loaded, t: &str, out: &Path) -> Result<Report, CliError> {
    let t = rational("--t", t)?;
    let deformed = d_homothetic_deform(&doc.structure, &t).map_err(|e| CliError::Invalid {
        field: "--t".into(),
        reason: e.to_string(),
    })?;
    let name = format!("{} (D-homothetic, t = {t})", doc.name);
    let text = ManifoldDocument::from_structure(&name, &deformed, None).to_json();
    std::fs::write(out, text + "\n").map_err(|e| CliError::Io {
        path: out.display().to_string(),
        reason: e.to_string(),
    })?;
    let mut report = Report::new("deform", &doc.name);
    report.fact("t", &t);
    report.fact("written to", out.display());
    if let Ok(c) = classify(&deformed) {
        describe(&mut report, &c);
    }
    Ok(report)
}

pub fn theorems(doc: &Loaded, lambda: Option<&str>, mu: Option<&str>) -> Result<Report, CliError> {
    let d = soliton_data(doc, lambda, mu)?;
    let reports = all_theorem_reports(&doc.structure, &d);
    let mut report = Report::new("theorems", &doc.name);
    report.add_theorems(&reports);
    let count = |o: TheoremOutcome| reports.iter().filter(|r| r.outcome == o).count();
    report.passed = count(TheoremOutcome::Violation) == 0;
    report.summary = Some(format!(
        "{} verified, {} hypothesis not met, {} violated",
        count(TheoremOutcome::Verified),
        count(TheoremOutcome::HypothesisNotMet),
        count(TheoremOutcome::Violation),
    ));
    Ok(report)
}

pub fn example(epsilon: i64, lambda: &str, mu: &str) -> Result<ManifoldDocument, CliError> {
    let eps = Epsilon::from_sign(epsilon).map_err(|e| CliError::Invalid {
        field: "--epsilon".into(),
        reason: e.to_string(),
    })?;
    let lambda: Rational = rational("--lambda", lambda)?;
    let mu: Rational = rational("--mu", mu)?;
    let (s, d) = builtin_example(eps, &lambda, &mu);
    let name = format!("Sasakian example on R^3 (ε = {epsilon})");
    Ok(ManifoldDocument::from_structure(&name, &s, Some(&d)))
}

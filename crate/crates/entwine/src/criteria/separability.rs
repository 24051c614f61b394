//! The two separability decision procedures (Theorems 4.20 and 4.47): both
//! are plain affine feasibility questions, so the outcome is always decided.

use crate::error::{Error, Result};
use crate::solve::probe;
use crate::structures::StructureBundle;

use super::spaces::{
    entries_to_report, lambda_membership_residuals, lambda_normalization_residuals,
    shaped_lambda, shaped_sigma, sigma_membership_residuals, sigma_normalization_residuals,
};
use super::{Certificate, Decision, LambdaElement, Outcome, SigmaElement};

/// Decides separability of the forgetful functor F: entwined comodules →
/// comodules. Yes iff a normalized σ ∈ V₁ exists (Eq. 4.3 ∧ Eq. 4.21);
/// the affine system is solved exactly, so the answer is never Unknown.
pub fn decide_sep_f(b: &StructureBundle) -> Result<Decision> {
    let dims = SigmaElement::unknown_dims(b);
    let p = probe(b.field, &dims, |family| {
        let sigma = shaped_sigma(b, family)?;
        let mut res: Vec<_> =
            sigma_membership_residuals(b, &sigma)?.into_iter().map(|e| e.residual).collect();
        res.extend(sigma_normalization_residuals(b, &sigma)?.into_iter().map(|e| e.residual));
        Ok(res)
    })?;
    match p.solve()? {
        Ok(sol) => {
            let cert = SigmaElement::from_matrices(b, sol.particular)?;
            reverify_sigma(b, &cert)?;
            Ok(Decision {
                outcome: Outcome::Yes,
                certificate: Some(Certificate::Sigma(cert)),
                witness: None,
                detail: "normalized σ ∈ V₁ found (Eqs. 4.3, 4.21)".into(),
            })
        }
        Err(w) => Ok(Decision {
            outcome: Outcome::No,
            certificate: None,
            witness: Some(w),
            detail: format!(
                "the affine system Eq. 4.3 ∧ Eq. 4.21 is infeasible \
                 (coefficient rank {}, augmented rank {})",
                w.rank_coefficient, w.rank_augmented
            ),
        }),
    }
}

/// Decides separability of the induction functor G = −⊗A. Yes iff a
/// normalized λ ∈ W₁ exists (Eqs. 4.25–4.26 ∧ Eq. 4.48); always decided.
pub fn decide_sep_g(b: &StructureBundle) -> Result<Decision> {
    let dims = LambdaElement::unknown_dims(b);
    let p = probe(b.field, &dims, |family| {
        let lambda = shaped_lambda(b, family)?;
        let mut res: Vec<_> =
            lambda_membership_residuals(b, &lambda)?.into_iter().map(|e| e.residual).collect();
        res.extend(lambda_normalization_residuals(b, &lambda)?.into_iter().map(|e| e.residual));
        Ok(res)
    })?;
    match p.solve()? {
        Ok(sol) => {
            let cert = LambdaElement::from_matrices(b, sol.particular)?;
            reverify_lambda(b, &cert)?;
            Ok(Decision {
                outcome: Outcome::Yes,
                certificate: Some(Certificate::Lambda(cert)),
                witness: None,
                detail: "normalized λ ∈ W₁ found (Eqs. 4.25, 4.26, 4.48)".into(),
            })
        }
        Err(w) => Ok(Decision {
            outcome: Outcome::No,
            certificate: None,
            witness: Some(w),
            detail: format!(
                "the affine system Eqs. 4.25–4.26 ∧ Eq. 4.48 is infeasible \
                 (coefficient rank {}, augmented rank {})",
                w.rank_coefficient, w.rank_augmented
            ),
        }),
    }
}

/// Independent re-verification of a σ certificate: membership plus
/// normalization, with the first failed equation named.
pub(crate) fn reverify_sigma(b: &StructureBundle, cert: &SigmaElement) -> Result<()> {
    let mut entries = sigma_membership_residuals(b, &cert.sigma)?;
    entries.extend(sigma_normalization_residuals(b, &cert.sigma)?);
    let report = entries_to_report(entries);
    if let Some(v) = report.first() {
        return Err(Error::MembershipViolation(format!("σ certificate fails {v}")));
    }
    Ok(())
}

/// Independent re-verification of a λ certificate.
pub(crate) fn reverify_lambda(b: &StructureBundle, cert: &LambdaElement) -> Result<()> {
    let mut entries = lambda_membership_residuals(b, &cert.lambda)?;
    entries.extend(lambda_normalization_residuals(b, &cert.lambda)?);
    let report = entries_to_report(entries);
    if let Some(v) = report.first() {
        return Err(Error::MembershipViolation(format!("λ certificate fails {v}")));
    }
    Ok(())
}

//! Cointegrals (Def. 7.1): existence is an affine feasibility question —
//! conditions (7.2) and (7.3) are homogeneous in γ, the normalization (7.4)
//! is inhomogeneous — so the decision is always Yes or No with a
//! certificate or rank witness.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::solve::probe;
use crate::structures::{Report, StructureBundle};
use crate::tensor::{coevaluation, kron, kron_all, ShapedMap, TensorShape};

use super::spaces::{entries_to_report, ResidualEntry};
use super::{Certificate, CointegralData, Decision, Outcome};

fn id_on(dim: usize, b: &StructureBundle) -> ShapedMap {
    ShapedMap::identity(TensorShape::new(vec![dim]), b.field)
}

/// All residuals of the cointegral conditions for a γ-family:
/// the naturality condition (Eq. 7.2) on every ordered pair, the
/// centrality condition (Eq. 7.3) on every object, and the normalization
/// (Eq. 7.4) on every object.
fn cointegral_residuals(
    b: &StructureBundle,
    gamma: &[ShapedMap],
) -> Result<Vec<ResidualEntry>> {
    let n = b.n_objects();
    let da = b.dim_a();
    let id_a = id_on(da, b);
    let coev = coevaluation(da, b.field);
    let mut out = Vec::new();
    // Eq. 7.2: (A⊗ψ_{XY})∘(ψ_{XY}⊗γ_X)∘(C(X,Y)⊗coev_A⊗C(X,X))∘δ_{XXY}
    //        = (A⊗γ_Y⊗C(X,Y))∘(coev_A⊗δ_{XYY}): C(X,Y) → A⊗A⊗C(X,Y).
    for x in 0..n {
        for y in 0..n {
            let dcxy = b.dim_c(x, y);
            if dcxy == 0 {
                continue;
            }
            let id_cxy = id_on(dcxy, b);
            let id_cxx = id_on(b.dim_c(x, x), b);
            let lhs = kron(&id_a, &b.psi(x, y))?
                .compose(&kron(&b.psi(x, y), &gamma[x])?)?
                .compose(&kron_all(&[&id_cxy, &coev, &id_cxx])?)?
                .compose(&b.delta(x, x, y))?;
            let rhs = kron_all(&[&id_a, &gamma[y], &id_cxy])?
                .compose(&kron(&coev, &b.delta(x, y, y))?)?;
            out.push(ResidualEntry {
                law: "Eq. 7.2".into(),
                detail: format!(
                    "objects (X,Y) = ({},{})",
                    b.coalgebra.objects[x], b.coalgebra.objects[y]
                ),
                residual: lhs.sub(&rhs)?.matrix,
            });
        }
    }
    for x in 0..n {
        let id_cxx = id_on(b.dim_c(x, x), b);
        let detail = format!("object X = {}", b.coalgebra.objects[x]);
        // Eq. 7.3: (A⊗μ_A)∘(A⊗γ_X⊗A)∘(coev_A⊗C(X,X)⊗A)
        //        = (μ_A⊗γ_X)∘(A⊗coev_A⊗C(X,X))∘ψ_{XX}: C(X,X)⊗A → A⊗A.
        let lhs = kron(&id_a, &b.algebra.mul)?
            .compose(&kron_all(&[&id_a, &gamma[x], &id_a])?)?
            .compose(&kron_all(&[&coev, &id_cxx, &id_a])?)?;
        let rhs = kron(&b.algebra.mul, &gamma[x])?
            .compose(&kron_all(&[&id_a, &coev, &id_cxx])?)?
            .compose(&b.psi(x, x))?;
        out.push(ResidualEntry {
            law: "Eq. 7.3".into(),
            detail: detail.clone(),
            residual: lhs.sub(&rhs)?.matrix,
        });
        // Eq. 7.4: μ_A∘(A⊗γ_X)∘(coev_A⊗C(X,X)) = u_A∘ε_X: C(X,X) → A.
        let lhs = b
            .algebra
            .mul
            .compose(&kron(&id_a, &gamma[x])?)?
            .compose(&kron(&coev, &id_cxx)?)?;
        let rhs = b.algebra.unit.compose(b.counit(x))?;
        out.push(ResidualEntry {
            law: "Eq. 7.4".into(),
            detail,
            residual: lhs.sub(&rhs)?.matrix,
        });
    }
    Ok(out)
}

fn shaped_gamma(b: &StructureBundle, family: &[Matrix]) -> Result<Vec<ShapedMap>> {
    CointegralData::from_matrices(b, family.to_vec()).map(|g| g.gamma)
}

/// Checks a claimed cointegral against all of Def. 7.1, reporting every
/// failed condition with its objects.
pub fn check_cointegral(b: &StructureBundle, gamma: &CointegralData) -> Result<Report> {
    Ok(entries_to_report(cointegral_residuals(b, &gamma.gamma)?))
}

/// Decides existence of a cointegral (Def. 7.1) by one exact affine solve;
/// always Yes (with a re-verified certificate) or No (with a rank witness).
pub fn find_cointegral(b: &StructureBundle) -> Result<Decision> {
    let dims = CointegralData::unknown_dims(b);
    let p = probe(b.field, &dims, |family| {
        let gamma = shaped_gamma(b, family)?;
        Ok(cointegral_residuals(b, &gamma)?.into_iter().map(|e| e.residual).collect())
    })?;
    match p.solve()? {
        Ok(sol) => {
            let cert = CointegralData::from_matrices(b, sol.particular)?;
            let report = check_cointegral(b, &cert)?;
            if let Some(v) = report.first() {
                return Err(Error::MembershipViolation(format!(
                    "solved cointegral fails re-verification at {v}"
                )));
            }
            Ok(Decision {
                outcome: Outcome::Yes,
                certificate: Some(Certificate::Cointegral(cert)),
                witness: None,
                detail: "cointegral found (Def. 7.1)".into(),
            })
        }
        Err(w) => Ok(Decision {
            outcome: Outcome::No,
            certificate: None,
            witness: Some(w),
            detail: format!(
                "the affine system Eqs. 7.2–7.4 is infeasible \
                 (coefficient rank {}, augmented rank {})",
                w.rank_coefficient, w.rank_augmented
            ),
        }),
    }
}

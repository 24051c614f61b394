//! The certificate spaces V₁ (σ-families, Eq. 4.3) and W₁ (λ-families,
//! Eqs. 4.25–4.26): residual builders, canonical bases, and membership
//! checks.

use crate::error::Result;
use crate::matrix::Matrix;
use crate::solve::probe;
use crate::structures::{Report, StructureBundle, Violation};
use crate::tensor::{kron, ShapedMap, TensorShape};

use super::{LambdaElement, SigmaElement};

/// One labelled residual of a certificate constraint.
pub(crate) struct ResidualEntry {
    pub law: String,
    pub detail: String,
    pub residual: Matrix,
}

impl ResidualEntry {
    fn of(law: &str, detail: String, diff: ShapedMap) -> ResidualEntry {
        ResidualEntry { law: law.into(), detail, residual: diff.matrix }
    }
}

fn id_on(dim: usize, b: &StructureBundle) -> ShapedMap {
    ShapedMap::identity(TensorShape::new(vec![dim]), b.field)
}

fn pair_detail(b: &StructureBundle, x: usize, y: usize) -> String {
    format!("objects (X,Y) = ({},{})", b.coalgebra.objects[x], b.coalgebra.objects[y])
}

fn obj_detail(b: &StructureBundle, x: usize) -> String {
    format!("object X = {}", b.coalgebra.objects[x])
}

/// The V₁ membership residuals (Eq. 4.3), one per ordered object pair:
/// (σ_Y⊗C(X,Y))∘(C(Y,Y)⊗ψ_{XY})∘(δ_{XYY}⊗A) −
/// (C(X,Y)⊗σ_X)∘(δ_{XXY}⊗A)  as maps C(X,Y)⊗A → C(X,Y).
pub(crate) fn sigma_membership_residuals(
    b: &StructureBundle,
    sigma: &[ShapedMap],
) -> Result<Vec<ResidualEntry>> {
    let n = b.n_objects();
    let da = b.dim_a();
    let id_a = id_on(da, b);
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let dcxy = b.dim_c(x, y);
            if dcxy == 0 {
                continue;
            }
            let id_c = id_on(dcxy, b);
            let lhs = kron(&sigma[y], &id_c)?
                .compose(&kron(&id_on(b.dim_c(y, y), b), &b.psi(x, y))?)?
                .compose(&kron(&b.delta(x, y, y), &id_a)?)?;
            let rhs = kron(&id_c, &sigma[x])?.compose(&kron(&b.delta(x, x, y), &id_a)?)?;
            out.push(ResidualEntry::of("Eq. 4.3", pair_detail(b, x, y), lhs.sub(&rhs)?));
        }
    }
    Ok(out)
}

/// The σ normalization residuals (Eq. 4.21), one per object:
/// σ_X∘(C(X,X)⊗u_A) − ε_X  as maps C(X,X) → K.
pub(crate) fn sigma_normalization_residuals(
    b: &StructureBundle,
    sigma: &[ShapedMap],
) -> Result<Vec<ResidualEntry>> {
    let mut out = Vec::new();
    for x in 0..b.n_objects() {
        let id_c = id_on(b.dim_c(x, x), b);
        let lhs = sigma[x].compose(&kron(&id_c, &b.algebra.unit)?)?;
        let rhs = b.counit(x);
        out.push(ResidualEntry::of("Eq. 4.21", obj_detail(b, x), lhs.sub(rhs)?));
    }
    Ok(out)
}

/// The W₁ membership residuals: the naturality condition Eq. 4.25 on every
/// ordered pair and the centrality condition Eq. 4.26 on every object.
pub(crate) fn lambda_membership_residuals(
    b: &StructureBundle,
    lambda: &[ShapedMap],
) -> Result<Vec<ResidualEntry>> {
    let n = b.n_objects();
    let da = b.dim_a();
    let id_a = id_on(da, b);
    let mut out = Vec::new();
    // Eq. 4.25: (λ^Y⊗C(X,Y))∘δ_{XYY} =
    // (A⊗ψ_{XY})∘(ψ_{XY}⊗A)∘(C(X,Y)⊗λ^X)∘δ_{XXY}: C(X,Y) → A⊗A⊗C(X,Y).
    for x in 0..n {
        for y in 0..n {
            let dcxy = b.dim_c(x, y);
            if dcxy == 0 {
                continue;
            }
            let id_c = id_on(dcxy, b);
            let lhs = kron(&lambda[y], &id_c)?.compose(&b.delta(x, y, y))?;
            let rhs = kron(&id_a, &b.psi(x, y))?
                .compose(&kron(&b.psi(x, y), &id_a)?)?
                .compose(&kron(&id_c, &lambda[x])?)?
                .compose(&b.delta(x, x, y))?;
            out.push(ResidualEntry::of("Eq. 4.25", pair_detail(b, x, y), lhs.sub(&rhs)?));
        }
    }
    // Eq. 4.26: (A⊗μ_A)∘(λ^Z⊗A) = (μ_A⊗A)∘(A⊗λ^Z)∘ψ_{ZZ}: C(Z,Z)⊗A → A⊗A.
    for z in 0..n {
        let lhs = kron(&id_a, &b.algebra.mul)?.compose(&kron(&lambda[z], &id_a)?)?;
        let rhs = kron(&b.algebra.mul, &id_a)?
            .compose(&kron(&id_a, &lambda[z])?)?
            .compose(&b.psi(z, z))?;
        out.push(ResidualEntry::of("Eq. 4.26", obj_detail(b, z), lhs.sub(&rhs)?));
    }
    Ok(out)
}

/// The λ normalization residuals (Eq. 4.48), one per object:
/// μ_A∘λ^X − u_A∘ε_X  as maps C(X,X) → A.
pub(crate) fn lambda_normalization_residuals(
    b: &StructureBundle,
    lambda: &[ShapedMap],
) -> Result<Vec<ResidualEntry>> {
    let mut out = Vec::new();
    for x in 0..b.n_objects() {
        let lhs = b.algebra.mul.compose(&lambda[x])?;
        let rhs = b.algebra.unit.compose(b.counit(x))?;
        out.push(ResidualEntry::of("Eq. 4.48", obj_detail(b, x), lhs.sub(&rhs)?));
    }
    Ok(out)
}

pub(crate) fn entries_to_report(entries: Vec<ResidualEntry>) -> Report {
    entries
        .into_iter()
        .filter(|e| !e.residual.is_zero())
        .map(|e| Violation { law: e.law, detail: e.detail })
        .collect()
}

/// A canonical basis of the space V₁ of σ-families satisfying Eq. 4.3,
/// computed as the RREF nullspace of the stacked linearized system.
pub fn v1_basis(b: &StructureBundle) -> Result<Vec<SigmaElement>> {
    let dims = SigmaElement::unknown_dims(b);
    let p = probe(b.field, &dims, |family| {
        let sigma = shaped_sigma(b, family)?;
        Ok(sigma_membership_residuals(b, &sigma)?.into_iter().map(|e| e.residual).collect())
    })?;
    p.solve_homogeneous()
        .into_iter()
        .map(|mats| SigmaElement::from_matrices(b, mats))
        .collect()
}

/// A canonical basis of the space W₁ of λ-families satisfying
/// Eqs. 4.25–4.26.
pub fn w1_basis(b: &StructureBundle) -> Result<Vec<LambdaElement>> {
    let dims = LambdaElement::unknown_dims(b);
    let p = probe(b.field, &dims, |family| {
        let lambda = shaped_lambda(b, family)?;
        Ok(lambda_membership_residuals(b, &lambda)?.into_iter().map(|e| e.residual).collect())
    })?;
    p.solve_homogeneous()
        .into_iter()
        .map(|mats| LambdaElement::from_matrices(b, mats))
        .collect()
}

/// Checks σ ∈ V₁ (Eq. 4.3), reporting every failed object pair.
pub fn check_sigma_membership(b: &StructureBundle, sigma: &SigmaElement) -> Result<Report> {
    Ok(entries_to_report(sigma_membership_residuals(b, &sigma.sigma)?))
}

/// Checks λ ∈ W₁ (Eqs. 4.25–4.26), reporting every failed condition.
pub fn check_lambda_membership(b: &StructureBundle, lambda: &LambdaElement) -> Result<Report> {
    Ok(entries_to_report(lambda_membership_residuals(b, &lambda.lambda)?))
}

/// Checks the σ normalization (Eq. 4.21) alone.
pub fn check_sigma_normalized(b: &StructureBundle, sigma: &SigmaElement) -> Result<Report> {
    Ok(entries_to_report(sigma_normalization_residuals(b, &sigma.sigma)?))
}

/// Checks the λ normalization (Eq. 4.48) alone.
pub fn check_lambda_normalized(b: &StructureBundle, lambda: &LambdaElement) -> Result<Report> {
    Ok(entries_to_report(lambda_normalization_residuals(b, &lambda.lambda)?))
}

/// Wraps raw probe matrices into shaped σ components.
pub(crate) fn shaped_sigma(b: &StructureBundle, family: &[Matrix]) -> Result<Vec<ShapedMap>> {
    SigmaElement::from_matrices(b, family.to_vec()).map(|s| s.sigma)
}

/// Wraps raw probe matrices into shaped λ components.
pub(crate) fn shaped_lambda(b: &StructureBundle, family: &[Matrix]) -> Result<Vec<ShapedMap>> {
    LambdaElement::from_matrices(b, family.to_vec()).map(|s| s.lambda)
}

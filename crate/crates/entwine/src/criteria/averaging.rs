//! Maschke-type averaging (Section 7): a cointegral turns any base-category
//! morphism between entwined (contra)modules into an entwined one
//! (Prop. 7.4 / Eq. 7.5 on the contramodule side, Eq. 7.6 on the comodule
//! side), and averaging a base section of an entwined epimorphism yields an
//! entwined splitting (Theorems 7.5 and 7.7).

use crate::error::{Error, Result};
use crate::matrix::mat_mul;
use crate::representations::{
    check_morphism, EntwinedComoduleData, EntwinedContramoduleData, HomCategory, ModuleData,
    MorphismData,
};
use crate::structures::StructureBundle;
use crate::tensor::{
    coevaluation, dual_map, evaluation_pairing, kron, kron_all, permute_factors, ShapedMap,
    TensorShape,
};

use super::CointegralData;

fn id_on(dim: usize, b: &StructureBundle) -> ShapedMap {
    ShapedMap::identity(TensorShape::new(vec![dim]), b.field)
}

fn reject_if_invalid(report: &crate::structures::Report, which: &str) -> Result<()> {
    if report.is_empty() {
        Ok(())
    } else {
        let summary = report.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ");
        Err(Error::InvalidMorphism(format!("{which}: {summary}")))
    }
}

/// Averages a plain comodule morphism φ between the underlying comodules of
/// two entwined comodules into the entwined morphism φ̌ (Eq. 7.6):
/// φ̌(Y) = μ'_Y∘(φ(Y)⊗A)∘(μ_Y⊗A)∘(M⊗A⊗γ_Y)∘(M⊗coev_A⊗C(Y,Y))∘ρ_{YY}.
/// The input is validated as a plain morphism first.
pub fn average_morphism_comod(
    b: &StructureBundle,
    gamma: &CointegralData,
    source: &EntwinedComoduleData,
    target: &EntwinedComoduleData,
    phi: &MorphismData,
) -> Result<MorphismData> {
    let c = &b.coalgebra;
    let report = check_morphism(
        b,
        HomCategory::Comod,
        &ModuleData::Comod(source.base.clone()),
        &ModuleData::Comod(target.base.clone()),
        phi,
    );
    reject_if_invalid(&report, "input is not a plain comodule morphism")?;
    let da = b.dim_a();
    let id_a = id_on(da, b);
    let coev = coevaluation(da, b.field);
    let mut components = Vec::with_capacity(b.n_objects());
    for y in 0..b.n_objects() {
        let id_m = id_on(source.dim(y), b);
        let id_c = id_on(b.dim_c(y, y), b);
        let phi_y = ShapedMap::new(
            phi.components[y].clone(),
            TensorShape::new(vec![source.dim(y)]),
            TensorShape::new(vec![target.dim(y)]),
        )?;
        let comp = target
            .mu(y)
            .compose(&kron(&phi_y, &id_a)?)?
            .compose(&kron(source.mu(y), &id_a)?)?
            .compose(&kron_all(&[&id_m, &id_a, &gamma.gamma[y]])?)?
            .compose(&kron_all(&[&id_m, &coev, &id_c])?)?
            .compose(&source.rho(c, y, y))?;
        components.push(comp.matrix);
    }
    Ok(MorphismData { components })
}

/// Averages a plain contramodule morphism φ between the underlying
/// contramodules of two entwined contramodules into the entwined morphism
/// φ̂ (Eq. 7.5). In the dualized encoding the component at Y is
/// π'_{YY}∘(ev_A⊗id)∘swap∘(γ_Y^T⊗id)∘(A*⊗μ'_Y)∘(A*⊗φ(Y))∘μ_Y, where the
/// swap moves the action variable next to the A-leg of γ_Y^T for the
/// evaluation pairing.
pub fn average_morphism_contra(
    b: &StructureBundle,
    gamma: &CointegralData,
    source: &EntwinedContramoduleData,
    target: &EntwinedContramoduleData,
    phi: &MorphismData,
) -> Result<MorphismData> {
    let c = &b.coalgebra;
    let report = check_morphism(
        b,
        HomCategory::Contra,
        &ModuleData::Contra(source.base.clone()),
        &ModuleData::Contra(target.base.clone()),
        phi,
    );
    reject_if_invalid(&report, "input is not a plain contramodule morphism")?;
    let da = b.dim_a();
    let id_a = id_on(da, b);
    let ev = evaluation_pairing(da, b.field);
    let mut components = Vec::with_capacity(b.n_objects());
    for y in 0..b.n_objects() {
        let dc = b.dim_c(y, y);
        let dm_t = target.dim(y);
        let phi_y = ShapedMap::new(
            phi.components[y].clone(),
            TensorShape::new(vec![source.dim(y)]),
            TensorShape::new(vec![dm_t]),
        )?;
        let id_cm = id_on(dc * dm_t, b)
            .with_shapes(TensorShape::new(vec![dc, dm_t]), TensorShape::new(vec![dc, dm_t]))?;
        let id_am = id_on(da * dm_t, b)
            .with_shapes(TensorShape::new(vec![da, dm_t]), TensorShape::new(vec![da, dm_t]))?;
        let swap = permute_factors(
            &TensorShape::new(vec![da, dc, da, dm_t]),
            &[0, 2, 1, 3],
            b.field,
        )?;
        let comp = target
            .pi(c, y, y)
            .compose(&kron(&ev, &id_cm)?)?
            .compose(&swap)?
            .compose(&kron(&dual_map(&gamma.gamma[y]), &id_am)?)?
            .compose(&kron(&id_a, target.mu(y))?)?
            .compose(&kron(&id_a, &phi_y)?)?
            .compose(source.mu(y))?;
        components.push(comp.matrix);
    }
    Ok(MorphismData { components })
}

/// Splits an entwined epi- or monomorphism using a cointegral (Theorems 7.5
/// and 7.7). `phi` must be an entwined morphism `source → target` and
/// `base_splitting` a plain morphism `target → source` on the underlying
/// (contra)modules satisfying φ∘s = id (section of an epi) or s∘φ = id
/// (retraction of a mono). The averaged splitting is returned after
/// verification that it is an entwined morphism and still splits φ.
pub fn maschke_split(
    b: &StructureBundle,
    gamma: &CointegralData,
    source: &ModuleData,
    target: &ModuleData,
    phi: &MorphismData,
    base_splitting: &MorphismData,
) -> Result<MorphismData> {
    let category = source.category();
    if !category.is_entwined() || target.category() != category {
        return Err(Error::Validation(
            "maschke_split needs two entwined (contra)modules in the same category".into(),
        ));
    }
    let report = check_morphism(b, category, source, target, phi);
    reject_if_invalid(&report, "φ is not an entwined morphism")?;

    // Classify the base splitting: section (φ∘s = id) or retraction
    // (s∘φ = id), checked componentwise.
    let composes_to_id = |first: &MorphismData, then: &MorphismData| -> Result<bool> {
        for (s_c, t_c) in first.components.iter().zip(&then.components) {
            if !mat_mul(t_c, s_c)?.is_identity() {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let is_section = composes_to_id(base_splitting, phi)?;
    let is_retraction = composes_to_id(phi, base_splitting)?;
    if !is_section && !is_retraction {
        return Err(Error::NotASection(
            "the base morphism satisfies neither φ∘s = id nor s∘φ = id".into(),
        ));
    }

    let averaged = match (source, target) {
        (ModuleData::EntwinedComod(s), ModuleData::EntwinedComod(t)) => {
            average_morphism_comod(b, gamma, t, s, base_splitting)?
        }
        (ModuleData::EntwinedContra(s), ModuleData::EntwinedContra(t)) => {
            average_morphism_contra(b, gamma, t, s, base_splitting)?
        }
        _ => unreachable!("category agreement checked above"),
    };

    let report = check_morphism(b, category, target, source, &averaged);
    reject_if_invalid(&report, "averaged splitting is not an entwined morphism")?;
    let still_splits = if is_section {
        composes_to_id(&averaged, phi)?
    } else {
        composes_to_id(phi, &averaged)?
    };
    if !still_splits {
        return Err(Error::NotASection(
            "averaged morphism no longer splits φ (internal inconsistency)".into(),
        ));
    }
    Ok(averaged)
}

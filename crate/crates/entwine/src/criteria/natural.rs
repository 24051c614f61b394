//! The natural transformations induced by certificates: the counit-side
//! family τ and the unit-side family κ, on both the comodule and the
//! contramodule side. These are the building blocks of the Frobenius
//! composite identities (Eqs. 6.2cr, 6.3cr, 6.2cr7, 6.3cr7) and of the
//! separability sections.

use crate::error::Result;
use crate::representations::{
    ComoduleData, ContramoduleData, EntwinedComoduleData, EntwinedContramoduleData,
    MorphismData,
};
use crate::structures::StructureBundle;
use crate::tensor::{dual_map, kron, permute_factors, ShapedMap, TensorShape};

use super::{LambdaElement, SigmaElement};

fn id_on(dim: usize, b: &StructureBundle) -> ShapedMap {
    ShapedMap::identity(TensorShape::new(vec![dim]), b.field)
}

/// τ(N) for a plain comodule N and σ ∈ V₁ (Eq. 4.4): the component at X is
/// (id_N⊗σ_X)∘(ρ_{XX}⊗id_A): N(X)⊗A → N(X), i.e. a morphism FG-shaped
/// object → N exhibiting σ as a natural retraction datum.
pub fn tau_comod(
    b: &StructureBundle,
    sigma: &SigmaElement,
    n: &ComoduleData,
) -> Result<MorphismData> {
    let c = &b.coalgebra;
    let id_a = id_on(b.dim_a(), b);
    let mut components = Vec::with_capacity(b.n_objects());
    for x in 0..b.n_objects() {
        let id_n = id_on(n.dim(x), b);
        let comp = kron(&id_n, &sigma.sigma[x])?
            .compose(&kron(&n.rho(c, x, x), &id_a)?)?;
        components.push(comp.matrix);
    }
    Ok(MorphismData { components })
}

/// κ(M) for an entwined comodule M and λ ∈ W₁ (Eq. 4.27): the component at
/// X is (μ_X⊗id_A)∘(id_M⊗λ^X)∘ρ_{XX}: M(X) → M(X)⊗A, i.e. a morphism
/// M → FG(M) exhibiting λ as a natural section datum.
pub fn kappa_comod(
    b: &StructureBundle,
    lambda: &LambdaElement,
    m: &EntwinedComoduleData,
) -> Result<MorphismData> {
    let c = &b.coalgebra;
    let id_a = id_on(b.dim_a(), b);
    let mut components = Vec::with_capacity(b.n_objects());
    for x in 0..b.n_objects() {
        let id_m = id_on(m.dim(x), b);
        let comp = kron(m.mu(x), &id_a)?
            .compose(&kron(&id_m, &lambda.lambda[x])?)?
            .compose(&m.rho(c, x, x))?;
        components.push(comp.matrix);
    }
    Ok(MorphismData { components })
}

/// τ(𝔑) for a plain contramodule 𝔑 and σ ∈ V₁ (the contramodule-side
/// counterpart of Eq. 4.4): in the dualized encoding the component at X is
/// (id_{A*}⊗π_{XX})∘swap∘(σ_X^T⊗id_𝔑): 𝔑(X) → A*⊗𝔑(X), where swap is the
/// currying permutation exchanging the two dual slots.
pub fn tau_contra(
    b: &StructureBundle,
    sigma: &SigmaElement,
    n: &ContramoduleData,
) -> Result<MorphismData> {
    let c = &b.coalgebra;
    let da = b.dim_a();
    let id_ad = id_on(da, b);
    let mut components = Vec::with_capacity(b.n_objects());
    for x in 0..b.n_objects() {
        let dc = b.dim_c(x, x);
        let dn = n.dim(x);
        let id_n = id_on(dn, b);
        // σ_X^T: K → C(X,X)*⊗A*, so σ_X^T⊗id_𝔑 lands in [dc, da, dn];
        // the curry swap moves it to [da, dc, dn] before π_{XX} eats the
        // C(X,X)* slot.
        let swap =
            permute_factors(&TensorShape::new(vec![dc, da, dn]), &[1, 0, 2], b.field)?;
        let comp = kron(&id_ad, &n.pi(c, x, x))?
            .compose(&swap)?
            .compose(&kron(&dual_map(&sigma.sigma[x]), &id_n)?)?;
        components.push(comp.matrix);
    }
    Ok(MorphismData { components })
}

/// κ(𝔐) for an entwined contramodule 𝔐 and λ ∈ W₁ (the contramodule-side
/// counterpart of Eq. 4.27): in the dualized encoding the component at X is
/// π_{XX}∘((λ^X)^T⊗id_𝔐)∘swap∘(id_{A*}⊗μ_X): A*⊗𝔐(X) → 𝔐(X), where the
/// swap exchanges the two A* slots so (λ^X)^T pairs its first dual factor
/// with the inner action variable.
pub fn kappa_contra(
    b: &StructureBundle,
    lambda: &LambdaElement,
    m: &EntwinedContramoduleData,
) -> Result<MorphismData> {
    let c = &b.coalgebra;
    let da = b.dim_a();
    let id_ad = id_on(da, b);
    let mut components = Vec::with_capacity(b.n_objects());
    for x in 0..b.n_objects() {
        let dm = m.dim(x);
        let id_m = id_on(dm, b);
        let swap =
            permute_factors(&TensorShape::new(vec![da, da, dm]), &[1, 0, 2], b.field)?;
        // (λ^X)^T: A*⊗A* → C(X,X)* in the dual encoding; applied to the
        // (inner, outer) pair after the swap it leaves [dc, dm] for π_{XX}.
        let comp = m
            .pi(c, x, x)
            .compose(&kron(&dual_map(&lambda.lambda[x]), &id_m)?)?
            .compose(&swap)?
            .compose(&kron(&id_ad, m.mu(x))?)?;
        components.push(comp.matrix);
    }
    Ok(MorphismData { components })
}

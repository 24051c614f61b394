//! Computes hom-space bases in the four module categories and round-trips a
//! morphism through the F ⊣ G adjunction bijection
//! Hom(F(N), M) ≅ Hom(N, G(M)).

use entwine::catalog::catalog_build;
use entwine::representations::{
    adjunction_transpose, check_morphism, functor_f, functor_g, functor_s, functor_t, hom_space,
    regular_representation, trivial_contramodule, HomCategory, ModuleData, TransposeDirection,
};
use entwine::Result;

fn main() -> Result<()> {
    let b = catalog_build("path-a2", None)?;
    println!("bundle: path-a2 ({} objects, dim A = {})", b.n_objects(), b.dim_a());

    // N = the regular representation at object X; M = F(N) its induction.
    let n = regular_representation(&b.coalgebra, 0);
    let fn_ = functor_f(&b, &n);
    let n_mod = ModuleData::Comod(n.clone());
    let fn_mod = ModuleData::EntwinedComod(fn_.clone());
    let gfn_mod = ModuleData::Comod(functor_g(&fn_));

    for (label, cat, s, t) in [
        ("Hom_comod(N, N)", HomCategory::Comod, &n_mod, &n_mod),
        ("Hom_entwined(F(N), F(N))", HomCategory::EntwinedComod, &fn_mod, &fn_mod),
        ("Hom_comod(N, GF(N))", HomCategory::Comod, &n_mod, &gfn_mod),
    ] {
        let basis = hom_space(&b, cat, s, t)?;
        println!("dim {label} = {}", basis.len());
        for phi in &basis {
            assert!(check_morphism(&b, cat, s, t, phi).is_empty());
        }
    }

    // Adjunction round trip: zeta: N -> G(F(N)) across F ⊣ G and back.
    let zeta = &hom_space(&b, HomCategory::Comod, &n_mod, &gfn_mod)?[0];
    let eta = adjunction_transpose(&b, TransposeDirection::RightToLeft, &n_mod, &fn_mod, zeta)?;
    assert!(check_morphism(&b, HomCategory::EntwinedComod, &fn_mod, &fn_mod, &eta).is_empty());
    let zeta_back =
        adjunction_transpose(&b, TransposeDirection::LeftToRight, &n_mod, &fn_mod, &eta)?;
    assert_eq!(zeta, &zeta_back, "the adjunction transposes are mutually inverse");
    println!("F ⊣ G transpose round trip: ok");

    // Contramodule side: S ⊣ T on the trivial contramodule at X.
    let cn = trivial_contramodule(&b.coalgebra, 0);
    let tcn = functor_t(&b, &cn);
    let s_tcn = ModuleData::Contra(functor_s(&tcn));
    let cn_mod = ModuleData::Contra(cn);
    let tcn_mod = ModuleData::EntwinedContra(tcn);
    let dim = hom_space(&b, HomCategory::EntwinedContra, &tcn_mod, &tcn_mod)?.len();
    println!("dim Hom_entwined-contra(T(N'), T(N')) = {dim}");
    let eta = &hom_space(&b, HomCategory::Contra, &s_tcn, &cn_mod)?[0];
    let zeta =
        adjunction_transpose(&b, TransposeDirection::LeftToRight, &tcn_mod, &cn_mod, eta)?;
    let eta_back =
        adjunction_transpose(&b, TransposeDirection::RightToLeft, &tcn_mod, &cn_mod, &zeta)?;
    assert_eq!(eta, &eta_back, "the S ⊣ T transposes are mutually inverse");
    println!("S ⊣ T transpose round trip: ok");
    Ok(())
}

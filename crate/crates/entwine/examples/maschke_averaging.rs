//! Finds a normalized cointegral for Q[C2], uses it to average plain
//! morphisms into entwined ones, and splits the augmentation epimorphism
//! Q[C2] -> K with an A-linear section produced from a non-A-linear one.

use std::collections::BTreeMap;

use entwine::catalog::catalog_build;
use entwine::criteria::{
    average_morphism_comod, check_cointegral, find_cointegral, maschke_split, Certificate, Outcome,
};
use entwine::representations::{
    check_morphism, functor_f, regular_representation, ComoduleData, EntwinedComoduleData,
    HomCategory, ModuleData, MorphismData,
};
use entwine::{Matrix, Result, ShapedMap, TensorShape};

fn main() -> Result<()> {
    // Existence of a cointegral depends on the characteristic.
    for name in ["group-c2-q", "group-c2-f2"] {
        let b = catalog_build(name, None)?;
        let d = find_cointegral(&b)?;
        println!("cointegral on {name:12} -> {} ({})", d.outcome, d.detail);
    }

    let b = catalog_build("group-c2-q", None)?;
    let d = find_cointegral(&b)?;
    assert_eq!(d.outcome, Outcome::Yes);
    let Some(Certificate::Cointegral(gamma)) = d.certificate else {
        panic!("a cointegral Yes carries the gamma family");
    };
    assert!(check_cointegral(&b, &gamma)?.is_empty());
    println!("gamma at *: {:?}", gamma.matrices()[0].entries());

    // M = A itself as an entwined comodule (induction of the regular
    // representation); K_aug = the one-dimensional augmentation comodule.
    let m = functor_f(&b, &regular_representation(&b.coalgebra, 0));
    let mut coaction = BTreeMap::new();
    coaction.insert((0usize, 0usize), ShapedMap::identity(TensorShape::new(vec![1]), b.field));
    let k_aug = EntwinedComoduleData {
        base: ComoduleData { carrier: vec![1], coaction },
        action: vec![ShapedMap::new(
            Matrix::from_i64(1, b.dim_a(), b.field, &[1, 1]),
            TensorShape::new(vec![1, b.dim_a()]),
            TensorShape::new(vec![1]),
        )?],
    };
    let m_mod = ModuleData::EntwinedComod(m.clone());
    let k_mod = ModuleData::EntwinedComod(k_aug.clone());

    // Averaging turns the plain comodule morphism s: 1 |-> 1 into an
    // entwined one without changing morphisms that are already entwined.
    let s = MorphismData { components: vec![Matrix::from_i64(2, 1, b.field, &[1, 0])] };
    let s_avg = average_morphism_comod(&b, &gamma, &k_aug, &m, &s)?;
    println!("averaged section components: {:?}", s_avg.components[0].entries());
    assert!(check_morphism(&b, HomCategory::EntwinedComod, &k_mod, &m_mod, &s_avg).is_empty());

    // The augmentation phi: Q[C2] -> K is an entwined epi; Maschke splitting
    // averages the base section into an A-linear section with phi∘s = id.
    let phi = MorphismData { components: vec![Matrix::from_i64(1, 2, b.field, &[1, 1])] };
    let split = maschke_split(&b, &gamma, &m_mod, &k_mod, &phi, &s)?;
    println!("A-linear section of the augmentation: {:?}", split.components[0].entries());
    let composed = entwine::mat_mul(&phi.components[0], &split.components[0])?;
    assert!(composed.is_identity(), "the averaged section still splits phi");
    println!("phi ∘ s_avg = id: ok");
    Ok(())
}

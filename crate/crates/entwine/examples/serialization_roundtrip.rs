//! Round-trips bundles, modules, morphisms, and decision certificates
//! through their canonical text forms: save ∘ load is the identity.

use entwine::catalog::{catalog_build, catalog_list};
use entwine::criteria::{certificate_from_json, certificate_to_json, decide_sep_g};
use entwine::representations::{
    functor_f, hom_space, load_module, load_morphism, regular_representation, save_module,
    save_morphism, HomCategory, ModuleData,
};
use entwine::structures::serial::{load_bundle, save_bundle};
use entwine::Result;

fn main() -> Result<()> {
    for (name, _) in catalog_list() {
        let b = catalog_build(name, None)?;
        let text = save_bundle(&b);
        let back = load_bundle(&text)?;
        assert_eq!(b, back, "bundle round trip must be exact");
        println!("bundle {name:18} round trip ok ({} bytes)", text.len());
    }

    let b = catalog_build("path-a2", None)?;
    let m = ModuleData::EntwinedComod(functor_f(&b, &regular_representation(&b.coalgebra, 0)));
    let text = save_module(&b, &m);
    let back = load_module(&b, &text)?;
    assert_eq!(m, back);
    println!("module round trip ok:\n{text}");

    let phi = &hom_space(&b, HomCategory::EntwinedComod, &m, &m)?[0];
    let text = save_morphism(&b, phi);
    let back = load_morphism(&b, &text, m.carrier(), m.carrier())?;
    assert_eq!(phi, &back);
    println!("morphism round trip ok");

    let b = catalog_build("group-c2-q", None)?;
    let cert = decide_sep_g(&b)?.certificate.expect("sep(G) is Yes over Q");
    let value = certificate_to_json(&b, &cert);
    let back = certificate_from_json(&b, &value)?;
    assert_eq!(cert, back);
    println!("certificate round trip ok:\n{}", serde_json::to_string_pretty(&value).unwrap());
    Ok(())
}

//! Walks the built-in catalog, re-verifies every structure axiom, and then
//! demonstrates that the checkers really bite by mutating one structure
//! constant of the `path-a2` bundle and printing the resulting violations.

use entwine::catalog::{catalog_build, catalog_list};
use entwine::Result;

fn main() -> Result<()> {
    println!("== catalog roster ==");
    for (name, blurb) in catalog_list() {
        let b = catalog_build(name, None)?;
        let report = b.check_all();
        println!(
            "{name:18} field={:?} objects={} dim A={} violations={}",
            b.field,
            b.n_objects(),
            b.dim_a(),
            report.len()
        );
        assert!(report.is_empty(), "catalog entries must satisfy all axioms");
        println!("    {blurb}");
    }

    println!();
    println!("== mutation: break one entry of delta in path-a2 ==");
    let mut broken = catalog_build("path-a2", None)?;
    // path-a2 has objects X, Y with dim C(X,Y) = 1; bump the (0,0) entry of
    // the coassociative splitting delta_{XXY}: C(X,Y) -> C(X,Y) ⊗ C(X,X).
    let key = (0, 0, 1);
    let one = broken.field.one();
    let entry = broken
        .coalgebra
        .delta
        .get_mut(&key)
        .expect("path-a2 stores delta_{XXY}");
    let cur = entry.matrix[(0, 0)].clone();
    entry.matrix[(0, 0)] = cur.add(&one)?;
    let report = broken.check_all();
    println!("violations after mutation: {}", report.len());
    for v in report.iter().take(4) {
        println!("  {v}");
    }
    assert!(!report.is_empty(), "the mutated bundle must fail some axiom");
    Ok(())
}

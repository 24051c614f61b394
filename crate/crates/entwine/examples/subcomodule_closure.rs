//! Computes the subcomodule of a regular representation generated by a
//! single element, exhibiting the closure across objects of the path
//! coalgebra of the quiver X -> Y.

use entwine::catalog::catalog_build;
use entwine::representations::{regular_representation, subcomodule_generated};
use entwine::{Matrix, Result};

fn main() -> Result<()> {
    let b = catalog_build("path-a2", None)?;
    let c = &b.coalgebra;
    // The regular representation at Y has carrier C(-,Y):
    // dim 1 at X (the arrow a: X -> Y) and dim 1 at Y (the idempotent e_Y).
    let m = regular_representation(c, 1);
    let carrier: Vec<usize> = (0..c.n_objects()).map(|y| m.dim(y)).collect();
    println!("carrier of the regular representation at Y: {carrier:?}");

    // The arrow a, sitting in the X-component, sweeps up e_Y through the
    // coaction rho_XY(a) = e_Y ⊗ a.
    let gen = Matrix::from_i64(m.dim(0), 1, b.field, &[1]);
    let sub = subcomodule_generated(c, &m, 0, &gen)?;
    println!("subcomodule generated by the arrow a: total dim {}", sub.total_dim());
    for y in 0..c.n_objects() {
        println!("  at {}: dim {}", c.objects[y], sub.inclusion(y).cols);
    }
    assert_eq!(sub.total_dim(), 2, "a generates everything");

    // A generator at Y only reaches the Y-component: the closure is
    // directional along the quiver.
    let gen = Matrix::from_i64(m.dim(1), 1, b.field, &[1]);
    let sub = subcomodule_generated(c, &m, 1, &gen)?;
    println!("subcomodule generated by e_Y: total dim {}", sub.total_dim());
    assert_eq!(sub.total_dim(), 1);
    Ok(())
}

//! Oracle tests for the structure-axiom checkers. Tags: [DERIVED] =
//! hand-derived from the defining equations, [TRIVIAL] = direct consequence
//! of the construction.

use super::*;
use crate::catalog::{algebra_from_table, catalog_build, point_coalgebra};
use crate::matrix::Matrix;

const Q: FieldSpec = FieldSpec::Rationals;

fn dual_numbers() -> AlgebraData {
    // [DERIVED] basis {1, x}, x² = 0.
    algebra_from_table(Q, &[&[&[1, 0], &[0, 1]], &[&[0, 1], &[0, 0]]], &[1, 0])
}

#[test]
fn algebra_checker_accepts_dual_numbers_and_names_broken_laws() {
    let a = dual_numbers();
    assert!(check_algebra(&a).is_empty());

    // [TRIVIAL] breaking the unit: u = x is not a unit for x² = 0.
    let mut broken = a.clone();
    broken.unit.matrix[(0, 0)] = Q.zero();
    broken.unit.matrix[(1, 0)] = Q.one();
    let report = check_algebra(&broken);
    assert!(report.iter().any(|v| v.law.contains("unit")), "{report:?}");

    // [DERIVED] x·x = x breaks nothing, but x·x = 1 with 1·x redefined to 0
    // breaks associativity: (x·x)·x = x vs x·(x·x) = 0.
    let mut broken = a;
    let m = &mut broken.mul.matrix;
    m[(0, 3)] = Q.one(); // x·x = 1
    m[(1, 1)] = Q.zero(); // 1·x = 0
    let report = check_algebra(&broken);
    assert!(report.iter().any(|v| v.law.contains("associativity")), "{report:?}");
}

#[test]
fn coalgebra_checker_accepts_point_and_names_broken_counit() {
    let c = point_coalgebra(Q);
    assert!(check_coalgebra(&c).is_empty());
    // [TRIVIAL] zeroing ε breaks the counit law.
    let mut broken = c;
    broken.counit[0].matrix[(0, 0)] = Q.zero();
    let report = check_coalgebra(&broken);
    assert!(report.iter().any(|v| v.law.contains("counit")), "{report:?}");
}

#[test]
fn flip_entwining_satisfies_eq_2_4_for_every_catalog_coalgebra_algebra_pair() {
    // [DERIVED] the factor swap entwines any (C, A); mixing the catalog's
    // coalgebras and algebras crosswise exercises the multi-object cases.
    let path = catalog_build("path-a2", None).unwrap();
    let matrix2 = catalog_build("matrix-coalg-2obj", None).unwrap();
    for c in [path.coalgebra, matrix2.coalgebra] {
        let a = dual_numbers();
        let entwining = flip_entwining(&c, &a);
        let b = StructureBundle { field: Q, coalgebra: c, algebra: a, entwining };
        assert!(check_entwining(&b).is_empty());
    }
}

#[test]
fn entwining_checker_names_the_broken_axiom() {
    // [DERIVED] scaling ψ by 2 preserves axioms 1–2 homogeneity pattern but
    // breaks the unit condition ψ∘(id⊗u) = u⊗id of Eq. 2.4.
    let mut b = catalog_build("dual-numbers-q", None).unwrap();
    let psi = b.entwining.psi.get_mut(&(0, 0)).unwrap();
    psi.matrix = psi.matrix.scale(&Q.from_i64(2)).unwrap();
    let report = check_entwining(&b);
    assert!(
        report.iter().any(|v| v.law.contains("Eq. 2.4 unit condition")),
        "{report:?}"
    );
}

#[test]
fn shape_validation_rejects_inconsistent_tables() {
    // [TRIVIAL] a delta entry of the wrong shape is a validation error,
    // not a silent axiom failure.
    let mut b = catalog_build("path-a2", None).unwrap();
    b.coalgebra.delta.insert(
        (0, 0, 0),
        ShapedMap::new(
            Matrix::identity(2, Q),
            TensorShape::new(vec![2]),
            TensorShape::new(vec![2, 1]),
        )
        .unwrap(),
    );
    assert!(b.validate_shapes().is_err());
}

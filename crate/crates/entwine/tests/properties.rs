//! Property-based checks of the exact-arithmetic kernel: randomized small
//! matrices over Q and F5 exercise the algebraic identities the rest of the
//! crate leans on (mixed-product rule, rank/nullspace duality, affine-solve
//! soundness, permutation inverses).

use proptest::prelude::*;

use entwine::linalg::{nullspace, rank, solve_affine, verify_solution};
use entwine::tensor::{kron, permute_factors, ShapedMap, TensorShape};
use entwine::{mat_mul, FieldSpec, Matrix};

fn field_strategy() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![Just(FieldSpec::Rationals), Just(FieldSpec::PrimeField(5))]
}

fn matrix_strategy(
    field: FieldSpec,
    rows: usize,
    cols: usize,
) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(-3i64..=3, rows * cols)
        .prop_map(move |e| Matrix::from_i64(rows, cols, field, &e))
}

/// A random matrix with both dimensions in 1..=3, tagged with its shape.
fn sized_matrix(field: FieldSpec) -> impl Strategy<Value = Matrix> {
    (1usize..=3, 1usize..=3)
        .prop_flat_map(move |(r, c)| matrix_strategy(field, r, c))
}

fn shaped(m: Matrix) -> ShapedMap {
    let (r, c) = (m.rows, m.cols);
    ShapedMap::new(m, TensorShape::new(vec![c]), TensorShape::new(vec![r])).expect("shape ok")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Mixed-product rule: (A⊗B)∘(C⊗D) = (A∘C)⊗(B∘D).
    #[test]
    fn kron_mixed_product(
        field in field_strategy(),
        dims in (1usize..=3, 1usize..=3, 1usize..=3, 1usize..=3, 1usize..=3, 1usize..=3),
        seed in proptest::collection::vec(-3i64..=3, 4 * 81),
    ) {
        let (m, n, p, q, r, s) = dims;
        let mut it = seed.into_iter();
        let mut take = |rows: usize, cols: usize| {
            let entries: Vec<i64> = (0..rows * cols).map(|_| it.next().unwrap_or(1)).collect();
            shaped(Matrix::from_i64(rows, cols, field, &entries))
        };
        let a = take(m, n);
        let b = take(p, q);
        let c = take(n, r);
        let d = take(q, s);
        let lhs = kron(&a, &b).unwrap().compose(&kron(&c, &d).unwrap()).unwrap();
        let rhs = kron(&a.compose(&c).unwrap(), &b.compose(&d).unwrap()).unwrap();
        prop_assert_eq!(lhs.matrix, rhs.matrix);
    }

    /// Rank-nullity: rank + dim null = columns, and every basis vector of
    /// the nullspace is annihilated.
    #[test]
    fn rank_nullity_duality(m in field_strategy().prop_flat_map(sized_matrix)) {
        let r = rank(&m);
        let null = nullspace(&m);
        prop_assert_eq!(r + null.len(), m.cols);
        for v in &null {
            prop_assert!(mat_mul(&m, v).unwrap().is_zero());
        }
    }

    /// Affine soundness: M·x = M·x0 is always feasible and the returned
    /// particular solution verifies exactly.
    #[test]
    fn affine_solve_soundness(data in (field_strategy(), 1usize..=3, 1usize..=3).prop_flat_map(|(f, r, c)| (matrix_strategy(f, r, c), matrix_strategy(f, c, 1)))) {
        let (m, x0) = data;
        let b = mat_mul(&m, &x0).unwrap();
        let sol = solve_affine(&m, &b).unwrap().ok().expect("feasible by construction");
        prop_assert!(verify_solution(&m, &sol.particular, &b));
        for h in &sol.nullspace {
            prop_assert!(mat_mul(&m, h).unwrap().is_zero());
        }
    }

    /// Factor permutation maps are orthogonal: P·Pᵀ = id.
    #[test]
    fn permutation_inverse(field in field_strategy(), dims in proptest::collection::vec(1usize..=3, 1..=3), perm_seed in 0usize..6) {
        let shape = TensorShape::new(dims.clone());
        let k = dims.len();
        // Build a permutation of 0..k from the seed.
        let mut perm: Vec<usize> = (0..k).collect();
        let mut s = perm_seed;
        for i in (1..k).rev() {
            perm.swap(i, s % (i + 1));
            s /= i + 1;
        }
        let fwd = permute_factors(&shape, &perm, field).unwrap();
        let product = mat_mul(&fwd.matrix, &fwd.matrix.transpose()).unwrap();
        prop_assert!(product.is_identity());
    }
}

//! Exact Gaussian elimination: rank, nullspace, affine feasibility.
//!
//! Everything downstream — V1/W1 solves, hom-space bases, cointegral search —
//! reduces to these three services. Over Q all arithmetic stays in reduced
//! fractions, so certificates are bit-exact.

use crate::error::{Error, Result};
use crate::matrix::{mat_mul, Matrix};

/// Reduced row echelon form together with the pivot column indices.
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

/// Computes the reduced row echelon form by exact Gauss–Jordan elimination
/// (pivot on the first nonzero entry in each column).
pub fn rref(m: &Matrix) -> Rref {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row >= a.rows {
            break;
        }
        // Find a pivot in this column at or below `row`.
        let Some(piv) = (row..a.rows).find(|&r| !a[(r, col)].is_zero()) else {
            continue;
        };
        if piv != row {
            for j in 0..a.cols {
                let tmp = a[(row, j)].clone();
                a[(row, j)] = a[(piv, j)].clone();
                a[(piv, j)] = tmp;
            }
        }
        // Normalize the pivot row.
        let inv = a[(row, col)].inv().expect("pivot is nonzero");
        for j in 0..a.cols {
            a[(row, j)] = a[(row, j)].mul(&inv).expect("same field");
        }
        // Eliminate the column everywhere else.
        for r in 0..a.rows {
            if r == row || a[(r, col)].is_zero() {
                continue;
            }
            let factor = a[(r, col)].clone();
            for j in 0..a.cols {
                let delta = a[(row, j)].mul(&factor).expect("same field");
                a[(r, j)] = a[(r, j)].sub(&delta).expect("same field");
            }
        }
        pivots.push(col);
        row += 1;
    }
    Rref { matrix: a, pivots }
}

/// Row rank (= column rank) by exact elimination.
pub fn rank(m: &Matrix) -> usize {
    rref(m).pivots.len()
}

/// A basis of `{x : m·x = 0}` as column vectors, one per free column of the
/// reduced row echelon form. The basis is the canonical one read off the
/// RREF (free variable set to 1, pivot variables to the negated RREF
/// coefficients), which is reduced column echelon form up to column order —
/// deterministic for test fixtures.
pub fn nullspace(m: &Matrix) -> Vec<Matrix> {
    let Rref { matrix: r, pivots } = rref(m);
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..m.cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = Matrix::zero(m.cols, 1, m.field);
        v[(free, 0)] = m.field.one();
        for (prow, &pcol) in pivots.iter().enumerate() {
            v[(pcol, 0)] = r[(prow, free)].neg();
        }
        basis.push(v);
    }
    basis
}

/// A solution of `m·x = b`: a canonical particular solution plus the
/// homogeneous nullspace basis.
pub struct AffineSolution {
    pub particular: Matrix,
    pub nullspace: Vec<Matrix>,
}

/// Witness of infeasibility: rank of the augmented system strictly exceeds
/// rank of the coefficient matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankWitness {
    pub rank_coefficient: usize,
    pub rank_augmented: usize,
}

/// Solves `m·x = b` exactly. `Ok(Ok(sol))` on feasibility, `Ok(Err(witness))`
/// when the system is inconsistent.
pub fn solve_affine(m: &Matrix, b: &Matrix) -> Result<std::result::Result<AffineSolution, RankWitness>> {
    if b.cols != 1 || b.rows != m.rows {
        return Err(Error::DimensionMismatch(format!(
            "solve_affine: {}x{} system with rhs {}x{}",
            m.rows, m.cols, b.rows, b.cols
        )));
    }
    let aug = m.hstack(b)?;
    let Rref { matrix: r, pivots } = rref(&aug);
    if pivots.iter().any(|&c| c == m.cols) {
        // The last (rhs) column is a pivot column: inconsistent.
        let rank_coefficient = pivots.len() - 1;
        return Ok(Err(RankWitness { rank_coefficient, rank_augmented: pivots.len() }));
    }
    let mut x = Matrix::zero(m.cols, 1, m.field);
    for (prow, &pcol) in pivots.iter().enumerate() {
        x[(pcol, 0)] = r[(prow, m.cols)].clone();
    }
    // Nullspace of the coefficient matrix, read off the same elimination.
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut ns = Vec::new();
    for free in 0..m.cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = Matrix::zero(m.cols, 1, m.field);
        v[(free, 0)] = m.field.one();
        for (prow, &pcol) in pivots.iter().enumerate() {
            v[(pcol, 0)] = r[(prow, free)].neg();
        }
        ns.push(v);
    }
    Ok(Ok(AffineSolution { particular: x, nullspace: ns }))
}

/// Debug-friendly check used by tests: re-multiplies a claimed solution.
pub fn verify_solution(m: &Matrix, x: &Matrix, b: &Matrix) -> bool {
    match mat_mul(m, x) {
        Ok(prod) => &prod == b,
        Err(_) => false,
    }
}

// Oracle tests for elimination; [DERIVED] ranks/nullspaces computed by
// hand for the fixture matrices.
#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    const Q: FieldSpec = FieldSpec::Rationals;
    const F2: FieldSpec = FieldSpec::PrimeField(2);

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&Matrix::zero(3, 3, Q)), 0);
        assert_eq!(rank(&Matrix::identity(4, Q)), 4);
        // Proportional rows.
        assert_eq!(rank(&Matrix::from_i64(2, 2, Q, &[1, 2, 2, 4])), 1);
    }

    #[test]
    fn nullspace_examples() {
        assert_eq!(nullspace(&Matrix::zero(2, 2, Q)).len(), 2);
        assert!(nullspace(&Matrix::identity(3, Q)).is_empty());
        let ns = nullspace(&Matrix::from_i64(1, 2, Q, &[1, 2]));
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0], Matrix::from_i64(2, 1, Q, &[-2, 1]));
    }

    #[test]
    fn nullspace_invariants() {
        let m = Matrix::from_i64(3, 4, Q, &[1, 2, 3, 4, 2, 4, 6, 8, 0, 1, 1, 0]);
        let ns = nullspace(&m);
        assert_eq!(rank(&m) + ns.len(), m.cols);
        let mut stacked = ns[0].clone();
        for v in &ns[1..] {
            assert!(mat_mul(&m, v).unwrap().is_zero());
            stacked = stacked.hstack(v).unwrap();
        }
        assert!(mat_mul(&m, &ns[0]).unwrap().is_zero());
        assert_eq!(rank(&stacked), ns.len());
    }

    #[test]
    fn solve_affine_identity_system() {
        let b = Matrix::from_i64(2, 1, Q, &[1, 0]);
        let sol = solve_affine(&Matrix::identity(2, Q), &b).unwrap().ok().unwrap();
        assert_eq!(sol.particular, b);
        assert!(sol.nullspace.is_empty());
    }

    #[test]
    fn solve_affine_infeasible() {
        let m = Matrix::zero(1, 1, Q);
        let b = Matrix::from_i64(1, 1, Q, &[1]);
        let w = solve_affine(&m, &b).unwrap().err().unwrap();
        assert_eq!(w, RankWitness { rank_coefficient: 0, rank_augmented: 1 });
    }

    #[test]
    fn solve_affine_over_f2() {
        // x + y = 1 over F_2: enumerating all four vectors gives solutions
        // (1,0) and (0,1); particular = (1,0), nullspace = {(1,1)}.
        let m = Matrix::from_i64(1, 2, F2, &[1, 1]);
        let b = Matrix::from_i64(1, 1, F2, &[1]);
        let sol = solve_affine(&m, &b).unwrap().ok().unwrap();
        assert_eq!(sol.particular, Matrix::from_i64(2, 1, F2, &[1, 0]));
        assert_eq!(sol.nullspace.len(), 1);
        assert_eq!(sol.nullspace[0], Matrix::from_i64(2, 1, F2, &[1, 1]));
        assert!(verify_solution(&m, &sol.particular, &b));
    }

    #[test]
    fn solve_affine_verifies_bit_exactly() {
        let m = Matrix::from_i64(2, 3, Q, &[2, 1, -1, 1, 0, 3]);
        let b = Matrix::from_i64(2, 1, Q, &[5, 7]);
        let sol = solve_affine(&m, &b).unwrap().ok().unwrap();
        assert!(verify_solution(&m, &sol.particular, &b));
        for v in &sol.nullspace {
            assert!(mat_mul(&m, v).unwrap().is_zero());
        }
    }
}

//! Linearization of constraint systems in unknown matrix families.
//!
//! Every decision procedure in the crate quantifies over a family of unknown
//! matrices (morphism components, σ/λ/γ families) subject to constraints
//! that are affine-linear in the unknowns. This module turns such a
//! constraint evaluator into an explicit system `S·vec(x) + c = 0` by
//! probing: `c` is the residual at zero and column `i` of `S` is the
//! residual at the `i`-th unit matrix minus `c`. Probing is quadratic in the
//! number of unknowns, which is fine at desk scale and keeps every formula
//! in one (auditable) direction.

use crate::error::Result;
use crate::field::FieldSpec;
use crate::linalg::{nullspace, solve_affine, RankWitness};
use crate::matrix::{mat_mul, Matrix};

/// An affine system over a family of unknown matrices with fixed shapes.
pub struct LinearProbe {
    pub field: FieldSpec,
    /// Shapes (rows, cols) of the unknown matrices, in order.
    pub dims: Vec<(usize, usize)>,
    /// Coefficient matrix of the stacked residuals.
    pub system: Matrix,
    /// Constant part of the stacked residuals (residual at zero).
    pub constant: Matrix,
}

/// Builds the probe. `eval` maps a full unknown family to the list of
/// residual matrices; it must be affine-linear in the family entries.
pub fn probe<F>(field: FieldSpec, dims: &[(usize, usize)], eval: F) -> Result<LinearProbe>
where
    F: Fn(&[Matrix]) -> Result<Vec<Matrix>>,
{
    let zeros: Vec<Matrix> = dims.iter().map(|&(r, c)| Matrix::zero(r, c, field)).collect();
    let base = stack(&eval(&zeros)?);
    let n_unknowns: usize = dims.iter().map(|&(r, c)| r * c).sum();
    let mut system = Matrix::zero(base.rows, n_unknowns, field);
    let mut col = 0;
    for (k, &(r, c)) in dims.iter().enumerate() {
        for i in 0..r {
            for j in 0..c {
                let mut family = zeros.clone();
                family[k][(i, j)] = field.one();
                let res = stack(&eval(&family)?);
                let delta = res.sub(&base)?;
                for row in 0..delta.rows {
                    system[(row, col)] = delta[(row, 0)].clone();
                }
                col += 1;
            }
        }
    }
    Ok(LinearProbe { field, dims: dims.to_vec(), system, constant: base })
}

fn stack(residuals: &[Matrix]) -> Matrix {
    let field = residuals.first().map(|m| m.field).unwrap_or(FieldSpec::Rationals);
    let mut out = Matrix::zero(0, 1, field);
    for r in residuals {
        out = out.vstack(&r.vectorize()).expect("residual fields agree");
    }
    out
}

impl LinearProbe {
    /// Unpacks a stacked unknown vector into the family of matrices.
    pub fn unpack(&self, x: &Matrix) -> Vec<Matrix> {
        let mut out = Vec::with_capacity(self.dims.len());
        let mut pos = 0;
        for &(r, c) in &self.dims {
            let mut m = Matrix::zero(r, c, self.field);
            for i in 0..r {
                for j in 0..c {
                    m[(i, j)] = x[(pos, 0)].clone();
                    pos += 1;
                }
            }
            out.push(m);
        }
        out
    }

    /// Packs a family of matrices into the stacked unknown vector.
    pub fn pack(&self, family: &[Matrix]) -> Matrix {
        let mut out = Matrix::zero(0, 1, self.field);
        for m in family {
            out = out.vstack(&m.vectorize()).expect("same field");
        }
        out
    }

    /// Basis of the homogeneous solution space (requires the system to have
    /// zero constant part, which holds for all membership conditions).
    pub fn solve_homogeneous(&self) -> Vec<Vec<Matrix>> {
        assert!(self.constant.is_zero(), "homogeneous solve on an inhomogeneous system");
        nullspace(&self.system).iter().map(|v| self.unpack(v)).collect()
    }

    /// Solves `S·x + c = 0`; on success returns the canonical particular
    /// family and the homogeneous basis, otherwise the rank witness.
    pub fn solve(&self) -> Result<std::result::Result<AffineFamilySolution, RankWitness>> {
        let rhs = self.constant.scale(&self.field.one().neg())?;
        match solve_affine(&self.system, &rhs)? {
            Ok(sol) => Ok(Ok(AffineFamilySolution {
                particular: self.unpack(&sol.particular),
                homogeneous: sol.nullspace.iter().map(|v| self.unpack(v)).collect(),
            })),
            Err(w) => Ok(Err(w)),
        }
    }

    /// Residual check for a claimed solution family: `S·vec(x) + c`.
    pub fn residual(&self, family: &[Matrix]) -> Result<Matrix> {
        let x = self.pack(family);
        mat_mul(&self.system, &x)?.add(&self.constant)
    }
}

/// A solved affine system over a matrix family.
pub struct AffineFamilySolution {
    pub particular: Vec<Matrix>,
    pub homogeneous: Vec<Vec<Matrix>>,
}

// Oracle tests for the linearization probe; [DERIVED] solution spaces of
// small matrix equations known in closed form.
#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn probe_recovers_a_matrix_equation() {
        // Unknown 2x2 X with constraint A·X − X·A = 0 for A = [[0,1],[0,0]]:
        // solutions are polynomials in A, dimension 2.
        let a = Matrix::from_i64(2, 2, Q, &[0, 1, 0, 0]);
        let p = probe(Q, &[(2, 2)], |fam| {
            let x = &fam[0];
            Ok(vec![mat_mul(&a, x)?.sub(&mat_mul(x, &a)?)?])
        })
        .unwrap();
        let basis = p.solve_homogeneous();
        assert_eq!(basis.len(), 2);
        for fam in &basis {
            let x = &fam[0];
            assert_eq!(mat_mul(&a, x).unwrap(), mat_mul(x, &a).unwrap());
        }
    }

    #[test]
    fn affine_solve_with_constant_part() {
        // Constraint X − I = 0 on a 2x2 unknown.
        let p = probe(Q, &[(2, 2)], |fam| {
            Ok(vec![fam[0].sub(&Matrix::identity(2, Q))?])
        })
        .unwrap();
        let sol = p.solve().unwrap().ok().unwrap();
        assert!(sol.particular[0].is_identity());
        assert!(sol.homogeneous.is_empty());
    }

    #[test]
    fn infeasible_affine_system_yields_witness() {
        // 0·X = I is infeasible.
        let p = probe(Q, &[(1, 1)], |_| Ok(vec![Matrix::identity(1, Q)])).unwrap();
        assert!(p.solve().unwrap().is_err());
    }
}

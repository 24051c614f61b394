//! The finitary subcomodule generated by one element (the Finiteness
//! Theorem, Thm. 5.2): repeatedly pushing an element through the coactions
//! closes off in finitely many steps, and the closure carries an induced
//! comodule structure.

use crate::error::{Error, Result};
use crate::linalg::{rank, rref, solve_affine};
use crate::matrix::Matrix;
use crate::structures::CoalgebraData;
use crate::tensor::{ShapedMap, TensorShape};

use super::ComoduleData;

/// The subcomodule generated by an element: canonical span bases per object
/// together with the restricted comodule structure in those bases.
#[derive(Debug, Clone, PartialEq)]
pub struct SubComodule {
    /// Per object Y, a `dim M(Y) × r_Y` matrix whose columns are the
    /// canonical (RREF-derived) basis of the span inside M(Y).
    pub spans: Vec<Matrix>,
    /// The induced comodule on the spans, written in the span bases.
    pub restricted: ComoduleData,
}

impl SubComodule {
    /// Total dimension of the subcomodule across all objects.
    pub fn total_dim(&self) -> usize {
        self.restricted.carrier.iter().sum()
    }

    /// The inclusion component at object `y` (the span basis as a map).
    pub fn inclusion(&self, y: usize) -> &Matrix {
        &self.spans[y]
    }
}

/// Canonicalizes a list of vectors in K^d to the RREF basis of their span,
/// returned as a `d × r` matrix of columns.
fn canonical_span(dim: usize, vectors: &[Matrix], field: crate::field::FieldSpec) -> Matrix {
    if vectors.is_empty() {
        return Matrix::zero(dim, 0, field);
    }
    let mut rows = Matrix::zero(0, dim, field);
    for v in vectors {
        rows = rows.vstack(&v.transpose()).expect("same field");
    }
    let r = rref(&rows);
    let mut basis = Matrix::zero(0, dim, field);
    for (i, _) in r.pivots.iter().enumerate() {
        let mut row = Matrix::zero(1, dim, field);
        for j in 0..dim {
            row[(0, j)] = r.matrix[(i, j)].clone();
        }
        basis = basis.vstack(&row).expect("same field");
    }
    basis.transpose()
}

/// Computes the subcomodule of `m` generated by the element `v ∈ M(X)`
/// (a `dim M(X) × 1` column). Closure runs in declared object order until
/// no span grows; the restricted coactions are obtained by exact solves
/// against the span bases, so membership failures are structural errors,
/// not approximations.
pub fn subcomodule_generated(
    c: &CoalgebraData,
    m: &ComoduleData,
    x: usize,
    v: &Matrix,
) -> Result<SubComodule> {
    m.validate_shapes(c)?;
    let n = c.n_objects();
    let field = c.field;
    if x >= n {
        return Err(Error::Validation(format!("object index {x} out of range")));
    }
    if v.rows != m.dim(x) || v.cols != 1 {
        return Err(Error::ShapeMismatch(format!(
            "generator must be a {}x1 column, got {}x{}",
            m.dim(x),
            v.rows,
            v.cols
        )));
    }

    // Working spans as vector lists; seeded with the generator.
    let mut spans: Vec<Vec<Matrix>> = vec![Vec::new(); n];
    spans[x].push(v.clone());
    let mut bases: Vec<Matrix> =
        (0..n).map(|y| canonical_span(m.dim(y), &spans[y], field)).collect();

    loop {
        let mut grew = false;
        for y in 0..n {
            // Push every current basis vector of span[y] through every
            // coaction ρ_{YZ} and collect the M(Z)-legs of the image.
            let basis_y = bases[y].clone();
            for col in 0..basis_y.cols {
                let w = basis_y.column(col);
                for z in 0..n {
                    let dc = c.dim(y, z);
                    if dc == 0 || m.dim(z) == 0 {
                        continue;
                    }
                    let rho = m.rho(c, y, z);
                    let img = crate::matrix::mat_mul(&rho.matrix, &w)?;
                    // img lives in M(Z)⊗C(Y,Z): entry (i·dc + k).
                    for k in 0..dc {
                        let mut leg = Matrix::zero(m.dim(z), 1, field);
                        for i in 0..m.dim(z) {
                            leg[(i, 0)] = img[(i * dc + k, 0)].clone();
                        }
                        if !leg.is_zero() {
                            spans[z].push(leg);
                        }
                    }
                }
            }
        }
        let new_bases: Vec<Matrix> =
            (0..n).map(|y| canonical_span(m.dim(y), &spans[y], field)).collect();
        for y in 0..n {
            if new_bases[y].cols > bases[y].cols {
                grew = true;
            }
        }
        // Reset the span lists to the canonical bases to keep them small.
        for y in 0..n {
            spans[y] = (0..new_bases[y].cols).map(|j| new_bases[y].column(j)).collect();
        }
        bases = new_bases;
        if !grew {
            break;
        }
    }

    // Restricted coactions: solve (B_Z⊗id_C)·ρ'_{YZ} = ρ_{YZ}∘incl_Y.
    let carrier: Vec<usize> = bases.iter().map(|b| b.cols).collect();
    let mut coaction = std::collections::BTreeMap::new();
    for y in 0..n {
        for z in 0..n {
            let dc = c.dim(y, z);
            if carrier[y] == 0 || carrier[z] * dc == 0 {
                continue;
            }
            let rho = m.rho(c, y, z);
            let target = crate::matrix::mat_mul(&rho.matrix, &bases[y])?;
            let bz = ShapedMap::new(
                bases[z].clone(),
                TensorShape::new(vec![carrier[z]]),
                TensorShape::new(vec![m.dim(z)]),
            )?;
            let id_c = ShapedMap::identity(TensorShape::new(vec![dc]), field);
            let coeff = crate::tensor::kron(&bz, &id_c)?;
            let mut restricted = Matrix::zero(carrier[z] * dc, carrier[y], field);
            for col in 0..carrier[y] {
                let rhs = target.column(col);
                let sol = solve_affine(&coeff.matrix, &rhs)?.map_err(|_| {
                    Error::MembershipViolation(format!(
                        "coaction image at ({},{}) leaves the computed span",
                        c.objects[y], c.objects[z]
                    ))
                })?;
                for row in 0..restricted.rows {
                    restricted[(row, col)] = sol.particular[(row, 0)].clone();
                }
            }
            coaction.insert(
                (y, z),
                ShapedMap::new(
                    restricted,
                    TensorShape::new(vec![carrier[y]]),
                    TensorShape::new(vec![carrier[z], dc]),
                )?,
            );
        }
    }

    debug_assert!({
        let r = rank(&bases[x]);
        r == bases[x].cols
    });

    Ok(SubComodule { spans: bases, restricted: ComoduleData { carrier, coaction } })
}

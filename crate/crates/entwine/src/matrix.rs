//! Dense matrices over an exact field, row-major.

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use std::fmt;
use std::ops::{Index, IndexMut};

/// A dense `rows × cols` matrix with entries in a single exact field.
///
/// Zero-row / zero-column matrices are first-class citizens: hom-spaces in
/// path coalgebras may be 0-dimensional and every operation must degenerate
/// gracefully.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub field: FieldSpec,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize, field: FieldSpec) -> Self {
        Matrix { rows, cols, field, entries: vec![field.zero(); rows * cols] }
    }

    pub fn identity(n: usize, field: FieldSpec) -> Self {
        let mut m = Matrix::zero(n, n, field);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    /// Builds a matrix from row-major scalar entries.
    pub fn from_entries(rows: usize, cols: usize, field: FieldSpec, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                entries.len()
            )));
        }
        for e in &entries {
            if e.field() != field {
                return Err(Error::FieldMismatch(format!("entry in {} inside {field} matrix", e.field())));
            }
        }
        Ok(Matrix { rows, cols, field, entries })
    }

    /// Builds a matrix from row-major signed integers (test/catalog helper).
    pub fn from_i64(rows: usize, cols: usize, field: FieldSpec, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        Matrix {
            rows,
            cols,
            field,
            entries: entries.iter().map(|&n| field.from_i64(n)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j { self[(i, j)].is_one() } else { self[(i, j)].is_zero() }
                })
            })
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    fn check_same_field(&self, other: &Matrix) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch(format!("{} vs {}", self.field, other.field)))
        }
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "add {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, field: self.field, entries })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "sub {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.sub(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, field: self.field, entries })
    }

    pub fn scale(&self, c: &Scalar) -> Result<Matrix> {
        let entries = self.entries.iter().map(|a| a.mul(c)).collect::<Result<Vec<_>>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, field: self.field, entries })
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.cols, self.rows, self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_field(other)?;
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "hstack with {} vs {} rows",
                self.rows, other.rows
            )));
        }
        let mut out = Matrix::zero(self.rows, self.cols + other.cols, self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                out[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        Ok(out)
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_field(other)?;
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "vstack with {} vs {} cols",
                self.cols, other.cols
            )));
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(Matrix { rows: self.rows + other.rows, cols: self.cols, field: self.field, entries })
    }

    pub fn column(&self, j: usize) -> Matrix {
        let mut out = Matrix::zero(self.rows, 1, self.field);
        for i in 0..self.rows {
            out[(i, 0)] = self[(i, j)].clone();
        }
        out
    }

    /// Row-major flattening of the matrix into a single column vector
    /// (row `i`, col `j` lands at index `i·cols + j`).
    pub fn vectorize(&self) -> Matrix {
        Matrix { rows: self.rows * self.cols, cols: 1, field: self.field, entries: self.entries.clone() }
    }
}

/// Exact matrix product.
pub fn mat_mul(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    if a.field != b.field {
        return Err(Error::FieldMismatch(format!("{} vs {}", a.field, b.field)));
    }
    if a.cols != b.rows {
        return Err(Error::DimensionMismatch(format!(
            "mat_mul {}x{} by {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    let mut out = Matrix::zero(a.rows, b.cols, a.field);
    for i in 0..a.rows {
        for k in 0..a.cols {
            let aik = &a[(i, k)];
            if aik.is_zero() {
                continue;
            }
            for j in 0..b.cols {
                let bkj = &b[(k, j)];
                if bkj.is_zero() {
                    continue;
                }
                out[(i, j)] = out[(i, j)].add(&aik.mul(bkj)?)?;
            }
        }
    }
    Ok(out)
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of {}x{}", self.rows, self.cols);
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of {}x{}", self.rows, self.cols);
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

// Oracle tests for dense matrices; cases are [TRIVIAL] linear-algebra
// identities on hand-picked matrices.
#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_neutral() {
        let m = Matrix::from_i64(2, 2, FieldSpec::Rationals, &[1, 2, 3, 4]);
        let id = Matrix::identity(2, FieldSpec::Rationals);
        assert_eq!(mat_mul(&id, &m).unwrap(), m);
        assert_eq!(mat_mul(&m, &id).unwrap(), m);
    }

    #[test]
    fn one_dim_rational_product() {
        let f = FieldSpec::Rationals;
        let a = Matrix::from_entries(1, 1, f, vec![f.parse_scalar("1/2").unwrap()]).unwrap();
        let b = Matrix::from_entries(1, 1, f, vec![f.parse_scalar("2/3").unwrap()]).unwrap();
        let c = mat_mul(&a, &b).unwrap();
        assert_eq!(c[(0, 0)], f.parse_scalar("1/3").unwrap());
    }

    #[test]
    fn unipotent_squares_to_identity_mod_2() {
        let f = FieldSpec::PrimeField(2);
        let m = Matrix::from_i64(2, 2, f, &[1, 1, 0, 1]);
        let sq = mat_mul(&m, &m).unwrap();
        assert!(sq.is_identity());
    }

    #[test]
    fn empty_matrices_compose() {
        let f = FieldSpec::Rationals;
        let a = Matrix::zero(0, 3, f);
        let b = Matrix::zero(3, 2, f);
        let c = mat_mul(&a, &b).unwrap();
        assert_eq!((c.rows, c.cols), (0, 2));
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let f = FieldSpec::Rationals;
        let a = Matrix::zero(2, 3, f);
        let b = Matrix::zero(2, 2, f);
        assert!(mat_mul(&a, &b).is_err());
    }
}

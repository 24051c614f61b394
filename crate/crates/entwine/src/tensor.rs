//! Multi-factor tensor bookkeeping: Kronecker products, factor permutations,
//! partial application, duals, and the hom-as-tensor identification.
//!
//! One global convention is used everywhere: **left-factor-major flattening**.
//! The basis tensor (i, j) of U⊗V sits at index `i·dim(V) + j`, and this
//! extends to any number of factors lexicographically. The hom-space (U, W)
//! is encoded as U*⊗W (the map u_i ↦ w_j is the basis tensor u_i*⊗w_j), and
//! the currying identification (U, (V, W)) ≅ (V⊗U, W) — note the V-before-U
//! order — is realized by the explicit factor permutation
//! [`hom_curry_swap`], never absorbed silently.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::matrix::{mat_mul, Matrix};

/// An ordered list of factor dimensions. Zero-dimensional factors are legal;
/// the empty shape is the ground field K (total dimension 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorShape {
    pub factors: Vec<usize>,
}

impl TensorShape {
    pub fn new(factors: Vec<usize>) -> Self {
        TensorShape { factors }
    }

    /// The scalar shape K.
    pub fn scalar() -> Self {
        TensorShape { factors: vec![] }
    }

    pub fn total_dim(&self) -> usize {
        self.factors.iter().product()
    }

    /// Concatenation of factor lists (shape of a tensor product).
    pub fn concat(&self, other: &TensorShape) -> TensorShape {
        let mut factors = self.factors.clone();
        factors.extend(&other.factors);
        TensorShape { factors }
    }

    /// Flattens a multi-index to its left-factor-major linear index.
    pub fn flatten(&self, idx: &[usize]) -> usize {
        assert_eq!(idx.len(), self.factors.len());
        let mut lin = 0;
        for (i, &d) in idx.iter().zip(&self.factors) {
            debug_assert!(*i < d);
            lin = lin * d + i;
        }
        lin
    }

    /// Inverse of [`flatten`].
    pub fn unflatten(&self, mut lin: usize) -> Vec<usize> {
        let mut idx = vec![0; self.factors.len()];
        for k in (0..self.factors.len()).rev() {
            let d = self.factors[k];
            idx[k] = lin % d;
            lin /= d;
        }
        idx
    }
}

/// A linear map with remembered tensor-factor structure on both sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapedMap {
    pub matrix: Matrix,
    pub domain: TensorShape,
    pub codomain: TensorShape,
}

impl ShapedMap {
    pub fn new(matrix: Matrix, domain: TensorShape, codomain: TensorShape) -> Result<Self> {
        if matrix.cols != domain.total_dim() || matrix.rows != codomain.total_dim() {
            return Err(Error::ShapeMismatch(format!(
                "matrix {}x{} does not match codomain dim {} x domain dim {}",
                matrix.rows,
                matrix.cols,
                codomain.total_dim(),
                domain.total_dim()
            )));
        }
        Ok(ShapedMap { matrix, domain, codomain })
    }

    /// Identity on a (possibly multi-factor) shape.
    pub fn identity(shape: TensorShape, field: FieldSpec) -> Self {
        let n = shape.total_dim();
        ShapedMap { matrix: Matrix::identity(n, field), domain: shape.clone(), codomain: shape }
    }

    /// Zero map between shapes.
    pub fn zero(domain: TensorShape, codomain: TensorShape, field: FieldSpec) -> Self {
        let m = Matrix::zero(codomain.total_dim(), domain.total_dim(), field);
        ShapedMap { matrix: m, domain, codomain }
    }

    pub fn field(&self) -> FieldSpec {
        self.matrix.field
    }

    /// Composition `self ∘ other` (apply `other` first). Requires the total
    /// dimensions to agree; factor structure follows the outer maps.
    pub fn compose(&self, other: &ShapedMap) -> Result<ShapedMap> {
        if self.domain.total_dim() != other.codomain.total_dim() {
            return Err(Error::ShapeMismatch(format!(
                "compose: inner dims {} vs {}",
                self.domain.total_dim(),
                other.codomain.total_dim()
            )));
        }
        Ok(ShapedMap {
            matrix: mat_mul(&self.matrix, &other.matrix)?,
            domain: other.domain.clone(),
            codomain: self.codomain.clone(),
        })
    }

    pub fn add(&self, other: &ShapedMap) -> Result<ShapedMap> {
        Ok(ShapedMap {
            matrix: self.matrix.add(&other.matrix)?,
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
        })
    }

    pub fn sub(&self, other: &ShapedMap) -> Result<ShapedMap> {
        Ok(ShapedMap {
            matrix: self.matrix.sub(&other.matrix)?,
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
        })
    }

    /// Re-labels the factor structure without touching the matrix. Used when
    /// a composite's shape bookkeeping is coarser than the intended reading.
    pub fn with_shapes(&self, domain: TensorShape, codomain: TensorShape) -> Result<ShapedMap> {
        ShapedMap::new(self.matrix.clone(), domain, codomain)
    }
}

/// Kronecker product f⊗g with left-factor-major flattening; the factor
/// shapes concatenate.
pub fn kron(f: &ShapedMap, g: &ShapedMap) -> Result<ShapedMap> {
    if f.field() != g.field() {
        return Err(Error::FieldMismatch(format!("{} vs {}", f.field(), g.field())));
    }
    let dom = f.domain.concat(&g.domain);
    let cod = f.codomain.concat(&g.codomain);
    let (fr, fc) = (f.matrix.rows, f.matrix.cols);
    let (gr, gc) = (g.matrix.rows, g.matrix.cols);
    let mut m = Matrix::zero(fr * gr, fc * gc, f.field());
    for i in 0..fr {
        for j in 0..fc {
            let fij = &f.matrix[(i, j)];
            if fij.is_zero() {
                continue;
            }
            for k in 0..gr {
                for l in 0..gc {
                    let gkl = &g.matrix[(k, l)];
                    if gkl.is_zero() {
                        continue;
                    }
                    m[(i * gr + k, j * gc + l)] = fij.mul(gkl)?;
                }
            }
        }
    }
    ShapedMap::new(m, dom, cod)
}

/// Kronecker product of an arbitrary list of maps.
pub fn kron_all(maps: &[&ShapedMap]) -> Result<ShapedMap> {
    assert!(!maps.is_empty());
    let mut acc = maps[0].clone();
    for f in &maps[1..] {
        acc = kron(&acc, f)?;
    }
    Ok(acc)
}

/// The isomorphism permuting tensor factors: basis tensor (i_1, …, i_k) of
/// `shape` is sent to the position holding (i_{perm⁻¹(1)}, …) in the permuted
/// shape. `perm[s] = t` means the factor at source position `s` moves to
/// target position `t`.
pub fn permute_factors(shape: &TensorShape, perm: &[usize], field: FieldSpec) -> Result<ShapedMap> {
    let k = shape.factors.len();
    if perm.len() != k {
        return Err(Error::InvalidPermutation(format!("length {} vs {} factors", perm.len(), k)));
    }
    let mut seen = vec![false; k];
    for &t in perm {
        if t >= k || seen[t] {
            return Err(Error::InvalidPermutation(format!("{perm:?}")));
        }
        seen[t] = true;
    }
    let mut target_factors = vec![0usize; k];
    for (s, &t) in perm.iter().enumerate() {
        target_factors[t] = shape.factors[s];
    }
    let target = TensorShape::new(target_factors);
    let n = shape.total_dim();
    let mut m = Matrix::zero(target.total_dim(), n, field);
    for lin in 0..n {
        let idx = shape.unflatten(lin);
        let mut tidx = vec![0usize; k];
        for (s, &t) in perm.iter().enumerate() {
            tidx[t] = idx[s];
        }
        m[(target.flatten(&tidx), lin)] = field.one();
    }
    ShapedMap::new(m, shape.clone(), target)
}

/// `id ⊗ f ⊗ id`: applies `f` to the contiguous factor range
/// `positions = [start, start+len)` of `shape`, identity elsewhere.
pub fn apply_on_factors(f: &ShapedMap, shape: &TensorShape, start: usize, len: usize) -> Result<ShapedMap> {
    let k = shape.factors.len();
    if start + len > k {
        return Err(Error::ShapeMismatch(format!(
            "factor range {start}..{} out of {k} factors",
            start + len
        )));
    }
    let selected = TensorShape::new(shape.factors[start..start + len].to_vec());
    if selected.factors != f.domain.factors {
        return Err(Error::ShapeMismatch(format!(
            "selected factors {:?} do not match map domain {:?}",
            selected.factors, f.domain.factors
        )));
    }
    let left = TensorShape::new(shape.factors[..start].to_vec());
    let right = TensorShape::new(shape.factors[start + len..].to_vec());
    let field = f.field();
    let id_left = ShapedMap::identity(left, field);
    let id_right = ShapedMap::identity(right, field);
    kron(&kron(&id_left, f)?, &id_right)
}

/// Transpose with domain/codomain exchanged; each factor is replaced by its
/// dual of the same dimension. Dual bases are ordered like primal bases and
/// (U⊗V)* ≅ U*⊗V* factorwise, so the matrix is the plain transpose.
pub fn dual_map(f: &ShapedMap) -> ShapedMap {
    ShapedMap {
        matrix: f.matrix.transpose(),
        domain: f.codomain.clone(),
        codomain: f.domain.clone(),
    }
}

/// Shape of the hom-space (U, W) under the identification (U, W) ≅ U*⊗W.
pub fn hom_as_tensor(u_dim: usize, w_dim: usize) -> TensorShape {
    TensorShape::new(vec![u_dim, w_dim])
}

/// The explicit permutation realizing (U, (V, W)) ≅ (V⊗U, W): on encodings,
/// U*⊗V*⊗W → V*⊗U*⊗W swaps the first two factors (for a map g, the
/// transposed map ĝ satisfies ĝ(v⊗u) = g(u)(v)).
pub fn hom_curry_swap(u_dim: usize, v_dim: usize, w_dim: usize, field: FieldSpec) -> Result<ShapedMap> {
    let shape = TensorShape::new(vec![u_dim, v_dim, w_dim]);
    permute_factors(&shape, &[1, 0, 2], field)
}

/// The evaluation pairing U*⊗U → K in the fixed dual-basis convention:
/// the row vector that is 1 on u_i*⊗u_i and 0 elsewhere.
pub fn evaluation_pairing(u_dim: usize, field: FieldSpec) -> ShapedMap {
    let mut m = Matrix::zero(1, u_dim * u_dim, field);
    for i in 0..u_dim {
        m[(0, i * u_dim + i)] = field.one();
    }
    ShapedMap::new(m, TensorShape::new(vec![u_dim, u_dim]), TensorShape::scalar()).expect("shape ok")
}

/// The coevaluation K → U⊗U*: the column vector Σᵢ uᵢ⊗uᵢ* for the declared
/// basis; used to build coev_A for cointegrals.
pub fn coevaluation(u_dim: usize, field: FieldSpec) -> ShapedMap {
    let mut m = Matrix::zero(u_dim * u_dim, 1, field);
    for i in 0..u_dim {
        m[(i * u_dim + i, 0)] = field.one();
    }
    ShapedMap::new(m, TensorShape::scalar(), TensorShape::new(vec![u_dim, u_dim])).expect("shape ok")
}

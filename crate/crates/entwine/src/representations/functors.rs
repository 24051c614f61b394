//! The four canonical functors and the standard (co/contra)module
//! constructions: the regular representation H_X, the induced entwined
//! comodule P⊗H_X (Lemma 2.3), the representable contramodule H_X^U
//! (Eq. 3.3), the free functor F (Eq. 2.15), and the contramodule induction
//! T (Lemma 3.6), with their forgetful partners G and S.

use crate::error::{Error, Result};
use crate::structures::{CoalgebraData, StructureBundle};
use crate::tensor::{apply_on_factors, dual_map, kron, ShapedMap, TensorShape};
use std::collections::BTreeMap;

use super::{
    curry_swap, ComoduleData, ContramoduleData, EntwinedComoduleData, EntwinedContramoduleData,
};

/// The regular representation H_X: carrier H_X(Y) = C(Y,X), coactions
/// ρ_{YZ} = δ_{YZX}.
pub fn regular_representation(c: &CoalgebraData, x: usize) -> ComoduleData {
    let n = c.n_objects();
    let carrier: Vec<usize> = (0..n).map(|y| c.dim(y, x)).collect();
    let mut coaction = BTreeMap::new();
    for y in 0..n {
        for z in 0..n {
            if carrier[y] == 0 || carrier[z] * c.dim(y, z) == 0 {
                continue;
            }
            coaction.insert((y, z), c.delta(y, z, x));
        }
    }
    ComoduleData { carrier, coaction }
}

/// The free functor F: M ↦ M⊗A with action id⊗μ_A and coaction
/// (id⊗ψ_{XY})∘(ρ_{XY}⊗id_A) (Eq. 2.6).
pub fn functor_f(b: &StructureBundle, n: &ComoduleData) -> EntwinedComoduleData {
    let c = &b.coalgebra;
    let field = b.field;
    let da = b.dim_a();
    let nn = c.n_objects();
    let carrier: Vec<usize> = (0..nn).map(|x| n.dim(x) * da).collect();
    let mut coaction = BTreeMap::new();
    for x in 0..nn {
        for y in 0..nn {
            if carrier[x] == 0 || carrier[y] * c.dim(x, y) == 0 {
                continue;
            }
            let id_my = ShapedMap::identity(TensorShape::new(vec![n.dim(y)]), field);
            let id_a = ShapedMap::identity(TensorShape::new(vec![da]), field);
            let rho = kron(&id_my, &b.psi(x, y))
                .expect("field ok")
                .compose(&kron(&n.rho(c, x, y), &id_a).expect("field ok"))
                .expect("shape ok")
                .with_shapes(
                    TensorShape::new(vec![carrier[x]]),
                    TensorShape::new(vec![carrier[y], c.dim(x, y)]),
                )
                .expect("total dims agree");
            coaction.insert((x, y), rho);
        }
    }
    let action: Vec<ShapedMap> = (0..nn)
        .map(|x| {
            let id_m = ShapedMap::identity(TensorShape::new(vec![n.dim(x)]), field);
            kron(&id_m, &b.algebra.mul)
                .expect("field ok")
                .with_shapes(
                    TensorShape::new(vec![carrier[x], da]),
                    TensorShape::new(vec![carrier[x]]),
                )
                .expect("total dims agree")
        })
        .collect();
    EntwinedComoduleData { base: ComoduleData { carrier, coaction }, action }
}

/// The forgetful functor G on the comodule side: drops the actions.
pub fn functor_g(m: &EntwinedComoduleData) -> ComoduleData {
    m.base.clone()
}

/// The forgetful functor S on the contramodule side: drops the actions.
pub fn functor_s(m: &EntwinedContramoduleData) -> ContramoduleData {
    m.base.clone()
}

/// Validates that `(p_dim, p_action)` is a unital associative right
/// A-module structure P⊗A → P.
fn validate_right_module(b: &StructureBundle, p_dim: usize, p_action: &ShapedMap) -> Result<()> {
    let field = b.field;
    let da = b.dim_a();
    if p_action.matrix.rows != p_dim || p_action.matrix.cols != p_dim * da {
        return Err(Error::ShapeMismatch(format!(
            "right action must be {p_dim}x{}, got {}x{}",
            p_dim * da,
            p_action.matrix.rows,
            p_action.matrix.cols
        )));
    }
    let id_p = ShapedMap::identity(TensorShape::new(vec![p_dim]), field);
    let id_a = ShapedMap::identity(TensorShape::new(vec![da]), field);
    let unital = p_action.compose(&kron(&id_p, &b.algebra.unit)?)?;
    if unital.matrix != id_p.matrix {
        return Err(Error::Validation("right A-module unit law fails".into()));
    }
    let lhs = p_action.compose(&kron(p_action, &id_a)?)?;
    let rhs = p_action.compose(&kron(&id_p, &b.algebra.mul)?)?;
    if lhs.matrix != rhs.matrix {
        return Err(Error::Validation("right A-module associativity fails".into()));
    }
    Ok(())
}

/// The induced entwined comodule P⊗H_X of Lemma 2.3: carrier P⊗C(Y,X),
/// coaction id_P⊗δ_{YZX}, action (p⊗f)·b = p·b_ψ ⊗ f^ψ.
pub fn regular_comodule(
    b: &StructureBundle,
    x: usize,
    p_dim: usize,
    p_action: &ShapedMap,
) -> Result<EntwinedComoduleData> {
    validate_right_module(b, p_dim, p_action)?;
    let c = &b.coalgebra;
    let field = b.field;
    let da = b.dim_a();
    let n = c.n_objects();
    let carrier: Vec<usize> = (0..n).map(|y| p_dim * c.dim(y, x)).collect();
    let mut coaction = BTreeMap::new();
    for y in 0..n {
        for z in 0..n {
            if carrier[y] == 0 || carrier[z] * c.dim(y, z) == 0 {
                continue;
            }
            let id_p = ShapedMap::identity(TensorShape::new(vec![p_dim]), field);
            let rho = kron(&id_p, &c.delta(y, z, x))
                .expect("field ok")
                .with_shapes(
                    TensorShape::new(vec![carrier[y]]),
                    TensorShape::new(vec![carrier[z], c.dim(y, z)]),
                )
                .expect("total dims agree");
            coaction.insert((y, z), rho);
        }
    }
    let action: Vec<ShapedMap> = (0..n)
        .map(|y| {
            let dc = c.dim(y, x);
            let shape = TensorShape::new(vec![p_dim, dc, da]);
            // P⊗C(Y,X)⊗A → P⊗A⊗C(Y,X) → P⊗C(Y,X).
            let twist = apply_on_factors(&b.psi(y, x), &shape, 1, 2).expect("shape ok");
            let id_c = ShapedMap::identity(TensorShape::new(vec![dc]), field);
            let pa_action = p_action
                .with_shapes(TensorShape::new(vec![p_dim, da]), TensorShape::new(vec![p_dim]))
                .expect("total dims agree");
            kron(&pa_action, &id_c)
                .expect("field ok")
                .compose(&twist)
                .expect("shape ok")
                .with_shapes(
                    TensorShape::new(vec![carrier[y], da]),
                    TensorShape::new(vec![carrier[y]]),
                )
                .expect("total dims agree")
        })
        .collect();
    Ok(EntwinedComoduleData { base: ComoduleData { carrier, coaction }, action })
}

/// The representable contramodule H_X^U of Eq. 3.3: carrier (C(Y,X), U)
/// encoded as C(Y,X)*⊗U, contraaction (δ_{YZX}, U) after the explicit
/// currying swap.
pub fn contramodule_hxu(c: &CoalgebraData, x: usize, u_dim: usize) -> ContramoduleData {
    let n = c.n_objects();
    let field = c.field;
    let carrier: Vec<usize> = (0..n).map(|y| c.dim(y, x) * u_dim).collect();
    let mut contraaction = BTreeMap::new();
    for y in 0..n {
        for z in 0..n {
            if carrier[y] == 0 || carrier[z] * c.dim(y, z) == 0 {
                continue;
            }
            let id_u = ShapedMap::identity(TensorShape::new(vec![u_dim]), field);
            let swap = curry_swap(c.dim(y, z), c.dim(z, x), u_dim, field);
            let pi = kron(&dual_map(&c.delta(y, z, x)), &id_u)
                .expect("field ok")
                .compose(&swap)
                .expect("shape ok")
                .with_shapes(
                    TensorShape::new(vec![c.dim(y, z), carrier[z]]),
                    TensorShape::new(vec![carrier[y]]),
                )
                .expect("total dims agree");
            contraaction.insert((y, z), pi);
        }
    }
    ContramoduleData { carrier, contraaction }
}

/// The induction functor T on contramodules (Lemma 3.6):
/// T(𝔐)(X) = (A, 𝔐(X)) encoded A*⊗𝔐(X), with A-action (μ_A, 𝔐(X)) and
/// contraaction (A, π_{XY})∘(ψ_{XY}, 𝔐(Y)) (Eq. 3.13), all through explicit
/// currying swaps.
pub fn functor_t(b: &StructureBundle, n: &ContramoduleData) -> EntwinedContramoduleData {
    let c = &b.coalgebra;
    let field = b.field;
    let da = b.dim_a();
    let nn = c.n_objects();
    let carrier: Vec<usize> = (0..nn).map(|x| da * n.dim(x)).collect();
    let mut contraaction = BTreeMap::new();
    for x in 0..nn {
        for y in 0..nn {
            if carrier[x] == 0 || carrier[y] * c.dim(x, y) == 0 {
                continue;
            }
            let dc = c.dim(x, y);
            let ny = n.dim(y);
            let id_a = ShapedMap::identity(TensorShape::new(vec![da]), field);
            let id_ny = ShapedMap::identity(TensorShape::new(vec![ny]), field);
            // C(X,Y)*⊗A*⊗𝔐(Y) ≅ (A⊗C)*⊗𝔐(Y) —ψ^T→ (C⊗A)*⊗𝔐(Y)
            // ≅ A*⊗C*⊗𝔐(Y) —id⊗π→ A*⊗𝔐(X).
            let pi = kron(&id_a, &n.pi(c, x, y))
                .expect("field ok")
                .compose(&curry_swap(dc, da, ny, field))
                .expect("shape ok")
                .compose(&kron(&dual_map(&b.psi(x, y)), &id_ny).expect("field ok"))
                .expect("shape ok")
                .compose(&curry_swap(dc, da, ny, field))
                .expect("shape ok")
                .with_shapes(
                    TensorShape::new(vec![dc, carrier[y]]),
                    TensorShape::new(vec![carrier[x]]),
                )
                .expect("total dims agree");
            contraaction.insert((x, y), pi);
        }
    }
    let action: Vec<ShapedMap> = (0..nn)
        .map(|x| {
            let nx = n.dim(x);
            let id_m = ShapedMap::identity(TensorShape::new(vec![nx]), field);
            curry_swap(da, da, nx, field)
                .compose(&kron(&dual_map(&b.algebra.mul), &id_m).expect("field ok"))
                .expect("shape ok")
                .with_shapes(
                    TensorShape::new(vec![carrier[x]]),
                    TensorShape::new(vec![da, carrier[x]]),
                )
                .expect("total dims agree")
        })
        .collect();
    EntwinedContramoduleData { base: ContramoduleData { carrier, contraaction }, action }
}

/// The one-dimensional trivial comodule concentrated at object `x` exists
/// only when coactions out of `x` admit it; the generally-available small
/// comodule is H_X. This helper instead builds the trivial *contramodule*
/// H_X^K = (C(−,X), K), the `u_dim = 1` representable.
pub fn trivial_contramodule(c: &CoalgebraData, x: usize) -> ContramoduleData {
    contramodule_hxu(c, x, 1)
}

/// Dimension helper for F on carriers (used by callers building morphisms).
pub fn f_carrier(b: &StructureBundle, n: &ComoduleData) -> Vec<usize> {
    n.carrier.iter().map(|&d| d * b.dim_a()).collect()
}

/// Dimension helper for T on carriers.
pub fn t_carrier(b: &StructureBundle, n: &ContramoduleData) -> Vec<usize> {
    n.carrier.iter().map(|&d| b.dim_a() * d).collect()
}

/// Convenience: the algebra A as a right module over itself.
pub fn algebra_as_module(b: &StructureBundle) -> (usize, ShapedMap) {
    (b.dim_a(), b.algebra.mul.clone())
}

/// Convenience: the ground field as a right A-module through an algebra map
/// A → K (an augmentation); the caller supplies the augmentation row.
pub fn augmentation_module(b: &StructureBundle, aug: &ShapedMap) -> Result<(usize, ShapedMap)> {
    let field = b.field;
    if aug.matrix.rows != 1 || aug.matrix.cols != b.dim_a() {
        return Err(Error::ShapeMismatch("augmentation must be a 1xdim(A) row".into()));
    }
    let id_k = ShapedMap::identity(TensorShape::new(vec![1]), field);
    let action = kron(&id_k, aug)?
        .with_shapes(TensorShape::new(vec![1, b.dim_a()]), TensorShape::new(vec![1]))?;
    validate_right_module(b, 1, &action)?;
    Ok((1, action))
}

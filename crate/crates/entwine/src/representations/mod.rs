//! Entwined comodules and contramodules: data model, axiom checkers,
//! morphism constraints, the four canonical functors, hom-spaces,
//! adjunction transposes, and the finitary subcomodule algorithm.
//!
//! # Encoding conventions
//!
//! Comodules are stored primally: coactions ρ_{XY}: M(X) → M(Y)⊗C(X,Y) and
//! right actions M(X)⊗A → M(X) are plain matrices.
//!
//! Contramodules are stored **fully dualized**: the contraaction
//! π_{XY}: (C(X,Y), 𝔐(Y)) → 𝔐(X) becomes a matrix out of C(X,Y)*⊗𝔐(Y),
//! and the left A-action 𝔐(X) → (A, 𝔐(X)) becomes a matrix into A*⊗𝔐(X).
//! The currying identification (U, (V, W)) ≅ (V⊗U, W) is realized by the
//! explicit factor swap of the two dual slots (see [`crate::tensor`]); every
//! contramodule diagram below is compiled into such an auditable composite.

pub mod adjunction;
pub mod functors;
pub mod hom;
pub mod serial;
pub mod subcomodule;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::structures::{CoalgebraData, Report, StructureBundle, Violation};
use crate::tensor::{dual_map, kron, permute_factors, ShapedMap, TensorShape};
use std::collections::BTreeMap;

pub use adjunction::{adjunction_transpose, TransposeDirection};
pub use functors::{
    contramodule_hxu, functor_f, functor_g, functor_s, functor_t, regular_comodule,
    regular_representation, trivial_contramodule,
};
pub use hom::{check_morphism, hom_space, HomCategory};
pub use serial::{check_module, load_module, load_morphism, parse_module, save_module, save_morphism};
pub use subcomodule::{subcomodule_generated, SubComodule};

/// A C-comodule: graded carrier with coactions ρ_{XY}: M(X) → M(Y)⊗C(X,Y).
#[derive(Debug, Clone, PartialEq)]
pub struct ComoduleData {
    /// dim M(X) per object, in declared object order.
    pub carrier: Vec<usize>,
    /// ρ_{XY} keyed (x, y); entries with a zero-dimensional side may be
    /// omitted (zero maps).
    pub coaction: BTreeMap<(usize, usize), ShapedMap>,
}

impl ComoduleData {
    pub fn dim(&self, x: usize) -> usize {
        self.carrier[x]
    }

    /// ρ_{XY}, materializing omitted entries as zero maps.
    pub fn rho(&self, c: &CoalgebraData, x: usize, y: usize) -> ShapedMap {
        match self.coaction.get(&(x, y)) {
            Some(r) => r.clone(),
            None => ShapedMap::zero(
                TensorShape::new(vec![self.dim(x)]),
                TensorShape::new(vec![self.dim(y), c.dim(x, y)]),
                c.field,
            ),
        }
    }

    pub fn validate_shapes(&self, c: &CoalgebraData) -> Result<()> {
        if self.carrier.len() != c.n_objects() {
            return Err(Error::ShapeMismatch("carrier table must cover every object".into()));
        }
        for (&(x, y), r) in &self.coaction {
            let (rows, cols) = (self.dim(y) * c.dim(x, y), self.dim(x));
            if r.matrix.rows != rows || r.matrix.cols != cols {
                return Err(Error::ShapeMismatch(format!(
                    "coaction[{x},{y}] must be {rows}x{cols}, got {}x{}",
                    r.matrix.rows, r.matrix.cols
                )));
            }
        }
        Ok(())
    }
}

/// An entwined comodule: a comodule plus objectwise right A-actions
/// compatible through ψ.
#[derive(Debug, Clone, PartialEq)]
pub struct EntwinedComoduleData {
    pub base: ComoduleData,
    /// μ_X: M(X)⊗A → M(X), indexed by object.
    pub action: Vec<ShapedMap>,
}

impl EntwinedComoduleData {
    pub fn dim(&self, x: usize) -> usize {
        self.base.dim(x)
    }

    pub fn rho(&self, c: &CoalgebraData, x: usize, y: usize) -> ShapedMap {
        self.base.rho(c, x, y)
    }

    pub fn mu(&self, x: usize) -> &ShapedMap {
        &self.action[x]
    }
}

/// A C-contramodule in dualized encoding: π_{XY}: C(X,Y)*⊗𝔐(Y) → 𝔐(X).
#[derive(Debug, Clone, PartialEq)]
pub struct ContramoduleData {
    pub carrier: Vec<usize>,
    pub contraaction: BTreeMap<(usize, usize), ShapedMap>,
}

impl ContramoduleData {
    pub fn dim(&self, x: usize) -> usize {
        self.carrier[x]
    }

    /// π_{XY}, materializing omitted entries as zero maps.
    pub fn pi(&self, c: &CoalgebraData, x: usize, y: usize) -> ShapedMap {
        match self.contraaction.get(&(x, y)) {
            Some(p) => p.clone(),
            None => ShapedMap::zero(
                TensorShape::new(vec![c.dim(x, y), self.dim(y)]),
                TensorShape::new(vec![self.dim(x)]),
                c.field,
            ),
        }
    }

    pub fn validate_shapes(&self, c: &CoalgebraData) -> Result<()> {
        if self.carrier.len() != c.n_objects() {
            return Err(Error::ShapeMismatch("carrier table must cover every object".into()));
        }
        for (&(x, y), p) in &self.contraaction {
            let (rows, cols) = (self.dim(x), c.dim(x, y) * self.dim(y));
            if p.matrix.rows != rows || p.matrix.cols != cols {
                return Err(Error::ShapeMismatch(format!(
                    "contraaction[{x},{y}] must be {rows}x{cols}, got {}x{}",
                    p.matrix.rows, p.matrix.cols
                )));
            }
        }
        Ok(())
    }
}

/// An entwined contramodule: a contramodule plus dualized left A-actions
/// 𝔐(X) → A*⊗𝔐(X) compatible through ψ.
#[derive(Debug, Clone, PartialEq)]
pub struct EntwinedContramoduleData {
    pub base: ContramoduleData,
    /// μ_X: 𝔐(X) → A*⊗𝔐(X), indexed by object.
    pub action: Vec<ShapedMap>,
}

impl EntwinedContramoduleData {
    pub fn dim(&self, x: usize) -> usize {
        self.base.dim(x)
    }

    pub fn pi(&self, c: &CoalgebraData, x: usize, y: usize) -> ShapedMap {
        self.base.pi(c, x, y)
    }

    pub fn mu(&self, x: usize) -> &ShapedMap {
        &self.action[x]
    }
}

/// A morphism between graded modules: one component matrix per object.
#[derive(Debug, Clone, PartialEq)]
pub struct MorphismData {
    pub components: Vec<Matrix>,
}

impl MorphismData {
    pub fn identity(carrier: &[usize], field: crate::field::FieldSpec) -> Self {
        MorphismData { components: carrier.iter().map(|&d| Matrix::identity(d, field)).collect() }
    }

    pub fn zero(source: &[usize], target: &[usize], field: crate::field::FieldSpec) -> Self {
        MorphismData {
            components: source
                .iter()
                .zip(target)
                .map(|(&s, &t)| Matrix::zero(t, s, field))
                .collect(),
        }
    }
}

/// Any of the four module kinds, for APIs that dispatch on category.
#[derive(Debug, Clone, PartialEq)]
pub enum ModuleData {
    Comod(ComoduleData),
    EntwinedComod(EntwinedComoduleData),
    Contra(ContramoduleData),
    EntwinedContra(EntwinedContramoduleData),
}

impl ModuleData {
    pub fn carrier(&self) -> &[usize] {
        match self {
            ModuleData::Comod(m) => &m.carrier,
            ModuleData::EntwinedComod(m) => &m.base.carrier,
            ModuleData::Contra(m) => &m.carrier,
            ModuleData::EntwinedContra(m) => &m.base.carrier,
        }
    }
}

fn record(report: &mut Report, lhs: &ShapedMap, rhs: &ShapedMap, law: &str, detail: String) {
    if lhs.matrix != rhs.matrix {
        report.push(Violation { law: law.to_string(), detail });
    }
}

/// Checks the plain comodule axioms: coaction coassociativity and the
/// counit law (Eq. 2.5).
pub fn check_comodule(c: &CoalgebraData, m: &ComoduleData) -> Report {
    let mut report = Report::new();
    if let Err(e) = m.validate_shapes(c) {
        report.push(Violation { law: "comodule shape validation".into(), detail: e.to_string() });
        return report;
    }
    let n = c.n_objects();
    let field = c.field;
    // Coassociativity: (id_{M(Y)}⊗δ_{XZY})∘ρ_{XY} = (ρ_{ZY}⊗id)∘ρ_{XZ}
    // as maps M(X) → M(Y)⊗C(Z,Y)⊗C(X,Z).
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let id_my = ShapedMap::identity(TensorShape::new(vec![m.dim(y)]), field);
                let lhs = kron(&id_my, &c.delta(x, z, y))
                    .expect("field ok")
                    .compose(&m.rho(c, x, y))
                    .expect("shape ok");
                let id_cxz = ShapedMap::identity(TensorShape::new(vec![c.dim(x, z)]), field);
                let rhs = kron(&m.rho(c, z, y), &id_cxz)
                    .expect("field ok")
                    .compose(&m.rho(c, x, z))
                    .expect("shape ok");
                record(
                    &mut report,
                    &lhs,
                    &rhs,
                    "comodule coassociativity (Eq. 2.5)",
                    format!("objects (X,Z,Y) = ({},{},{})", c.objects[x], c.objects[z], c.objects[y]),
                );
            }
        }
    }
    // Counit law: (id⊗ε_X)∘ρ_{XX} = id_{M(X)}.
    for x in 0..n {
        let id_mx = ShapedMap::identity(TensorShape::new(vec![m.dim(x)]), field);
        let lhs = kron(&id_mx, c.counit(x)).expect("field ok").compose(&m.rho(c, x, x)).expect("shape ok");
        record(
            &mut report,
            &lhs,
            &id_mx,
            "comodule counit law (Eq. 2.5)",
            format!("object X = {}", c.objects[x]),
        );
    }
    report
}

/// Checks the full entwined-comodule axioms: comodule laws, unital
/// associative right actions, and the compatibility square (Eq. 2.8).
pub fn check_entwined_comodule(b: &StructureBundle, m: &EntwinedComoduleData) -> Report {
    let c = &b.coalgebra;
    let field = b.field;
    let mut report = check_comodule(c, &m.base);
    let n = c.n_objects();
    if m.action.len() != n {
        report.push(Violation {
            law: "entwined comodule shape validation".into(),
            detail: "action table must cover every object".into(),
        });
        return report;
    }
    let da = b.dim_a();
    let id_a = ShapedMap::identity(TensorShape::new(vec![da]), field);
    for x in 0..n {
        let mu = m.mu(x);
        let dm = m.dim(x);
        if mu.matrix.rows != dm || mu.matrix.cols != dm * da {
            report.push(Violation {
                law: "entwined comodule shape validation".into(),
                detail: format!("action at {} must be {dm}x{}", c.objects[x], dm * da),
            });
            continue;
        }
        let id_m = ShapedMap::identity(TensorShape::new(vec![dm]), field);
        // Unitality: μ_X∘(id⊗u_A) = id.
        let unital = mu.compose(&kron(&id_m, &b.algebra.unit).expect("field ok")).expect("shape ok");
        record(
            &mut report,
            &unital,
            &id_m,
            "A-action unit law",
            format!("object X = {}", c.objects[x]),
        );
        // Associativity: μ_X∘(μ_X⊗id_A) = μ_X∘(id⊗μ_A).
        let lhs = mu.compose(&kron(mu, &id_a).expect("field ok")).expect("shape ok");
        let rhs = mu.compose(&kron(&id_m, &b.algebra.mul).expect("field ok")).expect("shape ok");
        record(
            &mut report,
            &lhs,
            &rhs,
            "A-action associativity",
            format!("object X = {}", c.objects[x]),
        );
    }
    // Compatibility (Eq. 2.8): ρ_{XY}∘μ_X = (μ_Y⊗id)∘(id⊗ψ_{XY})∘(ρ_{XY}⊗id_A).
    for x in 0..n {
        for y in 0..n {
            let rho = m.rho(c, x, y);
            let lhs = rho.compose(m.mu(x)).expect("shape ok");
            let id_my = ShapedMap::identity(TensorShape::new(vec![m.dim(y)]), field);
            let id_cxy = ShapedMap::identity(TensorShape::new(vec![c.dim(x, y)]), field);
            let rhs = kron(m.mu(y), &id_cxy)
                .expect("field ok")
                .compose(&kron(&id_my, &b.psi(x, y)).expect("field ok"))
                .expect("shape ok")
                .compose(&kron(&rho, &id_a).expect("field ok"))
                .expect("shape ok");
            record(
                &mut report,
                &lhs,
                &rhs,
                "entwined compatibility (Eq. 2.8)",
                format!("objects (X,Y) = ({},{})", c.objects[x], c.objects[y]),
            );
        }
    }
    report
}

/// The factor swap realizing (U, (V, W)) ≅ (V⊗U, W) on dual encodings:
/// U*⊗V*⊗W → V*⊗U*⊗W.
pub(crate) fn curry_swap(
    u_dual_dim: usize,
    v_dual_dim: usize,
    w_dim: usize,
    field: crate::field::FieldSpec,
) -> ShapedMap {
    permute_factors(
        &TensorShape::new(vec![u_dual_dim, v_dual_dim, w_dim]),
        &[1, 0, 2],
        field,
    )
    .expect("valid permutation")
}

/// Checks the plain contramodule axioms (diagram 3.1): contraassociativity
/// and the counit triangle, in the dualized encoding.
pub fn check_contramodule(c: &CoalgebraData, m: &ContramoduleData) -> Report {
    let mut report = Report::new();
    if let Err(e) = m.validate_shapes(c) {
        report.push(Violation { law: "contramodule shape validation".into(), detail: e.to_string() });
        return report;
    }
    let n = c.n_objects();
    let field = c.field;
    // Contraassociativity: π_{XZ}∘(δ_{XYZ}, 𝔐(Z)) = π_{XY}∘(C(X,Y), π_{YZ})
    // on (C(Y,Z)⊗C(X,Y), 𝔐(Z)) ≅ C(Y,Z)*⊗C(X,Y)*⊗𝔐(Z).
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let id_mz = ShapedMap::identity(TensorShape::new(vec![m.dim(z)]), field);
                // Route 1: precompose with δ_{XYZ} (a dual map on the first
                // two factors jointly), then π_{XZ}.
                let lhs = m
                    .pi(c, x, z)
                    .compose(&kron(&dual_map(&c.delta(x, y, z)), &id_mz).expect("field ok"))
                    .expect("shape ok");
                // Route 2: curry — swap the dual slots, apply π_{YZ} inside,
                // then π_{XY}.
                let swap = curry_swap(c.dim(y, z), c.dim(x, y), m.dim(z), field);
                let id_cxy = ShapedMap::identity(TensorShape::new(vec![c.dim(x, y)]), field);
                let rhs = m
                    .pi(c, x, y)
                    .compose(&kron(&id_cxy, &m.pi(c, y, z)).expect("field ok"))
                    .expect("shape ok")
                    .compose(&swap)
                    .expect("shape ok");
                record(
                    &mut report,
                    &lhs,
                    &rhs,
                    "contramodule contraassociativity (diagram 3.1)",
                    format!("objects (X,Y,Z) = ({},{},{})", c.objects[x], c.objects[y], c.objects[z]),
                );
            }
        }
    }
    // Counit triangle: π_{XX}∘(ε_X, 𝔐(X)) = id.
    for x in 0..n {
        let id_m = ShapedMap::identity(TensorShape::new(vec![m.dim(x)]), field);
        let lhs = m
            .pi(c, x, x)
            .compose(&kron(&dual_map(c.counit(x)), &id_m).expect("field ok"))
            .expect("shape ok");
        record(
            &mut report,
            &lhs,
            &id_m,
            "contramodule counit law (diagram 3.1)",
            format!("object X = {}", c.objects[x]),
        );
    }
    report
}

/// Checks the entwined-contramodule axioms: contramodule laws, dualized
/// left A-module laws, and the compatibility diagram (Eq. 3.2).
pub fn check_entwined_contramodule(b: &StructureBundle, m: &EntwinedContramoduleData) -> Report {
    let c = &b.coalgebra;
    let field = b.field;
    let mut report = check_contramodule(c, &m.base);
    let n = c.n_objects();
    if m.action.len() != n {
        report.push(Violation {
            law: "entwined contramodule shape validation".into(),
            detail: "action table must cover every object".into(),
        });
        return report;
    }
    let da = b.dim_a();
    for x in 0..n {
        let mu = m.mu(x);
        let dm = m.dim(x);
        if mu.matrix.rows != da * dm || mu.matrix.cols != dm {
            report.push(Violation {
                law: "entwined contramodule shape validation".into(),
                detail: format!("action at {} must be {}x{dm}", c.objects[x], da * dm),
            });
            continue;
        }
        let id_m = ShapedMap::identity(TensorShape::new(vec![dm]), field);
        // Unitality: (u_A, 𝔐(X))∘μ_X = id.
        let unital = kron(&dual_map(&b.algebra.unit), &id_m)
            .expect("field ok")
            .compose(mu)
            .expect("shape ok");
        record(
            &mut report,
            &unital,
            &id_m,
            "A-action unit law (dual form)",
            format!("object X = {}", c.objects[x]),
        );
        // Associativity: (μ_A, 𝔐(X))∘μ_X = (A, μ_X)∘μ_X under the currying
        // identification (A, (A, 𝔐(X))) ≅ (A⊗A, 𝔐(X)).
        let lhs = kron(&dual_map(&b.algebra.mul), &id_m).expect("field ok").compose(mu).expect("shape ok");
        let id_ad = ShapedMap::identity(TensorShape::new(vec![da]), field);
        let swap = curry_swap(da, da, dm, field);
        let rhs = swap
            .compose(&kron(&id_ad, mu).expect("field ok"))
            .expect("shape ok")
            .compose(mu)
            .expect("shape ok");
        record(
            &mut report,
            &lhs,
            &rhs,
            "A-action associativity (dual form)",
            format!("object X = {}", c.objects[x]),
        );
    }
    // Compatibility (Eq. 3.2):
    // μ_X∘π_{XY} = (A, π_{XY})∘(ψ_{XY}, 𝔐(Y))∘(C(X,Y), μ_Y),
    // with both currying identifications made explicit factor swaps.
    for x in 0..n {
        for y in 0..n {
            let dc = c.dim(x, y);
            let dmy = m.dim(y);
            let id_c = ShapedMap::identity(TensorShape::new(vec![dc]), field);
            let id_a = ShapedMap::identity(TensorShape::new(vec![da]), field);
            let id_my = ShapedMap::identity(TensorShape::new(vec![dmy]), field);
            let lhs = m.mu(x).compose(&m.pi(c, x, y)).expect("shape ok");
            let step1 = kron(&id_c, m.mu(y)).expect("field ok"); // C*⊗𝔐(Y) → C*⊗A*⊗𝔐(Y)
            let swap1 = curry_swap(dc, da, dmy, field); // → A*⊗C*⊗𝔐(Y) = (A⊗C)*⊗𝔐(Y)
            let step2 = kron(&dual_map(&b.psi(x, y)), &id_my).expect("field ok"); // → (C⊗A)*⊗𝔐(Y)
            let swap2 = curry_swap(dc, da, dmy, field); // → A*⊗C*⊗𝔐(Y) = (A, (C, 𝔐(Y)))
            let step3 = kron(&id_a, &m.pi(c, x, y)).expect("field ok"); // → A*⊗𝔐(X)
            let rhs = step3
                .compose(&swap2)
                .expect("shape ok")
                .compose(&step2)
                .expect("shape ok")
                .compose(&swap1)
                .expect("shape ok")
                .compose(&step1)
                .expect("shape ok");
            record(
                &mut report,
                &lhs,
                &rhs,
                "entwined compatibility (Eq. 3.2)",
                format!("objects (X,Y) = ({},{})", c.objects[x], c.objects[y]),
            );
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog_build, catalog_list};
    use crate::matrix::mat_mul;
    use crate::representations::functors::algebra_as_module;

    fn all_bundles() -> Vec<StructureBundle> {
        catalog_list()
            .iter()
            .map(|(name, _)| catalog_build(name, None).expect("catalog entries are valid"))
            .collect()
    }

    #[test]
    fn regular_representation_is_a_comodule_everywhere() {
        for b in all_bundles() {
            for x in 0..b.n_objects() {
                let h = regular_representation(&b.coalgebra, x);
                let report = check_comodule(&b.coalgebra, &h);
                assert!(report.is_empty(), "H_{x} fails: {report:?}");
            }
        }
    }

    #[test]
    fn functor_f_lands_in_entwined_comodules() {
        for b in all_bundles() {
            for x in 0..b.n_objects() {
                let fm = functor_f(&b, &regular_representation(&b.coalgebra, x));
                let report = check_entwined_comodule(&b, &fm);
                assert!(report.is_empty(), "F(H_{x}) fails: {report:?}");
                // G forgets back to a genuine comodule.
                let report = check_comodule(&b.coalgebra, &functor_g(&fm));
                assert!(report.is_empty());
            }
        }
    }

    #[test]
    fn regular_comodule_with_p_equal_a_is_entwined() {
        // [DERIVED] Lemma 2.3 with P = A as a right module over itself.
        for b in all_bundles() {
            let (p_dim, p_action) = algebra_as_module(&b);
            for x in 0..b.n_objects() {
                let m = regular_comodule(&b, x, p_dim, &p_action).expect("A is a module");
                let report = check_entwined_comodule(&b, &m);
                assert!(report.is_empty(), "A⊗H_{x} fails: {report:?}");
            }
        }
    }

    #[test]
    fn regular_comodule_rejects_non_modules() {
        let b = catalog_build("group-c2-q", None).unwrap();
        // A zero "action" is not unital.
        let bad = ShapedMap::zero(
            TensorShape::new(vec![1, 2]),
            TensorShape::new(vec![1]),
            b.field,
        );
        assert!(regular_comodule(&b, 0, 1, &bad).is_err());
    }

    #[test]
    fn representable_contramodule_satisfies_axioms() {
        for b in all_bundles() {
            for x in 0..b.n_objects() {
                for u_dim in [1usize, 2] {
                    let h = contramodule_hxu(&b.coalgebra, x, u_dim);
                    let report = check_contramodule(&b.coalgebra, &h);
                    assert!(report.is_empty(), "H_{x}^U (u={u_dim}) fails: {report:?}");
                }
            }
        }
    }

    #[test]
    fn functor_t_lands_in_entwined_contramodules() {
        for b in all_bundles() {
            for x in 0..b.n_objects() {
                let h = contramodule_hxu(&b.coalgebra, x, 2);
                let tm = functor_t(&b, &h);
                let report = check_entwined_contramodule(&b, &tm);
                assert!(report.is_empty(), "T(H_{x}^U) fails: {report:?}");
                let report = check_contramodule(&b.coalgebra, &functor_s(&tm));
                assert!(report.is_empty());
            }
        }
    }

    #[test]
    fn hom_into_regular_representation_has_carrier_dimension() {
        // [DERIVED] Eq. 2.7: Hom(M, H_X) ≅ M(X)*, so the hom-space
        // dimension equals dim M(X).
        for name in ["matrix-coalg-2obj", "path-a2", "group-c2-q"] {
            let b = catalog_build(name, None).unwrap();
            for x in 0..b.n_objects() {
                let hx = ModuleData::Comod(regular_representation(&b.coalgebra, x));
                for y in 0..b.n_objects() {
                    let m = regular_representation(&b.coalgebra, y);
                    let dim_mx = m.dim(x);
                    let basis =
                        hom_space(&b, HomCategory::Comod, &ModuleData::Comod(m), &hx).unwrap();
                    assert_eq!(basis.len(), dim_mx, "{name}: Hom(H_{y}, H_{x})");
                }
            }
        }
    }

    #[test]
    fn hom_out_of_representable_contramodule_matches_oracle() {
        // [DERIVED] Prop. 3.3: Hom(H_X^U, 𝔐) ≅ Hom_K(U, 𝔐(X)), dimension
        // u·dim 𝔐(X).
        for name in ["matrix-coalg-2obj", "path-a2", "group-c2-f2"] {
            let b = catalog_build(name, None).unwrap();
            for x in 0..b.n_objects() {
                for u_dim in [1usize, 2] {
                    let hxu = contramodule_hxu(&b.coalgebra, x, u_dim);
                    for y in 0..b.n_objects() {
                        let target = contramodule_hxu(&b.coalgebra, y, 1);
                        let expect = u_dim * target.dim(x);
                        let basis = hom_space(
                            &b,
                            HomCategory::Contra,
                            &ModuleData::Contra(hxu.clone()),
                            &ModuleData::Contra(target),
                        )
                        .unwrap();
                        assert_eq!(basis.len(), expect, "{name}: Hom(H_{x}^U, H_{y}^K)");
                    }
                }
            }
        }
    }

    #[test]
    fn hom_space_members_pass_check_morphism() {
        let b = catalog_build("group-c2-q", None).unwrap();
        let h = regular_representation(&b.coalgebra, 0);
        let fm = functor_f(&b, &h);
        let src = ModuleData::EntwinedComod(fm.clone());
        let basis = hom_space(&b, HomCategory::EntwinedComod, &src, &src).unwrap();
        assert!(!basis.is_empty());
        for phi in &basis {
            let report = check_morphism(&b, HomCategory::EntwinedComod, &src, &src, phi);
            assert!(report.is_empty());
        }
    }

    #[test]
    fn check_morphism_detects_perturbation() {
        let b = catalog_build("nonsep-F", None).unwrap();
        let h = regular_representation(&b.coalgebra, 0); // carrier [2]
        let m = ModuleData::Comod(h.clone());
        let id = MorphismData::identity(&h.carrier, b.field);
        assert!(check_morphism(&b, HomCategory::Comod, &m, &m, &id).is_empty());
        // End(H_X) ≅ C(X,X)* is spanned by id and one nilpotent, so the
        // fully off-diagonal perturbation cannot be a morphism.
        let mut bad = id.clone();
        bad.components[0][(0, 1)] = b.field.one();
        bad.components[0][(1, 0)] = b.field.one();
        assert!(!check_morphism(&b, HomCategory::Comod, &m, &m, &bad).is_empty());
    }

    #[test]
    fn adjunction_f_g_round_trip_and_dimension_match() {
        for name in ["group-c2-q", "path-a2", "nonsep-F"] {
            let b = catalog_build(name, None).unwrap();
            let m = regular_representation(&b.coalgebra, 0);
            let n = functor_f(&b, &regular_representation(&b.coalgebra, 0));
            let md = ModuleData::Comod(m.clone());
            let nd = ModuleData::EntwinedComod(n.clone());
            let fm = ModuleData::EntwinedComod(functor_f(&b, &m));
            let gn = ModuleData::Comod(functor_g(&n));
            let left = hom_space(&b, HomCategory::EntwinedComod, &fm, &nd).unwrap();
            let right = hom_space(&b, HomCategory::Comod, &md, &gn).unwrap();
            assert_eq!(left.len(), right.len(), "{name}: adjunction dimensions");
            for eta in &left {
                let zeta =
                    adjunction_transpose(&b, TransposeDirection::LeftToRight, &md, &nd, eta)
                        .unwrap();
                assert!(check_morphism(&b, HomCategory::Comod, &md, &gn, &zeta).is_empty());
                let back =
                    adjunction_transpose(&b, TransposeDirection::RightToLeft, &md, &nd, &zeta)
                        .unwrap();
                assert_eq!(back, *eta, "{name}: F⊣G round trip");
            }
            for zeta in &right {
                let eta =
                    adjunction_transpose(&b, TransposeDirection::RightToLeft, &md, &nd, zeta)
                        .unwrap();
                assert!(check_morphism(&b, HomCategory::EntwinedComod, &fm, &nd, &eta).is_empty());
                let back =
                    adjunction_transpose(&b, TransposeDirection::LeftToRight, &md, &nd, &eta)
                        .unwrap();
                assert_eq!(back, *zeta, "{name}: G⊣F round trip");
            }
        }
    }

    #[test]
    fn adjunction_s_t_round_trip_and_dimension_match() {
        for name in ["group-c2-q", "path-a2", "nonsep-F"] {
            let b = catalog_build(name, None).unwrap();
            let m = functor_t(&b, &contramodule_hxu(&b.coalgebra, 0, 1));
            let n = contramodule_hxu(&b.coalgebra, 0, 2);
            let md = ModuleData::EntwinedContra(m.clone());
            let nd = ModuleData::Contra(n.clone());
            let sm = ModuleData::Contra(functor_s(&m));
            let tn = ModuleData::EntwinedContra(functor_t(&b, &n));
            let left = hom_space(&b, HomCategory::Contra, &sm, &nd).unwrap();
            let right = hom_space(&b, HomCategory::EntwinedContra, &md, &tn).unwrap();
            assert_eq!(left.len(), right.len(), "{name}: adjunction dimensions");
            for eta in &left {
                let zeta =
                    adjunction_transpose(&b, TransposeDirection::LeftToRight, &md, &nd, eta)
                        .unwrap();
                assert!(
                    check_morphism(&b, HomCategory::EntwinedContra, &md, &tn, &zeta).is_empty()
                );
                let back =
                    adjunction_transpose(&b, TransposeDirection::RightToLeft, &md, &nd, &zeta)
                        .unwrap();
                assert_eq!(back, *eta, "{name}: S⊣T round trip");
            }
        }
    }

    #[test]
    fn adjunction_rejects_non_morphisms() {
        let b = catalog_build("group-c2-q", None).unwrap();
        let m = regular_representation(&b.coalgebra, 0);
        let n = functor_f(&b, &m);
        let md = ModuleData::Comod(m.clone());
        let nd = ModuleData::EntwinedComod(n.clone());
        // A random-shaped family that is not a morphism F(M) → N.
        let mut bogus = MorphismData::zero(
            &functor_f(&b, &m).base.carrier,
            &n.base.carrier,
            b.field,
        );
        bogus.components[0][(0, 0)] = b.field.one();
        let r = adjunction_transpose(&b, TransposeDirection::LeftToRight, &md, &nd, &bogus);
        assert!(matches!(r, Err(Error::InvalidMorphism(_))));
    }

    #[test]
    fn subcomodule_of_regular_representation_path_a2() {
        let b = catalog_build("path-a2", None).unwrap();
        let h = regular_representation(&b.coalgebra, 1); // H_Y, carrier [1, 1]
        // Generator in H_Y(X) = C(X,Y): closure must pull in nothing else
        // at X but the coaction lands in M(Y)⊗C(X,Y) forcing span at Y too.
        let gen = Matrix::from_i64(1, 1, b.field, &[1]);
        let sub = subcomodule_generated(&b.coalgebra, &h, 0, &gen).unwrap();
        assert_eq!(sub.restricted.carrier, vec![1, 1]);
        assert!(check_comodule(&b.coalgebra, &sub.restricted).is_empty());
        // Generator at Y only spans the Y-component.
        let sub = subcomodule_generated(&b.coalgebra, &h, 1, &gen).unwrap();
        assert_eq!(sub.restricted.carrier, vec![0, 1]);
        assert!(check_comodule(&b.coalgebra, &sub.restricted).is_empty());
        // The inclusion is a comodule morphism.
        let incl = MorphismData { components: sub.spans.clone() };
        let report = check_morphism(
            &b,
            HomCategory::Comod,
            &ModuleData::Comod(sub.restricted.clone()),
            &ModuleData::Comod(h.clone()),
            &incl,
        );
        assert!(report.is_empty());
    }

    #[test]
    fn subcomodule_spans_contain_generator() {
        let b = catalog_build("nonsep-F", None).unwrap();
        let h = regular_representation(&b.coalgebra, 0); // carrier [2]
        let gen = Matrix::from_i64(2, 1, b.field, &[0, 1]);
        let sub = subcomodule_generated(&b.coalgebra, &h, 0, &gen).unwrap();
        // c generates all of C under δ(c) = c⊗e + e⊗c.
        assert_eq!(sub.restricted.carrier, vec![2]);
        // The generator lies in the span: solve spans·c = gen.
        let sol = crate::linalg::solve_affine(&sub.spans[0], &gen).unwrap();
        assert!(sol.is_ok());
        let sol = sol.unwrap();
        assert_eq!(mat_mul(&sub.spans[0], &sol.particular).unwrap(), gen);
    }
}

//! Morphism constraints and exact hom-space computation in the four module
//! categories. A morphism is a family of componentwise linear maps; the
//! defining squares are affine-linear in the components, so hom-spaces are
//! nullspaces of one stacked system built by [`crate::solve::probe`].

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::solve::probe;
use crate::structures::{Report, StructureBundle, Violation};
use crate::tensor::{kron, ShapedMap, TensorShape};

use super::{ModuleData, MorphismData};

/// The four module categories a hom-space can be taken in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomCategory {
    /// Plain C-comodules.
    Comod,
    /// Entwined comodules (C-comodules with compatible A-actions).
    EntwinedComod,
    /// Plain C-contramodules.
    Contra,
    /// Entwined contramodules.
    EntwinedContra,
}

impl HomCategory {
    pub fn parse(s: &str) -> Result<HomCategory> {
        match s {
            "comod" => Ok(HomCategory::Comod),
            "entwined-comod" => Ok(HomCategory::EntwinedComod),
            "contra" => Ok(HomCategory::Contra),
            "entwined-contra" => Ok(HomCategory::EntwinedContra),
            other => Err(Error::Validation(format!(
                "unknown category {other:?}; expected comod, entwined-comod, contra, or entwined-contra"
            ))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            HomCategory::Comod => "comod",
            HomCategory::EntwinedComod => "entwined-comod",
            HomCategory::Contra => "contra",
            HomCategory::EntwinedContra => "entwined-contra",
        }
    }

    /// Whether the category's coalgebra structure is the comodule side.
    pub fn is_comodule_side(&self) -> bool {
        matches!(self, HomCategory::Comod | HomCategory::EntwinedComod)
    }

    /// Whether the category includes the A-action constraint.
    pub fn is_entwined(&self) -> bool {
        matches!(self, HomCategory::EntwinedComod | HomCategory::EntwinedContra)
    }
}

impl std::fmt::Display for HomCategory {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl ModuleData {
    /// The category a module datum naturally lives in.
    pub fn category(&self) -> HomCategory {
        match self {
            ModuleData::Comod(_) => HomCategory::Comod,
            ModuleData::EntwinedComod(_) => HomCategory::EntwinedComod,
            ModuleData::Contra(_) => HomCategory::Contra,
            ModuleData::EntwinedContra(_) => HomCategory::EntwinedContra,
        }
    }
}

/// One labelled residual of a morphism constraint.
struct ResidualEntry {
    law: String,
    detail: String,
    residual: Matrix,
}

/// Stacks all defining residuals for a candidate component family.
/// Components are `target.dim(x) × source.dim(x)` matrices in object order.
fn residuals(
    b: &StructureBundle,
    category: HomCategory,
    source: &ModuleData,
    target: &ModuleData,
    components: &[Matrix],
) -> Result<Vec<ResidualEntry>> {
    if source.category() != category || target.category() != category {
        return Err(Error::Validation(format!(
            "hom in category {category} requires both modules in that category (got {} and {})",
            source.category(),
            target.category()
        )));
    }
    let c = &b.coalgebra;
    let field = b.field;
    let n = c.n_objects();
    if components.len() != n {
        return Err(Error::InvalidMorphism("one component per object required".into()));
    }
    let sdims = source.carrier();
    let tdims = target.carrier();
    let mut phi = Vec::with_capacity(n);
    for x in 0..n {
        let m = &components[x];
        if m.rows != tdims[x] || m.cols != sdims[x] {
            return Err(Error::InvalidMorphism(format!(
                "component at {} must be {}x{}, got {}x{}",
                c.objects[x], tdims[x], sdims[x], m.rows, m.cols
            )));
        }
        phi.push(
            ShapedMap::new(
                m.clone(),
                TensorShape::new(vec![sdims[x]]),
                TensorShape::new(vec![tdims[x]]),
            )
            .expect("dims just checked"),
        );
    }
    let mut out = Vec::new();
    let da = b.dim_a();
    let id_a = ShapedMap::identity(TensorShape::new(vec![da]), field);
    match category {
        HomCategory::Comod | HomCategory::EntwinedComod => {
            let (sm, tm) = match (source, target) {
                (ModuleData::Comod(s), ModuleData::Comod(t)) => (s.clone(), t.clone()),
                (ModuleData::EntwinedComod(s), ModuleData::EntwinedComod(t)) => {
                    (s.base.clone(), t.base.clone())
                }
                _ => unreachable!("category agreement checked above"),
            };
            for x in 0..n {
                for y in 0..n {
                    let id_c = ShapedMap::identity(TensorShape::new(vec![c.dim(x, y)]), field);
                    let lhs = kron(&phi[y], &id_c)?.compose(&sm.rho(c, x, y))?;
                    let rhs = tm.rho(c, x, y).compose(&phi[x])?;
                    out.push(ResidualEntry {
                        law: "comodule morphism square".into(),
                        detail: format!("objects (X,Y) = ({},{})", c.objects[x], c.objects[y]),
                        residual: lhs.sub(&rhs)?.matrix,
                    });
                }
            }
            if let (ModuleData::EntwinedComod(s), ModuleData::EntwinedComod(t)) = (source, target) {
                for x in 0..n {
                    let lhs = phi[x].compose(s.mu(x))?;
                    let rhs = t.mu(x).compose(&kron(&phi[x], &id_a)?)?;
                    out.push(ResidualEntry {
                        law: "A-linearity".into(),
                        detail: format!("object X = {}", c.objects[x]),
                        residual: lhs.sub(&rhs)?.matrix,
                    });
                }
            }
        }
        HomCategory::Contra | HomCategory::EntwinedContra => {
            let (sm, tm) = match (source, target) {
                (ModuleData::Contra(s), ModuleData::Contra(t)) => (s.clone(), t.clone()),
                (ModuleData::EntwinedContra(s), ModuleData::EntwinedContra(t)) => {
                    (s.base.clone(), t.base.clone())
                }
                _ => unreachable!("category agreement checked above"),
            };
            for x in 0..n {
                for y in 0..n {
                    let id_cd = ShapedMap::identity(TensorShape::new(vec![c.dim(x, y)]), field);
                    let lhs = phi[x].compose(&sm.pi(c, x, y))?;
                    let rhs = tm.pi(c, x, y).compose(&kron(&id_cd, &phi[y])?)?;
                    out.push(ResidualEntry {
                        law: "contramodule morphism square".into(),
                        detail: format!("objects (X,Y) = ({},{})", c.objects[x], c.objects[y]),
                        residual: lhs.sub(&rhs)?.matrix,
                    });
                }
            }
            if let (ModuleData::EntwinedContra(s), ModuleData::EntwinedContra(t)) = (source, target)
            {
                let id_ad = &id_a;
                for x in 0..n {
                    let lhs = kron(id_ad, &phi[x])?.compose(s.mu(x))?;
                    let rhs = t.mu(x).compose(&phi[x])?;
                    out.push(ResidualEntry {
                        law: "A-linearity (dual form)".into(),
                        detail: format!("object X = {}", c.objects[x]),
                        residual: lhs.sub(&rhs)?.matrix,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Verifies that `phi` is a morphism `source → target` in `category`;
/// every failed square is reported with its object labels. Shape or
/// category mismatches surface as a single validation violation.
pub fn check_morphism(
    b: &StructureBundle,
    category: HomCategory,
    source: &ModuleData,
    target: &ModuleData,
    phi: &MorphismData,
) -> Report {
    let mut report = Report::new();
    match residuals(b, category, source, target, &phi.components) {
        Ok(entries) => {
            for e in entries {
                if !e.residual.is_zero() {
                    report.push(Violation { law: e.law, detail: e.detail });
                }
            }
        }
        Err(err) => report.push(Violation {
            law: "morphism shape validation".into(),
            detail: err.to_string(),
        }),
    }
    report
}

/// A basis of the hom-space Hom(source, target) in `category`, as canonical
/// morphism families (RREF nullspace of the stacked constraint system).
pub fn hom_space(
    b: &StructureBundle,
    category: HomCategory,
    source: &ModuleData,
    target: &ModuleData,
) -> Result<Vec<MorphismData>> {
    let sdims = source.carrier();
    let tdims = target.carrier();
    let dims: Vec<(usize, usize)> = tdims.iter().zip(sdims).map(|(&t, &s)| (t, s)).collect();
    // Validate category agreement and shapes once up front so probing cannot
    // fail mid-way.
    let zeros: Vec<Matrix> =
        dims.iter().map(|&(r, cc)| Matrix::zero(r, cc, b.field)).collect();
    residuals(b, category, source, target, &zeros)?;
    let p = probe(b.field, &dims, |family| {
        Ok(residuals(b, category, source, target, family)?
            .into_iter()
            .map(|e| e.residual)
            .collect())
    })?;
    Ok(p
        .solve_homogeneous()
        .into_iter()
        .map(|components| MorphismData { components })
        .collect())
}

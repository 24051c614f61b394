//! Data model and axiom verification for algebras, multi-object coalgebras,
//! and entwining structures.
//!
//! A coalgebra with several objects assigns a hom-space C(X,Y) to each
//! ordered pair of objects, with cocomposition
//! δ_{XYZ}: C(X,Z) → C(Y,Z)⊗C(X,Y) and counits ε_X: C(X,X) → K. An
//! entwining ψ_{XY}: C(X,Y)⊗A → A⊗C(X,Y) ties it to an algebra A through
//! the four axioms of Eq. 2.4. All checkers verify the axioms as exact
//! matrix identities and report *every* violation, labeled by the equation
//! that failed.

pub mod serial;
#[cfg(test)]
mod tests;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::tensor::{apply_on_factors, kron, permute_factors, ShapedMap, TensorShape};
use std::collections::BTreeMap;

/// A finite-dimensional associative unital algebra given by structure maps.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraData {
    pub dim: usize,
    /// μ_A: A⊗A → A.
    pub mul: ShapedMap,
    /// u_A: K → A.
    pub unit: ShapedMap,
    pub field: FieldSpec,
}

impl AlgebraData {
    pub fn new(dim: usize, mul: ShapedMap, unit: ShapedMap, field: FieldSpec) -> Result<Self> {
        if mul.matrix.rows != dim || mul.matrix.cols != dim * dim {
            return Err(Error::ShapeMismatch(format!(
                "mul must be {dim}x{}, got {}x{}",
                dim * dim,
                mul.matrix.rows,
                mul.matrix.cols
            )));
        }
        if unit.matrix.rows != dim || unit.matrix.cols != 1 {
            return Err(Error::ShapeMismatch(format!(
                "unit must be {dim}x1, got {}x{}",
                unit.matrix.rows, unit.matrix.cols
            )));
        }
        Ok(AlgebraData { dim, mul, unit, field })
    }

    /// The ground field K as a 1-dimensional algebra.
    pub fn ground_field(field: FieldSpec) -> Self {
        let one = crate::matrix::Matrix::identity(1, field);
        AlgebraData {
            dim: 1,
            mul: ShapedMap::new(one.clone(), TensorShape::new(vec![1, 1]), TensorShape::new(vec![1]))
                .expect("shape ok"),
            unit: ShapedMap::new(one, TensorShape::scalar(), TensorShape::new(vec![1])).expect("shape ok"),
            field,
        }
    }
}

/// A coalgebra with several objects.
#[derive(Debug, Clone, PartialEq)]
pub struct CoalgebraData {
    pub field: FieldSpec,
    pub objects: Vec<String>,
    /// `hom_dim[x][y]` = dim C(X,Y) where morphisms point X → Y.
    pub hom_dim: Vec<Vec<usize>>,
    /// δ_{XYZ}: C(X,Z) → C(Y,Z)⊗C(X,Y), keyed (x, y, z). Entries whose
    /// source or target dimension is zero may be omitted (zero maps).
    pub delta: BTreeMap<(usize, usize, usize), ShapedMap>,
    /// ε_X: C(X,X) → K, indexed by object.
    pub counit: Vec<ShapedMap>,
}

impl CoalgebraData {
    pub fn n_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn dim(&self, x: usize, y: usize) -> usize {
        self.hom_dim[x][y]
    }

    pub fn object_index(&self, name: &str) -> Result<usize> {
        self.objects
            .iter()
            .position(|o| o == name)
            .ok_or_else(|| Error::Validation(format!("unknown object {name:?}")))
    }

    /// δ_{XYZ}, materializing the zero map when the table omits the entry.
    pub fn delta(&self, x: usize, y: usize, z: usize) -> ShapedMap {
        match self.delta.get(&(x, y, z)) {
            Some(d) => d.clone(),
            None => ShapedMap::zero(
                TensorShape::new(vec![self.dim(x, z)]),
                TensorShape::new(vec![self.dim(y, z), self.dim(x, y)]),
                self.field,
            ),
        }
    }

    pub fn counit(&self, x: usize) -> &ShapedMap {
        &self.counit[x]
    }

    /// Structural (shape-level) validation, run before any axiom check.
    pub fn validate_shapes(&self) -> Result<()> {
        let n = self.n_objects();
        if self.objects.iter().any(|o| o.is_empty()) {
            return Err(Error::Validation("object names must be non-empty".into()));
        }
        {
            let mut sorted = self.objects.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != n {
                return Err(Error::Validation("object names must be unique".into()));
            }
        }
        if self.hom_dim.len() != n || self.hom_dim.iter().any(|r| r.len() != n) {
            return Err(Error::ShapeMismatch("hom_dim table must be n x n".into()));
        }
        for x in 0..n {
            // ε is defined on C(X,X) only; a zero-dimensional diagonal hom
            // makes the counit laws unsatisfiable, so reject it outright.
            if self.dim(x, x) == 0 {
                return Err(Error::Validation(format!(
                    "dim C({0},{0}) = 0 for object {1:?}; diagonal hom-spaces must be nonzero",
                    x, self.objects[x]
                )));
            }
        }
        if self.counit.len() != n {
            return Err(Error::ShapeMismatch("counit table must cover every object".into()));
        }
        for x in 0..n {
            let e = &self.counit[x];
            if e.matrix.rows != 1 || e.matrix.cols != self.dim(x, x) {
                return Err(Error::ShapeMismatch(format!(
                    "counit at {:?} must be 1x{}, got {}x{}",
                    self.objects[x],
                    self.dim(x, x),
                    e.matrix.rows,
                    e.matrix.cols
                )));
            }
        }
        for (&(x, y, z), d) in &self.delta {
            if x >= n || y >= n || z >= n {
                return Err(Error::Validation(format!("delta key ({x},{y},{z}) out of range")));
            }
            let (rows, cols) = (self.dim(y, z) * self.dim(x, y), self.dim(x, z));
            if d.matrix.rows != rows || d.matrix.cols != cols {
                return Err(Error::ShapeMismatch(format!(
                    "delta[{x},{y},{z}] must be {rows}x{cols}, got {}x{}",
                    d.matrix.rows, d.matrix.cols
                )));
            }
        }
        Ok(())
    }
}

/// The family ψ_{XY}: C(X,Y)⊗A → A⊗C(X,Y).
#[derive(Debug, Clone, PartialEq)]
pub struct EntwiningData {
    pub psi: BTreeMap<(usize, usize), ShapedMap>,
}

impl EntwiningData {
    /// ψ_{XY}, materializing the zero map on zero-dimensional hom-spaces.
    pub fn psi(&self, c: &CoalgebraData, a: &AlgebraData, x: usize, y: usize) -> ShapedMap {
        match self.psi.get(&(x, y)) {
            Some(p) => p.clone(),
            None => ShapedMap::zero(
                TensorShape::new(vec![c.dim(x, y), a.dim]),
                TensorShape::new(vec![a.dim, c.dim(x, y)]),
                c.field,
            ),
        }
    }
}

/// The full triple (C, A, ψ).
#[derive(Debug, Clone, PartialEq)]
pub struct StructureBundle {
    pub field: FieldSpec,
    pub coalgebra: CoalgebraData,
    pub algebra: AlgebraData,
    pub entwining: EntwiningData,
}

impl StructureBundle {
    pub fn n_objects(&self) -> usize {
        self.coalgebra.n_objects()
    }

    pub fn dim_c(&self, x: usize, y: usize) -> usize {
        self.coalgebra.dim(x, y)
    }

    pub fn dim_a(&self) -> usize {
        self.algebra.dim
    }

    pub fn delta(&self, x: usize, y: usize, z: usize) -> ShapedMap {
        self.coalgebra.delta(x, y, z)
    }

    pub fn counit(&self, x: usize) -> &ShapedMap {
        self.coalgebra.counit(x)
    }

    pub fn psi(&self, x: usize, y: usize) -> ShapedMap {
        self.entwining.psi(&self.coalgebra, &self.algebra, x, y)
    }

    /// Shape-level validation of all three components together.
    pub fn validate_shapes(&self) -> Result<()> {
        self.field.validate()?;
        self.coalgebra.validate_shapes()?;
        if self.coalgebra.field != self.field || self.algebra.field != self.field {
            return Err(Error::FieldMismatch("bundle components disagree on the field".into()));
        }
        let n = self.n_objects();
        for x in 0..n {
            for y in 0..n {
                let present = self.entwining.psi.contains_key(&(x, y));
                let needed = self.dim_c(x, y) > 0;
                if present != needed {
                    return Err(Error::Validation(format!(
                        "entwining table must cover exactly the hom-spaces of positive dimension; pair ({:?},{:?}) is {}",
                        self.coalgebra.objects[x],
                        self.coalgebra.objects[y],
                        if present { "extraneous" } else { "missing" }
                    )));
                }
                if present {
                    let p = &self.entwining.psi[&(x, y)];
                    let d = self.dim_c(x, y) * self.dim_a();
                    if p.matrix.rows != d || p.matrix.cols != d {
                        return Err(Error::ShapeMismatch(format!(
                            "psi[{x},{y}] must be {d}x{d}, got {}x{}",
                            p.matrix.rows, p.matrix.cols
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Runs every structural axiom check; empty report means valid.
    pub fn check_all(&self) -> Report {
        let mut report = check_algebra(&self.algebra);
        report.extend(check_coalgebra(&self.coalgebra));
        report.extend(check_entwining(self));
        report
    }
}

/// One violated identity, labeled with the axiom that failed and the object
/// tuple it failed on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub law: String,
    pub detail: String,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.law, self.detail)
    }
}

/// A list of violations; empty means the checked structure is valid.
pub type Report = Vec<Violation>;

fn record(report: &mut Report, lhs: &ShapedMap, rhs: &ShapedMap, law: &str, detail: String) {
    if lhs.matrix != rhs.matrix {
        report.push(Violation { law: law.to_string(), detail });
    }
}

/// Checks associativity and the two-sided unit law of μ_A, u_A.
pub fn check_algebra(a: &AlgebraData) -> Report {
    let mut report = Report::new();
    let field = a.field;
    let d = a.dim;
    let id_a = ShapedMap::identity(TensorShape::new(vec![d]), field);
    let aaa = TensorShape::new(vec![d, d, d]);
    // μ∘(μ⊗id) = μ∘(id⊗μ): A⊗A⊗A → A.
    let mul_left = a
        .mul
        .compose(&apply_on_factors(&a.mul, &aaa, 0, 2).expect("shape ok"))
        .expect("shape ok");
    let mul_right = a
        .mul
        .compose(&apply_on_factors(&a.mul, &aaa, 1, 2).expect("shape ok"))
        .expect("shape ok");
    record(&mut report, &mul_left, &mul_right, "algebra associativity", "μ∘(μ⊗id) ≠ μ∘(id⊗μ)".into());
    // μ∘(u⊗id) = id = μ∘(id⊗u): A → A.
    let left_unit = a.mul.compose(&kron(&a.unit, &id_a).expect("field ok")).expect("shape ok");
    record(&mut report, &left_unit, &id_a, "algebra left unit law", "μ∘(u⊗id) ≠ id".into());
    let right_unit = a.mul.compose(&kron(&id_a, &a.unit).expect("field ok")).expect("shape ok");
    record(&mut report, &right_unit, &id_a, "algebra right unit law", "μ∘(id⊗u) ≠ id".into());
    report
}

/// Checks every coassociativity square (Eq. 2.2) and counit triangle of the
/// multi-object coalgebra.
pub fn check_coalgebra(c: &CoalgebraData) -> Report {
    let mut report = Report::new();
    if let Err(e) = c.validate_shapes() {
        report.push(Violation { law: "coalgebra shape validation".into(), detail: e.to_string() });
        return report;
    }
    let n = c.n_objects();
    let field = c.field;
    // Coassociativity (Eq. 2.2): (δ_{YWZ}⊗id)∘δ_{XYZ} = (id⊗δ_{XYW})∘δ_{XWZ}
    // as maps C(X,Z) → C(W,Z)⊗C(Y,W)⊗C(X,Y).
    for x in 0..n {
        for y in 0..n {
            for w in 0..n {
                for z in 0..n {
                    let d_xyz = c.delta(x, y, z);
                    let d_ywz = c.delta(y, w, z);
                    let id_xy = ShapedMap::identity(TensorShape::new(vec![c.dim(x, y)]), field);
                    let lhs = kron(&d_ywz, &id_xy).expect("field ok").compose(&d_xyz).expect("shape ok");
                    let d_xwz = c.delta(x, w, z);
                    let d_xyw = c.delta(x, y, w);
                    let id_wz = ShapedMap::identity(TensorShape::new(vec![c.dim(w, z)]), field);
                    let rhs = kron(&id_wz, &d_xyw).expect("field ok").compose(&d_xwz).expect("shape ok");
                    record(
                        &mut report,
                        &lhs,
                        &rhs,
                        "coassociativity (Eq. 2.2)",
                        format!(
                            "objects (X,Y,W,Z) = ({},{},{},{})",
                            c.objects[x], c.objects[y], c.objects[w], c.objects[z]
                        ),
                    );
                }
            }
        }
    }
    // Counit triangles: (ε_Y⊗id)∘δ_{XYY} = id_{C(X,Y)} = (id⊗ε_X)∘δ_{XXY}.
    for x in 0..n {
        for y in 0..n {
            let id_xy = ShapedMap::identity(TensorShape::new(vec![c.dim(x, y)]), field);
            let lhs = kron(c.counit(y), &id_xy).expect("field ok").compose(&c.delta(x, y, y)).expect("shape ok");
            record(
                &mut report,
                &lhs,
                &id_xy,
                "counit law (left)",
                format!("(ε_Y⊗id)∘δ_XYY ≠ id at (X,Y) = ({},{})", c.objects[x], c.objects[y]),
            );
            let rhs = kron(&id_xy, c.counit(x)).expect("field ok").compose(&c.delta(x, x, y)).expect("shape ok");
            record(
                &mut report,
                &rhs,
                &id_xy,
                "counit law (right)",
                format!("(id⊗ε_X)∘δ_XXY ≠ id at (X,Y) = ({},{})", c.objects[x], c.objects[y]),
            );
        }
    }
    report
}

/// Checks the four entwining axioms (Eq. 2.4) for every relevant object
/// tuple.
pub fn check_entwining(b: &StructureBundle) -> Report {
    let mut report = Report::new();
    if let Err(e) = b.validate_shapes() {
        report.push(Violation { law: "bundle shape validation".into(), detail: e.to_string() });
        return report;
    }
    let n = b.n_objects();
    let da = b.dim_a();
    let field = b.field;
    let id_a = ShapedMap::identity(TensorShape::new(vec![da]), field);
    // Axiom 1 (comultiplication compatibility): for all X, Y, Z,
    // (id_A⊗δ_{XYZ})∘ψ_{XZ} = (ψ_{YZ}⊗id)∘(id⊗ψ_{XY})∘(δ_{XYZ}⊗id_A)
    // as maps C(X,Z)⊗A → A⊗C(Y,Z)⊗C(X,Y).
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let delta = b.delta(x, y, z);
                let lhs = kron(&id_a, &delta).expect("field ok").compose(&b.psi(x, z)).expect("shape ok");
                let id_yz = ShapedMap::identity(TensorShape::new(vec![b.dim_c(y, z)]), field);
                let id_xy = ShapedMap::identity(TensorShape::new(vec![b.dim_c(x, y)]), field);
                let rhs = kron(&b.psi(y, z), &id_xy)
                    .expect("field ok")
                    .compose(&kron(&id_yz, &b.psi(x, y)).expect("field ok"))
                    .expect("shape ok")
                    .compose(&kron(&delta, &id_a).expect("field ok"))
                    .expect("shape ok");
                record(
                    &mut report,
                    &lhs,
                    &rhs,
                    "entwining axiom: Eq. 2.4 comultiplication compatibility",
                    format!(
                        "objects (X,Y,Z) = ({},{},{})",
                        b.coalgebra.objects[x], b.coalgebra.objects[y], b.coalgebra.objects[z]
                    ),
                );
            }
        }
    }
    for x in 0..n {
        for z in 0..n {
            let psi = b.psi(x, z);
            let dc = b.dim_c(x, z);
            let id_c = ShapedMap::identity(TensorShape::new(vec![dc]), field);
            // Axiom 2 (multiplication compatibility):
            // ψ∘(id⊗μ_A) = (μ_A⊗id)∘(id_A⊗ψ)∘(ψ⊗id_A): C(X,Z)⊗A⊗A → A⊗C(X,Z).
            let lhs = psi.compose(&kron(&id_c, &b.algebra.mul).expect("field ok")).expect("shape ok");
            let rhs = kron(&b.algebra.mul, &id_c)
                .expect("field ok")
                .compose(&kron(&id_a, &psi).expect("field ok"))
                .expect("shape ok")
                .compose(&kron(&psi, &id_a).expect("field ok"))
                .expect("shape ok");
            record(
                &mut report,
                &lhs,
                &rhs,
                "entwining axiom: Eq. 2.4 multiplication compatibility",
                format!("objects (X,Z) = ({},{})", b.coalgebra.objects[x], b.coalgebra.objects[z]),
            );
            // Axiom 3 (unit condition): ψ∘(id⊗u_A) = u_A⊗id: C(X,Z) → A⊗C(X,Z).
            let lhs = psi.compose(&kron(&id_c, &b.algebra.unit).expect("field ok")).expect("shape ok");
            let rhs = kron(&b.algebra.unit, &id_c).expect("field ok");
            record(
                &mut report,
                &lhs,
                &rhs,
                "entwining axiom: Eq. 2.4 unit condition",
                format!("objects (X,Z) = ({},{})", b.coalgebra.objects[x], b.coalgebra.objects[z]),
            );
        }
    }
    // Axiom 4 (counit condition), diagonal only:
    // (id_A⊗ε_Z)∘ψ_{ZZ} = ε_Z⊗id_A: C(Z,Z)⊗A → A.
    for z in 0..n {
        let lhs = kron(&id_a, b.counit(z)).expect("field ok").compose(&b.psi(z, z)).expect("shape ok");
        let rhs = kron(b.counit(z), &id_a).expect("field ok");
        record(
            &mut report,
            &lhs,
            &rhs,
            "entwining axiom: Eq. 2.4 counit condition",
            format!("object Z = {}", b.coalgebra.objects[z]),
        );
    }
    report
}

/// Builds the flip entwining ψ_{XY} = swap: C(X,Y)⊗A → A⊗C(X,Y), which
/// satisfies the entwining axioms for every valid (C, A).
pub fn flip_entwining(c: &CoalgebraData, a: &AlgebraData) -> EntwiningData {
    let n = c.n_objects();
    let mut psi = BTreeMap::new();
    for x in 0..n {
        for y in 0..n {
            let dc = c.dim(x, y);
            if dc == 0 {
                continue;
            }
            let shape = TensorShape::new(vec![dc, a.dim]);
            let swap = permute_factors(&shape, &[1, 0], c.field).expect("valid permutation");
            psi.insert((x, y), swap);
        }
    }
    EntwiningData { psi }
}

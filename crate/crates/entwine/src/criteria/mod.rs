//! Decision procedures for separability, Frobenius, and Maschke-type
//! criteria of an entwining structure (C, A, ψ), with verifiable
//! certificates.
//!
//! The two certificate spaces are
//!
//! * V₁ — families σ = (σ_X: C(X,X)⊗A → K) satisfying the bimodule-map
//!   condition Eq. 4.3; normalized members (Eq. 4.21) witness separability
//!   of the forgetful functor F (entwined comodules → comodules).
//! * W₁ — families λ = (λ^X: C(X,X) → A⊗A) satisfying the centrality
//!   conditions Eqs. 4.25–4.26; normalized members (Eq. 4.48) witness
//!   separability of the induction functor G.
//!
//! A Frobenius certificate is a pair (σ, λ) with σ ∈ V₁, λ ∈ W₁ coupled by
//! the triangle equations Eqs. 6.10–6.11. A cointegral (Def. 7.1) drives
//! the Maschke-type averaging operators.
//!
//! All procedures reduce to exact affine solves via [`crate::solve::probe`],
//! so a Yes always comes with a re-verified certificate and a No with a
//! rank witness or an exhausted-enumeration record.

pub mod averaging;
#[cfg(test)]
mod tests;
pub mod cointegral;
pub mod frobenius;
pub mod natural;
pub mod separability;
pub mod serial;
pub mod spaces;

pub use averaging::{average_morphism_comod, average_morphism_contra, maschke_split};
pub use cointegral::{check_cointegral, find_cointegral};
pub use frobenius::{decide_frobenius, verify_frobenius_pair, FrobeniusConfig};
pub use natural::{kappa_comod, kappa_contra, tau_comod, tau_contra};
pub use separability::{decide_sep_f, decide_sep_g};
pub use serial::{certificate_from_json, certificate_to_json, decision_to_human, decision_to_json};
pub use spaces::{
    check_lambda_membership, check_lambda_normalized, check_sigma_membership,
    check_sigma_normalized, v1_basis, w1_basis,
};

use crate::error::{Error, Result};
use crate::linalg::RankWitness;
use crate::matrix::Matrix;
use crate::structures::StructureBundle;
use crate::tensor::{ShapedMap, TensorShape};

/// A σ-family: one functional σ_X: C(X,X)⊗A → K per object, stored as a
/// 1×(dim C(X,X)·dim A) row in the fixed flattening.
#[derive(Debug, Clone, PartialEq)]
pub struct SigmaElement {
    pub sigma: Vec<ShapedMap>,
}

impl SigmaElement {
    /// Wraps raw per-object rows, validating shapes against the bundle.
    pub fn from_matrices(b: &StructureBundle, rows: Vec<Matrix>) -> Result<SigmaElement> {
        let n = b.n_objects();
        if rows.len() != n {
            return Err(Error::Validation(format!(
                "σ needs one component per object ({n}), got {}",
                rows.len()
            )));
        }
        let mut sigma = Vec::with_capacity(n);
        for (x, m) in rows.into_iter().enumerate() {
            let dom = TensorShape::new(vec![b.dim_c(x, x), b.dim_a()]);
            sigma.push(ShapedMap::new(m, dom, TensorShape::scalar()).map_err(|e| {
                Error::Validation(format!(
                    "σ component at {}: {e}",
                    b.coalgebra.objects[x]
                ))
            })?);
        }
        Ok(SigmaElement { sigma })
    }

    /// The per-object shapes (rows, cols) of the unknown matrices.
    pub fn unknown_dims(b: &StructureBundle) -> Vec<(usize, usize)> {
        (0..b.n_objects()).map(|x| (1, b.dim_c(x, x) * b.dim_a())).collect()
    }

    pub fn matrices(&self) -> Vec<Matrix> {
        self.sigma.iter().map(|s| s.matrix.clone()).collect()
    }
}

/// A λ-family: one map λ^X: C(X,X) → A⊗A per object, stored as a
/// (dim A)²×(dim C(X,X)) matrix in the fixed flattening.
#[derive(Debug, Clone, PartialEq)]
pub struct LambdaElement {
    pub lambda: Vec<ShapedMap>,
}

impl LambdaElement {
    pub fn from_matrices(b: &StructureBundle, mats: Vec<Matrix>) -> Result<LambdaElement> {
        let n = b.n_objects();
        if mats.len() != n {
            return Err(Error::Validation(format!(
                "λ needs one component per object ({n}), got {}",
                mats.len()
            )));
        }
        let da = b.dim_a();
        let mut lambda = Vec::with_capacity(n);
        for (x, m) in mats.into_iter().enumerate() {
            let dom = TensorShape::new(vec![b.dim_c(x, x)]);
            let cod = TensorShape::new(vec![da, da]);
            lambda.push(ShapedMap::new(m, dom, cod).map_err(|e| {
                Error::Validation(format!(
                    "λ component at {}: {e}",
                    b.coalgebra.objects[x]
                ))
            })?);
        }
        Ok(LambdaElement { lambda })
    }

    pub fn unknown_dims(b: &StructureBundle) -> Vec<(usize, usize)> {
        let da = b.dim_a();
        (0..b.n_objects()).map(|x| (da * da, b.dim_c(x, x))).collect()
    }

    pub fn matrices(&self) -> Vec<Matrix> {
        self.lambda.iter().map(|s| s.matrix.clone()).collect()
    }
}

/// A cointegral family γ = (γ_X: A*⊗C(X,X) → A) per object (Def. 7.1),
/// stored as a (dim A)×(dim A·dim C(X,X)) matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CointegralData {
    pub gamma: Vec<ShapedMap>,
}

impl CointegralData {
    pub fn from_matrices(b: &StructureBundle, mats: Vec<Matrix>) -> Result<CointegralData> {
        let n = b.n_objects();
        if mats.len() != n {
            return Err(Error::Validation(format!(
                "γ needs one component per object ({n}), got {}",
                mats.len()
            )));
        }
        let da = b.dim_a();
        let mut gamma = Vec::with_capacity(n);
        for (x, m) in mats.into_iter().enumerate() {
            let dom = TensorShape::new(vec![da, b.dim_c(x, x)]);
            let cod = TensorShape::new(vec![da]);
            gamma.push(ShapedMap::new(m, dom, cod).map_err(|e| {
                Error::Validation(format!(
                    "γ component at {}: {e}",
                    b.coalgebra.objects[x]
                ))
            })?);
        }
        Ok(CointegralData { gamma })
    }

    pub fn unknown_dims(b: &StructureBundle) -> Vec<(usize, usize)> {
        let da = b.dim_a();
        (0..b.n_objects()).map(|x| (da, da * b.dim_c(x, x))).collect()
    }

    pub fn matrices(&self) -> Vec<Matrix> {
        self.gamma.iter().map(|s| s.matrix.clone()).collect()
    }
}

/// The three-valued outcome of a decision procedure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Yes,
    No,
    Unknown,
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Outcome::Yes => "Yes",
            Outcome::No => "No",
            Outcome::Unknown => "Unknown",
        })
    }
}

/// A re-verified certificate attached to a Yes decision.
#[derive(Debug, Clone, PartialEq)]
pub enum Certificate {
    Sigma(SigmaElement),
    Lambda(LambdaElement),
    Pair { sigma: SigmaElement, lambda: LambdaElement },
    Cointegral(CointegralData),
}

/// The result of a decision procedure. A Yes carries a certificate that has
/// been re-verified against the defining equations after solving; a No
/// carries either an infeasibility rank witness or (for Frobenius over a
/// finite field) an exhausted-enumeration record in `detail`.
#[derive(Debug, Clone, PartialEq)]
pub struct Decision {
    pub outcome: Outcome,
    pub certificate: Option<Certificate>,
    pub witness: Option<RankWitness>,
    pub detail: String,
}

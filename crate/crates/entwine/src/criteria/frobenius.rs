//! The Frobenius decision procedure (Theorem 6.9 / Eqs. 6.10–6.11) and the
//! full certificate verifier, including the four composite identities on
//! catalog test objects.
//!
//! The coupled system in (σ, λ) is bilinear, so it is not solved in one
//! shot. Instead, for every candidate λ ∈ W₁ the remaining system
//! {Eq. 4.3 ∧ Eq. 6.10 ∧ Eq. 6.11} is affine in σ and solved exactly.
//! Candidates come from the sep-G certificate, the W₁ basis, and — over a
//! finite field — exhaustive enumeration of W₁ up to a budget; over ℚ,
//! small-height integer combinations up to a height bound. A No is only
//! returned when the enumeration provably covered all of W₁; otherwise the
//! outcome degrades to Unknown.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::matrix::{mat_mul, Matrix};
use crate::representations::{
    functor_f, functor_g, functor_s, functor_t, regular_representation, trivial_contramodule,
};
use crate::solve::probe;
use crate::structures::{Report, StructureBundle, Violation};
use crate::tensor::{kron, ShapedMap, TensorShape};

use super::natural::{kappa_comod, kappa_contra, tau_comod, tau_contra};
use super::separability::decide_sep_g;
use super::spaces::{
    check_lambda_membership, check_sigma_membership, shaped_sigma, sigma_membership_residuals,
    w1_basis, ResidualEntry,
};
use super::{Certificate, Decision, LambdaElement, Outcome, SigmaElement};

/// Search parameters for the λ-enumeration.
#[derive(Debug, Clone, Copy)]
pub struct FrobeniusConfig {
    /// Maximum number of enumerated λ candidates (exhaustive enumeration of
    /// W₁ over 𝔽_p is only attempted when p^dim W₁ fits this budget).
    pub budget: u64,
    /// Over ℚ: integer combinations of the W₁ basis with coefficients of
    /// absolute value at most this height.
    pub height: i64,
}

impl Default for FrobeniusConfig {
    fn default() -> Self {
        FrobeniusConfig { budget: 1_000_000, height: 3 }
    }
}

fn id_on(dim: usize, b: &StructureBundle) -> ShapedMap {
    ShapedMap::identity(TensorShape::new(vec![dim]), b.field)
}

/// The two Frobenius triangle residuals (Eqs. 6.10–6.11), one pair per
/// object, both against u_A∘ε_X: C(X,X) → A.
fn triangle_residuals(
    b: &StructureBundle,
    sigma: &[ShapedMap],
    lambda: &[ShapedMap],
) -> Result<Vec<ResidualEntry>> {
    let da = b.dim_a();
    let id_a = id_on(da, b);
    let mut out = Vec::new();
    for x in 0..b.n_objects() {
        let id_c = id_on(b.dim_c(x, x), b);
        let detail = format!("object X = {}", b.coalgebra.objects[x]);
        let seed = kron(&id_c, &lambda[x])?.compose(&b.delta(x, x, x))?;
        let rhs = b.algebra.unit.compose(b.counit(x))?;
        // Eq. 6.10: (σ_X⊗A)∘(C(X,X)⊗λ^X)∘δ_{XXX} = u_A∘ε_X.
        let lhs10 = kron(&sigma[x], &id_a)?.compose(&seed)?;
        out.push(ResidualEntry {
            law: "Eq. 6.10".into(),
            detail: detail.clone(),
            residual: lhs10.sub(&rhs)?.matrix,
        });
        // Eq. 6.11: (A⊗σ_X)∘(ψ_{XX}⊗A)∘(C(X,X)⊗λ^X)∘δ_{XXX} = u_A∘ε_X.
        let lhs11 = kron(&id_a, &sigma[x])?
            .compose(&kron(&b.psi(x, x), &id_a)?)?
            .compose(&seed)?;
        out.push(ResidualEntry {
            law: "Eq. 6.11".into(),
            detail,
            residual: lhs11.sub(&rhs)?.matrix,
        });
    }
    Ok(out)
}

/// For a fixed λ, solves the affine σ-system {Eq. 4.3 ∧ Eq. 6.10 ∧
/// Eq. 6.11}; returns the canonical particular σ if feasible.
fn solve_sigma_for_lambda(
    b: &StructureBundle,
    lambda: &[ShapedMap],
) -> Result<Option<SigmaElement>> {
    let dims = SigmaElement::unknown_dims(b);
    let p = probe(b.field, &dims, |family| {
        let sigma = shaped_sigma(b, family)?;
        let mut res: Vec<Matrix> =
            sigma_membership_residuals(b, &sigma)?.into_iter().map(|e| e.residual).collect();
        res.extend(triangle_residuals(b, &sigma, lambda)?.into_iter().map(|e| e.residual));
        Ok(res)
    })?;
    match p.solve()? {
        Ok(sol) => Ok(Some(SigmaElement::from_matrices(b, sol.particular)?)),
        Err(_) => Ok(None),
    }
}

/// Full verification of a claimed Frobenius pair. Membership of σ in V₁
/// (Eq. 4.3) and of λ in W₁ (Eqs. 4.25–4.26) is a precondition: a failure
/// there is an [`Error::MembershipViolation`] naming the failed equation.
/// The returned report lists every violated triangle equation
/// (Eqs. 6.10–6.11) and every failed composite identity (Eqs. 6.2cr,
/// 6.3cr, 6.2cr7, 6.3cr7) on the catalog test objects H_X, F(H_X), H_X^K,
/// and T(H_X^K) across all objects X.
pub fn verify_frobenius_pair(
    b: &StructureBundle,
    sigma: &SigmaElement,
    lambda: &LambdaElement,
) -> Result<Report> {
    let mem = check_sigma_membership(b, sigma)?;
    if let Some(v) = mem.first() {
        return Err(Error::MembershipViolation(format!("σ ∉ V₁: fails {v}")));
    }
    let mem = check_lambda_membership(b, lambda)?;
    if let Some(v) = mem.first() {
        return Err(Error::MembershipViolation(format!("λ ∉ W₁: fails {v}")));
    }

    let mut report = Report::new();
    for e in triangle_residuals(b, &sigma.sigma, &lambda.lambda)? {
        if !e.residual.is_zero() {
            report.push(Violation { law: e.law, detail: e.detail });
        }
    }
    composite_identity_violations(b, sigma, lambda, &mut report)?;
    Ok(report)
}

/// Checks the four composite identities on the catalog test objects; pushes
/// one violation per failed component.
fn composite_identity_violations(
    b: &StructureBundle,
    sigma: &SigmaElement,
    lambda: &LambdaElement,
    report: &mut Report,
) -> Result<()> {
    let c = &b.coalgebra;
    let nobj = b.n_objects();
    let da = b.dim_a();
    let id_a = id_on(da, b);
    let check = |law: &str, x: usize, y: usize, prod: Matrix, report: &mut Report| {
        if !prod.is_identity() {
            report.push(Violation {
                law: format!("composite identity ({law})"),
                detail: format!(
                    "test object at X = {}, component Y = {}",
                    c.objects[x], c.objects[y]
                ),
            });
        }
    };
    for x in 0..nobj {
        // Comodule side: N = H_X plain, M = F(N) entwined.
        let n_plain = regular_representation(c, x);
        let m_ent = functor_f(b, &n_plain);
        let tau_n = tau_comod(b, sigma, &n_plain)?;
        let kappa_m = kappa_comod(b, lambda, &m_ent)?;
        let tau_gm = tau_comod(b, sigma, &functor_g(&m_ent))?;
        for y in 0..nobj {
            // Eq. 6.2cr7: F(τ(N))∘κ_{F(N)} = id_{F(N)}.
            let t = ShapedMap::new(
                tau_n.components[y].clone(),
                TensorShape::new(vec![n_plain.dim(y), da]),
                TensorShape::new(vec![n_plain.dim(y)]),
            )?;
            let f_tau = kron(&t, &id_a)?;
            check(
                "Eq. 6.2cr7",
                x,
                y,
                mat_mul(&f_tau.matrix, &kappa_m.components[y])?,
                report,
            );
            // Eq. 6.3cr7: τ(G(M))∘G(κ(M)) = id_{G(M)}.
            check(
                "Eq. 6.3cr7",
                x,
                y,
                mat_mul(&tau_gm.components[y], &kappa_m.components[y])?,
                report,
            );
        }
        // Contramodule side: 𝔑 = H_X^K plain, 𝔐 = T(𝔑) entwined.
        let n_contra = trivial_contramodule(c, x);
        let m_contra = functor_t(b, &n_contra);
        let tau_n = tau_contra(b, sigma, &n_contra)?;
        let kappa_m = kappa_contra(b, lambda, &m_contra)?;
        let tau_sm = tau_contra(b, sigma, &functor_s(&m_contra))?;
        for y in 0..nobj {
            // Eq. 6.3cr: κ(T(𝔑))∘T(τ(𝔑)) = id_{T(𝔑)}.
            let t = ShapedMap::new(
                tau_n.components[y].clone(),
                TensorShape::new(vec![n_contra.dim(y)]),
                TensorShape::new(vec![da, n_contra.dim(y)]),
            )?;
            let t_tau = kron(&id_a, &t)?;
            check(
                "Eq. 6.3cr",
                x,
                y,
                mat_mul(&kappa_m.components[y], &t_tau.matrix)?,
                report,
            );
            // Eq. 6.2cr: S(κ(𝔐))∘τ(S(𝔐)) = id_{S(𝔐)}.
            check(
                "Eq. 6.2cr",
                x,
                y,
                mat_mul(&kappa_m.components[y], &tau_sm.components[y])?,
                report,
            );
        }
    }
    Ok(())
}

/// A deterministic, indexable list of λ candidates: first the sep-G
/// certificate (if any) and the W₁ basis vectors, then span enumeration.
struct Candidates<'a> {
    b: &'a StructureBundle,
    basis: &'a [LambdaElement],
    priority: Vec<Vec<Matrix>>,
    enum_count: usize,
    digits: Vec<i64>,
    /// Whether the enumerated range provably covers all of W₁.
    exhaustive: bool,
}

impl<'a> Candidates<'a> {
    fn new(
        b: &'a StructureBundle,
        basis: &'a [LambdaElement],
        cfg: &FrobeniusConfig,
        sep_g_cert: Option<Vec<Matrix>>,
    ) -> Candidates<'a> {
        let k = basis.len() as u32;
        let (digits, enum_count, exhaustive) = match b.field {
            FieldSpec::PrimeField(p) => {
                let digits: Vec<i64> = (0..p as i64).collect();
                match (p as u64).checked_pow(k) {
                    Some(total) if total <= cfg.budget => (digits, total as usize, true),
                    _ => (digits, 0, false),
                }
            }
            FieldSpec::Rationals => {
                let mut digits = vec![0i64];
                for h in 1..=cfg.height.max(0) {
                    digits.push(h);
                    digits.push(-h);
                }
                let total = (digits.len() as u64)
                    .checked_pow(k)
                    .filter(|&t| t <= cfg.budget)
                    .unwrap_or(cfg.budget);
                // ℚ enumeration is never exhaustive unless W₁ = 0.
                (digits, total as usize, k == 0)
            }
        };
        // With an empty basis the span is {0}; one candidate covers it.
        let enum_count = if k == 0 { 1 } else { enum_count };
        // Priority candidates (a sep-G certificate, then the W₁ basis
        // vectors) are worth trying first only when the span sweep is not
        // exhaustive; otherwise they would be scanned twice.
        let mut priority = Vec::new();
        if !exhaustive {
            if let Some(cert) = sep_g_cert {
                priority.push(cert);
            }
            for v in basis {
                priority.push(v.matrices());
            }
        }
        Candidates { b, basis, priority, enum_count, digits, exhaustive }
    }

    fn len(&self) -> usize {
        self.priority.len() + self.enum_count
    }

    /// The candidate at position `i` (priority list first, then span
    /// combinations in lexicographic digit order).
    fn get(&self, i: usize) -> Result<Vec<Matrix>> {
        if i < self.priority.len() {
            return Ok(self.priority[i].clone());
        }
        let mut j = i - self.priority.len();
        let field = self.b.field;
        let dims = LambdaElement::unknown_dims(self.b);
        let mut mats: Vec<Matrix> =
            dims.iter().map(|&(r, c)| Matrix::zero(r, c, field)).collect();
        let base = self.digits.len().max(1);
        for t in 0..self.basis.len() {
            let digit = self.digits[j % base];
            j /= base;
            if digit == 0 {
                continue;
            }
            let coeff = field.from_i64(digit);
            for (m, bm) in mats.iter_mut().zip(self.basis[t].matrices()) {
                *m = m.add(&bm.scale(&coeff)?)?;
            }
        }
        Ok(mats)
    }
}

/// Number of worker threads for the λ search, from `ENTWINE_THREADS`
/// (default 1).
fn thread_count() -> usize {
    std::env::var("ENTWINE_THREADS")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&t| t >= 1)
        .unwrap_or(1)
}

/// Finds the lowest-index candidate λ admitting a σ. Deterministic under
/// any thread count: workers race but the minimum index wins.
fn search(b: &StructureBundle, cands: &Candidates) -> Result<Option<(usize, SigmaElement, LambdaElement)>> {
    let total = cands.len();
    let threads = thread_count().min(total.max(1));
    let try_one = |i: usize| -> Result<Option<(usize, SigmaElement, LambdaElement)>> {
        let mats = cands.get(i)?;
        let lam = LambdaElement::from_matrices(b, mats)?;
        if check_lambda_membership(b, &lam)?.first().is_some() {
            // Priority candidates are members by construction; a sep-G
            // certificate always is. This guards enumeration roundoff only.
            return Ok(None);
        }
        match solve_sigma_for_lambda(b, &lam.lambda)? {
            Some(sig) => Ok(Some((i, sig, lam))),
            None => Ok(None),
        }
    };
    if threads <= 1 {
        for i in 0..total {
            if let Some(hit) = try_one(i)? {
                return Ok(Some(hit));
            }
        }
        return Ok(None);
    }
    let best = AtomicUsize::new(usize::MAX);
    let results: Vec<Result<Option<(usize, SigmaElement, LambdaElement)>>> =
        std::thread::scope(|scope| {
            let mut handles = Vec::new();
            for t in 0..threads {
                let best = &best;
                let try_ref = &try_one;
                handles.push(scope.spawn(move || {
                    let lo = t * total / threads;
                    let hi = (t + 1) * total / threads;
                    for i in lo..hi {
                        if best.load(Ordering::Relaxed) < i {
                            break;
                        }
                        match try_ref(i) {
                            Ok(Some(hit)) => {
                                best.fetch_min(i, Ordering::Relaxed);
                                return Ok(Some(hit));
                            }
                            Ok(None) => {}
                            Err(e) => return Err(e),
                        }
                    }
                    Ok(None)
                }));
            }
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
        });
    let mut winner: Option<(usize, SigmaElement, LambdaElement)> = None;
    for r in results {
        if let Some(hit) = r? {
            if winner.as_ref().map_or(true, |w| hit.0 < w.0) {
                winner = Some(hit);
            }
        }
    }
    Ok(winner)
}

/// Decides whether the entwining structure is Frobenius (Theorem 6.9):
/// existence of σ ∈ V₁, λ ∈ W₁ with Eqs. 6.10–6.11. Yes is re-verified by
/// [`verify_frobenius_pair`]; No requires a provably exhaustive λ
/// enumeration (possible over 𝔽_p within budget, or when W₁ = 0);
/// otherwise Unknown.
pub fn decide_frobenius(b: &StructureBundle, cfg: &FrobeniusConfig) -> Result<Decision> {
    let basis = w1_basis(b)?;
    let sep_g_cert = match decide_sep_g(b)? {
        Decision { certificate: Some(Certificate::Lambda(l)), .. } => Some(l.matrices()),
        _ => None,
    };
    let cands = Candidates::new(b, &basis, cfg, sep_g_cert);
    let scanned = cands.len();
    if let Some((idx, sigma, lambda)) = search(b, &cands)? {
        let report = verify_frobenius_pair(b, &sigma, &lambda)?;
        if let Some(v) = report.first() {
            return Err(Error::Validation(format!(
                "internal inconsistency: solved Frobenius pair fails re-verification at {v}"
            )));
        }
        return Ok(Decision {
            outcome: Outcome::Yes,
            certificate: Some(Certificate::Pair { sigma, lambda }),
            witness: None,
            detail: format!(
                "Frobenius pair found at candidate {idx} of {scanned} (dim W₁ = {})",
                basis.len()
            ),
        });
    }
    if cands.exhaustive {
        Ok(Decision {
            outcome: Outcome::No,
            certificate: None,
            witness: None,
            detail: format!(
                "exhausted all {scanned} candidates covering W₁ (dim W₁ = {}); \
                 no λ admits a σ satisfying Eqs. 6.10–6.11",
                basis.len()
            ),
        })
    } else {
        Ok(Decision {
            outcome: Outcome::Unknown,
            certificate: None,
            witness: None,
            detail: format!(
                "no Frobenius pair among {scanned} candidates (dim W₁ = {}); \
                 enumeration was not exhaustive at budget {} / height {}",
                basis.len(),
                cfg.budget,
                cfg.height
            ),
        })
    }
}

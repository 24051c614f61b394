//! Decides separability of the induction functor F (side F) and the
//! forgetful functor G (side G) on the classical anchors, printing the
//! re-verified certificates and rank witnesses.

use entwine::catalog::catalog_build;
use entwine::criteria::{
    check_lambda_membership, check_lambda_normalized, decide_sep_f, decide_sep_g, Certificate,
    Outcome,
};
use entwine::Result;

fn main() -> Result<()> {
    for name in ["trivial", "matrix-coalg-2obj", "nonsep-F"] {
        let b = catalog_build(name, None)?;
        let d = decide_sep_f(&b)?;
        println!("sep(F) on {name:18} -> {} ({})", d.outcome, d.detail);
        if let Some(w) = &d.witness {
            println!("    rank witness: coefficient {} < augmented {}", w.rank_coefficient, w.rank_augmented);
        }
    }

    println!();
    for name in ["group-c2-q", "group-c2-f2", "dual-numbers-q"] {
        let b = catalog_build(name, None)?;
        let d = decide_sep_g(&b)?;
        println!("sep(G) on {name:18} -> {} ({})", d.outcome, d.detail);
        match (&d.outcome, &d.certificate) {
            (Outcome::Yes, Some(Certificate::Lambda(lambda))) => {
                // The certificate is a normalized W1-element: a Casimir-type
                // family lambda^X: C(X,X) -> A ⊗ A. Re-check it here.
                assert!(check_lambda_membership(&b, lambda)?.is_empty());
                assert!(check_lambda_normalized(&b, lambda)?.is_empty());
                for (x, m) in lambda.matrices().iter().enumerate() {
                    println!("    lambda at object {}: {:?}", b.coalgebra.objects[x], m.entries());
                }
            }
            (Outcome::No, _) => {
                let w = d.witness.expect("a No from the affine solver carries a witness");
                println!("    rank witness: coefficient {} < augmented {}", w.rank_coefficient, w.rank_augmented);
            }
            _ => unreachable!("sep decisions are always decided"),
        }
    }
    Ok(())
}

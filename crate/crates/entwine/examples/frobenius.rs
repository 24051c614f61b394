//! Decides the Frobenius property by candidate search over the space W1 and
//! re-verifies the certified (sigma, lambda) pair, including the triangle
//! equations and the four composite natural-transformation identities.

use entwine::catalog::catalog_build;
use entwine::criteria::{
    decide_frobenius, verify_frobenius_pair, Certificate, FrobeniusConfig, Outcome,
};
use entwine::Result;

fn main() -> Result<()> {
    let config = FrobeniusConfig::default();

    // Yes: the dual numbers Q[x]/(x^2) are Frobenius but not separable.
    let b = catalog_build("dual-numbers-q", None)?;
    let d = decide_frobenius(&b, &config)?;
    println!("frobenius on dual-numbers-q -> {}", d.outcome);
    println!("    {}", d.detail);
    assert_eq!(d.outcome, Outcome::Yes);
    let Some(Certificate::Pair { sigma, lambda }) = d.certificate else {
        panic!("a Frobenius Yes carries a (sigma, lambda) pair");
    };
    println!("    sigma components: {:?}", sigma.matrices().iter().map(|m| m.entries().to_vec()).collect::<Vec<_>>());
    println!("    lambda components: {:?}", lambda.matrices().iter().map(|m| m.entries().to_vec()).collect::<Vec<_>>());
    let report = verify_frobenius_pair(&b, &sigma, &lambda)?;
    println!("    independent re-verification: {} violation(s)", report.len());
    assert!(report.is_empty());

    // No: the local algebra F2[x,y]/(x,y)^2 is decided by exhausting the
    // finite span of W1 over F2.
    let b = catalog_build("local-3dim-f2", None)?;
    let d = decide_frobenius(&b, &config)?;
    println!("frobenius on local-3dim-f2 -> {}", d.outcome);
    println!("    {}", d.detail);
    assert_eq!(d.outcome, Outcome::No);

    // Unknown: the same search, starved of budget, degrades gracefully.
    let d = decide_frobenius(&b, &FrobeniusConfig { budget: 4, height: 3 })?;
    println!("frobenius on local-3dim-f2 at budget 4 -> {}", d.outcome);
    println!("    {}", d.detail);
    assert_eq!(d.outcome, Outcome::Unknown);
    Ok(())
}

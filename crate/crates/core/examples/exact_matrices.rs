//! Canonical projective matrices: clearing denominators, removing content,
//! fixing signs, and the powers of the order-3 element at level 275.

use modnorm::{canonicalize, ProjectiveMatrix, RationalMatrix};

fn main() -> modnorm::Result<()> {
    let upsilon = canonicalize(&RationalMatrix::from_fractions([(1, 1), (0, 1), (0, 1), (1, 5)]))?;
    println!("diag(1, 1/5)        -> {upsilon:?}  det {}", upsilon.determinant());

    let sigma = canonicalize(&RationalMatrix::from_integers(-115, 2, 275, -5))?;
    println!("(-115,2;275,-5)     -> {sigma:?}  det {}", sigma.determinant());

    for k in 2..=3 {
        let p = sigma.pow(k);
        println!("sigma^{k}             =  {p:?}  det {}", p.determinant());
    }
    println!("sigma^-1            =  {:?}", sigma.inverse());
    assert!(sigma.compose(&sigma.inverse()).is_identity());

    match ProjectiveMatrix::new(1, 2, 2, 4) {
        Err(e) => println!("(1,2;2,4)           -> {e}"),
        Ok(m) => println!("unexpected {m:?}"),
    }
    Ok(())
}

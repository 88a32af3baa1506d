//! Mod 5 solution sets (j, i) for every residue of M' = N/25.

use modnorm::normalizer::{sigma_parameters, solve_bjci_congruences};

fn main() -> modnorm::Result<()> {
    for m in 1..=4u8 {
        let sol = solve_bjci_congruences(m)?;
        println!("m = {m}: diagonal {:?}  antidiagonal {:?}", sol.diagonal, sol.antidiagonal);
    }
    for n in [275u64, 175, 325, 550] {
        let (j, i) = sigma_parameters(n)?;
        println!("N = {n}: j = {j}, i = {i}");
    }
    Ok(())
}

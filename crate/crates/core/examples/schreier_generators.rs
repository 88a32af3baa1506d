//! Coset action of PSL_2(Z) on P^1(Z/N) and Schreier generators of Gamma_0(N).

use modnorm::arith::psi;
use modnorm::congruence::{coset_action, gamma0_generators, in_gamma0};

fn main() -> modnorm::Result<()> {
    for n in [1u64, 6, 11, 30, 275] {
        let action = coset_action(n)?;
        let gens = gamma0_generators(n)?;
        assert!(gens.members.iter().all(|g| in_gamma0(g, n)));
        println!(
            "N = {n:>3}: {} cosets (psi = {}), reachable {}, {} generators",
            action.len(),
            psi(n),
            action.orbit_size_from_base(),
            gens.members.len()
        );
    }
    let gens = gamma0_generators(11)?;
    println!("\nGamma_0(11):");
    for g in &gens.members {
        println!("  {g:?}");
    }
    Ok(())
}

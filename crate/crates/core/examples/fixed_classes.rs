//! Classes fixed by a conjugated group: the snake of Gamma_0(6), and the two
//! classes fixed by Upsilon_5 <Gamma_0(275), w_25> Upsilon_5^-1.

use modnorm::bigpicture::{fixed_class_candidates, fixed_classes};
use modnorm::checks::conjugated_square_group;
use modnorm::congruence::gamma0_generators;

fn main() -> modnorm::Result<()> {
    let g6 = gamma0_generators(6)?;
    println!("fixed by Gamma_0(6): {:?}", fixed_classes(&g6, 1, 6)?);

    let gens = conjugated_square_group(5, 11)?;
    println!(
        "{} candidates for u = 5, M = 11; fixed by {}: {:?}",
        fixed_class_candidates(5, 11).len(),
        gens.label,
        fixed_classes(&gens, 5, 11)?
    );
    Ok(())
}

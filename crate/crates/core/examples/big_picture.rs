//! Snakes, Atkin-Lehner orbits and hyperdistances in the Big Picture.

use modnorm::bigpicture::{act, hyperdistance, orbit, snake};
use modnorm::congruence::atkin_lehner;
use modnorm::{GroupSpec, LatticeClass};

fn main() -> modnorm::Result<()> {
    let s6 = snake(6)?;
    println!("snake(6)   = {s6:?}");
    println!("snake(275) = {:?}", snake(275)?);

    let l1 = LatticeClass::integral(1);
    println!("w_6 L_1    = {:?}", act(&atkin_lehner(6, 6)?, &l1));
    for w in [&[2u64][..], &[6], &[2, 3]] {
        let g = GroupSpec::new(6, w)?;
        println!("orbit of L_1 under W = {w:?}: {:?}", orbit(&g, &l1)?);
    }

    println!();
    for x in &s6 {
        let row: Vec<String> = s6.iter().map(|y| format!("{:>3}", hyperdistance(x, y))).collect();
        println!("{:>4} | {}", x.to_string(), row.join(""));
    }
    let odd: LatticeClass = "3/5:1/2".parse()?;
    println!("\nhyperdistance(L_1, {odd}) = {}", hyperdistance(&l1, &odd));
    Ok(())
}

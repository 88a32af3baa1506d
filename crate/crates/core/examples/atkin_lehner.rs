//! Atkin-Lehner representatives, the `*` law on exact divisors, and coset
//! detection. Pass a level as the first argument (default 30).

use modnorm::arith::exact_divisors;
use modnorm::congruence::{atkin_lehner, coset_of, star, DivisorSubgroup};

fn main() -> modnorm::Result<()> {
    let n: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(30);
    let ds = exact_divisors(n);
    println!("B({n}) = {:?}", DivisorSubgroup::full(n)?.elements().collect::<Vec<_>>());
    for &d in &ds {
        let w = atkin_lehner(n, d)?;
        println!("w_{d:<4} = {w:?}  det {}  coset {:?}", w.determinant(), coset_of(&w, n));
    }
    println!();
    for &a in &ds {
        let row: Vec<String> = ds.iter().map(|&b| format!("{:>4}", star(n, a, b).unwrap())).collect();
        println!("{a:>4} * | {}", row.join(""));
    }
    Ok(())
}

//! Conjugate each w_e by Upsilon_L, strip the delta coset representative, and
//! check the remainder lies in Gamma_0(M) and satisfies a c = b d = 0 (mod L).

use modnorm::arith::exact_divisors;
use modnorm::bigpicture::upsilon_conjugate;
use modnorm::congruence::atkin_lehner;
use modnorm::normalizer::{delta_rep, sprime_member};

fn main() -> modnorm::Result<()> {
    for (n, l) in [(98u64, 7u64), (242, 11), (275, 5)] {
        let m = n / (l * l);
        println!("N = {n}, L = {l}, M = {m}");
        for e in exact_divisors(n) {
            let conj = upsilon_conjugate(&atkin_lehner(n, e)?, l);
            let e2: u64 = conj.determinant().try_into().expect("small");
            let rest = delta_rep(e2, m, l)?.inverse().compose(&conj);
            println!(
                "  w_{e:<3} -> det {e2:<2} remainder {:<28} in S': {}",
                format!("{rest:?}"),
                sprime_member(&rest, n, &[l])?
            );
        }
    }
    Ok(())
}

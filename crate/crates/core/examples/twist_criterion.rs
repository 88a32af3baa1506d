//! Whether conjugation by sigma preserves <Gamma_0(25q), w_25, w_q>, against
//! the prediction q = ±1 (mod 5).

use modnorm::normalizer::{twist_commutes, twist_prediction};

fn main() -> modnorm::Result<()> {
    for q in [2u64, 3, 7, 11, 13, 19, 23, 29, 31, 41] {
        let got = twist_commutes(q)?;
        println!(
            "q = {q:>2} (q mod 5 = {}): sigma w_q sigma^-1 {} the group{}",
            q % 5,
            if got { "stays in" } else { "leaves" },
            if got == twist_prediction(q) { "" } else { "  MISMATCH" }
        );
    }
    Ok(())
}

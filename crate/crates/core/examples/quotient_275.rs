//! The modular automorphism group of X_0(275)/<w_25>: six cosets, generated by
//! w_11 and the order-3 element.

use modnorm::normalizer::quotient_group;
use modnorm::GroupSpec;

fn main() -> modnorm::Result<()> {
    let q = quotient_group(&GroupSpec::new(275, &[25])?)?;
    println!("order {}, abelian: {}", q.order(), q.abelian);
    for (k, (rep, ord)) in q.element_reps.iter().zip(&q.element_orders).enumerate() {
        println!("e{k}: order {ord}  rep {rep:?}");
    }
    println!();
    for row in &q.table {
        println!("{}", row.iter().map(|k| format!("e{k} ")).collect::<String>());
    }
    Ok(())
}

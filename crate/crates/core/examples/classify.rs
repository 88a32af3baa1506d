//! Normalizer case for a handful of (N, W), or for `N d1,d2,...` given on the
//! command line.

use modnorm::normalizer::{classify, quotient_group};
use modnorm::GroupSpec;

fn parse_args() -> Option<(u64, Vec<u64>)> {
    let mut args = std::env::args().skip(1);
    let n = args.next()?.parse().ok()?;
    let w = args
        .next()
        .map(|s| s.split(',').filter_map(|d| d.parse().ok()).collect())
        .unwrap_or_default();
    Some((n, w))
}

fn main() {
    let cases = match parse_args() {
        Some(c) => vec![c],
        None => vec![
            (275, vec![25]),
            (275, vec![25, 11]),
            (275, vec![11]),
            (175, vec![25, 7]),
            (30, vec![6]),
            (550, vec![25, 22]),
            (36, vec![4]),
        ],
    };
    for (n, w) in cases {
        let result = GroupSpec::new(n, &w).and_then(|g| Ok((classify(&g)?, quotient_group(&g)?)));
        match result {
            Ok((r, q)) => println!(
                "N = {n:>3}, W = {w:?}: {:<10} sigma {:<28} M = {:<3} quotient order {} ({})",
                r.case.as_str(),
                r.sigma.map_or("-".to_string(), |s| format!("{:?}", s.matrix)),
                r.conjugation_level,
                q.order(),
                if q.abelian { "abelian" } else { "non-abelian" }
            ),
            Err(e) => println!("N = {n:>3}, W = {w:?}: {e}"),
        }
    }
}

//! Self-verification suite: brute-force and membership-oracle checks of the
//! structural results the library relies on. Each check is independent and
//! reports a single pass/fail line.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::arith;
use crate::bigpicture::{
    act, conjugate_by_upsilon, fixed_classes, fixes_by_conjugation, upsilon_conjugate, LatticeClass,
};
use crate::congruence::{
    atkin_lehner, coset_of, gamma0_generators, generator_s, generator_t, in_extended_group,
    in_gamma0, random_word, GeneratorSet, GroupSpec,
};
use crate::error::Result;
use crate::exact::{canonicalize, ProjectiveMatrix, RationalMatrix};
use crate::normalizer::{
    delta_rep, quotient_group, sigma, sigma_inverse_variant, solve_bjci_congruences,
    sprime_member, twist_commutes, twist_prediction, xstar_square_aut, NormalizerContext,
    XStarAut,
};

pub const DEFAULT_SEED: u64 = 0x5eed_0275;

/// Levels `25q` swept by the order-3 check.
pub const SIGMA_SWEEP: [u64; 6] = [175, 275, 325, 425, 475, 775];

/// Primes `q` swept by the twist check.
pub const TWIST_PRIMES: [u64; 7] = [7, 11, 13, 19, 23, 29, 31];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn new(name: &'static str, passed: bool, detail: impl Into<String>) -> Self {
        CheckOutcome {
            name,
            passed,
            detail: detail.into(),
        }
    }

    fn from_result(name: &'static str, r: Result<(bool, String)>) -> Self {
        match r {
            Ok((passed, detail)) => CheckOutcome::new(name, passed, detail),
            Err(e) => CheckOutcome::new(name, false, format!("error: {e}")),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "name": self.name, "passed": self.passed, "detail": self.detail })
    }
}

/// Mod 5 tables for `m = 1` and agreement with direct matrix arithmetic for every `m`.
pub fn check_bjci_tables() -> CheckOutcome {
    CheckOutcome::from_result("bjci-tables", (|| {
        let sol = solve_bjci_congruences(1)?;
        let diag: BTreeSet<_> = sol.diagonal.iter().copied().collect();
        let anti: BTreeSet<_> = sol.antidiagonal.iter().copied().collect();
        let m1 = diag == BTreeSet::from([(2, 0), (4, 1), (1, 2)])
            && anti == BTreeSet::from([(0, 3), (3, 4)]);
        let mut agree = true;
        for m in 1..=4u8 {
            let sol = solve_bjci_congruences(m)?;
            for j in 0..5u8 {
                for i in 0..5u8 {
                    let e = conjugate_s_mod5(m.into(), j.into(), i.into());
                    agree &= sol.diagonal.contains(&(j, i)) == (e[0] == 0 && e[3] == 0);
                    agree &= sol.antidiagonal.contains(&(j, i)) == (e[1] == 0 && e[2] == 0);
                }
            }
        }
        Ok((
            m1 && agree,
            format!("m=1 diagonal {:?}, antidiagonal {:?}; direct-product agreement {agree}", sol.diagonal, sol.antidiagonal),
        ))
    })())
}

/// Entries of `(B_j C_i) S (B_j C_i)^-1` modulo 5.
fn conjugate_s_mod5(m: i64, j: i64, i: i64) -> [i64; 4] {
    let x = RationalMatrix::from_integers(m * j + 1, -j, -m, 1)
        .mul(&RationalMatrix::from_integers(1, i, 0, 1));
    let s = RationalMatrix::from_integers(0, -1, 1, 0);
    let e = x.mul(&s).mul(&x.adjugate());
    [e.a, e.b, e.c, e.d].map(|q| {
        let n: i64 = q.to_integer().try_into().expect("small entries");
        n.rem_euclid(5)
    })
}

/// `sigma w_q sigma^-1` stays in `<Gamma_0(25q), w_25, w_q>` exactly for `q = ±1 (mod 5)`.
pub fn check_twist_sweep() -> CheckOutcome {
    CheckOutcome::from_result("twist-criterion", (|| {
        let mut ok = true;
        let mut parts = Vec::new();
        for q in TWIST_PRIMES {
            let got = twist_commutes(q)?;
            ok &= got == twist_prediction(q);
            parts.push(format!("{q}:{}", if got { "yes" } else { "no" }));
        }
        Ok((ok, parts.join(" ")))
    })())
}

/// For `N = 25q` with `W = <w_25>`: `sigma` is new, `sigma^3` is in `Gamma_0(N)`,
/// `sigma` normalizes, and the quotient has order `3 * 2^(omega(N) - 1)`.
pub fn sigma_properties(n: u64) -> Result<(bool, String)> {
    let g = GroupSpec::new(n, &[25])?;
    let s = sigma(n)?.matrix;
    let outside = !in_extended_group(&s, &g);
    let cube = coset_of(&s.pow(3), n) == Some(1);
    let norm = NormalizerContext::new(&g)?.normalizes(&s);
    let order = quotient_group(&g)?.order();
    let expected = 3 * (1usize << (arith::omega(n) - 1));
    Ok((
        outside && cube && norm && order == expected,
        format!("N={n}: outside={outside} cube={cube} normalizes={norm} order={order}/{expected}"),
    ))
}

pub fn check_sigma_sweep() -> CheckOutcome {
    let mut ok = true;
    let mut details = Vec::new();
    for n in SIGMA_SWEEP {
        match sigma_properties(n) {
            Ok((p, d)) => {
                ok &= p;
                details.push(d);
            }
            Err(e) => {
                ok = false;
                details.push(format!("N={n}: error: {e}"));
            }
        }
    }
    CheckOutcome::new("sigma-order-3", ok, details.join("; "))
}

/// `sigma` times `Upsilon_5^-1 B_0 C_i Upsilon_5` lies in the group.
pub fn check_sigma_inverse_variant() -> CheckOutcome {
    CheckOutcome::from_result("sigma-inverse-variant", (|| {
        let mut ok = true;
        for n in SIGMA_SWEEP {
            let g = GroupSpec::new(n, &[25])?;
            ok &= in_extended_group(&sigma(n)?.matrix.compose(&sigma_inverse_variant(n)?), &g);
        }
        Ok((ok, format!("{} levels", SIGMA_SWEEP.len())))
    })())
}

pub fn check_order_six() -> CheckOutcome {
    CheckOutcome::from_result("aut-275-order-6", (|| {
        let q = quotient_group(&GroupSpec::new(275, &[25])?)?;
        let ok = q.order() == 6 && q.element_orders.contains(&3) && q.is_latin_square();
        Ok((ok, format!("order {}, element orders {:?}", q.order(), q.element_orders)))
    })())
}

/// `Upsilon_u <Gamma_0(u^2 M), w_{u^2}> Upsilon_u^-1`, as a generator set.
pub fn conjugated_square_group(u: u64, m: u64) -> Result<GeneratorSet> {
    let n = u * u * m;
    let mut members = gamma0_generators(n)?.members;
    members.push(atkin_lehner(n, u * u)?);
    Ok(conjugate_by_upsilon(
        &GeneratorSet::new(format!("<Gamma0({n}), w{}>", u * u), members),
        u,
    ))
}

pub fn check_fixed_classes() -> CheckOutcome {
    CheckOutcome::from_result("fixed-classes", (|| {
        let gens = conjugated_square_group(5, 11)?;
        let fixed = fixed_classes(&gens, 5, 11)?;
        let expected = BTreeSet::from([LatticeClass::integral(1), LatticeClass::integral(11)]);
        let shown: Vec<String> = fixed.iter().map(|c| c.to_string()).collect();
        Ok((fixed == expected, shown.join(", ")))
    })())
}

/// After conjugating `w_e` by `Upsilon_L` and stripping the `delta` coset
/// representative, what remains is in `Gamma_0(M)` and in `S'`.
pub fn sprime_reduction(n: u64, l: u64) -> Result<(bool, String)> {
    let m = n / (l * l);
    let mut ok = true;
    let mut parts = Vec::new();
    for e in arith::exact_divisors(n) {
        let conj = upsilon_conjugate(&atkin_lehner(n, e)?, l);
        let e2 = u64::try_from(conj.determinant()).unwrap_or(0);
        let coset = coset_of(&conj, m) == Some(e2);
        let rest = delta_rep(e2, m, l)?.inverse().compose(&conj);
        let member = in_gamma0(&rest, m) && sprime_member(&rest, n, &[l])?;
        ok &= coset && member;
        parts.push(format!("w{e}->{e2}"));
    }
    Ok((ok, format!("N={n}: {}", parts.join(" "))))
}

pub fn check_sprime() -> CheckOutcome {
    let mut ok = true;
    let mut details = Vec::new();
    for (n, l) in [(98, 7), (242, 11)] {
        match sprime_reduction(n, l) {
            Ok((p, d)) => {
                ok &= p;
                details.push(d);
            }
            Err(e) => {
                ok = false;
                details.push(format!("N={n}: error: {e}"));
            }
        }
    }
    CheckOutcome::new("sprime-reduction", ok, details.join("; "))
}

pub fn check_xstar() -> CheckOutcome {
    let cases = [(35, XStarAut::Cyclic3), (7, XStarAut::Trivial), (55, XStarAut::Cyclic3), (77, XStarAut::Trivial)];
    let ok = cases.iter().all(|&(n, want)| xstar_square_aut(n) == Ok(want));
    CheckOutcome::new("xstar-formula", ok, format!("{} levels", cases.len()))
}

/// Random element of PGL_2(Q)^+ biased towards elements that fix lattice classes.
pub fn random_matrix<R: Rng>(rng: &mut R) -> ProjectiveMatrix {
    let st = [generator_s(), generator_t()];
    match rng.gen_range(0..3) {
        0 => loop {
            let mut e = || rng.gen_range(-12i64..=12);
            let (a, b, c, d) = (e(), e(), e(), e());
            if a * d - b * c > 0 {
                return ProjectiveMatrix::from_i64(a, b, c, d);
            }
        },
        1 => {
            let len = rng.gen_range(0..8);
            random_word(&st, len, rng)
        }
        _ => {
            // P^-1 gamma P fixes the class with basis P
            let p = random_class(rng).basis();
            let len = rng.gen_range(0..6);
            let gamma = RationalMatrix::from(&random_word(&st, len, rng));
            canonicalize(&p.adjugate().mul(&gamma).mul(&p)).expect("positive determinant")
        }
    }
}

pub fn random_class<R: Rng>(rng: &mut R) -> LatticeClass {
    let s = num_rational::BigRational::new(
        BigInt::from(rng.gen_range(1..=30)),
        BigInt::from(rng.gen_range(1..=6)),
    );
    let t = rng.gen_range(1..=8u64);
    let g = rng.gen_range(0..t);
    LatticeClass::new(s, BigInt::from(g), BigInt::from(t)).expect("positive s, t")
}

/// Agreement of `act`-fixing with the conjugation criterion on seeded random pairs.
/// Returns the number of pairs that disagree and the number that were fixed.
pub fn stabilizer_agreement(seed: u64, samples: usize) -> (usize, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut disagree = 0;
    let mut fixed = 0;
    for _ in 0..samples {
        let a = random_matrix(&mut rng);
        let x = random_class(&mut rng);
        let by_action = act(&a, &x) == x;
        fixed += by_action as usize;
        disagree += (by_action != fixes_by_conjugation(&a, &x)) as usize;
    }
    (disagree, fixed)
}

pub fn check_stabilizer(seed: u64) -> CheckOutcome {
    let (bad, fixed) = stabilizer_agreement(seed, 500);
    CheckOutcome::new(
        "stabilizer-criterion",
        bad == 0,
        format!("500 pairs, {fixed} fixed, {bad} disagreements"),
    )
}

/// Random products `w_d gamma` always land in the `d` coset.
pub fn check_coset_detection(seed: u64) -> CheckOutcome {
    CheckOutcome::from_result("coset-detection", (|| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut ok = true;
        for n in [30u64, 275] {
            let gens = gamma0_generators(n)?.members;
            let divisors = arith::exact_divisors(n);
            for _ in 0..250 {
                let d = divisors[rng.gen_range(0..divisors.len())];
                let gamma = random_word(&gens, rng.gen_range(1..5), &mut rng);
                ok &= coset_of(&atkin_lehner(n, d)?.compose(&gamma), n) == Some(d);
            }
        }
        Ok((ok, "500 words at N = 30, 275".to_string()))
    })())
}

/// Every check, in a fixed order.
pub fn run_all(seed: u64) -> Vec<CheckOutcome> {
    vec![
        check_bjci_tables(),
        check_twist_sweep(),
        check_sigma_sweep(),
        check_sigma_inverse_variant(),
        check_order_six(),
        check_fixed_classes(),
        check_sprime(),
        check_xstar(),
        check_stabilizer(seed),
        check_coset_detection(seed),
    ]
}

pub fn all_passed(outcomes: &[CheckOutcome]) -> bool {
    outcomes.iter().all(|o| o.passed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_check_passes() {
        for o in run_all(DEFAULT_SEED) {
            assert!(o.passed, "{}: {}", o.name, o.detail);
        }
    }

    #[test]
    fn stabilizer_sample_is_not_degenerate() {
        let (bad, fixed) = stabilizer_agreement(1, 200);
        assert_eq!(bad, 0);
        assert!(fixed > 20 && fixed < 200, "fixed = {fixed}");
    }
}

//! Normalizers of `<Gamma_0(N), W>` and the finite quotient they induce.
//!
//! For `4, 9 ∤ N` the normalizer is `Gamma_0^*(N)` unless `w_25` lies in `W`
//! and every `d` in `W` satisfies `d/(25,d) = ±1 (mod 5)`. In that last case
//! one extra element `sigma` of order 3 modulo the group appears.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Value};

use crate::arith;
use crate::congruence::{atkin_lehner, coset_of, gamma0_generators, in_extended_group, in_gamma0, GroupSpec};
use crate::error::{Error, Result};
use crate::exact::ProjectiveMatrix;

/// Upper bound on the number of cosets [`quotient_group`] will enumerate.
pub const CLOSURE_CAP: usize = 1024;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NormalizerCase {
    /// `w_25` is not in the group; the normalizer is `Gamma_0^*(N)`.
    NoSquare25,
    /// `w_25` is in the group together with some `w_d`, `d/(25,d) != ±1 (mod 5)`.
    Bad25,
    /// `w_25` is in the group and every `d` passes the mod 5 test; `sigma` joins.
    Good25,
}

impl NormalizerCase {
    pub fn as_str(self) -> &'static str {
        match self {
            NormalizerCase::NoSquare25 => "NoSquare25",
            NormalizerCase::Bad25 => "Bad25",
            NormalizerCase::Good25 => "Good25",
        }
    }
}

impl fmt::Display for NormalizerCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The order-3 generator `Upsilon_5^-1 B_j C_0 Upsilon_5` and its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sigma {
    pub matrix: ProjectiveMatrix,
    pub j: u8,
    pub i: u8,
}

impl Sigma {
    pub fn to_json(&self) -> Value {
        json!({
            "matrix": self.matrix.to_json_entries(),
            "j": self.j,
            "i": self.i,
        })
    }
}

fn check_25_exact(n: u64) -> Result<u64> {
    if !n.is_multiple_of(25) || (n / 25).is_multiple_of(5) {
        return Err(Error::Not25ExactDivisor(n));
    }
    Ok(n / 25)
}

/// `j` in `0..5` with `(N/25) j = 2 (mod 5)` and `i = -j (mod 5)`.
pub fn sigma_parameters(n: u64) -> Result<(u8, u8)> {
    let m = check_25_exact(n)? % 5;
    let j = (0..5u64).find(|j| (m * j) % 5 == 2).expect("m is a unit mod 5");
    Ok((j as u8, ((5 - j) % 5) as u8))
}

/// `sigma = (5((N/25) j + 1), -j; -N, 5)` up to canonical scaling, determinant 25.
pub fn sigma(n: u64) -> Result<Sigma> {
    let (j, i) = sigma_parameters(n)?;
    let m = BigInt::from(n / 25);
    let jb = BigInt::from(j);
    let matrix = ProjectiveMatrix::new(
        BigInt::from(5) * (&m * &jb + 1),
        -jb,
        -BigInt::from(n),
        5,
    )?;
    Ok(Sigma { matrix, j, i })
}

/// `Upsilon_5^-1 B_0 C_i Upsilon_5 = (5, i; -N, 5(1 - (N/25) i))`, which
/// represents the inverse of `sigma` modulo the group.
pub fn sigma_inverse_variant(n: u64) -> Result<ProjectiveMatrix> {
    let (_, i) = sigma_parameters(n)?;
    let m = BigInt::from(n / 25);
    let ib = BigInt::from(i);
    ProjectiveMatrix::new(5, ib.clone(), -BigInt::from(n), BigInt::from(5) * (1 - &m * &ib))
}

/// Solutions `(j, i)` of the two mod 5 systems deciding when `B_j C_i`
/// conjugates an element congruent to `S` into the diagonal or antidiagonal
/// shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BjciSolutions {
    pub m: u8,
    pub diagonal: Vec<(u8, u8)>,
    pub antidiagonal: Vec<(u8, u8)>,
}

impl BjciSolutions {
    pub fn to_json(&self) -> Value {
        let pairs = |v: &[(u8, u8)]| v.iter().map(|&(j, i)| json!([j, i])).collect::<Vec<_>>();
        json!({
            "m": self.m,
            "diagonal": pairs(&self.diagonal),
            "antidiagonal": pairs(&self.antidiagonal),
        })
    }
}

/// Diagonal condition: `i^2 m (m j + 1) - i (2 j m + 1) + j + m (m j + 1) = 0 (mod 5)`.
pub fn bjci_diagonal_residue(m: i64, j: i64, i: i64) -> i64 {
    (i * i * m * (m * j + 1) - i * (2 * j * m + 1) + j + m * (m * j + 1)).rem_euclid(5)
}

/// Antidiagonal condition: both residues must vanish. The first involves `i`
/// only; for `m = 1` it reduces to `i^2 - 2i + 2`.
pub fn bjci_antidiagonal_residues(m: i64, j: i64, i: i64) -> (i64, i64) {
    let lower = i * i * m * m - 2 * i * m + m * m + 1;
    let upper = i * i * j * j * m * m + 2 * i * i * j * m + i * i
        - 2 * i * j * j * m
        - 2 * i * j
        + j * j * m * m
        + j * j
        + 2 * j * m
        + 1;
    (lower.rem_euclid(5), upper.rem_euclid(5))
}

/// Exhaustive scan of `(j, i)` in `[0, 5)^2` for `M' = m (mod 5)`.
pub fn solve_bjci_congruences(m: u8) -> Result<BjciSolutions> {
    if !(1..=4).contains(&m) {
        return Err(Error::PreconditionViolation(format!(
            "residue of M' mod 5 must be in 1..=4, got {m}"
        )));
    }
    let mut diagonal = Vec::new();
    let mut antidiagonal = Vec::new();
    for j in 0..5u8 {
        for i in 0..5u8 {
            let (mm, jj, ii) = (m as i64, j as i64, i as i64);
            if bjci_diagonal_residue(mm, jj, ii) == 0 {
                diagonal.push((j, i));
            }
            if bjci_antidiagonal_residues(mm, jj, ii) == (0, 0) {
                antidiagonal.push((j, i));
            }
        }
    }
    Ok(BjciSolutions {
        m,
        diagonal,
        antidiagonal,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizerResult {
    pub spec: GroupSpec,
    pub case: NormalizerCase,
    /// All exact divisors of N: `Gamma_0^*(N)` lies in the normalizer in every case.
    pub atkin_lehner_generators: Vec<u64>,
    pub sigma: Option<Sigma>,
    /// `N / lcm{u^2 : u^2 in the closure}`.
    pub conjugation_level: u64,
}

impl NormalizerResult {
    /// Generators of the normalizer as explicit matrices.
    pub fn generator_matrices(&self) -> Vec<ProjectiveMatrix> {
        let n = self.spec.level();
        let mut out: Vec<ProjectiveMatrix> = self
            .atkin_lehner_generators
            .iter()
            .filter(|&&d| d != 1)
            .map(|&d| atkin_lehner(n, d).expect("exact divisor"))
            .collect();
        if let Some(s) = &self.sigma {
            out.push(s.matrix.clone());
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "N": self.spec.level(),
            "W": self.spec.generator_divisors(),
            "case": self.case.as_str(),
            "generators": { "atkin_lehner": self.atkin_lehner_generators },
            "sigma": self.sigma.as_ref().map_or(Value::Null, Sigma::to_json),
        })
    }
}

pub fn classify(g: &GroupSpec) -> Result<NormalizerResult> {
    let n = g.level();
    arith::check_level(n)?;
    let case = if !g.contains_25() {
        NormalizerCase::NoSquare25
    } else if !g.all_pm1_mod5() {
        NormalizerCase::Bad25
    } else {
        NormalizerCase::Good25
    };
    let sigma = match case {
        NormalizerCase::Good25 => Some(sigma(n)?),
        _ => None,
    };
    let square_lcm = g.square_divisors().into_iter().fold(1, arith::lcm);
    Ok(NormalizerResult {
        spec: g.clone(),
        case,
        atkin_lehner_generators: arith::exact_divisors(n),
        sigma,
        conjugation_level: n / square_lcm,
    })
}

/// A group together with a cached generating set, for repeated normalizer tests.
#[derive(Clone, Debug)]
pub struct NormalizerContext {
    spec: GroupSpec,
    generators: Vec<ProjectiveMatrix>,
}

impl NormalizerContext {
    pub fn new(spec: &GroupSpec) -> Result<Self> {
        let n = spec.level();
        let mut generators = gamma0_generators(n)?.members;
        for &d in spec.generator_divisors() {
            if d != 1 {
                generators.push(atkin_lehner(n, d)?);
            }
        }
        Ok(NormalizerContext {
            spec: spec.clone(),
            generators,
        })
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn generators(&self) -> &[ProjectiveMatrix] {
        &self.generators
    }

    pub fn contains(&self, x: &ProjectiveMatrix) -> bool {
        in_extended_group(x, &self.spec)
    }

    /// `x G x^-1 ⊆ G` and `x^-1 G x ⊆ G`, checked on generators.
    pub fn normalizes(&self, x: &ProjectiveMatrix) -> bool {
        let xinv = x.inverse();
        self.generators.iter().all(|g| {
            self.contains(&x.compose(g).compose(&xinv)) && self.contains(&xinv.compose(g).compose(x))
        })
    }
}

pub fn normalizes(x: &ProjectiveMatrix, g: &GroupSpec) -> Result<bool> {
    Ok(NormalizerContext::new(g)?.normalizes(x))
}

/// Cayley table of the normalizer modulo the group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientGroupTable {
    /// Coset representatives in discovery order, identity first.
    pub element_reps: Vec<ProjectiveMatrix>,
    pub table: Vec<Vec<usize>>,
    pub element_orders: Vec<u64>,
    pub abelian: bool,
}

impl QuotientGroupTable {
    pub fn order(&self) -> usize {
        self.element_reps.len()
    }

    pub fn is_latin_square(&self) -> bool {
        let n = self.order();
        let perm = |it: &mut dyn Iterator<Item = usize>| {
            let mut seen = vec![false; n];
            for k in it {
                if k >= n || std::mem::replace(&mut seen[k], true) {
                    return false;
                }
            }
            seen.iter().all(|&b| b)
        };
        (0..n).all(|r| perm(&mut self.table[r].iter().copied()))
            && (0..n).all(|c| perm(&mut (0..n).map(|r| self.table[r][c])))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "order": self.order(),
            "abelian": self.abelian,
            "element_orders": self.element_orders,
            "table": self.table,
        })
    }
}

/// Closes the Atkin-Lehner involutions (and `sigma`, `sigma^2` when present)
/// modulo `<Gamma_0(N), W>`.
pub fn quotient_group(g: &GroupSpec) -> Result<QuotientGroupTable> {
    let result = classify(g)?;
    let mut gens = result.generator_matrices();
    if let Some(s) = &result.sigma {
        gens.push(s.matrix.pow(2));
    }
    quotient_from_generators(g, &gens, CLOSURE_CAP)
}

/// Closure of `gens` modulo the group of `g`. Elements are compared by
/// `x y^-1 ∈ G`, which is correct whenever the generators normalize `G`.
pub fn quotient_from_generators(
    g: &GroupSpec,
    gens: &[ProjectiveMatrix],
    cap: usize,
) -> Result<QuotientGroupTable> {
    let mut reps = vec![ProjectiveMatrix::identity()];
    let mut inverses = vec![ProjectiveMatrix::identity()];
    let find = |reps: &[ProjectiveMatrix], inverses: &[ProjectiveMatrix], x: &ProjectiveMatrix| {
        (0..reps.len()).find(|&k| in_extended_group(&x.compose(&inverses[k]), g))
    };

    let mut k = 0;
    while k < reps.len() {
        for gen in gens {
            let p = reps[k].compose(gen);
            if find(&reps, &inverses, &p).is_none() {
                if reps.len() >= cap {
                    return Err(Error::ClosureOverflow(cap));
                }
                inverses.push(p.inverse());
                reps.push(p);
            }
        }
        k += 1;
    }

    let n = reps.len();
    let table: Vec<Vec<usize>> = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    find(&reps, &inverses, &reps[a].compose(&reps[b]))
                        .expect("closure is closed under products")
                })
                .collect()
        })
        .collect();
    let element_orders = (0..n)
        .map(|a| {
            let mut order = 1;
            let mut cur = a;
            while cur != 0 {
                cur = table[cur][a];
                order += 1;
            }
            order
        })
        .collect();
    let abelian = (0..n).all(|a| (0..a).all(|b| table[a][b] == table[b][a]));
    Ok(QuotientGroupTable {
        element_reps: reps,
        table,
        element_orders,
        abelian,
    })
}

/// `(e, L x; M L, e y)` with determinant `e`, where `x >= 0` is least with
/// `e y - (M/e) L^2 x = 1`. A coset representative for `w_e` after
/// conjugation by `Upsilon_L`.
pub fn delta_rep(e: u64, m: u64, l: u64) -> Result<ProjectiveMatrix> {
    if m == 0 || l == 0 {
        return Err(Error::InvalidLevel);
    }
    if !arith::is_exact_divisor(m, e) {
        return Err(Error::NotExactDivisor { n: m, d: e });
    }
    if e == 1 {
        return Ok(ProjectiveMatrix::identity());
    }
    let k = BigInt::from(m / e) * BigInt::from(l) * BigInt::from(l);
    let eb = BigInt::from(e);
    let kinv = arith::mod_inverse(&k, &eb).ok_or_else(|| Error::NotSolvable {
        e,
        modulus: k.clone(),
    })?;
    let x = (&eb - kinv) % &eb;
    let y = (BigInt::one() + &k * &x) / &eb;
    let lb = BigInt::from(l);
    ProjectiveMatrix::new(eb.clone(), &lb * &x, BigInt::from(m) * &lb, &eb * y)
}

/// Membership in `S'`: `a c = b d = 0 (mod lcm(u_i))` for `x` in `Gamma_0(M)`,
/// `M = N / lcm(u_i^2)`.
pub fn sprime_member(x: &ProjectiveMatrix, n: u64, squares: &[u64]) -> Result<bool> {
    let l = squares.iter().copied().fold(1, arith::lcm);
    if squares.iter().any(|&u| u == 0 || !n.is_multiple_of(u * u)) {
        return Err(Error::PreconditionViolation(format!(
            "every u must have u^2 dividing N = {n}"
        )));
    }
    let m = n / (l * l);
    if !in_gamma0(x, m) {
        return Err(Error::PreconditionViolation(format!(
            "{x:?} is not in Gamma_0({m})"
        )));
    }
    Ok(arith::divides(l, &(x.a() * x.c())) && arith::divides(l, &(x.b() * x.d())))
}

/// Whether `sigma w_q sigma^-1` stays in `<Gamma_0(25q), w_25, w_q>`.
pub fn twist_commutes(q: u64) -> Result<bool> {
    if q == 0 || q.is_multiple_of(5) {
        return Err(Error::PreconditionViolation(format!(
            "q must be a positive integer prime to 5, got {q}"
        )));
    }
    let n = 25 * q;
    let spec = GroupSpec::new(n, &[25, q])?;
    let s = sigma(n)?.matrix;
    let wq = atkin_lehner(n, q)?;
    Ok(in_extended_group(&s.compose(&wq).compose(&s.inverse()), &spec))
}

/// The predicted answer of [`twist_commutes`]: `q = ±1 (mod 5)`.
pub fn twist_prediction(q: u64) -> bool {
    matches!(q % 5, 1 | 4)
}

/// Expected automorphism group of `X_0^*(N^2)` for large squarefree `N` prime to 6.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum XStarAut {
    Cyclic3,
    Trivial,
}

impl XStarAut {
    pub fn as_str(self) -> &'static str {
        match self {
            XStarAut::Cyclic3 => "Z/3Z",
            XStarAut::Trivial => "trivial",
        }
    }
}

/// Caveat attached to every [`xstar_square_aut`] answer.
pub const XSTAR_ADVISORY: &str =
    "formula only: assumes N is beyond the cited size bound, which is not checked here";

pub fn xstar_square_aut(n: u64) -> Result<XStarAut> {
    if n == 0 || !arith::is_squarefree(n) || arith::gcd(n, 6) != 1 {
        return Err(Error::PreconditionViolation(format!(
            "N must be squarefree and prime to 6, got {n}"
        )));
    }
    Ok(if n.is_multiple_of(5) {
        XStarAut::Cyclic3
    } else {
        XStarAut::Trivial
    })
}

/// `Some(e)` where `Upsilon_L w Upsilon_L^-1` has determinant `e`, provided the
/// result lies in the `e` coset of `Gamma_0^*(M)`.
pub fn conjugated_coset(w: &ProjectiveMatrix, l: u64, m: u64) -> Option<u64> {
    let n = crate::bigpicture::upsilon_conjugate(w, l);
    coset_of(&n, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigpicture::upsilon_conjugate;

    fn pm(a: i64, b: i64, c: i64, d: i64) -> ProjectiveMatrix {
        ProjectiveMatrix::from_i64(a, b, c, d)
    }

    #[test]
    fn sigma_examples() {
        let s = sigma(275).unwrap();
        assert_eq!((s.j, s.i), (2, 3));
        assert_eq!(s.matrix, pm(115, -2, -275, 5));
        let s = sigma(175).unwrap();
        assert_eq!((s.j, s.i), (1, 4));
        assert_eq!(s.matrix, pm(40, -1, -175, 5));
        assert_eq!(s.matrix.determinant(), BigInt::from(25));
        let s = sigma(550).unwrap();
        assert_eq!((s.j, s.i), (1, 4));
        assert_eq!(sigma(125), Err(Error::Not25ExactDivisor(125)));
        assert_eq!(sigma(55), Err(Error::Not25ExactDivisor(55)));
    }

    #[test]
    fn sigma_inverse_variant_inverts_modulo_group() {
        for q in [7u64, 11, 13, 19] {
            let n = 25 * q;
            let g = GroupSpec::new(n, &[25]).unwrap();
            let prod = sigma(n).unwrap().matrix.compose(&sigma_inverse_variant(n).unwrap());
            assert!(in_extended_group(&prod, &g), "N = {n}");
        }
    }

    /// Reference: conjugate `S` by `B_j C_i` and read entries mod 5.
    fn conjugated_s_mod5(m: i64, j: i64, i: i64) -> [i64; 4] {
        let mul = |x: [i64; 4], y: [i64; 4]| {
            [
                x[0] * y[0] + x[1] * y[2],
                x[0] * y[1] + x[1] * y[3],
                x[2] * y[0] + x[3] * y[2],
                x[2] * y[1] + x[3] * y[3],
            ]
        };
        let b = [m * j + 1, -j, -m, 1];
        let c = [1, i, 0, 1];
        let x = mul(b, c);
        let xinv = [x[3], -x[1], -x[2], x[0]];
        mul(mul(x, [0, -1, 1, 0]), xinv).map(|v| v.rem_euclid(5))
    }

    #[test]
    fn bjci_tables_match_direct_multiplication() {
        for m in 1..=4u8 {
            let sol = solve_bjci_congruences(m).unwrap();
            for j in 0..5u8 {
                for i in 0..5u8 {
                    let e = conjugated_s_mod5(m as i64, j as i64, i as i64);
                    let diag = e[0] == 0 && e[3] == 0;
                    let anti = e[1] == 0 && e[2] == 0;
                    assert_eq!(sol.diagonal.contains(&(j, i)), diag, "m={m} j={j} i={i}");
                    assert_eq!(sol.antidiagonal.contains(&(j, i)), anti, "m={m} j={j} i={i}");
                }
            }
        }
    }

    #[test]
    fn bjci_m1_tables() {
        let sol = solve_bjci_congruences(1).unwrap();
        let mut diag = sol.diagonal.clone();
        diag.sort();
        assert_eq!(diag, vec![(1, 2), (2, 0), (4, 1)]);
        assert_eq!(sol.antidiagonal, vec![(0, 3), (3, 4)]);
        assert!(solve_bjci_congruences(0).is_err());
        assert!(solve_bjci_congruences(5).is_err());
    }

    #[test]
    fn sigma_pair_solves_some_system() {
        for m in 1..=4u8 {
            let sol = solve_bjci_congruences(m).unwrap();
            assert!(!sol.diagonal.is_empty() && !sol.antidiagonal.is_empty());
            let j = (0..5u8).find(|j| (m * j) % 5 == 2).unwrap();
            assert!(sol.diagonal.contains(&(j, 0)) || sol.antidiagonal.contains(&(j, 0)));
        }
    }

    #[test]
    fn classify_examples() {
        let r = classify(&GroupSpec::new(275, &[25]).unwrap()).unwrap();
        assert_eq!(r.case, NormalizerCase::Good25);
        let s = r.sigma.as_ref().unwrap();
        assert_eq!((s.matrix.clone(), s.j, s.i), (pm(115, -2, -275, 5), 2, 3));
        assert_eq!(r.conjugation_level, 11);
        assert_eq!(r.atkin_lehner_generators, vec![1, 11, 25, 275]);

        let r = classify(&GroupSpec::new(175, &[25, 7]).unwrap()).unwrap();
        assert_eq!(r.case, NormalizerCase::Bad25);
        assert!(r.sigma.is_none());

        let r = classify(&GroupSpec::new(275, &[11]).unwrap()).unwrap();
        assert_eq!(r.case, NormalizerCase::NoSquare25);
        assert_eq!(r.conjugation_level, 275);
    }

    #[test]
    fn normalizes_examples() {
        let g = GroupSpec::new(275, &[25]).unwrap();
        let ctx = NormalizerContext::new(&g).unwrap();
        for e in arith::exact_divisors(275) {
            assert!(ctx.normalizes(&atkin_lehner(275, e).unwrap()));
        }
        assert!(ctx.normalizes(&sigma(275).unwrap().matrix));
        let bad = GroupSpec::new(175, &[25, 7]).unwrap();
        assert!(!normalizes(&sigma(175).unwrap().matrix, &bad).unwrap());
    }

    #[test]
    fn quotient_examples() {
        let q = quotient_group(&GroupSpec::new(275, &[25]).unwrap()).unwrap();
        assert_eq!(q.order(), 6);
        assert!(q.element_orders.contains(&3));
        assert!(q.is_latin_square());

        let q = quotient_group(&GroupSpec::new(30, &[6]).unwrap()).unwrap();
        assert_eq!(q.order(), 4);
        assert!(q.abelian);
        assert!(q.element_orders[1..].iter().all(|&o| o == 2));

        let q = quotient_group(&GroupSpec::new(275, &[25, 11]).unwrap()).unwrap();
        assert_eq!(q.order(), 3);
    }

    #[test]
    fn closure_cap_is_enforced() {
        let g = GroupSpec::new(30, &[]).unwrap();
        let gens: Vec<_> = [2, 3, 5].iter().map(|&d| atkin_lehner(30, d).unwrap()).collect();
        assert_eq!(
            quotient_from_generators(&g, &gens, 4),
            Err(Error::ClosureOverflow(4))
        );
    }

    #[test]
    fn delta_rep_examples() {
        assert!(delta_rep(1, 11, 5).unwrap().is_identity());
        let d = delta_rep(11, 11, 5).unwrap();
        assert_eq!(d, pm(11, 35, 55, 176));
        assert_eq!(d.determinant(), BigInt::from(11));
        let n = crate::bigpicture::upsilon_inverse_conjugate(&d, 5);
        assert_eq!(coset_of(&n, 275), Some(11));

        let d = delta_rep(2, 6, 1).unwrap();
        assert!(in_gamma0(&d.compose(&atkin_lehner(6, 2).unwrap().inverse()), 6));
        assert_eq!(delta_rep(5, 5, 5), Err(Error::NotSolvable { e: 5, modulus: BigInt::from(25) }));
        assert!(matches!(delta_rep(2, 4, 1), Err(Error::NotExactDivisor { .. })));
    }

    #[test]
    fn sprime_examples() {
        assert!(sprime_member(&ProjectiveMatrix::identity(), 275, &[5]).unwrap());
        // a c = 132 = 2 (mod 5)
        assert!(!sprime_member(&pm(12, 1, 11, 1), 275, &[5]).unwrap());
        assert!(sprime_member(&pm(11, 2, 16, 3), 275, &[5]).is_err());

        let w = atkin_lehner(275, 25).unwrap();
        let conj = upsilon_conjugate(&w, 5);
        assert!(sprime_member(&conj, 275, &[5]).unwrap());
    }

    #[test]
    fn twist_examples() {
        for q in [7u64, 11, 13, 19, 23, 29, 31] {
            assert_eq!(twist_commutes(q).unwrap(), twist_prediction(q), "q = {q}");
        }
        assert!(twist_commutes(10).is_err());
    }

    #[test]
    fn xstar_examples() {
        assert_eq!(xstar_square_aut(35), Ok(XStarAut::Cyclic3));
        assert_eq!(xstar_square_aut(7), Ok(XStarAut::Trivial));
        assert_eq!(xstar_square_aut(55), Ok(XStarAut::Cyclic3));
        assert!(xstar_square_aut(15).is_err());
        assert!(xstar_square_aut(49).is_err());
    }
}

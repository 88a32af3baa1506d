//! Conway's Big Picture: commensurability classes of lattices in Q^2.
//!
//! A class `L_{s,g/t}` is spanned by the rows `(s, g/t)` and `(0, 1)`. A matrix
//! acts by multiplying basis rows on the right, so `act(x, act(y, X))` equals
//! `act(compose(y, x), X)`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::arith;
use crate::congruence::{atkin_lehner, GeneratorSet, GroupSpec};
use crate::error::{Error, Result};
use crate::exact::{canonicalize, ProjectiveMatrix, RationalMatrix};

/// Canonical form `L_{s,g/t}` of a lattice class. `0 <= g < t`, `gcd(g, t) = 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeClass {
    s: BigRational,
    g: BigInt,
    t: BigInt,
}

type Vector = (BigRational, BigRational);

impl LatticeClass {
    /// `L_{s,g/t}`; `g` is reduced modulo `t` and the fraction brought to lowest terms.
    pub fn new(s: BigRational, g: BigInt, t: BigInt) -> Result<Self> {
        if !s.is_positive() || !t.is_positive() {
            return Err(Error::Parse("lattice class needs s > 0 and t > 0".into()));
        }
        let frac = BigRational::new(g.mod_floor(&t), t);
        Ok(LatticeClass {
            s,
            g: frac.numer().clone(),
            t: frac.denom().clone(),
        })
    }

    /// `L_{n,0}`.
    pub fn integral(n: u64) -> Self {
        LatticeClass {
            s: BigRational::from_integer(BigInt::from(n)),
            g: BigInt::zero(),
            t: BigInt::one(),
        }
    }

    pub fn s(&self) -> &BigRational {
        &self.s
    }

    pub fn g(&self) -> &BigInt {
        &self.g
    }

    pub fn t(&self) -> &BigInt {
        &self.t
    }

    /// The integer `s` of a class `L_{s,0}` with integral `s`.
    pub fn as_integral(&self) -> Option<u64> {
        if self.g.is_zero() && self.s.is_integer() {
            self.s.numer().to_u64()
        } else {
            None
        }
    }

    /// Basis rows as a matrix `P = (s, g/t; 0, 1)`.
    pub fn basis(&self) -> RationalMatrix {
        RationalMatrix::new(
            self.s.clone(),
            BigRational::new(self.g.clone(), self.t.clone()),
            BigRational::zero(),
            BigRational::one(),
        )
    }

    pub fn to_json(&self) -> Value {
        json!({
            "s": format!("{}/{}", self.s.numer(), self.s.denom()),
            "g": crate::exact::big_json(&self.g),
            "t": crate::exact::big_json(&self.t),
        })
    }
}

impl fmt::Display for LatticeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.g.is_zero() {
            write!(f, "L_{}", self.s)
        } else {
            write!(f, "L_{{{},{}/{}}}", self.s, self.g, self.t)
        }
    }
}

impl fmt::Debug for LatticeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("not a rational number: {text:?}"));
    let (n, d) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
    let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

/// Accepts `s` or `s:g/t`, where `s` may itself be a fraction `p/q`.
impl FromStr for LatticeClass {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let (s, frac) = match text.split_once(':') {
            Some((s, f)) => (s, Some(f)),
            None => (text, None),
        };
        let s = parse_rational(s)?;
        let (g, t) = match frac {
            Some(f) => {
                let q = parse_rational(f)?;
                (q.numer().clone(), q.denom().clone())
            }
            None => (BigInt::zero(), BigInt::one()),
        };
        LatticeClass::new(s, g, t)
    }
}

/// Canonical class of the lattice spanned by two rational vectors.
pub fn class_from_basis(v1: Vector, v2: Vector) -> Result<LatticeClass> {
    let det = &v1.0 * &v2.1 - &v1.1 * &v2.0;
    if det.is_zero() {
        return Err(Error::DegenerateBasis);
    }
    let denom = [&v1.0, &v1.1, &v2.0, &v2.1]
        .iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let int = |q: &BigRational| q.numer() * (&denom / q.denom());
    let mut r1 = [int(&v1.0), int(&v1.1)];
    let mut r2 = [int(&v2.0), int(&v2.1)];

    // Euclid on the first column until the second row starts with 0.
    while !r2[0].is_zero() {
        let q = r1[0].div_floor(&r2[0]);
        let next = [&r1[0] - &q * &r2[0], &r1[1] - &q * &r2[1]];
        r1 = std::mem::replace(&mut r2, next);
    }
    if r1[0].is_negative() {
        r1 = [-&r1[0], -&r1[1]];
    }
    if r2[1].is_negative() {
        r2 = [-&r2[0], -&r2[1]];
    }
    let (a1, b1, b2) = (&r1[0], &r1[1], &r2[1]);
    LatticeClass::new(BigRational::new(a1.clone(), b2.clone()), b1.mod_floor(b2), b2.clone())
}

fn class_from_matrix(m: &RationalMatrix) -> LatticeClass {
    class_from_basis((m.a.clone(), m.b.clone()), (m.c.clone(), m.d.clone()))
        .expect("invertible basis")
}

/// Image of `x` under `m`: the basis rows are multiplied by `m` on the right.
pub fn act(m: &ProjectiveMatrix, x: &LatticeClass) -> LatticeClass {
    class_from_matrix(&x.basis().mul(&RationalMatrix::from(m)))
}

/// Stabilizer criterion: `m` fixes `x` iff `P m P^-1` is in PSL_2(Z), with
/// `P` the basis matrix of `x`.
pub fn fixes_by_conjugation(m: &ProjectiveMatrix, x: &LatticeClass) -> bool {
    let p = x.basis();
    let conj = p.mul(&RationalMatrix::from(m)).mul(&p.adjugate());
    canonicalize(&conj)
        .expect("conjugate of a positive-determinant matrix")
        .determinant()
        .is_one()
}

/// Determinant of the primitive integer transition matrix between the bases.
pub fn hyperdistance(x: &LatticeClass, y: &LatticeClass) -> BigInt {
    let transition = y.basis().mul(&x.basis().adjugate());
    canonicalize(&transition)
        .expect("both bases are invertible")
        .determinant()
}

/// The classes fixed pointwise by Gamma_0(N) when 4 and 9 do not divide N:
/// `L_{e,0}` for every divisor `e`.
pub fn snake(level: u64) -> Result<Vec<LatticeClass>> {
    arith::check_level(level)?;
    Ok(arith::divisors(level)
        .into_iter()
        .map(LatticeClass::integral)
        .collect())
}

/// `{ act(w_d, x) : d in closure }` for `x` on the snake.
pub fn orbit(g: &GroupSpec, x: &LatticeClass) -> Result<BTreeSet<LatticeClass>> {
    let on_snake = x
        .as_integral()
        .is_some_and(|e| g.level().is_multiple_of(e));
    if !on_snake {
        return Err(Error::NotOnSnake(x.to_string(), g.level()));
    }
    g.closure()
        .elements()
        .map(|d| Ok(act(&atkin_lehner(g.level(), d)?, x)))
        .collect()
}

/// `Upsilon_u = diag(1, 1/u)`, stored as `(u, 0; 0, 1)`.
pub fn upsilon(u: u64) -> ProjectiveMatrix {
    ProjectiveMatrix::new(BigInt::from(u), 0, 0, 1).expect("u >= 1")
}

/// `Upsilon_u x Upsilon_u^-1`; the upper-right entry gains a factor `u`.
pub fn upsilon_conjugate(x: &ProjectiveMatrix, u: u64) -> ProjectiveMatrix {
    upsilon(u).conjugate(x)
}

/// `Upsilon_u^-1 x Upsilon_u`; the lower-left entry gains a factor `u`.
pub fn upsilon_inverse_conjugate(x: &ProjectiveMatrix, u: u64) -> ProjectiveMatrix {
    upsilon(u).inverse().conjugate(x)
}

pub fn conjugate_by_upsilon(gens: &GeneratorSet, u: u64) -> GeneratorSet {
    GeneratorSet::new(
        format!("Upsilon_{u} ({}) Upsilon_{u}^-1", gens.label),
        gens.members
            .iter()
            .map(|x| upsilon_conjugate(x, u))
            .collect(),
    )
}

/// Every class `L_{s,g/t}` with `su` integral and `su t^2 | u^2 M`.
pub fn fixed_class_candidates(u: u64, m: u64) -> Vec<LatticeClass> {
    let bound = u * u * m;
    let mut out = Vec::new();
    for t in (1..).take_while(|t| t * t <= bound) {
        if !bound.is_multiple_of(t * t) {
            continue;
        }
        for su in arith::divisors(bound / (t * t)) {
            let s = BigRational::new(BigInt::from(su), BigInt::from(u));
            for g in (0..t).filter(|&g| arith::gcd(g, t) == 1) {
                out.push(
                    LatticeClass::new(s.clone(), BigInt::from(g), BigInt::from(t))
                        .expect("positive s and t"),
                );
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Candidates fixed by every member of `gens`, sorted.
pub fn fixed_classes(gens: &GeneratorSet, u: u64, m: u64) -> Result<BTreeSet<LatticeClass>> {
    if u == 0 || m == 0 || arith::gcd(u, m) != 1 {
        return Err(Error::PreconditionViolation(format!(
            "fixed_classes needs positive coprime u and M (u = {u}, M = {m})"
        )));
    }
    Ok(fixed_class_candidates(u, m)
        .into_iter()
        .filter(|x| gens.members.iter().all(|g| act(g, x) == *x))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruence::{gamma0_generators, in_conjugated_gamma0};
    use crate::exact::RationalMatrix;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn cls(text: &str) -> LatticeClass {
        text.parse().unwrap()
    }

    #[test]
    fn basis_examples() {
        let one = class_from_basis((q(1, 1), q(0, 1)), (q(0, 1), q(1, 1))).unwrap();
        assert_eq!(one, LatticeClass::integral(1));
        let six = class_from_basis((q(0, 1), q(1, 1)), (q(6, 1), q(0, 1))).unwrap();
        assert_eq!(six, LatticeClass::integral(6));
        let half = class_from_basis((q(2, 1), q(1, 2)), (q(0, 1), q(1, 1))).unwrap();
        assert_eq!(half, cls("2:1/2"));
        assert_eq!(half.g(), &BigInt::from(1));
        assert_eq!(half.t(), &BigInt::from(2));
        assert_eq!(
            class_from_basis((q(1, 1), q(2, 1)), (q(2, 1), q(4, 1))),
            Err(Error::DegenerateBasis)
        );
    }

    #[test]
    fn scaling_does_not_change_class() {
        let a = class_from_basis((q(3, 7), q(1, 5)), (q(2, 3), q(-4, 1))).unwrap();
        let b = class_from_basis((q(30, 7), q(2, 1)), (q(20, 3), q(-40, 1))).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn action_examples() {
        let l1 = LatticeClass::integral(1);
        assert_eq!(act(&ProjectiveMatrix::identity(), &cls("3:2/7")), cls("3:2/7"));
        let w6 = atkin_lehner(6, 6).unwrap();
        assert_eq!(act(&w6, &l1), LatticeClass::integral(6));
        assert_eq!(act(&ProjectiveMatrix::from_i64(0, 1, -6, 0), &l1), LatticeClass::integral(6));
        assert_eq!(act(&ProjectiveMatrix::from_i64(1, 1, 0, 1), &l1), l1);
    }

    #[test]
    fn hyperdistance_examples() {
        let l = LatticeClass::integral;
        assert_eq!(hyperdistance(&l(1), &l(1)), BigInt::from(1));
        assert_eq!(hyperdistance(&l(1), &l(30)), BigInt::from(30));
        assert_eq!(hyperdistance(&l(2), &l(3)), BigInt::from(6));
        assert_eq!(hyperdistance(&l(3), &l(2)), BigInt::from(6));
        assert_eq!(hyperdistance(&l(1), &cls("1:1/2")), BigInt::from(4));
    }

    #[test]
    fn snake_examples() {
        let ints = |n| snake(n).unwrap().iter().map(|x| x.as_integral().unwrap()).collect::<Vec<_>>();
        assert_eq!(ints(6), vec![1, 2, 3, 6]);
        assert_eq!(ints(1), vec![1]);
        assert_eq!(ints(275), vec![1, 5, 11, 25, 55, 275]);
        assert_eq!(snake(36), Err(Error::LevelDivisibleBy4(36)));
        assert_eq!(snake(18), Err(Error::LevelDivisibleBy9(18)));
    }

    #[test]
    fn orbit_examples() {
        let l1 = LatticeClass::integral(1);
        let size = |gens: &[u64]| orbit(&GroupSpec::new(6, gens).unwrap(), &l1).unwrap().len();
        assert_eq!(size(&[]), 1);
        assert_eq!(size(&[2]), 2);
        assert_eq!(size(&[6]), 2);
        assert_eq!(size(&[2, 3]), 4);
        let g = GroupSpec::new(6, &[6]).unwrap();
        let o = orbit(&g, &l1).unwrap();
        assert!(o.contains(&LatticeClass::integral(6)));
        assert!(matches!(orbit(&g, &LatticeClass::integral(5)), Err(Error::NotOnSnake(..))));
    }

    #[test]
    fn upsilon_conjugation_examples() {
        let x = ProjectiveMatrix::from_i64(1, 5, 0, 1);
        assert_eq!(upsilon_conjugate(&x, 5), ProjectiveMatrix::from_i64(1, 25, 0, 1));
        assert_eq!(upsilon_conjugate(&x, 1), x);
        let back = upsilon_inverse_conjugate(&upsilon_conjugate(&x, 5), 5);
        assert_eq!(back, x);

        let w25 = atkin_lehner(25, 25).unwrap();
        let img = upsilon_conjugate(&w25, 5);
        assert_eq!(img.determinant(), BigInt::from(1));
        assert!(arith::divides(5, img.a()) && arith::divides(5, img.d()));

        for g in gamma0_generators(275).unwrap().members {
            assert!(in_conjugated_gamma0(&upsilon_conjugate(&g, 5), 11, 5));
        }
    }

    #[test]
    fn stabilizer_criterion_examples() {
        let t = ProjectiveMatrix::from_i64(1, 1, 0, 1);
        let x = cls("2:1/3");
        assert_eq!(fixes_by_conjugation(&t, &x), act(&t, &x) == x);
        let s = ProjectiveMatrix::from_i64(0, -1, 1, 0);
        assert!(fixes_by_conjugation(&s, &LatticeClass::integral(1)));
        assert!(!fixes_by_conjugation(&s, &LatticeClass::integral(2)));
        let p = RationalMatrix::from_integers(2, 0, 0, 1);
        assert_eq!(LatticeClass::integral(2).basis(), p);
    }

    #[test]
    fn fixed_class_examples() {
        let trivial = GeneratorSet::new("I", vec![ProjectiveMatrix::identity()]);
        let all: Vec<_> = fixed_classes(&trivial, 1, 1).unwrap().into_iter().collect();
        assert_eq!(all, vec![LatticeClass::integral(1)]);

        let g6 = gamma0_generators(6).unwrap();
        let fixed: Vec<_> = fixed_classes(&g6, 1, 6).unwrap().into_iter().collect();
        assert_eq!(fixed, snake(6).unwrap());
    }

    #[test]
    fn parse_and_json() {
        let x = cls("3/5:2/7");
        assert_eq!(x.to_string(), "L_{3/5,2/7}");
        assert_eq!(
            serde_json::to_string(&x.to_json()).unwrap(),
            r#"{"g":2,"s":"3/5","t":7}"#
        );
        assert_eq!(cls("4:9/7"), cls("4:2/7"));
        assert!("x".parse::<LatticeClass>().is_err());
        assert!("0".parse::<LatticeClass>().is_err());
    }
}

//! Exact projective 2x2 matrices.
//!
//! An element of the commensurator of PSL_2(Z) inside PSL_2(R) is stored as a
//! primitive integer matrix `M` with positive determinant; it stands for
//! `M / sqrt(det M)`. Two integer matrices describe the same element exactly
//! when they are rational multiples of each other, so after removing content
//! and fixing the sign, equality of elements is equality of entries.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Canonical primitive integer representative of an element of PGL_2(Q)^+
/// (or of PSL_2(R) after scaling by `1/sqrt(det)`).
///
/// Invariants: `det > 0`, `gcd(a, b, c, d) = 1`, and the first nonzero entry
/// in the order `a, b, c, d` is positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectiveMatrix {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

/// A 2x2 matrix over Q, only used as input to [`canonicalize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
    pub d: BigRational,
}

impl RationalMatrix {
    pub fn new(a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Self {
        RationalMatrix { a, b, c, d }
    }

    /// Convenience constructor from `(numerator, denominator)` pairs.
    pub fn from_fractions(entries: [(i64, i64); 4]) -> Self {
        let q = |(n, d): (i64, i64)| BigRational::new(BigInt::from(n), BigInt::from(d));
        RationalMatrix::new(q(entries[0]), q(entries[1]), q(entries[2]), q(entries[3]))
    }

    pub fn from_integers(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::from_fractions([(a, 1), (b, 1), (c, 1), (d, 1)])
    }

    pub fn determinant(&self) -> BigRational {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn mul(&self, other: &RationalMatrix) -> RationalMatrix {
        RationalMatrix {
            a: &self.a * &other.a + &self.b * &other.c,
            b: &self.a * &other.b + &self.b * &other.d,
            c: &self.c * &other.a + &self.d * &other.c,
            d: &self.c * &other.b + &self.d * &other.d,
        }
    }

    /// Inverse up to the scalar `det`, i.e. the adjugate.
    pub fn adjugate(&self) -> RationalMatrix {
        RationalMatrix {
            a: self.d.clone(),
            b: -self.b.clone(),
            c: -self.c.clone(),
            d: self.a.clone(),
        }
    }
}

impl From<&ProjectiveMatrix> for RationalMatrix {
    fn from(m: &ProjectiveMatrix) -> Self {
        let q = |x: &BigInt| BigRational::from_integer(x.clone());
        RationalMatrix::new(q(&m.a), q(&m.b), q(&m.c), q(&m.d))
    }
}

/// Reduce a rational matrix with positive determinant to its canonical
/// projective representative.
pub fn canonicalize(m: &RationalMatrix) -> Result<ProjectiveMatrix> {
    let det = m.determinant();
    if det.is_zero() {
        return Err(Error::ZeroDeterminant);
    }
    if det.is_negative() {
        return Err(Error::NegativeDeterminant);
    }
    let entries = [&m.a, &m.b, &m.c, &m.d];
    let denom = entries
        .iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = entries
        .iter()
        .map(|q| q.numer() * (&denom / q.denom()))
        .collect();
    Ok(ProjectiveMatrix::normalize(
        ints[0].clone(),
        ints[1].clone(),
        ints[2].clone(),
        ints[3].clone(),
    ))
}

impl ProjectiveMatrix {
    /// Build from integer entries. Fails on non-positive determinant.
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self> {
        let (a, b, c, d) = (a.into(), b.into(), c.into(), d.into());
        let det = &a * &d - &b * &c;
        if det.is_zero() {
            return Err(Error::ZeroDeterminant);
        }
        if det.is_negative() {
            return Err(Error::NegativeDeterminant);
        }
        Ok(Self::normalize(a, b, c, d))
    }

    /// Like [`ProjectiveMatrix::new`] for literals known to be valid.
    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new(a, b, c, d).expect("matrix literal with positive determinant")
    }

    pub fn identity() -> Self {
        ProjectiveMatrix {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    // Caller guarantees det > 0.
    fn normalize(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Self {
        let content = a.gcd(&b).gcd(&c).gcd(&d);
        let (mut a, mut b, mut c, mut d) = if content.is_one() {
            (a, b, c, d)
        } else {
            (&a / &content, &b / &content, &c / &content, &d / &content)
        };
        let leading_negative = [&a, &b, &c, &d]
            .into_iter()
            .find(|x| !x.is_zero())
            .is_some_and(|x| x.is_negative());
        if leading_negative {
            a = -a;
            b = -b;
            c = -c;
            d = -d;
        }
        ProjectiveMatrix { a, b, c, d }
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    /// Determinant of the canonical representative.
    pub fn determinant(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn compose(&self, other: &ProjectiveMatrix) -> ProjectiveMatrix {
        let a = &self.a * &other.a + &self.b * &other.c;
        let b = &self.a * &other.b + &self.b * &other.d;
        let c = &self.c * &other.a + &self.d * &other.c;
        let d = &self.c * &other.b + &self.d * &other.d;
        Self::normalize(a, b, c, d)
    }

    /// Projective inverse: the adjugate, which is primitive whenever `self` is.
    pub fn inverse(&self) -> ProjectiveMatrix {
        Self::normalize(
            self.d.clone(),
            -self.b.clone(),
            -self.c.clone(),
            self.a.clone(),
        )
    }

    /// `self * x * self^-1`.
    pub fn conjugate(&self, x: &ProjectiveMatrix) -> ProjectiveMatrix {
        self.compose(x).compose(&self.inverse())
    }

    pub fn pow(&self, k: u32) -> ProjectiveMatrix {
        let mut acc = ProjectiveMatrix::identity();
        for _ in 0..k {
            acc = acc.compose(self);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        *self == ProjectiveMatrix::identity()
    }

    /// Whether the element lies in PSL_2(Q), i.e. the determinant is a square.
    pub fn is_rational(&self) -> bool {
        crate::arith::is_square_big(&self.determinant())
    }

    /// `[[a, b], [c, d]]` with arbitrary-precision integers.
    pub fn to_json_entries(&self) -> Value {
        json!([[big_json(&self.a), big_json(&self.b)], [big_json(&self.c), big_json(&self.d)]])
    }

    /// `{"matrix": [[a, b], [c, d]], "det": n}`.
    pub fn to_json(&self) -> Value {
        json!({
            "matrix": self.to_json_entries(),
            "det": big_json(&self.determinant()),
        })
    }
}

/// Integer as an exact JSON number.
pub fn big_json(x: &BigInt) -> Value {
    let n: serde_json::Number = x
        .to_string()
        .parse()
        .expect("decimal integer is a valid JSON number");
    Value::Number(n)
}

pub fn compose_all<'a>(items: impl IntoIterator<Item = &'a ProjectiveMatrix>) -> ProjectiveMatrix {
    items
        .into_iter()
        .fold(ProjectiveMatrix::identity(), |acc, x| acc.compose(x))
}

impl fmt::Debug for ProjectiveMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{};{},{})", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Display for ProjectiveMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pm(a: i64, b: i64, c: i64, d: i64) -> ProjectiveMatrix {
        ProjectiveMatrix::from_i64(a, b, c, d)
    }

    #[test]
    fn canonicalize_examples() {
        let id = canonicalize(&RationalMatrix::from_integers(1, 0, 0, 1)).unwrap();
        assert!(id.is_identity());
        assert_eq!(id.determinant(), BigInt::from(1));

        let ups = canonicalize(&RationalMatrix::from_fractions([(1, 1), (0, 1), (0, 1), (1, 5)]))
            .unwrap();
        assert_eq!(ups, pm(5, 0, 0, 1));
        assert_eq!(ups.determinant(), BigInt::from(5));

        let content = canonicalize(&RationalMatrix::from_integers(10, 0, 0, 2)).unwrap();
        assert_eq!(content, pm(5, 0, 0, 1));

        let sigma = canonicalize(&RationalMatrix::from_integers(-115, 2, 275, -5)).unwrap();
        assert_eq!(sigma.entries().map(|x| x.clone()), [115, -2, -275, 5].map(BigInt::from));
        assert_eq!(sigma.determinant(), BigInt::from(25));
    }

    #[test]
    fn canonicalize_rejects_bad_determinants() {
        assert_eq!(
            canonicalize(&RationalMatrix::from_integers(1, 2, 2, 4)),
            Err(Error::ZeroDeterminant)
        );
        assert_eq!(
            canonicalize(&RationalMatrix::from_integers(0, 1, 1, 0)),
            Err(Error::NegativeDeterminant)
        );
    }

    #[test]
    fn sigma_square_drops_content_five() {
        let sigma = pm(115, -2, -275, 5);
        let sq = sigma.compose(&sigma);
        assert_eq!(sq, pm(2755, -48, -6600, 115));
        assert_eq!(sq.determinant(), BigInt::from(25));
        let cube = sq.compose(&sigma);
        assert_eq!(cube, pm(13201, -230, -31625, 551));
        assert_eq!(cube.determinant(), BigInt::from(1));
    }

    #[test]
    fn inverse_examples() {
        assert!(ProjectiveMatrix::identity().inverse().is_identity());
        assert_eq!(pm(5, 0, 0, 1).inverse(), pm(1, 0, 0, 5));
        let sigma = pm(115, -2, -275, 5);
        assert_eq!(sigma.inverse(), pm(5, 2, 275, 115));
        assert!(sigma.compose(&sigma.inverse()).is_identity());
        assert!(sigma.inverse().compose(&sigma).is_identity());
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(pm(2, 1, 6, 4).determinant(), BigInt::from(2));
        assert_eq!(pm(115, -2, -275, 5).determinant(), BigInt::from(25));
    }

    #[test]
    fn rationality_is_square_determinant() {
        assert!(pm(115, -2, -275, 5).is_rational());
        assert!(!pm(2, 1, 6, 4).is_rational());
        assert!(pm(1, 1, 0, 1).is_rational());
    }

    #[test]
    fn sign_normalization_handles_leading_zero() {
        // S = (0,-1;1,0) has first nonzero entry b.
        let s = pm(0, -1, 1, 0);
        assert_eq!(s.entries().map(|x| x.clone()), [0, 1, -1, 0].map(BigInt::from));
        assert_eq!(s.compose(&s), ProjectiveMatrix::identity());
    }

    #[test]
    fn json_shape() {
        let v = pm(115, -2, -275, 5).to_json();
        assert_eq!(v.to_string(), r#"{"det":25,"matrix":[[115,-2],[-275,5]]}"#);
    }
}

//! Gamma_0(N), Atkin-Lehner involutions and the exact-divisor group B(N).

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::One;
use rand::Rng;
use serde_json::{json, Value};

use crate::arith::{self, divides};
use crate::error::{Error, Result};
use crate::exact::ProjectiveMatrix;

/// A subgroup of the exact divisors of `level` under `d1 * d2 = d1 d2 / (d1, d2)^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorSubgroup {
    level: u64,
    elements: BTreeSet<u64>,
}

impl DivisorSubgroup {
    pub fn level(&self) -> u64 {
        self.level
    }

    /// Sorted ascending, always starts with 1.
    pub fn elements(&self) -> impl Iterator<Item = u64> + '_ {
        self.elements.iter().copied()
    }

    pub fn contains(&self, d: u64) -> bool {
        self.elements.contains(&d)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The whole of B(N).
    pub fn full(level: u64) -> Result<Self> {
        divisor_closure(level, &arith::exact_divisors(level))
    }
}

/// The group `<Gamma_0(N), w_d : d in gens>` together with the flags that
/// drive classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    level: u64,
    generator_divisors: Vec<u64>,
    closure: DivisorSubgroup,
    contains_25: bool,
    all_pm1_mod5: bool,
}

impl GroupSpec {
    /// Rejects levels divisible by 4 or 9 and generators that are not exact
    /// divisors of the level.
    pub fn new(level: u64, gens: &[u64]) -> Result<Self> {
        arith::check_level(level)?;
        let closure = divisor_closure(level, gens)?;
        let mut generator_divisors: Vec<u64> = gens.to_vec();
        generator_divisors.sort_unstable();
        generator_divisors.dedup();
        let contains_25 = closure.contains(25);
        let all_pm1_mod5 = closure.elements().all(|d| {
            let r = (d / arith::gcd(25, d)) % 5;
            r == 1 || r == 4
        });
        Ok(GroupSpec {
            level,
            generator_divisors,
            closure,
            contains_25,
            all_pm1_mod5,
        })
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn generator_divisors(&self) -> &[u64] {
        &self.generator_divisors
    }

    pub fn closure(&self) -> &DivisorSubgroup {
        &self.closure
    }

    pub fn contains_25(&self) -> bool {
        self.contains_25
    }

    pub fn all_pm1_mod5(&self) -> bool {
        self.all_pm1_mod5
    }

    /// Perfect squares > 1 in the closure.
    pub fn square_divisors(&self) -> Vec<u64> {
        self.closure
            .elements()
            .filter(|&d| d > 1 && arith::is_square(d))
            .collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "N": self.level,
            "gens": self.generator_divisors,
            "closure": self.closure.elements().collect::<Vec<_>>(),
        })
    }
}

/// Labelled list of group elements, e.g. a generating set of a conjugated group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    pub label: String,
    pub members: Vec<ProjectiveMatrix>,
}

impl GeneratorSet {
    pub fn new(label: impl Into<String>, members: Vec<ProjectiveMatrix>) -> Self {
        GeneratorSet {
            label: label.into(),
            members,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "label": self.label,
            "members": self.members.iter().map(|m| m.to_json_entries()).collect::<Vec<_>>(),
        })
    }
}

pub fn in_gamma0(x: &ProjectiveMatrix, level: u64) -> bool {
    x.determinant().is_one() && divides(level, x.c())
}

fn check_exact(level: u64, d: u64) -> Result<()> {
    if level == 0 {
        return Err(Error::InvalidLevel);
    }
    if !arith::is_exact_divisor(level, d) {
        return Err(Error::NotExactDivisor { n: level, d });
    }
    Ok(())
}

/// Representative `(d x, y; N, d)` of the coset `w_d Gamma_0(N)`, with the
/// least nonnegative `x` solving `d x - (N/d) y = 1`. For `d = 1` this is the
/// identity.
pub fn atkin_lehner(level: u64, d: u64) -> Result<ProjectiveMatrix> {
    check_exact(level, d)?;
    if d == 1 {
        return Ok(ProjectiveMatrix::identity());
    }
    let m = BigInt::from(level / d);
    let db = BigInt::from(d);
    let x = arith::mod_inverse(&db, &m).expect("d is a unit modulo N/d");
    let y = (&db * &x - BigInt::one()) / &m;
    ProjectiveMatrix::new(&db * &x, y, BigInt::from(level), db)
}

pub fn star(level: u64, d1: u64, d2: u64) -> Result<u64> {
    check_exact(level, d1)?;
    check_exact(level, d2)?;
    let g = arith::gcd(d1, d2);
    Ok(d1 / g * (d2 / g))
}

/// Smallest `*`-closed set containing 1 and `gens`.
pub fn divisor_closure(level: u64, gens: &[u64]) -> Result<DivisorSubgroup> {
    for &g in gens {
        check_exact(level, g)?;
    }
    let mut elements = BTreeSet::from([1u64]);
    for &g in gens {
        if elements.contains(&g) {
            continue;
        }
        let products: Vec<u64> = elements
            .iter()
            .map(|&e| star(level, e, g).expect("closure stays inside B(N)"))
            .collect();
        elements.extend(products);
    }
    Ok(DivisorSubgroup { level, elements })
}

/// `Some(d)` iff `x` lies in `w_d Gamma_0(N)`, `None` iff `x` is outside
/// `Gamma_0^*(N)`.
///
/// For a primitive matrix the coset is read off directly: `x` has the shape
/// `(d*, *; N*, d*)` with determinant `d`, `d || N`.
pub fn coset_of(x: &ProjectiveMatrix, level: u64) -> Option<u64> {
    let det = u64::try_from(x.determinant()).ok()?;
    if !arith::is_exact_divisor(level, det) {
        return None;
    }
    (divides(det, x.a()) && divides(det, x.d()) && divides(level, x.c())).then_some(det)
}

pub fn in_extended_group(x: &ProjectiveMatrix, g: &GroupSpec) -> bool {
    coset_of(x, g.level).is_some_and(|d| g.closure.contains(d))
}

/// `S = (0,-1;1,0)`.
pub fn generator_s() -> ProjectiveMatrix {
    ProjectiveMatrix::from_i64(0, -1, 1, 0)
}

/// `T = (1,1;0,1)`.
pub fn generator_t() -> ProjectiveMatrix {
    ProjectiveMatrix::from_i64(1, 1, 0, 1)
}

/// Right action of PSL_2(Z) on P^1(Z/N), i.e. on the cosets
/// `Gamma_0(N) \ PSL_2(Z)`, as permutation tables for `S` and `T`.
#[derive(Clone, Debug)]
pub struct CosetAction {
    pub level: u64,
    /// Normalized pairs `(c : d)`; index 0 is `(0 : 1)`, the coset of Gamma_0(N).
    pub points: Vec<(u64, u64)>,
    pub s_action: Vec<usize>,
    pub t_action: Vec<usize>,
    /// `transversal[p]` has bottom row equivalent to `points[p]`.
    pub transversal: Vec<ProjectiveMatrix>,
}

impl CosetAction {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Number of points reachable from the base point along S and T edges.
    pub fn orbit_size_from_base(&self) -> usize {
        let mut seen = vec![false; self.len()];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(p) = queue.pop_front() {
            for q in [self.s_action[p], self.t_action[p]] {
                if !seen[q] {
                    seen[q] = true;
                    count += 1;
                    queue.push_back(q);
                }
            }
        }
        count
    }
}

/// Canonical scaling of a point of P^1(Z/N): least pair over all unit multiples.
struct P1Normalizer {
    level: u64,
    units: Vec<u64>,
}

impl P1Normalizer {
    fn new(level: u64) -> Self {
        let units = (0..level.max(1))
            .filter(|&u| arith::gcd(u, level) == 1)
            .collect();
        P1Normalizer { level, units }
    }

    fn normalize(&self, c: u64, d: u64) -> (u64, u64) {
        let n = self.level;
        self.units
            .iter()
            .map(|&u| ((u * c) % n, (u * d) % n))
            .min()
            .expect("at least one unit")
    }
}

pub fn coset_action(level: u64) -> Result<CosetAction> {
    if level == 0 {
        return Err(Error::InvalidLevel);
    }
    let norm = P1Normalizer::new(level);
    let n = level;
    let start = norm.normalize(0, 1 % n);
    let mut index: HashMap<(u64, u64), usize> = HashMap::from([(start, 0)]);
    let mut points = vec![start];
    let mut transversal = vec![ProjectiveMatrix::identity()];
    let mut s_action = Vec::new();
    let mut t_action = Vec::new();
    let s = generator_s();
    let t = generator_t();

    let mut p = 0;
    while p < points.len() {
        let (c, d) = points[p];
        // (c, d) S = (d, -c); (c, d) T = (c, c + d)
        let images = [
            norm.normalize(d, (n - c) % n),
            norm.normalize(c, (c + d) % n),
        ];
        for (k, img) in images.into_iter().enumerate() {
            let q = match index.get(&img) {
                Some(&q) => q,
                None => {
                    let q = points.len();
                    index.insert(img, q);
                    points.push(img);
                    let g = if k == 0 { &s } else { &t };
                    transversal.push(transversal[p].compose(g));
                    q
                }
            };
            if k == 0 {
                s_action.push(q);
            } else {
                t_action.push(q);
            }
        }
        p += 1;
    }
    Ok(CosetAction {
        level,
        points,
        s_action,
        t_action,
        transversal,
    })
}

/// Schreier generators `r_p g r_{pg}^{-1}` of Gamma_0(N), with trivial ones
/// and inverses of earlier ones dropped.
pub fn gamma0_generators(level: u64) -> Result<GeneratorSet> {
    let action = coset_action(level)?;
    let gens = [generator_s(), generator_t()];
    let mut seen = HashSet::new();
    let mut members = Vec::new();
    for p in 0..action.len() {
        for (k, g) in gens.iter().enumerate() {
            let q = if k == 0 {
                action.s_action[p]
            } else {
                action.t_action[p]
            };
            let h = action.transversal[p]
                .compose(g)
                .compose(&action.transversal[q].inverse());
            if h.is_identity() || seen.contains(&h) {
                continue;
            }
            seen.insert(h.inverse());
            seen.insert(h.clone());
            members.push(h);
        }
    }
    if members.is_empty() {
        members.push(ProjectiveMatrix::identity());
    }
    Ok(GeneratorSet::new(format!("Gamma0({level})"), members))
}

/// Product of `len` random generators or their inverses.
pub fn random_word<R: Rng>(gens: &[ProjectiveMatrix], len: usize, rng: &mut R) -> ProjectiveMatrix {
    let mut acc = ProjectiveMatrix::identity();
    if gens.is_empty() {
        return acc;
    }
    for _ in 0..len {
        let g = &gens[rng.gen_range(0..gens.len())];
        acc = if rng.gen_bool(0.5) {
            acc.compose(g)
        } else {
            acc.compose(&g.inverse())
        };
    }
    acc
}

/// Whether `x` is an integer matrix with `b = 0 (mod u)` and `c = 0 (mod m u)`,
/// determinant one. This is the group obtained by conjugating Gamma_0(m u^2)
/// by `diag(1, 1/u)`.
pub fn in_conjugated_gamma0(x: &ProjectiveMatrix, m: u64, u: u64) -> bool {
    x.determinant().is_one() && divides(u, x.b()) && divides(m * u, x.c())
}

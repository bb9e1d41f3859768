//! Truncated elements of the quantum affine space: formal sums of
//! monomials `y^alpha` (`alpha` in N^n) with coefficients in Q(v), multiplied
//! by `y^alpha * y^beta = v^{lambda(alpha, beta)} * y^{alpha + beta}`.

use super::coeff::QCoefficient;
use super::poly::Poly;
use crate::error::{Error, Result};
use crate::quiver::Quiver;
use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector, ordered by total degree and then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Exponent(Vec<u32>);

impl Exponent {
    pub fn new(v: Vec<u32>) -> Self {
        Exponent(v)
    }

    pub fn zero(n: usize) -> Self {
        Exponent(vec![0; n])
    }

    /// The `i`-th unit vector (0-based).
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        Exponent(v)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    fn add(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn scaled(&self, k: u32) -> Exponent {
        Exponent(self.0.iter().map(|a| a * k).collect())
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Integer antisymmetric form `lambda(e_i, e_j)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Lambda {
    n: usize,
    entries: Vec<i64>,
}

impl Lambda {
    pub fn zero(n: usize) -> Self {
        Lambda {
            n,
            entries: vec![0; n * n],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotSquare);
        }
        for i in 0..n {
            for j in 0..n {
                if rows[i][j] != -rows[j][i] {
                    return Err(Error::NotSkewSymmetric { i: i + 1, j: j + 1 });
                }
            }
        }
        Ok(Lambda {
            n,
            entries: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.n).map(<[i64]>::to_vec).collect()
    }

    /// `lambda(alpha, beta) = sum_ij alpha_i lambda_ij beta_j`.
    pub fn pair(&self, alpha: &Exponent, beta: &Exponent) -> i64 {
        let mut s = 0i64;
        for (i, &a) in alpha.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let row = &self.entries[i * self.n..(i + 1) * self.n];
            for (j, &b) in beta.0.iter().enumerate() {
                if b != 0 {
                    s += i64::from(a) * row[j] * i64::from(b);
                }
            }
        }
        s
    }
}

/// The form attached to a quiver: `lambda(e_i, e_j) = b_ij`, so that an arrow
/// `1 -> 2` gives `y_1 y_2 = q y_2 y_1`.
pub fn lambda_of(q: &Quiver) -> Lambda {
    let n = q.n();
    Lambda {
        n,
        entries: (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| q.b(i, j))
            .collect(),
    }
}

/// A series truncated at total degree `cap`.
#[derive(Clone, PartialEq, Eq)]
pub struct QuantumSeries {
    n: usize,
    cap: u32,
    lambda: Lambda,
    terms: BTreeMap<Exponent, QCoefficient>,
}

/// First exponent at which two series differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Difference {
    pub exponent: Exponent,
    pub left: QCoefficient,
    pub right: QCoefficient,
}

impl QuantumSeries {
    pub fn zero(lambda: &Lambda, cap: u32) -> Self {
        QuantumSeries {
            n: lambda.n(),
            cap,
            lambda: lambda.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(lambda: &Lambda, cap: u32) -> Self {
        Self::monomial(lambda, cap, Exponent::zero(lambda.n()), QCoefficient::one())
    }

    /// `c * y^alpha`, or zero if `|alpha|` exceeds the cap.
    pub fn monomial(lambda: &Lambda, cap: u32, alpha: Exponent, c: QCoefficient) -> Self {
        assert_eq!(alpha.0.len(), lambda.n(), "exponent length");
        let mut s = Self::zero(lambda, cap);
        if alpha.degree() <= cap && !c.is_zero() {
            s.terms.insert(alpha, c);
        }
        s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn lambda(&self) -> &Lambda {
        &self.lambda
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &QCoefficient)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, alpha: &[u32]) -> QCoefficient {
        self.terms
            .get(&Exponent(alpha.to_vec()))
            .cloned()
            .unwrap_or_else(QCoefficient::zero)
    }

    /// Drops all terms above `cap` and lowers the cap.
    pub fn truncate(&self, cap: u32) -> Self {
        let cap = cap.min(self.cap);
        let mut out = Self::zero(&self.lambda, cap);
        out.terms = self
            .terms
            .iter()
            .filter(|(e, _)| e.degree() <= cap)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        out
    }

    pub fn constant_term(&self) -> QCoefficient {
        self.coeff(&vec![0; self.n])
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::SeriesMismatch("variable count"));
        }
        if self.cap != other.cap {
            return Err(Error::SeriesMismatch("truncation degree"));
        }
        if self.lambda != other.lambda {
            return Err(Error::SeriesMismatch("commutation form"));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.accumulate(e.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&QCoefficient::from_int(-1)))
    }

    pub fn scale(&self, c: &QCoefficient) -> Self {
        let mut out = Self::zero(&self.lambda, self.cap);
        if c.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect();
        out
    }

    fn accumulate(&mut self, e: Exponent, c: &QCoefficient) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c.clone());
                }
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Twisted product, truncated at the common cap.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let cap = self.cap;
        // Group contributions by output exponent, then sum each group.
        let mut groups: BTreeMap<Exponent, Vec<(&QCoefficient, &QCoefficient, i64)>> =
            BTreeMap::new();
        for (a, ca) in &self.terms {
            let da = a.degree();
            for (b, cb) in &other.terms {
                if da + b.degree() > cap {
                    continue;
                }
                let twist = self.lambda.pair(a, b);
                groups.entry(a.add(b)).or_default().push((ca, cb, twist));
            }
        }
        let summed: Vec<(Exponent, QCoefficient)> = groups
            .into_par_iter()
            .map(|(e, parts)| (e, sum_products(&parts)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let mut out = Self::zero(&self.lambda, cap);
        out.terms = summed.into_iter().collect();
        Ok(out)
    }

    /// Two-sided inverse, computed degree by degree.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.constant_term();
        if c0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let c0_inv = c0.inv()?;
        let zero = Exponent::zero(self.n);
        let tail: Vec<(&Exponent, &QCoefficient)> =
            self.terms.iter().filter(|(e, _)| !e.is_zero()).collect();
        let mut out = Self::one(&self.lambda, self.cap).scale(&c0_inv);
        // (self * out)_gamma = 0 for gamma != 0:
        // c0 * out_gamma = -sum_{alpha != 0} a_alpha out_{gamma - alpha} v^{lambda(alpha, gamma - alpha)}
        for d in 1..=self.cap {
            let mut groups: BTreeMap<Exponent, Vec<(&QCoefficient, &QCoefficient, i64)>> =
                BTreeMap::new();
            for &(a, ca) in &tail {
                let da = a.degree();
                if da > d {
                    continue;
                }
                for (b, cb) in out.terms.range(..) {
                    if b.degree() + da != d {
                        continue;
                    }
                    let twist = self.lambda.pair(a, b);
                    groups.entry(a.add(b)).or_default().push((ca, cb, twist));
                }
            }
            let new_terms: Vec<(Exponent, QCoefficient)> = groups
                .into_par_iter()
                .map(|(e, parts)| (e, -&(&sum_products(&parts) * &c0_inv)))
                .filter(|(_, c)| !c.is_zero())
                .collect();
            for (e, c) in new_terms {
                debug_assert!(e != zero);
                out.terms.insert(e, c);
            }
        }
        Ok(out)
    }

    /// First exponent (in total-degree order) where the series differ.
    pub fn first_difference(&self, other: &Self) -> Result<Option<Difference>> {
        self.check_compatible(other)?;
        let keys: std::collections::BTreeSet<&Exponent> =
            self.terms.keys().chain(other.terms.keys()).collect();
        for e in keys {
            let l = self.terms.get(e).cloned().unwrap_or_default();
            let r = other.terms.get(e).cloned().unwrap_or_default();
            if l != r {
                return Ok(Some(Difference {
                    exponent: e.clone(),
                    left: l,
                    right: r,
                }));
            }
        }
        Ok(None)
    }

    /// Serialisable term list, ordered by total degree then lexicographically.
    pub fn to_terms(&self) -> Vec<SeriesTerm> {
        self.terms
            .iter()
            .map(|(e, c)| SeriesTerm {
                exp: e.0.clone(),
                num: rationals_to_strings(c.numerator()),
                den: rationals_to_strings(c.denominator()),
            })
            .collect()
    }

    pub fn from_terms(lambda: &Lambda, cap: u32, terms: &[SeriesTerm]) -> Result<Self> {
        let mut s = Self::zero(lambda, cap);
        for t in terms {
            if t.exp.len() != s.n {
                return Err(Error::SeriesMismatch("variable count"));
            }
            let e = Exponent(t.exp.clone());
            if e.degree() > cap {
                continue;
            }
            let c = QCoefficient::new(strings_to_poly(&t.num)?, strings_to_poly(&t.den)?)?;
            s.accumulate(e, &c);
        }
        Ok(s)
    }
}

/// `sum a * b * v^twist`, adding numerators directly when denominators agree.
fn sum_products(parts: &[(&QCoefficient, &QCoefficient, i64)]) -> QCoefficient {
    let mut by_den: Vec<(Poly, Poly)> = Vec::new();
    for &(a, b, twist) in parts {
        let p = (a * b).mul_v_pow(twist);
        if p.is_zero() {
            continue;
        }
        match by_den.iter_mut().find(|(d, _)| d == p.denominator()) {
            Some((_, num)) => *num = &*num + p.numerator(),
            None => by_den.push((p.denominator().clone(), p.numerator().clone())),
        }
    }
    by_den
        .into_iter()
        .map(|(d, n)| QCoefficient::new(n, d).expect("nonzero denominator"))
        .fold(QCoefficient::zero(), |acc, x| &acc + &x)
}

fn rationals_to_strings(p: &Poly) -> Vec<String> {
    p.coeffs()
        .iter()
        .map(|c| format!("{}/{}", c.numer(), c.denom()))
        .collect()
}

fn strings_to_poly(items: &[String]) -> Result<Poly> {
    let mut coeffs = Vec::with_capacity(items.len());
    for s in items {
        let (n, d) = s.split_once('/').unwrap_or((s.as_str(), "1"));
        let parse = |x: &str| {
            x.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("bad rational `{s}`")))
        };
        let d = parse(d)?;
        if d == BigInt::from(0) {
            return Err(Error::DivisionByZero);
        }
        coeffs.push(BigRational::new(parse(n)?, d));
    }
    Ok(Poly::from_coeffs(coeffs))
}

/// One serialised term: exponent and coefficient lists of `v^0, v^1, ...`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesTerm {
    pub exp: Vec<u32>,
    pub num: Vec<String>,
    pub den: Vec<String>,
}

impl fmt::Debug for QuantumSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

/// Coefficient of `y^k` in the quantum dilogarithm:
/// `v^{k^2} / prod_{i<k} (v^{2k} - v^{2i})`.
pub fn dilog_coefficient(k: u32) -> QCoefficient {
    if k == 0 {
        return QCoefficient::one();
    }
    let k = k as usize;
    let mut den = Poly::one();
    for i in 0..k {
        let mut c = vec![0i64; 2 * k + 1];
        c[2 * k] = 1;
        c[2 * i] -= 1;
        den = &den * &Poly::from_i64(&c);
    }
    let num = Poly::monomial(BigRational::from_integer(1.into()), k * k);
    QCoefficient::new(num, den).expect("nonzero denominator")
}

/// `E(y^beta)` for `sign = 1`, its inverse for `sign = -1`, truncated at `cap`.
pub fn dilog_series(lambda: &Lambda, cap: u32, beta: &Exponent, sign: i8) -> Result<QuantumSeries> {
    if beta.is_zero() {
        return Err(Error::ZeroExponent);
    }
    if beta.0.len() != lambda.n() {
        return Err(Error::SeriesMismatch("variable count"));
    }
    let mut s = QuantumSeries::zero(lambda, cap);
    let mut k = 0u32;
    while k * beta.degree() <= cap {
        // lambda(beta, beta) = 0, so powers of y^beta carry no twist
        s.terms.insert(beta.scaled(k), dilog_coefficient(k));
        k += 1;
    }
    match sign {
        1 => Ok(s),
        -1 => s.inverse(),
        _ => panic!("sign must be 1 or -1"),
    }
}

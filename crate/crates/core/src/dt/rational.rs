//! Commutative multivariate polynomials over Z and reduced rational
//! functions built on them.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Sparse polynomial in `nvars` variables with integer coefficients.
/// Monomials are compared lexicographically, so the last key is the
/// leading term.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn monomial(exp: Vec<u32>, c: BigInt) -> Self {
        let mut p = Self::zero(exp.len());
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    /// The variable `x_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, BigInt::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(e, c)| e.iter().all(|&x| x == 0) && c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    fn leading(&self) -> Option<(&Vec<u32>, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                out = &out * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        out
    }


    fn integer_content(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        let (de, dc) = d.leading()?;
        let mut q = Self::zero(self.nvars);
        let mut r = self.clone();
        while let Some((re, rc)) = r.leading() {
            if re.iter().zip(de).any(|(a, b)| a < b) {
                return None;
            }
            let (c, rem) = rc.div_rem(dc);
            if !rem.is_zero() {
                return None;
            }
            let e: Vec<u32> = re.iter().zip(de).map(|(a, b)| a - b).collect();
            let t = Self::monomial(e, c);
            r = &r - &(&t * d);
            q = &q + &t;
        }
        Some(q)
    }

    fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|e| e[v]).max().unwrap_or(0)
    }

    /// Coefficients with respect to `x_v`, indexed by degree.
    fn coefficients_in(&self, v: usize) -> Vec<MPoly> {
        let mut out = vec![Self::zero(self.nvars); self.degree_in(v) as usize + 1];
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let d = std::mem::take(&mut e2[v]);
            out[d as usize].terms.insert(e2, c.clone());
        }
        out
    }

    fn from_coefficients_in(nvars: usize, v: usize, coeffs: &[MPoly]) -> Self {
        let mut out = Self::zero(nvars);
        for (d, c) in coeffs.iter().enumerate() {
            for (e, x) in &c.terms {
                let mut e2 = e.clone();
                e2[v] = d as u32;
                out.terms.insert(e2, x.clone());
            }
        }
        out
    }

    /// Sign-normalised so that the leading coefficient is positive.
    fn normalized(self) -> Self {
        match self.leading() {
            Some((_, c)) if c.is_negative() => -self,
            _ => self,
        }
    }

    /// Greatest common divisor with positive leading coefficient.
    pub fn gcd(&self, other: &MPoly) -> MPoly {
        gcd_rec(self, other).normalized()
    }
}

fn content_in(p: &MPoly, v: usize) -> MPoly {
    let mut g = MPoly::zero(p.nvars);
    for c in p.coefficients_in(v) {
        if c.is_zero() {
            continue;
        }
        g = gcd_rec(&g, &c);
        if g.terms.len() == 1 && g.terms.values().all(|x| x.abs().is_one()) && g.total_degree() == 0 {
            break;
        }
    }
    g.normalized()
}

fn gcd_rec(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    let nvars = a.nvars;
    let v = (0..nvars).find(|&v| a.degree_in(v) > 0 || b.degree_in(v) > 0);
    let Some(v) = v else {
        return MPoly::constant(nvars, a.integer_content().gcd(&b.integer_content()));
    };
    match (a.degree_in(v) > 0, b.degree_in(v) > 0) {
        (true, false) => return gcd_rec(&content_in(a, v), b),
        (false, true) => return gcd_rec(a, &content_in(b, v)),
        _ => {}
    }
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let c = gcd_rec(&ca, &cb);
    let mut f = a.div_exact(&ca).expect("content divides");
    let mut g = b.div_exact(&cb).expect("content divides");
    if f.degree_in(v) < g.degree_in(v) {
        std::mem::swap(&mut f, &mut g);
    }
    // primitive pseudo-remainder sequence in x_v
    while !g.is_zero() && g.degree_in(v) > 0 {
        let r = pseudo_rem(&f, &g, v);
        f = g;
        g = if r.is_zero() {
            r
        } else {
            let cr = content_in(&r, v);
            r.div_exact(&cr).expect("content divides")
        };
    }
    let prim = if g.is_zero() {
        let cf = content_in(&f, v);
        f.div_exact(&cf).expect("content divides")
    } else {
        // g is a nonzero constant in x_v: the primitive parts are coprime
        MPoly::one(nvars)
    };
    &c * &prim
}

fn pseudo_rem(f: &MPoly, g: &MPoly, v: usize) -> MPoly {
    let nvars = f.nvars;
    let gc = g.coefficients_in(v);
    let dg = gc.len() - 1;
    let lg = gc[dg].clone();
    let mut r = f.coefficients_in(v);
    while r.len() > dg && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        if lr.is_zero() {
            r.pop();
            continue;
        }
        for c in r.iter_mut() {
            *c = &*c * &lg;
        }
        for (i, gi) in gc.iter().enumerate() {
            let idx = dr - dg + i;
            r[idx] = &r[idx] - &(gi * &lr);
        }
        debug_assert!(r[dr].is_zero());
        r.pop();
    }
    while r.last().is_some_and(MPoly::is_zero) {
        r.pop();
    }
    MPoly::from_coefficients_in(nvars, v, &r)
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            let entry = out.terms.entry(e.clone()).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                out.terms.remove(e);
            }
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self + &(-rhs)
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let entry = out.terms.entry(e).or_insert_with(BigInt::zero);
                *entry += ca * cb;
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let is_const = e.iter().all(|&x| x == 0);
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if is_const || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            let mut first = is_const || !mag.is_one();
            for (v, &d) in e.iter().enumerate() {
                if d == 0 {
                    continue;
                }
                if first {
                    write!(f, "*")?;
                }
                first = true;
                write!(f, "y{}", v + 1)?;
                if d > 1 {
                    write!(f, "^{d}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A reduced fraction `num / den` with `den` having positive leading
/// coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: MPoly,
    den: MPoly,
}

impl RatFunc {
    pub fn new(num: MPoly, den: MPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: MPoly, den: MPoly) -> Self {
        let nvars = num.nvars;
        if num.is_zero() {
            return RatFunc {
                num,
                den: MPoly::one(nvars),
            };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides"),
                den.div_exact(&g).expect("gcd divides"),
            )
        };
        if den.leading().is_some_and(|(_, c)| c.is_negative()) {
            num = -num;
            den = -den;
        }
        RatFunc { num, den }
    }

    pub fn from_poly(p: MPoly) -> Self {
        let nvars = p.nvars;
        RatFunc {
            num: p,
            den: MPoly::one(nvars),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_poly(MPoly::one(nvars))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::from_poly(MPoly::var(nvars, i))
    }

    pub fn numerator(&self) -> &MPoly {
        &self.num
    }

    pub fn denominator(&self) -> &MPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_reduced(&self) -> bool {
        self.num.gcd(&self.den).is_one()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    /// `self^k` for any integer `k`.
    pub fn powi(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let e = u32::try_from(k.unsigned_abs()).map_err(|_| Error::Parse("exponent too large".into()))?;
        // powers of a reduced fraction stay reduced
        Ok(RatFunc {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    pub fn add_one(&self) -> Self {
        Self::reduce(&self.num + &self.den, self.den.clone())
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        // cross-cancel so the product is reduced without a final gcd
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = rhs.den.div_exact(&g1).expect("gcd divides");
        let n2 = rhs.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        if num.is_zero() {
            return RatFunc::reduce(num, den);
        }
        let (num, den) = if den.leading().is_some_and(|(_, c)| c.is_negative()) {
            (-num, -den)
        } else {
            (num, den)
        };
        RatFunc { num, den }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

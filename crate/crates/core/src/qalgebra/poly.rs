//! Dense univariate polynomials over the rationals, in the variable `v`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Coefficients from `v^0` upwards; never has a trailing zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// `c * v^k`.
    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        Poly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplies by `v^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Divides by `v^k`; the low coefficients must vanish.
    pub fn shift_down(&self, k: usize) -> Self {
        debug_assert!(self.coeffs.iter().take(k).all(Zero::is_zero));
        Poly::from_coeffs(self.coeffs.iter().skip(k).cloned().collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Poly::zero(),
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    /// Euclidean division: `(q, r)` with `self = q * d + r`, `deg r < deg d`.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let Some(sd) = self.degree() else {
            return (Poly::zero(), Poly::zero());
        };
        if sd < dd {
            return (Poly::zero(), self.clone());
        }
        let lc_inv = d.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    rem[k + i] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// Exact quotient; panics if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Poly {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        // Powers of v split off exactly.
        let va = self.valuation().unwrap();
        let vb = other.valuation().unwrap();
        let common_v = va.min(vb);
        let a = self.shift_down(va);
        let b = other.shift_down(vb);
        let core = if a.degree() == Some(0) || b.degree() == Some(0) || coprime_mod_p(&a, &b) {
            Poly::one()
        } else {
            euclid(a, b)
        };
        core.shift_up(common_v)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

fn euclid(mut a: Poly, mut b: Poly) -> Poly {
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b);
        a = b;
        b = r.monic();
    }
    a.monic()
}

/// Mersenne prime 2^61 - 1.
const P: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(P)) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

fn reduce_mod_p(c: &BigRational) -> Option<u64> {
    let p = BigInt::from(P);
    let n = c.numer().mod_floor(&p).to_u64()?;
    let d = c.denom().mod_floor(&p).to_u64()?;
    if d == 0 {
        return None;
    }
    Some(mulmod(n, powmod(d, P - 2)))
}

/// Sufficient test for coprimality: if the images modulo a large prime keep
/// their degrees and are coprime there, the polynomials are coprime over Q.
fn coprime_mod_p(a: &Poly, b: &Poly) -> bool {
    let to_mod = |p: &Poly| -> Option<Vec<u64>> {
        let v: Option<Vec<u64>> = p.coeffs.iter().map(reduce_mod_p).collect();
        let v = v?;
        (*v.last()? != 0).then_some(v)
    };
    let (Some(mut x), Some(mut y)) = (to_mod(a), to_mod(b)) else {
        return false;
    };
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while y.len() > 1 {
        // x <- x mod y
        let inv = powmod(*y.last().unwrap(), P - 2);
        while x.len() >= y.len() {
            let c = mulmod(*x.last().unwrap(), inv);
            let off = x.len() - y.len();
            for (i, &yc) in y.iter().enumerate() {
                x[off + i] = (x[off + i] + P - mulmod(c, yc)) % P;
            }
            x.pop();
            while x.last() == Some(&0) {
                x.pop();
            }
        }
        if x.is_empty() {
            return false;
        }
        std::mem::swap(&mut x, &mut y);
    }
    // y is a nonzero constant
    !y.is_empty()
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = !abs.is_one() || k == 0;
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "{}v", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}v^{k}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_of_cyclotomic_products() {
        // (v^2 - 1)(v^2 + 1) and (v^2 - 1) v
        let a = &Poly::from_i64(&[-1, 0, 1]) * &Poly::from_i64(&[1, 0, 1]);
        let b = &Poly::from_i64(&[-1, 0, 1]) * &Poly::from_i64(&[0, 1]);
        assert_eq!(a.gcd(&b), Poly::from_i64(&[-1, 0, 1]));
    }

    #[test]
    fn coprime_fast_path_agrees_with_euclid() {
        let a = Poly::from_i64(&[1, 2, 3, 4]);
        let b = Poly::from_i64(&[5, 0, -1]);
        assert!(coprime_mod_p(&a, &b));
        assert_eq!(euclid(a.clone(), b.clone()), Poly::one());
        let c = &a * &Poly::from_i64(&[1, 1]);
        let d = &b * &Poly::from_i64(&[1, 1]);
        assert!(!coprime_mod_p(&c, &d));
        assert_eq!(c.gcd(&d), Poly::from_i64(&[1, 1]));
    }

    #[test]
    fn division_identity() {
        let a = Poly::from_i64(&[3, -2, 0, 5, 1]);
        let d = Poly::from_i64(&[1, 0, 2]);
        let (q, r) = a.div_rem(&d);
        assert_eq!(&(&q * &d) + &r, a);
        assert!(r.degree() < d.degree());
    }

    #[test]
    fn display() {
        assert_eq!(Poly::from_i64(&[-1, 0, 1]).to_string(), "v^2 - 1");
        assert_eq!(Poly::from_i64(&[0, 3]).to_string(), "3*v");
    }
}

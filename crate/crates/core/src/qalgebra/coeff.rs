//! Elements of Q(v), where v stands for q^{1/2}.

use super::poly::Poly;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A reduced fraction `num / den` of polynomials in `v`.
///
/// `den` is monic and coprime to `num`, so equal values have equal
/// representations and `==` is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QCoefficient {
    num: Poly,
    den: Poly,
}

impl QCoefficient {
    pub fn zero() -> Self {
        QCoefficient {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        QCoefficient {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    pub fn from_rational(c: BigRational) -> Self {
        QCoefficient {
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(c)))
    }

    /// `v^k` for any integer `k`.
    pub fn v_pow(k: i64) -> Self {
        let m = Poly::monomial(BigRational::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            QCoefficient {
                num: m,
                den: Poly::one(),
            }
        } else {
            QCoefficient {
                num: Poly::one(),
                den: m,
            }
        }
    }

    /// `q^k = v^{2k}`.
    pub fn q_pow(k: i64) -> Self {
        Self::v_pow(2 * k)
    }

    pub fn from_poly(p: Poly) -> Self {
        QCoefficient {
            num: p,
            den: Poly::one(),
        }
    }

    /// Reduces `num / den` to canonical form.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        };
        Ok(Self::normalize(num, den))
    }

    /// Scales so that `den` is monic; assumes coprimality.
    fn normalize(num: Poly, den: Poly) -> Self {
        let lc = den.leading().expect("nonzero denominator").clone();
        if lc.is_one() {
            QCoefficient { num, den }
        } else {
            let inv = lc.recip();
            QCoefficient {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Multiplies by `v^k`.
    pub fn mul_v_pow(&self, k: i64) -> Self {
        if k == 0 || self.is_zero() {
            return self.clone();
        }
        self * &Self::v_pow(k)
    }

    /// Evaluates at a rational `v`; `None` at a pole.
    pub fn eval(&self, v: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(v);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(v) / d)
    }
}

impl Default for QCoefficient {
    fn default() -> Self {
        Self::zero()
    }
}

impl Add for &QCoefficient {
    type Output = QCoefficient;
    fn add(self, rhs: &QCoefficient) -> QCoefficient {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            return QCoefficient::new(num, self.den.clone()).expect("nonzero denominator");
        }
        let g = self.den.gcd(&rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            // coprime denominators: nothing further cancels
            return QCoefficient::normalize(num, &self.den * &rhs.den);
        }
        let b_red = self.den.div_exact(&g);
        let d_red = rhs.den.div_exact(&g);
        let num = &(&self.num * &d_red) + &(&rhs.num * &b_red);
        if num.is_zero() {
            return QCoefficient::zero();
        }
        let den = &self.den * &d_red;
        let g2 = num.gcd(&g);
        if g2.is_one() {
            QCoefficient::normalize(num, den)
        } else {
            QCoefficient::normalize(num.div_exact(&g2), den.div_exact(&g2))
        }
    }
}

impl Sub for &QCoefficient {
    type Output = QCoefficient;
    fn sub(self, rhs: &QCoefficient) -> QCoefficient {
        self + &(-rhs)
    }
}

impl Neg for &QCoefficient {
    type Output = QCoefficient;
    fn neg(self) -> QCoefficient {
        QCoefficient {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &QCoefficient {
    type Output = QCoefficient;
    fn mul(self, rhs: &QCoefficient) -> QCoefficient {
        if self.is_zero() || rhs.is_zero() {
            return QCoefficient::zero();
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let (a, d) = if g1.is_one() {
            (self.num.clone(), rhs.den.clone())
        } else {
            (self.num.div_exact(&g1), rhs.den.div_exact(&g1))
        };
        let (c, b) = if g2.is_one() {
            (rhs.num.clone(), self.den.clone())
        } else {
            (rhs.num.div_exact(&g2), self.den.div_exact(&g2))
        };
        QCoefficient::normalize(&a * &c, &b * &d)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for QCoefficient {
            type Output = QCoefficient;
            fn $m(self, rhs: QCoefficient) -> QCoefficient {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for QCoefficient {
    type Output = QCoefficient;
    fn neg(self) -> QCoefficient {
        -&self
    }
}

impl fmt::Debug for QCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for QCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64(c)
    }

    fn c(num: &[i64], den: &[i64]) -> QCoefficient {
        QCoefficient::new(p(num), p(den)).unwrap()
    }

    #[test]
    fn opposite_fractions_cancel() {
        let a = c(&[0, 1], &[-1, 0, 1]);
        let b = c(&[0, -1], &[-1, 0, 1]);
        assert!((&a + &b).is_zero());
    }

    #[test]
    fn reciprocal_product_is_one() {
        let a = c(&[0, 1], &[-1, 0, 1]);
        let b = c(&[-1, 0, 1], &[0, 1]);
        assert!((&a * &b).is_one());
        assert!((&a * &a.inv().unwrap()).is_one());
    }

    #[test]
    fn second_dilog_coefficient_reduces() {
        // v^4 / ((v^4 - 1)(v^4 - v^2)) = v^2 / ((v^4 - 1)(v^2 - 1))
        let den = &p(&[-1, 0, 0, 0, 1]) * &p(&[0, 0, -1, 0, 1]);
        let x = QCoefficient::new(p(&[0, 0, 0, 0, 1]), den).unwrap();
        let y = QCoefficient::new(p(&[0, 0, 1]), &p(&[-1, 0, 0, 0, 1]) * &p(&[-1, 0, 1])).unwrap();
        assert_eq!(x, y);
        assert_eq!(x.numerator(), &p(&[0, 0, 1]));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            QCoefficient::new(p(&[1]), Poly::zero()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(QCoefficient::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn monic_denominator() {
        let x = c(&[1], &[0, 2]);
        assert_eq!(x.denominator(), &p(&[0, 1]));
        assert_eq!(x.numerator().coeffs()[0], BigRational::new(1.into(), 2.into()));
    }

    #[test]
    fn v_powers() {
        assert!((&QCoefficient::v_pow(3) * &QCoefficient::v_pow(-3)).is_one());
        assert_eq!(QCoefficient::q_pow(1), QCoefficient::v_pow(2));
        assert!(QCoefficient::v_pow(0).is_one());
    }
}

//! Commutative Y-seeds and their mutation.

use super::rational::{MPoly, RatFunc};
use crate::error::Result;
use crate::quiver::Quiver;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// An exchange matrix together with `n` rational functions in the initial
/// variables `Y_1..Y_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YSeed {
    pub quiver: Quiver,
    pub y: Vec<RatFunc>,
}

impl YSeed {
    /// The initial seed `y_i = Y_i` on the mutable part of `q`.
    pub fn initial(q: &Quiver) -> Self {
        let q = q.mutable_part();
        let n = q.n();
        YSeed {
            y: (0..n).map(|i| RatFunc::var(n, i)).collect(),
            quiver: q,
        }
    }

    pub fn n(&self) -> usize {
        self.quiver.n()
    }

    /// Relabels vertex `i` as `perm[i]` (0-based images).
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let mut y = self.y.clone();
        for (i, &p) in perm.iter().enumerate() {
            y[p] = self.y[i].clone();
        }
        YSeed {
            quiver: self.quiver.relabel(perm),
            y,
        }
    }
}

/// `y'_k = 1/y_k` and `y'_j = y_j y_k^[b_kj]+ (1 + y_k)^(-b_kj)`; the
/// exchange matrix mutates as usual.
pub fn y_seed_mutate(s: &YSeed, k: usize) -> Result<YSeed> {
    let idx = s.quiver.check_mutable(k)?;
    let yk = &s.y[idx];
    let one_plus = yk.add_one();
    let mut y = Vec::with_capacity(s.n());
    for (j, yj) in s.y.iter().enumerate() {
        if j == idx {
            y.push(yk.inv()?);
            continue;
        }
        let b = s.quiver.b(idx, j);
        if b == 0 {
            y.push(yj.clone());
            continue;
        }
        let mut v = yj.clone();
        if b > 0 {
            v = &v * &yk.powi(b)?;
        }
        v = &v * &one_plus.powi(-b)?;
        y.push(v);
    }
    Ok(YSeed {
        quiver: s.quiver.mutate(k)?,
        y,
    })
}

/// Tropical shadow of a Y-seed: each `y_j` is recorded by its exponent
/// vector in the tropical semifield on `Y_1..Y_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropicalSeed {
    pub quiver: Quiver,
    pub exps: Vec<Vec<BigInt>>,
}

impl TropicalSeed {
    pub fn initial(q: &Quiver) -> Self {
        let q = q.mutable_part();
        let n = q.n();
        TropicalSeed {
            exps: (0..n)
                .map(|i| (0..n).map(|j| BigInt::from(i64::from(i == j))).collect())
                .collect(),
            quiver: q,
        }
    }

    pub fn mutate(&self, k: usize) -> Result<Self> {
        let idx = self.quiver.check_mutable(k)?;
        let ck = &self.exps[idx];
        let neg_part: Vec<BigInt> = ck
            .iter()
            .map(|x| if x.is_negative() { x.clone() } else { BigInt::zero() })
            .collect();
        let mut exps = self.exps.clone();
        for (j, e) in exps.iter_mut().enumerate() {
            if j == idx {
                for x in e.iter_mut() {
                    *x = -&*x;
                }
                continue;
            }
            let b = self.quiver.b(idx, j);
            if b == 0 {
                continue;
            }
            let bb = BigInt::from(b);
            for (m, x) in e.iter_mut().enumerate() {
                if b > 0 {
                    *x += &bb * &ck[m];
                }
                *x -= &bb * &neg_part[m];
            }
        }
        Ok(TropicalSeed {
            quiver: self.quiver.mutate(k)?,
            exps,
        })
    }

    pub fn relabel(&self, perm: &[usize]) -> Self {
        let mut exps = self.exps.clone();
        for (i, &p) in perm.iter().enumerate() {
            exps[p] = self.exps[i].clone();
        }
        TropicalSeed {
            quiver: self.quiver.relabel(perm),
            exps,
        }
    }
}

/// A Y-seed in separated form: `y_j = Y^{c_j} * prod_i F_i^{b_ij}` with
/// tropical exponent vectors `c_j` and polynomials `F_i` with constant
/// term 1. Mutation needs only exact polynomial division.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatedSeed {
    pub tropical: TropicalSeed,
    pub f: Vec<MPoly>,
}

fn monomial_part(c: &[BigInt], sign: i64) -> MPoly {
    let e: Vec<u32> = c
        .iter()
        .map(|x| {
            let v = i64::try_from(x * sign).expect("exponent fits");
            u32::try_from(v.max(0)).expect("exponent fits")
        })
        .collect();
    MPoly::monomial(e, BigInt::from(1))
}

impl SeparatedSeed {
    pub fn initial(q: &Quiver) -> Self {
        let tropical = TropicalSeed::initial(q);
        let n = tropical.quiver.n();
        SeparatedSeed {
            f: vec![MPoly::one(n); n],
            tropical,
        }
    }

    pub fn mutate(&self, k: usize) -> Result<Self> {
        let b = &self.tropical.quiver;
        let idx = b.check_mutable(k)?;
        let ck = &self.tropical.exps[idx];
        let mut plus = monomial_part(ck, 1);
        let mut minus = monomial_part(ck, -1);
        for (i, fi) in self.f.iter().enumerate() {
            let bik = b.b(i, idx);
            if bik > 0 {
                plus = &plus * &fi.pow(bik as u32);
            } else if bik < 0 {
                minus = &minus * &fi.pow((-bik) as u32);
            }
        }
        let fk = (&plus + &minus)
            .div_exact(&self.f[idx])
            .expect("F-polynomial recurrence divides exactly");
        let mut f = self.f.clone();
        f[idx] = fk;
        Ok(SeparatedSeed {
            tropical: self.tropical.mutate(k)?,
            f,
        })
    }

    pub fn relabel(&self, perm: &[usize]) -> Self {
        let mut f = self.f.clone();
        for (i, &p) in perm.iter().enumerate() {
            f[p] = self.f[i].clone();
        }
        SeparatedSeed {
            tropical: self.tropical.relabel(perm),
            f,
        }
    }

    /// `prod_i F_i^[b_ij]+` and `prod_i F_i^[-b_ij]+`.
    fn f_parts(&self, j: usize) -> (MPoly, MPoly) {
        let q = &self.tropical.quiver;
        let n = q.n();
        let mut num = MPoly::one(n);
        let mut den = MPoly::one(n);
        for (i, fi) in self.f.iter().enumerate() {
            let bij = q.b(i, j);
            if bij > 0 {
                num = &num * &fi.pow(bij as u32);
            } else if bij < 0 {
                den = &den * &fi.pow((-bij) as u32);
            }
        }
        (num, den)
    }

    /// The Y-seed values as reduced fractions.
    pub fn to_yseed(&self) -> Result<YSeed> {
        let n = self.tropical.quiver.n();
        let mut y = Vec::with_capacity(n);
        for j in 0..n {
            let c = &self.tropical.exps[j];
            let (fnum, fden) = self.f_parts(j);
            let num = &monomial_part(c, 1) * &fnum;
            let den = &monomial_part(c, -1) * &fden;
            y.push(RatFunc::new(num, den)?);
        }
        Ok(YSeed {
            quiver: self.tropical.quiver.clone(),
            y,
        })
    }

    /// Whether the seed is the initial seed on `start`, decided without
    /// fraction reduction.
    pub fn is_initial(&self, start: &Quiver) -> bool {
        if self.tropical != TropicalSeed::initial(start) {
            return false;
        }
        (0..start.n()).all(|j| {
            let (num, den) = self.f_parts(j);
            num == den
        })
    }
}

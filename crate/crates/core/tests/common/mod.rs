#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use quiverkit::qalgebra::{Exponent, Lambda, Poly, QCoefficient, QuantumSeries};
use quiverkit::Quiver;
use rand::Rng;

/// Random skew-symmetric quiver on `n` vertices with entries in `-bound..=bound`.
pub fn random_quiver<R: Rng>(rng: &mut R, n: usize, bound: i64) -> Quiver {
    let mut m = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let x = rng.gen_range(-bound..=bound);
            m[i][j] = x;
            m[j][i] = -x;
        }
    }
    Quiver::from_matrix(&m).unwrap()
}

pub fn random_sequence<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> Vec<usize> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| rng.gen_range(1..=n)).collect()
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        p.swap(i, j);
    }
    p
}

pub fn random_poly<R: Rng>(rng: &mut R, max_deg: usize) -> Poly {
    let d = rng.gen_range(0..=max_deg);
    let coeffs: Vec<i64> = (0..=d).map(|_| rng.gen_range(-3..=3)).collect();
    Poly::from_i64(&coeffs)
}

/// Random nonzero coefficient `p / q` times a power of `v`.
pub fn random_coeff<R: Rng>(rng: &mut R) -> QCoefficient {
    loop {
        let num = random_poly(rng, 3);
        let den = random_poly(rng, 2);
        if num.is_zero() || den.is_zero() {
            continue;
        }
        let c = QCoefficient::new(num, den).unwrap();
        return c.mul_v_pow(rng.gen_range(-2..=2));
    }
}

pub fn small_rational<R: Rng>(rng: &mut R) -> BigRational {
    BigRational::new(
        BigInt::from(rng.gen_range(-5..=5)),
        BigInt::from(rng.gen_range(1..=4)),
    )
}

pub fn random_lambda<R: Rng>(rng: &mut R, n: usize) -> Lambda {
    let q = random_quiver(rng, n, 2);
    Lambda::from_rows(&q.matrix()).unwrap()
}

pub fn random_exponent<R: Rng>(rng: &mut R, n: usize, max_deg: u32) -> Exponent {
    loop {
        let e: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max_deg)).collect();
        if e.iter().sum::<u32>() <= max_deg {
            return Exponent::new(e);
        }
    }
}

/// Random series with up to `terms` terms of total degree at most `cap`.
pub fn random_series<R: Rng>(rng: &mut R, lambda: &Lambda, cap: u32, terms: usize) -> QuantumSeries {
    let n = lambda.n();
    let mut s = QuantumSeries::zero(lambda, cap);
    for _ in 0..rng.gen_range(1..=terms) {
        let e = random_exponent(rng, n, cap);
        let m = QuantumSeries::monomial(lambda, cap, e, random_coeff(rng));
        s = s.add(&m).unwrap();
    }
    s
}

/// Random series with constant term 1.
pub fn random_unit_series<R: Rng>(rng: &mut R, lambda: &Lambda, cap: u32, terms: usize) -> QuantumSeries {
    let mut s = random_series(rng, lambda, cap, terms);
    let c = s.constant_term();
    let one = QuantumSeries::one(lambda, cap);
    let shift = QuantumSeries::monomial(lambda, cap, Exponent::zero(lambda.n()), &QCoefficient::one() - &c);
    s = s.add(&shift).unwrap();
    debug_assert_eq!(s.constant_term(), one.constant_term());
    s
}

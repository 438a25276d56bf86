//! Seeded generators for hyperbolic test polynomials.

use super::poly::ExactPolynomial;
use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 20240917;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `prod (z - r)` with integer roots in `[-5, 5]` (repeats allowed), degree `1..=max_deg`.
pub fn integer_roots(rng: &mut impl Rng, max_deg: usize) -> (ExactPolynomial, Vec<BigRational>) {
    let d = rng.random_range(1..=max_deg.max(1));
    let roots: Vec<BigRational> = (0..d).map(|_| int(rng.random_range(-5..=5))).collect();
    (ExactPolynomial::from_roots(&roots), roots)
}

/// Same-sign roots: integers in `1..=5` or rationals `k/den` with `k, den` in `1..=9`,
/// all negated with probability 1/2. Degree `1..=max_deg`.
pub fn same_sign_roots(rng: &mut impl Rng, max_deg: usize, rational: bool) -> (ExactPolynomial, Vec<BigRational>) {
    let d = rng.random_range(1..=max_deg.max(1));
    let neg = rng.random_bool(0.5);
    let roots: Vec<BigRational> = (0..d)
        .map(|_| {
            let r = if rational {
                BigRational::new(BigInt::from(rng.random_range(1..=9)), BigInt::from(rng.random_range(1..=9)))
            } else {
                int(rng.random_range(1..=5))
            };
            if neg {
                -r
            } else {
                r
            }
        })
        .collect();
    (ExactPolynomial::from_roots(&roots), roots)
}

/// Zeros `x + i y` with `x = k/4`, `k` in `-12..=12`, and `y = j/4`, `j` in `1..=12`.
pub fn upper_half_plane_zeros(rng: &mut impl Rng, min_deg: usize, max_deg: usize) -> Vec<Complex<BigRational>> {
    let d = rng.random_range(min_deg..=max_deg);
    (0..d)
        .map(|_| {
            let x = BigRational::new(BigInt::from(rng.random_range(-12..=12)), BigInt::from(4));
            let y = BigRational::new(BigInt::from(rng.random_range(1..=12)), BigInt::from(4));
            Complex::new(x, y)
        })
        .collect()
}

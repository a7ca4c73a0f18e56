//! Seeded random samplers for lattice vectors and rationals.
//!
//! Every sampler draws from a caller-supplied ChaCha stream, so a fixed
//! seed reproduces the exact same sequence on every platform.

use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::Vector;
use crate::scalar::Scalar;

pub type SampleRng = ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 0xC0FFEE;

/// Denominators used for rationals that must avoid the integers.
pub const GENERIC_DENOMINATORS: [i64; 4] = [2, 3, 5, 7];

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn int_vector(rng: &mut SampleRng, len: usize, radius: i64) -> Vec<i64> {
    (0..len).map(|_| rng.gen_range(-radius..=radius)).collect()
}

pub fn nonzero_int_vector(rng: &mut SampleRng, len: usize, radius: i64) -> Vec<i64> {
    assert!(radius > 0 && len > 0);
    loop {
        let v = int_vector(rng, len, radius);
        if v.iter().any(|&x| x != 0) {
            return v;
        }
    }
}

/// A rational with numerator in `[-radius, radius]` and denominator drawn
/// from `{1, 2, 3, 5, 7}`.
pub fn rational(rng: &mut SampleRng, radius: i64) -> Scalar {
    let den = *[1, 2, 3, 5, 7].choose(rng).expect("nonempty");
    let num = rng.gen_range(-radius * den..=radius * den);
    Scalar::new(num, den).expect("nonzero denominator")
}

/// A non-integral rational whose reduced denominator lies in
/// [`GENERIC_DENOMINATORS`].
pub fn generic_rational(rng: &mut SampleRng, radius: i64) -> Scalar {
    let den = *GENERIC_DENOMINATORS.choose(rng).expect("nonempty");
    loop {
        let num = rng.gen_range(-radius * den..=radius * den);
        if num % den != 0 {
            return Scalar::new(num, den).expect("nonzero denominator");
        }
    }
}

pub fn rational_vector(rng: &mut SampleRng, len: usize, radius: i64) -> Vector {
    (0..len).map(|_| rational(rng, radius)).collect()
}

/// A rational vector with no integral coordinate.
pub fn generic_vector(rng: &mut SampleRng, len: usize, radius: i64) -> Vector {
    (0..len).map(|_| generic_rational(rng, radius)).collect()
}

pub fn nonzero_rational_vector(rng: &mut SampleRng, len: usize, radius: i64) -> Vector {
    loop {
        let v = rational_vector(rng, len, radius);
        if v.iter().any(|x| !x.is_zero()) {
            return v;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible() {
        let a = rational_vector(&mut rng(7), 5, 3);
        let b = rational_vector(&mut rng(7), 5, 3);
        assert_eq!(a, b);
    }

    #[test]
    fn generic_is_not_integral() {
        let mut r = rng(DEFAULT_SEED);
        for _ in 0..200 {
            let x = generic_rational(&mut r, 4);
            assert!(!x.is_integer());
            assert!(GENERIC_DENOMINATORS
                .iter()
                .any(|&d| x.denom() == num_bigint::BigInt::from(d)));
        }
    }
}

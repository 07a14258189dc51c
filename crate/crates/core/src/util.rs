//! Small numeric helpers shared across the chain: dB conversions, seed
//! derivation, deterministic summation and Gaussian sampling.

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;

/// Speed of light in vacuum, m/s.
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;
/// Planck constant, J*s.
pub const PLANCK: f64 = 6.626_070_15e-34;

/// Power ratio from dB.
pub fn db_to_lin(db: f64) -> f64 {
    10.0_f64.powf(db / 10.0)
}

/// dB from a power ratio.
pub fn lin_to_db(lin: f64) -> f64 {
    10.0 * lin.log10()
}

/// Watts from dBm.
pub fn dbm_to_watts(dbm: f64) -> f64 {
    1e-3 * db_to_lin(dbm)
}

/// dBm from Watts.
pub fn watts_to_dbm(watts: f64) -> f64 {
    lin_to_db(watts / 1e-3)
}

/// Derives a child seed from a base seed and a context path.
///
/// SplitMix64-style mixing; stable across platforms so that every consumer
/// of a base seed gets a reproducible stream.
pub fn derive_seed(base: u64, path: &[u64]) -> u64 {
    let mut state = base ^ 0x9e37_79b9_7f4a_7c15;
    for &p in path {
        state = state.wrapping_add(p).wrapping_add(0x9e37_79b9_7f4a_7c15);
        state = splitmix64(state);
    }
    splitmix64(state)
}

fn splitmix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seeded RNG used everywhere randomness is needed.
pub fn seeded_rng(seed: u64) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(seed)
}

/// Draws a circularly symmetric complex Gaussian with total variance `var`
/// (i.e. `var / 2` per real dimension).
pub fn complex_gaussian<R: Rng>(rng: &mut R, var: f64) -> Complex64 {
    let s = (var / 2.0).sqrt();
    let re: f64 = rng.sample::<f64, _>(rand_distr::StandardNormal);
    let im: f64 = rng.sample::<f64, _>(rand_distr::StandardNormal);
    Complex64::new(s * re, s * im)
}

/// Pairwise (cascade) summation. Deterministic for a fixed input order and
/// much better conditioned than a running sum on long vectors.
pub fn pairwise_sum(values: &[f64]) -> f64 {
    const BASE: usize = 64;
    if values.len() <= BASE {
        return values.iter().sum();
    }
    let mid = values.len() / 2;
    pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
}

/// log2 of e, for nat-to-bit conversions.
pub const LOG2_E: f64 = std::f64::consts::LOG2_E;

/// Jacobian logarithm max*(a, b) = ln(e^a + e^b), exact form.
#[inline]
pub fn max_star(a: f64, b: f64) -> f64 {
    if a == f64::NEG_INFINITY {
        return b;
    }
    if b == f64::NEG_INFINITY {
        return a;
    }
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    hi + (-(hi - lo)).exp().ln_1p()
}

/// Mean of a slice (deterministic pairwise order).
pub fn mean(values: &[f64]) -> f64 {
    if values.is_empty() {
        return 0.0;
    }
    pairwise_sum(values) / values.len() as f64
}

/// Unbiased sample variance.
pub fn variance(values: &[f64]) -> f64 {
    if values.len() < 2 {
        return 0.0;
    }
    let m = mean(values);
    let sq: Vec<f64> = values.iter().map(|v| (v - m) * (v - m)).collect();
    pairwise_sum(&sq) / (values.len() - 1) as f64
}

/// Average power of a complex sequence.
pub fn avg_power(samples: &[Complex64]) -> f64 {
    if samples.is_empty() {
        return 0.0;
    }
    let sq: Vec<f64> = samples.iter().map(|s| s.norm_sqr()).collect();
    pairwise_sum(&sq) / samples.len() as f64
}

/// Relative L2 distance between two equal-length sequences.
pub fn rel_l2_error(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len());
    let diff: Vec<f64> = a.iter().zip(b).map(|(x, y)| (x - y).norm_sqr()).collect();
    let refp: Vec<f64> = b.iter().map(|y| y.norm_sqr()).collect();
    let d = pairwise_sum(&diff).sqrt();
    let r = pairwise_sum(&refp).sqrt();
    if r == 0.0 {
        d
    } else {
        d / r
    }
}

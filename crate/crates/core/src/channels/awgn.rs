//! Additive white Gaussian noise reference channel.

use crate::util::{complex_gaussian, db_to_lin, seeded_rng};
use num_complex::Complex64;

/// Adds complex Gaussian noise of variance `10^(-snr_db/10)` to a
/// unit-average-power symbol sequence. `snr_db = +inf` is the identity.
/// Deterministic for a fixed seed.
pub fn awgn_apply(symbols: &[Complex64], snr_db: f64, rng_seed: u64) -> Vec<Complex64> {
    if snr_db == f64::INFINITY {
        return symbols.to_vec();
    }
    let var = db_to_lin(-snr_db);
    let mut rng = seeded_rng(rng_seed);
    symbols.iter().map(|s| s + complex_gaussian(&mut rng, var)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util::{lin_to_db, mean, seeded_rng};
    use rand::Rng;

    #[test]
    fn infinite_snr_is_identity() {
        let syms = vec![Complex64::new(1.0, -1.0); 16];
        assert_eq!(awgn_apply(&syms, f64::INFINITY, 3), syms);
    }

    #[test]
    fn measured_snr_matches_setting() {
        let mut rng = seeded_rng(11);
        let n = 100_000;
        // QPSK at unit power
        let syms: Vec<Complex64> = (0..n)
            .map(|_| {
                let re = if rng.gen::<bool>() { 1.0 } else { -1.0 };
                let im = if rng.gen::<bool>() { 1.0 } else { -1.0 };
                Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
            })
            .collect();
        let noisy = awgn_apply(&syms, 20.0, 5);
        let err: Vec<f64> = noisy.iter().zip(&syms).map(|(y, x)| (y - x).norm_sqr()).collect();
        let measured = lin_to_db(1.0 / mean(&err));
        assert!((measured - 20.0).abs() < 0.1, "measured {measured} dB");
    }

    #[test]
    fn seeded_determinism() {
        let syms = vec![Complex64::new(0.5, 0.5); 64];
        assert_eq!(awgn_apply(&syms, 10.0, 7), awgn_apply(&syms, 10.0, 7));
        assert_ne!(awgn_apply(&syms, 10.0, 7), awgn_apply(&syms, 10.0, 8));
    }
}

//! Lumped erbium-doped fiber amplifier model: flat gain plus
//! band-limited amplified-spontaneous-emission noise.

use super::{ChannelError, OpticalField};
use crate::util::{complex_gaussian, db_to_lin, derive_seed, seeded_rng, PLANCK};

/// Amplifies a field and adds circularly symmetric Gaussian ASE noise.
///
/// The ASE power spectral density per polarization is
/// `n_sp * h * nu * (G - 1)` with `n_sp = 10^(NF/10) / 2`, integrated over
/// the simulation bandwidth (the field sample rate). The carrier frequency
/// `nu` is taken from the field. A noise figure of `-inf` disables noise.
/// Deterministic for a fixed seed.
pub fn lumped_amplify(
    field: &OpticalField,
    gain_db: f64,
    noise_figure_db: f64,
    rng_seed: u64,
) -> Result<OpticalField, ChannelError> {
    if gain_db < 0.0 {
        return Err(ChannelError::InvalidField(format!("EDFA gain must be >= 0 dB, got {gain_db}")));
    }
    if !field.is_finite() {
        return Err(ChannelError::NonFiniteInput);
    }
    let gain_amp = db_to_lin(gain_db).sqrt();
    let noise_var = ase_noise_variance(field, gain_db, noise_figure_db);
    let mut out = field.clone();
    for (pol_idx, pol) in out.pols.iter_mut().enumerate() {
        let mut rng = seeded_rng(derive_seed(rng_seed, &[pol_idx as u64]));
        for s in pol.iter_mut() {
            *s *= gain_amp;
            if noise_var > 0.0 {
                *s += complex_gaussian(&mut rng, noise_var);
            }
        }
    }
    Ok(out)
}

/// ASE noise variance per complex sample for the given amplifier setting.
pub fn ase_noise_variance(field: &OpticalField, gain_db: f64, noise_figure_db: f64) -> f64 {
    if noise_figure_db == f64::NEG_INFINITY {
        return 0.0;
    }
    let gain_lin = db_to_lin(gain_db);
    let n_sp = db_to_lin(noise_figure_db) / 2.0;
    let psd = n_sp * PLANCK * field.center_frequency * (gain_lin - 1.0);
    (psd * field.sample_rate).max(0.0)
}

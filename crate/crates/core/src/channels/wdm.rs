//! WDM multiplexing: frequency-shifted assembly of per-channel baseband
//! waveforms onto a common grid and extraction of one channel back to
//! 2 samples/symbol baseband.

use super::{ChannelError, LinkConfig, OpticalField};
use crate::fft::{bin_freqs, fft_in_place, ifft_in_place, resample};
use num_complex::Complex64;

/// Composite sample rate for a link: the smallest power-of-two multiple of
/// the symbol rate covering the full WDM band. Power-of-two multiples keep
/// every resampling step in the chain exact.
pub fn wdm_sample_rate(link: &LinkConfig) -> f64 {
    let band = link.n_channels as f64 * link.channel_spacing_hz;
    let mut mult = 2.0;
    while link.symbol_rate * mult < band {
        mult *= 2.0;
    }
    link.symbol_rate * mult
}

/// Frequency offset of channel `index` from the band center, Hz.
pub fn channel_offset_hz(link: &LinkConfig, index: usize) -> f64 {
    (index as f64 - (link.n_channels as f64 - 1.0) / 2.0) * link.channel_spacing_hz
}

/// Sums frequency-shifted channels onto the composite grid centered at the
/// link carrier. Each entry of `channels` holds the per-polarization
/// baseband waveforms of one channel, all at `channel_rate`.
pub fn wdm_assemble(
    channels: &[Vec<Vec<Complex64>>],
    channel_rate: f64,
    link: &LinkConfig,
) -> Result<OpticalField, ChannelError> {
    if channels.len() != link.n_channels {
        return Err(ChannelError::InvalidField(format!(
            "expected {} channels, got {}",
            link.n_channels,
            channels.len()
        )));
    }
    let n_pols = channels[0].len();
    let len = channels[0][0].len();
    for ch in channels {
        if ch.len() != n_pols || ch.iter().any(|p| p.len() != len) {
            return Err(ChannelError::InvalidField(
                "all channels must have the same polarization count and length".into(),
            ));
        }
    }
    let fs = wdm_sample_rate(link);
    let band = link.n_channels as f64 * link.channel_spacing_hz;
    if fs < band {
        return Err(ChannelError::SampleRateTooLow {
            rate: fs,
            channels: link.n_channels,
            spacing: link.channel_spacing_hz,
        });
    }

    let n_out = (len as f64 * fs / channel_rate).round() as usize;
    let mut pols = vec![vec![Complex64::new(0.0, 0.0); n_out]; n_pols];
    for (ch_idx, ch) in channels.iter().enumerate() {
        let offset = channel_offset_hz(link, ch_idx);
        for (pol_idx, baseband) in ch.iter().enumerate() {
            let up = resample(baseband, channel_rate, fs).map_err(ChannelError::Resample)?;
            let acc = &mut pols[pol_idx];
            let w = 2.0 * std::f64::consts::PI * offset / fs;
            for (i, s) in up.iter().enumerate() {
                acc[i] += s * Complex64::from_polar(1.0, w * i as f64);
            }
        }
    }
    OpticalField::new(pols, fs, link.carrier_frequency_hz())
}

/// Extracts one channel from a composite field: shift to baseband,
/// brick-wall low-pass of one channel-spacing width, decimate to
/// 2 samples/symbol. Returns per-polarization waveforms.
pub fn channel_select(
    field: &OpticalField,
    channel_index: usize,
    link: &LinkConfig,
) -> Result<Vec<Vec<Complex64>>, ChannelError> {
    if channel_index >= link.n_channels {
        return Err(ChannelError::InvalidField(format!(
            "channel index {channel_index} out of range 0..{}",
            link.n_channels
        )));
    }
    let offset = channel_offset_hz(link, channel_index);
    let fs = field.sample_rate;
    let out_rate = 2.0 * link.symbol_rate;
    let n = field.n_samples();
    let w = -2.0 * std::f64::consts::PI * offset / fs;
    let freqs = bin_freqs(n, fs);
    let mut out = Vec::with_capacity(field.n_pols());
    for pol in &field.pols {
        // Shift the wanted channel to baseband, then cut everything
        // outside half the channel spacing.
        let mut shifted: Vec<Complex64> = pol
            .iter()
            .enumerate()
            .map(|(i, s)| s * Complex64::from_polar(1.0, w * i as f64))
            .collect();
        fft_in_place(&mut shifted);
        for (s, f) in shifted.iter_mut().zip(&freqs) {
            if f.abs() > link.channel_spacing_hz / 2.0 {
                *s = Complex64::new(0.0, 0.0);
            }
        }
        ifft_in_place(&mut shifted);
        out.push(resample(&shifted, fs, out_rate).map_err(ChannelError::Resample)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util::{rel_l2_error, seeded_rng};

    fn ten_gbaud_link(n_channels: usize) -> LinkConfig {
        LinkConfig {
            n_channels,
            symbol_rate: 10e9,
            channel_spacing_hz: 25e9,
            rolloff: 0.5,
            ..LinkConfig::optimization_reference()
        }
    }

    fn bandlimited_waveform(n: usize, rate: f64, max_freq: f64, seed: u64) -> Vec<Complex64> {
        // Random spectrum limited to |f| <= max_freq.
        let mut rng = seeded_rng(seed);
        let mut spec: Vec<Complex64> = vec![Complex64::new(0.0, 0.0); n];
        let freqs = bin_freqs(n, rate);
        for (s, f) in spec.iter_mut().zip(&freqs) {
            if f.abs() <= max_freq {
                *s = crate::util::complex_gaussian(&mut rng, 1.0);
            }
        }
        ifft_in_place(&mut spec);
        spec
    }

    #[test]
    fn single_channel_assemble_is_identity_up_to_resampling() {
        let link = ten_gbaud_link(1);
        let wave = bandlimited_waveform(512, 20e9, 7.5e9, 1);
        let field = wdm_assemble(&[vec![wave.clone()]], 20e9, &link).unwrap();
        let back = resample(&field.pols[0], field.sample_rate, 20e9).unwrap();
        assert!(rel_l2_error(&back, &wave) < 1e-9);
    }

    #[test]
    fn assemble_select_roundtrip_recovers_channel() {
        let link = ten_gbaud_link(3);
        let target = 2;
        let rate = 20e9;
        let zero = vec![Complex64::new(0.0, 0.0); 512];
        let wave = bandlimited_waveform(512, rate, 7.4e9, 2);
        let channels: Vec<Vec<Vec<Complex64>>> = (0..3)
            .map(|i| vec![if i == target { wave.clone() } else { zero.clone() }])
            .collect();
        let field = wdm_assemble(&channels, rate, &link).unwrap();
        let selected = channel_select(&field, target, &link).unwrap();
        assert!(rel_l2_error(&selected[0], &wave) < 1e-6);
    }

    #[test]
    fn five_channel_spectrum_peaks_on_the_30ghz_grid() {
        let link = LinkConfig::optimization_reference();
        let rate = 56e9;
        let n = 2048;
        let channels: Vec<Vec<Vec<Complex64>>> = (0..5)
            .map(|i| vec![bandlimited_waveform(n, rate, 14.1e9, 10 + i as u64)])
            .collect();
        let field = wdm_assemble(&channels, rate, &link).unwrap();
        let mut spec = field.pols[0].clone();
        fft_in_place(&mut spec);
        let freqs = bin_freqs(spec.len(), field.sample_rate);
        // mean power in 2-GHz buckets around each nominal center vs between channels
        let power_near = |f0: f64| -> f64 {
            let sel: Vec<f64> = spec
                .iter()
                .zip(&freqs)
                .filter(|(_, f)| (*f - f0).abs() < 1e9)
                .map(|(s, _)| s.norm_sqr())
                .collect();
            crate::util::mean(&sel)
        };
        for f0 in [-60e9, -30e9, 0.0, 30e9, 60e9] {
            let on = power_near(f0);
            let off = power_near(f0 + 15e9);
            assert!(on > 100.0 * off, "no peak at {f0}: on {on:e}, off {off:e}");
        }
    }

    #[test]
    fn assemble_is_linear() {
        let link = ten_gbaud_link(3);
        let rate = 20e9;
        let a: Vec<Vec<Vec<Complex64>>> =
            (0..3).map(|i| vec![bandlimited_waveform(256, rate, 7e9, 20 + i as u64)]).collect();
        let b: Vec<Vec<Vec<Complex64>>> =
            (0..3).map(|i| vec![bandlimited_waveform(256, rate, 7e9, 30 + i as u64)]).collect();
        let sum: Vec<Vec<Vec<Complex64>>> = a
            .iter()
            .zip(&b)
            .map(|(ca, cb)| {
                vec![ca[0].iter().zip(&cb[0]).map(|(x, y)| x + y).collect::<Vec<_>>()]
            })
            .collect();
        let fa = wdm_assemble(&a, rate, &link).unwrap();
        let fb = wdm_assemble(&b, rate, &link).unwrap();
        let fsum = wdm_assemble(&sum, rate, &link).unwrap();
        let combined: Vec<Complex64> =
            fa.pols[0].iter().zip(&fb.pols[0]).map(|(x, y)| x + y).collect();
        assert!(rel_l2_error(&combined, &fsum.pols[0]) < 1e-12);
    }

    #[test]
    fn mismatched_channel_lengths_rejected() {
        let link = ten_gbaud_link(3);
        let chans = vec![
            vec![vec![Complex64::new(0.0, 0.0); 128]],
            vec![vec![Complex64::new(0.0, 0.0); 64]],
            vec![vec![Complex64::new(0.0, 0.0); 128]],
        ];
        assert!(wdm_assemble(&chans, 20e9, &link).is_err());
    }
}

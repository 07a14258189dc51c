//! FFT helpers: cached planners, angular-frequency grids and exact
//! FFT-domain resampling between commensurate rates.

use num_complex::Complex64;
use rustfft::FftPlanner;
use std::sync::{LazyLock, Mutex};

/// Forward FFT in place (unnormalized, rustfft convention).
pub fn fft_in_place(data: &mut [Complex64]) {
    plan_forward(data.len()).process(data);
}

/// Inverse FFT in place, normalized by 1/N.
pub fn ifft_in_place(data: &mut [Complex64]) {
    plan_inverse(data.len()).process(data);
    let scale = 1.0 / data.len() as f64;
    for v in data.iter_mut() {
        *v *= scale;
    }
}

fn plan_forward(n: usize) -> std::sync::Arc<dyn rustfft::Fft<f64>> {
    PLANNER.lock().unwrap().plan_fft_forward(n)
}

fn plan_inverse(n: usize) -> std::sync::Arc<dyn rustfft::Fft<f64>> {
    PLANNER.lock().unwrap().plan_fft_inverse(n)
}

static PLANNER: LazyLock<Mutex<FftPlanner<f64>>> = LazyLock::new(|| Mutex::new(FftPlanner::new()));

/// Angular frequency of each FFT bin for a given sample rate, with the
/// usual wrap-around (bin k > N/2 maps to negative frequency).
pub fn angular_freqs(n: usize, sample_rate: f64) -> Vec<f64> {
    let df = sample_rate / n as f64;
    (0..n)
        .map(|k| {
            let f = if k <= n / 2 { k as f64 } else { k as f64 - n as f64 };
            2.0 * std::f64::consts::PI * f * df
        })
        .collect()
}

/// Baseband frequency (Hz) of each FFT bin.
pub fn bin_freqs(n: usize, sample_rate: f64) -> Vec<f64> {
    angular_freqs(n, sample_rate)
        .into_iter()
        .map(|w| w / (2.0 * std::f64::consts::PI))
        .collect()
}

/// Exact spectral resampling between commensurate rates.
///
/// Requires `len * rate_out / rate_in` to be an integer (relative slack
/// 1e-9). Upsampling zero-pads the spectrum, downsampling truncates it;
/// band content outside the output Nyquist range must already be zero for
/// the operation to be transparent.
pub fn resample(samples: &[Complex64], rate_in: f64, rate_out: f64) -> Result<Vec<Complex64>, String> {
    if (rate_in - rate_out).abs() < 1e-9 * rate_in {
        return Ok(samples.to_vec());
    }
    let n_in = samples.len();
    let exact_out = n_in as f64 * rate_out / rate_in;
    let n_out = exact_out.round() as usize;
    if (exact_out - n_out as f64).abs() > 1e-9 * exact_out.abs() || n_out == 0 {
        return Err(format!(
            "resampling {n_in} samples from {rate_in} Hz to {rate_out} Hz is not an integer length"
        ));
    }
    let mut spec = samples.to_vec();
    fft_in_place(&mut spec);
    let mut out = vec![Complex64::new(0.0, 0.0); n_out];
    let keep = n_in.min(n_out);
    let half = keep / 2;
    // Positive frequencies [0, half], negative tail (half) bins.
    for k in 0..=half.min(n_out - 1).min(n_in - 1) {
        out[k] = spec[k];
    }
    for k in 1..=(keep - 1 - half) {
        out[n_out - k] = spec[n_in - k];
    }
    ifft_in_place(&mut out);
    let gain = n_out as f64 / n_in as f64;
    for v in out.iter_mut() {
        *v *= gain;
    }
    Ok(out)
}

/// Circular convolution via the FFT; `kernel` is zero-padded to the signal
/// length. Used for filtering of guard-banded periodic frames.
pub fn circular_convolve(signal: &[Complex64], kernel: &[Complex64]) -> Vec<Complex64> {
    assert!(kernel.len() <= signal.len(), "kernel longer than signal");
    let n = signal.len();
    let mut a = signal.to_vec();
    let mut b = vec![Complex64::new(0.0, 0.0); n];
    b[..kernel.len()].copy_from_slice(kernel);
    fft_in_place(&mut a);
    fft_in_place(&mut b);
    for (x, y) in a.iter_mut().zip(&b) {
        *x *= y;
    }
    ifft_in_place(&mut a);
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util::rel_l2_error;

    #[test]
    fn fft_roundtrip() {
        let mut v: Vec<Complex64> =
            (0..256).map(|i| Complex64::new((i as f64).cos(), (i as f64 * 0.3).sin())).collect();
        let orig = v.clone();
        fft_in_place(&mut v);
        ifft_in_place(&mut v);
        assert!(rel_l2_error(&v, &orig) < 1e-12);
    }

    #[test]
    fn resample_roundtrip_bandlimited() {
        // Band-limited tone survives up/down resampling exactly.
        let n = 512;
        let tone: Vec<Complex64> = (0..n)
            .map(|i| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * 20.0 * i as f64 / n as f64))
            .collect();
        let up = resample(&tone, 1.0, 4.0).unwrap();
        assert_eq!(up.len(), 4 * n);
        let down = resample(&up, 4.0, 1.0).unwrap();
        assert!(rel_l2_error(&down, &tone) < 1e-10);
    }

    #[test]
    fn resample_rejects_non_integer_output() {
        let v = vec![Complex64::new(1.0, 0.0); 10];
        assert!(resample(&v, 3.0, 2.0).is_err());
    }

    #[test]
    fn angular_freqs_wraps_negative() {
        let w = angular_freqs(8, 8.0);
        assert!((w[1] - 2.0 * std::f64::consts::PI).abs() < 1e-12);
        assert!((w[7] + 2.0 * std::f64::consts::PI).abs() < 1e-12);
    }
}

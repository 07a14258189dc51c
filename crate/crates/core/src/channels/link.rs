//! Fiber/amplifier/WDM link parameters.

use super::ChannelError;
use crate::util::SPEED_OF_LIGHT;
use serde::{Deserialize, Serialize};

/// Parameters of a lumped-amplification WDM link.
///
/// Distances are in km, the dispersion parameter in ps/(nm*km) and the
/// nonlinear coefficient in 1/(W*km); conversions to SI happen at the
/// propagation boundary.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinkConfig {
    /// Fiber loss, dB/km.
    pub fiber_loss_db_km: f64,
    /// Kerr nonlinear coefficient gamma, 1/(W*km).
    pub nonlinear_coeff: f64,
    /// Chromatic dispersion D, ps/(nm*km).
    pub dispersion_ps_nm_km: f64,
    /// Center wavelength, m.
    pub center_wavelength_m: f64,
    /// Split-step size, km.
    pub ssfm_step_km: f64,
    /// Span length between amplifiers, km.
    pub span_length_km: f64,
    /// Number of spans.
    pub n_spans: usize,
    /// EDFA noise figure, dB. `-inf` disables ASE noise.
    pub edfa_noise_figure_db: f64,
    /// Number of WDM channels (odd, so a central channel exists).
    pub n_channels: usize,
    /// Symbol rate per channel, Baud.
    pub symbol_rate: f64,
    /// WDM channel spacing, Hz.
    pub channel_spacing_hz: f64,
    /// Pulse-shaping roll-off factor in [0, 1].
    pub rolloff: f64,
}

impl LinkConfig {
    /// Validates physical-parameter invariants.
    ///
    /// Returns warnings for conditions that are suspicious but allowed
    /// (channel spacing below the occupied bandwidth).
    pub fn validate(&self) -> Result<Vec<String>, ChannelError> {
        let positive = [
            ("center_wavelength_m", self.center_wavelength_m),
            ("ssfm_step_km", self.ssfm_step_km),
            ("span_length_km", self.span_length_km),
            ("symbol_rate", self.symbol_rate),
            ("channel_spacing_hz", self.channel_spacing_hz),
        ];
        for (name, v) in positive {
            if !(v > 0.0) || !v.is_finite() {
                return Err(ChannelError::InvalidLink(format!("{name} must be positive, got {v}")));
            }
        }
        // Loss, Kerr coefficient and dispersion may be exactly zero; the
        // degenerate settings are the analytic reference cases.
        let non_negative = [
            ("fiber_loss_db_km", self.fiber_loss_db_km),
            ("nonlinear_coeff", self.nonlinear_coeff),
            ("dispersion_ps_nm_km", self.dispersion_ps_nm_km),
        ];
        for (name, v) in non_negative {
            if !(v >= 0.0) || !v.is_finite() {
                return Err(ChannelError::InvalidLink(format!("{name} must be non-negative, got {v}")));
            }
        }
        if self.n_spans == 0 {
            return Err(ChannelError::InvalidLink("n_spans must be positive".into()));
        }
        if self.n_channels % 2 == 0 || self.n_channels == 0 {
            return Err(ChannelError::InvalidLink(format!(
                "n_channels must be odd so the central channel is defined, got {}",
                self.n_channels
            )));
        }
        if !(0.0..=1.0).contains(&self.rolloff) {
            return Err(ChannelError::InvalidLink(format!("rolloff must be in [0,1], got {}", self.rolloff)));
        }
        let steps = self.span_length_km / self.ssfm_step_km;
        if (steps - steps.round()).abs() > 1e-9 * steps {
            return Err(ChannelError::InvalidLink(format!(
                "span_length {} km is not divisible by ssfm_step {} km",
                self.span_length_km, self.ssfm_step_km
            )));
        }
        let mut warnings = Vec::new();
        let occupied = self.symbol_rate * (1.0 + self.rolloff);
        if self.channel_spacing_hz < occupied {
            warnings.push(format!(
                "channel spacing {} Hz below occupied bandwidth {} Hz; channels will overlap",
                self.channel_spacing_hz, occupied
            ));
        }
        Ok(warnings)
    }

    /// Steps per span (validated integral).
    pub fn steps_per_span(&self) -> usize {
        (self.span_length_km / self.ssfm_step_km).round() as usize
    }

    /// Group-velocity dispersion beta2 in s^2/m, from D and lambda0.
    pub fn beta2_s2_per_m(&self) -> f64 {
        let d_si = self.dispersion_ps_nm_km * 1e-6; // s/m^2
        -d_si * self.center_wavelength_m * self.center_wavelength_m
            / (2.0 * std::f64::consts::PI * SPEED_OF_LIGHT)
    }

    /// Optical carrier frequency, Hz.
    pub fn carrier_frequency_hz(&self) -> f64 {
        SPEED_OF_LIGHT / self.center_wavelength_m
    }

    /// EDFA gain that exactly restores one span of fiber loss, dB.
    pub fn span_gain_db(&self) -> f64 {
        self.fiber_loss_db_km * self.span_length_km
    }

    /// Total link length, km.
    pub fn total_length_km(&self) -> f64 {
        self.span_length_km * self.n_spans as f64
    }

    /// Single-channel configuration useful for back-to-back tests.
    pub fn with_spans(mut self, n_spans: usize) -> Self {
        self.n_spans = n_spans;
        self
    }

    /// 28-GBaud 5-channel reference link (80 km spans, EDFA NF 3 dB).
    pub fn optimization_reference() -> Self {
        LinkConfig {
            fiber_loss_db_km: 0.2,
            nonlinear_coeff: 1.3,
            dispersion_ps_nm_km: 17.0,
            center_wavelength_m: 1.55e-6,
            ssfm_step_km: 0.1,
            span_length_km: 80.0,
            n_spans: 10,
            edfa_noise_figure_db: 3.0,
            n_channels: 5,
            symbol_rate: 28e9,
            channel_spacing_hz: 30e9,
            rolloff: 0.01,
        }
    }

    /// 10-GBaud 5-channel link used for the transmission study
    /// (25 GHz grid, roll-off 0.5).
    pub fn transmission_reference() -> Self {
        LinkConfig {
            symbol_rate: 10e9,
            channel_spacing_hz: 25e9,
            rolloff: 0.5,
            ..Self::optimization_reference()
        }
    }
}

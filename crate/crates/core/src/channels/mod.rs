//! Channel models: nonlinear WDM fiber propagation via the split-step
//! Fourier method with lumped EDFA amplification, plus an AWGN reference.

mod awgn;
mod edfa;
mod field;
mod link;
mod ssfm;
mod wdm;

pub use awgn::awgn_apply;
pub use edfa::lumped_amplify;
pub use field::OpticalField;
pub use link::LinkConfig;
pub use ssfm::ssfm_propagate;
pub use wdm::{channel_select, wdm_assemble, wdm_sample_rate};

use thiserror::Error;

/// Errors from channel-model operations.
#[derive(Debug, Error)]
pub enum ChannelError {
    #[error("invalid link configuration: {0}")]
    InvalidLink(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("non-finite samples in input field")]
    NonFiniteInput,
    #[error("field overflowed to non-finite values at split step {step} of span {span}")]
    Overflow { span: usize, step: usize },
    #[error("sample rate {rate} Hz too low to place {channels} channels at {spacing} Hz spacing")]
    SampleRateTooLow { rate: f64, channels: usize, spacing: f64 },
    #[error("resampling failed: {0}")]
    Resample(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("bad field file: {0}")]
    BadFile(String),
}

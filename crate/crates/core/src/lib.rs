//! Probabilistic constellation shaping and turbo-coded BICM over a
//! simulated nonlinear WDM fiber link.
//!
//! The crate is organized as a signal chain:
//!
//! - [`channels`]: split-step Fourier fiber propagation with lumped EDFA
//!   amplification, WDM multiplexing, and an AWGN reference channel.
//! - [`air`]: per-symbol 2D-Gaussian auxiliary channel fits and the
//!   mismatched-decoding achievable information rate they induce.
//! - [`shaping`]: input PMF optimization (Blahut-Arimoto against a channel
//!   sampler, Maxwell-Boltzmann brute force, geometric Huffman dyadic
//!   approximation, per-dimension products).
//! - [`labeling`]: many-to-one bit labelings realizing dyadic PMFs, bit
//!   mapping and soft demapping with ambiguous-bit marginalization.
//! - [`turbo`]: rate-adaptive parallel-concatenated convolutional code with
//!   log-domain BCJR decoding and the iterative demapping loop.
//! - [`dsp`]: pilot framing, pulse shaping, quantization and the coherent
//!   receiver chain (frame sync, CD compensation, frequency offset, pilot
//!   CMA, phase tracking).
//! - [`analysis`]: BER counting, EXIT characteristics, run reports.
//! - [`sweep`]: experiment configuration, the end-to-end pipeline and the
//!   power/distance sweep driver.
//! - [`oracles`]: slow, independent reference computations (quadrature MI,
//!   direct DFT, exhaustive searches) used by self-checks and tests.
//!
//! All randomness is drawn from explicitly seeded generators; repeated runs
//! with the same seeds are bit-identical.

pub mod air;
pub mod analysis;
pub mod channels;
pub mod dsp;
pub mod fft;
pub mod labeling;
pub mod oracles;
pub mod shaping;
pub mod sweep;
pub mod turbo;
pub mod util;

pub use num_complex::Complex64;

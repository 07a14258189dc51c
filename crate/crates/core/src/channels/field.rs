//! Sampled optical field and its binary file format.

use super::ChannelError;
use num_complex::Complex64;
use std::io::{Read, Write};
use std::path::Path;

const MAGIC: &[u8; 8] = b"CSHAPE01";

/// A sampled optical field: one complex baseband waveform per polarization.
#[derive(Debug, Clone, PartialEq)]
pub struct OpticalField {
    /// Per-polarization sample arrays, all of equal length.
    pub pols: Vec<Vec<Complex64>>,
    /// Sample rate, Hz.
    pub sample_rate: f64,
    /// Absolute center frequency of the band, Hz.
    pub center_frequency: f64,
}

impl OpticalField {
    /// Builds a field, checking that polarizations have equal length.
    pub fn new(pols: Vec<Vec<Complex64>>, sample_rate: f64, center_frequency: f64) -> Result<Self, ChannelError> {
        if pols.is_empty() {
            return Err(ChannelError::InvalidField("at least one polarization required".into()));
        }
        let len = pols[0].len();
        if pols.iter().any(|p| p.len() != len) {
            return Err(ChannelError::InvalidField("polarizations differ in length".into()));
        }
        if !(sample_rate > 0.0) {
            return Err(ChannelError::InvalidField(format!("sample rate must be positive, got {sample_rate}")));
        }
        Ok(OpticalField { pols, sample_rate, center_frequency })
    }

    /// Single-polarization shorthand.
    pub fn single(samples: Vec<Complex64>, sample_rate: f64, center_frequency: f64) -> Self {
        OpticalField { pols: vec![samples], sample_rate, center_frequency }
    }

    pub fn n_pols(&self) -> usize {
        self.pols.len()
    }

    pub fn n_samples(&self) -> usize {
        self.pols[0].len()
    }

    /// Total energy summed over polarizations (sum |a|^2, unitless grid).
    pub fn energy(&self) -> f64 {
        self.pols
            .iter()
            .map(|p| {
                let sq: Vec<f64> = p.iter().map(|s| s.norm_sqr()).collect();
                crate::util::pairwise_sum(&sq)
            })
            .sum()
    }

    /// True if every sample in every polarization is finite.
    pub fn is_finite(&self) -> bool {
        self.pols.iter().all(|p| p.iter().all(|s| s.re.is_finite() && s.im.is_finite()))
    }

    /// Writes the field in the `CSHAPE01` binary format: 8-byte magic,
    /// little-endian u32 {n_pol, reserved}, u64 n_samples, f64 sample rate,
    /// f64 center frequency, then per polarization interleaved (re, im)
    /// f64 pairs.
    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<(), ChannelError> {
        w.write_all(MAGIC)?;
        w.write_all(&(self.n_pols() as u32).to_le_bytes())?;
        w.write_all(&0u32.to_le_bytes())?;
        w.write_all(&(self.n_samples() as u64).to_le_bytes())?;
        w.write_all(&self.sample_rate.to_le_bytes())?;
        w.write_all(&self.center_frequency.to_le_bytes())?;
        let mut buf = Vec::with_capacity(self.n_samples() * 16);
        for pol in &self.pols {
            buf.clear();
            for s in pol {
                buf.extend_from_slice(&s.re.to_le_bytes());
                buf.extend_from_slice(&s.im.to_le_bytes());
            }
            w.write_all(&buf)?;
        }
        Ok(())
    }

    /// Reads a `CSHAPE01` field.
    pub fn read_from<R: Read>(r: &mut R) -> Result<Self, ChannelError> {
        let mut magic = [0u8; 8];
        r.read_exact(&mut magic)?;
        if &magic != MAGIC {
            return Err(ChannelError::BadFile(format!("bad magic {magic:?}")));
        }
        let n_pol = read_u32(r)? as usize;
        let _reserved = read_u32(r)?;
        let n_samples = read_u64(r)? as usize;
        let sample_rate = read_f64(r)?;
        let center_frequency = read_f64(r)?;
        if n_pol == 0 || n_pol > 2 {
            return Err(ChannelError::BadFile(format!("unsupported polarization count {n_pol}")));
        }
        let mut pols = Vec::with_capacity(n_pol);
        for _ in 0..n_pol {
            let mut raw = vec![0u8; n_samples * 16];
            r.read_exact(&mut raw)?;
            let samples = raw
                .chunks_exact(16)
                .map(|c| {
                    let re = f64::from_le_bytes(c[..8].try_into().unwrap());
                    let im = f64::from_le_bytes(c[8..].try_into().unwrap());
                    Complex64::new(re, im)
                })
                .collect();
            pols.push(samples);
        }
        OpticalField::new(pols, sample_rate, center_frequency)
    }

    pub fn save(&self, path: &Path) -> Result<(), ChannelError> {
        let mut f = std::io::BufWriter::new(std::fs::File::create(path)?);
        self.write_to(&mut f)
    }

    pub fn load(path: &Path) -> Result<Self, ChannelError> {
        let mut f = std::io::BufReader::new(std::fs::File::open(path)?);
        Self::read_from(&mut f)
    }
}

fn read_u32<R: Read>(r: &mut R) -> Result<u32, std::io::Error> {
    let mut b = [0u8; 4];
    r.read_exact(&mut b)?;
    Ok(u32::from_le_bytes(b))
}

fn read_u64<R: Read>(r: &mut R) -> Result<u64, std::io::Error> {
    let mut b = [0u8; 8];
    r.read_exact(&mut b)?;
    Ok(u64::from_le_bytes(b))
}

fn read_f64<R: Read>(r: &mut R) -> Result<f64, std::io::Error> {
    let mut b = [0u8; 8];
    r.read_exact(&mut b)?;
    Ok(f64::from_le_bytes(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_roundtrip_is_bit_exact() {
        let mut rng = crate::util::seeded_rng(3);
        let pols: Vec<Vec<Complex64>> = (0..2)
            .map(|_| (0..100).map(|_| crate::util::complex_gaussian(&mut rng, 1.0)).collect())
            .collect();
        let field = OpticalField::new(pols, 64e9, 193.4e12).unwrap();
        let mut buf = Vec::new();
        field.write_to(&mut buf).unwrap();
        let back = OpticalField::read_from(&mut buf.as_slice()).unwrap();
        assert_eq!(field, back);
    }

    #[test]
    fn mismatched_pol_lengths_rejected() {
        let res = OpticalField::new(
            vec![vec![Complex64::new(0.0, 0.0); 4], vec![Complex64::new(0.0, 0.0); 5]],
            1.0,
            0.0,
        );
        assert!(res.is_err());
    }

    #[test]
    fn truncated_file_rejected() {
        let field = OpticalField::single(vec![Complex64::new(1.0, 2.0); 8], 1.0, 0.0);
        let mut buf = Vec::new();
        field.write_to(&mut buf).unwrap();
        buf.truncate(buf.len() - 5);
        assert!(OpticalField::read_from(&mut buf.as_slice()).is_err());
    }
}

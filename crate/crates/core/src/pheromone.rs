//! Pheromone field: per-cell non-negative concentrations deposited by ants
//! and decayed multiplicatively by evaporation. There is no spatial
//! diffusion; a deposit stays at its emission cell until it evaporates.

use crate::habitat::TorusCoord;
use crate::pgm::GrayImage;
use thiserror::Error;

#[derive(Error, Debug, PartialEq)]
pub enum FieldError {
    #[error("pheromone deposit must be non-negative, got {0}")]
    NegativeDeposit(f64),
    #[error("evaporation rate must lie in [0, 1), got {0}")]
    RateOutOfRange(f64),
    #[error("raw field dump is malformed: {0}")]
    MalformedDump(&'static str),
}

/// Mutable grid of pheromone concentrations, row-major, same dimensions as
/// the habitat it belongs to. Concentrations never go negative.
#[derive(Clone, PartialEq, Debug)]
pub struct PheromoneField {
    width: usize,
    height: usize,
    sigma: Vec<f64>,
}

impl PheromoneField {
    pub fn new(width: usize, height: usize) -> Self {
        assert!(width > 0 && height > 0, "field dimensions must be nonzero");
        Self { width, height, sigma: vec![0.0; width * height] }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    fn index(&self, c: TorusCoord) -> usize {
        debug_assert!(
            c.x >= 0 && (c.x as usize) < self.width && c.y >= 0 && (c.y as usize) < self.height,
            "coordinate {c:?} is not canonical for {}x{}",
            self.width,
            self.height,
        );
        c.y as usize * self.width + c.x as usize
    }

    /// Concentration at a canonical coordinate.
    pub fn sigma(&self, c: TorusCoord) -> f64 {
        self.sigma[self.index(c)]
    }

    pub fn values(&self) -> &[f64] {
        &self.sigma
    }

    /// Adds `amount` at `c`, leaving every other cell untouched.
    pub fn deposit(&mut self, c: TorusCoord, amount: f64) -> Result<(), FieldError> {
        if amount.is_nan() || amount < 0.0 {
            return Err(FieldError::NegativeDeposit(amount));
        }
        let i = self.index(c);
        self.sigma[i] += amount;
        Ok(())
    }

    /// Multiplies every cell by `1 - rate`. The field forgets its distant
    /// history on a timescale of roughly `1 / rate` steps.
    pub fn evaporate(&mut self, rate: f64) -> Result<(), FieldError> {
        if !(0.0..1.0).contains(&rate) {
            return Err(FieldError::RateOutOfRange(rate));
        }
        let keep = 1.0 - rate;
        for s in &mut self.sigma {
            *s *= keep;
        }
        Ok(())
    }

    /// Sum of all cells in fixed row-major order, so the value is
    /// bit-reproducible across runs.
    pub fn total(&self) -> f64 {
        self.sigma.iter().sum()
    }

    pub fn max_sigma(&self) -> f64 {
        self.sigma.iter().fold(0.0, |m, &s| if s > m { s } else { m })
    }

    /// 8-bit codification of the field: the momentary maximum maps to 255
    /// (white), fully evaporated cells map to 0 (black), everything else is
    /// proportional with half-up rounding. An all-zero field is all black.
    pub fn snapshot(&self) -> GrayImage {
        let max = self.max_sigma();
        let pixels = if max > 0.0 {
            self.sigma.iter().map(|&s| (255.0 * s / max).round() as u8).collect()
        } else {
            vec![0u8; self.sigma.len()]
        };
        GrayImage::new(self.width, self.height, pixels).expect("field dimensions are valid")
    }

    /// Raw dump: width and height as little-endian u32, then every cell as a
    /// little-endian IEEE-754 f64 in row-major order.
    pub fn to_raw_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(8 + self.sigma.len() * 8);
        out.extend_from_slice(&(self.width as u32).to_le_bytes());
        out.extend_from_slice(&(self.height as u32).to_le_bytes());
        for s in &self.sigma {
            out.extend_from_slice(&s.to_le_bytes());
        }
        out
    }

    pub fn from_raw_bytes(bytes: &[u8]) -> Result<Self, FieldError> {
        if bytes.len() < 8 {
            return Err(FieldError::MalformedDump("missing dimension header"));
        }
        let width = u32::from_le_bytes(bytes[0..4].try_into().unwrap()) as usize;
        let height = u32::from_le_bytes(bytes[4..8].try_into().unwrap()) as usize;
        if width == 0 || height == 0 {
            return Err(FieldError::MalformedDump("zero dimension"));
        }
        let body = &bytes[8..];
        if body.len() != width * height * 8 {
            return Err(FieldError::MalformedDump("payload length does not match dimensions"));
        }
        let sigma = body
            .chunks_exact(8)
            .map(|c| f64::from_le_bytes(c.try_into().unwrap()))
            .collect();
        Ok(Self { width, height, sigma })
    }
}

//! Image habitats: the immutable grayscale grid a colony lives on, with
//! toroidal coordinate semantics so the lattice has no borders.

use crate::pgm::{self, GrayImage, PgmError};
use thiserror::Error;

/// Smallest legal habitat edge. A 3x3 sampling window on anything smaller
/// would visit the same cell twice after wrapping.
pub const MIN_HABITAT_DIM: usize = 3;

#[derive(Error, Debug)]
pub enum HabitatError {
    #[error("habitat must be at least {MIN_HABITAT_DIM}x{MIN_HABITAT_DIM} cells, got {width}x{height}")]
    TooSmall { width: usize, height: usize },
    #[error(transparent)]
    Pgm(#[from] PgmError),
}

/// Lattice coordinate. Unbounded until [`TorusCoord::wrap`] reduces it to
/// canonical form `0 <= x < width`, `0 <= y < height`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TorusCoord {
    pub x: i64,
    pub y: i64,
}

impl TorusCoord {
    pub fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    /// Canonical coordinate under mathematical (non-negative) modulus.
    /// Idempotent: wrapping a canonical coordinate returns it unchanged.
    pub fn wrap(self, width: usize, height: usize) -> Self {
        Self {
            x: self.x.rem_euclid(width as i64),
            y: self.y.rem_euclid(height as i64),
        }
    }

    pub fn offset(self, dx: i64, dy: i64) -> Self {
        Self { x: self.x + dx, y: self.y + dy }
    }
}

/// The nine intensities of a 3x3 neighborhood in row-major order:
/// NW, N, NE, W, center, E, SW, S, SE. The center sits at index 4.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Window9(pub [u8; 9]);

impl Window9 {
    pub fn values(&self) -> &[u8; 9] {
        &self.0
    }

    pub fn center(&self) -> u8 {
        self.0[4]
    }
}

/// Immutable 8-bit intensity grid. Row 0 is the top row; values are stored
/// row-major. Replacing the environment mid-run swaps the whole value.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Habitat {
    image: GrayImage,
}

impl Habitat {
    pub fn new(width: usize, height: usize, intensities: Vec<u8>) -> Result<Self, HabitatError> {
        Self::from_image(GrayImage::new(width, height, intensities)?)
    }

    pub fn from_image(image: GrayImage) -> Result<Self, HabitatError> {
        if image.width() < MIN_HABITAT_DIM || image.height() < MIN_HABITAT_DIM {
            return Err(HabitatError::TooSmall {
                width: image.width(),
                height: image.height(),
            });
        }
        Ok(Self { image })
    }

    /// Habitat with every cell at `value`.
    pub fn homogeneous(width: usize, height: usize, value: u8) -> Result<Self, HabitatError> {
        Self::from_image(GrayImage::filled(width, height, value)?)
    }

    /// Parses a P2/P5 graymap and checks habitat invariants.
    pub fn from_pgm(bytes: &[u8]) -> Result<Self, HabitatError> {
        Self::from_image(pgm::decode(bytes)?)
    }

    pub fn to_pgm(&self) -> Vec<u8> {
        pgm::encode(&self.image)
    }

    pub fn width(&self) -> usize {
        self.image.width()
    }

    pub fn height(&self) -> usize {
        self.image.height()
    }

    pub fn image(&self) -> &GrayImage {
        &self.image
    }

    /// Intensity at a canonical coordinate.
    pub fn intensity(&self, c: TorusCoord) -> u8 {
        self.image.get(c.x as usize, c.y as usize)
    }

    /// Mean intensity over the whole grid.
    pub fn mean_intensity(&self) -> f64 {
        let sum: u64 = self.image.pixels().iter().map(|&p| u64::from(p)).sum();
        sum as f64 / (self.width() * self.height()) as f64
    }

    /// The 3x3 window centered at `center`, every neighbor wrapped
    /// individually onto the torus.
    pub fn window(&self, center: TorusCoord) -> Window9 {
        let mut values = [0u8; 9];
        let mut i = 0;
        for dy in -1..=1 {
            for dx in -1..=1 {
                let c = center.offset(dx, dy).wrap(self.width(), self.height());
                values[i] = self.intensity(c);
                i += 1;
            }
        }
        Window9(values)
    }
}

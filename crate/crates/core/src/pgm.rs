//! Minimal PGM (portable graymap) codec.
//!
//! Reads P2 (ASCII) and P5 (binary) graymaps with maxval <= 255 and writes
//! byte-exact P5: `P5\n<w> <h>\n255\n` followed by one raw byte per pixel.
//! `#` comment lines are tolerated between header tokens.

use thiserror::Error;

#[derive(Error, Debug, PartialEq, Eq)]
pub enum PgmError {
    #[error("unsupported magic number `{0}`; only P2 and P5 graymaps are accepted")]
    UnsupportedMagic(String),
    #[error("malformed header: {0}")]
    MalformedHeader(&'static str),
    #[error("maxval {0} exceeds 255; deeper samples are not supported")]
    MaxvalTooLarge(u32),
    #[error("image dimensions must be nonzero, got {width}x{height}")]
    ZeroDimension { width: usize, height: usize },
    #[error("truncated pixel data: expected {expected} samples, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("sample value {value} exceeds maxval {maxval}")]
    SampleOutOfRange { value: u32, maxval: u32 },
    #[error("pixel buffer holds {got} values, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
}

/// 8-bit grayscale raster. Row 0 is the top image row; pixels are row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GrayImage {
    width: usize,
    height: usize,
    pixels: Vec<u8>,
}

impl GrayImage {
    pub fn new(width: usize, height: usize, pixels: Vec<u8>) -> Result<Self, PgmError> {
        if width == 0 || height == 0 {
            return Err(PgmError::ZeroDimension { width, height });
        }
        if pixels.len() != width * height {
            return Err(PgmError::LengthMismatch {
                expected: width * height,
                got: pixels.len(),
            });
        }
        Ok(Self { width, height, pixels })
    }

    pub fn filled(width: usize, height: usize, value: u8) -> Result<Self, PgmError> {
        Self::new(width, height, vec![value; width * height])
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    /// Pixel at column `x`, row `y`. Panics out of range.
    pub fn get(&self, x: usize, y: usize) -> u8 {
        assert!(x < self.width && y < self.height, "pixel ({x},{y}) out of range");
        self.pixels[y * self.width + x]
    }
}

/// Encodes as binary PGM, always `P5\n<w> <h>\n255\n` + raw bytes.
pub fn encode(image: &GrayImage) -> Vec<u8> {
    let mut out = format!("P5\n{} {}\n255\n", image.width, image.height).into_bytes();
    out.extend_from_slice(&image.pixels);
    out
}

/// Decodes a P2 or P5 graymap with maxval <= 255.
pub fn decode(bytes: &[u8]) -> Result<GrayImage, PgmError> {
    let magic = bytes.get(0..2).ok_or(PgmError::MalformedHeader("missing magic number"))?;
    let binary = match magic {
        b"P2" => false,
        b"P5" => true,
        other => {
            return Err(PgmError::UnsupportedMagic(
                String::from_utf8_lossy(other).into_owned(),
            ))
        }
    };

    let mut cursor = Cursor { bytes, pos: 2 };
    let width = cursor.number("width")? as usize;
    let height = cursor.number("height")? as usize;
    if width == 0 || height == 0 {
        return Err(PgmError::ZeroDimension { width, height });
    }
    let maxval = cursor.number("maxval")?;
    if maxval > 255 {
        return Err(PgmError::MaxvalTooLarge(maxval));
    }
    if maxval == 0 {
        return Err(PgmError::MalformedHeader("maxval must be at least 1"));
    }

    let expected = width * height;
    let mut pixels = Vec::with_capacity(expected);
    if binary {
        // Exactly one whitespace byte separates the header from raw samples.
        match cursor.bytes.get(cursor.pos) {
            Some(b) if b.is_ascii_whitespace() => cursor.pos += 1,
            _ => return Err(PgmError::MalformedHeader("missing whitespace after maxval")),
        }
        let raw = &cursor.bytes[cursor.pos..];
        if raw.len() < expected {
            return Err(PgmError::Truncated { expected, found: raw.len() });
        }
        for &b in &raw[..expected] {
            if u32::from(b) > maxval {
                return Err(PgmError::SampleOutOfRange { value: u32::from(b), maxval });
            }
            pixels.push(b);
        }
    } else {
        for found in 0..expected {
            let value = match cursor.try_number() {
                Some(v) => v?,
                None => return Err(PgmError::Truncated { expected, found }),
            };
            if value > maxval {
                return Err(PgmError::SampleOutOfRange { value, maxval });
            }
            pixels.push(value as u8);
        }
    }
    GrayImage::new(width, height, pixels)
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_filler(&mut self) {
        while let Some(&b) = self.bytes.get(self.pos) {
            if b.is_ascii_whitespace() {
                self.pos += 1;
            } else if b == b'#' {
                while let Some(&b) = self.bytes.get(self.pos) {
                    self.pos += 1;
                    if b == b'\n' {
                        break;
                    }
                }
            } else {
                break;
            }
        }
    }

    /// Next unsigned decimal token, or None at end of input.
    fn try_number(&mut self) -> Option<Result<u32, PgmError>> {
        self.skip_filler();
        let start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| !b.is_ascii_whitespace() && *b != b'#')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let token = &self.bytes[start..self.pos];
        let parsed = std::str::from_utf8(token)
            .ok()
            .and_then(|t| t.parse::<u32>().ok())
            .ok_or(PgmError::MalformedHeader("expected an unsigned decimal token"));
        Some(parsed)
    }

    fn number(&mut self, what: &'static str) -> Result<u32, PgmError> {
        match self.try_number() {
            Some(r) => r,
            None => Err(match what {
                "width" => PgmError::MalformedHeader("missing width"),
                "height" => PgmError::MalformedHeader("missing height"),
                _ => PgmError::MalformedHeader("missing maxval"),
            }),
        }
    }
}

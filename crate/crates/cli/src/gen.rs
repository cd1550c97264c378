//! Synthetic habitat generators. The cross and the homogeneous image can
//! be produced on demand; any user-supplied PGM serves for everything
//! else.

use antmap_core::Habitat;
use anyhow::{bail, Result};

/// Centered plus-sign of `fg` intensity on a `bg` background. The vertical
/// arm spans every row and the horizontal arm every column, so the
/// foreground covers exactly `t*w + t*h - t*t` cells.
pub fn gen_cross(width: usize, height: usize, fg: u8, bg: u8, thickness: usize) -> Result<Habitat> {
    if fg == bg {
        bail!("cross and background intensities must differ (both are {fg})");
    }
    if thickness == 0 {
        bail!("arm thickness must be at least 1");
    }
    if thickness > width || thickness > height {
        bail!("arm thickness {thickness} exceeds the {width}x{height} habitat");
    }
    let x0 = (width - thickness) / 2;
    let y0 = (height - thickness) / 2;
    let mut pixels = vec![bg; width * height];
    for y in 0..height {
        for x in 0..width {
            let in_vertical_arm = x >= x0 && x < x0 + thickness;
            let in_horizontal_arm = y >= y0 && y < y0 + thickness;
            if in_vertical_arm || in_horizontal_arm {
                pixels[y * width + x] = fg;
            }
        }
    }
    Ok(Habitat::new(width, height, pixels)?)
}

/// Habitat with every cell at `value`.
pub fn gen_flat(width: usize, height: usize, value: u8) -> Result<Habitat> {
    Ok(Habitat::homogeneous(width, height, value)?)
}

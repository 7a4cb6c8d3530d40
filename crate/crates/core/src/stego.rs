use crate::error::{Error, Result};
use crate::image::GrayImage;

/// Legal stego values that read as black.
pub const BLACK_BAND: std::ops::RangeInclusive<u8> = 0..=12;
/// Legal stego values that read as white.
pub const WHITE_BAND: std::ops::RangeInclusive<u8> = 243..=255;

/// Which band a stego value falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Band {
    Black,
    White,
}

impl Band {
    pub fn of(value: u8) -> Option<Band> {
        if BLACK_BAND.contains(&value) {
            Some(Band::Black)
        } else if WHITE_BAND.contains(&value) {
            Some(Band::White)
        } else {
            None
        }
    }
}

/// Grayscale image whose every pixel lies in `[0,12]` or `[243,255]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StegoImage(GrayImage);

impl StegoImage {
    pub fn as_gray(&self) -> &GrayImage {
        &self.0
    }

    pub fn into_gray(self) -> GrayImage {
        self.0
    }

    pub fn width(&self) -> usize {
        self.0.width()
    }

    pub fn height(&self) -> usize {
        self.0.height()
    }

    pub fn pixels(&self) -> &[u8] {
        self.0.pixels()
    }

    pub(crate) fn from_gray_unchecked(img: GrayImage) -> Self {
        debug_assert!(img.pixels().iter().all(|&v| Band::of(v).is_some()));
        StegoImage(img)
    }
}

impl TryFrom<GrayImage> for StegoImage {
    type Error = Error;

    /// Fails with `BandViolation` at the first pixel in the gap `[13,242]`.
    fn try_from(img: GrayImage) -> Result<Self> {
        if let Some(index) = img.pixels().iter().position(|&v| Band::of(v).is_none()) {
            return Err(Error::BandViolation {
                index,
                value: img.pixels()[index],
            });
        }
        Ok(StegoImage(img))
    }
}

impl From<StegoImage> for GrayImage {
    fn from(img: StegoImage) -> Self {
        img.0
    }
}

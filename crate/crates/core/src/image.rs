use crate::error::{Error, Result};

/// Row-major 8-bit grayscale image.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GrayImage {
    width: usize,
    height: usize,
    pixels: Vec<u8>,
}

impl GrayImage {
    pub fn new(width: usize, height: usize, pixels: Vec<u8>) -> Result<Self> {
        if width == 0 || height == 0 || width.checked_mul(height) != Some(pixels.len()) {
            return Err(Error::InvalidDimensions {
                width,
                height,
                len: pixels.len(),
            });
        }
        Ok(GrayImage {
            width,
            height,
            pixels,
        })
    }

    /// Image of the given size with every pixel set to `value`.
    pub fn filled(width: usize, height: usize, value: u8) -> Result<Self> {
        Self::new(width, height, vec![value; width.saturating_mul(height)])
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn len(&self) -> usize {
        self.pixels.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.pixels.is_empty()
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    pub fn pixels_mut(&mut self) -> &mut [u8] {
        &mut self.pixels
    }

    pub fn into_pixels(self) -> Vec<u8> {
        self.pixels
    }

    pub fn get(&self, row: usize, col: usize) -> u8 {
        self.pixels[row * self.width + col]
    }
}

/// A cover image: every pixel is exactly 0 (black) or 255 (white).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryImage(GrayImage);

impl BinaryImage {
    pub fn as_gray(&self) -> &GrayImage {
        &self.0
    }

    pub fn into_gray(self) -> GrayImage {
        self.0
    }

    pub fn width(&self) -> usize {
        self.0.width
    }

    pub fn height(&self) -> usize {
        self.0.height
    }

    pub fn pixels(&self) -> &[u8] {
        &self.0.pixels
    }

    /// Wraps pixels already known to be 0/255. Used where the values are
    /// produced by thresholding and cannot be anything else.
    pub(crate) fn from_gray_unchecked(img: GrayImage) -> Self {
        debug_assert!(img.pixels.iter().all(|&v| v == 0 || v == 255));
        BinaryImage(img)
    }
}

impl TryFrom<GrayImage> for BinaryImage {
    type Error = Error;

    fn try_from(img: GrayImage) -> Result<Self> {
        validate_binary(img)
    }
}

impl From<BinaryImage> for GrayImage {
    fn from(img: BinaryImage) -> Self {
        img.0
    }
}

/// Retypes `img` as a cover image, or reports the first pixel that is
/// neither 0 nor 255.
pub fn validate_binary(img: GrayImage) -> Result<BinaryImage> {
    if let Some((index, &value)) = img
        .pixels
        .iter()
        .enumerate()
        .find(|&(_, &v)| v != 0 && v != 255)
    {
        return Err(Error::NotBinary { index, value });
    }
    Ok(BinaryImage(img))
}

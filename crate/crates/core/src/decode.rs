//! Share fusion and OR stacking.
//!
//! A white-source pixel leaves noise 0 at the same half in both shares, so
//! the shares agree there; a black-source pixel puts noise 255 at opposite
//! halves and the value halves (0..=6) never equal 255, so the shares agree
//! nowhere. Fusion inverts the split exactly and rejects any pair that the
//! split cannot have produced.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::image::GrayImage;
use crate::shares::{PixelPair, Share};
use crate::stego::{Band, StegoImage};

/// Stacked halves at or above this read as black ink.
pub const STACK_INK_THRESHOLD: u8 = 243;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PixelClass {
    Black,
    White,
}

impl From<PixelClass> for Band {
    fn from(c: PixelClass) -> Band {
        match c {
            PixelClass::Black => Band::Black,
            PixelClass::White => Band::White,
        }
    }
}

/// White iff the two shares agree on at least one half.
pub fn classify_pair(pair1: PixelPair, pair2: PixelPair) -> PixelClass {
    if pair1.0 == pair2.0 || pair1.1 == pair2.1 {
        PixelClass::White
    } else {
        PixelClass::Black
    }
}

/// Reconstructs the stego value from share 1's and share 2's pair.
pub fn fuse_pair(pair1: PixelPair, pair2: PixelPair) -> Result<u8> {
    fuse_at(0, pair1, pair2)
}

fn fuse_at(index: usize, pair1: PixelPair, pair2: PixelPair) -> Result<u8> {
    let value = match classify_pair(pair1, pair2) {
        PixelClass::White => fuse_white(pair1, pair2),
        PixelClass::Black => fuse_black(pair1, pair2),
    };
    value.ok_or(Error::InconsistentPair {
        index,
        pair1,
        pair2,
    })
}

fn fuse_white(pair1: PixelPair, pair2: PixelPair) -> Option<u8> {
    // The noise half is the one where both shares hold 0.
    let (a, b) = match (pair1, pair2) {
        ((0, a), (0, b)) => (a, b),
        ((a, 0), (b, 0)) => (a, b),
        _ => return None,
    };
    if !(248..=255).contains(&a) || !(248..=255).contains(&b) {
        return None;
    }
    let sum = u16::from(a) + u16::from(b);
    if a == b && a >= 250 {
        Some((sum - 256) as u8)
    } else if b == a + 1 {
        Some((sum - 254) as u8)
    } else {
        None
    }
}

fn fuse_black(pair1: PixelPair, pair2: PixelPair) -> Option<u8> {
    let (v1, v2) = match (pair1, pair2) {
        ((v1, 255), (255, v2)) => (v1, v2),
        ((255, v1), (v2, 255)) => (v1, v2),
        _ => return None,
    };
    if v1 > 6 || v2 > 6 {
        return None;
    }
    (v2 == v1 || v2 == v1 + 1).then_some(v1 + v2)
}

fn check_dims(share1: &Share, share2: &Share) -> Result<()> {
    if share1.width() != share2.width() || share1.height() != share2.height() {
        return Err(Error::DimensionMismatch(format!(
            "share 1 is {}x{}, share 2 is {}x{}",
            share1.width(),
            share1.height(),
            share2.width(),
            share2.height()
        )));
    }
    Ok(())
}

/// Fuses every pair of the two shares back into the `m x n` stego image.
pub fn decode_shares(share1: &Share, share2: &Share) -> Result<StegoImage> {
    check_dims(share1, share2)?;
    let pixels = share1
        .as_gray()
        .pixels()
        .par_chunks_exact(2)
        .zip(share2.as_gray().pixels().par_chunks_exact(2))
        .enumerate()
        .map(|(p, (a, b))| fuse_at(p, (a[0], a[1]), (b[0], b[1])))
        .collect::<Result<Vec<u8>>>()?;
    let img = GrayImage::new(share1.width() / 2, share1.height(), pixels)?;
    Ok(StegoImage::from_gray_unchecked(img))
}

/// Bitwise OR of the two shares, the digital stand-in for laying one
/// transparency over the other.
pub fn stack_or(share1: &Share, share2: &Share) -> Result<GrayImage> {
    check_dims(share1, share2)?;
    let pixels = share1
        .as_gray()
        .pixels()
        .iter()
        .zip(share2.as_gray().pixels())
        .map(|(a, b)| a | b)
        .collect();
    GrayImage::new(share1.width(), share1.height(), pixels)
}

/// Count of inked halves in a stacked pair.
pub fn stacked_weight(pair: PixelPair) -> u8 {
    u8::from(pair.0 >= STACK_INK_THRESHOLD) + u8::from(pair.1 >= STACK_INK_THRESHOLD)
}

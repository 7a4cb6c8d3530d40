//! Hiding a framed payload in a binary cover, two bits per cover pixel.
//!
//! Framed byte `k` is split MSB-first into the bit pairs 7-6, 5-4, 3-2, 1-0,
//! written into cover pixels `4k .. 4k+3` (row-major from pixel 0). In each
//! pair the more significant bit goes to `PositionPair::first`. Only lower
//! nibble bits change, so a 0 cover pixel stays in `[0,12]` and a 255 cover
//! pixel stays in `[243,255]`.

use crate::error::{Error, Result};
use crate::image::{BinaryImage, GrayImage};
use crate::payload::{frame_payload, Payload};
use crate::position::{position_for_index, PositionPair};
use crate::stego::StegoImage;

/// Cover pixels consumed per framed byte.
pub const PIXELS_PER_BYTE: usize = 4;

/// `pixel` with bit `pos.first()` set to `bits.0` and bit `pos.second()` set
/// to `bits.1`.
pub fn embed_bit_pair(pixel: u8, bits: (bool, bool), pos: PositionPair) -> u8 {
    let set = |v: u8, bit: u8, on: bool| {
        if on {
            v | (1 << bit)
        } else {
            v & !(1 << bit)
        }
    };
    set(set(pixel, pos.first(), bits.0), pos.second(), bits.1)
}

/// Number of cover pixels needed to carry `payload`, header included.
pub fn required_pixels(payload: &Payload) -> usize {
    PIXELS_PER_BYTE * payload.framed_len()
}

/// Embeds `payload` into `cover`. Pixels past the framed data are copied
/// unchanged.
pub fn embed(cover: &BinaryImage, payload: &Payload) -> Result<StegoImage> {
    let framed = frame_payload(payload)?;
    let needed = PIXELS_PER_BYTE * framed.len();
    let available = cover.pixels().len();
    if needed > available {
        return Err(Error::CapacityExceeded { needed, available });
    }

    let width = cover.width();
    let mut pixels = cover.pixels().to_vec();
    for (k, &byte) in framed.iter().enumerate() {
        for slot in 0..PIXELS_PER_BYTE {
            let p = PIXELS_PER_BYTE * k + slot;
            let shift = 6 - 2 * slot;
            let bits = ((byte >> (shift + 1)) & 1 == 1, (byte >> shift) & 1 == 1);
            pixels[p] = embed_bit_pair(pixels[p], bits, position_for_index(p, width));
        }
    }
    let img = GrayImage::new(width, cover.height(), pixels)?;
    Ok(StegoImage::from_gray_unchecked(img))
}

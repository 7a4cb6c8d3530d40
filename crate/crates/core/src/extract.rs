//! Receiver side after fusion: read the framed payload back out of the stego
//! image and threshold the stego image back to its binary cover.
//!
//! The two outputs correspond to the receiver's two stores: the restored
//! cover ("data storage 1") and the recovered secret ("data storage 2").

use crate::embed::PIXELS_PER_BYTE;
use crate::error::{Error, Result};
use crate::image::{BinaryImage, GrayImage};
use crate::payload::{FrameHeader, Payload, FRAME_HEADER_LEN};
use crate::position::{position_for_index, PositionPair};
use crate::stego::{Band, StegoImage};

/// Bits at `pos.first()` and `pos.second()` of `pixel`.
pub fn extract_bit_pair(pixel: u8, pos: PositionPair) -> Result<(bool, bool)> {
    extract_at(0, pixel, pos)
}

fn extract_at(index: usize, pixel: u8, pos: PositionPair) -> Result<(bool, bool)> {
    if Band::of(pixel).is_none() {
        return Err(Error::BandViolation {
            index,
            value: pixel,
        });
    }
    Ok(((pixel >> pos.first()) & 1 == 1, (pixel >> pos.second()) & 1 == 1))
}

/// Reassembles framed byte `k` from pixels `4k .. 4k+3`.
fn read_byte(pixels: &[u8], width: usize, k: usize) -> Result<u8> {
    let mut byte = 0u8;
    for slot in 0..PIXELS_PER_BYTE {
        let p = PIXELS_PER_BYTE * k + slot;
        let (hi, lo) = extract_at(p, pixels[p], position_for_index(p, width))?;
        byte = (byte << 2) | (u8::from(hi) << 1) | u8::from(lo);
    }
    Ok(byte)
}

/// Reads the 5-byte header, then the body it declares.
pub fn extract_payload(stego: &StegoImage) -> Result<Payload> {
    let pixels = stego.pixels();
    let width = stego.width();
    let header_pixels = PIXELS_PER_BYTE * FRAME_HEADER_LEN;
    if pixels.len() < header_pixels {
        return Err(Error::BadHeader(format!(
            "image has {} pixels, header needs {header_pixels}",
            pixels.len()
        )));
    }
    let mut head = [0u8; FRAME_HEADER_LEN];
    for (k, b) in head.iter_mut().enumerate() {
        *b = read_byte(pixels, width, k)?;
    }
    let header = FrameHeader::parse(head)?;

    let declared = header.body_len();
    let needed = PIXELS_PER_BYTE * (FRAME_HEADER_LEN + declared);
    if needed > pixels.len() {
        return Err(Error::BodyOverrun {
            declared,
            needed,
            available: pixels.len(),
        });
    }
    let body = (FRAME_HEADER_LEN..FRAME_HEADER_LEN + declared)
        .map(|k| read_byte(pixels, width, k))
        .collect::<Result<Vec<u8>>>()?;
    Payload::new(
        header.kind,
        usize::from(header.width),
        usize::from(header.height),
        body,
    )
}

/// White band to 255, black band to 0.
pub fn restore_cover(stego: &GrayImage) -> Result<BinaryImage> {
    let pixels = stego
        .pixels()
        .iter()
        .enumerate()
        .map(|(index, &value)| match Band::of(value) {
            Some(Band::White) => Ok(255),
            Some(Band::Black) => Ok(0),
            None => Err(Error::BandViolation { index, value }),
        })
        .collect::<Result<Vec<u8>>>()?;
    let img = GrayImage::new(stego.width(), stego.height(), pixels)?;
    Ok(BinaryImage::from_gray_unchecked(img))
}

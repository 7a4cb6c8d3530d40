//! Netpbm reading and writing for the two container types this tool uses:
//! PBM (`P1`/`P4`) for covers and PGM (`P2`/`P5`) for everything else.
//!
//! PBM polarity follows the Netpbm convention that a set bit is ink: PBM `1`
//! becomes pixel 0 (black) and PBM `0` becomes pixel 255 (white).

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::image::{validate_binary, GrayImage};

/// Output container for [`encode_pnm`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PnmFormat {
    /// Raw bitmap, `P4`. Only valid for 0/255 images.
    Pbm,
    /// Plain graymap, `P2`.
    PgmAscii,
    /// Raw graymap, `P5`.
    PgmRaw,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Magic {
    P1,
    P2,
    P4,
    P5,
}

impl Magic {
    fn is_bitmap(self) -> bool {
        matches!(self, Magic::P1 | Magic::P4)
    }
}

/// True if `bytes` starts with one of the magic numbers [`decode_pnm`] accepts.
pub fn has_pnm_magic(bytes: &[u8]) -> bool {
    matches!(bytes, [b'P', b'1' | b'2' | b'4' | b'5', ..])
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_whitespace_and_comments(&mut self) {
        while let Some(&b) = self.bytes.get(self.pos) {
            if b == b'#' {
                while let Some(&c) = self.bytes.get(self.pos) {
                    if c == b'\n' || c == b'\r' {
                        break;
                    }
                    self.pos += 1;
                }
            } else if b.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    /// Next decimal token, or `None` at end of input / on a non-digit.
    fn number(&mut self) -> Option<u32> {
        self.skip_whitespace_and_comments();
        let start = self.pos;
        let mut value: u32 = 0;
        while let Some(&b) = self.bytes.get(self.pos) {
            if !b.is_ascii_digit() {
                break;
            }
            value = value.saturating_mul(10).saturating_add(u32::from(b - b'0'));
            self.pos += 1;
        }
        (self.pos > start).then_some(value)
    }

    fn header_number(&mut self, what: &str) -> Result<u32> {
        self.number()
            .ok_or_else(|| Error::MalformedHeader(format!("missing or invalid {what}")))
    }
}

/// Parses a PBM or PGM file, plain or raw, into a grayscale image.
pub fn decode_pnm(bytes: &[u8]) -> Result<GrayImage> {
    let magic = match bytes.get(..2) {
        Some(b"P1") => Magic::P1,
        Some(b"P2") => Magic::P2,
        Some(b"P4") => Magic::P4,
        Some(b"P5") => Magic::P5,
        _ => {
            return Err(Error::MalformedHeader(
                "expected magic number P1, P2, P4 or P5".into(),
            ))
        }
    };
    let mut cur = Cursor { bytes, pos: 2 };
    if !cur.bytes.get(2).is_some_and(|b| b.is_ascii_whitespace() || *b == b'#') {
        return Err(Error::MalformedHeader(
            "magic number must be followed by whitespace".into(),
        ));
    }

    let width = cur.header_number("width")? as usize;
    let height = cur.header_number("height")? as usize;
    if width == 0 || height == 0 {
        return Err(Error::MalformedHeader(format!(
            "dimensions must be positive, got {width}x{height}"
        )));
    }
    let maxval = if magic.is_bitmap() {
        1
    } else {
        let maxval = cur.header_number("maxval")?;
        if maxval == 0 || maxval > 255 {
            return Err(Error::UnsupportedMaxval(maxval));
        }
        maxval
    };
    let expected = width
        .checked_mul(height)
        .ok_or_else(|| Error::MalformedHeader(format!("{width}x{height} overflows")))?;

    let pixels = match magic {
        Magic::P1 => decode_plain_bitmap(&mut cur, expected)?,
        Magic::P2 => decode_plain_graymap(&mut cur, expected, maxval)?,
        Magic::P4 => decode_raw_bitmap(raster_start(&cur)?, width, height)?,
        Magic::P5 => decode_raw_graymap(raster_start(&cur)?, expected, maxval)?,
    };
    GrayImage::new(width, height, pixels)
}

/// Raw formats separate header and raster with exactly one whitespace byte.
fn raster_start<'a>(cur: &Cursor<'a>) -> Result<&'a [u8]> {
    match cur.bytes.get(cur.pos) {
        Some(b) if b.is_ascii_whitespace() => Ok(&cur.bytes[cur.pos + 1..]),
        Some(_) => Err(Error::MalformedHeader(
            "header must end with a single whitespace byte".into(),
        )),
        None => Ok(&[]),
    }
}

fn decode_plain_bitmap(cur: &mut Cursor<'_>, expected: usize) -> Result<Vec<u8>> {
    let mut pixels = Vec::with_capacity(expected);
    while pixels.len() < expected {
        cur.skip_whitespace_and_comments();
        match cur.bytes.get(cur.pos) {
            Some(b'1') => pixels.push(0),
            Some(b'0') => pixels.push(255),
            Some(&b) => {
                return Err(Error::InvalidSample {
                    index: pixels.len(),
                    value: u32::from(b),
                    maxval: 1,
                })
            }
            None => break,
        }
        cur.pos += 1;
    }
    check_count(expected, pixels.len())?;
    Ok(pixels)
}

fn decode_plain_graymap(cur: &mut Cursor<'_>, expected: usize, maxval: u32) -> Result<Vec<u8>> {
    let mut pixels = Vec::with_capacity(expected);
    while pixels.len() < expected {
        let Some(value) = cur.number() else { break };
        if value > maxval {
            return Err(Error::InvalidSample {
                index: pixels.len(),
                value,
                maxval,
            });
        }
        pixels.push(value as u8);
    }
    check_count(expected, pixels.len())?;
    Ok(pixels)
}

fn decode_raw_bitmap(raster: &[u8], width: usize, height: usize) -> Result<Vec<u8>> {
    let row_bytes = width.div_ceil(8);
    let needed = row_bytes * height;
    if raster.len() < needed {
        let full_rows = raster.len() / row_bytes;
        let partial = ((raster.len() % row_bytes) * 8).min(width);
        return Err(Error::TruncatedData {
            expected: width * height,
            found: full_rows * width + partial,
        });
    }
    let mut pixels = Vec::with_capacity(width * height);
    for row in raster[..needed].chunks_exact(row_bytes) {
        for col in 0..width {
            let bit = (row[col / 8] >> (7 - col % 8)) & 1;
            pixels.push(if bit == 1 { 0 } else { 255 });
        }
    }
    Ok(pixels)
}

fn decode_raw_graymap(raster: &[u8], expected: usize, maxval: u32) -> Result<Vec<u8>> {
    check_count(expected, raster.len())?;
    let pixels = &raster[..expected];
    if let Some((index, &value)) = pixels
        .iter()
        .enumerate()
        .find(|&(_, &v)| u32::from(v) > maxval)
    {
        return Err(Error::InvalidSample {
            index,
            value: u32::from(value),
            maxval,
        });
    }
    Ok(pixels.to_vec())
}

fn check_count(expected: usize, found: usize) -> Result<()> {
    if found < expected {
        Err(Error::TruncatedData { expected, found })
    } else {
        Ok(())
    }
}

/// Serializes `img`. Graymaps are always written with maxval 255.
pub fn encode_pnm(img: &GrayImage, format: PnmFormat) -> Result<Vec<u8>> {
    let (w, h) = (img.width(), img.height());
    match format {
        PnmFormat::Pbm => {
            // Only for the check; `validate_binary` reports the first offender.
            validate_binary(img.clone())?;
            let row_bytes = w.div_ceil(8);
            let mut out = format!("P4\n{w} {h}\n").into_bytes();
            out.reserve(row_bytes * h);
            for row in img.pixels().chunks_exact(w) {
                let mut packed = vec![0u8; row_bytes];
                for (col, &v) in row.iter().enumerate() {
                    if v == 0 {
                        packed[col / 8] |= 0x80 >> (col % 8);
                    }
                }
                out.extend_from_slice(&packed);
            }
            Ok(out)
        }
        PnmFormat::PgmRaw => {
            let mut out = format!("P5\n{w} {h}\n255\n").into_bytes();
            out.extend_from_slice(img.pixels());
            Ok(out)
        }
        PnmFormat::PgmAscii => {
            let mut text = format!("P2\n{w} {h}\n255\n");
            // Netpbm asks for lines of at most 70 characters.
            for row in img.pixels().chunks_exact(w) {
                for line in row.chunks(17) {
                    let mut first = true;
                    for v in line {
                        if !first {
                            text.push(' ');
                        }
                        first = false;
                        write!(text, "{v}").expect("writing to a String cannot fail");
                    }
                    text.push('\n');
                }
            }
            Ok(text.into_bytes())
        }
    }
}

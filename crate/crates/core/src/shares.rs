//! (2,2) share generation.
//!
//! Every stego pixel `x` becomes one horizontal pixel pair in each share.
//! One half of the pair is noise, the other carries a value derived from
//! `floor(x/2)`:
//!
//! | band  | value halves (even x) | value halves (odd x)                 | noise |
//! |-------|-----------------------|--------------------------------------|-------|
//! | white | `x/2 + 128` twice     | `floor(x/2) + 127`, `floor(x/2) + 128` | 0, same side in both shares |
//! | black | `x/2` twice           | `floor(x/2)`, `floor(x/2) + 1`        | 255, opposite sides |
//!
//! The side carrying the value is drawn per pixel from a ChaCha stream keyed
//! by the seed and indexed by the pixel's linear position, so the output does
//! not depend on evaluation order.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::image::GrayImage;
use crate::stego::{Band, StegoImage};

/// One share's two halves for a single stego pixel.
pub type PixelPair = (u8, u8);

/// Which column permutation of the pattern matrices was chosen: the half of
/// share 1's pair that carries the value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PatternChoice {
    Left,
    Right,
}

/// An `m x 2n` share image, read as `m x n` pixel pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Share(GrayImage);

impl Share {
    pub fn from_gray(img: GrayImage) -> Result<Self> {
        if !img.width().is_multiple_of(2) {
            return Err(Error::DimensionMismatch(format!(
                "share width must be even, got {}",
                img.width()
            )));
        }
        Ok(Share(img))
    }

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

    /// Number of pixel pairs.
    pub fn pair_count(&self) -> usize {
        self.0.len() / 2
    }

    pub fn pair(&self, p: usize) -> PixelPair {
        let px = self.0.pixels();
        (px[2 * p], px[2 * p + 1])
    }

    pub fn pairs(&self) -> impl Iterator<Item = PixelPair> + '_ {
        self.0.pixels().chunks_exact(2).map(|c| (c[0], c[1]))
    }
}

/// Splits one stego value into its pair in share 1 and share 2.
pub fn split_pixel(x: u8, pattern: PatternChoice) -> Result<(PixelPair, PixelPair)> {
    split_at(0, x, pattern)
}

fn split_at(index: usize, x: u8, pattern: PatternChoice) -> Result<(PixelPair, PixelPair)> {
    let half = x / 2;
    let odd = x % 2 == 1;
    match Band::of(x) {
        Some(Band::White) => {
            // Odd values split as 127/128 offsets so 255 maps to (254, 255).
            let (g1, g2) = if odd {
                (half + 127, half + 128)
            } else {
                (half + 128, half + 128)
            };
            Ok(match pattern {
                PatternChoice::Left => ((g1, 0), (g2, 0)),
                PatternChoice::Right => ((0, g1), (0, g2)),
            })
        }
        Some(Band::Black) => {
            let (v1, v2) = if odd { (half, half + 1) } else { (half, half) };
            Ok(match pattern {
                PatternChoice::Left => ((v1, 255), (255, v2)),
                PatternChoice::Right => ((255, v1), (v2, 255)),
            })
        }
        None => Err(Error::OutOfBand { index, value: x }),
    }
}

fn choice_from_word(word: u32) -> PatternChoice {
    if word & 1 == 0 {
        PatternChoice::Left
    } else {
        PatternChoice::Right
    }
}

fn pattern_stream(seed: u64, start: usize) -> impl Iterator<Item = PatternChoice> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_word_pos(start as u128);
    std::iter::repeat_with(move || choice_from_word(rng.next_u32()))
}

/// The pattern used for pixel `p` under `seed`.
pub fn pattern_for(seed: u64, p: usize) -> PatternChoice {
    pattern_stream(seed, p).next().expect("stream is infinite")
}

/// Produces both shares sequentially.
pub fn generate_shares(stego: &StegoImage, seed: u64) -> Result<(Share, Share)> {
    let n = stego.pixels().len();
    let mut s1 = vec![0u8; 2 * n];
    let mut s2 = vec![0u8; 2 * n];
    fill_shares(stego.pixels(), 0, seed, &mut s1, &mut s2)?;
    assemble(stego, s1, s2)
}

/// Same output as [`generate_shares`], computed row-parallel.
pub fn generate_shares_par(stego: &StegoImage, seed: u64) -> Result<(Share, Share)> {
    let n = stego.pixels().len();
    let w = stego.width();
    let mut s1 = vec![0u8; 2 * n];
    let mut s2 = vec![0u8; 2 * n];
    stego
        .pixels()
        .par_chunks(w)
        .zip(s1.par_chunks_mut(2 * w))
        .zip(s2.par_chunks_mut(2 * w))
        .enumerate()
        .try_for_each(|(row, ((src, d1), d2))| fill_shares(src, row * w, seed, d1, d2))?;
    assemble(stego, s1, s2)
}

fn fill_shares(src: &[u8], start: usize, seed: u64, s1: &mut [u8], s2: &mut [u8]) -> Result<()> {
    let patterns = pattern_stream(seed, start);
    for (k, (&x, pattern)) in src.iter().zip(patterns).enumerate() {
        let ((a1, b1), (a2, b2)) = split_at(start + k, x, pattern)?;
        s1[2 * k] = a1;
        s1[2 * k + 1] = b1;
        s2[2 * k] = a2;
        s2[2 * k + 1] = b2;
    }
    Ok(())
}

fn assemble(stego: &StegoImage, s1: Vec<u8>, s2: Vec<u8>) -> Result<(Share, Share)> {
    let (w, h) = (2 * stego.width(), stego.height());
    Ok((
        Share(GrayImage::new(w, h, s1)?),
        Share(GrayImage::new(w, h, s2)?),
    ))
}

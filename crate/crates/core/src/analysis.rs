//! Histograms, band-gap statistics and the single-guess comparison table.

use std::collections::HashSet;
use std::fmt::{self, Write as _};

use crate::error::{Error, Result};
use crate::image::GrayImage;
use crate::shares::{split_pixel, PatternChoice};
use crate::stego::{Band, BLACK_BAND, WHITE_BAND};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HistogramReport {
    pub counts: [u64; 256],
    pub in_black_band: u64,
    pub in_white_band: u64,
    pub out_of_band: u64,
}

impl HistogramReport {
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Bins with a nonzero count, ascending.
    pub fn nonzero_bins(&self) -> impl Iterator<Item = (u8, u64)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c > 0)
            .map(|(v, &c)| (v as u8, c))
    }

    /// `value,count` lines for all 256 bins, with a header row.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("value,count\n");
        for (v, c) in self.counts.iter().enumerate() {
            writeln!(out, "{v},{c}").unwrap();
        }
        out
    }
}

pub fn histogram(img: &GrayImage) -> HistogramReport {
    let mut counts = [0u64; 256];
    for &v in img.pixels() {
        counts[usize::from(v)] += 1;
    }
    let band_sum = |r: std::ops::RangeInclusive<u8>| {
        r.map(|v| counts[usize::from(v)]).sum::<u64>()
    };
    let in_black_band = band_sum(BLACK_BAND);
    let in_white_band = band_sum(WHITE_BAND);
    HistogramReport {
        counts,
        in_black_band,
        in_white_band,
        out_of_band: img.len() as u64 - in_black_band - in_white_band,
    }
}

/// The unused interval between the darkest white and the brightest black
/// value actually present.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BandGap {
    pub highest_black: Option<u8>,
    pub lowest_white: Option<u8>,
}

impl BandGap {
    /// Inclusive gap bounds. A missing band extends the gap to 0 or 255.
    pub fn interval(&self) -> (u8, u8) {
        let low = self.highest_black.map_or(0, |b| b + 1);
        let high = self.lowest_white.map_or(255, |w| w - 1);
        (low, high)
    }

    pub fn width(&self) -> u16 {
        let (low, high) = self.interval();
        u16::from(high) - u16::from(low) + 1
    }
}

pub fn band_gap_report(img: &GrayImage) -> Result<BandGap> {
    let mut gap = BandGap {
        highest_black: None,
        lowest_white: None,
    };
    for (index, &value) in img.pixels().iter().enumerate() {
        match Band::of(value) {
            Some(Band::Black) => gap.highest_black = gap.highest_black.max(Some(value)),
            Some(Band::White) => {
                gap.lowest_white = Some(gap.lowest_white.map_or(value, |w| w.min(value)))
            }
            None => return Err(Error::BandViolation { index, value }),
        }
    }
    Ok(gap)
}

/// Number of distinct value-half encodings the share generator emits for the
/// values of `band`. An adversary holding one share and knowing the band
/// still faces this many candidates.
pub fn distinct_value_encodings(band: Band) -> usize {
    let values = match band {
        Band::Black => BLACK_BAND,
        Band::White => WHITE_BAND,
    };
    let noise = match band {
        Band::Black => 255,
        Band::White => 0,
    };
    let mut seen = HashSet::new();
    for x in values {
        for pattern in [PatternChoice::Left, PatternChoice::Right] {
            let (p1, p2) = split_pixel(x, pattern).expect("band values always split");
            let value_half = |(a, b): (u8, u8)| if a == noise { b } else { a };
            seen.insert((value_half(p1), value_half(p2)));
        }
    }
    seen.len()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Probability {
    pub numerator: u32,
    pub denominator: u32,
}

impl fmt::Display for Probability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemeRow {
    pub scheme: &'static str,
    pub probability: Probability,
}

/// Single-guess probability per scheme. The three baselines are binary
/// schemes with two equally likely subpixel patterns; this scheme's row is
/// derived from the band cardinality.
pub fn guess_probability() -> Vec<SchemeRow> {
    let half = Probability {
        numerator: 1,
        denominator: 2,
    };
    let black = distinct_value_encodings(Band::Black);
    let white = distinct_value_encodings(Band::White);
    debug_assert_eq!(black, white);
    vec![
        SchemeRow {
            scheme: "Visual cryptography (Naor-Shamir)",
            probability: half,
        },
        SchemeRow {
            scheme: "Neural-network visual cryptography (Yue-Chiang)",
            probability: half,
        },
        SchemeRow {
            scheme: "Novel visual cryptography (Jena-Jena)",
            probability: half,
        },
        SchemeRow {
            scheme: "Band-gap (2,2) stego sharing (this tool)",
            probability: Probability {
                numerator: 1,
                denominator: black.min(white) as u32,
            },
        },
    ]
}

/// Everything `analyze` prints for one image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisReport {
    pub width: usize,
    pub height: usize,
    pub histogram: HistogramReport,
    pub band_gap: Result<BandGap>,
    pub schemes: Vec<SchemeRow>,
}

pub fn analyze(img: &GrayImage) -> AnalysisReport {
    AnalysisReport {
        width: img.width(),
        height: img.height(),
        histogram: histogram(img),
        band_gap: band_gap_report(img),
        schemes: guess_probability(),
    }
}

impl AnalysisReport {
    pub fn to_text(&self) -> String {
        let h = &self.histogram;
        let mut out = String::new();
        writeln!(out, "image: {}x{} ({} pixels)", self.width, self.height, h.total()).unwrap();
        writeln!(out, "black band [0,12]:    {}", h.in_black_band).unwrap();
        writeln!(out, "white band [243,255]: {}", h.in_white_band).unwrap();
        writeln!(out, "out of band:          {}", h.out_of_band).unwrap();
        writeln!(out, "nonzero bins:").unwrap();
        for (v, c) in h.nonzero_bins() {
            writeln!(out, "  {v:>3}: {c}").unwrap();
        }
        match &self.band_gap {
            Ok(gap) => {
                let (low, high) = gap.interval();
                let show = |v: Option<u8>| v.map_or_else(|| "absent".to_string(), |v| v.to_string());
                writeln!(
                    out,
                    "band gap: [{low},{high}] width {} (highest black {}, lowest white {})",
                    gap.width(),
                    show(gap.highest_black),
                    show(gap.lowest_white)
                )
                .unwrap();
            }
            Err(e) => writeln!(out, "band gap: unavailable ({e})").unwrap(),
        }
        writeln!(out, "single-guess probability:").unwrap();
        for row in &self.schemes {
            writeln!(out, "  {:<50} {}", row.scheme, row.probability).unwrap();
        }
        out
    }

    /// One `key=value` per line.
    pub fn to_key_value(&self) -> String {
        let h = &self.histogram;
        let mut out = String::new();
        writeln!(out, "width={}", self.width).unwrap();
        writeln!(out, "height={}", self.height).unwrap();
        writeln!(out, "total={}", h.total()).unwrap();
        writeln!(out, "in_black_band={}", h.in_black_band).unwrap();
        writeln!(out, "in_white_band={}", h.in_white_band).unwrap();
        writeln!(out, "out_of_band={}", h.out_of_band).unwrap();
        let bins: Vec<String> = h.nonzero_bins().map(|(v, c)| format!("{v}:{c}")).collect();
        writeln!(out, "nonzero_bins={}", bins.join(",")).unwrap();
        match &self.band_gap {
            Ok(gap) => {
                let (low, high) = gap.interval();
                let show = |v: Option<u8>| v.map_or_else(|| "none".to_string(), |v| v.to_string());
                writeln!(out, "highest_black={}", show(gap.highest_black)).unwrap();
                writeln!(out, "lowest_white={}", show(gap.lowest_white)).unwrap();
                writeln!(out, "gap_low={low}").unwrap();
                writeln!(out, "gap_high={high}").unwrap();
                writeln!(out, "gap_width={}", gap.width()).unwrap();
            }
            Err(e) => writeln!(out, "band_gap_error={e}").unwrap(),
        }
        for (k, row) in self.schemes.iter().enumerate() {
            writeln!(out, "scheme.{}.name={}", k + 1, row.scheme).unwrap();
            writeln!(out, "scheme.{}.probability={}", k + 1, row.probability).unwrap();
        }
        out
    }
}

//! Per-pixel choice of the two lower-nibble bits that carry payload data.
//!
//! The function is public and key-free: sender and receiver evaluate it on
//! the same `(p, i, j)` and therefore agree on where the bits live.

/// Two bit indices inside a byte's lower nibble. Bit 0 is the least
/// significant bit; `second` is always `(first + 1) mod 4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PositionPair {
    first: u8,
    second: u8,
}

impl PositionPair {
    /// Builds the pair starting at `first`, wrapping 3 around to 0.
    ///
    /// # Panics
    /// If `first > 3`.
    pub fn starting_at(first: u8) -> Self {
        assert!(first < 4, "bit position {first} is outside the lower nibble");
        PositionPair {
            first,
            second: (first + 1) % 4,
        }
    }

    pub fn first(self) -> u8 {
        self.first
    }

    pub fn second(self) -> u8 {
        self.second
    }
}

/// Positions for linear pixel index `p` at row `i`, column `j`:
/// `first = (p mod ((i + 1) + (j + 1))) mod 4`.
pub fn position_pair(p: usize, i: usize, j: usize) -> PositionPair {
    let modulus = (i + 1) + (j + 1);
    PositionPair::starting_at(((p % modulus) % 4) as u8)
}

/// [`position_pair`] for pixel `p` of a row-major image `width` pixels wide.
pub fn position_for_index(p: usize, width: usize) -> PositionPair {
    position_pair(p, p / width, p % width)
}

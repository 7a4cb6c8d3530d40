//! Hide a secret message or image inside a binary cover image, split the
//! result into two (2,2) visual-cryptography shares, and undo every step
//! exactly.
//!
//! Pipeline:
//!
//! ```text
//! cover (0/255) --embed--> stego ([0,12] u [243,255]) --generate_shares--> share1, share2
//! share1, share2 --decode_shares--> stego --extract_payload--> secret
//!                                         --restore_cover----> cover
//! ```
//!
//! ```
//! use stegshare::{decode_shares, embed, extract_payload, generate_shares, restore_cover};
//! use stegshare::{validate_binary, GrayImage, Payload};
//!
//! let cover = validate_binary(GrayImage::filled(16, 16, 255).unwrap()).unwrap();
//! let secret = Payload::message("hello");
//! let stego = embed(&cover, &secret).unwrap();
//! let (s1, s2) = generate_shares(&stego, 7).unwrap();
//! let fused = decode_shares(&s1, &s2).unwrap();
//! assert_eq!(extract_payload(&fused).unwrap(), secret);
//! assert_eq!(restore_cover(fused.as_gray()).unwrap(), cover);
//! ```

pub mod analysis;
pub mod cli;
pub mod decode;
pub mod embed;
pub mod error;
pub mod extract;
pub mod image;
pub mod payload;
pub mod pnm;
pub mod position;
pub mod shares;
pub mod stego;

pub use analysis::{band_gap_report, guess_probability, histogram, BandGap, HistogramReport};
pub use decode::{classify_pair, decode_shares, fuse_pair, stack_or, PixelClass};
pub use embed::{embed, embed_bit_pair};
pub use error::{Error, Result};
pub use extract::{extract_bit_pair, extract_payload, restore_cover};
pub use image::{validate_binary, BinaryImage, GrayImage};
pub use payload::{frame_payload, unframe_payload, Payload, PayloadKind};
pub use pnm::{decode_pnm, encode_pnm, PnmFormat};
pub use position::{position_pair, PositionPair};
pub use shares::{generate_shares, generate_shares_par, split_pixel, PatternChoice, Share};
pub use stego::{Band, StegoImage};

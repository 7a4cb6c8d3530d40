//! The secret being hidden, and the 5-byte frame that tells the receiver how
//! much of it to read back.
//!
//! Frame layout: one kind byte (`0x4D` message, `0x49` image), then width and
//! height as big-endian `u16`, then the body bytes row-major.

use crate::error::{Error, Result};
use crate::image::GrayImage;

pub const FRAME_HEADER_LEN: usize = 5;

const TAG_MESSAGE: u8 = 0x4D;
const TAG_IMAGE: u8 = 0x49;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PayloadKind {
    Message,
    Image,
}

impl PayloadKind {
    fn tag(self) -> u8 {
        match self {
            PayloadKind::Message => TAG_MESSAGE,
            PayloadKind::Image => TAG_IMAGE,
        }
    }
}

/// A secret message (raw bytes, `height == 1`) or secret image (8-bit
/// pixels, row-major).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Payload {
    kind: PayloadKind,
    width: usize,
    height: usize,
    body: Vec<u8>,
}

impl Payload {
    pub fn new(kind: PayloadKind, width: usize, height: usize, body: Vec<u8>) -> Result<Self> {
        if width.checked_mul(height) != Some(body.len()) {
            return Err(Error::InvalidPayload(format!(
                "{width}x{height} does not match body length {}",
                body.len()
            )));
        }
        match kind {
            PayloadKind::Message if height != 1 => {
                return Err(Error::InvalidPayload(format!(
                    "message payload must have height 1, got {height}"
                )))
            }
            PayloadKind::Image if width == 0 || height == 0 => {
                return Err(Error::InvalidPayload(format!(
                    "image payload must be non-empty, got {width}x{height}"
                )))
            }
            _ => {}
        }
        Ok(Payload {
            kind,
            width,
            height,
            body,
        })
    }

    pub fn message(bytes: impl Into<Vec<u8>>) -> Self {
        let body = bytes.into();
        Payload {
            kind: PayloadKind::Message,
            width: body.len(),
            height: 1,
            body,
        }
    }

    pub fn image(img: GrayImage) -> Self {
        Payload {
            kind: PayloadKind::Image,
            width: img.width(),
            height: img.height(),
            body: img.into_pixels(),
        }
    }

    pub fn kind(&self) -> PayloadKind {
        self.kind
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn body(&self) -> &[u8] {
        &self.body
    }

    pub fn into_body(self) -> Vec<u8> {
        self.body
    }

    /// Body as an image, for image payloads.
    pub fn to_image(&self) -> Option<GrayImage> {
        match self.kind {
            PayloadKind::Image => GrayImage::new(self.width, self.height, self.body.clone()).ok(),
            PayloadKind::Message => None,
        }
    }

    /// Size of the framed payload in bytes.
    pub fn framed_len(&self) -> usize {
        FRAME_HEADER_LEN + self.body.len()
    }
}

/// Decoded frame header.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FrameHeader {
    pub kind: PayloadKind,
    pub width: u16,
    pub height: u16,
}

impl FrameHeader {
    pub fn to_bytes(self) -> [u8; FRAME_HEADER_LEN] {
        let [w0, w1] = self.width.to_be_bytes();
        let [h0, h1] = self.height.to_be_bytes();
        [self.kind.tag(), w0, w1, h0, h1]
    }

    pub fn parse(bytes: [u8; FRAME_HEADER_LEN]) -> Result<Self> {
        let kind = match bytes[0] {
            TAG_MESSAGE => PayloadKind::Message,
            TAG_IMAGE => PayloadKind::Image,
            tag => return Err(Error::BadHeader(format!("unknown kind tag {tag:#04x} at byte 0"))),
        };
        let width = u16::from_be_bytes([bytes[1], bytes[2]]);
        let height = u16::from_be_bytes([bytes[3], bytes[4]]);
        match kind {
            PayloadKind::Message if height != 1 => Err(Error::BadHeader(format!(
                "message header declares height {height}, expected 1"
            ))),
            PayloadKind::Image if width == 0 || height == 0 => Err(Error::BadHeader(format!(
                "image header declares empty size {width}x{height}"
            ))),
            _ => Ok(FrameHeader {
                kind,
                width,
                height,
            }),
        }
    }

    pub fn body_len(self) -> usize {
        usize::from(self.width) * usize::from(self.height)
    }
}

/// Header followed by body.
pub fn frame_payload(payload: &Payload) -> Result<Vec<u8>> {
    let width = u16::try_from(payload.width).map_err(|_| Error::PayloadTooLarge {
        what: "width",
        value: payload.width,
    })?;
    let height = u16::try_from(payload.height).map_err(|_| Error::PayloadTooLarge {
        what: "height",
        value: payload.height,
    })?;
    let header = FrameHeader {
        kind: payload.kind,
        width,
        height,
    };
    let mut out = Vec::with_capacity(payload.framed_len());
    out.extend_from_slice(&header.to_bytes());
    out.extend_from_slice(&payload.body);
    Ok(out)
}

/// Inverse of [`frame_payload`]. Trailing bytes after the body are ignored.
pub fn unframe_payload(bytes: &[u8]) -> Result<Payload> {
    let head: [u8; FRAME_HEADER_LEN] = bytes
        .get(..FRAME_HEADER_LEN)
        .and_then(|h| h.try_into().ok())
        .ok_or_else(|| Error::BadHeader(format!("need {FRAME_HEADER_LEN} header bytes, got {}", bytes.len())))?;
    let header = FrameHeader::parse(head)?;
    let body = bytes
        .get(FRAME_HEADER_LEN..FRAME_HEADER_LEN + header.body_len())
        .ok_or_else(|| {
            Error::InvalidPayload(format!(
                "header declares {} body bytes, only {} present",
                header.body_len(),
                bytes.len() - FRAME_HEADER_LEN
            ))
        })?;
    Payload::new(
        header.kind,
        usize::from(header.width),
        usize::from(header.height),
        body.to_vec(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn frames_message() {
        let framed = frame_payload(&Payload::message("Hi")).unwrap();
        assert_eq!(framed, [0x4D, 0x00, 0x02, 0x00, 0x01, 0x48, 0x69]);
    }

    #[test]
    fn frames_image() {
        let img = GrayImage::new(2, 2, vec![10, 20, 30, 40]).unwrap();
        let framed = frame_payload(&Payload::image(img)).unwrap();
        assert_eq!(framed, [0x49, 0x00, 0x02, 0x00, 0x02, 10, 20, 30, 40]);
    }

    #[test]
    fn rejects_oversized_dimension() {
        let p = Payload::message(vec![0u8; 70000]);
        assert_eq!(
            frame_payload(&p),
            Err(Error::PayloadTooLarge {
                what: "width",
                value: 70000
            })
        );
    }

    #[test]
    fn invariants_enforced() {
        assert!(Payload::new(PayloadKind::Message, 2, 2, vec![0; 4]).is_err());
        assert!(Payload::new(PayloadKind::Image, 2, 2, vec![0; 3]).is_err());
        assert!(Payload::new(PayloadKind::Image, 0, 3, vec![]).is_err());
        assert!(Payload::new(PayloadKind::Message, 0, 1, vec![]).is_ok());
    }

    #[test]
    fn unknown_tag() {
        assert!(matches!(
            unframe_payload(&[0x00, 0, 1, 0, 1, 7]),
            Err(Error::BadHeader(_))
        ));
    }

    fn payload() -> impl Strategy<Value = Payload> {
        prop_oneof![
            proptest::collection::vec(any::<u8>(), 0..64).prop_map(Payload::message),
            (1usize..8, 1usize..8).prop_flat_map(|(w, h)| {
                proptest::collection::vec(any::<u8>(), w * h).prop_map(move |body| {
                    Payload::new(PayloadKind::Image, w, h, body).unwrap()
                })
            }),
        ]
    }

    proptest! {
        #[test]
        fn frame_unframe_identity(p in payload()) {
            let framed = frame_payload(&p).unwrap();
            prop_assert_eq!(framed.len(), p.framed_len());
            prop_assert_eq!(unframe_payload(&framed).unwrap(), p);
        }
    }
}

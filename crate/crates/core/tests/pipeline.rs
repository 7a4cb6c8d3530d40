use proptest::prelude::*;

use stegshare::{
    decode_shares, embed, extract_payload, generate_shares, restore_cover, validate_binary,
    GrayImage, Payload, PayloadKind, StegoImage,
};

fn cover_and_payload() -> impl Strategy<Value = (GrayImage, Payload)> {
    (5usize..48, 5usize..48)
        .prop_flat_map(|(w, h)| {
            let room = w * h / 4 - 5;
            (
                proptest::collection::vec(prop_oneof![Just(0u8), Just(255u8)], w * h)
                    .prop_map(move |px| GrayImage::new(w, h, px).unwrap()),
                proptest::collection::vec(any::<u8>(), 0..=room),
                any::<bool>(),
            )
        })
        .prop_map(|(cover, body, as_image)| {
            let payload = if as_image && !body.is_empty() {
                let len = body.len();
                Payload::new(PayloadKind::Image, len, 1, body).unwrap()
            } else {
                Payload::message(body)
            };
            (cover, payload)
        })
}

fn stego_image() -> impl Strategy<Value = StegoImage> {
    (1usize..64, 1usize..64).prop_flat_map(|(w, h)| {
        proptest::collection::vec(prop_oneof![0u8..=12, 243u8..=255], w * h)
            .prop_map(move |px| StegoImage::try_from(GrayImage::new(w, h, px).unwrap()).unwrap())
    })
}

proptest! {
    #[test]
    fn end_to_end_identity((cover, payload) in cover_and_payload(), seed in any::<u64>()) {
        let cover = validate_binary(cover).unwrap();
        let stego = embed(&cover, &payload).unwrap();
        let (s1, s2) = generate_shares(&stego, seed).unwrap();
        let fused = decode_shares(&s1, &s2).unwrap();
        prop_assert_eq!(&fused, &stego);
        prop_assert_eq!(extract_payload(&fused).unwrap(), payload);
        prop_assert_eq!(restore_cover(fused.as_gray()).unwrap(), cover);
    }

    #[test]
    fn shares_decode_to_any_stego(stego in stego_image(), seed in any::<u64>()) {
        let (s1, s2) = generate_shares(&stego, seed).unwrap();
        prop_assert_eq!(s1.width(), 2 * stego.width());
        prop_assert_eq!(s1.height(), stego.height());
        prop_assert_eq!(decode_shares(&s1, &s2).unwrap(), stego);
    }
}

#[test]
fn secret_image_in_64x64_cover() {
    let px = (0..64 * 64).map(|p| if p % 5 == 0 { 0 } else { 255 }).collect();
    let cover = validate_binary(GrayImage::new(64, 64, px).unwrap()).unwrap();
    let secret = GrayImage::new(16, 16, (0..256).map(|v| v as u8).collect()).unwrap();
    let payload = Payload::image(secret.clone());
    let stego = embed(&cover, &payload).unwrap();
    let (s1, s2) = generate_shares(&stego, 2024).unwrap();
    let fused = decode_shares(&s1, &s2).unwrap();
    let got = extract_payload(&fused).unwrap();
    assert_eq!(got.to_image().unwrap(), secret);
}

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use stegshare::cli::{run, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE};
use stegshare::{decode_pnm, encode_pnm, GrayImage, PnmFormat};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn stegshare(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("stegshare").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Run {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn p(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

fn write_cover(dir: &Path, w: usize, h: usize) -> String {
    let px = (0..w * h).map(|i| if (i / w + i % w).is_multiple_of(4) { 0 } else { 255 }).collect();
    let img = GrayImage::new(w, h, px).unwrap();
    let path = dir.join("cover.pbm");
    fs::write(&path, encode_pnm(&img, PnmFormat::Pbm).unwrap()).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn full_pipeline_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let cover = write_cover(d, 40, 30);
    fs::write(d.join("msg.txt"), b"meet at dawn").unwrap();

    let r = stegshare(&["embed", "--cover", &cover, "--secret", &p(d, "msg.txt"), "--out", &p(d, "stego.pgm")]);
    assert_eq!(r.code, EXIT_OK, "{}", r.stderr);
    let r = stegshare(&["shares", "--in", &p(d, "stego.pgm"), "--seed", "7", "--out1", &p(d, "s1.pgm"), "--out2", &p(d, "s2.pgm")]);
    assert_eq!(r.code, EXIT_OK, "{}", r.stderr);
    assert!(r.stdout.contains("seed=7"));
    let r = stegshare(&["decode", "--share1", &p(d, "s1.pgm"), "--share2", &p(d, "s2.pgm"), "--out", &p(d, "fused.pgm")]);
    assert_eq!(r.code, EXIT_OK, "{}", r.stderr);
    assert_eq!(fs::read(d.join("fused.pgm")).unwrap(), fs::read(d.join("stego.pgm")).unwrap());

    let r = stegshare(&["extract", "--in", &p(d, "fused.pgm"), "--out-secret", &p(d, "out.txt"), "--out-cover", &p(d, "out.pbm")]);
    assert_eq!(r.code, EXIT_OK, "{}", r.stderr);
    assert_eq!(fs::read(d.join("out.txt")).unwrap(), b"meet at dawn");
    assert_eq!(fs::read(d.join("out.pbm")).unwrap(), fs::read(&cover).unwrap());

    let r = stegshare(&["stack", "--share1", &p(d, "s1.pgm"), "--share2", &p(d, "s2.pgm"), "--out", &p(d, "stack.pgm")]);
    assert_eq!(r.code, EXIT_OK, "{}", r.stderr);
    let stacked = decode_pnm(&fs::read(d.join("stack.pgm")).unwrap()).unwrap();
    assert_eq!((stacked.width(), stacked.height()), (80, 30));

    let r = stegshare(&["analyze", "--in", &p(d, "stego.pgm"), "--format", "kv", "--csv", &p(d, "hist.csv")]);
    assert_eq!(r.code, EXIT_OK, "{}", r.stderr);
    assert!(r.stdout.contains("out_of_band=0\n"));
    assert!(r.stdout.contains("scheme.4.probability=1/13\n"));
    assert_eq!(fs::read_to_string(d.join("hist.csv")).unwrap().lines().count(), 257);
}

#[test]
fn secret_image_is_inferred_and_written_back() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let cover = write_cover(d, 32, 32);
    let secret = GrayImage::new(6, 5, (0..30).map(|v| v * 8).collect()).unwrap();
    fs::write(d.join("secret.pgm"), encode_pnm(&secret, PnmFormat::PgmAscii).unwrap()).unwrap();

    let r = stegshare(&["embed", "--cover", &cover, "--secret", &p(d, "secret.pgm"), "--out", &p(d, "stego.pgm")]);
    assert_eq!(r.code, EXIT_OK, "{}", r.stderr);
    let r = stegshare(&["extract", "--in", &p(d, "stego.pgm"), "--out-secret", &p(d, "got.pgm"), "--out-cover", &p(d, "c.pbm")]);
    assert_eq!(r.code, EXIT_OK, "{}", r.stderr);
    assert_eq!(decode_pnm(&fs::read(d.join("got.pgm")).unwrap()).unwrap(), secret);
}

#[test]
fn roundtrip_passes() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let cover = write_cover(d, 64, 64);
    fs::write(d.join("msg.txt"), b"the quick brown fox").unwrap();
    let r = stegshare(&["roundtrip", "--cover", &cover, "--secret", &p(d, "msg.txt"), "--seed", "7"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.stderr);
    assert!(r.stdout.lines().any(|l| l == "PASS"), "{}", r.stdout);
}

#[test]
fn oversized_secret_is_a_domain_error() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let cover = write_cover(d, 8, 8);
    fs::write(d.join("msg.txt"), vec![b'x'; 12]).unwrap();
    let r = stegshare(&["embed", "--cover", &cover, "--secret", &p(d, "msg.txt"), "--out", &p(d, "s.pgm")]);
    assert_eq!(r.code, EXIT_DOMAIN);
    assert!(r.stderr.contains("CapacityExceeded"), "{}", r.stderr);
}

#[test]
fn non_binary_cover_and_band_violation() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let gray = GrayImage::new(2, 2, vec![0, 255, 17, 0]).unwrap();
    fs::write(d.join("gray.pgm"), encode_pnm(&gray, PnmFormat::PgmRaw).unwrap()).unwrap();
    fs::write(d.join("msg.txt"), b"").unwrap();

    let r = stegshare(&["embed", "--cover", &p(d, "gray.pgm"), "--secret", &p(d, "msg.txt"), "--out", &p(d, "s.pgm")]);
    assert_eq!(r.code, EXIT_DOMAIN);
    assert!(r.stderr.contains("NotBinary: pixel 2 has value 17"), "{}", r.stderr);

    let r = stegshare(&["shares", "--in", &p(d, "gray.pgm"), "--seed", "1", "--out1", &p(d, "a"), "--out2", &p(d, "b")]);
    assert_eq!(r.code, EXIT_DOMAIN);
    assert!(r.stderr.contains("BandViolation: pixel 2"), "{}", r.stderr);

    let r = stegshare(&["analyze", "--in", &p(d, "gray.pgm")]);
    assert_eq!(r.code, EXIT_DOMAIN);
    assert!(r.stdout.contains("out of band:          1"));
}

#[test]
fn corrupted_share_reports_pair_index() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let stego = GrayImage::new(2, 1, vec![255, 4]).unwrap();
    fs::write(d.join("stego.pgm"), encode_pnm(&stego, PnmFormat::PgmRaw).unwrap()).unwrap();
    let r = stegshare(&["shares", "--in", &p(d, "stego.pgm"), "--seed", "3", "--out1", &p(d, "s1.pgm"), "--out2", &p(d, "s2.pgm")]);
    assert_eq!(r.code, EXIT_OK);
    let mut s2 = decode_pnm(&fs::read(d.join("s2.pgm")).unwrap()).unwrap();
    // Pair 1 halves are pixels 2 and 3; one of them is noise 255.
    let noise = if s2.pixels()[2] == 255 { 2 } else { 3 };
    s2.pixels_mut()[noise] = 200;
    fs::write(d.join("s2.pgm"), encode_pnm(&s2, PnmFormat::PgmRaw).unwrap()).unwrap();
    let r = stegshare(&["decode", "--share1", &p(d, "s1.pgm"), "--share2", &p(d, "s2.pgm"), "--out", &p(d, "f.pgm")]);
    assert_eq!(r.code, EXIT_DOMAIN);
    assert!(r.stderr.contains("InconsistentPair: pair 1"), "{}", r.stderr);
}

#[test]
fn usage_and_io_errors_exit_2() {
    assert_eq!(stegshare(&[]).code, EXIT_USAGE);
    assert_eq!(stegshare(&["shares", "--in", "x.pgm", "--out1", "a", "--out2", "b"]).code, EXIT_USAGE);
    let r = stegshare(&["analyze", "--in", "/nonexistent/file.pgm"]);
    assert_eq!(r.code, EXIT_USAGE);
    assert!(r.stderr.contains("cannot read"));

    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("bad.pgm"), b"P7 garbage").unwrap();
    let r = stegshare(&["analyze", "--in", &p(dir.path(), "bad.pgm")]);
    assert_eq!(r.code, EXIT_USAGE);
    assert!(r.stderr.contains("MalformedHeader"));
}

fn bin() -> PathBuf {
    PathBuf::from(env!("CARGO_BIN_EXE_stegshare"))
}

#[test]
fn binary_shares_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let cover = write_cover(d, 50, 20);
    fs::write(d.join("msg.txt"), b"same seed, same bytes").unwrap();
    let status = Command::new(bin())
        .args(["embed", "--cover", &cover, "--secret", &p(d, "msg.txt"), "--out", &p(d, "st.pgm")])
        .status()
        .unwrap();
    assert!(status.success());
    for run in ["a", "b"] {
        let out = Command::new(bin())
            .args(["shares", "--in", &p(d, "st.pgm"), "--seed", "99"])
            .args(["--out1", &p(d, &format!("{run}1.pgm")), "--out2", &p(d, &format!("{run}2.pgm"))])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
    }
    assert_eq!(fs::read(d.join("a1.pgm")).unwrap(), fs::read(d.join("b1.pgm")).unwrap());
    assert_eq!(fs::read(d.join("a2.pgm")).unwrap(), fs::read(d.join("b2.pgm")).unwrap());

    let out = Command::new(bin()).args(["embed", "--cover"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

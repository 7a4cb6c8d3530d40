//! Command-line front end. Exit codes: 0 success, 1 domain error (bad image
//! or payload content), 2 I/O or usage error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::analysis::analyze;
use crate::decode::{decode_shares, stack_or};
use crate::embed::embed;
use crate::error::Error;
use crate::extract::{extract_payload, restore_cover};
use crate::image::{validate_binary, GrayImage};
use crate::payload::{Payload, PayloadKind};
use crate::pnm::{decode_pnm, encode_pnm, has_pnm_magic, PnmFormat};
use crate::shares::{generate_shares_par, Share};
use crate::stego::StegoImage;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "stegshare",
    version,
    about = "Hide a secret in a binary cover image and split it into two visual-cryptography shares"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SecretType {
    Msg,
    Img,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Kv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Embed a secret into a binary cover; writes the stego image as PGM.
    Embed {
        #[arg(long)]
        cover: PathBuf,
        #[arg(long)]
        secret: PathBuf,
        /// Inferred from the file's magic number when omitted.
        #[arg(long, value_enum)]
        secret_type: Option<SecretType>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Split a stego image into two shares.
    Shares {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out1: PathBuf,
        #[arg(long)]
        out2: PathBuf,
    },
    /// Fuse two shares back into the stego image.
    Decode {
        #[arg(long)]
        share1: PathBuf,
        #[arg(long)]
        share2: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Recover the secret and the original cover from a stego image.
    Extract {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out_secret: PathBuf,
        #[arg(long)]
        out_cover: PathBuf,
    },
    /// OR-stack two shares the way overlaid transparencies combine.
    Stack {
        #[arg(long)]
        share1: PathBuf,
        #[arg(long)]
        share2: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Histogram, band gap and single-guess probability report.
    Analyze {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
        /// Also write the 256-bin histogram as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Run embed, shares, decode and extract, and check both outputs.
    Roundtrip {
        #[arg(long)]
        cover: PathBuf,
        #[arg(long)]
        secret: PathBuf,
        #[arg(long, value_enum)]
        secret_type: Option<SecretType>,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Debug)]
enum Failure {
    Domain(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_domain() {
            Failure::Domain(e)
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn read(path: &Path) -> CliResult<Vec<u8>> {
    fs::read(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, bytes: &[u8]) -> CliResult<()> {
    fs::write(path, bytes).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
}

fn read_image(path: &Path) -> CliResult<GrayImage> {
    decode_pnm(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write_image(path: &Path, img: &GrayImage, format: PnmFormat) -> CliResult<()> {
    write(path, &encode_pnm(img, format)?)
}

fn read_share(path: &Path) -> CliResult<Share> {
    Ok(Share::from_gray(read_image(path)?)?)
}

fn read_secret(path: &Path, kind: Option<SecretType>) -> CliResult<Payload> {
    let bytes = read(path)?;
    let kind = kind.unwrap_or(if has_pnm_magic(&bytes) {
        SecretType::Img
    } else {
        SecretType::Msg
    });
    match kind {
        SecretType::Msg => Ok(Payload::message(bytes)),
        SecretType::Img => {
            let img = decode_pnm(&bytes)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            Ok(Payload::image(img))
        }
    }
}

fn read_cover(path: &Path) -> CliResult<crate::image::BinaryImage> {
    Ok(validate_binary(read_image(path)?)?)
}

fn execute(cmd: Command, out: &mut dyn Write) -> CliResult<bool> {
    match cmd {
        Command::Embed {
            cover,
            secret,
            secret_type,
            out: dest,
        } => {
            let cover = read_cover(&cover)?;
            let payload = read_secret(&secret, secret_type)?;
            let stego = embed(&cover, &payload)?;
            write_image(&dest, stego.as_gray(), PnmFormat::PgmRaw)?;
            say(out, format!("embedded {} framed bytes into {}", payload.framed_len(), dest.display()));
        }
        Command::Shares {
            input,
            seed,
            out1,
            out2,
        } => {
            let stego = StegoImage::try_from(read_image(&input)?)?;
            let (s1, s2) = generate_shares_par(&stego, seed)?;
            write_image(&out1, s1.as_gray(), PnmFormat::PgmRaw)?;
            write_image(&out2, s2.as_gray(), PnmFormat::PgmRaw)?;
            say(out, format!("seed={seed}"));
        }
        Command::Decode {
            share1,
            share2,
            out: dest,
        } => {
            let stego = decode_shares(&read_share(&share1)?, &read_share(&share2)?)?;
            write_image(&dest, stego.as_gray(), PnmFormat::PgmRaw)?;
        }
        Command::Extract {
            input,
            out_secret,
            out_cover,
        } => {
            let stego = StegoImage::try_from(read_image(&input)?)?;
            let payload = extract_payload(&stego)?;
            let cover = restore_cover(stego.as_gray())?;
            write_payload(&out_secret, &payload)?;
            write_image(&out_cover, cover.as_gray(), PnmFormat::Pbm)?;
            say(out, format!("extracted {} body bytes", payload.body().len()));
        }
        Command::Stack {
            share1,
            share2,
            out: dest,
        } => {
            let stacked = stack_or(&read_share(&share1)?, &read_share(&share2)?)?;
            write_image(&dest, &stacked, PnmFormat::PgmRaw)?;
        }
        Command::Analyze { input, format, csv } => {
            let report = analyze(&read_image(&input)?);
            if let Some(csv) = csv {
                write(&csv, report.histogram.to_csv().as_bytes())?;
            }
            let text = match format {
                ReportFormat::Text => report.to_text(),
                ReportFormat::Kv => report.to_key_value(),
            };
            let _ = out.write_all(text.as_bytes());
            if let Err(e) = report.band_gap {
                return Err(Failure::Domain(e));
            }
        }
        Command::Roundtrip {
            cover,
            secret,
            secret_type,
            seed,
        } => {
            let cover = read_cover(&cover)?;
            let payload = read_secret(&secret, secret_type)?;
            let stego = embed(&cover, &payload)?;
            let (s1, s2) = generate_shares_par(&stego, seed)?;
            let fused = decode_shares(&s1, &s2)?;
            let got_payload = extract_payload(&fused)?;
            let got_cover = restore_cover(fused.as_gray())?;
            let checks = [
                ("stego", fused == stego),
                ("payload", got_payload == payload),
                ("cover", got_cover == cover),
            ];
            for (name, ok) in checks {
                say(out, format!("{name}: {}", if ok { "identical" } else { "MISMATCH" }));
            }
            let pass = checks.iter().all(|&(_, ok)| ok);
            say(out, format!("seed={seed}"));
            say(out, if pass { "PASS" } else { "FAIL" }.to_string());
            return Ok(pass);
        }
    }
    Ok(true)
}

fn write_payload(path: &Path, payload: &Payload) -> CliResult<()> {
    match payload.kind() {
        PayloadKind::Message => write(path, payload.body()),
        PayloadKind::Image => {
            let img = payload.to_image().expect("image payload has valid dimensions");
            let binary = img.pixels().iter().all(|&v| v == 0 || v == 255);
            let format = if binary { PnmFormat::Pbm } else { PnmFormat::PgmRaw };
            write_image(path, &img, format)
        }
    }
}

fn say(out: &mut dyn Write, line: String) {
    let _ = writeln!(out, "{line}");
}

/// Parses `args` (program name first) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
            } else {
                let _ = out.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_DOMAIN,
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DOMAIN
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

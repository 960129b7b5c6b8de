//! Command-line front end. Every subcommand is a thin wrapper over the
//! library; all output goes through the supplied writer so tests can
//! capture it.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::codec::{
    derive_alphabet, reference_alphabet, reference_curve, AlphabetMap, PointMatrix,
};
use crate::curve::{CurveParams, Point};
use crate::error::Error;
use crate::field::find_primitive_element;
use crate::keyspace::build_tables;
use crate::multinacci::format_matrix;
use crate::scheme::{
    decrypt_message, derive_shared_decrypt, derive_shared_encrypt, encrypt_message, gen_keypair,
    key_matrix, CiphertextBundle, PrivateKey, PublicKey, SchemeParams,
};

#[derive(Parser, Debug)]
#[command(
    name = "mnecc",
    version,
    about = "Elliptic-curve ElGamal encryption with multinacci key matrices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate a key pair and write the public/private key files
    Keygen {
        /// Curve modulus (prime)
        #[arg(long)]
        p: u64,
        /// Curve coefficient a
        #[arg(long)]
        a: u64,
        /// Curve coefficient b
        #[arg(long)]
        b: u64,
        /// Generator point, e.g. `2,14`
        #[arg(long = "E", value_name = "X,Y")]
        base_point: Point,
        /// Primitive element of F_p; the smallest one is chosen if omitted
        #[arg(long)]
        beta: Option<u64>,
        /// Secret exponent in (1, p-1); random if omitted
        #[arg(long)]
        r: Option<u64>,
        /// Block dimension for encryption
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Seed for the random generator (reproducible keygen)
        #[arg(long)]
        seed: Option<u64>,
        /// Output path for the public key
        #[arg(long = "pub", default_value = "public.key")]
        public: PathBuf,
        /// Output path for the private key
        #[arg(long = "priv", default_value = "private.key")]
        private: PathBuf,
    },
    /// Encrypt a message under a public key file
    Encrypt {
        #[arg(long = "pub")]
        public: PathBuf,
        #[arg(long)]
        message: String,
        /// Ephemeral exponent in (1, p-1); random if omitted
        #[arg(long)]
        e: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
        /// Output path for the ciphertext
        #[arg(long, default_value = "message.ct")]
        out: PathBuf,
        /// Alphabet file overriding the default mapping
        #[arg(long)]
        alphabet: Option<PathBuf>,
        /// Also print k, the key matrix and the per-block matrices
        #[arg(long)]
        verbose: bool,
    },
    /// Decrypt a ciphertext file
    Decrypt {
        #[arg(long = "priv")]
        private: PathBuf,
        #[arg(long = "pub")]
        public: PathBuf,
        #[arg(long)]
        cipher: PathBuf,
        #[arg(long)]
        alphabet: Option<PathBuf>,
    },
    /// List every point of a curve with its order
    Inspect {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
    },
    /// Print (or export) the character/point alphabet for a curve
    Alphabet {
        #[arg(long, default_value_t = 47)]
        p: u64,
        #[arg(long, default_value_t = 3)]
        a: u64,
        #[arg(long, default_value_t = 41)]
        b: u64,
        /// Explicit character set, one symbol per group point
        #[arg(long)]
        charset: Option<String>,
        /// Write the alphabet in its file format
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Tabulate key-space sizes and brute-force probabilities
    Analyze {
        /// Inclusive range `29..67` (primes within) or explicit list `29,31,47`
        #[arg(long, default_value = "29..67")]
        primes: String,
        /// Matrix dimensions, e.g. `3,4`
        #[arg(long = "n", default_value = "3,4")]
        dims: String,
        /// Print exact integers instead of scientific notation
        #[arg(long)]
        exact: bool,
        /// Comma-separated rows instead of an aligned table
        #[arg(long)]
        csv: bool,
    },
    /// Run the built-in worked example end to end
    Demo,
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<(), Error> {
    match cli.command {
        Command::Keygen {
            p,
            a,
            b,
            base_point,
            beta,
            r,
            n,
            seed,
            public,
            private,
        } => cmd_keygen(
            p, a, b, base_point, beta, r, n, seed, &public, &private, out,
        ),
        Command::Encrypt {
            public,
            message,
            e,
            seed,
            out: out_path,
            alphabet,
            verbose,
        } => cmd_encrypt(
            &public,
            &message,
            e,
            seed,
            &out_path,
            alphabet.as_deref(),
            verbose,
            out,
        ),
        Command::Decrypt {
            private,
            public,
            cipher,
            alphabet,
        } => cmd_decrypt(&private, &public, &cipher, alphabet.as_deref(), out),
        Command::Inspect { p, a, b } => cmd_inspect(p, a, b, out),
        Command::Alphabet {
            p,
            a,
            b,
            charset,
            export,
        } => cmd_alphabet(p, a, b, charset.as_deref(), export.as_deref(), out),
        Command::Analyze {
            primes,
            dims,
            exact,
            csv,
        } => cmd_analyze(&primes, &dims, exact, csv, out),
        Command::Demo => cmd_demo(out),
    }
}

fn make_rng(seed: Option<u64>) -> StdRng {
    match seed {
        Some(s) => StdRng::seed_from_u64(s),
        None => StdRng::from_entropy(),
    }
}

fn random_exponent(rng: &mut StdRng, what: &'static str, p: u64) -> Result<u64, Error> {
    if p < 5 {
        // (1, p-1) holds no integer for p < 5
        return Err(Error::RangeError {
            what,
            value: 0,
            min: 2,
            max: p.saturating_sub(2),
        });
    }
    Ok(rng.gen_range(2..=p - 2))
}

/// Fallback symbols for derived alphabets: the printable ASCII range.
fn default_charset() -> Vec<char> {
    (33u8..=126).map(char::from).collect()
}

fn load_alphabet(curve: CurveParams, path: Option<&Path>) -> Result<AlphabetMap, Error> {
    if let Some(path) = path {
        let text = fs::read_to_string(path)?;
        return AlphabetMap::from_file_string(curve, &text);
    }
    if curve == reference_curve() {
        return Ok(reference_alphabet());
    }
    let order = curve.group_order()? as usize;
    let charset = default_charset();
    if order > charset.len() {
        return Err(Error::SizeMismatch {
            charset: charset.len(),
            points: order,
        });
    }
    derive_alphabet(curve, &charset[..order])
}

/// Row-major rendering used in transcripts, e.g.
/// `[ (21,24) (34,25) ; (43,24) (27,26) ]`.
fn render_block(block: &PointMatrix) -> String {
    let rows: Vec<String> = block
        .rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(Point::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect();
    format!("[ {} ]", rows.join(" ; "))
}

#[allow(clippy::too_many_arguments)]
fn cmd_keygen(
    p: u64,
    a: u64,
    b: u64,
    base_point: Point,
    beta: Option<u64>,
    r: Option<u64>,
    n: usize,
    seed: Option<u64>,
    public_path: &Path,
    private_path: &Path,
    out: &mut dyn Write,
) -> Result<(), Error> {
    let curve = CurveParams::new(p, a, b)?;
    let params = SchemeParams::new(curve, base_point)?;
    let beta = beta.unwrap_or_else(|| find_primitive_element(curve.modulus()).value());
    let r = match r {
        Some(r) => r,
        None => random_exponent(&mut make_rng(seed), "secret key r", p)?,
    };
    let (public, private) = gen_keypair(params, beta, r, n)?;
    fs::write(public_path, public.to_file_string())?;
    fs::write(private_path, private.to_file_string())?;
    writeln!(out, "curve: {curve}")?;
    writeln!(
        out,
        "E = {} (order {})",
        params.base_point(),
        params.order()
    )?;
    writeln!(out, "beta = {}", public.beta)?;
    writeln!(out, "E1 = {}", public.e1)?;
    writeln!(out, "public key  -> {}", public_path.display())?;
    writeln!(out, "private key -> {}", private_path.display())?;
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_encrypt(
    public_path: &Path,
    message: &str,
    e: Option<u64>,
    seed: Option<u64>,
    out_path: &Path,
    alphabet: Option<&Path>,
    verbose: bool,
    out: &mut dyn Write,
) -> Result<(), Error> {
    let public = PublicKey::from_file_string(&fs::read_to_string(public_path)?)?;
    let map = load_alphabet(public.params.curve(), alphabet)?;
    let e = match e {
        Some(e) => e,
        None => random_exponent(
            &mut make_rng(seed),
            "ephemeral key e",
            public.params.curve().p(),
        )?,
    };
    let bundle = encrypt_message(&public, &map, e, message, public.dim)?;
    fs::write(out_path, bundle.to_string())?;

    let (_, shared) = derive_shared_encrypt(&public, e)?;
    if shared.k % public.params.order() == 0 {
        writeln!(
            out,
            "warning: k = {} vanishes mod N = {}; the additive mask kE is trivial",
            shared.k,
            public.params.order()
        )?;
    }
    writeln!(out, "a = {}", bundle.a_value)?;
    writeln!(out, "ciphertext: {}", bundle.text(&map)?)?;
    writeln!(out, "ciphertext file -> {}", out_path.display())?;
    if verbose {
        let key = key_matrix(bundle.n, shared.k, public.params.order())?;
        writeln!(out, "k = {}", shared.k)?;
        writeln!(out, "K = {}", format_matrix(key.entries()))?;
        writeln!(out, "kE = {}", public.params.mask_point(shared.k)?)?;
        let points = map.encode(message)?;
        let plain_blocks = crate::codec::pack_blocks(&points, bundle.n);
        for (i, (plain, cipher)) in plain_blocks.iter().zip(&bundle.blocks).enumerate() {
            writeln!(out, "P{} = {}", i + 1, render_block(plain))?;
            writeln!(out, "C{} = {}", i + 1, render_block(cipher))?;
        }
    }
    Ok(())
}

fn cmd_decrypt(
    private_path: &Path,
    public_path: &Path,
    cipher_path: &Path,
    alphabet: Option<&Path>,
    out: &mut dyn Write,
) -> Result<(), Error> {
    let public = PublicKey::from_file_string(&fs::read_to_string(public_path)?)?;
    let private = PrivateKey::from_file_string(&fs::read_to_string(private_path)?)?;
    let bundle: CiphertextBundle = fs::read_to_string(cipher_path)?.parse()?;
    let map = load_alphabet(public.params.curve(), alphabet)?;
    let text = decrypt_message(&private, &public.params, &map, &bundle)?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn cmd_inspect(p: u64, a: u64, b: u64, out: &mut dyn Write) -> Result<(), Error> {
    let curve = CurveParams::new(p, a, b)?;
    let points = curve.enumerate_points()?;
    writeln!(out, "curve: {curve}")?;
    writeln!(out, "group order: {}", points.len())?;
    for pt in points {
        writeln!(out, "{pt} order {}", curve.order_of_point(pt)?)?;
    }
    Ok(())
}

fn cmd_alphabet(
    p: u64,
    a: u64,
    b: u64,
    charset: Option<&str>,
    export: Option<&Path>,
    out: &mut dyn Write,
) -> Result<(), Error> {
    let curve = CurveParams::new(p, a, b)?;
    let map = match charset {
        Some(cs) => derive_alphabet(curve, &cs.chars().collect::<Vec<_>>())?,
        None => load_alphabet(curve, None)?,
    };
    for &(c, pt) in map.pairs() {
        writeln!(out, "{c} {pt}")?;
    }
    if let Some(path) = export {
        fs::write(path, map.to_file_string())?;
        writeln!(out, "alphabet file -> {}", path.display())?;
    }
    Ok(())
}

fn parse_primes(spec: &str) -> Result<Vec<u64>, Error> {
    if let Some((lo, hi)) = spec.split_once("..") {
        let lo: u64 = lo
            .trim()
            .parse()
            .map_err(|e| Error::parse(format!("bad prime range start {lo:?}: {e}")))?;
        let hi: u64 = hi
            .trim()
            .parse()
            .map_err(|e| Error::parse(format!("bad prime range end {hi:?}: {e}")))?;
        return Ok((lo..=hi).filter(|&v| crate::field::is_prime(v)).collect());
    }
    spec.split(',')
        .map(|v| {
            v.trim()
                .parse::<u64>()
                .map_err(|e| Error::parse(format!("bad prime {v:?}: {e}")))
        })
        .collect()
}

fn parse_dims(spec: &str) -> Result<Vec<usize>, Error> {
    spec.split(',')
        .map(|v| {
            v.trim()
                .parse::<usize>()
                .map_err(|e| Error::parse(format!("bad dimension {v:?}: {e}")))
        })
        .collect()
}

fn cmd_analyze(
    primes_spec: &str,
    dims_spec: &str,
    exact: bool,
    csv: bool,
    out: &mut dyn Write,
) -> Result<(), Error> {
    let primes = parse_primes(primes_spec)?;
    let dims = parse_dims(dims_spec)?;
    let reports = build_tables(&primes, &dims)?;

    if csv {
        writeln!(out, "p,n,keyspace,probability")?;
        for r in &reports {
            if exact {
                writeln!(out, "{},{},{},1/{}", r.p, r.n, r.gl_order, r.gl_order)?;
            } else {
                writeln!(
                    out,
                    "{},{},{},{}",
                    r.p,
                    r.n,
                    r.gl_order_sci(5),
                    r.probability_sci(3)
                )?;
            }
        }
        return Ok(());
    }

    writeln!(out, "Key space |GL_n(F_p)|")?;
    for r in &reports {
        if exact {
            writeln!(out, "  p={:<6} n={}  {}", r.p, r.n, r.gl_order)?;
        } else {
            writeln!(out, "  p={:<6} n={}  {}", r.p, r.n, r.gl_order_sci(5))?;
        }
    }
    writeln!(out)?;
    writeln!(out, "Probability of retrieving the key matrix")?;
    for r in &reports {
        if exact {
            writeln!(out, "  p={:<6} n={}  1/{}", r.p, r.n, r.gl_order)?;
        } else {
            writeln!(out, "  p={:<6} n={}  {}", r.p, r.n, r.probability_sci(3))?;
        }
    }
    Ok(())
}

fn cmd_demo(out: &mut dyn Write) -> Result<(), Error> {
    let curve = reference_curve();
    let generator = Point::affine(2, 14);
    let params = SchemeParams::new(curve, generator)?;
    let map = reference_alphabet();
    let message = "COVID-19";

    writeln!(out, "curve: {curve}")?;
    writeln!(out, "group order: {}", curve.group_order()?)?;
    writeln!(out, "generator E = {generator}")?;
    writeln!(out)?;

    writeln!(out, "-- public key construction --")?;
    let (public, private) = gen_keypair(params, 31, 14, 2)?;
    writeln!(out, "beta = {} (primitive element of F_47)", public.beta)?;
    writeln!(out, "secret r = {}", private.r)?;
    writeln!(out, "E1 = beta^r mod p = {}", public.e1)?;
    writeln!(
        out,
        "published (beta, E1) = ({}, {})",
        public.beta, public.e1
    )?;
    writeln!(out)?;

    writeln!(out, "-- encryption of {message:?} --")?;
    let e = 21;
    let (a_value, shared) = derive_shared_encrypt(&public, e)?;
    writeln!(out, "ephemeral e = {e}")?;
    writeln!(out, "a = beta^e mod p = {a_value}")?;
    writeln!(out, "k = E1^e mod p = {}", shared.k)?;
    let key = key_matrix(2, shared.k, params.order())?;
    writeln!(
        out,
        "key matrix K = F_2^{} mod {} = {}",
        shared.k,
        params.order(),
        key
    )?;
    writeln!(out, "mask kE = {}", params.mask_point(shared.k)?)?;
    let points = map.encode(message)?;
    let rendered: Vec<String> = points.iter().map(Point::to_string).collect();
    writeln!(out, "plaintext points: {}", rendered.join(" "))?;
    let plain_blocks = crate::codec::pack_blocks(&points, 2);
    let bundle = encrypt_message(&public, &map, e, message, 2)?;
    for (i, (plain, cipher)) in plain_blocks.iter().zip(&bundle.blocks).enumerate() {
        writeln!(out, "P{} = {}", i + 1, render_block(plain))?;
        writeln!(out, "C{} = {}", i + 1, render_block(cipher))?;
    }
    let cipher_text = bundle.text(&map)?;
    writeln!(out, "ciphertext characters: {cipher_text}")?;
    writeln!(out, "transmitted (a, C) = ({a_value}, {cipher_text})")?;
    writeln!(out)?;

    writeln!(out, "-- decryption --")?;
    let recovered_k = derive_shared_decrypt(bundle.a_value, &private, curve.p());
    writeln!(out, "k = a^r mod p = {}", recovered_k.k)?;
    let decryption = crate::scheme::decryption_matrix(2, recovered_k.k, params.order())?;
    writeln!(
        out,
        "decryption matrix D = F_2^-{} mod {} = {}",
        recovered_k.k,
        params.order(),
        decryption
    )?;
    writeln!(
        out,
        "-kE = {}",
        curve.negate(params.mask_point(recovered_k.k)?)
    )?;
    for (i, block) in bundle.blocks.iter().enumerate() {
        let plain = crate::scheme::decrypt_block(&params, &decryption, recovered_k.k, block)?;
        writeln!(out, "recovered P{} = {}", i + 1, render_block(&plain))?;
    }
    let recovered = decrypt_message(&private, &params, &map, &bundle)?;
    writeln!(out, "recovered plaintext: {recovered}")?;
    Ok(())
}

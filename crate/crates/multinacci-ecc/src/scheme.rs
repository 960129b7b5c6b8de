//! The full cryptosystem: an ElGamal-style exchange in `F_p^*` produces a
//! shared integer `k`, the key matrix is the multinacci matrix `F_n^k`,
//! and each plaintext block of curve points is enciphered by the affine
//! Hill transform `C = K (P + kE J)`, where `J` is the all-ones matrix
//! (adding the point `kE` to every entry).
//!
//! One deliberate generalization: integer matrices act on curve points
//! modulo the order of the points involved, so all matrix-of-points
//! arithmetic here is reduced modulo `N = order(E)` rather than modulo
//! `p`. On a curve whose group order equals `p` the two agree and the
//! scheme reproduces the classic walkthrough bit for bit; on every other
//! curve only the `N` reduction decrypts correctly (provided, as usual,
//! that the alphabet's points lie in the subgroup generated by `E`).
//! The shared secret keeps its canonical residue mod `p` as the matrix
//! power index.

use std::fmt;
use std::str::FromStr;

use crate::codec::{pack_blocks, unpack_blocks, AlphabetMap, PointMatrix};
use crate::curve::{CurveParams, Point};
use crate::error::Error;
use crate::field::{mod_pow, FieldElement};
use crate::multinacci::{MultinacciMatrix, MultinacciParams};

/// Curve, generator point `E` and `N = order(E)`, the scalar modulus for
/// matrix-of-points arithmetic.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SchemeParams {
    curve: CurveParams,
    base_point: Point,
    order: u64,
}

impl SchemeParams {
    /// `base_point` must be an affine point of the curve; its order is
    /// computed here once.
    pub fn new(curve: CurveParams, base_point: Point) -> Result<Self, Error> {
        if base_point.is_infinity() || !curve.is_on_curve(base_point) {
            return Err(Error::PointNotOnCurve { point: base_point });
        }
        let order = curve.order_of_point(base_point)?;
        Ok(SchemeParams {
            curve,
            base_point,
            order,
        })
    }

    pub fn curve(&self) -> CurveParams {
        self.curve
    }

    pub fn base_point(&self) -> Point {
        self.base_point
    }

    /// `N`, the order of the generator point.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// The additive mask `kE` with the scalar reduced mod `N`.
    pub fn mask_point(&self, k: u64) -> Result<Point, Error> {
        self.curve.scalar_mul(k % self.order, self.base_point)
    }
}

/// Alice's published values: the scheme parameters, a primitive element
/// `beta` of `F_p`, `E1 = beta^r`, and the block dimension `n`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PublicKey {
    pub params: SchemeParams,
    pub beta: u64,
    pub e1: u64,
    pub dim: usize,
}

/// Alice's secret exponent `r`, `1 < r < p-1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PrivateKey {
    pub r: u64,
}

/// Bob's per-message secret exponent `e`, same range as `r`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct EphemeralKey {
    pub e: u64,
}

impl EphemeralKey {
    /// Validates `1 < e < p-1`.
    pub fn new(e: u64, p: u64) -> Result<Self, Error> {
        check_exponent_range("ephemeral key e", e, p)?;
        Ok(EphemeralKey { e })
    }
}

/// The agreed integer `k`: `E1^e` on the sending side, `a^r` on the
/// receiving side, both mod `p`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SharedSecret {
    pub k: u64,
}

fn check_exponent_range(what: &'static str, value: u64, p: u64) -> Result<(), Error> {
    if value <= 1 || value >= p - 1 {
        return Err(Error::RangeError {
            what,
            value,
            min: 2,
            max: p - 2,
        });
    }
    Ok(())
}

/// Builds the key pair: checks that `beta` is primitive mod `p` and `r`
/// in range, then publishes `E1 = beta^r mod p`.
pub fn gen_keypair(
    params: SchemeParams,
    beta: u64,
    r: u64,
    dim: usize,
) -> Result<(PublicKey, PrivateKey), Error> {
    let p = params.curve().p();
    let beta_elem = FieldElement::new(beta, params.curve().modulus());
    if !beta_elem.is_primitive() {
        return Err(Error::NotPrimitive {
            value: beta,
            modulus: p,
        });
    }
    check_exponent_range("secret key r", r, p)?;
    if dim < 2 {
        return Err(Error::RangeError {
            what: "matrix dimension n",
            value: dim as u64,
            min: 2,
            max: u64::MAX,
        });
    }
    let e1 = mod_pow(beta, r, p);
    Ok((
        PublicKey {
            params,
            beta: beta % p,
            e1,
            dim,
        },
        PrivateKey { r },
    ))
}

/// Sender side of the exchange: `a = beta^e`, `k = E1^e`, both mod `p`.
pub fn derive_shared_encrypt(public: &PublicKey, e: u64) -> Result<(u64, SharedSecret), Error> {
    let p = public.params.curve().p();
    check_exponent_range("ephemeral key e", e, p)?;
    let a_value = mod_pow(public.beta, e, p);
    let k = mod_pow(public.e1, e, p);
    Ok((a_value, SharedSecret { k }))
}

/// Receiver side: `k = a^r mod p`.
pub fn derive_shared_decrypt(a_value: u64, private: &PrivateKey, p: u64) -> SharedSecret {
    SharedSecret {
        k: mod_pow(a_value, private.r, p),
    }
}

/// Encryption key matrix `K = F_n^k` with entries mod `modulus`.
pub fn key_matrix(n: usize, k: u64, modulus: u64) -> Result<MultinacciMatrix, Error> {
    Ok(MultinacciParams::new(n, modulus)?.power_matrix(k as i64))
}

/// Decryption key matrix `D = F_n^{-k}`, built directly from
/// negative-index terms rather than by inverting `K`.
pub fn decryption_matrix(n: usize, k: u64, modulus: u64) -> Result<MultinacciMatrix, Error> {
    Ok(MultinacciParams::new(n, modulus)?.power_matrix(-(k as i64)))
}

/// Action of an integer matrix on a block of points: entry `(i, j)` of
/// the result is `sum_l M[i][l] * B[l][j]` using point addition.
pub fn mat_point_mul(
    curve: &CurveParams,
    matrix: &[Vec<u64>],
    block: &PointMatrix,
) -> Result<PointMatrix, Error> {
    let n = block.n();
    if matrix.len() != n || matrix.iter().any(|row| row.len() != n) {
        return Err(Error::DimensionMismatch {
            left_rows: matrix.len(),
            left_cols: matrix.first().map_or(0, Vec::len),
            right_rows: n,
            right_cols: n,
        });
    }
    for row in block.rows() {
        for &pt in row {
            if !curve.is_on_curve(pt) {
                return Err(Error::PointNotOnCurve { point: pt });
            }
        }
    }
    let mut entries = Vec::with_capacity(n);
    for row in matrix.iter() {
        let mut out_row = Vec::with_capacity(n);
        for j in 0..n {
            let mut acc = Point::Infinity;
            for (l, &scalar) in row.iter().enumerate() {
                acc = curve.add(acc, curve.scalar_mul(scalar, block.get(l, j))?)?;
            }
            out_row.push(acc);
        }
        entries.push(out_row);
    }
    PointMatrix::new(entries)
}

/// `C = K (P + kE J)`: the mask point `kE` is added to every entry, then
/// the key matrix acts on the block.
pub fn encrypt_block(
    params: &SchemeParams,
    key: &MultinacciMatrix,
    k: u64,
    block: &PointMatrix,
) -> Result<PointMatrix, Error> {
    let mask = params.mask_point(k)?;
    let shifted = block.translate(&params.curve(), mask)?;
    mat_point_mul(&params.curve(), key.entries(), &shifted)
}

/// `P = D C - kE J`: the decryption matrix acts first, then the mask is
/// subtracted from every entry.
pub fn decrypt_block(
    params: &SchemeParams,
    decryption: &MultinacciMatrix,
    k: u64,
    block: &PointMatrix,
) -> Result<PointMatrix, Error> {
    let product = mat_point_mul(&params.curve(), decryption.entries(), block)?;
    let mask = params.mask_point(k)?;
    product.translate(&params.curve(), params.curve().negate(mask))
}

/// Everything the receiver needs besides her private key: the
/// transmitted `a = beta^e`, the block dimension, the unpadded message
/// length, and the ciphertext blocks.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CiphertextBundle {
    pub a_value: u64,
    pub n: usize,
    pub original_length: usize,
    pub blocks: Vec<PointMatrix>,
}

impl CiphertextBundle {
    /// Ciphertext rendered as characters, possible whenever the alphabet
    /// covers the whole curve (every ciphertext point then has a symbol).
    pub fn text(&self, map: &AlphabetMap) -> Result<String, Error> {
        let mut out = String::new();
        for block in &self.blocks {
            out.push_str(&map.decode(&block.column_major())?);
        }
        Ok(out)
    }
}

impl fmt::Display for CiphertextBundle {
    /// The ciphertext file format: `a=`, `n=`, `len=` then one
    /// column-major `;`-separated block per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "a={}", self.a_value)?;
        writeln!(f, "n={}", self.n)?;
        writeln!(f, "len={}", self.original_length)?;
        for block in &self.blocks {
            writeln!(f, "{block}")?;
        }
        Ok(())
    }
}

impl FromStr for CiphertextBundle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut lines = s.lines().filter(|l| !l.trim().is_empty());
        let mut header = |name: &str| -> Result<u64, Error> {
            let line = lines
                .next()
                .ok_or_else(|| Error::parse(format!("ciphertext missing `{name}=` line")))?;
            let value = line
                .strip_prefix(name)
                .and_then(|rest| rest.strip_prefix('='))
                .ok_or_else(|| Error::parse(format!("expected `{name}=...`, got {line:?}")))?;
            value
                .trim()
                .parse::<u64>()
                .map_err(|e| Error::parse(format!("bad `{name}=` value: {e}")))
        };
        let a_value = header("a")?;
        let n = header("n")? as usize;
        let original_length = header("len")? as usize;
        if n < 2 {
            return Err(Error::parse(format!("block dimension n={n} is below 2")));
        }
        let mut blocks = Vec::new();
        for line in lines {
            let cells: Result<Vec<Point>, Error> =
                line.trim().split(';').map(|c| c.parse::<Point>()).collect();
            let cells = cells?;
            if cells.len() != n * n {
                return Err(Error::parse(format!(
                    "block line has {} points, expected {}",
                    cells.len(),
                    n * n
                )));
            }
            blocks.push(PointMatrix::from_fn(n, |i, j| cells[j * n + i]));
        }
        Ok(CiphertextBundle {
            a_value,
            n,
            original_length,
            blocks,
        })
    }
}

/// Encodes `text`, packs it into `n x n` blocks and enciphers each block
/// under the ephemeral exponent `e`.
pub fn encrypt_message(
    public: &PublicKey,
    map: &AlphabetMap,
    e: u64,
    text: &str,
    n: usize,
) -> Result<CiphertextBundle, Error> {
    if n < 2 {
        return Err(Error::RangeError {
            what: "matrix dimension n",
            value: n as u64,
            min: 2,
            max: u64::MAX,
        });
    }
    let (a_value, shared) = derive_shared_encrypt(public, e)?;
    let key = key_matrix(n, shared.k, public.params.order())?;
    let points = map.encode(text)?;
    let blocks = pack_blocks(&points, n);
    let cipher_blocks: Result<Vec<PointMatrix>, Error> = blocks
        .iter()
        .map(|block| encrypt_block(&public.params, &key, shared.k, block))
        .collect();
    Ok(CiphertextBundle {
        a_value,
        n,
        original_length: points.len(),
        blocks: cipher_blocks?,
    })
}

/// Recovers the plaintext from a bundle: re-derives `k`, builds
/// `D = F_n^{-k}`, deciphers every block, unpads and decodes.
pub fn decrypt_message(
    private: &PrivateKey,
    params: &SchemeParams,
    map: &AlphabetMap,
    bundle: &CiphertextBundle,
) -> Result<String, Error> {
    let shared = derive_shared_decrypt(bundle.a_value, private, params.curve().p());
    let decryption = decryption_matrix(bundle.n, shared.k, params.order())?;
    let plain_blocks: Result<Vec<PointMatrix>, Error> = bundle
        .blocks
        .iter()
        .map(|block| decrypt_block(params, &decryption, shared.k, block))
        .collect();
    let points = unpack_blocks(&plain_blocks?, bundle.original_length)?;
    map.decode(&points)
}

const PUBLIC_KEY_FIELDS: [&str; 7] = ["p", "a", "b", "E", "beta", "E1", "n"];

impl PublicKey {
    /// Key file lines: `p=`, `a=`, `b=`, `E=(x,y)`, `beta=`, `E1=`, `n=`.
    pub fn to_file_string(&self) -> String {
        let curve = self.params.curve();
        format!(
            "p={}\na={}\nb={}\nE={}\nbeta={}\nE1={}\nn={}\n",
            curve.p(),
            curve.a(),
            curve.b(),
            self.params.base_point(),
            self.beta,
            self.e1,
            self.dim
        )
    }

    /// Parses [`to_file_string`](Self::to_file_string) output, revalidating the
    /// curve and generator and recomputing the generator order.
    pub fn from_file_string(s: &str) -> Result<Self, Error> {
        let mut values: Vec<Option<&str>> = vec![None; PUBLIC_KEY_FIELDS.len()];
        for line in s.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::parse(format!("expected key=value, got {line:?}")))?;
            let slot = PUBLIC_KEY_FIELDS
                .iter()
                .position(|f| *f == key)
                .ok_or_else(|| Error::parse(format!("unknown public key field {key:?}")))?;
            values[slot] = Some(value);
        }
        let get = |slot: usize| -> Result<&str, Error> {
            values[slot]
                .ok_or_else(|| Error::parse(format!("missing `{}=` line", PUBLIC_KEY_FIELDS[slot])))
        };
        let int = |slot: usize| -> Result<u64, Error> {
            get(slot)?
                .trim()
                .parse::<u64>()
                .map_err(|e| Error::parse(format!("bad `{}=` value: {e}", PUBLIC_KEY_FIELDS[slot])))
        };
        let curve = CurveParams::new(int(0)?, int(1)?, int(2)?)?;
        let base_point: Point = get(3)?.parse()?;
        let params = SchemeParams::new(curve, base_point)?;
        let beta = int(4)?;
        if !FieldElement::new(beta, curve.modulus()).is_primitive() {
            return Err(Error::NotPrimitive {
                value: beta,
                modulus: curve.p(),
            });
        }
        let e1 = int(5)?;
        if e1 == 0 || e1 >= curve.p() {
            return Err(Error::RangeError {
                what: "public value E1",
                value: e1,
                min: 1,
                max: curve.p() - 1,
            });
        }
        let dim = int(6)? as usize;
        if dim < 2 {
            return Err(Error::parse(format!("block dimension n={dim} is below 2")));
        }
        Ok(PublicKey {
            params,
            beta,
            e1,
            dim,
        })
    }
}

impl PrivateKey {
    /// Single line `r=<int>`.
    pub fn to_file_string(&self) -> String {
        format!("r={}\n", self.r)
    }

    pub fn from_file_string(s: &str) -> Result<Self, Error> {
        let line = s
            .lines()
            .find(|l| !l.trim().is_empty())
            .ok_or_else(|| Error::parse("empty private key file".to_string()))?;
        let value = line
            .trim()
            .strip_prefix("r=")
            .ok_or_else(|| Error::parse(format!("expected `r=...`, got {line:?}")))?;
        let r = value
            .parse::<u64>()
            .map_err(|e| Error::parse(format!("bad `r=` value: {e}")))?;
        Ok(PrivateKey { r })
    }
}

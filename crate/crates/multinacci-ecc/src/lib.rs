//! Elliptic-curve ElGamal encryption keyed by generalized Fibonacci
//! (multinacci) matrices.
//!
//! The pipeline: message characters map to points of a small curve over
//! `F_p` through a bijective alphabet, the points fill `n x n` blocks
//! column by column, and each block `P` is enciphered as the affine Hill
//! transform `C = K (P + kE J)`. The shared integer `k` comes from an
//! ElGamal exchange in `F_p^*`, and the key matrix `K = F_n^k` is a
//! multinacci matrix: both it and its inverse `F_n^{-k}` are written
//! down directly from sequence terms, with no matrix exponentiation or
//! inversion, because `det(F_n^k) = (-1)^{k(n-1)}` keeps every power
//! invertible modulo any modulus.
//!
//! ```
//! use multinacci_ecc::{codec, curve::Point, scheme};
//!
//! let params = scheme::SchemeParams::new(codec::reference_curve(), Point::affine(2, 14))?;
//! let (public, private) = scheme::gen_keypair(params, 31, 14, 2)?;
//! let map = codec::reference_alphabet();
//!
//! let bundle = scheme::encrypt_message(&public, &map, 21, "COVID-19", 2)?;
//! assert_eq!(bundle.a_value, 38);
//! assert_eq!(bundle.text(&map)?, "KMNE!N6L");
//! assert_eq!(scheme::decrypt_message(&private, &params, &map, &bundle)?, "COVID-19");
//! # Ok::<(), multinacci_ecc::Error>(())
//! ```
//!
//! The `examples/` directory walks through each capability: the full
//! worked example, curve inspection, matrix identities, key-space tables
//! and a roundtrip on a curve whose group order differs from `p`. The
//! `mnecc` binary exposes the same operations as subcommands.
//!
//! This is a research implementation at desk scale: parameters are tiny,
//! arithmetic is not constant-time, and no padding/authentication layers
//! beyond the scheme itself are provided.

// `x % m == 0` is the natural spelling throughout modular arithmetic code.
#![allow(clippy::manual_is_multiple_of)]

pub mod cli;
pub mod codec;
pub mod curve;
pub mod error;
pub mod field;
pub mod keyspace;
pub mod multinacci;
pub mod scheme;

pub use codec::{
    derive_alphabet, pack_blocks, reference_alphabet, reference_curve, unpack_blocks, AlphabetMap,
    PointMatrix,
};
pub use curve::{CurveParams, Point, DEFAULT_ENUMERATION_LIMIT};
pub use error::Error;
pub use field::{
    find_primitive_element, is_prime, mod_inverse, mod_pow, FieldElement, PrimeModulus,
};
pub use keyspace::{build_tables, gl_order, retrieval_probability, KeyspaceReport};
pub use multinacci::{
    det_sign, format_matrix, identity_matrix, mat_mul_mod, parse_matrix, IntMatrix,
    MultinacciMatrix, MultinacciParams,
};
pub use scheme::{
    decrypt_block, decrypt_message, decryption_matrix, derive_shared_decrypt,
    derive_shared_encrypt, encrypt_block, encrypt_message, gen_keypair, key_matrix, mat_point_mul,
    CiphertextBundle, EphemeralKey, PrivateKey, PublicKey, SchemeParams, SharedSecret,
};

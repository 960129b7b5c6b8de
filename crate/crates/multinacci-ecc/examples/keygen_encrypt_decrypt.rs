//! A fresh-keys workflow against the built-in curve, including the key
//! and ciphertext file formats that the `mnecc` binary uses.
//!
//! Run with `cargo run --example keygen_encrypt_decrypt`.

use multinacci_ecc::codec::{reference_alphabet, reference_curve};
use multinacci_ecc::curve::Point;
use multinacci_ecc::field::find_primitive_element;
use multinacci_ecc::scheme::{
    decrypt_message, encrypt_message, gen_keypair, CiphertextBundle, PrivateKey, PublicKey,
    SchemeParams,
};
use multinacci_ecc::Error;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn main() -> Result<(), Error> {
    let curve = reference_curve();
    let params = SchemeParams::new(curve, Point::affine(2, 14))?;
    let map = reference_alphabet();

    // a seeded generator keeps the run reproducible; drop the seed for
    // fresh keys every time
    let mut rng = StdRng::seed_from_u64(2024);
    let p = curve.p();

    let beta = find_primitive_element(curve.modulus()).value();
    let r = rng.gen_range(2..=p - 2);
    let (public, private) = gen_keypair(params, beta, r, 2)?;
    println!("beta = {beta}, r = {r}, E1 = {}", public.e1);

    println!("\npublic key file:\n{}", public.to_file_string());
    println!("private key file:\n{}", private.to_file_string());

    let message = "MULTINACCI-MATRICES-AT-WORK";
    let e = rng.gen_range(2..=p - 2);
    let bundle = encrypt_message(&public, &map, e, message, public.dim)?;
    println!("e = {e}");
    println!("ciphertext characters: {}", bundle.text(&map)?);
    println!("\nciphertext file:\n{}", bundle);

    // everything the receiver needs travels through the file formats
    let restored_public = PublicKey::from_file_string(&public.to_file_string())?;
    let restored_private = PrivateKey::from_file_string(&private.to_file_string())?;
    let restored_bundle: CiphertextBundle = bundle.to_string().parse()?;

    let recovered = decrypt_message(
        &restored_private,
        &restored_public.params,
        &map,
        &restored_bundle,
    )?;
    println!("recovered: {recovered}");
    assert_eq!(recovered, message);
    Ok(())
}

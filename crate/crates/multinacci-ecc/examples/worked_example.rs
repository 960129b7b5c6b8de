//! The complete reference walkthrough with fixed parameters: key
//! construction, shared-secret derivation, block encryption of
//! "COVID-19" and decryption, printing every intermediate value.
//!
//! Run with `cargo run --example worked_example`.

use multinacci_ecc::codec::{pack_blocks, reference_alphabet, reference_curve};
use multinacci_ecc::curve::Point;
use multinacci_ecc::scheme::{
    decrypt_block, decrypt_message, decryption_matrix, derive_shared_decrypt,
    derive_shared_encrypt, encrypt_message, gen_keypair, key_matrix, SchemeParams,
};
use multinacci_ecc::Error;

fn show_block(label: &str, block: &multinacci_ecc::PointMatrix) {
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
    println!("  {label} = [ {} ]", rows.join(" ; "));
}

fn main() -> Result<(), Error> {
    let curve = reference_curve();
    let generator = Point::affine(2, 14);
    let params = SchemeParams::new(curve, generator)?;
    let map = reference_alphabet();

    println!("curve: {curve}  (group order {})", curve.group_order()?);
    println!("generator E = {generator}, order N = {}", params.order());

    // Alice publishes (beta, E1) and keeps r
    let (public, private) = gen_keypair(params, 31, 14, 2)?;
    println!("\nAlice: beta = {}, r = {}", public.beta, private.r);
    println!("Alice: E1 = beta^r mod p = {}", public.e1);

    // Bob derives the shared secret from an ephemeral exponent
    let e = 21;
    let (a_value, shared) = derive_shared_encrypt(&public, e)?;
    println!("\nBob: e = {e}");
    println!("Bob: a = beta^e mod p = {a_value}");
    println!("Bob: k = E1^e mod p = {}", shared.k);

    let key = key_matrix(2, shared.k, params.order())?;
    println!("Bob: key matrix K = F_2^{} = {}", shared.k, key);
    println!("Bob: mask kE = {}", params.mask_point(shared.k)?);

    let message = "COVID-19";
    let points = map.encode(message)?;
    println!("\nplaintext {message:?} as points:");
    for (c, pt) in message.chars().zip(&points) {
        print!("  {c} -> {pt}");
    }
    println!();

    let plain_blocks = pack_blocks(&points, 2);
    let bundle = encrypt_message(&public, &map, e, message, 2)?;
    for (i, (plain, cipher)) in plain_blocks.iter().zip(&bundle.blocks).enumerate() {
        show_block(&format!("P{}", i + 1), plain);
        show_block(&format!("C{}", i + 1), cipher);
    }
    println!("ciphertext characters: {}", bundle.text(&map)?);
    println!(
        "Bob transmits (a, C) = ({}, {})",
        bundle.a_value,
        bundle.text(&map)?
    );

    // Alice's side
    let recovered_k = derive_shared_decrypt(bundle.a_value, &private, curve.p());
    println!("\nAlice: k = a^r mod p = {}", recovered_k.k);
    let dec = decryption_matrix(2, recovered_k.k, params.order())?;
    println!(
        "Alice: decryption matrix D = F_2^-{} = {}",
        recovered_k.k, dec
    );
    for (i, block) in bundle.blocks.iter().enumerate() {
        let plain = decrypt_block(&params, &dec, recovered_k.k, block)?;
        show_block(&format!("recovered P{}", i + 1), &plain);
    }
    let recovered = decrypt_message(&private, &params, &map, &bundle)?;
    println!("recovered plaintext: {recovered}");
    assert_eq!(recovered, message);
    Ok(())
}

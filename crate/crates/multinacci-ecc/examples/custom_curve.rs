//! The scheme on a curve whose group order differs from p. Because
//! integer matrices act on points modulo the order of the generator,
//! all scalar work is reduced mod N = order(E) instead of mod p; this
//! example shows the roundtrip holding on such a curve.
//!
//! Run with `cargo run --example custom_curve`.

use multinacci_ecc::codec::derive_alphabet;
use multinacci_ecc::curve::CurveParams;
use multinacci_ecc::scheme::{decrypt_message, encrypt_message, gen_keypair, SchemeParams};
use multinacci_ecc::Error;

fn main() -> Result<(), Error> {
    // y^2 = x^3 + 1 over F_11: 12 points, so N = 12 != p = 11
    let curve = CurveParams::new(11, 0, 1)?;
    let order = curve.group_order()?;
    println!("curve {curve}: group order {order} (p = {})", curve.p());

    // pick a generator of the full group so every alphabet point lies
    // in the subgroup it spans
    let generator = curve
        .enumerate_points()?
        .into_iter()
        .find(|&pt| curve.order_of_point(pt).unwrap() == order)
        .expect("the group is cyclic");
    let params = SchemeParams::new(curve, generator)?;
    println!(
        "generator E = {generator}, N = order(E) = {}",
        params.order()
    );

    // a 12-symbol alphabet: points sorted by (x, y), the identity last
    let charset: Vec<char> = "ABCDEFGHIJK,".chars().collect();
    let map = derive_alphabet(curve, &charset)?;
    println!("\nderived alphabet:");
    for &(c, pt) in map.pairs() {
        println!("  {c} -> {pt}");
    }

    let (public, private) = gen_keypair(params, 2, 5, 2)?;
    println!("\nbeta = 2, r = 5, E1 = {}", public.e1);

    for message in ["BEAD", "CABBAGE", "KID,HIKE"] {
        let bundle = encrypt_message(&public, &map, 7, message, 2)?;
        let cipher = bundle.text(&map)?;
        let recovered = decrypt_message(&private, &params, &map, &bundle)?;
        println!("{message:>10} -> {cipher:<10} -> {recovered}");
        assert_eq!(recovered, message);
    }

    println!("\nroundtrips hold with scalars reduced mod N rather than mod p");
    Ok(())
}

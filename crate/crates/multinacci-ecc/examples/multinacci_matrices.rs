//! Multinacci sequences and their matrices: terms in both index
//! directions, the direct construction of `F_n^k`, inversion by index
//! negation and the determinant sign.
//!
//! Run with `cargo run --example multinacci_matrices`.

use multinacci_ecc::multinacci::{det_sign, identity_matrix, mat_mul_mod, MultinacciParams};
use multinacci_ecc::Error;

fn main() -> Result<(), Error> {
    let fib = MultinacciParams::new(2, 47)?;
    let terms: Vec<u64> = (-9..=9).map(|k| fib.term(k)).collect();
    println!("order 2 (Fibonacci) terms t_-9..t_9 mod 47:");
    println!("  {terms:?}");

    let trib = MultinacciParams::new(3, 1_000_000)?;
    let terms: Vec<u64> = (0..=12).map(|k| trib.term(k)).collect();
    println!("order 3 (tribonacci) terms t_0..t_12:");
    println!("  {terms:?}");

    println!("\nkey matrix and its inverse by index negation (n=2, m=47):");
    let key = fib.power_matrix(8);
    let dec = key.inverse();
    println!("  F^8  = {key}");
    println!("  F^-8 = {dec}");
    let product = mat_mul_mod(key.entries(), dec.entries(), 47)?;
    println!("  F^8 * F^-8 = {:?}", product);
    assert_eq!(product, identity_matrix(2, 47));

    println!("\npowers compose by index addition (n=4, m=101):");
    let tetra = MultinacciParams::new(4, 101)?;
    let f3 = tetra.power_matrix(3);
    let f9 = tetra.power_matrix(9);
    let f12 = tetra.power_matrix(12);
    println!("  F^3      = {f3}");
    println!("  F^9      = {f9}");
    println!(
        "  F^3*F^9  = {}",
        multinacci_ecc::format_matrix(&mat_mul_mod(f3.entries(), f9.entries(), 101)?)
    );
    println!("  F^12     = {f12}");

    println!("\ndeterminant signs (-1)^(k(n-1)):");
    for n in 2..=5usize {
        let signs: Vec<i64> = (0..6).map(|k| det_sign(n, k)).collect();
        println!("  n={n}: k=0..5 -> {signs:?}");
    }

    // det = +/-1 is what makes every power invertible mod composite m too
    let composite = MultinacciParams::new(3, 60)?;
    let k = composite.power_matrix(7);
    let product = mat_mul_mod(k.entries(), k.inverse().entries(), 60)?;
    println!("\nmod 60 (composite): F^7 * F^-7 = {:?}", product);
    assert_eq!(product, identity_matrix(3, 60));
    Ok(())
}

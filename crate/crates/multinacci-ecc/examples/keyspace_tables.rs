//! Key-space analysis tables: exact orders of GL_n(F_p) for desk-scale
//! primes and the corresponding brute-force retrieval probabilities.
//!
//! Run with `cargo run --example keyspace_tables`.

use multinacci_ecc::keyspace::build_tables;
use multinacci_ecc::Error;

fn main() -> Result<(), Error> {
    let primes = [29u64, 31, 37, 41, 43, 47, 53, 59, 61, 67];
    let reports = build_tables(&primes, &[3, 4])?;

    println!("{:<8} {:<14} {:<14}", "p", "|GL_3(F_p)|", "|GL_4(F_p)|");
    for pair in reports.chunks(2) {
        println!(
            "{:<8} {:<14} {:<14}",
            pair[0].p,
            pair[0].gl_order_sci(5),
            pair[1].gl_order_sci(5)
        );
    }

    println!();
    println!("{:<8} {:<14} {:<14}", "p", "P(guess n=3)", "P(guess n=4)");
    for pair in reports.chunks(2) {
        println!(
            "{:<8} {:<14} {:<14}",
            pair[0].p,
            pair[0].probability_sci(3),
            pair[1].probability_sci(3)
        );
    }

    println!();
    let exact = &reports[10]; // p = 47, n = 3
    println!("exact |GL_3(F_47)| = {}", exact.gl_order);
    println!("exact probability  = 1/{}", exact.gl_order);
    println!("5-digit rendering  = {}", exact.probability_decimal());
    Ok(())
}

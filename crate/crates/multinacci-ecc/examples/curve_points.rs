//! Curve inspection: enumerate the group, check the Hasse window and
//! print the order of every point, plus the character alphabet attached
//! to the built-in curve.
//!
//! Run with `cargo run --example curve_points`.

use multinacci_ecc::codec::reference_alphabet;
use multinacci_ecc::curve::CurveParams;
use multinacci_ecc::Error;

fn main() -> Result<(), Error> {
    let curve = CurveParams::new(47, 3, 41)?;
    let points = curve.enumerate_points()?;
    println!("curve {curve}");
    println!("group order: {}", points.len());

    let p = curve.p() as f64;
    println!(
        "Hasse window: [{:.1}, {:.1}]",
        p + 1.0 - 2.0 * p.sqrt(),
        p + 1.0 + 2.0 * p.sqrt()
    );

    println!("\npoints and orders:");
    for chunk in points.chunks(6) {
        let row: Vec<String> = chunk
            .iter()
            .map(|&pt| format!("{pt}^{}", curve.order_of_point(pt).unwrap()))
            .collect();
        println!("  {}", row.join("  "));
    }

    // the built-in alphabet assigns one character per group point
    println!("\ncharacter alphabet:");
    let map = reference_alphabet();
    for chunk in map.pairs().chunks(6) {
        let row: Vec<String> = chunk.iter().map(|&(c, pt)| format!("{c} {pt}")).collect();
        println!("  {}", row.join("   "));
    }

    // a second, smaller curve for contrast
    let small = CurveParams::new(11, 0, 1)?;
    println!("\ncurve {small}: group order {}", small.group_order()?);
    for pt in small.enumerate_points()? {
        println!("  {pt} has order {}", small.order_of_point(pt)?);
    }
    Ok(())
}

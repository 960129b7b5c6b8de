//! Acceptance suite: one test per shipped guarantee, each ending with a
//! `[PASS]` line. Run `cargo test --test acceptance -- --nocapture` to
//! see every line; a failing criterion shows up as a failing test.
//!
//! Expected values are frozen here and checked against independent
//! oracles (schoolbook matrix products, Gauss-Jordan inversion, cofactor
//! determinants, brute-force scans) rather than against the code paths
//! they certify.

use multinacci_ecc::codec::{derive_alphabet, pack_blocks, reference_alphabet, reference_curve};
use multinacci_ecc::curve::{CurveParams, Point};
use multinacci_ecc::field::mod_inverse;
use multinacci_ecc::keyspace::{reciprocal_sci_rounded, reciprocal_sci_truncated, KeyspaceReport};
use multinacci_ecc::multinacci::{det_sign, MultinacciParams};
use multinacci_ecc::scheme::{
    decrypt_message, decryption_matrix, derive_shared_decrypt, derive_shared_encrypt,
    encrypt_message, gen_keypair, key_matrix, SchemeParams,
};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::collections::HashSet;

fn demo_scheme() -> SchemeParams {
    SchemeParams::new(reference_curve(), Point::affine(2, 14)).unwrap()
}

#[test]
fn criterion_1_golden_end_to_end() {
    let params = demo_scheme();
    let map = reference_alphabet();
    let (public, private) = gen_keypair(params, 31, 14, 2).unwrap();

    let bundle = encrypt_message(&public, &map, 21, "COVID-19", 2).unwrap();
    assert_eq!(bundle.a_value, 38);
    assert_eq!(bundle.text(&map).unwrap(), "KMNE!N6L");

    let recovered = decrypt_message(&private, &params, &map, &bundle).unwrap();
    assert_eq!(recovered, "COVID-19");

    println!("[PASS] criterion 1: COVID-19 encrypts to (a=38, KMNE!N6L) and decrypts back exactly");
}

#[test]
fn criterion_2_golden_intermediates() {
    let params = demo_scheme();
    let curve = params.curve();
    let map = reference_alphabet();
    let (public, private) = gen_keypair(params, 31, 14, 2).unwrap();
    assert_eq!(public.e1, 37);

    let (a_value, shared) = derive_shared_encrypt(&public, 21).unwrap();
    assert_eq!((a_value, shared.k), (38, 8));
    assert_eq!(derive_shared_decrypt(a_value, &private, 47).k, 8);

    let key = key_matrix(2, shared.k, params.order()).unwrap();
    assert_eq!(key.entries(), &vec![vec![34, 21], vec![21, 13]]);
    let dec = decryption_matrix(2, shared.k, params.order()).unwrap();
    assert_eq!(dec.entries(), &vec![vec![13, 26], vec![26, 34]]);

    let mask = params.mask_point(shared.k).unwrap();
    assert_eq!(mask, Point::affine(45, 11));
    assert_eq!(curve.negate(mask), Point::affine(45, 36));

    let bundle = encrypt_message(&public, &map, 21, "COVID-19", 2).unwrap();
    assert_eq!(
        bundle.blocks[0].rows(),
        &[
            vec![Point::affine(46, 15), Point::affine(16, 40)],
            vec![Point::affine(41, 18), Point::affine(40, 10)],
        ]
    );
    assert_eq!(
        bundle.blocks[1].rows(),
        &[
            vec![Point::affine(27, 21), Point::affine(16, 7)],
            vec![Point::affine(16, 40), Point::affine(20, 39)],
        ]
    );

    println!("[PASS] criterion 2: E1, k, K, D, kE, -kE, C1 and C2 all match the worked values");
}

/// The 46 affine points of `y^2 = x^3 + 3x + 41` over `F_47`.
const REFERENCE_POINTS: [(u64, u64); 46] = [
    (2, 14),
    (2, 33),
    (10, 15),
    (10, 32),
    (11, 18),
    (11, 29),
    (13, 16),
    (13, 31),
    (14, 17),
    (14, 30),
    (16, 7),
    (16, 40),
    (19, 1),
    (19, 46),
    (20, 8),
    (20, 39),
    (21, 23),
    (21, 24),
    (24, 5),
    (24, 42),
    (27, 21),
    (27, 26),
    (28, 9),
    (28, 38),
    (30, 23),
    (30, 24),
    (33, 13),
    (33, 34),
    (34, 22),
    (34, 25),
    (35, 4),
    (35, 43),
    (38, 15),
    (38, 32),
    (40, 10),
    (40, 37),
    (41, 18),
    (41, 29),
    (42, 18),
    (42, 29),
    (43, 23),
    (43, 24),
    (45, 11),
    (45, 36),
    (46, 15),
    (46, 32),
];

#[test]
fn criterion_3_curve_enumeration() {
    let curve = reference_curve();
    let points = curve.enumerate_points().unwrap();
    assert_eq!(points.len(), 47);

    let expected: HashSet<Point> = REFERENCE_POINTS
        .iter()
        .map(|&(x, y)| Point::affine(x, y))
        .chain(std::iter::once(Point::Infinity))
        .collect();
    let actual: HashSet<Point> = points.iter().copied().collect();
    assert_eq!(actual, expected);

    println!("[PASS] criterion 3: enumeration reproduces the 46-entry point table plus O");
}

/// Printed key-space cells (5 significant digits) for n = 3 and n = 4.
const TABLE1: [(u64, &str, &str); 10] = [
    (29, "1.3989e13", "2.4131e23"),
    (31, "2.5559e13", "7.0320e23"),
    (37, "1.2635e14", "1.1995e25"),
    (41, "3.1920e14", "6.2166e25"),
    (43, "4.9063e14", "1.3336e26"),
    (47, "1.0948e15", "5.5465e26"),
    (53, "3.2363e15", "3.8017e27"),
    (59, "8.5136e15", "2.1187e28"),
    (61, "1.1499e16", "3.6139e28"),
    (67, "2.6794e16", "1.6239e29"),
];

/// Printed retrieval-probability cells (3 significant digits).
const TABLE2: [(u64, &str, &str); 10] = [
    (29, "7.15e-14", "4.14e-24"),
    (31, "3.91e-14", "1.42e-24"),
    (37, "7.91e-15", "8.33e-26"),
    (41, "3.13e-15", "1.60e-26"),
    (43, "2.03e-15", "7.50e-27"),
    (47, "9.13e-16", "1.80e-27"),
    (53, "3.09e-16", "2.63e-28"),
    (59, "1.17e-16", "4.72e-29"),
    (61, "8.70e-17", "2.77e-29"),
    (67, "3.73e-17", "6.16e-30"),
];

#[test]
fn criterion_4_table_reproduction() {
    for (row, &(p, n3, n4)) in TABLE1.iter().enumerate() {
        for (n, printed) in [(3usize, n3), (4, n4)] {
            let report = KeyspaceReport::new(p, n).unwrap();
            // the published 5-digit figures are truncations of the exact value
            assert_eq!(
                report.gl_order_sci(5),
                printed,
                "table 1 row {row} p={p} n={n}"
            );
        }
    }
    for (row, &(p, n3, n4)) in TABLE2.iter().enumerate() {
        for (n, printed) in [(3usize, n3), (4, n4)] {
            let report = KeyspaceReport::new(p, n).unwrap();
            // the published 3-digit probabilities mix truncation and
            // rounding, so accept either rendering; both agree with the
            // exact value to within one unit in the last printed digit
            let truncated = reciprocal_sci_truncated(&report.gl_order, 3);
            let rounded = reciprocal_sci_rounded(&report.gl_order, 3);
            assert!(
                printed == truncated || printed == rounded,
                "table 2 row {row} p={p} n={n}: printed {printed}, computed {truncated}/{rounded}"
            );
        }
    }
    println!(
        "[PASS] criterion 4: all 40 key-space and probability cells match at printed precision"
    );
}

// ---- independent matrix oracles (no calls into the multinacci module's
// closed-form path) ----

fn oracle_identity(n: usize, m: u64) -> Vec<Vec<u64>> {
    (0..n)
        .map(|i| (0..n).map(|j| u64::from(i == j) % m).collect())
        .collect()
}

fn oracle_initial(n: usize, m: u64) -> Vec<Vec<u64>> {
    let mut f = vec![vec![0u64; n]; n];
    for v in f[0].iter_mut() {
        *v = 1 % m;
    }
    for i in 1..n {
        f[i][i - 1] = 1 % m;
    }
    f
}

fn oracle_mat_mul(a: &[Vec<u64>], b: &[Vec<u64>], m: u64) -> Vec<Vec<u64>> {
    let n = a.len();
    let mut out = vec![vec![0u64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut acc: u128 = 0;
            for (l, row) in b.iter().enumerate() {
                acc += a[i][l] as u128 * row[j] as u128;
            }
            out[i][j] = (acc % m as u128) as u64;
        }
    }
    out
}

/// Gauss-Jordan inversion over F_m; every modulus in this suite is prime.
fn oracle_mat_inverse(mat: &[Vec<u64>], m: u64) -> Vec<Vec<u64>> {
    let n = mat.len();
    let mut aug: Vec<Vec<u64>> = mat
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<u64> = row.iter().map(|&v| v % m).collect();
            r.extend((0..n).map(|j| u64::from(i == j)));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| aug[r][col] != 0)
            .expect("matrix is invertible");
        aug.swap(col, pivot);
        let inv = mod_inverse(aug[col][col] as i64, m).unwrap();
        for v in aug[col].iter_mut() {
            *v = *v * inv % m;
        }
        let pivot_row = aug[col].clone();
        for (r, row) in aug.iter_mut().enumerate() {
            if r == col || row[col] == 0 {
                continue;
            }
            let factor = row[col];
            for (c, v) in row.iter_mut().enumerate() {
                let sub = factor * pivot_row[c] % m;
                *v = (*v + m - sub) % m;
            }
        }
    }
    aug.into_iter().map(|row| row[n..].to_vec()).collect()
}

fn oracle_power(n: usize, k: i64, m: u64) -> Vec<Vec<u64>> {
    let base = if k >= 0 {
        oracle_initial(n, m)
    } else {
        oracle_mat_inverse(&oracle_initial(n, m), m)
    };
    let mut acc = oracle_identity(n, m);
    for _ in 0..k.unsigned_abs() {
        acc = oracle_mat_mul(&acc, &base, m);
    }
    acc
}

/// Cofactor-expansion determinant over signed 128-bit integers; entries
/// stay below 2^17 and n below 6, so nothing overflows.
fn oracle_det(mat: &[Vec<u64>]) -> i128 {
    let n = mat.len();
    if n == 1 {
        return mat[0][0] as i128;
    }
    let mut det = 0i128;
    for j in 0..n {
        let minor: Vec<Vec<u64>> = mat[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect();
        let term = mat[0][j] as i128 * oracle_det(&minor);
        det += if j % 2 == 0 { term } else { -term };
    }
    det
}

#[test]
fn criterion_5_multinacci_identity_suite() {
    let moduli = [5u64, 47, 101, 65_537];
    for n in 2..=5usize {
        for &m in &moduli {
            let params = MultinacciParams::new(n, m).unwrap();
            let identity = oracle_identity(n, m);

            let powers: Vec<Vec<Vec<u64>>> = (-20..=20i64)
                .map(|k| params.power_matrix(k).into_entries())
                .collect();
            let at = |k: i64| &powers[(k + 20) as usize];

            for j in -20..=20i64 {
                for k in -20..=20i64 {
                    if (j + k).abs() <= 20 {
                        assert_eq!(
                            &oracle_mat_mul(at(j), at(k), m),
                            at(j + k),
                            "F^{j} * F^{k} != F^{} (n={n}, m={m})",
                            j + k
                        );
                    }
                }
            }
            for k in -20..=20i64 {
                assert_eq!(
                    oracle_mat_mul(at(k), at(-k), m),
                    identity,
                    "F^{k} * F^-{k} != I (n={n}, m={m})"
                );

                let expected_det = match det_sign(n, k) {
                    1 => 1 % m as i128,
                    _ => (m - 1) as i128,
                };
                assert_eq!(
                    oracle_det(at(k)).rem_euclid(m as i128),
                    expected_det,
                    "det(F^{k}) (n={n}, m={m})"
                );
            }
            for k in -10..=10i64 {
                assert_eq!(
                    at(k),
                    &oracle_power(n, k, m),
                    "closed form vs repeated multiplication (n={n}, k={k}, m={m})"
                );
            }
        }
    }
    println!(
        "[PASS] criterion 5: multinacci identities hold for n in 2..=5, k,j in -20..=20, four moduli"
    );
}

#[test]
fn criterion_6_group_law_suite() {
    let mut curves_checked = 0u32;

    for p in [3u64, 5, 7, 11, 13] {
        for a in 0..p {
            for b in 0..p {
                let Ok(curve) = CurveParams::new(p, a, b) else {
                    continue;
                };
                curves_checked += 1;
                let points = curve.enumerate_points().unwrap();
                let point_set: HashSet<Point> = points.iter().copied().collect();

                // Hasse: |#E - (p + 1)| <= 2 sqrt(p)
                let count = points.len() as i64;
                let hasse = (count - (p as i64 + 1)).pow(2);
                assert!(hasse <= 4 * p as i64, "Hasse fails on {curve}");

                for &x in &points {
                    assert_eq!(curve.add(x, Point::Infinity).unwrap(), x);
                    assert_eq!(curve.add(x, curve.negate(x)).unwrap(), Point::Infinity);
                    for &y in &points {
                        let sum = curve.add(x, y).unwrap();
                        assert!(point_set.contains(&sum), "closure fails on {curve}");
                        assert_eq!(sum, curve.add(y, x).unwrap(), "commutativity on {curve}");
                    }
                }

                if p <= 7 {
                    for &x in &points {
                        for &y in &points {
                            for &z in &points {
                                let left = curve.add(curve.add(x, y).unwrap(), z).unwrap();
                                let right = curve.add(x, curve.add(y, z).unwrap()).unwrap();
                                assert_eq!(left, right, "associativity on {curve}");
                            }
                        }
                    }
                }
            }
        }
    }
    assert!(curves_checked > 100);

    // randomized associativity on the reference curve
    let curve = reference_curve();
    let points = curve.enumerate_points().unwrap();
    let mut rng = StdRng::seed_from_u64(0xECC);
    for _ in 0..10_000 {
        let x = points[rng.gen_range(0..points.len())];
        let y = points[rng.gen_range(0..points.len())];
        let z = points[rng.gen_range(0..points.len())];
        let left = curve.add(curve.add(x, y).unwrap(), z).unwrap();
        let right = curve.add(x, curve.add(y, z).unwrap()).unwrap();
        assert_eq!(left, right);
    }

    // scalar multiplication against the iterated-addition oracle
    let small = CurveParams::new(13, 2, 3).unwrap();
    for (curve, start) in [
        (curve, Point::affine(2, 14)),
        (small, small.enumerate_points().unwrap()[0]),
    ] {
        let mut acc = Point::Infinity;
        for m in 0..=100u64 {
            assert_eq!(curve.scalar_mul(m, start).unwrap(), acc, "m={m} on {curve}");
            acc = curve.add(acc, start).unwrap();
        }
    }

    println!(
        "[PASS] criterion 6: group laws verified on {curves_checked} curves \
         (exhaustive p<=13, associativity p<=7 plus 10000 random triples at p=47)"
    );
}

#[test]
fn criterion_7_property_roundtrip() {
    let params = demo_scheme();
    let map = reference_alphabet();
    let symbols: Vec<char> = map.pairs().iter().map(|&(c, _)| c).collect();
    let mut rng = StdRng::seed_from_u64(0xC0FFEE);

    for trial in 0..1000 {
        let n = if trial % 2 == 0 { 2 } else { 3 };
        let r = rng.gen_range(2..=45);
        let e = rng.gen_range(2..=45);
        // lengths near 0 and away from block multiples exercise padding
        let len = rng.gen_range(0..40);
        let message: String = (0..len)
            .map(|_| symbols[rng.gen_range(0..symbols.len())])
            .collect();

        let (public, private) = gen_keypair(params, 31, r, n).unwrap();
        let bundle = encrypt_message(&public, &map, e, &message, n).unwrap();
        let recovered = decrypt_message(&private, &params, &map, &bundle).unwrap();
        assert_eq!(
            recovered, message,
            "trial {trial} failed (n={n}, r={r}, e={e})"
        );
    }

    println!("[PASS] criterion 7: 1000 random (message, r, e) roundtrips with n in {{2,3}}");
}

#[test]
fn criterion_8_non_anomalous_curve() {
    // y^2 = x^3 + 1 over F_11 has 12 points, so the group order differs
    // from p and reducing scalars mod p would corrupt decryption; the
    // scheme reduces mod N = order(E) instead.
    let curve = CurveParams::new(11, 0, 1).unwrap();
    let group_order = curve.group_order().unwrap();
    assert_eq!(group_order, 12);
    assert_ne!(group_order, curve.p());

    let generator = Point::affine(7, 5);
    assert_eq!(curve.order_of_point(generator).unwrap(), 12);
    let params = SchemeParams::new(curve, generator).unwrap();
    assert_eq!(params.order(), 12);

    let charset: Vec<char> = "ABCDEFGHIJK,".chars().collect();
    let map = derive_alphabet(curve, &charset).unwrap();

    let mut rng = StdRng::seed_from_u64(0xBEEF);
    for trial in 0..200 {
        let n = if trial % 2 == 0 { 2 } else { 3 };
        let r = rng.gen_range(2..=9);
        let e = rng.gen_range(2..=9);
        let len = rng.gen_range(0..30);
        let message: String = (0..len)
            .map(|_| charset[rng.gen_range(0..charset.len())])
            .collect();

        let (public, private) = gen_keypair(params, 2, r, n).unwrap();
        let bundle = encrypt_message(&public, &map, e, &message, n).unwrap();
        let recovered = decrypt_message(&private, &params, &map, &bundle).unwrap();
        assert_eq!(
            recovered, message,
            "trial {trial} failed (n={n}, r={r}, e={e})"
        );
    }

    println!("[PASS] criterion 8: 200 roundtrips on E_F11(0,1) with N = 12 != p = 11");
}

#[test]
fn reference_alphabet_is_consistent_with_enumeration() {
    // supporting check for criteria 1-3: the built-in table is exactly
    // the curve's point set
    let map = reference_alphabet();
    let mut table: Vec<Point> = map.pairs().iter().map(|&(_, pt)| pt).collect();
    table.sort();
    assert_eq!(table, reference_curve().enumerate_points().unwrap());

    let blocks = pack_blocks(&map.encode("COVID-19").unwrap(), 2);
    assert_eq!(blocks.len(), 2);
}

//! Mapping between message symbols and curve points, plus the packing of
//! point streams into the square blocks the cipher operates on.
//!
//! An [`AlphabetMap`] is a bijection between characters and the full
//! point set of a small curve, with exactly one character reserved for
//! the identity `O`. That character doubles as the padding symbol, so
//! serialized ciphertexts carry the original message length to make
//! padding removable.

use std::collections::HashMap;
use std::fmt;

use crate::curve::{CurveParams, Point};
use crate::error::Error;

/// The built-in 47-symbol table on the curve `y^2 = x^3 + 3x + 41` over
/// `F_47`: the letters A-Z, digits 0-9 and ten punctuation marks, with
/// `,` assigned to the identity. The points are the successive multiples
/// of the generator `(2,14)`, which `tests` verify.
const REFERENCE_TABLE: [(char, Point); 47] = [
    ('A', Point::Affine { x: 2, y: 14 }),
    ('B', Point::Affine { x: 28, y: 9 }),
    ('C', Point::Affine { x: 21, y: 24 }),
    ('D', Point::Affine { x: 33, y: 34 }),
    ('E', Point::Affine { x: 40, y: 10 }),
    ('F', Point::Affine { x: 11, y: 29 }),
    ('G', Point::Affine { x: 42, y: 29 }),
    ('H', Point::Affine { x: 45, y: 11 }),
    ('I', Point::Affine { x: 27, y: 26 }),
    ('J', Point::Affine { x: 35, y: 4 }),
    ('K', Point::Affine { x: 46, y: 15 }),
    ('L', Point::Affine { x: 20, y: 39 }),
    ('M', Point::Affine { x: 41, y: 18 }),
    ('N', Point::Affine { x: 16, y: 40 }),
    ('O', Point::Affine { x: 43, y: 24 }),
    ('P', Point::Affine { x: 10, y: 15 }),
    ('Q', Point::Affine { x: 24, y: 42 }),
    ('R', Point::Affine { x: 30, y: 23 }),
    ('S', Point::Affine { x: 19, y: 46 }),
    ('T', Point::Affine { x: 38, y: 15 }),
    ('U', Point::Affine { x: 14, y: 17 }),
    ('V', Point::Affine { x: 34, y: 25 }),
    ('W', Point::Affine { x: 13, y: 16 }),
    ('X', Point::Affine { x: 13, y: 31 }),
    ('Y', Point::Affine { x: 34, y: 22 }),
    ('Z', Point::Affine { x: 14, y: 30 }),
    ('0', Point::Affine { x: 38, y: 32 }),
    ('1', Point::Affine { x: 19, y: 1 }),
    ('2', Point::Affine { x: 30, y: 24 }),
    ('3', Point::Affine { x: 24, y: 5 }),
    ('4', Point::Affine { x: 10, y: 32 }),
    ('5', Point::Affine { x: 43, y: 23 }),
    ('6', Point::Affine { x: 16, y: 7 }),
    ('7', Point::Affine { x: 41, y: 29 }),
    ('8', Point::Affine { x: 20, y: 8 }),
    ('9', Point::Affine { x: 46, y: 32 }),
    ('~', Point::Affine { x: 35, y: 43 }),
    ('!', Point::Affine { x: 27, y: 21 }),
    ('@', Point::Affine { x: 45, y: 36 }),
    ('#', Point::Affine { x: 42, y: 18 }),
    ('$', Point::Affine { x: 11, y: 18 }),
    ('%', Point::Affine { x: 40, y: 37 }),
    ('^', Point::Affine { x: 33, y: 13 }),
    ('&', Point::Affine { x: 21, y: 23 }),
    ('*', Point::Affine { x: 28, y: 38 }),
    ('-', Point::Affine { x: 2, y: 33 }),
    (',', Point::Infinity),
];

/// The curve the built-in alphabet lives on.
pub fn reference_curve() -> CurveParams {
    CurveParams::new(47, 3, 41).expect("reference curve is valid")
}

/// The built-in character/point table (see [`REFERENCE_TABLE`]).
pub fn reference_alphabet() -> AlphabetMap {
    AlphabetMap::new(reference_curve(), REFERENCE_TABLE.to_vec())
        .expect("reference table is a valid alphabet")
}

/// A bijection between characters and the complete point set of a curve.
#[derive(Clone, Debug)]
pub struct AlphabetMap {
    curve: CurveParams,
    pairs: Vec<(char, Point)>,
    to_point: HashMap<char, Point>,
    to_char: HashMap<Point, char>,
}

impl AlphabetMap {
    /// Validates that `pairs` is a bijection covering the whole group:
    /// distinct characters, distinct on-curve points, exactly one
    /// character on `O`, and as many pairs as the group has points.
    pub fn new(curve: CurveParams, pairs: Vec<(char, Point)>) -> Result<Self, Error> {
        let group_order = curve.group_order()? as usize;
        if pairs.len() != group_order {
            return Err(Error::SizeMismatch {
                charset: pairs.len(),
                points: group_order,
            });
        }
        let mut to_point = HashMap::with_capacity(pairs.len());
        let mut to_char = HashMap::with_capacity(pairs.len());
        let mut infinity_count = 0usize;
        for &(c, pt) in &pairs {
            if !curve.is_on_curve(pt) {
                return Err(Error::PointNotOnCurve { point: pt });
            }
            if pt.is_infinity() {
                infinity_count += 1;
            }
            if to_point.insert(c, pt).is_some() {
                return Err(Error::parse(format!(
                    "duplicate character {c:?} in alphabet"
                )));
            }
            if to_char.insert(pt, c).is_some() {
                return Err(Error::parse(format!("duplicate point {pt} in alphabet")));
            }
        }
        if infinity_count != 1 {
            return Err(Error::parse(format!(
                "alphabet must map exactly one character to O, found {infinity_count}"
            )));
        }
        Ok(AlphabetMap {
            curve,
            pairs,
            to_point,
            to_char,
        })
    }

    pub fn curve(&self) -> CurveParams {
        self.curve
    }

    pub fn pairs(&self) -> &[(char, Point)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// The character assigned to `O`; it is also the padding symbol.
    pub fn padding_char(&self) -> char {
        self.to_char[&Point::Infinity]
    }

    pub fn point_for(&self, c: char) -> Result<Point, Error> {
        self.to_point
            .get(&c)
            .copied()
            .ok_or(Error::UnknownSymbol(c))
    }

    pub fn char_for(&self, pt: Point) -> Result<char, Error> {
        self.to_char
            .get(&pt)
            .copied()
            .ok_or(Error::UnknownPoint(pt))
    }

    /// Pointwise character-to-point translation.
    pub fn encode(&self, text: &str) -> Result<Vec<Point>, Error> {
        text.chars().map(|c| self.point_for(c)).collect()
    }

    /// Pointwise point-to-character translation; inverse of [`encode`](Self::encode).
    pub fn decode(&self, points: &[Point]) -> Result<String, Error> {
        points.iter().map(|&pt| self.char_for(pt)).collect()
    }

    /// One `<char> <x> <y>` or `<char> O` line per entry.
    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        for &(c, pt) in &self.pairs {
            match pt {
                Point::Infinity => out.push_str(&format!("{c} O\n")),
                Point::Affine { x, y } => out.push_str(&format!("{c} {x} {y}\n")),
            }
        }
        out
    }

    /// Parses the [`to_file_string`](Self::to_file_string) format.
    pub fn from_file_string(curve: CurveParams, s: &str) -> Result<Self, Error> {
        let mut pairs = Vec::new();
        for (lineno, line) in s.lines().enumerate() {
            let line = line.trim_end();
            if line.is_empty() {
                continue;
            }
            let mut fields = line.split(' ');
            let c = fields
                .next()
                .and_then(|f| {
                    let mut chars = f.chars();
                    match (chars.next(), chars.next()) {
                        (Some(c), None) => Some(c),
                        _ => None,
                    }
                })
                .ok_or_else(|| {
                    Error::parse(format!(
                        "alphabet line {}: expected a single character",
                        lineno + 1
                    ))
                })?;
            let rest: Vec<&str> = fields.collect();
            let pt = match rest.as_slice() {
                ["O"] => Point::Infinity,
                [x, y] => Point::affine(
                    x.parse()
                        .map_err(|e| Error::parse(format!("alphabet line {}: {e}", lineno + 1)))?,
                    y.parse()
                        .map_err(|e| Error::parse(format!("alphabet line {}: {e}", lineno + 1)))?,
                ),
                _ => {
                    return Err(Error::parse(format!(
                        "alphabet line {}: expected `<char> <x> <y>` or `<char> O`",
                        lineno + 1
                    )))
                }
            };
            pairs.push((c, pt));
        }
        AlphabetMap::new(curve, pairs)
    }
}

/// Deterministic alphabet for an arbitrary small curve: points sorted
/// ascending by `(x, y)` with `O` last, zipped with `charset` in order.
/// The final character therefore becomes the padding symbol.
pub fn derive_alphabet(curve: CurveParams, charset: &[char]) -> Result<AlphabetMap, Error> {
    let points = curve.enumerate_points()?;
    if charset.len() != points.len() {
        return Err(Error::SizeMismatch {
            charset: charset.len(),
            points: points.len(),
        });
    }
    let pairs = charset.iter().copied().zip(points).collect();
    AlphabetMap::new(curve, pairs)
}

/// An `n x n` matrix of curve points; the cipher's block type.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointMatrix {
    entries: Vec<Vec<Point>>,
}

impl PointMatrix {
    /// Wraps a square row-major grid of points.
    pub fn new(entries: Vec<Vec<Point>>) -> Result<Self, Error> {
        let n = entries.len();
        if n == 0 || entries.iter().any(|row| row.len() != n) {
            return Err(Error::DimensionMismatch {
                left_rows: n,
                left_cols: entries.first().map_or(0, Vec::len),
                right_rows: n,
                right_cols: n,
            });
        }
        Ok(PointMatrix { entries })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Point) -> Self {
        PointMatrix {
            entries: (0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> Point {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<Point>] {
        &self.entries
    }

    /// Entries read column by column, the serialization and packing order.
    pub fn column_major(&self) -> Vec<Point> {
        let n = self.n();
        let mut out = Vec::with_capacity(n * n);
        for j in 0..n {
            for i in 0..n {
                out.push(self.entries[i][j]);
            }
        }
        out
    }

    /// Adds `delta` to every entry.
    pub fn translate(&self, curve: &CurveParams, delta: Point) -> Result<PointMatrix, Error> {
        let mut entries = Vec::with_capacity(self.n());
        for row in &self.entries {
            let mut out_row = Vec::with_capacity(self.n());
            for &pt in row {
                out_row.push(curve.add(pt, delta)?);
            }
            entries.push(out_row);
        }
        Ok(PointMatrix { entries })
    }

    /// Entrywise sum of two blocks.
    pub fn zip_add(&self, curve: &CurveParams, other: &PointMatrix) -> Result<PointMatrix, Error> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch {
                left_rows: self.n(),
                left_cols: self.n(),
                right_rows: other.n(),
                right_cols: other.n(),
            });
        }
        let n = self.n();
        let mut entries = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                row.push(curve.add(self.entries[i][j], other.entries[i][j])?);
            }
            entries.push(row);
        }
        Ok(PointMatrix { entries })
    }
}

impl fmt::Display for PointMatrix {
    /// Column-major, `;`-separated, the block line format of ciphertext files.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.column_major().iter().map(Point::to_string).collect();
        write!(f, "{}", cells.join(";"))
    }
}

/// Pads `points` with `O` to a multiple of `n^2`, then fills each block
/// column by column in reading order. An empty list packs to zero blocks.
pub fn pack_blocks(points: &[Point], n: usize) -> Vec<PointMatrix> {
    let block = n * n;
    let mut padded = points.to_vec();
    while padded.len() % block != 0 {
        padded.push(Point::Infinity);
    }
    padded
        .chunks(block)
        .map(|chunk| PointMatrix::from_fn(n, |i, j| chunk[j * n + i]))
        .collect()
}

/// Column-major read of `blocks`, truncated to `original_length`.
pub fn unpack_blocks(blocks: &[PointMatrix], original_length: usize) -> Result<Vec<Point>, Error> {
    let available: usize = blocks.iter().map(|b| b.n() * b.n()).sum();
    if original_length > available {
        return Err(Error::LengthOverflow {
            requested: original_length,
            available,
        });
    }
    let mut out: Vec<Point> = blocks.iter().flat_map(PointMatrix::column_major).collect();
    out.truncate(original_length);
    Ok(out)
}

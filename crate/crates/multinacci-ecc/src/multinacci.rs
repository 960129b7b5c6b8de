//! Generalized Fibonacci (multinacci) sequences and the key matrices
//! built from them.
//!
//! The order-`n` multinacci sequence sums its previous `n` terms,
//! starting from `t_0 = ... = t_{n-2} = 0`, `t_{n-1} = 1`; rearranging
//! the recurrence extends it to negative indices. The matrix `F_n^k` is
//! assembled entry-by-entry from sequence terms instead of by repeated
//! multiplication, and its inverse is simply `F_n^{-k}`: the determinant
//! is `(-1)^{k(n-1)}`, so the matrix is invertible modulo any `m >= 2`.
//!
//! Entry layout of `F_n^k` (rows `i`, columns `j`, both 0-based):
//!
//! - column 0 holds `t_{k+n-1-i}`,
//! - column `j >= 1` holds the run sum `t_{k+n-2-i} + ... + t_{k+j-1-i}`
//!   (that is, `n-j` consecutive terms ending at `t_{k+j-1-i}`),
//!
//! so the last column holds `t_{k+n-2-i}` alone. Everything is reduced
//! modulo `m` as it is produced, including the signed values that appear
//! at negative indices.

use std::fmt;

use crate::error::Error;

/// Plain row-major integer matrix with entries already reduced.
pub type IntMatrix = Vec<Vec<u64>>;

/// Sequence order `n >= 2` (also the matrix dimension) and reduction
/// modulus `m >= 2`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct MultinacciParams {
    n: usize,
    m: u64,
}

impl MultinacciParams {
    pub fn new(n: usize, m: u64) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::RangeError {
                what: "sequence order n",
                value: n as u64,
                min: 2,
                max: u64::MAX,
            });
        }
        if m < 2 {
            return Err(Error::RangeError {
                what: "modulus m",
                value: m,
                min: 2,
                max: u64::MAX,
            });
        }
        Ok(MultinacciParams { n, m })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    /// The `k`-th sequence term mod `m`, for `k` of either sign.
    ///
    /// Computed iteratively with a sliding window of `n` residues:
    /// forward via `t_{k+n} = t_k + ... + t_{k+n-1}`, backward via the
    /// rearranged form `t_k = t_{k+n} - (t_{k+1} + ... + t_{k+n-1})`.
    pub fn term(&self, k: i64) -> u64 {
        let terms = self.terms_range(k, k);
        terms[0]
    }

    /// Terms `t_lo ..= t_hi` mod `m` in one pass.
    pub fn terms_range(&self, lo: i64, hi: i64) -> Vec<u64> {
        assert!(lo <= hi, "empty term range");
        let n = self.n as i64;
        let m = self.m;
        let from = lo.min(0);
        let to = hi.max(n - 1);
        let len = (to - from + 1) as usize;
        let idx = |i: i64| (i - from) as usize;

        let mut t = vec![0u64; len];
        t[idx(n - 1)] = 1 % m;
        for i in n..=to {
            let mut sum = 0u64;
            for j in (i - n)..i {
                sum = (sum + t[idx(j)]) % m;
            }
            t[idx(i)] = sum;
        }
        for i in (from..0).rev() {
            let mut tail = 0u64;
            for j in (i + 1)..(i + n) {
                tail = (tail + t[idx(j)]) % m;
            }
            t[idx(i)] = (t[idx(i + n)] + m - tail) % m;
        }
        t[idx(lo)..=idx(hi)].to_vec()
    }

    /// Builds `F_n^k` directly from sequence terms; no matrix
    /// multiplication or inversion is involved. `k = 0` yields the
    /// identity and negative `k` the inverse of `F_n^{|k|}`.
    pub fn power_matrix(&self, k: i64) -> MultinacciMatrix {
        let n = self.n as i64;
        let terms = self.terms_range(k - n + 1, k + n - 1);
        let at = |i: i64| terms[(i - (k - n + 1)) as usize];

        let mut entries = vec![vec![0u64; self.n]; self.n];
        for (i, row) in entries.iter_mut().enumerate() {
            let i = i as i64;
            row[0] = at(k + n - 1 - i);
            for j in 1..n {
                let mut sum = 0u64;
                for u in 1..=(n - j) {
                    sum = (sum + at(k + n - 1 - i - u)) % self.m;
                }
                row[j as usize] = sum;
            }
        }
        MultinacciMatrix {
            params: *self,
            k,
            entries,
        }
    }

    /// The initial matrix `F_n^1`: all-ones first row, ones on the
    /// subdiagonal.
    pub fn initial_matrix(&self) -> MultinacciMatrix {
        self.power_matrix(1)
    }
}

/// The key matrix `F_n^k` reduced mod `m`, tagged with its power.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultinacciMatrix {
    params: MultinacciParams,
    k: i64,
    entries: IntMatrix,
}

impl MultinacciMatrix {
    pub fn params(&self) -> MultinacciParams {
        self.params
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn entries(&self) -> &IntMatrix {
        &self.entries
    }

    pub fn into_entries(self) -> IntMatrix {
        self.entries
    }

    /// `F_n^{-k}`, the modular inverse of this matrix.
    pub fn inverse(&self) -> MultinacciMatrix {
        self.params.power_matrix(-self.k)
    }
}

impl fmt::Display for MultinacciMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_matrix(&self.entries))
    }
}

/// `(-1)^{k(n-1)}`, the determinant of `F_n^k` over the integers.
pub fn det_sign(n: usize, k: i64) -> i64 {
    if (n - 1) % 2 == 0 || k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `n x n` identity with entries reduced mod `m`.
pub fn identity_matrix(n: usize, m: u64) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1 % m } else { 0 }).collect())
        .collect()
}

/// Standard matrix product with entries reduced mod `m`.
pub fn mat_mul_mod(a: &[Vec<u64>], b: &[Vec<u64>], m: u64) -> Result<IntMatrix, Error> {
    let left_rows = a.len();
    let left_cols = a.first().map_or(0, Vec::len);
    let right_rows = b.len();
    let right_cols = b.first().map_or(0, Vec::len);
    let ragged = a.iter().any(|r| r.len() != left_cols) || b.iter().any(|r| r.len() != right_cols);
    if ragged || left_cols != right_rows || left_cols == 0 {
        return Err(Error::DimensionMismatch {
            left_rows,
            left_cols,
            right_rows,
            right_cols,
        });
    }
    let mut out = vec![vec![0u64; right_cols]; left_rows];
    for (i, out_row) in out.iter_mut().enumerate() {
        for (j, out_entry) in out_row.iter_mut().enumerate() {
            let mut acc: u128 = 0;
            for l in 0..left_cols {
                acc = (acc + a[i][l] as u128 * b[l][j] as u128) % m as u128;
            }
            *out_entry = acc as u64;
        }
    }
    Ok(out)
}

/// Renders rows separated by `;` and entries by `,`, e.g. `34,21;21,13`.
pub fn format_matrix(m: &[Vec<u64>]) -> String {
    m.iter()
        .map(|row| {
            row.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join(";")
}

/// Parses the `format_matrix` form.
pub fn parse_matrix(s: &str) -> Result<IntMatrix, Error> {
    let mut rows = Vec::new();
    for row in s.trim().split(';') {
        let mut entries = Vec::new();
        for v in row.split(',') {
            entries.push(
                v.trim()
                    .parse::<u64>()
                    .map_err(|e| Error::parse(format!("bad matrix entry {v:?}: {e}")))?,
            );
        }
        rows.push(entries);
    }
    if rows.iter().any(|r| r.len() != rows[0].len()) {
        return Err(Error::parse("ragged matrix rows".to_string()));
    }
    Ok(rows)
}

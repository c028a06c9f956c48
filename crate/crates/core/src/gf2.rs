//! Exact linear algebra over GF(2).
//!
//! Rows are packed into 64-bit words; the public contract is exact arithmetic
//! only. Solution enumeration is canonical: vectors are ordered
//! lexicographically by their entries, index 0 first.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn from_indices(len: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in ones {
            v.set(i, true);
        }
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        if value {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Leading one, if any.
    pub fn first_one(&self) -> Option<usize> {
        for (w, word) in self.words.iter().enumerate() {
            if *word != 0 {
                return Some(w * 64 + word.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn dot(&self, other: &BitVec) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }
}

/// Entrywise order: index 0 is the most significant position.
impl Ord for BitVec {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.len, other.len);
        for i in 0..self.len {
            match (self.get(i), other.get(i)) {
                (false, true) => return Ordering::Less,
                (true, false) => return Ordering::Greater,
                _ => {}
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for BitVec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Gf2Error {
    DimensionMismatch { expected: usize, got: usize },
    Inconsistent,
    CapExceeded { needed: u64, cap: u64 },
    Parse { line: usize, message: String },
}

impl fmt::Display for Gf2Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gf2Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Gf2Error::Inconsistent => f.write_str("inconsistent system"),
            Gf2Error::CapExceeded { needed, cap } => {
                write!(f, "solution set of size {needed} exceeds cap {cap}")
            }
            Gf2Error::Parse { line, message } => write!(f, "line {line}: {message}"),
        }
    }
}

impl core::error::Error for Gf2Error {}

/// Dense GF(2) matrix, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BitVec>,
}

/// Default bound on enumerated solution sets.
pub const DEFAULT_CAP: u64 = 4096;

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BitMatrix { rows, cols, data: vec![BitVec::zeros(cols); rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: Vec<BitVec>) -> Self {
        let cols = rows.first().map_or(0, BitVec::len);
        debug_assert!(rows.iter().all(|r| r.len() == cols));
        BitMatrix { rows: rows.len(), cols, data: rows }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.data[r].set(c, value);
    }

    pub fn row(&self, r: usize) -> &BitVec {
        &self.data[r]
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in self.data[r].ones() {
                t.set(c, r, true);
            }
        }
        t
    }

    pub fn mul_vec(&self, x: &BitVec) -> Result<BitVec, Gf2Error> {
        if x.len() != self.cols {
            return Err(Gf2Error::DimensionMismatch { expected: self.cols, got: x.len() });
        }
        let mut out = BitVec::zeros(self.rows);
        for r in 0..self.rows {
            out.set(r, self.data[r].dot(x));
        }
        Ok(out)
    }

    /// Row-reduce a copy; returns the echelon rows and their pivot columns.
    fn echelon(&self) -> (Vec<BitVec>, Vec<usize>) {
        let mut rows = self.data.clone();
        let mut pivots = Vec::new();
        let mut next = 0usize;
        for col in 0..self.cols {
            let Some(pivot_row) = (next..rows.len()).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(next, pivot_row);
            let pivot = rows[next].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != next && row.get(col) {
                    row.xor_assign(&pivot);
                }
            }
            pivots.push(col);
            next += 1;
            if next == rows.len() {
                break;
            }
        }
        (rows, pivots)
    }

    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Basis of `{x : Mx = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<BitVec> {
        let (rows, pivots) = self.echelon();
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = BitVec::zeros(self.cols);
            v.set(free, true);
            for (i, &p) in pivots.iter().enumerate() {
                if rows[i].get(free) {
                    v.set(p, true);
                }
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of `Mx = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &BitVec) -> Result<Option<BitVec>, Gf2Error> {
        if b.len() != self.rows {
            return Err(Gf2Error::DimensionMismatch { expected: self.rows, got: b.len() });
        }
        // Eliminate on the augmented matrix [M | b].
        let mut rows: Vec<(BitVec, bool)> =
            self.data.iter().cloned().zip(b.iter()).collect();
        let mut pivots = Vec::new();
        let mut next = 0usize;
        for col in 0..self.cols {
            let Some(pr) = (next..rows.len()).find(|&r| rows[r].0.get(col)) else {
                continue;
            };
            rows.swap(next, pr);
            let (prow, pbit) = rows[next].clone();
            for (r, (row, bit)) in rows.iter_mut().enumerate() {
                if r != next && row.get(col) {
                    row.xor_assign(&prow);
                    *bit ^= pbit;
                }
            }
            pivots.push(col);
            next += 1;
            if next == rows.len() {
                break;
            }
        }
        if rows.iter().skip(pivots.len()).any(|(row, bit)| row.is_zero() && *bit) {
            return Ok(None);
        }
        let mut x = BitVec::zeros(self.cols);
        for (i, &p) in pivots.iter().enumerate() {
            if rows[i].1 {
                x.set(p, true);
            }
        }
        debug_assert_eq!(self.mul_vec(&x).expect("dims"), *b);
        Ok(Some(x))
    }

    /// Particular solution plus nullspace basis, or `None` when inconsistent.
    pub fn solve_affine(&self, b: &BitVec) -> Result<Option<AffineSolution>, Gf2Error> {
        Ok(self
            .solve(b)?
            .map(|particular| AffineSolution { particular, nullbasis: self.nullspace() }))
    }

    /// Every solution of `Mx = b`, sorted entrywise, guarded by `cap`.
    pub fn enumerate_solutions(&self, b: &BitVec, cap: u64) -> Result<Vec<BitVec>, Gf2Error> {
        let Some(sol) = self.solve_affine(b)? else {
            return Err(Gf2Error::Inconsistent);
        };
        sol.enumerate(cap)
    }

    /// Rows as `0`/`1` lines.
    pub fn to_text(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        for r in 0..self.rows {
            let _ = writeln!(s, "{}", self.data[r]);
        }
        s
    }

    /// Parse `0`/`1` lines (blank lines ignored).
    pub fn from_text(text: &str) -> Result<Self, Gf2Error> {
        let mut rows: Vec<BitVec> = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut bits = Vec::with_capacity(line.len());
            for ch in line.chars() {
                match ch {
                    '0' => bits.push(false),
                    '1' => bits.push(true),
                    _ => {
                        return Err(Gf2Error::Parse {
                            line: n + 1,
                            message: alloc::format!("unexpected character `{ch}`"),
                        })
                    }
                }
            }
            if let Some(first) = rows.first() {
                if first.len() != bits.len() {
                    return Err(Gf2Error::Parse {
                        line: n + 1,
                        message: String::from("ragged row length"),
                    });
                }
            }
            rows.push(BitVec::from_bools(&bits));
        }
        Ok(Self::from_rows(rows))
    }
}

/// The full solution set `particular + span(nullbasis)` of a consistent system.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffineSolution {
    pub particular: BitVec,
    pub nullbasis: Vec<BitVec>,
}

impl AffineSolution {
    pub fn count(&self) -> u64 {
        1u64 << self.nullbasis.len().min(63)
    }

    pub fn enumerate(&self, cap: u64) -> Result<Vec<BitVec>, Gf2Error> {
        let k = self.nullbasis.len();
        if k >= 63 || (1u64 << k) > cap {
            return Err(Gf2Error::CapExceeded { needed: self.count(), cap });
        }
        let mut out = Vec::with_capacity(1 << k);
        for mask in 0u64..(1 << k) {
            let mut x = self.particular.clone();
            for (i, basis_vec) in self.nullbasis.iter().enumerate() {
                if (mask >> i) & 1 == 1 {
                    x.xor_assign(basis_vec);
                }
            }
            out.push(x);
        }
        out.sort();
        Ok(out)
    }
}

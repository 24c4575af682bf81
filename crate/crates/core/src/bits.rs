//! Bit-packed vectors and matrices over F2.
//!
//! Every Gray image, span generator and kernel syndrome lives here. Words are
//! little-endian in bit order: bit `i` is bit `i % 64` of word `i / 64`. Bits
//! past `len` are always zero, so derived equality and hashing are exact.

use std::fmt;

const WORD: usize = 64;

#[inline]
fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// A binary vector of fixed length, 64 bits per word.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryVector {
    len: usize,
    words: Vec<u64>,
}

impl BinaryVector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    /// Builds a vector from `0`/`1` values; anything nonzero counts as one.
    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b != 0 {
                v.set(i, true);
            }
        }
        v
    }

    pub fn from_bools<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut v = Self::default();
        for b in bits {
            v.push(b);
        }
        v
    }

    /// Builds a vector of length `len` from the low `len` bits of `value`.
    pub fn from_u64(value: u64, len: usize) -> Self {
        assert!(len <= WORD, "from_u64 holds at most 64 bits");
        let mut v = Self::zeros(len);
        if len > 0 {
            v.words[0] = value & mask_low(len);
        }
        v
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        let m = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= m;
        } else {
            self.words[i / WORD] &= !m;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn push(&mut self, bit: bool) {
        if self.len.is_multiple_of(WORD) {
            self.words.push(0);
        }
        self.len += 1;
        if bit {
            let i = self.len - 1;
            self.words[i / WORD] |= 1u64 << (i % WORD);
        }
    }

    /// Appends `other` after the last bit of `self`.
    pub fn extend(&mut self, other: &BinaryVector) {
        let shift = self.len % WORD;
        if shift == 0 {
            self.words.extend_from_slice(&other.words);
        } else {
            for &w in &other.words {
                *self.words.last_mut().expect("nonzero shift implies a word") |= w << shift;
                self.words.push(w >> (WORD - shift));
            }
        }
        self.len += other.len;
        self.words.truncate(words_for(self.len));
    }

    /// The `len` bits starting at `start`.
    pub fn slice(&self, start: usize, len: usize) -> BinaryVector {
        assert!(start + len <= self.len, "slice out of range");
        let mut out = Self::zeros(len);
        let shift = start % WORD;
        let base = start / WORD;
        for (k, w) in out.words.iter_mut().enumerate() {
            let lo = self.words.get(base + k).copied().unwrap_or(0);
            let hi = self.words.get(base + k + 1).copied().unwrap_or(0);
            *w = if shift == 0 { lo } else { (lo >> shift) | (hi << (WORD - shift)) };
        }
        out.clear_tail();
        out
    }

    /// Interleaves two equal-length vectors: `a0 b0 a1 b1 ...`.
    pub fn interleave(a: &BinaryVector, b: &BinaryVector) -> BinaryVector {
        assert_eq!(a.len, b.len);
        let mut out = Self::zeros(2 * a.len);
        for (k, (&wa, &wb)) in a.words.iter().zip(&b.words).enumerate() {
            let lo = spread(wa as u32) | (spread(wb as u32) << 1);
            let hi = spread((wa >> 32) as u32) | (spread((wb >> 32) as u32) << 1);
            if 2 * k < out.words.len() {
                out.words[2 * k] = lo;
            }
            if 2 * k + 1 < out.words.len() {
                out.words[2 * k + 1] = hi;
            }
        }
        out
    }

    /// Inverse of [`BinaryVector::interleave`]: splits even and odd positions.
    pub fn deinterleave(&self) -> (BinaryVector, BinaryVector) {
        assert!(self.len.is_multiple_of(2), "deinterleave needs an even length");
        let half = self.len / 2;
        let mut a = Self::zeros(half);
        let mut b = Self::zeros(half);
        for k in 0..a.words.len() {
            let lo = self.words.get(2 * k).copied().unwrap_or(0);
            let hi = self.words.get(2 * k + 1).copied().unwrap_or(0);
            a.words[k] = compact(lo) as u64 | ((compact(hi) as u64) << 32);
            b.words[k] = compact(lo >> 1) as u64 | ((compact(hi >> 1) as u64) << 32);
        }
        (a, b)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Index of the lowest set bit.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * WORD + w.trailing_zeros() as usize)
    }

    /// Index of the highest set bit.
    pub fn last_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * WORD + (WORD - 1 - w.leading_zeros() as usize))
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(k * WORD + t)
                }
            })
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub fn to_bits(&self) -> Vec<u8> {
        self.iter().map(u8::from).collect()
    }

    pub fn xor_assign(&mut self, other: &BinaryVector) {
        assert_eq!(self.len, other.len, "length mismatch in xor");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn and_assign(&mut self, other: &BinaryVector) {
        assert_eq!(self.len, other.len, "length mismatch in and");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn xor(&self, other: &BinaryVector) -> BinaryVector {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    pub fn and(&self, other: &BinaryVector) -> BinaryVector {
        let mut out = self.clone();
        out.and_assign(other);
        out
    }

    /// Popcount of `self & other` without allocating.
    pub fn and_count(&self, other: &BinaryVector) -> usize {
        assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Raw words. Bits at and beyond `len` are zero.
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub(crate) fn words_mut(&mut self) -> &mut [u64] {
        &mut self.words
    }

    pub(crate) fn clear_tail(&mut self) {
        let r = self.len % WORD;
        if r != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= mask_low(r);
            }
        }
    }
}

impl fmt::Display for BinaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryVector({self})")
    }
}

#[inline]
fn mask_low(n: usize) -> u64 {
    if n >= WORD {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
fn spread(x: u32) -> u64 {
    let mut x = x as u64;
    x = (x | (x << 16)) & 0x0000_FFFF_0000_FFFF;
    x = (x | (x << 8)) & 0x00FF_00FF_00FF_00FF;
    x = (x | (x << 4)) & 0x0F0F_0F0F_0F0F_0F0F;
    x = (x | (x << 2)) & 0x3333_3333_3333_3333;
    (x | (x << 1)) & 0x5555_5555_5555_5555
}

#[inline]
fn compact(x: u64) -> u32 {
    let mut x = x & 0x5555_5555_5555_5555;
    x = (x | (x >> 1)) & 0x3333_3333_3333_3333;
    x = (x | (x >> 2)) & 0x0F0F_0F0F_0F0F_0F0F;
    x = (x | (x >> 4)) & 0x00FF_00FF_00FF_00FF;
    x = (x | (x >> 8)) & 0x0000_FFFF_0000_FFFF;
    ((x | (x >> 16)) & 0x0000_0000_FFFF_FFFF) as u32
}

/// Incremental row echelon basis over F2.
///
/// Each stored vector has its pivot at its lowest set bit and is zero at the
/// pivots of every vector inserted before it, so reduction in insertion order
/// clears all pivots.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    basis: Vec<BinaryVector>,
    pivots: Vec<usize>,
    tags: Vec<BinaryVector>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the basis and returns what is left.
    pub fn reduce(&self, v: &BinaryVector) -> BinaryVector {
        let mut r = v.clone();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if r.get(p) {
                r.xor_assign(b);
            }
        }
        r
    }

    pub fn contains(&self, v: &BinaryVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Inserts `v`; returns its pivot if it was independent of the basis.
    pub fn insert(&mut self, v: &BinaryVector) -> Option<usize> {
        self.insert_tagged(v, BinaryVector::default()).ok()
    }

    /// Like [`Echelon::insert`] but carries a tag through the same row
    /// operations. On dependence the accumulated tag is returned as `Err`.
    pub fn insert_tagged(&mut self, v: &BinaryVector, tag: BinaryVector) -> Result<usize, BinaryVector> {
        let mut r = v.clone();
        let mut t = tag;
        for ((b, &p), bt) in self.basis.iter().zip(&self.pivots).zip(&self.tags) {
            if r.get(p) {
                r.xor_assign(b);
                if !t.is_empty() {
                    t.xor_assign(bt);
                }
            }
        }
        match r.first_one() {
            Some(p) => {
                self.basis.push(r);
                self.pivots.push(p);
                self.tags.push(t);
                Ok(p)
            }
            None => Err(t),
        }
    }
}

/// A dense binary matrix stored as bit-packed rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryMatrix {
    cols: usize,
    rows: Vec<BinaryVector>,
}

impl BinaryMatrix {
    pub fn new(cols: usize) -> Self {
        Self { cols, rows: Vec::new() }
    }

    pub fn from_rows(cols: usize, rows: Vec<BinaryVector>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "row length mismatch");
        Self { cols, rows }
    }

    pub fn push_row(&mut self, row: BinaryVector) {
        assert_eq!(row.len(), self.cols, "row length mismatch");
        self.rows.push(row);
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[BinaryVector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &BinaryVector {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn echelon(&self) -> Echelon {
        let mut e = Echelon::new();
        for r in &self.rows {
            e.insert(r);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// Indices of a row basis chosen greedily, lowest index first.
    pub fn row_basis_indices(&self) -> Vec<usize> {
        let mut e = Echelon::new();
        self.rows
            .iter()
            .enumerate()
            .filter_map(|(i, r)| e.insert(r).map(|_| i))
            .collect()
    }

    /// A basis of `{ a : a M = 0 }`, each vector of length `nrows`.
    pub fn left_null_space(&self) -> Vec<BinaryVector> {
        let m = self.rows.len();
        let mut e = Echelon::new();
        let mut null = Vec::new();
        for (i, r) in self.rows.iter().enumerate() {
            let mut tag = BinaryVector::zeros(m);
            tag.set(i, true);
            if let Err(dep) = e.insert_tagged(r, tag) {
                null.push(dep);
            }
        }
        null
    }

    pub fn transpose(&self) -> BinaryMatrix {
        let mut t = BinaryMatrix::new(self.rows.len());
        for j in 0..self.cols {
            let mut col = BinaryVector::zeros(self.rows.len());
            for (i, r) in self.rows.iter().enumerate() {
                if r.get(j) {
                    col.set(i, true);
                }
            }
            t.push_row(col);
        }
        t
    }
}

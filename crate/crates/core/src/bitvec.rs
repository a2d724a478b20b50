//! Bit-packed vectors over GF(2).

use std::fmt;

const WORD: usize = 64;

/// A fixed-length vector over GF(2), packed into 64-bit words.
///
/// Positions passed to [`get`](Self::get), [`set`](Self::set) and friends are
/// 0-based container offsets. [`support`](Self::support) reports 1-based
/// coordinates, which is what the rest of the crate exposes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    /// The unit vector with a single one at 0-based position `pos`.
    pub fn unit(len: usize, pos: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(pos, true);
        v
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let bits: Vec<bool> = bits.into_iter().collect();
        let mut v = Self::zeros(bits.len());
        for (i, b) in bits.into_iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Builds a vector from 0-based positions of its ones.
    pub fn from_positions<I: IntoIterator<Item = usize>>(len: usize, positions: I) -> Self {
        let mut v = Self::zeros(len);
        for p in positions {
            v.set(p, true);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, pos: usize) -> bool {
        assert!(
            pos < self.len,
            "bit {pos} out of range for length {}",
            self.len
        );
        (self.words[pos / WORD] >> (pos % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, pos: usize, value: bool) {
        assert!(
            pos < self.len,
            "bit {pos} out of range for length {}",
            self.len
        );
        let mask = 1u64 << (pos % WORD);
        if value {
            self.words[pos / WORD] |= mask;
        } else {
            self.words[pos / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, pos: usize) {
        assert!(
            pos < self.len,
            "bit {pos} out of range for length {}",
            self.len
        );
        self.words[pos / WORD] ^= 1u64 << (pos % WORD);
    }

    pub fn xor_assign(&mut self, other: &BitVector) {
        assert_eq!(self.len, other.len, "length mismatch in xor");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &BitVector) -> BitVector {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    pub fn and(&self, other: &BitVector) -> BitVector {
        assert_eq!(self.len, other.len, "length mismatch in and");
        BitVector {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    /// Number of positions where both vectors are one.
    pub fn overlap(&self, other: &BitVector) -> usize {
        assert_eq!(self.len, other.len, "length mismatch in overlap");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Standard inner product over GF(2).
    pub fn dot(&self, other: &BitVector) -> bool {
        self.overlap(other) % 2 == 1
    }

    pub fn intersects(&self, other: &BitVector) -> bool {
        assert_eq!(self.len, other.len, "length mismatch in intersects");
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// 0-based positions of the ones, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let tz = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * WORD + tz)
                }
            })
        })
    }

    /// The ordered support, 1-based.
    pub fn support(&self) -> Vec<usize> {
        self.ones().map(|p| p + 1).collect()
    }

    /// 0-based position of the last one, if any.
    pub fn last_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(wi, &w)| wi * WORD + (WORD - 1 - w.leading_zeros() as usize))
    }

    /// 0-based position of the first one, if any.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(wi, &w)| wi * WORD + w.trailing_zeros() as usize)
    }

    /// Tensor product: position `i * other.len() + j` holds `self[i] & other[j]`.
    pub fn kron(&self, other: &BitVector) -> BitVector {
        let mut out = BitVector::zeros(self.len * other.len);
        for i in self.ones() {
            for j in other.ones() {
                out.set(i * other.len + j, true);
            }
        }
        out
    }

    /// Copies `other` into `self` starting at `offset`.
    pub fn splice(&mut self, offset: usize, other: &BitVector) {
        for p in other.ones() {
            self.set(offset + p, true);
        }
    }

    /// The sub-vector `[start, start + len)`.
    pub fn slice(&self, start: usize, len: usize) -> BitVector {
        BitVector::from_positions(
            len,
            self.ones()
                .filter(|&p| p >= start && p < start + len)
                .map(|p| p - start),
        )
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(|i| self.get(i))
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

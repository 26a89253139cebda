//! Dense bit-vectors and column echelon forms over the field with two elements.
//!
//! The oracle reduces boundary matrices whose columns carry at most two
//! entries, so plain word-packed vectors with highest-set-bit pivoting are
//! more than fast enough.

/// A fixed-length vector over GF(2), packed into 64-bit words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct BitVec {
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    #[cfg(test)]
    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.words.len(), other.words.len());
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w ^= o;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Index of the highest set bit, the pivot in column reduction.
    pub fn highest_set(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate().rev() {
            if w != 0 {
                return Some(i * 64 + 63 - w.leading_zeros() as usize);
            }
        }
        None
    }

    /// All set bit positions, ascending.
    pub fn ones(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (i, &word) in self.words.iter().enumerate() {
            let mut w = word;
            while w != 0 {
                let b = w.trailing_zeros() as usize;
                out.push(i * 64 + b);
                w &= w - 1;
            }
        }
        out
    }
}

/// A set of GF(2) vectors kept in column echelon form, keyed by pivot row.
#[derive(Debug, Clone)]
pub(crate) struct Echelon {
    cols: Vec<Option<BitVec>>,
}

impl Echelon {
    pub fn new(dim: usize) -> Self {
        Echelon {
            cols: vec![None; dim],
        }
    }

    /// Reduce `v` against the stored columns in place.
    pub fn reduce(&self, v: &mut BitVec) {
        while let Some(h) = v.highest_set() {
            match &self.cols[h] {
                Some(c) => v.xor_assign(c),
                None => break,
            }
        }
    }

    /// Insert `v`, reducing first; returns the pivot row, or `None` if `v`
    /// was already in the span.
    pub fn insert(&mut self, mut v: BitVec) -> Option<usize> {
        self.reduce(&mut v);
        match v.highest_set() {
            Some(h) => {
                self.cols[h] = Some(v);
                Some(h)
            }
            None => None,
        }
    }

    /// Membership test for the span.
    pub fn contains(&self, v: &BitVec) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        w.is_zero()
    }
}

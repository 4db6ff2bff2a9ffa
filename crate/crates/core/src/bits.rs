//! Fixed-width bitset rows used for adjacency.

/// Number of 64-bit words in one adjacency row.
#[cfg(not(feature = "wide"))]
pub const WORDS: usize = 2;
#[cfg(feature = "wide")]
pub const WORDS: usize = 4;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = WORDS * 64;

/// One adjacency row: bit `j` is set when `j` is a neighbour.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Row([u64; WORDS]);

impl Row {
    pub const EMPTY: Row = Row([0; WORDS]);

    /// Row with bits `0..n` set.
    pub fn full(n: usize) -> Row {
        let mut r = Row::EMPTY;
        for (w, word) in r.0.iter_mut().enumerate() {
            let lo = w * 64;
            if n >= lo + 64 {
                *word = u64::MAX;
            } else if n > lo {
                *word = (1u64 << (n - lo)) - 1;
            }
        }
        r
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.0[i >> 6] >> (i & 63) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0[i >> 6] |= 1 << (i & 63);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.0[i >> 6] &= !(1 << (i & 63));
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn and(&self, other: &Row) -> Row {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a &= b;
        }
        out
    }

    /// `self & !other`
    #[inline]
    pub fn and_not(&self, other: &Row) -> Row {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a &= !b;
        }
        out
    }

    #[inline]
    pub fn intersection_len(&self, other: &Row) -> u32 {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| (a & b).count_ones())
            .sum()
    }

    /// Clears every bit with index `<= i`.
    #[inline]
    pub fn above(&self, i: usize) -> Row {
        let mut out = *self;
        let w = i >> 6;
        for word in out.0.iter_mut().take(w) {
            *word = 0;
        }
        let b = i & 63;
        out.0[w] &= if b == 63 { 0 } else { u64::MAX << (b + 1) };
        out
    }

    pub fn iter(&self) -> Ones {
        Ones {
            words: self.0,
            word: 0,
        }
    }
}

impl std::fmt::Debug for Row {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Ascending iterator over the set bits of a [`Row`].
pub struct Ones {
    words: [u64; WORDS],
    word: usize,
}

impl Iterator for Ones {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.word < WORDS {
            let w = self.words[self.word];
            if w != 0 {
                self.words[self.word] = w & (w - 1);
                return Some(self.word * 64 + w.trailing_zeros() as usize);
            }
            self.word += 1;
        }
        None
    }
}

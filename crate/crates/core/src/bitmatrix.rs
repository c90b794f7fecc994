//! Dense square bit matrix, one row of `u64` words per element.

#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        BitMatrix {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.bits[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize) {
        self.bits[r * self.words + c / 64] |= 1 << (c % 64);
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.bits[r * self.words..(r + 1) * self.words]
    }

    /// `row(dst) |= row(src)`.
    pub fn union_rows(&mut self, dst: usize, src: usize) {
        if dst == src {
            return;
        }
        let w = self.words;
        let (d, s) = (dst * w, src * w);
        for k in 0..w {
            let v = self.bits[s + k];
            self.bits[d + k] |= v;
        }
    }

    pub fn count_row(&self, r: usize) -> usize {
        self.row(r).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn row_ones(&self, r: usize) -> Ones {
        Ones::new(self.row(r).to_vec())
    }

    pub fn and_rows(&self, a: usize, b: usize) -> Vec<u64> {
        self.row(a)
            .iter()
            .zip(self.row(b))
            .map(|(x, y)| x & y)
            .collect()
    }

    /// Bits set in row `a` of `self` and row `b` of `other`, lowest first.
    pub fn and_ones_with(&self, a: usize, other: &BitMatrix, b: usize) -> Ones {
        let words: Vec<u64> = self
            .row(a)
            .iter()
            .zip(other.row(b))
            .map(|(x, y)| x & y)
            .collect();
        Ones::new(words)
    }

    /// Bits set in both rows, lowest first.
    pub fn and_ones(&self, a: usize, b: usize) -> Ones {
        let words: Vec<u64> = self
            .row(a)
            .iter()
            .zip(self.row(b))
            .map(|(x, y)| x & y)
            .collect();
        Ones::new(words)
    }
}

pub fn lowest_bit(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
}

pub fn highest_bit(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .enumerate()
        .rev()
        .find(|(_, &w)| w != 0)
        .map(|(k, w)| k * 64 + 63 - w.leading_zeros() as usize)
}

/// Whether every bit of `a` is set in `b`.
pub fn is_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

pub struct Ones {
    words: Vec<u64>,
    k: usize,
    cur: u64,
}

impl Ones {
    fn new(words: Vec<u64>) -> Self {
        let cur = words.first().copied().unwrap_or(0);
        Ones { words, k: 0, cur }
    }
}

impl Iterator for Ones {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let bit = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.k * 64 + bit);
            }
            self.k += 1;
            if self.k >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.k];
        }
    }
}

//! Fixed-capacity vertex sets backed by 64-bit words.

use std::cmp::Ordering;
use std::fmt;

/// Number of 64-bit words in a [`VertexSet`].
pub const WORDS: usize = 8;

/// Largest vertex count a [`VertexSet`] can address.
pub const MAX_VERTICES: usize = WORDS * 64;

/// A set of vertex ids in `0..MAX_VERTICES`.
///
/// Ordering is lexicographic on the ascending member lists, so `{0, 5}`
/// sorts before `{1}` and `{0}` sorts before `{0, 1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    words: [u64; WORDS],
}

impl VertexSet {
    pub const fn new() -> Self {
        VertexSet { words: [0; WORDS] }
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex count {n} exceeds {MAX_VERTICES}");
        let mut s = VertexSet::new();
        let full_words = n / 64;
        for w in s.words.iter_mut().take(full_words) {
            *w = u64::MAX;
        }
        if !n.is_multiple_of(64) {
            s.words[full_words] = (1u64 << (n % 64)) - 1;
        }
        s
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = VertexSet::new();
        s.insert(v);
        s
    }

    /// Builds a set whose members are the set bits of `bits`.
    pub fn from_word(bits: u64) -> Self {
        let mut s = VertexSet::new();
        s.words[0] = bits;
        s
    }

    /// First word of the set; only meaningful when every member is below 64.
    #[inline]
    pub fn low_word(&self) -> u64 {
        self.words[0]
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.words[v >> 6] |= 1u64 << (v & 63);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.words[v >> 6] &= !(1u64 << (v & 63));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < MAX_VERTICES && self.words[v >> 6] & (1u64 << (v & 63)) != 0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    #[inline]
    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = *self;
        for (o, w) in out.words.iter_mut().zip(other.words.iter()) {
            *o |= *w;
        }
        out
    }

    #[inline]
    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = *self;
        for (o, w) in out.words.iter_mut().zip(other.words.iter()) {
            *o &= *w;
        }
        out
    }

    #[inline]
    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut out = *self;
        for (o, w) in out.words.iter_mut().zip(other.words.iter()) {
            *o &= !*w;
        }
        out
    }

    #[inline]
    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    #[inline]
    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & b == 0)
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            set: self,
            word: 0,
            bits: self.words[0],
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Smallest member strictly greater than `v`.
    fn next_after(&self, v: usize) -> Option<usize> {
        let start = v + 1;
        if start >= MAX_VERTICES {
            return None;
        }
        let mut wi = start >> 6;
        let mut bits = self.words[wi] & (u64::MAX << (start & 63));
        loop {
            if bits != 0 {
                return Some(wi * 64 + bits.trailing_zeros() as usize);
            }
            wi += 1;
            if wi == WORDS {
                return None;
            }
            bits = self.words[wi];
        }
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        // The member lists agree up to the least element m of the symmetric
        // difference. The side holding m is smaller unless the other side has
        // run out of members, i.e. is a proper prefix.
        let mut sym = *self;
        for (o, w) in sym.words.iter_mut().zip(other.words.iter()) {
            *o ^= *w;
        }
        let Some(m) = sym.first() else {
            return Ordering::Equal;
        };
        if self.contains(m) {
            if other.next_after(m).is_some() {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        } else if self.next_after(m).is_some() {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;
    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

pub struct Iter<'a> {
    set: &'a VertexSet,
    word: usize,
    bits: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.bits != 0 {
                let tz = self.bits.trailing_zeros() as usize;
                self.bits &= self.bits - 1;
                return Some(self.word * 64 + tz);
            }
            self.word += 1;
            if self.word >= WORDS {
                return None;
            }
            self.bits = self.set.words[self.word];
        }
    }
}

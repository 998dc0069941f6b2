//! Arbitrary-width vertex bitmasks.
//!
//! A [`VertexSet`] stores 0-indexed vertex indices in packed 64-bit words.
//! Trailing zero words are always trimmed, so two sets with the same members
//! compare and hash equal regardless of the graph width they came from.

use std::cmp::Ordering;
use std::fmt;

const WORD: usize = 64;

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self { words: Vec::new() }
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut words = vec![u64::MAX; n / WORD];
        if n % WORD != 0 {
            words.push((1u64 << (n % WORD)) - 1);
        }
        let mut set = Self { words };
        set.trim();
        set
    }

    pub fn singleton(v: usize) -> Self {
        let mut set = Self::new();
        set.insert(v);
        set
    }

    pub fn from_words(words: Vec<u64>) -> Self {
        let mut set = Self { words };
        set.trim();
        set
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.words
            .get(v / WORD)
            .is_some_and(|w| (w >> (v % WORD)) & 1 == 1)
    }

    pub fn insert(&mut self, v: usize) {
        let idx = v / WORD;
        if idx >= self.words.len() {
            self.words.resize(idx + 1, 0);
        }
        self.words[idx] |= 1u64 << (v % WORD);
    }

    pub fn remove(&mut self, v: usize) {
        if let Some(w) = self.words.get_mut(v / WORD) {
            *w &= !(1u64 << (v % WORD));
            self.trim();
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (w, o) in words.iter_mut().zip(&short.words) {
            *w |= o;
        }
        Self { words }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect();
        Self::from_words(words)
    }

    /// Members of `self` that are not in `other`.
    pub fn difference(&self, other: &Self) -> Self {
        let words = self
            .words
            .iter()
            .enumerate()
            .map(|(i, a)| a & !other.words.get(i).copied().unwrap_or(0))
            .collect();
        Self::from_words(words)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, a)| a & !other.words.get(i).copied().unwrap_or(0) == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    /// Smallest member that is `>= from`.
    pub fn next_from(&self, from: usize) -> Option<usize> {
        let mut idx = from / WORD;
        if idx >= self.words.len() {
            return None;
        }
        let mut w = self.words[idx] & (u64::MAX << (from % WORD));
        loop {
            if w != 0 {
                return Some(idx * WORD + w.trailing_zeros() as usize);
            }
            idx += 1;
            if idx >= self.words.len() {
                return None;
            }
            w = self.words[idx];
        }
    }

    /// Number of members that are `>= from`.
    pub fn count_from(&self, from: usize) -> usize {
        let idx = from / WORD;
        if idx >= self.words.len() {
            return 0;
        }
        let head = (self.words[idx] & (u64::MAX << (from % WORD))).count_ones() as usize;
        head + self.words[idx + 1..]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>()
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    /// Lexicographic comparison of the sorted member lists.
    ///
    /// `{1,3} < {2}` and `{1} < {1,3}`. Among sets of equal size the smaller
    /// one under this order is the one holding the smallest element of the
    /// symmetric difference.
    pub fn cmp_sorted_lists(&self, other: &Self) -> Ordering {
        let n = self.words.len().max(other.words.len());
        for i in 0..n {
            let a = self.words.get(i).copied().unwrap_or(0);
            let b = other.words.get(i).copied().unwrap_or(0);
            let x = a ^ b;
            if x == 0 {
                continue;
            }
            let p = i * WORD + x.trailing_zeros() as usize;
            // `holder` has p, `other` lacks it; `other` sorts first only if it ends here.
            let (holder_is_self, lacking) = if self.contains(p) {
                (true, other)
            } else {
                (false, self)
            };
            let lacking_continues = lacking.next_from(p + 1).is_some();
            let holder_less = lacking_continues;
            return match (holder_is_self, holder_less) {
                (true, true) | (false, false) => Ordering::Less,
                _ => Ordering::Greater,
            };
        }
        Ordering::Equal
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_sorted_lists(other)
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = Self::new();
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    idx: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.idx * WORD + bit);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.idx];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

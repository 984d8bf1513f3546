//! Fixed-capacity vertex sets backed by packed 64-bit words.
//!
//! Adjacency rows and candidate sets during pattern search are all
//! `VertexSet`s, so set intersection costs one word operation per 64
//! vertices.

const WORD: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// A subset of `{0, .., n-1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; words_for(n)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.n);
        self.words[v / WORD] |= 1 << (v % WORD);
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < self.n);
        self.words[v / WORD] &= !(1 << (v % WORD));
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.n, other.n);
        let mut s = self.clone();
        for (a, b) in s.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
        s
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * WORD + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let b = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(i * WORD + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    /// Collects into a set sized to the largest element plus one; prefer
    /// [`VertexSet::empty`] + `insert` when the universe is known.
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let items: Vec<usize> = iter.into_iter().collect();
        let n = items.iter().max().map_or(0, |&m| m + 1);
        let mut s = VertexSet::empty(n);
        for v in items {
            s.insert(v);
        }
        s
    }
}

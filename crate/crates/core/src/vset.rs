//! Compact vertex sets over dense ids `0..n`.

/// Bitset over vertex ids. All graphs in this crate use dense ids, so a
/// word-packed set is the working currency of the 2-join detector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct VertSet {
    words: Vec<u64>,
    n: usize,
}

impl VertSet {
    pub fn new(n: usize) -> Self {
        VertSet {
            words: vec![0; n.div_ceil(64)],
            n,
        }
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(n: usize, it: I) -> Self {
        let mut s = VertSet::new(n);
        for v in it {
            s.insert(v);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.n);
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        self.words[v / 64] &= !(1 << (v % 64));
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union_with(&mut self, other: &VertSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn subtract(&mut self, other: &VertSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn intersection(&self, other: &VertSet) -> VertSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn complement(&self) -> VertSet {
        let mut s = VertSet::new(self.n);
        for (i, w) in self.words.iter().enumerate() {
            s.words[i] = !w;
        }
        let spare = self.words.len() * 64 - self.n;
        if spare > 0 {
            if let Some(last) = s.words.last_mut() {
                *last &= u64::MAX >> spare;
            }
        }
        s
    }

    pub fn intersects(&self, other: &VertSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset_of(&self, other: &VertSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// `self & mask == target`, without allocating.
    pub fn and_equals(&self, mask: &VertSet, target: &VertSet) -> bool {
        self.words
            .iter()
            .zip(&mask.words)
            .zip(&target.words)
            .all(|((a, b), t)| a & b == *t)
    }

    /// `self & mask == 0`, without allocating.
    pub fn and_is_empty(&self, mask: &VertSet) -> bool {
        self.words.iter().zip(&mask.words).all(|(a, b)| a & b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            std::iter::successors(Some(w), |&w| Some(w & w.wrapping_sub(1)))
                .take_while(|&w| w != 0)
                .map(move |w| i * 64 + w.trailing_zeros() as usize)
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }
}

impl std::fmt::Debug for VertSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_set_ops() {
        let mut s = VertSet::new(130);
        s.insert(0);
        s.insert(64);
        s.insert(129);
        assert_eq!(s.len(), 3);
        assert_eq!(s.to_vec(), vec![0, 64, 129]);
        assert!(s.contains(64));
        s.remove(64);
        assert!(!s.contains(64));
        let c = s.complement();
        assert_eq!(c.len(), 128);
        assert!(!c.contains(129));
        assert!(c.contains(64));
    }
}

use std::cmp::Ordering;
use std::fmt;

/// Bit-vector subset of a carrier of fixed width. The width is carried along
/// so that subsets of different magmas cannot be mixed up silently.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubsetMask {
    width: usize,
    bits: Vec<u64>,
}

fn words_for(width: usize) -> usize {
    width.div_ceil(64)
}

impl SubsetMask {
    /// Empty subset of a carrier with `width` elements.
    pub fn empty(width: usize) -> Self {
        SubsetMask {
            width,
            bits: vec![0; words_for(width)],
        }
    }

    /// The full carrier.
    pub fn full(width: usize) -> Self {
        let mut s = Self::empty(width);
        for i in 0..width {
            s.insert(i);
        }
        s
    }

    pub fn singleton(width: usize, elem: usize) -> Self {
        let mut s = Self::empty(width);
        s.insert(elem);
        s
    }

    pub fn from_elems<I: IntoIterator<Item = usize>>(width: usize, elems: I) -> Self {
        let mut s = Self::empty(width);
        for e in elems {
            s.insert(e);
        }
        s
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn insert(&mut self, elem: usize) {
        assert!(elem < self.width, "element {elem} out of width {}", self.width);
        self.bits[elem / 64] |= 1u64 << (elem % 64);
    }

    pub fn remove(&mut self, elem: usize) {
        assert!(elem < self.width, "element {elem} out of width {}", self.width);
        self.bits[elem / 64] &= !(1u64 << (elem % 64));
    }

    pub fn contains(&self, elem: usize) -> bool {
        elem < self.width && self.bits[elem / 64] & (1u64 << (elem % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.width
    }

    /// Ascending iterator over member indices.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.width).filter(move |&i| self.contains(i))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union(&self, other: &SubsetMask) -> SubsetMask {
        assert_eq!(self.width, other.width);
        SubsetMask {
            width: self.width,
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    pub fn intersect(&self, other: &SubsetMask) -> SubsetMask {
        assert_eq!(self.width, other.width);
        SubsetMask {
            width: self.width,
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn difference(&self, other: &SubsetMask) -> SubsetMask {
        assert_eq!(self.width, other.width);
        SubsetMask {
            width: self.width,
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    pub fn is_subset_of(&self, other: &SubsetMask) -> bool {
        assert_eq!(self.width, other.width);
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &SubsetMask) -> bool {
        assert_eq!(self.width, other.width);
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & b == 0)
    }

    pub fn min_elem(&self) -> Option<usize> {
        self.iter().next()
    }
}

/// Subsets are ordered by their sorted element lists, so `{0,2}` < `{0,3}` <
/// `{1}`; families sorted this way print deterministically.
impl Ord for SubsetMask {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for SubsetMask {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, e) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SubsetMask({self})")
    }
}

/// Enumerates every fixpoint of a closure operator over `{0, .., width-1}`
/// in lectic order (Ganter's next-closure). `close` must be extensive,
/// monotone and idempotent; the result then lists each closed set exactly
/// once, beginning with `close(∅)` and ending with the full set.
pub fn enumerate_closure_system<F>(width: usize, mut close: F) -> Vec<SubsetMask>
where
    F: FnMut(&SubsetMask) -> SubsetMask,
{
    let mut out = Vec::new();
    if width == 0 {
        out.push(SubsetMask::empty(0));
        return out;
    }
    let mut current = close(&SubsetMask::empty(width));
    loop {
        out.push(current.clone());
        match next_closure(&current, width, &mut close) {
            Some(next) => current = next,
            None => break,
        }
    }
    out
}

/// One step of the lectic walk: the smallest closed set strictly above
/// `set` in lectic order, or `None` when `set` is the last fixpoint.
pub fn next_closure<F>(set: &SubsetMask, width: usize, close: &mut F) -> Option<SubsetMask>
where
    F: FnMut(&SubsetMask) -> SubsetMask,
{
    let mut a = set.clone();
    for i in (0..width).rev() {
        if a.contains(i) {
            a.remove(i);
        } else {
            let mut candidate = a.clone();
            candidate.insert(i);
            let closed = close(&candidate);
            // Lectic successor test: the closure must add nothing below i.
            let adds_small = closed.iter().take_while(|&e| e < i).any(|e| !a.contains(e));
            if !adds_small {
                return Some(closed);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_roundtrip_basics() {
        let s = SubsetMask::from_elems(6, [4, 0, 2]);
        assert_eq!(s.to_string(), "{0,2,4}");
        assert_eq!(s.len(), 3);
        assert!(s.contains(4) && !s.contains(1));
        assert_eq!(s.to_vec(), vec![0, 2, 4]);
    }

    #[test]
    fn set_algebra() {
        let a = SubsetMask::from_elems(8, [0, 2, 4, 6]);
        let b = SubsetMask::from_elems(8, [4, 5, 6, 7]);
        assert_eq!(a.union(&b).to_vec(), vec![0, 2, 4, 5, 6, 7]);
        assert_eq!(a.intersect(&b).to_vec(), vec![4, 6]);
        assert_eq!(a.difference(&b).to_vec(), vec![0, 2]);
        assert!(SubsetMask::from_elems(8, [2, 6]).is_subset_of(&a));
        assert!(!a.is_subset_of(&b));
        assert!(SubsetMask::from_elems(8, [1, 3]).is_disjoint(&a));
    }

    #[test]
    fn ordering_is_by_element_list() {
        let a = SubsetMask::from_elems(4, [0, 2]);
        let b = SubsetMask::from_elems(4, [0, 3]);
        let c = SubsetMask::from_elems(4, [1]);
        assert!(a < b && b < c);
    }

    #[test]
    fn wide_masks_cross_word_boundary() {
        let mut s = SubsetMask::empty(130);
        s.insert(0);
        s.insert(63);
        s.insert(64);
        s.insert(129);
        assert_eq!(s.len(), 4);
        assert_eq!(s.to_vec(), vec![0, 63, 64, 129]);
        s.remove(64);
        assert_eq!(s.to_vec(), vec![0, 63, 129]);
    }

    #[test]
    fn trivial_closure_enumerates_power_set() {
        // The identity operator's fixpoints are all subsets.
        let all = enumerate_closure_system(4, |s| s.clone());
        assert_eq!(all.len(), 16);
        let mut dedup = all.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), 16);
    }

    #[test]
    fn interval_closure_matches_brute_force() {
        // close(S) = {0..max(S)} is a closure operator; fixpoints are the
        // prefixes plus the empty set.
        let close = |s: &SubsetMask| match s.iter().last() {
            None => s.clone(),
            Some(max) => SubsetMask::from_elems(s.width(), 0..=max),
        };
        let found = enumerate_closure_system(6, close);
        assert_eq!(found.len(), 7); // ∅, {0}, {0,1}, .., {0..5}
        for (k, s) in found.iter().enumerate() {
            assert_eq!(s.len(), k);
        }
    }
}

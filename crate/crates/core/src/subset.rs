//! Bitmask subsets of a small ground set and ordered families of them.

use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Not, Sub};

use serde::{Deserialize, Serialize};

/// A subset of the element indices `0..n`, packed into a machine word.
///
/// The ground set size is not stored; callers that need the invariant
/// "no bit at position >= n" check it with [`Subset::fits`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Subset(pub u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    /// The whole ground set `{0, .., n-1}`.
    pub fn full(n: usize) -> Subset {
        debug_assert!(n < 32);
        Subset((1u32 << n) - 1)
    }

    pub fn singleton(e: usize) -> Subset {
        Subset(1 << e)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Subset {
        elements
            .into_iter()
            .fold(Subset::EMPTY, |acc, e| acc.with(e))
    }

    #[inline]
    pub fn bits(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, e: usize) -> bool {
        self.0 >> e & 1 == 1
    }

    #[inline]
    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_proper_subset_of(self, other: Subset) -> bool {
        self != other && self.is_subset_of(other)
    }

    /// True when neither set contains the other.
    #[inline]
    pub fn is_incomparable_with(self, other: Subset) -> bool {
        !self.is_subset_of(other) && !other.is_subset_of(self)
    }

    #[inline]
    pub fn intersects(self, other: Subset) -> bool {
        self.0 & other.0 != 0
    }

    #[inline]
    pub fn with(self, e: usize) -> Subset {
        Subset(self.0 | 1 << e)
    }

    #[inline]
    pub fn without(self, e: usize) -> Subset {
        Subset(self.0 & !(1 << e))
    }

    /// True when no bit at position `>= n` is set.
    #[inline]
    pub fn fits(self, n: usize) -> bool {
        n >= 32 || self.0 >> n == 0
    }

    pub fn min_element(self) -> Option<usize> {
        (!self.is_empty()).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max_element(self) -> Option<usize> {
        (!self.is_empty()).then(|| 31 - self.0.leading_zeros() as usize)
    }

    /// Element indices in increasing order.
    pub fn elements(self) -> Elements {
        Elements(self.0)
    }

    /// Every subset of `self`, in increasing mask order.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Every `size`-element subset of `self`, in increasing mask order.
    pub fn subsets_of_size(self, size: usize) -> impl Iterator<Item = Subset> {
        let positions: Vec<usize> = self.elements().collect();
        let m = positions.len();
        KSubsets::new(m, size).map(move |local| {
            Subset::from_elements(Subset(local).elements().map(|i| positions[i]))
        })
    }
}

/// Gosper's hack over `k`-subsets of `{0, .., m-1}`.
struct KSubsets {
    limit: u64,
    next: Option<u64>,
}

impl KSubsets {
    fn new(m: usize, k: usize) -> Self {
        let next = if k > m {
            None
        } else {
            Some((1u64 << k) - 1)
        };
        KSubsets {
            limit: 1u64 << m,
            next,
        }
    }
}

impl Iterator for KSubsets {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        let cur = self.next?;
        if cur >= self.limit {
            self.next = None;
            return None;
        }
        self.next = if cur == 0 {
            None
        } else {
            let low = cur & cur.wrapping_neg();
            let ripple = cur + low;
            Some((((ripple ^ cur) >> 2) / low) | ripple)
        };
        Some(cur as u32)
    }
}

#[derive(Clone, Debug)]
pub struct Elements(u32);

impl Iterator for Elements {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

#[derive(Clone, Debug)]
pub struct Subsets {
    mask: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some((cur | !self.mask).wrapping_add(1) & self.mask)
        };
        Some(Subset(cur))
    }
}

impl BitOr for Subset {
    type Output = Subset;
    fn bitor(self, rhs: Subset) -> Subset {
        Subset(self.0 | rhs.0)
    }
}

impl BitAnd for Subset {
    type Output = Subset;
    fn bitand(self, rhs: Subset) -> Subset {
        Subset(self.0 & rhs.0)
    }
}

impl BitXor for Subset {
    type Output = Subset;
    fn bitxor(self, rhs: Subset) -> Subset {
        Subset(self.0 ^ rhs.0)
    }
}

/// Set difference.
impl Sub for Subset {
    type Output = Subset;
    fn sub(self, rhs: Subset) -> Subset {
        Subset(self.0 & !rhs.0)
    }
}

impl Not for Subset {
    type Output = Subset;
    fn not(self) -> Subset {
        Subset(!self.0)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.elements()).finish()
    }
}

/// An ordered list of pairwise distinct subsets.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SetFamily {
    members: Vec<Subset>,
}

impl SetFamily {
    /// Builds a family, dropping repeated members but keeping first-seen order.
    pub fn new(members: Vec<Subset>) -> Self {
        let mut seen = std::collections::HashSet::with_capacity(members.len());
        let members = members.into_iter().filter(|s| seen.insert(*s)).collect();
        SetFamily { members }
    }

    /// Sorted by size, then by mask value.
    pub fn sorted_by_size(mut members: Vec<Subset>) -> Self {
        members.sort_by_key(|s| (s.len(), s.0));
        members.dedup();
        SetFamily { members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.members.contains(&s)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Subset> {
        self.members.iter()
    }

    pub fn as_slice(&self) -> &[Subset] {
        &self.members
    }

    pub fn into_vec(self) -> Vec<Subset> {
        self.members
    }
}

impl<'a> IntoIterator for &'a SetFamily {
    type Item = &'a Subset;
    type IntoIter = std::slice::Iter<'a, Subset>;
    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

impl FromIterator<Subset> for SetFamily {
    fn from_iter<I: IntoIterator<Item = Subset>>(iter: I) -> Self {
        SetFamily::new(iter.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_enumerates_all_submasks_in_order() {
        let s = Subset(0b1011);
        let got: Vec<u32> = s.subsets().map(|x| x.0).collect();
        assert_eq!(got, vec![0, 1, 2, 3, 8, 9, 10, 11]);
        assert_eq!(Subset::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn subsets_of_size_matches_filter() {
        let s = Subset(0b1101_0110);
        for k in 0..=6 {
            let fast: Vec<Subset> = s.subsets_of_size(k).collect();
            let slow: Vec<Subset> = s.subsets().filter(|x| x.len() == k).collect();
            assert_eq!(fast, slow, "k = {k}");
        }
        assert_eq!(Subset::full(16).subsets_of_size(8).count(), 12870);
        assert_eq!(Subset::full(3).subsets_of_size(4).count(), 0);
    }

    #[test]
    fn elements_and_bounds() {
        let s = Subset::from_elements([5, 0, 3]);
        assert_eq!(s.elements().collect::<Vec<_>>(), vec![0, 3, 5]);
        assert_eq!(s.min_element(), Some(0));
        assert_eq!(s.max_element(), Some(5));
        assert!(s.fits(6));
        assert!(!s.fits(5));
        assert_eq!(format!("{s:?}"), "{0, 3, 5}");
    }

    #[test]
    fn family_deduplicates() {
        let f = SetFamily::new(vec![Subset(3), Subset(1), Subset(3)]);
        assert_eq!(f.as_slice(), &[Subset(3), Subset(1)]);
        let g = SetFamily::sorted_by_size(vec![Subset(3), Subset(4), Subset(1)]);
        assert_eq!(g.as_slice(), &[Subset(1), Subset(4), Subset(3)]);
    }
}

//! Ground-set subsets and signed subsets.
//!
//! Element sets are bitmasks over ground positions `0..n` (`n ≤ 64`),
//! which keeps circuit enumeration, minor derivation and isomorphism
//! search cheap. A [`SignedSet`] is a disjoint positive/negative pair;
//! signed circuits and cocircuits are stored one representative per
//! `{X, -X}` pair in canonical form (least support element positive).

/// Maximum number of ground-set positions representable in an [`ElemSet`].
pub const MAX_ELEMENTS: usize = 64;

/// A subset of ground positions `0..64`, as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ElemSet(u64);

impl ElemSet {
    /// The empty set.
    pub const EMPTY: ElemSet = ElemSet(0);

    /// The singleton `{i}`.
    pub fn singleton(i: usize) -> Self {
        assert!(i < MAX_ELEMENTS, "position {i} out of range");
        ElemSet(1 << i)
    }

    /// The full set `{0, …, n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_ELEMENTS, "ground set of {n} too large");
        if n == 64 {
            ElemSet(u64::MAX)
        } else {
            ElemSet((1u64 << n) - 1)
        }
    }

    /// Raw bits.
    pub fn bits(self) -> u64 {
        self.0
    }

    /// From raw bits.
    pub fn from_bits(bits: u64) -> Self {
        ElemSet(bits)
    }

    /// Membership test.
    pub fn contains(self, i: usize) -> bool {
        i < MAX_ELEMENTS && self.0 >> i & 1 == 1
    }

    /// This set with `i` added.
    pub fn with(self, i: usize) -> Self {
        assert!(i < MAX_ELEMENTS, "position {i} out of range");
        ElemSet(self.0 | 1 << i)
    }

    /// This set with `i` removed.
    pub fn without(self, i: usize) -> Self {
        ElemSet(self.0 & !(1u64.checked_shl(i as u32).unwrap_or(0)))
    }

    /// Number of elements.
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// True when empty.
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Subset test `self ⊆ other`.
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Disjointness test.
    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Least element, if any.
    pub fn min_element(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Iterate elements in ascending order.
    pub fn iter(self) -> ElemIter {
        ElemIter(self.0)
    }

    /// Elements as a sorted vector.
    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Parity of `|self ∩ other|`: true when odd.
    pub fn odd_overlap(self, other: Self) -> bool {
        (self.0 & other.0).count_ones() % 2 == 1
    }
}

/// Ascending iterator over the elements of an [`ElemSet`].
#[derive(Clone, Debug)]
pub struct ElemIter(u64);

impl Iterator for ElemIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for ElemIter {}

impl IntoIterator for ElemSet {
    type Item = usize;
    type IntoIter = ElemIter;

    fn into_iter(self) -> ElemIter {
        self.iter()
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = ElemSet::EMPTY;
        for i in iter {
            s = s.with(i);
        }
        s
    }
}

impl std::ops::BitOr for ElemSet {
    type Output = ElemSet;
    fn bitor(self, rhs: Self) -> Self {
        ElemSet(self.0 | rhs.0)
    }
}

impl std::ops::BitAnd for ElemSet {
    type Output = ElemSet;
    fn bitand(self, rhs: Self) -> Self {
        ElemSet(self.0 & rhs.0)
    }
}

impl std::ops::Sub for ElemSet {
    type Output = ElemSet;
    fn sub(self, rhs: Self) -> Self {
        ElemSet(self.0 & !rhs.0)
    }
}

impl std::fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// A signed subset: a pair of disjoint element sets.
///
/// Signed circuits and cocircuits come in `{X, -X}` pairs; family
/// enumeration stores the canonical representative, whose least support
/// element is positive.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedSet {
    pos: ElemSet,
    neg: ElemSet,
}

impl SignedSet {
    /// Build from disjoint positive and negative parts.
    pub fn new(pos: ElemSet, neg: ElemSet) -> Self {
        assert!(pos.is_disjoint(neg), "positive and negative parts overlap");
        SignedSet { pos, neg }
    }

    /// The positive part.
    pub fn positive(self) -> ElemSet {
        self.pos
    }

    /// The negative part.
    pub fn negative(self) -> ElemSet {
        self.neg
    }

    /// The support `X⁺ ∪ X⁻`.
    pub fn support(self) -> ElemSet {
        self.pos | self.neg
    }

    /// Support size.
    pub fn size(self) -> usize {
        self.support().len()
    }

    /// A signed set is directed when one sign class is empty.
    pub fn is_directed(self) -> bool {
        self.pos.is_empty() || self.neg.is_empty()
    }

    /// The negation `-X`.
    pub fn negate(self) -> Self {
        SignedSet {
            pos: self.neg,
            neg: self.pos,
        }
    }

    /// The canonical representative of `{X, -X}`: least support element
    /// positive. The empty signed set is its own representative.
    pub fn canonical(self) -> Self {
        match self.support().min_element() {
            Some(least) if self.neg.contains(least) => self.negate(),
            _ => self,
        }
    }

    /// Restriction away from `z`: `(X⁺ ∖ z, X⁻ ∖ z)`.
    pub fn minus(self, z: ElemSet) -> Self {
        SignedSet {
            pos: self.pos - z,
            neg: self.neg - z,
        }
    }

    /// Reorientation: membership of elements inside `s` swaps sign class.
    pub fn reorient(self, s: ElemSet) -> Self {
        SignedSet {
            pos: (self.pos - s) | (self.neg & s),
            neg: (self.neg - s) | (self.pos & s),
        }
    }
}

impl std::fmt::Debug for SignedSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(+{:?} -{:?})", self.pos, self.neg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elemset_basic_operations() {
        let s: ElemSet = [0usize, 3, 5].into_iter().collect();
        assert_eq!(s.len(), 3);
        assert!(s.contains(3));
        assert!(!s.contains(1));
        assert_eq!(s.min_element(), Some(0));
        assert_eq!(s.to_vec(), vec![0, 3, 5]);
        assert_eq!(s.without(3).to_vec(), vec![0, 5]);
        assert!(ElemSet::singleton(3).is_subset(s));
        assert!(!s.odd_overlap([3usize, 5, 7].into_iter().collect()));
        assert!(s.odd_overlap([3usize, 7].into_iter().collect()));
    }

    #[test]
    fn full_set_covers_edge_cases() {
        assert_eq!(ElemSet::full(0), ElemSet::EMPTY);
        assert_eq!(ElemSet::full(64).len(), 64);
        assert_eq!(ElemSet::full(10).len(), 10);
    }

    #[test]
    fn canonical_makes_least_element_positive() {
        let pos = ElemSet::singleton(4);
        let neg: ElemSet = [1usize, 2].into_iter().collect();
        let x = SignedSet::new(pos, neg);
        let c = x.canonical();
        assert!(c.positive().contains(1));
        assert_eq!(c, x.negate());
        assert_eq!(c.canonical(), c);
        // A directed set canonicalises to the all-positive orientation.
        let d = SignedSet::new(ElemSet::EMPTY, pos);
        assert_eq!(d.canonical().negative(), ElemSet::EMPTY);
    }

    #[test]
    fn reorient_swaps_only_inside_the_flip_set() {
        let x = SignedSet::new(
            [0usize, 2].into_iter().collect(),
            [1usize].into_iter().collect(),
        );
        let flipped = x.reorient([2usize, 1].into_iter().collect());
        assert_eq!(flipped.positive().to_vec(), vec![0, 1]);
        assert_eq!(flipped.negative().to_vec(), vec![2]);
        // Flipping everything is plain negation.
        assert_eq!(x.reorient(ElemSet::full(3)), x.negate());
        // Reorienting twice is the identity.
        let s: ElemSet = [0usize, 1].into_iter().collect();
        assert_eq!(x.reorient(s).reorient(s), x);
    }

    #[test]
    fn minus_restricts_both_sign_classes() {
        let x = SignedSet::new(
            [0usize, 2].into_iter().collect(),
            [1usize, 3].into_iter().collect(),
        );
        let y = x.minus([2usize, 3].into_iter().collect());
        assert_eq!(y.positive().to_vec(), vec![0]);
        assert_eq!(y.negative().to_vec(), vec![1]);
    }
}

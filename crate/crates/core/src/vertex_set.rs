//! Fixed-width vertex subsets.
//!
//! Vertices are numbered `1..=ambient` externally; bit `i - 1` of the mask
//! stores vertex `i`. Every set remembers the size of its ambient vertex set
//! so that operations mixing sets from different clutters are caught.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest ambient size a [`VertexSet`] can represent.
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet {
    ambient: u8,
    bits: u64,
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl VertexSet {
    pub fn empty(ambient: usize) -> Self {
        assert!(ambient <= MAX_VERTICES, "ambient size {ambient} exceeds {MAX_VERTICES}");
        VertexSet { ambient: ambient as u8, bits: 0 }
    }

    pub fn full(ambient: usize) -> Self {
        let mut s = Self::empty(ambient);
        s.bits = full_mask(ambient);
        s
    }

    /// Builds a set from 1-based vertex indices.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(ambient: usize, vertices: I) -> Result<Self> {
        if ambient > MAX_VERTICES {
            return Err(Error::TooManyVertices(ambient));
        }
        let mut s = Self::empty(ambient);
        for v in vertices {
            if v == 0 || v > ambient {
                return Err(Error::VertexOutOfRange { vertex: v, ambient });
            }
            s.bits |= 1 << (v - 1);
        }
        Ok(s)
    }

    /// Builds a set from a raw mask; bits above `ambient` must be clear.
    pub fn from_bits(ambient: usize, bits: u64) -> Self {
        assert!(ambient <= MAX_VERTICES);
        debug_assert_eq!(bits & !full_mask(ambient), 0, "mask has bits outside the ambient set");
        VertexSet { ambient: ambient as u8, bits }
    }

    pub fn singleton(ambient: usize, v: usize) -> Result<Self> {
        Self::from_vertices(ambient, [v])
    }

    #[inline]
    pub fn ambient_size(&self) -> usize {
        self.ambient as usize
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v >= 1 && v <= self.ambient as usize && self.bits & (1 << (v - 1)) != 0
    }

    pub fn insert(&mut self, v: usize) -> Result<()> {
        if v == 0 || v > self.ambient as usize {
            return Err(Error::VertexOutOfRange { vertex: v, ambient: self.ambient as usize });
        }
        self.bits |= 1 << (v - 1);
        Ok(())
    }

    pub fn with(mut self, v: usize) -> Self {
        self.bits |= 1 << (v - 1);
        self
    }

    pub fn without(mut self, v: usize) -> Self {
        self.bits &= !(1 << (v - 1));
        self
    }

    fn check(&self, other: &VertexSet) -> Result<()> {
        if self.ambient != other.ambient {
            Err(Error::AmbientMismatch { left: self.ambient as usize, right: other.ambient as usize })
        } else {
            Ok(())
        }
    }

    pub fn union(&self, other: &VertexSet) -> Result<VertexSet> {
        self.check(other)?;
        Ok(VertexSet { ambient: self.ambient, bits: self.bits | other.bits })
    }

    pub fn intersection(&self, other: &VertexSet) -> Result<VertexSet> {
        self.check(other)?;
        Ok(VertexSet { ambient: self.ambient, bits: self.bits & other.bits })
    }

    pub fn difference(&self, other: &VertexSet) -> Result<VertexSet> {
        self.check(other)?;
        Ok(VertexSet { ambient: self.ambient, bits: self.bits & !other.bits })
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet { ambient: self.ambient, bits: !self.bits & full_mask(self.ambient as usize) }
    }

    pub fn is_subset(&self, other: &VertexSet) -> Result<bool> {
        self.check(other)?;
        Ok(self.bits & !other.bits == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> Result<bool> {
        self.check(other)?;
        Ok(self.bits & other.bits == 0)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> Members {
        Members { bits: self.bits }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize + 1)
    }

    /// Same members viewed inside a larger ambient set.
    pub fn widen(&self, ambient: usize) -> VertexSet {
        assert!(ambient >= self.ambient as usize && ambient <= MAX_VERTICES);
        VertexSet { ambient: ambient as u8, bits: self.bits }
    }
}

/// Iterator over the 1-based members of a [`VertexSet`].
pub struct Members {
    bits: u64,
}

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let i = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(i + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.bits.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

impl IntoIterator for &VertexSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

/// Canonical order: by ambient size, then lexicographic on the sorted member
/// lists (so `{1,2} < {1,3} < {2}`).
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ambient.cmp(&other.ambient).then_with(|| {
            let mut a = self.iter();
            let mut b = other.iter();
            loop {
                match (a.next(), b.next()) {
                    (None, None) => return Ordering::Equal,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(_), None) => return Ordering::Greater,
                    (Some(x), Some(y)) if x != y => return x.cmp(&y),
                    _ => {}
                }
            }
        })
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}/{}", self.ambient)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "t{v}")?;
        }
        write!(f, "}}")
    }
}

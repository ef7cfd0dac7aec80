//! Vertex subsets of `[n]` packed into a machine word.

use std::cmp::Ordering;
use std::fmt;

/// Largest supported ground set.
pub const MAX_VERTICES: usize = 64;

/// A subset of `{0, …, n-1}` stored as a bit pattern.
///
/// Ordering is by cardinality first and then lexicographic on the increasing
/// vertex sequence, so `{0,3} < {1,2}` and `{0,1} < {0,2}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub const fn from_bits(bits: u64) -> Self {
        Face(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        Face(1u64 << v)
    }

    /// The whole ground set `[n]`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            Face(u64::MAX)
        } else {
            Face((1u64 << n) - 1)
        }
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        vs.into_iter().fold(Face::EMPTY, |f, v| f.with(v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Simplicial dimension, `|F| - 1`.
    pub fn dim(self) -> i32 {
        self.len() as i32 - 1
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & (1u64 << v) != 0
    }

    pub fn is_subset_of(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Face) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn with(self, v: usize) -> Face {
        Face(self.0 | (1u64 << v))
    }

    pub fn without(self, v: usize) -> Face {
        Face(self.0 & !(1u64 << v))
    }

    /// Vertices in increasing order.
    pub fn vertices(self) -> Vertices {
        Vertices(self.0)
    }

    /// All subsets of `self`, including `∅` and `self`.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Renders as `{1,2,5}` with 1-based labels.
    pub fn to_one_based(self) -> Vec<usize> {
        self.vertices().map(|v| v + 1).collect()
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            // within a fixed size, lexicographic on the sorted vertex list
            .then_with(|| other.0.reverse_bits().cmp(&self.0.reverse_bits()))
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Serialized as the sorted list of 1-based vertices.
impl serde::Serialize for Face {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_one_based().serialize(s)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.vertices().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        f.write_str("}")
    }
}

pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = Face;

    fn next(&mut self) -> Option<Face> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some((cur.wrapping_sub(self.mask)) & self.mask)
        };
        Some(Face(cur))
    }
}

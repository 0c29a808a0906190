//! Faces and vertex sets as 64-bit masks.
//!
//! A face is a finite set of vertex ids. Every complex in this crate lives on
//! at most [`MAX_VERTICES`] vertices, so a face is a single machine word and
//! set operations are single instructions.

use std::cmp::Ordering;
use std::fmt;

/// Hard upper bound on the number of vertices of any complex or ring.
pub const MAX_VERTICES: usize = 64;

/// A set of vertex ids. Ordered lexicographically by its increasing vertex
/// sequence, so `{0,1,5} < {0,2} < {1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(u64);

/// Vertex subsets share the representation of faces.
pub type VertexSet = Face;

impl Face {
    pub const EMPTY: Face = Face(0);

    pub const fn from_bits(bits: u64) -> Self {
        Face(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// Panics if a vertex id is `>= MAX_VERTICES`.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        let mut bits = 0u64;
        for v in vertices {
            assert!(v < MAX_VERTICES, "vertex id {v} out of range");
            bits |= 1 << v;
        }
        Face(bits)
    }

    /// The first `n` vertex ids.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            Face(u64::MAX)
        } else {
            Face((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        Face::from_vertices([v])
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// `|F| - 1`; the empty face has dimension -1.
    pub const fn dim(self) -> isize {
        self.len() as isize - 1
    }

    pub const fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub const fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub const fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub const fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn with(self, v: usize) -> Face {
        self.union(Face::singleton(v))
    }

    pub fn without(self, v: usize) -> Face {
        self.difference(Face::singleton(v))
    }

    /// Largest vertex id, if any.
    pub const fn max_vertex(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros() as usize)
        }
    }

    pub fn vertices(self) -> Vertices {
        Vertices(self.0)
    }

    /// All subsets of `self` with exactly `k` elements, in increasing mask order.
    pub fn subsets_of_size(self, k: usize) -> SubsetsOfSize {
        SubsetsOfSize::new(self, k)
    }

    /// The faces obtained by deleting one vertex.
    pub fn facets_of_boundary(self) -> impl Iterator<Item = Face> {
        self.vertices().map(move |v| self.without(v))
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.vertices().cmp(other.vertices())
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.vertices()).finish()
    }
}

impl FromIterator<usize> for Face {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Face::from_vertices(iter)
    }
}

/// Increasing iterator over the vertex ids of a face.
#[derive(Clone)]
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

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

/// Iterator over the `k`-subsets of a vertex set (Gosper's hack on the
/// compressed index space).
pub struct SubsetsOfSize {
    ground: Vec<usize>,
    current: Option<u64>,
}

impl SubsetsOfSize {
    fn new(ground: Face, k: usize) -> Self {
        let ground: Vec<usize> = ground.vertices().collect();
        let n = ground.len();
        let current = if k > n {
            None
        } else if k == 0 {
            Some(0)
        } else if k == 64 {
            Some(u64::MAX)
        } else {
            Some((1u64 << k) - 1)
        };
        SubsetsOfSize { ground, current }
    }
}

impl Iterator for SubsetsOfSize {
    type Item = Face;

    fn next(&mut self) -> Option<Face> {
        let c = self.current?;
        let mut bits = 0u64;
        let mut rest = c;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            bits |= 1 << self.ground[i];
            rest &= rest - 1;
        }
        self.current = if c == 0 {
            None
        } else {
            let lowest = c & c.wrapping_neg();
            let ripple = c.wrapping_add(lowest);
            if ripple == 0 {
                None
            } else {
                let next = (((ripple ^ c) >> 2) / lowest) | ripple;
                let n = self.ground.len();
                (n == 64 || next >> n == 0).then_some(next)
            }
        };
        Some(Face(bits))
    }
}

//! Boundary operators and reduced simplicial homology over GF(2).
//!
//! Everything is reduced: the empty face spans chain group `C_{-1}`, so the
//! complex `{∅}` has `dim H̃_{-1} = 1` and the void complex has no homology
//! at all.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::{Face, VertexSet};
use crate::gf2::{BitVector, EchelonBasis, GF2Matrix};

/// A GF(2) chain: a set of `d`-faces of a fixed complex, encoded over the
/// lexicographically ordered `d`-faces.
#[derive(Clone, PartialEq, Eq)]
pub struct Chain {
    complex: SimplicialComplex,
    dim: usize,
    basis: Vec<Face>,
    support: BitVector,
}

impl Chain {
    pub fn zero(complex: &SimplicialComplex, dim: usize) -> Chain {
        let basis = complex.faces_of_dim(dim);
        let support = BitVector::zeros(basis.len());
        Chain { complex: complex.clone(), dim, basis, support }
    }

    /// The sum of the given faces; each must be a `dim`-face of `complex`.
    pub fn from_faces<I: IntoIterator<Item = Face>>(
        complex: &SimplicialComplex,
        dim: usize,
        faces: I,
    ) -> Result<Chain> {
        let mut chain = Chain::zero(complex, dim);
        for f in faces {
            let i = chain.index_of(f).ok_or_else(|| {
                Error::Precondition(format!("{} is not a {dim}-face of {complex}", complex.format_face(f)))
            })?;
            chain.support.flip(i);
        }
        Ok(chain)
    }

    fn from_support(complex: &SimplicialComplex, dim: usize, basis: Vec<Face>, support: BitVector) -> Chain {
        Chain { complex: complex.clone(), dim, basis, support }
    }

    fn index_of(&self, f: Face) -> Option<usize> {
        self.basis.binary_search(&f).ok()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn support(&self) -> &BitVector {
        &self.support
    }

    pub fn faces(&self) -> Vec<Face> {
        self.support.iter_ones().map(|i| self.basis[i]).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_zero()
    }

    /// Symmetric difference. Both chains must live on the same complex and dimension.
    pub fn add(&self, other: &Chain) -> Result<Chain> {
        if self.dim != other.dim || self.complex != other.complex {
            return Err(Error::Precondition("chains live on different complexes".into()));
        }
        let mut support = self.support.clone();
        support.xor_assign(&other.support);
        Ok(Chain { support, ..self.clone() })
    }

    /// `∂` as a chain one dimension down (the augmentation for `d = 0`).
    pub fn boundary_is_zero(&self) -> bool {
        let m = boundary_matrix(&self.complex, self.dim);
        m.mul_vec(&self.support).expect("support length matches basis").is_zero()
    }
}

impl std::fmt::Debug for Chain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let faces: Vec<String> = self.faces().into_iter().map(|x| self.complex.format_face(x)).collect();
        write!(f, "Chain[{}]({})", self.dim, faces.join(" + "))
    }
}

/// `∂_d`: rows are the `(d-1)`-faces, columns the `d`-faces, both in
/// lexicographic order. For `d = 0` the single row is the augmentation.
pub fn boundary_matrix(complex: &SimplicialComplex, d: usize) -> GF2Matrix {
    let cols = complex.faces_of_dim(d);
    let rows = if d == 0 {
        if complex.is_void() {
            Vec::new()
        } else {
            vec![Face::EMPTY]
        }
    } else {
        complex.faces_of_dim(d - 1)
    };
    let row_index: HashMap<Face, usize> = rows.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    let mut m = GF2Matrix::zeros(rows.len(), cols.len());
    for (j, f) in cols.iter().enumerate() {
        for r in f.facets_of_boundary() {
            m.set(row_index[&r], j, true);
        }
    }
    m
}

/// Faces of a complex grouped by cardinality, each level sorted by mask so
/// that sub-levels restricted to a vertex set can be indexed by binary search.
#[derive(Clone, Debug)]
pub(crate) struct FaceLevels {
    /// `levels[k]` holds the faces with `k` vertices; `levels[0] = [∅]`.
    levels: Vec<Vec<Face>>,
}

impl FaceLevels {
    pub fn new(complex: &SimplicialComplex) -> Self {
        let Some(top) = complex.dim() else {
            return FaceLevels { levels: Vec::new() };
        };
        let mut levels = vec![vec![Face::EMPTY]];
        for d in 0..=top {
            let mut faces = complex.faces_of_dim(d as usize);
            faces.sort_unstable_by_key(|f| f.bits());
            levels.push(faces);
        }
        FaceLevels { levels }
    }

    /// Reduced Betti numbers `[H̃_{-1}, H̃_0, ...]` of the subcomplex induced on `s`.
    pub fn induced_betti(&self, s: VertexSet) -> Vec<usize> {
        let restricted: Vec<Vec<Face>> = self
            .levels
            .iter()
            .map(|l| l.iter().copied().filter(|f| f.is_subset(s)).collect::<Vec<_>>())
            .take_while(|l| !l.is_empty())
            .collect();
        betti_of_levels(&restricted)
    }
}

/// Reduced Betti numbers from faces grouped by size (each level sorted by mask).
fn betti_of_levels(levels: &[Vec<Face>]) -> Vec<usize> {
    let k_max = levels.len();
    if k_max == 0 {
        return Vec::new();
    }
    // ranks[k] = rank of the boundary from size-k faces to size-(k-1) faces.
    let mut ranks = vec![0usize; k_max + 1];
    for k in 1..k_max {
        let lower = &levels[k - 1];
        let mut basis = EchelonBasis::new(lower.len());
        for f in &levels[k] {
            let col = BitVector::from_indices(
                lower.len(),
                f.facets_of_boundary()
                    .map(|r| lower.binary_search_by_key(&r.bits(), |x| x.bits()).expect("closed under subsets")),
            );
            basis.insert(col);
        }
        ranks[k] = basis.rank();
    }
    (0..k_max).map(|k| levels[k].len() - ranks[k] - ranks[k + 1]).collect()
}

/// Reduced Betti numbers `[H̃_{-1}, H̃_0, ..., H̃_dim]`; empty for the void complex.
pub fn reduced_betti_numbers(complex: &SimplicialComplex) -> Vec<usize> {
    FaceLevels::new(complex).induced_betti(complex.ground_set())
}

/// `dim H̃_i` over GF(2), for `i >= -1`.
pub fn reduced_homology_dim(complex: &SimplicialComplex, i: isize) -> usize {
    assert!(i >= -1, "reduced homology starts in degree -1");
    reduced_betti_numbers(complex).get((i + 1) as usize).copied().unwrap_or(0)
}

/// A nonzero reduced homology group of an induced subcomplex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyWitness {
    #[serde(serialize_with = "serialize_vertex_set")]
    pub subset: VertexSet,
    pub index: isize,
    pub dim: usize,
}

pub(crate) fn serialize_vertex_set<S: serde::Serializer>(
    s: &VertexSet,
    ser: S,
) -> std::result::Result<S::Ok, S::Error> {
    ser.collect_seq(s.vertices())
}

/// Scans the nonempty vertex subsets `S` (ascending mask order) for the
/// first one whose induced subcomplex has a nonzero `H̃_i` with `i` accepted
/// by `relevant`. Runs in parallel; the result does not depend on scheduling.
pub fn first_nonvanishing_induced<F>(complex: &SimplicialComplex, relevant: F) -> Option<HomologyWitness>
where
    F: Fn(isize) -> bool + Sync,
{
    let levels = FaceLevels::new(complex);
    let n = complex.n_vertices();
    (1u64..1u64 << n).into_par_iter().find_map_first(|bits| {
        let s = Face::from_bits(bits);
        let betti = levels.induced_betti(s);
        betti
            .iter()
            .enumerate()
            .map(|(k, &b)| (k as isize - 1, b))
            .find(|&(i, b)| b != 0 && relevant(i))
            .map(|(index, dim)| HomologyWitness { subset: s, index, dim })
    })
}

/// Whether the `d`-cycle `c` bounds in `complex`: returns a `(d+1)`-chain
/// with boundary `c`, or `None`. Errors when `c` is not a cycle or uses
/// faces outside `complex`.
pub fn is_boundary(complex: &SimplicialComplex, c: &Chain) -> Result<Option<Chain>> {
    let c = if c.complex() == complex { c.clone() } else { Chain::from_faces(complex, c.dim(), c.faces())? };
    if !c.boundary_is_zero() {
        return Err(Error::NotACycle);
    }
    let up = boundary_matrix(complex, c.dim() + 1);
    let basis = complex.faces_of_dim(c.dim() + 1);
    if basis.is_empty() {
        return Ok(c.is_zero().then(|| Chain::zero(complex, c.dim() + 1)));
    }
    Ok(up.solve(c.support())?.map(|x| Chain::from_support(complex, c.dim() + 1, basis, x)))
}

//! Simplicial complexes in facet-list form and the skeleton / closure /
//! complement calculus on them.
//!
//! A complex lives on a labelled ground set of `n_vertices` vertices with
//! dense ids `0..n`. Not every ground vertex needs to be a face: the
//! Stanley-Reisner complex of an ideal containing a variable keeps that
//! variable in its ground set.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::face::{Face, VertexSet, MAX_VERTICES};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    labels: Arc<[String]>,
    /// Sorted lexicographically; an antichain under inclusion.
    facets: Vec<Face>,
}

/// `x0, x1, ..., x{n-1}`.
pub fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}

/// Keeps the inclusion-maximal faces, sorted lexicographically.
pub(crate) fn maximal_faces(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_unstable_by_key(|f| std::cmp::Reverse(f.len()));
    faces.dedup();
    let mut kept: Vec<Face> = Vec::with_capacity(faces.len());
    for f in faces {
        if !kept.iter().any(|k| f.is_subset(*k)) {
            kept.push(f);
        }
    }
    kept.sort();
    kept
}

impl SimplicialComplex {
    /// A complex on the given labelled ground set generated by `faces`
    /// (non-maximal faces are absorbed).
    pub fn new<I: IntoIterator<Item = Face>>(labels: Vec<String>, faces: I) -> Result<Self> {
        if labels.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices { got: labels.len(), max: MAX_VERTICES });
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let ground = Face::full(labels.len());
        let faces: Vec<Face> = faces.into_iter().collect();
        if let Some(bad) = faces.iter().find(|f| !f.is_subset(ground)) {
            let vertex = bad.difference(ground).vertices().next().unwrap();
            return Err(Error::VertexOutOfRange { vertex, n_vertices: labels.len() });
        }
        Ok(SimplicialComplex { labels: labels.into(), facets: maximal_faces(faces) })
    }

    /// Convenience constructor with labels `x0..x{n-1}`.
    pub fn from_facets<I: IntoIterator<Item = Face>>(n_vertices: usize, faces: I) -> Result<Self> {
        SimplicialComplex::new(default_labels(n_vertices), faces)
    }

    /// The complex with no faces at all.
    pub fn void(labels: Vec<String>) -> Result<Self> {
        SimplicialComplex::new(labels, [])
    }

    /// The complex `{∅}` whose only face is the empty set.
    pub fn empty(labels: Vec<String>) -> Result<Self> {
        SimplicialComplex::new(labels, [Face::EMPTY])
    }

    /// The full simplex on the ground set.
    pub fn simplex(labels: Vec<String>) -> Result<Self> {
        let n = labels.len();
        SimplicialComplex::new(labels, [Face::full(n)])
    }

    /// Same ground set, new faces. Faces must lie in the ground set.
    pub(crate) fn with_faces<I: IntoIterator<Item = Face>>(&self, faces: I) -> SimplicialComplex {
        let facets = maximal_faces(faces.into_iter().collect());
        debug_assert!(facets.iter().all(|f| f.is_subset(self.ground_set())));
        SimplicialComplex { labels: self.labels.clone(), facets }
    }

    /// A copy whose ground set has extra labelled vertices appended.
    pub fn extend_ground_set(&self, extra: &[String]) -> Result<SimplicialComplex> {
        let mut labels: Vec<String> = self.labels.to_vec();
        labels.extend(extra.iter().cloned());
        SimplicialComplex::new(labels, self.facets.iter().copied())
    }

    pub fn n_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    /// Index of a vertex by label.
    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn ground_set(&self) -> VertexSet {
        Face::full(self.n_vertices())
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension, or `None` for the void complex. `{∅}` has dimension -1.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.dim()).max()
    }

    /// Vertices that are faces.
    pub fn vertex_support(&self) -> VertexSet {
        self.facets.iter().fold(Face::EMPTY, |acc, f| acc.union(*f))
    }

    /// `Some(d)` if the complex is nonempty and every facet has dimension `d >= 0`.
    pub fn pure_dimension(&self) -> Option<usize> {
        let first = self.facets.first()?.dim();
        (first >= 0 && self.facets.iter().all(|f| f.dim() == first)).then_some(first as usize)
    }

    fn require_pure(&self, d: usize) -> Result<()> {
        if self.facets.iter().all(|f| f.dim() == d as isize) {
            Ok(())
        } else {
            Err(Error::NotPure { expected: d })
        }
    }

    pub fn contains(&self, face: Face) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    /// The `d`-dimensional faces, sorted lexicographically.
    pub fn faces_of_dim(&self, d: usize) -> Vec<Face> {
        let mut set = HashSet::new();
        for f in &self.facets {
            if f.len() > d {
                set.extend(f.subsets_of_size(d + 1));
            }
        }
        let mut faces: Vec<Face> = set.into_iter().collect();
        faces.sort();
        faces
    }

    /// Number of faces in each dimension `-1..=dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        let Some(top) = self.dim() else { return Vec::new() };
        std::iter::once(1).chain((0..=top).map(|d| self.faces_of_dim(d as usize).len())).collect()
    }

    /// The complex generated by the `d`-faces.
    pub fn pure_skeleton(&self, d: usize) -> Result<SimplicialComplex> {
        let faces = self.faces_of_dim(d);
        if faces.is_empty() {
            return Err(Error::EmptySkeleton { d, dim: self.dim().unwrap_or(-2) });
        }
        Ok(SimplicialComplex { labels: self.labels.clone(), facets: faces })
    }

    /// The `(d+1)`-subsets of the ground set that are not faces.
    pub fn d_complement(&self, d: usize) -> SimplicialComplex {
        let faces: Vec<Face> = self.ground_set().subsets_of_size(d + 1).filter(|f| !self.contains(*f)).collect();
        SimplicialComplex { labels: self.labels.clone(), facets: maximal_faces(faces) }
    }

    /// Faces contained in `s`, on the same ground set.
    pub fn induced(&self, s: VertexSet) -> SimplicialComplex {
        self.with_faces(self.facets.iter().map(|f| f.intersection(s)))
    }

    /// Whether every `(d+1)`-subset of `s` is a face.
    pub fn is_d_complete(&self, d: usize, s: VertexSet) -> bool {
        s.subsets_of_size(d + 1).all(|f| self.contains(f))
    }

    /// The `d`-closure of a complex whose facets all have dimension `d`: every
    /// set of at most `d` ground vertices is a face, the `d`-faces are kept,
    /// and a larger set is a face exactly when all its `(d+1)`-subsets are.
    pub fn d_closure(&self, d: usize) -> Result<SimplicialComplex> {
        self.require_pure(d)?;
        let ground = self.ground_set();
        let mut facets = Vec::new();

        // Faces of size <= d: the d-subsets not covered by a d-face are maximal.
        if ground.len() <= d {
            facets.push(ground);
        } else {
            let covered: HashSet<Face> = self.facets.iter().flat_map(|f| f.facets_of_boundary()).collect();
            facets.extend(ground.subsets_of_size(d).filter(|s| !covered.contains(s)));
        }

        // Grow levels of size d+1, d+2, ... by adding a vertex above the current maximum.
        let mut level: HashSet<Face> = self.facets.iter().copied().collect();
        while !level.is_empty() {
            let mut next: HashSet<Face> = HashSet::new();
            for &f in &level {
                let top = f.max_vertex().map_or(0, |m| m + 1);
                for v in (top..self.n_vertices()).filter(|&v| ground.contains(v)) {
                    let g = f.with(v);
                    if g.facets_of_boundary().all(|b| b == f || level.contains(&b)) {
                        next.insert(g);
                    }
                }
            }
            for &f in &level {
                let extendable = ground.difference(f).vertices().any(|v| next.contains(&f.with(v)));
                if !extendable {
                    facets.push(f);
                }
            }
            level = next;
        }
        Ok(SimplicialComplex { labels: self.labels.clone(), facets: maximal_faces(facets) })
    }

    /// Components of a pure `d`-complex under "share a `(d-1)`-face".
    pub fn path_components(&self) -> Result<Vec<SimplicialComplex>> {
        let d = self.pure_dimension().ok_or(Error::NotPure { expected: self.dim().unwrap_or(0).max(0) as usize })?;
        Ok(path_components_of(&self.facets, d).into_iter().map(|faces| self.with_faces(faces)).collect())
    }

    /// Looks up a face by its labels: `"125"` when every label is a single
    /// character, otherwise comma- or space-separated (`"x0,x3"`).
    pub fn face(&self, spec: &str) -> Option<Face> {
        let tokens: Vec<String> = if spec.contains([',', ' ']) {
            spec.split([',', ' ']).filter(|t| !t.is_empty()).map(str::to_string).collect()
        } else if self.labels.iter().all(|l| l.chars().count() == 1) {
            spec.chars().map(String::from).collect()
        } else {
            vec![spec.to_string()]
        };
        tokens.iter().map(|t| self.vertex(t)).collect::<Option<Vec<_>>>().map(Face::from_vertices)
    }

    pub fn face_labels(&self, face: Face) -> Vec<String> {
        face.vertices().map(|v| self.labels[v].clone()).collect()
    }

    /// Compact rendering: `abc` when all labels are one character, else `{x0,x1}`.
    pub fn format_face(&self, face: Face) -> String {
        if face.is_empty() {
            return "{}".to_string();
        }
        if self.labels.iter().all(|l| l.chars().count() == 1) {
            face.vertices().map(|v| self.labels[v].as_str()).collect()
        } else {
            format!("{{{}}}", self.face_labels(face).join(","))
        }
    }
}

/// Union-find over `d`-faces joined through shared `(d-1)`-faces. Returns
/// the components as sorted face lists, in lexicographic order.
pub(crate) fn path_components_of(faces: &[Face], d: usize) -> Vec<Vec<Face>> {
    let mut parent: Vec<usize> = (0..faces.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    if d > 0 {
        let mut by_ridge: HashMap<Face, usize> = HashMap::new();
        for (i, f) in faces.iter().enumerate() {
            for ridge in f.facets_of_boundary() {
                match by_ridge.get(&ridge) {
                    Some(&j) => {
                        let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                        parent[a] = b;
                    }
                    None => {
                        by_ridge.insert(ridge, i);
                    }
                }
            }
        }
    } else {
        // 0-faces share the empty face.
        for i in 1..faces.len() {
            let (a, b) = (find(&mut parent, i), find(&mut parent, 0));
            parent[a] = b;
        }
    }
    let mut groups: HashMap<usize, Vec<Face>> = HashMap::new();
    for (i, &f) in faces.iter().enumerate() {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(f);
    }
    let mut out: Vec<Vec<Face>> = groups
        .into_values()
        .map(|mut g| {
            g.sort();
            g
        })
        .collect();
    out.sort();
    out
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            return f.write_str("<void>");
        }
        let parts: Vec<String> = self.facets.iter().map(|&x| self.format_face(x)).collect();
        write!(f, "<{}>", parts.join(", "))
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} on {} vertices", self.n_vertices())
    }
}

impl Serialize for SimplicialComplex {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let facets: Vec<Vec<String>> = self.facets.iter().map(|&f| self.face_labels(f)).collect();
        let mut s = serializer.serialize_struct("SimplicialComplex", 2)?;
        s.serialize_field("vertices", &self.labels[..])?;
        s.serialize_field("facets", &facets)?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn f(v: &[usize]) -> Face {
        Face::from_vertices(v.iter().copied())
    }

    fn letters(n: usize) -> Vec<String> {
        (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
    }

    #[test]
    fn faces_of_dim_examples() {
        let tri = SimplicialComplex::from_facets(4, [f(&[1, 2, 3])]).unwrap();
        assert_eq!(tri.faces_of_dim(1), vec![f(&[1, 2]), f(&[1, 3]), f(&[2, 3])]);
        let g = SimplicialComplex::from_facets(5, [f(&[1, 2, 3]), f(&[3, 4])]).unwrap();
        assert_eq!(g.faces_of_dim(0), vec![f(&[1]), f(&[2]), f(&[3]), f(&[4])]);
        assert_eq!(catalog::ex216().faces_of_dim(2).len(), 18);
        assert!(tri.faces_of_dim(5).is_empty());
    }

    #[test]
    fn facets_form_an_antichain() {
        let g = SimplicialComplex::from_facets(4, [f(&[0, 1]), f(&[0, 1, 2]), f(&[1]), f(&[3])]).unwrap();
        assert_eq!(g.facets(), &[f(&[0, 1, 2]), f(&[3])]);
    }

    #[test]
    fn pure_skeleton_examples() {
        let simplex = SimplicialComplex::from_facets(5, [f(&[1, 2, 3, 4])]).unwrap();
        let sk = simplex.pure_skeleton(2).unwrap();
        assert_eq!(sk.facets(), &[f(&[1, 2, 3]), f(&[1, 2, 4]), f(&[1, 3, 4]), f(&[2, 3, 4])]);
        let edges = SimplicialComplex::from_facets(5, [f(&[1, 2]), f(&[3, 4])]).unwrap();
        assert_eq!(edges.pure_skeleton(0).unwrap().facets().len(), 4);
        assert_eq!(edges.pure_skeleton(2), Err(Error::EmptySkeleton { d: 2, dim: 1 }));
    }

    #[test]
    fn fig5_skeleton_of_closure() {
        let closure = catalog::fig5_closure();
        let sk = closure.pure_skeleton(2).unwrap();
        assert_eq!(sk.to_string(), "<abc, abd, acd, bcd, bce, cde>");
    }

    #[test]
    fn d_complement_examples() {
        let full = SimplicialComplex::from_facets(4, Face::full(4).subsets_of_size(3)).unwrap();
        assert!(full.d_complement(2).is_void());
        let comp = catalog::ex216().d_complement(2);
        assert_eq!(comp.facets(), &[f(&[0, 1, 2]), f(&[3, 4, 5])]);
        let path = SimplicialComplex::new(letters(3), [f(&[0, 1]), f(&[1, 2])]).unwrap();
        assert_eq!(path.d_complement(1).facets(), &[f(&[0, 2])]);
    }

    #[test]
    fn induced_subcomplex_examples() {
        let g = SimplicialComplex::from_facets(5, [f(&[1, 2, 3]), f(&[3, 4])]).unwrap();
        assert_eq!(g.induced(f(&[1, 2, 3])).facets(), &[f(&[1, 2, 3])]);
        assert_eq!(g.induced(f(&[1, 4])).facets(), &[f(&[1]), f(&[4])]);
        let octa = catalog::octahedron();
        let square = octa.induced(octa.face("1234").unwrap());
        assert_eq!(square.to_string(), "<12, 14, 23, 34>");
        // Nothing of a nonvoid complex survives but the empty face.
        assert_eq!(g.induced(Face::EMPTY).facets(), &[Face::EMPTY]);
        assert_eq!(g.induced(g.ground_set()), g);
    }

    #[test]
    fn closure_of_fig5() {
        let gamma = catalog::fig5();
        assert_eq!(gamma.d_closure(2).unwrap().to_string(), "<abcd, ae, bce, cde>");
    }

    #[test]
    fn closure_fills_simplex_boundary() {
        let triangle = SimplicialComplex::from_facets(3, [f(&[0, 1]), f(&[1, 2]), f(&[0, 2])]).unwrap();
        assert_eq!(triangle.d_closure(1).unwrap().facets(), &[f(&[0, 1, 2])]);
    }

    #[test]
    fn closure_of_ex216_has_nine_tetrahedra() {
        let closure = catalog::ex216().d_closure(2).unwrap();
        assert_eq!(closure.faces_of_dim(3).len(), 9);
        assert!(closure.faces_of_dim(4).is_empty());
        assert_eq!(closure.dim(), Some(3));
    }

    #[test]
    fn closure_requires_purity() {
        let g = SimplicialComplex::from_facets(4, [f(&[0, 1, 2]), f(&[2, 3])]).unwrap();
        assert_eq!(g.d_closure(2), Err(Error::NotPure { expected: 2 }));
    }

    #[test]
    fn path_component_examples() {
        let l = letters(5);
        let joined = SimplicialComplex::new(l.clone(), [f(&[0, 1, 2]), f(&[1, 2, 3])]).unwrap();
        assert_eq!(joined.path_components().unwrap().len(), 1);
        let apart = SimplicialComplex::new(l, [f(&[0, 1, 2]), f(&[2, 3, 4])]).unwrap();
        assert_eq!(apart.path_components().unwrap().len(), 2);
        assert_eq!(catalog::tetrahedron().path_components().unwrap().len(), 1);
    }

    #[test]
    fn completeness_examples() {
        let tetra = catalog::tetrahedron();
        assert!(tetra.is_d_complete(2, tetra.vertex_support()));
        let octa = catalog::octahedron();
        assert!(!octa.is_d_complete(2, octa.vertex_support()));
        assert!(!octa.contains(octa.face("135").unwrap()));
        assert!(octa.is_d_complete(0, octa.vertex_support()));
    }

    #[test]
    fn void_and_empty_are_different() {
        let void = SimplicialComplex::void(default_labels(2)).unwrap();
        let empty = SimplicialComplex::empty(default_labels(2)).unwrap();
        assert_ne!(void, empty);
        assert_eq!(void.dim(), None);
        assert_eq!(empty.dim(), Some(-1));
    }

    #[test]
    fn rejects_out_of_range_and_duplicate_labels() {
        assert_eq!(
            SimplicialComplex::from_facets(3, [f(&[0, 5])]),
            Err(Error::VertexOutOfRange { vertex: 5, n_vertices: 3 })
        );
        assert!(matches!(SimplicialComplex::new(vec!["a".into(), "a".into()], []), Err(Error::DuplicateLabel(_))));
    }
}

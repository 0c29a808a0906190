//! Named instances used by the reproduction harness and the tests.

use crate::complex::{default_labels, SimplicialComplex};
use crate::face::Face;
use crate::ideal::MonomialIdeal;

fn labelled(labels: &str, facets: &[&str]) -> SimplicialComplex {
    let labels: Vec<String> = labels.chars().map(String::from).collect();
    let faces: Vec<Face> = facets
        .iter()
        .map(|spec| Face::from_vertices(spec.chars().map(|c| labels.iter().position(|l| l.starts_with(c)).unwrap())))
        .collect();
    SimplicialComplex::new(labels, faces).expect("catalog complexes are well formed")
}

/// Hollow tetrahedron on vertices 1..4.
pub fn tetrahedron() -> SimplicialComplex {
    labelled("1234", &["123", "124", "134", "234"])
}

/// Solid tetrahedron on vertices 1..4.
pub fn solid_tetrahedron() -> SimplicialComplex {
    labelled("1234", &["1234"])
}

/// Hollow triangle on vertices 1..3 with a spare fourth vertex (a cone point).
pub fn hollow_triangle() -> SimplicialComplex {
    labelled("1234", &["12", "13", "23"])
}

/// Octahedron boundary: equator 1-2-3-4, poles 5 and 6.
pub fn octahedron() -> SimplicialComplex {
    labelled("123456", &["125", "235", "345", "145", "126", "236", "346", "146"])
}

/// The octahedron with the two triangles on the equatorial diagonal 13.
pub fn octahedron_chorded() -> SimplicialComplex {
    labelled("123456", &["125", "235", "345", "145", "126", "236", "346", "146", "123", "134"])
}

/// Six-vertex triangulation of the real projective plane.
pub fn rp2() -> SimplicialComplex {
    labelled("123456", &["124", "125", "134", "136", "156", "235", "236", "246", "345", "456"])
}

/// The pure 2-complex whose 2-closure is `<abcd, bce, cde, ae>`.
pub fn fig5() -> SimplicialComplex {
    labelled("abcde", &["abc", "abd", "acd", "bcd", "bce", "cde"])
}

pub fn fig5_closure() -> SimplicialComplex {
    labelled("abcde", &["abcd", "bce", "cde", "ae"])
}

/// All 3-subsets of `{x0..x5}` except `{x0,x1,x2}` and `{x3,x4,x5}`.
pub fn ex216() -> SimplicialComplex {
    let missing = [Face::from_vertices([0, 1, 2]), Face::from_vertices([3, 4, 5])];
    let faces = Face::full(6).subsets_of_size(3).filter(|f| !missing.contains(f));
    SimplicialComplex::new(default_labels(6), faces).unwrap()
}

/// `(x0 x1 x2, x3 x4 x5)` in six variables.
pub fn ex216_ideal() -> MonomialIdeal {
    MonomialIdeal::new(default_labels(6), [Face::from_vertices([0, 1, 2]), Face::from_vertices([3, 4, 5])]).unwrap()
}

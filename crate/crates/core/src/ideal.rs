//! Square-free monomial ideals and their two complexes: the Stanley-Reisner
//! complex (faces are the monomials outside the ideal) and the facet complex
//! (facets are the generators).

use std::fmt;
use std::sync::Arc;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::complex::{default_labels, SimplicialComplex};
use crate::error::{Error, Result};
use crate::face::{Face, MAX_VERTICES};

/// A square-free monomial ideal given by its minimal generators. Each
/// generator is the support of a monomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    labels: Arc<[String]>,
    /// Sorted lexicographically; an antichain of nonempty faces.
    generators: Vec<Face>,
}

/// Inclusion-minimal members, sorted lexicographically.
fn minimal_sets(mut sets: Vec<Face>) -> Vec<Face> {
    sets.sort_unstable_by_key(|s| s.len());
    sets.dedup();
    let mut kept: Vec<Face> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// Minimal transversals (hitting sets) of a hypergraph, by Berge's
/// incremental construction.
pub(crate) fn minimal_transversals(edges: &[Face]) -> Vec<Face> {
    let mut edges = edges.to_vec();
    edges.sort_by_key(|e| e.len());
    let mut transversals = vec![Face::EMPTY];
    for e in edges {
        let mut next = Vec::new();
        for t in transversals {
            if !t.intersection(e).is_empty() {
                next.push(t);
            } else {
                next.extend(e.vertices().map(|v| t.with(v)));
            }
        }
        transversals = minimal_sets(next);
    }
    transversals
}

/// Inclusion-minimal subsets of the ground set that are not faces.
pub fn minimal_nonfaces(complex: &SimplicialComplex) -> Vec<Face> {
    let ground = complex.ground_set();
    let complements: Vec<Face> = complex.facets().iter().map(|f| ground.difference(*f)).collect();
    minimal_transversals(&complements)
}

impl MonomialIdeal {
    /// The ideal generated by the given supports; redundant generators are
    /// dropped. The empty support (the monomial 1) is rejected.
    pub fn new<I: IntoIterator<Item = Face>>(labels: Vec<String>, generators: I) -> Result<Self> {
        if labels.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices { got: labels.len(), max: MAX_VERTICES });
        }
        let ground = Face::full(labels.len());
        let generators: Vec<Face> = generators.into_iter().collect();
        if generators.iter().any(|g| g.is_empty()) {
            return Err(Error::UnitIdeal);
        }
        if let Some(bad) = generators.iter().find(|g| !g.is_subset(ground)) {
            let vertex = bad.difference(ground).vertices().next().unwrap();
            return Err(Error::VertexOutOfRange { vertex, n_vertices: labels.len() });
        }
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(MonomialIdeal { labels: labels.into(), generators: minimal_sets(generators) })
    }

    /// Generators over variables `x0..x{n-1}`.
    pub fn from_generators<I: IntoIterator<Item = Face>>(n_variables: usize, generators: I) -> Result<Self> {
        MonomialIdeal::new(default_labels(n_variables), generators)
    }

    pub fn n_variables(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn generators(&self) -> &[Face] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// The common degree of the generators; `None` for the zero ideal.
    pub fn generation_degree(&self) -> Result<Option<usize>> {
        let low = self.generators.iter().map(|g| g.len()).min();
        let high = self.generators.iter().map(|g| g.len()).max();
        match (low, high) {
            (Some(low), Some(high)) if low != high => Err(Error::MixedDegree { low, high }),
            (low, _) => Ok(low),
        }
    }

    /// `N(I)`: faces are the supports of monomials outside the ideal. The
    /// ground set is every variable of the ring.
    pub fn stanley_reisner_complex(&self) -> SimplicialComplex {
        let ground = Face::full(self.n_variables());
        let facets = minimal_transversals(&self.generators).into_iter().map(|t| ground.difference(t));
        SimplicialComplex::new(self.labels.to_vec(), facets).expect("labels already validated")
    }

    /// `F(I)`: the complex whose facets are the generators.
    pub fn facet_complex(&self) -> SimplicialComplex {
        SimplicialComplex::new(self.labels.to_vec(), self.generators.iter().copied()).expect("labels already validated")
    }

    /// The Stanley-Reisner ideal: generated by the minimal non-faces. The
    /// void complex yields the unit ideal, which is an error.
    pub fn stanley_reisner_ideal(complex: &SimplicialComplex) -> Result<MonomialIdeal> {
        MonomialIdeal::new(complex.labels().to_vec(), minimal_nonfaces(complex))
    }

    /// The facet ideal: generated by the facets.
    pub fn facet_ideal(complex: &SimplicialComplex) -> Result<MonomialIdeal> {
        MonomialIdeal::new(complex.labels().to_vec(), complex.facets().iter().copied())
    }

    pub fn format_monomial(&self, g: Face) -> String {
        g.vertices().map(|v| self.labels[v].as_str()).collect::<Vec<_>>().join("*")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.generators.iter().map(|&g| self.format_monomial(g)).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {} variables", self.n_variables())
    }
}

impl Serialize for MonomialIdeal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let generators: Vec<Vec<&str>> =
            self.generators.iter().map(|g| g.vertices().map(|v| self.labels[v].as_str()).collect()).collect();
        let mut s = serializer.serialize_struct("MonomialIdeal", 2)?;
        s.serialize_field("variables", &self.labels[..])?;
        s.serialize_field("generators", &generators)?;
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

    fn c4_edge_ideal() -> MonomialIdeal {
        MonomialIdeal::from_generators(4, [f(&[0, 1]), f(&[1, 2]), f(&[2, 3]), f(&[0, 3])]).unwrap()
    }

    #[test]
    fn principal_ideal_gives_two_points() {
        let i = MonomialIdeal::from_generators(2, [f(&[0, 1])]).unwrap();
        let n = i.stanley_reisner_complex();
        assert_eq!(n.facets(), &[f(&[0]), f(&[1])]);
        assert_eq!(MonomialIdeal::stanley_reisner_ideal(&n).unwrap(), i);
    }

    #[test]
    fn ex216_stanley_reisner_complex_is_the_closure() {
        let n = catalog::ex216_ideal().stanley_reisner_complex();
        assert_eq!(n, catalog::ex216().d_closure(2).unwrap());
        assert_eq!(minimal_nonfaces(&n), vec![f(&[0, 1, 2]), f(&[3, 4, 5])]);
    }

    #[test]
    fn c4_edge_ideal_complex_is_two_diagonals() {
        assert_eq!(c4_edge_ideal().stanley_reisner_complex().facets(), &[f(&[0, 2]), f(&[1, 3])]);
    }

    #[test]
    fn minimal_nonfaces_examples() {
        let simplex = SimplicialComplex::simplex(default_labels(4)).unwrap();
        assert!(minimal_nonfaces(&simplex).is_empty());
        let hollow = SimplicialComplex::from_facets(3, [f(&[0, 1]), f(&[1, 2]), f(&[0, 2])]).unwrap();
        assert_eq!(minimal_nonfaces(&hollow), vec![f(&[0, 1, 2])]);
        let void = SimplicialComplex::void(default_labels(2)).unwrap();
        assert_eq!(minimal_nonfaces(&void), vec![Face::EMPTY]);
        assert_eq!(MonomialIdeal::stanley_reisner_ideal(&void), Err(Error::UnitIdeal));
    }

    #[test]
    fn unused_ring_variables_are_cone_points() {
        let i = MonomialIdeal::from_generators(4, [f(&[0, 1])]).unwrap();
        let n = i.stanley_reisner_complex();
        assert_eq!(n.facets(), &[f(&[0, 2, 3]), f(&[1, 2, 3])]);
    }

    #[test]
    fn facet_complex_round_trip() {
        let i = MonomialIdeal::from_generators(4, [f(&[1, 2, 3])]).unwrap();
        assert_eq!(i.facet_complex().facets(), &[f(&[1, 2, 3])]);
        assert_eq!(MonomialIdeal::facet_ideal(&i.facet_complex()).unwrap(), i);
    }

    #[test]
    fn generators_are_minimalized_and_validated() {
        let i = MonomialIdeal::from_generators(4, [f(&[0, 1]), f(&[0, 1, 2])]).unwrap();
        assert_eq!(i.generators(), &[f(&[0, 1])]);
        assert_eq!(MonomialIdeal::from_generators(3, [Face::EMPTY]), Err(Error::UnitIdeal));
        let mixed = MonomialIdeal::from_generators(4, [f(&[0, 1]), f(&[1, 2, 3])]).unwrap();
        assert_eq!(mixed.generation_degree(), Err(Error::MixedDegree { low: 2, high: 3 }));
        assert_eq!(MonomialIdeal::from_generators(3, []).unwrap().generation_degree(), Ok(None));
    }

    #[test]
    fn json_export() {
        let json = serde_json::to_string(&catalog::ex216_ideal()).unwrap();
        assert_eq!(
            json,
            r#"{"variables":["x0","x1","x2","x3","x4","x5"],"generators":[["x0","x1","x2"],["x3","x4","x5"]]}"#
        );
    }

    #[test]
    fn complement_of_facet_complex_is_skeleton_of_stanley_reisner_complex() {
        let i = catalog::ex216_ideal();
        let lhs = i.facet_complex().d_complement(2);
        let rhs = i.stanley_reisner_complex().pure_skeleton(2).unwrap();
        assert_eq!(lhs, rhs);
    }
}

//! `d`-dimensional cycles: pure, `d`-path-connected complexes in which every
//! `(d-1)`-face lies in an even number of `d`-faces.
//!
//! Over GF(2) the face sets of cycles are the supports of kernel vectors of
//! `∂_d` that are path-connected, and the face-minimal cycles are exactly the
//! circuits (inclusion-minimal nonzero kernel supports).

use std::collections::HashMap;

use rayon::prelude::*;
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::complex::{path_components_of, SimplicialComplex};
use crate::error::{Error, Result};
use crate::face::{Face, VertexSet};
use crate::gf2::{rank_of, BitVector};
use crate::homology::boundary_matrix;

/// Kernel dimension beyond which circuit enumeration refuses to run.
pub const DEFAULT_KERNEL_CAP: usize = 20;

/// A certified `d`-dimensional cycle together with its completeness flags.
#[derive(Clone, PartialEq, Eq)]
pub struct CycleCertificate {
    complex: SimplicialComplex,
    dim: usize,
    face_minimal: bool,
    d_complete: bool,
    one_complete: bool,
}

/// Ridges (codimension-one faces) hit an odd number of times.
pub(crate) fn odd_ridges(faces: &[Face]) -> Vec<Face> {
    let mut count: HashMap<Face, usize> = HashMap::new();
    for f in faces {
        for r in f.facets_of_boundary() {
            *count.entry(r).or_default() += 1;
        }
    }
    let mut odd: Vec<Face> = count.into_iter().filter(|(_, c)| c % 2 == 1).map(|(r, _)| r).collect();
    odd.sort();
    odd
}

fn boundary_columns(faces: &[Face]) -> Vec<BitVector> {
    let mut ridges: Vec<Face> = faces.iter().flat_map(|f| f.facets_of_boundary()).collect();
    ridges.sort_unstable();
    ridges.dedup();
    faces
        .iter()
        .map(|f| {
            BitVector::from_indices(ridges.len(), f.facets_of_boundary().map(|r| ridges.binary_search(&r).unwrap()))
        })
        .collect()
}

/// Whether the boundary columns of `faces` are linearly independent.
pub(crate) fn boundaries_independent(faces: &[Face]) -> bool {
    let cols = boundary_columns(faces);
    rank_of(cols.first().map_or(0, |c| c.len()), &cols) == faces.len()
}

/// Whether `faces` (distinct, all of one dimension) form a circuit of the
/// boundary operator: they sum to a cycle and no proper subset does.
pub(crate) fn is_circuit(faces: &[Face]) -> bool {
    if faces.is_empty() || !odd_ridges(faces).is_empty() {
        return false;
    }
    let cols = boundary_columns(faces);
    rank_of(cols.first().map_or(0, |c| c.len()), &cols) + 1 == faces.len()
}

fn vertex_set(faces: &[Face]) -> VertexSet {
    faces.iter().fold(Face::EMPTY, |acc, f| acc.union(*f))
}

/// Every pair of vertices of `faces` lies in a common face.
pub(crate) fn is_one_complete(faces: &[Face]) -> bool {
    let v = vertex_set(faces);
    v.vertices().all(|u| {
        let reach = faces.iter().filter(|f| f.contains(u)).fold(Face::EMPTY, |acc, f| acc.union(*f));
        reach == v
    })
}

/// All `(d+1)`-subsets of the vertex set are among `faces`.
pub(crate) fn is_complete(faces: &[Face], d: usize) -> bool {
    let n = vertex_set(faces).len() as u128;
    let k = (d + 1) as u128;
    // faces are distinct (d+1)-subsets of V, so count comparison suffices
    let mut binom: u128 = 1;
    for i in 0..k {
        if i >= n {
            return false;
        }
        binom = binom * (n - i) / (i + 1);
    }
    faces.len() as u128 == binom
}

impl CycleCertificate {
    /// Verifies that `omega` is a `d`-dimensional cycle and computes its flags.
    pub fn certify(omega: &SimplicialComplex) -> Result<CycleCertificate> {
        let d = omega.pure_dimension().ok_or(Error::NotPure { expected: omega.dim().unwrap_or(0).max(0) as usize })?;
        if d == 0 {
            return Err(Error::Precondition("cycles have dimension at least 1".into()));
        }
        let faces = omega.facets();
        if let Some(r) = odd_ridges(faces).first() {
            return Err(Error::Precondition(format!(
                "{}-face {} lies in an odd number of {d}-faces",
                d - 1,
                omega.format_face(*r)
            )));
        }
        if path_components_of(faces, d).len() != 1 {
            return Err(Error::Precondition(format!("complex is not {d}-path-connected")));
        }
        Ok(CycleCertificate::from_cycle(omega.clone(), d, is_circuit(faces)))
    }

    /// Wraps a complex already known to be a cycle.
    pub(crate) fn from_cycle(complex: SimplicialComplex, dim: usize, face_minimal: bool) -> CycleCertificate {
        let d_complete = is_complete(complex.facets(), dim);
        let one_complete = is_one_complete(complex.facets());
        CycleCertificate { complex, dim, face_minimal, d_complete, one_complete }
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn faces(&self) -> &[Face] {
        self.complex.facets()
    }

    pub fn vertices(&self) -> VertexSet {
        self.complex.vertex_support()
    }

    pub fn is_face_minimal(&self) -> bool {
        self.face_minimal
    }

    /// All `(d+1)`-subsets of `V(Ω)` are faces of `Ω`.
    pub fn is_d_complete(&self) -> bool {
        self.d_complete
    }

    /// Every pair of vertices of `Ω` lies in a face of `Ω`.
    pub fn is_one_complete(&self) -> bool {
        self.one_complete
    }
}

impl std::fmt::Debug for CycleCertificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}-cycle {}", self.dim, self.complex)
    }
}

impl Serialize for CycleCertificate {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(serde::Serialize)]
        struct Flags {
            face_minimal: bool,
            d_complete: bool,
            one_complete: bool,
        }
        let faces: Vec<Vec<String>> = self.faces().iter().map(|&f| self.complex.face_labels(f)).collect();
        let mut s = serializer.serialize_struct("CycleCertificate", 3)?;
        s.serialize_field("dimension", &self.dim)?;
        s.serialize_field("faces", &faces)?;
        s.serialize_field(
            "flags",
            &Flags { face_minimal: self.face_minimal, d_complete: self.d_complete, one_complete: self.one_complete },
        )?;
        s.end()
    }
}

/// Whether a pure complex of dimension `d >= 1` is a `d`-dimensional cycle.
pub fn is_d_dimensional_cycle(sigma: &SimplicialComplex) -> Result<bool> {
    match CycleCertificate::certify(sigma) {
        Ok(_) => Ok(true),
        Err(Error::Precondition(msg)) if !msg.starts_with("cycles have") => Ok(false),
        Err(e) => Err(e),
    }
}

/// Circuits of the matroid whose cycle space is spanned by `kernel` (all
/// vectors of length `n`): every nonzero combination whose support carries
/// no other kernel vector. Each circuit is reported once; order is by mask.
pub(crate) fn kernel_circuits(kernel: &[BitVector], n: usize, cap: usize) -> Result<Vec<BitVector>> {
    let k = kernel.len();
    if k > cap || k >= 64 {
        return Err(Error::EnumerationInfeasible { kernel_dim: k, cap });
    }
    if k == 0 {
        return Ok(Vec::new());
    }
    // codes[j]: which basis vectors use column j.
    let codes: Vec<u64> = (0..n)
        .map(|j| kernel.iter().enumerate().fold(0u64, |acc, (i, v)| if v.get(j) { acc | 1 << i } else { acc }))
        .collect();
    // A combination's support X is a circuit iff the codes outside X span the
    // whole annihilator of the combination, a space of dimension k-1.
    let circuit = |combo: &BitVector| -> bool {
        let target = k - 1;
        if target == 0 {
            return true;
        }
        let mut basis = [0u64; 64];
        let mut rank = 0;
        for (j, &code) in codes.iter().enumerate() {
            if combo.get(j) {
                continue;
            }
            let mut c = code;
            while c != 0 {
                let hi = 63 - c.leading_zeros() as usize;
                if basis[hi] == 0 {
                    basis[hi] = c;
                    rank += 1;
                    break;
                }
                c ^= basis[hi];
            }
            if rank == target {
                return true;
            }
        }
        false
    };
    let total: u64 = 1 << k;
    const CHUNK: u64 = 1 << 12;
    let n_chunks = total.div_ceil(CHUNK);
    let mut found: Vec<BitVector> = (0..n_chunks)
        .into_par_iter()
        .flat_map_iter(|c| {
            let lo = (c * CHUNK).max(1);
            let hi = ((c + 1) * CHUNK).min(total);
            let mut out = Vec::new();
            let gray = lo ^ (lo >> 1);
            let mut combo = BitVector::zeros(n);
            for (i, v) in kernel.iter().enumerate() {
                if gray >> i & 1 == 1 {
                    combo.xor_assign(v);
                }
            }
            for idx in lo..hi {
                if circuit(&combo) {
                    out.push(combo.clone());
                }
                let flip = (idx + 1).trailing_zeros() as usize;
                if flip < k {
                    combo.xor_assign(&kernel[flip]);
                }
            }
            out
        })
        .collect();
    found.sort_by(|a, b| a.iter_ones().cmp(b.iter_ones()));
    Ok(found)
}

/// All face-minimal `d`-dimensional cycles on the `d`-faces of `complex`,
/// sorted by face list.
pub fn enumerate_face_minimal_cycles(
    complex: &SimplicialComplex,
    d: usize,
    kernel_cap: usize,
) -> Result<Vec<CycleCertificate>> {
    if d == 0 {
        return Err(Error::Precondition("cycles have dimension at least 1".into()));
    }
    let faces = complex.faces_of_dim(d);
    let kernel = boundary_matrix(complex, d).kernel_basis();
    let circuits = kernel_circuits(&kernel, faces.len(), kernel_cap)?;
    let mut certs: Vec<CycleCertificate> = circuits
        .iter()
        .map(|c| {
            let support: Vec<Face> = c.iter_ones().map(|i| faces[i]).collect();
            CycleCertificate::from_cycle(complex.with_faces(support), d, true)
        })
        .collect();
    certs.sort_by(|a, b| a.faces().cmp(b.faces()));
    Ok(certs)
}

/// Cone construction: from a `d`-cycle `Ω`, a minimal set `A` of
/// `(d+1)`-subsets of `V(Ω)` whose boundary sum is the face sum of `Ω`, and
/// a vertex `v` outside `V(Ω)`, the complex `<F ∪ v : F ∈ Ω> ∪ A` is a
/// `(d+1)`-dimensional cycle.
pub fn cone_extension(omega: &CycleCertificate, a: &[Face], v: usize) -> Result<CycleCertificate> {
    let d = omega.dim();
    let vs = omega.vertices();
    let ambient = omega.complex();
    if v >= ambient.n_vertices() {
        return Err(Error::VertexOutOfRange { vertex: v, n_vertices: ambient.n_vertices() });
    }
    if vs.contains(v) {
        return Err(Error::Precondition(format!("cone vertex {} lies in V(Ω)", ambient.label(v))));
    }
    let mut a: Vec<Face> = a.to_vec();
    a.sort();
    a.dedup();
    if let Some(bad) = a.iter().find(|f| f.len() != d + 2 || !f.is_subset(vs)) {
        return Err(Error::Precondition(format!("{} is not a {}-face on V(Ω)", ambient.format_face(*bad), d + 1)));
    }
    if odd_ridges(&a) != omega.faces() {
        return Err(Error::Precondition("boundary of A is not the face sum of Ω".into()));
    }
    if !boundaries_independent(&a) {
        return Err(Error::Precondition("A is not minimal: a proper subset has the same boundary".into()));
    }
    let mut faces: Vec<Face> = omega.faces().iter().map(|f| f.with(v)).collect();
    faces.extend(a);
    CycleCertificate::certify(&ambient.with_faces(faces))
}

/// The `(d-1)`-path components of the link of `v` in a `d`-cycle `Ω`, each
/// certified as a `(d-1)`-dimensional cycle.
pub fn vertex_link_cycles(omega: &CycleCertificate, v: usize) -> Result<Vec<CycleCertificate>> {
    let d = omega.dim();
    if !omega.vertices().contains(v) {
        return Err(Error::Precondition(format!("vertex {v} is not in V(Ω)")));
    }
    if d < 2 {
        return Err(Error::Precondition("vertex links of 1-cycles are vertex pairs".into()));
    }
    let link: Vec<Face> = omega.faces().iter().filter(|f| f.contains(v)).map(|f| f.without(v)).collect();
    path_components_of(&link, d - 1)
        .into_iter()
        .map(|comp| CycleCertificate::certify(&omega.complex().with_faces(comp)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn faces(c: &SimplicialComplex, specs: &[&str]) -> Vec<Face> {
        let mut v: Vec<Face> = specs.iter().map(|s| c.face(s).unwrap()).collect();
        v.sort();
        v
    }

    #[test]
    fn recognition() {
        assert!(is_d_dimensional_cycle(&catalog::tetrahedron()).unwrap());
        assert!(is_d_dimensional_cycle(&catalog::octahedron()).unwrap());
        let tri = catalog::solid_tetrahedron().with_faces(faces(&catalog::solid_tetrahedron(), &["123"]));
        assert!(!is_d_dimensional_cycle(&tri).unwrap());
        let two_spheres = SimplicialComplex::from_facets(
            8,
            Face::from_vertices([0, 1, 2, 3])
                .facets_of_boundary()
                .chain(Face::from_vertices([4, 5, 6, 7]).facets_of_boundary()),
        )
        .unwrap();
        assert!(!is_d_dimensional_cycle(&two_spheres).unwrap());
        let mixed = catalog::fig5_closure();
        assert!(matches!(is_d_dimensional_cycle(&mixed), Err(Error::NotPure { .. })));
    }

    #[test]
    fn tetrahedron_flags() {
        let c = CycleCertificate::certify(&catalog::tetrahedron()).unwrap();
        assert!(c.is_face_minimal() && c.is_d_complete() && c.is_one_complete());
        let o = CycleCertificate::certify(&catalog::octahedron()).unwrap();
        assert!(o.is_face_minimal() && !o.is_d_complete() && !o.is_one_complete());
    }

    #[test]
    fn enumerate_tetrahedron() {
        let t = catalog::tetrahedron();
        let cycles = enumerate_face_minimal_cycles(&t, 2, DEFAULT_KERNEL_CAP).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].complex(), &t);
    }

    #[test]
    fn enumerate_chorded_octahedron() {
        let g = catalog::octahedron_chorded();
        let cycles = enumerate_face_minimal_cycles(&g, 2, DEFAULT_KERNEL_CAP).unwrap();
        let sets: Vec<Vec<Face>> = cycles.iter().map(|c| c.faces().to_vec()).collect();
        let upper = faces(&g, &["125", "235", "345", "145", "123", "134"]);
        let lower = faces(&g, &["126", "236", "346", "146", "123", "134"]);
        let octa = catalog::octahedron().facets().to_vec();
        assert_eq!(sets.len(), 3);
        for s in [upper, lower, octa] {
            assert!(sets.contains(&s));
        }
    }

    #[test]
    fn enumerate_ex216_closure_skeleton() {
        let closure = catalog::ex216().d_closure(2).unwrap();
        let sk = closure.pure_skeleton(3).unwrap();
        let cycles = enumerate_face_minimal_cycles(&sk, 3, DEFAULT_KERNEL_CAP).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].faces().len(), 9);
        assert!(cycles[0].is_one_complete() && !cycles[0].is_d_complete());
    }

    #[test]
    fn kernel_cap_is_enforced() {
        let simplex = SimplicialComplex::simplex(crate::complex::default_labels(8)).unwrap();
        // kernel of ∂_1 on K8 has dimension 28 - 7 = 21
        assert_eq!(
            enumerate_face_minimal_cycles(&simplex, 1, DEFAULT_KERNEL_CAP),
            Err(Error::EnumerationInfeasible { kernel_dim: 21, cap: 20 })
        );
    }

    #[test]
    fn graph_cycles_of_k4_are_its_triangles_and_squares() {
        let k4 = SimplicialComplex::simplex(crate::complex::default_labels(4)).unwrap().pure_skeleton(1).unwrap();
        let cycles = enumerate_face_minimal_cycles(&k4, 1, DEFAULT_KERNEL_CAP).unwrap();
        let lens: Vec<usize> = cycles.iter().map(|c| c.faces().len()).collect();
        assert_eq!(lens.iter().filter(|&&l| l == 3).count(), 4);
        assert_eq!(lens.iter().filter(|&&l| l == 4).count(), 3);
    }

    #[test]
    fn cone_over_hollow_triangle() {
        let h = catalog::hollow_triangle();
        let omega = CycleCertificate::certify(&h).unwrap();
        let phi = cone_extension(&omega, &[h.face("123").unwrap()], 3).unwrap();
        assert_eq!(phi.complex(), &catalog::tetrahedron());
        assert!(phi.is_d_complete());
    }

    #[test]
    fn cone_over_square() {
        let octa = catalog::octahedron();
        let square = octa.induced(octa.face("1234").unwrap()).pure_skeleton(1).unwrap();
        let omega = CycleCertificate::certify(&square).unwrap();
        let a = faces(&octa, &["123", "134"]);
        let phi = cone_extension(&omega, &a, octa.vertex("5").unwrap()).unwrap();
        assert_eq!(phi.faces(), &faces(&octa, &["125", "235", "345", "145", "123", "134"])[..]);
        assert!(phi.is_face_minimal());
    }

    #[test]
    fn cone_preconditions() {
        let octa = catalog::octahedron();
        let square = octa.induced(octa.face("1234").unwrap()).pure_skeleton(1).unwrap();
        let omega = CycleCertificate::certify(&square).unwrap();
        let five = octa.vertex("5").unwrap();
        let sphere = CycleCertificate::certify(&octa).unwrap();
        let pyramids = faces(&octa, &["1235", "1345", "1236", "1346"]);
        let six = octa.vertex("6").unwrap();
        let cone = cone_extension(&sphere, &pyramids, six);
        assert!(matches!(cone, Err(Error::Precondition(ref m)) if m.contains("V(Ω)")));
        let grown = octa.extend_ground_set(&["7".to_string()]).unwrap();
        let sphere = CycleCertificate::certify(&grown).unwrap();
        let phi = cone_extension(&sphere, &pyramids, 6).unwrap();
        assert_eq!(phi.dim(), 3);
        // adding the boundary of a 4-simplex leaves the boundary sum unchanged
        let mut bloated = pyramids.clone();
        bloated.extend(faces(&octa, &["1245", "1246", "1256", "1456", "2456"]));
        let err = cone_extension(&sphere, &bloated, 6).unwrap_err();
        assert!(matches!(err, Error::Precondition(ref m) if m.contains("minimal")));
        let bad = cone_extension(&omega, &faces(&octa, &["123"]), five).unwrap_err();
        assert!(matches!(bad, Error::Precondition(ref m) if m.contains("boundary")));
        let inside = cone_extension(&omega, &faces(&octa, &["123", "134"]), 0).unwrap_err();
        let _ = five;
        assert!(matches!(inside, Error::Precondition(ref m) if m.contains("cone vertex")));
    }

    #[test]
    fn links() {
        let t = CycleCertificate::certify(&catalog::tetrahedron()).unwrap();
        let links = vertex_link_cycles(&t, 3).unwrap();
        assert_eq!(links.len(), 1);
        assert_eq!(links[0].faces(), &faces(&catalog::tetrahedron(), &["12", "13", "23"])[..]);

        let octa = catalog::octahedron();
        let o = CycleCertificate::certify(&octa).unwrap();
        let links = vertex_link_cycles(&o, octa.vertex("5").unwrap()).unwrap();
        assert_eq!(links.len(), 1);
        assert_eq!(links[0].faces(), &faces(&octa, &["12", "23", "34", "14"])[..]);

        let sq = CycleCertificate::certify(&links[0].complex().clone()).unwrap();
        assert!(vertex_link_cycles(&sq, 0).is_err());
    }

    #[test]
    fn nine_tetrahedra_links_are_cycles() {
        let closure = catalog::ex216().d_closure(2).unwrap();
        let omega = &enumerate_face_minimal_cycles(&closure.pure_skeleton(3).unwrap(), 3, 20).unwrap()[0];
        let links = vertex_link_cycles(omega, 0).unwrap();
        assert!(!links.is_empty());
        assert!(links.iter().all(|l| l.dim() == 2));
    }

    #[test]
    fn certificate_json() {
        let c = CycleCertificate::certify(&catalog::tetrahedron()).unwrap();
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(
            json,
            r#"{"dimension":2,"faces":[["1","2","3"],["1","2","4"],["1","3","4"],["2","3","4"]],"flags":{"face_minimal":true,"d_complete":true,"one_complete":true}}"#
        );
    }
}

//! Chord sets and chordedness.
//!
//! A chord set of a `d`-cycle `Ω` in `Γ` is a set `C` of `d`-faces of `Γ`
//! outside `Ω` such that `C ∪ Ω` is the union of `k >= 2` distinct
//! `d`-cycles `Ω_i`, every chord lies in an even number of them, every face
//! of `Ω` in an odd number, and each `Ω_i` has fewer vertices than `Ω`.
//!
//! Summing the `Ω_i` over GF(2) gives the face sum of `Ω`, so a chord set on
//! the vertices `W = V(Ω)` exists exactly when that sum lies in
//! `L_W = Σ_{u ∈ W} Z_d(Γ_{W∖u})`. Conversely a representation in `L_W`
//! splits into path components, which after cancelling equal pairs form a
//! decomposition. [`find_chord_set_exact`] is built on this; the literal
//! search [`find_chord_set_enumerative`] serves as an independent check.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde::ser::{Serialize, SerializeStruct, Serializer};
use serde::Serialize as DeriveSerialize;

use crate::complex::{path_components_of, SimplicialComplex};
use crate::cycles::{enumerate_face_minimal_cycles, kernel_circuits, CycleCertificate, DEFAULT_KERNEL_CAP};
use crate::error::{Error, Result};
use crate::face::{Face, VertexSet};
use crate::gf2::{BitVector, EchelonBasis};
use crate::homology::{is_boundary, Chain};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, DeriveSerialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    /// Enumerate every face-minimal cycle and search each for a chord set.
    Exact,
    /// Sweep vertex sets, certifying them by homological boundaries first
    /// and escalating to the span test where that fails.
    Boundary,
}

impl std::str::FromStr for SearchMode {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "exact" => Ok(SearchMode::Exact),
            "boundary" => Ok(SearchMode::Boundary),
            other => Err(format!("unknown mode `{other}` (expected exact or boundary)")),
        }
    }
}

impl std::fmt::Display for SearchMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SearchMode::Exact => "exact",
            SearchMode::Boundary => "boundary",
        })
    }
}

/// Search limits. Exceeding any of them yields an inconclusive answer, never
/// a silent truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, DeriveSerialize)]
pub struct ChordConfig {
    pub mode: SearchMode,
    /// Largest kernel dimension for which circuits are enumerated.
    pub kernel_cap: usize,
    /// Largest number of candidate chord faces in the enumerative search.
    pub chord_cap: usize,
    /// Largest number of small cycles the enumerative search combines.
    pub family_cap: usize,
    /// Allow chords and decomposition cycles outside `V(Ω)`.
    pub widen: bool,
    /// Largest vertex count for the vertex-set sweeps.
    pub max_vertices: usize,
}

impl Default for ChordConfig {
    fn default() -> Self {
        ChordConfig {
            mode: SearchMode::Boundary,
            kernel_cap: DEFAULT_KERNEL_CAP,
            chord_cap: 12,
            family_cap: 16,
            widen: false,
            max_vertices: 20,
        }
    }
}

impl ChordConfig {
    pub fn exact() -> Self {
        ChordConfig { mode: SearchMode::Exact, ..ChordConfig::default() }
    }
}

/// `d`-faces in lexicographic order with their boundary columns.
#[derive(Clone, Debug)]
pub(crate) struct FaceSpace {
    faces: Vec<Face>,
    columns: Vec<BitVector>,
    n_ridges: usize,
}

impl FaceSpace {
    pub fn new(mut faces: Vec<Face>) -> Self {
        faces.sort();
        faces.dedup();
        let mut ridges: Vec<Face> = faces.iter().flat_map(|f| f.facets_of_boundary()).collect();
        ridges.sort_unstable();
        ridges.dedup();
        let columns = faces
            .iter()
            .map(|f| {
                BitVector::from_indices(ridges.len(), f.facets_of_boundary().map(|r| ridges.binary_search(&r).unwrap()))
            })
            .collect();
        FaceSpace { faces, columns, n_ridges: ridges.len() }
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn index(&self, f: Face) -> Option<usize> {
        self.faces.binary_search(&f).ok()
    }

    pub fn vector(&self, faces: &[Face]) -> Option<BitVector> {
        let idx: Option<Vec<usize>> = faces.iter().map(|&f| self.index(f)).collect();
        Some(BitVector::from_indices(self.len(), idx?))
    }

    pub fn faces_of(&self, v: &BitVector) -> Vec<Face> {
        v.iter_ones().map(|i| self.faces[i]).collect()
    }

    /// A basis of the cycles supported on the faces inside `s`.
    pub fn cycle_space(&self, s: VertexSet) -> Vec<BitVector> {
        let mut basis = EchelonBasis::with_tags(self.n_ridges, self.len());
        let mut cycles = Vec::new();
        for (j, f) in self.faces.iter().enumerate() {
            if f.is_subset(s) {
                if let Some(rel) = basis.insert_tagged(self.columns[j].clone(), BitVector::unit(self.len(), j)) {
                    cycles.push(rel);
                }
            }
        }
        cycles
    }
}

/// A verified chord set.
#[derive(Clone, PartialEq, Eq)]
pub struct ChordSetCertificate {
    ambient: SimplicialComplex,
    cycle: CycleCertificate,
    chords: Vec<Face>,
    parts: Vec<CycleCertificate>,
}

impl ChordSetCertificate {
    pub fn ambient(&self) -> &SimplicialComplex {
        &self.ambient
    }

    pub fn cycle(&self) -> &CycleCertificate {
        &self.cycle
    }

    pub fn chords(&self) -> &[Face] {
        &self.chords
    }

    pub fn parts(&self) -> &[CycleCertificate] {
        &self.parts
    }

    /// Runs every clause check again from the raw face lists.
    pub fn reverify(&self) -> std::result::Result<(), ChordSetViolation> {
        let parts: Vec<SimplicialComplex> = self.parts.iter().map(|p| p.complex().clone()).collect();
        verify_chord_set(&self.ambient, self.cycle.complex(), &self.chords, &parts).map(|_| ())
    }
}

impl std::fmt::Debug for ChordSetCertificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let chords: Vec<String> = self.chords.iter().map(|&c| self.ambient.format_face(c)).collect();
        write!(f, "chords [{}] splitting {:?} into {:?}", chords.join(", "), self.cycle, self.parts)
    }
}

impl Serialize for ChordSetCertificate {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let chords: Vec<Vec<String>> = self.chords.iter().map(|&c| self.ambient.face_labels(c)).collect();
        let mut s = serializer.serialize_struct("ChordSetCertificate", 3)?;
        s.serialize_field("cycle", &self.cycle)?;
        s.serialize_field("chords", &chords)?;
        s.serialize_field("parts", &self.parts)?;
        s.end()
    }
}

/// A failed chord-set clause. Clause 0 covers the preconditions.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("chord set clause {clause} fails: {message}")]
pub struct ChordSetViolation {
    pub clause: u8,
    pub message: String,
}

fn violation(clause: u8, message: String) -> ChordSetViolation {
    ChordSetViolation { clause, message }
}

/// Checks the four chord-set clauses for `Ω`, chords `C` and the proposed
/// decomposition `parts` inside `Γ`.
pub fn verify_chord_set(
    gamma: &SimplicialComplex,
    omega: &SimplicialComplex,
    chords: &[Face],
    parts: &[SimplicialComplex],
) -> std::result::Result<ChordSetCertificate, ChordSetViolation> {
    let show = |f: Face| gamma.format_face(f);
    let cycle = CycleCertificate::certify(omega).map_err(|e| violation(0, format!("Ω is not a cycle: {e}")))?;
    let d = cycle.dim();
    let omega_faces: HashSet<Face> = omega.facets().iter().copied().collect();
    if let Some(f) = omega.facets().iter().find(|f| !gamma.contains(**f)) {
        return Err(violation(0, format!("face {} of Ω is not in Γ", show(*f))));
    }
    let mut chord_list = chords.to_vec();
    chord_list.sort();
    chord_list.dedup();
    for &c in &chord_list {
        if c.len() != d + 1 || !gamma.contains(c) {
            return Err(violation(0, format!("chord {} is not a {d}-face of Γ", show(c))));
        }
        if omega_faces.contains(&c) {
            return Err(violation(0, format!("chord {} is a face of Ω", show(c))));
        }
    }

    // Clause 1: C ∪ Ω is the union of k >= 2 distinct d-cycles.
    if parts.len() < 2 {
        return Err(violation(1, format!("{} cycle(s) given; at least two are required", parts.len())));
    }
    let mut certs = Vec::with_capacity(parts.len());
    for (i, p) in parts.iter().enumerate() {
        let cert =
            CycleCertificate::certify(p).map_err(|e| violation(1, format!("Ω_{} is not a cycle: {e}", i + 1)))?;
        if cert.dim() != d {
            return Err(violation(1, format!("Ω_{} has dimension {} instead of {d}", i + 1, cert.dim())));
        }
        certs.push(cert);
    }
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            if parts[i].facets() == parts[j].facets() {
                return Err(violation(1, format!("Ω_{} and Ω_{} coincide", i + 1, j + 1)));
            }
        }
    }
    let mut multiplicity: HashMap<Face, usize> = HashMap::new();
    for p in parts {
        for &f in p.facets() {
            *multiplicity.entry(f).or_default() += 1;
        }
    }
    let allowed: HashSet<Face> = omega_faces.iter().copied().chain(chord_list.iter().copied()).collect();
    let mut used: Vec<Face> = multiplicity.keys().copied().collect();
    used.sort();
    if let Some(f) = used.iter().find(|f| !allowed.contains(f)) {
        return Err(violation(1, format!("face {} of the decomposition is neither a chord nor in Ω", show(*f))));
    }
    let mut wanted: Vec<Face> = allowed.iter().copied().collect();
    wanted.sort();
    if let Some(f) = wanted.iter().find(|f| !multiplicity.contains_key(f)) {
        return Err(violation(1, format!("face {} lies in no Ω_i", show(*f))));
    }

    // Clauses 2 and 3: parity of coverage.
    for &c in &chord_list {
        if !multiplicity[&c].is_multiple_of(2) {
            return Err(violation(2, format!("chord {} lies in {} of the cycles", show(c), multiplicity[&c])));
        }
    }
    for &f in omega.facets() {
        if multiplicity[&f] % 2 != 1 {
            return Err(violation(3, format!("face {} of Ω lies in {} of the cycles", show(f), multiplicity[&f])));
        }
    }

    // Clause 4: every part has fewer vertices.
    let n = cycle.vertices().len();
    for (i, c) in certs.iter().enumerate() {
        if c.vertices().len() >= n {
            return Err(violation(4, format!("Ω_{} has {} vertices, Ω has {n}", i + 1, c.vertices().len())));
        }
    }

    Ok(ChordSetCertificate { ambient: gamma.clone(), cycle, chords: chord_list, parts: certs })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, DeriveSerialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMethod {
    Span,
    Enumerative,
}

/// What an unsuccessful search looked at.
#[derive(Clone, Debug, PartialEq, Eq, DeriveSerialize)]
pub struct SearchTranscript {
    pub method: SearchMethod,
    /// `d`-faces of `Γ` in scope and outside `Ω`.
    pub candidate_faces: usize,
    /// Span method: vertex sets whose cycle spaces were combined.
    pub vertex_sets: usize,
    /// Span method: dimension of the span of the smaller cycles.
    pub span_dim: usize,
    /// Enumerative method: chord subsets examined.
    pub chord_sets_tried: usize,
    /// Enumerative method: families of small cycles summed.
    pub families_tried: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, DeriveSerialize)]
#[serde(rename_all = "snake_case", tag = "outcome")]
pub enum ChordSearch {
    Found {
        certificate: ChordSetCertificate,
    },
    /// The whole search space was covered without success.
    Exhausted {
        transcript: SearchTranscript,
    },
    /// A cap was hit before the search could finish.
    Inconclusive {
        reason: String,
    },
}

impl ChordSearch {
    pub fn certificate(&self) -> Option<&ChordSetCertificate> {
        match self {
            ChordSearch::Found { certificate } => Some(certificate),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, ChordSearch::Found { .. })
    }

    pub fn is_exhausted(&self) -> bool {
        matches!(self, ChordSearch::Exhausted { .. })
    }
}

fn check_search_input(gamma: &SimplicialComplex, omega: &CycleCertificate) -> Result<()> {
    if !omega.is_face_minimal() {
        return Err(Error::Precondition("Ω is not face-minimal".into()));
    }
    if omega.is_d_complete() {
        return Err(Error::Precondition("Ω is complete and needs no chord set".into()));
    }
    if let Some(f) = omega.faces().iter().find(|f| !gamma.contains(**f)) {
        return Err(Error::Precondition(format!("face {} of Ω is not in Γ", gamma.format_face(*f))));
    }
    if gamma.labels() != omega.complex().labels() {
        return Err(Error::Precondition("Ω and Γ have different ground sets".into()));
    }
    Ok(())
}

/// Vertex sets whose cycles may serve as decomposition pieces.
fn piece_vertex_sets(
    gamma: &SimplicialComplex,
    omega: &CycleCertificate,
    cfg: &ChordConfig,
) -> Result<(VertexSet, Vec<VertexSet>)> {
    let w = omega.vertices();
    if !cfg.widen {
        return Ok((w, w.vertices().map(|u| w.without(u)).collect()));
    }
    let scope = gamma.vertex_support();
    if scope.len() > cfg.max_vertices {
        return Err(Error::Infeasible { what: "widened chord search", n: scope.len(), limit: cfg.max_vertices });
    }
    Ok((scope, scope.subsets_of_size(w.len() - 1).collect()))
}

/// Turns a representation `χ_Ω = Σ z_U` into a chord-set certificate.
fn certificate_from_pieces(
    gamma: &SimplicialComplex,
    omega: &CycleCertificate,
    space: &FaceSpace,
    pieces: &[BitVector],
) -> Result<ChordSetCertificate> {
    let d = omega.dim();
    let mut parity: HashMap<Vec<Face>, usize> = HashMap::new();
    for z in pieces {
        for comp in path_components_of(&space.faces_of(z), d) {
            *parity.entry(comp).or_default() += 1;
        }
    }
    let mut parts: Vec<Vec<Face>> = parity.into_iter().filter(|(_, n)| n % 2 == 1).map(|(c, _)| c).collect();
    parts.sort();
    let omega_faces: HashSet<Face> = omega.faces().iter().copied().collect();
    let mut chords: Vec<Face> = parts.iter().flatten().copied().filter(|f| !omega_faces.contains(f)).collect();
    chords.sort();
    chords.dedup();
    let parts: Vec<SimplicialComplex> = parts.into_iter().map(|p| gamma.with_faces(p)).collect();
    verify_chord_set(gamma, omega.complex(), &chords, &parts)
        .map_err(|v| Error::Precondition(format!("internal: decomposition failed verification: {v}")))
}

/// Decides whether `Ω` has a chord set in `Γ` (chords inside `V(Ω)` unless
/// `cfg.widen`), returning a verified certificate or the exhausted span.
pub fn find_chord_set_exact(
    gamma: &SimplicialComplex,
    omega: &CycleCertificate,
    cfg: &ChordConfig,
) -> Result<ChordSearch> {
    check_search_input(gamma, omega)?;
    let d = omega.dim();
    let (scope, sets) = piece_vertex_sets(gamma, omega, cfg)?;
    let space = FaceSpace::new(gamma.faces_of_dim(d).into_iter().filter(|f| f.is_subset(scope)).collect());
    let target = space.vector(omega.faces()).expect("Ω lies in Γ");

    let per_set: Vec<Vec<BitVector>> = sets.par_iter().map(|&u| space.cycle_space(u)).collect();
    let generators: Vec<(usize, &BitVector)> =
        per_set.iter().enumerate().flat_map(|(i, zs)| zs.iter().map(move |z| (i, z))).collect();
    let mut basis = EchelonBasis::with_tags(space.len(), generators.len());
    for (g, (_, z)) in generators.iter().enumerate() {
        basis.insert_tagged((*z).clone(), BitVector::unit(generators.len(), g));
    }
    let Some(tag) = basis.express(&target) else {
        return Ok(ChordSearch::Exhausted {
            transcript: SearchTranscript {
                method: SearchMethod::Span,
                candidate_faces: space.len() - omega.faces().len(),
                vertex_sets: sets.len(),
                span_dim: basis.rank(),
                chord_sets_tried: 0,
                families_tried: 0,
            },
        });
    };
    let mut pieces: Vec<BitVector> = vec![BitVector::zeros(space.len()); sets.len()];
    for g in tag.iter_ones() {
        let (i, z) = generators[g];
        pieces[i].xor_assign(z);
    }
    pieces.retain(|p| !p.is_zero());
    Ok(ChordSearch::Found { certificate: certificate_from_pieces(gamma, omega, &space, &pieces)? })
}

/// The literal search: candidate chord sets by increasing size, and for each
/// one every family of small face-minimal cycles inside `C ∪ Ω`.
pub fn find_chord_set_enumerative(
    gamma: &SimplicialComplex,
    omega: &CycleCertificate,
    cfg: &ChordConfig,
) -> Result<ChordSearch> {
    check_search_input(gamma, omega)?;
    let d = omega.dim();
    let scope = if cfg.widen { gamma.vertex_support() } else { omega.vertices() };
    let n = omega.vertices().len();
    let omega_faces: HashSet<Face> = omega.faces().iter().copied().collect();
    let candidates: Vec<Face> =
        gamma.faces_of_dim(d).into_iter().filter(|f| f.is_subset(scope) && !omega_faces.contains(f)).collect();
    if candidates.len() > cfg.chord_cap {
        return Ok(ChordSearch::Inconclusive {
            reason: format!("{} candidate chord faces exceed the chord cap {}", candidates.len(), cfg.chord_cap),
        });
    }
    let mut skipped: Option<String> = None;
    let mut chord_sets_tried = 0;
    let mut families_tried = 0;
    for size in 0..=candidates.len() {
        for pick in Face::full(candidates.len()).subsets_of_size(size) {
            chord_sets_tried += 1;
            let chords: Vec<Face> = pick.vertices().map(|i| candidates[i]).collect();
            let space = FaceSpace::new(omega.faces().iter().copied().chain(chords.iter().copied()).collect());
            let kernel = space.cycle_space(Face::full(crate::face::MAX_VERTICES));
            let circuits = match kernel_circuits(&kernel, space.len(), cfg.kernel_cap) {
                Ok(c) => c,
                Err(e) => {
                    skipped.get_or_insert(e.to_string());
                    continue;
                }
            };
            let small: Vec<BitVector> = circuits
                .into_iter()
                .filter(|c| space.faces_of(c).iter().fold(Face::EMPTY, |a, f| a.union(*f)).len() < n)
                .collect();
            if small.len() > cfg.family_cap {
                skipped.get_or_insert(format!("{} small cycles exceed the family cap {}", small.len(), cfg.family_cap));
                continue;
            }
            let target = space.vector(omega.faces()).unwrap();
            let chord_vec = space.vector(&chords).unwrap();
            for mask in 1u64..1 << small.len() {
                families_tried += 1;
                let mut sum = BitVector::zeros(space.len());
                let mut union = BitVector::zeros(space.len());
                for (i, c) in small.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        sum.xor_assign(c);
                        for j in c.iter_ones() {
                            union.set(j, true);
                        }
                    }
                }
                let mut covered = target.clone();
                covered.xor_assign(&chord_vec);
                if sum != target || union != covered {
                    continue;
                }
                let parts: Vec<SimplicialComplex> = small
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, c)| gamma.with_faces(space.faces_of(c)))
                    .collect();
                if let Ok(certificate) = verify_chord_set(gamma, omega.complex(), &chords, &parts) {
                    return Ok(ChordSearch::Found { certificate });
                }
            }
        }
    }
    Ok(match skipped {
        Some(reason) => ChordSearch::Inconclusive { reason },
        None => ChordSearch::Exhausted {
            transcript: SearchTranscript {
                method: SearchMethod::Enumerative,
                candidate_faces: candidates.len(),
                vertex_sets: 0,
                span_dim: 0,
                chord_sets_tried,
                families_tried,
            },
        },
    })
}

/// A `(d+1)`-chain of `Δ_d(Γ)` on `V(Ω)` whose boundary is the face sum of
/// `Ω`, if there is one. Such a chain guarantees a chord set.
pub fn boundary_certificate(gamma: &SimplicialComplex, omega: &CycleCertificate) -> Result<Option<Chain>> {
    check_search_input(gamma, omega)?;
    let d = omega.dim();
    let skeleton = gamma.with_faces(gamma.faces_of_dim(d));
    let closure = skeleton.d_closure(d)?.induced(omega.vertices());
    let c = Chain::from_faces(&closure, d, omega.faces().iter().copied())?;
    is_boundary(&closure, &c)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, DeriveSerialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
    Inconclusive,
}

impl Verdict {
    pub fn as_bool(self) -> Option<bool> {
        match self {
            Verdict::Yes => Some(true),
            Verdict::No => Some(false),
            Verdict::Inconclusive => None,
        }
    }

    pub fn from_bool(b: bool) -> Verdict {
        if b {
            Verdict::Yes
        } else {
            Verdict::No
        }
    }

    /// `No` dominates, then `Inconclusive`.
    pub fn and(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::No, _) | (_, Verdict::No) => Verdict::No,
            (Verdict::Inconclusive, _) | (_, Verdict::Inconclusive) => Verdict::Inconclusive,
            _ => Verdict::Yes,
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// A face-minimal, non-complete cycle without a chord set.
#[derive(Clone, Debug, PartialEq, Eq, DeriveSerialize)]
pub struct UnchordedCycle {
    pub cycle: CycleCertificate,
    pub transcript: SearchTranscript,
}

/// The `d`-chordedness verdict for one pure `d`-complex.
#[derive(Clone, Debug, PartialEq, Eq, DeriveSerialize)]
pub struct DimensionVerdict {
    pub dim: usize,
    pub verdict: Verdict,
    pub mode: SearchMode,
    /// Exact mode: face-minimal cycles found. Boundary mode: vertex sets swept.
    pub examined: usize,
    /// Cycles (exact) or vertex sets (boundary) settled by a boundary chain.
    pub boundary_certified: usize,
    /// Boundary mode: vertex sets that needed the span test.
    pub escalated: usize,
    /// Exact mode, yes: one certificate per non-complete face-minimal cycle.
    pub certificates: Vec<ChordSetCertificate>,
    pub counterexample: Option<UnchordedCycle>,
    pub inconclusive_reason: Option<String>,
}

impl DimensionVerdict {
    fn new(dim: usize, mode: SearchMode) -> Self {
        DimensionVerdict {
            dim,
            verdict: Verdict::Yes,
            mode,
            examined: 0,
            boundary_certified: 0,
            escalated: 0,
            certificates: Vec::new(),
            counterexample: None,
            inconclusive_reason: None,
        }
    }
}

/// Verdicts for every pure skeleton.
#[derive(Clone, Debug, PartialEq, Eq, DeriveSerialize)]
pub struct ChordedVerdict {
    pub verdict: Verdict,
    pub mode: SearchMode,
    pub dimensions: Vec<DimensionVerdict>,
}

impl ChordedVerdict {
    pub fn dimension(&self, d: usize) -> Option<&DimensionVerdict> {
        self.dimensions.iter().find(|v| v.dim == d)
    }
}

fn require_pure(gamma: &SimplicialComplex, d: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::Precondition("chordedness is defined for dimension at least 1".into()));
    }
    if gamma.facets().iter().any(|f| f.dim() != d as isize) {
        return Err(Error::NotPure { expected: d });
    }
    Ok(())
}

/// Whether every face-minimal non-complete `d`-cycle of the pure
/// `d`-complex `Γ` has a chord set.
pub fn is_d_chorded(gamma: &SimplicialComplex, d: usize, cfg: &ChordConfig) -> Result<DimensionVerdict> {
    require_pure(gamma, d)?;
    match cfg.mode {
        SearchMode::Exact => chorded_exact(gamma, d, cfg),
        SearchMode::Boundary => chorded_sweep(gamma, d, cfg),
    }
}

fn chorded_exact(gamma: &SimplicialComplex, d: usize, cfg: &ChordConfig) -> Result<DimensionVerdict> {
    let mut out = DimensionVerdict::new(d, SearchMode::Exact);
    let cycles = match enumerate_face_minimal_cycles(gamma, d, cfg.kernel_cap) {
        Ok(c) => c,
        Err(e @ Error::EnumerationInfeasible { .. }) => {
            out.verdict = Verdict::Inconclusive;
            out.inconclusive_reason = Some(e.to_string());
            return Ok(out);
        }
        Err(e) => return Err(e),
    };
    out.examined = cycles.len();
    let open: Vec<&CycleCertificate> = cycles.iter().filter(|c| !c.is_d_complete()).collect();
    let results: Vec<Result<(ChordSearch, bool)>> = open
        .par_iter()
        .map(|c| {
            let bounded = boundary_certificate(gamma, c)?.is_some();
            Ok((find_chord_set_exact(gamma, c, cfg)?, bounded))
        })
        .collect();
    for (cycle, r) in open.iter().zip(results) {
        let (search, bounded) = r?;
        out.boundary_certified += bounded as usize;
        match search {
            ChordSearch::Found { certificate } => out.certificates.push(certificate),
            ChordSearch::Exhausted { transcript } => {
                out.verdict = Verdict::No;
                out.certificates.clear();
                out.counterexample = Some(UnchordedCycle { cycle: (*cycle).clone(), transcript });
                return Ok(out);
            }
            ChordSearch::Inconclusive { reason } => {
                out.verdict = Verdict::Inconclusive;
                out.inconclusive_reason.get_or_insert(reason);
            }
        }
    }
    if out.verdict != Verdict::Yes {
        out.certificates.clear();
    }
    Ok(out)
}

enum SetOutcome {
    Trivial,
    Bounded,
    Spanned,
    /// A cycle on this vertex set outside the span of smaller ones.
    Unchorded(BitVector),
}

/// Shrinks `z` (a cycle outside `span`) to a circuit outside `span`.
fn unchorded_circuit(space: &FaceSpace, span: &EchelonBasis, mut z: BitVector) -> BitVector {
    loop {
        let mut support: Vec<usize> = z.iter_ones().collect();
        // drop faces while the rest still carries a cycle
        let mut i = 0;
        while i < support.len() {
            let trial: Vec<usize> = support.iter().copied().filter(|&j| j != support[i]).collect();
            let cols: Vec<&BitVector> = trial.iter().map(|&j| &space.columns[j]).collect();
            if crate::gf2::rank_of(space.n_ridges, cols) < trial.len() {
                support = trial;
            } else {
                i += 1;
            }
        }
        let circuit = BitVector::from_indices(space.len(), support);
        if !span.contains(&circuit) {
            return circuit;
        }
        z.xor_assign(&circuit);
    }
}

/// Vertex-set sweep: a non-complete face-minimal cycle on `W` has a chord
/// set iff it lies in the span of the cycles on the `(|W|-1)`-subsets, so
/// `Γ` is `d`-chorded iff every cycle space `Z(Γ_W)` equals that span.
/// Sets where `Z(Γ_W)` is already the boundary space of `Δ_d(Γ)_W` pass
/// without the span test.
fn chorded_sweep(gamma: &SimplicialComplex, d: usize, cfg: &ChordConfig) -> Result<DimensionVerdict> {
    let mut out = DimensionVerdict::new(d, SearchMode::Boundary);
    let support = gamma.vertex_support();
    if support.len() > cfg.max_vertices {
        out.verdict = Verdict::Inconclusive;
        out.inconclusive_reason =
            Some(Error::Infeasible { what: "vertex-set sweep", n: support.len(), limit: cfg.max_vertices }.to_string());
        return Ok(out);
    }
    let space = FaceSpace::new(gamma.faces_of_dim(d));
    let face_set: HashSet<Face> = space.faces().iter().copied().collect();
    // (d+1)-faces of the closure: every boundary face is a d-face of Γ.
    let fillers: Vec<(VertexSet, BitVector)> = support
        .subsets_of_size(d + 2)
        .filter(|t| t.facets_of_boundary().all(|f| face_set.contains(&f)))
        .map(|t| (t, space.vector(&t.facets_of_boundary().collect::<Vec<_>>()).unwrap()))
        .collect();

    let mut previous: HashMap<VertexSet, Vec<BitVector>> =
        support.subsets_of_size(d + 2).map(|w| (w, space.cycle_space(w))).collect();
    for size in d + 3..=support.len() {
        let layer: Vec<VertexSet> = support.subsets_of_size(size).collect();
        let results: Vec<(Vec<BitVector>, SetOutcome)> = layer
            .par_iter()
            .map(|&w| {
                let z = space.cycle_space(w);
                if z.is_empty() {
                    return (z, SetOutcome::Trivial);
                }
                let mut bounds = EchelonBasis::new(space.len());
                for (t, b) in &fillers {
                    if t.is_subset(w) {
                        bounds.insert(b.clone());
                        if bounds.rank() == z.len() {
                            return (z, SetOutcome::Bounded);
                        }
                    }
                }
                let mut span = EchelonBasis::new(space.len());
                for u in w.vertices() {
                    for c in &previous[&w.without(u)] {
                        span.insert(c.clone());
                    }
                    if span.rank() == z.len() {
                        return (z, SetOutcome::Spanned);
                    }
                }
                let outside = z.iter().find(|c| !span.contains(c)).expect("span is smaller than Z").clone();
                let circuit = unchorded_circuit(&space, &span, outside);
                (z, SetOutcome::Unchorded(circuit))
            })
            .collect();
        let mut next = HashMap::with_capacity(layer.len());
        for (&w, (z, outcome)) in layer.iter().zip(results) {
            out.examined += 1;
            match outcome {
                SetOutcome::Trivial => {}
                SetOutcome::Bounded => out.boundary_certified += 1,
                SetOutcome::Spanned => out.escalated += 1,
                SetOutcome::Unchorded(circuit) => {
                    out.escalated += 1;
                    let faces = space.faces_of(&circuit);
                    let cycle = CycleCertificate::from_cycle(gamma.with_faces(faces), d, true);
                    debug_assert_eq!(cycle.vertices(), w);
                    let transcript = match find_chord_set_exact(gamma, &cycle, cfg)? {
                        ChordSearch::Exhausted { transcript } => transcript,
                        other => {
                            return Err(Error::Precondition(format!(
                                "internal: sweep and span search disagree: {other:?}"
                            )))
                        }
                    };
                    out.verdict = Verdict::No;
                    out.counterexample = Some(UnchordedCycle { cycle, transcript });
                    return Ok(out);
                }
            }
            next.insert(w, z);
        }
        previous = next;
    }
    Ok(out)
}

/// Runs [`is_d_chorded`] on every pure skeleton of dimension `1..=dim Γ`.
pub fn is_chorded(gamma: &SimplicialComplex, cfg: &ChordConfig) -> Result<ChordedVerdict> {
    let top = gamma.dim().unwrap_or(-1);
    let mut dimensions = Vec::new();
    for d in 1..=top.max(0) as usize {
        let skeleton = gamma.pure_skeleton(d)?;
        dimensions.push(is_d_chorded(&skeleton, d, cfg)?);
    }
    let verdict = dimensions.iter().fold(Verdict::Yes, |acc, v| acc.and(v.verdict));
    Ok(ChordedVerdict { verdict, mode: cfg.mode, dimensions })
}

/// One 1-complete, face-minimal, non-complete cycle and its chord search.
#[derive(Clone, Debug, PartialEq, Eq, DeriveSerialize)]
pub struct SpecialCycle {
    pub cycle: CycleCertificate,
    pub search: ChordSearch,
}

#[derive(Clone, Debug, PartialEq, Eq, DeriveSerialize)]
pub struct SpecialLevel {
    pub dim: usize,
    /// Set when the cycles of this dimension could not be enumerated.
    pub inconclusive_reason: Option<String>,
    pub cycles: Vec<SpecialCycle>,
}

impl SpecialLevel {
    pub fn verdict(&self) -> Verdict {
        if self.inconclusive_reason.is_some() {
            return Verdict::Inconclusive;
        }
        self.cycles.iter().fold(Verdict::Yes, |acc, c| {
            acc.and(match &c.search {
                ChordSearch::Found { .. } => Verdict::Yes,
                ChordSearch::Exhausted { .. } => Verdict::No,
                ChordSearch::Inconclusive { .. } => Verdict::Inconclusive,
            })
        })
    }
}

/// For `Γ = Δ_d(Γ^[d])` and each `m > d`: the 1-complete, face-minimal,
/// non-`m`-complete `m`-cycles of `Γ^[m]`, each with a chord search in `Γ`.
pub fn special_cycle_scan(gamma: &SimplicialComplex, d: usize, cfg: &ChordConfig) -> Result<Vec<SpecialLevel>> {
    let skeleton = gamma.pure_skeleton(d)?;
    if &skeleton.d_closure(d)? != gamma {
        return Err(Error::Precondition(format!("complex is not the {d}-closure of its pure {d}-skeleton")));
    }
    let top = gamma.dim().unwrap_or(-1);
    let mut levels = Vec::new();
    for m in d + 1..=top.max(0) as usize {
        let sk = gamma.pure_skeleton(m)?;
        let mut level = SpecialLevel { dim: m, inconclusive_reason: None, cycles: Vec::new() };
        match enumerate_face_minimal_cycles(&sk, m, cfg.kernel_cap) {
            Ok(cycles) => {
                let special: Vec<CycleCertificate> =
                    cycles.into_iter().filter(|c| c.is_one_complete() && !c.is_d_complete()).collect();
                let searches: Vec<Result<ChordSearch>> =
                    special.par_iter().map(|c| find_chord_set_exact(gamma, c, cfg)).collect();
                for (cycle, search) in special.into_iter().zip(searches) {
                    level.cycles.push(SpecialCycle { cycle, search: search? });
                }
            }
            Err(e @ Error::EnumerationInfeasible { .. }) => level.inconclusive_reason = Some(e.to_string()),
            Err(e) => return Err(e),
        }
        levels.push(level);
    }
    Ok(levels)
}

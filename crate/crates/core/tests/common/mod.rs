//! Seeded property checks shared by the acceptance runner and the proptest
//! suite. Each check draws one instance from `rng` and returns `Ok(false)`
//! when the instance does not meet the property's hypotheses.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use lrchord::chordality::{is_d_chorded, ChordConfig, Verdict};
use lrchord::complex::default_labels;
use lrchord::cycles::{cone_extension, enumerate_face_minimal_cycles, is_d_dimensional_cycle, vertex_link_cycles};
use lrchord::generate::{random_complex, random_pure_complex, random_uniform_faces};
use lrchord::homology::{boundary_matrix, is_boundary, reduced_homology_dim};
use lrchord::{BitVector, Chain, CycleCertificate, Error, Face, GF2Matrix, MonomialIdeal, SimplicialComplex};

pub type Check = fn(&mut ChaCha8Rng) -> Result<bool, String>;

pub const SUITES: [(&str, Check); 8] = [
    ("closure composition", closure_composition),
    ("closure of own skeleton", own_closure_iff_equigenerated),
    ("cycles and homological cycles", cycles_are_homological_cycles),
    ("cone extension", cone_extension_is_cycle),
    ("vertex links", vertex_links_are_cycles),
    ("boundary of boundary", boundary_of_boundary),
    ("vanishing homology of chorded closures", chorded_closure_vanishing),
    ("face-minimal cycles are circuits", face_minimal_vs_brute_force),
];

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err(e: Error) -> String {
    e.to_string()
}

/// The complex generated by the `t`-faces, void if there are none.
fn skeleton(c: &SimplicialComplex, t: usize) -> SimplicialComplex {
    SimplicialComplex::new(c.labels().to_vec(), c.faces_of_dim(t)).unwrap()
}

fn random_pure(rng: &mut ChaCha8Rng, n_range: std::ops::RangeInclusive<usize>, d: usize) -> SimplicialComplex {
    let n = rng.random_range(n_range).max(d + 1);
    let total = Face::full(n).subsets_of_size(d + 1).count();
    let count = rng.random_range(1..=total);
    random_pure_complex(rng, n, d, count)
}

/// Closing at dimension `m` after closing at `n`: a simplex below `n`, the
/// same complex at `n`, and the same upper skeletons above `n`.
pub fn closure_composition(rng: &mut ChaCha8Rng) -> Result<bool, String> {
    let n = rng.random_range(1..=3);
    let gamma = random_pure(rng, n + 1..=7, n);
    let closed = gamma.d_closure(n).map_err(err)?;
    let top = closed.dim().unwrap_or(0).max(0) as usize;
    for m in 1..=top + 1 {
        let again = skeleton(&closed, m).d_closure(m).map_err(err)?;
        if m < n {
            let simplex = SimplicialComplex::simplex(gamma.labels().to_vec()).map_err(err)?;
            ensure!(again == simplex, "m={m} < n={n}: closure is {again}, not a simplex on {gamma}");
        } else if m == n {
            ensure!(again == closed, "m = n = {n}: {again} != {closed}");
        } else {
            for t in m..=top + 1 {
                ensure!(
                    skeleton(&again, t) == skeleton(&closed, t),
                    "m={m} > n={n}, t={t}: skeletons differ for {gamma}"
                );
            }
        }
    }
    Ok(true)
}

/// `N(Γ)` is generated in degree `d + 1` exactly when `Γ = Δ_d(Γ^[d])`. The
/// zero ideal counts as generated in every degree.
pub fn own_closure_iff_equigenerated(rng: &mut ChaCha8Rng) -> Result<bool, String> {
    let n = rng.random_range(2..=7);
    let d = rng.random_range(1..=3usize.min(n - 1));
    // Half the instances are closures, so both directions are exercised.
    let gamma = if rng.random_bool(0.5) {
        let count = rng.random_range(1..=Face::full(n).subsets_of_size(d + 1).count());
        random_pure_complex(rng, n, d, count).d_closure(d).map_err(err)?
    } else {
        let count = rng.random_range(1..=6);
        random_complex(rng, n, count)
    };
    let ideal = MonomialIdeal::stanley_reisner_ideal(&gamma).map_err(err)?;
    let equigenerated = ideal.generators().iter().all(|g| g.len() == d + 1);
    let own = gamma == skeleton(&gamma, d).d_closure(d).map_err(err)?;
    ensure!(equigenerated == own, "d={d}, {gamma}: generated in degree d+1 is {equigenerated}, own closure is {own}");
    Ok(true)
}

/// A random element of the cycle space splits into `d`-path components that
/// are `d`-dimensional cycles, and the face sum of each has zero boundary.
pub fn cycles_are_homological_cycles(rng: &mut ChaCha8Rng) -> Result<bool, String> {
    let d = rng.random_range(1..=3);
    let sigma = random_pure(rng, d + 2..=7, d);
    let kernel = boundary_matrix(&sigma, d).kernel_basis();
    if kernel.is_empty() {
        return Ok(false);
    }
    let faces = sigma.faces_of_dim(d);
    let mut z = BitVector::zeros(faces.len());
    for k in &kernel {
        if rng.random_bool(0.5) {
            z.xor_assign(k);
        }
    }
    if z.is_zero() {
        z = kernel[0].clone();
    }
    let support = SimplicialComplex::new(sigma.labels().to_vec(), z.iter_ones().map(|i| faces[i])).unwrap();
    for component in support.path_components().map_err(err)? {
        ensure!(is_d_dimensional_cycle(&component).map_err(err)?, "component {component} of a cycle is not a cycle");
        let chain = Chain::from_faces(&sigma, d, component.facets().iter().copied()).map_err(err)?;
        ensure!(chain.boundary_is_zero(), "face sum of cycle {component} has nonzero boundary");
    }
    let whole = Chain::from_faces(&sigma, d, faces.iter().copied()).map_err(err)?;
    if is_d_dimensional_cycle(&sigma).map_err(err)? {
        ensure!(whole.boundary_is_zero(), "{sigma} is a cycle with nonzero boundary");
    }
    Ok(true)
}

/// Drops kernel supports from `a` until the boundaries are independent.
fn minimize_filler(a: &mut Vec<Face>, ridges: &[Face]) {
    loop {
        let columns: Vec<BitVector> = a
            .iter()
            .map(|f| {
                BitVector::from_indices(ridges.len(), f.facets_of_boundary().map(|r| ridges.binary_search(&r).unwrap()))
            })
            .collect();
        let m = GF2Matrix::from_columns(ridges.len(), &columns).unwrap();
        let Some(z) = m.kernel_basis().into_iter().next() else { return };
        let drop: BTreeSet<usize> = z.iter_ones().collect();
        *a = a.iter().enumerate().filter(|(i, _)| !drop.contains(i)).map(|(_, f)| *f).collect();
    }
}

/// Coning a bounding cycle over a fresh vertex, together with a minimal
/// filler, gives a cycle one dimension up.
pub fn cone_extension_is_cycle(rng: &mut ChaCha8Rng) -> Result<bool, String> {
    let d = rng.random_range(1..=2);
    let n = rng.random_range(d + 3..=6);
    let total = Face::full(n).subsets_of_size(d + 1).count();
    let count = rng.random_range(total / 2..=total);
    let faces = random_uniform_faces(rng, n, d + 1, count);
    let gamma = SimplicialComplex::new(default_labels(n + 1), faces).unwrap().d_closure(d).map_err(err)?;
    let cycles = enumerate_face_minimal_cycles(&skeleton(&gamma, d), d, 20).map_err(err)?;
    let mut tried = false;
    for omega in cycles.iter().filter(|c| !c.vertices().contains(n)) {
        let local = gamma.induced(omega.vertices());
        let chain = Chain::from_faces(&local, d, omega.faces().iter().copied()).map_err(err)?;
        let Some(filler) = is_boundary(&local, &chain).map_err(err)? else { continue };
        let mut a = filler.faces();
        minimize_filler(&mut a, &local.faces_of_dim(d));
        let cone = cone_extension(omega, &a, n).map_err(err)?;
        let mut expected: Vec<Face> = omega.faces().iter().map(|f| f.with(n)).chain(a.iter().copied()).collect();
        expected.sort();
        let mut got = cone.faces().to_vec();
        got.sort();
        ensure!(got == expected, "cone faces differ for {}", omega.complex());
        let as_chain = Chain::from_faces(cone.complex(), d + 1, got).map_err(err)?;
        ensure!(as_chain.boundary_is_zero(), "cone over {} has nonzero boundary", omega.complex());
        ensure!(is_d_dimensional_cycle(cone.complex()).map_err(err)?, "cone over {} is not a cycle", omega.complex());
        tried = true;
    }
    Ok(tried)
}

/// The link of a vertex in a `d`-cycle splits into `(d-1)`-cycles covering
/// exactly the faces `F \ v`.
pub fn vertex_links_are_cycles(rng: &mut ChaCha8Rng) -> Result<bool, String> {
    let d = rng.random_range(2..=3);
    let sigma = random_pure(rng, d + 2..=7, d);
    let cycles = enumerate_face_minimal_cycles(&sigma, d, 20).map_err(err)?;
    let Some(omega) = cycles.get(rng.random_range(0..cycles.len().max(1))) else { return Ok(false) };
    for v in omega.vertices().vertices() {
        let parts = vertex_link_cycles(omega, v).map_err(err)?;
        let mut covered: Vec<Face> = Vec::new();
        for p in &parts {
            ensure!(p.dim() == d - 1, "link part of wrong dimension");
            ensure!(is_d_dimensional_cycle(p.complex()).map_err(err)?, "link part {} is not a cycle", p.complex());
            covered.extend(p.faces());
        }
        covered.sort();
        let mut expected: Vec<Face> = omega.faces().iter().filter(|f| f.contains(v)).map(|f| f.without(v)).collect();
        expected.sort();
        ensure!(covered == expected, "link of {v} in {} is not partitioned", omega.complex());
    }
    Ok(true)
}

pub fn boundary_of_boundary(rng: &mut ChaCha8Rng) -> Result<bool, String> {
    let n = rng.random_range(1..=7);
    let count = rng.random_range(1..=5);
    let gamma = random_complex(rng, n, count);
    let top = gamma.dim().unwrap_or(0).max(0) as usize;
    for d in 0..top {
        let outer = boundary_matrix(&gamma, d);
        let inner = boundary_matrix(&gamma, d + 1);
        for j in 0..inner.n_cols() {
            ensure!(
                outer.mul_vec(&inner.column(j)).map_err(err)?.is_zero(),
                "∂∂ ≠ 0 at dimension {} of {gamma}",
                d + 1
            );
        }
    }
    Ok(true)
}

/// On a `d`-chorded complex (decided by exhaustive chord-set search) the
/// closure has no homology in dimensions `0..=d-2` or `d` on any induced
/// subcomplex.
pub fn chorded_closure_vanishing(rng: &mut ChaCha8Rng) -> Result<bool, String> {
    let d = rng.random_range(1..=2);
    let n = rng.random_range(d + 2..=6);
    let total = Face::full(n).subsets_of_size(d + 1).count();
    // Dense instances are far more often chorded.
    let count = rng.random_range(total * 2 / 3..=total);
    let gamma = random_pure_complex(rng, n, d, count);
    let verdict = is_d_chorded(&gamma, d, &ChordConfig::exact()).map_err(err)?.verdict;
    if verdict != Verdict::Yes {
        return Ok(false);
    }
    let closed = gamma.d_closure(d).map_err(err)?;
    for w in 0u64..1 << n {
        let induced = closed.induced(Face::from_bits(w));
        for i in (0..d.saturating_sub(1)).chain([d]) {
            let h = reduced_homology_dim(&induced, i as isize);
            ensure!(
                h == 0,
                "d-chorded {gamma}: H~_{i} of closure on {} is {h}",
                closed.format_face(Face::from_bits(w))
            );
        }
    }
    Ok(true)
}

/// Face-minimal cycles from the kernel enumeration agree with a brute-force
/// search over all subsets of `d`-faces.
pub fn face_minimal_vs_brute_force(rng: &mut ChaCha8Rng) -> Result<bool, String> {
    let d = rng.random_range(1..=2);
    let n = rng.random_range(d + 2..=7);
    let total = Face::full(n).subsets_of_size(d + 1).count();
    let count = rng.random_range(3..=12.min(total));
    let gamma = random_pure_complex(rng, n, d, count);
    let faces = gamma.faces_of_dim(d);
    let labels = gamma.labels().to_vec();
    let cycles: Vec<u32> = (1u32..1 << faces.len())
        .filter(|&mask| {
            let subset = (0..faces.len()).filter(|i| mask >> i & 1 == 1).map(|i| faces[i]);
            is_d_dimensional_cycle(&SimplicialComplex::new(labels.clone(), subset).unwrap()).unwrap()
        })
        .collect();
    let minimal: BTreeSet<Vec<Face>> = cycles
        .iter()
        .filter(|&&m| !cycles.iter().any(|&o| o != m && o & m == o))
        .map(|&m| (0..faces.len()).filter(|i| m >> i & 1 == 1).map(|i| faces[i]).collect())
        .collect();
    let enumerated: BTreeSet<Vec<Face>> = enumerate_face_minimal_cycles(&gamma, d, 20)
        .map_err(err)?
        .iter()
        .map(|c: &CycleCertificate| c.faces().to_vec())
        .collect();
    ensure!(minimal == enumerated, "{gamma}: brute force {minimal:?} vs enumeration {enumerated:?}");
    Ok(true)
}

/// Runs `check` on fresh seeds until `wanted` applicable instances pass.
pub fn run_suite(check: Check, wanted: usize, base_seed: u64) -> Result<usize, String> {
    let mut applicable = 0;
    for i in 0..wanted as u64 * 200 {
        let seed = base_seed.wrapping_add(i);
        let mut r = lrchord::generate::rng(seed);
        if check(&mut r).map_err(|e| format!("seed {seed}: {e}"))? {
            applicable += 1;
            if applicable == wanted {
                return Ok(applicable);
            }
        }
    }
    Err(format!("only {applicable} of {wanted} applicable instances found"))
}

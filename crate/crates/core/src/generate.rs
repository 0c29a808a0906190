//! Seeded random instances. The same seed always yields the same instance.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{default_labels, SimplicialComplex};
use crate::face::Face;
use crate::graph::Graph;
use crate::ideal::MonomialIdeal;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly random `k`-subset of `0..n`.
pub fn random_subset<R: Rng>(rng: &mut R, n: usize, k: usize) -> Face {
    Face::from_vertices(sample(rng, n, k))
}

/// `count` distinct random `size`-subsets of `0..n` (fewer if there are not that many).
pub fn random_uniform_faces<R: Rng>(rng: &mut R, n: usize, size: usize, count: usize) -> Vec<Face> {
    let all: Vec<Face> = Face::full(n).subsets_of_size(size).collect();
    let count = count.min(all.len());
    let mut picked: Vec<Face> = sample(rng, all.len(), count).into_iter().map(|i| all[i]).collect();
    picked.sort();
    picked
}

/// An ideal in `n` variables with `count` random generators of degree `degree`.
pub fn random_ideal<R: Rng>(rng: &mut R, n: usize, degree: usize, count: usize) -> MonomialIdeal {
    MonomialIdeal::new(default_labels(n), random_uniform_faces(rng, n, degree, count)).expect("valid generators")
}

/// An ideal generated in degree `degree` on between `degree + 1` and
/// `n_max` variables with a random number of generators.
pub fn random_equigenerated_ideal<R: Rng>(rng: &mut R, n_max: usize, degree: usize) -> MonomialIdeal {
    let n = rng.random_range((degree + 1).min(n_max)..=n_max);
    let total = Face::full(n).subsets_of_size(degree).count();
    let count = rng.random_range(1..=total);
    random_ideal(rng, n, degree, count)
}

/// A pure `d`-complex with `count` random `d`-faces on `n` vertices.
pub fn random_pure_complex<R: Rng>(rng: &mut R, n: usize, d: usize, count: usize) -> SimplicialComplex {
    SimplicialComplex::new(default_labels(n), random_uniform_faces(rng, n, d + 1, count)).expect("valid faces")
}

/// A complex generated by `count` random nonempty faces of mixed sizes.
pub fn random_complex<R: Rng>(rng: &mut R, n: usize, count: usize) -> SimplicialComplex {
    let faces: Vec<Face> = (0..count)
        .map(|_| {
            let k = rng.random_range(1..=n);
            random_subset(rng, n, k)
        })
        .collect();
    SimplicialComplex::new(default_labels(n), faces).expect("valid faces")
}

/// Erdős-Rényi graph: each edge independently with probability `p`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).expect("n within bounds");
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds_are_reproducible() {
        let a = random_equigenerated_ideal(&mut rng(7), 7, 3);
        let b = random_equigenerated_ideal(&mut rng(7), 7, 3);
        assert_eq!(a, b);
        assert_eq!(a.generation_degree().unwrap(), Some(3));
    }

    #[test]
    fn shapes() {
        let mut r = rng(1);
        let c = random_pure_complex(&mut r, 6, 2, 8);
        assert_eq!(c.facets().len(), 8);
        assert_eq!(c.pure_dimension(), Some(2));
        let g = random_graph(&mut r, 6, 1.0);
        assert_eq!(g.edges().len(), 15);
        assert_eq!(random_uniform_faces(&mut r, 4, 2, 100).len(), 6);
    }
}

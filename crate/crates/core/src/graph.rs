//! Simple graphs and an independent chordality oracle (maximum cardinality
//! search plus a perfect-elimination check).

use std::collections::VecDeque;

use serde::Serialize;

use crate::complex::{default_labels, SimplicialComplex};
use crate::error::{Error, Result};
use crate::face::{Face, VertexSet, MAX_VERTICES};
use crate::ideal::MonomialIdeal;

/// A simple undirected graph on vertices `0..n`, stored as adjacency masks.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { got: n, max: MAX_VERTICES });
        }
        Ok(Graph { adj: vec![Face::EMPTY; n] })
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            if u.max(v) >= n {
                return Err(Error::VertexOutOfRange { vertex: u.max(v), n_vertices: n });
            }
            if u == v {
                return Err(Error::Precondition(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// The cycle `0-1-...-(n-1)-0`.
    pub fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    /// The graph on `0..n` whose edge set is given by the bits of `code`,
    /// one bit per pair in the order (0,1), (0,2), ..., (1,2), ...
    pub fn from_code(n: usize, code: u64) -> Graph {
        let mut g = Graph::empty(n).unwrap();
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if code >> bit & 1 == 1 {
                    g.add_edge(u, v);
                }
                bit += 1;
            }
        }
        g
    }

    /// The graph formed by the 1-faces of a complex.
    pub fn from_complex(complex: &SimplicialComplex) -> Graph {
        let mut g = Graph::empty(complex.n_vertices()).unwrap();
        for e in complex.faces_of_dim(1) {
            let mut vs = e.vertices();
            let (u, v) = (vs.next().unwrap(), vs.next().unwrap());
            g.add_edge(u, v);
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u] = self.adj[u].with(v);
        self.adj[v] = self.adj[v].with(u);
    }

    pub fn n_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n_vertices())
            .flat_map(|u| self.adj[u].vertices().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    fn is_clique(&self, s: VertexSet) -> bool {
        s.vertices().all(|v| s.without(v).is_subset(self.adj[v]))
    }

    /// The pure 1-dimensional complex of edges, on ground set `x0..`.
    pub fn edge_complex(&self) -> SimplicialComplex {
        let faces = self.edges().into_iter().map(|(u, v)| Face::from_vertices([u, v]));
        SimplicialComplex::new(default_labels(self.n_vertices()), faces).unwrap()
    }

    /// The clique complex, i.e. the 1-closure of the edge complex.
    pub fn clique_complex(&self) -> SimplicialComplex {
        self.edge_complex().d_closure(1).expect("edge complex is pure of dimension 1")
    }

    /// The ideal generated by `x_u x_v` for every edge.
    pub fn edge_ideal(&self) -> MonomialIdeal {
        let gens = self.edges().into_iter().map(|(u, v)| Face::from_vertices([u, v]));
        MonomialIdeal::new(default_labels(self.n_vertices()), gens).unwrap()
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph({}; {:?})", self.n_vertices(), self.edges())
    }
}

/// Same vertices, an edge exactly where `g` has none.
pub fn graph_complement(g: &Graph) -> Graph {
    let all = Face::full(g.n_vertices());
    Graph { adj: (0..g.n_vertices()).map(|v| all.difference(g.adj[v]).without(v)).collect() }
}

/// Outcome of the chordality test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Chordality {
    /// Each vertex's later neighbours in `order` form a clique.
    Chordal { elimination_order: Vec<usize> },
    /// An induced cycle of length at least four, as a vertex sequence.
    NotChordal { chordless_cycle: Vec<usize> },
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal { .. })
    }
}

/// Maximum cardinality search; returns vertices in visit order. Ties go to
/// the smallest vertex id.
fn maximum_cardinality_search(g: &Graph) -> Vec<usize> {
    let n = g.n_vertices();
    let mut weight = vec![0usize; n];
    let mut visited = Face::EMPTY;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !visited.contains(v)).max_by_key(|&v| (weight[v], std::cmp::Reverse(v))).unwrap();
        visited = visited.with(v);
        order.push(v);
        for u in g.adj[v].vertices() {
            weight[u] += 1;
        }
    }
    order
}

fn is_perfect_elimination_order(g: &Graph, order: &[usize]) -> bool {
    let mut later = Face::full(g.n_vertices());
    for &v in order {
        later = later.without(v);
        if !g.is_clique(g.adj[v].intersection(later)) {
            return false;
        }
    }
    true
}

/// Shortest path from `a` to `b` using only vertices of `allowed`.
fn shortest_path(g: &Graph, a: usize, b: usize, allowed: VertexSet) -> Option<Vec<usize>> {
    let mut prev = vec![usize::MAX; g.n_vertices()];
    let mut seen = Face::singleton(a);
    let mut queue = VecDeque::from([a]);
    while let Some(u) = queue.pop_front() {
        if u == b {
            let mut path = vec![b];
            let mut x = b;
            while x != a {
                x = prev[x];
                path.push(x);
            }
            path.reverse();
            return Some(path);
        }
        for w in g.adj[u].intersection(allowed).difference(seen).vertices() {
            seen = seen.with(w);
            prev[w] = u;
            queue.push_back(w);
        }
    }
    None
}

/// An induced cycle of length at least four, if one exists. For a vertex `v`
/// with non-adjacent neighbours `a`, `b`, a shortest `a`-`b` path avoiding
/// the rest of `N[v]` closes an induced cycle through `v`.
pub fn chordless_cycle(g: &Graph) -> Option<Vec<usize>> {
    let all = Face::full(g.n_vertices());
    for v in 0..g.n_vertices() {
        let nv = g.adj[v];
        for a in nv.vertices() {
            for b in nv.vertices().filter(|&b| b > a && !g.has_edge(a, b)) {
                let allowed = all.difference(nv.with(v)).with(a).with(b);
                if let Some(path) = shortest_path(g, a, b, allowed) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

pub fn is_chordal_graph(g: &Graph) -> Chordality {
    let mut order = maximum_cardinality_search(g);
    order.reverse();
    if is_perfect_elimination_order(g, &order) {
        Chordality::Chordal { elimination_order: order }
    } else {
        let cycle = chordless_cycle(g).expect("a graph without a perfect elimination order has a chordless cycle");
        Chordality::NotChordal { chordless_cycle: cycle }
    }
}

//! Batch cross-checks: chordality of graphs against linearity of the edge
//! ideal of their complements, and homological linearity of random ideals
//! against chordedness of their Stanley-Reisner complexes.

use rayon::prelude::*;
use serde::Serialize;

use crate::chordality::{is_chorded, ChordConfig, SearchMode, Verdict};
use crate::error::{Error, Result};
use crate::generate::{random_equigenerated_ideal, random_graph, rng};
use crate::graph::Graph;
use crate::ideal::MonomialIdeal;
use crate::io::write_ideal;
use crate::resolution::{froeberg_crosscheck, has_linear_resolution_within, FroebergRecord, DEFAULT_SWEEP_LIMIT};

/// Largest vertex count for exhaustive graph enumeration (2^21 graphs).
pub const EXHAUSTIVE_GRAPH_LIMIT: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub n_vertices: usize,
    pub exhaustive: bool,
    pub seed: Option<u64>,
    pub checked: usize,
    pub chordal: usize,
    pub agreements: usize,
    pub counterexamples: Vec<FroebergRecord>,
}

impl GraphSummary {
    pub fn all_agree(&self) -> bool {
        self.agreements == self.checked
    }
}

fn summarize_graphs(n: usize, exhaustive: bool, seed: Option<u64>, graphs: Vec<Graph>) -> Result<GraphSummary> {
    let records: Vec<FroebergRecord> = graphs.par_iter().map(froeberg_crosscheck).collect::<Result<_>>()?;
    Ok(GraphSummary {
        n_vertices: n,
        exhaustive,
        seed,
        checked: records.len(),
        chordal: records.iter().filter(|r| r.chordality.is_chordal()).count(),
        agreements: records.iter().filter(|r| r.agree).count(),
        counterexamples: records.into_iter().filter(|r| !r.agree).collect(),
    })
}

/// Every labelled graph on `n` vertices.
pub fn crosscheck_graphs_exhaustive(n: usize) -> Result<GraphSummary> {
    if n > EXHAUSTIVE_GRAPH_LIMIT {
        return Err(Error::Infeasible { what: "exhaustive graph enumeration", n, limit: EXHAUSTIVE_GRAPH_LIMIT });
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let graphs = (0u64..1 << pairs).map(|code| Graph::from_code(n, code)).collect();
    summarize_graphs(n, true, None, graphs)
}

/// `count` random graphs on `n` vertices, edge density drawn per graph.
pub fn crosscheck_graphs_sampled(n: usize, count: usize, seed: u64) -> Result<GraphSummary> {
    if n > DEFAULT_SWEEP_LIMIT {
        return Err(Error::Infeasible { what: "graph cross-check", n, limit: DEFAULT_SWEEP_LIMIT });
    }
    let mut r = rng(seed);
    let graphs = (0..count)
        .map(|_| {
            let p = rand::Rng::random_range(&mut r, 0.1..0.9);
            random_graph(&mut r, n, p)
        })
        .collect();
    summarize_graphs(n, false, Some(seed), graphs)
}

/// One instance of the ideal cross-check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealCase {
    pub index: usize,
    pub ideal: MonomialIdeal,
    pub linear: bool,
    pub chorded: Verdict,
    /// (b) was recomputed in exact mode after a boundary-mode disagreement.
    pub escalated: bool,
}

impl IdealCase {
    pub fn agree(&self) -> Option<bool> {
        self.chorded.as_bool().map(|b| b == self.linear)
    }

    /// A ready-to-rerun ideal file.
    pub fn to_file(&self, seed: u64) -> String {
        format!(
            "# cross-check instance {} (seed {seed}): homology says {}, chordedness says {}\n{}",
            self.index,
            if self.linear { "linear" } else { "not linear" },
            self.chorded,
            write_ideal(&self.ideal)
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealSummary {
    pub n_max: usize,
    pub dims: Vec<usize>,
    pub seed: u64,
    pub checked: usize,
    pub linear: usize,
    pub conclusive: usize,
    pub agreements: usize,
    pub escalations: usize,
    pub inconclusive: Vec<IdealCase>,
    pub disagreements: Vec<IdealCase>,
}

impl IdealSummary {
    pub fn all_agree(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Linearity (homology) against chordedness of `N(I)` on `count` random
/// ideals generated in degree `d + 1`, `d` drawn from `dims`, on at most
/// `n_max` variables.
pub fn crosscheck_ideals(
    n_max: usize,
    dims: &[usize],
    count: usize,
    seed: u64,
    cfg: &ChordConfig,
) -> Result<IdealSummary> {
    if n_max > cfg.max_vertices {
        return Err(Error::Infeasible { what: "ideal cross-check", n: n_max, limit: cfg.max_vertices });
    }
    if dims.is_empty() || dims.iter().any(|&d| d + 1 > n_max) {
        return Err(Error::Precondition(format!("dimensions {dims:?} do not fit in {n_max} variables")));
    }
    let mut r = rng(seed);
    let ideals: Vec<MonomialIdeal> = (0..count)
        .map(|_| {
            let d = dims[rand::Rng::random_range(&mut r, 0..dims.len())];
            random_equigenerated_ideal(&mut r, n_max, d + 1)
        })
        .collect();
    let cases: Vec<IdealCase> = ideals
        .into_par_iter()
        .enumerate()
        .map(|(index, ideal)| -> Result<IdealCase> {
            let linear = has_linear_resolution_within(&ideal, cfg.max_vertices)?.linear;
            let n = ideal.stanley_reisner_complex();
            let mut chorded = is_chorded(&n, cfg)?.verdict;
            let mut escalated = false;
            if cfg.mode == SearchMode::Boundary && chorded.as_bool() != Some(linear) {
                chorded = is_chorded(&n, &ChordConfig { mode: SearchMode::Exact, ..*cfg })?.verdict;
                escalated = true;
            }
            Ok(IdealCase { index, ideal, linear, chorded, escalated })
        })
        .collect::<Result<_>>()?;
    Ok(IdealSummary {
        n_max,
        dims: dims.to_vec(),
        seed,
        checked: cases.len(),
        linear: cases.iter().filter(|c| c.linear).count(),
        conclusive: cases.iter().filter(|c| c.agree().is_some()).count(),
        agreements: cases.iter().filter(|c| c.agree() == Some(true)).count(),
        escalations: cases.iter().filter(|c| c.escalated).count(),
        inconclusive: cases.iter().filter(|c| c.agree().is_none()).cloned().collect(),
        disagreements: cases.into_iter().filter(|c| c.agree() == Some(false)).collect(),
    })
}

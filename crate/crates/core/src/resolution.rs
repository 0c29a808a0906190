//! Linear resolutions in characteristic 2: the homological test on induced
//! subcomplexes, graded Betti numbers by Hochster's formula, and the full
//! comparison with the chordedness criteria.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use rayon::prelude::*;
use serde::Serialize;

use crate::chordality::{
    is_chorded, is_d_chorded, special_cycle_scan, ChordConfig, ChordedVerdict, SearchMode, SpecialLevel, Verdict,
};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::graph::{graph_complement, is_chordal_graph, Chordality, Graph};
use crate::homology::{first_nonvanishing_induced, FaceLevels, HomologyWitness};
use crate::ideal::MonomialIdeal;

/// Largest number of variables for the `2^n` subset sweeps.
pub const DEFAULT_SWEEP_LIMIT: usize = 20;

fn check_sweep(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::Infeasible { what: "subset sweep", n, limit });
    }
    Ok(())
}

/// Outcome of the homological linearity test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearityCheck {
    pub linear: bool,
    /// The common generator degree `t`; `None` for the zero ideal.
    pub degree: Option<usize>,
    /// First `(S, i)` with `H̃_i(N(I)_S) ≠ 0` and `i ≠ t - 2`.
    pub witness: Option<HomologyWitness>,
}

/// `I` has a linear resolution over GF(2) iff `H̃_i(N(I)_S) = 0` for every
/// nonempty `S` and every `i ≠ t - 2`. The zero ideal counts as linear.
pub fn has_linear_resolution(ideal: &MonomialIdeal) -> Result<LinearityCheck> {
    has_linear_resolution_within(ideal, DEFAULT_SWEEP_LIMIT)
}

pub fn has_linear_resolution_within(ideal: &MonomialIdeal, limit: usize) -> Result<LinearityCheck> {
    let degree = ideal.generation_degree()?;
    let Some(t) = degree else {
        return Ok(LinearityCheck { linear: true, degree, witness: None });
    };
    check_sweep(ideal.n_variables(), limit)?;
    let skip = t as isize - 2;
    let witness = first_nonvanishing_induced(&ideal.stanley_reisner_complex(), |i| i != skip);
    Ok(LinearityCheck { linear: witness.is_none(), degree, witness })
}

/// Graded Betti numbers `β_{i,j}` of `I` (nonzero entries only).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), usize>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries `((i, j), β_{i,j})` in order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Every nonzero `β_{i,j}` has `j = i + t`.
    pub fn is_linear(&self, t: usize) -> bool {
        self.entries.keys().all(|&(i, j)| j == i + t)
    }

    /// Macaulay2 layout: columns are `i`, rows are `j - i`, with a `total:` row.
    pub fn to_text(&self) -> String {
        let Some(max_i) = self.entries.keys().map(|&(i, _)| i).max() else {
            return "total:\n".to_string();
        };
        let rows: Vec<usize> = {
            let lo = self.entries.keys().map(|&(i, j)| j - i).min().unwrap();
            let hi = self.entries.keys().map(|&(i, j)| j - i).max().unwrap();
            (lo..=hi).collect()
        };
        let totals: Vec<usize> =
            (0..=max_i).map(|i| self.entries.iter().filter(|(k, _)| k.0 == i).map(|(_, v)| v).sum()).collect();
        let cell = |v: usize| if v == 0 { ".".to_string() } else { v.to_string() };
        let mut table: Vec<(String, Vec<String>)> = Vec::new();
        table.push((String::new(), (0..=max_i).map(|i| i.to_string()).collect()));
        table.push(("total:".to_string(), totals.iter().map(|&v| v.to_string()).collect()));
        for r in rows {
            table.push((format!("{r}:"), (0..=max_i).map(|i| cell(self.get(i, i + r))).collect()));
        }
        let label_w = table.iter().map(|(l, _)| l.len()).max().unwrap();
        let col_w: Vec<usize> = (0..=max_i).map(|c| table.iter().map(|(_, cs)| cs[c].len()).max().unwrap()).collect();
        let mut out = String::new();
        for (label, cells) in &table {
            let _ = write!(out, "{label:>label_w$}");
            for (c, s) in cells.iter().enumerate() {
                let w = col_w[c];
                let _ = write!(out, " {s:>w$}");
            }
            out.push('\n');
        }
        out
    }
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            i: usize,
            j: usize,
            value: usize,
        }
        s.collect_seq(self.entries.iter().map(|(&(i, j), &value)| Entry { i, j, value }))
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// `β_{i,j}(I) = Σ_{|S| = j} dim H̃_{j-i-2}(N(I)_S)` over GF(2).
pub fn betti_table(ideal: &MonomialIdeal) -> Result<BettiTable> {
    betti_table_within(ideal, DEFAULT_SWEEP_LIMIT)
}

pub fn betti_table_within(ideal: &MonomialIdeal, limit: usize) -> Result<BettiTable> {
    let n = ideal.n_variables();
    check_sweep(n, limit)?;
    if ideal.is_zero() {
        return Ok(BettiTable::default());
    }
    let levels = FaceLevels::new(&ideal.stanley_reisner_complex());
    let entries = (1u64..1u64 << n)
        .into_par_iter()
        .fold(BTreeMap::new, |mut acc: BTreeMap<(usize, usize), usize>, bits| {
            let s = Face::from_bits(bits);
            let j = s.len();
            for (k, &b) in levels.induced_betti(s).iter().enumerate() {
                // k indexes H̃_{k-1}; i = j - (k - 1) - 2
                if b != 0 && j > k {
                    *acc.entry((j - k - 1, j)).or_default() += b;
                }
            }
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        });
    Ok(BettiTable { entries })
}

/// Criterion II: the pure `d`-skeleton is `d`-chorded and every special
/// cycle above dimension `d` has a chord set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionTwo {
    pub skeleton: Verdict,
    pub levels: Vec<SpecialLevel>,
    pub verdict: Verdict,
}

/// The five equivalent conditions plus criterion II.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Verdicts {
    /// Homology of induced subcomplexes vanishes (a).
    pub a: Verdict,
    /// `N(I)` is chorded (b).
    pub b: Verdict,
    /// `N(I)^[m]` is `m`-chorded for every `m >= d` (c).
    pub c: Verdict,
    /// The `d`-closure of the `d`-complement of `F(I)` is chorded (d).
    pub d: Verdict,
    /// Its pure `m`-skeletons are `m`-chorded for `m >= d` (e).
    pub e: Verdict,
    pub criterion_two: Verdict,
}

impl Verdicts {
    pub const LABELS: [&'static str; 6] = ["a", "b", "c", "d", "e", "II"];

    pub fn as_array(&self) -> [Verdict; 6] {
        [self.a, self.b, self.c, self.d, self.e, self.criterion_two]
    }

    /// Pairwise agreement; `None` where either side is inconclusive.
    pub fn agreement_matrix(&self) -> Vec<Vec<Option<bool>>> {
        let v = self.as_array();
        v.iter().map(|x| v.iter().map(|y| Some(x.as_bool()? == y.as_bool()?)).collect()).collect()
    }

    /// All conclusive verdicts coincide.
    pub fn consistent(&self) -> bool {
        let conclusive: Vec<bool> = self.as_array().iter().filter_map(|v| v.as_bool()).collect();
        conclusive.windows(2).all(|w| w[0] == w[1])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolutionReport {
    pub characteristic: u32,
    pub ideal: MonomialIdeal,
    /// `d + 1`.
    pub generation_degree: usize,
    pub config: ChordConfig,
    pub homology: LinearityCheck,
    pub stanley_reisner: ChordedVerdict,
    pub complement_closure: ChordedVerdict,
    pub criterion_two: CriterionTwo,
    pub verdicts: Verdicts,
    pub agreement: Vec<Vec<Option<bool>>>,
    pub consistent: bool,
    /// Set when (b) was recomputed in exact mode after disagreeing with (a).
    pub escalated: bool,
}

impl ResolutionReport {
    /// `Yes` when linear, `No` when not, `Inconclusive` when the criteria
    /// disagree or could not finish.
    pub fn outcome(&self) -> Verdict {
        if !self.consistent || self.verdicts.as_array().contains(&Verdict::Inconclusive) {
            return Verdict::Inconclusive;
        }
        self.verdicts.a
    }
}

fn skeletons_from(v: &ChordedVerdict, m0: usize) -> Verdict {
    v.dimensions.iter().filter(|x| x.dim >= m0).fold(Verdict::Yes, |acc, x| acc.and(x.verdict))
}

/// Computes conditions (a)-(e) of the first criterion and criterion II.
pub fn criterion_report(ideal: &MonomialIdeal, cfg: &ChordConfig) -> Result<ResolutionReport> {
    let t = ideal
        .generation_degree()?
        .ok_or_else(|| Error::Precondition("the zero ideal has no generation degree".into()))?;
    let d = t - 1;
    let homology = has_linear_resolution_within(ideal, cfg.max_vertices)?;
    let a = Verdict::from_bool(homology.linear);

    let n = ideal.stanley_reisner_complex();
    let mut escalated = false;
    let mut stanley_reisner = is_chorded(&n, cfg)?;
    if cfg.mode == SearchMode::Boundary && stanley_reisner.verdict.as_bool().is_some_and(|b| b != homology.linear) {
        stanley_reisner = is_chorded(&n, &ChordConfig { mode: SearchMode::Exact, ..*cfg })?;
        escalated = true;
    }
    let b = stanley_reisner.verdict;
    let c = skeletons_from(&stanley_reisner, d.max(1));

    let upsilon = ideal.facet_complex().d_complement(d);
    let closure = upsilon.d_closure(d)?;
    let complement_closure = is_chorded(&closure, cfg)?;
    let dv = complement_closure.verdict;
    let e = skeletons_from(&complement_closure, d.max(1));

    let criterion_two = if d == 0 {
        // N(I) is a simplex on the variables outside I.
        CriterionTwo { skeleton: Verdict::Yes, levels: Vec::new(), verdict: Verdict::Yes }
    } else {
        let skeleton = match n.pure_skeleton(d) {
            Ok(sk) => is_d_chorded(&sk, d, cfg)?.verdict,
            Err(Error::EmptySkeleton { .. }) => Verdict::Yes,
            Err(e) => return Err(e),
        };
        let levels = if n.dim().unwrap_or(-1) >= d as isize { special_cycle_scan(&n, d, cfg)? } else { Vec::new() };
        let verdict = levels.iter().fold(skeleton, |acc, l| acc.and(l.verdict()));
        CriterionTwo { skeleton, levels, verdict }
    };

    let verdicts = Verdicts { a, b, c, d: dv, e, criterion_two: criterion_two.verdict };
    Ok(ResolutionReport {
        characteristic: 2,
        ideal: ideal.clone(),
        generation_degree: t,
        config: *cfg,
        homology,
        stanley_reisner,
        complement_closure,
        criterion_two,
        agreement: verdicts.agreement_matrix(),
        consistent: verdicts.consistent(),
        verdicts,
        escalated,
    })
}

impl fmt::Display for ResolutionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.generation_degree - 1;
        writeln!(f, "linear resolution check over a field of characteristic 2")?;
        writeln!(f, "ideal: {}", self.ideal)?;
        writeln!(
            f,
            "generated in degree {} (d = {d}), {} variables",
            self.generation_degree,
            self.ideal.n_variables()
        )?;
        writeln!(
            f,
            "mode: {}, kernel cap {}, chord cap {}, family cap {}",
            self.config.mode, self.config.kernel_cap, self.config.chord_cap, self.config.family_cap
        )?;
        writeln!(f)?;
        let labels = self.ideal.labels();
        let show_set = |s: Face| s.vertices().map(|v| labels[v].as_str()).collect::<Vec<_>>().join(" ");
        write!(f, "(a) induced homology vanishes:           {}", self.verdicts.a)?;
        match &self.homology.witness {
            Some(w) => writeln!(f, "  (dim H~_{}(N(I)_S) = {} for S = {{{}}})", w.index, w.dim, show_set(w.subset))?,
            None => writeln!(f)?,
        }
        writeln!(f, "(b) N(I) is chorded:                     {}", self.verdicts.b)?;
        writeln!(f, "(c) N(I)^[m] is m-chorded for m >= d:    {}", self.verdicts.c)?;
        writeln!(f, "(d) closure of the d-complement chorded: {}", self.verdicts.d)?;
        writeln!(f, "(e) its m-skeletons are m-chorded:       {}", self.verdicts.e)?;
        writeln!(f, "criterion II:                            {}", self.verdicts.criterion_two)?;
        if self.escalated {
            writeln!(f, "(b) was recomputed in exact mode after disagreeing with (a)")?;
        }
        writeln!(f)?;
        for dv in &self.stanley_reisner.dimensions {
            write!(f, "N(I)^[{}] is {}-chorded: {}", dv.dim, dv.dim, dv.verdict)?;
            if let Some(u) = &dv.counterexample {
                write!(
                    f,
                    "; face-minimal {}-cycle without chord set on {} faces: {}",
                    dv.dim,
                    u.cycle.faces().len(),
                    u.cycle.complex()
                )?;
            }
            if let Some(r) = &dv.inconclusive_reason {
                write!(f, " ({r})")?;
            }
            writeln!(f)?;
        }
        for level in &self.criterion_two.levels {
            write!(f, "criterion II, m = {}: {} special cycle(s)", level.dim, level.cycles.len())?;
            for c in &level.cycles {
                let outcome = if c.search.is_found() {
                    "chord set found"
                } else if c.search.is_exhausted() {
                    "no chord set"
                } else {
                    "search inconclusive"
                };
                write!(f, "; {} faces, {outcome}", c.cycle.faces().len())?;
            }
            if let Some(r) = &level.inconclusive_reason {
                write!(f, " ({r})")?;
            }
            writeln!(f)?;
        }
        writeln!(f)?;
        writeln!(f, "agreement     {}", Verdicts::LABELS.map(|l| format!("{l:>3}")).join(""))?;
        for (row, label) in self.agreement.iter().zip(Verdicts::LABELS) {
            let cells: Vec<String> = row
                .iter()
                .map(|c| match c {
                    Some(true) => "  =".to_string(),
                    Some(false) => "  X".to_string(),
                    None => "  ?".to_string(),
                })
                .collect();
            writeln!(f, "{label:>13} {}", cells.join(""))?;
        }
        let outcome = match self.outcome() {
            Verdict::Yes => "linear",
            Verdict::No => "not linear",
            Verdict::Inconclusive if !self.consistent => "criteria disagree",
            Verdict::Inconclusive => "inconclusive",
        };
        writeln!(f, "\nresult: {outcome}")
    }
}

/// One graph of the Fröberg comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FroebergRecord {
    pub n_vertices: usize,
    pub edges: Vec<(usize, usize)>,
    /// Linearity of the edge ideal of the complement.
    pub linear: bool,
    pub chordality: Chordality,
    pub agree: bool,
}

/// Compares linearity of the edge ideal of the complement of `g` (the
/// Stanley-Reisner ideal of its clique complex) with chordality of `g`.
pub fn froeberg_crosscheck(g: &Graph) -> Result<FroebergRecord> {
    let linear = has_linear_resolution(&graph_complement(g).edge_ideal())?.linear;
    let chordality = is_chordal_graph(g);
    Ok(FroebergRecord {
        n_vertices: g.n_vertices(),
        edges: g.edges(),
        linear,
        agree: linear == chordality.is_chordal(),
        chordality,
    })
}

/// Whether `complex = Δ_d(complex^[d])`.
pub fn is_own_closure(complex: &SimplicialComplex, d: usize) -> Result<bool> {
    let skeleton = match complex.pure_skeleton(d) {
        Ok(s) => s,
        Err(Error::EmptySkeleton { .. }) => complex.with_faces(std::iter::empty()),
        Err(e) => return Err(e),
    };
    Ok(&skeleton.d_closure(d)? == complex)
}

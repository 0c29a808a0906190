//! Built-in instances with the claims made about them, rechecked on demand.

use serde::Serialize;

use lrchord::chordality::{find_chord_set_enumerative, is_chorded, ChordSearch};
use lrchord::resolution::has_linear_resolution;
use lrchord::{
    catalog, enumerate_face_minimal_cycles, find_chord_set_exact, is_d_chorded, reduced_homology_dim, ChordConfig,
    CycleCertificate, MonomialIdeal, Result, SearchMode, SimplicialComplex, Verdict,
};

pub const NAMES: [&str; 4] = ["ex216", "rp2", "fig5", "octa"];

#[derive(Clone, Debug, Serialize)]
pub struct Claim {
    pub claim: String,
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReproReport {
    pub name: String,
    pub instance: SimplicialComplex,
    pub claims: Vec<Claim>,
}

impl ReproReport {
    pub fn all_hold(&self) -> bool {
        self.claims.iter().all(|c| c.holds)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("repro {}: {}\n", self.name, self.instance);
        for c in &self.claims {
            let mark = if c.holds { "ok  " } else { "FAIL" };
            out.push_str(&format!("  [{mark}] {} ({})\n", c.claim, c.detail));
        }
        let held = self.claims.iter().filter(|c| c.holds).count();
        out.push_str(&format!("{held}/{} claims hold\n", self.claims.len()));
        out
    }
}

struct Claims(Vec<Claim>);

impl Claims {
    fn push(&mut self, claim: impl Into<String>, holds: bool, detail: impl Into<String>) {
        self.0.push(Claim { claim: claim.into(), holds, detail: detail.into() });
    }
}

pub fn run(name: &str, cfg: &ChordConfig) -> Result<ReproReport> {
    let (instance, claims) = match name {
        "ex216" => (catalog::ex216(), ex216(cfg)?),
        "rp2" => (catalog::rp2(), rp2()?),
        "fig5" => (catalog::fig5(), fig5()?),
        "octa" => (catalog::octahedron_chorded(), octa(cfg)?),
        other => {
            return Err(lrchord::Error::Precondition(format!(
                "unknown instance `{other}` (expected one of {})",
                NAMES.join(", ")
            )))
        }
    };
    Ok(ReproReport { name: name.to_string(), instance, claims: claims.0 })
}

fn search_summary(s: &ChordSearch) -> &'static str {
    match s {
        ChordSearch::Found { .. } => "found",
        ChordSearch::Exhausted { .. } => "exhausted",
        ChordSearch::Inconclusive { .. } => "inconclusive",
    }
}

fn ex216(cfg: &ChordConfig) -> Result<Claims> {
    let mut out = Claims(Vec::new());
    let gamma = catalog::ex216();
    let boundary = is_d_chorded(&gamma, 2, &ChordConfig { mode: SearchMode::Boundary, ..*cfg })?.verdict;
    let exact = is_d_chorded(&gamma, 2, &ChordConfig { mode: SearchMode::Exact, ..*cfg })?.verdict;
    out.push(
        "Γ is 2-chorded",
        boundary == Verdict::Yes && exact == Verdict::Yes,
        format!("boundary {boundary}, exact {exact}"),
    );

    let closure = gamma.d_closure(2)?;
    let chorded = is_chorded(&closure, cfg)?.verdict;
    out.push("Δ_2(Γ) is not chorded", chorded == Verdict::No, format!("verdict {chorded}"));

    let skeleton = closure.pure_skeleton(3)?;
    let cycles = enumerate_face_minimal_cycles(&skeleton, 3, cfg.kernel_cap)?;
    let sizes: Vec<usize> = cycles.iter().map(|c| c.faces().len()).collect();
    out.push(
        "Δ_2(Γ)^[3] has exactly one face-minimal 3-cycle, of 9 tetrahedra",
        sizes == [9],
        format!("cycle sizes {sizes:?}"),
    );
    if let [omega] = cycles.as_slice() {
        out.push(
            "the 3-cycle is 1-complete and not 3-complete",
            omega.is_one_complete() && !omega.is_d_complete(),
            format!("1-complete {}, 3-complete {}", omega.is_one_complete(), omega.is_d_complete()),
        );
        let exact = find_chord_set_exact(&skeleton, omega, cfg)?;
        let enumerative = find_chord_set_enumerative(&skeleton, omega, cfg)?;
        out.push(
            "the 3-cycle has no chord set",
            exact.is_exhausted() && enumerative.is_exhausted(),
            format!("span search {}, enumerative search {}", search_summary(&exact), search_summary(&enumerative)),
        );
    }

    let h3 = reduced_homology_dim(&closure, 3);
    out.push("dim H~_3(Δ_2(Γ)) = 1", h3 == 1, format!("dim {h3}"));

    let ideal = catalog::ex216_ideal();
    out.push(
        "the Stanley-Reisner complex of (x0x1x2, x3x4x5) is Δ_2(Γ)",
        ideal.stanley_reisner_complex() == closure,
        ideal.to_string(),
    );
    let lr = has_linear_resolution(&ideal)?;
    out.push(
        "(x0x1x2, x3x4x5) has no linear resolution over GF(2)",
        !lr.linear,
        lr.witness.map_or("no witness".into(), |w| {
            format!("H~_{} of N(I) on {} vertices has dim {}", w.index, w.subset.len(), w.dim)
        }),
    );
    Ok(out)
}

fn rp2() -> Result<Claims> {
    let mut out = Claims(Vec::new());
    let rp2 = catalog::rp2();
    out.push(
        "six vertices and ten facets",
        rp2.n_vertices() == 6 && rp2.facets().len() == 10,
        format!("{} vertices, {} facets", rp2.n_vertices(), rp2.facets().len()),
    );
    let h1 = reduced_homology_dim(&rp2, 1);
    let h2 = reduced_homology_dim(&rp2, 2);
    out.push("dim H~_1 = 1 over GF(2)", h1 == 1, format!("dim {h1}"));
    out.push("dim H~_2 = 1 over GF(2)", h2 == 1, format!("dim {h2}"));
    let ideal = MonomialIdeal::stanley_reisner_ideal(&rp2)?;
    let lr = has_linear_resolution(&ideal)?;
    out.push("the Stanley-Reisner ideal has no linear resolution over GF(2)", !lr.linear, ideal.to_string());
    Ok(out)
}

fn fig5() -> Result<Claims> {
    let mut out = Claims(Vec::new());
    let closure = catalog::fig5().d_closure(2)?;
    let expected = catalog::fig5_closure();
    out.push("Δ_2(Γ) = <abcd, bce, cde, ae>", closure == expected, closure.to_string());
    Ok(out)
}

fn octa(cfg: &ChordConfig) -> Result<Claims> {
    let mut out = Claims(Vec::new());
    let gamma = catalog::octahedron_chorded();
    let omega = CycleCertificate::certify(&catalog::octahedron())?;
    out.push(
        "the octahedron is a face-minimal 2-cycle that is not 2-complete",
        omega.is_face_minimal() && !omega.is_d_complete(),
        format!("{} faces on {} vertices", omega.faces().len(), omega.vertices().len()),
    );
    match find_chord_set_exact(&gamma, &omega, cfg)? {
        ChordSearch::Found { certificate } => {
            let verified = certificate.reverify().is_ok();
            let chords: Vec<String> = certificate.chords().iter().map(|f| gamma.format_face(*f)).collect();
            out.push(
                "the chord-set certificate verifies",
                verified,
                format!("chords {}, {} parts", chords.join(" "), certificate.parts().len()),
            );
        }
        other => out.push("the chord-set certificate verifies", false, format!("search {}", search_summary(&other))),
    }
    let cycles = enumerate_face_minimal_cycles(&gamma, 2, cfg.kernel_cap)?;
    out.push("there are 3 face-minimal 2-cycles", cycles.len() == 3, format!("{} found", cycles.len()));
    Ok(out)
}

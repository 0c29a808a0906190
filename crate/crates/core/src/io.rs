//! Plain-text formats for complexes and ideals.
//!
//! Complex files hold one facet per line as whitespace-separated vertex
//! labels; `{}` stands for the empty face. Ideal files hold one monomial per
//! line, written `x0*x1*x2` or `x0 x1 x2`. In both, `#` starts a comment and
//! an optional header line (`vertices:` resp. `variables:`) declares ground
//! vertices that appear in no facet or generator. Vertex ids are assigned by
//! natural order of the labels, so `x2` precedes `x10`.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::ideal::MonomialIdeal;

/// Compares labels chunk by chunk, digit runs numerically.
pub fn natural_cmp(a: &str, b: &str) -> Ordering {
    fn chunks(s: &str) -> Vec<(bool, &str)> {
        let mut out = Vec::new();
        let mut start = 0;
        let bytes = s.as_bytes();
        for i in 1..=bytes.len() {
            if i == bytes.len() || bytes[i].is_ascii_digit() != bytes[start].is_ascii_digit() {
                out.push((bytes[start].is_ascii_digit(), &s[start..i]));
                start = i;
            }
        }
        out
    }
    let (ca, cb) = (chunks(a), chunks(b));
    for ((da, xa), (db, xb)) in ca.iter().zip(cb.iter()) {
        let ord = if *da && *db {
            let (ta, tb) = (xa.trim_start_matches('0'), xb.trim_start_matches('0'));
            ta.len().cmp(&tb.len()).then_with(|| ta.cmp(tb)).then_with(|| xa.len().cmp(&xb.len()))
        } else {
            xa.cmp(xb)
        };
        if ord != Ordering::Equal {
            return ord;
        }
    }
    ca.len().cmp(&cb.len())
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

/// Splits a line into an optional header keyword match and its tokens.
fn header<'a>(line: &'a str, keys: &[&str]) -> Option<&'a str> {
    let (key, rest) = line.split_once(':')?;
    keys.contains(&key.trim()).then_some(rest)
}

struct Parsed {
    labels: Vec<String>,
    rows: Vec<Face>,
}

fn parse_rows(text: &str, header_keys: &[&str], split: fn(&str) -> Vec<&str>, what: &str) -> Result<Parsed> {
    let mut declared: BTreeSet<String> = BTreeSet::new();
    let mut raw_rows: Vec<(usize, Vec<String>)> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = strip_comment(line);
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = header(line, header_keys) {
            declared.extend(rest.split_whitespace().map(String::from));
            continue;
        }
        if line == "{}" {
            raw_rows.push((lineno, Vec::new()));
            continue;
        }
        let tokens = split(line);
        if tokens.iter().any(|t| t.is_empty()) {
            return Err(Error::Parse { line: lineno, message: format!("empty variable in {what} `{line}`") });
        }
        if let Some(bad) = tokens.iter().find(|t| t.contains(['{', '}', ':', ','])) {
            return Err(Error::Parse { line: lineno, message: format!("unexpected token `{bad}`") });
        }
        let mut seen = BTreeSet::new();
        for t in &tokens {
            if !seen.insert(*t) {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("repeated vertex `{t}` in {what} `{line}`"),
                });
            }
        }
        raw_rows.push((lineno, tokens.into_iter().map(String::from).collect()));
    }
    let mut labels: Vec<String> = declared.into_iter().collect();
    labels.extend(raw_rows.iter().flat_map(|(_, r)| r.iter().cloned()));
    labels.sort_by(|a, b| natural_cmp(a, b));
    labels.dedup();
    if labels.len() > crate::face::MAX_VERTICES {
        return Err(Error::TooManyVertices { got: labels.len(), max: crate::face::MAX_VERTICES });
    }
    let index: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
    let rows = raw_rows.iter().map(|(_, r)| Face::from_vertices(r.iter().map(|t| index[t.as_str()]))).collect();
    Ok(Parsed { labels, rows })
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let parsed = parse_rows(text, &["vertices"], |l| l.split_whitespace().collect(), "face")?;
    SimplicialComplex::new(parsed.labels, parsed.rows)
}

/// Canonical text: a `vertices:` header, then the facets in lexicographic order.
pub fn write_complex(complex: &SimplicialComplex) -> String {
    let mut out = format!("vertices: {}\n", complex.labels().join(" "));
    for &f in complex.facets() {
        if f.is_empty() {
            out.push_str("{}\n");
        } else {
            out.push_str(&complex.face_labels(f).join(" "));
            out.push('\n');
        }
    }
    out
}

pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let split: fn(&str) -> Vec<&str> = |l| {
        if l.contains('*') {
            l.split('*').map(str::trim).collect()
        } else {
            l.split_whitespace().collect()
        }
    };
    let parsed = parse_rows(text, &["variables", "ring"], split, "monomial")?;
    if parsed.rows.iter().any(|r| r.is_empty()) {
        let line = text.lines().position(|l| strip_comment(l) == "{}").map_or(0, |i| i + 1);
        return Err(Error::Parse { line, message: "the unit monomial generates the whole ring".into() });
    }
    MonomialIdeal::new(parsed.labels, parsed.rows)
}

/// Canonical text: a `variables:` header, then one monomial per line.
pub fn write_ideal(ideal: &MonomialIdeal) -> String {
    let mut out = format!("variables: {}\n", ideal.labels().join(" "));
    for &g in ideal.generators() {
        out.push_str(&ideal.format_monomial(g));
        out.push('\n');
    }
    out
}

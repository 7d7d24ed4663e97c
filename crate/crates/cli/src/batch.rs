//! Manifest-driven solve+verify runs.
//!
//! A manifest line reads `SOURCE M D THEOREM`. `SOURCE` is a graph file
//! (relative to the manifest), `cycle:N`, `path:N`, `complete:N`,
//! `random:N:M:SEED` or `corpus:FAMILY:NMAX:SEED`; `D` may be `-` for the
//! least admissible value and `THEOREM` is `1`, `2` or `auto`. Blank lines
//! and `#` comments are skipped.

use std::fs;
use std::path::Path;

use rayon::prelude::*;
use thiserror::Error;

use ifd_core::density::density;
use ifd_core::discharge::SolveParams;
use ifd_core::graph::{generate, GeneratorSpec};
use ifd_core::partition::verify_ifd;
use ifd_core::{solve, Graph, Rational, SolveOutcome};

use crate::app::resolve_params;
use crate::corpus::{corpus_graph, Family};
use crate::format::load_graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ManifestError {
    #[error("ManifestError: line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("ManifestError: {0}")]
    Pool(String),
}

#[derive(Debug, Clone)]
pub struct Entry {
    pub line: usize,
    pub source: String,
    pub graph: Graph,
    pub params: SolveParams,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub index: usize,
    pub source: String,
    /// `Partition`, `PreconditionViolated` or `InternalError`.
    pub outcome: &'static str,
    /// The partition passed verification, or the witness really has
    /// density at least `M`.
    pub verified: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Counts {
    pub partition: usize,
    pub precondition_violated: usize,
    pub internal_error: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BatchReport {
    /// In manifest order.
    pub rows: Vec<Row>,
    pub counts: Counts,
}

fn source_graph(src: &str, m: &Rational, d: usize, base: &Path) -> Result<Graph, String> {
    let parts: Vec<&str> = src.split(':').collect();
    let num = |s: &str| s.parse::<usize>().map_err(|_| format!("not a count: {s:?}"));
    let spec = match parts.as_slice() {
        ["cycle", n] => GeneratorSpec::Cycle(num(n)?),
        ["path", n] => GeneratorSpec::Path(num(n)?),
        ["complete", n] => GeneratorSpec::Complete(num(n)?),
        ["random", n, e, seed] => GeneratorSpec::Random {
            n: num(n)?,
            m: num(e)?,
            seed: seed.parse().map_err(|_| format!("not a seed: {seed:?}"))?,
        },
        ["random", ..] => return Err("random sources need `random:N:M:SEED`".into()),
        ["corpus", family, n_max, seed] => {
            let f = Family::parse(family).ok_or_else(|| format!("unknown family {family:?}"))?;
            let seed = seed.parse().map_err(|_| format!("not a seed: {seed:?}"))?;
            let n_max = num(n_max)?;
            if n_max == 0 {
                return Err("corpus sources need a positive NMAX".into());
            }
            return Ok(corpus_graph(f, n_max, m, d, seed));
        }
        _ => {
            let path = base.join(src);
            let text = fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
            return load_graph(&text).map_err(|e| e.to_string());
        }
    };
    generate(&spec).map_err(|e| e.to_string())
}

/// Parses a manifest and loads or generates every graph it names.
pub fn load_manifest(text: &str, base: &Path) -> Result<Vec<Entry>, ManifestError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let s = raw.trim();
        if s.is_empty() || s.starts_with('#') {
            continue;
        }
        let bad = |msg: String| ManifestError::Line { line, msg };
        let cols: Vec<&str> = s.split_whitespace().collect();
        let [src, m, d, t] = cols.as_slice() else {
            return Err(bad(format!("expected `SOURCE M D THEOREM`, got {} columns", cols.len())));
        };
        let m: Rational = m.parse().map_err(|e| bad(format!("{e}")))?;
        let d = match *d {
            "-" => None,
            x => Some(x.parse::<usize>().map_err(|_| bad(format!("not a degree: {x:?}")))?),
        };
        let params = resolve_params(&m, d, t).map_err(|f| bad(format!("{}: {}", f.name, f.message)))?;
        let graph = source_graph(src, &params.m, params.d, base).map_err(bad)?;
        out.push(Entry {
            line,
            source: src.to_string(),
            graph,
            params,
        });
    }
    Ok(out)
}

fn run_entry(index: usize, e: &Entry) -> Row {
    let r = solve(&e.graph, &e.params);
    let (outcome, verified, detail) = match r.outcome {
        SolveOutcome::Partition(p) => {
            let ok = verify_ifd(&e.graph, &p, e.params.d).map(|v| v.valid).unwrap_or(false);
            if ok {
                ("Partition", true, p.to_string())
            } else {
                ("InternalError", false, format!("partition {p} fails verification"))
            }
        }
        SolveOutcome::PreconditionViolated(w) => {
            let ok = !w.subset.is_empty() && density(&e.graph, &w.subset) >= e.params.m;
            ("PreconditionViolated", ok, format!("witness density {}", w.value))
        }
        SolveOutcome::InternalError(msg) => ("InternalError", false, msg),
    };
    Row {
        index,
        source: e.source.clone(),
        outcome,
        verified,
        detail,
    }
}

/// Solves and verifies each entry, concurrently when `threads != 1`;
/// rows come back in manifest order.
pub fn run_batch(entries: &[Entry], threads: usize) -> Result<BatchReport, ManifestError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| ManifestError::Pool(e.to_string()))?;
    let rows: Vec<Row> = pool.install(|| entries.par_iter().enumerate().map(|(i, e)| run_entry(i, e)).collect());
    let mut counts = Counts::default();
    for r in &rows {
        match r.outcome {
            "Partition" => counts.partition += 1,
            "PreconditionViolated" => counts.precondition_violated += 1,
            _ => counts.internal_error += 1,
        }
    }
    Ok(BatchReport { rows, counts })
}

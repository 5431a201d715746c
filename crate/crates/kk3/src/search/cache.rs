//! Append-only JSON-lines results cache.
//!
//! One record per solved problem:
//! `{"n", "t", "min_edges", "witnesses": [graph6...], "certified", "nodes"}`.
//! `t` is stored as a canonical rational string (`"2"`, `"16/5"`). Lookups
//! scan the file and return the last matching record.

use std::fs::OpenOptions;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{parse_rational, Rational, SearchResult};
use crate::graph6::to_graph6;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CacheRecord {
    pub n: usize,
    pub t: String,
    pub min_edges: Option<usize>,
    pub witnesses: Vec<String>,
    pub certified: bool,
    pub nodes: u64,
}

/// Canonical rational string: integer form when the denominator is 1.
pub fn format_rational(r: Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl CacheRecord {
    pub fn from_result(result: &SearchResult) -> Self {
        let mut witnesses: Vec<String> = result.witnesses.iter().map(to_graph6).collect();
        witnesses.sort();
        CacheRecord {
            n: result.problem.n,
            t: format_rational(result.problem.t),
            min_edges: result.min_edges,
            witnesses,
            certified: result.certified(),
            nodes: result.explored_nodes,
        }
    }
}

/// Finds the last cached record for `(n, t)`, ignoring unparsable lines.
pub fn load_record(path: &Path, n: usize, t: Rational) -> Option<CacheRecord> {
    let file = std::fs::File::open(path).ok()?;
    let mut found = None;
    for line in BufReader::new(file).lines() {
        let Ok(line) = line else { break };
        if line.trim().is_empty() {
            continue;
        }
        if let Ok(record) = serde_json::from_str::<CacheRecord>(&line) {
            if record.n == n && parse_rational(&record.t) == Ok(t) {
                found = Some(record);
            }
        }
    }
    found
}

/// Appends one record as a JSON line, creating the file if needed.
pub fn append_record(path: &Path, record: &CacheRecord) -> std::io::Result<()> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent)?;
        }
    }
    let mut file = OpenOptions::new().create(true).append(true).open(path)?;
    let line = serde_json::to_string(record).expect("record serializes");
    writeln!(file, "{line}")
}

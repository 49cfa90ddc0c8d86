//! JSON result files, one per searched matrix.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::graph6::{decode_graph6, encode_graph6};
use crate::error::{Error, Result};
use crate::graph::canonical_form;
use crate::search::{Counters, FoundGraph, SearchOutcome};
use crate::spectra::SpectrumVector;

pub const EIGENVALUE_ORDER: &str = "eigenvalues[k] belongs to column k of the normalized matrix";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResultFile {
    pub order: usize,
    pub matrix_id: String,
    pub matrix_digest: String,
    pub eigenvalue_order: String,
    pub graphs: Vec<GraphRecord>,
    pub counters: Counters,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphRecord {
    /// Representative in the labeling of the matrix rows.
    pub graph6: String,
    /// Sorted ascending.
    pub spectrum: Vec<i64>,
    /// Aligned with the matrix columns.
    pub eigenvalues: Vec<i64>,
    pub degree: usize,
    pub edges: usize,
}

impl ResultFile {
    /// Records appear in canonical-form order.
    pub fn from_outcome(outcome: &SearchOutcome) -> Result<ResultFile> {
        let graphs = outcome
            .graphs
            .values()
            .map(|f| {
                Ok(GraphRecord {
                    graph6: encode_graph6(&f.graph)?,
                    spectrum: f.spectrum.sorted(),
                    eigenvalues: f.spectrum.values.clone(),
                    degree: f.graph.degree(0),
                    edges: f.graph.edge_count(),
                })
            })
            .collect::<Result<_>>()?;
        Ok(ResultFile {
            order: outcome.order,
            matrix_id: outcome.matrix_id.clone(),
            matrix_digest: outcome.matrix_digest.clone(),
            eigenvalue_order: EIGENVALUE_ORDER.to_string(),
            graphs,
            counters: outcome.counters,
        })
    }

    pub fn to_outcome(&self) -> Result<SearchOutcome> {
        self.check()?;
        let mut graphs = BTreeMap::new();
        for rec in &self.graphs {
            let graph = decode_graph6(&rec.graph6)?;
            let found = FoundGraph {
                first_row: graph.neighbors(0),
                spectrum: SpectrumVector { values: rec.eigenvalues.clone() },
                graph,
            };
            if graphs.insert(canonical_form(&found.graph), found).is_some() {
                return Err(Error::SchemaViolation(format!("{}: duplicate isomorphism class", rec.graph6)));
            }
        }
        Ok(SearchOutcome {
            matrix_id: self.matrix_id.clone(),
            matrix_digest: self.matrix_digest.clone(),
            order: self.order,
            graphs,
            counters: self.counters,
        })
    }

    pub fn check(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::SchemaViolation(msg));
        for rec in &self.graphs {
            let g = decode_graph6(&rec.graph6).map_err(|e| Error::SchemaViolation(e.to_string()))?;
            if g.order() != self.order {
                return bad(format!("{} has {} vertices, file order is {}", rec.graph6, g.order(), self.order));
            }
            if rec.spectrum.len() != self.order || rec.eigenvalues.len() != self.order {
                return bad(format!("{}: spectrum length differs from order", rec.graph6));
            }
            if rec.spectrum.windows(2).any(|w| w[0] > w[1]) {
                return bad(format!("{}: spectrum not sorted", rec.graph6));
            }
            let mut sorted = rec.eigenvalues.clone();
            sorted.sort_unstable();
            if sorted != rec.spectrum {
                return bad(format!("{}: eigenvalues and spectrum disagree", rec.graph6));
            }
            if rec.degree != g.degree(0) || rec.edges != g.edge_count() {
                return bad(format!("{}: degree or edge count disagrees with graph", rec.graph6));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(text: &str) -> Result<ResultFile> {
        let file: ResultFile = serde_json::from_str(text).map_err(|e| Error::SchemaViolation(e.to_string()))?;
        file.check()?;
        Ok(file)
    }
}

pub fn write_results(path: &Path, file: &ResultFile) -> Result<()> {
    std::fs::write(path, file.to_json()?)?;
    Ok(())
}

pub fn read_results(path: &Path) -> Result<ResultFile> {
    ResultFile::from_json(&std::fs::read_to_string(path)?)
}

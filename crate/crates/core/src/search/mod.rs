//! Enumeration of every graph diagonalized by a given normalized Hadamard matrix.
//!
//! The first Laplacian row determines the whole Laplacian, so the search runs
//! over the `2^(n-1)` choices of that row. [`build_auxiliary`] expresses every
//! other off-diagonal entry as a linear combination of the first-row
//! variables, and [`enumerate_graphs`] walks the include/exclude tree,
//! cutting branches where some combination can no longer land on a valid
//! Laplacian entry.

mod auxiliary;
mod enumerate;

pub use auxiliary::{build_auxiliary, vertex_mask, AuxiliaryMatrix};
pub use enumerate::{brute_force_enumerate, enumerate_graphs, enumerate_with, SearchConfig, BRUTE_FORCE_MAX};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::graph::{canonical_form, CanonicalForm, Graph};
use crate::spectra::SpectrumVector;

/// Tree statistics of one search.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counters {
    /// Tree nodes entered, leaves included.
    pub nodes: u64,
    /// Leaves reached, i.e. complete first rows examined.
    pub leaves: u64,
    /// Children cut by the interval test.
    pub pruned: u64,
    /// Leaves that gave a Laplacian, before isomorphism dedup.
    pub accepted: u64,
}

impl Counters {
    pub(crate) fn add(&mut self, other: &Counters) {
        self.nodes += other.nodes;
        self.leaves += other.leaves;
        self.pruned += other.pruned;
        self.accepted += other.accepted;
    }
}

/// One isomorphism class found by the search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoundGraph {
    /// Representative in the vertex labeling of the Hadamard matrix rows:
    /// the member with the numerically smallest first-row mask.
    pub graph: Graph,
    /// Neighbors of vertex 0 as a bit mask.
    pub first_row: u64,
    /// `λ_k` for column `k` of the matrix.
    pub spectrum: SpectrumVector,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub matrix_id: String,
    /// Digest of the normalized matrix the search ran on.
    pub matrix_digest: String,
    pub order: usize,
    pub graphs: BTreeMap<CanonicalForm, FoundGraph>,
    pub counters: Counters,
}

impl SearchOutcome {
    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn contains(&self, g: &Graph) -> bool {
        self.graphs.contains_key(&canonical_form(g))
    }

    pub fn forms(&self) -> impl Iterator<Item = &CanonicalForm> {
        self.graphs.keys()
    }

    pub fn closed_under_complement(&self) -> bool {
        self.graphs.values().all(|f| self.contains(&f.graph.complement()))
    }

    /// Keeps the smaller first-row representative for each class.
    pub(crate) fn merge(&mut self, other: SearchOutcome) {
        for (form, found) in other.graphs {
            insert_min(&mut self.graphs, form, found);
        }
        self.counters.add(&other.counters);
    }
}

pub(crate) fn insert_min(map: &mut BTreeMap<CanonicalForm, FoundGraph>, form: CanonicalForm, found: FoundGraph) {
    match map.get_mut(&form) {
        Some(existing) if existing.first_row <= found.first_row => {}
        Some(existing) => *existing = found,
        None => {
            map.insert(form, found);
        }
    }
}

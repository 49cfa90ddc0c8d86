//! Empirical checks of two open questions: whether equivalent Hadamard
//! matrices diagonalize the same graphs, and whether orders `16k + 8` have
//! at most 26 diagonalizable graphs.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::Catalog;
use crate::error::{Error, Result};
use crate::graph::CanonicalForm;
use crate::hadamard::HadamardMatrix;
use crate::io::file_diagonalizer;
use crate::search::{enumerate_with, SearchConfig};

/// Random row and column permutations and negations applied to `h`.
pub fn random_equivalent<R: Rng>(h: &HadamardMatrix, rng: &mut R) -> HadamardMatrix {
    let n = h.order();
    let mut rows: Vec<usize> = (0..n).collect();
    let mut cols: Vec<usize> = (0..n).collect();
    rows.shuffle(rng);
    cols.shuffle(rng);
    let neg_rows: Vec<usize> = (0..n).filter(|_| rng.gen()).collect();
    let neg_cols: Vec<usize> = (0..n).filter(|_| rng.gen()).collect();
    h.permute_rows(&rows)
        .and_then(|m| m.permute_columns(&cols))
        .and_then(|m| m.negate_rows(&neg_rows))
        .and_then(|m| m.negate_columns(&neg_cols))
        .expect("valid permutations and indices")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeReport {
    pub order: usize,
    pub trials: usize,
    /// Graph count of the unmodified matrix.
    pub baseline: usize,
    pub agreements: usize,
    /// Trials whose graph set differed, with that trial's graph count.
    pub disagreements: Vec<(usize, usize)>,
}

/// Enumerates `h` and `trials` random equivalents of it and compares the
/// graph sets up to isomorphism.
pub fn probe_equivalence_conjecture(
    h: &HadamardMatrix,
    trials: usize,
    seed: u64,
    config: &SearchConfig,
) -> Result<ProbeReport> {
    let forms = |m: &HadamardMatrix| -> Result<BTreeSet<CanonicalForm>> {
        Ok(enumerate_with(&file_diagonalizer(m), config)?.graphs.into_keys().collect())
    };
    let base = forms(h)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report =
        ProbeReport { order: h.order(), trials, baseline: base.len(), agreements: 0, disagreements: Vec::new() };
    for t in 0..trials {
        let other = forms(&random_equivalent(h, &mut rng))?;
        if other == base {
            report.agreements += 1;
        } else {
            report.disagreements.push((t, other.len()));
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bound26Report {
    pub order: usize,
    pub matrices: usize,
    pub graphs: usize,
    pub within_bound: bool,
}

pub const BOUND_26: usize = 26;

/// Union size of a catalog of order `16k + 8` against the bound of 26.
pub fn probe_conjecture_26(catalog: &Catalog) -> Result<Bound26Report> {
    let n = catalog.order;
    if n % 16 != 8 {
        return Err(Error::WrongResidue { order: n, modulus: 16, residue: 8 });
    }
    Ok(Bound26Report {
        order: n,
        matrices: catalog.matrices.len(),
        graphs: catalog.len(),
        within_bound: catalog.len() <= BOUND_26,
    })
}

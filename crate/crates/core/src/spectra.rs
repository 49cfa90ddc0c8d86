//! Laplacian eigenvalues tied to Hadamard columns, computed in exact integers.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hadamard::{HadamardMatrix, NormalizedHadamard};

/// Eigenvalues `λ_1, …, λ_n` where `λ_k` belongs to column `k` of the
/// diagonalizing matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpectrumVector {
    pub values: Vec<i64>,
}

impl SpectrumVector {
    pub fn order(&self) -> usize {
        self.values.len()
    }

    pub fn sorted(&self) -> Vec<i64> {
        let mut v = self.values.clone();
        v.sort_unstable();
        v
    }

    /// `λ_1 = 0`, every value even and nonnegative, and the sum equals `2|E|`.
    pub fn check(&self, edges: usize) -> bool {
        self.values.first().is_none_or(|&l| l == 0)
            && self.values.iter().all(|&l| l >= 0 && l % 2 == 0)
            && self.values.iter().sum::<i64>() == 2 * edges as i64
    }

    pub fn multiset(&self) -> SpectrumMultiset {
        spectrum_multiset(&self.values)
    }

    pub fn algebraic_connectivity(&self) -> i64 {
        algebraic_connectivity(&self.values)
    }
}

/// `λ_2, …, λ_n = (Ĥᵀ - J) · (L_12, …, L_1n)`.
///
/// The map is linear and is applied to whatever integers are given; for a
/// first row with entries in `{0, -1}` every output is even.
pub fn recover_eigenvalues(nh: &NormalizedHadamard, first_row: &[i64]) -> Vec<i64> {
    let core = nh.core_matrix().expect("order >= 2");
    let m = core.size();
    assert_eq!(first_row.len(), m, "first row must have n-1 entries");
    (0..m)
        .map(|k| (0..m).map(|j| (core.entry(j, k) - 1) * first_row[j]).sum())
        .collect()
}

/// `(Ĥᵀ - J) Ĥ = nI`, i.e. `Ĥᵀ - J` inverts `Ĥ / n`.
pub fn check_core_inverse(nh: &NormalizedHadamard) -> bool {
    let n = nh.order() as i64;
    let Ok(core) = nh.core_matrix() else { return true };
    let m = core.size();
    (0..m).all(|a| {
        (0..m).all(|b| {
            let v: i64 = (0..m).map(|j| (core.entry(j, a) - 1) * core.entry(j, b)).sum();
            v == if a == b { n } else { 0 }
        })
    })
}

/// Computes `HᵀLH` and returns its diagonal divided by `n` if it is diagonal.
pub fn verify_diagonalization(h: &HadamardMatrix, g: &Graph) -> Result<SpectrumVector> {
    let n = h.order();
    if g.order() != n {
        return Err(Error::OrderMismatch(n, g.order()));
    }
    let lh: Vec<Vec<i64>> = (0..n)
        .map(|u| {
            (0..n)
                .map(|k| {
                    let mut s = g.degree(u) as i64 * h.entry(u, k);
                    let mut bits = g.neighbors(u);
                    while bits != 0 {
                        s -= h.entry(bits.trailing_zeros() as usize, k);
                        bits &= bits - 1;
                    }
                    s
                })
                .collect()
        })
        .collect();
    let mut values = Vec::with_capacity(n);
    for k in 0..n {
        for l in 0..n {
            let m: i64 = (0..n).map(|u| h.entry(u, k) * lh[u][l]).sum();
            if k == l {
                if m % n as i64 != 0 {
                    return Err(Error::NotDivisible { index: k });
                }
                values.push(m / n as i64);
            } else if m != 0 {
                return Err(Error::NotDiagonal { row: k, col: l });
            }
        }
    }
    Ok(SpectrumVector { values })
}

/// Sorted distinct eigenvalues with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SpectrumMultiset(pub Vec<(i64, usize)>);

impl fmt::Display for SpectrumMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (value, mult)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{value}^({mult})")?;
        }
        write!(f, "}}")
    }
}

pub fn spectrum_multiset(values: &[i64]) -> SpectrumMultiset {
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    let mut out: Vec<(i64, usize)> = Vec::new();
    for v in sorted {
        match out.last_mut() {
            Some((last, mult)) if *last == v => *mult += 1,
            _ => out.push((v, 1)),
        }
    }
    SpectrumMultiset(out)
}

/// Second-smallest value counting multiplicity (0 for fewer than two values).
pub fn algebraic_connectivity(values: &[i64]) -> i64 {
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    sorted.get(1).copied().unwrap_or(0)
}

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use super::{build_auxiliary, insert_min, AuxiliaryMatrix, Counters, FoundGraph, SearchOutcome};
use crate::error::{Error, Result};
use crate::graph::canonical_form;
use crate::hadamard::NormalizedHadamard;
use crate::spectra::verify_diagonalization;

/// Largest order accepted by [`brute_force_enumerate`].
pub const BRUTE_FORCE_MAX: usize = 16;

#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Abort once this many tree nodes have been entered.
    pub node_budget: u64,
    /// Fix the first `split_depth` decisions and search the resulting
    /// subtrees in parallel. 0 runs a single sequential traversal.
    pub split_depth: u32,
    pub sort_columns: bool,
    /// Overrides the column order (a permutation of `1..n`).
    pub column_order: Option<Vec<usize>>,
    /// Label written into the outcome; defaults to the matrix digest.
    pub matrix_id: Option<String>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { node_budget: 1 << 34, split_depth: 0, sort_columns: true, column_order: None, matrix_id: None }
    }
}

pub fn enumerate_graphs(nh: &NormalizedHadamard) -> Result<SearchOutcome> {
    enumerate_with(nh, &SearchConfig::default())
}

pub fn enumerate_with(nh: &NormalizedHadamard, config: &SearchConfig) -> Result<SearchOutcome> {
    let mut aux = build_auxiliary(nh);
    if let Some(order) = &config.column_order {
        aux = aux.with_column_order(order.clone())?;
    } else if config.sort_columns {
        aux = aux.sort_columns();
    }
    let plan = Plan::new(&aux);
    let depth = plan.order.len();
    let split = (config.split_depth as usize).min(depth);
    let budget = Budget { limit: config.node_budget, used: AtomicU64::new(0) };
    let mut outcome = empty_outcome(nh, config);
    let prefixes: Vec<u64> = (0..1u64 << split).collect();
    let parts: Vec<Result<SearchOutcome>> = prefixes
        .par_iter()
        .map(|&p| {
            let mut w = Walker::new(&plan, &aux, nh, &budget, empty_outcome(nh, config));
            w.run_prefix(p, split)?;
            w.flush()?;
            Ok(w.out)
        })
        .collect();
    for part in parts {
        outcome.merge(part?);
    }
    Ok(outcome)
}

/// Evaluates every first row without pruning.
pub fn brute_force_enumerate(nh: &NormalizedHadamard) -> Result<SearchOutcome> {
    let n = nh.order();
    if n > BRUTE_FORCE_MAX {
        return Err(Error::TooLarge { order: n, max: BRUTE_FORCE_MAX });
    }
    let aux = build_auxiliary(nh);
    let mut outcome = empty_outcome(nh, &SearchConfig::default());
    let count = 1u64 << (n - 1);
    outcome.counters.nodes = count;
    outcome.counters.leaves = count;
    for m in 0..count {
        let first_row = m << 1;
        if let Ok(g) = aux.subset_to_graph(first_row) {
            outcome.counters.accepted += 1;
            let spectrum = verify_diagonalization(nh.base(), &g).expect("auxiliary solution must be diagonalized");
            insert_min(&mut outcome.graphs, canonical_form(&g), FoundGraph { graph: g, first_row, spectrum });
        }
    }
    Ok(outcome)
}

fn empty_outcome(nh: &NormalizedHadamard, config: &SearchConfig) -> SearchOutcome {
    let digest = nh.base().sign_digest();
    SearchOutcome {
        matrix_id: config.matrix_id.clone().unwrap_or_else(|| digest.clone()),
        matrix_digest: digest,
        order: nh.order(),
        graphs: BTreeMap::new(),
        counters: Counters::default(),
    }
}

struct Budget {
    limit: u64,
    used: AtomicU64,
}

/// Search tables derived from the auxiliary matrix. Only rows that are not
/// scaled unit vectors are tracked; unit rows hold for every assignment.
struct Plan {
    n: i32,
    order: Vec<usize>,
    rows: usize,
    /// `touched[t]`: (row, coefficient) for the column decided at depth `t`.
    touched: Vec<Vec<(usize, i32)>>,
    /// `lo[t * rows + r]`: sum of negative coefficients of row `r` over
    /// columns decided at depth `t` or later; `hi` likewise for positive ones.
    lo: Vec<i32>,
    hi: Vec<i32>,
}

impl Plan {
    fn new(aux: &AuxiliaryMatrix) -> Plan {
        let tracked: Vec<usize> = (0..aux.rows().len()).filter(|&r| aux.unit_column(r).is_none()).collect();
        let order = aux.column_order().to_vec();
        let d = order.len();
        let rows = tracked.len();
        let mut touched = vec![Vec::new(); d];
        let mut lo = vec![0i32; (d + 1) * rows];
        let mut hi = vec![0i32; (d + 1) * rows];
        for t in (0..d).rev() {
            let c = order[t];
            for (i, &r) in tracked.iter().enumerate() {
                let m = aux.rows()[r][c] as i32;
                lo[t * rows + i] = lo[(t + 1) * rows + i] + m.min(0);
                hi[t * rows + i] = hi[(t + 1) * rows + i] + m.max(0);
                if m != 0 {
                    touched[t].push((i, m));
                }
            }
        }
        Plan { n: aux.order() as i32, order, rows, touched, lo, hi }
    }

    /// Whether every row touched at depth `t` can still end at 0 or `n`.
    fn feasible(&self, t: usize, sums: &[i32]) -> bool {
        let base = (t + 1) * self.rows;
        self.touched[t].iter().all(|&(r, _)| {
            let lo = sums[r] + self.lo[base + r];
            let hi = sums[r] + self.hi[base + r];
            !(hi < 0 || lo > self.n || (hi < self.n && lo > 0))
        })
    }
}

const FLUSH_EVERY: u64 = 1 << 12;

struct Walker<'a> {
    plan: &'a Plan,
    aux: &'a AuxiliaryMatrix,
    nh: &'a NormalizedHadamard,
    budget: &'a Budget,
    sums: Vec<i32>,
    pending: u64,
    out: SearchOutcome,
}

impl<'a> Walker<'a> {
    fn new(
        plan: &'a Plan,
        aux: &'a AuxiliaryMatrix,
        nh: &'a NormalizedHadamard,
        budget: &'a Budget,
        out: SearchOutcome,
    ) -> Self {
        Walker { plan, aux, nh, budget, sums: vec![0; plan.rows], pending: 0, out }
    }

    fn enter(&mut self) -> Result<()> {
        self.out.counters.nodes += 1;
        self.pending += 1;
        if self.pending >= FLUSH_EVERY {
            self.flush()?;
        }
        Ok(())
    }

    fn flush(&mut self) -> Result<()> {
        let used = self.budget.used.fetch_add(self.pending, Ordering::Relaxed) + self.pending;
        self.pending = 0;
        if used > self.budget.limit {
            return Err(Error::Aborted { nodes: used });
        }
        Ok(())
    }

    fn apply(&mut self, t: usize, sign: i32) {
        for &(r, m) in &self.plan.touched[t] {
            self.sums[r] += sign * m;
        }
    }

    /// Follows the fixed decisions of prefix `p` (bit `i` clear = include at
    /// depth `i`), then searches below it. Nodes and cuts above the split are
    /// charged to exactly one prefix so the counters do not depend on
    /// `split`.
    fn run_prefix(&mut self, p: u64, split: usize) -> Result<()> {
        let mut mask = 0u64;
        for t in 0..split {
            // a node at depth t is owned by the prefix that includes at every
            // later fixed depth
            let owner = p >> t == 0;
            if owner {
                self.enter()?;
            }
            let include = p >> t & 1 == 0;
            if include {
                self.apply(t, 1);
            }
            if !self.plan.feasible(t, &self.sums) {
                if p >> (t + 1) == 0 {
                    self.out.counters.pruned += 1;
                }
                return Ok(());
            }
            if include {
                mask |= 1 << self.plan.order[t];
            }
        }
        self.dfs(split, mask)
    }

    fn dfs(&mut self, t: usize, mask: u64) -> Result<()> {
        self.enter()?;
        if t == self.plan.order.len() {
            self.leaf(mask);
            return Ok(());
        }
        let bit = 1u64 << self.plan.order[t];
        self.apply(t, 1);
        if self.plan.feasible(t, &self.sums) {
            self.dfs(t + 1, mask | bit)?;
        } else {
            self.out.counters.pruned += 1;
        }
        self.apply(t, -1);
        if self.plan.feasible(t, &self.sums) {
            self.dfs(t + 1, mask)?;
        } else {
            self.out.counters.pruned += 1;
        }
        Ok(())
    }

    fn leaf(&mut self, first_row: u64) {
        self.out.counters.leaves += 1;
        let g = self.aux.subset_to_graph(first_row).expect("surviving leaf must be a Laplacian");
        self.out.counters.accepted += 1;
        let spectrum = verify_diagonalization(self.nh.base(), &g).expect("auxiliary solution must be diagonalized");
        insert_min(&mut self.out.graphs, canonical_form(&g), FoundGraph { graph: g, first_row, spectrum });
    }
}

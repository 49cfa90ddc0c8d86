//! Searching many matrices on a fixed-size worker pool.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::io::NamedMatrix;
use crate::search::{brute_force_enumerate, enumerate_with, SearchConfig, SearchOutcome};

/// Subtree split used when a single large matrix is searched on several workers.
const SPLIT_DEPTH: u32 = 10;
const SPLIT_MIN_ORDER: usize = 24;

#[derive(Clone, Debug)]
pub struct BatchConfig {
    pub jobs: usize,
    pub search: SearchConfig,
    pub brute_force: bool,
}

impl Default for BatchConfig {
    fn default() -> Self {
        BatchConfig { jobs: 1, search: SearchConfig::default(), brute_force: false }
    }
}

/// One outcome per input, in input order. The work unit is a matrix; a lone
/// matrix of order at least 24 is split into subtrees instead.
pub fn enumerate_batch(matrices: &[NamedMatrix], config: &BatchConfig) -> Result<Vec<Result<SearchOutcome>>> {
    if config.jobs == 0 {
        return Err(Error::BadParams("jobs must be at least 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::BadParams(e.to_string()))?;
    let split = matrices.len() == 1 && config.jobs > 1 && matrices[0].matrix.order() >= SPLIT_MIN_ORDER;
    Ok(pool.install(|| {
        matrices
            .par_iter()
            .map(|m| {
                let nh = m.diagonalizer();
                if config.brute_force {
                    let mut out = brute_force_enumerate(&nh)?;
                    out.matrix_id = m.id.clone();
                    return Ok(out);
                }
                let mut search = config.search.clone();
                search.matrix_id = Some(m.id.clone());
                if split {
                    search.split_depth = search.split_depth.max(SPLIT_DEPTH);
                }
                enumerate_with(&nh, &search)
            })
            .collect()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hadamard::sylvester;

    #[test]
    fn order_preserved_and_jobs_independent() {
        let matrices: Vec<NamedMatrix> = (1..=4)
            .map(|k| NamedMatrix { id: format!("syl{k}"), matrix: sylvester(k).unwrap() })
            .collect();
        let run = |jobs| {
            let cfg = BatchConfig { jobs, ..Default::default() };
            enumerate_batch(&matrices, &cfg)
                .unwrap()
                .into_iter()
                .map(|o| {
                    let o = o.unwrap();
                    (o.matrix_id.clone(), o.forms().cloned().collect::<Vec<_>>(), o.counters)
                })
                .collect::<Vec<_>>()
        };
        let one = run(1);
        assert_eq!(one.iter().map(|x| x.0.as_str()).collect::<Vec<_>>(), ["syl1", "syl2", "syl3", "syl4"]);
        assert_eq!(one.iter().map(|x| x.1.len()).collect::<Vec<_>>(), [2, 4, 10, 46]);
        assert_eq!(run(3), one);
        assert!(enumerate_batch(&matrices, &BatchConfig { jobs: 0, ..Default::default() }).is_err());
    }
}

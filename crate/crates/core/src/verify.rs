//! Published counts and catalogs checked against enumeration of the matrix
//! files in a data directory.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use crate::batch::{enumerate_batch, BatchConfig};
use crate::catalog::{
    build_catalog, match_zoo, missing_standard_four, published, verify_mod8, zoo_order_16, zoo_order_24, zoo_order_8,
    Catalog, ZooEntry,
};
use crate::error::{Error, Result};
use crate::io::{load_matrices, matrix_files};
use crate::search::SearchOutcome;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// The input needed to decide the check is absent.
    Missing,
}

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), status: if pass { Status::Pass } else { Status::Fail }, detail: detail.into() }
    }

    fn missing(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check { name: name.into(), status: Status::Missing, detail: detail.into() }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Missing => "MISSING",
        };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

/// Enumerates every matrix file of one order under `data`, in natural file
/// order.
pub fn enumerate_order(data: &Path, order: usize, config: &BatchConfig) -> Result<Vec<SearchOutcome>> {
    let mut matrices = Vec::new();
    for path in matrix_files(data, order)? {
        matrices.extend(load_matrices(&path)?);
    }
    if let Some(m) = matrices.iter().find(|m| m.matrix.order() != order) {
        return Err(Error::MixedOrders { expected: order, found: m.matrix.order() });
    }
    enumerate_batch(&matrices, config)?.into_iter().collect()
}

/// Every published expectation that the catalog of one order can decide.
pub fn check_catalog(catalog: &Catalog) -> Vec<Check> {
    let n = catalog.order;
    let mut out = Vec::new();
    if let Some(&(_, matrices, graphs)) = published::TABLE_COUNTS.iter().find(|r| r.0 == n) {
        out.push(Check::new(
            format!("order {n}: union count"),
            catalog.len() == graphs,
            format!("{} graphs over {} matrices, expected {graphs}", catalog.len(), catalog.matrices.len()),
        ));
        if let Some(m) = matrices.filter(|&m| m <= 100) {
            out.push(Check::new(
                format!("order {n}: matrix classes present"),
                catalog.matrices.len() == m,
                format!("{} matrices, {m} inequivalent classes exist", catalog.matrices.len()),
            ));
        }
    }
    let complement = catalog.matrices.iter().all(|m| {
        m.forms.iter().all(|f| m.forms.contains(&crate::graph::canonical_form(&f.graph().complement())))
    });
    out.push(Check::new(format!("order {n}: closed under complement"), complement, "every per-matrix set"));
    if let Ok(missing) = missing_standard_four(catalog) {
        out.push(Check::new(
            format!("order {n}: standard four in every matrix"),
            missing.is_empty(),
            if missing.is_empty() { "all present".to_string() } else { format!("{missing:?}") },
        ));
    }
    if n % 8 == 4 {
        let ok = verify_mod8(catalog).unwrap_or(false);
        out.push(Check::new(format!("order {n}: only the standard four"), ok, format!("{} graphs", catalog.len())));
    }
    match n {
        8 => out.push(zoo_check(catalog, &zoo_order_8())),
        16 => {
            out.push(zoo_check(catalog, &zoo_order_16()));
            out.extend(label_checks(catalog, &published::ORDER_16.map(|(id, fam, c)| (id.to_string(), fam, c))));
            out.push(family_check(catalog, &zoo_order_16(), &["ABCD", "ABCDE", "ABCE", "AB", "A"]));
            let counts: Vec<usize> = published::ORDER_16.iter().map(|r| r.2).collect();
            out.push(count_multiset_check(catalog, &counts));
        }
        24 => {
            out.push(zoo_check(catalog, &zoo_order_24()));
            let labels: Vec<(String, &str, usize)> = (1..=60)
                .map(|j| {
                    let (fam, c) = published::order_24(j).unwrap();
                    (format!("had.24.{j}"), fam, c)
                })
                .collect();
            out.extend(label_checks(catalog, &labels));
            out.push(family_check(catalog, &zoo_order_24(), &["ABCD", "AC", "AB", "A"]));
            let mut want = published::ORDER_24_CLASSES.to_vec();
            let mut got = catalog.class_size_scatter();
            want.sort_unstable();
            got.sort_unstable();
            out.push(Check::new(
                "order 24: class partition",
                got == want,
                format!("(graphs, matrices) per class {got:?}, expected {want:?}"),
            ));
        }
        _ => {}
    }
    out
}

fn zoo_check(catalog: &Catalog, zoo: &[ZooEntry]) -> Check {
    let n = catalog.order;
    match match_zoo(catalog, zoo) {
        Ok(r) => Check::new(
            format!("order {n}: catalog matches constructions"),
            r.is_exact(),
            format!(
                "{} matched, missing {:?}, collisions {:?}, {} extra",
                r.matched.len(),
                r.missing,
                r.collisions,
                r.extra.len()
            ),
        ),
        Err(e) => Check::new(format!("order {n}: catalog matches constructions"), false, e.to_string()),
    }
}

/// Per-label graph counts; labels absent from the catalog are reported as
/// missing data in one check.
fn label_checks(catalog: &Catalog, labels: &[(String, &str, usize)]) -> Vec<Check> {
    let n = catalog.order;
    let mut out = Vec::new();
    let mut absent = Vec::new();
    for (id, _, count) in labels {
        match catalog.matrix(id) {
            Some(m) => out.push(Check::new(
                format!("{id}: graph count"),
                m.forms.len() == *count,
                format!("{} graphs, expected {count}", m.forms.len()),
            )),
            None => absent.push(id.as_str()),
        }
    }
    if !absent.is_empty() {
        let shown = if absent.len() > 6 {
            format!("{}, ..., {} ({} files)", absent[0], absent[absent.len() - 1], absent.len())
        } else {
            absent.join(", ")
        };
        out.push(Check::missing(format!("order {n}: labeled matrices"), format!("not in data: {shown}")));
    }
    out
}

/// Every matrix's set is the union of one published family combination,
/// and every combination occurs.
fn family_check(catalog: &Catalog, zoo: &[ZooEntry], combos: &[&str]) -> Check {
    let n = catalog.order;
    let name = format!("order {n}: per-matrix sets are family unions");
    let report = match match_zoo(catalog, zoo) {
        Ok(r) => r,
        Err(e) => return Check::new(name, false, e.to_string()),
    };
    let sets: Vec<_> = combos.iter().map(|c| report.family_forms(zoo, c)).collect();
    let mut seen: BTreeMap<&str, usize> = BTreeMap::new();
    let mut unexplained = Vec::new();
    for m in &catalog.matrices {
        match sets.iter().position(|s| *s == m.forms) {
            Some(i) => *seen.entry(combos[i]).or_default() += 1,
            None => unexplained.push(m.id.clone()),
        }
    }
    let all_seen = combos.iter().all(|c| seen.contains_key(c));
    Check::new(
        name,
        unexplained.is_empty() && all_seen,
        format!("matrices per family set {seen:?}, unexplained {unexplained:?}"),
    )
}

fn count_multiset_check(catalog: &Catalog, want: &[usize]) -> Check {
    let n = catalog.order;
    let mut got: Vec<usize> = catalog.matrices.iter().map(|m| m.forms.len()).collect();
    let mut want = want.to_vec();
    got.sort_unstable();
    want.sort_unstable();
    Check::new(format!("order {n}: per-matrix counts"), got == want, format!("{got:?}, expected {want:?}"))
}

/// Enumerates and checks each order; an order without files yields one
/// missing-data check.
pub fn verify_tables(data: &Path, orders: &[usize], config: &BatchConfig) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for &n in orders {
        let outcomes = match enumerate_order(data, n, config) {
            Ok(o) => o,
            Err(Error::MissingData(msg)) => {
                out.push(Check::missing(format!("order {n}"), msg));
                continue;
            }
            Err(e) => return Err(e),
        };
        out.extend(check_catalog(&build_catalog(&outcomes)?));
    }
    Ok(out)
}

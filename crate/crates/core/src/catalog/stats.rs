//! Invariant distributions over the union of a catalog.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::Catalog;
use crate::graph::invariants;
use crate::spectra::algebraic_connectivity;

/// Each map sends a value to the number of graphs having it. `diameter`
/// covers connected graphs only; `girth` leaves out acyclic graphs, which
/// are counted in `acyclic`. `cospectral_classes` sends a class size to the
/// number of spectrum classes of that size.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsReport {
    pub graphs: usize,
    pub degree: BTreeMap<usize, usize>,
    pub clique_number: BTreeMap<usize, usize>,
    pub girth: BTreeMap<usize, usize>,
    pub acyclic: usize,
    pub diameter: BTreeMap<usize, usize>,
    pub algebraic_connectivity: BTreeMap<i64, usize>,
    pub cospectral_classes: BTreeMap<usize, usize>,
    pub connected: usize,
    pub disconnected: usize,
    pub cographs: usize,
    pub chordal: usize,
    pub distance_regular: usize,
}

pub fn stats_report(catalog: &Catalog) -> StatsReport {
    let per_graph: Vec<_> = catalog
        .union
        .values()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|f| (invariants(&f.graph), f.graph.degree(0), f.spectrum.sorted()))
        .collect();
    let mut r = StatsReport { graphs: per_graph.len(), ..Default::default() };
    let mut spectra: BTreeMap<&[i64], usize> = BTreeMap::new();
    for (inv, degree, spectrum) in &per_graph {
        *r.degree.entry(*degree).or_default() += 1;
        *r.clique_number.entry(inv.clique_number).or_default() += 1;
        match inv.girth {
            Some(g) => *r.girth.entry(g).or_default() += 1,
            None => r.acyclic += 1,
        }
        match inv.diameter {
            Some(d) => {
                *r.diameter.entry(d).or_default() += 1;
                r.connected += 1;
            }
            None => r.disconnected += 1,
        }
        *r.algebraic_connectivity.entry(algebraic_connectivity(spectrum)).or_default() += 1;
        *spectra.entry(spectrum).or_default() += 1;
        r.cographs += inv.is_cograph as usize;
        r.chordal += inv.is_chordal as usize;
        r.distance_regular += inv.is_distance_regular as usize;
    }
    for size in spectra.into_values() {
        *r.cospectral_classes.entry(size).or_default() += 1;
    }
    r
}

impl StatsReport {
    /// Rows `statistic,value,graphs`; for `cospectral_class_size` the last
    /// column counts classes instead.
    pub fn to_csv(&self) -> String {
        let mut rows = Vec::new();
        let mut push = |stat: &str, value: String, count: usize| rows.push(vec![stat.to_string(), value, count.to_string()]);
        push("graphs", String::new(), self.graphs);
        for (k, v) in &self.degree {
            push("degree", k.to_string(), *v);
        }
        for (k, v) in &self.clique_number {
            push("clique_number", k.to_string(), *v);
        }
        for (k, v) in &self.girth {
            push("girth", k.to_string(), *v);
        }
        push("girth", "none".into(), self.acyclic);
        for (k, v) in &self.diameter {
            push("diameter", k.to_string(), *v);
        }
        for (k, v) in &self.algebraic_connectivity {
            push("algebraic_connectivity", k.to_string(), *v);
        }
        for (k, v) in &self.cospectral_classes {
            push("cospectral_class_size", k.to_string(), *v);
        }
        push("connected", "true".into(), self.connected);
        push("disconnected", "true".into(), self.disconnected);
        push("cograph", "true".into(), self.cographs);
        push("chordal", "true".into(), self.chordal);
        push("distance_regular", "true".into(), self.distance_regular);
        crate::io::to_csv(&["statistic", "value", "graphs"], &rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build_catalog;
    use crate::catalog::tests::outcome;
    use crate::hadamard::sylvester;

    fn sums_match(r: &StatsReport) {
        let total = |m: &BTreeMap<usize, usize>| m.values().sum::<usize>();
        assert_eq!(total(&r.degree), r.graphs);
        assert_eq!(total(&r.clique_number), r.graphs);
        assert_eq!(total(&r.girth) + r.acyclic, r.graphs);
        assert_eq!(total(&r.diameter), r.connected);
        assert_eq!(r.connected + r.disconnected, r.graphs);
        assert_eq!(r.algebraic_connectivity.values().sum::<usize>(), r.graphs);
        let covered: usize = r.cospectral_classes.iter().map(|(size, count)| size * count).sum();
        assert_eq!(covered, r.graphs);
    }

    #[test]
    fn order_eight_degrees() {
        let c = build_catalog(&[outcome(&sylvester(3).unwrap(), "had.8")]).unwrap();
        let r = stats_report(&c);
        let want: BTreeMap<usize, usize> = [(0, 1), (1, 1), (2, 1), (3, 2), (4, 2), (5, 1), (6, 1), (7, 1)].into();
        assert_eq!(r.degree, want);
        sums_match(&r);
        // zero algebraic connectivity exactly on the disconnected graphs
        assert_eq!(r.algebraic_connectivity.get(&0).copied().unwrap_or(0), r.disconnected);
    }

    #[test]
    fn order_four_disconnected() {
        let c = build_catalog(&[outcome(&sylvester(2).unwrap(), "had.4")]).unwrap();
        let r = stats_report(&c);
        assert_eq!(r.disconnected, 2);
        assert_eq!(r.graphs, 4);
        // 4K1, 2K2, K4 and K22 are all cographs; C4 = K22 is the one non-chordal graph
        assert_eq!(r.cographs, 4);
        assert_eq!(r.chordal, 3);
        sums_match(&r);
        let csv = r.to_csv();
        assert!(csv.starts_with("statistic,value,graphs\ngraphs,,4\n"));
        assert!(csv.contains("disconnected,true,2\n"));
    }

    #[test]
    fn order_sixteen_sums() {
        let c = build_catalog(&[outcome(&sylvester(4).unwrap(), "had.16.syl")]).unwrap();
        let r = stats_report(&c);
        assert_eq!(r.graphs, 46);
        sums_match(&r);
    }
}

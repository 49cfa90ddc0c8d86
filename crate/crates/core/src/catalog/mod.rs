//! Catalogs: per-matrix outcomes of one order merged into a union of graph
//! classes, with matrices partitioned by the graph sets they diagonalize.

mod probe;
mod stats;
mod zoo;

pub use probe::{BOUND_26, probe_conjecture_26, probe_equivalence_conjecture, random_equivalent, Bound26Report, ProbeReport};
pub use stats::{stats_report, StatsReport};
pub use zoo::{match_zoo, published, stated_isomorphisms, zoo_order_16, zoo_order_24, zoo_order_8, ZooEntry, ZooReport};

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graph::{canonical_form, named, CanonicalForm, Graph, Named};
use crate::io::encode_graph6;
use crate::search::{FoundGraph, SearchOutcome};
use crate::spectra::SpectrumVector;

#[derive(Clone, Debug)]
pub struct MatrixEntry {
    pub id: String,
    pub digest: String,
    pub forms: BTreeSet<CanonicalForm>,
}

/// Matrices whose graph sets are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixClass {
    pub fingerprint: String,
    pub graphs: BTreeSet<CanonicalForm>,
    /// Ids in input order.
    pub matrices: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct Catalog {
    pub order: usize,
    /// In input order.
    pub matrices: Vec<MatrixEntry>,
    /// Every class found by some matrix; the representative and its
    /// spectrum come from the first matrix, in input order, that has it.
    pub union: BTreeMap<CanonicalForm, FoundGraph>,
    /// Ordered by the first matrix of each class.
    pub classes: Vec<MatrixClass>,
}

impl Catalog {
    pub fn len(&self) -> usize {
        self.union.len()
    }

    pub fn is_empty(&self) -> bool {
        self.union.is_empty()
    }

    pub fn contains(&self, g: &Graph) -> bool {
        self.union.contains_key(&canonical_form(g))
    }

    pub fn matrix(&self, id: &str) -> Option<&MatrixEntry> {
        self.matrices.iter().find(|m| m.id == id)
    }

    pub fn closed_under_complement(&self) -> bool {
        self.union.values().all(|f| self.contains(&f.graph.complement()))
    }

    /// One `(graphs, matrices)` point per class.
    pub fn class_size_scatter(&self) -> Vec<(usize, usize)> {
        self.classes.iter().map(|c| (c.graphs.len(), c.matrices.len())).collect()
    }
}

/// Order-independent digest of a set of canonical forms.
pub fn fingerprint(order: usize, forms: &BTreeSet<CanonicalForm>) -> String {
    let mut h = Sha256::new();
    h.update(format!("{order}\n"));
    for f in forms {
        h.update(f.edge_bitstring());
        h.update(b"\n");
    }
    hex::encode(h.finalize())
}

pub fn build_catalog(outcomes: &[SearchOutcome]) -> Result<Catalog> {
    let order = outcomes
        .first()
        .ok_or_else(|| Error::BadParams("a catalog needs at least one outcome".into()))?
        .order;
    let mut matrices = Vec::with_capacity(outcomes.len());
    let mut union = BTreeMap::new();
    let mut by_fingerprint: BTreeMap<String, usize> = BTreeMap::new();
    let mut classes: Vec<MatrixClass> = Vec::new();
    for o in outcomes {
        if o.order != order {
            return Err(Error::MixedOrders { expected: order, found: o.order });
        }
        let forms: BTreeSet<CanonicalForm> = o.graphs.keys().cloned().collect();
        for (form, found) in &o.graphs {
            union.entry(form.clone()).or_insert_with(|| found.clone());
        }
        let fp = fingerprint(order, &forms);
        match by_fingerprint.get(&fp) {
            Some(&i) => classes[i].matrices.push(o.matrix_id.clone()),
            None => {
                by_fingerprint.insert(fp.clone(), classes.len());
                classes.push(MatrixClass { fingerprint: fp, graphs: forms.clone(), matrices: vec![o.matrix_id.clone()] });
            }
        }
        matrices.push(MatrixEntry { id: o.matrix_id.clone(), digest: o.matrix_digest.clone(), forms });
    }
    Ok(Catalog { order, matrices, union, classes })
}

/// `K_n`, `K_{n/2,n/2}`, `nK_1` and `2K_{n/2}`, each with its spectrum sorted
/// ascending.
pub fn standard_four(n: usize) -> Result<[(Graph, SpectrumVector); 4]> {
    if n % 2 == 1 || n == 0 {
        return Err(Error::OddOrder(n));
    }
    let h = n / 2;
    let spectrum = |parts: &[(i64, usize)]| SpectrumVector {
        values: parts.iter().flat_map(|&(v, m)| std::iter::repeat_n(v, m)).collect(),
    };
    let n64 = n as i64;
    let h64 = h as i64;
    Ok([
        (named(Named::Complete(n))?, spectrum(&[(0, 1), (n64, n - 1)])),
        (named(Named::CompleteBipartite(h, h))?, spectrum(&[(0, 1), (h64, n - 2), (n64, 1)])),
        (named(Named::Empty(n))?, spectrum(&[(0, n)])),
        (named(Named::Cliques { k: 2, m: h })?, spectrum(&[(0, 2), (h64, n - 2)])),
    ])
}

/// Whether the union is exactly the four standard graphs; only defined for
/// orders `8k + 4`.
pub fn verify_mod8(catalog: &Catalog) -> Result<bool> {
    let n = catalog.order;
    if n % 8 != 4 {
        return Err(Error::WrongResidue { order: n, modulus: 8, residue: 4 });
    }
    let four: BTreeSet<CanonicalForm> = standard_four(n)?.iter().map(|(g, _)| canonical_form(g)).collect();
    Ok(catalog.union.keys().cloned().collect::<BTreeSet<_>>() == four)
}

/// Matrices lacking some standard graph, with the missing graphs' indices
/// into [`standard_four`].
pub fn missing_standard_four(catalog: &Catalog) -> Result<Vec<(String, Vec<usize>)>> {
    let four: Vec<CanonicalForm> = standard_four(catalog.order)?.iter().map(|(g, _)| canonical_form(g)).collect();
    Ok(catalog
        .matrices
        .iter()
        .filter_map(|m| {
            let missing: Vec<usize> = (0..4).filter(|&i| !m.forms.contains(&four[i])).collect();
            (!missing.is_empty()).then(|| (m.id.clone(), missing))
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogFile {
    pub order: usize,
    /// Union representatives in canonical-form order.
    pub graphs: Vec<CatalogGraph>,
    pub matrices: Vec<CatalogMatrix>,
    pub classes: Vec<CatalogClass>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogGraph {
    pub graph6: String,
    pub spectrum: Vec<i64>,
    pub degree: usize,
    /// Number of input matrices diagonalizing it.
    pub matrices: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogMatrix {
    pub id: String,
    pub digest: String,
    /// Indices into `graphs`.
    pub graphs: Vec<usize>,
    pub class: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogClass {
    pub fingerprint: String,
    pub graphs: usize,
    pub matrices: Vec<String>,
}

impl CatalogFile {
    pub fn from_catalog(catalog: &Catalog) -> Result<CatalogFile> {
        let index: BTreeMap<&CanonicalForm, usize> = catalog.union.keys().enumerate().map(|(i, f)| (f, i)).collect();
        let graphs = catalog
            .union
            .iter()
            .map(|(form, found)| {
                Ok(CatalogGraph {
                    graph6: encode_graph6(&found.graph)?,
                    spectrum: found.spectrum.sorted(),
                    degree: found.graph.degree(0),
                    matrices: catalog.matrices.iter().filter(|m| m.forms.contains(form)).count(),
                })
            })
            .collect::<Result<_>>()?;
        let class_of = |id: &str| catalog.classes.iter().position(|c| c.matrices.iter().any(|m| m == id)).unwrap();
        let matrices = catalog
            .matrices
            .iter()
            .map(|m| CatalogMatrix {
                id: m.id.clone(),
                digest: m.digest.clone(),
                graphs: m.forms.iter().map(|f| index[f]).collect(),
                class: class_of(&m.id),
            })
            .collect();
        let classes = catalog
            .classes
            .iter()
            .map(|c| CatalogClass { fingerprint: c.fingerprint.clone(), graphs: c.graphs.len(), matrices: c.matrices.clone() })
            .collect();
        Ok(CatalogFile { order: catalog.order, graphs, matrices, classes })
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }
}

pub fn write_catalog(path: &Path, catalog: &Catalog) -> Result<()> {
    std::fs::write(path, CatalogFile::from_catalog(catalog)?.to_json()?)?;
    Ok(())
}

pub fn scatter_csv(catalog: &Catalog) -> String {
    let rows: Vec<Vec<String>> = catalog
        .class_size_scatter()
        .into_iter()
        .map(|(g, m)| vec![g.to_string(), m.to_string()])
        .collect();
    crate::io::to_csv(&["graphs", "matrices"], &rows)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::hadamard::{paley, sylvester};
    use crate::search::enumerate_graphs;

    pub(crate) fn outcome(h: &crate::HadamardMatrix, id: &str) -> SearchOutcome {
        let mut o = enumerate_graphs(&h.normalize()).unwrap();
        o.matrix_id = id.into();
        o
    }

    /// Laplacian spectrum of a graph known to have integer eigenvalues: the
    /// multiplicity of `x` is the nullity of `L - xI`, for `x` in `0..=n`.
    fn integer_spectrum(g: &Graph) -> Vec<i64> {
        let n = g.order();
        let out: Vec<i64> = (0..=n as i64).flat_map(|x| std::iter::repeat_n(x, nullity(g, x))).collect();
        assert_eq!(out.len(), n, "spectrum is not integral");
        out
    }

    /// Fraction-free Gaussian elimination; rows are divided by their content
    /// to keep entries small.
    fn nullity(g: &Graph, x: i64) -> usize {
        let n = g.order();
        let l = g.laplacian();
        let mut m: Vec<Vec<i128>> = (0..n)
            .map(|i| (0..n).map(|j| l.get(i, j) as i128 - if i == j { x as i128 } else { 0 }).collect())
            .collect();
        let mut rank = 0;
        for c in 0..n {
            let Some(p) = (rank..n).find(|&r| m[r][c] != 0) else { continue };
            m.swap(rank, p);
            for r in 0..n {
                if r != rank && m[r][c] != 0 {
                    let (a, b) = (m[rank][c], m[r][c]);
                    for k in 0..n {
                        m[r][k] = m[r][k] * a - m[rank][k] * b;
                    }
                    let content = m[r].iter().fold(0i128, |g, &v| gcd(g, v.abs()));
                    if content > 1 {
                        m[r].iter_mut().for_each(|v| *v /= content);
                    }
                }
            }
            rank += 1;
        }
        n - rank
    }

    fn gcd(a: i128, b: i128) -> i128 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    #[test]
    fn standard_four_spectra() {
        let four = standard_four(4).unwrap();
        let want = [vec![0, 4, 4, 4], vec![0, 2, 2, 4], vec![0, 0, 0, 0], vec![0, 0, 2, 2]];
        for ((g, s), w) in four.iter().zip(&want) {
            assert_eq!(&s.values, w);
            assert_eq!(integer_spectrum(g), *w);
        }
        for n in [2, 6, 12, 16] {
            for (g, s) in standard_four(n).unwrap() {
                assert_eq!(integer_spectrum(&g), s.values, "n={n}");
            }
        }
        assert!(standard_four(8).unwrap()[2].1.values.iter().all(|&v| v == 0));
        assert!(matches!(standard_four(7), Err(Error::OddOrder(7))));
    }

    #[test]
    fn order_twelve_is_standard_four() {
        let c = build_catalog(&[outcome(&paley(11).unwrap(), "had.12")]).unwrap();
        assert!(verify_mod8(&c).unwrap());
        assert!(missing_standard_four(&c).unwrap().is_empty());
        let cp12 = named(Named::CocktailParty(6)).unwrap();
        assert!(!c.contains(&cp12));
        let c16 = build_catalog(&[outcome(&sylvester(4).unwrap(), "s")]).unwrap();
        assert!(matches!(verify_mod8(&c16), Err(Error::WrongResidue { order: 16, .. })));
    }

    #[test]
    fn partition_and_union() {
        let s = sylvester(3).unwrap();
        let t = s.negate_rows(&[1, 2]).unwrap().permute_columns(&[3, 1, 2, 0, 4, 5, 7, 6]).unwrap();
        let c = build_catalog(&[outcome(&s, "a"), outcome(&t, "b")]).unwrap();
        assert_eq!(c.len(), 10);
        assert_eq!(c.classes.len(), 1);
        assert_eq!(c.classes[0].matrices, vec!["a", "b"]);
        assert_eq!(c.class_size_scatter(), vec![(10, 2)]);
        assert!(c.closed_under_complement());

        let single = build_catalog(&[outcome(&paley(11).unwrap(), "x")]).unwrap();
        assert_eq!(single.class_size_scatter(), vec![(4, 1)]);
        assert_eq!(scatter_csv(&single), "graphs,matrices\n4,1\n");

        let mixed = build_catalog(&[outcome(&s, "a"), outcome(&paley(11).unwrap(), "b")]);
        assert!(matches!(mixed, Err(Error::MixedOrders { expected: 8, found: 12 })));
        assert!(build_catalog(&[]).is_err());
    }

    #[test]
    fn fingerprint_ignores_discovery_order() {
        let forms: Vec<CanonicalForm> = standard_four(8).unwrap().iter().map(|(g, _)| canonical_form(g)).collect();
        let a: BTreeSet<_> = forms.iter().cloned().collect();
        let b: BTreeSet<_> = forms.iter().rev().cloned().collect();
        assert_eq!(fingerprint(8, &a), fingerprint(8, &b));
        let fewer: BTreeSet<_> = forms[1..].iter().cloned().collect();
        assert_ne!(fingerprint(8, &a), fingerprint(8, &fewer));
    }

    #[test]
    fn catalog_file_is_consistent() {
        let c = build_catalog(&[outcome(&sylvester(2).unwrap(), "h4")]).unwrap();
        let f = CatalogFile::from_catalog(&c).unwrap();
        assert_eq!(f.graphs.len(), 4);
        assert_eq!(f.matrices[0].graphs, vec![0, 1, 2, 3]);
        assert_eq!(f.classes[0].matrices, vec!["h4"]);
        assert!(f.graphs.iter().all(|g| g.matrices == 1));
        let back: CatalogFile = serde_json::from_str(&f.to_json().unwrap()).unwrap();
        assert_eq!(back, f);
    }
}

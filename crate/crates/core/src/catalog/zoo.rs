//! Expected graphs of orders 8, 16 and 24, built from product expressions,
//! and matching of an enumerated catalog against them.

use std::collections::{BTreeMap, BTreeSet};

use super::Catalog;
use crate::error::{Error, Result};
use crate::graph::{
    add_perfect_matching, canonical_form, cartesian_product, cayley, lexicographic_product, named,
    remove_perfect_matching, CanonicalForm, Graph, GroupSpec, Named,
};

/// One expected graph. An expression involving an unspecified perfect
/// matching has one candidate per isomorphism class of the result.
#[derive(Clone, Debug)]
pub struct ZooEntry {
    pub family: char,
    pub label: String,
    pub candidates: Vec<Graph>,
}

impl ZooEntry {
    fn new(family: char, label: &str, g: Graph) -> Self {
        ZooEntry { family, label: label.to_string(), candidates: vec![g] }
    }

    fn many(family: char, label: &str, candidates: Vec<Graph>) -> Self {
        ZooEntry { family, label: label.to_string(), candidates }
    }

    /// The complement, for rows giving only one side of a pair.
    fn complement(&self) -> Self {
        ZooEntry {
            family: self.family,
            label: format!("complement of {}", self.label),
            candidates: self.candidates.iter().map(Graph::complement).collect(),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct ZooReport {
    /// Entry label and the enumerated class assigned to it.
    pub matched: Vec<(String, CanonicalForm)>,
    /// Entries with no candidate among the enumerated graphs.
    pub missing: Vec<String>,
    /// Entries whose candidates were all taken by other entries.
    pub collisions: Vec<String>,
    /// Enumerated graphs left unassigned.
    pub extra: Vec<CanonicalForm>,
}

impl ZooReport {
    /// Expected and enumerated graphs correspond one to one.
    pub fn is_exact(&self) -> bool {
        self.missing.is_empty() && self.collisions.is_empty() && self.extra.is_empty()
    }

    /// Assigned classes of the entries whose family letter is in `families`.
    pub fn family_forms(&self, entries: &[ZooEntry], families: &str) -> BTreeSet<CanonicalForm> {
        let family: BTreeMap<&str, char> = entries.iter().map(|e| (e.label.as_str(), e.family)).collect();
        self.matched
            .iter()
            .filter(|(label, _)| families.contains(family[label.as_str()]))
            .map(|(_, f)| f.clone())
            .collect()
    }
}

/// Assigns enumerated classes to entries by maximum bipartite matching
/// between entries and the candidates they allow.
pub fn match_zoo(catalog: &Catalog, expected: &[ZooEntry]) -> Result<ZooReport> {
    let mut options: Vec<Vec<CanonicalForm>> = Vec::with_capacity(expected.len());
    for e in expected {
        let mut forms = Vec::new();
        for g in &e.candidates {
            if g.order() != catalog.order {
                return Err(Error::MixedOrders { expected: catalog.order, found: g.order() });
            }
            let f = canonical_form(g);
            if catalog.union.contains_key(&f) && !forms.contains(&f) {
                forms.push(f);
            }
        }
        options.push(forms);
    }
    let mut owner: BTreeMap<CanonicalForm, usize> = BTreeMap::new();
    for i in 0..expected.len() {
        let mut seen = BTreeSet::new();
        augment(i, &options, &mut owner, &mut seen);
    }
    let mut assigned: BTreeMap<usize, CanonicalForm> = owner.iter().map(|(f, &i)| (i, f.clone())).collect();
    let mut report = ZooReport::default();
    for (i, e) in expected.iter().enumerate() {
        match assigned.remove(&i) {
            Some(f) => report.matched.push((e.label.clone(), f)),
            None if options[i].is_empty() => report.missing.push(e.label.clone()),
            None => report.collisions.push(e.label.clone()),
        }
    }
    report.extra = catalog.union.keys().filter(|f| !owner.contains_key(*f)).cloned().collect();
    Ok(report)
}

fn augment(
    i: usize,
    options: &[Vec<CanonicalForm>],
    owner: &mut BTreeMap<CanonicalForm, usize>,
    seen: &mut BTreeSet<CanonicalForm>,
) -> bool {
    for f in &options[i] {
        if !seen.insert(f.clone()) {
            continue;
        }
        let free = match owner.get(f) {
            None => true,
            Some(&j) => augment(j, options, owner, seen),
        };
        if free {
            owner.insert(f.clone(), i);
            return true;
        }
    }
    false
}

// Expression builders; every constructor here is exact for the orders used.
fn k(n: usize) -> Graph {
    named(Named::Complete(n)).unwrap()
}
fn e(n: usize) -> Graph {
    named(Named::Empty(n)).unwrap()
}
fn kb(a: usize, b: usize) -> Graph {
    named(Named::CompleteBipartite(a, b)).unwrap()
}
fn kk(k: usize, m: usize) -> Graph {
    named(Named::Cliques { k, m }).unwrap()
}
fn multi(k: usize, m: usize) -> Graph {
    named(Named::CompleteMultipartite { k, m }).unwrap()
}
fn crown(n: usize) -> Graph {
    named(Named::CrownH(n)).unwrap()
}
fn cp(n: usize) -> Graph {
    named(Named::CocktailParty(n / 2)).unwrap()
}
fn q(d: u32) -> Graph {
    named(Named::Hypercube(d)).unwrap()
}
fn cart(a: &Graph, b: &Graph) -> Graph {
    cartesian_product(a, b).unwrap()
}
fn lex(a: &Graph, b: &Graph) -> Graph {
    lexicographic_product(a, b).unwrap()
}
fn copies(g: &Graph, k: usize) -> Graph {
    g.copies(k).unwrap()
}
fn minus_m(g: &Graph) -> Vec<Graph> {
    remove_perfect_matching(g).unwrap()
}
fn plus_m(g: &Graph) -> Vec<Graph> {
    add_perfect_matching(g).unwrap()
}
fn z2_4(set: &[[i64; 4]]) -> Graph {
    let conn: Vec<&[i64]> = set.iter().map(|s| s.as_slice()).collect();
    cayley(&GroupSpec::new(&[2, 2, 2, 2], &conn)).unwrap()
}
fn z4_2(set: &[[i64; 2]]) -> Graph {
    let conn: Vec<&[i64]> = set.iter().map(|s| s.as_slice()).collect();
    cayley(&GroupSpec::new(&[4, 4], &conn)).unwrap()
}

/// The ten graphs of order 8, as graph and complement pairs.
pub fn zoo_order_8() -> Vec<ZooEntry> {
    let k2 = k(2);
    vec![
        ZooEntry::new('A', "K2≀K4", lex(&k2, &k(4))),
        ZooEntry::new('A', "2K1□4K1", cart(&e(2), &e(4))),
        ZooEntry::new('A', "K2≀K22", lex(&k2, &kb(2, 2))),
        ZooEntry::new('A', "K2□4K1", cart(&k2, &e(4))),
        ZooEntry::new('A', "K2≀2K2", lex(&k2, &kk(2, 2))),
        ZooEntry::new('A', "K2□2K2", cart(&k2, &kk(2, 2))),
        ZooEntry::new('A', "K2≀4K1", lex(&k2, &e(4))),
        ZooEntry::new('A', "2K1□K4", cart(&e(2), &k(4))),
        ZooEntry::new('A', "K2□K4", cart(&k2, &k(4))),
        ZooEntry::new('A', "K2□K22", cart(&k2, &kb(2, 2))),
    ]
}

/// The fifty graphs of order 16 with their family letters.
pub fn zoo_order_16() -> Vec<ZooEntry> {
    let k2 = k(2);
    let k2k4 = cart(&k2, &k(4));
    let unit = |i: usize| {
        let mut v = [0i64; 4];
        v[i] = 1;
        v
    };
    let units = [unit(3), unit(2), unit(1), unit(0)];
    let with_units = |extra: &[[i64; 4]]| {
        let mut set = units.to_vec();
        set.extend_from_slice(extra);
        z2_4(&set)
    };
    let one_sided = [
        ZooEntry::new('B', "K2□(K4≀2K1)", cart(&k2, &lex(&k(4), &e(2)))),
        ZooEntry::new('B', "K2□K8", cart(&k2, &k(8))),
        ZooEntry::new('C', "K44□K2", cart(&kb(4, 4), &k2)),
        ZooEntry::new('C', "2(K4□K2)", copies(&cart(&k(4), &k2), 2)),
        // read literally, the next two rows would repeat 2K1≀(K2≀2K2) and
        // K2≀2K4; the enumerated graphs are these
        ZooEntry::new('C', "K2□(K22≀K2)", cart(&k2, &lex(&kb(2, 2), &k2))),
        ZooEntry::new('C', "K22□K22", cart(&kb(2, 2), &kb(2, 2))),
        ZooEntry::new('C', "K22□K4", cart(&kb(2, 2), &k(4))),
        ZooEntry::new('C', "2H44", copies(&crown(4), 2)),
        ZooEntry::new('C', "Z2^4(e1..e4, 1111)", with_units(&[[1, 1, 1, 1]])),
        ZooEntry::new('C', "Z2^4(e1..e4, 0011, 1101)", with_units(&[[0, 0, 1, 1], [1, 1, 0, 1]])),
        ZooEntry::new('C', "Z2^4(e1..e4, 0011, 1100)", with_units(&[[0, 0, 1, 1], [1, 1, 0, 0]])),
        ZooEntry::new('C', "Z2^4(e1..e4, 0011, 0101, 1110)", with_units(&[[0, 0, 1, 1], [0, 1, 0, 1], [1, 1, 1, 0]])),
        ZooEntry::new(
            'D',
            "Z2^4(0011, 0100, 0101, 0110, 0111, 1000, 1100)",
            z2_4(&[[0, 0, 1, 1], [0, 1, 0, 0], [0, 1, 0, 1], [0, 1, 1, 0], [0, 1, 1, 1], [1, 0, 0, 0], [1, 1, 0, 0]]),
        ),
        ZooEntry::new('E', "Z4^2(±01, ±10, ±11)", z4_2(&[[0, 1], [0, -1], [1, 0], [-1, 0], [1, 1], [-1, -1]])),
        ZooEntry::new(
            'E',
            "Z4^2(±01, ±10, ±11, 22)",
            z4_2(&[[0, 1], [0, -1], [1, 0], [-1, 0], [1, 1], [-1, -1], [2, 2]]),
        ),
    ];
    let mut out = vec![
        ZooEntry::new('A', "K16", k(16)),
        ZooEntry::new('A', "16K1", e(16)),
        ZooEntry::new('A', "K88", kb(8, 8)),
        ZooEntry::new('A', "2K8", kk(2, 8)),
        ZooEntry::new('A', "2K44", copies(&kb(4, 4), 2)),
        ZooEntry::new('A', "K2≀2K4", lex(&k2, &kk(2, 4))),
        ZooEntry::new('A', "4K4", kk(4, 4)),
        ZooEntry::new('A', "K4444", multi(4, 4)),
        ZooEntry::new('A', "(K2□K4)≀2K1", lex(&k2k4, &e(2))),
        ZooEntry::new('A', "H44≀K2", lex(&crown(4), &k2)),
        ZooEntry::new('B', "8K2", kk(8, 2)),
        ZooEntry::new('B', "K8≀2K1", lex(&k(8), &e(2))),
        ZooEntry::new('B', "4K22", copies(&kb(2, 2), 4)),
        ZooEntry::new('B', "K4≀2K2", lex(&k(4), &kk(2, 2))),
        ZooEntry::new('B', "K2≀4K2", lex(&k2, &kk(4, 2))),
        ZooEntry::new('B', "2K1≀(K4≀2K1)", lex(&e(2), &lex(&k(4), &e(2)))),
        ZooEntry::new('B', "K2≀2K22", lex(&k2, &copies(&kb(2, 2), 2))),
        ZooEntry::new('B', "2K1≀(K2≀2K2)", lex(&e(2), &lex(&k2, &kk(2, 2)))),
        ZooEntry::new('B', "(K2□K4)≀K2", lex(&k2k4, &k2)),
        ZooEntry::new('B', "H44≀K2^c", lex(&crown(4), &e(2))),
    ];
    for entry in one_sided {
        let c = entry.complement();
        out.push(entry);
        out.push(c);
    }
    out
}

/// The twenty-six graphs of order 24 with their family letters.
pub fn zoo_order_24() -> Vec<ZooEntry> {
    let k2 = k(2);
    let q3k3 = lex(&q(3), &k(3));
    let k4k2e3 = lex(&cart(&k(4), &k2), &e(3));
    vec![
        ZooEntry::new('A', "K2≀K12", lex(&k2, &k(12))),
        ZooEntry::new('A', "2K1×12K1", cart(&e(2), &e(12))),
        ZooEntry::new('A', "K2≀12K1", lex(&k2, &e(12))),
        ZooEntry::new('A', "2K1×K12", cart(&e(2), &k(12))),
        ZooEntry::new('B', "K2≀K66", lex(&k2, &kb(6, 6))),
        ZooEntry::new('B', "2K1×2K6", cart(&e(2), &kk(2, 6))),
        ZooEntry::new('B', "K2≀2K6", lex(&k2, &kk(2, 6))),
        ZooEntry::new('B', "2K1×K66", cart(&e(2), &kb(6, 6))),
        ZooEntry::new('B', "Q3≀K3", q3k3.clone()),
        ZooEntry::new('B', "(K4□K2)≀3K1", k4k2e3.clone()),
        ZooEntry::new('C', "K2□12K1", cart(&k2, &e(12))),
        ZooEntry::many('C', "K2≀K12-M", minus_m(&lex(&k2, &k(12)))),
        ZooEntry::new('C', "K2□K12", cart(&k2, &k(12))),
        ZooEntry::many('C', "K2≀12K1-M", minus_m(&lex(&k2, &e(12)))),
        ZooEntry::new('C', "K66≀K2", lex(&kb(6, 6), &k2)),
        ZooEntry::new('C', "2K6≀2K1", lex(&kk(2, 6), &e(2))),
        ZooEntry::new('D', "K2□K66", cart(&k2, &kb(6, 6))),
        ZooEntry::many('D', "K2≀2K6-M", minus_m(&lex(&k2, &kk(2, 6)))),
        ZooEntry::new('D', "K2□2K6", cart(&k2, &kk(2, 6))),
        ZooEntry::many('D', "K2≀K66-M", minus_m(&lex(&k2, &kb(6, 6)))),
        ZooEntry::new('D', "K2≀(K6□K2)", lex(&k2, &cart(&k(6), &k2))),
        ZooEntry::new('D', "2(H66)", copies(&crown(6), 2)),
        ZooEntry::many('D', "(K4□K2)≀3K1-M", minus_m(&k4k2e3)),
        ZooEntry::many('D', "Q3≀K3+M", plus_m(&q3k3)),
        ZooEntry::many('D', "(K4□K2)≀3K1+M", plus_m(&k4k2e3)),
        ZooEntry::many('D', "Q3≀K3-M", minus_m(&q3k3)),
    ]
}

/// Isomorphisms stated alongside the tables, as pairs of candidate sets
/// that must describe the same classes.
pub fn stated_isomorphisms() -> Vec<(&'static str, Vec<Graph>, Vec<Graph>)> {
    let k2 = k(2);
    let one = |g: Graph| vec![g];
    vec![
        ("K2≀K4 = K8", one(lex(&k2, &k(4))), one(k(8))),
        ("2K1□4K1 = 2(4K1)", one(cart(&e(2), &e(4))), one(copies(&e(4), 2))),
        ("K2□4K1 = 2K1□2K2", one(cart(&k2, &e(4))), one(cart(&e(2), &kk(2, 2)))),
        ("2K1□2K2 = 2(2K2)", one(cart(&e(2), &kk(2, 2))), one(copies(&kk(2, 2), 2))),
        ("K2□2K2 = 2K1□K22", one(cart(&k2, &kk(2, 2))), one(cart(&e(2), &kb(2, 2)))),
        ("2K1□K22 = 2K22", one(cart(&e(2), &kb(2, 2))), one(copies(&kb(2, 2), 2))),
        ("K2≀4K1 = K44", one(lex(&k2, &e(4))), one(kb(4, 4))),
        ("2K1□K4 = 2K4", one(cart(&e(2), &k(4))), one(kk(2, 4))),
        ("K2□K22 = K2□K2□K2", one(cart(&k2, &kb(2, 2))), one(cart(&k2, &cart(&k2, &k2)))),
        ("K2□K2□K2 = Q3", one(cart(&k2, &cart(&k2, &k2))), one(q(3))),
        ("K2≀K12 = K24", one(lex(&k2, &k(12))), one(k(24))),
        ("2K1×12K1 = 24K1", one(lex(&e(2), &e(12))), one(e(24))),
        ("2K1≀12K1 = 2K1□12K1", one(lex(&e(2), &e(12))), one(cart(&e(2), &e(12)))),
        ("K2≀12K1 = K12,12", one(lex(&k2, &e(12))), one(kb(12, 12))),
        ("2K1×K12 = 2K12", one(lex(&e(2), &k(12))), one(kk(2, 12))),
        ("2K1≀K12 = 2K1□K12", one(lex(&e(2), &k(12))), one(cart(&e(2), &k(12)))),
        ("K2≀K66 = K6666", one(lex(&k2, &kb(6, 6))), one(multi(4, 6))),
        ("2K1×2K6 = 4K6", one(cart(&e(2), &kk(2, 6))), one(kk(4, 6))),
        ("2K1≀2K6 = 2K1□2K6", one(lex(&e(2), &kk(2, 6))), one(cart(&e(2), &kk(2, 6)))),
        ("K2≀2K6 = K22≀K6", one(lex(&k2, &kk(2, 6))), one(lex(&kb(2, 2), &k(6)))),
        ("2K1×K66 = 2K66", one(cart(&e(2), &kb(6, 6))), one(copies(&kb(6, 6), 2))),
        ("2K1≀K66 = 2K1□K66", one(lex(&e(2), &kb(6, 6))), one(cart(&e(2), &kb(6, 6)))),
        ("(K2)^3≀K3 = Q3≀K3", one(lex(&cart(&k2, &cart(&k2, &k2)), &k(3))), one(lex(&q(3), &k(3)))),
        ("K2□12K1 = 12K2", one(cart(&k2, &e(12))), one(kk(12, 2))),
        ("K2≀K12-M = CP24", minus_m(&lex(&k2, &k(12))), one(cp(24))),
        ("K2≀12K1-M = H12,12", minus_m(&lex(&k2, &e(12))), one(crown(12))),
        ("2K6≀2K1 = 2K12-M", one(lex(&kk(2, 6), &e(2))), minus_m(&kk(2, 12))),
        ("2(H66) = 2K66-M", one(copies(&crown(6), 2)), minus_m(&copies(&kb(6, 6), 2))),
        ("2K1≀(K6≀2K1) = 2CP12", one(lex(&e(2), &lex(&k(6), &e(2)))), one(copies(&cp(12), 2))),
        ("H44 = Q3", one(crown(4)), one(q(3))),
    ]
}

/// Counts and groupings as published, for the orders this crate verifies.
pub mod published {
    /// `(order, inequivalent matrices if known, diagonalizable graphs)`.
    pub const TABLE_COUNTS: [(usize, Option<usize>, usize); 9] = [
        (4, Some(1), 4),
        (8, Some(1), 10),
        (12, Some(1), 4),
        (16, Some(5), 50),
        (20, Some(3), 4),
        (24, Some(60), 26),
        (28, Some(487), 4),
        (32, Some(13_710_027), 10_196),
        (36, None, 4),
    ];

    /// Families and graph count per order-16 matrix label.
    pub const ORDER_16: [(&str, &str, usize); 5] = [
        ("had.16.0", "ABCD", 46),
        ("had.16.1", "ABCDE", 50),
        ("had.16.2", "ABCE", 48),
        ("had.16.3", "AB", 24),
        ("had.16.4", "A", 10),
    ];

    /// Families and graph count for `had.24.j`.
    pub fn order_24(j: usize) -> Option<(&'static str, usize)> {
        match j {
            1..=7 => Some(("ABCD", 26)),
            8 => Some(("AC", 10)),
            9..=59 => Some(("AB", 10)),
            60 => Some(("A", 4)),
            _ => None,
        }
    }

    /// Order-24 classes as `(graphs, matrices)`.
    pub const ORDER_24_CLASSES: [(usize, usize); 4] = [(26, 7), (10, 1), (10, 51), (4, 1)];

    /// Number of diagonalizable graphs of this order.
    pub fn union_count(order: usize) -> Option<usize> {
        TABLE_COUNTS.iter().find(|r| r.0 == order).map(|r| r.2)
    }
}

//! Named graph families and Cayley graphs on finite abelian groups.

use std::collections::BTreeSet;

use super::{cartesian_product, Graph};
use crate::error::{Error, Result};
use crate::hadamard::MAX_ORDER;

/// The small zoo of families used in the catalogs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Named {
    /// `K_n`
    Complete(usize),
    /// `nK_1`
    Empty(usize),
    /// `K_{a,b}`
    CompleteBipartite(usize, usize),
    /// `kK_m`: `k` disjoint cliques of size `m`
    Cliques { k: usize, m: usize },
    /// `H_{n,n}`: `K_{n,n}` minus the matching pairing vertex `i` with `n + i`
    CrownH(usize),
    /// `CP_{2n}`: `K_{2n}` minus the matching `{2i, 2i+1}`
    CocktailParty(usize),
    /// `Q_d`
    Hypercube(u32),
    /// `K_{m,…,m}` with `k` parts
    CompleteMultipartite { k: usize, m: usize },
    Cycle(usize),
    Path(usize),
}

pub fn named(which: Named) -> Result<Graph> {
    let bad = |msg: &str| Err(Error::BadParams(format!("{which:?}: {msg}")));
    match which {
        Named::Complete(n) => Graph::complete(n),
        Named::Empty(n) => Graph::empty(n),
        Named::CompleteBipartite(a, b) => Graph::empty(a)?.join(&Graph::empty(b)?),
        Named::Cliques { k, m } => {
            if k * m > MAX_ORDER {
                return Err(Error::TooLarge { order: k * m, max: MAX_ORDER });
            }
            Graph::complete(m)?.copies(k)
        }
        Named::CompleteMultipartite { k, m } => Ok(named(Named::Cliques { k, m })?.complement()),
        Named::CrownH(n) => {
            if n == 0 {
                return bad("n must be positive");
            }
            let mut edges = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        edges.push((i, n + j));
                    }
                }
            }
            Graph::from_edges(2 * n, &edges)
        }
        Named::CocktailParty(n) => {
            let mut g = Graph::complete(2 * n)?;
            for i in 0..n {
                g.adj[2 * i] &= !(1 << (2 * i + 1));
                g.adj[2 * i + 1] &= !(1 << (2 * i));
            }
            Ok(g)
        }
        Named::Hypercube(d) => {
            if d > 6 {
                return Err(Error::TooLarge { order: 1usize << d.min(63), max: MAX_ORDER });
            }
            let k2 = Graph::complete(2)?;
            (0..d).try_fold(Graph::complete(1)?, |acc, _| cartesian_product(&acc, &k2))
        }
        Named::Cycle(n) => {
            if n < 3 {
                return bad("a cycle needs at least 3 vertices");
            }
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(n, &edges)
        }
        Named::Path(n) => {
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::from_edges(n, &edges)
        }
    }
}

/// A direct product of cyclic groups `Z_{m_1} × … × Z_{m_k}` together with a
/// connection set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub moduli: Vec<usize>,
    pub connection: Vec<Vec<i64>>,
}

impl GroupSpec {
    pub fn new(moduli: &[usize], connection: &[&[i64]]) -> Self {
        GroupSpec { moduli: moduli.to_vec(), connection: connection.iter().map(|s| s.to_vec()).collect() }
    }

    pub fn group_order(&self) -> usize {
        self.moduli.iter().product()
    }

    fn reduce(&self, x: &[i64]) -> Vec<usize> {
        x.iter()
            .zip(&self.moduli)
            .map(|(&c, &m)| c.rem_euclid(m as i64) as usize)
            .collect()
    }

    /// Index of a reduced element; the first coordinate is most significant.
    fn index(&self, x: &[usize]) -> usize {
        x.iter().zip(&self.moduli).fold(0, |acc, (&c, &m)| acc * m + c)
    }

    fn element(&self, mut idx: usize) -> Vec<usize> {
        let mut out = vec![0; self.moduli.len()];
        for (slot, &m) in out.iter_mut().zip(&self.moduli).rev() {
            *slot = idx % m;
            idx /= m;
        }
        out
    }
}

/// Cayley graph: vertices are group elements in lexicographic order of their
/// coordinate tuples, `u ~ v` iff `u - v` lies in the connection set.
pub fn cayley(spec: &GroupSpec) -> Result<Graph> {
    let order = spec.group_order();
    if spec.moduli.contains(&0) {
        return Err(Error::BadParams("cyclic factor of order 0".into()));
    }
    if order > MAX_ORDER {
        return Err(Error::TooLarge { order, max: MAX_ORDER });
    }
    let mut set = BTreeSet::new();
    for s in &spec.connection {
        if s.len() != spec.moduli.len() {
            return Err(Error::BadParams(format!("element {s:?} has wrong arity")));
        }
        set.insert(spec.reduce(s));
    }
    for s in &set {
        if s.iter().all(|&c| c == 0) {
            return Err(Error::ContainsIdentity);
        }
        let neg: Vec<i64> = s.iter().map(|&c| -(c as i64)).collect();
        if !set.contains(&spec.reduce(&neg)) {
            return Err(Error::NotSymmetricSet);
        }
    }
    let mut g = Graph::empty(order)?;
    for u in 0..order {
        let eu = spec.element(u);
        for s in &set {
            let sum: Vec<i64> = eu.iter().zip(s).map(|(&a, &b)| (a + b) as i64).collect();
            let v = spec.index(&spec.reduce(&sum));
            g.adj[u] |= 1 << v;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{canonical_form, invariants};

    #[test]
    fn z2_cubed_all_nonzero_is_k8() {
        let mut s = Vec::new();
        for x in 1..8i64 {
            s.push(vec![x >> 2 & 1, x >> 1 & 1, x & 1]);
        }
        let g = cayley(&GroupSpec { moduli: vec![2, 2, 2], connection: s }).unwrap();
        assert_eq!(canonical_form(&g), canonical_form(&Graph::complete(8).unwrap()));
    }

    #[test]
    fn shrikhande() {
        let spec = GroupSpec::new(&[4, 4], &[&[0, 1], &[0, -1], &[1, 0], &[-1, 0], &[1, 1], &[-1, -1]]);
        let g = cayley(&spec).unwrap();
        assert_eq!(g.order(), 16);
        assert_eq!(g.regular_degree(), Some(6));
        // strongly regular (16,6,2,2): adjacent pairs share 2, non-adjacent share 2
        for u in 0..16 {
            for v in u + 1..16 {
                assert_eq!((g.neighbors(u) & g.neighbors(v)).count_ones(), 2);
            }
        }
        let k4 = Graph::complete(4).unwrap();
        let rook = cartesian_product(&k4, &k4).unwrap();
        assert_ne!(canonical_form(&g), canonical_form(&rook));
        assert_eq!(invariants(&g).clique_number, 3);
    }

    #[test]
    fn cayley_errors_and_empty_set() {
        let g = cayley(&GroupSpec { moduli: vec![3, 5], connection: vec![] }).unwrap();
        assert_eq!(g, Graph::empty(15).unwrap());
        assert!(matches!(
            cayley(&GroupSpec::new(&[5], &[&[1]])),
            Err(Error::NotSymmetricSet)
        ));
        assert!(matches!(
            cayley(&GroupSpec::new(&[5], &[&[5]])),
            Err(Error::ContainsIdentity)
        ));
        assert!(matches!(
            cayley(&GroupSpec::new(&[5, 13], &[&[1, 0], &[4, 0]])),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn zoo_examples() {
        let h44 = named(Named::CrownH(4)).unwrap();
        let q3 = named(Named::Hypercube(3)).unwrap();
        assert_eq!(canonical_form(&h44), canonical_form(&q3));
        let cp12 = named(Named::CocktailParty(6)).unwrap();
        assert_eq!(cp12.order(), 12);
        assert_eq!(cp12.regular_degree(), Some(10));
        let k4444 = named(Named::CompleteMultipartite { k: 4, m: 4 }).unwrap();
        let four_k4 = named(Named::Cliques { k: 4, m: 4 }).unwrap();
        assert_eq!(k4444, four_k4.complement());
        assert_eq!(named(Named::CompleteBipartite(2, 3)).unwrap().edge_count(), 6);
        assert!(named(Named::Cycle(2)).is_err());
        assert!(named(Named::CrownH(0)).is_err());
        assert!(named(Named::Cliques { k: 9, m: 8 }).is_err());
    }
}

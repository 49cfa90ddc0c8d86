//! Perfect matchings removed from (or added to) a graph, up to isomorphism.
//!
//! Partial matchings are grown one edge at a time. A state is the current
//! graph together with the set of still-unmatched vertices; states are merged
//! when their vertex-colored canonical forms agree, since the remaining
//! choices depend only on that colored graph.

use std::collections::BTreeMap;

use super::{canonical_form, canonical_form_colored, Graph};
use crate::error::{Error, Result};
use crate::hadamard::low_mask;

/// One representative of `G - M` for each isomorphism class, over perfect
/// matchings `M` contained in `G`.
pub fn remove_perfect_matching(g: &Graph) -> Result<Vec<Graph>> {
    matching_classes(g, true)
}

/// One representative of `G + M` for each isomorphism class, over perfect
/// matchings `M` of the complement of `G`.
pub fn add_perfect_matching(g: &Graph) -> Result<Vec<Graph>> {
    matching_classes(g, false)
}

fn matching_classes(g: &Graph, remove: bool) -> Result<Vec<Graph>> {
    let n = g.order();
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    let all = low_mask(n);
    let mut states: BTreeMap<_, (Graph, u64)> = BTreeMap::new();
    states.insert(canonical_form(g), (g.clone(), all));
    for _ in 0..n / 2 {
        let mut next = BTreeMap::new();
        for (current, unmatched) in states.values() {
            let a = unmatched.trailing_zeros() as usize;
            let mut partners = if remove {
                current.neighbors(a) & unmatched
            } else {
                !current.neighbors(a) & unmatched & !(1 << a)
            };
            while partners != 0 {
                let b = partners.trailing_zeros() as usize;
                partners &= partners - 1;
                let mut child = current.clone();
                child.adj[a] ^= 1 << b;
                child.adj[b] ^= 1 << a;
                let left = unmatched & !(1 << a) & !(1 << b);
                let key = canonical_form_colored(&child, &[left, all & !left]);
                next.entry(key).or_insert((child, left));
            }
        }
        states = next;
    }
    Ok(states.into_values().map(|(graph, _)| graph).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{lexicographic_product, named, Named};

    #[test]
    fn k4_minus_matching_is_c4() {
        let out = remove_perfect_matching(&Graph::complete(4).unwrap()).unwrap();
        assert_eq!(out.len(), 1);
        let c4 = named(Named::Cycle(4)).unwrap();
        assert_eq!(canonical_form(&out[0]), canonical_form(&c4));
    }

    #[test]
    fn add_to_two_isolated_vertices() {
        let out = add_perfect_matching(&Graph::empty(2).unwrap()).unwrap();
        assert_eq!(out, vec![Graph::complete(2).unwrap()]);
    }

    #[test]
    fn odd_order_and_no_matching() {
        assert!(matches!(remove_perfect_matching(&Graph::complete(3).unwrap()), Err(Error::OddOrder(3))));
        // a star has no perfect matching
        let star = named(Named::CompleteBipartite(1, 3)).unwrap();
        assert!(remove_perfect_matching(&star).unwrap().is_empty());
        assert!(add_perfect_matching(&Graph::complete(4).unwrap()).unwrap().is_empty());
    }

    #[test]
    fn k24_minus_matching_is_cocktail_party() {
        let k2 = Graph::complete(2).unwrap();
        let g = lexicographic_product(&k2, &Graph::complete(12).unwrap()).unwrap();
        let out = remove_perfect_matching(&g).unwrap();
        assert_eq!(out.len(), 1);
        let cp24 = named(Named::CocktailParty(12)).unwrap();
        assert_eq!(canonical_form(&out[0]), canonical_form(&cp24));
    }

    #[test]
    fn c6_matchings_brute_force() {
        // C6 has exactly 2 perfect matchings, both leave 3K2
        let c6 = named(Named::Cycle(6)).unwrap();
        let out = remove_perfect_matching(&c6).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].edge_count(), 3);
        // K_{3,3} - M is C6 for every M
        let k33 = named(Named::CompleteBipartite(3, 3)).unwrap();
        let out = remove_perfect_matching(&k33).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(canonical_form(&out[0]), canonical_form(&c6));
    }
}

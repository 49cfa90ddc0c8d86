use super::{check_size, Graph};
use crate::error::Result;
use crate::hadamard::low_mask;

/// Vertex `(u, x)` is numbered `u * |V(H)| + x`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let (ng, nh) = (g.order(), h.order());
    check_size(ng * nh)?;
    let mut adj = vec![0u64; ng * nh];
    for u in 0..ng {
        for x in 0..nh {
            let mut row = h.neighbors(x) << (u * nh);
            let mut gn = g.neighbors(u);
            while gn != 0 {
                let v = gn.trailing_zeros() as usize;
                row |= 1 << (v * nh + x);
                gn &= gn - 1;
            }
            adj[u * nh + x] = row;
        }
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

/// `G ≀ H`: every vertex of `G` blown up to a copy of `H`, with copies fully
/// joined along edges of `G`. Adjacency is `I ⊗ A(H) + A(G) ⊗ J`.
pub fn lexicographic_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let (ng, nh) = (g.order(), h.order());
    check_size(ng * nh)?;
    let block = low_mask(nh);
    let mut adj = vec![0u64; ng * nh];
    for u in 0..ng {
        let mut outer = 0u64;
        let mut gn = g.neighbors(u);
        while gn != 0 {
            let v = gn.trailing_zeros() as usize;
            outer |= block << (v * nh);
            gn &= gn - 1;
        }
        for x in 0..nh {
            adj[u * nh + x] = outer | h.neighbors(x) << (u * nh);
        }
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canonical_form;

    fn k(n: usize) -> Graph {
        Graph::complete(n).unwrap()
    }

    fn e(n: usize) -> Graph {
        Graph::empty(n).unwrap()
    }

    #[test]
    fn cartesian_k2_squared_is_c4() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let p = cartesian_product(&k(2), &k(2)).unwrap();
        // oracle: brute force over all 24 relabelings
        let mut found = false;
        for perm in permutations(4) {
            if p.relabel(&perm) == c4 {
                found = true;
            }
        }
        assert!(found);
        assert_eq!(cartesian_product(&c4, &k(1)).unwrap(), c4);
    }

    #[test]
    fn lexicographic_examples() {
        let k44 = e(4).join(&e(4)).unwrap();
        assert_eq!(lexicographic_product(&k(2), &e(4)).unwrap(), k44);
        assert_eq!(lexicographic_product(&k(2), &k(4)).unwrap(), k(8));
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(lexicographic_product(&k(1), &c5).unwrap(), c5);
        let two_k2 = k(2).copies(2).unwrap();
        let j = two_k2.join(&two_k2).unwrap();
        let l = lexicographic_product(&k(2), &two_k2).unwrap();
        assert_eq!(canonical_form(&j), canonical_form(&l));
    }

    #[test]
    fn too_large() {
        assert!(cartesian_product(&e(9), &e(8)).is_err());
        assert!(lexicographic_product(&e(9), &e(8)).is_err());
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }
}

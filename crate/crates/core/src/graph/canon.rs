//! Canonical labeling by individualization and refinement.
//!
//! Every node of the search tree holds an ordered equitable partition. A leaf
//! (discrete partition) is a labeling; the canonical form is the relabeled
//! graph whose upper-triangle bitstring is lexicographically least over all
//! leaves. Subtrees are skipped when an automorphism found at an earlier leaf
//! maps an explored child onto them.

use std::cmp::Ordering;
use std::collections::HashMap;

use super::Graph;

/// Isomorphism-invariant encoding of a graph.
///
/// `cert[i]` is row `i` of the canonically relabeled adjacency matrix with
/// vertex 0 in the most significant bit, so comparing `cert` lexicographically
/// compares upper-triangle bitstrings.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CanonicalForm {
    n: usize,
    cert: Vec<u64>,
}

impl Ord for CanonicalForm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| self.cert.cmp(&other.cert))
    }
}

impl PartialOrd for CanonicalForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n
    }

    /// The canonically relabeled graph.
    pub fn graph(&self) -> Graph {
        Graph::from_adjacency_unchecked(self.cert.iter().map(|r| r.reverse_bits()).collect())
    }

    /// Upper-triangle bits `(0,1), (0,2), …, (0,n-1), (1,2), …` as `'0'`/`'1'`.
    pub fn edge_bitstring(&self) -> String {
        let mut s = String::with_capacity(self.n * self.n.saturating_sub(1) / 2);
        for i in 0..self.n {
            for j in i + 1..self.n {
                s.push(if self.cert[i] >> (63 - j) & 1 == 1 { '1' } else { '0' });
            }
        }
        s
    }

    pub fn edge_count(&self) -> usize {
        self.cert.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }
}

/// `lab[v]` is the canonical position of vertex `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeling {
    pub lab: Vec<usize>,
    /// Automorphisms discovered during the search (as vertex maps).
    pub automorphisms: Vec<Vec<usize>>,
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).0
}

pub fn canonical_labeling(g: &Graph) -> (CanonicalForm, Labeling) {
    let n = g.order();
    let cells = if n == 0 { vec![] } else { vec![crate::hadamard::low_mask(n)] };
    run(g, cells)
}

/// Canonical form of a vertex-colored graph. `cells` lists the color classes
/// in a meaningful order; forms are only comparable between graphs colored
/// with the same sequence of class sizes.
pub fn canonical_form_colored(g: &Graph, cells: &[u64]) -> CanonicalForm {
    let cells: Vec<u64> = cells.iter().copied().filter(|&c| c != 0).collect();
    debug_assert_eq!(cells.iter().fold(0, |a, c| a | c), crate::hadamard::low_mask(g.order()));
    run(g, cells).0
}

fn run(g: &Graph, mut cells: Vec<u64>) -> (CanonicalForm, Labeling) {
    let n = g.order();
    let queue = cells.clone();
    refine(g, &mut cells, queue);
    let mut search = Search { g, n, best: None, seen: HashMap::new(), autos: Vec::new() };
    let mut path = Vec::new();
    search.node(cells, &mut path);
    let best = search.best.expect("search visits at least one leaf");
    let lab = best.lab.iter().map(|&p| p as usize).collect();
    let automorphisms = search.autos.into_iter().map(|a| a.into_iter().map(usize::from).collect()).collect();
    (CanonicalForm { n, cert: best.cert }, Labeling { lab, automorphisms })
}

/// Splits cells until the partition is equitable. Pieces of a split cell are
/// ordered by their neighbor count into the splitter, so the result depends
/// only on the structure and the incoming cell order.
fn refine(g: &Graph, cells: &mut Vec<u64>, mut queue: Vec<u64>) {
    let n = g.order();
    let mut qi = 0;
    let mut pieces: Vec<u64> = Vec::with_capacity(n);
    while qi < queue.len() && cells.len() < n {
        let w = queue[qi];
        qi += 1;
        let mut i = 0;
        while i < cells.len() {
            let x = cells[i];
            if x & (x - 1) == 0 {
                i += 1;
                continue;
            }
            let mut groups = [0u64; 65];
            let (mut lo, mut hi) = (64usize, 0usize);
            let mut bits = x;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                let c = (g.neighbors(v) & w).count_ones() as usize;
                groups[c] |= 1 << v;
                lo = lo.min(c);
                hi = hi.max(c);
                bits &= bits - 1;
            }
            if lo == hi {
                i += 1;
                continue;
            }
            pieces.clear();
            pieces.extend(groups[lo..=hi].iter().copied().filter(|&p| p != 0));
            cells.splice(i..=i, pieces.iter().copied());
            queue.extend_from_slice(&pieces);
            i += pieces.len();
        }
    }
}

struct Leaf {
    cert: Vec<u64>,
    lab: Vec<u8>,
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    best: Option<Leaf>,
    /// Certificate of every leaf seen so far, with that leaf's labeling and path.
    seen: HashMap<Vec<u64>, (Vec<u8>, Vec<u8>)>,
    autos: Vec<Vec<u8>>,
}

const MAX_SEEN: usize = 1 << 14;
const MAX_AUTOS: usize = 512;

impl Search<'_> {
    /// Returns `Some(level)` when an automorphism shows that everything below
    /// `level` on the current path is already covered.
    fn node(&mut self, cells: Vec<u64>, path: &mut Vec<u8>) -> Option<usize> {
        if cells.len() == self.n {
            return self.leaf(&cells, path);
        }
        let depth = path.len();
        let (target, cell) = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|(i, c)| (c.count_ones(), *i))
            .map(|(i, &c)| (i, c))
            .expect("non-discrete partition has a non-singleton cell");

        let mut explored: Vec<usize> = Vec::new();
        let mut orbits: Option<(usize, Vec<usize>)> = None;
        let mut bits = cell;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;

            if !explored.is_empty() {
                let stale = orbits.as_ref().is_none_or(|(k, _)| *k != self.autos.len());
                if stale {
                    orbits = Some((self.autos.len(), self.stabilizer_orbits(path)));
                }
                let parent = &orbits.as_ref().unwrap().1;
                let root = find(parent, v);
                if explored.iter().any(|&w| find(parent, w) == root) {
                    continue;
                }
            }
            explored.push(v);

            let mut child = cells.clone();
            child[target] = cell & !(1 << v);
            child.insert(target, 1 << v);
            refine(self.g, &mut child, vec![1 << v]);
            path.push(v as u8);
            let jump = self.node(child, path);
            path.pop();
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[u64], path: &[u8]) -> Option<usize> {
        let n = self.n;
        let mut lab = vec![0u8; n];
        for (pos, &c) in cells.iter().enumerate() {
            lab[c.trailing_zeros() as usize] = pos as u8;
        }
        let mut cert = vec![0u64; n];
        for v in 0..n {
            let mut row = 0u64;
            let mut bits = self.g.neighbors(v);
            while bits != 0 {
                let u = bits.trailing_zeros() as usize;
                row |= 1u64 << (63 - lab[u] as usize);
                bits &= bits - 1;
            }
            cert[lab[v] as usize] = row;
        }

        if self.best.is_none() {
            self.seen.insert(cert.clone(), (lab.clone(), path.to_vec()));
            self.best = Some(Leaf { cert, lab });
            return None;
        }

        if let Some((other_lab, other_path)) = self.seen.get(&cert) {
            // lab_other^{-1} ∘ lab maps this leaf onto the earlier one.
            let mut inv = vec![0u8; n];
            for (v, &p) in other_lab.iter().enumerate() {
                inv[p as usize] = v as u8;
            }
            let gamma: Vec<u8> = lab.iter().map(|&p| inv[p as usize]).collect();
            let common = other_path.iter().zip(path).take_while(|(a, b)| a == b).count();
            if self.autos.len() < MAX_AUTOS {
                self.autos.push(gamma);
            }
            return Some(common);
        }

        let best = self.best.as_mut().unwrap();
        if cert < best.cert {
            *best = Leaf { cert: cert.clone(), lab: lab.clone() };
        }
        if self.seen.len() < MAX_SEEN {
            self.seen.insert(cert, (lab, path.to_vec()));
        }
        None
    }

    /// Union-find parents for the orbits of the automorphisms found so far
    /// that fix every vertex on `path`.
    fn stabilizer_orbits(&self, path: &[u8]) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        for gamma in &self.autos {
            if path.iter().all(|&p| gamma[p as usize] == p) {
                for (v, &w) in gamma.iter().enumerate() {
                    let (a, b) = (find(&parent, v), find(&parent, w as usize));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        parent
    }
}

fn find(parent: &[usize], mut v: usize) -> usize {
    while parent[v] != v {
        v = parent[v];
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

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

    fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
        a.order() == b.order()
            && a.edge_count() == b.edge_count()
            && permutations(a.order()).iter().any(|p| &a.relabel(p) == b)
    }

    fn graph_from_mask(n: usize, mask: u64) -> Graph {
        let mut edges = Vec::new();
        let mut k = 0;
        for u in 0..n {
            for v in u + 1..n {
                if mask >> k & 1 == 1 {
                    edges.push((u, v));
                }
                k += 1;
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn paths_relabeled_match() {
        let a = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let b = Graph::from_edges(3, &[(1, 0), (0, 2)]).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));
    }

    #[test]
    fn c4_and_k22() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let k22 = Graph::from_edges(4, &[(0, 1), (0, 3), (2, 1), (2, 3)]).unwrap();
        assert!(brute_isomorphic(&c4, &k22));
        assert_eq!(canonical_form(&c4), canonical_form(&k22));
        let k4 = Graph::complete(4).unwrap();
        assert_ne!(canonical_form(&k4), canonical_form(&k22));
    }

    #[test]
    fn canonical_graph_is_isomorphic_to_input() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (0, 4)]).unwrap();
        let (form, labeling) = canonical_labeling(&g);
        assert_eq!(g.relabel(&labeling.lab), form.graph());
        assert_eq!(form.edge_count(), 4);
        assert_eq!(form.edge_bitstring().len(), 10);
        for a in &labeling.automorphisms {
            assert_eq!(&g.relabel(a), &g);
        }
    }

    #[test]
    fn agrees_with_brute_force_up_to_five_vertices() {
        // every pair of labeled graphs on n <= 5 vertices
        for n in 1..=5usize {
            let pairs = n * (n - 1) / 2;
            let graphs: Vec<Graph> = (0..1u64 << pairs).map(|m| graph_from_mask(n, m)).collect();
            let forms: Vec<CanonicalForm> = graphs.iter().map(canonical_form).collect();
            let perms = permutations(n);
            for i in 0..graphs.len() {
                let orbit: std::collections::HashSet<Graph> =
                    perms.iter().map(|p| graphs[i].relabel(p)).collect();
                for j in 0..graphs.len() {
                    assert_eq!(orbit.contains(&graphs[j]), forms[i] == forms[j], "n={n} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn agrees_with_brute_force_on_six_vertices_sample() {
        // 2^15 labeled graphs; compare each against a fixed stride of others
        let n = 6;
        let graphs: Vec<Graph> = (0..1u64 << 15).map(|m| graph_from_mask(n, m)).collect();
        let forms: Vec<CanonicalForm> = graphs.iter().map(canonical_form).collect();
        let perms = permutations(n);
        for i in (0..graphs.len()).step_by(331) {
            let orbit: std::collections::HashSet<Graph> = perms.iter().map(|p| graphs[i].relabel(p)).collect();
            for j in 0..graphs.len() {
                assert_eq!(orbit.contains(&graphs[j]), forms[i] == forms[j]);
            }
        }
        // number of isomorphism classes of graphs on 6 vertices
        let distinct: std::collections::HashSet<_> = forms.into_iter().collect();
        assert_eq!(distinct.len(), 156);
    }

    #[test]
    fn highly_symmetric_graphs_finish() {
        for n in [16, 32, 64] {
            let k = Graph::complete(n).unwrap();
            assert_eq!(canonical_form(&k).graph(), k);
            let e = Graph::empty(n).unwrap();
            assert_eq!(canonical_form(&e).graph(), e);
        }
        let m = Graph::complete(2).unwrap().copies(16).unwrap();
        let (f, _) = canonical_labeling(&m);
        assert_eq!(f.edge_count(), 16);
        let cp = m.complement();
        assert_eq!(canonical_form(&cp).edge_count(), 32 * 30 / 2);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn invariant_under_relabeling(n in 1usize..=10, mask in any::<u64>(), seed in any::<u64>()) {
            let g = graph_from_mask(n, mask);
            let mut perm: Vec<usize> = (0..n).collect();
            let mut s = seed;
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (s >> 33) as usize % (i + 1));
            }
            prop_assert_eq!(canonical_form(&g), canonical_form(&g.relabel(&perm)));
        }
    }
}

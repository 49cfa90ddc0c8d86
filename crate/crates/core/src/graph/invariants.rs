use serde::{Deserialize, Serialize};

use super::Graph;
use crate::hadamard::low_mask;

/// Exact combinatorial invariants of a graph.
///
/// `girth` is `None` for acyclic graphs and `diameter` is `None` for
/// disconnected ones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub degree_sequence: Vec<usize>,
    pub regular_degree: Option<usize>,
    pub components: usize,
    pub girth: Option<usize>,
    pub diameter: Option<usize>,
    pub clique_number: usize,
    pub is_cograph: bool,
    pub is_chordal: bool,
    pub is_distance_regular: bool,
}

pub fn invariants(g: &Graph) -> Invariants {
    let mut degree_sequence = g.degrees();
    degree_sequence.sort_unstable_by(|a, b| b.cmp(a));
    let dist = all_distances(g);
    let diameter = if g.order() == 0 {
        Some(0)
    } else {
        dist.iter()
            .flatten()
            .try_fold(0usize, |acc, d| d.map(|d| acc.max(d)))
    };
    Invariants {
        degree_sequence,
        regular_degree: g.regular_degree(),
        components: components(g),
        girth: girth(g),
        diameter,
        clique_number: clique_number(g),
        is_cograph: !has_induced_p4(g),
        is_chordal: is_chordal(g),
        is_distance_regular: is_distance_regular(g, &dist),
    }
}

/// For every path `u-v-w-x` on four distinct vertices, `xu` is an edge.
pub fn four_path_closure(g: &Graph) -> bool {
    for v in 0..g.order() {
        let mut ws = g.neighbors(v);
        while ws != 0 {
            let w = ws.trailing_zeros() as usize;
            ws &= ws - 1;
            let us = g.neighbors(v) & !(1 << w);
            let xs = g.neighbors(w) & !(1 << v);
            let mut bits = us;
            while bits != 0 {
                let u = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if xs & !(1 << u) & !g.neighbors(u) != 0 {
                    return false;
                }
            }
        }
    }
    true
}

fn components(g: &Graph) -> usize {
    let mut left = low_mask(g.order());
    let mut count = 0;
    while left != 0 {
        let v = left.trailing_zeros() as usize;
        left &= !g.component_of(v);
        count += 1;
    }
    count
}

/// BFS layers from `root`; `layers[d]` holds the vertices at distance `d`.
fn bfs_layers(g: &Graph, root: usize) -> Vec<u64> {
    let mut layers = vec![1u64 << root];
    let mut seen = 1u64 << root;
    loop {
        let mut next = 0u64;
        let mut bits = *layers.last().unwrap();
        while bits != 0 {
            let u = bits.trailing_zeros() as usize;
            next |= g.neighbors(u);
            bits &= bits - 1;
        }
        next &= !seen;
        if next == 0 {
            return layers;
        }
        seen |= next;
        layers.push(next);
    }
}

fn all_distances(g: &Graph) -> Vec<Vec<Option<usize>>> {
    (0..g.order())
        .map(|u| {
            let mut row = vec![None; g.order()];
            for (d, layer) in bfs_layers(g, u).into_iter().enumerate() {
                let mut bits = layer;
                while bits != 0 {
                    row[bits.trailing_zeros() as usize] = Some(d);
                    bits &= bits - 1;
                }
            }
            row
        })
        .collect()
}

fn girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                break;
            }
            let mut bits = g.neighbors(u);
            while bits != 0 {
                let w = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

fn clique_number(g: &Graph) -> usize {
    let mut best = 0;
    expand_clique(g, 0, low_mask(g.order()), &mut best);
    best
}

/// Branch and bound with a greedy coloring bound on the candidate set.
fn expand_clique(g: &Graph, size: usize, candidates: u64, best: &mut usize) {
    if candidates == 0 {
        *best = (*best).max(size);
        return;
    }
    // color classes in order; each vertex gets the index of its class
    let mut order = Vec::with_capacity(candidates.count_ones() as usize);
    let mut uncolored = candidates;
    let mut color = 0;
    while uncolored != 0 {
        color += 1;
        let mut avail = uncolored;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= !(1 << v) & !g.neighbors(v);
            uncolored &= !(1 << v);
            order.push((v, color));
        }
    }
    let mut remaining = candidates;
    for &(v, c) in order.iter().rev() {
        if size + c <= *best {
            return;
        }
        expand_clique(g, size + 1, remaining & g.neighbors(v), best);
        remaining &= !(1 << v);
    }
}

fn has_induced_p4(g: &Graph) -> bool {
    for v in 0..g.order() {
        let mut ws = g.neighbors(v);
        while ws != 0 {
            let w = ws.trailing_zeros() as usize;
            ws &= ws - 1;
            let ends_v = g.neighbors(v) & !g.neighbors(w) & !(1 << w);
            let ends_w = g.neighbors(w) & !g.neighbors(v) & !(1 << v);
            let mut bits = ends_v;
            while bits != 0 {
                let u = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if ends_w & !g.neighbors(u) != 0 {
                    return true;
                }
            }
        }
    }
    false
}

/// Maximum cardinality search, then a perfect-elimination check on the
/// reversed visit order.
fn is_chordal(g: &Graph) -> bool {
    let n = g.order();
    let mut weight = vec![0usize; n];
    let mut visited = 0u64;
    let mut visit_order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| visited >> v & 1 == 0)
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        visited |= 1 << v;
        visit_order.push(v);
        let mut bits = g.neighbors(v) & !visited;
        while bits != 0 {
            weight[bits.trailing_zeros() as usize] += 1;
            bits &= bits - 1;
        }
    }
    // eliminating in reverse visit order: the earlier-visited neighbors of v
    // must form a clique
    let mut earlier = 0u64;
    for &v in &visit_order {
        let back = g.neighbors(v) & earlier;
        let mut bits = back;
        while bits != 0 {
            let u = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if back & !(1 << u) & !g.neighbors(u) != 0 {
                return false;
            }
        }
        earlier |= 1 << v;
    }
    true
}

/// Connected, regular, and for every pair at distance `h` the counts
/// `c_h = |N(v) ∩ S_{h-1}(u)|` and `b_h = |N(v) ∩ S_{h+1}(u)|` depend only on `h`.
fn is_distance_regular(g: &Graph, dist: &[Vec<Option<usize>>]) -> bool {
    let n = g.order();
    if n == 0 || !g.is_connected() || g.regular_degree().is_none() {
        return false;
    }
    let mut c: Vec<Option<u32>> = vec![None; n + 1];
    let mut b: Vec<Option<u32>> = vec![None; n + 1];
    for u in 0..n {
        let layers = bfs_layers(g, u);
        for v in 0..n {
            let h = dist[u][v].expect("connected");
            let nv = g.neighbors(v);
            let ch = if h == 0 { 0 } else { (nv & layers[h - 1]).count_ones() };
            let bh = layers.get(h + 1).map_or(0, |l| (nv & l).count_ones());
            if *c[h].get_or_insert(ch) != ch || *b[h].get_or_insert(bh) != bh {
                return false;
            }
        }
    }
    true
}

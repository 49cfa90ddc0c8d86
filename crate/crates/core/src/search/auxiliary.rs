use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hadamard::{low_mask, NormalizedHadamard};

/// Every off-diagonal Laplacian entry written as a linear combination of the
/// first-row variables `x_c = -L_{0c}`, `c = 1..n-1`.
///
/// Coefficients are stored scaled by `n`, so for pair `{a, b}` and column `c`
/// the entry is `Σ_k H[a][k]·H[b][k]·H[c][k]`. An assignment `x ∈ {0,1}^{n-1}`
/// is a Laplacian iff every row sums to `0` (no edge) or `n` (edge).
/// Column `c` corresponds to vertex `c`; index 0 is unused and always zero.
#[derive(Clone, Debug)]
pub struct AuxiliaryMatrix {
    n: usize,
    rows: Vec<Vec<i64>>,
    entry_map: Vec<Vec<(usize, usize)>>,
    column_order: Vec<usize>,
}

/// Builds the deduplicated coefficient rows. Rows appear in the order their
/// first pair occurs when pairs are listed row-major.
pub fn build_auxiliary(nh: &NormalizedHadamard) -> AuxiliaryMatrix {
    let n = nh.order();
    let h = nh.base().sign_rows();
    let mask = low_mask(n);
    let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut entry_map: Vec<Vec<(usize, usize)>> = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let ab = h[a] ^ h[b];
            let mut coeffs = vec![0i64; n];
            for (c, slot) in coeffs.iter_mut().enumerate().skip(1) {
                *slot = n as i64 - 2 * i64::from(((ab ^ h[c]) & mask).count_ones());
            }
            let r = *index.entry(coeffs.clone()).or_insert_with(|| {
                rows.push(coeffs);
                entry_map.push(Vec::new());
                rows.len() - 1
            });
            entry_map[r].push((a, b));
        }
    }
    AuxiliaryMatrix { n, rows, entry_map, column_order: (1..n).collect() }
}

impl AuxiliaryMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn entry_map(&self) -> &[Vec<(usize, usize)>] {
        &self.entry_map
    }

    /// Columns (vertices `1..n`) in the order the search decides them.
    pub fn column_order(&self) -> &[usize] {
        &self.column_order
    }

    /// Replaces the column order; must be a permutation of `1..n`.
    pub fn with_column_order(mut self, order: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; self.n];
        if order.len() + 1 != self.n {
            return Err(Error::BadPermutation(self.n - 1));
        }
        for &c in &order {
            if c == 0 || c >= self.n || seen[c] {
                return Err(Error::BadPermutation(self.n - 1));
            }
            seen[c] = true;
        }
        self.column_order = order;
        Ok(self)
    }

    /// If the row is `n·e_c`, returns `c`.
    pub fn unit_column(&self, r: usize) -> Option<usize> {
        let row = &self.rows[r];
        let mut hit = None;
        for (c, &m) in row.iter().enumerate() {
            match m {
                0 => {}
                m if m == self.n as i64 && hit.is_none() => hit = Some(c),
                _ => return None,
            }
        }
        hit
    }

    /// Orders columns by how many rows give them a coefficient other than
    /// `0` or `±n`, most first; ties keep ascending column index.
    pub fn sort_columns(mut self) -> Self {
        let n = self.n as i64;
        let mut cols: Vec<(usize, usize)> = (1..self.n)
            .map(|c| {
                let count = self.rows.iter().filter(|r| r[c] != 0 && r[c].abs() != n).count();
                (c, count)
            })
            .collect();
        cols.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        self.column_order = cols.into_iter().map(|(c, _)| c).collect();
        self
    }

    /// Graph for the first row given as a vertex mask (bit `c` set iff vertex
    /// 0 is adjacent to `c`).
    pub fn subset_to_graph(&self, first_row: u64) -> Result<Graph> {
        assert_eq!(first_row & 1, 0, "vertex 0 cannot be its own neighbor");
        let n = self.n as i64;
        let mut adj = vec![0u64; self.n];
        for (r, row) in self.rows.iter().enumerate() {
            let mut sum = 0i64;
            let mut bits = first_row & low_mask(self.n);
            while bits != 0 {
                sum += row[bits.trailing_zeros() as usize];
                bits &= bits - 1;
            }
            if sum == n {
                for &(a, b) in &self.entry_map[r] {
                    adj[a] |= 1 << b;
                    adj[b] |= 1 << a;
                }
            } else if sum != 0 {
                return Err(Error::NotALaplacian { row: r, sum });
            }
        }
        Ok(Graph::from_adjacency_unchecked(adj))
    }
}

/// Bit mask with the given vertices set.
pub fn vertex_mask(vertices: &[usize]) -> u64 {
    vertices.iter().fold(0, |m, &v| m | 1 << v)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::graph::{canonical_form, named, Named};
    use crate::hadamard::sylvester;
    use crate::io::{file_diagonalizer, parse_sloane};

    pub(crate) fn had_16_1() -> NormalizedHadamard {
        let text = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/had.16.1"));
        file_diagonalizer(&parse_sloane(text).unwrap()[0])
    }

    // coefficients in units of 1/2, columns 1..15
    const TABLE3_HALVES: [[i64; 15]; 27] = [
        [2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2],
        [0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 1, -1],
        [0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, -1, 1],
        [0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0],
        [0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, -1, 1, 0, 0],
        [0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 1, 1],
        [0, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 1, 1],
        [0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0],
        [0, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0],
        [0, 1, 1, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0],
        [0, 1, 1, 0, 0, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0],
        [0, 1, -1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0],
        [0, -1, 1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0],
    ];
    const TABLE3_ENTRIES: [&str; 27] = [
        "01,23,45,67,89,AB,CD,EF",
        "02,13,8A,9B",
        "03,12,8B,9A",
        "04,15,8C,9D",
        "05,14,8D,9C",
        "06,17,8E,9F",
        "07,16,8F,9E",
        "08,19,2A,3B,4C,5D,6E,7F",
        "09,18,2B,3A,4D,5C,6F,7E",
        "0A,1B,28,39",
        "0B,1A,29,38",
        "0C,1D,48,59",
        "0D,1C,49,58",
        "0E,1F,68,79",
        "0F,1E,69,78",
        "24,35,AC,BD",
        "25,34,AD,BC",
        "26,37,AE,BF",
        "27,36,AF,BE",
        "2C,3D,4A,5B",
        "2D,3C,4B,5A",
        "2E,3F,6A,7B",
        "2F,3E,6B,7A",
        "46,57,CE,DF",
        "47,56,CF,DE",
        "4E,5F,6C,7D",
        "4F,5E,6D,7C",
    ];

    fn hex_pairs(s: &str) -> Vec<(usize, usize)> {
        s.split(',')
            .map(|p| {
                let d: Vec<usize> = p.chars().map(|c| c.to_digit(16).unwrap() as usize).collect();
                (d[0], d[1])
            })
            .collect()
    }

    #[test]
    fn had_16_1_matches_published_table() {
        let nh = had_16_1();
        assert!(nh.provenance().is_empty());
        let aux = build_auxiliary(&nh);
        assert_eq!(aux.rows().len(), 27);
        for (r, row) in aux.rows().iter().enumerate() {
            // scaled by 16, table is in halves
            let expected: Vec<i64> = TABLE3_HALVES[r].iter().map(|&h| 8 * h).collect();
            assert_eq!(&row[1..], &expected[..], "row {}", r + 1);
            assert_eq!(aux.entry_map()[r], hex_pairs(TABLE3_ENTRIES[r]), "row {}", r + 1);
        }
    }

    #[test]
    fn every_pair_once() {
        for nh in [had_16_1(), sylvester(5).unwrap().normalize()] {
            let n = nh.order();
            let aux = build_auxiliary(&nh);
            let mut seen = vec![vec![0; n]; n];
            for pairs in aux.entry_map() {
                for &(a, b) in pairs {
                    seen[a][b] += 1;
                }
            }
            for a in 0..n {
                for b in a + 1..n {
                    assert_eq!(seen[a][b], 1);
                }
            }
            // pairs {0, c} give n·e_c
            for c in 1..n {
                let r = aux.entry_map().iter().position(|p| p.contains(&(0, c))).unwrap();
                assert_eq!(aux.unit_column(r), Some(c));
            }
        }
    }

    #[test]
    fn order_four_all_unit() {
        let aux = build_auxiliary(&sylvester(2).unwrap().normalize());
        assert_eq!(aux.rows().len(), 3);
        assert!((0..3).all(|r| aux.unit_column(r).is_some()));
        assert_eq!(aux.clone().sort_columns().column_order(), &[1, 2, 3]);
    }

    #[test]
    fn sort_key_on_published_table() {
        // count entries of ±1/2 per column of the literal table
        let mut counts: Vec<(usize, usize)> =
            (0..15).map(|j| (j + 1, TABLE3_HALVES.iter().filter(|r| r[j].abs() == 1).count())).collect();
        counts.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        let expected: Vec<usize> = counts.into_iter().map(|c| c.0).collect();
        let aux = build_auxiliary(&had_16_1()).sort_columns();
        assert_eq!(aux.column_order(), &expected[..]);
        assert_eq!(aux.column_order(), &[2, 3, 4, 5, 6, 7, 10, 11, 12, 13, 14, 15, 1, 8, 9]);
    }

    #[test]
    fn subset_examples() {
        let aux = build_auxiliary(&had_16_1());
        let g = aux.subset_to_graph(vertex_mask(&[1, 2, 3])).unwrap();
        let cliques = named(Named::Cliques { k: 4, m: 4 }).unwrap();
        assert_eq!(g, cliques);
        assert_eq!(canonical_form(&g), canonical_form(&cliques));
        assert_eq!(aux.subset_to_graph(0).unwrap(), crate::graph::Graph::empty(16).unwrap());
        match aux.subset_to_graph(vertex_mask(&[2, 3, 11])) {
            Err(Error::NotALaplacian { sum, .. }) => assert_eq!(sum, 8),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn column_order_validation() {
        let aux = build_auxiliary(&sylvester(2).unwrap().normalize());
        assert!(aux.clone().with_column_order(vec![3, 1, 2]).is_ok());
        assert!(aux.clone().with_column_order(vec![0, 1, 2]).is_err());
        assert!(aux.clone().with_column_order(vec![1, 1, 2]).is_err());
        assert!(aux.with_column_order(vec![1, 2]).is_err());
    }
}

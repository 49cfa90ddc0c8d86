//! Hadamard matrices stored as packed sign rows.
//!
//! Entry `(i, j)` is `-1` iff bit `j` of row `i` is set, so the dot product
//! of two rows is `n - 2 * popcount(a ^ b)`. Orders are capped at 64 so a
//! row always fits one machine word.

use std::fmt;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graph::{canonical_form_colored, CanonicalForm, Graph};

pub const MAX_ORDER: usize = 64;

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Dot product of two packed ±1 vectors of length `n`.
#[inline]
pub fn sign_dot(a: u64, b: u64, n: usize) -> i64 {
    n as i64 - 2 * i64::from(((a ^ b) & low_mask(n)).count_ones())
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::BadOrder(0));
    }
    if n > MAX_ORDER {
        return Err(Error::TooLarge { order: n, max: MAX_ORDER });
    }
    if !(n == 1 || n == 2 || n.is_multiple_of(4)) {
        return Err(Error::BadOrder(n));
    }
    Ok(())
}

/// A square ±1 matrix with `HᵀH = nI`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HadamardMatrix {
    n: usize,
    rows: Vec<u64>,
}

impl HadamardMatrix {
    /// Checks a raw integer matrix and wraps it.
    pub fn validate<R: AsRef<[i64]>>(raw: &[R]) -> Result<Self> {
        let n = raw.len();
        let mut rows = Vec::with_capacity(n);
        for (i, row) in raw.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::NotSquare { rows: n, row: i, cols: row.len() });
            }
            let mut bits = 0u64;
            for (j, &v) in row.iter().enumerate() {
                match v {
                    1 => {}
                    -1 => bits |= 1 << j,
                    _ => return Err(Error::NonPmOne { row: i, col: j, value: v }),
                }
            }
            rows.push(bits);
        }
        Self::from_sign_rows(rows)
    }

    /// Builds a matrix from packed sign rows (bit set means `-1`).
    pub fn from_sign_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        check_order(n)?;
        let mask = low_mask(n);
        let rows: Vec<u64> = rows.into_iter().map(|r| r & mask).collect();
        let h = HadamardMatrix { n, rows };
        h.check_orthogonal()?;
        Ok(h)
    }

    fn check_orthogonal(&self) -> Result<()> {
        let cols = self.column_bits();
        for a in 0..self.n {
            for b in a + 1..self.n {
                let dot = sign_dot(cols[a], cols[b], self.n);
                if dot != 0 {
                    return Err(Error::NotOrthogonal { a, b, dot });
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Entry as `+1` or `-1`.
    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        if self.rows[i] >> j & 1 == 1 {
            -1
        } else {
            1
        }
    }

    pub fn sign_rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn column_bits(&self) -> Vec<u64> {
        transpose_bits(&self.rows, self.n)
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        HadamardMatrix { n: self.n, rows: self.column_bits() }
    }

    pub fn is_normalized(&self) -> bool {
        self.rows[0] == 0 && self.rows.iter().all(|r| r & 1 == 0)
    }

    /// `HᵀH` computed entrywise; equals `nI` for every valid matrix.
    pub fn gram(&self) -> Vec<Vec<i64>> {
        let cols = self.column_bits();
        cols.iter()
            .map(|&a| cols.iter().map(|&b| sign_dot(a, b, self.n)).collect())
            .collect()
    }

    pub fn negate_rows(&self, rows: &[usize]) -> Result<Self> {
        let mut out = self.rows.clone();
        for &r in rows {
            if r >= self.n {
                return Err(Error::BadIndex { index: r, order: self.n });
            }
            out[r] = !out[r] & low_mask(self.n);
        }
        Ok(HadamardMatrix { n: self.n, rows: out })
    }

    pub fn negate_columns(&self, cols: &[usize]) -> Result<Self> {
        let mut flip = 0u64;
        for &c in cols {
            if c >= self.n {
                return Err(Error::BadIndex { index: c, order: self.n });
            }
            flip ^= 1 << c;
        }
        Ok(HadamardMatrix { n: self.n, rows: self.rows.iter().map(|r| r ^ flip).collect() })
    }

    /// Row `i` of the result is row `perm[i]` of `self`.
    pub fn permute_rows(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.n)?;
        Ok(HadamardMatrix { n: self.n, rows: perm.iter().map(|&p| self.rows[p]).collect() })
    }

    /// Column `j` of the result is column `perm[j]` of `self`.
    pub fn permute_columns(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.n)?;
        let rows = self
            .rows
            .iter()
            .map(|&r| {
                perm.iter()
                    .enumerate()
                    .fold(0u64, |acc, (j, &p)| acc | ((r >> p & 1) << j))
            })
            .collect();
        Ok(HadamardMatrix { n: self.n, rows })
    }

    /// Negates columns, then rows, until row 0 and column 0 are all `+1`.
    pub fn normalize(&self) -> NormalizedHadamard {
        let negated_columns: Vec<usize> = (0..self.n).filter(|&j| self.rows[0] >> j & 1 == 1).collect();
        let h = self.negate_columns(&negated_columns).expect("indices in range");
        let negated_rows: Vec<usize> = (0..self.n).filter(|&i| h.rows[i] & 1 == 1).collect();
        let h = h.negate_rows(&negated_rows).expect("indices in range");
        debug_assert!(h.is_normalized());
        NormalizedHadamard { base: h, provenance: Normalization { negated_rows, negated_columns } }
    }

    /// SHA-256 over the sign bits in row-major order, hex encoded.
    pub fn sign_digest(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update((self.n as u32).to_le_bytes());
        for r in &self.rows {
            hasher.update(r.to_le_bytes());
        }
        hex::encode(hasher.finalize())
    }
}

impl fmt::Debug for HadamardMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "HadamardMatrix(n={})", self.n)?;
        for i in 0..self.n {
            let line: String = (0..self.n).map(|j| if self.entry(i, j) > 0 { '+' } else { '-' }).collect();
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::BadPermutation(n));
    }
    let mut seen = 0u64;
    for &p in perm {
        if p >= n || seen >> p & 1 == 1 {
            return Err(Error::BadPermutation(n));
        }
        seen |= 1 << p;
    }
    Ok(())
}

pub(crate) fn transpose_bits(rows: &[u64], n: usize) -> Vec<u64> {
    let mut cols = vec![0u64; n];
    for (i, &r) in rows.iter().enumerate() {
        let mut bits = r;
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            cols[j] |= 1 << i;
            bits &= bits - 1;
        }
    }
    cols
}

/// Which rows and columns were negated (0-based) to reach normal form.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Normalization {
    pub negated_rows: Vec<usize>,
    pub negated_columns: Vec<usize>,
}

impl Normalization {
    pub fn is_empty(&self) -> bool {
        self.negated_rows.is_empty() && self.negated_columns.is_empty()
    }
}

/// A Hadamard matrix whose first row and first column are all `+1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedHadamard {
    base: HadamardMatrix,
    provenance: Normalization,
}

impl NormalizedHadamard {
    /// Wraps a matrix that is already normalized.
    pub fn new(base: HadamardMatrix) -> Result<Self> {
        if !base.is_normalized() {
            return Err(Error::NotNormalized);
        }
        Ok(NormalizedHadamard { base, provenance: Normalization::default() })
    }

    pub fn base(&self) -> &HadamardMatrix {
        &self.base
    }

    pub fn provenance(&self) -> &Normalization {
        &self.provenance
    }

    pub fn order(&self) -> usize {
        self.base.n
    }

    pub fn into_base(self) -> HadamardMatrix {
        self.base
    }

    /// The `(n-1)×(n-1)` block left after removing the first row and column.
    pub fn core_matrix(&self) -> Result<CoreMatrix> {
        let n = self.base.n;
        if n < 2 {
            return Err(Error::OrderOne);
        }
        let rows = self.base.rows[1..].iter().map(|r| r >> 1).collect();
        Ok(CoreMatrix { m: n - 1, rows })
    }
}

/// Core block `Ĥ` of a normalized Hadamard matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreMatrix {
    m: usize,
    rows: Vec<u64>,
}

impl CoreMatrix {
    pub fn size(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        if self.rows[i] >> j & 1 == 1 {
            -1
        } else {
            1
        }
    }

    pub fn sign_rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.m)
            .map(|i| (0..self.m).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    pub fn row_dot(&self, r: usize, s: usize) -> i64 {
        sign_dot(self.rows[r], self.rows[s], self.m)
    }

    pub fn row_sum(&self, r: usize) -> i64 {
        sign_dot(self.rows[r], 0, self.m)
    }

    /// Distinct rows dot to -1, rows sum to -1, and self products are `n-1`.
    pub fn check_row_products(&self) -> bool {
        let m = self.m as i64;
        (0..self.m).all(|r| {
            self.row_sum(r) == -1
                && (0..self.m).all(|s| self.row_dot(r, s) == if r == s { m } else { -1 })
        })
    }
}

/// Sylvester's matrix of order `2^k`.
pub fn sylvester(k: u32) -> Result<HadamardMatrix> {
    if k > 6 {
        return Err(Error::TooLarge { order: 1usize << k.min(63), max: MAX_ORDER });
    }
    let h1 = HadamardMatrix { n: 2, rows: vec![0b00, 0b10] };
    let mut h = HadamardMatrix { n: 1, rows: vec![0] };
    for _ in 0..k {
        h = kronecker(&h1, &h)?;
    }
    Ok(h)
}

/// Paley's first construction, order `q + 1` for a prime `q ≡ 3 (mod 4)`.
pub fn paley(q: usize) -> Result<HadamardMatrix> {
    let n = q + 1;
    if n > MAX_ORDER {
        return Err(Error::TooLarge { order: n, max: MAX_ORDER });
    }
    if q % 4 != 3 || (2..q).any(|d| d * d <= q && q.is_multiple_of(d)) {
        return Err(Error::BadParams(format!("{q} is not a prime congruent to 3 mod 4")));
    }
    let mut square = vec![false; q];
    for x in 1..q {
        square[x * x % q] = true;
    }
    // row 0 all +1; row 1+i: -1 in column 0, then 1 + Q[i][j] on the rest,
    // with Q[i][j] = χ(j - i) and the diagonal of I + S equal to +1
    let mut rows = vec![0u64; n];
    for i in 0..q {
        let mut row = 1u64;
        for j in 0..q {
            let d = (j + q - i) % q;
            if d != 0 && !square[d] {
                row |= 1 << (j + 1);
            }
        }
        rows[i + 1] = row;
    }
    HadamardMatrix::from_sign_rows(rows)
}

/// Paley's second construction, order `2(q + 1)` for a prime `q ≡ 1 (mod 4)`.
pub fn paley_ii(q: usize) -> Result<HadamardMatrix> {
    let n = 2 * (q + 1);
    if n > MAX_ORDER {
        return Err(Error::TooLarge { order: n, max: MAX_ORDER });
    }
    if q % 4 != 1 || q < 5 || (2..q).any(|d| d * d <= q && q.is_multiple_of(d)) {
        return Err(Error::BadParams(format!("{q} is not a prime congruent to 1 mod 4")));
    }
    let mut square = vec![false; q];
    for x in 1..q {
        square[x * x % q] = true;
    }
    // symmetric conference matrix C of order q + 1, then
    // H = C ⊗ [[1, 1], [1, -1]] + I ⊗ [[1, -1], [-1, -1]]
    let conf = |i: usize, j: usize| -> i64 {
        match (i, j) {
            (0, 0) => 0,
            (0, _) | (_, 0) => 1,
            _ if i == j => 0,
            _ if square[(j + q - i) % q] => 1,
            _ => -1,
        }
    };
    let mut rows = vec![0u64; n];
    for i in 0..=q {
        for j in 0..=q {
            let c = conf(i, j);
            let block = if c == 0 { [[1, -1], [-1, -1]] } else { [[c, c], [c, -c]] };
            for (a, brow) in block.iter().enumerate() {
                for (b, &v) in brow.iter().enumerate() {
                    if v < 0 {
                        rows[2 * i + a] |= 1 << (2 * j + b);
                    }
                }
            }
        }
    }
    HadamardMatrix::from_sign_rows(rows)
}

/// Largest order [`equivalence_form`] handles: the normalized core becomes a
/// bipartite graph on `2(n-1)` vertices.
pub const EQUIVALENCE_MAX: usize = 32;

/// Invariant of the equivalence class under row and column permutations and
/// negations; two matrices are equivalent iff their forms are equal.
///
/// Normalizing at row `i` and column `j` leaves a core that is unique up to
/// row and column permutations, so the form is the least colored canonical
/// form of the core's bipartite `-1` pattern over all `n²` choices of `(i, j)`.
pub fn equivalence_form(h: &HadamardMatrix) -> Result<CanonicalForm> {
    let n = h.n;
    if n > EQUIVALENCE_MAX {
        return Err(Error::TooLarge { order: n, max: EQUIVALENCE_MAX });
    }
    let m = n.saturating_sub(1);
    let row_cell = low_mask(m);
    let col_cell = low_mask(2 * m) & !row_cell;
    let mut best: Option<CanonicalForm> = None;
    for i in 0..n {
        for j in 0..n {
            // negate columns so row i is +1, then rows so column j is +1
            let col_flip = h.rows[i];
            let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
            let mut edges = Vec::new();
            for (r, &row) in h.rows.iter().enumerate().filter(|&(r, _)| r != i) {
                let r = if r > i { r - 1 } else { r };
                let row = row ^ col_flip;
                let row = if row >> j & 1 == 1 { !row } else { row };
                for (c, &col) in cols.iter().enumerate() {
                    if row >> col & 1 == 1 {
                        edges.push((r, m + c));
                    }
                }
            }
            let g = Graph::from_edges(2 * m, &edges)?;
            let form = canonical_form_colored(&g, &[row_cell, col_cell]);
            if best.as_ref().is_none_or(|b| form < *b) {
                best = Some(form);
            }
        }
    }
    Ok(best.expect("order is at least 1"))
}

/// Tensor product; entry `(i·|B|+k, j·|B|+l)` is `A[i][j]·B[k][l]`.
pub fn kronecker(a: &HadamardMatrix, b: &HadamardMatrix) -> Result<HadamardMatrix> {
    let n = a.n * b.n;
    if n > MAX_ORDER {
        return Err(Error::TooLarge { order: n, max: MAX_ORDER });
    }
    let nb = b.n;
    let b_mask = low_mask(nb);
    let mut rows = Vec::with_capacity(n);
    for &ra in &a.rows {
        for &rb in &b.rows {
            let mut row = 0u64;
            for j in 0..a.n {
                let block = if ra >> j & 1 == 1 { !rb & b_mask } else { rb };
                row |= block << (j * nb);
            }
            rows.push(row);
        }
    }
    Ok(HadamardMatrix { n, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h2_display() -> Vec<Vec<i64>> {
        vec![vec![1, 1, 1, 1], vec![1, -1, 1, -1], vec![1, 1, -1, -1], vec![1, -1, -1, 1]]
    }

    #[test]
    fn equivalence_form_is_invariant() {
        let h = paley(11).unwrap();
        let f = equivalence_form(&h).unwrap();
        let g = h
            .negate_rows(&[2, 5])
            .unwrap()
            .negate_columns(&[0, 7, 11])
            .unwrap()
            .permute_rows(&[3, 1, 4, 0, 5, 9, 2, 6, 8, 7, 11, 10])
            .unwrap()
            .permute_columns(&[11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0])
            .unwrap();
        assert_eq!(equivalence_form(&g).unwrap(), f);
        assert_eq!(equivalence_form(&h.normalize().into_base()).unwrap(), f);
        // order 12 has one class; Sylvester and Paley I differ at order 32
        assert_eq!(equivalence_form(&h.transpose()).unwrap(), f);
        assert_ne!(equivalence_form(&sylvester(5).unwrap()).unwrap(), equivalence_form(&paley(31).unwrap()).unwrap());
        assert!(equivalence_form(&sylvester(6).unwrap()).is_err());
    }

    #[test]
    fn paley_orders() {
        for q in [3, 7, 11, 19, 23, 31, 43, 47, 59] {
            let h = paley(q).unwrap();
            assert_eq!(h.order(), q + 1);
            assert!(h.gram().iter().enumerate().all(|(i, r)| r.iter().enumerate().all(|(j, &v)| v == if i == j { q as i64 + 1 } else { 0 })));
        }
        assert!(paley(13).is_err());
        assert_eq!(paley_ii(5).unwrap().order(), 12);
        assert_eq!(paley_ii(13).unwrap().order(), 28);
        assert!(paley_ii(7).is_err());
        assert!(paley_ii(9).is_err());
        assert!(paley(15).is_err());
        assert!(paley(67).is_err());
    }

    #[test]
    fn validate_examples() {
        let h1 = HadamardMatrix::validate(&[[1, 1], [1, -1]]).unwrap();
        assert_eq!(h1.order(), 2);
        assert!(matches!(
            HadamardMatrix::validate(&[[1, 1], [1, 1]]),
            Err(Error::NotOrthogonal { .. })
        ));
        let h2 = HadamardMatrix::validate(&h2_display()).unwrap();
        assert_eq!(h2.order(), 4);
        assert!(matches!(
            HadamardMatrix::validate(&[[1, 2], [1, -1]]),
            Err(Error::NonPmOne { row: 0, col: 1, value: 2 })
        ));
        assert!(matches!(
            HadamardMatrix::validate(&[[1, 1, 1], [1, -1, 1], [1, 1, -1]]),
            Err(Error::BadOrder(3))
        ));
        assert!(matches!(
            HadamardMatrix::validate(&[vec![1, 1], vec![1]]),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn sylvester_small() {
        assert_eq!(sylvester(0).unwrap().to_rows(), vec![vec![1]]);
        assert_eq!(sylvester(1).unwrap().to_rows(), vec![vec![1, 1], vec![1, -1]]);
        assert_eq!(sylvester(2).unwrap().to_rows(), h2_display());
        assert!(matches!(sylvester(7), Err(Error::TooLarge { .. })));
        for k in 0..=6 {
            let h = sylvester(k).unwrap();
            assert!(h.is_normalized());
            HadamardMatrix::from_sign_rows(h.sign_rows().to_vec()).unwrap();
        }
    }

    #[test]
    fn sylvester_three_by_direct_expansion() {
        // H_{k+1} = [[H_k, H_k], [H_k, -H_k]] written out by hand for k = 2
        let h2 = h2_display();
        let mut h3 = vec![vec![0i64; 8]; 8];
        for i in 0..4 {
            for j in 0..4 {
                h3[i][j] = h2[i][j];
                h3[i][j + 4] = h2[i][j];
                h3[i + 4][j] = h2[i][j];
                h3[i + 4][j + 4] = -h2[i][j];
            }
        }
        assert_eq!(sylvester(3).unwrap().to_rows(), h3);
        let k = kronecker(&sylvester(1).unwrap(), &sylvester(2).unwrap()).unwrap();
        assert_eq!(k, sylvester(3).unwrap());
    }

    #[test]
    fn kronecker_examples() {
        let one = sylvester(0).unwrap();
        let h1 = sylvester(1).unwrap();
        let h2 = sylvester(2).unwrap();
        assert_eq!(kronecker(&one, &h2).unwrap(), h2);
        assert_eq!(kronecker(&h1, &h1).unwrap(), h2);
        let h16 = kronecker(&h2, &h2).unwrap();
        HadamardMatrix::from_sign_rows(h16.sign_rows().to_vec()).unwrap();
        assert!(h16.is_normalized());
        for a in 0..=3 {
            for b in 0..=3 {
                let k = kronecker(&sylvester(a).unwrap(), &sylvester(b).unwrap()).unwrap();
                assert_eq!(k, sylvester(a + b).unwrap());
            }
        }
        let big = sylvester(4).unwrap();
        assert!(matches!(kronecker(&big, &big), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn normalize_examples() {
        let h2 = sylvester(2).unwrap();
        let nh = h2.normalize();
        assert!(nh.provenance().is_empty());
        assert_eq!(nh.base(), &h2);

        let h_prime = h2.negate_rows(&[1]).unwrap();
        assert_eq!(
            h_prime.to_rows(),
            vec![vec![1, 1, 1, 1], vec![-1, 1, -1, 1], vec![1, 1, -1, -1], vec![1, -1, -1, 1]]
        );
        let nh = h_prime.normalize();
        assert_eq!(nh.base(), &h2);
        assert_eq!(nh.provenance().negated_rows, vec![1]);
        assert!(nh.provenance().negated_columns.is_empty());

        let all_neg = h2.negate_rows(&[0, 1, 2, 3]).unwrap();
        let nh = all_neg.normalize();
        assert!(nh.base().is_normalized());
        HadamardMatrix::from_sign_rows(nh.base().sign_rows().to_vec()).unwrap();
        assert_eq!(nh.provenance().negated_columns, vec![0, 1, 2, 3]);
        assert!(nh.provenance().negated_rows.is_empty());
        assert!(nh.base().normalize().provenance().is_empty());
    }

    #[test]
    fn core_matrix_examples() {
        let h1 = sylvester(1).unwrap().normalize();
        assert_eq!(h1.core_matrix().unwrap().to_rows(), vec![vec![-1]]);
        let h2 = sylvester(2).unwrap().normalize();
        let core = h2.core_matrix().unwrap();
        assert_eq!(core.to_rows(), vec![vec![-1, 1, -1], vec![1, -1, -1], vec![-1, -1, 1]]);
        assert!(core.check_row_products());
        let h0 = sylvester(0).unwrap().normalize();
        assert!(matches!(h0.core_matrix(), Err(Error::OrderOne)));
        for k in 1..=6 {
            assert!(sylvester(k).unwrap().normalize().core_matrix().unwrap().check_row_products());
        }
    }

    #[test]
    fn equivalence_operations() {
        let h = sylvester(3).unwrap();
        assert_eq!(h.negate_rows(&[]).unwrap(), h);
        assert_eq!(h.negate_columns(&[]).unwrap(), h);
        assert!(matches!(h.negate_rows(&[8]), Err(Error::BadIndex { .. })));
        assert!(matches!(h.permute_rows(&[0, 1]), Err(Error::BadPermutation(8))));
        assert!(matches!(
            h.permute_columns(&[0, 0, 1, 2, 3, 4, 5, 6]),
            Err(Error::BadPermutation(8))
        ));
        let perm = [3, 7, 1, 0, 2, 6, 5, 4];
        let mut inv = [0usize; 8];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let p = h.permute_rows(&perm).unwrap();
        assert_eq!(p.permute_rows(&inv).unwrap(), h);
        let c = h.permute_columns(&perm).unwrap();
        assert_eq!(c.entry(2, 0), h.entry(2, 3));
        assert_eq!(c.permute_columns(&inv).unwrap(), h);
        for m in [p, c, h.negate_columns(&[1, 5]).unwrap()] {
            HadamardMatrix::from_sign_rows(m.sign_rows().to_vec()).unwrap();
        }
    }

    #[test]
    fn gram_is_n_identity() {
        let h = sylvester(4).unwrap();
        let g = h.gram();
        for (i, row) in g.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                assert_eq!(v, if i == j { 16 } else { 0 });
            }
        }
        assert_eq!(h.transpose().transpose(), h);
    }
}

//! Grows a directory of pairwise inequivalent Hadamard matrices of one order.
//!
//! usage: corpus ORDER SAMPLES SEED DIR
//!
//! Every sample takes a random known matrix, keeps a random subset of its
//! rows, and completes the rest by randomized backtracking. A result whose
//! equivalence class is new is written to `DIR/had.ORDER.gNN`. Matrices
//! already in `DIR` seed the search and count as known classes.
//!
//! When `DIR` also holds matrices of half the order, every other sample is
//! instead a doubling [[A, A], [B, -B]] with B a random column-signed
//! permutation of a half-order matrix A.

use std::collections::HashSet;
use std::path::Path;

use hadiag::hadamard::{equivalence_form, HadamardMatrix};
use hadiag::io::{emit_sloane, load_matrices, matrix_files};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Extends `rows` to a full matrix, or gives up after `budget` nodes.
fn complete(rows: &mut Vec<u64>, n: usize, rng: &mut ChaCha8Rng, budget: &mut u64) -> bool {
    if rows.len() == n {
        return true;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut cands = Vec::new();
    let mut dots = vec![0i64; rows.len()];
    row_candidates(rows, n, &order, 0, 0, &mut dots, rng, &mut cands, budget);
    for c in cands {
        rows.push(c);
        if complete(rows, n, rng, budget) {
            return true;
        }
        rows.pop();
        if *budget == 0 {
            return false;
        }
    }
    false
}

/// Collects up to a few rows orthogonal to all of `rows`.
#[allow(clippy::too_many_arguments)]
fn row_candidates(
    rows: &[u64],
    n: usize,
    order: &[usize],
    t: usize,
    row: u64,
    dots: &mut [i64],
    rng: &mut ChaCha8Rng,
    out: &mut Vec<u64>,
    budget: &mut u64,
) {
    if out.len() >= 2 || *budget == 0 {
        return;
    }
    *budget -= 1;
    if t == n {
        if dots.iter().all(|&d| d == 0) {
            out.push(row);
        }
        return;
    }
    let c = order[t];
    let left = (n - t - 1) as i64;
    let first: bool = rng.gen();
    for neg in [first, !first] {
        let mut ok = true;
        for (k, r) in rows.iter().enumerate() {
            let e = if (r >> c & 1 == 1) ^ neg { -1 } else { 1 };
            dots[k] += e;
            ok &= dots[k].abs() <= left;
        }
        if ok {
            row_candidates(rows, n, order, t + 1, row | (neg as u64) << c, dots, rng, out, budget);
        }
        for (k, r) in rows.iter().enumerate() {
            let e = if (r >> c & 1 == 1) ^ neg { -1 } else { 1 };
            dots[k] -= e;
        }
    }
}

/// [[A, A], [B, -B]] with B = A under a random column permutation and
/// column negation.
fn double(a: &HadamardMatrix, rng: &mut ChaCha8Rng) -> Vec<u64> {
    let m = a.order();
    let mask = (1u64 << m) - 1;
    let mut perm: Vec<usize> = (0..m).collect();
    perm.shuffle(rng);
    let neg: u64 = rng.gen::<u64>() & mask;
    let mut rows: Vec<u64> = a.sign_rows().iter().map(|&r| r | r << m).collect();
    for &r in a.sign_rows() {
        let b = perm.iter().enumerate().fold(0u64, |acc, (j, &p)| acc | (r >> p & 1) << j) ^ neg;
        rows.push(b | (!b & mask) << m);
    }
    rows
}

fn main() {
    let args: Vec<String> = std::env::args().collect();
    if args.len() != 5 {
        eprintln!("usage: corpus ORDER SAMPLES SEED DIR");
        std::process::exit(2);
    }
    let n: usize = args[1].parse().unwrap();
    let samples: usize = args[2].parse().unwrap();
    let seed: u64 = args[3].parse().unwrap();
    let dir = Path::new(&args[4]);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut known: Vec<HadamardMatrix> = Vec::new();
    let mut classes = HashSet::new();
    let mut next_id = 1;
    if let Ok(files) = matrix_files(dir, n) {
        for f in files {
            for m in load_matrices(&f).unwrap() {
                classes.insert(equivalence_form(&m.matrix).unwrap());
                known.push(m.matrix);
            }
            next_id += 1;
        }
    }
    let halves: Vec<HadamardMatrix> = match matrix_files(dir, n / 2) {
        Ok(files) if n % 2 == 0 && n > 2 => files.iter().flat_map(|f| load_matrices(f).unwrap()).map(|m| m.matrix).collect(),
        _ => Vec::new(),
    };
    if known.is_empty() {
        known.push(HadamardMatrix::from_sign_rows(vec![0]).unwrap());
    }
    println!("{} known classes", classes.len());
    for s in 0..samples {
        let start = known.choose(&mut rng).unwrap();
        let mut rows: Vec<u64> = if !halves.is_empty() && s % 2 == 1 {
            double(halves.choose(&mut rng).unwrap(), &mut rng)
        } else if start.order() == n {
            let keep = rng.gen_range(4..n - 1);
            start.sign_rows().choose_multiple(&mut rng, keep).copied().collect()
        } else {
            vec![0]
        };
        let mut budget = 2_000_000u64;
        if !complete(&mut rows, n, &mut rng, &mut budget) {
            continue;
        }
        let h = HadamardMatrix::from_sign_rows(rows).expect("rows are orthogonal");
        if classes.insert(equivalence_form(&h).unwrap()) {
            let path = dir.join(format!("had.{n}.g{next_id:02}"));
            next_id += 1;
            std::fs::write(&path, emit_sloane(&h)).unwrap();
            println!("sample {s}: new class -> {} ({} known)", path.display(), classes.len());
            known.push(h);
        }
    }
    println!("{} classes", classes.len());
}

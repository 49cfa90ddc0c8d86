//! File formats: Sloane matrix text, graph6, JSON result files, CSV tables,
//! and discovery of matrix files in a data directory.

pub mod graph6;
pub mod results;
pub mod sloane;

pub use graph6::{decode_graph6, encode_graph6};
pub use results::{read_results, write_results, GraphRecord, ResultFile};
pub use sloane::{emit_sloane, parse_sloane, parse_sloane_file, SloaneFile};

use std::cmp::Ordering;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::hadamard::{HadamardMatrix, NormalizedHadamard};

/// A matrix together with the name it is reported under.
#[derive(Clone, Debug)]
pub struct NamedMatrix {
    pub id: String,
    /// As written in the file.
    pub matrix: HadamardMatrix,
}

impl NamedMatrix {
    /// Matrix files list the eigenvectors as rows, so the matrix whose
    /// columns diagonalize the Laplacian is the transpose.
    pub fn diagonalizer(&self) -> NormalizedHadamard {
        file_diagonalizer(&self.matrix)
    }
}

pub fn file_diagonalizer(matrix: &HadamardMatrix) -> NormalizedHadamard {
    matrix.transpose().normalize()
}

/// Reads every matrix in a file. A file with one matrix is named after the
/// file; further matrices get a `#i` suffix (1-based).
pub fn load_matrices(path: &Path) -> Result<Vec<NamedMatrix>> {
    let text = std::fs::read_to_string(path)?;
    let stem = path.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let stem = stem.strip_suffix(".txt").unwrap_or(&stem).to_string();
    let matrices = parse_sloane(&text)?;
    let single = matrices.len() == 1;
    Ok(matrices
        .into_iter()
        .enumerate()
        .map(|(i, matrix)| NamedMatrix { id: if single { stem.clone() } else { format!("{stem}#{}", i + 1) }, matrix })
        .collect())
}

/// Files in `dir` named `had.<order>` or `had.<order>.<suffix>`, in natural
/// order (`had.24.9` before `had.24.10`).
pub fn matrix_files(dir: &Path, order: usize) -> Result<Vec<PathBuf>> {
    let prefix = format!("had.{order}");
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| {
            let name = p.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            let name = name.strip_suffix(".txt").unwrap_or(&name);
            p.is_file() && (name == prefix || name.starts_with(&format!("{prefix}.")))
        })
        .collect();
    files.sort_by(|a, b| natural_cmp(&a.to_string_lossy(), &b.to_string_lossy()));
    if files.is_empty() {
        return Err(Error::MissingData(format!("no had.{order}* files in {}", dir.display())));
    }
    Ok(files)
}

/// Compares strings chunk by chunk, numeric runs by value.
pub fn natural_cmp(a: &str, b: &str) -> Ordering {
    fn chunks(s: &str) -> Vec<(bool, &str)> {
        let mut out = Vec::new();
        let mut start = 0;
        let bytes = s.as_bytes();
        for i in 1..=bytes.len() {
            if i == bytes.len() || bytes[i].is_ascii_digit() != bytes[start].is_ascii_digit() {
                out.push((bytes[start].is_ascii_digit(), &s[start..i]));
                start = i;
            }
        }
        out
    }
    if a.is_empty() || b.is_empty() {
        return a.cmp(b);
    }
    for (x, y) in chunks(a).into_iter().zip(chunks(b)) {
        let ord = match (x, y) {
            ((true, x), (true, y)) => {
                let (x, y) = (x.trim_start_matches('0'), y.trim_start_matches('0'));
                x.len().cmp(&y.len()).then_with(|| x.cmp(y))
            }
            ((_, x), (_, y)) => x.cmp(y),
        };
        if ord != Ordering::Equal {
            return ord;
        }
    }
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// CSV with a header row; fields are written verbatim.
pub fn to_csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn natural_order() {
        let mut v = vec!["had.24.10", "had.24.9", "had.24.60", "had.24.1", "had.16.0"];
        v.sort_by(|a, b| natural_cmp(a, b));
        assert_eq!(v, vec!["had.16.0", "had.24.1", "had.24.9", "had.24.10", "had.24.60"]);
    }

    #[test]
    fn csv() {
        assert_eq!(to_csv(&["a", "b"], &[vec!["1".into(), "2".into()]]), "a,b\n1,2\n");
    }
}

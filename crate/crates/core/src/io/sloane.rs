//! Sloane-style text matrices: one row per line, `+` for 1 and `-` for -1.
//!
//! A file may hold several matrices. A block ends at any line that is not a
//! row (blank lines, names, trailing metadata) or as soon as it is square.

use crate::error::{Error, Result};
use crate::hadamard::{HadamardMatrix, MAX_ORDER};

#[derive(Clone, Debug, Default)]
pub struct SloaneFile {
    pub matrices: Vec<HadamardMatrix>,
    /// Non-row lines, trimmed, in file order.
    pub comments: Vec<String>,
}

pub fn parse_sloane(text: &str) -> Result<Vec<HadamardMatrix>> {
    Ok(parse_sloane_file(text)?.matrices)
}

pub fn parse_sloane_file(text: &str) -> Result<SloaneFile> {
    let mut file = SloaneFile::default();
    let mut block: Vec<u64> = Vec::new();
    let mut width = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let lineno = i + 1;
        if !(line.starts_with('+') || line.starts_with('-')) {
            finish(&mut block, &mut file)?;
            if !line.is_empty() {
                file.comments.push(line.to_string());
            }
            continue;
        }
        let mut bits = 0u64;
        let mut len = 0;
        for ch in line.chars() {
            match ch {
                '+' => {}
                '-' if len < 64 => bits |= 1 << len,
                '-' => {}
                c => return Err(Error::BadChar { line: lineno, ch: c }),
            }
            len += 1;
        }
        if len > MAX_ORDER {
            return Err(Error::TooLarge { order: len, max: MAX_ORDER });
        }
        if block.is_empty() {
            width = len;
        } else if len != width {
            return Err(Error::RaggedRows { line: lineno, len, expected: width });
        }
        block.push(bits);
        if block.len() == width {
            finish(&mut block, &mut file)?;
        }
    }
    finish(&mut block, &mut file)?;
    Ok(file)
}

fn finish(block: &mut Vec<u64>, file: &mut SloaneFile) -> Result<()> {
    if block.is_empty() {
        return Ok(());
    }
    let rows = std::mem::take(block);
    let index = file.matrices.len();
    let h = HadamardMatrix::from_sign_rows(rows).map_err(|e| Error::NotHadamard { index, source: Box::new(e) })?;
    file.matrices.push(h);
    Ok(())
}

pub fn emit_sloane(h: &HadamardMatrix) -> String {
    let n = h.order();
    let mut out = String::with_capacity(n * (n + 1));
    for &row in h.sign_rows() {
        for j in 0..n {
            out.push(if row >> j & 1 == 1 { '-' } else { '+' });
        }
        out.push('\n');
    }
    out
}

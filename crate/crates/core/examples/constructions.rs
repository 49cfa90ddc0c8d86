//! Writes the constructed matrices of the bundled corpus.
//!
//! usage: constructions DIR

use std::path::Path;

use hadiag::hadamard::{kronecker, paley, paley_ii, sylvester, HadamardMatrix};
use hadiag::io::emit_sloane;

fn main() {
    let dir = std::env::args().nth(1).expect("usage: constructions DIR");
    let dir = Path::new(&dir);
    let h2 = sylvester(1).unwrap();
    let list: Vec<(&str, HadamardMatrix)> = vec![
        ("had.1", sylvester(0).unwrap()),
        ("had.2", h2.clone()),
        ("had.4", sylvester(2).unwrap()),
        ("had.8", sylvester(3).unwrap()),
        ("had.12", paley(11).unwrap()),
        ("had.16.syl", sylvester(4).unwrap()),
        ("had.20.pal", paley(19).unwrap()),
        ("had.24.pal", paley(23).unwrap()),
        ("had.24.kron", kronecker(&h2, &paley(11).unwrap()).unwrap()),
        ("had.28.pal2", paley_ii(13).unwrap()),
        ("had.32.syl", sylvester(5).unwrap()),
        ("had.32.pal", paley(31).unwrap()),
    ];
    for (name, h) in list {
        std::fs::write(dir.join(name), emit_sloane(&h)).unwrap();
    }
}

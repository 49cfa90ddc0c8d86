//! Command-line driver: validate matrix files, enumerate diagonalizable
//! graphs, build catalogs, check published tables and run probes.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use hadiag::batch::{enumerate_batch, BatchConfig};
use hadiag::catalog::{
    build_catalog, probe_conjecture_26, probe_equivalence_conjecture, scatter_csv, stats_report, write_catalog,
};
use hadiag::error::Error;
use hadiag::hadamard::equivalence_form;
use hadiag::io::{load_matrices, natural_cmp, read_results, write_results, NamedMatrix, ResultFile};
use hadiag::search::SearchConfig;
use hadiag::verify::{verify_tables, Status};

const EXIT_MISMATCH: u8 = 2;
const EXIT_INPUT: u8 = 3;
const EXIT_ABORTED: u8 = 4;

#[derive(Parser)]
#[command(name = "hadiag", version, about = "Graphs whose Laplacian is diagonalized by a Hadamard matrix")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that files hold valid Hadamard matrices.
    Validate { paths: Vec<PathBuf> },
    /// Enumerate the graphs of every matrix in the given files or directories.
    Enumerate {
        paths: Vec<PathBuf>,
        /// Directory for one JSON result file per matrix.
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Search tree nodes allowed per matrix.
        #[arg(long, default_value_t = 1 << 34, value_parser = clap::value_parser!(u64).range(1..))]
        node_budget: u64,
        /// Check all 2^(n-1) first rows instead of pruning (n <= 16).
        #[arg(long)]
        brute_force: bool,
    },
    /// Merge result files of one order into a catalog with statistics.
    Catalog {
        /// Directory of JSON result files, or the files themselves.
        results: Vec<PathBuf>,
        /// Directory for catalog.json, stats.csv and scatter.csv.
        #[arg(long)]
        out: PathBuf,
    },
    /// Enumerate the data directory and compare with the published tables.
    VerifyTables {
        /// Orders to check.
        #[arg(long, value_delimiter = ',', default_value = "4,8,12,16,20,24")]
        orders: Vec<usize>,
        #[arg(long, env = "HADIAG_DATA", default_value = "data")]
        data: PathBuf,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Compare the graphs of a matrix with those of random equivalent matrices.
    ProbeEquivalence {
        path: PathBuf,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1 << 34, value_parser = clap::value_parser!(u64).range(1..))]
        node_budget: u64,
    },
    /// Count the union of result files of an order 16k + 8 against 26.
    ProbeBound { results: Vec<PathBuf> },
    /// Group matrices into Hadamard equivalence classes (n <= 32).
    Classify { paths: Vec<PathBuf> },
}

fn main() -> ExitCode {
    // usage errors are input errors; clap's own code 2 means mismatch here
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            let aborted = e.chain().any(|c| matches!(c.downcast_ref::<Error>(), Some(Error::Aborted { .. })));
            ExitCode::from(if aborted { EXIT_ABORTED } else { EXIT_INPUT })
        }
    }
}

fn run(command: Command) -> anyhow::Result<u8> {
    match command {
        Command::Validate { paths } => validate(&paths),
        Command::Enumerate { paths, out, jobs, node_budget, brute_force } => {
            let config = BatchConfig {
                jobs,
                search: SearchConfig { node_budget, ..SearchConfig::default() },
                brute_force,
            };
            enumerate(&paths, &out, &config)
        }
        Command::Catalog { results, out } => catalog(&results, &out),
        Command::VerifyTables { orders, data, jobs } => {
            let config = BatchConfig { jobs, ..BatchConfig::default() };
            let checks = verify_tables(&data, &orders, &config)?;
            for c in &checks {
                println!("{c}");
            }
            let failed = checks.iter().filter(|c| c.status == Status::Fail).count();
            let missing = checks.iter().filter(|c| c.status == Status::Missing).count();
            println!("{} passed, {failed} failed, {missing} missing data", checks.len() - failed - missing);
            Ok(if failed > 0 {
                EXIT_MISMATCH
            } else if missing > 0 {
                EXIT_INPUT
            } else {
                0
            })
        }
        Command::ProbeEquivalence { path, trials, seed, node_budget } => {
            let config = SearchConfig { node_budget, ..SearchConfig::default() };
            let mut disagreed = false;
            for m in load_matrices(&path).with_context(|| path.display().to_string())? {
                let r = probe_equivalence_conjecture(&m.matrix, trials, seed, &config)?;
                println!(
                    "{}: {} graphs, {} of {} trials agree, disagreements {:?}",
                    m.id, r.baseline, r.agreements, r.trials, r.disagreements
                );
                disagreed |= !r.disagreements.is_empty();
            }
            Ok(if disagreed { EXIT_MISMATCH } else { 0 })
        }
        Command::ProbeBound { results } => {
            let c = build_catalog(&read_outcomes(&results)?)?;
            let r = probe_conjecture_26(&c)?;
            println!("order {}: {} graphs over {} matrices, within bound: {}", r.order, r.graphs, r.matrices, r.within_bound);
            Ok(if r.within_bound { 0 } else { EXIT_MISMATCH })
        }
        Command::Classify { paths } => {
            let mut classes: Vec<(hadiag::CanonicalForm, Vec<String>)> = Vec::new();
            for m in load_all(&paths)? {
                let form = equivalence_form(&m.matrix)?;
                match classes.iter_mut().find(|(f, _)| *f == form) {
                    Some((_, ids)) => ids.push(m.id),
                    None => classes.push((form, vec![m.id])),
                }
            }
            for (i, (_, ids)) in classes.iter().enumerate() {
                println!("class {}: {}", i + 1, ids.join(" "));
            }
            Ok(0)
        }
    }
}

/// Files as given, directories expanded to their `had.*` files.
fn expand(paths: &[PathBuf], keep: impl Fn(&str) -> bool) -> anyhow::Result<Vec<PathBuf>> {
    let mut out = Vec::new();
    for p in paths {
        if p.is_dir() {
            let mut files: Vec<PathBuf> = std::fs::read_dir(p)
                .with_context(|| p.display().to_string())?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|f| f.is_file() && f.file_name().is_some_and(|s| keep(&s.to_string_lossy())))
                .collect();
            files.sort_by(|a, b| natural_cmp(&a.to_string_lossy(), &b.to_string_lossy()));
            out.extend(files);
        } else {
            out.push(p.clone());
        }
    }
    Ok(out)
}

fn load_all(paths: &[PathBuf]) -> anyhow::Result<Vec<NamedMatrix>> {
    let mut out = Vec::new();
    for f in expand(paths, |name| name.starts_with("had."))? {
        out.extend(load_matrices(&f).with_context(|| f.display().to_string())?);
    }
    Ok(out)
}

fn validate(paths: &[PathBuf]) -> anyhow::Result<u8> {
    let mut failed = false;
    for f in expand(paths, |name| name.starts_with("had."))? {
        match load_matrices(&f) {
            Ok(ms) => {
                for m in ms {
                    let nh = m.diagonalizer();
                    println!("ok {}: order {}, digest {}", m.id, m.matrix.order(), nh.base().sign_digest());
                }
            }
            Err(e) => {
                println!("invalid {}: {e}", f.display());
                failed = true;
            }
        }
    }
    Ok(if failed { EXIT_INPUT } else { 0 })
}

fn enumerate(paths: &[PathBuf], out: &Path, config: &BatchConfig) -> anyhow::Result<u8> {
    let matrices = load_all(paths)?;
    std::fs::create_dir_all(out).with_context(|| out.display().to_string())?;
    let mut code = 0;
    for (m, outcome) in matrices.iter().zip(enumerate_batch(&matrices, config)?) {
        match outcome {
            Ok(o) => {
                let path = out.join(format!("{}.json", m.id.replace('#', "_")));
                write_results(&path, &ResultFile::from_outcome(&o)?)?;
                println!("{}: order {}, {} graphs, {} nodes", m.id, o.order, o.len(), o.counters.nodes);
            }
            Err(e @ Error::Aborted { .. }) => {
                eprintln!("{}: {e}", m.id);
                code = EXIT_ABORTED;
            }
            Err(e) => return Err(e).with_context(|| m.id.clone()),
        }
    }
    Ok(code)
}

fn read_outcomes(paths: &[PathBuf]) -> anyhow::Result<Vec<hadiag::SearchOutcome>> {
    let files = expand(paths, |name| name.ends_with(".json") && name != "catalog.json")?;
    if files.is_empty() {
        anyhow::bail!("no result files given");
    }
    files
        .iter()
        .map(|f| read_results(f).and_then(|r| r.to_outcome()).with_context(|| f.display().to_string()))
        .collect()
}

fn catalog(results: &[PathBuf], out: &Path) -> anyhow::Result<u8> {
    let c = build_catalog(&read_outcomes(results)?)?;
    std::fs::create_dir_all(out).with_context(|| out.display().to_string())?;
    write_catalog(&out.join("catalog.json"), &c)?;
    std::fs::write(out.join("stats.csv"), stats_report(&c).to_csv())?;
    std::fs::write(out.join("scatter.csv"), scatter_csv(&c))?;
    println!("order {}: {} graphs, {} matrices, {} classes", c.order, c.len(), c.matrices.len(), c.classes.len());
    for (i, class) in c.classes.iter().enumerate() {
        println!("class {}: {} graphs, matrices {}", i + 1, class.graphs.len(), class.matrices.join(" "));
    }
    Ok(0)
}

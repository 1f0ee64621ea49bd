use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use lamina::catalog::named_matroid;
use lamina::checks::{run_checks, Status, VerifyConfig, CHECK_IDS};
use lamina::corpus::{generate_corpus, CorpusSpec};
use lamina::io::{parse_matroid, serialize_cyclic_flats, serialize_matroid};
use lamina::matroid::Matroid;
use lamina::minors::{has_minor, is_isomorphic};
use lamina::report::analyze;

#[derive(Parser)]
#[command(name = "lamina", version, about = "Laminar-type matroid classes on small ground sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named matroid and write it in the matroid file format.
    Construct {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Write the cyclic-flat form instead of the circuit list.
        #[arg(long)]
        cyclic_flats: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print rank, circuits, cyclic and Hamiltonian flats, and class verdicts.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Search the host for a minor isomorphic to the target.
    Minor {
        #[arg(long)]
        host: PathBuf,
        #[arg(long)]
        target: PathBuf,
    },
    /// Test two matroids for isomorphism.
    Iso { first: PathBuf, second: PathBuf },
    /// Run the verification checks (all of them by default).
    Verify {
        /// Check id, or `all`; may be repeated.
        #[arg(long = "check")]
        checks: Vec<String>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 1000)]
        corpus_count: usize,
        #[arg(long, default_value_t = 8)]
        max_elements: usize,
        #[arg(long, default_value_t = 500)]
        six_vertex_samples: usize,
        /// List the registered check ids and exit.
        #[arg(long)]
        list: bool,
    },
    /// Write a seeded corpus, one file per matroid.
    Corpus {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        max_elements: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
}

/// Exit status 2 with a message.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

fn load(path: &Path) -> Result<Matroid, Usage> {
    let text = fs::read_to_string(path).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
    parse_matroid(&text).map_err(|e| Usage(format!("{}: {e}", path.display())))
}

fn verdict(holds: bool) -> ExitCode {
    if holds {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> Result<ExitCode, Usage> {
    match cli.command {
        Command::Construct { family, n, k, cyclic_flats, output } => {
            let m = named_matroid(&family, n, k)?;
            let text = if cyclic_flats { serialize_cyclic_flats(&m) } else { serialize_matroid(&m) };
            match output {
                Some(path) => fs::write(&path, text)?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Analyze { file, json } => {
            let a = analyze(&load(&file)?);
            if json {
                println!("{}", serde_json::to_string_pretty(&a)?);
            } else {
                println!("{a}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Minor { host, target } => {
            let (h, t) = (load(&host)?, load(&target)?);
            let found = has_minor(&h, &t);
            match &found {
                Some(spec) => println!(
                    "minor found: delete {} contract {}",
                    h.format_set(spec.delete),
                    h.format_set(spec.contract)
                ),
                None => println!("no minor"),
            }
            Ok(verdict(found.is_some()))
        }
        Command::Iso { first, second } => {
            let (a, b) = (load(&first)?, load(&second)?);
            let map = is_isomorphic(&a, &b);
            match &map {
                Some(map) => {
                    let pairs: Vec<String> =
                        map.iter().enumerate().map(|(i, &j)| format!("{}->{}", a.label(i), b.label(j))).collect();
                    println!("isomorphic: {}", pairs.join(" "));
                }
                None => println!("not isomorphic"),
            }
            Ok(verdict(map.is_some()))
        }
        Command::Verify { checks, seed, json, corpus_count, max_elements, six_vertex_samples, list } => {
            if list {
                for id in CHECK_IDS {
                    println!("{id}");
                }
                return Ok(ExitCode::SUCCESS);
            }
            let ids: Vec<String> = if checks.iter().any(|c| c == "all") { Vec::new() } else { checks };
            let config = VerifyConfig { seed, corpus_count, max_elements, six_vertex_samples };
            let results = run_checks(&ids, config)?;
            for r in &results {
                if json {
                    println!("{}", serde_json::to_string(r)?);
                    continue;
                }
                let status = match r.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Skipped => "SKIP",
                };
                println!("{status} {} ({} ms)", r.check_id, r.elapsed_ms);
                if let Some(w) = &r.witness {
                    println!("  {}", w.detail);
                    if let Some(text) = &w.matroid {
                        for line in text.lines() {
                            println!("  | {line}");
                        }
                    }
                }
            }
            Ok(verdict(results.iter().all(|r| r.status != Status::Fail)))
        }
        Command::Corpus { seed, count, max_elements, output } => {
            if max_elements > lamina::matroid::MAX_ELEMENTS {
                return Err(Usage(format!("--max-elements is at most {}", lamina::matroid::MAX_ELEMENTS)));
            }
            fs::create_dir_all(&output)?;
            let corpus = generate_corpus(&CorpusSpec::new(seed, count, max_elements));
            for (i, entry) in corpus.iter().enumerate() {
                let text = serialize_matroid(&entry.matroid);
                let (header, body) = text.split_once('\n').unwrap_or((&text, ""));
                let file = output.join(format!("{i:05}.mat"));
                fs::write(file, format!("{header}\n# origin: {}\n{body}", entry.origin))?;
            }
            println!("wrote {} matroids to {}", corpus.len(), output.display());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

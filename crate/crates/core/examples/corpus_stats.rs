//! Generates the default verification corpus and tallies class membership.

use std::collections::BTreeMap;

use lamina::classes::{is_k_closure_laminar, is_k_laminar, is_laminar, is_nested, is_paving};
use lamina::corpus::{generate_corpus, CorpusSpec};

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let corpus = generate_corpus(&CorpusSpec::new(seed, 1000, 8));
    println!("{} matroids (seed {seed})", corpus.len());

    let mut sizes = BTreeMap::new();
    for e in &corpus {
        *sizes.entry(e.matroid.n()).or_insert(0) += 1;
    }
    println!("by ground-set size: {sizes:?}");

    let count = |f: &dyn Fn(&lamina::matroid::Matroid) -> bool| corpus.iter().filter(|e| f(&e.matroid)).count();
    println!("nested:               {}", count(&|m| is_nested(m).holds));
    println!("laminar:              {}", count(&|m| is_laminar(m).holds));
    println!("2-laminar:            {}", count(&|m| is_k_laminar(m, 2).holds));
    println!("2-closure-laminar:    {}", count(&|m| is_k_closure_laminar(m, 2).holds));
    println!("paving:               {}", count(&|m| is_paving(m).holds));

    let mut sources = BTreeMap::new();
    for e in corpus.iter().filter(|e| !is_k_laminar(&e.matroid, 2).holds) {
        let kind = e.origin.split(['#', '\\', '/']).next().unwrap_or("").to_string();
        *sources.entry(kind).or_insert(0) += 1;
    }
    println!("not 2-laminar, by origin: {sources:?}");
}

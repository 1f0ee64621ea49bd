//! Seeded, reproducible collections of small matroids.

use rand::distributions::{Distribution, WeightedIndex};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::catalog::catalog;
use crate::constructions::{
    cycle_matroid, laminar_matroid, transversal_matroid, LaminarCapacitySystem, Multigraph,
    NestedPresentation,
};
use crate::matroid::{default_labels, Matroid, MAX_ELEMENTS};
use crate::minors::{minor, MinorSpec};
use crate::subset::Subset;

/// Relative weights of the random generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorMix {
    pub laminar: u32,
    pub nested: u32,
    pub multigraph: u32,
    pub sparse_paving: u32,
    pub named_minor: u32,
}

impl Default for GeneratorMix {
    fn default() -> Self {
        GeneratorMix { laminar: 1, nested: 1, multigraph: 2, sparse_paving: 1, named_minor: 1 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSpec {
    pub seed: u64,
    pub count: usize,
    pub max_elements: usize,
    pub mix: GeneratorMix,
}

impl CorpusSpec {
    pub fn new(seed: u64, count: usize, max_elements: usize) -> Self {
        CorpusSpec { seed, count, max_elements, mix: GeneratorMix::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    /// How the entry was made, e.g. `MK23`, `MK23\x1`, `P4(2)/c1`, `laminar#12`.
    pub origin: String,
    pub matroid: Matroid,
}

/// The catalog slice (every named matroid with at most `max_elements`
/// elements and all of its single-element deletions and contractions),
/// followed by `count` random matroids.
pub fn generate_corpus(spec: &CorpusSpec) -> Vec<CorpusEntry> {
    let max = spec.max_elements.min(MAX_ELEMENTS);
    let mut out = Vec::new();
    let named: Vec<(String, Matroid)> = catalog(max)
        .into_iter()
        .map(|f| (f.to_string(), f.build().expect("catalog entries build")))
        .collect();
    for (name, m) in &named {
        out.push(CorpusEntry { origin: name.clone(), matroid: m.clone() });
        for e in 0..m.n() {
            let d = MinorSpec { delete: Subset::singleton(e), contract: Subset::EMPTY };
            let c = MinorSpec { delete: Subset::EMPTY, contract: Subset::singleton(e) };
            out.push(CorpusEntry { origin: format!("{name}\\{}", m.label(e)), matroid: minor(m, &d) });
            out.push(CorpusEntry { origin: format!("{name}/{}", m.label(e)), matroid: minor(m, &c) });
        }
    }
    if spec.count == 0 || max == 0 {
        return out;
    }
    let mix = spec.mix;
    let weights = [mix.laminar, mix.nested, mix.multigraph, mix.sparse_paving, mix.named_minor];
    let Ok(pick) = WeightedIndex::new(weights) else {
        return out;
    };
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    for i in 0..spec.count {
        let (kind, m) = match pick.sample(&mut rng) {
            0 => ("laminar", random_laminar(&mut rng, max)),
            1 => ("nested", random_nested(&mut rng, max)),
            2 => ("graph", random_multigraph(&mut rng, max)),
            3 => ("paving", random_sparse_paving(&mut rng, max)),
            _ if named.is_empty() => ("graph", random_multigraph(&mut rng, max)),
            _ => {
                let (name, base) = named.choose(&mut rng).unwrap();
                let spec = random_minor_spec(&mut rng, base.n());
                (name.as_str(), minor(base, &spec))
            }
        };
        out.push(CorpusEntry { origin: format!("{kind}#{i}"), matroid: m });
    }
    out
}

fn ground_size(rng: &mut ChaCha8Rng, max: usize) -> usize {
    rng.gen_range(1.min(max)..=max)
}

/// Random laminar family built by recursively splitting the ground set.
pub fn random_laminar(rng: &mut ChaCha8Rng, max: usize) -> Matroid {
    let n = ground_size(rng, max);
    let mut family = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    split(rng, &order, 0, &mut family);
    let system = LaminarCapacitySystem::new(default_labels(n), family).expect("splits are laminar");
    laminar_matroid(&system).expect("laminar rank is a matroid rank")
}

fn split(rng: &mut ChaCha8Rng, elements: &[usize], depth: usize, family: &mut Vec<(Subset, usize)>) {
    if elements.is_empty() {
        return;
    }
    let set = Subset::from_elements(elements.iter().copied());
    if rng.gen_bool(0.7) {
        let cap = rng.gen_range(0..=elements.len());
        family.push((set, cap));
    }
    if elements.len() < 2 || depth >= 3 {
        return;
    }
    let parts = rng.gen_range(1..=3).min(elements.len());
    let mut cuts: Vec<usize> = (1..elements.len()).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<usize> = cuts.into_iter().take(parts - 1).collect();
    cuts.sort_unstable();
    let mut start = 0;
    for end in cuts.into_iter().chain([elements.len()]) {
        let piece = &elements[start..end];
        if piece.len() < elements.len() {
            split(rng, piece, depth + 1, family);
        }
        start = end;
    }
}

/// Random chain of prefixes of a shuffled ground set.
pub fn random_nested(rng: &mut ChaCha8Rng, max: usize) -> Matroid {
    let n = ground_size(rng, max);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let blocks = rng.gen_range(0..=n);
    let mut sizes: Vec<usize> = (0..blocks).map(|_| rng.gen_range(0..=n)).collect();
    sizes.sort_unstable();
    let chain = sizes
        .into_iter()
        .map(|s| Subset::from_elements(order[..s].iter().copied()))
        .collect();
    let presentation = NestedPresentation::new(default_labels(n), chain).expect("prefixes form a chain");
    transversal_matroid(&presentation).expect("transversal rank is a matroid rank")
}

/// Cycle matroid of a random multigraph on 2 to 6 vertices; loops and
/// parallel edges are rare.
pub fn random_multigraph(rng: &mut ChaCha8Rng, max: usize) -> Matroid {
    let n = ground_size(rng, max);
    let vertices = rng.gen_range(2..=6);
    let mut edges = Vec::with_capacity(n);
    for _ in 0..n {
        let u = rng.gen_range(0..vertices);
        let v = if rng.gen_bool(0.05) {
            u
        } else {
            (u + rng.gen_range(1..vertices)) % vertices
        };
        edges.push((u, v));
    }
    cycle_matroid(&Multigraph::with_edges(vertices, &edges).unwrap()).expect("graphs give matroids")
}

/// A uniform matroid with some circuit-hyperplanes: random `r`-sets,
/// pairwise meeting in at most `r - 2` elements, get rank `r - 1`.
pub fn random_sparse_paving(rng: &mut ChaCha8Rng, max: usize) -> Matroid {
    let n = ground_size(rng, max);
    let r = rng.gen_range(0..=n);
    let mut hyperplanes: Vec<Subset> = Vec::new();
    if r >= 1 && r < n {
        for _ in 0..rng.gen_range(0..=2 * n) {
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(rng);
            let h = Subset::from_elements(order[..r].iter().copied());
            if hyperplanes.iter().all(|&g| (g & h).len() + 2 <= r) {
                hyperplanes.push(h);
            }
        }
    }
    Matroid::from_rank_fn(default_labels(n), |x| {
        if hyperplanes.contains(&x) {
            r - 1
        } else {
            x.len().min(r)
        }
    })
    .expect("sparse paving ranks satisfy the axioms")
}

/// Deletes or contracts a random subset of the elements.
fn random_minor_spec(rng: &mut ChaCha8Rng, n: usize) -> MinorSpec {
    let mut spec = MinorSpec::default();
    let remove = rng.gen_range(0..=n.min(3));
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for &e in &order[..remove] {
        if rng.gen_bool(0.5) {
            spec.delete = spec.delete.with(e);
        } else {
            spec.contract = spec.contract.with(e);
        }
    }
    spec
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::{is_nested, is_paving, is_laminar};

    #[test]
    fn zero_count_gives_the_catalog_slice() {
        let spec = CorpusSpec::new(1, 0, 6);
        let corpus = generate_corpus(&spec);
        let names: Vec<&str> = corpus.iter().map(|e| e.origin.as_str()).filter(|o| !o.contains(['\\', '/'])).collect();
        assert!(names.contains(&"MK23") && names.contains(&"MK4") && names.contains(&"M4(2)"));
        assert!(!names.contains(&"F7"));
        let mk23 = corpus.iter().filter(|e| e.origin.starts_with("MK23\\") || e.origin.starts_with("MK23/")).count();
        assert_eq!(mk23, 12);
    }

    #[test]
    fn deterministic_and_bounded() {
        let spec = CorpusSpec::new(7, 150, 8);
        let a = generate_corpus(&spec);
        let b = generate_corpus(&spec);
        assert_eq!(a, b);
        assert!(a.iter().all(|e| e.matroid.n() <= 8));
        let c = generate_corpus(&CorpusSpec::new(8, 150, 8));
        assert_ne!(a, c);
    }

    #[test]
    fn generators_land_in_their_classes() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..40 {
            assert!(is_paving(&random_sparse_paving(&mut rng, 8)).holds);
            assert!(is_nested(&random_nested(&mut rng, 8)).holds);
            assert!(is_laminar(&random_laminar(&mut rng, 8)).holds);
        }
    }
}

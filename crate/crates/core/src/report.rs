//! Summary of a matroid's structure and class membership.

use std::fmt;

use serde::Serialize;

use crate::classes::{is_k_laminar, is_laminar, is_nested, is_paving, min_closure_laminar_k, min_laminar_k};
use crate::matroid::Matroid;
use crate::subset::Subset;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankedSet {
    pub set: Vec<String>,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Analysis {
    pub elements: usize,
    pub labels: Vec<String>,
    pub rank: usize,
    pub circuits: Vec<Vec<String>>,
    pub non_spanning_circuits: Vec<Vec<String>>,
    pub cyclic_flats: Vec<RankedSet>,
    pub hamiltonian_flats: Vec<RankedSet>,
    pub is_nested: bool,
    pub is_laminar: bool,
    pub is_paving: bool,
    pub is_2_laminar: bool,
    pub min_laminar_k: usize,
    pub min_closure_laminar_k: usize,
}

fn names(m: &Matroid, s: Subset) -> Vec<String> {
    s.elements().map(|e| m.label(e).to_string()).collect()
}

fn ranked(m: &Matroid, s: Subset) -> RankedSet {
    RankedSet { set: names(m, s), rank: m.rank(s) }
}

pub fn analyze(m: &Matroid) -> Analysis {
    Analysis {
        elements: m.n(),
        labels: m.labels().to_vec(),
        rank: m.full_rank(),
        circuits: m.circuits().iter().map(|&c| names(m, c)).collect(),
        non_spanning_circuits: m.non_spanning_circuits().iter().map(|&c| names(m, c)).collect(),
        cyclic_flats: m.cyclic_flats().entries().iter().map(|&(s, _)| ranked(m, s)).collect(),
        hamiltonian_flats: m.hamiltonian_flats().iter().map(|&f| ranked(m, f)).collect(),
        is_nested: is_nested(m).holds,
        is_laminar: is_laminar(m).holds,
        is_paving: is_paving(m).holds,
        is_2_laminar: is_k_laminar(m, 2).holds,
        min_laminar_k: min_laminar_k(m),
        min_closure_laminar_k: min_closure_laminar_k(m),
    }
}

fn braces(set: &[String]) -> String {
    format!("{{{}}}", set.join(" "))
}

impl fmt::Display for Analysis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |sets: &[Vec<String>]| sets.iter().map(|s| braces(s)).collect::<Vec<_>>().join(" ");
        let flats = |sets: &[RankedSet]| {
            sets.iter().map(|s| format!("{}:{}", braces(&s.set), s.rank)).collect::<Vec<_>>().join(" ")
        };
        writeln!(f, "elements: {}", self.elements)?;
        writeln!(f, "rank: {}", self.rank)?;
        writeln!(f, "circuits ({}): {}", self.circuits.len(), list(&self.circuits))?;
        writeln!(
            f,
            "non-spanning circuits ({}): {}",
            self.non_spanning_circuits.len(),
            list(&self.non_spanning_circuits)
        )?;
        writeln!(f, "cyclic flats ({}): {}", self.cyclic_flats.len(), flats(&self.cyclic_flats))?;
        writeln!(f, "hamiltonian flats ({}): {}", self.hamiltonian_flats.len(), flats(&self.hamiltonian_flats))?;
        writeln!(f, "nested: {}", self.is_nested)?;
        writeln!(f, "laminar: {}", self.is_laminar)?;
        writeln!(f, "paving: {}", self.is_paving)?;
        writeln!(f, "2-laminar: {}", self.is_2_laminar)?;
        writeln!(f, "min_laminar_k: {}", self.min_laminar_k)?;
        write!(f, "min_closure_laminar_k: {}", self.min_closure_laminar_k)
    }
}

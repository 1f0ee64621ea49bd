//! Membership in the nested / laminar hierarchies and related classes.
//!
//! Every negative verdict carries a [`Violation`] that can be replayed
//! against the matroid with [`ClassVerdict::replays`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::MatroidError;
use crate::matroid::Matroid;
use crate::minors::{self, MinorSpec};
use crate::subset::Subset;

/// A class of matroids that can be decided by [`decide`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassPredicate {
    Nested,
    Laminar,
    KLaminar(usize),
    KClosureLaminar(usize),
    Paving,
    Binary,
    Ternary,
}

impl fmt::Display for ClassPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassPredicate::Nested => f.write_str("nested"),
            ClassPredicate::Laminar => f.write_str("laminar"),
            ClassPredicate::KLaminar(k) => write!(f, "{k}-laminar"),
            ClassPredicate::KClosureLaminar(k) => write!(f, "{k}-closure-laminar"),
            ClassPredicate::Paving => f.write_str("paving"),
            ClassPredicate::Binary => f.write_str("binary"),
            ClassPredicate::Ternary => f.write_str("ternary"),
        }
    }
}

impl FromStr for ClassPredicate {
    type Err = MatroidError;

    /// Accepts `nested`, `laminar`, `paving`, `binary`, `ternary`,
    /// `<k>-laminar` and `<k>-closure-laminar`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let fixed = match s {
            "nested" => Some(ClassPredicate::Nested),
            "laminar" => Some(ClassPredicate::Laminar),
            "paving" => Some(ClassPredicate::Paving),
            "binary" => Some(ClassPredicate::Binary),
            "ternary" => Some(ClassPredicate::Ternary),
            _ => None,
        };
        if let Some(p) = fixed {
            return Ok(p);
        }
        let unknown = || MatroidError::InvalidParameter(format!("unknown class predicate `{s}`"));
        let (k, rest) = s.split_once('-').ok_or_else(unknown)?;
        let k: usize = k.parse().map_err(|_| unknown())?;
        match rest {
            "laminar" => Ok(ClassPredicate::KLaminar(k)),
            "closure-laminar" => Ok(ClassPredicate::KClosureLaminar(k)),
            _ => Err(unknown()),
        }
    }
}

/// Why a matroid fails a class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    /// Two circuits meeting the size (or closure-rank) threshold, neither
    /// inside the closure of the other.
    CircuitPair { first: Subset, second: Subset },
    /// Two incomparable Hamiltonian flats that both contain the independent
    /// set `independent`.
    FlatPair { first: Subset, second: Subset, independent: Subset },
    /// A circuit smaller than the rank.
    SmallCircuit(Subset),
    /// A minor isomorphic to the named excluded matroid.
    Minor { spec: MinorSpec, excluded: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassVerdict {
    pub property: ClassPredicate,
    pub holds: bool,
    pub witness: Option<Violation>,
}

impl ClassVerdict {
    fn from_witness(property: ClassPredicate, witness: Option<Violation>) -> Self {
        ClassVerdict { property, holds: witness.is_none(), witness }
    }

    /// Re-checks the witness against `m` using only basic rank queries.
    /// A positive verdict replays trivially.
    pub fn replays(&self, m: &Matroid) -> bool {
        let Some(w) = &self.witness else {
            return self.holds;
        };
        if self.holds {
            return false;
        }
        let n = m.n();
        match (self.property, w) {
            (p, &Violation::CircuitPair { first, second }) => {
                if !first.fits(n) || !second.fits(n) || !m.is_circuit(first) || !m.is_circuit(second) {
                    return false;
                }
                if !incomparable_circuits(m, first, second) {
                    return false;
                }
                match p {
                    ClassPredicate::Nested => true,
                    ClassPredicate::Laminar => first.intersects(second),
                    ClassPredicate::KLaminar(k) => (first & second).len() >= k,
                    ClassPredicate::KClosureLaminar(k) => {
                        m.rank(m.closure(first) & m.closure(second)) >= k
                    }
                    _ => false,
                }
            }
            (p, &Violation::FlatPair { first, second, independent }) => {
                let k = match p {
                    ClassPredicate::Nested => 0,
                    ClassPredicate::Laminar => 1,
                    ClassPredicate::KClosureLaminar(k) => k,
                    _ => return false,
                };
                let hamiltonian = |f: Subset| f.fits(n) && m.is_hamiltonian_flat(f).unwrap_or(false);
                independent.len() == k
                    && m.is_independent(independent)
                    && independent.is_subset_of(first & second)
                    && first.is_incomparable_with(second)
                    && hamiltonian(first)
                    && hamiltonian(second)
            }
            (ClassPredicate::Paving, &Violation::SmallCircuit(c)) => {
                c.fits(n) && m.is_circuit(c) && c.len() < m.full_rank()
            }
            (ClassPredicate::Binary | ClassPredicate::Ternary, Violation::Minor { spec, excluded }) => {
                let Some(target) = minors::excluded_for(self.property)
                    .iter()
                    .find(|(name, _)| name == excluded)
                else {
                    return false;
                };
                spec.is_valid_for(m)
                    && minors::is_isomorphic(&minors::minor(m, spec), &target.1).is_some()
            }
            _ => false,
        }
    }
}

fn incomparable_circuits(m: &Matroid, c1: Subset, c2: Subset) -> bool {
    !c1.is_subset_of(m.closure(c2)) && !c2.is_subset_of(m.closure(c1))
}

/// First pair `(i, j)`, `i < j`, of circuits passing `relevant` but failing
/// the comparability condition.
fn first_bad_circuit_pair(
    m: &Matroid,
    circuits: &[Subset],
    relevant: impl Fn(Subset, Subset, Subset, Subset) -> bool,
) -> Option<Violation> {
    let closures: Vec<Subset> = circuits.iter().map(|&c| m.closure(c)).collect();
    for i in 0..circuits.len() {
        for j in i + 1..circuits.len() {
            let (c1, c2, f1, f2) = (circuits[i], circuits[j], closures[i], closures[j]);
            if relevant(c1, c2, f1, f2) && !c1.is_subset_of(f2) && !c2.is_subset_of(f1) {
                return Some(Violation::CircuitPair { first: c1, second: c2 });
            }
        }
    }
    None
}

fn first_incomparable(sets: &[Subset]) -> Option<(Subset, Subset)> {
    for (i, &a) in sets.iter().enumerate() {
        for &b in &sets[i + 1..] {
            if a.is_incomparable_with(b) {
                return Some((a, b));
            }
        }
    }
    None
}

fn circuit_list(m: &Matroid, non_spanning_only: bool) -> Vec<Subset> {
    if non_spanning_only {
        m.non_spanning_circuits()
    } else {
        m.circuits().as_slice().to_vec()
    }
}

/// Hamiltonian flats form a chain.
pub fn is_nested(m: &Matroid) -> ClassVerdict {
    let ham = m.hamiltonian_flats();
    let witness = first_incomparable(ham.as_slice()).map(|(first, second)| Violation::FlatPair {
        first,
        second,
        independent: Subset::EMPTY,
    });
    ClassVerdict::from_witness(ClassPredicate::Nested, witness)
}

/// Circuits meeting in at least `k` elements have one inside the closure of
/// the other.
pub fn is_k_laminar(m: &Matroid, k: usize) -> ClassVerdict {
    k_laminar_over(m, k, false)
}

/// [`is_k_laminar`] quantifying over non-spanning circuits only.
pub fn is_k_laminar_non_spanning(m: &Matroid, k: usize) -> ClassVerdict {
    k_laminar_over(m, k, true)
}

fn k_laminar_over(m: &Matroid, k: usize, non_spanning_only: bool) -> ClassVerdict {
    let circuits = circuit_list(m, non_spanning_only);
    let witness = first_bad_circuit_pair(m, &circuits, |c1, c2, _, _| (c1 & c2).len() >= k);
    ClassVerdict::from_witness(ClassPredicate::KLaminar(k), witness)
}

pub fn is_laminar(m: &Matroid) -> ClassVerdict {
    ClassVerdict { property: ClassPredicate::Laminar, ..is_k_laminar(m, 1) }
}

/// For each independent `k`-set `X` in increasing mask order, the
/// Hamiltonian flats containing `X` must form a chain. Vacuously true when
/// `k` exceeds the rank.
pub fn is_k_closure_laminar(m: &Matroid, k: usize) -> ClassVerdict {
    let property = ClassPredicate::KClosureLaminar(k);
    if k > m.full_rank() {
        return ClassVerdict::from_witness(property, None);
    }
    let ham = m.hamiltonian_flats();
    // only sets inside some intersection of two incomparable flats can fail
    let mut suspects = Subset::EMPTY;
    for (i, &a) in ham.as_slice().iter().enumerate() {
        for &b in &ham.as_slice()[i + 1..] {
            if a.is_incomparable_with(b) && m.rank(a & b) >= k {
                suspects = suspects | (a & b);
            }
        }
    }
    for x in suspects.subsets_of_size(k) {
        if !m.is_independent(x) {
            continue;
        }
        let above: Vec<Subset> = ham.iter().copied().filter(|f| x.is_subset_of(*f)).collect();
        if let Some((first, second)) = first_incomparable(&above) {
            let w = Violation::FlatPair { first, second, independent: x };
            return ClassVerdict::from_witness(property, Some(w));
        }
    }
    ClassVerdict::from_witness(property, None)
}

/// The circuit-pair reading: circuits whose closures meet in rank at least
/// `k` have one inside the closure of the other.
pub fn is_k_closure_laminar_circuit_form(m: &Matroid, k: usize) -> ClassVerdict {
    closure_circuit_form_over(m, k, false)
}

/// [`is_k_closure_laminar_circuit_form`] over non-spanning circuits only.
pub fn is_k_closure_laminar_non_spanning(m: &Matroid, k: usize) -> ClassVerdict {
    closure_circuit_form_over(m, k, true)
}

fn closure_circuit_form_over(m: &Matroid, k: usize, non_spanning_only: bool) -> ClassVerdict {
    let circuits = circuit_list(m, non_spanning_only);
    let witness = first_bad_circuit_pair(m, &circuits, |_, _, f1, f2| m.rank(f1 & f2) >= k);
    ClassVerdict::from_witness(ClassPredicate::KClosureLaminar(k), witness)
}

/// Least `k` with `M` k-laminar. `rank + 1` always suffices.
pub fn min_laminar_k(m: &Matroid) -> usize {
    (0..=m.full_rank() + 1)
        .find(|&k| is_k_laminar(m, k).holds)
        .expect("every matroid is (rank+1)-laminar")
}

/// Least `k` with `M` k-closure-laminar.
pub fn min_closure_laminar_k(m: &Matroid) -> usize {
    (0..=m.full_rank() + 1)
        .find(|&k| is_k_closure_laminar(m, k).holds)
        .expect("every matroid is (rank+1)-closure-laminar")
}

/// Every circuit has at least `r(M)` elements.
pub fn is_paving(m: &Matroid) -> ClassVerdict {
    let r = m.full_rank();
    let witness = m
        .circuits()
        .iter()
        .find(|c| c.len() < r)
        .map(|&c| Violation::SmallCircuit(c));
    ClassVerdict::from_witness(ClassPredicate::Paving, witness)
}

/// Decides any registered class.
pub fn decide(m: &Matroid, p: ClassPredicate) -> ClassVerdict {
    match p {
        ClassPredicate::Nested => is_nested(m),
        ClassPredicate::Laminar => is_laminar(m),
        ClassPredicate::KLaminar(k) => is_k_laminar(m, k),
        ClassPredicate::KClosureLaminar(k) => is_k_closure_laminar(m, k),
        ClassPredicate::Paving => is_paving(m),
        ClassPredicate::Binary | ClassPredicate::Ternary => {
            let witness = minors::excluded_for(p).iter().find_map(|(name, target)| {
                minors::has_minor(m, target).map(|spec| Violation::Minor {
                    spec,
                    excluded: name.clone(),
                })
            });
            ClassVerdict::from_witness(p, witness)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::named_matroid;
    use crate::constructions::uniform;

    fn k23() -> Matroid {
        named_matroid("MK23", None, None).unwrap()
    }

    #[test]
    fn predicate_names_round_trip() {
        for p in [
            ClassPredicate::Nested,
            ClassPredicate::Laminar,
            ClassPredicate::KLaminar(2),
            ClassPredicate::KClosureLaminar(3),
            ClassPredicate::Paving,
            ClassPredicate::Binary,
            ClassPredicate::Ternary,
        ] {
            assert_eq!(p.to_string().parse::<ClassPredicate>().unwrap(), p);
        }
        for bad in ["graphic", "x-laminar", "2-nested", "", "2-"] {
            assert!(bad.parse::<ClassPredicate>().is_err(), "{bad}");
        }
    }

    #[test]
    fn k23_verdicts() {
        let m = k23();
        let nested = is_nested(&m);
        assert!(!nested.holds);
        assert!(nested.replays(&m));
        if let Some(Violation::FlatPair { first, second, .. }) = nested.witness {
            assert_eq!((first.len(), second.len()), (4, 4));
        } else {
            panic!("expected a flat pair");
        }
        let two = is_k_laminar(&m, 2);
        assert!(!two.holds && two.replays(&m));
        assert!(is_k_laminar(&m, 3).holds);
        assert!(!is_laminar(&m).holds);
        assert_eq!(min_laminar_k(&m), 3);
        assert_eq!(min_closure_laminar_k(&m), 3);
    }

    #[test]
    fn uniform_matroids_are_in_every_class() {
        for (r, n) in [(0, 3), (2, 4), (3, 6), (5, 5)] {
            let u = uniform(r, n).unwrap();
            assert!(is_nested(&u).holds);
            assert!(is_laminar(&u).holds);
            assert!(is_paving(&u).holds);
            assert_eq!(min_laminar_k(&u), 0);
            assert_eq!(min_closure_laminar_k(&u), 0);
        }
    }

    #[test]
    fn section_one_example_separates_the_hierarchies() {
        let m = named_matroid("Sec1PCExample", None, Some(2)).unwrap();
        assert!(is_k_laminar(&m, 2).holds);
        let v = is_k_closure_laminar(&m, 2);
        assert!(!v.holds && v.replays(&m));
        let c = is_k_closure_laminar_circuit_form(&m, 2);
        assert!(!c.holds && c.replays(&m));
        assert_eq!(min_closure_laminar_k(&m), 3);
    }

    #[test]
    fn paving_examples() {
        let m = named_matroid("MK4", None, None).unwrap();
        assert!(is_paving(&m).holds);
        let loop_plus = crate::constructions::direct_sum(&uniform(0, 1).unwrap(), &uniform(2, 2).unwrap()).unwrap();
        let v = is_paving(&loop_plus);
        assert!(!v.holds && v.replays(&loop_plus));
    }

    #[test]
    fn tampered_witness_does_not_replay() {
        let m = k23();
        let mut v = is_k_laminar(&m, 2);
        v.property = ClassPredicate::KLaminar(3);
        assert!(!v.replays(&m));
    }
}

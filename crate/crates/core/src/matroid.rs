//! The explicit rank-table matroid and everything derived from it by subset scan.

use std::fmt;
use std::sync::OnceLock;

use crate::cyclic::CyclicFlatFamily;
use crate::error::{MatroidError, Result};
use crate::subset::{SetFamily, Subset};

/// Largest supported ground set.
pub const MAX_ELEMENTS: usize = 16;

/// The first rank axiom found broken, with the subsets that break it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxiomViolation {
    TableSize { expected: usize, found: usize },
    /// `rank(set) > |set|`.
    R1 { set: Subset },
    /// `smaller ⊆ larger` but `rank(smaller) > rank(larger)`.
    R2 { smaller: Subset, larger: Subset },
    /// `rank(first ∪ second) + rank(first ∩ second) > rank(first) + rank(second)`.
    R3 { first: Subset, second: Subset },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::TableSize { expected, found } => {
                write!(f, "table has {found} entries, expected {expected}")
            }
            AxiomViolation::R1 { set } => write!(f, "R1 at {set:?}"),
            AxiomViolation::R2 { smaller, larger } => write!(f, "R2 at {smaller:?} ⊆ {larger:?}"),
            AxiomViolation::R3 { first, second } => write!(f, "R3 at {first:?}, {second:?}"),
        }
    }
}

/// Checks R1 (bounds), R2 (monotonicity) and R3 (submodularity) over a full
/// rank table, reporting the first axiom violated in that order.
///
/// Monotonicity and submodularity are scanned in their local forms
/// (`r(A) <= r(A+e)` and `r(A+e) + r(A+f) >= r(A+e+f) + r(A)`), which are
/// equivalent to the global ones; a local failure is itself a global witness.
pub fn validate_rank_axioms(n: usize, table: &[u8]) -> std::result::Result<(), AxiomViolation> {
    let size = 1usize << n;
    if table.len() != size {
        return Err(AxiomViolation::TableSize {
            expected: size,
            found: table.len(),
        });
    }
    for a in 0..size {
        if table[a] as u32 > a.count_ones() {
            return Err(AxiomViolation::R1 {
                set: Subset(a as u32),
            });
        }
    }
    for a in 0..size {
        let outside = !(a as u32) & ((size - 1) as u32);
        for e in Subset(outside).elements() {
            let b = a | 1 << e;
            if table[a] > table[b] {
                return Err(AxiomViolation::R2 {
                    smaller: Subset(a as u32),
                    larger: Subset(b as u32),
                });
            }
        }
    }
    for a in 0..size {
        let outside: Vec<usize> = Subset(!(a as u32) & ((size - 1) as u32)).elements().collect();
        let ra = table[a] as i32;
        for (i, &e) in outside.iter().enumerate() {
            let ae = a | 1 << e;
            for &f in &outside[i + 1..] {
                let af = a | 1 << f;
                if (table[ae] as i32 + table[af] as i32) < (table[ae | af] as i32 + ra) {
                    return Err(AxiomViolation::R3 {
                        first: Subset(ae as u32),
                        second: Subset(af as u32),
                    });
                }
            }
        }
    }
    Ok(())
}

/// Labels `e0, e1, ..` used when no names are given.
pub fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("e{i}")).collect()
}

pub(crate) fn check_labels(labels: &[String]) -> Result<()> {
    if labels.len() > MAX_ELEMENTS {
        return Err(MatroidError::TooManyElements(labels.len()));
    }
    for (i, l) in labels.iter().enumerate() {
        if l.is_empty() || l.chars().any(|c| c.is_whitespace() || matches!(c, '{' | '}' | '#')) {
            return Err(MatroidError::InvalidLabel(l.clone()));
        }
        if labels[..i].contains(l) {
            return Err(MatroidError::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

/// A matroid on at most 16 labelled elements, stored as its full rank table.
///
/// Equality is labelled equality: same labels in the same order and the same
/// rank table.
#[derive(Clone)]
pub struct Matroid {
    labels: Vec<String>,
    ranks: Vec<u8>,
    circuits: OnceLock<SetFamily>,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.ranks == other.ranks
    }
}

impl Eq for Matroid {}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matroid")
            .field("labels", &self.labels)
            .field("rank", &self.full_rank())
            .field("circuits", &self.circuits().len())
            .finish()
    }
}

impl Matroid {
    /// Builds a matroid from a complete rank table indexed by subset mask.
    pub fn from_rank_table(labels: Vec<String>, ranks: Vec<u8>) -> Result<Self> {
        check_labels(&labels)?;
        validate_rank_axioms(labels.len(), &ranks).map_err(MatroidError::Axiom)?;
        Ok(Matroid {
            labels,
            ranks,
            circuits: OnceLock::new(),
        })
    }

    /// Builds the rank table by evaluating `rank` on every subset.
    pub fn from_rank_fn(labels: Vec<String>, rank: impl Fn(Subset) -> usize) -> Result<Self> {
        check_labels(&labels)?;
        let table = (0..1u32 << labels.len())
            .map(|m| rank(Subset(m)) as u8)
            .collect();
        Self::from_rank_table(labels, table)
    }

    /// Builds the matroid whose independent sets are those containing none of
    /// `circuits`. Fails unless the list is exactly the circuit family of the
    /// result.
    pub fn from_circuits(labels: Vec<String>, circuits: &[Subset]) -> Result<Self> {
        check_labels(&labels)?;
        let n = labels.len();
        let size = 1usize << n;
        let mut is_circuit = vec![false; size];
        for c in circuits {
            if c.is_empty() || !c.fits(n) {
                return Err(MatroidError::NotMatroidal);
            }
            is_circuit[c.index()] = true;
        }
        let mut dependent = vec![false; size];
        let mut ranks = vec![0u8; size];
        for m in 1..size {
            let s = Subset(m as u32);
            dependent[m] = is_circuit[m] || s.elements().any(|e| dependent[m & !(1 << e)]);
            ranks[m] = if dependent[m] {
                s.elements().map(|e| ranks[m & !(1 << e)]).max().unwrap_or(0)
            } else {
                s.len() as u8
            };
        }
        let m = Self::from_rank_table(labels, ranks)?;
        let mut given: Vec<Subset> = circuits.to_vec();
        given.sort_by_key(|s| (s.len(), s.0));
        given.dedup();
        if m.circuits().as_slice() != given.as_slice() {
            return Err(MatroidError::NotMatroidal);
        }
        Ok(m)
    }

    /// The same matroid under new names.
    pub fn relabeled(&self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(MatroidError::InvalidParameter(format!(
                "expected {} labels, got {}",
                self.n(),
                labels.len()
            )));
        }
        check_labels(&labels)?;
        Ok(Matroid {
            labels,
            ranks: self.ranks.clone(),
            circuits: self.circuits.clone(),
        })
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, e: usize) -> &str {
        &self.labels[e]
    }

    pub fn element(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// The subset named by `labels`.
    pub fn subset<S: AsRef<str>>(&self, labels: &[S]) -> Result<Subset> {
        labels.iter().try_fold(Subset::EMPTY, |acc, l| {
            let l = l.as_ref();
            self.element(l)
                .map(|e| acc.with(e))
                .ok_or_else(|| MatroidError::UnknownLabel(l.to_string()))
        })
    }

    /// `{a b c}` rendering of a subset using element labels.
    pub fn format_set(&self, s: Subset) -> String {
        let names: Vec<&str> = s.elements().map(|e| self.label(e)).collect();
        format!("{{{}}}", names.join(" "))
    }

    pub fn ground(&self) -> Subset {
        Subset::full(self.n())
    }

    pub fn rank_table(&self) -> &[u8] {
        &self.ranks
    }

    #[inline]
    pub fn rank(&self, s: Subset) -> usize {
        self.ranks[s.index()] as usize
    }

    pub fn full_rank(&self) -> usize {
        self.rank(self.ground())
    }

    #[inline]
    pub fn is_independent(&self, s: Subset) -> bool {
        self.rank(s) == s.len()
    }

    pub fn is_spanning(&self, s: Subset) -> bool {
        self.rank(s) == self.full_rank()
    }

    /// `{ e : rank(A ∪ e) = rank(A) }`.
    pub fn closure(&self, s: Subset) -> Subset {
        let r = self.rank(s);
        Subset::from_elements((0..self.n()).filter(|&e| self.rank(s.with(e)) == r))
    }

    pub fn is_flat(&self, s: Subset) -> bool {
        let r = self.rank(s);
        (self.ground() - s).elements().all(|e| self.rank(s.with(e)) > r)
    }

    pub fn is_circuit(&self, s: Subset) -> bool {
        !s.is_empty()
            && self.rank(s) + 1 == s.len()
            && s.elements().all(|e| self.is_independent(s.without(e)))
    }

    /// All circuits, ordered by size and then by mask value.
    pub fn circuits(&self) -> &SetFamily {
        self.circuits.get_or_init(|| {
            let mut found: Vec<Subset> = self
                .ground()
                .subsets()
                .filter(|&s| self.is_circuit(s))
                .collect();
            found.sort_by_key(|s| (s.len(), s.0));
            SetFamily::sorted_by_size(found)
        })
    }

    pub fn non_spanning_circuits(&self) -> Vec<Subset> {
        self.circuits()
            .iter()
            .copied()
            .filter(|&c| !self.is_spanning(c))
            .collect()
    }

    pub fn loops(&self) -> Subset {
        self.closure(Subset::EMPTY)
    }

    pub fn coloops(&self) -> Subset {
        let r = self.full_rank();
        Subset::from_elements(
            (0..self.n()).filter(|&e| self.rank(self.ground().without(e)) < r),
        )
    }

    /// All flats in increasing mask order.
    pub fn flats(&self) -> SetFamily {
        SetFamily::new(
            self.ground()
                .subsets()
                .filter(|&s| self.is_flat(s))
                .collect(),
        )
    }

    pub fn hyperplanes(&self) -> Vec<Subset> {
        let r = self.full_rank();
        self.flats()
            .iter()
            .copied()
            .filter(|&f| self.rank(f) + 1 == r)
            .collect()
    }

    pub fn is_circuit_hyperplane(&self, s: Subset) -> bool {
        self.is_circuit(s) && self.is_flat(s) && self.rank(s) + 1 == self.full_rank()
    }

    /// A flat `F` is cyclic when `M|F` has no coloops.
    pub fn is_cyclic_flat(&self, s: Subset) -> bool {
        let r = self.rank(s);
        self.is_flat(s) && s.elements().all(|e| self.rank(s.without(e)) == r)
    }

    /// Cyclic flats with their ranks.
    pub fn cyclic_flats(&self) -> CyclicFlatFamily {
        let entries = self
            .ground()
            .subsets()
            .filter(|&s| self.is_cyclic_flat(s))
            .map(|s| (s, self.rank(s)))
            .collect();
        CyclicFlatFamily::new(self.labels.clone(), entries)
    }

    /// Whether the flat `f` has a spanning circuit. A rank-0 flat qualifies
    /// exactly when it contains a loop.
    pub fn is_hamiltonian_flat(&self, f: Subset) -> Result<bool> {
        if !f.fits(self.n()) || !self.is_flat(f) {
            return Err(MatroidError::NotFlat(f));
        }
        let r = self.rank(f);
        Ok(self
            .circuits()
            .iter()
            .any(|&c| c.is_subset_of(f) && self.rank(c) == r))
    }

    /// Hamiltonian flats in increasing mask order. These are exactly the
    /// closures of circuits.
    pub fn hamiltonian_flats(&self) -> SetFamily {
        let mut flats: Vec<Subset> = self.circuits().iter().map(|&c| self.closure(c)).collect();
        flats.sort();
        flats.dedup();
        SetFamily::new(flats)
    }

    /// `r*(A) = |A| + r(E - A) - r(E)`.
    pub fn dual(&self) -> Matroid {
        let ground = self.ground();
        let r = self.full_rank();
        let ranks = (0..1u32 << self.n())
            .map(|m| {
                let a = Subset(m);
                (a.len() + self.rank(ground - a) - r) as u8
            })
            .collect();
        Matroid::from_rank_table(self.labels.clone(), ranks)
            .expect("dual of a matroid is a matroid")
    }

    /// Rank table of a matroid known to be valid; skips the axiom scan.
    pub(crate) fn from_trusted(labels: Vec<String>, ranks: Vec<u8>) -> Matroid {
        debug_assert!(validate_rank_axioms(labels.len(), &ranks).is_ok());
        Matroid {
            labels,
            ranks,
            circuits: OnceLock::new(),
        }
    }
}

impl fmt::Display for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "matroid of rank {} on {{{}}}",
            self.full_rank(),
            self.labels.join(" ")
        )
    }
}

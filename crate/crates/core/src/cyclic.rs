//! Families of cyclic flats: the lattice axioms Z0–Z3, and synthesis of the
//! unique matroid realizing a valid family.

use std::collections::HashSet;
use std::fmt;

use crate::error::{MatroidError, Result};
use crate::matroid::{check_labels, Matroid};
use crate::subset::{SetFamily, Subset};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZViolation {
    /// A lattice needs at least one member.
    Empty,
    OutOfRange(Subset),
    Duplicate(Subset),
    /// The pair has no unique meet (`meet == true`) or join inside the family.
    Z0 { first: Subset, second: Subset, meet: bool },
    /// The least member does not have rank 0.
    Z1 { bottom: Subset, rank: usize },
    /// `lower ⊊ upper` without `0 < r(upper) - r(lower) < |upper - lower|`.
    Z2 { lower: Subset, upper: Subset },
    /// `r(X) + r(Y) < r(X ∨ Y) + r(X ∧ Y) + |(X ∩ Y) - (X ∧ Y)|`.
    Z3 { first: Subset, second: Subset },
}

impl fmt::Display for ZViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZViolation::Empty => write!(f, "Z0 (empty family)"),
            ZViolation::OutOfRange(s) => write!(f, "ground set bounds at {s:?}"),
            ZViolation::Duplicate(s) => write!(f, "distinctness at {s:?}"),
            ZViolation::Z0 { first, second, meet } => write!(
                f,
                "Z0 ({} of {first:?} and {second:?})",
                if *meet { "meet" } else { "join" }
            ),
            ZViolation::Z1 { bottom, rank } => write!(f, "Z1 (bottom {bottom:?} has rank {rank})"),
            ZViolation::Z2 { lower, upper } => write!(f, "Z2 at {lower:?} ⊊ {upper:?}"),
            ZViolation::Z3 { first, second } => write!(f, "Z3 at {first:?}, {second:?}"),
        }
    }
}

impl ZViolation {
    /// As `Display`, with sets written by element label.
    pub fn describe(&self, labels: &[String]) -> String {
        let set = |s: &Subset| {
            let names: Vec<&str> = s.elements().map(|e| labels.get(e).map_or("?", |l| l.as_str())).collect();
            format!("{{{}}}", names.join(" "))
        };
        match self {
            ZViolation::Empty => self.to_string(),
            ZViolation::OutOfRange(s) => format!("ground set bounds at {}", set(s)),
            ZViolation::Duplicate(s) => format!("distinctness at {}", set(s)),
            ZViolation::Z0 { first, second, meet } => format!(
                "Z0 ({} of {} and {})",
                if *meet { "meet" } else { "join" },
                set(first),
                set(second)
            ),
            ZViolation::Z1 { bottom, rank } => format!("Z1 (bottom {} has rank {rank})", set(bottom)),
            ZViolation::Z2 { lower, upper } => format!("Z2 at {} ⊊ {}", set(lower), set(upper)),
            ZViolation::Z3 { first, second } => format!("Z3 at {}, {}", set(first), set(second)),
        }
    }
}

/// Candidate cyclic flats with ranks over a labelled ground set.
///
/// Entries are kept sorted by `(rank, mask)` so two families compare equal
/// exactly when they hold the same (set, rank) pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicFlatFamily {
    labels: Vec<String>,
    entries: Vec<(Subset, usize)>,
}

impl CyclicFlatFamily {
    pub fn new(labels: Vec<String>, mut entries: Vec<(Subset, usize)>) -> Self {
        entries.sort_by_key(|&(s, r)| (r, s.0));
        CyclicFlatFamily { labels, entries }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn entries(&self) -> &[(Subset, usize)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn rank_of(&self, s: Subset) -> Option<usize> {
        self.entries.iter().find(|e| e.0 == s).map(|e| e.1)
    }

    pub fn members(&self) -> impl Iterator<Item = Subset> + '_ {
        self.entries.iter().map(|e| e.0)
    }

    /// The unique maximal member contained in `x ∩ y`, if there is one.
    pub fn meet(&self, x: Subset, y: Subset) -> Option<Subset> {
        let below: Vec<Subset> = self.members().filter(|m| m.is_subset_of(x & y)).collect();
        unique_extreme(&below, |a, b| a.is_proper_subset_of(b))
    }

    /// The unique minimal member containing `x ∪ y`, if there is one.
    pub fn join(&self, x: Subset, y: Subset) -> Option<Subset> {
        let above: Vec<Subset> = self.members().filter(|m| (x | y).is_subset_of(*m)).collect();
        unique_extreme(&above, |a, b| b.is_proper_subset_of(a))
    }

    /// The least member, when the family is a lattice.
    pub fn bottom(&self) -> Option<Subset> {
        self.members()
            .find(|&b| self.members().all(|m| b.is_subset_of(m)))
    }

    /// Checks Z0–Z3 in that order, reporting the first failure.
    pub fn validate(&self) -> std::result::Result<(), ZViolation> {
        let n = self.n();
        if self.entries.is_empty() {
            return Err(ZViolation::Empty);
        }
        let mut seen = HashSet::new();
        for &(s, _) in &self.entries {
            if !s.fits(n) {
                return Err(ZViolation::OutOfRange(s));
            }
            if !seen.insert(s) {
                return Err(ZViolation::Duplicate(s));
            }
        }
        let pairs = || {
            let e = &self.entries;
            (0..e.len()).flat_map(move |i| (i + 1..e.len()).map(move |j| (e[i], e[j])))
        };
        for ((x, _), (y, _)) in pairs() {
            if self.meet(x, y).is_none() {
                return Err(ZViolation::Z0 { first: x, second: y, meet: true });
            }
            if self.join(x, y).is_none() {
                return Err(ZViolation::Z0 { first: x, second: y, meet: false });
            }
        }
        let bottom = self.bottom().expect("a finite lattice has a least element");
        let bottom_rank = self.rank_of(bottom).unwrap();
        if bottom_rank != 0 {
            return Err(ZViolation::Z1 { bottom, rank: bottom_rank });
        }
        for ((x, rx), (y, ry)) in pairs() {
            let (lower, rl, upper, ru) = match (x.is_proper_subset_of(y), y.is_proper_subset_of(x)) {
                (true, _) => (x, rx, y, ry),
                (_, true) => (y, ry, x, rx),
                _ => continue,
            };
            let gap = (upper - lower).len();
            if !(ru > rl && ru - rl < gap) {
                return Err(ZViolation::Z2 { lower, upper });
            }
        }
        for ((x, rx), (y, ry)) in pairs() {
            let join = self.join(x, y).unwrap();
            let meet = self.meet(x, y).unwrap();
            let rhs = self.rank_of(join).unwrap()
                + self.rank_of(meet).unwrap()
                + ((x & y) - meet).len();
            if rx + ry < rhs {
                return Err(ZViolation::Z3 { first: x, second: y });
            }
        }
        Ok(())
    }
}

fn unique_extreme(candidates: &[Subset], beats: impl Fn(Subset, Subset) -> bool) -> Option<Subset> {
    let mut extremes = candidates
        .iter()
        .filter(|&&c| !candidates.iter().any(|&d| beats(c, d)));
    let first = *extremes.next()?;
    extremes.next().is_none().then_some(first)
}

/// The matroid whose cyclic flats (with ranks) are exactly `family`.
///
/// Ranks are synthesized as `r(X) = min over (Z, r_Z) of r_Z + |X - Z|`; the
/// result is rejected unless its cyclic flats reproduce the family.
pub fn from_cyclic_flats(family: &CyclicFlatFamily) -> Result<Matroid> {
    check_labels(family.labels())?;
    family.validate().map_err(MatroidError::CyclicFlats)?;
    let entries = family.entries();
    let m = Matroid::from_rank_fn(family.labels().to_vec(), |x| {
        entries
            .iter()
            .map(|&(z, r)| r + (x - z).len())
            .min()
            .unwrap()
    })?;
    if &m.cyclic_flats() != family {
        return Err(MatroidError::NotMatroidal);
    }
    Ok(m)
}

/// Circuits read directly off the family: the minimal sets `S` lying in some
/// member `Z` with `|S| = r(Z) + 1`. Ordered by size, then mask.
pub fn circuits_from_cyclic_flats(family: &CyclicFlatFamily) -> Result<SetFamily> {
    check_labels(family.labels())?;
    family.validate().map_err(MatroidError::CyclicFlats)?;
    let size = 1usize << family.n();
    let mut candidate = vec![false; size];
    let mut has_candidate_below = vec![false; size];
    let mut circuits = Vec::new();
    for m in 1..size {
        let s = Subset(m as u32);
        candidate[m] = family
            .entries()
            .iter()
            .any(|&(z, r)| s.len() == r + 1 && s.is_subset_of(z));
        has_candidate_below[m] = s.elements().any(|e| {
            let t = m & !(1 << e);
            candidate[t] || has_candidate_below[t]
        });
        if candidate[m] && !has_candidate_below[m] {
            circuits.push(s);
        }
    }
    Ok(SetFamily::sorted_by_size(circuits))
}

//! Deletion, contraction, isomorphism and minor search.

use std::collections::HashSet;
use std::sync::LazyLock;

use serde::{Deserialize, Serialize};

use crate::catalog::named_matroid;
use crate::classes::{decide, ClassPredicate};
use crate::constructions::uniform;
use crate::matroid::Matroid;
use crate::subset::Subset;

/// `M \ delete / contract`. The two sets are disjoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct MinorSpec {
    pub delete: Subset,
    pub contract: Subset,
}

impl MinorSpec {
    pub fn is_valid_for(&self, m: &Matroid) -> bool {
        self.delete.fits(m.n()) && self.contract.fits(m.n()) && !self.delete.intersects(self.contract)
    }
}

/// Rank table of `M / contract` restricted to `keep`, indexed by subsets of
/// the kept elements listed in increasing order.
fn minor_table(m: &Matroid, keep: Subset, contract: Subset) -> Vec<u8> {
    let kept: Vec<usize> = keep.elements().collect();
    let base = m.rank(contract);
    let size = 1usize << kept.len();
    let mut table = vec![0u8; size];
    let mut lifted = vec![Subset::EMPTY; size];
    for i in 1..size {
        let low = i.trailing_zeros() as usize;
        lifted[i] = lifted[i & (i - 1)].with(kept[low]);
        table[i] = (m.rank(lifted[i] | contract) - base) as u8;
    }
    table
}

fn minor_labels(m: &Matroid, keep: Subset) -> Vec<String> {
    keep.elements().map(|e| m.label(e).to_string()).collect()
}

pub fn delete(m: &Matroid, d: Subset) -> Matroid {
    minor(m, &MinorSpec { delete: d, contract: Subset::EMPTY })
}

/// `r_{M/C}(A) = r(A ∪ C) - r(C)`.
pub fn contract(m: &Matroid, c: Subset) -> Matroid {
    minor(m, &MinorSpec { delete: Subset::EMPTY, contract: c })
}

/// The minor named by `spec`, on the surviving labels in their original order.
pub fn minor(m: &Matroid, spec: &MinorSpec) -> Matroid {
    assert!(spec.is_valid_for(m), "invalid minor spec {spec:?}");
    let keep = m.ground() - spec.delete - spec.contract;
    Matroid::from_rank_table(minor_labels(m, keep), minor_table(m, keep, spec.contract))
        .expect("minors of matroids are matroids")
}

/// Isomorphism invariants: rank, sorted circuit sizes, and per element the
/// sorted sizes of the circuits through it.
struct Profile {
    rank: usize,
    sizes: Vec<usize>,
    fingerprints: Vec<Vec<usize>>,
    circuits: HashSet<Subset>,
    /// Circuits grouped by their largest element.
    closing: Vec<Vec<Subset>>,
}

impl Profile {
    fn of(m: &Matroid) -> Profile {
        let circuits = m.circuits();
        let mut fingerprints = vec![Vec::new(); m.n()];
        let mut closing = vec![Vec::new(); m.n()];
        for &c in circuits {
            for e in c.elements() {
                fingerprints[e].push(c.len());
            }
            closing[c.max_element().unwrap()].push(c);
        }
        for f in &mut fingerprints {
            f.sort_unstable();
        }
        Profile {
            rank: m.full_rank(),
            sizes: circuits.iter().map(|c| c.len()).collect(),
            fingerprints,
            circuits: circuits.iter().copied().collect(),
            closing,
        }
    }

    fn sorted_fingerprints(&self) -> Vec<&Vec<usize>> {
        let mut f: Vec<&Vec<usize>> = self.fingerprints.iter().collect();
        f.sort();
        f
    }
}

/// A bijection `phi` (element `i` of `m1` goes to `phi[i]` of `m2`) carrying
/// the circuits of `m1` onto those of `m2`, if one exists. Candidates are
/// tried in increasing index order, so the witness is deterministic.
pub fn is_isomorphic(m1: &Matroid, m2: &Matroid) -> Option<Vec<usize>> {
    if m1.n() != m2.n() {
        return None;
    }
    let (p1, p2) = (Profile::of(m1), Profile::of(m2));
    isomorphism(&p1, &p2, m1.n())
}

fn isomorphism(p1: &Profile, p2: &Profile, n: usize) -> Option<Vec<usize>> {
    if p1.rank != p2.rank || p1.sizes != p2.sizes || p1.sorted_fingerprints() != p2.sorted_fingerprints() {
        return None;
    }
    let mut phi = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(p1, p2, 0, &mut phi, &mut used).then_some(phi)
}

fn extend(p1: &Profile, p2: &Profile, i: usize, phi: &mut [usize], used: &mut [bool]) -> bool {
    if i == phi.len() {
        return true;
    }
    for j in 0..phi.len() {
        if used[j] || p1.fingerprints[i] != p2.fingerprints[j] {
            continue;
        }
        phi[i] = j;
        let consistent = p1.closing[i].iter().all(|c| {
            let image = Subset::from_elements(c.elements().map(|e| phi[e]));
            p2.circuits.contains(&image)
        });
        if consistent {
            used[j] = true;
            if extend(p1, p2, i + 1, phi, used) {
                return true;
            }
            used[j] = false;
        }
    }
    phi[i] = usize::MAX;
    false
}

/// A minor of `m` isomorphic to `n`, if any.
///
/// Contract sets range over independent sets of size `r(M) - r(N)` in
/// increasing mask order; for each, the kept sets range over
/// `|E(N)|`-subsets of the rest in increasing mask order. Every minor arises
/// this way with the deleted set coindependent in `M / C`.
pub fn has_minor(m: &Matroid, n: &Matroid) -> Option<MinorSpec> {
    let (rm, rn) = (m.full_rank(), n.full_rank());
    if n.n() > m.n() || rn > rm || m.n() - n.n() < rm - rn {
        return None;
    }
    let target = Profile::of(n);
    let c = rm - rn;
    for contract in m.ground().subsets_of_size(c) {
        if !m.is_independent(contract) {
            continue;
        }
        let rest = m.ground() - contract;
        for keep in rest.subsets_of_size(n.n()) {
            if m.rank(keep | contract) != rm {
                continue;
            }
            let table = minor_table(m, keep, contract);
            let candidate = Matroid::from_trusted(minor_labels(m, keep), table);
            let profile = Profile::of(&candidate);
            if isomorphism(&profile, &target, n.n()).is_some() {
                return Some(MinorSpec { delete: rest - keep, contract });
            }
        }
    }
    None
}

/// Outcome of an excluded-minor test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExclusionReport {
    /// Outside the class, with every single-element minor inside.
    Excluded,
    /// The matroid itself belongs to the class.
    InClass,
    /// This single-element minor is already outside the class.
    MinorOutside(MinorSpec),
}

impl ExclusionReport {
    pub fn is_excluded(&self) -> bool {
        matches!(self, ExclusionReport::Excluded)
    }
}

/// Tests `M` against `p` and then every single-element deletion and
/// contraction, deletions first, in element order.
pub fn is_excluded_minor(m: &Matroid, p: ClassPredicate) -> ExclusionReport {
    if decide(m, p).holds {
        return ExclusionReport::InClass;
    }
    let deletions = (0..m.n()).map(|e| MinorSpec { delete: Subset::singleton(e), contract: Subset::EMPTY });
    let contractions = (0..m.n()).map(|e| MinorSpec { delete: Subset::EMPTY, contract: Subset::singleton(e) });
    for spec in deletions.chain(contractions) {
        if !decide(&minor(m, &spec), p).holds {
            return ExclusionReport::MinorOutside(spec);
        }
    }
    ExclusionReport::Excluded
}

static BINARY_EXCLUDED: LazyLock<Vec<(String, Matroid)>> =
    LazyLock::new(|| vec![("U24".to_string(), uniform(2, 4).unwrap())]);

static TERNARY_EXCLUDED: LazyLock<Vec<(String, Matroid)>> = LazyLock::new(|| {
    vec![
        ("U25".to_string(), uniform(2, 5).unwrap()),
        ("U35".to_string(), uniform(3, 5).unwrap()),
        ("F7".to_string(), named_matroid("F7", None, None).unwrap()),
        ("F7star".to_string(), named_matroid("F7star", None, None).unwrap()),
    ]
});

/// The excluded minors used for binary and ternary membership; empty for
/// other classes.
pub fn excluded_for(p: ClassPredicate) -> &'static [(String, Matroid)] {
    match p {
        ClassPredicate::Binary => &BINARY_EXCLUDED,
        ClassPredicate::Ternary => &TERNARY_EXCLUDED,
        _ => &[],
    }
}

/// No `U_{2,4}` minor.
pub fn is_binary(m: &Matroid) -> bool {
    decide(m, ClassPredicate::Binary).holds
}

/// No minor among `U_{2,5}`, `U_{3,5}`, `F_7`, `F_7*`.
pub fn is_ternary(m: &Matroid) -> bool {
    decide(m, ClassPredicate::Ternary).holds
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cycle_matroid, Multigraph};

    fn named(id: &str) -> Matroid {
        named_matroid(id, None, None).unwrap()
    }

    #[test]
    fn contracting_uniform() {
        let u = uniform(2, 4).unwrap();
        let c = contract(&u, Subset::singleton(0));
        assert_eq!(c.rank_table(), uniform(1, 3).unwrap().rank_table());
        assert_eq!(c.labels(), &["e1", "e2", "e3"]);
        let d = delete(&u, Subset::singleton(3));
        assert_eq!(d, uniform(2, 3).unwrap());
    }

    #[test]
    fn contracting_a_loop_or_coloop_equals_deleting_it() {
        let g = Multigraph::with_edges(3, &[(0, 0), (0, 1), (1, 2), (2, 0), (2, 2)]).unwrap();
        let m = cycle_matroid(&g).unwrap();
        for e in [0, 4] {
            assert_eq!(contract(&m, Subset::singleton(e)), delete(&m, Subset::singleton(e)));
        }
        let bridge = cycle_matroid(&Multigraph::with_edges(3, &[(0, 1), (1, 2), (2, 1)]).unwrap()).unwrap();
        assert_eq!(contract(&bridge, Subset::singleton(0)), delete(&bridge, Subset::singleton(0)));
    }

    #[test]
    fn isomorphism_basics() {
        let k23 = named("MK23");
        let m42 = named_matroid("Mn", Some(4), Some(2)).unwrap();
        let phi = is_isomorphic(&m42, &k23).unwrap();
        for &c in m42.circuits() {
            let image = Subset::from_elements(c.elements().map(|e| phi[e]));
            assert!(k23.is_circuit(image));
        }
        assert_eq!(is_isomorphic(&k23, &k23), Some((0..6).collect()));
        assert!(is_isomorphic(&named("F7"), &named("F7star")).is_none());
        assert!(is_isomorphic(&k23, &named("MK23minus")).is_none());
    }

    #[test]
    fn fano_dual_deletion_is_k23() {
        let f7s = named("F7star");
        let k23 = named("MK23");
        for e in 0..7 {
            assert!(is_isomorphic(&delete(&f7s, Subset::singleton(e)), &k23).is_some());
        }
    }

    #[test]
    fn minor_search() {
        let u24 = uniform(2, 4).unwrap();
        assert_eq!(has_minor(&u24, &u24), Some(MinorSpec::default()));
        let m52 = named_matroid("Mn", Some(5), Some(2)).unwrap();
        let spec = has_minor(&m52, &uniform(5, 7).unwrap()).unwrap();
        assert!(is_isomorphic(&minor(&m52, &spec), &uniform(5, 7).unwrap()).is_some());
        assert!(has_minor(&named("MK23"), &u24).is_none());
        assert!(has_minor(&u24, &uniform(2, 5).unwrap()).is_none());
    }

    #[test]
    fn binary_and_ternary() {
        let minus = named("MK23minus");
        assert!(!is_binary(&minus));
        assert!(is_ternary(&minus));
        assert!(is_binary(&named("MK23")));
        assert!(is_ternary(&uniform(2, 4).unwrap()));
        assert!(!is_ternary(&named("F7")));
        assert!(is_binary(&named("F7")));
        let v = decide(&named("F7"), ClassPredicate::Ternary);
        assert!(!v.holds && v.replays(&named("F7")));
    }

    #[test]
    fn excluded_minor_reports() {
        let m42 = named_matroid("Mn", Some(4), Some(2)).unwrap();
        assert!(is_excluded_minor(&m42, ClassPredicate::KLaminar(2)).is_excluded());
        assert_eq!(
            is_excluded_minor(&uniform(2, 4).unwrap(), ClassPredicate::KLaminar(2)),
            ExclusionReport::InClass
        );
        assert!(is_excluded_minor(&uniform(2, 4).unwrap(), ClassPredicate::Binary).is_excluded());
        assert!(matches!(
            is_excluded_minor(&uniform(2, 5).unwrap(), ClassPredicate::Binary),
            ExclusionReport::MinorOutside(_)
        ));
    }
}

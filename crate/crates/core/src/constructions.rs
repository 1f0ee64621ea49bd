//! Generic matroid constructors: uniform, graphic, laminar, nested transversal,
//! truncation, direct sum, parallel connection and relaxation.

use crate::error::{MatroidError, Result};
use crate::matroid::{check_labels, default_labels, Matroid, MAX_ELEMENTS};
use crate::subset::Subset;

/// `U_{r,n}`: every set of at most `r` elements is independent.
pub fn uniform(r: usize, n: usize) -> Result<Matroid> {
    if n > MAX_ELEMENTS {
        return Err(MatroidError::TooManyElements(n));
    }
    if r > n {
        return Err(MatroidError::InvalidParameter(format!(
            "uniform rank {r} exceeds {n} elements"
        )));
    }
    Matroid::from_rank_fn(default_labels(n), |s| s.len().min(r))
}

/// A graph with labelled edges; loops and parallel edges are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    labels: Vec<String>,
}

impl Multigraph {
    pub fn new(vertex_count: usize) -> Self {
        Multigraph {
            vertex_count,
            edges: Vec::new(),
            labels: Vec::new(),
        }
    }

    /// Edges labelled `e0, e1, ..` in the given order.
    pub fn with_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Multigraph::new(vertex_count);
        for (i, &(u, v)) in edges.iter().enumerate() {
            g.add_edge(format!("e{i}"), u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, label: impl Into<String>, u: usize, v: usize) -> Result<()> {
        if u >= self.vertex_count || v >= self.vertex_count {
            return Err(MatroidError::BadVertex(u, v, self.vertex_count));
        }
        self.edges.push((u, v));
        self.labels.push(label.into());
        Ok(())
    }

    /// Adds a path of `len` fresh edges from `from` to `to`, creating
    /// `len - 1` new internal vertices. Labels are `{prefix}1..{prefix}len`.
    pub fn add_path(&mut self, prefix: &str, from: usize, to: usize, len: usize) -> Result<()> {
        assert!(len >= 1);
        let mut prev = from;
        for i in 1..=len {
            let next = if i == len {
                to
            } else {
                self.vertex_count += 1;
                self.vertex_count - 1
            };
            self.add_edge(format!("{prefix}{i}"), prev, next)?;
            prev = next;
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(len: usize) -> Self {
        DisjointSets {
            parent: (0..len).collect(),
        }
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    /// Returns false when `i` and `j` were already joined.
    fn union(&mut self, i: usize, j: usize) -> bool {
        let (a, b) = (self.find(i), self.find(j));
        if a == b {
            return false;
        }
        self.parent[a] = b;
        true
    }
}

/// The cycle matroid: an edge set's rank is the size of a spanning forest of it.
pub fn cycle_matroid(g: &Multigraph) -> Result<Matroid> {
    check_labels(&g.labels)?;
    let edges = &g.edges;
    Matroid::from_rank_fn(g.labels.clone(), |s| {
        let mut dsu = DisjointSets::new(g.vertex_count);
        s.elements()
            .filter(|&e| dsu.union(edges[e].0, edges[e].1))
            .count()
    })
}

/// A laminar family `𝒜` on a labelled ground set with capacities `c(A)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaminarCapacitySystem {
    labels: Vec<String>,
    family: Vec<(Subset, usize)>,
    // members by (size, index), and each member's immediate container
    order: Vec<usize>,
    parent: Vec<Option<usize>>,
}

impl LaminarCapacitySystem {
    pub fn new(labels: Vec<String>, family: Vec<(Subset, usize)>) -> Result<Self> {
        check_labels(&labels)?;
        for (i, &(a, _)) in family.iter().enumerate() {
            if !a.fits(labels.len()) {
                return Err(MatroidError::InvalidParameter(format!(
                    "capacity set {a:?} outside the ground set"
                )));
            }
            for &(b, _) in &family[..i] {
                if a.intersects(b) && a.is_incomparable_with(b) {
                    return Err(MatroidError::NotLaminar(b, a));
                }
            }
        }
        let mut order: Vec<usize> = (0..family.len()).collect();
        order.sort_by_key(|&i| (family[i].0.len(), i));
        let mut position = vec![0; family.len()];
        for (pos, &i) in order.iter().enumerate() {
            position[i] = pos;
        }
        let parent = (0..family.len())
            .map(|i| {
                order
                    .iter()
                    .copied()
                    .filter(|&j| position[j] > position[i] && family[i].0.is_subset_of(family[j].0))
                    .min_by_key(|&j| position[j])
            })
            .collect();
        Ok(LaminarCapacitySystem {
            labels,
            family,
            order,
            parent,
        })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn family(&self) -> &[(Subset, usize)] {
        &self.family
    }

    /// Size of a largest `I ⊆ x` with `|I ∩ A| <= c(A)` for every member,
    /// computed bottom-up over the containment forest.
    pub fn rank(&self, x: Subset) -> usize {
        let fam = &self.family;
        let mut value = vec![0usize; fam.len()];
        let mut covered = vec![0usize; fam.len()];
        let mut child_value = vec![0usize; fam.len()];
        let mut top_covered = 0;
        let mut top_value = 0;
        for &i in &self.order {
            let (a, cap) = fam[i];
            let here = (x & a).len();
            value[i] = cap.min(here - covered[i] + child_value[i]);
            match self.parent[i] {
                Some(p) => {
                    covered[p] += here;
                    child_value[p] += value[i];
                }
                None => {
                    top_covered += here;
                    top_value += value[i];
                }
            }
        }
        x.len() - top_covered + top_value
    }
}

/// `M(E, 𝒜, c)`: independent sets are those meeting each member `A` in at
/// most `c(A)` elements.
pub fn laminar_matroid(system: &LaminarCapacitySystem) -> Result<Matroid> {
    Matroid::from_rank_fn(system.labels.clone(), |x| system.rank(x))
}

/// A transversal presentation `B_1 ⊆ B_2 ⊆ .. ⊆ B_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NestedPresentation {
    labels: Vec<String>,
    chain: Vec<Subset>,
}

impl NestedPresentation {
    pub fn new(labels: Vec<String>, chain: Vec<Subset>) -> Result<Self> {
        check_labels(&labels)?;
        for (i, b) in chain.iter().enumerate() {
            if !b.fits(labels.len()) {
                return Err(MatroidError::InvalidParameter(format!(
                    "block {b:?} outside the ground set"
                )));
            }
            if i > 0 && !chain[i - 1].is_subset_of(*b) {
                return Err(MatroidError::NotAChain(i - 1, i));
            }
        }
        Ok(NestedPresentation { labels, chain })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn chain(&self) -> &[Subset] {
        &self.chain
    }

    /// Maximum matching between the elements of `x` and the blocks.
    pub fn rank(&self, x: Subset) -> usize {
        let mut block_match: Vec<Option<usize>> = vec![None; self.chain.len()];
        let mut size = 0;
        for e in x.elements() {
            let mut seen = vec![false; self.chain.len()];
            if self.augment(e, &mut seen, &mut block_match) {
                size += 1;
            }
        }
        size
    }

    fn augment(&self, e: usize, seen: &mut [bool], block_match: &mut [Option<usize>]) -> bool {
        for (b, block) in self.chain.iter().enumerate() {
            if !block.contains(e) || seen[b] {
                continue;
            }
            seen[b] = true;
            let free = match block_match[b] {
                None => true,
                Some(other) => self.augment(other, seen, block_match),
            };
            if free {
                block_match[b] = Some(e);
                return true;
            }
        }
        false
    }
}

/// The transversal matroid of a nested presentation.
pub fn transversal_matroid(presentation: &NestedPresentation) -> Result<Matroid> {
    Matroid::from_rank_fn(presentation.labels.clone(), |x| presentation.rank(x))
}

/// Caps every rank at `t`.
pub fn truncate(m: &Matroid, t: usize) -> Result<Matroid> {
    if t > m.full_rank() {
        return Err(MatroidError::InvalidParameter(format!(
            "truncation rank {t} exceeds rank {}",
            m.full_rank()
        )));
    }
    Matroid::from_rank_fn(m.labels().to_vec(), |s| m.rank(s).min(t))
}

/// Appends `extra` to `base`, priming any label that would collide.
fn merge_labels(base: &[String], extra: &[String]) -> Vec<String> {
    let mut out = base.to_vec();
    for l in extra {
        let mut name = l.clone();
        while out.contains(&name) {
            name.push('\'');
        }
        out.push(name);
    }
    out
}

/// `M1 ⊕ M2` on the elements of `M1` followed by those of `M2`.
pub fn direct_sum(m1: &Matroid, m2: &Matroid) -> Result<Matroid> {
    let n1 = m1.n();
    if n1 + m2.n() > MAX_ELEMENTS {
        return Err(MatroidError::TooManyElements(n1 + m2.n()));
    }
    let labels = merge_labels(m1.labels(), m2.labels());
    let low = m1.ground();
    Matroid::from_rank_fn(labels, |s| m1.rank(s & low) + m2.rank(Subset(s.0 >> n1)))
}

/// Parallel connection of `m1` and `m2` across basepoints `p1` and `p2`.
///
/// The result has the elements of `m1` (with `p1` standing for the shared
/// basepoint) followed by those of `m2` other than `p2`. Its circuits are the
/// circuits of both parts together with `(C1 - p) ∪ (C2 - p)` for circuits
/// `C1`, `C2` through the basepoint.
pub fn parallel_connection(m1: &Matroid, p1: usize, m2: &Matroid, p2: usize) -> Result<Matroid> {
    let (n1, n2) = (m1.n(), m2.n());
    if n1 + n2 - 1 > MAX_ELEMENTS {
        return Err(MatroidError::TooManyElements(n1 + n2 - 1));
    }
    for (m, p) in [(m1, p1), (m2, p2)] {
        if p >= m.n() {
            return Err(MatroidError::InvalidParameter(format!("basepoint index {p} out of range")));
        }
        if m.loops().contains(p) || m.coloops().contains(p) {
            return Err(MatroidError::BadBasepoint(m.label(p).to_string()));
        }
    }
    let map2 = |e: usize| -> usize {
        match e.cmp(&p2) {
            std::cmp::Ordering::Equal => p1,
            std::cmp::Ordering::Less => n1 + e,
            std::cmp::Ordering::Greater => n1 + e - 1,
        }
    };
    let lift2 = |s: Subset| Subset::from_elements(s.elements().map(map2));
    let rest2: Vec<String> = (0..n2)
        .filter(|&e| e != p2)
        .map(|e| m2.label(e).to_string())
        .collect();
    let labels = merge_labels(m1.labels(), &rest2);

    let mut circuits: Vec<Subset> = m1.circuits().iter().copied().collect();
    circuits.extend(m2.circuits().iter().map(|&c| lift2(c)));
    for &c1 in m1.circuits().iter().filter(|c| c.contains(p1)) {
        for &c2 in m2.circuits().iter().filter(|c| c.contains(p2)) {
            circuits.push((c1 | lift2(c2)).without(p1));
        }
    }
    Matroid::from_circuits(labels, &circuits)
}

/// Turns the circuit-hyperplane `x` into a basis.
pub fn relax_circuit_hyperplane(m: &Matroid, x: Subset) -> Result<Matroid> {
    if !x.fits(m.n()) || !m.is_circuit_hyperplane(x) {
        return Err(MatroidError::NotCircuitHyperplane(x));
    }
    Matroid::from_rank_fn(m.labels().to_vec(), |s| {
        if s == x {
            x.len()
        } else {
            m.rank(s)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Matroid {
        cycle_matroid(&Multigraph::with_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()).unwrap()
    }

    #[test]
    fn uniform_bounds() {
        assert_eq!(uniform(2, 4).unwrap().circuits().len(), 4);
        assert!(uniform(3, 3).unwrap().circuits().is_empty());
        assert!(uniform(5, 4).is_err());
        assert!(matches!(uniform(2, 17), Err(MatroidError::TooManyElements(17))));
        let u57 = uniform(5, 7).unwrap();
        assert_eq!((u57.n(), u57.full_rank()), (7, 5));
    }

    #[test]
    fn small_graphs() {
        assert_eq!(triangle(), uniform(2, 3).unwrap());
        let parallel = cycle_matroid(&Multigraph::with_edges(2, &[(0, 1), (0, 1)]).unwrap()).unwrap();
        assert_eq!(parallel, uniform(1, 2).unwrap());
        let with_loop = cycle_matroid(&Multigraph::with_edges(1, &[(0, 0)]).unwrap()).unwrap();
        assert_eq!(with_loop.loops(), Subset(1));
        assert!(Multigraph::with_edges(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn laminar_degenerate_families() {
        let labels = default_labels(5);
        let whole = LaminarCapacitySystem::new(labels.clone(), vec![(Subset::full(5), 2)]).unwrap();
        assert_eq!(laminar_matroid(&whole).unwrap(), uniform(2, 5).unwrap());
        let none = LaminarCapacitySystem::new(labels.clone(), vec![]).unwrap();
        assert_eq!(laminar_matroid(&none).unwrap(), uniform(5, 5).unwrap());
        let crossing = LaminarCapacitySystem::new(labels, vec![(Subset(0b011), 1), (Subset(0b110), 1)]);
        assert!(matches!(crossing, Err(MatroidError::NotLaminar(..))));
    }

    #[test]
    fn laminar_two_level_example() {
        // {a,b} cap 1 inside {a,b,c,d} cap 2, e free
        let labels: Vec<String> = "a b c d e".split(' ').map(String::from).collect();
        let s = LaminarCapacitySystem::new(labels, vec![(Subset(0b00011), 1), (Subset(0b01111), 2)]).unwrap();
        let m = laminar_matroid(&s).unwrap();
        assert_eq!(m.full_rank(), 3);
        assert!(m.circuits().contains(Subset(0b00011)));
        // three of {a|b, c, d} exceed capacity 2
        assert!(m.circuits().contains(Subset(0b01101)));
        assert!(m.circuits().contains(Subset(0b01100 | 0b00010)));
        assert!(m.coloops().contains(4));
    }

    #[test]
    fn transversal_basics() {
        let labels = default_labels(4);
        let single = NestedPresentation::new(labels.clone(), vec![Subset::full(4)]).unwrap();
        assert_eq!(transversal_matroid(&single).unwrap(), uniform(1, 4).unwrap());
        let full = NestedPresentation::new(labels.clone(), vec![Subset::full(4); 4]).unwrap();
        assert_eq!(transversal_matroid(&full).unwrap(), uniform(4, 4).unwrap());
        let bad = NestedPresentation::new(labels, vec![Subset(0b11), Subset(0b101)]);
        assert_eq!(bad, Err(MatroidError::NotAChain(0, 1)));
    }

    #[test]
    fn truncation() {
        let u34 = uniform(3, 4).unwrap();
        assert_eq!(truncate(&u34, 3).unwrap(), u34);
        assert_eq!(truncate(&u34, 2).unwrap(), uniform(2, 4).unwrap());
        assert!(truncate(&u34, 4).is_err());
    }

    #[test]
    fn direct_sums() {
        let u01 = uniform(0, 1).unwrap();
        let u22 = uniform(2, 2).unwrap();
        let s = direct_sum(&u01, &u22).unwrap();
        assert_eq!(s.labels(), &["e0", "e0'", "e1"]);
        assert_eq!(s.full_rank(), 2);
        assert_eq!(s.loops(), Subset(1));
        let m = triangle();
        assert_eq!(direct_sum(&m, &uniform(0, 0).unwrap()).unwrap(), m);
        let pp = direct_sum(&uniform(1, 2).unwrap(), &uniform(1, 2).unwrap()).unwrap();
        assert_eq!(pp.full_rank(), 2);
        assert_eq!(pp.circuits().as_slice(), &[Subset(0b0011), Subset(0b1100)]);
    }

    #[test]
    fn parallel_connection_of_triangles() {
        let m = parallel_connection(&triangle(), 0, &triangle(), 0).unwrap();
        assert_eq!((m.n(), m.full_rank()), (5, 3));
        assert_eq!(m.circuits().len(), 3);
        // basepoint must not be a coloop
        let free = uniform(1, 1).unwrap();
        assert!(matches!(
            parallel_connection(&free, 0, &triangle(), 0),
            Err(MatroidError::BadBasepoint(_))
        ));
    }

    #[test]
    fn parallel_connection_with_parallel_pair_adds_parallel_element() {
        let m = triangle();
        let p = parallel_connection(&uniform(1, 2).unwrap(), 0, &m, 1).unwrap();
        // elements: e0 (basepoint, stands for m's e1), e1 (new), then m's e0, e2
        assert_eq!(p.n(), 4);
        assert!(p.circuits().contains(Subset(0b0011)));
        assert_eq!(p.full_rank(), 2);
    }

    #[test]
    fn relaxation_needs_circuit_hyperplane() {
        assert!(matches!(
            relax_circuit_hyperplane(&uniform(2, 4).unwrap(), Subset(0b0111)),
            Err(MatroidError::NotCircuitHyperplane(_))
        ));
        let r = relax_circuit_hyperplane(&uniform(2, 3).unwrap(), Subset(0b111));
        assert!(r.is_err());
        // two disjoint parallel pairs: each pair is a circuit-hyperplane
        let pp = direct_sum(&uniform(1, 2).unwrap(), &uniform(1, 2).unwrap()).unwrap();
        let relaxed = relax_circuit_hyperplane(&pp, Subset(0b0011)).unwrap();
        assert_eq!(relaxed.rank(Subset(0b0011)), 2);
        assert_eq!(relaxed.circuits().len(), 3);
    }
}

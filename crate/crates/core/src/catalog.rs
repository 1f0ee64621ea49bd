//! Named matroids and parametric families.

use std::fmt;

use crate::constructions::{
    cycle_matroid, direct_sum, parallel_connection, relax_circuit_hyperplane, truncate, uniform,
    Multigraph,
};
use crate::cyclic::{from_cyclic_flats, CyclicFlatFamily};
use crate::error::{MatroidError, Result};
use crate::matroid::{Matroid, MAX_ELEMENTS};
use crate::subset::Subset;

/// Catalog entries. Parametric families carry their `(n, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Truncation to rank `n` of the theta graph whose three `u`–`v` paths
    /// have lengths `k`, `n-k`, `n-k`. Edge labels `p*`, `x*`, `y*`.
    Mn { n: usize, k: usize },
    /// Truncation to rank `n` of a `(k+2)`-circuit `c1..` with `(n-k)`-circuits
    /// attached at `c1` (new edges `s*`) and `c2` (new edges `t*`).
    /// Contracting the last central edge `c{k+2}` gives `P_{n-1}(k)`.
    Nn { n: usize, k: usize },
    /// Truncation to rank `n` of a `(k+1)`-circuit with `(n-k+1)`-circuits
    /// attached at `c1` and `c2`.
    Pn { n: usize, k: usize },
    MK23,
    MK23Minus,
    MK4,
    F7,
    F7Star,
    MStarK33,
    Wheel4RimDel,
    /// The candidate on `A ∪ B ∪ C ∪ {e}` described by [`notk_cyclic_flats`].
    /// That table is not a matroid, so `build` reports the violated axiom.
    NotkExample { k: usize },
    /// A `(k+1)`-circuit with triangles attached at two of its elements.
    Sec1PCExample { k: usize },
}

impl Family {
    /// Resolves a catalog identifier and its parameters, checking ranges.
    pub fn parse(id: &str, n: Option<usize>, k: Option<usize>) -> Result<Family> {
        let need = |p: Option<usize>, name: &str| {
            p.ok_or_else(|| MatroidError::InvalidParameter(format!("{id} needs --{name}")))
        };
        let fam = match id {
            "Mn" => Family::Mn { n: need(n, "n")?, k: need(k, "k")? },
            "Nn" => Family::Nn { n: need(n, "n")?, k: need(k, "k")? },
            "Pn" => Family::Pn { n: need(n, "n")?, k: need(k, "k")? },
            "MK23" => Family::MK23,
            "MK23minus" => Family::MK23Minus,
            "MK4" => Family::MK4,
            "F7" => Family::F7,
            "F7star" => Family::F7Star,
            "MstarK33" => Family::MStarK33,
            "Wheel4rimdel" => Family::Wheel4RimDel,
            "NotkExample" => Family::NotkExample { k: need(k, "k")? },
            "Sec1PCExample" => Family::Sec1PCExample { k: need(k, "k")? },
            other => {
                return Err(MatroidError::InvalidParameter(format!("unknown family `{other}`")))
            }
        };
        fam.check()?;
        Ok(fam)
    }

    pub fn id(&self) -> &'static str {
        match self {
            Family::Mn { .. } => "Mn",
            Family::Nn { .. } => "Nn",
            Family::Pn { .. } => "Pn",
            Family::MK23 => "MK23",
            Family::MK23Minus => "MK23minus",
            Family::MK4 => "MK4",
            Family::F7 => "F7",
            Family::F7Star => "F7star",
            Family::MStarK33 => "MstarK33",
            Family::Wheel4RimDel => "Wheel4rimdel",
            Family::NotkExample { .. } => "NotkExample",
            Family::Sec1PCExample { .. } => "Sec1PCExample",
        }
    }

    /// Number of elements, without building the matroid.
    pub fn size(&self) -> usize {
        match *self {
            Family::Mn { n, k } => 2 * n - k,
            Family::Nn { n, k } => 2 * n - k,
            Family::Pn { n, k } => 2 * n - k + 1,
            Family::MK23 | Family::MK23Minus | Family::MK4 => 6,
            Family::F7 | Family::F7Star | Family::Wheel4RimDel => 7,
            Family::MStarK33 => 9,
            Family::NotkExample { k } => 3 * k - 2,
            Family::Sec1PCExample { k } => k + 5,
        }
    }

    fn check(&self) -> Result<()> {
        let bad = |why: &str| Err(MatroidError::InvalidParameter(format!("{self}: {why}")));
        match *self {
            Family::Mn { n, k } if n < k + 2 => return bad("needs n >= k + 2"),
            Family::Nn { n, k } if k < 2 || n < k + 3 => return bad("needs n >= k + 3 >= 5"),
            Family::Pn { n, k } if k < 2 || n < k + 2 => return bad("needs n >= k + 2 >= 4"),
            Family::NotkExample { k } if k < 4 => return bad("needs k >= 4"),
            Family::Sec1PCExample { k } if k < 2 => return bad("needs k >= 2"),
            _ => {}
        }
        if self.size() > MAX_ELEMENTS {
            return Err(MatroidError::TooManyElements(self.size()));
        }
        Ok(())
    }

    pub fn build(&self) -> Result<Matroid> {
        self.check()?;
        match *self {
            Family::Mn { n, k } => theta_truncation(n, k),
            Family::Nn { n, k } => attached_circuits(n, k + 2, n - k - 1),
            Family::Pn { n, k } => attached_circuits(n, k + 1, n - k),
            Family::MK23 => cycle_matroid(&k23()),
            Family::MK23Minus => {
                let m = cycle_matroid(&k23())?;
                let hyperplane = m.subset(&["x1", "y1", "x2", "y2"])?;
                relax_circuit_hyperplane(&m, hyperplane)
            }
            Family::MK4 => cycle_matroid(&complete_graph(4)),
            Family::F7 => fano(),
            Family::F7Star => Ok(fano()?.dual()),
            Family::MStarK33 => Ok(cycle_matroid(&k33())?.dual()),
            Family::Wheel4RimDel => {
                let mut g = Multigraph::new(5);
                for i in 1..=4 {
                    g.add_edge(format!("s{i}"), 0, i)?;
                }
                for i in 1..=3 {
                    g.add_edge(format!("r{i}"), i, i + 1)?;
                }
                cycle_matroid(&g)
            }
            Family::NotkExample { k } => from_cyclic_flats(&notk_cyclic_flats(k)),
            Family::Sec1PCExample { k } => {
                let circuit = uniform(k, k + 1)?.relabeled((1..=k + 1).map(|i| format!("c{i}")).collect())?;
                let tri = |i: usize| {
                    uniform(2, 3)?.relabeled(vec![format!("q{i}"), format!("s{i}"), format!("t{i}")])
                };
                let once = parallel_connection(&circuit, 0, &tri(1)?, 0)?;
                parallel_connection(&once, 1, &tri(2)?, 0)
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Mn { n, k } => write!(f, "M{n}({k})"),
            Family::Nn { n, k } => write!(f, "N{n}({k})"),
            Family::Pn { n, k } => write!(f, "P{n}({k})"),
            Family::NotkExample { k } => write!(f, "NotkExample({k})"),
            Family::Sec1PCExample { k } => write!(f, "Sec1PCExample({k})"),
            _ => f.write_str(self.id()),
        }
    }
}

/// Builds a catalog matroid by identifier.
pub fn named_matroid(id: &str, n: Option<usize>, k: Option<usize>) -> Result<Matroid> {
    Family::parse(id, n, k)?.build()
}

/// Every catalog instance with at most `max_elements` elements, in a fixed
/// order: the fixed matroids, then each parametric family by `(k, n)`.
pub fn catalog(max_elements: usize) -> Vec<Family> {
    let mut out = vec![
        Family::MK23,
        Family::MK23Minus,
        Family::MK4,
        Family::F7,
        Family::F7Star,
        Family::Wheel4RimDel,
        Family::MStarK33,
    ];
    for k in 0..MAX_ELEMENTS {
        for n in (k + 2).max(2)..=MAX_ELEMENTS {
            out.push(Family::Mn { n, k });
        }
    }
    for k in 2..MAX_ELEMENTS {
        for n in k + 3..=MAX_ELEMENTS {
            out.push(Family::Nn { n, k });
        }
        for n in k + 2..=MAX_ELEMENTS {
            out.push(Family::Pn { n, k });
        }
    }
    for k in 2..=11 {
        out.push(Family::Sec1PCExample { k });
    }
    out.retain(|f| f.size() <= max_elements.min(MAX_ELEMENTS) && f.check().is_ok());
    out
}

fn theta_truncation(n: usize, k: usize) -> Result<Matroid> {
    if k == 0 {
        let mut x = Multigraph::new(1);
        x.add_path("x", 0, 0, n)?;
        let mut y = Multigraph::new(1);
        y.add_path("y", 0, 0, n)?;
        return truncate(&direct_sum(&cycle_matroid(&x)?, &cycle_matroid(&y)?)?, n);
    }
    let mut g = Multigraph::new(2);
    g.add_path("p", 0, 1, k)?;
    g.add_path("x", 0, 1, n - k)?;
    g.add_path("y", 0, 1, n - k)?;
    truncate(&cycle_matroid(&g)?, n)
}

/// A `central`-edge cycle `c1..` with paths of `path_len` edges doubling
/// `c1` (labels `s*`) and `c2` (labels `t*`), truncated to rank `n`.
fn attached_circuits(n: usize, central: usize, path_len: usize) -> Result<Matroid> {
    let mut g = Multigraph::new(central);
    for i in 1..=central {
        g.add_edge(format!("c{i}"), i - 1, i % central)?;
    }
    g.add_path("s", 0, 1, path_len)?;
    g.add_path("t", 1, 2, path_len)?;
    truncate(&cycle_matroid(&g)?, n)
}

/// `K_{2,3}` with edges `x_i` from the first hub and `y_i` from the second.
fn k23() -> Multigraph {
    let mut g = Multigraph::new(5);
    for i in 1..=3 {
        g.add_edge(format!("x{i}"), 0, i + 1).unwrap();
    }
    for i in 1..=3 {
        g.add_edge(format!("y{i}"), 1, i + 1).unwrap();
    }
    g
}

fn k33() -> Multigraph {
    let mut g = Multigraph::new(6);
    for i in 0..3 {
        for j in 0..3 {
            g.add_edge(format!("u{}v{}", i + 1, j + 1), i, 3 + j).unwrap();
        }
    }
    g
}

pub(crate) fn complete_graph(v: usize) -> Multigraph {
    let mut g = Multigraph::new(v);
    for i in 0..v {
        for j in i + 1..v {
            g.add_edge(format!("e{i}{j}"), i, j).unwrap();
        }
    }
    g
}

/// Points `1..7`; lines are the translates of `{1, 2, 4}` mod 7.
fn fano() -> Result<Matroid> {
    let labels = (1..=7).map(|i| i.to_string()).collect();
    let lines: Vec<Subset> = (0..7)
        .map(|i| Subset::from_elements([i, (i + 1) % 7, (i + 3) % 7]))
        .collect();
    let mut circuits = lines.clone();
    circuits.extend(lines.iter().map(|&l| Subset::full(7) - l));
    Matroid::from_circuits(labels, &circuits)
}

/// The cyclic-flat table over `A = {a1..a(k-1)}`, `B`, `C` likewise and
/// `D = {e, a1, b1, c1}`:
///
/// | rank | members |
/// |------|---------|
/// | 0 | ∅ |
/// | k | C △ D, A △ D, B △ D |
/// | 2k−3 | A ∪ C, B ∪ C |
/// | 2k−2 | A ∪ C ∪ D, B ∪ C ∪ D |
/// | 2k−1 | E |
///
/// Elements are ordered `a1.., b1.., c1.., e`.
///
/// The table is a lattice obeying Z1 and Z2 but fails Z3 for every `k`:
/// `A △ D` and `B △ D` are `(k+1)`-sets of rank `k` meeting in `{c1, e}`,
/// so their union has rank at most `2k - 2`, yet the only member above both
/// is `E`. Building [`Family::NotkExample`] therefore returns the Z3 error.
pub fn notk_cyclic_flats(k: usize) -> CyclicFlatFamily {
    assert!(k >= 2);
    let m = k - 1;
    let mut labels = Vec::new();
    for p in ["a", "b", "c"] {
        labels.extend((1..=m).map(|i| format!("{p}{i}")));
    }
    labels.push("e".to_string());
    let block = |j: usize| Subset::from_elements(j * m..(j + 1) * m);
    let (a, b, c) = (block(0), block(1), block(2));
    let d = Subset::from_elements([3 * m, 0, m, 2 * m]);
    let (ca, cb) = (a | c, b | c);
    let entries = vec![
        (Subset::EMPTY, 0),
        (c ^ d, k),
        (a ^ d, k),
        (b ^ d, k),
        (ca, 2 * k - 3),
        (cb, 2 * k - 3),
        (ca | d, 2 * k - 2),
        (cb | d, 2 * k - 2),
        (Subset::full(3 * m + 1), 2 * k - 1),
    ];
    CyclicFlatFamily::new(labels, entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::ZViolation;

    #[test]
    fn sizes_match_built_matroids() {
        for fam in catalog(10) {
            let m = fam.build().unwrap();
            assert_eq!(m.n(), fam.size(), "{fam}");
        }
    }

    #[test]
    fn parametric_ranks() {
        for fam in catalog(12) {
            let m = fam.build().unwrap();
            if let Family::Mn { n, .. } | Family::Nn { n, .. } | Family::Pn { n, .. } = fam {
                assert_eq!(m.full_rank(), n, "{fam}");
            }
        }
    }

    #[test]
    fn parameter_ranges_enforced() {
        assert!(named_matroid("Mn", Some(3), Some(2)).is_err());
        assert!(named_matroid("Nn", Some(4), Some(1)).is_err());
        assert!(named_matroid("Nn", Some(4), Some(2)).is_err());
        assert!(named_matroid("Pn", Some(3), Some(2)).is_err());
        assert!(named_matroid("NotkExample", None, Some(3)).is_err());
        assert!(named_matroid("NotkExample", None, Some(7)).is_err());
        assert!(named_matroid("Mn", Some(9), Some(1)).is_err());
        assert!(named_matroid("Mn", Some(4), None).is_err());
        assert!(named_matroid("Bogus", None, None).is_err());
    }

    #[test]
    fn k23_basics() {
        let m = named_matroid("MK23", None, None).unwrap();
        assert_eq!((m.n(), m.full_rank()), (6, 4));
        assert_eq!(m.circuits().len(), 3);
        assert!(m.circuits().iter().all(|c| c.len() == 4));
        let minus = named_matroid("MK23minus", None, None).unwrap();
        assert_eq!(minus.non_spanning_circuits().len(), 2);
    }

    #[test]
    fn fano_and_dual() {
        let f7 = named_matroid("F7", None, None).unwrap();
        assert_eq!((f7.n(), f7.full_rank()), (7, 3));
        assert_eq!(f7.circuits().len(), 14);
        let f7s = named_matroid("F7star", None, None).unwrap();
        assert_eq!((f7s.n(), f7s.full_rank()), (7, 4));
        // circuits of the dual are complements of hyperplanes of F7
        let mut cocircuits: Vec<Subset> = f7.hyperplanes().iter().map(|&h| f7.ground() - h).collect();
        cocircuits.sort_by_key(|s| (s.len(), s.0));
        assert_eq!(f7s.circuits().as_slice(), cocircuits.as_slice());
        assert_eq!(cocircuits.len(), 7);
    }

    #[test]
    fn notk_table_fails_z3_at_the_two_outer_circuits() {
        for k in 4..=5 {
            let z = notk_cyclic_flats(k);
            assert_eq!(z.n(), 3 * k - 2);
            let ranks: Vec<usize> = z.entries().iter().map(|e| e.1).collect();
            let (r1, r2, r3) = (2 * k - 3, 2 * k - 2, 2 * k - 1);
            assert_eq!(ranks, vec![0, k, k, k, r1, r1, r2, r2, r3]);
            let m = k - 1;
            let d = Subset::from_elements([3 * m, 0, m, 2 * m]);
            let a_d = Subset::from_elements(0..m) ^ d;
            let b_d = Subset::from_elements(m..2 * m) ^ d;
            assert_eq!(a_d & b_d, Subset::from_elements([2 * m, 3 * m]));
            assert_eq!(z.join(a_d, b_d), Some(Subset::full(3 * m + 1)));
            match z.validate() {
                Err(ZViolation::Z3 { first, second }) => {
                    assert_eq!(first | second, a_d | b_d, "k = {k}");
                    assert_eq!(first & second, a_d & b_d, "k = {k}");
                }
                other => panic!("k = {k}: {other:?}"),
            }
        }
        // at k = 3 the top step from C_a ∪ D to E already breaks Z2
        assert!(matches!(notk_cyclic_flats(3).validate(), Err(ZViolation::Z2 { .. })));
        assert!(matches!(
            named_matroid("NotkExample", None, Some(4)),
            Err(MatroidError::CyclicFlats(ZViolation::Z3 { .. }))
        ));
    }

    #[test]
    fn section_one_example_shape() {
        let m = named_matroid("Sec1PCExample", None, Some(2)).unwrap();
        assert_eq!((m.n(), m.full_rank()), (7, 4));
        assert_eq!(m.labels(), &["c1", "c2", "c3", "s1", "t1", "s2", "t2"]);
    }

    #[test]
    fn wheel_minus_rim() {
        let m = named_matroid("Wheel4rimdel", None, None).unwrap();
        assert_eq!((m.n(), m.full_rank()), (7, 4));
    }
}

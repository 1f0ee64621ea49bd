//! Property tests over randomly generated matroids.

use lamina::catalog::Family;
use lamina::classes::{
    is_k_closure_laminar, is_k_closure_laminar_circuit_form, is_k_closure_laminar_non_spanning, is_k_laminar,
    is_k_laminar_non_spanning, is_laminar, is_nested, is_paving,
};
use lamina::constructions::{cycle_matroid, Multigraph};
use lamina::corpus::{generate_corpus, random_laminar, random_multigraph, random_nested, random_sparse_paving, CorpusSpec};
use lamina::cyclic::{circuits_from_cyclic_flats, from_cyclic_flats};
use lamina::io::{parse_matroid, serialize_cyclic_flats, serialize_matroid};
use lamina::matroid::{validate_rank_axioms, Matroid};
use lamina::minors::{contract, delete, has_minor, is_isomorphic, minor, MinorSpec};
use lamina::subset::Subset;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A matroid from one of the generators, or a random minor of a named one.
fn arb_matroid(max: usize) -> impl Strategy<Value = Matroid> {
    (any::<u64>(), 0..5u8).prop_map(move |(seed, kind)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        match kind {
            0 => random_laminar(&mut rng, max),
            1 => random_nested(&mut rng, max),
            2 => random_multigraph(&mut rng, max),
            3 => random_sparse_paving(&mut rng, max),
            _ => {
                let named = lamina::catalog::catalog(max.max(6));
                let f = named[rng.gen_range(0..named.len())];
                let m = f.build().unwrap();
                let mut spec = MinorSpec::default();
                for e in 0..m.n() {
                    match rng.gen_range(0..6) {
                        0 => spec.delete = spec.delete.with(e),
                        1 => spec.contract = spec.contract.with(e),
                        _ => {}
                    }
                }
                minor(&m, &spec)
            }
        }
    })
}

fn arb_subset_of(m: &Matroid, bits: u32) -> Subset {
    Subset(bits) & m.ground()
}

fn top_k(m: &Matroid) -> usize {
    m.full_rank() + 1
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn constructor_output_satisfies_the_rank_axioms(m in arb_matroid(9)) {
        prop_assert!(validate_rank_axioms(m.n(), m.rank_table()).is_ok());
    }

    #[test]
    fn closure_is_a_closure_operator(m in arb_matroid(9), bits in any::<u32>()) {
        let a = arb_subset_of(&m, bits);
        let cl = m.closure(a);
        prop_assert!(a.is_subset_of(cl));
        prop_assert_eq!(m.closure(cl), cl);
        prop_assert_eq!(m.rank(cl), m.rank(a));
    }

    #[test]
    fn circuits_are_minimal_dependent(m in arb_matroid(9)) {
        for &c in m.circuits().iter() {
            prop_assert!(!m.is_independent(c));
            for e in c.elements() {
                prop_assert!(m.is_independent(c.without(e)));
            }
        }
    }

    #[test]
    fn flats_absorb_closures_of_their_circuits(m in arb_matroid(8)) {
        for f in m.flats().iter() {
            for &c in m.circuits().iter().filter(|c| c.is_subset_of(*f)) {
                prop_assert!(m.closure(c).is_subset_of(*f));
            }
        }
    }

    #[test]
    fn circuits_leave_a_closure_by_two_or_more(m in arb_matroid(9)) {
        let circuits = m.circuits().as_slice();
        for &c in circuits {
            let cl = m.closure(c);
            for &d in circuits.iter().filter(|&&d| d != c && !d.is_subset_of(cl)) {
                prop_assert!((d - cl).len() >= 2);
            }
        }
    }

    #[test]
    fn cyclic_flats_form_a_valid_lattice_and_round_trip(m in arb_matroid(9)) {
        let z = m.cyclic_flats();
        prop_assert!(z.validate().is_ok());
        prop_assert_eq!(&from_cyclic_flats(&z).unwrap(), &m);
        prop_assert_eq!(&circuits_from_cyclic_flats(&z).unwrap(), m.circuits());
    }

    #[test]
    fn dual_is_an_involution(m in arb_matroid(9)) {
        let d = m.dual();
        prop_assert_eq!(d.full_rank(), m.n() - m.full_rank());
        prop_assert_eq!(&d.dual(), &m);
    }

    #[test]
    fn text_format_round_trips(m in arb_matroid(9)) {
        prop_assert_eq!(&parse_matroid(&serialize_matroid(&m)).unwrap(), &m);
        prop_assert_eq!(&parse_matroid(&serialize_cyclic_flats(&m)).unwrap(), &m);
    }

    #[test]
    fn closure_laminar_forms_agree_and_imply_laminar(m in arb_matroid(8)) {
        let top = top_k(&m);
        let lam: Vec<bool> = (0..=top + 1).map(|k| is_k_laminar(&m, k).holds).collect();
        let cl: Vec<bool> = (0..=top + 1).map(|k| is_k_closure_laminar(&m, k).holds).collect();
        for k in 0..=top {
            prop_assert_eq!(cl[k], is_k_closure_laminar_circuit_form(&m, k).holds, "forms differ at k={}", k);
            prop_assert!(!cl[k] || lam[k], "closure-laminar but not laminar at k={}", k);
            prop_assert!(!cl[k] || cl[k + 1], "closure-laminar not monotone at k={}", k);
            prop_assert!(!lam[k] || lam[k + 1], "laminar not monotone at k={}", k);
            prop_assert_eq!(cl[k], is_k_closure_laminar_non_spanning(&m, k).holds);
            prop_assert_eq!(lam[k], is_k_laminar_non_spanning(&m, k).holds);
        }
        prop_assert_eq!(lam[0], is_nested(&m).holds);
        prop_assert_eq!(cl[0], is_nested(&m).holds);
        prop_assert_eq!(lam[1], is_laminar(&m).holds);
        prop_assert_eq!(cl[1], is_laminar(&m).holds);
        if m.non_spanning_circuits().len() <= 1 {
            prop_assert!(lam.iter().chain(&cl).all(|&b| b));
        }
    }

    #[test]
    fn nested_means_circuit_closures_are_nested(m in arb_matroid(9)) {
        let circuits = m.circuits().as_slice();
        let pairwise = circuits.iter().all(|&a| {
            circuits.iter().all(|&b| a.is_subset_of(m.closure(b)) || b.is_subset_of(m.closure(a)))
        });
        prop_assert_eq!(pairwise, is_nested(&m).holds);
    }

    #[test]
    fn small_rank_passes_both_predicates(m in arb_matroid(9)) {
        let r = m.full_rank();
        for k in r.saturating_sub(1)..=r + 1 {
            prop_assert!(is_k_laminar(&m, k).holds && is_k_closure_laminar(&m, k).holds);
        }
    }

    #[test]
    fn paving_matroids_do_not_separate_the_classes(seed in any::<u64>()) {
        let m = random_sparse_paving(&mut ChaCha8Rng::seed_from_u64(seed), 9);
        prop_assert!(is_paving(&m).holds);
        for k in 0..=top_k(&m) {
            prop_assert_eq!(is_k_laminar(&m, k).holds, is_k_closure_laminar(&m, k).holds);
        }
    }

    #[test]
    fn hamiltonian_closure_of_a_long_circuit_plus_one(m in arb_matroid(8)) {
        for k in 0..=m.full_rank() {
            if !is_k_laminar(&m, k).holds {
                continue;
            }
            for &c in m.circuits().iter().filter(|c| c.len() + 1 >= 2 * k) {
                let cl = m.closure(c);
                for e in (m.ground() - cl).elements() {
                    let f = m.closure(c.with(e));
                    if m.rank(f - cl) >= 2 {
                        prop_assert!(m.is_hamiltonian_flat(f).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn single_element_minors_stay_in_class(m in arb_matroid(8)) {
        for e in 0..m.n() {
            let s = Subset::singleton(e);
            for n in [delete(&m, s), contract(&m, s)] {
                for k in 0..=m.full_rank() {
                    if is_k_laminar(&m, k).holds {
                        prop_assert!(is_k_laminar(&n, k).holds);
                    }
                }
                for k in [2, 3] {
                    if is_k_closure_laminar(&m, k).holds {
                        prop_assert!(is_k_closure_laminar(&n, k).holds);
                    }
                }
            }
        }
    }

    #[test]
    fn deletion_and_contraction_commute(m in arb_matroid(9), d in any::<u32>(), c in any::<u32>()) {
        let d = arb_subset_of(&m, d);
        let c = arb_subset_of(&m, c) - d;
        let a = delete(&m, d);
        // indices shift after deletion; map `c` to the surviving positions
        let keep: Vec<usize> = (m.ground() - d).elements().collect();
        let c_after = Subset::from_elements(keep.iter().enumerate().filter(|(_, e)| c.contains(**e)).map(|(i, _)| i));
        let one = contract(&a, c_after);
        let two = minor(&m, &MinorSpec { delete: d, contract: c });
        let keep2: Vec<usize> = (m.ground() - c).elements().collect();
        let d_after = Subset::from_elements(keep2.iter().enumerate().filter(|(_, e)| d.contains(**e)).map(|(i, _)| i));
        let three = delete(&contract(&m, c), d_after);
        prop_assert_eq!(&one, &two);
        prop_assert_eq!(&two, &three);
    }

    #[test]
    fn isomorphism_is_an_equivalence(a in arb_matroid(6), perm_seed in any::<u64>()) {
        prop_assert!(is_isomorphic(&a, &a).is_some());
        let mut rng = ChaCha8Rng::seed_from_u64(perm_seed);
        let mut labels = a.labels().to_vec();
        let mut order: Vec<usize> = (0..a.n()).collect();
        for i in (1..order.len()).rev() {
            order.swap(i, rng.gen_range(0..=i));
        }
        // b is a with elements permuted, c is b permuted again
        let permute = |m: &Matroid, order: &[usize]| {
            Matroid::from_rank_fn(m.labels().to_vec(), |s| {
                m.rank(Subset::from_elements(s.elements().map(|e| order[e])))
            }).unwrap()
        };
        let b = permute(&a, &order);
        let c = permute(&b, &order);
        prop_assert!(is_isomorphic(&a, &b).is_some() && is_isomorphic(&b, &a).is_some());
        prop_assert!(is_isomorphic(&b, &c).is_some() && is_isomorphic(&a, &c).is_some());
        labels.reverse();
        prop_assert!(is_isomorphic(&a, &a.relabeled(labels).unwrap()).is_some());
    }

    #[test]
    fn minor_relation_is_reflexive_and_transitive(m in arb_matroid(7), s1 in any::<u64>(), s2 in any::<u64>()) {
        prop_assert!(has_minor(&m, &m).is_some());
        let pick = |m: &Matroid, seed: u64| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut spec = MinorSpec::default();
            for e in 0..m.n() {
                match rng.gen_range(0..4) {
                    0 => spec.delete = spec.delete.with(e),
                    1 => spec.contract = spec.contract.with(e),
                    _ => {}
                }
            }
            minor(m, &spec)
        };
        let n = pick(&m, s1);
        let p = pick(&n, s2);
        prop_assert!(has_minor(&m, &n).is_some());
        prop_assert!(has_minor(&n, &p).is_some());
        prop_assert!(has_minor(&m, &p).is_some());
    }
}

#[test]
fn p_family_is_a_contraction_of_the_next_n() {
    let mut checked = 0;
    for k in 0..=5 {
        for n in k + 2..=7 {
            let p = Family::Pn { n, k };
            let q = Family::Nn { n: n + 1, k };
            let (Ok(p), Ok(q)) = (p.build(), q.build()) else { continue };
            if q.n() > 12 {
                continue;
            }
            checked += 1;
            let found = (0..q.n()).any(|e| is_isomorphic(&contract(&q, Subset::singleton(e)), &p).is_some());
            assert!(found, "P{n}({k}) is not a contraction of N{}({k})", n + 1);
        }
    }
    assert!(checked >= 8);
}

#[test]
fn theta_graph_has_three_circuits() {
    for k in 1..=4 {
        for n in k + 2..=7 {
            let mut g = Multigraph::new(2);
            g.add_path("p", 0, 1, k).unwrap();
            g.add_path("x", 0, 1, n - k).unwrap();
            g.add_path("y", 0, 1, n - k).unwrap();
            let m = cycle_matroid(&g).unwrap();
            assert_eq!(m.circuits().len(), 3, "theta({k}, {}, {})", n - k, n - k);
        }
    }
}

#[test]
fn identical_specs_give_identical_corpora() {
    let spec = CorpusSpec::new(99, 300, 8);
    let text = |c: &[lamina::corpus::CorpusEntry]| {
        c.iter().map(|e| format!("{}\n{}", e.origin, serialize_matroid(&e.matroid))).collect::<String>()
    };
    assert_eq!(text(&generate_corpus(&spec)), text(&generate_corpus(&spec)));
}

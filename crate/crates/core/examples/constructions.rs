//! The generic constructors: uniform, graphic, laminar, nested transversal,
//! truncation, direct sum, parallel connection and relaxation.

use lamina::constructions::{
    cycle_matroid, direct_sum, laminar_matroid, parallel_connection, relax_circuit_hyperplane,
    transversal_matroid, truncate, uniform, LaminarCapacitySystem, Multigraph, NestedPresentation,
};
use lamina::matroid::default_labels;
use lamina::subset::Subset;

fn summary(name: &str, m: &lamina::matroid::Matroid) {
    println!("{name:<28} n={:<2} r={:<2} circuits={}", m.n(), m.full_rank(), m.circuits().len());
}

fn main() {
    summary("U(2,4)", &uniform(2, 4).unwrap());

    // K4 as a multigraph
    let k4 = Multigraph::with_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    summary("M(K4)", &cycle_matroid(&k4).unwrap());

    // capacities: at most 1 from {e0 e1}, at most 2 from {e0..e3}, 3 overall
    let system = LaminarCapacitySystem::new(
        default_labels(5),
        vec![(Subset::from_elements([0, 1]), 1), (Subset::from_elements(0..4), 2), (Subset::full(5), 3)],
    )
    .unwrap();
    summary("laminar capacities", &laminar_matroid(&system).unwrap());

    let chain = vec![Subset::from_elements([0, 1]), Subset::from_elements(0..4), Subset::full(5)];
    let presentation = NestedPresentation::new(default_labels(5), chain).unwrap();
    summary("nested transversal", &transversal_matroid(&presentation).unwrap());

    let c6 = Multigraph::with_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
    summary("truncated hexagon", &truncate(&cycle_matroid(&c6).unwrap(), 3).unwrap());

    let sum = direct_sum(&uniform(1, 2).unwrap(), &uniform(2, 3).unwrap()).unwrap();
    summary("U(1,2) + U(2,3)", &sum);

    let pc = parallel_connection(&uniform(2, 3).unwrap(), 0, &uniform(3, 4).unwrap(), 0).unwrap();
    summary("P(U(2,3), U(3,4))", &pc);

    // the 4-circuits of M(K23) are circuit-hyperplanes
    let k23 = lamina::catalog::named_matroid("MK23", None, None).unwrap();
    let h = k23.subset(&["x1", "y1", "x2", "y2"]).unwrap();
    summary("M(K23) with {x1 y1 x2 y2} relaxed", &relax_circuit_hyperplane(&k23, h).unwrap());
}

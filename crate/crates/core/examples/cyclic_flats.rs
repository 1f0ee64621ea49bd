//! Cyclic flats: reading them off a matroid, rebuilding the matroid from
//! them, and rejecting a family that breaks the lattice axioms.

use lamina::catalog::{named_matroid, notk_cyclic_flats};
use lamina::cyclic::{circuits_from_cyclic_flats, from_cyclic_flats};

fn main() {
    let m = named_matroid("Pn", Some(4), Some(2)).unwrap();
    let z = m.cyclic_flats();
    println!("P4(2): {} cyclic flats", z.len());
    for &(s, r) in z.entries() {
        println!("  {} rank {r}", m.format_set(s));
    }
    let rebuilt = from_cyclic_flats(&z).unwrap();
    println!("rebuilt equals original: {}", rebuilt == m);
    println!("circuits agree: {}", circuits_from_cyclic_flats(&z).unwrap() == *m.circuits());

    for k in 3..=5 {
        let table = notk_cyclic_flats(k);
        match table.validate() {
            Ok(()) => println!("NotkExample({k}) table is a lattice of cyclic flats"),
            Err(v) => println!("NotkExample({k}) table rejected: {}", v.describe(table.labels())),
        }
    }
}

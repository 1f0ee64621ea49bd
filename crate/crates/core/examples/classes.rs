//! Class predicates with their witnesses: nested, laminar, k-laminar,
//! k-closure-laminar and paving.

use lamina::catalog::named_matroid;
use lamina::classes::{decide, min_closure_laminar_k, min_laminar_k, ClassPredicate};

fn main() {
    let names = [("MK23", None, None), ("Sec1PCExample", None, Some(2)), ("Wheel4rimdel", None, None), ("F7", None, None)];
    let predicates: Vec<ClassPredicate> =
        ["nested", "laminar", "2-laminar", "2-closure-laminar", "paving"].iter().map(|s| s.parse().unwrap()).collect();
    for (id, n, k) in names {
        let m = named_matroid(id, n, k).unwrap();
        println!("{id} (rank {}, {} elements)", m.full_rank(), m.n());
        for &p in &predicates {
            let v = decide(&m, p);
            print!("  {:<18} {}", p.to_string(), v.holds);
            if let Some(w) = &v.witness {
                print!("  witness {w:?}, replays: {}", v.replays(&m));
            }
            println!();
        }
        println!("  least k: laminar {}, closure-laminar {}", min_laminar_k(&m), min_closure_laminar_k(&m));
    }
}

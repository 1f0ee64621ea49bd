//! Minor search, isomorphism, and excluded-minor certification for the
//! 2-laminar and 2-closure-laminar classes.

use lamina::catalog::named_matroid;
use lamina::classes::ClassPredicate;
use lamina::constructions::uniform;
use lamina::minors::{has_minor, is_excluded_minor, is_isomorphic};

fn main() {
    let cases = [
        ("MK23minus", None, None),
        ("Mn", Some(4), Some(2)),
        ("Mn", Some(5), Some(2)),
        ("Nn", Some(5), Some(2)),
        ("Pn", Some(4), Some(2)),
    ];
    for (id, n, k) in cases {
        let m = named_matroid(id, n, k).unwrap();
        let name = match (n, k) {
            (Some(n), Some(k)) => format!("{id}({n},{k})"),
            _ => id.to_string(),
        };
        for p in [ClassPredicate::KLaminar(2), ClassPredicate::KClosureLaminar(2)] {
            println!("{name:<12} {:<18} {:?}", p.to_string(), is_excluded_minor(&m, p));
        }
    }

    let m5 = named_matroid("Mn", Some(5), Some(2)).unwrap();
    let u57 = uniform(5, 7).unwrap();
    if let Some(spec) = has_minor(&m5, &u57) {
        println!("M5(2) has U(5,7): delete {} contract {}", m5.format_set(spec.delete), m5.format_set(spec.contract));
    }

    let m4 = named_matroid("Mn", Some(4), Some(2)).unwrap();
    let k23 = named_matroid("MK23", None, None).unwrap();
    let map = is_isomorphic(&m4, &k23).unwrap();
    let pairs: Vec<String> = map.iter().enumerate().map(|(i, &j)| format!("{}->{}", m4.label(i), k23.label(j))).collect();
    println!("M4(2) = M(K23) via {}", pairs.join(" "));
}

//! Rank, closure, circuits and flats of M(K_{2,3}).

use lamina::catalog::named_matroid;

fn main() {
    let m = named_matroid("MK23", None, None).unwrap();
    println!("ground set: {}", m.format_set(m.ground()));
    println!("rank {} on {} elements", m.full_rank(), m.n());

    for &c in m.circuits().iter() {
        let kind = if m.is_spanning(c) { "spanning" } else { "non-spanning" };
        println!("circuit {} ({kind}), closure {}", m.format_set(c), m.format_set(m.closure(c)));
    }

    let x = m.subset(&["x1", "x2"]).unwrap();
    println!("r({}) = {}, flat: {}", m.format_set(x), m.rank(x), m.is_flat(x));
    println!("hyperplanes: {}", m.hyperplanes().len());
    println!("loops {} coloops {}", m.format_set(m.loops()), m.format_set(m.coloops()));

    let d = m.dual();
    println!("dual has rank {} and {} circuits", d.full_rank(), d.circuits().len());
}

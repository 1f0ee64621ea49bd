//! Reading and writing the text format, including parse errors.

use lamina::catalog::named_matroid;
use lamina::io::{parse_matroid, serialize_cyclic_flats, serialize_matroid};

const SQUARE: &str = "\
%matroid v1
# the 4-cycle with one chord
n 5
labels a b c d x
repr graph
vertices 4
edge a 0 1
edge b 1 2
edge c 2 3
edge d 3 0
edge x 0 2
";

fn main() {
    let m = parse_matroid(SQUARE).unwrap();
    println!("parsed graph: rank {}, circuits {}", m.full_rank(), m.circuits().len());
    print!("{}", serialize_matroid(&m));

    let p = named_matroid("Pn", Some(4), Some(2)).unwrap();
    let text = serialize_cyclic_flats(&p);
    print!("{text}");
    println!("round trip through cyclic flats: {}", parse_matroid(&text).unwrap() == p);

    for bad in ["%matroid v1\nn 3\nrepr circuits\n{e0 e1\n", "%matroid v1\nn 2\nrepr uniform\nr 5\n"] {
        println!("error: {}", parse_matroid(bad).unwrap_err());
    }
}

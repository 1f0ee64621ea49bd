//! Cycle matroids of small 2-connected graphs, sorted by 2-laminarity.

use lamina::classes::{is_k_closure_laminar, is_k_laminar};
use lamina::graphs::{graph_matroid, two_connected_graphs};

fn main() {
    for v in 3..=5 {
        let graphs = two_connected_graphs(v);
        let (mut lam, mut cl) = (0, 0);
        for edges in &graphs {
            let m = graph_matroid(v, edges);
            lam += is_k_laminar(&m, 2).holds as usize;
            cl += is_k_closure_laminar(&m, 2).holds as usize;
        }
        println!("{v} vertices: {} graphs, {lam} 2-laminar, {cl} 2-closure-laminar", graphs.len());
    }
}

//! Simple graphs on few vertices, for the graphic characterizations.

use rand::Rng;

use crate::constructions::{cycle_matroid, Multigraph};
use crate::matroid::Matroid;

/// Vertex pairs `(i, j)`, `i < j`, in lexicographic order.
pub fn vertex_pairs(v: usize) -> Vec<(usize, usize)> {
    (0..v).flat_map(|i| (i + 1..v).map(move |j| (i, j))).collect()
}

fn connected_without(v: usize, edges: &[(usize, usize)], removed: Option<usize>) -> bool {
    let alive = |x: usize| Some(x) != removed;
    let Some(start) = (0..v).find(|&x| alive(x)) else {
        return true;
    };
    let mut seen = vec![false; v];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for &(a, b) in edges {
            for (p, q) in [(a, b), (b, a)] {
                if p == x && alive(q) && !seen[q] {
                    seen[q] = true;
                    stack.push(q);
                }
            }
        }
    }
    (0..v).all(|x| !alive(x) || seen[x])
}

/// `K_2`, or a graph on at least three vertices that stays connected after
/// removing any one vertex.
pub fn is_two_connected(v: usize, edges: &[(usize, usize)]) -> bool {
    match v {
        0 | 1 => false,
        2 => edges.len() == 1,
        _ => connected_without(v, edges, None) && (0..v).all(|x| connected_without(v, edges, Some(x))),
    }
}

/// Every labelled simple 2-connected graph on exactly `v` vertices, as
/// edge lists, in order of the edge-subset bitmask.
pub fn two_connected_graphs(v: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs = vertex_pairs(v);
    (0u32..1 << pairs.len())
        .map(|mask| {
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect::<Vec<_>>()
        })
        .filter(|edges| is_two_connected(v, edges))
        .collect()
}

/// A random simple 2-connected graph on `v` vertices, retrying until one is
/// found.
pub fn random_two_connected<R: Rng>(rng: &mut R, v: usize) -> Vec<(usize, usize)> {
    let pairs = vertex_pairs(v);
    loop {
        let p = rng.gen_range(0.25..0.9);
        let edges: Vec<(usize, usize)> = pairs.iter().copied().filter(|_| rng.gen_bool(p)).collect();
        if is_two_connected(v, &edges) {
            return edges;
        }
    }
}

pub fn graph_matroid(v: usize, edges: &[(usize, usize)]) -> Matroid {
    cycle_matroid(&Multigraph::with_edges(v, edges).expect("vertices in range")).expect("graphs give matroids")
}

/// The cycle `0 - 1 - .. - (m-1) - 0` plus `chords`.
pub fn cycle_with_chords(m: usize, chords: &[(usize, usize)]) -> Matroid {
    let mut edges: Vec<(usize, usize)> = (0..m).map(|i| (i, (i + 1) % m)).collect();
    edges.extend_from_slice(chords);
    graph_matroid(m, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        // labelled 2-connected graphs: 1 on 2 vertices, 1 on 3, 10 on 4
        assert_eq!(two_connected_graphs(2).len(), 1);
        assert_eq!(two_connected_graphs(3).len(), 1);
        assert_eq!(two_connected_graphs(4).len(), 10);
        assert_eq!(two_connected_graphs(5).len(), 238);
    }

    #[test]
    fn cut_vertices_detected() {
        // two triangles sharing vertex 2
        let bowtie = [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)];
        assert!(!is_two_connected(5, &bowtie));
        assert!(is_two_connected(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]));
    }
}

#![allow(dead_code)]

use agraph::cubical::GridMap;
use agraph::graph::{Graph, Vertex};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

/// Graph on `0..n` keeping the pairs selected by `mask`, based at 0.
pub fn graph_from_mask(n: usize, mask: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask.get(k).copied().unwrap_or(false) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    let g = Graph::from_edge_list(n, &edges).unwrap();
    if n > 0 {
        g.with_base(0)
    } else {
        g
    }
}

pub fn arb_graph(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    (min..=max).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |mask| graph_from_mask(n, &mask))
    })
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let pairs = n * n.saturating_sub(1) / 2;
    let mask: Vec<bool> = (0..pairs).map(|_| rng.gen_bool(p)).collect();
    graph_from_mask(n, &mask)
}

pub fn random_connected_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    loop {
        let g = random_graph(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
}

/// Random tree: vertex `i > 0` hangs off a uniformly chosen earlier vertex.
pub fn random_tree(rng: &mut impl Rng, n: usize) -> Graph {
    let edges: Vec<(Vertex, Vertex)> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    Graph::from_edge_list(n, &edges).unwrap().with_base(0)
}

/// Points of `[0, e_1) x ... x [0, e_n)`, first coordinate fastest.
pub fn box_points(extents: &[usize]) -> Vec<Vec<i64>> {
    let total: usize = extents.iter().product();
    (0..total)
        .map(|mut i| {
            extents
                .iter()
                .map(|&w| {
                    let c = i % w;
                    i /= w;
                    c as i64
                })
                .collect()
        })
        .collect()
}

/// A random valid grid map supported in the interior of the box, optionally
/// pointwise close to `near`. Falls back to `near` (or the constant map)
/// after repeated dead ends.
pub fn random_grid(g: &Graph, base: Vertex, extents: &[usize], near: Option<&GridMap>, rng: &mut impl Rng) -> GridMap {
    let dim = extents.len();
    let points = box_points(extents);
    let strides: Vec<usize> = (0..dim).map(|d| extents[..d].iter().product()).collect();
    'attempt: for _ in 0..200 {
        let mut values = vec![base; points.len()];
        for (i, p) in points.iter().enumerate() {
            let border = p.iter().zip(extents).any(|(&c, &w)| c == 0 || c as usize + 1 == w);
            let mut candidates: Vec<Vertex> = g
                .vertices()
                .filter(|&v| {
                    (0..dim).all(|d| p[d] == 0 || g.is_close(values[i - strides[d]], v))
                        && (0..dim).all(|d| p[d] as usize + 2 != extents[d] || g.is_close(v, base))
                        && near.is_none_or(|m| g.is_close(m.value(p), v))
                })
                .collect();
            if border {
                candidates.retain(|&v| v == base);
            }
            match candidates.choose(rng) {
                Some(&v) => values[i] = v,
                None => continue 'attempt,
            }
        }
        let entries = points.iter().cloned().zip(values);
        return GridMap::from_support(dim, base, entries).unwrap();
    }
    near.cloned().unwrap_or_else(|| GridMap::constant(dim, base))
}

/// A random closed walk of length `len` at `base`, built as a random walk
/// that heads home once the remaining steps run short.
pub fn random_loop(g: &Graph, base: Vertex, len: usize, rng: &mut impl Rng) -> Vec<Vertex> {
    let dist = distances(g, base);
    let mut walk = vec![base];
    for step in 0..len {
        let left = len - step - 1;
        let here = *walk.last().unwrap();
        let mut options: Vec<Vertex> = g.neighbors(here).to_vec();
        options.push(here);
        options.retain(|&v| dist[v] <= left);
        walk.push(*options.choose(rng).unwrap());
    }
    walk
}

pub fn distances(g: &Graph, from: Vertex) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.vertex_count()];
    dist[from] = 0;
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

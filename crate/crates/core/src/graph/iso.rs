//! Exact isomorphism for the small graphs used in fixtures.
//!
//! The canonical code is the lexicographically largest adjacency string over
//! all vertex orderings, found by branch and bound. Cost is factorial in the
//! worst case; intended for graphs of at most ten or so vertices.

use super::{Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode {
    pub vertices: usize,
    /// Adjacency bits over pairs `(i, k)`, `i < k`, ordered by `k` then `i`.
    pub bits: Vec<bool>,
}

pub fn canonical_code(g: &Graph) -> CanonicalCode {
    let n = g.vertex_count();
    let mut state = Canon { g, best: None, perm: Vec::with_capacity(n), used: vec![false; n], code: Vec::new() };
    state.search();
    CanonicalCode { vertices: n, bits: state.best.unwrap_or_default() }
}

/// Ignores base vertices and names.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return false;
    }
    let degrees = |x: &Graph| {
        let mut d: Vec<_> = x.vertices().map(|v| x.degree(v)).collect();
        d.sort_unstable();
        d
    };
    degrees(g) == degrees(h) && canonical_code(g) == canonical_code(h)
}

struct Canon<'g> {
    g: &'g Graph,
    best: Option<Vec<bool>>,
    perm: Vec<Vertex>,
    used: Vec<bool>,
    code: Vec<bool>,
}

impl Canon<'_> {
    fn search(&mut self) {
        let n = self.g.vertex_count();
        if self.perm.len() == n {
            self.best = Some(self.code.clone());
            return;
        }
        for v in 0..n {
            if self.used[v] {
                continue;
            }
            let start = self.code.len();
            for &u in &self.perm {
                self.code.push(self.g.is_adjacent(u, v));
            }
            let prune = self.best.as_ref().is_some_and(|best| self.code[..] < best[..self.code.len()]);
            if !prune {
                self.used[v] = true;
                self.perm.push(v);
                self.search();
                self.perm.pop();
                self.used[v] = false;
            }
            self.code.truncate(start);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabelled_graphs_share_codes() {
        let a = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let b = Graph::from_edge_list(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert!(is_isomorphic(&a, &b));
        let star = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let path = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(!is_isomorphic(&star, &path));
        assert_ne!(canonical_code(&star), canonical_code(&path));
    }
}

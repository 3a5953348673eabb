use rayon::prelude::*;

use super::{Graph, Vertex};
use crate::error::{Error, Result};

/// A total assignment of domain vertices to codomain vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap<'a> {
    pub domain: &'a Graph,
    pub codomain: &'a Graph,
    assignment: Vec<Vertex>,
}

impl<'a> VertexMap<'a> {
    pub fn new(domain: &'a Graph, codomain: &'a Graph, assignment: Vec<Vertex>) -> Result<Self> {
        if assignment.len() != domain.vertex_count() {
            return Err(Error::MapSize { expected: domain.vertex_count(), got: assignment.len() });
        }
        if let Some(&bad) = assignment.iter().find(|&&v| v >= codomain.vertex_count()) {
            return Err(Error::VertexOutOfRange(bad));
        }
        Ok(VertexMap { domain, codomain, assignment })
    }

    pub fn identity(g: &'a Graph) -> Self {
        VertexMap { domain: g, codomain: g, assignment: g.vertices().collect() }
    }

    pub fn constant(domain: &'a Graph, codomain: &'a Graph, v: Vertex) -> Self {
        assert!(v < codomain.vertex_count());
        VertexMap { domain, codomain, assignment: vec![v; domain.vertex_count()] }
    }

    pub fn apply(&self, v: Vertex) -> Vertex {
        self.assignment[v]
    }

    pub fn assignment(&self) -> &[Vertex] {
        &self.assignment
    }

    pub fn is_hom(&self) -> bool {
        is_graph_hom(self)
    }

    /// Sends base to base; false if either graph lacks a base.
    pub fn is_based(&self) -> bool {
        matches!((self.domain.base(), self.codomain.base()), (Some(a), Some(b)) if self.assignment[a] == b)
    }
}

/// Every domain edge goes to an equal pair or a codomain edge.
pub fn is_graph_hom(f: &VertexMap<'_>) -> bool {
    f.domain.edges().iter().all(|&(u, v)| f.codomain.is_close(f.assignment[u], f.assignment[v]))
}

/// All homomorphisms `g -> h`, lexicographic in the assignment tuple.
pub fn enumerate_homs<'a>(g: &'a Graph, h: &'a Graph) -> Vec<VertexMap<'a>> {
    hom_assignments(g, h)
        .into_iter()
        .map(|assignment| VertexMap { domain: g, codomain: h, assignment })
        .collect()
}

/// Raw assignment vectors of all homomorphisms `g -> h`, lexicographic.
pub fn hom_assignments(g: &Graph, h: &Graph) -> Vec<Vec<Vertex>> {
    let n = g.vertex_count();
    if n == 0 {
        return vec![Vec::new()];
    }
    if h.is_empty() {
        return Vec::new();
    }
    // constraints on v come from neighbors assigned before it
    let earlier: Vec<Vec<Vertex>> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().copied().filter(|&u| u < v).collect())
        .collect();
    let search = Search { h, earlier: &earlier };
    (0..h.vertex_count())
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            let mut current = Vec::with_capacity(n);
            current.push(first);
            search.extend(&mut current, n, &mut out);
            out
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

struct Search<'s> {
    h: &'s Graph,
    earlier: &'s [Vec<Vertex>],
}

impl Search<'_> {
    fn extend(&self, current: &mut Vec<Vertex>, n: usize, out: &mut Vec<Vec<Vertex>>) {
        let v = current.len();
        if v == n {
            out.push(current.clone());
            return;
        }
        for c in self.h.vertices() {
            if self.earlier[v].iter().all(|&u| self.h.is_close(current[u], c)) {
                current.push(c);
                self.extend(current, n, out);
                current.pop();
            }
        }
    }
}

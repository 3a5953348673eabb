//! Finite simple graphs with an optional base vertex.
//!
//! Vertices carry opaque string identifiers but every algorithm works on
//! dense indices (`Vertex`), assigned in listing order. That order is the one
//! used for every deterministic enumeration in the crate.

mod cube;
mod hom;
mod iso;

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

pub use cube::{cube_boundary, cube_graph, extend_cube_hom, CubeMap, DiscreteCube};
pub use hom::{enumerate_homs, hom_assignments, is_graph_hom, VertexMap};
pub use iso::{canonical_code, is_isomorphic, CanonicalCode};

use crate::error::{Error, Result};

/// Index of a vertex within its graph.
pub type Vertex = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    index: HashMap<String, Vertex>,
    adjacency: Vec<Vec<Vertex>>,
    edges: Vec<(Vertex, Vertex)>,
    base: Option<Vertex>,
}

impl Graph {
    /// Builds a graph from named vertices and named edges.
    ///
    /// Rejects duplicate vertices, edges with unknown endpoints, self-loops and
    /// repeated edges (in either orientation).
    pub fn new<S: AsRef<str>>(
        vertices: impl IntoIterator<Item = S>,
        edges: impl IntoIterator<Item = (S, S)>,
        base: Option<&str>,
    ) -> Result<Self> {
        let names: Vec<String> = vertices.into_iter().map(|s| s.as_ref().to_owned()).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(name.clone()));
            }
        }
        let lookup = |name: &str| index.get(name).copied().ok_or_else(|| Error::UnknownVertex(name.to_owned()));
        let mut pairs = Vec::new();
        for (a, b) in edges {
            pairs.push((lookup(a.as_ref())?, lookup(b.as_ref())?));
        }
        let base = base.map(lookup).transpose()?;
        Self::assemble(names, index, pairs, base)
    }

    /// Builds a graph from vertex names and index pairs.
    pub fn from_indices(names: Vec<String>, edges: impl IntoIterator<Item = (Vertex, Vertex)>, base: Option<Vertex>) -> Result<Self> {
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(name.clone()));
            }
        }
        let n = names.len();
        let pairs: Vec<_> = edges.into_iter().collect();
        for &(u, v) in &pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange(w));
                }
            }
        }
        if let Some(b) = base {
            if b >= n {
                return Err(Error::VertexOutOfRange(b));
            }
        }
        Self::assemble(names, index, pairs, base)
    }

    /// Graph on vertices named `0..n` with the given index edges.
    pub fn from_edge_list(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        Self::from_indices((0..n).map(|i| i.to_string()).collect(), edges.iter().copied(), None)
    }

    fn assemble(names: Vec<String>, index: HashMap<String, Vertex>, pairs: Vec<(Vertex, Vertex)>, base: Option<Vertex>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(pairs.len());
        let mut adjacency = vec![Vec::new(); names.len()];
        let mut edges = Vec::with_capacity(pairs.len());
        for (u, v) in pairs {
            if u == v {
                return Err(Error::SelfLoop(names[u].clone()));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::DuplicateEdge(names[u].clone(), names[v].clone()));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
            edges.push(key);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        edges.sort_unstable();
        Ok(Graph { names, index, adjacency, edges, base })
    }

    pub fn path(m: usize) -> Self {
        cube_graph(1, m)
    }

    /// The cycle `C_n` on vertices `0..n` (n ≥ 3), based at 0.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least three vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edge_list(n, &edges).expect("cycle is simple").with_base(0)
    }

    /// The complete graph `K_n`, based at 0 when nonempty.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        let g = Self::from_edge_list(n, &edges).expect("complete graph is simple");
        if n > 0 {
            g.with_base(0)
        } else {
            g
        }
    }

    /// Returns a copy based at `v`. Panics if `v` is out of range.
    pub fn with_base(mut self, v: Vertex) -> Self {
        assert!(v < self.names.len(), "base vertex out of range");
        self.base = Some(v);
        self
    }

    pub fn with_base_name(self, name: &str) -> Result<Self> {
        let v = self.vertex(name).ok_or_else(|| Error::UnknownVertex(name.to_owned()))?;
        Ok(self.with_base(v))
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex(&self, name: &str) -> Option<Vertex> {
        self.index.get(name).copied()
    }

    /// Looks up a vertex by name, failing with `UnknownVertex`.
    pub fn require_vertex(&self, name: &str) -> Result<Vertex> {
        self.vertex(name).ok_or_else(|| Error::UnknownVertex(name.to_owned()))
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn is_adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Equal or adjacent: the condition a graph map imposes on an edge.
    pub fn is_close(&self, u: Vertex, v: Vertex) -> bool {
        u == v || self.is_adjacent(u, v)
    }

    pub fn base(&self) -> Option<Vertex> {
        self.base
    }

    pub fn require_base(&self) -> Result<Vertex> {
        self.base.ok_or(Error::MissingBase)
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.names.len()
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut label = vec![usize::MAX; self.vertex_count()];
        let mut out = Vec::new();
        for start in self.vertices() {
            if label[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            label[start] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in self.neighbors(u) {
                    if label[w] == usize::MAX {
                        label[w] = id;
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Induced subgraph on `keep` (in the given order); the base survives if kept.
    /// Returns the subgraph and the map from old to new indices.
    pub fn induced_subgraph(&self, keep: &[Vertex]) -> (Graph, HashMap<Vertex, Vertex>) {
        let relabel: HashMap<Vertex, Vertex> = keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let names = keep.iter().map(|&v| self.names[v].clone()).collect();
        let edges = self
            .edges
            .iter()
            .filter_map(|(u, v)| Some((*relabel.get(u)?, *relabel.get(v)?)));
        let base = self.base.and_then(|b| relabel.get(&b).copied());
        let g = Graph::from_indices(names, edges, base).expect("induced subgraph of a valid graph");
        (g, relabel)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: GraphFile = serde_json::from_str(text)
            .map_err(|e| Error::parse(format!("line {}, column {}", e.line(), e.column()), e.to_string()))?;
        Graph::new(
            file.vertices.iter().map(String::as_str),
            file.edges.iter().map(|[a, b]| (a.as_str(), b.as_str())),
            file.base.as_deref(),
        )
    }

    pub fn to_file(&self) -> GraphFile {
        GraphFile {
            vertices: self.names.clone(),
            edges: self.edges.iter().map(|&(u, v)| [self.names[u].clone(), self.names[v].clone()]).collect(),
            base: self.base.map(|b| self.names[b].clone()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("graph serializes")
    }

    /// One-line human summary.
    pub fn summary(&self) -> String {
        let mut s = format!("{} vertices, {} edges", self.vertex_count(), self.edge_count());
        if let Some(b) = self.base {
            let _ = write!(s, ", base {}", self.names[b]);
        }
        s
    }
}

/// On-disk graph format.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<String>,
}

/// Cartesian (box) product. Pairs are ordered with the left factor most significant.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let nh = h.vertex_count();
    let pair = |a: Vertex, b: Vertex| a * nh + b;
    let mut names = Vec::with_capacity(g.vertex_count() * nh);
    for a in g.vertices() {
        for b in h.vertices() {
            names.push(format!("({},{})", g.name(a), h.name(b)));
        }
    }
    let mut edges = Vec::with_capacity(g.vertex_count() * h.edge_count() + nh * g.edge_count());
    for a in g.vertices() {
        for &(u, v) in h.edges() {
            edges.push((pair(a, u), pair(a, v)));
        }
    }
    for &(u, v) in g.edges() {
        for b in h.vertices() {
            edges.push((pair(u, b), pair(v, b)));
        }
    }
    let base = match (g.base(), h.base()) {
        (Some(a), Some(b)) => Some(pair(a, b)),
        _ => None,
    };
    Graph::from_indices(names, edges, base).expect("product of simple graphs is simple")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_malformed_graphs() {
        assert_eq!(Graph::new(["a", "a"], [], None), Err(Error::DuplicateVertex("a".into())));
        assert_eq!(Graph::new(["a"], [("a", "a")], None), Err(Error::SelfLoop("a".into())));
        assert_eq!(Graph::new(["a", "b"], [("a", "b"), ("b", "a")], None), Err(Error::DuplicateEdge("b".into(), "a".into())));
        assert_eq!(Graph::new(["a"], [("a", "z")], None), Err(Error::UnknownVertex("z".into())));
        assert_eq!(Graph::new(["a"], [], Some("q")), Err(Error::UnknownVertex("q".into())));
    }

    #[test]
    fn json_round_trip_and_diagnostics() {
        let text = r#"{"vertices": ["x", "y", "z"], "edges": [["x", "y"], ["z", "y"]], "base": "z"}"#;
        let g = Graph::from_json(text).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.base(), Some(2));
        assert_eq!(Graph::from_json(&g.to_json()).unwrap(), g);

        let err = Graph::from_json("{\n \"vertices\": [\"a\",\n}").unwrap_err();
        assert!(matches!(err, Error::Parse { ref location, .. } if location.starts_with("line 3")), "{err}");
        let dup = r#"{"vertices": ["a", "b"], "edges": [["a", "b"], ["b", "a"]]}"#;
        assert!(matches!(Graph::from_json(dup), Err(Error::DuplicateEdge(..))));
    }

    #[test]
    fn product_examples() {
        let i1 = Graph::path(1);
        let square = cartesian_product(&i1, &i1);
        assert_eq!((square.vertex_count(), square.edge_count()), (4, 4));
        assert!(square.vertices().all(|v| square.degree(v) == 2));
        assert!(is_isomorphic(&square, &Graph::cycle(4)));

        let k1 = Graph::complete(1);
        let c5 = Graph::cycle(5);
        assert!(is_isomorphic(&cartesian_product(&c5, &k1), &c5));

        let p = cartesian_product(&Graph::complete(2), &Graph::complete(3));
        assert_eq!((p.vertex_count(), p.edge_count()), (6, 9));
        assert_eq!(p.base(), Some(0));
        assert_eq!(p.name(4), "(1,1)");
    }

    #[test]
    fn components_and_induced_subgraphs() {
        let g = Graph::from_edge_list(5, &[(0, 1), (3, 4)]).unwrap().with_base(3);
        assert_eq!(g.components(), vec![vec![0, 1], vec![2], vec![3, 4]]);
        let (sub, map) = g.induced_subgraph(&[3, 4]);
        assert_eq!(sub.edge_count(), 1);
        assert_eq!(sub.base(), Some(0));
        assert_eq!(map[&4], 1);
    }

    #[test]
    fn empty_and_single_vertex_graphs() {
        let empty = Graph::from_edge_list(0, &[]).unwrap();
        assert!(empty.is_empty() && empty.is_connected());
        assert_eq!(empty.require_base(), Err(Error::MissingBase));
        let k1 = Graph::complete(1);
        assert_eq!(k1.require_base(), Ok(0));
    }
}

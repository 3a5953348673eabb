//! `A_1(Γ, v₀)` as the fundamental group of the 2-complex obtained from Γ by
//! gluing a disc into every 3-cycle and every 4-cycle.
//!
//! The presentation uses a breadth-first spanning tree rooted at the base
//! vertex: one generator per non-tree edge and one relator per short cycle.

mod snf;
mod tietze;
mod word;

use std::collections::{HashMap, VecDeque};
use std::fmt;

use log::warn;

pub use snf::{abelian_image_is_zero, abelianization, relation_matrix, smith_normal_form, AbelianInvariants, SmithForm};
pub use tietze::{simplify_tracked, tietze_simplify, Simplification};
pub use word::{GroupPresentation, Letter, Word, WordDisplay};

use crate::cubical::{bounded_homotopy_search, GridMap};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// A simple cycle of length 3 or 4, starting at its smallest vertex and
/// heading toward the smaller of that vertex's two cycle neighbours.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle(pub Vec<Vertex>);

impl Cycle {
    /// Directed steps around the cycle, closing back at the start.
    pub fn steps(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let k = self.0.len();
        (0..k).map(move |i| (self.0[i], self.0[(i + 1) % k]))
    }
}

/// All 3- and 4-cycles, triangles first, each group in lexicographic order.
pub fn small_cycles(g: &Graph) -> Vec<Cycle> {
    let mut triangles = Vec::new();
    let mut squares = Vec::new();
    for a in g.vertices() {
        let up: Vec<Vertex> = g.neighbors(a).iter().copied().filter(|&x| x > a).collect();
        for (i, &b) in up.iter().enumerate() {
            for &d in &up[i + 1..] {
                if g.is_adjacent(b, d) {
                    triangles.push(Cycle(vec![a, b, d]));
                }
                for &c in g.neighbors(b) {
                    if c > a && c != d && g.is_adjacent(c, d) {
                        squares.push(Cycle(vec![a, b, c, d]));
                    }
                }
            }
        }
    }
    triangles.sort();
    squares.sort();
    triangles.extend(squares);
    triangles
}

/// A closed walk at the base vertex; consecutive entries equal or adjacent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LoopWalk {
    vertices: Vec<Vertex>,
}

impl LoopWalk {
    pub fn new(g: &Graph, base: Vertex, vertices: Vec<Vertex>) -> Result<Self> {
        check_walk(g, &vertices)?;
        if vertices.first() != Some(&base) || vertices.last() != Some(&base) {
            return Err(Error::NotALoop);
        }
        Ok(LoopWalk { vertices })
    }

    /// Parses a comma-separated list of vertex names.
    pub fn parse(g: &Graph, base: Vertex, text: &str) -> Result<Self> {
        let vertices = text
            .split(',')
            .map(|t| g.require_vertex(t.trim()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(g, base, vertices)
    }

    pub fn constant(base: Vertex) -> Self {
        LoopWalk { vertices: vec![base] }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Number of steps.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The loop as a 1-dimensional grid map: step `i` sits at lattice point `i`.
    pub fn to_grid(&self, base: Vertex) -> GridMap {
        GridMap::from_walk(&self.vertices, base)
    }

    pub fn display<'a>(&'a self, g: &'a Graph) -> impl fmt::Display + 'a {
        DisplayWalk(g, &self.vertices)
    }
}

struct DisplayWalk<'a>(&'a Graph, &'a [Vertex]);

impl fmt::Display for DisplayWalk<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.1.iter().map(|&v| self.0.name(v)).collect();
        f.write_str(&names.join(","))
    }
}

pub(crate) fn check_walk(g: &Graph, vertices: &[Vertex]) -> Result<()> {
    if vertices.is_empty() {
        return Err(Error::EmptyWalk);
    }
    if let Some(&bad) = vertices.iter().find(|&&v| v >= g.vertex_count()) {
        return Err(Error::VertexOutOfRange(bad));
    }
    for w in vertices.windows(2) {
        if !g.is_close(w[0], w[1]) {
            return Err(Error::InvalidStep(g.name(w[0]).to_owned(), g.name(w[1]).to_owned()));
        }
    }
    Ok(())
}

/// Verdict of a loop comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Equivalence {
    Equal,
    Distinct,
    Unknown,
}

impl fmt::Display for Equivalence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Equivalence::Equal => "equal",
            Equivalence::Distinct => "distinct",
            Equivalence::Unknown => "unknown",
        })
    }
}

/// Bounds for the grid-search fallback of [`A1Complex::loops_equivalent`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBounds {
    /// Extra lattice points allowed beyond the longer loop.
    pub margin: usize,
    pub max_layers: usize,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds { margin: 2, max_layers: 6 }
    }
}

/// The 2-complex data for one based graph: spanning tree, generators,
/// relators and the simplified presentation.
#[derive(Clone, Debug)]
pub struct A1Complex<'g> {
    graph: &'g Graph,
    base: Vertex,
    component: Vec<bool>,
    parent: Vec<Option<Vertex>>,
    generator_of: HashMap<(Vertex, Vertex), usize>,
    cycles: Vec<Cycle>,
    presentation: GroupPresentation,
    simplified: Simplification,
}

impl<'g> A1Complex<'g> {
    pub fn new(graph: &'g Graph, base: Vertex) -> Result<Self> {
        if base >= graph.vertex_count() {
            return Err(Error::VertexOutOfRange(base));
        }
        // breadth-first tree in vertex order
        let n = graph.vertex_count();
        let mut component = vec![false; n];
        let mut parent = vec![None; n];
        component[base] = true;
        let mut queue = VecDeque::from([base]);
        while let Some(u) = queue.pop_front() {
            for &w in graph.neighbors(u) {
                if !component[w] {
                    component[w] = true;
                    parent[w] = Some(u);
                    queue.push_back(w);
                }
            }
        }
        let reached = component.iter().filter(|&&c| c).count();
        if reached < n {
            warn!("graph is disconnected; restricting to the {reached} vertices in the component of {}", graph.name(base));
        }

        let mut generator_of = HashMap::new();
        let mut generators = Vec::new();
        for &(u, v) in graph.edges() {
            if !component[u] || parent[v] == Some(u) || parent[u] == Some(v) {
                continue;
            }
            generator_of.insert((u, v), generators.len());
            generators.push(format!("e({},{})", graph.name(u), graph.name(v)));
        }
        let cycles: Vec<Cycle> = small_cycles(graph).into_iter().filter(|c| component[c.0[0]]).collect();
        let mut complex = A1Complex {
            graph,
            base,
            component,
            parent,
            generator_of,
            cycles,
            presentation: GroupPresentation::default(),
            simplified: Simplification { presentation: GroupPresentation::default(), images: Vec::new() },
        };
        let relators = complex
            .cycles
            .iter()
            .map(|c| complex.steps_to_word(c.steps()).cyclically_reduced())
            .collect();
        complex.presentation = GroupPresentation::new(generators, relators);
        complex.simplified = simplify_tracked(&complex.presentation);
        Ok(complex)
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    pub fn base(&self) -> Vertex {
        self.base
    }

    pub fn presentation(&self) -> &GroupPresentation {
        &self.presentation
    }

    pub fn simplification(&self) -> &Simplification {
        &self.simplified
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn component(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.graph.vertices().filter(|&v| self.component[v])
    }

    pub fn is_tree_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.parent[v] == Some(u) || self.parent[u] == Some(v)
    }

    pub fn abelianization(&self) -> AbelianInvariants {
        abelianization(&self.presentation)
    }

    fn steps_to_word(&self, steps: impl Iterator<Item = (Vertex, Vertex)>) -> Word {
        let mut w = Word::empty();
        for (u, v) in steps {
            if u == v {
                continue;
            }
            if let Some(&g) = self.generator_of.get(&(u.min(v), u.max(v))) {
                w.push(Letter::new(g, u > v));
            }
        }
        w
    }

    /// The non-tree edges crossed by the loop, signed by direction.
    pub fn loop_to_word(&self, l: &LoopWalk) -> Result<Word> {
        check_walk(self.graph, l.vertices())?;
        if l.vertices()[0] != self.base || *l.vertices().last().unwrap() != self.base {
            return Err(Error::NotALoop);
        }
        Ok(self.steps_to_word(l.vertices().windows(2).map(|w| (w[0], w[1]))))
    }

    /// Decides whether two loops represent the same element, with the default
    /// grid-search fallback.
    pub fn loops_equivalent(&self, l1: &LoopWalk, l2: &LoopWalk) -> Result<Equivalence> {
        self.loops_equivalent_with(l1, l2, Some(SearchBounds::default()))
    }

    /// Algebra first: the quotient word `w1 w2^-1` is rewritten into the
    /// simplified presentation. An empty rewrite means equal; in a free
    /// presentation a nonempty one means distinct; a nonzero abelian image
    /// means distinct. Otherwise a bounded grid search may prove equality.
    pub fn loops_equivalent_with(&self, l1: &LoopWalk, l2: &LoopWalk, fallback: Option<SearchBounds>) -> Result<Equivalence> {
        let w1 = self.loop_to_word(l1)?;
        let w2 = self.loop_to_word(l2)?;
        if l1 == l2 {
            return Ok(Equivalence::Equal);
        }
        let quotient = w1.concat(&w2.inverse());
        let rewritten = self.simplified.rewrite(&quotient);
        if rewritten.is_empty() {
            return Ok(Equivalence::Equal);
        }
        let simplified = &self.simplified.presentation;
        if simplified.is_free() {
            return Ok(Equivalence::Distinct);
        }
        if !abelian_image_is_zero(simplified, &rewritten) {
            return Ok(Equivalence::Distinct);
        }
        if let Some(bounds) = fallback {
            let width = l1.len().max(l2.len()) + 1 + bounds.margin;
            let f = l1.to_grid(self.base);
            let g = l2.to_grid(self.base);
            if bounded_homotopy_search(self.graph, &f, &g, &[width], bounds.max_layers)?.is_some() {
                return Ok(Equivalence::Equal);
            }
        }
        Ok(Equivalence::Unknown)
    }
}

/// Spanning-tree presentation of `A_1(g, base)`.
pub fn a1_presentation(g: &Graph, base: Vertex) -> Result<GroupPresentation> {
    Ok(A1Complex::new(g, base)?.presentation)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute force over ordered vertex tuples, deduplicated by vertex set and edge set.
    fn cycle_oracle(g: &Graph) -> (usize, usize) {
        let n = g.vertex_count();
        let mut tri = 0;
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if g.is_adjacent(a, b) && g.is_adjacent(b, c) && g.is_adjacent(a, c) {
                        tri += 1;
                    }
                }
            }
        }
        let mut quads = std::collections::HashSet::new();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let vs = [a, b, c, d];
                        let distinct = (0..4).all(|i| (i + 1..4).all(|j| vs[i] != vs[j]));
                        if distinct && (0..4).all(|i| g.is_adjacent(vs[i], vs[(i + 1) % 4])) {
                            let mut edges: Vec<(usize, usize)> = (0..4).map(|i| (vs[i].min(vs[(i + 1) % 4]), vs[i].max(vs[(i + 1) % 4]))).collect();
                            edges.sort();
                            quads.insert(edges);
                        }
                    }
                }
            }
        }
        (tri, quads.len())
    }

    fn count(cycles: &[Cycle]) -> (usize, usize) {
        (cycles.iter().filter(|c| c.0.len() == 3).count(), cycles.iter().filter(|c| c.0.len() == 4).count())
    }

    #[test]
    fn small_cycle_examples() {
        let c5 = Graph::cycle(5);
        assert_eq!(cycle_oracle(&c5), (0, 0));
        assert!(small_cycles(&c5).is_empty());
        let k4 = Graph::complete(4);
        assert_eq!(cycle_oracle(&k4), (4, 3));
        assert_eq!(count(&small_cycles(&k4)), (4, 3));
        assert_eq!(small_cycles(&Graph::cycle(4)), vec![Cycle(vec![0, 1, 2, 3])]);
    }

    #[test]
    fn presentation_examples() {
        let c5 = Graph::cycle(5);
        let p = a1_presentation(&c5, 0).unwrap();
        assert_eq!((p.generators.len(), p.relators.len()), (1, 0));
        assert_eq!(abelianization(&p), AbelianInvariants { free_rank: 1, torsion: vec![] });

        let c4 = Graph::cycle(4);
        let p = a1_presentation(&c4, 0).unwrap();
        assert_eq!(p.generators, vec!["e(2,3)".to_string()]);
        assert_eq!(p.relators, vec![Word::generator(0)]);
        assert!(tietze_simplify(&p).generators.is_empty());

        let tree = Graph::from_edge_list(6, &[(0, 1), (0, 2), (2, 3), (2, 4), (4, 5)]).unwrap();
        assert!(a1_presentation(&tree, 3).unwrap().generators.is_empty());

        let k4 = a1_presentation(&Graph::complete(4), 0).unwrap();
        assert_eq!(k4.generators.len(), 3);
        assert!(tietze_simplify(&k4).generators.is_empty());
        assert!(abelianization(&k4).is_trivial());
    }

    #[test]
    fn disconnected_graphs_use_the_base_component() {
        let g = Graph::from_edge_list(8, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 6), (6, 7), (7, 5)]).unwrap();
        let a = A1Complex::new(&g, 6).unwrap();
        assert_eq!(a.component().collect::<Vec<_>>(), vec![5, 6, 7]);
        assert!(a.abelianization().is_trivial());
        let b = A1Complex::new(&g, 0).unwrap();
        assert_eq!(b.abelianization().free_rank, 1);
        assert!(A1Complex::new(&g, 9).is_err());
    }

    #[test]
    fn loop_words() {
        let c5 = Graph::cycle(5);
        let a = A1Complex::new(&c5, 0).unwrap();
        assert_eq!(a.loop_to_word(&LoopWalk::constant(0)).unwrap(), Word::empty());
        let around = LoopWalk::parse(&c5, 0, "0,1,2,3,4,0").unwrap();
        let w = a.loop_to_word(&around).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(w.exponent_sums(1), vec![1]);
        let back = LoopWalk::parse(&c5, 0, "0,4,3,2,1,0").unwrap();
        assert_eq!(a.loop_to_word(&back).unwrap(), w.inverse());
        let out_and_back = LoopWalk::parse(&c5, 0, "0,1,1,2,1,0").unwrap();
        assert_eq!(a.loop_to_word(&out_and_back).unwrap(), Word::empty());

        assert!(matches!(LoopWalk::parse(&c5, 0, "0,2,0"), Err(Error::InvalidStep(..))));
        assert_eq!(LoopWalk::parse(&c5, 0, "0,1"), Err(Error::NotALoop));
    }

    #[test]
    fn loop_equivalence_examples() {
        let c5 = Graph::cycle(5);
        let a = A1Complex::new(&c5, 0).unwrap();
        let around = LoopWalk::parse(&c5, 0, "0,1,2,3,4,0").unwrap();
        assert_eq!(a.loops_equivalent(&around, &around).unwrap(), Equivalence::Equal);
        assert_eq!(a.loops_equivalent(&around, &LoopWalk::constant(0)).unwrap(), Equivalence::Distinct);

        let c4 = Graph::cycle(4);
        let b = A1Complex::new(&c4, 0).unwrap();
        let square = LoopWalk::parse(&c4, 0, "0,1,2,3,0").unwrap();
        assert_eq!(b.loops_equivalent(&square, &LoopWalk::constant(0)).unwrap(), Equivalence::Equal);
        let found = bounded_homotopy_search(&c4, &square.to_grid(0), &GridMap::constant(1, 0), &[5], 4).unwrap();
        assert!(found.is_some());
    }
}

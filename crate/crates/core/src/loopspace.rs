//! The path graph `PG`, the loop graph `ΩG`, and the map `α` turning grids
//! of loops into grids of one more dimension.
//!
//! Both graphs have infinitely many vertices; everything here works with
//! the finite truncation to walks of length at most `m_max`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;

use crate::cubical::GridMap;
use crate::error::{Error, Result};
use crate::fundamental::check_walk;
use crate::graph::{Graph, Vertex, VertexMap};

/// A based walk `φ: I_m -> G` with `φ(0) = ∗`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathVertex {
    walk: Vec<Vertex>,
}

impl PathVertex {
    pub fn new(g: &Graph, base: Vertex, walk: Vec<Vertex>) -> Result<Self> {
        check_walk(g, &walk)?;
        if walk[0] != base {
            return Err(Error::NotBased);
        }
        Ok(PathVertex { walk })
    }

    /// Parses a comma-separated list of vertex names.
    pub fn parse(g: &Graph, base: Vertex, text: &str) -> Result<Self> {
        let walk = text.split(',').map(|t| g.require_vertex(t.trim())).collect::<Result<Vec<_>>>()?;
        Self::new(g, base, walk)
    }

    /// The length-0 walk `(∗)`.
    pub fn constant(base: Vertex) -> Self {
        PathVertex { walk: vec![base] }
    }

    pub fn walk(&self) -> &[Vertex] {
        &self.walk
    }

    /// The length `m`.
    pub fn len(&self) -> usize {
        self.walk.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Value at `y`, continued by the last vertex past the end.
    pub fn at(&self, y: usize) -> Vertex {
        self.walk[y.min(self.len())]
    }

    /// The shortest walk with the same paddings: trailing repeats removed.
    pub fn normalized(&self) -> PathVertex {
        let mut walk = self.walk.clone();
        while walk.len() > 1 && walk[walk.len() - 1] == walk[walk.len() - 2] {
            walk.pop();
        }
        PathVertex { walk }
    }

    pub fn display<'a>(&'a self, g: &'a Graph) -> impl fmt::Display + 'a {
        DisplayPath(g, &self.walk)
    }
}

struct DisplayPath<'a>(&'a Graph, &'a [Vertex]);

impl fmt::Display for DisplayPath<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.1.iter().map(|&v| self.0.name(v)).collect();
        f.write_str(&names.join(","))
    }
}

/// Extends `φ` to length `m` by repeating its last vertex.
pub fn pad(phi: &PathVertex, m: usize) -> Result<PathVertex> {
    if m < phi.len() {
        return Err(Error::PadTooShort { len: phi.len(), target: m });
    }
    Ok(PathVertex { walk: (0..=m).map(|y| phi.at(y)).collect() })
}

/// `p(φ) = φ(m)`.
pub fn p_map(phi: &PathVertex) -> Vertex {
    phi.walk[phi.len()]
}

/// Pointwise equal-or-adjacent after padding both walks to a common length.
/// This says nothing about whether the two walks are distinct vertices.
pub fn walks_close(g: &Graph, a: &PathVertex, b: &PathVertex) -> bool {
    let m = a.len().max(b.len());
    (0..=m).all(|y| g.is_close(a.at(y), b.at(y)))
}

/// Adjacency in `PG` under padding-normalized vertex identity: the walks
/// are distinct after normalization and close after padding.
pub fn path_adjacent(g: &Graph, a: &PathVertex, b: &PathVertex) -> bool {
    a.normalized() != b.normalized() && walks_close(g, a, b)
}

/// If `φ` is close to the constant loop of its own length, it is close to
/// the length-0 loop. Returns whether that implication holds for `φ`.
pub fn remark_constant_loop_check(g: &Graph, base: Vertex, phi: &PathVertex) -> bool {
    let long = PathVertex { walk: vec![base; phi.len() + 1] };
    let short = PathVertex::constant(base);
    if phi.normalized() == short {
        return true;
    }
    !path_adjacent(g, phi, &long) || path_adjacent(g, phi, &short)
}

/// All based walks of length `≤ m_max`, ordered by length then
/// lexicographically. With `loops_only` only walks ending at the base are
/// kept; with `collapse` only the shortest walk of each padding class.
pub fn enumerate_walks(g: &Graph, base: Vertex, m_max: usize, loops_only: bool, collapse: bool) -> Vec<PathVertex> {
    let mut out = Vec::new();
    let mut layer = vec![vec![base]];
    for m in 0..=m_max {
        for w in &layer {
            let keep_end = !loops_only || w[m] == base;
            let keep_shape = !collapse || m == 0 || w[m] != w[m - 1];
            if keep_end && keep_shape {
                out.push(PathVertex { walk: w.clone() });
            }
        }
        if m == m_max {
            break;
        }
        layer = layer
            .par_iter()
            .flat_map_iter(|w| {
                let last = w[m];
                let mut steps: Vec<Vertex> = g.neighbors(last).to_vec();
                steps.push(last);
                steps.sort_unstable();
                steps.into_iter().map(move |v| {
                    let mut next = w.clone();
                    next.push(v);
                    next
                })
            })
            .collect();
    }
    out
}

/// A truncated path or loop graph together with the walk behind each vertex.
#[derive(Clone, Debug)]
pub struct WalkGraph {
    graph: Graph,
    walks: Vec<PathVertex>,
    index: HashMap<PathVertex, Vertex>,
    collapse: bool,
    m_max: usize,
}

impl WalkGraph {
    /// The induced subgraph of `PG` on `walks`; the first walk is the base.
    pub fn from_walks(g: &Graph, walks: Vec<PathVertex>, collapse: bool) -> Result<Self> {
        let walks: Vec<PathVertex> = if collapse { walks.iter().map(PathVertex::normalized).collect() } else { walks };
        let mut index = HashMap::with_capacity(walks.len());
        for (i, w) in walks.iter().enumerate() {
            if index.insert(w.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(w.display(g).to_string()));
            }
        }
        let edges: Vec<(Vertex, Vertex)> = (0..walks.len())
            .into_par_iter()
            .flat_map_iter(|i| {
                let walks = &walks;
                (i + 1..walks.len()).filter(move |&j| walks_close(g, &walks[i], &walks[j])).map(move |j| (i, j))
            })
            .collect();
        let names = walks.iter().map(|w| w.display(g).to_string()).collect();
        let base = if walks.is_empty() { None } else { Some(0) };
        let graph = Graph::from_indices(names, edges, base)?;
        let m_max = walks.iter().map(PathVertex::len).max().unwrap_or(0);
        Ok(WalkGraph { graph, walks, index, collapse, m_max })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn walks(&self) -> &[PathVertex] {
        &self.walks
    }

    pub fn walk(&self, v: Vertex) -> &PathVertex {
        &self.walks[v]
    }

    /// Longest walk length present.
    pub fn m_max(&self) -> usize {
        self.m_max
    }

    pub fn is_collapsed(&self) -> bool {
        self.collapse
    }

    pub fn lookup(&self, phi: &PathVertex) -> Option<Vertex> {
        if self.collapse {
            self.index.get(&phi.normalized()).copied()
        } else {
            self.index.get(phi).copied()
        }
    }
}

/// `PG` truncated at `m_max`, based at the length-0 walk.
pub fn build_path_graph(g: &Graph, base: Vertex, m_max: usize, collapse: bool) -> Result<WalkGraph> {
    WalkGraph::from_walks(g, enumerate_walks(g, base, m_max, false, collapse), collapse)
}

/// `ΩG` truncated at `m_max`: the walks of `PG` ending at the base.
pub fn build_loop_graph(g: &Graph, base: Vertex, m_max: usize, collapse: bool) -> Result<WalkGraph> {
    WalkGraph::from_walks(g, enumerate_walks(g, base, m_max, true, collapse), collapse)
}

/// `α(f)(x, y) = f(x)(y)` for `0 ≤ y ≤ m_f(x)`, and `∗` otherwise.
///
/// `f` takes values in `omega` (vertex ids of the loop graph) and must be
/// based at its length-0 loop; the result is checked against `g`.
pub fn alpha(f: &GridMap, omega: &WalkGraph, g: &Graph) -> Result<GridMap> {
    let Some(star) = omega.graph.base() else {
        return Err(Error::MissingBase);
    };
    if f.base_value() != star {
        return Err(Error::NotBased);
    }
    if !f.is_finite() {
        return Err(Error::Undefined("alpha of a degenerate map"));
    }
    if !f.is_valid(&omega.graph) {
        return Err(Error::InvalidGrid);
    }
    let base = omega.walk(star).at(0);
    let mut entries = Vec::new();
    for (x, &v) in f.support() {
        let phi = omega.walk(v);
        if phi.at(0) != base || p_map(phi) != base {
            return Err(Error::NotALoop);
        }
        for (y, &w) in phi.walk().iter().enumerate() {
            let mut p = x.clone();
            p.push(y as i64);
            entries.push((p, w));
        }
    }
    let out = GridMap::from_support(f.dim() + 1, base, entries)?;
    if !out.is_valid(g) {
        return Err(Error::InvalidGrid);
    }
    Ok(out)
}

/// The grid of loops read off `h` column by column, as in the surjectivity
/// argument: `h` is moved into the interior of `[0, m]^{n+1}`, each column
/// `y -> h(x, y)` becomes a loop, and boundary columns become `(∗)`.
///
/// Returns the loop grid over the induced loop graph on the columns used.
pub fn loops_of(h: &GridMap, g: &Graph) -> Result<(GridMap, WalkGraph, GridMap)> {
    if h.dim() == 0 {
        return Err(Error::Undefined("loops of a 0-dimensional map"));
    }
    if !h.is_finite() {
        return Err(Error::Undefined("loops of a degenerate map"));
    }
    if !h.is_valid(g) {
        return Err(Error::InvalidGrid);
    }
    let base = h.base_value();
    let dim = h.dim();
    let n = dim - 1;
    let (moved, m) = match h.bounding_box() {
        None => (h.clone(), 1),
        Some(b) => {
            let offset: Vec<i64> = b.iter().map(|r| 1 - r.0).collect();
            let side = b.iter().map(|r| r.1 - r.0 + 2).max().expect("positive dimension");
            (h.translate(&offset), side as usize)
        }
    };
    let star = PathVertex::constant(base);
    let mut columns: BTreeMap<Vec<i64>, PathVertex> = BTreeMap::new();
    for x in moved.support().keys() {
        let key = x[..n].to_vec();
        if columns.contains_key(&key) {
            continue;
        }
        let interior = key.iter().all(|&c| c > 0 && c < m as i64);
        let phi = if interior {
            let walk = (0..=m as i64)
                .map(|y| {
                    let mut p = key.clone();
                    p.push(y);
                    moved.value(&p)
                })
                .collect();
            PathVertex { walk }
        } else {
            star.clone()
        };
        columns.insert(key, phi);
    }
    let mut walks = vec![star.clone()];
    for phi in columns.values() {
        if !walks.contains(&phi.normalized()) {
            walks.push(phi.normalized());
        }
    }
    let omega = WalkGraph::from_walks(g, walks, true)?;
    let entries = columns.into_iter().map(|(x, phi)| (x, omega.lookup(&phi).expect("column walk is interned")));
    let f = GridMap::from_support(n, 0, entries)?;
    Ok((f, omega, moved))
}

/// Builds `f'` from `h` and checks that it is a valid grid of loops with
/// `α(f') = h` (up to the translation applied by [`loops_of`]).
pub fn alpha_surjectivity_roundtrip(h: &GridMap, g: &Graph) -> Result<bool> {
    let (f, omega, moved) = loops_of(h, g)?;
    if !f.is_valid(omega.graph()) {
        return Ok(false);
    }
    Ok(alpha(&f, &omega, g)? == moved)
}

/// `Ωψ(φ) = ψ ∘ φ`.
pub fn omega_functor(psi: &VertexMap<'_>, phi: &PathVertex) -> Result<PathVertex> {
    if !psi.is_hom() {
        return Err(Error::NotHomomorphism);
    }
    if !psi.is_based() {
        return Err(Error::NotBased);
    }
    Ok(PathVertex { walk: phi.walk.iter().map(|&v| psi.apply(v)).collect() })
}

/// `(Ωψ)_#(f)`: post-composition of a grid of loops with `Ωψ`, landing in
/// the loop graph `target`.
pub fn omega_map_grid(psi: &VertexMap<'_>, f: &GridMap, source: &WalkGraph, target: &WalkGraph) -> Result<GridMap> {
    let image = |v: Vertex| -> Result<Vertex> {
        let phi = omega_functor(psi, source.walk(v))?;
        target.lookup(&phi).ok_or_else(|| Error::UnknownVertex(phi.display(psi.codomain).to_string()))
    };
    let base = image(f.base_value())?;
    let mut entries = Vec::with_capacity(f.support().len());
    for (p, &v) in f.support() {
        entries.push((p.clone(), image(v)?));
    }
    GridMap::from_support(f.dim(), base, entries)
}

/// Connected components with the one containing the base singled out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedComponents {
    pub components: Vec<Vec<Vertex>>,
    pub base_component: usize,
}

impl PointedComponents {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn component_of(&self, v: Vertex) -> Option<usize> {
        self.components.iter().position(|c| c.contains(&v))
    }
}

/// `A_0(G, ∗)`, the pointed set of connected components.
pub fn a0(g: &Graph) -> Result<PointedComponents> {
    let base = g.require_base()?;
    let components = g.components();
    let base_component = components.iter().position(|c| c.contains(&base)).expect("base lies in a component");
    Ok(PointedComponents { components, base_component })
}

//! Exhaustive breadth-first search for homotopies inside a finite box.
//!
//! States are grid maps whose support lies in `[0, W_1) x ... x [0, W_n)`,
//! stored densely with the first coordinate varying fastest. Two states are
//! joined when they are pointwise equal-or-adjacent, which is exactly a
//! one-layer homotopy. Layers are expanded in increasing state order and
//! every state keeps the first parent that reached it, so the returned
//! certificate does not depend on thread scheduling.

use std::collections::HashMap;

use rayon::prelude::*;

use super::{GridMap, HomotopyCertificate, Point};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

type State = Box<[u32]>;

struct Lattice<'g> {
    graph: &'g Graph,
    extents: Vec<usize>,
    strides: Vec<usize>,
    cells: usize,
    base: u32,
    /// closed neighbourhoods, sorted
    closed: Vec<Vec<u32>>,
    /// per cell: does it touch the outside of the box
    on_border: Vec<bool>,
}

impl<'g> Lattice<'g> {
    fn new(graph: &'g Graph, extents: &[usize], base: Vertex) -> Self {
        let mut strides = Vec::with_capacity(extents.len());
        let mut cells = 1;
        for &w in extents {
            strides.push(cells);
            cells *= w;
        }
        let closed = graph
            .vertices()
            .map(|v| {
                let mut c: Vec<u32> = graph.neighbors(v).iter().map(|&u| u as u32).collect();
                c.push(v as u32);
                c.sort_unstable();
                c
            })
            .collect();
        let mut lattice = Lattice {
            graph,
            extents: extents.to_vec(),
            strides,
            cells,
            base: base as u32,
            closed,
            on_border: Vec::new(),
        };
        lattice.on_border = (0..cells).map(|i| lattice.coords(i).iter().zip(extents).any(|(&c, &w)| c == 0 || c + 1 == w)).collect();
        lattice
    }

    fn coords(&self, mut i: usize) -> Vec<usize> {
        self.extents
            .iter()
            .map(|&w| {
                let c = i % w;
                i /= w;
                c
            })
            .collect()
    }

    fn close(&self, a: u32, b: u32) -> bool {
        self.graph.is_close(a as usize, b as usize)
    }

    fn encode(&self, f: &GridMap) -> Option<State> {
        let mut state = vec![self.base; self.cells];
        for (p, &v) in f.support() {
            let mut idx = 0;
            for ((&x, &w), &s) in p.iter().zip(&self.extents).zip(&self.strides) {
                if x < 0 || x as usize >= w {
                    return None;
                }
                idx += x as usize * s;
            }
            state[idx] = v as u32;
        }
        Some(state.into_boxed_slice())
    }

    fn decode(&self, s: &[u32], dim: usize) -> GridMap {
        let entries = s.iter().enumerate().filter(|(_, &v)| v != self.base).map(|(i, &v)| {
            let p: Point = self.coords(i).into_iter().map(|c| c as i64).collect();
            (p, v as Vertex)
        });
        GridMap::from_support(dim, self.base as Vertex, entries).expect("lattice points have the box dimension")
    }

    fn states_close(&self, a: &[u32], b: &[u32]) -> bool {
        a.iter().zip(b).all(|(&x, &y)| self.close(x, y))
    }

    /// All valid states pointwise close to `from`, in increasing order.
    fn neighbors(&self, from: &[u32]) -> Vec<State> {
        let mut out = Vec::new();
        let mut current = vec![self.base; self.cells];
        self.fill(from, 0, &mut current, &mut out);
        out
    }

    fn fill(&self, from: &[u32], i: usize, current: &mut Vec<u32>, out: &mut Vec<State>) {
        if i == self.cells {
            out.push(current.clone().into_boxed_slice());
            return;
        }
        let coords = self.coords(i);
        'candidates: for &c in &self.closed[from[i] as usize] {
            if self.on_border[i] && !self.close(c, self.base) {
                continue;
            }
            for (d, &x) in coords.iter().enumerate() {
                if x > 0 && !self.close(current[i - self.strides[d]], c) {
                    continue 'candidates;
                }
            }
            current[i] = c;
            self.fill(from, i + 1, current, out);
        }
        current[i] = self.base;
    }
}

/// Searches for a homotopy from `f` to `g` through maps supported in the box
/// `[0, extents[0]) x ...`, using at most `max_layers` one-step moves.
///
/// `None` means no such homotopy exists inside these bounds; it does not
/// mean that `f` and `g` are inequivalent.
pub fn bounded_homotopy_search(
    graph: &Graph,
    f: &GridMap,
    g: &GridMap,
    extents: &[usize],
    max_layers: usize,
) -> Result<Option<HomotopyCertificate>> {
    let dim = f.dim();
    if g.dim() != dim {
        return Err(Error::DimensionMismatch { expected: dim, got: g.dim() });
    }
    if extents.len() != dim {
        return Err(Error::DimensionMismatch { expected: dim, got: extents.len() });
    }
    if f.base_value() != g.base_value() {
        return Err(Error::BaseMismatch);
    }
    if !f.is_finite() || !g.is_finite() {
        return Err(Error::Undefined("search between degenerate maps"));
    }
    if !f.is_valid(graph) || !g.is_valid(graph) {
        return Err(Error::InvalidGrid);
    }
    if f == g {
        return Ok(Some(HomotopyCertificate::reflexive(f)));
    }
    if extents.contains(&0) {
        return Err(Error::BoxTooSmall);
    }
    let lattice = Lattice::new(graph, extents, f.base_value());
    let start = lattice.encode(f).ok_or(Error::BoxTooSmall)?;
    let target = lattice.encode(g).ok_or(Error::BoxTooSmall)?;

    // arena of discovered states with parent links
    let mut states: Vec<State> = vec![start.clone()];
    let mut parents: Vec<Option<usize>> = vec![None];
    let mut seen: HashMap<State, usize> = HashMap::from([(start, 0)]);
    let mut frontier: Vec<usize> = vec![0];

    for depth in 0..max_layers {
        if let Some(&hit) = frontier.iter().find(|&&id| lattice.states_close(&states[id], &target)) {
            let mut path = vec![lattice.decode(&target, dim)];
            let mut cursor = Some(hit);
            while let Some(id) = cursor {
                path.push(lattice.decode(&states[id], dim));
                cursor = parents[id];
            }
            path.reverse();
            return Ok(Some(HomotopyCertificate::from_layers(path)));
        }
        if depth + 1 == max_layers {
            break;
        }
        let expansions: Vec<Vec<State>> = frontier.par_iter().map(|&id| lattice.neighbors(&states[id])).collect();
        let mut next = Vec::new();
        for (&id, list) in frontier.iter().zip(expansions) {
            for s in list {
                if !seen.contains_key(&s) {
                    let new_id = states.len();
                    seen.insert(s.clone(), new_id);
                    states.push(s);
                    parents.push(Some(id));
                    next.push(new_id);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        next.sort_by(|&a, &b| states[a].cmp(&states[b]));
        frontier = next;
    }
    Ok(None)
}

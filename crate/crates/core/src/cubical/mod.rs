//! The grid model of A-groups, homotopy certificates, and the cubical set
//! `M_*(Γ) = Hom(I_1^*, Γ)`.

mod cells;
mod certificate;
mod grid;
mod search;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub use cells::{cell_degeneracy, cell_face, cells, degenerate_images, f_vector, realize_cells, realize_cells_auto, CubeCell};
pub use certificate::{check_certificate, check_certificate_structure, Homotopy, HomotopyCertificate};
pub use grid::{grid_multiply, GridMap, Point};
pub use search::bounded_homotopy_search;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// A vertex in a grid file: a name from the graph, or a bare index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VertexRef {
    Index(usize),
    Name(String),
}

impl VertexRef {
    /// Resolves against `graph`; without one, names must be decimal indices.
    pub fn resolve(&self, graph: Option<&Graph>) -> Result<Vertex> {
        match (self, graph) {
            (VertexRef::Index(i), Some(g)) if *i >= g.vertex_count() => Err(Error::VertexOutOfRange(*i)),
            (VertexRef::Index(i), _) => Ok(*i),
            (VertexRef::Name(n), Some(g)) => g.require_vertex(n),
            (VertexRef::Name(n), None) => n.parse().map_err(|_| Error::UnknownVertex(n.clone())),
        }
    }

    fn of(v: Vertex, graph: Option<&Graph>) -> Self {
        match graph {
            Some(g) => VertexRef::Name(g.name(v).to_string()),
            None => VertexRef::Index(v),
        }
    }
}

/// On-disk form of a [`GridMap`]: `{"dim": n, "base": v, "support": {"i1,...,in": v}}`.
///
/// `cylinder` lists degenerate directions, in which case support keys only
/// carry the other coordinates. `window` marks the map as a stacked
/// homotopy read between those two values of its last coordinate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridMapFile {
    pub dim: usize,
    pub base: VertexRef,
    #[serde(default)]
    pub support: BTreeMap<String, VertexRef>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cylinder: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<(i64, i64)>,
}

fn parse_point(key: &str, arity: usize) -> Result<Point> {
    let point: Point = if key.trim().is_empty() {
        Vec::new()
    } else {
        key.split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| Error::parse(format!("support key \"{key}\""), "expected integers")))
            .collect::<Result<_>>()?
    };
    if point.len() != arity {
        return Err(Error::parse(format!("support key \"{key}\""), format!("expected {arity} coordinates")));
    }
    Ok(point)
}

fn point_key(p: &[i64]) -> String {
    p.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

impl GridMapFile {
    pub fn to_grid(&self, graph: Option<&Graph>) -> Result<GridMap> {
        let mut free = self.cylinder.clone();
        free.sort_unstable();
        free.dedup();
        if let Some(&bad) = free.iter().find(|&&d| d == 0 || d > self.dim) {
            return Err(Error::DirectionOutOfRange { direction: bad, max: self.dim });
        }
        let base = self.base.resolve(graph)?;
        let mut support = BTreeMap::new();
        for (key, v) in &self.support {
            let v = v.resolve(graph)?;
            if v != base {
                support.insert(parse_point(key, self.dim - free.len())?, v);
            }
        }
        Ok(GridMap::from_parts(self.dim, base, free, support))
    }

    pub fn from_grid(f: &GridMap, graph: Option<&Graph>) -> Self {
        GridMapFile {
            dim: f.dim(),
            base: VertexRef::of(f.base_value(), graph),
            support: f.support().iter().map(|(p, &v)| (point_key(p), VertexRef::of(v, graph))).collect(),
            cylinder: f.free_directions().to_vec(),
            window: None,
        }
    }

    /// A certificate's `h`. Without an explicit window, the window is the
    /// widest range of the last coordinate whose end slices are `ends`, or
    /// the support range widened by one when no ends are given.
    pub fn to_homotopy(&self, graph: Option<&Graph>, ends: Option<(&GridMap, &GridMap)>) -> Result<Homotopy> {
        let map = self.to_grid(graph)?;
        if map.dim() == 0 {
            return Err(Error::DimensionMismatch { expected: 1, got: 0 });
        }
        if let Some(window) = self.window {
            return Ok(Homotopy::Stacked { map, window });
        }
        let last = map.dim();
        let range = if map.free_directions().contains(&last) {
            None
        } else {
            let c = last - 1 - map.free_directions().len();
            map.core_bounds().map(|b| b[c])
        };
        let (lo, hi) = range.map_or((0, 0), |(lo, hi)| (lo - 1, hi + 1));
        let mut window = (lo, hi);
        if let Some((f, g)) = ends {
            let first = (lo..=hi).find(|&t| map.slice(last, t).is_ok_and(|s| s == *f));
            let end = (lo..=hi).rev().find(|&t| map.slice(last, t).is_ok_and(|s| s == *g));
            if let (Some(a), Some(b)) = (first, end) {
                if a <= b {
                    window = (a, b);
                }
            }
        }
        Ok(Homotopy::Stacked { map, window })
    }

    /// Stacks layers `t = 0..L` into a single map with an explicit window.
    pub fn from_homotopy(h: &Homotopy, graph: Option<&Graph>) -> Result<Self> {
        match h {
            Homotopy::Stacked { map, window } => {
                Ok(GridMapFile { window: Some(*window), ..GridMapFile::from_grid(map, graph) })
            }
            Homotopy::Layers(layers) => {
                let Some(first) = layers.first() else {
                    return Err(Error::Undefined("an empty homotopy"));
                };
                if layers.iter().any(|l| !l.is_finite()) {
                    return Err(Error::Undefined("stacking degenerate layers"));
                }
                let mut entries = Vec::new();
                for (t, l) in layers.iter().enumerate() {
                    for (p, &v) in l.support() {
                        let mut q = p.clone();
                        q.push(t as i64);
                        entries.push((q, v));
                    }
                }
                let map = GridMap::from_support(first.dim() + 1, first.base_value(), entries)?;
                let window = (0, layers.len() as i64 - 1);
                Ok(GridMapFile { window: Some(window), ..GridMapFile::from_grid(&map, graph) })
            }
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| Error::parse(format!("line {} column {}", e.line(), e.column()), e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("grid files serialize")
    }
}

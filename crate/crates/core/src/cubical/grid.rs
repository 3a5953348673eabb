use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// A lattice point of `Z^n`.
pub type Point = Vec<i64>;

/// A map `Z^n -> V(Γ)` equal to `base_value` off a finite core, possibly
/// composed with degeneracies.
///
/// The degenerate directions (`free`, 1-based, sorted) are coordinates the
/// map ignores; the remaining coordinates index the finite `support`. A map
/// with no free directions is an element of the based grid model; free
/// directions represent the images of degeneracy maps, which are constant
/// along whole lines and so never finitely supported. A constant map is
/// always stored with no free directions, which makes the representation
/// canonical and structural equality exact.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridMap {
    dim: usize,
    base_value: Vertex,
    free: Vec<usize>,
    support: BTreeMap<Point, Vertex>,
}

impl GridMap {
    pub fn constant(dim: usize, base_value: Vertex) -> Self {
        GridMap { dim, base_value, free: Vec::new(), support: BTreeMap::new() }
    }

    /// Finitely supported map; entries equal to `base_value` are dropped.
    pub fn from_support(dim: usize, base_value: Vertex, entries: impl IntoIterator<Item = (Point, Vertex)>) -> Result<Self> {
        let mut support = BTreeMap::new();
        for (p, v) in entries {
            if p.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: p.len() });
            }
            if v != base_value {
                support.insert(p, v);
            }
        }
        Ok(GridMap { dim, base_value, free: Vec::new(), support })
    }

    /// 1-dimensional map with `walk[i]` at lattice point `i`.
    pub fn from_walk(walk: &[Vertex], base_value: Vertex) -> Self {
        let entries = walk.iter().enumerate().map(|(i, &v)| (vec![i as i64], v));
        GridMap::from_support(1, base_value, entries).expect("points are 1-dimensional")
    }

    pub(crate) fn from_parts(dim: usize, base_value: Vertex, free: Vec<usize>, support: BTreeMap<Point, Vertex>) -> Self {
        let free = if support.is_empty() { Vec::new() } else { free };
        GridMap { dim, base_value, free, support }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn base_value(&self) -> Vertex {
        self.base_value
    }

    /// Degenerate directions (1-based).
    pub fn free_directions(&self) -> &[usize] {
        &self.free
    }

    /// Finitely supported, i.e. no degenerate directions.
    pub fn is_finite(&self) -> bool {
        self.free.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.support.is_empty()
    }

    /// Core entries; for a finite map these are the points off the base value.
    pub fn support(&self) -> &BTreeMap<Point, Vertex> {
        &self.support
    }

    fn core_dim(&self) -> usize {
        self.dim - self.free.len()
    }

    /// Drops the free coordinates of a full point.
    fn core_point(&self, p: &[i64]) -> Point {
        p.iter().enumerate().filter(|(i, _)| !self.free.contains(&(i + 1))).map(|(_, &x)| x).collect()
    }

    pub fn value(&self, p: &[i64]) -> Vertex {
        debug_assert_eq!(p.len(), self.dim);
        let core = self.core_point(p);
        self.support.get(&core).copied().unwrap_or(self.base_value)
    }

    /// Per-direction `(min, max)` of the core support, or `None` for constants.
    pub fn core_bounds(&self) -> Option<Vec<(i64, i64)>> {
        let first = self.support.keys().next()?;
        let mut bounds: Vec<(i64, i64)> = first.iter().map(|&x| (x, x)).collect();
        for p in self.support.keys() {
            for (b, &x) in bounds.iter_mut().zip(p) {
                b.0 = b.0.min(x);
                b.1 = b.1.max(x);
            }
        }
        Some(bounds)
    }

    /// Bounds of a finitely supported map in every direction.
    pub fn bounding_box(&self) -> Option<Vec<(i64, i64)>> {
        if !self.is_finite() {
            return None;
        }
        self.core_bounds()
    }

    /// Range of the core in full-dimensional direction `d` (1-based), if `d` is not free.
    fn direction_bounds(&self, d: usize) -> Option<(i64, i64)> {
        if self.free.contains(&d) {
            return None;
        }
        let c = d - 1 - self.free.iter().filter(|&&s| s < d).count();
        self.core_bounds().map(|b| b[c])
    }

    pub fn translate(&self, offset: &[i64]) -> GridMap {
        assert_eq!(offset.len(), self.dim);
        let core_offset = self.core_point(offset);
        let support = self
            .support
            .iter()
            .map(|(p, &v)| (p.iter().zip(&core_offset).map(|(a, b)| a + b).collect(), v))
            .collect();
        GridMap { dim: self.dim, base_value: self.base_value, free: self.free.clone(), support }
    }

    /// Translate so the core bounding box starts at the origin.
    pub fn normalized(&self) -> GridMap {
        match self.core_bounds() {
            None => self.clone(),
            Some(bounds) => {
                let support = self
                    .support
                    .iter()
                    .map(|(p, &v)| (p.iter().zip(&bounds).map(|(x, b)| x - b.0).collect(), v))
                    .collect();
                GridMap { dim: self.dim, base_value: self.base_value, free: self.free.clone(), support }
            }
        }
    }

    /// Translation-invariant hash key.
    pub fn canonical_key(&self) -> GridMap {
        self.normalized()
    }

    /// Pointwise image under a vertex map, with the new base value.
    pub fn map_values(&self, f: impl Fn(Vertex) -> Vertex, base_value: Vertex) -> GridMap {
        let support: BTreeMap<Point, Vertex> =
            self.support.iter().map(|(p, &v)| (p.clone(), f(v))).filter(|(_, v)| *v != base_value).collect();
        GridMap::from_parts(self.dim, base_value, self.free.clone(), support)
    }

    /// The degeneracy `β'_i`: a map of one more dimension ignoring coordinate `i`.
    pub fn degeneracy(&self, i: usize) -> Result<GridMap> {
        if i == 0 || i > self.dim + 1 {
            return Err(Error::DirectionOutOfRange { direction: i, max: self.dim + 1 });
        }
        let mut free: Vec<usize> = self.free.iter().map(|&s| if s >= i { s + 1 } else { s }).collect();
        free.push(i);
        free.sort_unstable();
        Ok(GridMap::from_parts(self.dim + 1, self.base_value, free, self.support.clone()))
    }

    /// The face `α'_{i,ε}`: the stable values of the map in direction `(i, ε)`.
    ///
    /// Along a degenerate direction this removes the degeneracy; along any
    /// other direction the finite core has already stabilized to the base
    /// value, so the face is constant for either sign.
    pub fn stable_face(&self, i: usize, epsilon: i8) -> Result<GridMap> {
        if self.dim == 0 {
            return Err(Error::Undefined("faces of 0-dimensional maps"));
        }
        if i == 0 || i > self.dim {
            return Err(Error::DirectionOutOfRange { direction: i, max: self.dim });
        }
        debug_assert!(epsilon == 1 || epsilon == -1);
        if self.free.contains(&i) {
            let free = self.free.iter().filter(|&&s| s != i).map(|&s| if s > i { s - 1 } else { s }).collect();
            Ok(GridMap::from_parts(self.dim - 1, self.base_value, free, self.support.clone()))
        } else {
            Ok(GridMap::constant(self.dim - 1, self.base_value))
        }
    }

    /// Restriction to the hyperplane `x_i = t`, as a map of one less dimension.
    pub fn slice(&self, i: usize, t: i64) -> Result<GridMap> {
        if i == 0 || i > self.dim {
            return Err(Error::DirectionOutOfRange { direction: i, max: self.dim });
        }
        let free: Vec<usize> = self.free.iter().filter(|&&s| s != i).map(|&s| if s > i { s - 1 } else { s }).collect();
        if self.free.contains(&i) {
            return Ok(GridMap::from_parts(self.dim - 1, self.base_value, free, self.support.clone()));
        }
        let c = i - 1 - self.free.iter().filter(|&&s| s < i).count();
        let support = self
            .support
            .iter()
            .filter(|(p, _)| p[c] == t)
            .map(|(p, &v)| {
                let mut q = p.clone();
                q.remove(c);
                (q, v)
            })
            .collect();
        Ok(GridMap::from_parts(self.dim - 1, self.base_value, free, support))
    }

    /// Adjacent lattice points go to equal-or-adjacent vertices, under `close`.
    pub fn is_valid_with(&self, close: impl Fn(Vertex, Vertex) -> bool) -> bool {
        let k = self.core_dim();
        for (p, &v) in &self.support {
            let mut q = p.clone();
            for d in 0..k {
                for step in [-1, 1] {
                    q[d] += step;
                    let w = self.support.get(&q).copied().unwrap_or(self.base_value);
                    q[d] -= step;
                    if !close(v, w) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Values in range and lattice-adjacent points mapped close in `g`.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let n = g.vertex_count();
        self.base_value < n && self.support.values().all(|&v| v < n) && self.is_valid_with(|a, b| g.is_close(a, b))
    }

    /// A finite box of full points on which two maps of equal dimension can
    /// disagree: per direction, the union of both cores' ranges widened by
    /// one, or the single coordinate 0 where both maps are constant.
    pub(crate) fn comparison_points(&self, other: &GridMap) -> Vec<Point> {
        debug_assert_eq!(self.dim, other.dim);
        let ranges: Vec<(i64, i64)> = (1..=self.dim)
            .map(|d| {
                let spans: Vec<(i64, i64)> = [self, other].iter().filter_map(|m| m.direction_bounds(d)).collect();
                match (spans.iter().map(|s| s.0).min(), spans.iter().map(|s| s.1).max()) {
                    (Some(lo), Some(hi)) => (lo - 1, hi + 1),
                    _ => (0, 0),
                }
            })
            .collect();
        let mut points = vec![Vec::with_capacity(self.dim)];
        for (lo, hi) in ranges {
            points = points
                .into_iter()
                .flat_map(|p| {
                    (lo..=hi).map(move |x| {
                        let mut q = p.clone();
                        q.push(x);
                        q
                    })
                })
                .collect();
        }
        points
    }

    /// Every point is mapped close by both maps (one homotopy layer).
    pub fn is_close_to(&self, other: &GridMap, close: impl Fn(Vertex, Vertex) -> bool) -> bool {
        self.dim == other.dim && self.comparison_points(other).iter().all(|p| close(self.value(p), other.value(p)))
    }

    /// The values `f(min-1), ..., f(max+1)` of a finitely supported
    /// 1-dimensional map, a closed walk at the base value.
    pub fn to_walk(&self) -> Option<Vec<Vertex>> {
        if self.dim != 1 || !self.is_finite() {
            return None;
        }
        match self.core_bounds() {
            None => Some(vec![self.base_value]),
            Some(b) => Some((b[0].0 - 1..=b[0].1 + 1).map(|x| self.value(&[x])).collect()),
        }
    }
}

/// `[f] * [g]`: `g` is translated along `direction` to start two lattice
/// steps past the end of `f`, leaving a separating layer of base values,
/// and the supports are joined. The result is translate-normalized.
pub fn grid_multiply(f: &GridMap, g: &GridMap, direction: usize) -> Result<GridMap> {
    if f.dim() != g.dim() {
        return Err(Error::DimensionMismatch { expected: f.dim(), got: g.dim() });
    }
    if f.dim() == 0 {
        return Err(Error::Undefined("multiplication of 0-dimensional maps"));
    }
    if direction == 0 || direction > f.dim() {
        return Err(Error::DirectionOutOfRange { direction, max: f.dim() });
    }
    if f.base_value() != g.base_value() {
        return Err(Error::BaseMismatch);
    }
    if !f.is_finite() || !g.is_finite() {
        return Err(Error::Undefined("multiplication of degenerate maps"));
    }
    let (Some(fb), Some(gb)) = (f.bounding_box(), g.bounding_box()) else {
        return Ok(if f.is_constant() { g.normalized() } else { f.normalized() });
    };
    let d = direction - 1;
    let mut offset = vec![0; f.dim()];
    offset[d] = fb[d].1 + 2 - gb[d].0;
    let shifted = g.translate(&offset);
    let mut support = f.support().clone();
    support.extend(shifted.support().iter().map(|(p, &v)| (p.clone(), v)));
    Ok(GridMap::from_parts(f.dim(), f.base_value(), Vec::new(), support).normalized())
}

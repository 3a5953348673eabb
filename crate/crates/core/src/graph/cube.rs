use super::{Graph, Vertex};
use crate::error::{Error, Result};

/// The discrete cube `I_m^n`: vertices `{0..=m}^n`, lattice adjacency.
///
/// Vertex indices put the first coordinate in the least significant place, so
/// for `m = 1` the index of a corner is the bit pattern of its coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DiscreteCube {
    pub n: usize,
    pub m: usize,
}

impl DiscreteCube {
    pub fn new(n: usize, m: usize) -> Self {
        DiscreteCube { n, m }
    }

    pub fn vertex_count(&self) -> usize {
        (self.m + 1).pow(self.n as u32)
    }

    pub fn coords(&self, mut index: usize) -> Vec<usize> {
        let side = self.m + 1;
        (0..self.n)
            .map(|_| {
                let c = index % side;
                index /= side;
                c
            })
            .collect()
    }

    pub fn index(&self, coords: &[usize]) -> usize {
        debug_assert_eq!(coords.len(), self.n);
        coords.iter().rev().fold(0, |acc, &c| acc * (self.m + 1) + c)
    }

    pub fn is_boundary(&self, coords: &[usize]) -> bool {
        coords.iter().any(|&c| c == 0 || c == self.m)
    }

    /// Graph `I_m^n` based at the origin; vertex names are `i1,...,in`.
    pub fn graph(&self) -> Graph {
        let count = self.vertex_count();
        let names = (0..count)
            .map(|i| self.coords(i).iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        let mut edges = Vec::new();
        let mut stride = 1;
        for _ in 0..self.n {
            for i in 0..count {
                if (i / stride) % (self.m + 1) < self.m {
                    edges.push((i, i + stride));
                }
            }
            stride *= self.m + 1;
        }
        let base = (count > 0).then_some(0);
        Graph::from_indices(names, edges, base).expect("cube graph is simple")
    }
}

/// `I_m^n` with base `(0,...,0)`.
pub fn cube_graph(n: usize, m: usize) -> Graph {
    DiscreteCube::new(n, m).graph()
}

/// Indices (into `cube_graph(n, m)`) of the vertices with a coordinate equal to 0 or m.
pub fn cube_boundary(n: usize, m: usize) -> Vec<Vertex> {
    let cube = DiscreteCube::new(n, m);
    (0..cube.vertex_count()).filter(|&i| cube.is_boundary(&cube.coords(i))).collect()
}

/// A vertex assignment on a discrete cube.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CubeMap {
    pub cube: DiscreteCube,
    pub values: Vec<Vertex>,
}

impl CubeMap {
    pub fn new(cube: DiscreteCube, values: Vec<Vertex>) -> Result<Self> {
        if values.len() != cube.vertex_count() {
            return Err(Error::MapSize { expected: cube.vertex_count(), got: values.len() });
        }
        Ok(CubeMap { cube, values })
    }

    pub fn constant(cube: DiscreteCube, v: Vertex) -> Self {
        CubeMap { cube, values: vec![v; cube.vertex_count()] }
    }

    pub fn at(&self, coords: &[usize]) -> Vertex {
        self.values[self.cube.index(coords)]
    }

    pub fn is_hom(&self, target: &Graph) -> bool {
        let side = self.cube.m + 1;
        let mut stride = 1;
        for _ in 0..self.cube.n {
            for i in 0..self.values.len() {
                if (i / stride) % side < self.cube.m && !target.is_close(self.values[i], self.values[i + stride]) {
                    return false;
                }
            }
            stride *= side;
        }
        true
    }

    /// Restriction to the sub-cube `I_p^n`, `p ≤ m`.
    pub fn restrict(&self, p: usize) -> CubeMap {
        assert!(p <= self.cube.m);
        let cube = DiscreteCube::new(self.cube.n, p);
        let values = (0..cube.vertex_count()).map(|i| self.at(&cube.coords(i))).collect();
        CubeMap { cube, values }
    }
}

/// Extends a cube map from `I_m^n` to `I_p^n` by repeating the last layer in
/// every direction (coordinates clamped to `m`).
pub fn extend_cube_hom(f: &CubeMap, p: usize) -> Result<CubeMap> {
    if p < f.cube.m {
        return Err(Error::PadTooShort { len: f.cube.m, target: p });
    }
    let cube = DiscreteCube::new(f.cube.n, p);
    let values = (0..cube.vertex_count())
        .map(|i| {
            let clamped: Vec<usize> = cube.coords(i).into_iter().map(|c| c.min(f.cube.m)).collect();
            f.at(&clamped)
        })
        .collect();
    Ok(CubeMap { cube, values })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cube_examples() {
        let p3 = cube_graph(1, 3);
        assert_eq!(p3.names(), &["0", "1", "2", "3"]);
        assert_eq!(p3.edges(), &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(p3.base(), Some(0));

        let sq = cube_graph(2, 1);
        assert_eq!((sq.vertex_count(), sq.edge_count()), (4, 4));
        assert!(super::super::is_isomorphic(&sq, &Graph::cycle(4)));

        let grid = cube_graph(2, 2);
        assert_eq!((grid.vertex_count(), grid.edge_count()), (9, 12));
        assert_eq!(grid.name(grid.base().unwrap()), "0,0");
    }

    #[test]
    fn boundary_examples() {
        assert_eq!(cube_boundary(1, 3), vec![0, 3]);
        let b = cube_boundary(2, 2);
        assert_eq!(b.len(), 8);
        let g = cube_graph(2, 2);
        assert!(!b.contains(&g.vertex("1,1").unwrap()));
        assert_eq!(cube_boundary(2, 1).len(), 4);
    }

    #[test]
    fn extension_examples() {
        let c5 = Graph::cycle(5);
        let constant = CubeMap::constant(DiscreteCube::new(2, 2), 3);
        assert_eq!(extend_cube_hom(&constant, 5).unwrap(), CubeMap::constant(DiscreteCube::new(2, 5), 3));

        let path = CubeMap::new(DiscreteCube::new(1, 2), vec![0, 1, 2]).unwrap();
        let ext = extend_cube_hom(&path, 4).unwrap();
        assert_eq!(ext.values, vec![0, 1, 2, 2, 2]);
        assert!(ext.is_hom(&c5));
        assert_eq!(ext.restrict(2), path);
        assert!(extend_cube_hom(&path, 1).is_err());
    }

    #[test]
    fn extension_of_square_map_is_hom() {
        let c4 = Graph::cycle(4);
        let f = CubeMap::new(DiscreteCube::new(2, 1), vec![0, 1, 3, 0]).unwrap();
        assert!(f.is_hom(&c4));
        let ext = extend_cube_hom(&f, 3).unwrap();
        assert!(ext.is_hom(&c4));
        assert_eq!(ext.at(&[3, 2]), f.at(&[1, 1]));
        assert_eq!(ext.restrict(1), f);
    }
}

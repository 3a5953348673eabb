use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{cube_graph, hom_assignments, Graph, Vertex};

use super::GridMap;

/// A graph map `I_1^n -> Γ`, given by its `2^n` corner labels. Corner
/// `(x_1, ..., x_n)` sits at index `x_1 + 2 x_2 + ... + 2^{n-1} x_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CubeCell {
    dim: usize,
    labels: Vec<Vertex>,
}

impl CubeCell {
    pub fn new(dim: usize, labels: Vec<Vertex>) -> Result<Self> {
        if labels.len() != 1 << dim {
            return Err(Error::MapSize { expected: 1 << dim, got: labels.len() });
        }
        Ok(CubeCell { dim, labels })
    }

    pub fn constant(dim: usize, v: Vertex) -> Self {
        CubeCell { dim, labels: vec![v; 1 << dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[Vertex] {
        &self.labels
    }

    /// Corners differing in one coordinate carry equal or adjacent labels.
    pub fn is_hom(&self, g: &Graph) -> bool {
        (0..self.labels.len()).all(|c| {
            (0..self.dim).all(|d| {
                let other = c | (1 << d);
                other == c || g.is_close(self.labels[c], self.labels[other])
            })
        })
    }

    /// True when the labels ignore coordinate `i` (1-based).
    pub fn is_constant_along(&self, i: usize) -> bool {
        let bit = 1 << (i - 1);
        (0..self.labels.len()).filter(|c| c & bit == 0).all(|c| self.labels[c] == self.labels[c | bit])
    }

    /// In the image of some degeneracy.
    pub fn is_degenerate(&self) -> bool {
        (1..=self.dim).any(|i| self.is_constant_along(i))
    }
}

/// Inserts bit `b` at 1-based position `i` of a corner index.
fn insert_bit(x: usize, i: usize, b: usize) -> usize {
    let low = x & ((1 << (i - 1)) - 1);
    let high = x >> (i - 1);
    low | (b << (i - 1)) | (high << i)
}

/// Removes the bit at 1-based position `i`.
fn remove_bit(y: usize, i: usize) -> usize {
    let low = y & ((1 << (i - 1)) - 1);
    let high = y >> i;
    low | (high << (i - 1))
}

/// The face map induced by the inclusion of `I_1^{n-1}` as the `(i, ε)`-face.
pub fn cell_face(c: &CubeCell, i: usize, epsilon: i8) -> Result<CubeCell> {
    if c.dim == 0 {
        return Err(Error::Undefined("faces of 0-cells"));
    }
    if i == 0 || i > c.dim {
        return Err(Error::DirectionOutOfRange { direction: i, max: c.dim });
    }
    let b = usize::from(epsilon > 0);
    let labels = (0..1 << (c.dim - 1)).map(|x| c.labels[insert_bit(x, i, b)]).collect();
    Ok(CubeCell { dim: c.dim - 1, labels })
}

/// The degeneracy induced by the projection forgetting coordinate `i`.
pub fn cell_degeneracy(c: &CubeCell, i: usize) -> Result<CubeCell> {
    if i == 0 || i > c.dim + 1 {
        return Err(Error::DirectionOutOfRange { direction: i, max: c.dim + 1 });
    }
    let labels = (0..1 << (c.dim + 1)).map(|y| c.labels[remove_bit(y, i)]).collect();
    Ok(CubeCell { dim: c.dim + 1, labels })
}

/// `Hom(I_1^n, Γ)`, lexicographic in the corner labels.
pub fn cells(g: &Graph, n: usize) -> Vec<CubeCell> {
    let cube = cube_graph(n, 1);
    hom_assignments(&cube, g).into_iter().map(|labels| CubeCell { dim: n, labels }).collect()
}

/// Counts of nondegenerate cells in dimensions `0..=max_dim`.
pub fn f_vector(g: &Graph, max_dim: usize) -> Vec<usize> {
    (0..=max_dim).map(|n| cells(g, n).iter().filter(|c| !c.is_degenerate()).count()).collect()
}

/// The labelled unit cubes of `f` over the box `lower + [0, side]^n`: one cell
/// per unit subcube, listed with the first coordinate varying fastest.
pub fn realize_cells(f: &GridMap, lower: &[i64], side: usize) -> Result<Vec<CubeCell>> {
    let n = f.dim();
    if lower.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: lower.len() });
    }
    let count = side.pow(n as u32);
    let mut out = Vec::with_capacity(count);
    for k in 0..count {
        let mut rest = k;
        let origin: Vec<i64> = lower
            .iter()
            .map(|&lo| {
                let c = (rest % side) as i64;
                rest /= side;
                lo + c
            })
            .collect();
        let labels = (0..1usize << n)
            .map(|corner| {
                let p: Vec<i64> = origin.iter().enumerate().map(|(d, &o)| o + ((corner >> d) & 1) as i64).collect();
                f.value(&p)
            })
            .collect();
        out.push(CubeCell { dim: n, labels });
    }
    Ok(out)
}

/// [`realize_cells`] over the smallest cube that holds the support with a
/// border of base values.
pub fn realize_cells_auto(f: &GridMap) -> Result<Vec<CubeCell>> {
    let n = f.dim();
    match f.bounding_box() {
        Some(b) => {
            let lower: Vec<i64> = b.iter().map(|r| r.0 - 1).collect();
            let side = b.iter().map(|r| (r.1 - r.0 + 2) as usize).max().unwrap_or(1);
            realize_cells(f, &lower, side)
        }
        None if f.is_finite() => realize_cells(f, &vec![0; n], 1),
        None => Err(Error::Undefined("realizing a degenerate map on a finite box")),
    }
}

/// Distinct images of `cell_degeneracy` over a cell list, in any direction.
pub fn degenerate_images(cells: &[CubeCell]) -> HashSet<CubeCell> {
    let mut out = HashSet::new();
    for c in cells {
        for i in 1..=c.dim + 1 {
            out.insert(cell_degeneracy(c, i).expect("direction in range"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute force over all label tuples: hom check, then subtract those
    /// constant along some coordinate.
    fn nondegenerate_oracle(g: &Graph, n: usize) -> (usize, usize) {
        let corners = 1usize << n;
        let nv = g.vertex_count();
        let mut total = 0;
        let mut nondeg = 0;
        for code in 0..nv.pow(corners as u32) {
            let mut rest = code;
            let labels: Vec<usize> = (0..corners)
                .map(|_| {
                    let v = rest % nv;
                    rest /= nv;
                    v
                })
                .collect();
            let hom = (0..corners).all(|c| (0..n).all(|d| g.is_close(labels[c], labels[c ^ (1 << d)])));
            if !hom {
                continue;
            }
            total += 1;
            let degenerate = (0..n).any(|d| (0..corners).all(|c| labels[c] == labels[c ^ (1 << d)]));
            if !degenerate {
                nondeg += 1;
            }
        }
        (total, nondeg)
    }

    #[test]
    fn cell_counts() {
        let k1 = Graph::complete(1);
        for n in 0..4 {
            assert_eq!(cells(&k1, n).len(), 1);
        }
        assert_eq!(cells(&Graph::complete(2), 2).len(), 16);
        assert_eq!(cells(&Graph::cycle(4), 1).len(), 12);
        assert_eq!(nondegenerate_oracle(&Graph::cycle(4), 1), (12, 8));
    }

    #[test]
    fn f_vector_examples() {
        assert_eq!(f_vector(&Graph::complete(1), 3), vec![1, 0, 0, 0]);
        assert_eq!(nondegenerate_oracle(&Graph::complete(2), 2), (16, 10));
        assert_eq!(f_vector(&Graph::complete(2), 2), vec![2, 2, 10]);
        assert_eq!(f_vector(&Graph::cycle(4), 1), vec![4, 8]);
    }

    #[test]
    fn face_examples() {
        let c = CubeCell::new(2, vec![10, 11, 12, 13]).unwrap();
        // corners (x00, x10, x01, x11)
        assert_eq!(cell_face(&c, 1, -1).unwrap().labels(), &[10, 12]);
        assert_eq!(cell_face(&c, 1, 1).unwrap().labels(), &[11, 13]);
        assert_eq!(cell_face(&c, 2, -1).unwrap().labels(), &[10, 11]);
        assert_eq!(cell_face(&CubeCell::constant(3, 4), 2, 1).unwrap(), CubeCell::constant(2, 4));
        assert!(cell_face(&CubeCell::constant(0, 1), 1, 1).is_err());
    }

    #[test]
    fn degeneracy_examples() {
        let v = CubeCell::constant(0, 7);
        assert_eq!(cell_degeneracy(&v, 1).unwrap(), CubeCell::constant(1, 7));
        let e = CubeCell::new(1, vec![0, 1]).unwrap();
        for i in 1..=2 {
            for eps in [-1, 1] {
                assert_eq!(cell_face(&cell_degeneracy(&e, i).unwrap(), i, eps).unwrap(), e);
            }
        }
        let images = degenerate_images(&cells(&Graph::complete(2), 1));
        assert_eq!(images.len(), 6);
        let along_1: HashSet<_> = cells(&Graph::complete(2), 1).iter().map(|c| cell_degeneracy(c, 1).unwrap()).collect();
        assert_eq!(along_1.len(), 4);
    }

    #[test]
    fn realization_examples() {
        let one = GridMap::constant(2, 0);
        let cells2 = realize_cells(&one, &[0, 0], 2).unwrap();
        assert_eq!(cells2, vec![CubeCell::constant(2, 0); 4]);

        let c4 = Graph::cycle(4);
        let f = GridMap::from_walk(&[0, 1, 2, 3, 0], 0);
        let unit: Vec<Vec<usize>> = realize_cells_auto(&f).unwrap().iter().map(|c| c.labels().to_vec()).collect();
        assert_eq!(unit, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]]);
        assert!(realize_cells_auto(&f).unwrap().iter().all(|c| c.is_hom(&c4)));
    }
}

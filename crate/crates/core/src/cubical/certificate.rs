use crate::error::{Error, Result};
use crate::graph::Graph;

use super::GridMap;

/// The homotopy `h` of a certificate, a map of dimension `n + 1` that
/// stabilizes in direction `n + 1` on both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Homotopy {
    /// Slices `h(-, t)` for `t = 0..L`; below 0 and above `L - 1` the end
    /// slices repeat.
    Layers(Vec<GridMap>),
    /// A map of dimension `n + 1` read between `window.0` and `window.1`
    /// inclusive in its last direction and clamped outside that window.
    Stacked { map: GridMap, window: (i64, i64) },
}

impl Homotopy {
    pub fn layers(&self) -> Result<Vec<GridMap>> {
        match self {
            Homotopy::Layers(layers) => Ok(layers.clone()),
            Homotopy::Stacked { map, window } => {
                if map.dim() == 0 {
                    return Err(Error::DimensionMismatch { expected: 1, got: 0 });
                }
                if window.0 > window.1 {
                    return Err(Error::Undefined("an empty homotopy window"));
                }
                (window.0..=window.1).map(|t| map.slice(map.dim(), t)).collect()
            }
        }
    }
}

/// A claimed witness of `f ~ g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopyCertificate {
    pub f: GridMap,
    pub g: GridMap,
    pub h: Homotopy,
}

impl HomotopyCertificate {
    pub fn from_layers(layers: Vec<GridMap>) -> Self {
        let f = layers.first().cloned().expect("at least one layer");
        let g = layers.last().cloned().expect("at least one layer");
        HomotopyCertificate { f, g, h: Homotopy::Layers(layers) }
    }

    /// Reflexivity witness with a single layer.
    pub fn reflexive(f: &GridMap) -> Self {
        Self::from_layers(vec![f.clone()])
    }

    /// Reflexivity witness `h = β'_{n+1}(f)`.
    pub fn degenerate(f: &GridMap) -> Self {
        let map = f.degeneracy(f.dim() + 1).expect("last direction is in range");
        HomotopyCertificate { f: f.clone(), g: f.clone(), h: Homotopy::Stacked { map, window: (0, 0) } }
    }

    /// Number of layers, i.e. one-step moves between `f` and `g`.
    pub fn layer_count(&self) -> Result<usize> {
        Ok(self.h.layers()?.len().saturating_sub(1))
    }

    /// Symmetry witness: `h` read backwards in direction `n + 1`.
    pub fn reversed(&self) -> Result<Self> {
        let mut layers = self.h.layers()?;
        layers.reverse();
        Ok(HomotopyCertificate { f: self.g.clone(), g: self.f.clone(), h: Homotopy::Layers(layers) })
    }

    /// Transitivity witness: stacks `self` (f to g) on `next` (g to k).
    pub fn then(&self, next: &HomotopyCertificate) -> Result<Self> {
        if self.g != next.f {
            return Err(Error::Undefined("stacking certificates with mismatched ends"));
        }
        let mut layers = self.h.layers()?;
        let tail = next.h.layers()?;
        layers.extend(tail.into_iter().skip(1));
        Ok(HomotopyCertificate { f: self.f.clone(), g: next.g.clone(), h: Homotopy::Layers(layers) })
    }
}

/// Checks the three face conditions of the relation; no adjacency checks.
///
/// (1) `f` and `g` have the same stable faces in every direction `i ≤ n`;
/// (2) every side face of `h` is the degeneracy of the matching face of `f`,
///     i.e. each slice of `h` has those same faces;
/// (3) the end slices of `h` in direction `n + 1` are `f` and `g`.
pub fn check_certificate_structure(cert: &HomotopyCertificate) -> Result<bool> {
    let n = cert.f.dim();
    if cert.g.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, got: cert.g.dim() });
    }
    if let Homotopy::Stacked { map, .. } = &cert.h {
        if map.dim() != n + 1 {
            return Err(Error::DimensionMismatch { expected: n + 1, got: map.dim() });
        }
    }
    let layers = cert.h.layers()?;
    if let Some(bad) = layers.iter().find(|l| l.dim() != n) {
        return Err(Error::DimensionMismatch { expected: n, got: bad.dim() });
    }
    let (Some(first), Some(last)) = (layers.first(), layers.last()) else {
        return Ok(false);
    };
    let base = cert.f.base_value();
    if cert.g.base_value() != base || layers.iter().any(|l| l.base_value() != base) {
        return Ok(false);
    }
    for i in 1..=n {
        for e in [-1, 1] {
            let face = cert.f.stable_face(i, e)?;
            if cert.g.stable_face(i, e)? != face {
                return Ok(false);
            }
            for layer in &layers {
                if layer.stable_face(i, e)? != face {
                    return Ok(false);
                }
            }
        }
    }
    Ok(*first == cert.f && *last == cert.g)
}

/// Full check: the face conditions plus `h` being a graph map into `graph`
/// (each slice valid, consecutive slices pointwise equal-or-adjacent).
pub fn check_certificate(graph: &Graph, cert: &HomotopyCertificate) -> Result<bool> {
    if !check_certificate_structure(cert)? {
        return Ok(false);
    }
    let layers = cert.h.layers()?;
    let close = |a, b| graph.is_close(a, b);
    Ok(cert.f.is_valid(graph)
        && cert.g.is_valid(graph)
        && layers.iter().all(|l| l.is_valid(graph))
        && layers.windows(2).all(|w| w[0].is_close_to(&w[1], close)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4_contraction() -> (Graph, HomotopyCertificate) {
        let c4 = Graph::cycle(4);
        let rows = [vec![0, 1, 2, 3, 0], vec![0, 0, 3, 3, 0], vec![0, 0, 0, 0, 0]];
        let layers: Vec<GridMap> = rows.iter().map(|r| GridMap::from_walk(r, 0)).collect();
        (c4, HomotopyCertificate::from_layers(layers))
    }

    #[test]
    fn degenerate_witness_verifies() {
        let c5 = Graph::cycle(5);
        let f = GridMap::from_walk(&[0, 1, 2, 1, 0], 0);
        assert!(check_certificate(&c5, &HomotopyCertificate::degenerate(&f)).unwrap());
        assert!(check_certificate(&c5, &HomotopyCertificate::reflexive(&f)).unwrap());
    }

    #[test]
    fn wrong_end_slice_fails() {
        let (c4, cert) = c4_contraction();
        let wrong = HomotopyCertificate { g: GridMap::from_walk(&[0, 1, 0], 0), ..cert };
        assert!(!check_certificate(&c4, &wrong).unwrap());
    }

    #[test]
    fn c4_contraction_rows() {
        let (c4, cert) = c4_contraction();
        // each row a valid grid line, vertical neighbours close
        let layers = cert.h.layers().unwrap();
        assert!(layers.iter().all(|l| l.is_valid(&c4)));
        for w in layers.windows(2) {
            for x in -1..=5 {
                assert!(c4.is_close(w[0].value(&[x]), w[1].value(&[x])));
            }
        }
        assert!(check_certificate(&c4, &cert).unwrap());
        assert_eq!(cert.g, GridMap::constant(1, 0));

        // the same homotopy as one 2-dimensional map with an explicit window
        let mut entries = Vec::new();
        for (t, l) in layers.iter().enumerate() {
            for (p, &v) in l.support() {
                entries.push((vec![p[0], t as i64], v));
            }
        }
        let map = GridMap::from_support(2, 0, entries).unwrap();
        let stacked = HomotopyCertificate { h: Homotopy::Stacked { map, window: (0, 2) }, ..cert.clone() };
        assert!(check_certificate(&c4, &stacked).unwrap());
    }

    #[test]
    fn invalid_jump_fails() {
        let c4 = Graph::cycle(4);
        let f = GridMap::from_walk(&[0, 1, 2, 1, 0], 0);
        let cert = HomotopyCertificate::from_layers(vec![f, GridMap::constant(1, 0)]);
        assert!(check_certificate_structure(&cert).unwrap());
        assert!(!check_certificate(&c4, &cert).unwrap());
    }

    #[test]
    fn dimension_errors() {
        let f = GridMap::from_walk(&[0, 1, 0], 0);
        let bad = HomotopyCertificate { f: f.clone(), g: f.clone(), h: Homotopy::Stacked { map: f.clone(), window: (0, 0) } };
        assert!(matches!(check_certificate_structure(&bad), Err(Error::DimensionMismatch { .. })));
        let bad = HomotopyCertificate { f: f.clone(), g: GridMap::constant(2, 0), h: Homotopy::Layers(vec![f]) };
        assert!(check_certificate_structure(&bad).is_err());
    }

    #[test]
    fn symmetry_and_transitivity() {
        let (c4, cert) = c4_contraction();
        let back = cert.reversed().unwrap();
        assert!(check_certificate(&c4, &back).unwrap());
        let round = cert.then(&back).unwrap();
        assert!(check_certificate(&c4, &round).unwrap());
        assert_eq!(round.layer_count().unwrap(), 4);
        assert!(back.then(&back).is_err());
    }
}

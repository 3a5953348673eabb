//! Facet-list simplicial complexes and their q-connectivity graphs.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use log::warn;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A simplex as a sorted list of vertex indices of its complex.
pub type Simplex = Vec<usize>;

/// Which simplices become vertices of the connectivity graph.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum GammaMode {
    /// Facets of dimension at least q.
    #[default]
    Maximal,
    /// Every face of dimension at least q.
    All,
}

impl FromStr for GammaMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "maximal" => Ok(GammaMode::Maximal),
            "all" => Ok(GammaMode::All),
            other => Err(Error::parse("mode", format!("expected `maximal` or `all`, got `{other}`"))),
        }
    }
}

impl fmt::Display for GammaMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GammaMode::Maximal => "maximal",
            GammaMode::All => "all",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    facets: Vec<Simplex>,
}

impl SimplicialComplex {
    /// Builds a complex from facet token lists. Faces contained in another
    /// listed face (including repeats) are dropped with a warning.
    pub fn from_facets<S: AsRef<str>>(facets: impl IntoIterator<Item = Vec<S>>) -> Self {
        let mut vertices: Vec<String> = Vec::new();
        let mut lookup = std::collections::HashMap::new();
        let mut raw: Vec<Simplex> = Vec::new();
        for facet in facets {
            let mut simplex: Simplex = facet
                .iter()
                .map(|tok| {
                    let tok = tok.as_ref();
                    *lookup.entry(tok.to_owned()).or_insert_with(|| {
                        vertices.push(tok.to_owned());
                        vertices.len() - 1
                    })
                })
                .collect();
            simplex.sort_unstable();
            simplex.dedup();
            if !simplex.is_empty() {
                raw.push(simplex);
            }
        }
        let mut facets: Vec<Simplex> = Vec::with_capacity(raw.len());
        for (i, s) in raw.iter().enumerate() {
            // s is dropped if a strictly larger face exists, or an equal one appears earlier
            let dominated = raw.iter().enumerate().any(|(j, t)| {
                j != i && is_subset(s, t) && (t.len() > s.len() || j < i)
            });
            if dominated {
                warn!("dropping non-maximal face {{{}}}", name_of(&vertices, s));
            } else {
                facets.push(s.clone());
            }
        }
        SimplicialComplex { vertices, facets }
    }

    /// Parses the facet text format: one facet per line, whitespace-separated
    /// tokens, `#` starts a comment line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut facets = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if let Some(bad) = tokens.iter().find(|t| t.contains(',')) {
                return Err(Error::parse(format!("line {}", lineno + 1), format!("vertex token `{bad}` contains a comma")));
            }
            facets.push(tokens);
        }
        Ok(Self::from_facets(facets))
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn dimension(&self) -> Result<usize> {
        self.facets.iter().map(|f| f.len() - 1).max().ok_or(Error::EmptyComplex)
    }

    /// Vertex tokens of a simplex joined by commas.
    pub fn simplex_name(&self, s: &[usize]) -> String {
        name_of(&self.vertices, s)
    }

    /// Resolves a token list to a simplex of this complex.
    pub fn simplex(&self, tokens: &[&str]) -> Result<Simplex> {
        let missing = || Error::BaseSimplexMissing(format!("{{{}}}", tokens.join(",")));
        let mut s: Simplex = tokens
            .iter()
            .map(|t| self.vertices.iter().position(|v| v == t).ok_or_else(missing))
            .collect::<Result<_>>()?;
        s.sort_unstable();
        s.dedup();
        if s.is_empty() || !self.facets.iter().any(|f| is_subset(&s, f)) {
            return Err(missing());
        }
        Ok(s)
    }

    /// All nonempty faces, ordered by dimension then lexicographically.
    pub fn face_closure(&self) -> Vec<Simplex> {
        let mut faces: BTreeSet<(usize, Simplex)> = BTreeSet::new();
        for facet in &self.facets {
            let k = facet.len();
            for mask in 1u64..(1u64 << k) {
                let face: Simplex = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| facet[i]).collect();
                faces.insert((face.len(), face));
            }
        }
        faces.into_iter().map(|(_, f)| f).collect()
    }

    /// The graph whose vertices are simplices of dimension ≥ q, adjacent when
    /// they share at least q+1 vertices. `sigma0` picks the base vertex.
    pub fn gamma_q(&self, q: usize, mode: GammaMode, sigma0: Option<&[usize]>) -> Result<Graph> {
        let dim = self.dimension()?;
        if q > dim {
            return Err(Error::QOutOfRange { q, dim });
        }
        let nodes: Vec<Simplex> = match mode {
            GammaMode::Maximal => self.facets.iter().filter(|f| f.len() > q).cloned().collect(),
            GammaMode::All => self.face_closure().into_iter().filter(|f| f.len() > q).collect(),
        };
        let mut edges = Vec::new();
        for i in 0..nodes.len() {
            for j in i + 1..nodes.len() {
                if intersection_size(&nodes[i], &nodes[j]) > q {
                    edges.push((i, j));
                }
            }
        }
        let base = match sigma0 {
            None => None,
            Some(s) => {
                if s.is_empty() || !self.facets.iter().any(|f| is_subset(s, f)) {
                    return Err(Error::BaseSimplexMissing(format!("{{{}}}", self.simplex_name(s))));
                }
                if s.len() <= q {
                    return Err(Error::BaseSimplexTooSmall { dim: s.len() - 1, q });
                }
                let found = match mode {
                    GammaMode::Maximal => nodes.iter().position(|f| is_subset(s, f)),
                    GammaMode::All => nodes.iter().position(|f| f.as_slice() == s),
                };
                Some(found.ok_or_else(|| Error::BaseSimplexMissing(self.simplex_name(s)))?)
            }
        };
        let names = nodes.iter().map(|s| self.simplex_name(s)).collect();
        Graph::from_indices(names, edges, base)
    }
}

fn name_of(vertices: &[String], s: &[usize]) -> String {
    s.iter().map(|&v| vertices[v].as_str()).collect::<Vec<_>>().join(",")
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    a.iter().filter(|x| b.binary_search(x).is_ok()).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;

    fn complex(facets: &[&[&str]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(facets.iter().map(|f| f.to_vec()))
    }

    fn cone_over_c5() -> SimplicialComplex {
        SimplicialComplex::parse("# cone\n5 0 1\n5 1 2\n5 2 3\n5 3 4\n5 4 0\n").unwrap()
    }

    /// Pairwise intersection sizes, computed without the graph builder.
    fn intersection_oracle(c: &SimplicialComplex, q: usize) -> Vec<(usize, usize)> {
        let f = c.facets();
        let mut out = Vec::new();
        for i in 0..f.len() {
            for j in i + 1..f.len() {
                let shared = f[i].iter().filter(|v| f[j].contains(v)).count();
                if shared > q {
                    out.push((i, j));
                }
            }
        }
        out
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(complex(&[&["0", "1", "2"]]).dimension(), Ok(2));
        assert_eq!(complex(&[&["0"]]).dimension(), Ok(0));
        assert_eq!(complex(&[&["0", "1"], &["1", "2", "3"]]).dimension(), Ok(2));
        assert_eq!(SimplicialComplex::parse("# nothing\n").unwrap().dimension(), Err(Error::EmptyComplex));
    }

    #[test]
    fn closure_examples() {
        assert_eq!(complex(&[&["0", "1", "2"]]).face_closure().len(), 7);
        let path = complex(&[&["0", "1"], &["1", "2"]]);
        assert_eq!(path.face_closure(), vec![vec![0], vec![1], vec![2], vec![0, 1], vec![1, 2]]);
        assert_eq!(complex(&[&["a"]]).face_closure().len(), 1);
    }

    #[test]
    fn gamma_examples_on_the_cone() {
        let cone = cone_over_c5();
        let g1 = cone.gamma_q(1, GammaMode::Maximal, None).unwrap();
        assert_eq!(g1.edges(), intersection_oracle(&cone, 1).as_slice());
        assert!(is_isomorphic(&g1, &Graph::cycle(5)));
        let g0 = cone.gamma_q(0, GammaMode::Maximal, None).unwrap();
        assert_eq!(g0.edges(), intersection_oracle(&cone, 0).as_slice());
        assert!(is_isomorphic(&g0, &Graph::complete(5)));
    }

    #[test]
    fn triangles_sharing_a_vertex_are_not_one_connected() {
        let bowtie = complex(&[&["a", "b", "c"], &["c", "d", "e"]]);
        let g = bowtie.gamma_q(1, GammaMode::Maximal, None).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 0));
    }

    #[test]
    fn all_mode_counts_faces() {
        let cone = cone_over_c5();
        let g = cone.gamma_q(1, GammaMode::All, None).unwrap();
        let expected = cone.face_closure().iter().filter(|f| f.len() >= 2).count();
        assert_eq!(g.vertex_count(), expected);
        assert_eq!(expected, 10 + 5);
    }

    #[test]
    fn base_simplex_selection() {
        let cone = cone_over_c5();
        let s = cone.simplex(&["1", "2"]).unwrap();
        let g = cone.gamma_q(1, GammaMode::Maximal, Some(&s)).unwrap();
        assert_eq!(g.name(g.base().unwrap()), "5,1,2");
        let g = cone.gamma_q(1, GammaMode::All, Some(&s)).unwrap();
        assert_eq!(g.name(g.base().unwrap()), "1,2");

        let v = cone.simplex(&["5"]).unwrap();
        assert_eq!(cone.gamma_q(1, GammaMode::Maximal, Some(&v)), Err(Error::BaseSimplexTooSmall { dim: 0, q: 1 }));
        assert!(cone.simplex(&["0", "2"]).is_err());
        assert_eq!(cone.gamma_q(3, GammaMode::Maximal, None), Err(Error::QOutOfRange { q: 3, dim: 2 }));
    }

    #[test]
    fn non_maximal_faces_are_dropped() {
        let c = complex(&[&["0", "1"], &["0", "1", "2"], &["2", "1", "0"], &["3"]]);
        assert_eq!(c.facets(), &[vec![0, 1, 2], vec![3]]);
    }
}

//! Integer Smith normal form and abelian invariants of presentations.

use std::fmt;

use super::{GroupPresentation, Word};

/// Free rank and torsion coefficients (each dividing the next).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl AbelianInvariants {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let torsion: Vec<String> = self.torsion.iter().map(u64::to_string).collect();
        write!(f, "free_rank={} torsion=[{}]", self.free_rank, torsion.join(","))
    }
}

/// `U A V = D` with `D` diagonal; only `D` and `V` are kept.
#[derive(Clone, Debug)]
pub struct SmithForm {
    /// Positive diagonal entries, each dividing the next.
    pub diagonal: Vec<i128>,
    /// Column transform `V`, `cols x cols`, unimodular.
    pub column_transform: Vec<Vec<i128>>,
    pub cols: usize,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    /// Whether the row vector lies in the row lattice of the original matrix.
    pub fn contains_row(&self, v: &[i64]) -> bool {
        let transformed = self.transform(v);
        transformed.iter().enumerate().all(|(j, &x)| match self.diagonal.get(j) {
            Some(&d) => x % d == 0,
            None => x == 0,
        })
    }

    /// `v V`.
    pub fn transform(&self, v: &[i64]) -> Vec<i128> {
        (0..self.cols)
            .map(|j| v.iter().enumerate().map(|(i, &x)| x as i128 * self.column_transform[i][j]).sum())
            .collect()
    }

    pub fn invariants(&self) -> AbelianInvariants {
        AbelianInvariants {
            free_rank: self.cols - self.rank(),
            torsion: self.diagonal.iter().filter(|&&d| d > 1).map(|&d| d as u64).collect(),
        }
    }
}

/// Smith normal form of a `rows x cols` integer matrix.
pub fn smith_normal_form(matrix: &[Vec<i64>], cols: usize) -> SmithForm {
    let mut a: Vec<Vec<i128>> = matrix
        .iter()
        .map(|row| {
            assert_eq!(row.len(), cols);
            row.iter().map(|&x| x as i128).collect()
        })
        .collect();
    let rows = a.len();
    let mut v: Vec<Vec<i128>> = (0..cols).map(|i| (0..cols).map(|j| i128::from(i == j)).collect()).collect();
    let mut diagonal = Vec::new();

    let swap_cols = |a: &mut Vec<Vec<i128>>, v: &mut Vec<Vec<i128>>, x: usize, y: usize| {
        for row in a.iter_mut() {
            row.swap(x, y);
        }
        for row in v.iter_mut() {
            row.swap(x, y);
        }
    };
    // col_y -= q * col_x
    let sub_col = |a: &mut Vec<Vec<i128>>, v: &mut Vec<Vec<i128>>, y: usize, x: usize, q: i128| {
        for row in a.iter_mut() {
            row[y] -= q * row[x];
        }
        for row in v.iter_mut() {
            row[y] -= q * row[x];
        }
    };

    for t in 0..rows.min(cols) {
        // pivot: smallest nonzero magnitude in the trailing block
        let Some((pi, pj)) = min_nonzero(&a, t) else { break };
        a.swap(t, pi);
        swap_cols(&mut a, &mut v, t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[i][t] != 0 {
                    let q = a[i][t].div_euclid(a[t][t]);
                    let (head, tail) = a.split_at_mut(i);
                    for (x, y) in tail[0].iter_mut().zip(&head[t]) {
                        *x -= q * y;
                    }
                    if a[i][t] != 0 {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..cols {
                if a[t][j] != 0 {
                    let q = a[t][j].div_euclid(a[t][t]);
                    sub_col(&mut a, &mut v, j, t, q);
                    if a[t][j] != 0 {
                        dirty = true;
                    }
                }
            }
            if dirty {
                // a smaller remainder exists in row t or column t; move it to the pivot
                let (bi, bj) = (t..rows)
                    .map(|i| (i, t))
                    .chain((t..cols).map(|j| (t, j)))
                    .filter(|&(i, j)| a[i][j] != 0)
                    .min_by_key(|&(i, j)| a[i][j].abs())
                    .expect("pivot is nonzero");
                a.swap(t, bi);
                swap_cols(&mut a, &mut v, t, bj);
                continue;
            }
            // divisibility of the trailing block by the pivot
            let p = a[t][t];
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % p != 0));
            match bad {
                Some(i) => {
                    let (head, tail) = a.split_at_mut(i);
                    for (x, y) in head[t].iter_mut().zip(&tail[0]) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        diagonal.push(a[t][t].abs());
    }
    SmithForm { diagonal, column_transform: v, cols }
}

fn min_nonzero(a: &[Vec<i128>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, &x) in row.iter().enumerate().skip(t) {
            if x != 0 && best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Exponent-sum matrix of the relators (rows) against generators (columns).
pub fn relation_matrix(p: &GroupPresentation) -> Vec<Vec<i64>> {
    p.relators.iter().map(|r| r.exponent_sums(p.generators.len())).collect()
}

pub fn abelianization(p: &GroupPresentation) -> AbelianInvariants {
    smith_normal_form(&relation_matrix(p), p.generators.len()).invariants()
}

/// Whether `w` maps to zero in the abelianization of `p`.
pub fn abelian_image_is_zero(p: &GroupPresentation, w: &Word) -> bool {
    smith_normal_form(&relation_matrix(p), p.generators.len()).contains_row(&w.exponent_sums(p.generators.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(gens: usize, relators: &[&[i64]]) -> GroupPresentation {
        GroupPresentation::new((0..gens).map(|i| format!("x{i}")).collect(), relators.iter().map(|r| Word::from_signed(r)).collect())
    }

    #[test]
    fn abelianization_examples() {
        assert_eq!(abelianization(&pres(1, &[])), AbelianInvariants { free_rank: 1, torsion: vec![] });
        assert_eq!(abelianization(&pres(1, &[&[1, 1, 1]])), AbelianInvariants { free_rank: 0, torsion: vec![3] });
        assert_eq!(abelianization(&pres(2, &[&[1, 2, -1, -2]])), AbelianInvariants { free_rank: 2, torsion: vec![] });
    }

    #[test]
    fn invariant_factors_divide() {
        // Z/2 x Z/3 = Z/6 ; diag(4, 6) -> (2, 12)
        let a = vec![vec![2, 0], vec![0, 3]];
        assert_eq!(smith_normal_form(&a, 2).invariants().torsion, vec![6]);
        let b = vec![vec![4, 0], vec![0, 6]];
        assert_eq!(smith_normal_form(&b, 2).diagonal, vec![2, 12]);
    }

    #[test]
    fn lattice_membership() {
        let p = pres(2, &[&[1, 1], &[2, 2, 2]]);
        let snf = smith_normal_form(&relation_matrix(&p), 2);
        assert!(snf.contains_row(&[2, 3]));
        assert!(snf.contains_row(&[4, -6]));
        assert!(!snf.contains_row(&[1, 0]));
        assert!(!snf.contains_row(&[0, 2]));
    }

    #[test]
    fn column_transform_is_consistent() {
        let a = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
        let snf = smith_normal_form(&a, 3);
        assert_eq!(snf.diagonal, vec![2, 6, 12]);
        for row in &a {
            assert!(snf.contains_row(row));
        }
    }
}

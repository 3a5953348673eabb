//! Presentation simplification by a restricted set of Tietze moves.
//!
//! Moves: free and cyclic reduction, removal of empty relators, removal of
//! relators equal up to rotation and inversion, and elimination of a
//! generator that occurs exactly once in some relator. Each pass lowers the
//! generator count or the total relator length, so the loop terminates.

use std::collections::HashSet;

use super::{GroupPresentation, Word};

/// A simplified presentation together with the images of the original
/// generators, written in the surviving generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Simplification {
    pub presentation: GroupPresentation,
    pub images: Vec<Word>,
}

impl Simplification {
    /// Rewrites a word over the original generators.
    pub fn rewrite(&self, w: &Word) -> Word {
        w.substitute(&self.images)
    }
}

pub fn tietze_simplify(p: &GroupPresentation) -> GroupPresentation {
    simplify_tracked(p).presentation
}

pub fn simplify_tracked(p: &GroupPresentation) -> Simplification {
    let n = p.generators.len();
    let mut alive = vec![true; n];
    let mut images: Vec<Word> = (0..n).map(Word::generator).collect();
    let mut relators: Vec<Word> = p.relators.clone();

    loop {
        relators = normalize(&relators);
        let Some((ri, pos)) = elimination_candidate(&relators) else { break };
        let r = relators.remove(ri);
        let x = r.letters()[pos];
        // r rotated to start at x^e: x^e w = 1, so x = w^-1 (e = +1) or x = w (e = -1)
        let rest = Word::from_letters(r.rotated(pos).letters()[1..].iter().copied());
        let value = if x.inverse { rest } else { rest.inverse() };
        let mut subst: Vec<Word> = (0..n).map(Word::generator).collect();
        subst[x.generator] = value;
        for rel in &mut relators {
            *rel = rel.substitute(&subst);
        }
        for image in &mut images {
            *image = image.substitute(&subst);
        }
        alive[x.generator] = false;
    }

    // renumber survivors
    let mut new_index = vec![usize::MAX; n];
    let mut generators = Vec::new();
    for g in 0..n {
        if alive[g] {
            new_index[g] = generators.len();
            generators.push(p.generators[g].clone());
        }
    }
    let renumber: Vec<Word> = (0..n)
        .map(|g| if alive[g] { Word::generator(new_index[g]) } else { Word::empty() })
        .collect();
    let relators = relators.iter().map(|r| r.substitute(&renumber)).collect();
    let images = images.iter().map(|w| w.substitute(&renumber)).collect();
    Simplification { presentation: GroupPresentation::new(generators, relators), images }
}

/// Cyclic canonical forms, empties removed, duplicates dropped (first kept).
fn normalize(relators: &[Word]) -> Vec<Word> {
    let mut seen = HashSet::new();
    relators
        .iter()
        .map(Word::cyclic_canonical)
        .filter(|r| !r.is_empty() && seen.insert(r.clone()))
        .collect()
}

/// Shortest relator containing a generator exactly once; ties broken by
/// relator position, then by smallest generator. Returns (relator, letter position).
fn elimination_candidate(relators: &[Word]) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, usize, usize)> = None;
    for (ri, r) in relators.iter().enumerate() {
        for (pos, l) in r.letters().iter().enumerate() {
            if r.occurrences(l.generator) == 1 {
                let key = (r.len(), ri, l.generator, pos);
                if best.is_none_or(|b| key < b) {
                    best = Some(key);
                }
            }
        }
    }
    best.map(|(_, ri, _, pos)| (ri, pos))
}

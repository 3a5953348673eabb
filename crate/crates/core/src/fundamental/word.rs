use std::fmt;

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        Letter { generator, inverse }
    }

    pub fn inv(self) -> Self {
        Letter { generator: self.generator, inverse: !self.inverse }
    }

    pub fn exponent(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

/// A word in the free group; constructors keep it freely reduced.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn generator(g: usize) -> Self {
        Word(vec![Letter::new(g, false)])
    }

    /// Freely reduces the given letters.
    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut w = Word::empty();
        for l in letters {
            w.push(l);
        }
        w
    }

    /// Builds a word from signed generator numbers: `+k` is generator `k-1`,
    /// `-k` its inverse. Zero is not allowed.
    pub fn from_signed(letters: &[i64]) -> Self {
        Word::from_letters(letters.iter().map(|&s| {
            assert!(s != 0, "signed letters start at 1");
            Letter::new(s.unsigned_abs() as usize - 1, s < 0)
        }))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Appends a letter, cancelling against the last one if inverse.
    pub fn push(&mut self, l: Letter) {
        if self.0.last() == Some(&l.inv()) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.clone();
        for &l in &other.0 {
            out.push(l);
        }
        out
    }

    /// Removes inverse pairs between the two ends.
    pub fn cyclically_reduced(&self) -> Word {
        let mut lo = 0;
        let mut hi = self.0.len();
        while hi - lo >= 2 && self.0[lo] == self.0[hi - 1].inv() {
            lo += 1;
            hi -= 1;
        }
        Word(self.0[lo..hi].to_vec())
    }

    pub fn rotated(&self, k: usize) -> Word {
        let mut v = self.0.clone();
        if !v.is_empty() {
            let k = k % v.len();
            v.rotate_left(k);
        }
        Word(v)
    }

    /// Least representative among all rotations of the word and its inverse.
    /// Two cyclically reduced relators define the same normal closure
    /// generator set when their canonical forms agree.
    pub fn cyclic_canonical(&self) -> Word {
        let w = self.cyclically_reduced();
        let winv = w.inverse();
        (0..w.len().max(1))
            .flat_map(|k| [w.rotated(k), winv.rotated(k)])
            .min()
            .unwrap_or_default()
    }

    pub fn occurrences(&self, generator: usize) -> usize {
        self.0.iter().filter(|l| l.generator == generator).count()
    }

    pub fn exponent_sums(&self, generators: usize) -> Vec<i64> {
        let mut sums = vec![0; generators];
        for l in &self.0 {
            sums[l.generator] += l.exponent();
        }
        sums
    }

    /// Replaces each generator `g` by `images[g]`.
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut out = Word::empty();
        for l in &self.0 {
            let image = &images[l.generator];
            if l.inverse {
                for &m in image.0.iter().rev() {
                    out.push(m.inv());
                }
            } else {
                for &m in &image.0 {
                    out.push(m);
                }
            }
        }
        out
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> WordDisplay<'a> {
        WordDisplay { word: self, names }
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.word.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(&self.names[l.generator])?;
            if l.inverse {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

/// Generators plus relator words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

impl GroupPresentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Self {
        let p = GroupPresentation { generators, relators };
        debug_assert!(p.is_valid());
        p
    }

    /// Every letter names a listed generator and relators are freely reduced.
    pub fn is_valid(&self) -> bool {
        self.relators.iter().all(|r| {
            r.letters().iter().all(|l| l.generator < self.generators.len())
                && r.letters().windows(2).all(|w| w[0] != w[1].inv())
        })
    }

    pub fn total_length(&self) -> usize {
        self.relators.iter().map(Word::len).sum()
    }

    pub fn is_free(&self) -> bool {
        self.relators.is_empty()
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "< {}", self.generators.join(", "))?;
        f.write_str(" | ")?;
        for (i, r) in self.relators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", r.display(&self.generators))?;
        }
        f.write_str(" >")
    }
}

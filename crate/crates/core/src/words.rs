//! Words in the free group on `x_0, ..., x_{n-1}`.
//!
//! A [`Word`] is stored letter by letter with subscripts already reduced
//! into `[0, n)`. Nothing is reduced implicitly: a word is exactly the
//! sequence it was built from until [`Word::free_reduce`] or
//! [`Word::cyclic_reduce`] is called.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn from_i64(e: i64) -> Option<Sign> {
        match e {
            1 => Some(Sign::Pos),
            -1 => Some(Sign::Neg),
            _ => None,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

/// `x_index^sign`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    pub index: usize,
    pub sign: Sign,
}

impl Letter {
    pub fn new(index: usize, sign: Sign) -> Letter {
        Letter { index, sign }
    }

    pub fn inverse(self) -> Letter {
        Letter {
            index: self.index,
            sign: self.sign.flip(),
        }
    }

    fn cancels(self, other: Letter) -> bool {
        self.index == other.index && self.sign != other.sign
    }
}

/// Reduces `i` into `[0, n)`.
pub fn modn(i: i64, n: usize) -> usize {
    i.rem_euclid(n as i64) as usize
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Word {
    n: usize,
    letters: Vec<Letter>,
}

impl Word {
    /// Builds a word from `(subscript, sign)` pairs; subscripts are taken mod `n`.
    pub fn new<I>(n: usize, letters: I) -> Result<Word>
    where
        I: IntoIterator<Item = (i64, Sign)>,
    {
        if n == 0 {
            return Err(Error::ZeroModulus);
        }
        let letters = letters
            .into_iter()
            .map(|(i, s)| Letter::new(modn(i, n), s))
            .collect();
        Ok(Word { n, letters })
    }

    /// Positive word `x_{i_1} x_{i_2} ...`.
    pub fn positive(n: usize, indices: &[i64]) -> Result<Word> {
        Word::new(n, indices.iter().map(|&i| (i, Sign::Pos)))
    }

    pub fn empty(n: usize) -> Word {
        assert!(n > 0, "modulus must be positive");
        Word {
            n,
            letters: Vec::new(),
        }
    }

    pub(crate) fn from_letters(n: usize, letters: Vec<Letter>) -> Word {
        debug_assert!(letters.iter().all(|l| l.index < n));
        Word { n, letters }
    }

    /// Parses whitespace-separated tokens `x<i>` (for `x_i`) and `X<i>` (for
    /// `x_i^{-1}`). Subscripts must lie in `[0, n)`. The tokens `1` or an
    /// empty string denote the empty word.
    pub fn parse(n: usize, s: &str) -> Result<Word> {
        if n == 0 {
            return Err(Error::ZeroModulus);
        }
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let sign = match tok.chars().next() {
                Some('x') => Sign::Pos,
                Some('X') => Sign::Neg,
                _ => return Err(Error::Parse(format!("bad token {tok:?} in word"))),
            };
            let index: i64 = tok[1..]
                .parse()
                .map_err(|_| Error::Parse(format!("bad subscript in token {tok:?}")))?;
            if index < 0 || index >= n as i64 {
                return Err(Error::IndexOutOfRange { index, n });
            }
            letters.push(Letter::new(index as usize, sign));
        }
        Ok(Word { n, letters })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|p| !p[0].cancels(p[1]))
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        self.is_reduced()
            && match (self.letters.first(), self.letters.last()) {
                (Some(a), Some(b)) if self.letters.len() > 1 => !b.cancels(*a),
                _ => true,
            }
    }

    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last().is_some_and(|t| t.cancels(l)) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word::from_letters(self.n, out)
    }

    /// Returns `(core, conjugator)` with `core` cyclically reduced and
    /// `conjugator * core * conjugator^{-1}` freely equal to `self`.
    pub fn cyclic_reduce(&self) -> (Word, Word) {
        let r = self.free_reduce().letters;
        let (mut lo, mut hi) = (0, r.len());
        while hi - lo >= 2 && r[lo].cancels(r[hi - 1]) {
            lo += 1;
            hi -= 1;
        }
        (
            Word::from_letters(self.n, r[lo..hi].to_vec()),
            Word::from_letters(self.n, r[..lo].to_vec()),
        )
    }

    /// Applies `theta^k`: every subscript `i` becomes `i + k` mod `n`.
    pub fn shift(&self, k: i64) -> Word {
        let n = self.n;
        let letters = self
            .letters
            .iter()
            .map(|l| Letter::new(modn(l.index as i64 + k, n), l.sign))
            .collect();
        Word::from_letters(n, letters)
    }

    pub fn inverse(&self) -> Word {
        let letters = self.letters.iter().rev().map(|l| l.inverse()).collect();
        Word::from_letters(self.n, letters)
    }

    /// Moves the first `r` letters (mod length) to the end.
    pub fn rotate(&self, r: usize) -> Word {
        if self.letters.is_empty() {
            return self.clone();
        }
        let mut letters = self.letters.clone();
        letters.rotate_left(r % self.letters.len());
        Word::from_letters(self.n, letters)
    }

    /// Smallest `r` with `self.rotate(r) == other`, if any.
    pub fn is_cyclic_perm(&self, other: &Word) -> Option<usize> {
        if self.n != other.n || self.len() != other.len() {
            return None;
        }
        if self.is_empty() {
            return Some(0);
        }
        let len = self.len();
        (0..len).find(|&r| (0..len).all(|i| self.letters[(i + r) % len] == other.letters[i]))
    }

    /// Concatenation without reduction.
    pub fn concat(&self, other: &Word) -> Word {
        assert_eq!(self.n, other.n, "modulus mismatch");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word::from_letters(self.n, letters)
    }

    /// Exponent sum of each generator.
    pub fn exponent_sums(&self) -> Vec<i64> {
        let mut sums = vec![0; self.n];
        for l in &self.letters {
            sums[l.index] += l.sign.value();
        }
        sums
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            match l.sign {
                Sign::Pos => write!(f, "x{}", l.index)?,
                Sign::Neg => write!(f, "X{}", l.index)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, s: &str) -> Word {
        Word::parse(n, s).unwrap()
    }

    #[test]
    fn free_reduce_examples() {
        assert_eq!(w(3, "x0 x1 X1").free_reduce(), w(3, "x0"));
        assert_eq!(Word::empty(3).free_reduce(), Word::empty(3));
        assert_eq!(w(3, "x0 x1 x2").free_reduce(), w(3, "x0 x1 x2"));
        assert_eq!(w(3, "x0 x1 X1 X0").free_reduce(), Word::empty(3));
    }

    #[test]
    fn cyclic_reduce_examples() {
        assert_eq!(w(3, "x1 x0 X1").cyclic_reduce(), (w(3, "x0"), w(3, "x1")));
        assert_eq!(
            w(3, "x0 x1 x2").cyclic_reduce(),
            (w(3, "x0 x1 x2"), Word::empty(3))
        );
        assert_eq!(
            w(3, "x0 X0").cyclic_reduce(),
            (Word::empty(3), Word::empty(3))
        );
    }

    #[test]
    fn shift_examples() {
        assert_eq!(w(3, "x0 x1 x2").shift(1), w(3, "x1 x2 x0"));
        assert_eq!(w(2, "x0 X1").shift(1), w(2, "x1 X0"));
        assert_eq!(w(5, "x0 X3 x4").shift(5), w(5, "x0 X3 x4"));
        assert_eq!(w(5, "x0").shift(-1), w(5, "x4"));
    }

    #[test]
    fn invert_and_cyclic_perm() {
        assert_eq!(w(2, "x0 x1").inverse(), w(2, "X1 X0"));
        assert_eq!(w(3, "x0 x1 x2").is_cyclic_perm(&w(3, "x1 x2 x0")), Some(1));
        assert_eq!(w(3, "x0 x1").is_cyclic_perm(&w(3, "x0 x2")), None);
    }

    #[test]
    fn parse_rejects_out_of_range() {
        assert!(matches!(
            Word::parse(3, "x0 x3"),
            Err(Error::IndexOutOfRange { index: 3, n: 3 })
        ));
        assert!(Word::parse(3, "y0").is_err());
        assert!(Word::parse(3, "x").is_err());
        assert_eq!(Word::parse(3, "1").unwrap(), Word::empty(3));
    }

    #[test]
    fn construction_normalizes_indices() {
        let v = Word::new(4, [(-1, Sign::Pos), (9, Sign::Neg)]).unwrap();
        assert_eq!(v, w(4, "x3 X1"));
        assert_eq!(Word::new(0, []), Err(Error::ZeroModulus));
    }

    #[test]
    fn display_round_trip() {
        let v = w(7, "x0 X6 x3");
        assert_eq!(v.to_string(), "x0 X6 x3");
        assert_eq!(Word::parse(7, &v.to_string()).unwrap(), v);
        assert_eq!(Word::empty(2).to_string(), "1");
    }

    #[test]
    fn reducedness_flags() {
        assert!(w(3, "x0 x1 X0").is_reduced());
        assert!(!w(3, "x0 x1 X0").is_cyclically_reduced());
        assert!(w(3, "x0").is_cyclically_reduced());
        assert!(Word::empty(3).is_cyclically_reduced());
    }
}

//! Cyclic presentations `P_n(w)` and the family `P_n(k,l) = P_n(x_0 x_k x_l)`.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::{modn, Word};

/// `(x_0, ..., x_{n-1} : w, θ(w), ..., θ^{n-1}(w))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicPresentation {
    n: usize,
    word: Word,
    relators: Vec<Word>,
}

impl CyclicPresentation {
    /// Fails on an empty or non-cyclically-reduced defining word.
    pub fn new(n: usize, word: Word) -> Result<CyclicPresentation> {
        if n == 0 {
            return Err(Error::ZeroModulus);
        }
        if word.n() != n {
            return Err(Error::ModulusMismatch {
                word: word.n(),
                expected: n,
            });
        }
        if word.is_empty() {
            return Err(Error::EmptyWord);
        }
        if !word.is_cyclically_reduced() {
            return Err(Error::NotCyclicallyReduced(word.to_string()));
        }
        let relators = (0..n as i64).map(|i| word.shift(i)).collect();
        Ok(CyclicPresentation { n, word, relators })
    }

    /// `P_n(k,l)`, the presentation with relators `x_i x_{i+k} x_{i+l}`.
    pub fn gnkl(n: usize, k: i64, l: i64) -> Result<CyclicPresentation> {
        if n == 0 {
            return Err(Error::ZeroModulus);
        }
        CyclicPresentation::new(n, Word::positive(n, &[0, k, l])?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Decides orientability from the shape criterion: the presentation is
    /// non-orientable iff `n = 2m` and some cyclic permutation of `w` equals
    /// `u θ^m(u)^{-1}` letter for letter.
    pub fn orientability(&self) -> OrientabilityVerdict {
        let w = &self.word;
        if self.n % 2 == 1 || w.len() % 2 == 1 {
            return OrientabilityVerdict::orientable();
        }
        let m = self.n / 2;
        for rotation in 0..w.len() {
            let candidate = w.rotate(rotation);
            if candidate == candidate.shift(m as i64).inverse() {
                let u = Word::from_letters(self.n, candidate.letters()[..w.len() / 2].to_vec());
                return OrientabilityVerdict {
                    orientable: false,
                    witness: Some(OrientabilityWitness { u, m, rotation }),
                };
            }
        }
        OrientabilityVerdict::orientable()
    }

    /// Orientability straight from the definition: `w` is not a cyclic
    /// permutation of `θ^v(w)^{-1}` for any `v`.
    pub fn is_orientable_by_definition(&self) -> bool {
        (0..self.n as i64).all(|v| {
            let target = self.word.shift(v).inverse();
            self.word.is_cyclic_perm(&target).is_none()
        })
    }
}

/// `rotate(w, rotation) == u · θ^m(u)^{-1}` with `n = 2m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrientabilityWitness {
    pub u: Word,
    pub m: usize,
    pub rotation: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrientabilityVerdict {
    pub orientable: bool,
    pub witness: Option<OrientabilityWitness>,
}

impl OrientabilityVerdict {
    fn orientable() -> OrientabilityVerdict {
        OrientabilityVerdict {
            orientable: true,
            witness: None,
        }
    }
}

/// Reduced parameter triple `(n/d, k/d, l/d)` for `d = gcd(n, k, l)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GcdDecomposition {
    pub d: usize,
    pub n: usize,
    pub k: usize,
    pub l: usize,
}

/// `P_n(k,l)` splits as `d` disjoint copies of `P_{n/d}(k/d, l/d)`.
/// `gcd(n, 0, 0) = n`, so `P_n(0,0)` reduces to `P_1(0,0) = (x_0 : x_0^3)`.
pub fn gcd_decompose(n: usize, k: i64, l: i64) -> GcdDecomposition {
    assert!(n > 0, "modulus must be positive");
    let (k, l) = (modn(k, n), modn(l, n));
    let d = n.gcd(&k).gcd(&l);
    GcdDecomposition {
        d,
        n: n / d,
        k: k / d,
        l: l / d,
    }
}

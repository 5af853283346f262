//! One-relator relative presentations `(C_n, x : W)` over the free product
//! `C_n * <x>`, retractions onto the coefficient group, and the rewriting
//! `ρ^f` that turns a retraction kernel into a cyclic presentation.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::enumerate::{FinitePresentation, Gen};
use crate::error::{Error, Result};
use crate::words::{modn, Letter, Sign, Word};

/// `x^sign a^a_exp`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Syllable {
    pub sign: Sign,
    pub a_exp: i64,
}

impl Syllable {
    pub fn new(sign: Sign, a_exp: i64) -> Syllable {
        Syllable { sign, a_exp }
    }

    fn eq_mod(self, other: Syllable, n: usize) -> bool {
        self.sign == other.sign && modn(self.a_exp - other.a_exp, n) == 0
    }
}

/// A letter of `C_n * <x>` before grouping into syllables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Token {
    X(Sign),
    A(i64),
}

/// `W = x^{ε_1} a^{p_1} ... x^{ε_L} a^{p_L}` with `L >= 1`.
///
/// The `a`-exponents are kept as plain integers and only compared mod `n`,
/// so the same value can be read in several coefficient groups.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RelativeWord {
    syllables: Vec<Syllable>,
}

impl RelativeWord {
    pub fn new(syllables: Vec<Syllable>) -> Result<RelativeWord> {
        if syllables.is_empty() {
            return Err(Error::NoXSyllable);
        }
        Ok(RelativeWord { syllables })
    }

    /// Groups a token sequence into syllables. Any leading `a`-power is
    /// conjugated around to the tail.
    pub fn from_tokens<I: IntoIterator<Item = Token>>(tokens: I) -> Result<RelativeWord> {
        let mut lead = 0i64;
        let mut syllables: Vec<Syllable> = Vec::new();
        for t in tokens {
            match t {
                Token::X(s) => syllables.push(Syllable::new(s, 0)),
                Token::A(e) => match syllables.last_mut() {
                    Some(last) => last.a_exp += e,
                    None => lead += e,
                },
            }
        }
        match syllables.last_mut() {
            Some(last) => last.a_exp += lead,
            None => return Err(Error::NoXSyllable),
        }
        Ok(RelativeWord { syllables })
    }

    /// Parses tokens `x`, `X`, `a`, `A`, `a^<int>`, `A^<int>`, `x^<int>`, `X^<int>`.
    pub fn parse(s: &str) -> Result<RelativeWord> {
        let mut tokens = Vec::new();
        for tok in s.split_whitespace() {
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => (
                    b,
                    e.parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad exponent in {tok:?}")))?,
                ),
                None => (tok, 1),
            };
            match base {
                "a" => tokens.push(Token::A(exp)),
                "A" => tokens.push(Token::A(-exp)),
                "x" | "X" => {
                    let e = if base == "x" { exp } else { -exp };
                    let s = if e > 0 { Sign::Pos } else { Sign::Neg };
                    tokens.extend(std::iter::repeat_n(Token::X(s), e.unsigned_abs() as usize));
                }
                _ => return Err(Error::Parse(format!("bad token {tok:?} in relative word"))),
            }
        }
        RelativeWord::from_tokens(tokens)
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    /// Number of `x`-letters, `L`.
    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Exponent sum `ε` of `x`.
    pub fn epsilon_sum(&self) -> i64 {
        self.syllables.iter().map(|s| s.sign.value()).sum()
    }

    /// Exponent sum `p` of `a`.
    pub fn p_sum(&self) -> i64 {
        self.syllables.iter().map(|s| s.a_exp).sum()
    }

    pub fn tokens(&self) -> impl Iterator<Item = Token> + '_ {
        self.syllables
            .iter()
            .flat_map(|s| [Token::X(s.sign), Token::A(s.a_exp)])
    }

    /// No cyclic position has `x^ε a^{0 mod n} x^{-ε}`.
    pub fn is_cyclically_reduced(&self, n: usize) -> bool {
        let len = self.syllables.len();
        (0..len).all(|i| {
            let (s, t) = (self.syllables[i], self.syllables[(i + 1) % len]);
            !(t.sign != s.sign && modn(s.a_exp, n) == 0)
        })
    }

    /// Cyclically reduces in `C_n * <x>`. Returns `None` when every
    /// `x`-letter cancels.
    pub fn cyclically_reduce(&self, n: usize) -> Option<RelativeWord> {
        let mut syl = self.syllables.clone();
        loop {
            let len = syl.len();
            if len == 0 {
                return None;
            }
            let hit = (0..len).find(|&i| {
                let j = (i + 1) % len;
                syl[j].sign != syl[i].sign && modn(syl[i].a_exp, n) == 0
            });
            let Some(i) = hit else { break };
            let j = (i + 1) % len;
            if len == 1 {
                return None;
            }
            // x^{e_{i-1}} a^{p_{i-1}} [x^{e_i} a^0 x^{-e_i}] a^{p_j}: fold p_j into p_{i-1}.
            let carry = syl[j].a_exp;
            if len == 2 {
                return None;
            }
            let prev = (i + len - 1) % len;
            syl[prev].a_exp += carry;
            let (lo, hi) = if i < j { (i, j) } else { (j, i) };
            syl.remove(hi);
            syl.remove(lo);
        }
        Some(RelativeWord { syllables: syl })
    }

    /// Every `a`-exponent reduced into `[0, n)`.
    pub fn normalized(&self, n: usize) -> RelativeWord {
        RelativeWord {
            syllables: self
                .syllables
                .iter()
                .map(|s| Syllable::new(s.sign, modn(s.a_exp, n) as i64))
                .collect(),
        }
    }

    /// The x-first cyclic form of `W^{-1}`.
    pub fn inverse(&self) -> RelativeWord {
        let len = self.syllables.len();
        let syllables = (0..len)
            .rev()
            .map(|i| {
                let prev = self.syllables[(i + len - 1) % len].a_exp;
                Syllable::new(self.syllables[i].sign.flip(), -prev)
            })
            .collect();
        RelativeWord { syllables }
    }

    pub fn rotate(&self, r: usize) -> RelativeWord {
        let mut syllables = self.syllables.clone();
        let len = syllables.len();
        syllables.rotate_left(r % len);
        RelativeWord { syllables }
    }

    /// Syllable-wise equality with `a`-exponents compared mod `n`.
    pub fn eq_mod(&self, other: &RelativeWord, n: usize) -> bool {
        self.len() == other.len()
            && self
                .syllables
                .iter()
                .zip(&other.syllables)
                .all(|(a, b)| a.eq_mod(*b, n))
    }

    /// Smallest `r` with `self.rotate(r)` equal to `other` mod `n`.
    pub fn rotation_to(&self, other: &RelativeWord, n: usize) -> Option<usize> {
        if self.len() != other.len() {
            return None;
        }
        let len = self.len();
        (0..len).find(|&r| {
            (0..len).all(|i| self.syllables[(i + r) % len].eq_mod(other.syllables[i], n))
        })
    }

    pub fn power(&self, e: usize) -> RelativeWord {
        RelativeWord {
            syllables: self.syllables.repeat(e),
        }
    }
}

impl fmt::Display for RelativeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.syllables.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", if s.sign == Sign::Pos { "x" } else { "X" })?;
            if s.a_exp != 0 {
                write!(f, " a^{}", s.a_exp)?;
            }
        }
        Ok(())
    }
}

/// A retraction `ν^f : E -> C_n` with `ν^f(a) = a`, `ν^f(x) = a^f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Retraction {
    pub f: usize,
    pub epsilon_sum: i64,
    pub p_sum: i64,
}

/// Checks `ε f + p ≡ 0 (mod n)`.
pub fn check_retraction(w: &RelativeWord, n: usize, f: i64) -> Result<Retraction> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    let (epsilon, p) = (w.epsilon_sum(), w.p_sum());
    let value = epsilon * f + p;
    if modn(value, n) != 0 {
        return Err(Error::InvalidRetraction {
            f,
            epsilon,
            p,
            value,
            n,
        });
    }
    Ok(Retraction {
        f: modn(f, n),
        epsilon_sum: epsilon,
        p_sum: p,
    })
}

/// All `f` in `[0, n)` defining a retraction.
pub fn valid_retractions(w: &RelativeWord, n: usize) -> Vec<Retraction> {
    (0..n as i64)
        .filter_map(|f| check_retraction(w, n, f).ok())
        .collect()
}

/// The rewrite `ρ^f(W) = x_{u(1)}^{ε_1} ... x_{u(L)}^{ε_L}` where
/// `v(1) = 0`, `v(i) = Σ_{j<i} (ε_j f + p_j)`, and `u(i) = v(i)` or
/// `v(i) - f` according to `ε_i`.
pub fn rho(w: &RelativeWord, n: usize, f: i64) -> Result<Word> {
    check_retraction(w, n, f)?;
    let mut v = 0i64;
    let mut letters = Vec::with_capacity(w.len());
    for s in w.syllables() {
        let u = match s.sign {
            Sign::Pos => v,
            Sign::Neg => v - f,
        };
        letters.push(Letter::new(modn(u, n), s.sign));
        v += s.sign.value() * f + s.a_exp;
    }
    Ok(Word::from_letters(n, letters))
}

/// Rewrites `w = x_{p_1}^{ε_1} ... x_{p_L}^{ε_L}` via `x_j = a^j x a^{-j}` as
/// `W = x^{ε_1} a^{p_2 - p_1} ... x^{ε_L} a^{p_1 - p_L}`.
pub fn to_relative(w: &Word) -> Result<RelativeWord> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let ls = w.letters();
    let len = ls.len();
    let syllables = (0..len)
        .map(|i| {
            let next = ls[(i + 1) % len].index as i64;
            Syllable::new(ls[i].sign, next - ls[i].index as i64)
        })
        .collect();
    Ok(RelativeWord { syllables })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootData {
    pub root: RelativeWord,
    pub exponent: usize,
    /// `ν^f(root) = a^sigma`, present when `f` was supplied.
    pub sigma: Option<usize>,
}

/// Maximal `e` with `W = root^e` syllable for syllable (mod `n`).
pub fn root(w: &RelativeWord, n: usize, f: Option<i64>) -> RootData {
    let syl = w.syllables();
    let len = syl.len();
    let period = (1..=len)
        .filter(|d| len.is_multiple_of(*d))
        .find(|&d| (d..len).all(|i| syl[i].eq_mod(syl[i - d], n)))
        .unwrap_or(len);
    let root = RelativeWord {
        syllables: syl[..period].to_vec(),
    };
    let sigma = f.map(|f| {
        let total: i64 = root
            .syllables
            .iter()
            .map(|s| s.sign.value() * f + s.a_exp)
            .sum();
        modn(total, n)
    });
    RootData {
        root,
        exponent: len / period,
        sigma,
    }
}

/// `(C_n, x : W)` is orientable iff `W` is not conjugate to `W^{-1}` in
/// `C_n * <x>`; for cyclically reduced `W` that is a syllable rotation test.
pub fn relative_orientable(w: &RelativeWord, n: usize) -> bool {
    w.rotation_to(&w.inverse(), n).is_none()
}

/// Substitutes `x = u a^{-t}` (so `u = x a^t`) and cyclically reduces.
pub fn change_variable(w: &RelativeWord, n: usize, t: i64) -> Result<RelativeWord> {
    let syl = w.syllables();
    let len = syl.len();
    let syllables: Vec<Syllable> = (0..len)
        .map(|i| {
            let mut p = syl[i].a_exp;
            if syl[i].sign == Sign::Pos {
                p -= t;
            }
            if syl[(i + 1) % len].sign == Sign::Neg {
                p += t;
            }
            Syllable::new(syl[i].sign, p)
        })
        .collect();
    RelativeWord { syllables }
        .cyclically_reduce(n)
        .ok_or(Error::NoXSyllable)
}

/// The lift `(a, x : a^n, W(a,x))` with every `a`-exponent in `[0, n)`.
pub fn lift(w: &RelativeWord, n: usize) -> FinitePresentation {
    relative_to_presentation(&w.normalized(n), n)
}

/// `(a, x : a^n, W(a,x))` transcribed with the exponents exactly as stored.
pub fn relative_to_presentation(w: &RelativeWord, n: usize) -> FinitePresentation {
    let mut p = FinitePresentation::new(["a", "x"]);
    p.add_relator(Gen::power(0, n as i64));
    let mut rel = Vec::new();
    for s in w.syllables() {
        rel.extend(Gen::power(1, s.sign.value()));
        rel.extend(Gen::power(0, s.a_exp));
    }
    p.add_relator(rel);
    p
}

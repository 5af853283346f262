//! Coset enumeration over finitely presented groups.

mod engine;
mod presentation;
mod table;

use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use presentation::{invert_word, FinitePresentation, Gen};
pub use table::{CosetTable, EnumerationStats, TableStatus};

use crate::error::Error;
use crate::relative::{relative_to_presentation, to_relative};
use crate::words::Word;

pub const DEFAULT_MAX_COSETS: usize = 1_000_000;

/// Coset definition strategy.
///
/// `Hlt` fills each coset's relator cycles in turn and runs a lookahead
/// pass before giving up on space. `Felsch` defines the first undefined
/// entry and processes every deduction before the next definition.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    #[default]
    Hlt,
    Felsch,
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Strategy, Error> {
        match s {
            "hlt" => Ok(Strategy::Hlt),
            "felsch" => Ok(Strategy::Felsch),
            _ => Err(Error::Parse(format!("unknown strategy {s:?}"))),
        }
    }
}

/// Enumerates the cosets of `p`'s subgroup. At most `max_cosets` coset
/// rows are held at once; running out yields a table with
/// [`TableStatus::Overflow`] rather than a guess.
pub fn todd_coxeter(p: &FinitePresentation, max_cosets: usize, strategy: Strategy) -> CosetTable {
    engine::enumerate(p, max_cosets, strategy)
}

/// `(a, x : a^n, x a^k x a^{l-k} x a^{-l})`, the semidirect product
/// `G_n(k,l) ⋊ C_n`, with `k` and `l` first reduced into `[0, n)`.
pub fn semidirect_presentation(
    n: usize,
    k: i64,
    l: i64,
) -> crate::error::Result<FinitePresentation> {
    let w = Word::positive(n, &[0, k, l])?;
    Ok(relative_to_presentation(&to_relative(&w)?, n))
}

/// The presentation of `G_n(w) ⋊ C_n` obtained from `w` via `to_relative`.
pub fn cyclic_to_presentation(w: &Word) -> crate::error::Result<FinitePresentation> {
    Ok(relative_to_presentation(&to_relative(w)?, w.n()))
}

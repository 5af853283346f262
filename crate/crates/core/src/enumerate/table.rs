use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::presentation::{FinitePresentation, Gen};
use crate::error::{Error, Result};
use crate::perm::Permutation;

const NONE: usize = usize::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableStatus {
    Complete,
    Overflow,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationStats {
    /// Cosets ever defined.
    pub total_defined: usize,
    /// Peak number of simultaneously live cosets.
    pub max_live: usize,
    /// Live cosets when the run stopped.
    pub live: usize,
    pub lookaheads: usize,
    pub compactions: usize,
}

/// Right action of generators on cosets of the subgroup, with coset 0 the
/// subgroup itself. Rows are standardized: cosets are numbered in order of
/// first appearance when rows are scanned in order and columns left to
/// right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    generators: Vec<String>,
    ncols: usize,
    rows: Vec<usize>,
    count: usize,
    status: TableStatus,
    stats: EnumerationStats,
}

impl CosetTable {
    pub(super) fn from_parts(
        generators: Vec<String>,
        rows: Vec<usize>,
        count: usize,
        status: TableStatus,
        stats: EnumerationStats,
    ) -> CosetTable {
        let ncols = 2 * generators.len();
        debug_assert_eq!(rows.len(), count * ncols);
        CosetTable {
            generators,
            ncols,
            rows,
            count,
            status,
            stats,
        }
    }

    pub fn status(&self) -> TableStatus {
        self.status
    }

    pub fn is_complete(&self) -> bool {
        self.status == TableStatus::Complete
    }

    /// Number of cosets; the subgroup index when complete.
    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn stats(&self) -> &EnumerationStats {
        &self.stats
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    /// Image of `coset` under `g`, or `None` for an undefined entry.
    pub fn act(&self, coset: usize, g: Gen) -> Option<usize> {
        let d = self.rows[coset * self.ncols + g.column()];
        (d != NONE).then_some(d)
    }

    pub fn trace(&self, coset: usize, w: &[Gen]) -> Option<usize> {
        w.iter().try_fold(coset, |c, &g| self.act(c, g))
    }

    /// The permutation of cosets induced by generator `g` (by index).
    pub fn generator_permutation(&self, g: usize) -> Result<Permutation> {
        if !self.is_complete() {
            return Err(Error::IncompleteTable);
        }
        if g >= self.generators.len() {
            return Err(Error::UnknownGenerator(g.to_string()));
        }
        let images = (0..self.count)
            .map(|c| {
                self.act(c, Gen::new(g, false))
                    .ok_or(Error::IncompleteTable)
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(images)
    }

    pub fn word_permutation(&self, w: &[Gen]) -> Result<Permutation> {
        if !self.is_complete() {
            return Err(Error::IncompleteTable);
        }
        let images = (0..self.count)
            .map(|c| self.trace(c, w).ok_or(Error::IncompleteTable))
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(images)
    }

    /// Full soundness check against the presentation the table came from:
    /// every entry defined, inverse columns consistent, every relator
    /// closes at every coset, and every subgroup generator fixes coset 0.
    pub fn audit(&self, p: &FinitePresentation) -> Result<()> {
        if !self.is_complete() {
            return Err(Error::IncompleteTable);
        }
        if p.generators() != self.generators.as_slice() {
            return Err(Error::Audit("generator mismatch".into()));
        }
        for c in 0..self.count {
            for x in 0..self.ncols {
                let d = self.rows[c * self.ncols + x];
                if d >= self.count {
                    return Err(Error::Audit(format!("entry ({c}, {x}) undefined")));
                }
                if self.rows[d * self.ncols + (x ^ 1)] != c {
                    return Err(Error::Audit(format!("column {x} not inverse at coset {c}")));
                }
            }
            for (i, r) in p.relators().iter().enumerate() {
                if self.trace(c, r) != Some(c) {
                    return Err(Error::Audit(format!(
                        "relator {i} does not close at coset {c}"
                    )));
                }
            }
        }
        for (i, s) in p.subgroup().iter().enumerate() {
            if self.trace(0, s) != Some(0) {
                return Err(Error::Audit(format!(
                    "subgroup generator {i} moves coset 0"
                )));
            }
        }
        Ok(())
    }

    /// One line per coset: the coset number followed by the images under
    /// each generator and then each inverse, in declared generator order.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let ngens = self.generators.len();
        let _ = write!(out, "coset");
        for g in &self.generators {
            let _ = write!(out, " {g}");
        }
        for g in &self.generators {
            let mut c = g.chars();
            let head = c.next().map(|h| h.to_ascii_uppercase()).unwrap_or(' ');
            let _ = write!(out, " {head}{}", c.as_str());
        }
        out.push('\n');
        for c in 0..self.count {
            let _ = write!(out, "{c}");
            for col in (0..ngens)
                .map(|g| 2 * g)
                .chain((0..ngens).map(|g| 2 * g + 1))
            {
                match self.rows[c * self.ncols + col] {
                    NONE => out.push_str(" -"),
                    d => {
                        let _ = write!(out, " {d}");
                    }
                }
            }
            out.push('\n');
        }
        out
    }
}

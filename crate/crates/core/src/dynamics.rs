//! Shift dynamics on `G_n(w)` read off the coset space `E/<a>`.
//!
//! For `E = G ⋊ C_n` with retraction `ν^f`, the left `C_n`-set `E/<a>` is
//! isomorphic to `G` under the shift, with the subgroup coset matching the
//! identity. So the cycle structure of `a` acting on cosets of `<a>` is the
//! orbit structure of `θ` on `G`, and fixed cosets of `a^j` correspond to
//! fixed points of `θ^j`. The coset table gives the right action on right
//! cosets; inverting group elements turns it into the left action on left
//! cosets with `a` replaced by `a^{-1}`, which has the same cycle type and
//! the same fixed points for every power.

use serde::{Deserialize, Serialize};

use crate::cyclic::CyclicPresentation;
use crate::enumerate::{
    cyclic_to_presentation, todd_coxeter, EnumerationStats, FinitePresentation, Gen, Strategy,
};
use crate::error::{Error, Result};
use crate::relative::{check_retraction, rho, to_relative};
use crate::words::Word;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    /// Order of the acting cyclic group.
    pub n: usize,
    /// Retraction parameter used to name the kernel.
    pub f: usize,
    /// `ρ^f(W)`, the cyclic word whose shift these orbits describe.
    pub word: Word,
    pub total_points: usize,
    /// Orbit lengths, ascending.
    pub cycle_type: Vec<usize>,
    /// `fixed_counts[j - 1]` is the number of points fixed by `a^j`, `1 <= j < n`.
    pub fixed_counts: Vec<usize>,
    /// Every orbit other than the basepoint has length `n`.
    pub free_action_on_nonbase: bool,
    pub stats: EnumerationStats,
}

impl OrbitReport {
    /// Points fixed by `θ^j`, for `1 <= j < n`.
    pub fn fixed_by_power(&self, j: usize) -> usize {
        assert!((1..self.n).contains(&j), "power out of range");
        self.fixed_counts[j - 1]
    }

    /// Points fixed by `θ` itself, basepoint included.
    pub fn theta_fixed(&self) -> usize {
        self.fixed_by_power(1)
    }

    /// `θ` fixes a point besides the basepoint.
    pub fn theta_has_nonbase_fixed_point(&self) -> bool {
        self.theta_fixed() > 1
    }

    /// Some `θ^j`, `1 <= j < n`, fixes a point besides the basepoint.
    pub fn some_power_fixes_nonbase(&self) -> bool {
        self.fixed_counts.iter().any(|&c| c > 1)
    }
}

/// Orbit analysis outcome; enumeration is only a semi-decision procedure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Orbits {
    Complete(OrbitReport),
    Undecided(EnumerationStats),
}

impl Orbits {
    pub fn complete(self) -> Option<OrbitReport> {
        match self {
            Orbits::Complete(r) => Some(r),
            Orbits::Undecided(_) => None,
        }
    }
}

/// Enumerates the cosets of `<a>` in `E = (a, x : a^n, W)` with `W` the
/// relative form of `w`, and reports the cycle structure of `a`.
pub fn shift_orbits(
    n: usize,
    w: &Word,
    f: i64,
    max_cosets: usize,
    strategy: Strategy,
) -> Result<Orbits> {
    if n < 2 {
        return Err(Error::Precondition(
            "orbit analysis needs n >= 2; reduce through gcd_decompose".into(),
        ));
    }
    let p = CyclicPresentation::new(n, w.clone())?;
    let rel = to_relative(p.word())?;
    check_retraction(&rel, n, f)?;
    let word = rho(&rel, n, f)?;
    let pres = cyclic_to_presentation(p.word())?.with_subgroup(vec![Gen::power(0, 1)]);
    let table = todd_coxeter(&pres, max_cosets, strategy);
    if !table.is_complete() {
        return Ok(Orbits::Undecided(*table.stats()));
    }
    table.audit(&pres)?;
    let a = table.generator_permutation(0)?;
    let total_points = a.len();
    let cycle_type = a.cycle_type();
    let fixed_counts: Vec<usize> = (1..n as u64)
        .map(|j| a.pow(j).fixed_points().len())
        .collect();
    // the basepoint is the only orbit of length 1 that must exist
    let free_action_on_nonbase =
        cycle_type.iter().filter(|&&c| c != n).count() == 1 && cycle_type.contains(&1);
    Ok(Orbits::Complete(OrbitReport {
        n,
        f: crate::words::modn(f, n),
        word,
        total_points,
        cycle_type,
        fixed_counts,
        free_action_on_nonbase,
        stats: *table.stats(),
    }))
}

/// [`shift_orbits`] for `w = x_0 x_k x_l`.
pub fn shift_orbits_gnkl(
    n: usize,
    k: i64,
    l: i64,
    f: i64,
    max_cosets: usize,
    strategy: Strategy,
) -> Result<Orbits> {
    shift_orbits(
        n,
        &Word::positive(n.max(1), &[0, k, l])?,
        f,
        max_cosets,
        strategy,
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedPointEvidence {
    pub total_points: usize,
    /// `θ`-fixed points including the basepoint.
    pub theta_fixed: usize,
    /// `(j, count)` for each power `θ^j`, `1 <= j < n`.
    pub per_power: Vec<(usize, usize)>,
    pub some_power_fixes_nonbase: bool,
}

pub fn fixed_subgroup_evidence(report: &OrbitReport) -> FixedPointEvidence {
    FixedPointEvidence {
        total_points: report.total_points,
        theta_fixed: report.theta_fixed(),
        per_power: report
            .fixed_counts
            .iter()
            .enumerate()
            .map(|(i, &c)| (i + 1, c))
            .collect(),
        some_power_fixes_nonbase: report.some_power_fixes_nonbase(),
    }
}

/// `K = (b, u : b^6, u^2 b^3 u b^2)`, trivial subgroup.
pub fn k_presentation() -> FinitePresentation {
    let mut p = FinitePresentation::new(["b", "u"]);
    p.add_relator(Gen::power(0, 6));
    let mut r = Gen::power(1, 2);
    r.extend(Gen::power(0, 3));
    r.extend(Gen::power(1, 1));
    r.extend(Gen::power(0, 2));
    p.add_relator(r);
    p
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct N18Evidence {
    /// `|K|`.
    pub order: usize,
    /// `|K : <b>|`.
    pub index: usize,
    /// Cosets of `<b>` fixed by `b`, the subgroup coset included.
    pub fixed_by_b: usize,
    pub fixed_cosets: Vec<usize>,
}

/// Counts what the `n = 18` argument needs: `|K|`, the index of `<b>`, and
/// the cosets of `<b>` fixed by `b`. Fails if either enumeration overflows.
pub fn verify_n18_evidence(max_cosets: usize, strategy: Strategy) -> Result<N18Evidence> {
    let k = k_presentation();
    let whole = todd_coxeter(&k, max_cosets, strategy);
    if !whole.is_complete() {
        return Err(Error::IncompleteTable);
    }
    whole.audit(&k)?;
    let kb = k.with_subgroup(vec![Gen::power(0, 1)]);
    let over_b = todd_coxeter(&kb, max_cosets, strategy);
    if !over_b.is_complete() {
        return Err(Error::IncompleteTable);
    }
    over_b.audit(&kb)?;
    let fixed_cosets = over_b.generator_permutation(0)?.fixed_points();
    Ok(N18Evidence {
        order: whole.len(),
        index: over_b.len(),
        fixed_by_b: fixed_cosets.len(),
        fixed_cosets,
    })
}

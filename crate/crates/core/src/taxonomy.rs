//! Classification of `G_n(k,l)` by the divisibility conditions
//!
//! * (A) `3 | n` and `3 | k + l`
//! * (B) `n | k + l` or `n | 2k - l` or `n | 2l - k`
//! * (C) `n | 3k` or `n | 3l` or `n | 3(k - l)`
//!
//! together with `d = gcd(n, k, l)`. The verdicts for finiteness,
//! combinatorial asphericity (CA) of `P_n(k,l)`, freeness of the shift
//! action, and existence of nonidentity `θ`-fixed points are read off a
//! fixed decision tree; nothing here is computed from identity sequences.

use num_bigint::BigUint;
use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cyclic::gcd_decompose;
use crate::error::{Error, Result};
use crate::words::modn;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conditions {
    pub a: bool,
    pub b: bool,
    pub c: bool,
}

/// Evaluates (A), (B), (C) with all arithmetic mod `n`.
pub fn conditions(n: usize, k: i64, l: i64) -> Conditions {
    assert!(n > 0, "modulus must be positive");
    let divides = |x: i64| modn(x, n) == 0;
    Conditions {
        a: n.is_multiple_of(3) && (k + l).rem_euclid(3) == 0,
        b: divides(k + l) || divides(2 * k - l) || divides(2 * l - k),
        c: divides(3 * k) || divides(3 * l) || divides(3 * (k - l)),
    }
}

/// Which leaf of the decision tree produced a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    /// `d > 1`: free product of `d` copies of the reduced group.
    CommonFactor,
    /// `d = 1`, (B), `n = 3`.
    BFreeRankTwo,
    /// `d = 1`, (B), `3 | n`, `n != 3`.
    BInfinite,
    /// `d = 1`, (B), `3 ∤ n`.
    BFinite,
    /// `d = 1`, not (B), (C), not (A).
    CFinite,
    /// `d = 1`, not (B), (C), (A).
    CInfinite,
    /// `d = 1`, neither (B) nor (C), outside the `n = 18` exception.
    Aspherical,
    /// `n = 18`, `3 | k + l`, neither (B) nor (C).
    Exceptional18,
}

impl Branch {
    pub fn label(self) -> &'static str {
        match self {
            Branch::CommonFactor => "common-factor",
            Branch::BFreeRankTwo => "b-free-rank-two",
            Branch::BInfinite => "b-infinite",
            Branch::BFinite => "b-finite",
            Branch::CFinite => "c-finite",
            Branch::CInfinite => "c-infinite",
            Branch::Aspherical => "aspherical",
            Branch::Exceptional18 => "exceptional-18",
        }
    }
}

/// Why each verdict holds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rationale {
    pub finite: String,
    pub ca: String,
    pub free_shift: String,
    pub theta_fixed: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub n: usize,
    pub k: usize,
    pub l: usize,
    pub d: usize,
    pub conditions: Conditions,
    pub branch: Branch,
    pub finite: bool,
    /// `2^n - (-1)^n`, filled in exactly when `d = 1`, (C) holds and (A) fails.
    #[serde(with = "decimal")]
    pub order: Option<BigUint>,
    /// `P_n(k,l)` is combinatorially aspherical.
    pub ca: bool,
    /// `C_n` acts freely via the shift on the nonidentity elements.
    pub free_shift: bool,
    /// `θ` itself has a nonidentity fixed point.
    pub theta_fixed: bool,
    pub exceptional_n18: bool,
    pub structure_note: String,
    pub rationale: Rationale,
    /// Verdict for `(n/d, k/d, l/d)` when `d > 1`.
    pub reduced: Option<Box<Classification>>,
}

/// `2^n - (-1)^n`.
pub fn cyclic_order(n: usize) -> BigUint {
    let p = BigUint::from(1u8) << n;
    if n.is_multiple_of(2) {
        p - 1u8
    } else {
        p + 1u8
    }
}

fn note(s: &str) -> String {
    s.to_string()
}

pub fn classify(n: usize, k: i64, l: i64) -> Classification {
    assert!(n > 0, "modulus must be positive");
    let (kn, ln) = (modn(k, n), modn(l, n));
    let dec = gcd_decompose(n, k, l);
    let cond = conditions(n, kn as i64, ln as i64);
    let base = |branch, finite, ca, free_shift, theta_fixed, structure: String, rationale| {
        Classification {
            n,
            k: kn,
            l: ln,
            d: dec.d,
            conditions: cond,
            branch,
            finite,
            order: None,
            ca,
            free_shift,
            theta_fixed,
            exceptional_n18: false,
            structure_note: structure,
            rationale,
            reduced: None,
        }
    };

    if dec.d > 1 {
        let reduced = classify(dec.n, dec.k as i64, dec.l as i64);
        let d = dec.d;
        let mut c = base(
            Branch::CommonFactor,
            false,
            reduced.ca,
            reduced.free_shift,
            false,
            format!(
                "free product of {d} copies of G_{}({},{}); θ^p has a nonidentity fixed point iff {d} | p and θ'^(p/{d}) has one on G_{}({},{})",
                dec.n, dec.k, dec.l, dec.n, dec.k, dec.l
            ),
            Rationale {
                finite: note("a free product of d > 1 nontrivial groups is infinite"),
                ca: format!("CA iff the factor presentation P_{}({},{}) is CA", dec.n, dec.k, dec.l),
                free_shift: format!("θ acts freely iff θ' acts freely on G_{}({},{})", dec.n, dec.k, dec.l),
                theta_fixed: note("θ permutes the d free factors cyclically, so it fixes no nonidentity element"),
            },
        );
        c.reduced = Some(Box::new(reduced));
        return c;
    }

    let order_formula = (cond.c && !cond.a).then(|| cyclic_order(n));

    let mut c = if cond.b {
        if n == 3 {
            base(
                Branch::BFreeRankTwo,
                false,
                true,
                true,
                false,
                note("free group of rank two; E ≅ C_3 * C_3"),
                Rationale {
                    finite: note("(B) with n = 3: G is free of rank two"),
                    ca: note(
                        "(B) with n = 3: W is conjugate to u^3 and (C_3, u : u^3) is aspherical",
                    ),
                    free_shift: note("(B) with n = 3: C_3 acts freely on the nonidentity elements"),
                    theta_fixed: note("free action, so no nonidentity fixed point"),
                },
            )
        } else if n.is_multiple_of(3) {
            base(
                Branch::BInfinite,
                false,
                false,
                false,
                false,
                note("infinite; E ≅ <u> *_{C_{n/3}} C_n and θ^3 = 1"),
                Rationale {
                    finite: note("(B), 3 | n, n != 3: E is a nontrivial amalgamated free product"),
                    ca: note("(B): CA iff n = 3"),
                    free_shift: note("(B): a^3 is central in E, so θ^3 = 1"),
                    theta_fixed: note("(B), 3 | n, n != 3: a generates its centralizer in E, so θ has no nonidentity fixed point"),
                },
            )
        } else {
            base(
                Branch::BFinite,
                true,
                false,
                false,
                true,
                note("finite cyclic; E is cyclic and θ = 1"),
                Rationale {
                    finite: note("(B), 3 ∤ n: E is finite cyclic"),
                    ca: note("(B): CA iff n = 3"),
                    free_shift: note("(B), 3 ∤ n: θ = 1"),
                    theta_fixed: note("θ = 1 on a nontrivial group"),
                },
            )
        }
    } else if cond.c {
        if !cond.a {
            let kind = if n.is_multiple_of(3) {
                "metacyclic"
            } else {
                "cyclic"
            };
            base(
                Branch::CFinite,
                true,
                false,
                false,
                true,
                format!("finite {kind} of order 2^{n} - (-1)^{n}"),
                Rationale {
                    finite: note("(C) without (A): commensurable with the cyclic group G_n(0,p), gcd(p,n) = 1"),
                    ca: note("(C) without (A): G has torsion from the fixed subgroup of order three"),
                    free_shift: note("(C) without (A): θ fixes a subgroup of order three"),
                    theta_fixed: note("(C) without (A): θ fixes a subgroup of order three"),
                },
            )
        } else {
            base(
                Branch::CInfinite,
                false,
                false,
                false,
                false,
                note("infinite; commensurable with G_n(0,p), gcd(p,n) = 3"),
                Rationale {
                    finite: note("(C) with (A): commensurable with G_n(0,p), gcd(p,n) = 3, a free product of three cyclic groups"),
                    ca: note("(C) with (A), n != 3: G_n(0,p) has torsion"),
                    free_shift: note("(C) with (A): the shift does not act freely"),
                    theta_fixed: note("(C) with (A): θ has no nonidentity fixed point on the infinite group"),
                },
            )
        }
    } else if n == 18 && (kn + ln) % 3 == 0 {
        let mut c = base(
            Branch::Exceptional18,
            false,
            false,
            false,
            false,
            note("F_2 * C_19, θ^3 has a nonidentity fixed point"),
            Rationale {
                finite: note("n = 18, 3 | k + l: G ≅ F_2 * C_19"),
                ca: note("n = 18, 3 | k + l: G has torsion"),
                free_shift: note(
                    "θ^3 fixes a nonidentity element (b fixes 3 of the 57 cosets of <b> in K)",
                ),
                theta_fixed: note(
                    "E = K *_{C_6} C_18 with a outside C_6, so θ has no nonidentity fixed point",
                ),
            },
        );
        c.exceptional_n18 = true;
        c
    } else {
        base(
            Branch::Aspherical,
            false,
            true,
            true,
            false,
            note("infinite and torsion-free; the cellular model of P_n(k,l) is aspherical"),
            Rationale {
                finite: note(
                    "neither (B) nor (C): aspherical cellular model, torsion-free and nontrivial",
                ),
                ca: note("topological asphericity implies CA"),
                free_shift: note("orientable and CA, so the shift acts freely"),
                theta_fixed: note("free action, so no nonidentity fixed point"),
            },
        )
    };
    c.order = order_formula;
    c
}

/// Classifies every triple `1 <= n <= nmax`, `0 <= k, l < n`, in that order.
pub fn sweep(nmax: usize) -> Vec<Classification> {
    let triples: Vec<(usize, i64, i64)> = (1..=nmax)
        .flat_map(|n| (0..n as i64).flat_map(move |k| (0..n as i64).map(move |l| (n, k, l))))
        .collect();
    triples
        .par_iter()
        .map(|&(n, k, l)| classify(n, k, l))
        .collect()
}

/// Which divisibility in (C) was used.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CCase {
    /// `n | 3k`, retraction `f = -k`, `ρ^f(W) = x_0^2 x_{l-2k}`.
    ThreeK,
    /// `n | 3l`, retraction `f = l`, `ρ^f(W) = x_0 x_{k+l} x_0`.
    ThreeL,
    /// `n | 3(k-l)`, retraction `f = k - l`, `ρ^f(W) = x_0 x_{2k-l}^2`.
    ThreeKMinusL,
}

/// A retraction `ν^f` whose kernel is presented by `P_n(0,p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroPReduction {
    pub p: usize,
    pub f: usize,
    pub case: CCase,
}

/// Finds `(p, f)` with `P_n(ρ^f(W)) = P_n(0,p)` up to shifting and cyclically
/// permuting the defining word. Requires `gcd(n,k,l) = 1`; `None` when (C) fails.
pub fn reduce_to_0p(n: usize, k: i64, l: i64) -> Result<Option<ZeroPReduction>> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    let dec = gcd_decompose(n, k, l);
    if dec.d != 1 {
        return Err(Error::Precondition(format!(
            "gcd({n}, {k}, {l}) = {} is not 1",
            dec.d
        )));
    }
    let divides = |x: i64| modn(x, n) == 0;
    let (case, f, p) = if divides(3 * k) {
        (CCase::ThreeK, -k, l - 2 * k)
    } else if divides(3 * l) {
        (CCase::ThreeL, l, k + l)
    } else if divides(3 * (k - l)) {
        (CCase::ThreeKMinusL, k - l, l - 2 * k)
    } else {
        return Ok(None);
    };
    let (p, f) = (modn(p, n), modn(f, n));
    debug_assert!(p.gcd(&n) == 1 || p.gcd(&n) == 3);
    Ok(Some(ZeroPReduction { p, f, case }))
}

mod decimal {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(x) => s.serialize_some(&x.to_str_radix(10)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigUint>, D::Error> {
        let v: Option<String> = Option::deserialize(d)?;
        v.map(|s| {
            BigUint::parse_bytes(s.as_bytes(), 10)
                .ok_or_else(|| serde::de::Error::custom(format!("bad integer {s:?}")))
        })
        .transpose()
    }
}

//! Independent oracles and generators shared by the integration tests.
//! Nothing here calls the library routine it is used to check.

#![allow(dead_code)]

use cpgroups::relative::{RelativeWord, Syllable};
use cpgroups::words::{Sign, Word};
use rand::rngs::StdRng;
use rand::Rng;

/// `(subscript, exponent)` pairs, the raw shape of a word.
pub type Raw = Vec<(usize, i8)>;

pub fn raw(w: &Word) -> Raw {
    w.letters()
        .iter()
        .map(|l| (l.index, l.sign.value() as i8))
        .collect()
}

pub fn word(n: usize, r: &[(usize, i8)]) -> Word {
    Word::new(
        n,
        r.iter()
            .map(|&(i, e)| (i as i64, Sign::from_i64(e as i64).unwrap())),
    )
    .unwrap()
}

pub fn random_raw(rng: &mut StdRng, n: usize, len: usize) -> Raw {
    (0..len)
        .map(|_| (rng.gen_range(0..n), if rng.gen() { 1 } else { -1 }))
        .collect()
}

/// Free reduction that cancels a randomly chosen adjacent pair each step.
pub fn reduce_random_order(mut w: Raw, rng: &mut StdRng) -> Raw {
    loop {
        let spots: Vec<usize> = (0..w.len().saturating_sub(1))
            .filter(|&i| w[i].0 == w[i + 1].0 && w[i].1 == -w[i + 1].1)
            .collect();
        if spots.is_empty() {
            return w;
        }
        let i = spots[rng.gen_range(0..spots.len())];
        w.drain(i..i + 2);
    }
}

pub fn raw_reduce(w: &[(usize, i8)]) -> Raw {
    let mut out: Raw = Vec::new();
    for &l in w {
        if out.last().is_some_and(|&t| t.0 == l.0 && t.1 == -l.1) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

pub fn raw_cyclically_reduced(w: &[(usize, i8)]) -> bool {
    raw_reduce(w).len() == w.len()
        && (w.len() < 2 || !(w[0].0 == w[w.len() - 1].0 && w[0].1 == -w[w.len() - 1].1))
}

/// Shortest length reachable from `w` by conjugating with single letters
/// and freely reducing, never exceeding `|w| + 2` letters.
pub fn brute_min_conjugate_len(n: usize, w: &[(usize, i8)]) -> usize {
    use std::collections::{HashSet, VecDeque};
    let start = raw_reduce(w);
    let cap = w.len() + 2;
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    let mut best = usize::MAX;
    while let Some(cur) = queue.pop_front() {
        best = best.min(cur.len());
        for i in 0..n {
            for e in [1i8, -1] {
                let mut c = vec![(i, e)];
                c.extend_from_slice(&cur);
                c.push((i, -e));
                let c = raw_reduce(&c);
                if c.len() <= cap && seen.insert(c.clone()) {
                    queue.push_back(c);
                }
            }
        }
    }
    best
}

/// Orientability straight from the definition.
pub fn brute_orientable(n: usize, w: &[(usize, i8)]) -> bool {
    let len = w.len();
    for v in 0..n {
        let inv: Raw = w.iter().rev().map(|&(i, e)| ((i + v) % n, -e)).collect();
        for r in 0..len {
            if (0..len).all(|j| inv[(j + r) % len] == w[j]) {
                return false;
            }
        }
    }
    true
}

/// Every cyclically reduced word of length exactly `len` over `n` letters.
pub fn all_cyclically_reduced(n: usize, len: usize) -> Vec<Raw> {
    let alphabet: Vec<(usize, i8)> = (0..n).flat_map(|i| [(i, 1), (i, -1)]).collect();
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w: Raw| {
                alphabet.iter().map(move |&l| {
                    let mut w = w.clone();
                    w.push(l);
                    w
                })
            })
            .collect();
    }
    out.retain(|w| raw_cyclically_reduced(w));
    out
}

/// Element of `C_n * <x>` as alternating tokens: `(true, ±1)` is `x^{±1}`,
/// `(false, e)` is `a^e` with `e` in `[0, n)`.
pub type FreeProductWord = Vec<(bool, i64)>;

/// Normal form in `C_n * <x>`: merge `a`-powers mod `n`, drop `a^0`, cancel
/// `x x^{-1}`.
pub fn fp_reduce(n: usize, tokens: &[(bool, i64)]) -> FreeProductWord {
    let n = n as i64;
    let mut out: FreeProductWord = Vec::new();
    for &(is_x, e) in tokens {
        out.push(if is_x {
            (true, e)
        } else {
            (false, e.rem_euclid(n))
        });
        loop {
            let k = out.len();
            if k >= 1 && out[k - 1] == (false, 0) {
                out.pop();
            } else if k >= 2 && !out[k - 1].0 && !out[k - 2].0 {
                let b = out.pop().unwrap().1;
                out[k - 2].1 = (out[k - 2].1 + b).rem_euclid(n);
            } else if k >= 2 && out[k - 1].0 && out[k - 2].0 && out[k - 1].1 == -out[k - 2].1 {
                out.truncate(k - 2);
            } else {
                break;
            }
        }
    }
    out
}

pub fn fp_of_relative(n: usize, w: &RelativeWord) -> FreeProductWord {
    let mut t = Vec::new();
    for s in w.syllables() {
        t.push((true, s.sign.value()));
        t.push((false, s.a_exp));
    }
    fp_reduce(n, &t)
}

/// Substitutes `x_i -> a^i x a^{-(i+f)}` into a cyclic word and reduces in
/// `C_n * <x>`.
pub fn substitute(n: usize, f: i64, w: &Word) -> FreeProductWord {
    let mut t = Vec::new();
    for l in w.letters() {
        let i = l.index as i64;
        match l.sign {
            Sign::Pos => t.extend([(false, i), (true, 1), (false, -(i + f))]),
            Sign::Neg => t.extend([(false, i + f), (true, -1), (false, -i)]),
        }
    }
    fp_reduce(n, &t)
}

pub fn fp_cyclically_reduced(n: usize, w: &RelativeWord) -> bool {
    let s = w.syllables();
    let len = s.len();
    (0..len).all(|i| {
        let next = s[(i + 1) % len];
        !(next.sign != s[i].sign && s[i].a_exp.rem_euclid(n as i64) == 0)
    })
}

/// Random cyclically reduced `W` over `C_n * <x>` with `1 <= L <= max_len`
/// together with an `f` for which `ν^f` is a retraction.
pub fn random_valid_relative(rng: &mut StdRng, n: usize, max_len: usize) -> (RelativeWord, i64) {
    loop {
        let len = rng.gen_range(1..=max_len);
        let mut syl: Vec<Syllable> = (0..len)
            .map(|_| {
                let sign = if rng.gen() { Sign::Pos } else { Sign::Neg };
                Syllable::new(sign, rng.gen_range(-(n as i64)..2 * n as i64))
            })
            .collect();
        let f = rng.gen_range(0..n as i64);
        let eps: i64 = syl.iter().map(|s| s.sign.value()).sum();
        let p_head: i64 = syl[..len - 1].iter().map(|s| s.a_exp).sum();
        // pick the last exponent so that eps*f + p = 0 exactly
        syl[len - 1].a_exp = -eps * f - p_head + n as i64 * rng.gen_range(-1..=1);
        let w = RelativeWord::new(syl).unwrap();
        if fp_cyclically_reduced(n, &w) {
            return (w, f);
        }
    }
}

/// `εf + p ≡ 0 mod n`.
pub fn retraction_ok(w: &RelativeWord, n: usize, f: i64) -> bool {
    let total: i64 = w
        .syllables()
        .iter()
        .map(|s| s.sign.value() * f + s.a_exp)
        .sum();
    total.rem_euclid(n as i64) == 0
}

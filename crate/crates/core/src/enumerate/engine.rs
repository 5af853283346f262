//! Todd–Coxeter coset enumeration.
//!
//! The table is a flat `rows x (2 * gens)` array; column `2g` holds the
//! action of generator `g` and column `2g + 1` that of its inverse, so
//! `col ^ 1` is the inverse column. Dead cosets forward to their
//! representative through `parent`. Coincidences are processed with the
//! usual queue-based merge; dead rows are only reclaimed by `compact`.

use super::presentation::FinitePresentation;
use super::table::{CosetTable, EnumerationStats, TableStatus};
use super::Strategy;

const NONE: usize = usize::MAX;

/// Raised when a new coset is needed but the row budget is spent.
struct Full;

struct Engine {
    ncols: usize,
    table: Vec<usize>,
    parent: Vec<usize>,
    max_rows: usize,
    live: usize,
    queue: Vec<usize>,
    deductions: Vec<(usize, usize)>,
    track_deductions: bool,
    stats: EnumerationStats,
}

impl Engine {
    fn new(ngens: usize, max_rows: usize, track_deductions: bool) -> Engine {
        let ncols = 2 * ngens;
        Engine {
            ncols,
            table: vec![NONE; ncols],
            parent: vec![0],
            max_rows,
            live: 1,
            queue: Vec::new(),
            deductions: Vec::new(),
            track_deductions,
            stats: EnumerationStats {
                total_defined: 1,
                max_live: 1,
                ..Default::default()
            },
        }
    }

    #[inline]
    fn rows(&self) -> usize {
        self.parent.len()
    }

    #[inline]
    fn get(&self, c: usize, x: usize) -> usize {
        self.table[c * self.ncols + x]
    }

    #[inline]
    fn set(&mut self, c: usize, x: usize, d: usize) {
        self.table[c * self.ncols + x] = d;
    }

    #[inline]
    fn is_live(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn deduce(&mut self, c: usize, x: usize) {
        if self.track_deductions {
            self.deductions.push((c, x));
        }
    }

    fn define(&mut self, c: usize, x: usize) -> Result<(), Full> {
        if self.rows() >= self.max_rows {
            return Err(Full);
        }
        let d = self.rows();
        self.table.extend(std::iter::repeat_n(NONE, self.ncols));
        self.parent.push(d);
        self.live += 1;
        self.stats.total_defined += 1;
        self.stats.max_live = self.stats.max_live.max(self.live);
        self.set(c, x, d);
        self.set(d, x ^ 1, c);
        self.deduce(c, x);
        Ok(())
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut k = c;
        while self.parent[k] != r {
            let next = self.parent[k];
            self.parent[k] = r;
            k = next;
        }
        r
    }

    fn merge(&mut self, a: usize, b: usize) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (keep, kill) = if a < b { (a, b) } else { (b, a) };
        self.parent[kill] = keep;
        self.live -= 1;
        self.queue.push(kill);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let dead = self.queue[i];
            i += 1;
            for x in 0..self.ncols {
                let d = self.get(dead, x);
                if d == NONE {
                    continue;
                }
                self.set(d, x ^ 1, NONE);
                let mu = self.rep(dead);
                let nu = self.rep(d);
                let mu_x = self.get(mu, x);
                if mu_x != NONE {
                    self.merge(nu, mu_x);
                } else {
                    let nu_inv = self.get(nu, x ^ 1);
                    if nu_inv != NONE {
                        self.merge(mu, nu_inv);
                    } else {
                        self.set(mu, x, nu);
                        self.set(nu, x ^ 1, mu);
                        self.deduce(mu, x);
                    }
                }
            }
        }
    }

    /// Traces `w` from `c` in both directions, defining new cosets when
    /// `fill` is set. Closes a one-entry gap as a deduction and records a
    /// coincidence when both ends meet at different cosets.
    fn scan(&mut self, c: usize, w: &[usize], fill: bool) -> Result<(), Full> {
        if w.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, w.len() as isize - 1);
        loop {
            while (i as isize) <= j {
                let next = self.get(f, w[i]);
                if next == NONE {
                    break;
                }
                f = next;
                i += 1;
            }
            if i as isize > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i as isize {
                let prev = self.get(b, w[j as usize] ^ 1);
                if prev == NONE {
                    break;
                }
                b = prev;
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i as isize {
                self.set(f, w[i], b);
                self.set(b, w[i] ^ 1, f);
                self.deduce(f, w[i]);
                return Ok(());
            }
            if !fill {
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }

    fn lookahead(&mut self, rels: &[Vec<usize>]) {
        for c in 0..self.rows() {
            for r in rels {
                if !self.is_live(c) {
                    break;
                }
                // scans without filling never allocate
                let _ = self.scan(c, r, false);
            }
        }
    }

    /// Drops dead rows, preserving the order of live ones. Returns the
    /// number of rows freed and the old-to-new index map.
    fn compact(&mut self) -> (usize, Vec<usize>) {
        let rows = self.rows();
        let mut map = vec![NONE; rows];
        let mut next = 0;
        for (c, slot) in map.iter_mut().enumerate() {
            if self.parent[c] == c {
                *slot = next;
                next += 1;
            }
        }
        let mut table = Vec::with_capacity(next * self.ncols);
        for c in 0..rows {
            if map[c] == NONE {
                continue;
            }
            for x in 0..self.ncols {
                let d = self.get(c, x);
                table.push(if d == NONE { NONE } else { map[self.rep(d)] });
            }
        }
        self.table = table;
        self.parent = (0..next).collect();
        self.deductions.clear();
        (rows - next, map)
    }

    /// First live coset at or after old index `c`, after a compaction.
    fn remap(map: &[usize], c: usize) -> usize {
        map[..c.min(map.len())]
            .iter()
            .filter(|&&m| m != NONE)
            .count()
    }

    fn process_deductions(&mut self, conjugates: &[Vec<Vec<usize>>]) {
        while let Some((a, x)) = self.deductions.pop() {
            if !self.is_live(a) {
                continue;
            }
            for r in &conjugates[x] {
                let _ = self.scan(a, r, false);
                if !self.is_live(a) {
                    break;
                }
            }
            if !self.is_live(a) {
                continue;
            }
            let b = self.get(a, x);
            if b == NONE || !self.is_live(b) {
                continue;
            }
            for r in &conjugates[x ^ 1] {
                let _ = self.scan(b, r, false);
                if !self.is_live(b) {
                    break;
                }
            }
        }
    }

    fn is_complete(&self) -> bool {
        (0..self.rows())
            .all(|c| !self.is_live(c) || (0..self.ncols).all(|x| self.get(c, x) != NONE))
    }

    fn run_hlt(&mut self, rels: &[Vec<usize>], sub: &[Vec<usize>]) -> bool {
        'subgroup: loop {
            for w in sub {
                if self.scan(0, w, true).is_err() {
                    if !self.reclaim(rels, true) {
                        return false;
                    }
                    continue 'subgroup;
                }
            }
            break;
        }
        let mut c = 0;
        while c < self.rows() {
            if self.is_live(c) && self.process_hlt_row(c, rels).is_err() {
                let old = c;
                let freed = self.reclaim_with_map(rels, true);
                match freed {
                    Some(map) => c = Self::remap(&map, old),
                    None => return false,
                }
                continue;
            }
            c += 1;
        }
        true
    }

    fn process_hlt_row(&mut self, c: usize, rels: &[Vec<usize>]) -> Result<(), Full> {
        for r in rels {
            self.scan(c, r, true)?;
            if !self.is_live(c) {
                return Ok(());
            }
        }
        for x in 0..self.ncols {
            if self.get(c, x) == NONE {
                self.define(c, x)?;
            }
        }
        Ok(())
    }

    fn run_felsch(
        &mut self,
        rels: &[Vec<usize>],
        sub: &[Vec<usize>],
        conjugates: &[Vec<Vec<usize>>],
    ) -> bool {
        'subgroup: loop {
            for w in sub {
                if self.scan(0, w, true).is_err() {
                    if !self.reclaim(rels, false) {
                        return false;
                    }
                    continue 'subgroup;
                }
            }
            break;
        }
        self.process_deductions(conjugates);
        let mut c = 0;
        while c < self.rows() {
            let mut x = 0;
            while self.is_live(c) && x < self.ncols {
                if self.get(c, x) == NONE {
                    if self.define(c, x).is_err() {
                        match self.reclaim_with_map(rels, false) {
                            Some(map) => {
                                c = Self::remap(&map, c);
                                x = 0;
                                continue;
                            }
                            None => return false,
                        }
                    }
                    self.process_deductions(conjugates);
                }
                x += 1;
            }
            c += 1;
        }
        true
    }

    fn reclaim(&mut self, rels: &[Vec<usize>], lookahead: bool) -> bool {
        self.reclaim_with_map(rels, lookahead).is_some()
    }

    fn reclaim_with_map(&mut self, rels: &[Vec<usize>], lookahead: bool) -> Option<Vec<usize>> {
        if lookahead {
            self.stats.lookaheads += 1;
            self.lookahead(rels);
        }
        let (freed, map) = self.compact();
        self.stats.compactions += 1;
        (freed > 0).then_some(map)
    }

    /// Renumbers live cosets in order of first appearance, scanning rows in
    /// order and columns left to right.
    fn standardized(&mut self) -> (Vec<usize>, usize) {
        self.compact();
        let rows = self.rows();
        let mut order = vec![0usize];
        let mut map = vec![NONE; rows];
        map[0] = 0;
        let mut i = 0;
        while i < order.len() {
            let c = order[i];
            i += 1;
            for x in 0..self.ncols {
                let d = self.get(c, x);
                if d != NONE && map[d] == NONE {
                    map[d] = order.len();
                    order.push(d);
                }
            }
        }
        let mut out = Vec::with_capacity(order.len() * self.ncols);
        for &c in &order {
            for x in 0..self.ncols {
                let d = self.get(c, x);
                out.push(if d == NONE { NONE } else { map[d] });
            }
        }
        (out, order.len())
    }
}

fn cyclic_conjugates(rels: &[Vec<usize>], ncols: usize) -> Vec<Vec<Vec<usize>>> {
    let mut by_first: Vec<Vec<Vec<usize>>> = vec![Vec::new(); ncols];
    for r in rels {
        let inv: Vec<usize> = r.iter().rev().map(|x| x ^ 1).collect();
        for w in [r, &inv] {
            for s in 0..w.len() {
                let mut c = w.clone();
                c.rotate_left(s);
                if !by_first[c[0]].contains(&c) {
                    by_first[c[0]].push(c);
                }
            }
        }
    }
    by_first
}

pub(super) fn enumerate(
    p: &FinitePresentation,
    max_cosets: usize,
    strategy: Strategy,
) -> CosetTable {
    let ngens = p.generators().len();
    let to_cols = |w: &Vec<super::Gen>| w.iter().map(|g| g.column()).collect::<Vec<usize>>();
    let rels: Vec<Vec<usize>> = p
        .relators()
        .iter()
        .map(to_cols)
        .filter(|r| !r.is_empty())
        .collect();
    let sub: Vec<Vec<usize>> = p.subgroup().iter().map(to_cols).collect();
    let max_rows = max_cosets.max(1);

    let mut engine = Engine::new(ngens, max_rows, strategy == Strategy::Felsch);
    let finished = match strategy {
        Strategy::Hlt => engine.run_hlt(&rels, &sub),
        Strategy::Felsch => {
            let conj = cyclic_conjugates(&rels, engine.ncols);
            engine.run_felsch(&rels, &sub, &conj)
        }
    };
    let complete = finished && engine.is_complete();
    let (rows, count) = engine.standardized();
    let mut stats = engine.stats;
    stats.live = engine.live;
    CosetTable::from_parts(
        p.generators().to_vec(),
        rows,
        count,
        if complete {
            TableStatus::Complete
        } else {
            TableStatus::Overflow
        },
        stats,
    )
}

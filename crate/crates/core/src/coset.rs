//! Todd–Coxeter coset enumeration (HLT with lookahead).
//!
//! Cosets are scanned in definition order against every relator, filling
//! gaps by defining new cosets. Coincidences are processed immediately
//! through a union-find forwarding array. When the table is full a
//! lookahead pass scans without defining, then dead rows are compressed
//! away; enumeration fails only if that frees nothing.

use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};
use crate::presentation::{FinitePresentation, Word};

/// Default bound on simultaneously stored cosets.
pub const DEFAULT_MAX_COSETS: usize = 5_000_000;

const UNDEF: u32 = 0;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableStatus {
    Complete,
    Exceeded,
}

/// A coset table. Row 0 is the subgroup coset; column `2g` holds the
/// action of generator `g`, column `2g + 1` that of its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    ngens: usize,
    rows: Vec<u32>,
    live: usize,
    status: TableStatus,
}

impl CosetTable {
    pub fn status(&self) -> TableStatus {
        self.status
    }

    /// Number of live cosets (the index when complete).
    pub fn len(&self) -> usize {
        self.live
    }

    pub fn is_empty(&self) -> bool {
        self.live == 0
    }

    pub fn num_generators(&self) -> usize {
        self.ngens
    }

    /// Image of coset `c` under column `col` (0-based; `None` if undefined).
    pub fn entry(&self, c: usize, col: usize) -> Option<usize> {
        match self.rows[c * 2 * self.ngens + col] {
            UNDEF => None,
            v => Some(v as usize - 1),
        }
    }

    /// Permutation of the cosets induced by generator `g`.
    pub fn generator_permutation(&self, g: usize) -> Permutation {
        assert_eq!(self.status, TableStatus::Complete);
        let images = (0..self.live)
            .map(|c| self.rows[c * 2 * self.ngens + 2 * g] - 1)
            .collect();
        Permutation::from_images_unchecked(images)
    }
}

/// Runs coset enumeration of `pres` over the subgroup generated by
/// `subgroup`. On exhaustion the partial table is returned with status
/// [`TableStatus::Exceeded`].
pub fn enumerate_cosets(
    pres: &FinitePresentation,
    subgroup: &[Word],
    max_cosets: usize,
) -> CosetTable {
    assert!(max_cosets >= 1);
    let mut e = Enumerator::new(pres, subgroup, max_cosets);
    let ok = e.run();
    e.into_table(ok)
}

/// Enumerates the cosets of `subgroup` in the group presented by the
/// relators of `pres` together with `extra`. The table is first completed
/// by HLT using the relators of `pres` alone; every extra relator is then
/// scanned at every coset without defining, which only produces
/// coincidences. This avoids the heavy overshoot that long redundant
/// relators cause when they take part in the definition phase.
pub fn enumerate_cosets_refined(
    pres: &FinitePresentation,
    extra: &[Word],
    subgroup: &[Word],
    max_cosets: usize,
) -> CosetTable {
    assert!(max_cosets >= 1);
    let mut e = Enumerator::new(pres, subgroup, max_cosets);
    if !e.run() {
        return e.into_table(false);
    }
    let extra: Vec<Vec<u32>> = extra
        .iter()
        .map(|w| cyclic_reduce(encode(w)))
        .filter(|r| !r.is_empty())
        .collect();
    // A complete table stays complete under coincidences, and a relator
    // that closes at a coset still closes after merging, so one pass
    // suffices. Cosets are traced in lockstep batches so the independent
    // table lookups overlap; only a coset where some relator fails to
    // close goes through the coincidence-processing scan.
    let mut c = 1u32;
    while (c as usize) <= e.defined() {
        let mut batch = [0u32; LANES];
        let mut len = 0;
        while len < LANES && (c as usize) <= e.defined() {
            if e.is_live(c) {
                batch[len] = c;
                len += 1;
            }
            c += 1;
        }
        for r in &extra {
            let mut cur = batch;
            for &col in r {
                for f in &mut cur[..len] {
                    *f = e.get(*f, col);
                }
            }
            for k in 0..len {
                if cur[k] != batch[k] && e.is_live(batch[k]) {
                    let _ = e.scan(batch[k], r, false);
                }
            }
            if (0..len).any(|k| !e.is_live(batch[k])) {
                // the batch now refers to dead rows; restart it
                c = batch[0];
                while (c as usize) <= e.defined() && !e.is_live(c) {
                    c += 1;
                }
                break;
            }
        }
    }
    e.into_table(true)
}

/// Faithful regular permutation representation, one permutation per
/// generator, acting on `{0, .., |G|-1}` with point 0 the identity.
pub fn regular_representation(
    pres: &FinitePresentation,
    max_cosets: usize,
) -> Result<Vec<Permutation>> {
    let table = enumerate_cosets(pres, &[], max_cosets);
    if table.status() == TableStatus::Exceeded {
        return Err(Error::exceeded("coset enumeration", max_cosets as u64));
    }
    Ok((0..pres.num_generators())
        .map(|g| table.generator_permutation(g))
        .collect())
}

/// The group defined by `pres` in its regular representation; generator
/// `i` of the result is the image of presentation generator `i`.
pub fn regular_group(pres: &FinitePresentation, max_cosets: usize) -> Result<PermGroup> {
    let gens = regular_representation(pres, max_cosets)?;
    let degree = gens.first().map_or(1, |g| g.degree()).max(1);
    Ok(PermGroup::semiregular(degree, gens))
}

struct Enumerator {
    ncols: usize,
    /// Row-major table indexed by 1-based coset numbers; row 0 unused.
    table: Vec<u32>,
    /// Forwarding pointers; `forward[c] == c` iff `c` is live.
    forward: Vec<u32>,
    relators: Vec<Vec<u32>>,
    subgroup: Vec<Vec<u32>>,
    max: usize,
    live: usize,
    queue: Vec<u32>,
}

/// Signals that a definition was refused for lack of space.
struct Full;

/// Cosets traced together when imposing extra relators.
const LANES: usize = 32;

/// Cyclic reduction; scanning a cyclic conjugate at every coset is
/// equivalent.
fn cyclic_reduce(mut w: Vec<u32>) -> Vec<u32> {
    let mut start = 0;
    while w.len() >= start + 2 && w[start] == w[w.len() - 1] ^ 1 {
        start += 1;
        w.pop();
    }
    w.drain(..start);
    w
}

fn encode(w: &Word) -> Vec<u32> {
    w.expand().map(|(g, inv)| 2 * g + inv as u32).collect()
}

impl Enumerator {
    fn new(pres: &FinitePresentation, subgroup: &[Word], max: usize) -> Self {
        let ncols = 2 * pres.num_generators();
        let mut relators: Vec<Vec<u32>> = pres
            .relators()
            .iter()
            .map(encode)
            .filter(|r| !r.is_empty())
            .collect();
        // Short relators first; ties keep presentation order.
        relators.sort_by_key(|r| r.len());
        let subgroup = subgroup.iter().map(encode).filter(|r| !r.is_empty()).collect();
        let mut e = Enumerator {
            ncols,
            table: vec![UNDEF; 2 * ncols.max(1)],
            forward: vec![0, 1],
            relators,
            subgroup,
            max,
            live: 1,
            queue: Vec::new(),
        };
        e.table.truncate(2 * ncols);
        e
    }

    #[inline]
    fn get(&self, c: u32, col: u32) -> u32 {
        self.table[c as usize * self.ncols + col as usize]
    }

    #[inline]
    fn set(&mut self, c: u32, col: u32, v: u32) {
        self.table[c as usize * self.ncols + col as usize] = v;
    }

    fn defined(&self) -> usize {
        self.forward.len() - 1
    }

    fn is_live(&self, c: u32) -> bool {
        self.forward[c as usize] == c
    }

    fn define(&mut self, c: u32, col: u32) -> std::result::Result<u32, Full> {
        if self.defined() >= self.max {
            return Err(Full);
        }
        let d = self.forward.len() as u32;
        self.forward.push(d);
        self.table.extend(std::iter::repeat_n(UNDEF, self.ncols));
        self.live += 1;
        self.set(c, col, d);
        self.set(d, col ^ 1, c);
        Ok(d)
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut root = c;
        while self.forward[root as usize] != root {
            root = self.forward[root as usize];
        }
        let mut x = c;
        while self.forward[x as usize] != root {
            let next = self.forward[x as usize];
            self.forward[x as usize] = root;
            x = next;
        }
        root
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.rep(a), self.rep(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.forward[hi as usize] = lo;
            self.live -= 1;
            self.queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let dead = self.queue[i];
            i += 1;
            for col in 0..self.ncols as u32 {
                let d = self.get(dead, col);
                if d == UNDEF {
                    continue;
                }
                if self.get(d, col ^ 1) == dead {
                    self.set(d, col ^ 1, UNDEF);
                }
                let mu = self.rep(dead);
                let nu = self.rep(d);
                let mu_img = self.get(mu, col);
                if mu_img != UNDEF {
                    self.merge(nu, mu_img);
                } else {
                    let nu_img = self.get(nu, col ^ 1);
                    if nu_img != UNDEF {
                        self.merge(mu, nu_img);
                    } else {
                        self.set(mu, col, nu);
                        self.set(nu, col ^ 1, mu);
                    }
                }
            }
        }
    }

    /// Scans `w` at coset `c`. With `fill`, gaps are closed by definitions.
    fn scan(&mut self, c: u32, w: &[u32], fill: bool) -> std::result::Result<(), Full> {
        let mut f = c;
        let mut b = c;
        let mut i = 0usize;
        let mut j = w.len();
        loop {
            while i < j {
                let nf = self.get(f, w[i]);
                if nf == UNDEF {
                    break;
                }
                f = nf;
                i += 1;
            }
            if i == j {
                if f != c {
                    self.coincidence(f, c);
                }
                return Ok(());
            }
            while j > i {
                let nb = self.get(b, w[j - 1] ^ 1);
                if nb == UNDEF {
                    break;
                }
                b = nb;
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i + 1 {
                self.set(f, w[i], b);
                self.set(b, w[i] ^ 1, f);
                return Ok(());
            }
            if !fill {
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }

    fn run(&mut self) -> bool {
        let subgroup = std::mem::take(&mut self.subgroup);
        for w in &subgroup {
            loop {
                match self.scan(1, w, true) {
                    Ok(()) => break,
                    Err(Full) => {
                        if !self.make_room(&mut 1) {
                            return false;
                        }
                    }
                }
            }
        }
        let relators = std::mem::take(&mut self.relators);
        let mut alpha: u32 = 1;
        'cosets: while (alpha as usize) <= self.defined() {
            if self.is_live(alpha) {
                for r in &relators {
                    if let Err(Full) = self.scan(alpha, r, true) {
                        self.relators = relators.clone();
                        if !self.make_room(&mut alpha) {
                            return false;
                        }
                        continue 'cosets;
                    }
                    if !self.is_live(alpha) {
                        break;
                    }
                }
                for col in 0..self.ncols as u32 {
                    if !self.is_live(alpha) {
                        break;
                    }
                    if self.get(alpha, col) == UNDEF && self.define(alpha, col).is_err() {
                        self.relators = relators.clone();
                        if !self.make_room(&mut alpha) {
                            return false;
                        }
                        continue 'cosets;
                    }
                }
            }
            alpha += 1;
        }
        self.relators = relators;
        true
    }

    /// Lookahead followed by compression. `alpha` is renumbered in place.
    fn make_room(&mut self, alpha: &mut u32) -> bool {
        let relators = std::mem::take(&mut self.relators);
        let mut c = 1u32;
        while (c as usize) <= self.defined() {
            if self.is_live(c) {
                for r in &relators {
                    let _ = self.scan(c, r, false);
                    if !self.is_live(c) {
                        break;
                    }
                }
            }
            c += 1;
        }
        self.relators = relators;
        let before = self.defined();
        *alpha = self.compress(*alpha);
        self.defined() < before
    }

    /// Renumbers live cosets consecutively; returns the new number of the
    /// first live coset at or after `alpha`.
    fn compress(&mut self, alpha: u32) -> u32 {
        let n = self.defined();
        let mut map = vec![0u32; n + 1];
        let mut next = 0u32;
        let mut new_alpha = None;
        for c in 1..=n as u32 {
            if self.is_live(c) {
                next += 1;
                map[c as usize] = next;
            }
            if c >= alpha && new_alpha.is_none() && self.is_live(c) {
                new_alpha = Some(next);
            }
        }
        let cols = self.ncols;
        let mut table = vec![UNDEF; (next as usize + 1) * cols];
        for c in 1..=n {
            let m = map[c] as usize;
            if m == 0 {
                continue;
            }
            for col in 0..cols {
                let v = self.table[c * cols + col];
                table[m * cols + col] = if v == UNDEF { UNDEF } else { map[v as usize] };
            }
        }
        self.table = table;
        self.forward = (0..=next).collect();
        new_alpha.unwrap_or(next + 1)
    }

    /// Renumbers cosets in breadth-first order from the subgroup coset.
    fn standardize(&mut self) {
        let n = self.defined();
        let cols = self.ncols;
        let mut map = vec![0u32; n + 1];
        let mut order = Vec::with_capacity(n);
        map[1] = 1;
        order.push(1u32);
        let mut i = 0;
        while i < order.len() {
            let c = order[i];
            i += 1;
            for col in 0..cols as u32 {
                let d = self.get(c, col);
                if d != UNDEF && map[d as usize] == 0 {
                    map[d as usize] = order.len() as u32 + 1;
                    order.push(d);
                }
            }
        }
        let mut table = vec![UNDEF; (n + 1) * cols];
        for &c in &order {
            let m = map[c as usize] as usize;
            for col in 0..cols {
                let v = self.table[c as usize * cols + col];
                table[m * cols + col] = if v == UNDEF { UNDEF } else { map[v as usize] };
            }
        }
        self.table = table;
    }

    fn into_table(mut self, complete: bool) -> CosetTable {
        self.compress(1);
        let ngens = self.ncols / 2;
        if complete {
            self.standardize();
        }
        let live = self.defined();
        let rows = self.table[self.ncols..].to_vec();
        CosetTable {
            ngens,
            rows,
            live,
            status: if complete {
                TableStatus::Complete
            } else {
                TableStatus::Exceeded
            },
        }
    }
}

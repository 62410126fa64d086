//! HLT coset enumeration with coincidence processing and lookahead.

use super::{GroupError, Presentation, Word};
use std::collections::VecDeque;

const NONE: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationLimits {
    /// Most cosets alive at any time.
    pub max_cosets: usize,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits { max_cosets: 2_000_000 }
    }
}

/// A complete coset table. Coset 0 is the subgroup itself; column `2i` is
/// the action of generator `i` and column `2i + 1` that of its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    pub(crate) generators: usize,
    pub(crate) rows: Vec<u32>,
    pub(crate) subgroup: Vec<Word>,
}

impl CosetTable {
    pub fn index(&self) -> usize {
        self.rows.len() / self.columns()
    }

    pub fn generator_count(&self) -> usize {
        self.generators
    }

    pub fn subgroup_words(&self) -> &[Word] {
        &self.subgroup
    }

    fn columns(&self) -> usize {
        2 * self.generators
    }

    /// Image of coset `c` under the letter `l` (`±(i+1)`).
    pub fn act(&self, c: u32, l: i32) -> u32 {
        self.rows[c as usize * self.columns() + column(l)]
    }

    pub fn act_word(&self, mut c: u32, w: &[i32]) -> u32 {
        for &l in w {
            c = self.act(c, l);
        }
        c
    }

    /// Whether the subgroup is trivial, so cosets are group elements.
    pub fn is_regular(&self) -> bool {
        self.subgroup.iter().all(|w| w.is_empty())
    }
}

fn column(l: i32) -> usize {
    debug_assert!(l != 0);
    2 * (l.unsigned_abs() as usize - 1) + usize::from(l < 0)
}

struct Enumerator {
    cols: usize,
    rel_cols: Vec<Vec<usize>>,
    table: Vec<u32>,
    parent: Vec<u32>,
    /// Live cosets in order of definition, with dead ones skipped lazily.
    order: Vec<u32>,
    live: usize,
    queue: VecDeque<u32>,
    max: usize,
}

impl Enumerator {
    fn entry(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.cols + x]
    }

    fn set(&mut self, c: u32, x: usize, d: u32) {
        self.table[c as usize * self.cols + x] = d;
    }

    fn alive(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn new_coset(&mut self) -> Option<u32> {
        if self.live >= self.max {
            return None;
        }
        let d = self.parent.len() as u32;
        self.parent.push(d);
        self.table.extend(std::iter::repeat_n(NONE, self.cols));
        self.order.push(d);
        self.live += 1;
        Some(d)
    }

    fn define(&mut self, c: u32, x: usize) -> bool {
        match self.new_coset() {
            Some(d) => {
                self.set(c, x, d);
                self.set(d, x ^ 1, c);
                true
            }
            None => false,
        }
    }

    fn rep(&mut self, mut c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        while self.parent[c as usize] != r {
            let next = self.parent[c as usize];
            self.parent[c as usize] = r;
            c = next;
        }
        r
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            self.parent[hi as usize] = lo;
            self.live -= 1;
            self.queue.push_back(hi);
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.merge(a, b);
        while let Some(e) = self.queue.pop_front() {
            for x in 0..self.cols {
                let f = self.entry(e, x);
                if f == NONE {
                    continue;
                }
                if self.entry(f, x ^ 1) == e {
                    self.set(f, x ^ 1, NONE);
                }
                let (e1, f1) = (self.rep(e), self.rep(f));
                let g = self.entry(e1, x);
                if g != NONE {
                    self.merge(f1, g);
                } else {
                    let h = self.entry(f1, x ^ 1);
                    if h != NONE {
                        self.merge(e1, h);
                    } else {
                        self.set(e1, x, f1);
                        self.set(f1, x ^ 1, e1);
                    }
                }
            }
        }
    }

    /// Scans `w` at coset `c`, defining new cosets if `fill`. Returns false
    /// if a definition was needed but the coset limit was reached.
    fn scan(&mut self, c: u32, w: &[usize], fill: bool) -> bool {
        if w.is_empty() {
            return true;
        }
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, w.len() as isize - 1);
        loop {
            while (i as isize) <= j && self.entry(f, w[i]) != NONE {
                f = self.entry(f, w[i]);
                i += 1;
            }
            if (i as isize) > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return true;
            }
            while j >= i as isize && self.entry(b, w[j as usize] ^ 1) != NONE {
                b = self.entry(b, w[j as usize] ^ 1);
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return true;
            }
            if j == i as isize {
                self.set(f, w[i], b);
                self.set(b, w[i] ^ 1, f);
                return true;
            }
            if !fill || !self.define(f, w[i]) {
                return !fill;
            }
        }
    }

    /// Scans every live coset under every relator without defining cosets.
    fn lookahead(&mut self) {
        let mut k = 0;
        while k < self.order.len() {
            let c = self.order[k];
            for r in 0..self.rel_cols.len() {
                if !self.alive(c) {
                    break;
                }
                let w = std::mem::take(&mut self.rel_cols[r]);
                self.scan(c, &w, false);
                self.rel_cols[r] = w;
            }
            k += 1;
        }
        self.order.retain(|&c| self.parent[c as usize] == c);
    }
}

/// Enumerates the cosets of the subgroup generated by `subgroup` in the
/// group presented by `p`.
pub fn coset_enumeration(
    p: &Presentation,
    subgroup: &[Word],
    limits: &EnumerationLimits,
) -> Result<CosetTable, GroupError> {
    for w in subgroup {
        p.check_word(w)?;
    }
    let cols = 2 * p.generator_count();
    let to_cols = |w: &Word| w.iter().map(|&l| column(l)).collect::<Vec<_>>();
    let mut e = Enumerator {
        cols,
        rel_cols: p.relators().iter().map(to_cols).collect(),
        table: Vec::new(),
        parent: Vec::new(),
        order: Vec::new(),
        live: 0,
        queue: VecDeque::new(),
        max: limits.max_cosets.max(1),
    };
    e.new_coset();
    let sub_cols: Vec<Vec<usize>> = subgroup.iter().map(to_cols).collect();
    let mut pending_sub = true;
    let mut k = 0;
    loop {
        if pending_sub {
            let mut ok = true;
            for w in &sub_cols {
                ok &= e.scan(0, w, true);
            }
            if ok {
                pending_sub = false;
            } else {
                e.lookahead();
                if e.live >= e.max {
                    return Err(GroupError::CosetLimit(limits.max_cosets));
                }
                continue;
            }
        }
        let Some(&c) = e.order.get(k) else { break };
        if !e.alive(c) {
            k += 1;
            continue;
        }
        let mut ok = true;
        for r in 0..e.rel_cols.len() {
            if !e.alive(c) {
                break;
            }
            let w = std::mem::take(&mut e.rel_cols[r]);
            ok = e.scan(c, &w, true);
            e.rel_cols[r] = w;
            if !ok {
                break;
            }
        }
        if ok {
            for x in 0..cols {
                if !e.alive(c) {
                    break;
                }
                if e.entry(c, x) == NONE && !e.define(c, x) {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            k += 1;
        } else {
            let before = e.order.len();
            let pos_c = c;
            e.lookahead();
            if e.live >= e.max {
                return Err(GroupError::CosetLimit(limits.max_cosets));
            }
            // Resume at the first live coset at or after the interrupted one.
            k = e.order.iter().position(|&d| d >= pos_c).unwrap_or(e.order.len());
            debug_assert!(e.order.len() <= before);
        }
    }
    Ok(compact(&mut e, p.generator_count(), subgroup))
}

/// Renumbers live cosets in breadth-first order from coset 0 so the result
/// does not depend on the enumeration history.
fn compact(e: &mut Enumerator, generators: usize, subgroup: &[Word]) -> CosetTable {
    let cols = e.cols;
    let mut map = vec![NONE; e.parent.len()];
    let mut order = vec![0u32];
    map[0] = 0;
    let mut k = 0;
    while k < order.len() {
        let c = order[k];
        for x in 0..cols {
            let d = e.rep(e.entry(c, x));
            if map[d as usize] == NONE {
                map[d as usize] = order.len() as u32;
                order.push(d);
            }
        }
        k += 1;
    }
    let mut rows = Vec::with_capacity(order.len() * cols);
    for &c in &order {
        for x in 0..cols {
            let d = e.rep(e.entry(c, x));
            rows.push(map[d as usize]);
        }
    }
    CosetTable {
        generators,
        rows,
        subgroup: subgroup.to_vec(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::braid_quotient_presentation;

    #[test]
    fn small_quotients() {
        let lim = EnumerationLimits::default();
        let c2 = coset_enumeration(&braid_quotient_presentation(2), &[], &lim).unwrap();
        assert_eq!(c2.index(), 3);
        let c3 = coset_enumeration(&braid_quotient_presentation(3), &[], &lim).unwrap();
        assert_eq!(c3.index(), 24);
        let p = braid_quotient_presentation(3);
        for r in p.relators() {
            for c in 0..24 {
                assert_eq!(c3.act_word(c, r), c);
            }
        }
        let sub = coset_enumeration(&p, &[vec![1]], &lim).unwrap();
        assert_eq!(sub.index(), 8);
        assert_eq!(sub.act(0, 1), 0);
    }

    #[test]
    fn limit_is_reported() {
        let lim = EnumerationLimits { max_cosets: 10 };
        assert_eq!(
            coset_enumeration(&braid_quotient_presentation(3), &[], &lim),
            Err(GroupError::CosetLimit(10))
        );
    }

    #[test]
    fn free_product_diverges() {
        // Z3 * Z3 is infinite.
        let p = Presentation::new(2, vec![vec![1, 1, 1], vec![2, 2, 2]]).unwrap();
        assert!(coset_enumeration(&p, &[], &EnumerationLimits { max_cosets: 5000 }).is_err());
    }
}

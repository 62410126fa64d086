//! The relatively free group `B(r,3)` of exponent 3 in collected normal form.
//!
//! An element is `a^e · ∏ b_ij^f · ∏ c_ijk^g` with `b_ij = [a_i,a_j]` for
//! `i < j` and `c_ijk = [[a_i,a_j],a_k]` for `i < j < k`, exponents in GF(3).
//! The group has class 3: elements of the second layer commute and the third
//! layer is central. Triple commutators are alternating in their three
//! entries and vanish when an entry repeats.

use super::BurnsideError;

/// Exponent vectors of one element, entries in `0..3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentThreeElement {
    pub deg1: Vec<u8>,
    pub deg2: Vec<u8>,
    pub deg3: Vec<u8>,
}

pub(crate) fn pairs(r: usize) -> usize {
    r * r.saturating_sub(1) / 2
}

pub(crate) fn triples(r: usize) -> usize {
    r * r.saturating_sub(1) * r.saturating_sub(2) / 6
}

impl ExponentThreeElement {
    pub fn identity(r: usize) -> Self {
        ExponentThreeElement {
            deg1: vec![0; r],
            deg2: vec![0; pairs(r)],
            deg3: vec![0; triples(r)],
        }
    }

    pub fn rank(&self) -> usize {
        self.deg1.len()
    }

    pub fn is_identity(&self) -> bool {
        self.deg1.iter().chain(&self.deg2).chain(&self.deg3).all(|&x| x == 0)
    }

    /// True if the element lies in the commutator subgroup.
    pub fn in_gamma2(&self) -> bool {
        self.deg1.iter().all(|&x| x == 0)
    }
}

/// Index tables for one rank.
#[derive(Clone, Debug)]
pub struct Layout {
    r: usize,
    pair: Vec<usize>,
    triple: Vec<usize>,
}

impl Layout {
    pub fn new(r: usize) -> Self {
        let mut pair = vec![usize::MAX; r * r];
        let mut k = 0;
        for i in 0..r {
            for j in i + 1..r {
                pair[i * r + j] = k;
                k += 1;
            }
        }
        let mut triple = vec![usize::MAX; r * r * r];
        let mut k = 0;
        for i in 0..r {
            for j in i + 1..r {
                for l in j + 1..r {
                    triple[(i * r + j) * r + l] = k;
                    k += 1;
                }
            }
        }
        Layout { r, pair, triple }
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn pair_index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j);
        self.pair[i * self.r + j]
    }

    pub fn triple_index(&self, i: usize, j: usize, k: usize) -> usize {
        debug_assert!(i < j && j < k);
        self.triple[(i * self.r + j) * self.r + k]
    }

    /// `[[a_i,a_j],a_k]` as `(basis index, coefficient)`, `None` if trivial.
    pub fn triple_commutator(&self, i: usize, j: usize, k: usize) -> Option<(usize, u8)> {
        if i == j || j == k || i == k {
            return None;
        }
        let mut v = [i, j, k];
        let mut sign = 1u8;
        for a in 0..3 {
            for b in 0..2 - a {
                if v[b] > v[b + 1] {
                    v.swap(b, b + 1);
                    sign = 3 - sign;
                }
            }
        }
        Some((self.triple_index(v[0], v[1], v[2]), sign))
    }

    /// The `pairs(r)` pairs `(i, j)` in basis order.
    pub fn pair_list(&self) -> Vec<(usize, usize)> {
        (0..self.r).flat_map(|i| (i + 1..self.r).map(move |j| (i, j))).collect()
    }

    pub fn generator(&self, i: usize) -> ExponentThreeElement {
        let mut x = ExponentThreeElement::identity(self.r);
        x.deg1[i] = 1;
        x
    }

    /// `x · a_k`.
    pub fn mul_generator(&self, x: &mut ExponentThreeElement, k: usize) {
        let r = self.r;
        // Move a_k left past the second layer: b^(a_k) = b·[b,a_k].
        for (i, j) in self.pair_list() {
            let f = x.deg2[self.pair_index(i, j)];
            if f != 0 {
                if let Some((t, s)) = self.triple_commutator(i, j, k) {
                    add(&mut x.deg3[t], f * s);
                }
            }
        }
        // Move a_k left past a_j^(e_j), j > k: [a_j^e, a_k] = b_kj^(-e), and the
        // cross terms [b_kj^(-e_j), a_j'^(e_j')] for k < j < j'.
        for j in k + 1..r {
            let ej = x.deg1[j];
            if ej == 0 {
                continue;
            }
            add(&mut x.deg2[self.pair_index(k, j)], 3 - ej);
            for jj in j + 1..r {
                let ejj = x.deg1[jj];
                if ejj != 0 {
                    add(&mut x.deg3[self.triple_index(k, j, jj)], (3 - ej) * ejj);
                }
            }
        }
        add(&mut x.deg1[k], 1);
    }

    pub fn multiply(&self, x: &ExponentThreeElement, y: &ExponentThreeElement) -> ExponentThreeElement {
        let mut z = x.clone();
        for (k, &e) in y.deg1.iter().enumerate() {
            for _ in 0..e {
                self.mul_generator(&mut z, k);
            }
        }
        for (a, &b) in z.deg2.iter_mut().zip(&y.deg2) {
            add(a, b);
        }
        for (a, &b) in z.deg3.iter_mut().zip(&y.deg3) {
            add(a, b);
        }
        z
    }

    /// `x⁻¹ = x²`.
    pub fn inverse(&self, x: &ExponentThreeElement) -> ExponentThreeElement {
        self.multiply(x, x)
    }

    /// `[x,y] = x⁻¹ y⁻¹ x y`.
    pub fn commutator(&self, x: &ExponentThreeElement, y: &ExponentThreeElement) -> ExponentThreeElement {
        let a = self.multiply(&self.inverse(x), &self.inverse(y));
        self.multiply(&self.multiply(&a, x), y)
    }

    /// Evaluates a word with letters `±(i+1)`.
    pub fn evaluate(&self, w: &[i32]) -> ExponentThreeElement {
        let mut x = ExponentThreeElement::identity(self.r);
        for &l in w {
            let k = l.unsigned_abs() as usize - 1;
            let times = if l > 0 { 1 } else { 2 };
            for _ in 0..times {
                self.mul_generator(&mut x, k);
            }
        }
        x
    }

    /// A word spelling the normal form, commutators written out.
    pub fn word(&self, x: &ExponentThreeElement) -> Vec<i32> {
        let g = |i: usize| i as i32 + 1;
        let comm = |u: &[i32], v: &[i32]| -> Vec<i32> {
            let inv = |w: &[i32]| w.iter().rev().map(|l| -l).collect::<Vec<_>>();
            [inv(u), inv(v), u.to_vec(), v.to_vec()].concat()
        };
        let mut w = Vec::new();
        for (i, &e) in x.deg1.iter().enumerate() {
            w.extend(std::iter::repeat_n(g(i), e as usize));
        }
        for (p, (i, j)) in self.pair_list().into_iter().enumerate() {
            for _ in 0..x.deg2[p] {
                w.extend(comm(&[g(i)], &[g(j)]));
            }
        }
        let r = self.r;
        for i in 0..r {
            for j in i + 1..r {
                for k in j + 1..r {
                    for _ in 0..x.deg3[self.triple_index(i, j, k)] {
                        w.extend(comm(&comm(&[g(i)], &[g(j)]), &[g(k)]));
                    }
                }
            }
        }
        w
    }
}

fn add(a: &mut u8, b: u8) {
    *a = (*a + b) % 3;
}

/// Product in `B(r,3)`.
pub fn e3_multiply(
    x: &ExponentThreeElement,
    y: &ExponentThreeElement,
) -> Result<ExponentThreeElement, BurnsideError> {
    if x.rank() != y.rank() || x.deg2.len() != pairs(x.rank()) || y.deg3.len() != triples(y.rank()) {
        return Err(BurnsideError::RankMismatch(x.rank(), y.rank()));
    }
    Ok(Layout::new(x.rank()).multiply(x, y))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutators_are_basis_elements() {
        let l = Layout::new(4);
        let b = l.commutator(&l.generator(0), &l.generator(2));
        assert_eq!(b.deg2[l.pair_index(0, 2)], 1);
        assert_eq!(b.deg2.iter().map(|&x| x as u32).sum::<u32>(), 1);
        assert!(b.deg3.iter().all(|&x| x == 0));
        let c = l.commutator(&b, &l.generator(3));
        assert!(c.in_gamma2() && c.deg2.iter().all(|&x| x == 0));
        assert_eq!(c.deg3[l.triple_index(0, 2, 3)], 1);
        // [[a_0,a_2],a_1] = -c_012.
        let c = l.commutator(&b, &l.generator(1));
        assert_eq!(c.deg3[l.triple_index(0, 1, 2)], 2);
    }

    #[test]
    fn word_round_trip() {
        let l = Layout::new(3);
        let x = ExponentThreeElement {
            deg1: vec![2, 0, 1],
            deg2: vec![1, 2, 1],
            deg3: vec![2],
        };
        assert_eq!(l.evaluate(&l.word(&x)), x);
    }

    #[test]
    fn mismatched_ranks() {
        let x = ExponentThreeElement::identity(2);
        let y = ExponentThreeElement::identity(3);
        assert_eq!(e3_multiply(&x, &y), Err(BurnsideError::RankMismatch(2, 3)));
    }
}

//! Normal closures in `B(r,3)`.
//!
//! A normal subgroup `N` is stored as elements whose first-layer vectors are
//! in echelon form (`level1`) together with the subspace `N ∩ γ2` of the
//! abelian group `γ2`, written in coordinates `(deg2, deg3)`. Then
//! `|N| = 3^(|level1| + dim(N ∩ γ2))`.

use super::e3::{ExponentThreeElement, Layout};

/// Echelon basis over GF(3) with pivots normalized to 1.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    rows: Vec<Option<Vec<u8>>>,
    dim: usize,
}

impl EchelonBasis {
    pub fn new(len: usize) -> Self {
        EchelonBasis {
            rows: vec![None; len],
            dim: 0,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().enumerate().filter(|(_, r)| r.is_some()).map(|(i, _)| i)
    }

    /// Reduces `v`; if it is independent, adds it and returns true.
    pub fn insert(&mut self, mut v: Vec<u8>) -> bool {
        for p in 0..v.len() {
            if v[p] == 0 {
                continue;
            }
            match &self.rows[p] {
                Some(row) => {
                    let c = 3 - v[p];
                    for (a, &b) in v[p..].iter_mut().zip(&row[p..]) {
                        *a = (*a + c * b) % 3;
                    }
                }
                None => {
                    // Scale so the pivot is 1 (2 is its own inverse mod 3).
                    if v[p] == 2 {
                        for a in &mut v[p..] {
                            *a = (*a * 2) % 3;
                        }
                    }
                    self.rows[p] = Some(v);
                    self.dim += 1;
                    return true;
                }
            }
        }
        false
    }
}

/// A normal subgroup of `B(r,3)`, graded by layer.
#[derive(Clone, Debug)]
pub struct GradedSubspace {
    pub(crate) layout: Layout,
    /// Elements with echelonized first layers, `level1[i]` having pivot `pivot1[i]`.
    pub(crate) level1: Vec<ExponentThreeElement>,
    pub(crate) pivot1: Vec<usize>,
    /// `N ∩ γ2` in coordinates `deg2 ++ deg3`.
    pub(crate) gamma2: EchelonBasis,
}

impl GradedSubspace {
    /// Dimensions of the three layers of `N`: the first-layer image, and
    /// the pivots of `N ∩ γ2` falling in the second and third layers.
    pub fn layer_dims(&self) -> [usize; 3] {
        let p2 = self.layout_pairs();
        let d2 = self.gamma2.pivots().filter(|&p| p < p2).count();
        [self.level1.len(), d2, self.gamma2.dim() - d2]
    }

    pub fn dimension(&self) -> usize {
        self.level1.len() + self.gamma2.dim()
    }

    fn layout_pairs(&self) -> usize {
        let r = self.layout.rank();
        r * r.saturating_sub(1) / 2
    }
}

fn flat(x: &ExponentThreeElement) -> Vec<u8> {
    [x.deg2.as_slice(), x.deg3.as_slice()].concat()
}

/// `T_i`: the linear map `w ↦ [w, a_i]` on `γ2`, depending only on `deg2`.
fn bracket_with_generator(layout: &Layout, v: &[u8], i: usize) -> Vec<u8> {
    let p2 = layout.pair_list().len();
    let mut out = vec![0u8; v.len()];
    for (p, (a, b)) in layout.pair_list().into_iter().enumerate() {
        if v[p] != 0 {
            if let Some((t, s)) = layout.triple_commutator(a, b, i) {
                out[p2 + t] = (out[p2 + t] + v[p] * s) % 3;
            }
        }
    }
    out
}

/// Smallest normal subgroup containing the relators.
pub fn normal_closure(r: usize, relators: &[ExponentThreeElement]) -> GradedSubspace {
    let layout = Layout::new(r);
    let len = layout.pair_list().len() + super::e3::triples(r);
    let mut n = GradedSubspace {
        layout,
        level1: Vec::new(),
        pivot1: Vec::new(),
        gamma2: EchelonBasis::new(len),
    };
    let mut pending_g2: Vec<Vec<u8>> = Vec::new();
    for rho in relators {
        sift(&mut n, rho.clone(), &mut pending_g2);
    }
    while let Some(v) = pending_g2.pop() {
        let has_deg2 = v[..n.layout_pairs()].iter().any(|&x| x != 0);
        if n.gamma2.insert(v.clone()) && has_deg2 {
            for i in 0..r {
                let t = bracket_with_generator(&n.layout, &v, i);
                if t.iter().any(|&x| x != 0) {
                    pending_g2.push(t);
                }
            }
        }
    }
    n
}

/// Reduces `x` by the first-layer elements; a remainder in `γ2` is queued,
/// otherwise `x` joins `level1` and its commutators are queued.
fn sift(n: &mut GradedSubspace, mut x: ExponentThreeElement, pending: &mut Vec<Vec<u8>>) {
    let l = n.layout.clone();
    for (u, &p) in n.level1.iter().zip(&n.pivot1) {
        let c = x.deg1[p];
        if c != 0 {
            // Multiply by u^(-c) = u^(3-c).
            for _ in 0..3 - c {
                x = l.multiply(&x, u);
            }
        }
    }
    match x.deg1.iter().position(|&e| e != 0) {
        None => pending.push(flat(&x)),
        Some(p) => {
            if x.deg1[p] == 2 {
                x = l.multiply(&x, &x);
            }
            for i in 0..l.rank() {
                pending.push(flat(&l.commutator(&x, &l.generator(i))));
            }
            for u in &n.level1 {
                pending.push(flat(&l.commutator(&x, u)));
            }
            n.level1.push(x);
            n.pivot1.push(p);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_and_full_closures() {
        let n = normal_closure(3, &[]);
        assert_eq!(n.dimension(), 0);
        let l = Layout::new(3);
        let gens: Vec<_> = (0..3).map(|i| l.generator(i)).collect();
        let n = normal_closure(3, &gens);
        assert_eq!(n.layer_dims(), [3, 3, 1]);
    }

    #[test]
    fn one_generator_killed() {
        // B(2,3) / <<a_1>> is cyclic of order 3.
        let l = Layout::new(2);
        let n = normal_closure(2, &[l.generator(0)]);
        assert_eq!(n.dimension(), 2);
    }
}

use super::CosetTable;

/// A permutation of `0..degree`, `images[i]` being the image of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<u32>) -> Self {
        debug_assert!({
            let mut seen = vec![false; images.len()];
            images.iter().all(|&i| !std::mem::replace(&mut seen[i as usize], true))
        });
        Perm { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, i: u32) -> u32 {
        self.images[i as usize]
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u32;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// Nontrivial cycles, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for s in 0..self.images.len() {
            if seen[s] || self.images[s] == s as u32 {
                continue;
            }
            let mut c = Vec::new();
            let mut p = s as u32;
            while !seen[p as usize] {
                seen[p as usize] = true;
                c.push(p);
                p = self.images[p as usize];
            }
            out.push(c);
        }
        out
    }
}

/// Generator images acting on a set of points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationRep {
    pub degree: usize,
    pub generators: Vec<Perm>,
    /// Points are the group elements (from a trivial-subgroup table).
    pub regular: bool,
}

impl PermutationRep {
    pub fn from_table(t: &CosetTable) -> Self {
        PermutationRep {
            degree: t.index(),
            generators: (1..=t.generator_count() as i32)
                .map(|g| Perm::from_images((0..t.index() as u32).map(|c| t.act(c, g)).collect()))
                .collect(),
            regular: t.is_regular(),
        }
    }
}

/// Order of the permuted group: the degree for a regular representation,
/// otherwise by Schreier–Sims.
pub fn group_order(rep: &PermutationRep) -> u128 {
    if rep.regular {
        rep.degree as u128
    } else {
        schreier_sims_order(&rep.generators, rep.degree)
    }
}

struct Level {
    base: u32,
    /// `transversal[p]` maps the base point to `p`.
    transversal: Vec<Option<Perm>>,
    orbit: Vec<u32>,
}

/// Deterministic Schreier–Sims: extends the strong generating set until
/// every Schreier generator sifts to the identity.
pub fn schreier_sims_order(gens: &[Perm], degree: usize) -> u128 {
    let mut strong: Vec<Perm> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
    let mut bases: Vec<u32> = Vec::new();
    if let Some(g) = strong.first() {
        bases.push(first_moved(g));
    }
    loop {
        let levels = build_levels(&strong, &bases, degree);
        match find_residue(&strong, &levels, degree) {
            None => return levels.iter().map(|l| l.orbit.len() as u128).product(),
            Some(h) => {
                if bases.iter().all(|&b| h.apply(b) == b) {
                    bases.push(first_moved(&h));
                }
                strong.push(h);
            }
        }
    }
}

fn first_moved(g: &Perm) -> u32 {
    (0..g.degree() as u32).find(|&i| g.apply(i) != i).expect("nontrivial permutation")
}

fn build_levels(strong: &[Perm], bases: &[u32], degree: usize) -> Vec<Level> {
    bases
        .iter()
        .enumerate()
        .map(|(k, &b)| {
            let gens: Vec<&Perm> = strong
                .iter()
                .filter(|s| bases[..k].iter().all(|&c| s.apply(c) == c))
                .collect();
            let mut transversal = vec![None; degree];
            transversal[b as usize] = Some(Perm::identity(degree));
            let mut orbit = vec![b];
            let mut i = 0;
            while i < orbit.len() {
                let p = orbit[i];
                let u = transversal[p as usize].clone().unwrap();
                for g in &gens {
                    let q = g.apply(p);
                    if transversal[q as usize].is_none() {
                        transversal[q as usize] = Some(u.then(g));
                        orbit.push(q);
                    }
                }
                i += 1;
            }
            Level {
                base: b,
                transversal,
                orbit,
            }
        })
        .collect()
}

fn sift(mut h: Perm, levels: &[Level]) -> Perm {
    for l in levels {
        let p = h.apply(l.base);
        match &l.transversal[p as usize] {
            Some(u) => h = h.then(&u.inverse()),
            None => return h,
        }
    }
    h
}

fn find_residue(strong: &[Perm], levels: &[Level], _degree: usize) -> Option<Perm> {
    for (k, l) in levels.iter().enumerate() {
        let bases: Vec<u32> = levels[..k].iter().map(|l| l.base).collect();
        for g in strong.iter().filter(|s| bases.iter().all(|&c| s.apply(c) == c)) {
            for &p in &l.orbit {
                let u = l.transversal[p as usize].as_ref().unwrap();
                let v = l.transversal[g.apply(p) as usize].as_ref().unwrap();
                let s = u.then(g).then(&v.inverse());
                let h = sift(s, &levels[k + 1..]);
                if !h.is_identity() {
                    return Some(h);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize, c: &[u32]) -> Perm {
        let mut im: Vec<u32> = (0..n as u32).collect();
        for k in 0..c.len() {
            im[c[k] as usize] = c[(k + 1) % c.len()];
        }
        Perm::from_images(im)
    }

    #[test]
    fn symmetric_and_alternating() {
        let s5 = [cycle(5, &[0, 1]), cycle(5, &[0, 1, 2, 3, 4])];
        assert_eq!(schreier_sims_order(&s5, 5), 120);
        let a5 = [cycle(5, &[0, 1, 2]), cycle(5, &[0, 1, 2, 3, 4])];
        assert_eq!(schreier_sims_order(&a5, 5), 60);
        assert_eq!(schreier_sims_order(&[], 4), 1);
        let klein = [
            Perm::from_images(vec![1, 0, 3, 2]),
            Perm::from_images(vec![2, 3, 0, 1]),
        ];
        assert_eq!(schreier_sims_order(&klein, 4), 4);
    }

    #[test]
    fn inverse_and_cycles() {
        let p = cycle(6, &[1, 3, 5]);
        assert!(p.then(&p.inverse()).is_identity());
        assert_eq!(p.cycles(), vec![vec![1, 3, 5]]);
    }
}

//! Finitely presented groups, coset enumeration, permutation groups and
//! the braid quotients `C_n = B_n / (σ1³)`.
//!
//! Words are sequences of letters `±(i+1)` for generator `i`, the same
//! letters as braid words.

mod cache;
mod classes;
mod perm;
mod todd_coxeter;

pub use cache::{cache_dir, load_table, save_table, CACHE_ENV};
pub use classes::{are_conjugate, conjugacy_classes, ConjugacyClasses};
pub use perm::{group_order, schreier_sims_order, Perm, PermutationRep};
pub use todd_coxeter::{coset_enumeration, CosetTable, EnumerationLimits};

use std::path::Path;
use thiserror::Error;

pub type Word = Vec<i32>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("letter {letter} needs a generator index in 1..={generators}")]
    BadLetter { letter: i32, generators: usize },
    #[error("coset limit of {0} reached before the table closed")]
    CosetLimit(usize),
    #[error("operation needs the regular representation")]
    NotRegular,
    #[error("cache file: {0}")]
    Cache(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: usize,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generators: usize, relators: Vec<Word>) -> Result<Self, GroupError> {
        let p = Presentation { generators, relators };
        for r in &p.relators {
            p.check_word(r)?;
        }
        Ok(p)
    }

    pub fn generator_count(&self) -> usize {
        self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn check_word(&self, w: &[i32]) -> Result<(), GroupError> {
        match w.iter().find(|&&l| l == 0 || l.unsigned_abs() as usize > self.generators) {
            Some(&letter) => Err(GroupError::BadLetter {
                letter,
                generators: self.generators,
            }),
            None => Ok(()),
        }
    }
}

/// `B_n / (σ1³)` on generators σ1..σ_{n-1}: far commutations, braid
/// relations and the cube of σ1.
pub fn braid_quotient_presentation(n: usize) -> Presentation {
    assert!(n >= 2, "braid index must be at least 2");
    let g = n as i32 - 1;
    let mut rel = Vec::new();
    for i in 1..=g {
        for j in i + 2..=g {
            rel.push(vec![i, j, -i, -j]);
        }
    }
    for i in 1..g {
        rel.push(vec![i, i + 1, i, -(i + 1), -i, -(i + 1)]);
    }
    rel.push(vec![1, 1, 1]);
    Presentation::new(n - 1, rel).expect("letters in range")
}

/// Regular coset table of `C_n`, read from `cache` if present and written
/// there after a fresh enumeration.
pub fn braid_quotient_table(
    n: usize,
    limits: &EnumerationLimits,
    cache: Option<&Path>,
) -> Result<CosetTable, GroupError> {
    let p = braid_quotient_presentation(n);
    if let Some(path) = cache {
        if path.exists() {
            let t = load_table(path)?;
            if t.generator_count() == p.generator_count() && t.is_regular() {
                return Ok(t);
            }
            return Err(GroupError::Cache(format!("{} holds a different table", path.display())));
        }
    }
    let t = coset_enumeration(&p, &[], limits)?;
    if let Some(path) = cache {
        save_table(&t, path)?;
    }
    Ok(t)
}

/// Permutation of the cosets induced by a word.
pub fn word_to_perm(t: &CosetTable, w: &[i32]) -> Perm {
    Perm::from_images((0..t.index() as u32).map(|c| t.act_word(c, w)).collect())
}
